//! Sylow `l`-subgroups of `S_{l^n}` as iterated wreath products
//! `(…(C_l ≀ C_l) ≀ …) ≀ C_l`.
//!
//! The `r`-th generator is the product of `l^{r-1}` disjoint `l`-cycles
//!
//! ```text
//! α_r = (1, l^{r-1}+1, …, (l-1)l^{r-1}+1) ⋯ (l^{r-1}, 2l^{r-1}, …, l^r)
//! ```
//!
//! and `⟨α_1, …, α_n⟩` has order `l^{1+l+…+l^{n-1}}`. The blocks
//! `β_i = ((i-1)l+1, …, il)` form the conjugacy class `T_0` of `α_1`.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::coset::split_count;
use crate::error::{Error, Result};
use crate::group::{is_prime, EnumerationOptions, PermGroup, Subgroup};
use crate::groupfile::GroupSpec;
use crate::perm::{Permutation, Point, MAX_DEGREE};

/// Generators `α_1..α_n` of the Sylow `l`-subgroup of `S_{l^n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathSpec {
    pub l: u32,
    pub n: u32,
    pub alphas: Vec<Permutation>,
}

/// Builds `α_1..α_n` for a prime `l` and level `n ≥ 1`.
pub fn sylow_generators(l: u32, n: u32) -> Result<WreathSpec> {
    if !is_prime(l as u64) {
        return Err(Error::precondition(format!("l = {l} is not prime")));
    }
    if n == 0 {
        return Err(Error::precondition("level n must be at least 1"));
    }
    let degree = (l as usize)
        .checked_pow(n)
        .filter(|&d| d <= MAX_DEGREE)
        .ok_or_else(|| Error::CapExceeded {
            what: format!("degree {l}^{n}"),
            cap: MAX_DEGREE,
        })?;
    let l = l as usize;
    let alphas = (1..=n)
        .map(|r| {
            let step = l.pow(r - 1);
            let mut images: Vec<Point> = (0..degree as Point).collect();
            // 0-based: the cycle through j (j < step) visits j, j+step, …, j+(l-1)step
            for j in 0..step {
                for k in 0..l {
                    images[j + k * step] = (j + ((k + 1) % l) * step) as Point;
                }
            }
            Permutation::from_raw(images)
        })
        .collect();
    Ok(WreathSpec {
        l: l as u32,
        n,
        alphas,
    })
}

impl WreathSpec {
    pub fn degree(&self) -> usize {
        (self.l as usize).pow(self.n)
    }

    /// `(l^n - 1)/(l - 1) = 1 + l + … + l^{n-1}`.
    pub fn order_exponent(&self) -> u64 {
        (0..self.n).map(|k| (self.l as u64).pow(k)).sum()
    }

    /// `l^{1+l+…+l^{n-1}}`.
    pub fn expected_order(&self) -> BigUint {
        BigUint::from(self.l).pow(self.order_exponent() as u32)
    }

    /// Materializes the group, refusing up front when the expected order
    /// exceeds `cap`.
    pub fn group(&self, cap: usize) -> Result<PermGroup> {
        let fits = self.expected_order().to_usize().is_some_and(|o| o <= cap);
        if !fits {
            return Err(Error::CapExceeded {
                what: format!("order {} of the Sylow {}-subgroup of S_{}", self.expected_order(), self.l, self.degree()),
                cap,
            });
        }
        PermGroup::generate_capped(self.degree(), &self.alphas, cap)
    }

    pub fn group_spec(&self) -> GroupSpec {
        GroupSpec::new(self.degree(), self.alphas.clone())
    }

    /// `T_0 = {β_1, …, β_{l^{n-1}}}` with `β_i = ((i-1)l+1, …, il)`.
    pub fn beta_set(&self) -> Vec<Permutation> {
        beta_set(self.l, self.n)
    }
}

/// The `l^{n-1}` consecutive `l`-cycles `β_i = ((i-1)l+1, …, il)` on `l^n` points.
pub fn beta_set(l: u32, n: u32) -> Vec<Permutation> {
    let l = l as usize;
    let degree = l.pow(n);
    (0..degree / l)
        .map(|i| {
            let mut images: Vec<Point> = (0..degree as Point).collect();
            for k in 0..l {
                images[i * l + k] = (i * l + (k + 1) % l) as Point;
            }
            Permutation::from_raw(images)
        })
        .collect()
}

/// Largest order of a metacyclic subgroup, with the first subgroup (in
/// enumeration order) attaining it.
pub fn max_metacyclic_order<'g>(g: &'g PermGroup, opts: EnumerationOptions) -> Result<(usize, Subgroup<'g>)> {
    let subs = g.two_generated_subgroups(opts)?;
    let mut best: Option<Subgroup<'g>> = None;
    // sorted by increasing order, so scan from the top
    for d in subs.into_iter().rev() {
        if best.as_ref().is_some_and(|b| d.order() < b.order()) {
            break;
        }
        if d.is_metacyclic() {
            best = Some(d);
        }
    }
    let best = best.expect("the trivial subgroup is metacyclic");
    Ok((best.order(), best))
}

/// `l^{(l^n−1)/(l−1)}·(1 − 2/l^{n−1}) ≥ l^{2n+1}`, evaluated in exact integer
/// arithmetic after multiplying through by `l^{n−1}`.
pub fn threshold_inequality(l: u32, n: u32) -> bool {
    let lb = BigInt::from(l);
    let exponent: u32 = (0..n).map(|k| l.pow(k)).sum();
    let lhs = lb.pow(exponent) * (lb.pow(n - 1) - 2);
    let rhs = lb.pow(2 * n + 1) * lb.pow(n - 1);
    lhs >= rhs
}

/// Smallest level `n` in `2..=max_n` at which [`threshold_inequality`] holds.
pub fn smallest_threshold_level(l: u32, max_n: u32) -> Option<u32> {
    (2..=max_n).find(|&n| threshold_inequality(l, n))
}

/// Components of the counting bound `|G| > |H|·d + b·|N_G(α)|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesBound {
    pub group_order: usize,
    pub subgroup_order: usize,
    pub max_metacyclic_order: usize,
    pub normalizer_order: usize,
    pub census_bound: usize,
    /// Whether the strict inequality holds.
    pub holds: bool,
    /// When the inequality holds: whether `S(D,H) > 1` was confirmed for
    /// every metacyclic `D`. `None` when no claim is made.
    pub implication_verified: Option<bool>,
}

/// Evaluates the counting bound for `α ∈ G` and `H`, and when it holds
/// confirms `S(D,H) > 1` for every metacyclic subgroup `D`.
///
/// `b` bounds how many conjugates of `α` a metacyclic subgroup can contain:
/// 2 for the `l`-cycles of `T_0`, 4 for transpositions in general.
pub fn series_bound_check(
    g: &PermGroup,
    alpha: &Permutation,
    h: &Subgroup<'_>,
    b: usize,
    opts: EnumerationOptions,
) -> Result<SeriesBound> {
    let a = g.require(alpha)?;
    let normalizer_order = g.normalizer_of_element(a).order();
    let (d, _) = max_metacyclic_order(g, opts)?;
    let holds = g.order() > h.order() * d + b * normalizer_order;
    let implication_verified = if holds {
        let subs = g.two_generated_subgroups(opts)?;
        Some(
            subs.iter()
                .filter(|s| s.is_metacyclic())
                .all(|s| split_count(s, h) > 1),
        )
    } else {
        None
    };
    Ok(SeriesBound {
        group_order: g.order(),
        subgroup_order: h.order(),
        max_metacyclic_order: d,
        normalizer_order,
        census_bound: b,
        holds,
        implication_verified,
    })
}
