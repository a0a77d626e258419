use super::{prime_divisors, ElemId, PermGroup, Subgroup};
use crate::error::{Error, Result};

/// `G/N` as an abstract group on cosets with a full multiplication table.
///
/// Coset `0` is `N` itself; cosets are numbered in order of their smallest
/// element.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    reps: Vec<ElemId>,
    coset_of: Vec<u32>,
    table: Vec<u32>,
}

impl QuotientGroup {
    pub fn order(&self) -> usize {
        self.reps.len()
    }

    /// Smallest element of each coset.
    pub fn representatives(&self) -> &[ElemId] {
        &self.reps
    }

    /// Coset containing the group element `e`.
    pub fn coset_of(&self, e: ElemId) -> usize {
        self.coset_of[e as usize] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut t = a;
        while t != 0 {
            t = self.mul(t, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order()).any(|a| self.element_order(a) == self.order())
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, a| {
            let o = self.element_order(a);
            acc / crate::perm::gcd(acc as u128, o as u128) as usize * o
        })
    }

    /// `Some((p, r))` when the quotient is elementary abelian of order `p^r`.
    /// The trivial group reports `None`.
    pub fn elementary_abelian_rank(&self) -> Option<(usize, u32)> {
        let primes = prime_divisors(self.order());
        let [p] = primes[..] else { return None };
        if !self.is_abelian() || self.exponent() != p {
            return None;
        }
        Some((p, self.order().ilog(p)))
    }

    /// Sorted conjugacy class sizes of the quotient.
    pub fn class_sizes(&self) -> Vec<usize> {
        let n = self.order();
        let inv: Vec<usize> = (0..n)
            .map(|a| (0..n).find(|&b| self.mul(a, b) == 0).expect("group"))
            .collect();
        let mut seen = vec![false; n];
        let mut sizes = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let mut size = 0;
            for (x, &xi) in inv.iter().enumerate() {
                let c = self.mul(self.mul(xi, a), x);
                if !seen[c] {
                    seen[c] = true;
                    size += 1;
                }
            }
            sizes.push(size);
        }
        sizes.sort_unstable();
        sizes
    }
}

impl PermGroup {
    /// Quotient by a normal subgroup.
    pub fn quotient(&self, n: &Subgroup<'_>) -> Result<QuotientGroup> {
        if !n.is_normal() {
            return Err(Error::precondition("subgroup is not normal"));
        }
        let mut coset_of = vec![u32::MAX; self.order()];
        let mut reps = Vec::new();
        for x in self.ids() {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let idx = reps.len() as u32;
            reps.push(x);
            for &m in n.members() {
                coset_of[self.mul(x, m) as usize] = idx;
            }
        }
        let k = reps.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                table.push(coset_of[self.mul(a, b) as usize]);
            }
        }
        Ok(QuotientGroup {
            reps,
            coset_of,
            table,
        })
    }
}
