//! Fixed-precision 2-adic arithmetic and abelianization shapes of local
//! fields over `Q_2`.
//!
//! For `m ≡ 1 (mod 2^7)` every element of `1 + 2^7 Z_2` is a 32nd power, so
//! there is a unit `u` with `u^32 = m` and
//!
//! ```text
//! x^32 - m       = (x-u)(x+u)(x^2+u^2)(x^4+u^4)(x^8+u^8)(x^16+u^16)
//! x^32 - 2^16 m  = (x^2-2u^2)(x^2+2u^2)(x^2-2ux+2u^2)(x^2+2ux+2u^2)(x^8+16u^8)(x^16+2^8u^16)
//! ```
//!
//! The maximal abelian extension of exponent `e` of a completion of degree
//! `n` over `Q_2` containing `q` roots of unity of 2-power order has group
//! `C_e^{n+1} × C_min(q,e)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default working precision in bits.
pub const DEFAULT_PRECISION: u32 = 64;

/// A residue modulo `2^K`, `1 ≤ K ≤ 128`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwoAdicInt {
    value: u128,
    precision: u32,
}

fn mask(precision: u32) -> u128 {
    if precision >= 128 {
        u128::MAX
    } else {
        (1u128 << precision) - 1
    }
}

#[allow(clippy::should_implement_trait)]
impl TwoAdicInt {
    pub fn new(value: i128, precision: u32) -> Self {
        assert!((1..=128).contains(&precision), "precision {precision} outside 1..=128");
        TwoAdicInt {
            value: value as u128 & mask(precision),
            precision,
        }
    }

    pub fn from_u128(value: u128, precision: u32) -> Self {
        assert!((1..=128).contains(&precision), "precision {precision} outside 1..=128");
        TwoAdicInt {
            value: value & mask(precision),
            precision,
        }
    }

    pub fn zero(precision: u32) -> Self {
        Self::from_u128(0, precision)
    }

    pub fn one(precision: u32) -> Self {
        Self::from_u128(1, precision)
    }

    /// The residue in `0..2^K`.
    pub fn value(self) -> u128 {
        self.value
    }

    pub fn precision(self) -> u32 {
        self.precision
    }

    pub fn is_unit(self) -> bool {
        self.value & 1 == 1
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check(self, other: Self) {
        assert_eq!(self.precision, other.precision, "precision mismatch");
    }

    pub fn add(self, other: Self) -> Self {
        self.check(other);
        Self::from_u128(self.value.wrapping_add(other.value), self.precision)
    }

    pub fn sub(self, other: Self) -> Self {
        self.check(other);
        Self::from_u128(self.value.wrapping_sub(other.value), self.precision)
    }

    pub fn mul(self, other: Self) -> Self {
        self.check(other);
        Self::from_u128(self.value.wrapping_mul(other.value), self.precision)
    }

    pub fn neg(self) -> Self {
        Self::from_u128(self.value.wrapping_neg(), self.precision)
    }

    pub fn pow(self, mut exp: u32) -> Self {
        let mut base = self;
        let mut acc = Self::one(self.precision);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplies by the integer `k`.
    pub fn scale(self, k: i128) -> Self {
        self.mul(Self::new(k, self.precision))
    }

    /// Square root of `c ≡ 1 (mod 8)` with root `≡ 1 (mod 4)`, lifted one
    /// binary digit at a time: if `x² ≡ c (mod 2^j)` but not modulo
    /// `2^{j+1}`, then `x + 2^{j-1}` fixes digit `j`.
    pub fn sqrt_one_mod_8(self) -> Result<Self> {
        let k = self.precision;
        if k < 3 || self.value & 7 != 1 {
            return Err(Error::precondition(format!(
                "{} is not congruent to 1 mod 8",
                self.value
            )));
        }
        let mut x: u128 = 1;
        for j in 3..k {
            let m = mask(j + 1);
            if x.wrapping_mul(x) & m != self.value & m {
                x = x.wrapping_add(1u128 << (j - 1));
            }
        }
        let root = Self::from_u128(x, k);
        debug_assert_eq!(root.mul(root), self);
        Ok(root)
    }
}

impl fmt::Display for TwoAdicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod 2^{}", self.value, self.precision)
    }
}

fn check_root_input(m: i128, precision: u32) -> Result<()> {
    if !(8..=128).contains(&precision) {
        return Err(Error::precondition(format!("precision {precision} outside 8..=128")));
    }
    if m.rem_euclid(128) != 1 {
        return Err(Error::precondition(format!("m = {m} is not congruent to 1 mod 2^7")));
    }
    Ok(())
}

/// The five successive square roots `s_1 = √m, s_2 = √s_1, …, s_5`, each
/// `≡ 1 (mod 4)`. `s_5^32 ≡ m (mod 2^K)`.
pub fn square_root_stages(m: i128, precision: u32) -> Result<Vec<TwoAdicInt>> {
    check_root_input(m, precision)?;
    let mut c = TwoAdicInt::new(m, precision);
    let mut stages = Vec::with_capacity(5);
    for _ in 0..5 {
        c = c.sqrt_one_mod_8()?;
        stages.push(c);
    }
    Ok(stages)
}

/// The unit `u ≡ 1 (mod 4)` with `u^32 ≡ m (mod 2^K)`, for `m ≡ 1 (mod 2^7)`.
pub fn hensel_root32(m: i128, precision: u32) -> Result<TwoAdicInt> {
    Ok(*square_root_stages(m, precision)?.last().expect("five stages"))
}

/// A polynomial over `Z/2^K`, coefficients in ascending degree.
#[derive(Clone, Debug)]
pub struct TwoAdicPoly {
    coefficients: Vec<TwoAdicInt>,
    precision: u32,
}

impl TwoAdicPoly {
    pub fn new(coefficients: Vec<TwoAdicInt>, precision: u32) -> Self {
        assert!(coefficients.iter().all(|c| c.precision == precision), "precision mismatch");
        TwoAdicPoly {
            coefficients,
            precision,
        }
    }

    /// From integer coefficients in ascending degree.
    pub fn from_ints(coefficients: &[i128], precision: u32) -> Self {
        Self::new(
            coefficients.iter().map(|&c| TwoAdicInt::new(c, precision)).collect(),
            precision,
        )
    }

    /// `x^n + c`.
    pub fn monic_binomial(n: usize, c: TwoAdicInt) -> Self {
        let p = c.precision;
        let mut coefficients = vec![TwoAdicInt::zero(p); n + 1];
        coefficients[n] = TwoAdicInt::one(p);
        coefficients[0] = coefficients[0].add(c);
        Self::new(coefficients, p)
    }

    /// `x^2 + b·x + c`.
    pub fn monic_quadratic(b: TwoAdicInt, c: TwoAdicInt) -> Self {
        let p = c.precision;
        Self::new(vec![c, b, TwoAdicInt::one(p)], p)
    }

    pub fn coefficients(&self) -> &[TwoAdicInt] {
        &self.coefficients
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// Index of the last nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.iter().rposition(|c| !c.is_zero())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.precision, other.precision, "precision mismatch");
        let p = self.precision;
        if self.coefficients.is_empty() || other.coefficients.is_empty() {
            return Self::new(Vec::new(), p);
        }
        let mut out = vec![TwoAdicInt::zero(p); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] = out[i + j].add(a.mul(*b));
            }
        }
        Self::new(out, p)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.precision, other.precision, "precision mismatch");
        let p = self.precision;
        let len = self.coefficients.len().max(other.coefficients.len());
        let get = |v: &[TwoAdicInt], i: usize| v.get(i).copied().unwrap_or(TwoAdicInt::zero(p));
        Self::new(
            (0..len)
                .map(|i| get(&self.coefficients, i).add(get(&other.coefficients, i)))
                .collect(),
            p,
        )
    }

    /// Product of all factors; the constant 1 for an empty list.
    pub fn product(factors: &[TwoAdicPoly], precision: u32) -> Self {
        factors
            .iter()
            .fold(Self::from_ints(&[1], precision), |acc, f| acc.mul(f))
    }
}

impl PartialEq for TwoAdicPoly {
    /// Coefficientwise comparison ignoring trailing zeros.
    fn eq(&self, other: &Self) -> bool {
        if self.precision != other.precision {
            return false;
        }
        let trim = |p: &Self| p.degree().map_or(&p.coefficients[..0], |d| &p.coefficients[..=d]).to_vec();
        trim(self) == trim(other)
    }
}

impl Eq for TwoAdicPoly {}

/// `(x-u)(x+u)(x^2+u^2)(x^4+u^4)(x^8+u^8)(x^16+u^16)`.
pub fn first_factors(u: TwoAdicInt) -> Vec<TwoAdicPoly> {
    let p = u.precision;
    let mut out = vec![
        TwoAdicPoly::monic_binomial(1, u.neg()),
        TwoAdicPoly::monic_binomial(1, u),
    ];
    for k in [2u32, 4, 8, 16] {
        out.push(TwoAdicPoly::monic_binomial(k as usize, u.pow(k)));
    }
    debug_assert!(out.iter().all(|f| f.precision == p));
    out
}

/// `(x^2-2u^2)(x^2+2u^2)(x^2-2ux+2u^2)(x^2+2ux+2u^2)(x^8+16u^8)(x^16+2^8u^16)`.
pub fn second_factors(u: TwoAdicInt) -> Vec<TwoAdicPoly> {
    let p = u.precision;
    let two_u2 = u.pow(2).scale(2);
    let zero = TwoAdicInt::zero(p);
    vec![
        TwoAdicPoly::monic_quadratic(zero, two_u2.neg()),
        TwoAdicPoly::monic_quadratic(zero, two_u2),
        TwoAdicPoly::monic_quadratic(u.scale(-2), two_u2),
        TwoAdicPoly::monic_quadratic(u.scale(2), two_u2),
        TwoAdicPoly::monic_binomial(8, u.pow(8).scale(16)),
        TwoAdicPoly::monic_binomial(16, u.pow(16).scale(256)),
    ]
}

/// `x^32 - c·m`.
pub fn target_polynomial(m: i128, c: i128, precision: u32) -> TwoAdicPoly {
    TwoAdicPoly::monic_binomial(32, TwoAdicInt::new(m, precision).scale(c).neg())
}

/// Whether the factors multiply out to `target` modulo `2^K`.
pub fn verify_product(factors: &[TwoAdicPoly], target: &TwoAdicPoly) -> bool {
    TwoAdicPoly::product(factors, target.precision) == *target
}

/// Both factorization verdicts for one `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationCheck {
    pub m: i128,
    pub precision: u32,
    /// `u mod 2^K`.
    pub root: u128,
    /// `x^32 - m` factors as displayed.
    pub first: bool,
    /// `x^32 - 2^16 m` factors as displayed.
    pub second: bool,
    /// Degrees of the factors of `x^32 - 2^16 m`.
    pub second_degrees: Vec<usize>,
}

pub fn verify_factorizations(m: i128, precision: u32) -> Result<FactorizationCheck> {
    let u = hensel_root32(m, precision)?;
    let second = second_factors(u);
    Ok(FactorizationCheck {
        m,
        precision,
        root: u.value(),
        first: verify_product(&first_factors(u), &target_polynomial(m, 1, precision)),
        second: verify_product(&second, &target_polynomial(m, 1 << 16, precision)),
        second_degrees: second.iter().map(|f| f.degree().unwrap_or(0)).collect(),
    })
}

/// A completion `K_v` of degree `degree` over `Q_2` whose group of 2-power
/// roots of unity has order `roots_of_unity`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalFieldDescriptor {
    pub label: String,
    pub degree: u32,
    pub roots_of_unity: u64,
}

impl LocalFieldDescriptor {
    pub fn new(label: impl Into<String>, degree: u32, roots_of_unity: u64) -> Result<Self> {
        let d = LocalFieldDescriptor {
            label: label.into(),
            degree,
            roots_of_unity,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        if self.degree == 0 {
            return Err(Error::precondition(format!("{}: degree must be at least 1", self.label)));
        }
        if self.roots_of_unity < 2 || !self.roots_of_unity.is_power_of_two() {
            return Err(Error::precondition(format!(
                "{}: roots_of_unity must be a power of 2 that is at least 2",
                self.label
            )));
        }
        Ok(())
    }
}

/// A finite abelian 2-group `C_{a_1} × … × C_{a_k}` with `a_1 ≥ … ≥ a_k ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianPGroupShape {
    pub cyclic_factors: Vec<u64>,
}

impl AbelianPGroupShape {
    /// Sorts the factors and drops trivial ones; every factor must be a power of 2.
    pub fn new(mut factors: Vec<u64>) -> Result<Self> {
        if let Some(bad) = factors.iter().find(|f| !f.is_power_of_two()) {
            return Err(Error::precondition(format!("factor {bad} is not a power of 2")));
        }
        factors.retain(|&f| f > 1);
        factors.sort_unstable_by(|a, b| b.cmp(a));
        Ok(AbelianPGroupShape {
            cyclic_factors: factors,
        })
    }

    /// `C_e^count`.
    pub fn homocyclic(e: u64, count: usize) -> Result<Self> {
        Self::new(vec![e; count])
    }

    pub fn rank(&self) -> usize {
        self.cyclic_factors.len()
    }

    /// `log_2` of the group order.
    pub fn log2_order(&self) -> u32 {
        self.cyclic_factors.iter().map(|f| f.trailing_zeros()).sum()
    }

    /// Number of factors of order at least `d`.
    pub fn count_at_least(&self, d: u64) -> usize {
        self.cyclic_factors.iter().filter(|&&f| f >= d).count()
    }
}

impl fmt::Display for AbelianPGroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cyclic_factors.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.cyclic_factors.len() {
            let e = self.cyclic_factors[i];
            let run = self.cyclic_factors[i..].iter().take_while(|&&x| x == e).count();
            if !first {
                f.write_str(" x ")?;
            }
            first = false;
            if run == 1 {
                write!(f, "C_{e}")?;
            } else {
                write!(f, "C_{e}^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// `C_e^{n+1} × C_min(q,e)`: the Galois group of the maximal abelian
/// extension of exponent `e` of a completion described by `field`.
pub fn abelian_exponent_quotient(field: &LocalFieldDescriptor, e: u64) -> Result<AbelianPGroupShape> {
    field.validate()?;
    if e < 2 || !e.is_power_of_two() {
        return Err(Error::precondition(format!("exponent {e} is not a power of 2 that is at least 2")));
    }
    let mut factors = vec![e; field.degree as usize + 1];
    factors.push(field.roots_of_unity.min(e));
    AbelianPGroupShape::new(factors)
}

/// Whether `target` is a quotient of `ambient`: for every 2-power `d`,
/// `ambient` has at least as many factors of order `≥ d` as `target`.
pub fn is_quotient_shape(target: &AbelianPGroupShape, ambient: &AbelianPGroupShape) -> bool {
    let top = target.cyclic_factors.first().copied().unwrap_or(1);
    std::iter::successors(Some(2u64), |&d| d.checked_mul(2))
        .take_while(|&d| d <= top)
        .all(|d| ambient.count_at_least(d) >= target.count_at_least(d))
}

/// Realizability counts of `A` over the completions of two fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessComparison {
    pub exponent: u64,
    pub target: String,
    pub k_count: usize,
    pub l_count: usize,
    /// Labels of the completions over which `A` is realizable.
    pub k_realizing: Vec<String>,
    pub l_realizing: Vec<String>,
    /// One field has at least two realizing completions and the other at most one.
    pub separated: bool,
    pub verdict: String,
}

pub const VERDICT_NOT_EQUIVALENT: &str = "not equivalent by preadmissibility";
pub const VERDICT_NO_SEPARATION: &str = "no separation";

/// Counts the completions of each field over which `a` is realizable, i.e.
/// is a quotient of the exponent-`e` abelianization.
pub fn preadmissibility_witness_compare(
    k_data: &[LocalFieldDescriptor],
    l_data: &[LocalFieldDescriptor],
    a: &AbelianPGroupShape,
    e: u64,
) -> Result<WitnessComparison> {
    if k_data.is_empty() || l_data.is_empty() {
        return Err(Error::precondition("descriptor lists must be nonempty"));
    }
    let realizing = |data: &[LocalFieldDescriptor]| -> Result<Vec<String>> {
        let mut out = Vec::new();
        for f in data {
            if is_quotient_shape(a, &abelian_exponent_quotient(f, e)?) {
                out.push(f.label.clone());
            }
        }
        Ok(out)
    };
    let k_realizing = realizing(k_data)?;
    let l_realizing = realizing(l_data)?;
    let (k, l) = (k_realizing.len(), l_realizing.len());
    let separated = (k >= 2 && l <= 1) || (k <= 1 && l >= 2);
    Ok(WitnessComparison {
        exponent: e,
        target: a.to_string(),
        k_count: k,
        l_count: l,
        k_realizing,
        l_realizing,
        separated,
        verdict: if separated { VERDICT_NOT_EQUIVALENT } else { VERDICT_NO_SEPARATION }.to_string(),
    })
}

/// Completions at 2 of `K = Q(m^{1/32})`, one per factor of `x^32 - m`
/// over `Q_2`, with `m ≡ 1 (mod 2^7)`.
pub fn completions_of_k() -> Vec<LocalFieldDescriptor> {
    [
        ("Q2(zeta_32): x^16+u^16", 16, 32),
        ("Q2(zeta_16): x^8+u^8", 8, 16),
        ("Q2(zeta_8): x^4+u^4", 4, 8),
        ("Q2(i): x^2+u^2", 2, 4),
        ("Q2: x+u", 1, 2),
        ("Q2: x-u", 1, 2),
    ]
    .into_iter()
    .map(|(l, n, q)| LocalFieldDescriptor::new(l, n, q).expect("valid descriptor"))
    .collect()
}

/// Completions at 2 of `L = Q((2^16 m)^{1/32})`, one per factor of
/// `x^32 - 2^16 m` over `Q_2`.
pub fn completions_of_l() -> Vec<LocalFieldDescriptor> {
    [
        ("x^16+2^8u^16", 16, 2),
        ("x^8+16u^8", 8, 2),
        ("Q2(sqrt 2): x^2-2u^2", 2, 2),
        ("Q2(sqrt -2): x^2+2u^2", 2, 2),
        ("Q2(i): x^2-2ux+2u^2", 2, 4),
        ("Q2(i): x^2+2ux+2u^2", 2, 4),
    ]
    .into_iter()
    .map(|(l, n, q)| LocalFieldDescriptor::new(l, n, q).expect("valid descriptor"))
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_basics() {
        let a = TwoAdicInt::new(-1, 8);
        assert_eq!(a.value(), 255);
        assert_eq!(a.add(TwoAdicInt::one(8)), TwoAdicInt::zero(8));
        assert_eq!(TwoAdicInt::new(3, 4).pow(4).value(), 81 % 16);
        assert!(TwoAdicInt::new(5, 10).is_unit());
        assert!(!TwoAdicInt::new(6, 10).is_unit());
        assert_eq!(TwoAdicInt::new(-1, 128).value(), u128::MAX);
        assert_eq!(TwoAdicInt::new(7, 128).mul(TwoAdicInt::new(-1, 128)), TwoAdicInt::new(-7, 128));
    }

    #[test]
    fn square_roots() {
        let r = TwoAdicInt::new(17, 40).sqrt_one_mod_8().unwrap();
        assert_eq!(r.mul(r), TwoAdicInt::new(17, 40));
        assert_eq!(r.value() % 4, 1);
        assert!(TwoAdicInt::new(5, 40).sqrt_one_mod_8().is_err());
        assert_eq!(TwoAdicInt::new(9, 3).sqrt_one_mod_8().unwrap().value(), 1);
    }

    #[test]
    fn roots() {
        assert_eq!(hensel_root32(1, 64).unwrap().value(), 1);
        for m in [129, 641, 1 + 128 * 11, 1 - 128] {
            for k in [32, 40, 64, 128] {
                let u = hensel_root32(m, k).unwrap();
                assert_eq!(u.pow(32), TwoAdicInt::new(m, k), "m={m} K={k}");
                assert_eq!(u.value() % 4, 1);
            }
        }
        assert!(matches!(hensel_root32(3, 64), Err(Error::Precondition(_))));
        assert!(hensel_root32(65, 64).is_err());
        assert!(hensel_root32(129, 4).is_err());
        let stages = square_root_stages(129, 64).unwrap();
        let mut c = TwoAdicInt::new(129, 64);
        for s in stages {
            assert_eq!(s.mul(s), c);
            c = s;
        }
    }

    #[test]
    fn factorizations() {
        for m in [129, 641, 1 + 128 * 11] {
            let r = verify_factorizations(m, 40).unwrap();
            assert!(r.first && r.second, "{r:?}");
            assert_eq!(r.second_degrees, [2, 2, 2, 2, 8, 16]);
        }
        // both identities only depend on u^32, so -u works as well
        let u = hensel_root32(129, 64).unwrap().neg();
        assert!(verify_product(&first_factors(u), &target_polynomial(129, 1, 64)));
        assert!(verify_product(&second_factors(u), &target_polynomial(129, 1 << 16, 64)));
    }

    #[test]
    fn tampering_is_detected() {
        let u = hensel_root32(129, 40).unwrap();
        let mut f = first_factors(u);
        f[0] = TwoAdicPoly::monic_binomial(1, u.neg().sub(TwoAdicInt::new(2, 40)));
        assert!(!verify_product(&f, &target_polynomial(129, 1, 40)));
    }

    #[test]
    fn constant_terms_2u_do_not_give_the_second_product() {
        let p = 40;
        let u = hensel_root32(129, p).unwrap();
        let two_u = u.scale(2);
        let zero = TwoAdicInt::zero(p);
        let mut f = second_factors(u);
        f[0] = TwoAdicPoly::monic_quadratic(zero, two_u.neg());
        f[1] = TwoAdicPoly::monic_quadratic(zero, two_u);
        f[2] = TwoAdicPoly::monic_quadratic(u.scale(-2), two_u);
        f[3] = TwoAdicPoly::monic_quadratic(u.scale(2), two_u);
        assert!(!verify_product(&f, &target_polynomial(129, 1 << 16, p)));
    }

    #[test]
    fn polynomial_degree() {
        let p = TwoAdicPoly::from_ints(&[1, 2, 0, 0], 16);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p, TwoAdicPoly::from_ints(&[1, 2], 16));
        assert_eq!(TwoAdicPoly::from_ints(&[0, 0], 16).degree(), None);
        assert_eq!(TwoAdicPoly::from_ints(&[65536], 16).degree(), None);
    }

    fn d(n: u32, q: u64) -> LocalFieldDescriptor {
        LocalFieldDescriptor::new(format!("({n},{q})"), n, q).unwrap()
    }

    #[test]
    fn shapes() {
        let cases = [((8, 16), "C_16^10"), ((16, 32), "C_16^18"), ((16, 2), "C_16^17 x C_2"), ((8, 2), "C_16^9 x C_2")];
        for ((n, q), want) in cases {
            let s = abelian_exponent_quotient(&d(n, q), 16).unwrap();
            assert_eq!(s.to_string(), want);
            assert_eq!(s.rank(), n as usize + 2);
        }
        assert!(abelian_exponent_quotient(&d(2, 2), 12).is_err());
        assert!(LocalFieldDescriptor::new("x", 2, 1).is_err());
        assert!(LocalFieldDescriptor::new("x", 0, 2).is_err());
        assert_eq!(AbelianPGroupShape::new(vec![2, 1, 8]).unwrap().cyclic_factors, [8, 2]);
        assert_eq!(AbelianPGroupShape::new(vec![]).unwrap().to_string(), "1");
    }

    #[test]
    fn quotients() {
        let a = AbelianPGroupShape::homocyclic(16, 10).unwrap();
        let big = AbelianPGroupShape::homocyclic(16, 18).unwrap();
        let small = abelian_exponent_quotient(&d(8, 2), 16).unwrap();
        assert!(is_quotient_shape(&a, &big));
        assert!(!is_quotient_shape(&a, &small));
        assert!(is_quotient_shape(&small, &small));
        let c4 = AbelianPGroupShape::new(vec![4]).unwrap();
        let c2c2 = AbelianPGroupShape::new(vec![2, 2]).unwrap();
        assert!(!is_quotient_shape(&c4, &c2c2));
        assert!(!is_quotient_shape(&c2c2, &c4));
    }

    #[test]
    fn witness_counts() {
        let a = AbelianPGroupShape::homocyclic(16, 10).unwrap();
        let r = preadmissibility_witness_compare(&completions_of_k(), &completions_of_l(), &a, 16).unwrap();
        assert_eq!((r.k_count, r.l_count), (2, 1));
        assert!(r.separated);
        assert_eq!(r.verdict, VERDICT_NOT_EQUIVALENT);

        let same = preadmissibility_witness_compare(&completions_of_k(), &completions_of_k(), &a, 16).unwrap();
        assert_eq!(same.k_count, same.l_count);
        assert!(!same.separated);

        let c2 = AbelianPGroupShape::new(vec![2]).unwrap();
        let r = preadmissibility_witness_compare(&completions_of_k(), &completions_of_l(), &c2, 16).unwrap();
        assert_eq!((r.k_count, r.l_count), (6, 6));
        assert!(preadmissibility_witness_compare(&[], &completions_of_l(), &a, 16).is_err());
    }
}
