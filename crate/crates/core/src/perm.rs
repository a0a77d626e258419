//! Permutations of `{1..n}`, cycle notation and cycle types.
//!
//! A [`Permutation`] is stored as its image list. Products are read left to
//! right: `a.compose(&b)` first applies `a`, then `b`, so
//! `(a·b)(i) = b(a(i))`. Conjugation follows the same convention,
//! `s^x = x⁻¹·s·x`, which relabels the cycles of `s` through `x`.
//!
//! Operands of different degrees are reconciled by embedding the smaller
//! one, fixing every point above its own degree.

use std::fmt;

use crate::error::{Error, Result};

/// Storage type for a single (0-based) point.
pub type Point = u16;

/// Largest degree a [`Permutation`] can have.
pub const MAX_DEGREE: usize = Point::MAX as usize;

/// A bijection of `{1..n}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<Point>,
}

impl Permutation {
    /// The identity of the given degree.
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} too large");
        Permutation {
            images: (0..degree as Point).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i-1] = σ(i)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        if images.len() > MAX_DEGREE {
            return Err(Error::malformed(0, "degree too large"));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for (pos, &img) in images.iter().enumerate() {
            if img == 0 || img > n {
                return Err(Error::malformed(pos, format!("image {img} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(Error::malformed(pos, format!("image {img} repeated")));
            }
            out.push((img - 1) as Point);
        }
        Ok(Permutation { images: out })
    }

    /// Wraps 0-based images that are already known to form a bijection.
    pub(crate) fn from_raw(images: Vec<Point>) -> Self {
        debug_assert!(is_bijection(&images));
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image list.
    pub fn raw_images(&self) -> &[Point] {
        &self.images
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&p| p as usize + 1).collect()
    }

    /// Image of the 1-based point `i`; points above the degree are fixed.
    pub fn apply(&self, i: usize) -> usize {
        match self.images.get(i.wrapping_sub(1)) {
            Some(&p) => p as usize + 1,
            None => i,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// Same permutation viewed in a larger degree.
    pub fn embed(&self, degree: usize) -> Result<Self> {
        if degree < self.degree() {
            if self.images[degree..]
                .iter()
                .enumerate()
                .all(|(k, &p)| p as usize == degree + k)
            {
                return Ok(Permutation {
                    images: self.images[..degree].to_vec(),
                });
            }
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: degree,
            });
        }
        if degree > MAX_DEGREE {
            return Err(Error::malformed(0, "degree too large"));
        }
        let mut images = self.images.clone();
        images.extend(self.degree() as Point..degree as Point);
        Ok(Permutation { images })
    }

    /// Left-to-right product: first `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let n = self.degree().max(other.degree());
        let images = (0..n)
            .map(|i| {
                let a = self.images.get(i).map_or(i, |&p| p as usize);
                other.images.get(a).copied().unwrap_or(a as Point)
            })
            .collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p as usize] = i as Point;
        }
        Permutation { images }
    }

    /// `x⁻¹·self·x`.
    pub fn conjugate(&self, x: &Permutation) -> Permutation {
        x.inverse().compose(self).compose(x)
    }

    /// Integer power; negative exponents use the inverse.
    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        acc
    }

    /// Nontrivial cycles as 1-based points, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles().iter().map(Vec::len).collect())
    }

    /// Smallest `k ≥ 1` with `self^k = id`.
    pub fn order(&self) -> u128 {
        self.cycle_type().order()
    }

    /// Cycle notation, `()` for the identity.
    pub fn format_cycles(&self) -> String {
        self.to_string()
    }

    /// Parses a product of disjoint cycles such as `(1,5)(2,6)` at the given
    /// degree. Separators inside a cycle may be commas or whitespace.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        parse_cycles(text, degree)
    }
}

fn is_bijection(images: &[Point]) -> bool {
    let mut seen = vec![false; images.len()];
    images
        .iter()
        .all(|&p| (p as usize) < seen.len() && !std::mem::replace(&mut seen[p as usize], true))
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}[deg {}]", self.degree())
    }
}

impl std::ops::Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    if degree == 0 || degree > MAX_DEGREE {
        return Err(Error::malformed(0, format!("invalid degree {degree}")));
    }
    let mut images: Vec<Point> = (0..degree as Point).collect();
    let mut used = vec![false; degree];
    let bytes = text.as_bytes();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    loop {
        skip_ws(&mut i);
        if i == bytes.len() {
            break;
        }
        match bytes[i] {
            b'(' => i += 1,
            b')' => return Err(Error::malformed(i, "unbalanced ')'")),
            c => return Err(Error::malformed(i, format!("unexpected character {:?}", c as char))),
        }
        let mut cycle: Vec<usize> = Vec::new();
        let mut expect_sep = false;
        loop {
            skip_ws(&mut i);
            if i == bytes.len() {
                return Err(Error::malformed(i, "unbalanced '(' : missing ')'"));
            }
            match bytes[i] {
                b')' => {
                    i += 1;
                    break;
                }
                b',' if expect_sep => {
                    i += 1;
                    expect_sep = false;
                }
                b'0'..=b'9' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let point: usize = text[start..i]
                        .parse()
                        .map_err(|_| Error::malformed(start, "point out of range"))?;
                    if point == 0 || point > degree {
                        return Err(Error::malformed(
                            start,
                            format!("point {point} outside 1..={degree}"),
                        ));
                    }
                    if std::mem::replace(&mut used[point - 1], true) {
                        return Err(Error::malformed(start, format!("repeated point {point}")));
                    }
                    cycle.push(point - 1);
                    expect_sep = true;
                }
                b'(' => return Err(Error::malformed(i, "nested '('")),
                c => {
                    return Err(Error::malformed(i, format!("unexpected character {:?}", c as char)))
                }
            }
        }
        for (k, &p) in cycle.iter().enumerate() {
            images[p] = cycle[(k + 1) % cycle.len()] as Point;
        }
    }
    Ok(Permutation { images })
}

/// Multiset of cycle lengths on moved points, sorted weakly decreasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType {
    lengths: Vec<usize>,
}

impl CycleType {
    /// Normalises the given lengths: 1s (fixed points) and 0s are dropped.
    pub fn new(mut lengths: Vec<usize>) -> Self {
        lengths.retain(|&l| l > 1);
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { lengths }
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Number of moved points.
    pub fn length(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// lcm of the cycle lengths; 1 for the empty type.
    pub fn order(&self) -> u128 {
        self.lengths.iter().fold(1u128, |acc, &l| {
            let l = l as u128;
            let g = gcd(acc, l);
            (acc / g).checked_mul(l).expect("permutation order overflows u128")
        })
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, l) in self.lengths.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("]")
    }
}

pub(crate) fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
