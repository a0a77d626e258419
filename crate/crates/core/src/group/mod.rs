//! Materialized finite permutation groups.
//!
//! A [`PermGroup`] stores every element, sorted lexicographically by image
//! list. The position of an element in that order is its [`ElemId`]; the
//! identity is always id `0`. All subgroup machinery works on ids, and a
//! multiplication table is built lazily for small groups.
//!
//! There is no stabilizer chain: every question is answered by sweeping the
//! element list, which is exact and fast enough for the orders this crate
//! targets (the default cap is [`DEFAULT_ORDER_CAP`]).

use std::hash::BuildHasher;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use hashbrown::HashTable;

use crate::error::{Error, Result};
use crate::perm::{CycleType, Permutation, Point};

mod enumerate;
mod metacyclic;
mod quotient;
mod subgroup;
mod sylow;

pub use enumerate::EnumerationOptions;
pub use metacyclic::MetacyclicWitness;
pub use quotient::QuotientGroup;
pub use subgroup::Subgroup;

/// Index of an element inside its [`PermGroup`].
pub type ElemId = u32;

/// Default bound on the order of a materialized group.
pub const DEFAULT_ORDER_CAP: usize = 2_000_000;

/// Environment variable that overrides [`DEFAULT_ORDER_CAP`] in [`order_cap_from_env`].
pub const ORDER_CAP_ENV: &str = "PREADM_ORDER_CAP";

/// Groups up to this order get a full multiplication table.
const TABLE_LIMIT: usize = 2048;

/// Order cap taken from [`ORDER_CAP_ENV`] when set and valid.
pub fn order_cap_from_env() -> usize {
    std::env::var(ORDER_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORDER_CAP)
}

/// A finite permutation group with all of its elements in memory.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    generator_ids: Vec<ElemId>,
    /// `order * degree` points; element `i` occupies `flat[i*degree..(i+1)*degree]`.
    flat: Vec<Point>,
    order: usize,
    table: OnceLock<Option<Vec<ElemId>>>,
    inverses: OnceLock<Vec<ElemId>>,
    orders: OnceLock<Vec<u32>>,
    classes: OnceLock<ConjugacyClasses>,
}

/// Partition of a group into conjugacy classes.
///
/// Classes are ordered by their smallest element, which is also the class
/// representative.
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    classes: Vec<Vec<ElemId>>,
    class_of: Vec<u32>,
}

impl ConjugacyClasses {
    pub fn classes(&self) -> &[Vec<ElemId>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class containing `e`.
    pub fn class_of(&self, e: ElemId) -> usize {
        self.class_of[e as usize] as usize
    }

    /// Class sizes in class order.
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

impl PermGroup {
    /// Closure of `generators` at the given degree, bounded by [`DEFAULT_ORDER_CAP`].
    pub fn generate(degree: usize, generators: &[Permutation]) -> Result<Self> {
        Self::generate_capped(degree, generators, DEFAULT_ORDER_CAP)
    }

    /// Breadth-first closure of `generators`; fails once more than `cap`
    /// elements have been found.
    pub fn generate_capped(degree: usize, generators: &[Permutation], cap: usize) -> Result<Self> {
        if degree == 0 || degree > crate::perm::MAX_DEGREE {
            return Err(Error::malformed(0, format!("invalid degree {degree}")));
        }
        let generators = generators
            .iter()
            .map(|g| g.embed(degree))
            .collect::<Result<Vec<_>>>()?;
        let mut step: Vec<&Permutation> = Vec::new();
        for g in &generators {
            if !g.is_identity() && !step.contains(&g) {
                step.push(g);
            }
        }

        let hasher = hashbrown::DefaultHashBuilder::default();
        let mut flat: Vec<Point> = (0..degree as Point).collect();
        let mut seen: HashTable<u32> = HashTable::new();
        seen.insert_unique(hasher.hash_one(&flat[..]), 0, |_| unreachable!());
        let mut count = 1usize;
        let mut scratch: Vec<Point> = vec![0; degree];
        let mut next = 0usize;
        while next < count {
            for g in &step {
                let imgs = g.raw_images();
                let base = next * degree;
                for k in 0..degree {
                    scratch[k] = imgs[flat[base + k] as usize];
                }
                let h = hasher.hash_one(&scratch[..]);
                let found = seen
                    .find(h, |&idx| {
                        let s = idx as usize * degree;
                        flat[s..s + degree] == scratch[..]
                    })
                    .is_some();
                if !found {
                    if count >= cap {
                        return Err(Error::CapExceeded {
                            what: "group order".into(),
                            cap,
                        });
                    }
                    flat.extend_from_slice(&scratch);
                    let flat_ref = &flat;
                    seen.insert_unique(h, count as u32, |&idx| {
                        let s = idx as usize * degree;
                        hasher.hash_one(&flat_ref[s..s + degree])
                    });
                    count += 1;
                }
            }
            next += 1;
        }
        drop(seen);

        let mut idx: Vec<u32> = (0..count as u32).collect();
        idx.sort_unstable_by(|&a, &b| {
            let (a, b) = (a as usize * degree, b as usize * degree);
            flat[a..a + degree].cmp(&flat[b..b + degree])
        });
        let mut sorted = Vec::with_capacity(flat.len());
        for i in idx {
            let s = i as usize * degree;
            sorted.extend_from_slice(&flat[s..s + degree]);
        }
        drop(flat);

        let mut group = PermGroup {
            degree,
            generators,
            generator_ids: Vec::new(),
            flat: sorted,
            order: count,
            table: OnceLock::new(),
            inverses: OnceLock::new(),
            orders: OnceLock::new(),
            classes: OnceLock::new(),
        };
        group.generator_ids = group
            .generators
            .iter()
            .map(|g| group.index_of_raw(g.raw_images()).expect("generator in closure"))
            .collect();
        Ok(group)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Generators as supplied, embedded at the group's degree.
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_ids(&self) -> &[ElemId] {
        &self.generator_ids
    }

    pub const IDENTITY: ElemId = 0;

    pub fn ids(&self) -> impl Iterator<Item = ElemId> + '_ {
        0..self.order as ElemId
    }

    /// 0-based images of element `e`.
    pub fn images(&self, e: ElemId) -> &[Point] {
        let s = e as usize * self.degree;
        &self.flat[s..s + self.degree]
    }

    pub fn element(&self, e: ElemId) -> Permutation {
        Permutation::from_raw(self.images(e).to_vec())
    }

    pub fn elements(&self) -> impl Iterator<Item = Permutation> + '_ {
        self.ids().map(|e| self.element(e))
    }

    fn index_of_raw(&self, images: &[Point]) -> Option<ElemId> {
        let (mut lo, mut hi) = (0usize, self.order);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.images(mid as ElemId).cmp(images) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid as ElemId),
            }
        }
        None
    }

    /// Id of `p`, embedding it first when its degree is smaller.
    pub fn index_of(&self, p: &Permutation) -> Option<ElemId> {
        let p = p.embed(self.degree).ok()?;
        self.index_of_raw(p.raw_images())
    }

    /// Like [`index_of`](Self::index_of) but reports a missing element as an error.
    pub fn require(&self, p: &Permutation) -> Result<ElemId> {
        self.index_of(p).ok_or_else(|| Error::NotInGroup(p.to_string()))
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index_of(p).is_some()
    }

    fn mul_slow(&self, a: ElemId, b: ElemId) -> ElemId {
        let (ia, ib) = (self.images(a), self.images(b));
        let prod: Vec<Point> = ia.iter().map(|&p| ib[p as usize]).collect();
        self.index_of_raw(&prod).expect("group is closed")
    }

    fn table(&self) -> Option<&[ElemId]> {
        self.table
            .get_or_init(|| {
                (self.order <= TABLE_LIMIT).then(|| {
                    let n = self.order as ElemId;
                    let mut t = Vec::with_capacity(self.order * self.order);
                    for a in 0..n {
                        for b in 0..n {
                            t.push(self.mul_slow(a, b));
                        }
                    }
                    t
                })
            })
            .as_deref()
    }

    /// Product `a·b` (apply `a` first).
    #[inline]
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        match self.table() {
            Some(t) => t[a as usize * self.order + b as usize],
            None => self.mul_slow(a, b),
        }
    }

    pub fn inv(&self, a: ElemId) -> ElemId {
        let inverses = self.inverses.get_or_init(|| {
            self.ids()
                .map(|e| {
                    let mut inv = vec![0 as Point; self.degree];
                    for (i, &p) in self.images(e).iter().enumerate() {
                        inv[p as usize] = i as Point;
                    }
                    self.index_of_raw(&inv).expect("group is closed")
                })
                .collect()
        });
        inverses[a as usize]
    }

    /// `x⁻¹·s·x`.
    pub fn conj(&self, s: ElemId, x: ElemId) -> ElemId {
        self.mul(self.mul(self.inv(x), s), x)
    }

    pub fn pow(&self, a: ElemId, mut k: u64) -> ElemId {
        let mut acc = Self::IDENTITY;
        let mut sq = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            k >>= 1;
        }
        acc
    }

    /// Commutator `a⁻¹b⁻¹ab`.
    pub fn commutator(&self, a: ElemId, b: ElemId) -> ElemId {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub fn cycle_type_of(&self, e: ElemId) -> CycleType {
        let imgs = self.images(e);
        let mut seen = vec![false; self.degree];
        let mut lengths = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = imgs[p] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        CycleType::new(lengths)
    }

    /// Order of the element `e`.
    pub fn elem_order(&self, e: ElemId) -> u32 {
        self.orders.get_or_init(|| {
            self.ids()
                .map(|e| self.cycle_type_of(e).order() as u32)
                .collect()
        })[e as usize]
    }

    /// Largest element order.
    pub fn max_element_order(&self) -> u32 {
        self.ids().map(|e| self.elem_order(e)).max().unwrap_or(1)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generator_ids;
        g.iter()
            .all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugacy classes, computed once and cached.
    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| {
            let mut class_of = vec![u32::MAX; self.order];
            let mut classes = Vec::new();
            for e in self.ids() {
                if class_of[e as usize] != u32::MAX {
                    continue;
                }
                let idx = classes.len() as u32;
                class_of[e as usize] = idx;
                let mut class = vec![e];
                let mut i = 0;
                while i < class.len() {
                    let c = class[i];
                    for &g in &self.generator_ids {
                        let d = self.conj(c, g);
                        if class_of[d as usize] == u32::MAX {
                            class_of[d as usize] = idx;
                            class.push(d);
                        }
                    }
                    i += 1;
                }
                class.sort_unstable();
                classes.push(class);
            }
            ConjugacyClasses { classes, class_of }
        })
    }

    /// Conjugacy class of a single element.
    pub fn class_of(&self, e: ElemId) -> &[ElemId] {
        let cc = self.conjugacy_classes();
        &cc.classes[cc.class_of(e)]
    }

    /// `{x : ax = xa}`.
    pub fn centralizer(&self, a: ElemId) -> Subgroup<'_> {
        let members: Vec<ElemId> = self
            .ids()
            .filter(|&x| self.mul(a, x) == self.mul(x, a))
            .collect();
        Subgroup::from_closed_set(self, members)
    }

    /// `{x : S^x = S}`.
    pub fn normalizer(&self, s: &Subgroup<'_>) -> Subgroup<'_> {
        let gens = s.generators();
        let members: Vec<ElemId> = self
            .ids()
            .filter(|&x| gens.iter().all(|&g| s.contains(self.conj(g, x))))
            .collect();
        Subgroup::from_closed_set(self, members)
    }

    /// Normalizer of the cyclic subgroup generated by `a`.
    pub fn normalizer_of_element(&self, a: ElemId) -> Subgroup<'_> {
        self.normalizer(&self.subgroup(&[a]))
    }

    /// Largest normal subgroup of the group contained in `h`.
    ///
    /// Intersects `h` with its conjugates under the generators until the
    /// result is stable; a stable intersection is normal and contains the core.
    pub fn core<'g>(&'g self, h: &Subgroup<'g>) -> Subgroup<'g> {
        let mut k = h.clone();
        loop {
            let mut changed = false;
            for &g in &self.generator_ids {
                let conj = k.conjugate_by(g);
                if conj.members() != k.members() {
                    k = k.intersection(&conj);
                    changed = true;
                }
            }
            if !changed {
                return k;
            }
        }
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(&self) -> Subgroup<'_> {
        Subgroup::from_parts(
            self,
            self.ids().collect(),
            self.generator_ids.iter().copied().filter(|&g| g != 0).collect(),
        )
    }

    pub fn trivial(&self) -> Subgroup<'_> {
        Subgroup::from_parts(self, vec![Self::IDENTITY], Vec::new())
    }

    /// Subgroup generated by the given elements.
    pub fn subgroup(&self, gens: &[ElemId]) -> Subgroup<'_> {
        Subgroup::generated(self, gens)
    }

    /// Subgroup generated by permutations, each of which must lie in the group.
    pub fn subgroup_from_perms(&self, gens: &[Permutation]) -> Result<Subgroup<'_>> {
        let ids = gens
            .iter()
            .map(|g| self.require(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.subgroup(&ids))
    }

    /// Subgroup generated by the elements of `candidates`, keeping only those
    /// that enlarge the running closure as generators.
    pub fn generated_greedy(&self, candidates: impl IntoIterator<Item = ElemId>) -> Subgroup<'_> {
        let mut k = self.trivial();
        for c in candidates {
            if !k.contains(c) {
                k = k.extend(c);
            }
        }
        k
    }

    fn empty_mask(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.order)
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn perm(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    pub(crate) fn group(n: usize, gens: &[&str]) -> PermGroup {
        let gens: Vec<_> = gens.iter().map(|g| perm(g, n)).collect();
        PermGroup::generate(n, &gens).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(group(8, &["(1,2)", "(1,3)(2,4)", "(1,5)(2,6)(3,7)(4,8)"]).order(), 128);
        assert_eq!(group(9, &["(1,2,3)", "(1,4,7)(2,5,8)(3,6,9)"]).order(), 81);
        assert_eq!(group(5, &[]).order(), 1);
        assert_eq!(group(5, &["(1,2)", "(1,2,3,4,5)"]).order(), 120);
    }

    #[test]
    fn cap_is_enforced() {
        let gens = [perm("(1,2)", 5), perm("(1,2,3,4,5)", 5)];
        let err = PermGroup::generate_capped(5, &gens, 100).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                what: "group order".into(),
                cap: 100
            }
        );
    }

    #[test]
    fn identity_is_first_and_ids_are_sorted() {
        let g = group(4, &["(1,2,3,4)", "(1,2)"]);
        assert!(g.element(0).is_identity());
        let all: Vec<_> = g.elements().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for e in g.ids() {
            assert_eq!(g.index_of(&g.element(e)), Some(e));
        }
    }

    #[test]
    fn arithmetic_matches_permutations() {
        let g = group(5, &["(1,2)", "(1,2,3,4,5)"]);
        for a in (0..120).step_by(7) {
            for b in (0..120).step_by(11) {
                let prod = g.element(a).compose(&g.element(b));
                assert_eq!(g.element(g.mul(a, b)), prod);
            }
            assert_eq!(g.element(g.inv(a)), g.element(a).inverse());
            assert_eq!(g.elem_order(a) as u128, g.element(a).order());
        }
    }

    #[test]
    fn s3_classes() {
        let g = group(3, &["(1,2)", "(1,2,3)"]);
        let mut sizes = g.conjugacy_classes().sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        // brute-force orbit computation
        for e in g.ids() {
            let mut orbit: Vec<_> = g.ids().map(|x| g.conj(e, x)).collect();
            orbit.sort();
            orbit.dedup();
            assert_eq!(orbit, g.class_of(e));
        }
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let g = group(6, &["(1,2)", "(3,4,5,6)"]);
        assert!(g.is_abelian());
        assert!(g.conjugacy_classes().sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn conjugates_of_first_generator_in_s8_2() {
        let g = group(8, &["(1,2)", "(1,3)(2,4)", "(1,5)(2,6)(3,7)(4,8)"]);
        let a1 = g.index_of(&perm("(1,2)", 8)).unwrap();
        let class: Vec<String> = g.class_of(a1).iter().map(|&e| g.element(e).to_string()).collect();
        let mut expected = vec!["(1,2)", "(3,4)", "(5,6)", "(7,8)"];
        expected.sort();
        let mut class = class;
        class.sort();
        assert_eq!(class, expected);
    }

    #[test]
    fn normalizers_in_s8_2() {
        let g = group(8, &["(1,2)", "(1,3)(2,4)", "(1,5)(2,6)(3,7)(4,8)"]);
        for pair in [["(1,2)", "(5,6)"], ["(1,2)", "(7,8)"]] {
            let s = g
                .subgroup_from_perms(&[perm(pair[0], 8), perm(pair[1], 8)])
                .unwrap();
            assert_eq!(g.normalizer(&s).order(), 32);
        }
        assert_eq!(g.normalizer(&g.whole()).order(), 128);
        let a1 = g.index_of(&perm("(1,2)", 8)).unwrap();
        assert_eq!(g.normalizer_of_element(a1).order(), 32);
        assert_eq!(g.centralizer(a1).order(), 32);
    }

    #[test]
    fn orbit_stabilizer_holds() {
        let g = group(5, &["(1,2)", "(1,2,3,4,5)"]);
        for e in g.ids() {
            assert_eq!(g.order(), g.centralizer(e).order() * g.class_of(e).len());
        }
    }

    #[test]
    fn cores() {
        let s3 = group(3, &["(1,2)", "(1,2,3)"]);
        let h = s3.subgroup_from_perms(&[perm("(1,2)", 3)]).unwrap();
        assert!(s3.core(&h).is_trivial());
        assert_eq!(s3.core(&s3.whole()).order(), 6);
        let a3 = s3.subgroup_from_perms(&[perm("(1,2,3)", 3)]).unwrap();
        assert_eq!(s3.core(&a3).order(), 3);

        let g = group(8, &["(1,2)", "(1,3)(2,4)", "(1,5)(2,6)(3,7)(4,8)"]);
        let h = g.subgroup_from_perms(&[perm("(1,2)", 8)]).unwrap();
        // brute-force intersection of all conjugates
        let mut inter: Vec<ElemId> = h.members().to_vec();
        for x in g.ids() {
            let conj = h.conjugate_by(x);
            inter.retain(|&e| conj.contains(e));
        }
        assert_eq!(inter, vec![0]);
        assert!(g.core(&h).is_trivial());
    }

    #[test]
    fn foreign_elements_are_rejected() {
        let g = group(4, &["(1,2)", "(3,4)"]);
        assert!(matches!(
            g.subgroup_from_perms(&[perm("(1,3)", 4)]),
            Err(Error::NotInGroup(_))
        ));
        assert!(g.contains(&perm("(1,2)", 2)));
    }

    #[test]
    fn primes() {
        assert_eq!(prime_divisors(168), vec![2, 3, 7]);
        assert_eq!(prime_divisors(1), Vec::<usize>::new());
        assert!(is_prime(2) && is_prime(7) && !is_prime(4) && !is_prime(1));
    }
}
