use proptest::prelude::*;

use preadm::coset::{double_coset_type, double_cosets, local_degree_type, split_count, x_count};
use preadm::gassmann::{class_table, cyclic_coset_types_agree};
use preadm::group::{ElemId, EnumerationOptions, PermGroup, Subgroup};
use preadm::padic::{
    hensel_root32, is_quotient_shape, AbelianPGroupShape, TwoAdicInt, TwoAdicPoly,
};
use preadm::perm::{CycleType, Permutation};

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).map(|i| i + 1).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(&images).unwrap())
}

/// A group of order at most 200 on 3..=7 points, given by up to two generators.
fn small_group() -> impl Strategy<Value = PermGroup> {
    (3usize..=7)
        .prop_flat_map(|n| prop::collection::vec(permutation(n), 1..=2).prop_map(move |gens| (n, gens)))
        .prop_filter_map("order above 200", |(n, gens)| {
            PermGroup::generate_capped(n, &gens, 200).ok()
        })
}

fn pick(g: &PermGroup, seeds: &[u32]) -> Vec<ElemId> {
    seeds.iter().map(|s| s % g.order() as u32).collect()
}

fn sub<'g>(g: &'g PermGroup, seeds: &[u32]) -> Subgroup<'g> {
    g.subgroup(&pick(g, seeds))
}

type Triple = (PermGroup, Vec<u32>, Vec<u32>, u32);

fn triple() -> impl Strategy<Value = Triple> {
    (
        small_group(),
        prop::collection::vec(any::<u32>(), 0..=2),
        prop::collection::vec(any::<u32>(), 0..=2),
        any::<u32>(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn double_coset_identities((g, sa, sb, sx) in triple()) {
        let a = sub(&g, &sa);
        let b = sub(&g, &sb);
        let dc = double_cosets(&a, &b);
        // partition: sizes add up and every label set has the stated size
        let total: usize = dc.cosets().iter().map(|c| c.size).sum();
        prop_assert_eq!(total, g.order());
        let mut counts = vec![0usize; dc.len()];
        for e in g.ids() {
            counts[dc.label(e)] += 1;
        }
        for (k, c) in dc.cosets().iter().enumerate() {
            prop_assert_eq!(counts[k], c.size);
            prop_assert_eq!(dc.label(c.rep), k);
            prop_assert_eq!(dc.members(k)[0], c.rep);
            // |AxB| = |A||B| / |x⁻¹Ax ∩ B|
            let meet = a.conjugate_by(c.rep).intersection(&b).order();
            prop_assert_eq!(c.size, a.order() * b.order() / meet);
        }
        // weakly decreasing
        prop_assert!(dc.cosets().windows(2).all(|w| w[0].size >= w[1].size));
        // X(A,B) = S(A,B)·|A||B|
        prop_assert_eq!(x_count(&a, &b), split_count(&a, &b) * a.order() * b.order());
        // local degrees sum to [G:B]
        let degrees: usize = local_degree_type(&a, &b).degrees.iter().sum();
        prop_assert_eq!(degrees, g.order() / b.order());
        // conjugation invariance
        let x = sx % g.order() as u32;
        let t = double_coset_type(&a, &b).sizes;
        prop_assert_eq!(&double_coset_type(&a.conjugate_by(x), &b.conjugate_by(x)).sizes, &t);
        prop_assert_eq!(&double_coset_type(&a.conjugate_by(x), &b).sizes, &t);
    }

    #[test]
    fn gassmann_characterizations_agree((g, sa, sb, _) in triple()) {
        let a = sub(&g, &sa);
        let b = sub(&g, &sb);
        let rows_equal = class_table(&a, &b).iter().all(|r| r.in_h == r.in_h2);
        prop_assert_eq!(rows_equal, cyclic_coset_types_agree(&a, &b));
    }

    #[test]
    fn group_axioms((g, s, _, _) in triple()) {
        let ids = pick(&g, &[s.first().copied().unwrap_or(1), s.last().copied().unwrap_or(2), 7]);
        let (a, b, c) = (ids[0], ids[1], ids[2]);
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inv(a)), PermGroup::IDENTITY);
        prop_assert_eq!(g.conj(g.conj(a, b), g.inv(b)), a);
        let pa = g.element(a);
        prop_assert_eq!(pa.order(), pa.cycle_type().order());
        prop_assert_eq!(g.elem_order(a) as u128, pa.order());
        prop_assert_eq!(pa.compose(&g.element(b)), g.element(g.mul(a, b)));
    }

    #[test]
    fn metacyclic_routes_agree(g in small_group()) {
        let opts = EnumerationOptions::default();
        let via_pairs: Vec<Vec<ElemId>> = g
            .two_generated_subgroups(opts)
            .unwrap()
            .into_iter()
            .filter(|d| d.is_metacyclic())
            .map(|d| d.members().to_vec())
            .collect();
        let direct: Vec<Vec<ElemId>> = g
            .metacyclic_subgroups(opts)
            .unwrap()
            .into_iter()
            .map(|d| d.members().to_vec())
            .collect();
        prop_assert_eq!(via_pairs, direct);
    }

    #[test]
    fn census_is_bounded_by_order((g, s, _, _) in triple()) {
        let d = sub(&g, &s);
        let classes: Vec<CycleType> = d.members().iter().map(|&m| g.cycle_type_of(m)).collect();
        let total: usize = {
            let mut seen = classes.clone();
            seen.sort_by(|a, b| a.lengths().cmp(b.lengths()));
            seen.dedup();
            seen.iter().map(|x| d.cycle_type_census(x)).sum()
        };
        prop_assert_eq!(total, d.order());
    }

    #[test]
    fn roots_of_m(k in 0i128..1_000_000, prec in prop::sample::select(vec![32u32, 64, 128])) {
        let m = 1 + 128 * k;
        let u = hensel_root32(m, prec).unwrap();
        prop_assert_eq!(u.pow(32), TwoAdicInt::new(m, prec));
        prop_assert!(u.is_unit());
    }

    #[test]
    fn polynomial_ring(
        a in prop::collection::vec(any::<i64>(), 1..6),
        b in prop::collection::vec(any::<i64>(), 1..6),
        c in prop::collection::vec(any::<i64>(), 1..6),
    ) {
        let p = |v: &[i64]| TwoAdicPoly::from_ints(&v.iter().map(|&x| x as i128).collect::<Vec<_>>(), 64);
        let (a, b, c) = (p(&a), p(&b), p(&c));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn quotient_shape_is_a_partial_order(
        x in prop::collection::vec(0u32..5, 0..5),
        y in prop::collection::vec(0u32..5, 0..5),
        z in prop::collection::vec(0u32..5, 0..5),
    ) {
        let s = |v: &[u32]| AbelianPGroupShape::new(v.iter().map(|&e| 1u64 << e).collect()).unwrap();
        let (x, y, z) = (s(&x), s(&y), s(&z));
        prop_assert!(is_quotient_shape(&x, &x));
        if is_quotient_shape(&x, &y) && is_quotient_shape(&y, &x) {
            prop_assert_eq!(&x, &y);
        }
        if is_quotient_shape(&x, &y) && is_quotient_shape(&y, &z) {
            prop_assert!(is_quotient_shape(&x, &z));
        }
    }
}
