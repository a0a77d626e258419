//! The reproduction suite: every checkable claim about the named groups,
//! the threshold inequality and the 2-adic example, with one pass/fail
//! entry per claim.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::{json, Value};

use preadm::coset::{double_coset_type, double_cosets, local_degree_type, split_count, verify_equivalence_condition, x_count, Scope};
use preadm::gassmann::{are_conjugate_subgroups, class_table, cyclic_coset_types_agree, gassmann_equivalent, psl32, unramified_local_degree_match};
use preadm::group::{EnumerationOptions, PermGroup, Subgroup};
use preadm::padic::{
    abelian_exponent_quotient, completions_of_k, completions_of_l, first_factors, hensel_root32,
    preadmissibility_witness_compare, second_factors, target_polynomial, verify_product, AbelianPGroupShape,
    LocalFieldDescriptor, TwoAdicInt, TwoAdicPoly, VERDICT_NOT_EQUIVALENT,
};
use preadm::perm::{CycleType, Permutation};
use preadm::wreath::{beta_set, sylow_generators, threshold_inequality};

use crate::report::{CliError, Outcome};

type Check = fn(&Context) -> preadm::Result<(bool, Value)>;

struct Claim {
    id: &'static str,
    criterion: u32,
    tags: &'static [&'static str],
    description: &'static str,
    check: Check,
}

struct Context {
    cap: usize,
    inject_fault: bool,
}

#[derive(Serialize)]
struct ClaimResult {
    id: &'static str,
    criterion: u32,
    description: &'static str,
    pass: bool,
    details: Value,
}

#[derive(Serialize)]
struct SuiteResult {
    pass: bool,
    total: usize,
    passed: usize,
    failed: usize,
    claims: Vec<ClaimResult>,
}

const CLAIMS: &[Claim] = &[
    Claim {
        id: "s8-main-lemma",
        criterion: 1,
        tags: &["s8", "coset"],
        description: "S(D,<(1,2)>) >= 2 for every metacyclic 2-generated D <= S_8(2)",
        check: s8_main_lemma,
    },
    Claim {
        id: "s9-witness",
        criterion: 2,
        tags: &["s9", "coset"],
        description: "S_9(3), H=<(1,2,3)> fails at D=<(1,2,3),(4,5,6)> with S(D,H)=1",
        check: s9_witness,
    },
    Claim {
        id: "s4-witness",
        criterion: 2,
        tags: &["s4", "coset"],
        description: "S_4(2), H=<(1,2)> fails at D=G with S(D,H)=0",
        check: s4_witness,
    },
    Claim {
        id: "s5-transposition-census",
        criterion: 3,
        tags: &["s5", "census"],
        description: "a metacyclic subgroup of S_5 holds at most 4 transpositions, attained by <(1,2,3)(4,5),(1,2)>",
        check: s5_census,
    },
    Claim {
        id: "s8-t0-census",
        criterion: 3,
        tags: &["s8", "census"],
        description: "no metacyclic subgroup of S_8(2) contains more than two elements of T_0",
        check: s8_t0_census,
    },
    Claim {
        id: "s8-t0-class",
        criterion: 4,
        tags: &["s8", "wreath"],
        description: "the class of (1,2) in S_8(2) is T_0 = {(1,2),(3,4),(5,6),(7,8)} and holds every transposition",
        check: s8_t0_class,
    },
    Claim {
        id: "s9-t0-class",
        criterion: 4,
        tags: &["s9", "wreath"],
        description: "the 3-cycles of S_9(3) are exactly the powers of the beta_i",
        check: s9_t0_class,
    },
    Claim {
        id: "s8-structure",
        criterion: 5,
        tags: &["s8", "structure"],
        description: "S_8(2)/Phi is elementary abelian of order 8, both normalizers have order 32, no metacyclic subgroup of order 64, max element order 8",
        check: s8_structure,
    },
    Claim {
        id: "s9-structure",
        criterion: 5,
        tags: &["s9", "structure"],
        description: "max element order of S_9(3) is 9",
        check: s9_structure,
    },
    Claim {
        id: "threshold-table",
        criterion: 6,
        tags: &["wreath", "inequality"],
        description: "threshold inequality true at (5,2),(7,2),(3,3),(2,4),(3,4) and false at (2,2),(3,2),(2,3)",
        check: threshold_table,
    },
    Claim {
        id: "coset-identities",
        criterion: 7,
        tags: &["coset", "random"],
        description: "double coset identities on 500 random triples with |G| <= 200",
        check: coset_identities,
    },
    Claim {
        id: "psl32-gassmann-pair",
        criterion: 8,
        tags: &["gassmann", "psl32"],
        description: "point and line stabilizers of PSL(3,2) are Gassmann equivalent, not conjugate, with matching local degrees",
        check: psl32_pair,
    },
    Claim {
        id: "gassmann-characterizations",
        criterion: 8,
        tags: &["gassmann", "random"],
        description: "class intersections and cyclic coset types agree on 100 random triples",
        check: gassmann_random,
    },
    Claim {
        id: "s8-not-gassmann",
        criterion: 8,
        tags: &["s8", "gassmann"],
        description: "<(1,2)> and 1 in S_8(2): equivalent by preadmissibility, not Gassmann equivalent",
        check: s8_not_gassmann,
    },
    Claim {
        id: "two-adic-example",
        criterion: 9,
        tags: &["padic"],
        description: "32nd roots, both factorizations, local abelian quotients and realizability counts (2,1)",
        check: two_adic,
    },
];

pub fn run(filter: Option<&str>, inject_fault: bool, cap: usize) -> Result<Outcome, CliError> {
    let ctx = Context { cap, inject_fault };
    let selected: Vec<&Claim> = CLAIMS
        .iter()
        .filter(|c| filter.is_none_or(|f| c.id.contains(f) || c.tags.iter().any(|t| t.contains(f))))
        .collect();
    if selected.is_empty() {
        return Err(CliError::Usage(format!("no claim matches filter {:?}", filter.unwrap_or(""))));
    }
    let claims: Vec<ClaimResult> = selected
        .iter()
        .map(|c| {
            let (pass, details) = match (c.check)(&ctx) {
                Ok(r) => r,
                Err(e) => (false, json!({ "error": e.to_string() })),
            };
            ClaimResult {
                id: c.id,
                criterion: c.criterion,
                description: c.description,
                pass,
                details,
            }
        })
        .collect();
    let passed = claims.iter().filter(|c| c.pass).count();
    let text = claims
        .iter()
        .map(|c| format!("{} {:<28} {}\n", if c.pass { "PASS" } else { "FAIL" }, c.id, c.description))
        .collect::<String>()
        + &format!("{passed}/{} claims passed\n", claims.len());
    let result = SuiteResult {
        pass: passed == claims.len(),
        total: claims.len(),
        passed,
        failed: claims.len() - passed,
        claims,
    };
    let pass = result.pass;
    let inputs = json!({ "filter": filter, "inject_fault": inject_fault });
    Ok(Outcome::new(inputs, result, pass).with_text(text))
}

fn perm(text: &str, n: usize) -> Permutation {
    Permutation::parse_cycles(text, n).expect("fixed cycle text")
}

fn wreath(l: u32, n: u32, cap: usize) -> preadm::Result<PermGroup> {
    sylow_generators(l, n)?.group(cap)
}

fn sorted(ps: impl IntoIterator<Item = Permutation>) -> Vec<String> {
    let mut v: Vec<String> = ps.into_iter().map(|p| p.to_string()).collect();
    v.sort();
    v
}

fn s8_main_lemma(ctx: &Context) -> preadm::Result<(bool, Value)> {
    let g = wreath(2, 3, ctx.cap)?;
    let h = g.subgroup_from_perms(&[perm("(1,2)", 8)])?;
    let subs = g.two_generated_subgroups(EnumerationOptions::default())?;
    let metacyclic: Vec<&Subgroup<'_>> = subs.iter().filter(|d| d.is_metacyclic()).collect();
    let min_split = metacyclic.iter().map(|d| split_count(d, &h)).min().unwrap_or(0);
    let failures = metacyclic.iter().filter(|d| split_count(d, &h) < 2).count();
    let core_trivial = g.core(&h).is_trivial();
    let pass = g.order() == 128 && failures == 0 && core_trivial;
    Ok((
        pass,
        json!({
            "group_order": g.order(),
            "two_generated": subs.len(),
            "metacyclic": metacyclic.len(),
            "min_split_count": min_split,
            "failures": failures,
            "core_trivial": core_trivial,
        }),
    ))
}

fn s9_witness(ctx: &Context) -> preadm::Result<(bool, Value)> {
    let g = wreath(3, 2, ctx.cap)?;
    let h = g.subgroup_from_perms(&[perm("(1,2,3)", 9)])?;
    let d = g.subgroup_from_perms(&[perm("(1,2,3)", 9), perm("(4,5,6)", 9)])?;
    let s = split_count(&d, &h);
    let verdict = verify_equivalence_condition(&g, &h, Scope::MetacyclicOnly, EnumerationOptions::default())?;
    let listed = verdict.failures.iter().any(|f| f.members == d.members());
    let pass = g.order() == 81 && d.is_metacyclic() && s == 1 && !verdict.pass && listed;
    Ok((
        pass,
        json!({ "split_count": s, "verdict_pass": verdict.pass, "failures": verdict.failures.len(), "witness_listed": listed }),
    ))
}

fn s4_witness(ctx: &Context) -> preadm::Result<(bool, Value)> {
    let g = wreath(2, 2, ctx.cap)?;
    let h = g.subgroup_from_perms(&[perm("(1,2)", 4)])?;
    let d = g.whole();
    let s = split_count(&d, &h);
    let verdict = verify_equivalence_condition(&g, &h, Scope::MetacyclicOnly, EnumerationOptions::default())?;
    let pass = g.order() == 8 && d.is_metacyclic() && s == 0 && !verdict.pass;
    Ok((pass, json!({ "split_count": s, "verdict_pass": verdict.pass })))
}

fn symmetric(n: usize) -> preadm::Result<PermGroup> {
    let cycle: Vec<usize> = (2..=n).chain([1]).collect();
    PermGroup::generate(n, &[perm("(1,2)", n), Permutation::from_images(&cycle)?])
}

fn s5_census(_: &Context) -> preadm::Result<(bool, Value)> {
    let g = symmetric(5)?;
    let x = CycleType::new(vec![2]);
    let max = g
        .two_generated_subgroups(EnumerationOptions::default())?
        .iter()
        .filter(|d| d.is_metacyclic())
        .map(|d| d.cycle_type_census(&x))
        .max()
        .unwrap_or(0);
    let w = g.subgroup_from_perms(&[perm("(1,2,3)(4,5)", 5), perm("(1,2)", 5)])?;
    let found = sorted(w.perms().into_iter().filter(|p| p.cycle_type() == x));
    let expected = sorted(["(1,2)", "(2,3)", "(1,3)", "(4,5)"].map(|t| perm(t, 5)));
    let pass = max == 4 && w.is_metacyclic() && w.cycle_type_census(&x) == 4 && found == expected;
    Ok((pass, json!({ "max_census": max, "witness_order": w.order(), "witness_transpositions": found })))
}

fn s8_t0_census(ctx: &Context) -> preadm::Result<(bool, Value)> {
    let g = wreath(2, 3, ctx.cap)?;
    let t0: Vec<u32> = beta_set(2, 3).iter().map(|b| g.require(b)).collect::<preadm::Result<_>>()?;
    let max = g
        .two_generated_subgroups(EnumerationOptions::default())?
        .iter()
        .filter(|d| d.is_metacyclic())
        .map(|d| t0.iter().filter(|&&b| d.contains(b)).count())
        .max()
        .unwrap_or(0);
    Ok((max <= 2, json!({ "max_t0_elements": max })))
}

fn s8_t0_class(ctx: &Context) -> preadm::Result<(bool, Value)> {
    let g = wreath(2, 3, ctx.cap)?;
    let a = g.require(&perm("(1,2)", 8))?;
    let class = sorted(g.class_of(a).iter().map(|&e| g.element(e)));
    let t0 = sorted(beta_set(2, 3));
    let transpositions = sorted(g.elements().filter(|p| p.cycle_type() == CycleType::new(vec![2])));
    let pass = class == t0 && transpositions == t0;
    Ok((pass, json!({ "class": class, "transpositions": transpositions })))
}

fn s9_t0_class(ctx: &Context) -> preadm::Result<(bool, Value)> {
    let g = wreath(3, 2, ctx.cap)?;
    let betas = beta_set(3, 2);
    let a = g.require(&betas[0])?;
    let class = sorted(g.class_of(a).iter().map(|&e| g.element(e)));
    let powers = sorted(betas.iter().flat_map(|b| [b.pow(1), b.pow(2)]));
    let three_cycles = sorted(g.elements().filter(|p| p.cycle_type() == CycleType::new(vec![3])));
    let pass = three_cycles == powers && class == sorted(betas.clone());
    Ok((pass, json!({ "three_cycles": three_cycles, "class_of_beta_1": class })))
}

fn s8_structure(ctx: &Context) -> preadm::Result<(bool, Value)> {
    let g = wreath(2, 3, ctx.cap)?;
    let phi = g.frattini_2group()?;
    let q = g.quotient(&phi)?;
    let rank = q.elementary_abelian_rank();
    let n1 = g.normalizer(&g.subgroup_from_perms(&[perm("(1,2)", 8), perm("(5,6)", 8)])?).order();
    let n2 = g.normalizer(&g.subgroup_from_perms(&[perm("(1,2)", 8), perm("(7,8)", 8)])?).order();
    let orders: Vec<usize> = g
        .metacyclic_subgroups(EnumerationOptions::default())?
        .iter()
        .map(Subgroup::order)
        .collect();
    let max_meta = orders.iter().copied().max().unwrap_or(1);
    let c = g.max_element_order();
    let pass = q.order() == 8 && rank == Some((2, 3)) && n1 == 32 && n2 == 32 && !orders.contains(&64) && c == 8;
    Ok((
        pass,
        json!({
            "frattini_quotient_order": q.order(),
            "frattini_quotient_elementary_abelian": rank.is_some(),
            "normalizer_orders": [n1, n2],
            "max_metacyclic_order": max_meta,
            "max_element_order": c,
        }),
    ))
}

fn s9_structure(ctx: &Context) -> preadm::Result<(bool, Value)> {
    let g = wreath(3, 2, ctx.cap)?;
    let c = g.max_element_order();
    Ok((c == 9, json!({ "max_element_order": c })))
}

fn threshold_table(_: &Context) -> preadm::Result<(bool, Value)> {
    let yes = [(5, 2), (7, 2), (3, 3), (2, 4), (3, 4)];
    let no = [(2, 2), (3, 2), (2, 3)];
    let rows: Vec<Value> = yes
        .iter()
        .chain(&no)
        .map(|&(l, n)| json!({ "l": l, "n": n, "holds": threshold_inequality(l, n) }))
        .collect();
    let pass = yes.iter().all(|&(l, n)| threshold_inequality(l, n)) && no.iter().all(|&(l, n)| !threshold_inequality(l, n));
    Ok((pass, json!({ "rows": rows })))
}

/// A group of order at most 200 on 3..=7 points from one or two random generators.
pub fn random_small_group(rng: &mut StdRng) -> PermGroup {
    loop {
        let n = rng.gen_range(3..=7);
        let count = rng.gen_range(1..=2);
        let gens: Vec<Permutation> = (0..count)
            .map(|_| {
                let mut images: Vec<usize> = (1..=n).collect();
                images.shuffle(rng);
                Permutation::from_images(&images).expect("shuffled identity")
            })
            .collect();
        if let Ok(g) = PermGroup::generate_capped(n, &gens, 200) {
            return g;
        }
    }
}

/// Subgroup generated by up to two random elements.
pub fn random_subgroup<'g>(g: &'g PermGroup, rng: &mut StdRng) -> Subgroup<'g> {
    let count = rng.gen_range(0..=2);
    let ids: Vec<u32> = (0..count).map(|_| rng.gen_range(0..g.order() as u32)).collect();
    g.subgroup(&ids)
}

fn triple_identities(g: &PermGroup, a: &Subgroup<'_>, b: &Subgroup<'_>, x: u32) -> bool {
    let dc = double_cosets(a, b);
    let sizes_ok = dc.cosets().iter().map(|c| c.size).sum::<usize>() == g.order();
    let mut counts = vec![0usize; dc.len()];
    for e in g.ids() {
        counts[dc.label(e)] += 1;
    }
    let formula_ok = dc.cosets().iter().enumerate().all(|(k, c)| {
        counts[k] == c.size && c.size * a.conjugate_by(c.rep).intersection(b).order() == a.order() * b.order()
    });
    let x_ok = x_count(a, b) == split_count(a, b) * a.order() * b.order();
    let degrees_ok = local_degree_type(a, b).degrees.iter().sum::<usize>() * b.order() == g.order();
    let t = double_coset_type(a, b).sizes;
    let conj_ok = double_coset_type(&a.conjugate_by(x), &b.conjugate_by(x)).sizes == t
        && double_coset_type(&a.conjugate_by(x), b).sizes == t;
    sizes_ok && formula_ok && x_ok && degrees_ok && conj_ok
}

fn coset_identities(_: &Context) -> preadm::Result<(bool, Value)> {
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    let mut failures = 0;
    for _ in 0..500 {
        let g = random_small_group(&mut rng);
        let a = random_subgroup(&g, &mut rng);
        let b = random_subgroup(&g, &mut rng);
        let x = rng.gen_range(0..g.order() as u32);
        if !triple_identities(&g, &a, &b, x) {
            failures += 1;
        }
    }
    Ok((failures == 0, json!({ "triples": 500, "failures": failures })))
}

fn psl32_pair(_: &Context) -> preadm::Result<(bool, Value)> {
    let g = psl32::group();
    let (h, h2) = psl32::pair(&g)?;
    let report = gassmann_equivalent(&h, &h2);
    let local = unramified_local_degree_match(&h, &h2)?;
    let pass = g.order() == 168 && h.order() == 24 && h2.order() == 24 && report.equivalent && !report.conjugate && local;
    Ok((
        pass,
        json!({ "group_order": g.order(), "equivalent": report.equivalent, "conjugate": report.conjugate, "local_degrees_match": local }),
    ))
}

fn gassmann_random(_: &Context) -> preadm::Result<(bool, Value)> {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    let mut disagreements = 0;
    let mut equivalent = 0;
    for _ in 0..100 {
        let g = random_small_group(&mut rng);
        let a = random_subgroup(&g, &mut rng);
        let b = random_subgroup(&g, &mut rng);
        let rows = class_table(&a, &b).iter().all(|r| r.in_h == r.in_h2);
        if rows != cyclic_coset_types_agree(&a, &b) {
            disagreements += 1;
        }
        if rows {
            equivalent += 1;
        }
        if are_conjugate_subgroups(&a, &b).is_some() && !rows {
            disagreements += 1;
        }
    }
    Ok((disagreements == 0, json!({ "triples": 100, "equivalent_pairs": equivalent, "disagreements": disagreements })))
}

fn s8_not_gassmann(ctx: &Context) -> preadm::Result<(bool, Value)> {
    let g = wreath(2, 3, ctx.cap)?;
    let h = g.subgroup_from_perms(&[perm("(1,2)", 8)])?;
    let verdict = verify_equivalence_condition(&g, &h, Scope::MetacyclicOnly, EnumerationOptions::default())?;
    let report = gassmann_equivalent(&h, &g.trivial());
    let pass = verdict.pass && !report.equivalent;
    Ok((pass, json!({ "preadmissibility_equivalent": verdict.pass, "gassmann_equivalent": report.equivalent })))
}

fn two_adic(ctx: &Context) -> preadm::Result<(bool, Value)> {
    let mut pass = true;
    let mut rows = Vec::new();
    for m in [129i128, 641, 1 + 128 * 11] {
        let u = hensel_root32(m, 64)?;
        let root_ok = u.pow(32) == TwoAdicInt::new(m, 64);
        let v = hensel_root32(m, 40)?;
        let mut first = first_factors(v);
        if ctx.inject_fault {
            first[0] = TwoAdicPoly::monic_binomial(1, v.neg().sub(TwoAdicInt::new(2, 40)));
        }
        let first_ok = verify_product(&first, &target_polynomial(m, 1, 40));
        let second_ok = verify_product(&second_factors(v), &target_polynomial(m, 1 << 16, 40));
        pass &= root_ok && first_ok && second_ok;
        rows.push(json!({ "m": m.to_string(), "root_mod_2^64": u.value().to_string(), "root_ok": root_ok, "first": first_ok, "second": second_ok }));
    }
    let shapes: Vec<(u32, u64, &str)> = vec![(8, 16, "C_16^10"), (16, 32, "C_16^18"), (16, 2, "C_16^17 x C_2"), (8, 2, "C_16^9 x C_2")];
    let mut shape_rows = Vec::new();
    for (n, q, want) in shapes {
        let s = abelian_exponent_quotient(&LocalFieldDescriptor::new(format!("({n},{q})"), n, q)?, 16)?;
        pass &= s.to_string() == want;
        shape_rows.push(json!({ "degree": n, "roots_of_unity": q, "shape": s.to_string() }));
    }
    let a = AbelianPGroupShape::homocyclic(16, 10)?;
    let w = preadmissibility_witness_compare(&completions_of_k(), &completions_of_l(), &a, 16)?;
    pass &= (w.k_count, w.l_count) == (2, 1) && w.verdict == VERDICT_NOT_EQUIVALENT;
    Ok((pass, json!({ "roots": rows, "shapes": shape_rows, "witness": w })))
}
