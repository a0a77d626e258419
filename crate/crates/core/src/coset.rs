//! Double cosets, split cosets and the equivalence-by-preadmissibility check.
//!
//! For subgroups `A, B ≤ G` the double coset type `(A,B)` is the weakly
//! decreasing vector of sizes `|AxB|`. A double coset is *split* when
//! `|AxB| = |A||B|`, i.e. when `x⁻¹Ax ∩ B = 1`, and `S(A,B)` counts them.
//!
//! When `D` is a decomposition group of a prime of a Galois extension `M/Q`
//! with group `G` and `K = M^H`, the local degrees of that prime in `K` are
//! the entries of `(D,H)` divided by `|H|`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{ElemId, EnumerationOptions, PermGroup, Subgroup};

/// One double coset `AxB`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DoubleCoset {
    /// Smallest element of the double coset.
    pub rep: ElemId,
    pub size: usize,
}

/// The partition of `G` into double cosets `AxB`.
#[derive(Clone, Debug)]
pub struct DoubleCosets {
    /// Sorted by decreasing size, then by representative.
    cosets: Vec<DoubleCoset>,
    /// For every element of `G`, the index of its double coset in `cosets`.
    labels: Vec<u32>,
}

impl DoubleCosets {
    pub fn cosets(&self) -> &[DoubleCoset] {
        &self.cosets
    }

    pub fn label(&self, e: ElemId) -> usize {
        self.labels[e as usize] as usize
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Members of the `k`-th double coset, in id order.
    pub fn members(&self, k: usize) -> Vec<ElemId> {
        (0..self.labels.len() as ElemId)
            .filter(|&e| self.labels[e as usize] as usize == k)
            .collect()
    }

    pub fn coset_type(&self) -> DoubleCosetType {
        DoubleCosetType {
            sizes: self.cosets.iter().map(|c| c.size).collect(),
            reps: self.cosets.iter().map(|c| c.rep).collect(),
        }
    }
}

/// Sizes `|Ax_iB|` in weakly decreasing order, with a representative for each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCosetType {
    pub sizes: Vec<usize>,
    pub reps: Vec<ElemId>,
}

impl DoubleCosetType {
    /// The 1-based `k`-th entry `(A,B)_k`.
    pub fn entry(&self, k: usize) -> Option<usize> {
        k.checked_sub(1).and_then(|i| self.sizes.get(i).copied())
    }
}

/// Local degrees `[K_v : Q_p]`, weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalDegreeType {
    pub degrees: Vec<usize>,
}

/// Partition of `G` into double cosets `AxB`.
///
/// `AxB` is the orbit of the left coset `xB` under left multiplication by
/// `A`, so the sweep labels left cosets of `B` once and then follows the
/// generators of `A` on coset labels.
pub fn double_cosets(a: &Subgroup<'_>, b: &Subgroup<'_>) -> DoubleCosets {
    let g = a.group();
    assert!(std::ptr::eq(g, b.group()), "subgroups of different groups");
    let n = g.order();

    // left cosets xB, numbered in order of their smallest element
    let mut left = vec![u32::MAX; n];
    let mut left_reps: Vec<ElemId> = Vec::new();
    for x in g.ids() {
        if left[x as usize] != u32::MAX {
            continue;
        }
        let idx = left_reps.len() as u32;
        left_reps.push(x);
        for &m in b.members() {
            left[g.mul(x, m) as usize] = idx;
        }
    }

    // orbits of A on left cosets; the first coset met has the smallest element
    let mut orbit_of = vec![u32::MAX; left_reps.len()];
    let mut raw: Vec<DoubleCoset> = Vec::new();
    for start in 0..left_reps.len() {
        if orbit_of[start] != u32::MAX {
            continue;
        }
        let idx = raw.len() as u32;
        orbit_of[start] = idx;
        let mut queue = vec![start];
        let mut i = 0;
        while i < queue.len() {
            let rep = left_reps[queue[i]];
            for &s in a.generators() {
                let c = left[g.mul(s, rep) as usize] as usize;
                if orbit_of[c] == u32::MAX {
                    orbit_of[c] = idx;
                    queue.push(c);
                }
            }
            i += 1;
        }
        raw.push(DoubleCoset {
            rep: left_reps[start],
            size: queue.len() * b.order(),
        });
    }

    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by(|&i, &j| raw[j].size.cmp(&raw[i].size).then(raw[i].rep.cmp(&raw[j].rep)));
    let mut rank = vec![0u32; raw.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r as u32;
    }
    let labels = g
        .ids()
        .map(|x| rank[orbit_of[left[x as usize] as usize] as usize])
        .collect();
    DoubleCosets {
        cosets: order.iter().map(|&i| raw[i]).collect(),
        labels,
    }
}

pub fn double_coset_type(a: &Subgroup<'_>, b: &Subgroup<'_>) -> DoubleCosetType {
    double_cosets(a, b).coset_type()
}

/// `S(A,B)`: the number of double cosets of size `|A||B|`.
pub fn split_count(a: &Subgroup<'_>, b: &Subgroup<'_>) -> usize {
    let full = a.order() * b.order();
    double_cosets(a, b).cosets().iter().filter(|c| c.size == full).count()
}

/// `X(D,H)`: the number of `x ∈ G` with `x⁻¹Hx ∩ D = 1`.
///
/// Computed directly from conjugates, without reference to double cosets.
pub fn x_count(d: &Subgroup<'_>, h: &Subgroup<'_>) -> usize {
    let g = d.group();
    let nontrivial: Vec<ElemId> = h.members().iter().copied().filter(|&e| e != 0).collect();
    g.ids()
        .filter(|&x| nontrivial.iter().all(|&e| !d.contains(g.conj(e, x))))
        .count()
}

/// Local degree type `(D,H)/|H|`.
pub fn local_degree_type(d: &Subgroup<'_>, h: &Subgroup<'_>) -> LocalDegreeType {
    LocalDegreeType {
        degrees: double_cosets(d, h)
            .cosets()
            .iter()
            .map(|c| c.size / h.order())
            .collect(),
    }
}

/// Compares `(D,H)_2/|H|` with `(D,H')_2/|H'|`.
///
/// Both decompositions need at least two double cosets.
pub fn second_entry_compare(d: &Subgroup<'_>, h: &Subgroup<'_>, h2: &Subgroup<'_>) -> Result<bool> {
    let left = local_degree_type(d, h);
    let right = local_degree_type(d, h2);
    let side = |t: &LocalDegreeType, name: &str| {
        t.degrees.get(1).copied().ok_or_else(|| {
            Error::precondition(format!("(D,{name}) has only one double coset"))
        })
    };
    Ok(side(&left, "H")? == side(&right, "H'")?)
}

/// Which subgroups `D` to test in [`verify_equivalence_condition`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    /// Metacyclic members of the 2-generated subgroup list.
    MetacyclicOnly,
    /// Every subgroup of `G`.
    AllSubgroups,
}

impl std::str::FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "metacyclic-only" | "metacyclic" => Ok(Scope::MetacyclicOnly),
            "all-subgroups" | "all" => Ok(Scope::AllSubgroups),
            other => Err(Error::malformed(0, format!("unknown scope {other:?}"))),
        }
    }
}

/// A subgroup `D` with `S(D,H) ≤ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitFailure {
    /// Generators in cycle notation.
    pub generators: Vec<String>,
    pub order: usize,
    pub split_count: usize,
    #[serde(skip)]
    pub members: Vec<ElemId>,
}

/// Outcome of [`verify_equivalence_condition`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceVerdict {
    pub pass: bool,
    pub core_trivial: bool,
    /// Number of subgroups `D` for which `S(D,H)` was computed.
    pub checked: usize,
    /// Number of subgroups enumerated before the metacyclic filter.
    pub enumerated: usize,
    pub scope: Scope,
    pub failures: Vec<SplitFailure>,
}

/// Checks that `Core_G(H) = 1` and `S(D,H) > 1` for every `D` in scope.
///
/// The verdict passes exactly when the core is trivial and no `D` fails.
/// Failures are listed in enumeration order (by order, then member list),
/// independent of how the sweep is scheduled.
pub fn verify_equivalence_condition(
    g: &PermGroup,
    h: &Subgroup<'_>,
    scope: Scope,
    opts: EnumerationOptions,
) -> Result<EquivalenceVerdict> {
    if !std::ptr::eq(g, h.group()) {
        return Err(Error::precondition("H is not a subgroup of G"));
    }
    let core_trivial = g.core(h).is_trivial();
    let candidates = match scope {
        Scope::MetacyclicOnly => g.two_generated_subgroups(opts)?,
        Scope::AllSubgroups => g.all_subgroups(opts, 1_000_000)?,
    };
    let enumerated = candidates.len();
    let results: Vec<Option<(usize, &Subgroup<'_>)>> = candidates
        .par_iter()
        .map(|d| {
            if scope == Scope::MetacyclicOnly && !d.is_metacyclic() {
                return None;
            }
            Some((split_count(d, h), d))
        })
        .collect();
    let checked = results.iter().flatten().count();
    let failures: Vec<SplitFailure> = results
        .into_iter()
        .flatten()
        .filter(|(s, _)| *s <= 1)
        .map(|(s, d)| SplitFailure {
            generators: d.generator_perms().iter().map(ToString::to_string).collect(),
            order: d.order(),
            split_count: s,
            members: d.members().to_vec(),
        })
        .collect();
    Ok(EquivalenceVerdict {
        pass: core_trivial && failures.is_empty(),
        core_trivial,
        checked,
        enumerated,
        scope,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::tests::{group, perm};

    #[test]
    fn s3_single_double_coset() {
        let g = group(3, &["(1,2)", "(1,2,3)"]);
        let a = g.subgroup_from_perms(&[perm("(1,2,3)", 3)]).unwrap();
        let b = g.subgroup_from_perms(&[perm("(1,2)", 3)]).unwrap();
        assert_eq!(double_coset_type(&a, &b).sizes, vec![6]);
        assert_eq!(split_count(&a, &b), 1);
        assert_eq!(local_degree_type(&a, &b).degrees, vec![3]);
    }

    #[test]
    fn degenerate_subgroups() {
        let g = group(4, &["(1,2)", "(1,2,3,4)"]);
        let b = g.subgroup_from_perms(&[perm("(1,2)", 4)]).unwrap();
        assert_eq!(double_coset_type(&g.whole(), &b).sizes, vec![24]);
        let t = g.trivial();
        assert_eq!(double_coset_type(&t, &t).sizes, vec![1; 24]);
        assert_eq!(local_degree_type(&t, &b).degrees, vec![1; 12]);
        assert_eq!(local_degree_type(&b, &g.whole()).degrees, vec![1]);
        assert_eq!(x_count(&t, &b), 24);
        assert_eq!(x_count(&b, &t), 24);
    }

    #[test]
    fn known_split_counts() {
        let g9 = group(9, &["(1,2,3)", "(1,4,7)(2,5,8)(3,6,9)"]);
        let d = g9.subgroup_from_perms(&[perm("(1,2,3)", 9), perm("(4,5,6)", 9)]).unwrap();
        let h = g9.subgroup_from_perms(&[perm("(1,2,3)", 9)]).unwrap();
        assert_eq!(split_count(&d, &h), 1);

        let g4 = group(4, &["(1,2)", "(1,3)(2,4)"]);
        let h = g4.subgroup_from_perms(&[perm("(1,2)", 4)]).unwrap();
        assert_eq!(split_count(&g4.whole(), &h), 0);
    }

    #[test]
    fn x_count_with_one_transposition() {
        let g = group(8, &["(1,2)", "(1,3)(2,4)", "(1,5)(2,6)(3,7)(4,8)"]);
        let h = g.subgroup_from_perms(&[perm("(1,2)", 8)]).unwrap();
        let d = g.subgroup_from_perms(&[perm("(1,2)", 8)]).unwrap();
        assert_eq!(x_count(&d, &h), 96);
        assert_eq!(x_count(&d, &h), split_count(&d, &h) * d.order() * h.order());
    }

    #[test]
    fn second_entries() {
        let g = group(9, &["(1,2,3)", "(1,4,7)(2,5,8)(3,6,9)"]);
        let d = g.subgroup_from_perms(&[perm("(1,2,3)", 9), perm("(4,5,6)", 9)]).unwrap();
        let h = g.subgroup_from_perms(&[perm("(1,2,3)", 9)]).unwrap();
        assert!(second_entry_compare(&d, &h, &h).unwrap());
        let err = second_entry_compare(&d, &h, &g.whole()).unwrap_err();
        assert!(err.to_string().contains("(D,H')"), "{err}");
        let err = second_entry_compare(&d, &g.whole(), &h).unwrap_err();
        assert!(err.to_string().contains("(D,H)"), "{err}");
    }

    #[test]
    fn partition_and_size_formula_on_s4() {
        let g = group(4, &["(1,2)", "(1,2,3,4)"]);
        let subs = g.two_generated_subgroups(EnumerationOptions::default()).unwrap();
        for a in subs.iter().step_by(3) {
            for b in subs.iter().step_by(4) {
                let dc = double_cosets(a, b);
                let total: usize = dc.cosets().iter().map(|c| c.size).sum();
                assert_eq!(total, g.order());
                for (k, c) in dc.cosets().iter().enumerate() {
                    let mem = dc.members(k);
                    assert_eq!(mem.len(), c.size);
                    assert_eq!(mem[0], c.rep);
                    let x = c.rep;
                    let inter = a
                        .members()
                        .iter()
                        .filter(|&&m| b.contains(g.conj(m, x)))
                        .count();
                    assert_eq!(c.size, a.order() * b.order() / inter);
                }
            }
        }
    }

    #[test]
    fn verdicts() {
        let g = group(8, &["(1,2)", "(1,3)(2,4)", "(1,5)(2,6)(3,7)(4,8)"]);
        let h = g.subgroup_from_perms(&[perm("(1,2)", 8)]).unwrap();
        let v = verify_equivalence_condition(&g, &h, Scope::MetacyclicOnly, Default::default()).unwrap();
        assert!(v.pass && v.core_trivial && v.failures.is_empty());
        assert!(v.checked > 0 && v.checked <= v.enumerated);

        let g4 = group(4, &["(1,2)", "(1,3)(2,4)"]);
        let h = g4.subgroup_from_perms(&[perm("(1,2)", 4)]).unwrap();
        let v = verify_equivalence_condition(&g4, &h, Scope::MetacyclicOnly, Default::default()).unwrap();
        assert!(!v.pass);
        let whole = v.failures.iter().find(|f| f.order == 8).unwrap();
        assert_eq!(whole.split_count, 0);
    }

    #[test]
    fn scope_parsing() {
        assert_eq!("metacyclic-only".parse::<Scope>().unwrap(), Scope::MetacyclicOnly);
        assert_eq!("all-subgroups".parse::<Scope>().unwrap(), Scope::AllSubgroups);
        assert!("some".parse::<Scope>().is_err());
    }
}
