//! Subgroup enumeration: cyclic, 2-generated, metacyclic and full lattices.

use std::collections::HashSet;

use rayon::prelude::*;

use super::{ElemId, PermGroup, Subgroup};
use crate::error::{Error, Result};

/// Knobs shared by the enumeration routines.
#[derive(Clone, Copy, Debug)]
pub struct EnumerationOptions {
    /// Only use one cyclic subgroup per conjugacy class as the first
    /// generator. The output then contains a conjugate of every 2-generated
    /// subgroup, but not necessarily all of them.
    pub conjugacy_reps: bool,
    /// Refuse to enumerate in groups larger than this.
    pub max_group_order: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            conjugacy_reps: false,
            max_group_order: 50_000,
        }
    }
}

impl EnumerationOptions {
    fn check(&self, g: &PermGroup) -> Result<()> {
        if g.order() > self.max_group_order {
            return Err(Error::CapExceeded {
                what: format!("subgroup enumeration in a group of order {}", g.order()),
                cap: self.max_group_order,
            });
        }
        Ok(())
    }
}

fn sort_dedup(mut subs: Vec<Subgroup<'_>>) -> Vec<Subgroup<'_>> {
    subs.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
    subs.dedup_by(|a, b| a.members() == b.members());
    subs
}

impl PermGroup {
    /// Every cyclic subgroup once, sorted by order then member list. Each
    /// comes with its smallest generator.
    pub fn cyclic_subgroups(&self) -> Vec<Subgroup<'_>> {
        let mut covered = self.empty_mask();
        let mut out = Vec::new();
        for e in self.ids() {
            if covered.contains(e as usize) {
                continue;
            }
            let c = self.subgroup(&[e]);
            // every generator of ⟨e⟩ is some power e^k with gcd(k, n) = 1
            let n = c.order() as u64;
            let mut p = e;
            for k in 1..=n {
                if crate::perm::gcd(k as u128, n as u128) == 1 {
                    covered.insert(p as usize);
                }
                p = self.mul(p, e);
            }
            out.push(c);
        }
        sort_dedup(out)
    }

    /// Cyclic subgroups up to conjugacy: one representative per class of
    /// conjugate cyclic subgroups.
    pub fn cyclic_subgroup_reps(&self) -> Vec<Subgroup<'_>> {
        let classes = self.conjugacy_classes();
        let mut seen_keys: HashSet<Vec<ElemId>> = HashSet::new();
        let mut out = Vec::new();
        for class in classes.classes() {
            let c = self.subgroup(&[class[0]]);
            if seen_keys.contains(c.members()) {
                continue;
            }
            // mark all conjugates so that ⟨g⟩ and ⟨g^k⟩ in another class collapse
            for &x in class {
                seen_keys.insert(self.subgroup(&[x]).members().to_vec());
            }
            out.push(c);
        }
        sort_dedup(out)
    }

    /// All subgroups `⟨a, b⟩` over pairs of elements, including every cyclic
    /// subgroup, deduplicated and sorted by order then member list.
    pub fn two_generated_subgroups(&self, opts: EnumerationOptions) -> Result<Vec<Subgroup<'_>>> {
        opts.check(self)?;
        let cyclic = self.cyclic_subgroups();
        let firsts: Vec<Subgroup<'_>> = if opts.conjugacy_reps {
            self.cyclic_subgroup_reps()
        } else {
            cyclic.clone()
        };
        // ⟨a, b⟩ only depends on ⟨a⟩ and ⟨b⟩
        let pairs: Vec<Subgroup<'_>> = firsts
            .par_iter()
            .enumerate()
            .flat_map_iter(|(i, a)| {
                let start = if opts.conjugacy_reps { 0 } else { i + 1 };
                let a_gen = a.generators().first().copied();
                cyclic[start.min(cyclic.len())..]
                    .iter()
                    .filter(move |b| !b.is_subgroup_of(a) && !a.is_subgroup_of(b))
                    .filter_map(move |b| {
                        let b_gen = b.generators().first().copied()?;
                        Some(match a_gen {
                            Some(ag) => a.group().subgroup(&[ag, b_gen]),
                            None => b.clone(),
                        })
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        let mut all = cyclic;
        all.extend(pairs);
        Ok(sort_dedup(all))
    }

    /// Every metacyclic subgroup, built as `C·⟨y⟩` for a cyclic subgroup `C`
    /// and `y` in its normalizer. With `conjugacy_reps`, `C` runs over
    /// cyclic subgroups up to conjugacy, so the result contains a conjugate
    /// of every metacyclic subgroup.
    ///
    /// This is independent of [`two_generated_subgroups`](Self::two_generated_subgroups)
    /// and [`is_metacyclic`](Subgroup::metacyclic_witness), which makes it a
    /// cross-check for both.
    pub fn metacyclic_subgroups(&self, opts: EnumerationOptions) -> Result<Vec<Subgroup<'_>>> {
        opts.check(self)?;
        let cyclic = if opts.conjugacy_reps {
            self.cyclic_subgroup_reps()
        } else {
            self.cyclic_subgroups()
        };
        let found: Vec<Subgroup<'_>> = cyclic
            .par_iter()
            .flat_map_iter(|c| {
                let norm = self.normalizer(c);
                let mut keys: HashSet<Vec<ElemId>> = HashSet::new();
                let mut local = Vec::new();
                for &y in norm.members() {
                    if c.contains(y) && y != PermGroup::IDENTITY {
                        continue;
                    }
                    let d = self.metacyclic_product(c, y);
                    if keys.insert(d.members().to_vec()) {
                        local.push(d);
                    }
                }
                local
            })
            .collect();
        Ok(sort_dedup(found))
    }

    /// `C·⟨y⟩` where `y` normalizes the cyclic subgroup `C`.
    fn metacyclic_product<'g>(&'g self, c: &Subgroup<'g>, y: ElemId) -> Subgroup<'g> {
        let mut members: Vec<ElemId> = Vec::new();
        let mut seen = self.empty_mask();
        let mut t = PermGroup::IDENTITY;
        // walk the cosets C, Cy, Cy², ... until y^k lands back in C
        loop {
            for &m in c.members() {
                let p = self.mul(m, t);
                if !seen.put(p as usize) {
                    members.push(p);
                }
            }
            t = self.mul(t, y);
            if c.contains(t) {
                break;
            }
        }
        let mut gens: Vec<ElemId> = c.generators().to_vec();
        if !c.contains(y) {
            gens.push(y);
        }
        Subgroup::from_parts(self, members, gens)
    }

    /// The full subgroup lattice by cyclic extension: starting from the
    /// trivial group, repeatedly join a known subgroup with one element
    /// outside it. Fails once more than `max_subgroups` subgroups are found.
    pub fn all_subgroups(&self, opts: EnumerationOptions, max_subgroups: usize) -> Result<Vec<Subgroup<'_>>> {
        opts.check(self)?;
        let mut known: HashSet<Vec<ElemId>> = HashSet::new();
        let mut all = vec![self.trivial()];
        known.insert(all[0].members().to_vec());
        let mut frontier = vec![self.trivial()];
        while !frontier.is_empty() {
            let next: Vec<Subgroup<'_>> = frontier
                .par_iter()
                .flat_map_iter(|k| {
                    // ⟨K, g⟩ = ⟨K, kg⟩: one candidate per left coset of K suffices
                    let mut covered = self.empty_mask();
                    let mut local = Vec::new();
                    for g in self.ids() {
                        if covered.contains(g as usize) {
                            continue;
                        }
                        for &m in k.members() {
                            covered.insert(self.mul(m, g) as usize);
                        }
                        if !k.contains(g) {
                            local.push(k.extend(g));
                        }
                    }
                    local
                })
                .collect();
            frontier.clear();
            for s in next {
                if known.insert(s.members().to_vec()) {
                    if known.len() > max_subgroups {
                        return Err(Error::CapExceeded {
                            what: "number of subgroups".into(),
                            cap: max_subgroups,
                        });
                    }
                    frontier.push(s.clone());
                    all.push(s);
                }
            }
        }
        Ok(sort_dedup(all))
    }
}
