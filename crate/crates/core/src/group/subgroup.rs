use fixedbitset::FixedBitSet;

use super::{ElemId, PermGroup};
use crate::perm::{CycleType, Permutation};

/// A subgroup of a [`PermGroup`], held as a sorted member list plus a
/// membership mask over the parent's element ids.
#[derive(Clone)]
pub struct Subgroup<'g> {
    group: &'g PermGroup,
    members: Vec<ElemId>,
    mask: FixedBitSet,
    generators: Vec<ElemId>,
}

impl<'g> Subgroup<'g> {
    pub(crate) fn from_parts(group: &'g PermGroup, mut members: Vec<ElemId>, generators: Vec<ElemId>) -> Self {
        members.sort_unstable();
        let mut mask = group.empty_mask();
        for &m in &members {
            mask.insert(m as usize);
        }
        Subgroup {
            group,
            members,
            mask,
            generators,
        }
    }

    /// Wraps a member list already known to be closed, picking a small
    /// generating set greedily.
    pub(crate) fn from_closed_set(group: &'g PermGroup, members: Vec<ElemId>) -> Self {
        let mut k = group.trivial();
        for &m in &members {
            if !k.contains(m) {
                k = k.extend(m);
            }
        }
        debug_assert_eq!(k.members, members);
        k
    }

    pub(crate) fn generated(group: &'g PermGroup, gens: &[ElemId]) -> Self {
        let gens: Vec<ElemId> = gens.iter().copied().filter(|&g| g != PermGroup::IDENTITY).collect();
        let mut mask = group.empty_mask();
        mask.insert(0);
        let mut members = vec![PermGroup::IDENTITY];
        close(group, &mut mask, &mut members, &gens);
        members.sort_unstable();
        Subgroup {
            group,
            members,
            mask,
            generators: gens,
        }
    }

    /// Subgroup generated by `self` and `g`.
    pub fn extend(&self, g: ElemId) -> Self {
        if self.contains(g) {
            return self.clone();
        }
        let mut gens = self.generators.clone();
        gens.push(g);
        let mut mask = self.mask.clone();
        let mut members = self.members.clone();
        // Cosets of `self` are closed under the old generators, so only the
        // new generator has to be pushed through the existing members.
        let mut pending: Vec<ElemId> = Vec::new();
        for &m in &self.members {
            let p = self.group.mul(m, g);
            if !mask.put(p as usize) {
                members.push(p);
                pending.push(p);
            }
        }
        let mut i = 0;
        while i < pending.len() {
            let e = pending[i];
            for &s in &gens {
                let p = self.group.mul(e, s);
                if !mask.put(p as usize) {
                    members.push(p);
                    pending.push(p);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        Subgroup {
            group: self.group,
            members,
            mask,
            generators: gens,
        }
    }

    pub fn group(&self) -> &'g PermGroup {
        self.group
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// Sorted member ids; also the canonical key used for deduplication.
    pub fn members(&self) -> &[ElemId] {
        &self.members
    }

    pub fn generators(&self) -> &[ElemId] {
        &self.generators
    }

    pub fn contains(&self, e: ElemId) -> bool {
        self.mask.contains(e as usize)
    }

    pub fn contains_perm(&self, p: &Permutation) -> bool {
        self.group.index_of(p).is_some_and(|e| self.contains(e))
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn generator_perms(&self) -> Vec<Permutation> {
        self.generators.iter().map(|&g| self.group.element(g)).collect()
    }

    pub fn perms(&self) -> Vec<Permutation> {
        self.members.iter().map(|&g| self.group.element(g)).collect()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup<'_>) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    pub fn intersection(&self, other: &Subgroup<'g>) -> Subgroup<'g> {
        let members: Vec<ElemId> = self.members.iter().copied().filter(|&m| other.contains(m)).collect();
        Subgroup::from_closed_set(self.group, members)
    }

    /// `x⁻¹·self·x`.
    pub fn conjugate_by(&self, x: ElemId) -> Subgroup<'g> {
        let g = self.group;
        let members: Vec<ElemId> = self.members.iter().map(|&m| g.conj(m, x)).collect();
        let gens = self.generators.iter().map(|&m| g.conj(m, x)).collect();
        Subgroup::from_parts(g, members, gens)
    }

    /// Normal in the parent group.
    pub fn is_normal(&self) -> bool {
        let g = self.group;
        g.generator_ids()
            .iter()
            .all(|&x| self.generators.iter().all(|&s| self.contains(g.conj(s, x))))
    }

    /// Normal in `over`, which must contain `self`.
    pub fn is_normal_in(&self, over: &Subgroup<'_>) -> bool {
        let g = self.group;
        over.generators
            .iter()
            .all(|&x| self.generators.iter().all(|&s| self.contains(g.conj(s, x))))
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.group;
        let gens = &self.generators;
        gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u32;
        self.members.iter().any(|&m| self.group.elem_order(m) == n)
    }

    pub fn max_element_order(&self) -> u32 {
        self.members.iter().map(|&m| self.group.elem_order(m)).max().unwrap_or(1)
    }

    /// Number of members whose cycle type is `x`.
    pub fn cycle_type_census(&self, x: &CycleType) -> usize {
        // cheap filter on the number of moved points first
        let moved = x.length();
        self.members
            .iter()
            .filter(|&&m| {
                let imgs = self.group.images(m);
                imgs.iter().enumerate().filter(|&(i, &p)| i != p as usize).count() == moved
                    && self.group.cycle_type_of(m) == *x
            })
            .count()
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.group, other.group) && self.members == other.members
    }
}

impl Eq for Subgroup<'_> {}

impl std::fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.order())
            .field("generators", &self.generator_perms())
            .finish()
    }
}

fn close(group: &PermGroup, mask: &mut FixedBitSet, members: &mut Vec<ElemId>, gens: &[ElemId]) {
    let mut i = 0;
    while i < members.len() {
        let e = members[i];
        for &s in gens {
            let p = group.mul(e, s);
            if !mask.put(p as usize) {
                members.push(p);
            }
        }
        i += 1;
    }
}
