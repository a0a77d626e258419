use super::{ElemId, PermGroup, Subgroup};

/// Evidence that a group is metacyclic: `⟨normal_generator⟩` is normal and
/// the quotient is generated by the coset of `quotient_generator`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MetacyclicWitness {
    pub normal_generator: ElemId,
    pub quotient_generator: ElemId,
    /// Order of the cyclic normal subgroup.
    pub normal_order: usize,
}

impl<'g> Subgroup<'g> {
    /// Searches for a cyclic normal subgroup with cyclic quotient.
    ///
    /// Cyclic subgroups are tried in decreasing order (ties by smallest
    /// generator id) and the first one that works is returned. `None` means
    /// every cyclic subgroup was rejected.
    pub fn metacyclic_witness(&self) -> Option<MetacyclicWitness> {
        let g = self.group();
        let mut candidates: Vec<(u32, ElemId)> =
            self.members().iter().map(|&m| (g.elem_order(m), m)).collect();
        candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut tried = g.empty_mask();
        for (n, c) in candidates {
            if tried.contains(c as usize) {
                continue;
            }
            let cyc = g.subgroup(&[c]);
            let mut p = c;
            for k in 1..=n {
                if crate::perm::gcd(k as u128, n as u128) == 1 {
                    tried.insert(p as usize);
                }
                p = g.mul(p, c);
            }
            if !self.generators().iter().all(|&x| cyc.contains(g.conj(c, x))) {
                continue;
            }
            let index = self.order() / cyc.order();
            if let Some(y) = self
                .members()
                .iter()
                .copied()
                .find(|&y| coset_order(g, &cyc, y, index) == index)
            {
                return Some(MetacyclicWitness {
                    normal_generator: c,
                    quotient_generator: y,
                    normal_order: n as usize,
                });
            }
        }
        None
    }

    pub fn is_metacyclic(&self) -> bool {
        self.metacyclic_witness().is_some()
    }
}

impl PermGroup {
    pub fn is_metacyclic(&self) -> bool {
        self.whole().is_metacyclic()
    }
}

/// Smallest `k ≥ 1` with `y^k ∈ n`, giving up past `limit`.
fn coset_order(g: &PermGroup, n: &Subgroup<'_>, y: ElemId, limit: usize) -> usize {
    let mut t = y;
    for k in 1..=limit {
        if n.contains(t) {
            return k;
        }
        t = g.mul(t, y);
    }
    limit + 1
}
