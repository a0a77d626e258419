use super::{prime_divisors, ElemId, PermGroup, Subgroup};
use crate::error::{Error, Result};

impl PermGroup {
    /// Frattini subgroup of a 2-group: the subgroup generated by all squares
    /// and commutators.
    pub fn frattini_2group(&self) -> Result<Subgroup<'_>> {
        if !self.order().is_power_of_two() {
            return Err(Error::precondition(format!(
                "order {} is not a power of 2",
                self.order()
            )));
        }
        let squares = self.ids().map(|e| self.mul(e, e));
        let gens = self.generator_ids();
        let commutators: Vec<ElemId> = gens
            .iter()
            .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        // squares already generate Φ in a 2-group; the generator
        // commutators only make the construction literal
        let phi = self.generated_greedy(squares.chain(commutators));
        debug_assert!(phi.is_normal());
        Ok(phi)
    }

    /// A Sylow `p`-subgroup, grown one factor of `p` at a time: at each step
    /// the smallest-id element of `N(P)` whose coset order in `N(P)/P` is
    /// divisible by `p` is raised to an element of order `p` modulo `P` and
    /// adjoined. Returns the trivial subgroup when `p` does not divide `|G|`.
    pub fn sylow_subgroup(&self, p: usize) -> Subgroup<'_> {
        let mut target = 1;
        let mut n = self.order();
        while p > 1 && n.is_multiple_of(p) {
            n /= p;
            target *= p;
        }
        let mut sylow = self.trivial();
        while sylow.order() < target {
            let norm = self.normalizer(&sylow);
            let y = norm
                .members()
                .iter()
                .find_map(|&x| {
                    let k = coset_order(self, &sylow, x);
                    k.is_multiple_of(p).then(|| self.pow(x, (k / p) as u64))
                })
                .expect("Sylow's theorem: p divides [N(P):P] while P is not Sylow");
            sylow = sylow.extend(y);
        }
        sylow
    }

    /// Every Sylow subgroup is metacyclic.
    pub fn is_sylow_metacyclic(&self) -> bool {
        prime_divisors(self.order())
            .into_iter()
            .all(|p| self.sylow_subgroup(p).is_metacyclic())
    }
}

/// Smallest `k ≥ 1` with `x^k ∈ h`.
fn coset_order(g: &PermGroup, h: &Subgroup<'_>, x: ElemId) -> usize {
    let mut t = x;
    let mut k = 1;
    while !h.contains(t) {
        t = g.mul(t, x);
        k += 1;
    }
    k
}
