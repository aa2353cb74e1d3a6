//! Coprime commutator calculus: the recursive γ*ₖ and δ*ₖ value sets, their
//! power closures, and the subgroups they generate.
//!
//! Every element is a γ*₁- and a δ*₀-commutator. For k ≥ 2 a γ*ₖ-commutator
//! is `[a, b]` with `a` a power of a γ*ₖ₋₁-commutator, `b` any group element
//! and gcd(|a|, |b|) = 1. For k ≥ 1 a δ*ₖ-commutator is `[a, b]` with both
//! `a` and `b` powers of δ*ₖ₋₁-commutators of coprime orders. The asymmetry
//! (γ* draws `b` from the whole group, δ* from the same power-closed pool)
//! is essential and deliberately preserved here.
//!
//! Chains are memoized per group and extended incrementally, so asking for
//! level 3 reuses levels ≤ 2.

use std::fmt;

use crate::error::Error;
use crate::group::{ElementSet, GroupTable};
use crate::perm::gcd;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoprimeFamily {
    GammaStar,
    DeltaStar,
}

impl CoprimeFamily {
    /// Smallest valid level: γ* starts at 1, δ* at 0.
    pub fn first_level(self) -> usize {
        match self {
            CoprimeFamily::GammaStar => 1,
            CoprimeFamily::DeltaStar => 0,
        }
    }

    fn name(self) -> &'static str {
        match self {
            CoprimeFamily::GammaStar => "gamma_star",
            CoprimeFamily::DeltaStar => "delta_star",
        }
    }
}

impl fmt::Display for CoprimeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A snapshot of one family's levels for one group: `levels[i]` is the set
/// of commutators at level `first_level + i`, and `power_closures[i]` the
/// set of all powers of those.
#[derive(Clone)]
pub struct CoprimeSetChain {
    pub family: CoprimeFamily,
    pub levels: Vec<ElementSet>,
    pub power_closures: Vec<ElementSet>,
}

#[derive(Default)]
pub(crate) struct CoprimeMemo {
    gamma: ChainData,
    delta: ChainData,
}

#[derive(Default)]
struct ChainData {
    levels: Vec<ElementSet>,
    closures: Vec<ElementSet>,
}

impl GroupTable {
    /// Union of the cyclic subgroups generated by the members of `s`.
    pub fn power_closure(&self, s: &ElementSet) -> ElementSet {
        self.check_parent(s);
        let mut out = self.trivial_set();
        for x in s.iter() {
            let mut t = x;
            while t != Self::IDENTITY {
                out.insert(t);
                t = self.mul(t, x);
            }
        }
        out
    }

    /// The set of γ*ₖ-commutators, k ≥ 1.
    pub fn gamma_star_set(&self, k: usize) -> Result<ElementSet> {
        if k < 1 {
            return Err(Error::InvalidLevel {
                family: "gamma_star",
                k,
            });
        }
        Ok(self.chain_level(CoprimeFamily::GammaStar, k, false))
    }

    /// The set of δ*ₖ-commutators, k ≥ 0.
    pub fn delta_star_set(&self, k: usize) -> ElementSet {
        self.chain_level(CoprimeFamily::DeltaStar, k, false)
    }

    /// All powers of γ*ₖ-commutators.
    pub fn gamma_star_powers(&self, k: usize) -> Result<ElementSet> {
        if k < 1 {
            return Err(Error::InvalidLevel {
                family: "gamma_star",
                k,
            });
        }
        Ok(self.chain_level(CoprimeFamily::GammaStar, k, true))
    }

    /// All powers of δ*ₖ-commutators.
    pub fn delta_star_powers(&self, k: usize) -> ElementSet {
        self.chain_level(CoprimeFamily::DeltaStar, k, true)
    }

    /// γ*ₖ(G): the subgroup generated by all γ*ₖ-commutators.
    pub fn gamma_star_subgroup(&self, k: usize) -> Result<ElementSet> {
        let set = self.gamma_star_set(k)?;
        let sub = self.subgroup_generated(&set);
        debug_assert!(self.is_normal(&sub), "γ*ₖ(G) must be normal");
        Ok(sub)
    }

    /// δ*ₖ(G): the subgroup generated by all δ*ₖ-commutators.
    pub fn delta_star_subgroup(&self, k: usize) -> ElementSet {
        let set = self.delta_star_set(k);
        let sub = self.subgroup_generated(&set);
        debug_assert!(self.is_normal(&sub), "δ*ₖ(G) must be normal");
        sub
    }

    /// Snapshot of all levels of a family up to `k` inclusive.
    pub fn coprime_chain(&self, family: CoprimeFamily, k: usize) -> Result<CoprimeSetChain> {
        if k < family.first_level() {
            return Err(Error::InvalidLevel {
                family: match family {
                    CoprimeFamily::GammaStar => "gamma_star",
                    CoprimeFamily::DeltaStar => "delta_star",
                },
                k,
            });
        }
        self.chain_level(family, k, false);
        let memo = self.coprime.lock().unwrap();
        let data = match family {
            CoprimeFamily::GammaStar => &memo.gamma,
            CoprimeFamily::DeltaStar => &memo.delta,
        };
        let upto = k + 1 - family.first_level();
        Ok(CoprimeSetChain {
            family,
            levels: data.levels[..upto].to_vec(),
            power_closures: data.closures[..upto].to_vec(),
        })
    }

    fn chain_level(&self, family: CoprimeFamily, k: usize, powers: bool) -> ElementSet {
        let mut memo = self.coprime.lock().unwrap();
        let data = match family {
            CoprimeFamily::GammaStar => &mut memo.gamma,
            CoprimeFamily::DeltaStar => &mut memo.delta,
        };
        if data.levels.is_empty() {
            let whole = self.whole_set();
            data.closures.push(self.power_closure(&whole));
            data.levels.push(whole);
        }
        let slot = k - family.first_level();
        while data.levels.len() <= slot {
            let pool = data.closures.last().unwrap().clone();
            let level = self.coprime_level_from_pool(family, &pool);
            data.closures.push(self.power_closure(&level));
            data.levels.push(level);
        }
        if powers {
            data.closures[slot].clone()
        } else {
            data.levels[slot].clone()
        }
    }

    /// One recursion step: commutators `[a, b]` of coprime orders with `a`
    /// from the power-closed pool and `b` from the whole group (γ*) or from
    /// the same pool (δ*).
    fn coprime_level_from_pool(&self, family: CoprimeFamily, pool: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        out.insert(Self::IDENTITY); // a = b = 1 is an admissible coprime pair
        let pool_members: Vec<u32> = pool.iter().collect();
        let b_members: Vec<u32> = match family {
            CoprimeFamily::GammaStar => (0..self.order() as u32).collect(),
            CoprimeFamily::DeltaStar => pool_members.clone(),
        };
        for &a in &pool_members {
            if a == Self::IDENTITY {
                continue; // contributes only [1, b] = 1
            }
            let order_a = self.element_order(a);
            for &b in &b_members {
                if b == Self::IDENTITY {
                    continue;
                }
                if gcd(order_a, self.element_order(b)) != 1 {
                    continue;
                }
                out.insert(self.commutator(a, b));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn p(text: &str, degree: usize) -> Permutation {
        Permutation::parse_cycles(text, degree).unwrap()
    }

    fn c6() -> GroupTable {
        GroupTable::close(6, &[p("(1 2 3 4 5 6)", 6)]).unwrap()
    }

    fn s3() -> GroupTable {
        GroupTable::close(3, &[p("(1 2)", 3), p("(1 2 3)", 3)]).unwrap()
    }

    fn s4() -> GroupTable {
        GroupTable::close(4, &[p("(1 2)", 4), p("(1 2 3 4)", 4)]).unwrap()
    }

    fn a5() -> GroupTable {
        GroupTable::close(5, &[p("(1 2 3)", 5), p("(1 2 3 4 5)", 5)]).unwrap()
    }

    #[test]
    fn power_closure_of_identity() {
        let g = s3();
        let s = g.trivial_set();
        assert!(g.power_closure(&s).is_trivial());
    }

    #[test]
    fn power_closure_of_a_six_cycle_is_the_cyclic_group() {
        let g = c6();
        let six_cycle = g.index_of(&p("(1 2 3 4 5 6)", 6)).unwrap();
        assert_eq!(g.power_closure(&g.set_of(&[six_cycle])).len(), 6);
    }

    #[test]
    fn power_closure_of_power_closed_set_is_itself() {
        let g = s3();
        let c = g.index_of(&p("(1 2 3)", 3)).unwrap();
        let a3 = g.subgroup_generated(&g.set_of(&[c]));
        assert_eq!(g.power_closure(&a3), a3);
    }

    #[test]
    fn level_one_gamma_star_is_everything() {
        let g = s4();
        assert_eq!(g.gamma_star_set(1).unwrap().len(), 24);
        assert_eq!(g.delta_star_set(0).len(), 24);
    }

    #[test]
    fn gamma_star_rejects_level_zero() {
        assert!(matches!(
            s3().gamma_star_set(0),
            Err(Error::InvalidLevel { k: 0, .. })
        ));
    }

    #[test]
    fn gamma_star_two_of_abelian_group_is_trivial() {
        assert!(c6().gamma_star_set(2).unwrap().is_trivial());
    }

    #[test]
    fn gamma_star_two_of_s3_is_the_rotation_subgroup() {
        let g = s3();
        let set = g.gamma_star_set(2).unwrap();
        assert_eq!(set.len(), 3);
        let c = g.index_of(&p("(1 2 3)", 3)).unwrap();
        assert_eq!(set, g.subgroup_generated(&g.set_of(&[c])));
    }

    #[test]
    fn delta_star_one_coincides_with_gamma_star_two() {
        let g = s3();
        assert_eq!(g.delta_star_set(1), g.gamma_star_set(2).unwrap());
        let h = s4();
        assert_eq!(h.delta_star_set(1), h.gamma_star_set(2).unwrap());
    }

    #[test]
    fn delta_star_two_of_s4_generates_klein_four() {
        let g = s4();
        let sub = g.delta_star_subgroup(2);
        assert_eq!(sub.len(), 4);
        assert_eq!(sub, g.lower_fitting_series().terms[2]);
    }

    #[test]
    fn delta_star_subgroup_of_s4_level_one_is_a4() {
        let g = s4();
        let sub = g.delta_star_subgroup(1);
        assert_eq!(sub.len(), 12);
        assert_eq!(sub, g.nilpotent_residual());
    }

    #[test]
    fn gamma_star_subgroup_of_a5_is_a5() {
        let g = a5();
        assert_eq!(g.gamma_star_subgroup(2).unwrap().len(), 60);
    }

    #[test]
    fn delta_star_two_of_s3_is_trivial() {
        assert!(s3().delta_star_subgroup(2).is_trivial());
    }

    #[test]
    fn identity_is_in_every_level() {
        let g = s4();
        for k in 0..4 {
            assert!(g.delta_star_set(k).contains(GroupTable::IDENTITY));
        }
        for k in 1..4 {
            assert!(g.gamma_star_set(k).unwrap().contains(GroupTable::IDENTITY));
        }
    }

    #[test]
    fn chain_snapshot_has_all_levels() {
        let g = s4();
        let chain = g.coprime_chain(CoprimeFamily::DeltaStar, 2).unwrap();
        assert_eq!(chain.levels.len(), 3);
        assert_eq!(chain.power_closures.len(), 3);
        assert_eq!(chain.levels[0].len(), 24);
        for (level, closure) in chain.levels.iter().zip(&chain.power_closures) {
            assert!(level.is_subset_of(closure));
        }
    }

    #[test]
    fn memoization_returns_identical_sets() {
        let g = s4();
        let first = g.delta_star_set(2);
        let second = g.delta_star_set(2);
        assert_eq!(first, second);
    }
}
