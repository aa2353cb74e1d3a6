//! Conjugacy-class driven structure: Fitting subgroup, O_π, simplicity.
//!
//! The normal closure of a single element depends only on its conjugacy
//! class, so the class decomposition and the per-class closures are computed
//! once per group and reused by `fitting_subgroup`, `o_pi` and `is_simple`.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::{factor_primes, ElementSet, GroupTable};

pub(crate) struct ClassData {
    pub(crate) class_of: Vec<u32>,
    pub(crate) members: Vec<Vec<u32>>,
    /// Normal closure of (any element of) each class.
    closures: Vec<ElementSet>,
    closure_nilpotent: Vec<bool>,
    /// Primes dividing the order of each class closure.
    closure_primes: Vec<Vec<u64>>,
}

impl GroupTable {
    pub(crate) fn class_data(&self) -> &ClassData {
        self.structure.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![u32::MAX; n];
            let mut members: Vec<Vec<u32>> = Vec::new();
            for start in 0..n as u32 {
                if class_of[start as usize] != u32::MAX {
                    continue;
                }
                let class_id = members.len() as u32;
                let mut orbit = vec![start];
                class_of[start as usize] = class_id;
                let mut cursor = 0;
                while cursor < orbit.len() {
                    let x = orbit[cursor];
                    cursor += 1;
                    for &g in self.generator_indices() {
                        let y = self.conjugate(x, g);
                        if class_of[y as usize] == u32::MAX {
                            class_of[y as usize] = class_id;
                            orbit.push(y);
                        }
                    }
                }
                members.push(orbit);
            }

            let closures: Vec<ElementSet> = members
                .iter()
                .map(|class| {
                    let mut seed = self.empty_set();
                    for &m in class {
                        seed.bits.insert(m as usize);
                    }
                    self.subgroup_generated(&seed)
                })
                .collect();

            // distinct closures are few; dedupe the nilpotency checks
            let mut verdicts: HashMap<FixedBitSet, bool> = HashMap::new();
            let closure_nilpotent = closures
                .iter()
                .map(|h| {
                    *verdicts
                        .entry(h.bits.clone())
                        .or_insert_with(|| self.is_nilpotent_of(h))
                })
                .collect();
            let closure_primes = closures
                .iter()
                .map(|h| factor_primes(h.len() as u64))
                .collect();

            ClassData {
                class_of,
                members,
                closures,
                closure_nilpotent,
                closure_primes,
            }
        })
    }

    /// Conjugacy class of an element, as a set.
    pub fn conjugacy_class(&self, x: u32) -> ElementSet {
        let data = self.class_data();
        let mut out = self.empty_set();
        for &m in &data.members[data.class_of[x as usize] as usize] {
            out.bits.insert(m as usize);
        }
        out
    }

    /// `F(G)`: the elements whose normal closure is nilpotent, which form
    /// the largest nilpotent normal subgroup.
    pub fn fitting_subgroup(&self) -> ElementSet {
        let data = self.class_data();
        let mut out = self.empty_set();
        for (class, keep) in data.members.iter().zip(&data.closure_nilpotent) {
            if *keep {
                for &m in class {
                    out.bits.insert(m as usize);
                }
            }
        }
        out.mark_subgroup()
    }

    /// `O_π(G)`: the elements whose normal closure is a π-group, which form
    /// the largest normal π-subgroup.
    pub fn o_pi(&self, pi: &[u64]) -> ElementSet {
        let data = self.class_data();
        let mut out = self.empty_set();
        for (class, primes) in data.members.iter().zip(&data.closure_primes) {
            if primes.iter().all(|p| pi.contains(p)) {
                for &m in class {
                    out.bits.insert(m as usize);
                }
            }
        }
        out.mark_subgroup()
    }

    /// Nontrivial, and no non-identity element has a proper normal closure.
    pub fn is_simple(&self) -> bool {
        if self.order() == 1 {
            return false;
        }
        let data = self.class_data();
        data.members
            .iter()
            .zip(&data.closures)
            .all(|(class, closure)| {
                class == &[GroupTable::IDENTITY] || closure.len() == self.order()
            })
    }

    /// Perfect: `G = [G, G]`.
    pub fn is_perfect(&self) -> bool {
        let whole = self.whole_set();
        self.commutator_subgroup(&whole, &whole).len() == self.order()
    }
}
