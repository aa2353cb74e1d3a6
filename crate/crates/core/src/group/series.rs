//! Descending subgroup series: lower central, derived, and lower Fitting.
//!
//! Every series iterates until a term repeats (set equality), not until it
//! is trivial, so the iteration also terminates on non-nilpotent and
//! non-soluble groups; the repeated term is dropped.

use super::{ElementSet, GroupTable};
use crate::error::Error;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
    LowerFitting,
}

/// A stabilized descending chain of subgroups.
#[derive(Clone)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// `terms[0]` is the whole group (or the subgroup the series started
    /// from); each later term is contained in the previous one.
    pub terms: Vec<ElementSet>,
    /// True once the iteration hit a repeated term; always the case for
    /// finite groups when the series is run to completion.
    pub stabilized: bool,
    /// Index of the first trivial term, when the series reaches 1: the
    /// nilpotency class, derived length, or Fitting height respectively.
    pub length_to_trivial: Option<usize>,
}

impl SeriesReport {
    pub fn terminal(&self) -> &ElementSet {
        self.terms.last().expect("series has at least one term")
    }

    pub fn reaches_trivial(&self) -> bool {
        self.length_to_trivial.is_some()
    }

    pub fn term_orders(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.len()).collect()
    }
}

fn descend(
    kind: SeriesKind,
    start: ElementSet,
    mut step: impl FnMut(&ElementSet) -> ElementSet,
) -> SeriesReport {
    let mut terms = vec![start];
    loop {
        let next = step(terms.last().unwrap());
        if &next == terms.last().unwrap() {
            break;
        }
        terms.push(next);
    }
    let length_to_trivial = terms.iter().position(|t| t.is_trivial());
    SeriesReport {
        kind,
        terms,
        stabilized: true,
        length_to_trivial,
    }
}

impl GroupTable {
    /// `γ_1 = H, γ_{i+1} = [γ_i, H]` for a subgroup `h`, until repetition.
    pub fn lower_central_series_of(&self, h: &ElementSet) -> SeriesReport {
        self.check_parent(h);
        descend(SeriesKind::LowerCentral, h.clone(), |last| {
            self.commutator_subgroup(last, h)
        })
    }

    pub fn lower_central_series(&self) -> SeriesReport {
        self.lower_central_series_of(&self.whole_set())
    }

    /// `H ⊇ H′ ⊇ H″ ⊇ …` until repetition.
    pub fn derived_series_of(&self, h: &ElementSet) -> SeriesReport {
        self.check_parent(h);
        descend(SeriesKind::Derived, h.clone(), |last| {
            self.commutator_subgroup(last, last)
        })
    }

    pub fn derived_series(&self) -> SeriesReport {
        self.derived_series_of(&self.whole_set())
    }

    /// Stabilized term of the lower central series of `h`.
    pub fn nilpotent_residual_of(&self, h: &ElementSet) -> ElementSet {
        self.lower_central_series_of(h).terminal().clone()
    }

    pub fn nilpotent_residual(&self) -> ElementSet {
        self.nilpotent_residual_of(&self.whole_set())
    }

    pub fn is_nilpotent_of(&self, h: &ElementSet) -> bool {
        self.nilpotent_residual_of(h).is_trivial()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_nilpotent_of(&self.whole_set())
    }

    pub fn is_soluble_of(&self, h: &ElementSet) -> bool {
        self.derived_series_of(h).terminal().is_trivial()
    }

    pub fn is_soluble(&self) -> bool {
        self.is_soluble_of(&self.whole_set())
    }

    pub fn is_abelian(&self) -> bool {
        self.generator_indices()
            .iter()
            .all(|&a| self.generator_indices().iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `N_0 = G, N_{i+1} = γ_∞(N_i)` until repetition.
    pub fn lower_fitting_series(&self) -> SeriesReport {
        descend(SeriesKind::LowerFitting, self.whole_set(), |last| {
            self.nilpotent_residual_of(last)
        })
    }

    /// Length of the lower Fitting series; errors on non-soluble groups.
    pub fn fitting_height(&self) -> Result<usize> {
        if !self.is_soluble() {
            return Err(Error::NotSoluble);
        }
        Ok(self
            .lower_fitting_series()
            .length_to_trivial
            .expect("soluble groups have γ_∞ iterating to 1"))
    }
}
