//! Value sets of ordinary (non-coprime) words: lower-central words γₖ,
//! Engel words εₖ, power words xᵐ, and the degree-5 alternating-group
//! counterexample word `[x, y¹⁰, y¹⁰, y¹⁰]`.
//!
//! Only these fixed word shapes are supported; there is no general
//! free-group word evaluator.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::group::{ElementSet, GroupTable};
use crate::Result;

/// Pair-enumeration budget for the two-variable words.
pub const WORD_PAIR_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WordSpec {
    /// `γ_k = [x_1, .., x_k]`, k ≥ 1.
    LowerCentral(usize),
    /// `ε_k = [x, y, .., y]` with k copies of `y`, k ≥ 1.
    Engel(usize),
    /// `x^m`, m ≥ 1.
    Power(usize),
    /// `[x, y¹⁰, y¹⁰, y¹⁰]`.
    A5Word,
}

impl WordSpec {
    /// Number of free variables.
    pub fn arity(&self) -> usize {
        match self {
            WordSpec::LowerCentral(k) => *k,
            WordSpec::Engel(_) => 2,
            WordSpec::Power(_) => 1,
            WordSpec::A5Word => 2,
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match self {
            WordSpec::LowerCentral(k) | WordSpec::Engel(k) | WordSpec::Power(k) => *k >= 1,
            WordSpec::A5Word => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadWordSpec(self.to_string()))
        }
    }
}

impl fmt::Display for WordSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordSpec::LowerCentral(k) => write!(f, "gamma:{k}"),
            WordSpec::Engel(k) => write!(f, "engel:{k}"),
            WordSpec::Power(m) => write!(f, "pow:{m}"),
            WordSpec::A5Word => write!(f, "a5word"),
        }
    }
}

impl FromStr for WordSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadWordSpec(s.to_string());
        let spec = if s == "a5word" {
            WordSpec::A5Word
        } else if let Some(k) = s.strip_prefix("gamma:") {
            WordSpec::LowerCentral(k.parse().map_err(|_| bad())?)
        } else if let Some(k) = s.strip_prefix("engel:") {
            WordSpec::Engel(k.parse().map_err(|_| bad())?)
        } else if let Some(m) = s.strip_prefix("pow:") {
            WordSpec::Power(m.parse().map_err(|_| bad())?)
        } else {
            return Err(bad());
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl GroupTable {
    /// The exact set of values of `w` in this group.
    pub fn word_values(&self, w: &WordSpec) -> Result<ElementSet> {
        w.validate()?;
        let n = self.order() as u32;
        match *w {
            WordSpec::Power(m) => {
                let mut out = self.empty_set();
                for g in 0..n {
                    out.insert(self.power(g, m as i64));
                }
                Ok(out)
            }
            WordSpec::LowerCentral(k) => {
                let mut values = self.whole_set();
                for _ in 1..k {
                    let mut next = self.empty_set();
                    for v in values.iter() {
                        for g in 0..n {
                            next.insert(self.commutator(v, g));
                        }
                    }
                    values = next;
                }
                Ok(values)
            }
            WordSpec::Engel(k) => {
                self.check_pair_budget()?;
                let mut out = self.empty_set();
                for y in 0..n {
                    for x in 0..n {
                        let mut v = self.commutator(x, y);
                        for _ in 1..k {
                            v = self.commutator(v, y);
                        }
                        out.insert(v);
                    }
                }
                Ok(out)
            }
            WordSpec::A5Word => {
                self.check_pair_budget()?;
                let mut out = self.empty_set();
                for y in 0..n {
                    let z = self.power(y, 10);
                    for x in 0..n {
                        let v = self.commutator(self.commutator(self.commutator(x, z), z), z);
                        out.insert(v);
                    }
                }
                Ok(out)
            }
        }
    }

    /// `w(G)`: the subgroup generated by all `w`-values.
    pub fn verbal_subgroup(&self, w: &WordSpec) -> Result<ElementSet> {
        let values = self.word_values(w)?;
        let sub = self.subgroup_generated(&values);
        debug_assert!(self.is_normal(&sub), "verbal subgroups are normal");
        Ok(sub)
    }

    fn check_pair_budget(&self) -> Result<()> {
        let needed = self.order() * self.order();
        if needed > WORD_PAIR_BUDGET {
            Err(Error::WordBudget {
                needed,
                budget: WORD_PAIR_BUDGET,
            })
        } else {
            Ok(())
        }
    }
}
