//! The statement harness: order-multiplicativity checks and one verdict
//! operation per verified statement, each returning structured pass/fail
//! data with a counterexample witness where applicable.
//!
//! Verdict semantics by statement shape:
//! * iff statements (`theorem_a`, `theorem_b`, `delta1_corollary`,
//!   `thm_fitting_delta`, `baumslag_wiegold`): `equivalent` means the two
//!   sides agree.
//! * implication statements (`thm_pi_elements`): `equivalent` means the
//!   implication holds; `vacuous` marks a false hypothesis.
//! * subgroup-equality statements (`prop_gamma_residual`,
//!   `lemma_delta_fitting`): the sides are the two inclusions and
//!   `equivalent` means both hold.
//! * counterexample reproductions (`counterexample_s3`, `counterexample_a5`)
//!   and `invstar`: `equivalent` means the recorded facts were reproduced.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::Error;
use crate::group::{ElementSet, GroupTable};
use crate::perm::gcd;
use crate::words::WordSpec;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StatementId {
    TheoremA,
    TheoremB,
    Delta1Corollary,
    PropGammaResidual,
    LemmaDeltaFitting,
    ThmFittingDelta,
    ThmPiElements,
    BaumslagWiegold,
    CounterexampleS3,
    CounterexampleA5,
    Invstar,
}

impl StatementId {
    pub const ALL: [StatementId; 11] = [
        StatementId::TheoremA,
        StatementId::TheoremB,
        StatementId::Delta1Corollary,
        StatementId::PropGammaResidual,
        StatementId::LemmaDeltaFitting,
        StatementId::ThmFittingDelta,
        StatementId::ThmPiElements,
        StatementId::BaumslagWiegold,
        StatementId::CounterexampleS3,
        StatementId::CounterexampleA5,
        StatementId::Invstar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StatementId::TheoremA => "theorem_a",
            StatementId::TheoremB => "theorem_b",
            StatementId::Delta1Corollary => "delta1_corollary",
            StatementId::PropGammaResidual => "prop_gamma_residual",
            StatementId::LemmaDeltaFitting => "lemma_delta_fitting",
            StatementId::ThmFittingDelta => "thm_fitting_delta",
            StatementId::ThmPiElements => "thm_pi_elements",
            StatementId::BaumslagWiegold => "baumslag_wiegold",
            StatementId::CounterexampleS3 => "counterexample_s3",
            StatementId::CounterexampleA5 => "counterexample_a5",
            StatementId::Invstar => "invstar",
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatementId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StatementId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::BadStatement(s.to_string()))
    }
}

/// A coprime-order pair violating order multiplicativity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub a: String,
    pub b: String,
    pub order_a: usize,
    pub order_b: usize,
    pub order_product: usize,
}

/// Outcome of one statement check on one group.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub group_name: String,
    /// Order of the group the verdict was computed on (0 when unknown,
    /// e.g. for skipped placeholders).
    pub group_order: usize,
    pub statement: StatementId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameter_k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameter_pi: Option<Vec<u64>>,
    pub left_side: bool,
    pub right_side: bool,
    pub equivalent: bool,
    pub vacuous: bool,
    pub skipped: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// For `theorem_b`: the order condition evaluated on the raw commutator
    /// set, without taking powers. Recorded to expose the role the powers
    /// play; never part of the pass/fail decision.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left_side_unpowered: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(serialize_with = "duration_seconds")]
    pub elapsed: Duration,
}

fn duration_seconds<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl Verdict {
    fn new(group_name: &str, group_order: usize, statement: StatementId) -> Verdict {
        Verdict {
            group_name: group_name.to_string(),
            group_order,
            statement,
            parameter_k: None,
            parameter_pi: None,
            left_side: false,
            right_side: false,
            equivalent: false,
            vacuous: false,
            skipped: false,
            witness: None,
            left_side_unpowered: None,
            note: None,
            elapsed: Duration::ZERO,
        }
    }

    /// Placeholder emitted when a statement could not be evaluated.
    pub fn skipped(group_name: &str, statement: StatementId, reason: &str) -> Verdict {
        let mut v = Verdict::new(group_name, 0, statement);
        v.skipped = true;
        v.note = Some(reason.to_string());
        v
    }

    /// True for verdicts that count against the run.
    pub fn failed(&self) -> bool {
        !self.skipped && !self.equivalent
    }
}

/// Checks `|ab| = |a||b|` for every ordered pair of coprime-order members
/// of `s`, in ascending index order; returns the first violation.
pub fn order_multiplicative(g: &GroupTable, s: &ElementSet) -> Option<Witness> {
    let members: Vec<u32> = s.iter().collect();
    for &a in &members {
        let order_a = g.element_order(a);
        for &b in &members {
            let order_b = g.element_order(b);
            if gcd(order_a, order_b) != 1 {
                continue;
            }
            let order_product = g.element_order(g.mul(a, b));
            if order_product != order_a * order_b {
                return Some(emit_witness(g, a, b, order_product));
            }
        }
    }
    None
}

/// Re-derives the witness data from raw permutations before emitting it, so
/// a bad order cache can never produce a bogus counterexample.
fn emit_witness(g: &GroupTable, a: u32, b: u32, claimed_product_order: usize) -> Witness {
    let pa = g.element(a);
    let pb = g.element(b);
    let order_a = pa.order();
    let order_b = pb.order();
    let order_product = pa.compose(pb).expect("same degree").order();
    assert_eq!(order_product, claimed_product_order);
    assert_eq!(gcd(order_a, order_b), 1, "witness orders must be coprime");
    assert_ne!(order_product, order_a * order_b, "witness must violate");
    Witness {
        a: pa.cycle_string(),
        b: pb.cycle_string(),
        order_a,
        order_b,
        order_product,
    }
}

/// γ*ₖ(G) is nilpotent iff the order condition holds on γ*ₖ-commutators.
pub fn theorem_a_verdict(name: &str, g: &GroupTable, k: usize) -> Result<Verdict> {
    if k < 2 {
        return Err(Error::InvalidLevel { family: "gamma_star", k });
    }
    let start = Instant::now();
    let mut v = Verdict::new(name, g.order(), StatementId::TheoremA);
    v.parameter_k = Some(k);
    let set = g.gamma_star_set(k)?;
    let witness = order_multiplicative(g, &set);
    v.left_side = witness.is_none();
    v.witness = witness;
    v.right_side = g.is_nilpotent_of(&g.gamma_star_subgroup(k)?);
    v.equivalent = v.left_side == v.right_side;
    v.elapsed = start.elapsed();
    Ok(v)
}

/// δ*ₖ(G) is nilpotent iff the order condition holds on *powers of*
/// δ*ₖ-commutators. Also records the unpowered variant for comparison.
pub fn theorem_b_verdict(name: &str, g: &GroupTable, k: usize) -> Result<Verdict> {
    if k < 1 {
        return Err(Error::InvalidLevel { family: "delta_star", k });
    }
    let start = Instant::now();
    let mut v = Verdict::new(name, g.order(), StatementId::TheoremB);
    v.parameter_k = Some(k);
    let powered = g.delta_star_powers(k);
    let witness = order_multiplicative(g, &powered);
    v.left_side = witness.is_none();
    v.witness = witness;
    v.left_side_unpowered = Some(order_multiplicative(g, &g.delta_star_set(k)).is_none());
    v.right_side = g.is_nilpotent_of(&g.delta_star_subgroup(k));
    v.equivalent = v.left_side == v.right_side;
    v.elapsed = start.elapsed();
    Ok(v)
}

/// γ_∞(G) is nilpotent iff the order condition holds on δ*₁-commutators
/// themselves (no powers).
pub fn delta1_corollary_verdict(name: &str, g: &GroupTable) -> Result<Verdict> {
    let start = Instant::now();
    let mut v = Verdict::new(name, g.order(), StatementId::Delta1Corollary);
    v.parameter_k = Some(1);
    let witness = order_multiplicative(g, &g.delta_star_set(1));
    v.left_side = witness.is_none();
    v.witness = witness;
    v.right_side = g.is_nilpotent_of(&g.nilpotent_residual());
    v.equivalent = v.left_side == v.right_side;
    v.elapsed = start.elapsed();
    Ok(v)
}

/// γ*ₖ(G) = γ_∞(G) for k ≥ 2, as a pair of inclusions.
pub fn prop_gamma_residual_verdict(name: &str, g: &GroupTable, k: usize) -> Result<Verdict> {
    if k < 2 {
        return Err(Error::InvalidLevel { family: "gamma_star", k });
    }
    let start = Instant::now();
    let mut v = Verdict::new(name, g.order(), StatementId::PropGammaResidual);
    v.parameter_k = Some(k);
    let gamma_star = g.gamma_star_subgroup(k)?;
    let residual = g.nilpotent_residual();
    v.left_side = gamma_star.is_subset_of(&residual);
    v.right_side = residual.is_subset_of(&gamma_star);
    v.equivalent = v.left_side && v.right_side;
    v.elapsed = start.elapsed();
    Ok(v)
}

/// δ*ₖ(G) equals the k-th lower Fitting term, as a pair of inclusions.
/// Past the stabilization point the stabilized term is used.
pub fn lemma_delta_fitting_verdict(name: &str, g: &GroupTable, k: usize) -> Result<Verdict> {
    let start = Instant::now();
    let mut v = Verdict::new(name, g.order(), StatementId::LemmaDeltaFitting);
    v.parameter_k = Some(k);
    let series = g.lower_fitting_series();
    let fitting_term = &series.terms[k.min(series.terms.len() - 1)];
    let delta_star = g.delta_star_subgroup(k);
    v.left_side = delta_star.is_subset_of(fitting_term);
    v.right_side = fitting_term.is_subset_of(&delta_star);
    v.equivalent = v.left_side && v.right_side;
    v.elapsed = start.elapsed();
    Ok(v)
}

/// δ*ₖ(G) = 1 iff G is soluble with Fitting height ≤ k.
pub fn thm_fitting_delta_verdict(name: &str, g: &GroupTable, k: usize) -> Result<Verdict> {
    if k < 1 {
        return Err(Error::InvalidLevel { family: "delta_star", k });
    }
    let start = Instant::now();
    let mut v = Verdict::new(name, g.order(), StatementId::ThmFittingDelta);
    v.parameter_k = Some(k);
    v.left_side = g.delta_star_subgroup(k).is_trivial();
    v.right_side = match g.fitting_height() {
        Ok(height) => height <= k,
        Err(_) => false, // non-soluble groups have no Fitting height
    };
    v.equivalent = v.left_side == v.right_side;
    v.elapsed = start.elapsed();
    Ok(v)
}

/// If every δ*ₖ-commutator is a π-element (|π| ≤ 2), then G is soluble and
/// δ*ₖ(G) ≤ O_π(G). Vacuously true when the hypothesis fails.
pub fn thm_pi_elements_verdict(
    name: &str,
    g: &GroupTable,
    k: usize,
    pi: &[u64],
) -> Result<Verdict> {
    if k < 1 {
        return Err(Error::InvalidLevel { family: "delta_star", k });
    }
    if pi.len() > 2 {
        return Err(Error::Precondition(format!(
            "π may contain at most two primes, got {pi:?}"
        )));
    }
    let start = Instant::now();
    let mut v = Verdict::new(name, g.order(), StatementId::ThmPiElements);
    v.parameter_k = Some(k);
    v.parameter_pi = Some(pi.to_vec());
    let set = g.delta_star_set(k);
    v.left_side = set.iter().all(|x| g.is_pi_element(x, pi));
    v.right_side = g.is_soluble() && g.delta_star_subgroup(k).is_subset_of(&g.o_pi(pi));
    v.vacuous = !v.left_side;
    v.equivalent = !v.left_side || v.right_side;
    v.elapsed = start.elapsed();
    Ok(v)
}

/// G is nilpotent iff the order condition holds on all of G.
pub fn baumslag_wiegold_verdict(name: &str, g: &GroupTable) -> Result<Verdict> {
    let start = Instant::now();
    let mut v = Verdict::new(name, g.order(), StatementId::BaumslagWiegold);
    let witness = order_multiplicative(g, &g.whole_set());
    v.left_side = witness.is_none();
    v.witness = witness;
    v.right_side = g.is_nilpotent();
    v.equivalent = v.left_side == v.right_side;
    v.elapsed = start.elapsed();
    Ok(v)
}

/// Reproduces the cube-word counterexample: the nontrivial values of `x³`
/// are exactly the three involutions, yet the verbal subgroup is the whole
/// group.
pub fn counterexample_s3_verdict(name: &str, g: &GroupTable) -> Result<Verdict> {
    let start = Instant::now();
    let mut v = Verdict::new(name, g.order(), StatementId::CounterexampleS3);
    let values = g.word_values(&WordSpec::Power(3))?;
    let nontrivial: Vec<u32> = values.iter().filter(|&x| x != GroupTable::IDENTITY).collect();
    let involutions: Vec<u32> =
        (0..g.order() as u32).filter(|&x| g.element_order(x) == 2).collect();
    v.left_side = nontrivial.iter().all(|&x| g.element_order(x) == 2)
        && nontrivial == involutions
        && nontrivial.len() == 3;
    v.right_side = g.verbal_subgroup(&WordSpec::Power(3))?.len() == g.order();
    v.equivalent = v.left_side && v.right_side;
    v.elapsed = start.elapsed();
    Ok(v)
}

/// Reproduces the commutator-word counterexample: every nontrivial value of
/// `[x, y¹⁰, y¹⁰, y¹⁰]` has order 2, yet the verbal subgroup is the whole
/// group.
pub fn counterexample_a5_verdict(name: &str, g: &GroupTable) -> Result<Verdict> {
    let start = Instant::now();
    let mut v = Verdict::new(name, g.order(), StatementId::CounterexampleA5);
    let values = g.word_values(&WordSpec::A5Word)?;
    let nontrivial: Vec<u32> = values.iter().filter(|&x| x != GroupTable::IDENTITY).collect();
    v.left_side =
        !nontrivial.is_empty() && nontrivial.iter().all(|&x| g.element_order(x) == 2);
    v.right_side = g.verbal_subgroup(&WordSpec::A5Word)?.len() == g.order();
    v.equivalent = v.left_side && v.right_side;
    v.elapsed = start.elapsed();
    Ok(v)
}

/// Every involution is a δ*ₙ-commutator, for each n ≤ n_max. Intended for
/// minimal simple groups; the caller enforces that corpus flag. Stops early
/// with a partial verdict when the projected pair work exceeds `pair_budget`.
pub fn invstar_check(
    name: &str,
    g: &GroupTable,
    n_max: usize,
    pair_budget: usize,
) -> Result<Verdict> {
    let start = Instant::now();
    let mut v = Verdict::new(name, g.order(), StatementId::Invstar);
    let involutions: Vec<u32> =
        (0..g.order() as u32).filter(|&x| g.element_order(x) == 2).collect();
    let per_level = g.order() * g.order();
    let mut spent = 0usize;
    let mut verified: Option<usize> = None;
    let mut all_present = true;
    for n in 0..=n_max {
        if n > 0 {
            spent = spent.saturating_add(per_level);
            if spent > pair_budget {
                v.note = Some(format!(
                    "pair budget {pair_budget} exhausted; verified n ≤ {}",
                    n - 1
                ));
                break;
            }
        }
        let set = g.delta_star_set(n);
        if !involutions.iter().all(|&x| set.contains(x)) {
            all_present = false;
            v.note = Some(format!("missing involution at n = {n}"));
            verified = Some(n);
            break;
        }
        verified = Some(n);
    }
    v.parameter_k = verified;
    v.left_side = true; // hypothesis: corpus-flagged minimal simple group
    v.right_side = all_present;
    v.equivalent = all_present && verified == Some(n_max);
    if v.note.is_some() && all_present {
        // budget stopped us early: partial, not failed
        v.equivalent = false;
        v.skipped = true;
    }
    v.elapsed = start.elapsed();
    Ok(v)
}
