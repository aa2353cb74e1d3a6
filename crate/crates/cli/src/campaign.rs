//! Campaign planning and execution: which statements run on which corpus
//! groups at which levels, fanned out per group and joined back in
//! declaration order so the report is deterministic regardless of
//! parallelism.

use gstar_core::verify::{
    baumslag_wiegold_verdict, counterexample_a5_verdict, counterexample_s3_verdict,
    delta1_corollary_verdict, invstar_check, lemma_delta_fitting_verdict,
    prop_gamma_residual_verdict, theorem_a_verdict, theorem_b_verdict,
    thm_fitting_delta_verdict, thm_pi_elements_verdict,
};
use gstar_core::{CorpusEntry, GroupTable, StatementId, Tag, Verdict};
use rayon::prelude::*;

/// Upper bound on the projected pair work one `invstar` check may spend.
const INVSTAR_PAIR_BUDGET: usize = 100_000_000;

pub struct Plan {
    pub statements: Vec<StatementId>,
    pub k_min: usize,
    pub k_max: usize,
    pub entries: Vec<CorpusEntry>,
}

/// π ⊆ π(G) with |π| ≤ 2, in deterministic order: ∅, singletons, pairs.
fn pi_subsets(primes: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for (i, &p) in primes.iter().enumerate() {
        out.push(vec![p]);
        for &q in &primes[i + 1..] {
            out.push(vec![p, q]);
        }
    }
    out
}

fn ks(plan: &Plan, min: usize) -> Vec<usize> {
    (plan.k_min.max(min)..=plan.k_max).collect()
}

fn group_verdicts(plan: &Plan, entry: &CorpusEntry) -> Vec<Verdict> {
    let table = match entry.build() {
        Ok(t) => t,
        Err(e) => {
            return plan
                .statements
                .iter()
                .map(|&s| Verdict::skipped(&entry.name, s, &format!("group build failed: {e}")))
                .collect();
        }
    };
    let mut out = Vec::new();
    for &statement in &plan.statements {
        let produced = statement_verdicts(plan, entry, &table, statement);
        out.extend(produced);
    }
    out
}

fn statement_verdicts(
    plan: &Plan,
    entry: &CorpusEntry,
    g: &GroupTable,
    statement: StatementId,
) -> Vec<Verdict> {
    let name = &entry.name;
    let wrap = |r: gstar_core::Result<Verdict>| -> Verdict {
        r.unwrap_or_else(|e| Verdict::skipped(name, statement, &e.to_string()))
    };
    match statement {
        StatementId::TheoremA => ks(plan, 2)
            .into_iter()
            .map(|k| wrap(theorem_a_verdict(name, g, k)))
            .collect(),
        StatementId::TheoremB => ks(plan, 1)
            .into_iter()
            .map(|k| wrap(theorem_b_verdict(name, g, k)))
            .collect(),
        StatementId::Delta1Corollary => vec![wrap(delta1_corollary_verdict(name, g))],
        StatementId::PropGammaResidual => ks(plan, 2)
            .into_iter()
            .map(|k| wrap(prop_gamma_residual_verdict(name, g, k)))
            .collect(),
        StatementId::LemmaDeltaFitting => ks(plan, 0)
            .into_iter()
            .map(|k| wrap(lemma_delta_fitting_verdict(name, g, k)))
            .collect(),
        StatementId::ThmFittingDelta => ks(plan, 1)
            .into_iter()
            .map(|k| wrap(thm_fitting_delta_verdict(name, g, k)))
            .collect(),
        StatementId::ThmPiElements => {
            let subsets = pi_subsets(&g.group_primes());
            ks(plan, 1)
                .into_iter()
                .flat_map(|k| {
                    subsets
                        .iter()
                        .map(move |pi| (k, pi.clone()))
                        .collect::<Vec<_>>()
                })
                .map(|(k, pi)| wrap(thm_pi_elements_verdict(name, g, k, &pi)))
                .collect()
        }
        StatementId::BaumslagWiegold => vec![wrap(baumslag_wiegold_verdict(name, g))],
        StatementId::CounterexampleS3 => {
            if name == "S3" {
                vec![wrap(counterexample_s3_verdict(name, g))]
            } else {
                vec![]
            }
        }
        StatementId::CounterexampleA5 => {
            if name == "A5" {
                vec![wrap(counterexample_a5_verdict(name, g))]
            } else {
                vec![]
            }
        }
        StatementId::Invstar => {
            if entry.tags.contains(&Tag::MinimalSimple) {
                vec![wrap(invstar_check(name, g, plan.k_max, INVSTAR_PAIR_BUDGET))]
            } else {
                vec![]
            }
        }
    }
}

/// Runs the whole plan; verdicts come back grouped by statement in
/// declaration order, groups in corpus order within each statement.
pub fn run(plan: &Plan) -> Vec<Verdict> {
    let per_group: Vec<Vec<Verdict>> = plan
        .entries
        .par_iter()
        .map(|entry| group_verdicts(plan, entry))
        .collect();
    let mut by_statement: Vec<Verdict> = Vec::new();
    for &statement in &plan.statements {
        for group in &per_group {
            by_statement.extend(group.iter().filter(|v| v.statement == statement).cloned());
        }
    }
    by_statement
}
