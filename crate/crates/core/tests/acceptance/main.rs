//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Run with `cargo test -p gstar-core --test acceptance -- --nocapture`
//! to see the lines for passing criteria too.

mod oracle;

use std::sync::OnceLock;

use gstar_core::verify::{
    baumslag_wiegold_verdict, counterexample_a5_verdict, counterexample_s3_verdict,
    invstar_check, lemma_delta_fitting_verdict, prop_gamma_residual_verdict,
    theorem_a_verdict, theorem_b_verdict, thm_fitting_delta_verdict,
    thm_pi_elements_verdict,
};
use gstar_core::{builtin_corpus, CorpusEntry, GroupTable, Permutation, Tag, WordSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn corpus() -> &'static [(CorpusEntry, GroupTable)] {
    static CORPUS: OnceLock<Vec<(CorpusEntry, GroupTable)>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        builtin_corpus()
            .into_iter()
            .map(|entry| {
                let table = entry.build().expect("builtin corpus must build");
                (entry, table)
            })
            .collect()
    })
}

fn group(name: &str) -> &'static GroupTable {
    &corpus()
        .iter()
        .find(|(e, _)| e.name == name)
        .unwrap_or_else(|| panic!("missing corpus entry {name}"))
        .1
}

fn report(criterion: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(info) => println!("acceptance {criterion}: PASS ({info})"),
        Err(msg) => {
            println!("acceptance {criterion}: FAIL ({msg})");
            panic!("{criterion} failed: {msg}");
        }
    }
}

/// Re-derives an emitted witness from its cycle strings alone.
fn witness_is_valid(g: &GroupTable, w: &gstar_core::Witness) -> bool {
    let a = Permutation::parse_cycles(&w.a, g.degree()).unwrap();
    let b = Permutation::parse_cycles(&w.b, g.degree()).unwrap();
    let prod = a.compose(&b).unwrap();
    a.order() == w.order_a
        && b.order() == w.order_b
        && prod.order() == w.order_product
        && gcd(w.order_a, w.order_b) == 1
        && w.order_product != w.order_a * w.order_b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn criterion_01_theorem_a_suite() {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (entry, g) in corpus() {
        if g.order() > 1000 {
            continue;
        }
        for k in [2, 3] {
            let v = theorem_a_verdict(&entry.name, g, k).unwrap();
            checked += 1;
            if !v.equivalent {
                failures.push(format!("{} k={k}", entry.name));
            }
            if entry.name == "S4" && k == 2 {
                assert!(!v.left_side && !v.right_side, "S4 is the designed negative case");
                assert!(witness_is_valid(g, v.witness.as_ref().expect("witness required")));
            }
            if entry.name == "S3" || entry.tags.contains(&Tag::Nilpotent) {
                assert!(v.left_side && v.right_side, "{} must be positive", entry.name);
            }
        }
    }
    report(
        "01 theorem_a",
        if failures.is_empty() {
            Ok(format!("{checked} verdicts, 0 exceptions"))
        } else {
            Err(format!("inequivalent: {failures:?}"))
        },
    );
}

#[test]
fn criterion_02_theorem_b_suite() {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (entry, g) in corpus() {
        if g.order() > 1000 {
            continue;
        }
        for k in [2, 3] {
            let v = theorem_b_verdict(&entry.name, g, k).unwrap();
            checked += 1;
            if !v.equivalent {
                failures.push(format!("{} k={k}", entry.name));
            }
            if entry.name == "A5" || entry.name == "SL(2,5)" {
                assert!(!v.right_side, "δ*_{k} of {} is not nilpotent", entry.name);
                assert!(!v.left_side, "{} must violate the order condition", entry.name);
                assert!(witness_is_valid(g, v.witness.as_ref().expect("witness required")));
            }
        }
    }
    report(
        "02 theorem_b",
        if failures.is_empty() {
            Ok(format!("{checked} verdicts, 0 exceptions"))
        } else {
            Err(format!("inequivalent: {failures:?}"))
        },
    );
}

#[test]
fn criterion_03_gamma_star_equals_nilpotent_residual() {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (entry, g) in corpus() {
        for k in [2, 3, 4] {
            let v = prop_gamma_residual_verdict(&entry.name, g, k).unwrap();
            checked += 1;
            if !v.equivalent {
                failures.push(format!("{} k={k}", entry.name));
            }
        }
    }
    report(
        "03 gamma_star_residual",
        if failures.is_empty() {
            Ok(format!("{checked} equalities over the full corpus"))
        } else {
            Err(format!("unequal: {failures:?}"))
        },
    );
}

#[test]
fn criterion_04_delta_star_equals_lower_fitting_terms() {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (entry, g) in corpus() {
        for k in 0..=3 {
            let v = lemma_delta_fitting_verdict(&entry.name, g, k).unwrap();
            checked += 1;
            if !v.equivalent {
                failures.push(format!("{} k={k}", entry.name));
            }
        }
    }
    report(
        "04 lower_fitting_identity",
        if failures.is_empty() {
            Ok(format!("{checked} set equalities"))
        } else {
            Err(format!("unequal: {failures:?}"))
        },
    );
}

#[test]
fn criterion_05_fitting_height_iff_delta_star_trivial() {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (entry, g) in corpus() {
        for k in 1..=4 {
            let v = thm_fitting_delta_verdict(&entry.name, g, k).unwrap();
            checked += 1;
            if !v.equivalent {
                failures.push(format!("{} k={k}", entry.name));
            }
        }
    }
    // the exact flip points
    assert!(!thm_fitting_delta_verdict("S3", group("S3"), 1).unwrap().left_side);
    assert!(thm_fitting_delta_verdict("S3", group("S3"), 2).unwrap().left_side);
    assert!(!thm_fitting_delta_verdict("S4", group("S4"), 2).unwrap().left_side);
    assert!(thm_fitting_delta_verdict("S4", group("S4"), 3).unwrap().left_side);
    report(
        "05 fitting_height_criterion",
        if failures.is_empty() {
            Ok(format!("{checked} verdicts; S3 flips at k=2, S4 at k=3"))
        } else {
            Err(format!("inequivalent: {failures:?}"))
        },
    );
}

#[test]
fn criterion_06_section_one_counterexamples() {
    let mut outcome = Ok(String::new());

    // (a) the cube word on S3
    let s3 = group("S3");
    let values = s3.word_values(&WordSpec::Power(3)).unwrap();
    let nontrivial: Vec<u32> = values.iter().filter(|&x| x != 0).collect();
    let transpositions: Vec<u32> = (0..6).filter(|&x| s3.element_order(x) == 2).collect();
    if nontrivial != transpositions || nontrivial.len() != 3 {
        outcome = Err("cube values of S3 are not exactly the 3 transpositions".into());
    }
    if !nontrivial.iter().all(|&x| s3.element_order(x) == 2) {
        outcome = Err("a nontrivial cube value of order ≠ 2".into());
    }
    if s3.verbal_subgroup(&WordSpec::Power(3)).unwrap().len() != 6 {
        outcome = Err("cube verbal subgroup of S3 is not the whole group".into());
    }
    if !counterexample_s3_verdict("S3", s3).unwrap().equivalent {
        outcome = Err("counterexample_s3 verdict did not reproduce".into());
    }

    // (b) the commutator word on A5, full 3600-pair enumeration
    let a5 = group("A5");
    let values = a5.word_values(&WordSpec::A5Word).unwrap();
    for x in values.iter() {
        let ord = a5.element_order(x);
        if ord != 1 && ord != 2 {
            outcome = Err(format!("A5 word value of order {ord}"));
        }
    }
    if a5.verbal_subgroup(&WordSpec::A5Word).unwrap().len() != 60 {
        outcome = Err("A5 word verbal subgroup is not the whole group".into());
    }
    if !counterexample_a5_verdict("A5", a5).unwrap().equivalent {
        outcome = Err("counterexample_a5 verdict did not reproduce".into());
    }

    report(
        "06 counterexamples",
        outcome.map(|_| "S3 cube word and A5 commutator word reproduced bit-exactly".into()),
    );
}

#[test]
fn criterion_07_involutions_are_delta_star_commutators() {
    let mut failures = Vec::new();
    for (name, n_max) in [("A5", 2), ("PSL(2,7)", 2), ("PSL(2,8)", 1)] {
        let v = invstar_check(name, group(name), n_max, usize::MAX).unwrap();
        if !v.equivalent || v.parameter_k != Some(n_max) {
            failures.push(format!("{name} n≤{n_max}: {:?}", v.note));
        }
    }
    report(
        "07 involutions",
        if failures.is_empty() {
            Ok("A5 and PSL(2,7) up to n=2, PSL(2,8) up to n=1, 0 missing involutions".into())
        } else {
            Err(format!("{failures:?}"))
        },
    );
}

#[test]
fn criterion_08_pi_element_implication() {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (entry, g) in corpus() {
        let primes = g.group_primes();
        let mut subsets: Vec<Vec<u64>> = vec![vec![]];
        for (i, &p) in primes.iter().enumerate() {
            subsets.push(vec![p]);
            for &q in &primes[i + 1..] {
                subsets.push(vec![p, q]);
            }
        }
        for k in [1, 2] {
            for pi in &subsets {
                let v = thm_pi_elements_verdict(&entry.name, g, k, pi).unwrap();
                checked += 1;
                if !v.equivalent {
                    failures.push(format!("{} k={k} pi={pi:?}", entry.name));
                }
            }
        }
    }
    // the designed non-vacuous case
    let v = thm_pi_elements_verdict("S3", group("S3"), 1, &[3]).unwrap();
    assert!(v.left_side && v.right_side && !v.vacuous);
    report(
        "08 pi_elements",
        if failures.is_empty() {
            Ok(format!("{checked} implications (S3/{{3}} non-vacuous)"))
        } else {
            Err(format!("{failures:?}"))
        },
    );
}

#[test]
fn criterion_09_baumslag_wiegold_suite() {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (entry, g) in corpus() {
        let v = baumslag_wiegold_verdict(&entry.name, g).unwrap();
        checked += 1;
        if !v.equivalent {
            failures.push(entry.name.clone());
        }
        if let Some(w) = &v.witness {
            assert!(witness_is_valid(g, w), "invalid witness for {}", entry.name);
        }
    }
    report(
        "09 baumslag_wiegold",
        if failures.is_empty() {
            Ok(format!("{checked} groups, condition ⟺ nilpotent"))
        } else {
            Err(format!("{failures:?}"))
        },
    );
}

#[test]
fn criterion_10_engine_oracles() {
    let mut failures = Vec::new();
    let small: Vec<&(CorpusEntry, GroupTable)> = corpus()
        .iter()
        .filter(|(_, g)| g.order() <= 24)
        .collect();
    assert!(small.len() >= 20, "corpus should have many desk-size groups");

    for (entry, g) in &small {
        let lattice = oracle::all_subgroups(g);
        let normals: Vec<&Vec<u32>> = lattice
            .iter()
            .filter(|h| oracle::is_normal_in(g, h))
            .collect();

        // Fitting subgroup = the largest nilpotent normal subgroup
        let nilpotent_normals: Vec<&&Vec<u32>> = normals
            .iter()
            .filter(|h| oracle::is_nilpotent_by_sylow(g, h))
            .collect();
        let best = nilpotent_normals
            .iter()
            .max_by_key(|h| h.len())
            .expect("the trivial subgroup is always nilpotent normal");
        for h in &nilpotent_normals {
            if !oracle::contains_all(best, h) {
                failures.push(format!("{}: Fitting is not an upper bound", entry.name));
            }
        }
        let fitting: Vec<u32> = g.fitting_subgroup().iter().collect();
        if &fitting != **best {
            failures.push(format!("{}: fitting_subgroup disagrees with oracle", entry.name));
        }

        // O_π for every π ⊆ π(G) with |π| ≤ 2
        let primes: Vec<u64> = g.group_primes();
        let mut subsets: Vec<Vec<u64>> = vec![vec![]];
        for (i, &p) in primes.iter().enumerate() {
            subsets.push(vec![p]);
            for &q in &primes[i + 1..] {
                subsets.push(vec![p, q]);
            }
        }
        for pi in &subsets {
            let best_pi = normals
                .iter()
                .filter(|h| oracle::is_pi_subgroup(g, h, pi))
                .max_by_key(|h| h.len())
                .unwrap();
            let computed: Vec<u32> = g.o_pi(pi).iter().collect();
            if &computed != *best_pi {
                failures.push(format!("{}: o_pi({pi:?}) disagrees", entry.name));
            }
        }

        // normal closure of every single element = intersection of the
        // normal overgroups
        for x in 0..g.order() as u32 {
            let smallest: Vec<u32> = {
                let mut candidates: Vec<&&Vec<u32>> = normals
                    .iter()
                    .filter(|h| h.binary_search(&x).is_ok())
                    .collect();
                candidates.sort_by_key(|h| h.len());
                candidates[0].to_vec()
            };
            let computed: Vec<u32> = g.normal_closure(&g.set_of(&[x])).iter().collect();
            if computed != smallest {
                failures.push(format!("{}: normal_closure({x}) disagrees", entry.name));
                break;
            }
        }

        // quotient by every normal subgroup: order, homomorphism, kernel
        for n in &normals {
            let n_set = {
                let mut s = g.set_of(n);
                s = g.subgroup_generated(&s);
                s
            };
            let q = g.quotient(&n_set).unwrap();
            if q.group.order() * n.len() != g.order() {
                failures.push(format!("{}: quotient order wrong", entry.name));
            }
            for a in 0..g.order() as u32 {
                if (q.project(a) == 0) != n_set.contains(a) {
                    failures.push(format!("{}: quotient kernel wrong", entry.name));
                    break;
                }
                for b in 0..g.order() as u32 {
                    if q.project(g.mul(a, b)) != q.group.mul(q.project(a), q.project(b)) {
                        failures.push(format!("{}: projection not a homomorphism", entry.name));
                        break;
                    }
                }
            }
        }
    }

    // 100 random admissible coprime-action decompositions
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut admissible: Vec<(usize, Vec<u32>, u32)> = Vec::new();
    for (gi, (_, g)) in small.iter().enumerate() {
        for h in oracle::all_subgroups(g) {
            if !oracle::is_abelian_subset(g, &h) {
                continue;
            }
            for x in 0..g.order() as u32 {
                let normalizes = h
                    .iter()
                    .all(|&m| h.binary_search(&g.mul(g.mul(g.inv(x), m), x)).is_ok());
                if normalizes && gcd(g.element_order(x), h.len()) == 1 {
                    admissible.push((gi, h.clone(), x));
                }
            }
        }
    }
    assert!(admissible.len() >= 100, "admissible pool too small");
    for _ in 0..100 {
        let (gi, h, x) = &admissible[rng.gen_range(0..admissible.len())];
        let g = &small[*gi].1;
        let n_set = g.subgroup_generated(&g.set_of(h));
        if !g.coprime_action_decomposition_check(&n_set, *x).unwrap() {
            failures.push(format!(
                "coprime action decomposition failed in {} for |N|={} x={x}",
                small[*gi].0.name,
                h.len()
            ));
        }
    }

    // 100 random admissible tuples for the coprime-commutator lifting step:
    // δ*_k-commutators y_1..y_k normalizing N with orders coprime to |N|
    // must send every x ∈ N to a δ*_{k+1}-commutator via [x, y_1, .., y_k].
    let sample_groups = ["S3", "S4", "A4", "D5", "C7:C3", "SL(2,3)", "A5"];
    let pools: Vec<&GroupTable> = sample_groups.iter().map(|n| group(n)).collect();
    let lattices: Vec<Vec<Vec<u32>>> = pools.iter().map(|g| oracle::all_subgroups(g)).collect();
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < 100 && attempts < 200_000 {
        attempts += 1;
        let gi = rng.gen_range(0..pools.len());
        let g = pools[gi];
        let k = rng.gen_range(1..=2usize);
        let lattice = &lattices[gi];
        let n = &lattice[rng.gen_range(0..lattice.len())];
        let level = g.delta_star_set(k);
        let candidates: Vec<u32> = level
            .iter()
            .filter(|&y| {
                gcd(g.element_order(y), n.len()) == 1
                    && n.iter()
                        .all(|&m| n.binary_search(&g.mul(g.mul(g.inv(y), m), y)).is_ok())
            })
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let ys: Vec<u32> = (0..k)
            .map(|_| candidates[rng.gen_range(0..candidates.len())])
            .collect();
        let x = n[rng.gen_range(0..n.len())];
        let mut value = x;
        for &y in &ys {
            value = g.commutator(value, y);
        }
        accepted += 1;
        if !g.delta_star_set(k + 1).contains(value) {
            failures.push(format!(
                "lifting step failed in {} at k={k}",
                sample_groups[gi]
            ));
        }
    }
    assert_eq!(accepted, 100, "could not sample 100 admissible tuples");

    report(
        "10 engine_oracles",
        if failures.is_empty() {
            Ok(format!(
                "{} groups ≤ 24 against the lattice oracle; 100 + 100 sampled checks",
                small.len()
            ))
        } else {
            Err(format!("{failures:?}"))
        },
    );
}
