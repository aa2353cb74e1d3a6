//! Independent brute-force oracle used by the acceptance suite.
//!
//! Everything here is derived from the raw multiplication alone: the full
//! subgroup lattice by exhaustive one-element extensions, normality checked
//! against every group element, and nilpotency via "the p-elements form a
//! Sylow subgroup for every prime p". None of it shares code with the
//! engine paths it cross-checks.

use std::collections::HashSet;

use gstar_core::GroupTable;

/// Sorted member list of the subgroup generated by `seed`.
pub fn close_indices(g: &GroupTable, seed: &[u32]) -> Vec<u32> {
    let mut in_set = vec![false; g.order()];
    in_set[0] = true;
    let mut members = vec![0u32];
    let mut cursor = 0;
    while cursor < members.len() {
        let e = members[cursor];
        cursor += 1;
        for &s in seed {
            let x = g.mul(e, s);
            if !in_set[x as usize] {
                in_set[x as usize] = true;
                members.push(x);
            }
        }
    }
    members.sort_unstable();
    members
}

/// The complete subgroup lattice, as sorted member lists.
pub fn all_subgroups(g: &GroupTable) -> Vec<Vec<u32>> {
    let mut known: HashSet<Vec<u32>> = HashSet::new();
    known.insert(vec![0]);
    let mut frontier = vec![vec![0u32]];
    let mut all = Vec::new();
    while let Some(h) = frontier.pop() {
        all.push(h.clone());
        for x in 1..g.order() as u32 {
            if h.binary_search(&x).is_ok() {
                continue;
            }
            let mut seed = h.clone();
            seed.push(x);
            let bigger = close_indices(g, &seed);
            if known.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    all.sort();
    all
}

/// Normality against every element of the group, not just generators.
pub fn is_normal_in(g: &GroupTable, h: &[u32]) -> bool {
    h.iter().all(|&x| {
        (0..g.order() as u32).all(|c| {
            let conj = g.mul(g.mul(g.inv(c), x), c);
            h.binary_search(&conj).is_ok()
        })
    })
}

fn p_part(mut n: usize, p: usize) -> usize {
    let mut part = 1;
    while n % p == 0 {
        part *= p;
        n /= p;
    }
    part
}

fn is_p_power(mut n: usize, p: usize) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Nilpotent iff for every prime p the p-elements form a subgroup of full
/// Sylow size.
pub fn is_nilpotent_by_sylow(g: &GroupTable, h: &[u32]) -> bool {
    for p in prime_divisors(h.len()) {
        let p_elements: Vec<u32> = h
            .iter()
            .copied()
            .filter(|&x| is_p_power(g.element_order(x), p))
            .collect();
        if p_elements.len() != p_part(h.len(), p) {
            return false;
        }
        for &a in &p_elements {
            for &b in &p_elements {
                if p_elements.binary_search(&g.mul(a, b)).is_err() {
                    return false;
                }
            }
        }
    }
    true
}

/// All element orders use only primes in π.
pub fn is_pi_subgroup(g: &GroupTable, h: &[u32], pi: &[u64]) -> bool {
    h.iter().all(|&x| {
        let mut n = g.element_order(x) as u64;
        for &p in pi {
            while n % p == 0 {
                n /= p;
            }
        }
        n == 1
    })
}

pub fn is_abelian_subset(g: &GroupTable, h: &[u32]) -> bool {
    h.iter()
        .all(|&a| h.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

pub fn contains_all(big: &[u32], small: &[u32]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}
