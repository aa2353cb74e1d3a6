//! The builtin benchmark groups and the group-file loader.
//!
//! Every entry carries its expected order and structural tags; both are
//! re-checked against the constructed group. Matrix groups enter as
//! permutation groups: SL(2,q) acts on the q²-1 nonzero vectors, PSL(2,q)
//! on the q+1 points of the projective line via fractional-linear maps.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use serde::Deserialize;

use crate::error::Error;
use crate::group::GroupTable;
use crate::perm::Permutation;
use crate::Result;

mod gf;

use gf::Gf;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tag {
    Abelian,
    Nilpotent,
    Soluble,
    Simple,
    MinimalSimple,
    Perfect,
}

impl Tag {
    pub fn name(self) -> &'static str {
        match self {
            Tag::Abelian => "abelian",
            Tag::Nilpotent => "nilpotent",
            Tag::Soluble => "soluble",
            Tag::Simple => "simple",
            Tag::MinimalSimple => "minimal_simple",
            Tag::Perfect => "perfect",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A named group given by generators, with deferred closure.
#[derive(Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub tags: BTreeSet<Tag>,
    pub expected_order: Option<usize>,
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl CorpusEntry {
    fn new(
        name: &str,
        tags: &[Tag],
        expected_order: usize,
        degree: usize,
        generators: Vec<Permutation>,
    ) -> CorpusEntry {
        CorpusEntry {
            name: name.to_string(),
            tags: tags.iter().copied().collect(),
            expected_order: Some(expected_order),
            degree,
            generators,
        }
    }

    /// Materializes the group and checks the expected order.
    pub fn build(&self) -> Result<GroupTable> {
        let table = GroupTable::close(self.degree, &self.generators)?;
        if let Some(expected) = self.expected_order {
            if table.order() != expected {
                return Err(Error::OrderMismatch {
                    expected,
                    actual: table.order(),
                });
            }
        }
        Ok(table)
    }

    /// `build` plus re-verification of every structural tag against the
    /// computed predicates (and of every absent tag against their
    /// negations). Minimal simplicity is verified as far as simplicity;
    /// picking which simple groups are *minimal* simple is a selection
    /// fact, not something this crate recomputes.
    pub fn build_verified(&self) -> Result<GroupTable> {
        let table = self.build()?;
        // `simple` and `perfect` tags mark the interesting kinds: nonabelian
        // simple (prime cyclic groups are simple too) and nontrivial perfect.
        let checks: [(Tag, bool); 5] = [
            (Tag::Abelian, table.is_abelian()),
            (Tag::Nilpotent, table.is_nilpotent()),
            (Tag::Soluble, table.is_soluble()),
            (Tag::Simple, table.is_simple() && !table.is_abelian()),
            (Tag::Perfect, table.is_perfect() && table.order() > 1),
        ];
        for (tag, holds) in checks {
            if self.tags.contains(&tag) != holds {
                return Err(Error::TagMismatch {
                    name: self.name.clone(),
                    tag: tag.name().to_string(),
                });
            }
        }
        if self.tags.contains(&Tag::MinimalSimple) && !table.is_simple() {
            return Err(Error::TagMismatch {
                name: self.name.clone(),
                tag: Tag::MinimalSimple.name().to_string(),
            });
        }
        Ok(table)
    }
}

fn p(text: &str, degree: usize) -> Permutation {
    Permutation::parse_cycles(text, degree).expect("builtin cycle notation is valid")
}

fn cyclic(n: usize) -> Vec<Permutation> {
    if n == 1 {
        return vec![];
    }
    let images: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    vec![Permutation::from_images(images).unwrap()]
}

/// Dihedral group of the regular n-gon: rotation plus a reflection.
fn dihedral(n: usize) -> Vec<Permutation> {
    let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    vec![
        Permutation::from_images(rotation).unwrap(),
        Permutation::from_images(reflection).unwrap(),
    ]
}

fn symmetric(n: usize) -> Vec<Permutation> {
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    vec![p("(1 2)", n), Permutation::from_images(cycle).unwrap()]
}

fn alternating(n: usize) -> Vec<Permutation> {
    let long = if n % 2 == 1 {
        // (1 2 ... n)
        Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap()
    } else {
        // (2 3 ... n)
        let mut images: Vec<usize> = (0..n).collect();
        for i in 1..n {
            images[i] = if i + 1 < n { i + 1 } else { 1 };
        }
        Permutation::from_images(images).unwrap()
    };
    vec![p("(1 2 3)", n), long]
}

/// Generators of A ⊕ B acting on the disjoint union of the two domains.
fn direct_product(
    degree_a: usize,
    gens_a: &[Permutation],
    degree_b: usize,
    gens_b: &[Permutation],
) -> (usize, Vec<Permutation>) {
    let degree = degree_a + degree_b;
    let mut out = Vec::new();
    for g in gens_a {
        let mut images: Vec<usize> = (0..degree).collect();
        for i in 0..degree_a {
            images[i] = g.apply(i);
        }
        out.push(Permutation::from_images(images).unwrap());
    }
    for g in gens_b {
        let mut images: Vec<usize> = (0..degree).collect();
        for i in 0..degree_b {
            images[degree_a + i] = degree_a + g.apply(i);
        }
        out.push(Permutation::from_images(images).unwrap());
    }
    (degree, out)
}

/// SL(2,q) on the q²-1 nonzero row vectors of GF(q)².
fn special_linear_2(q: usize) -> (usize, Vec<Permutation>) {
    let f = Gf::new(q);
    let degree = q * q - 1;
    let vec_index = |a: usize, b: usize| -> usize { a * q + b - 1 };
    let act = |m: [[usize; 2]; 2]| -> Permutation {
        let mut images = vec![0; degree];
        for a in 0..q {
            for b in 0..q {
                if a == 0 && b == 0 {
                    continue;
                }
                let na = f.add(f.mul(a, m[0][0]), f.mul(b, m[1][0]));
                let nb = f.add(f.mul(a, m[0][1]), f.mul(b, m[1][1]));
                images[vec_index(a, b)] = vec_index(na, nb);
            }
        }
        Permutation::from_images(images).unwrap()
    };
    let one = 1;
    let minus_one = f.neg(1);
    (
        degree,
        vec![
            act([[one, one], [0, one]]),      // x ↦ x + 1 upper elementary
            act([[0, one], [minus_one, 0]]),  // the Weyl element
        ],
    )
}

/// PSL(2,q) on the q+1 projective points (field elements plus ∞) via the
/// fractional-linear maps x ↦ x+1, x ↦ ω²x, x ↦ -1/x.
fn projective_special_linear_2(q: usize) -> (usize, Vec<Permutation>) {
    let f = Gf::new(q);
    let infinity = q;
    let degree = q + 1;
    let omega = f.primitive();
    let omega_sq = f.mul(omega, omega);

    let translation = {
        let mut images: Vec<usize> = (0..degree).collect();
        for x in 0..q {
            images[x] = f.add(x, 1);
        }
        images[infinity] = infinity;
        Permutation::from_images(images).unwrap()
    };
    let dilation = {
        let mut images: Vec<usize> = (0..degree).collect();
        for x in 0..q {
            images[x] = f.mul(omega_sq, x);
        }
        images[infinity] = infinity;
        Permutation::from_images(images).unwrap()
    };
    let inversion = {
        let mut images: Vec<usize> = (0..degree).collect();
        images[0] = infinity;
        images[infinity] = 0;
        for x in 1..q {
            images[x] = f.neg(f.inv(x));
        }
        Permutation::from_images(images).unwrap()
    };
    (degree, vec![translation, dilation, inversion])
}

fn psl2_order(q: usize) -> usize {
    q * (q * q - 1) / if q % 2 == 0 { 1 } else { 2 }
}

/// All builtin benchmark groups, in a fixed deterministic order.
pub fn builtin_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();

    for n in 1..=12 {
        out.push(CorpusEntry::new(
            &format!("C{n}"),
            &[Tag::Abelian, Tag::Nilpotent, Tag::Soluble],
            n,
            n,
            cyclic(n),
        ));
    }

    for (n, tags) in [
        (4, &[Tag::Nilpotent, Tag::Soluble][..]),
        (5, &[Tag::Soluble][..]),
        (6, &[Tag::Soluble][..]),
        (8, &[Tag::Nilpotent, Tag::Soluble][..]),
    ] {
        out.push(CorpusEntry::new(
            &format!("D{n}"),
            tags,
            2 * n,
            n,
            dihedral(n),
        ));
    }

    // quaternion group: right multiplication on {±1, ±i, ±j, ±k}
    out.push(CorpusEntry::new(
        "Q8",
        &[Tag::Nilpotent, Tag::Soluble],
        8,
        8,
        vec![p("(1 3 2 4)(5 8 6 7)", 8), p("(1 5 2 6)(3 7 4 8)", 8)],
    ));

    for (n, tags) in [
        (3, &[Tag::Soluble][..]),
        (4, &[Tag::Soluble][..]),
        (5, &[][..]),
        (6, &[][..]),
    ] {
        out.push(CorpusEntry::new(
            &format!("S{n}"),
            tags,
            (1..=n).product(),
            n,
            symmetric(n),
        ));
    }

    for (n, tags) in [
        (4, &[Tag::Soluble][..]),
        (5, &[Tag::Simple, Tag::MinimalSimple, Tag::Perfect][..]),
        (6, &[Tag::Simple, Tag::Perfect][..]),
    ] {
        out.push(CorpusEntry::new(
            &format!("A{n}"),
            tags,
            (1..=n).product::<usize>() / 2,
            n,
            alternating(n),
        ));
    }

    // Frobenius group of order 21: C7 ⋊ C3 with the action x ↦ 2x mod 7
    out.push(CorpusEntry::new(
        "C7:C3",
        &[Tag::Soluble],
        21,
        7,
        vec![p("(1 2 3 4 5 6 7)", 7), p("(2 3 5)(4 7 6)", 7)],
    ));

    for (q, order, tags) in [
        (3, 24, &[Tag::Soluble][..]),
        (5, 120, &[Tag::Perfect][..]),
    ] {
        let (degree, gens) = special_linear_2(q);
        out.push(CorpusEntry::new(
            &format!("SL(2,{q})"),
            tags,
            order,
            degree,
            gens,
        ));
    }

    for q in [5usize, 7, 8, 9, 11, 13] {
        let minimal = matches!(q, 5 | 7 | 8 | 13);
        let mut tags = vec![Tag::Simple, Tag::Perfect];
        if minimal {
            tags.push(Tag::MinimalSimple);
        }
        let (degree, gens) = projective_special_linear_2(q);
        out.push(CorpusEntry::new(
            &format!("PSL(2,{q})"),
            &tags,
            psl2_order(q),
            degree,
            gens,
        ));
    }

    let (d, gens) = direct_product(2, &cyclic(2), 3, &symmetric(3));
    out.push(CorpusEntry::new("C2xS3", &[Tag::Soluble], 12, d, gens));
    let (d, gens) = direct_product(3, &symmetric(3), 3, &symmetric(3));
    out.push(CorpusEntry::new("S3xS3", &[Tag::Soluble], 36, d, gens));
    let (d, gens) = direct_product(3, &cyclic(3), 4, &alternating(4));
    out.push(CorpusEntry::new("C3xA4", &[Tag::Soluble], 36, d, gens));

    out
}

/// Looks a builtin up by name.
pub fn find_builtin(name: &str) -> Result<CorpusEntry> {
    builtin_corpus()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownGroup(name.to_string()))
}

#[derive(Deserialize)]
struct GroupFile {
    name: String,
    degree: usize,
    generators: Vec<String>,
    #[serde(default)]
    expected_order: Option<usize>,
}

/// Loads `{name, degree, generators: [cycles...], expected_order?}` from a
/// JSON file. The expected order, when present, is asserted after closure
/// by `CorpusEntry::build`.
pub fn load_group_file(path: &Path) -> Result<CorpusEntry> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::GroupFile(format!("{}: {e}", path.display())))?;
    let parsed: GroupFile = serde_json::from_str(&text)
        .map_err(|e| Error::GroupFile(format!("{}: {e}", path.display())))?;
    let generators = parsed
        .generators
        .iter()
        .map(|text| Permutation::parse_cycles(text, parsed.degree))
        .collect::<Result<Vec<_>>>()?;
    Ok(CorpusEntry {
        name: parsed.name,
        tags: BTreeSet::new(),
        expected_order: parsed.expected_order,
        degree: parsed.degree,
        generators,
    })
}
