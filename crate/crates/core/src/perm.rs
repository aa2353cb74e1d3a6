//! Permutations of a fixed domain `{0, .., degree-1}`.
//!
//! Composition is **left to right**: `p.compose(&q)` maps `i` to `q(p(i))`,
//! so permutations act on the right and `[a, b] = a⁻¹ b⁻¹ a b` behaves the
//! usual way with conjugation `a^b = b⁻¹ a b`. Points are 0-based in memory;
//! all cycle-notation I/O is 1-based.

use std::fmt;

use crate::error::Error;
use crate::Result;

/// A bijection of `{0, .., degree-1}`, stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity permutation of the given degree (≥ 1).
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "degree must be at least 1");
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from an image table, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::BadImages("degree must be at least 1".into()));
        }
        let mut seen = vec![false; images.len()];
        for &img in &images {
            if img >= images.len() {
                return Err(Error::BadImages(format!(
                    "image {img} out of range for degree {}",
                    images.len()
                )));
            }
            if seen[img] {
                return Err(Error::BadImages(format!("image {img} repeated")));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a single point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Left-to-right product: the result maps `i` to `q(p(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// `self^n` for any integer exponent; reduced modulo the order.
    pub fn pow(&self, n: i64) -> Permutation {
        let ord = self.order() as i64;
        let e = n.rem_euclid(ord) as usize;
        let mut out = Permutation::identity(self.degree());
        for _ in 0..e {
            out = out.compose(self).expect("equal degrees");
        }
        out
    }

    /// Least `m ≥ 1` with `self^m = identity`; the lcm of cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles_including_fixed()
            .into_iter()
            .map(|c| c.len())
            .fold(1, lcm)
    }

    /// Disjoint cycles of moved points, each starting at its smallest point,
    /// ordered by that smallest point. Fixed points are omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles_including_fixed()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect()
    }

    fn cycles_including_fixed(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }

    /// Canonical 1-based cycle notation; `"()"` for the identity.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect::<Vec<_>>()
            .join("")
    }

    /// Parses whitespace-tolerant disjoint cycle notation with 1-based
    /// points. `"()"` and `"id"` both denote the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        if degree == 0 {
            return Err(Error::BadImages("degree must be at least 1".into()));
        }
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(parse_err("", "empty input; use \"()\" or \"id\" for the identity"));
        }
        if trimmed == "id" || trimmed == "()" {
            return Ok(Permutation::identity(degree));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        let mut current: Option<Vec<usize>> = None;
        let mut chars = trimmed.chars().peekable();
        while let Some(&ch) = chars.peek() {
            match ch {
                c if c.is_whitespace() => {
                    chars.next();
                }
                '(' => {
                    if current.is_some() {
                        return Err(parse_err("(", "nested cycle"));
                    }
                    current = Some(Vec::new());
                    chars.next();
                }
                ')' => {
                    let cycle = current.take().ok_or_else(|| parse_err(")", "unmatched ')'"))?;
                    for w in 0..cycle.len() {
                        let from = cycle[w];
                        let to = cycle[(w + 1) % cycle.len()];
                        images[from] = to;
                    }
                    chars.next();
                }
                c if c.is_ascii_digit() => {
                    let mut tok = String::new();
                    while let Some(&d) = chars.peek() {
                        if d.is_ascii_digit() {
                            tok.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    let point: usize = tok
                        .parse()
                        .map_err(|_| parse_err(&tok, "not a point number"))?;
                    if point == 0 || point > degree {
                        return Err(parse_err(&tok, &format!("point out of range 1..{degree}")));
                    }
                    let cycle = current
                        .as_mut()
                        .ok_or_else(|| parse_err(&tok, "point outside any cycle"))?;
                    if used[point - 1] {
                        return Err(parse_err(&tok, "repeated point"));
                    }
                    used[point - 1] = true;
                    cycle.push(point - 1);
                }
                other => {
                    return Err(parse_err(&other.to_string(), "unexpected character"));
                }
            }
        }
        if current.is_some() {
            return Err(parse_err("(", "unclosed cycle"));
        }
        Ok(Permutation { images })
    }
}

fn parse_err(token: &str, reason: &str) -> Error {
    Error::CycleParse {
        token: token.to_string(),
        reason: reason.to_string(),
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]({})", self.degree(), self.cycle_string())
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}
