//! Small finite fields GF(q) as full operation tables.
//!
//! Prime fields use modular arithmetic; GF(8) and GF(9) are built from
//! fixed irreducible polynomials (x³ + x + 1 over GF(2), x² + 1 over
//! GF(3)). Elements are encoded as integers 0..q-1, with base-p digits as
//! polynomial coefficients for the prime-power cases.

/// Operation tables for one finite field.
pub(crate) struct Gf {
    q: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    inv: Vec<usize>,
}

/// (q, p, e, coefficients of the monic irreducible, constant term first)
const PRIME_POWERS: [(usize, usize, usize, [usize; 4]); 2] = [
    (8, 2, 3, [1, 1, 0, 1]), // x³ + x + 1
    (9, 3, 2, [1, 0, 1, 0]), // x² + 1
];

impl Gf {
    pub(crate) fn new(q: usize) -> Gf {
        if let Some(&(_, p, e, irr)) = PRIME_POWERS.iter().find(|&&(qq, ..)| qq == q) {
            return Gf::from_polynomials(q, p, e, &irr[..=e]);
        }
        assert!(is_prime(q), "unsupported field order {q}");
        let add = table(q, |a, b| (a + b) % q);
        let mul = table(q, |a, b| (a * b) % q);
        let neg = (0..q).map(|a| (q - a) % q).collect();
        let mut gf = Gf { q, add, mul, neg, inv: Vec::new() };
        gf.inv = gf.build_inverses();
        gf
    }

    fn from_polynomials(q: usize, p: usize, e: usize, irr: &[usize]) -> Gf {
        let digits = |mut n: usize| -> Vec<usize> {
            let mut d = vec![0; e];
            for slot in d.iter_mut() {
                *slot = n % p;
                n /= p;
            }
            d
        };
        let pack = |d: &[usize]| -> usize {
            d.iter().rev().fold(0, |acc, &c| acc * p + c)
        };
        let add = table(q, |a, b| {
            let (da, db) = (digits(a), digits(b));
            let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            pack(&sum)
        });
        let mul = table(q, |a, b| {
            let (da, db) = (digits(a), digits(b));
            let mut prod = vec![0; 2 * e - 1];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            for d in (e..prod.len()).rev() {
                let c = prod[d];
                prod[d] = 0;
                for j in 0..e {
                    // x^d ≡ -x^(d-e) * (irr - x^e)
                    prod[d - e + j] = (prod[d - e + j] + (p - 1) * c * irr[j]) % p;
                }
            }
            pack(&prod[..e])
        });
        let neg = (0..q)
            .map(|a| {
                let da = digits(a);
                let nd: Vec<usize> = da.iter().map(|&c| (p - c) % p).collect();
                pack(&nd)
            })
            .collect();
        let mut gf = Gf { q, add, mul, neg, inv: Vec::new() };
        gf.inv = gf.build_inverses();
        gf
    }

    fn build_inverses(&self) -> Vec<usize> {
        (0..self.q)
            .map(|a| {
                if a == 0 {
                    return 0;
                }
                (1..self.q)
                    .find(|&b| self.mul(a, b) == 1)
                    .expect("nonzero elements are invertible")
            })
            .collect()
    }

    pub(crate) fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    pub(crate) fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    pub(crate) fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub(crate) fn inv(&self, a: usize) -> usize {
        assert_ne!(a, 0, "zero has no inverse");
        self.inv[a]
    }

    /// An element of multiplicative order q - 1.
    pub(crate) fn primitive(&self) -> usize {
        (2..self.q)
            .find(|&g| {
                let mut x = g;
                let mut ord = 1;
                while x != 1 {
                    x = self.mul(x, g);
                    ord += 1;
                }
                ord == self.q - 1
            })
            .expect("every finite field has a primitive element")
    }
}

fn table(q: usize, f: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut out = vec![0; q * q];
    for a in 0..q {
        for b in 0..q {
            out[a * q + b] = f(a, b);
        }
    }
    out
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}
