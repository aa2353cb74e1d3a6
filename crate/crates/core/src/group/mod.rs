//! Finite groups materialized as full element tables.
//!
//! A [`GroupTable`] is built once by breadth-first closure of its generators
//! and is immutable afterwards, so it can be shared freely across threads.
//! Subsets of a group are [`ElementSet`]s of element indices; an element set
//! is tied to the table that created it and may never be used with another.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Mutex, OnceLock};

use fixedbitset::FixedBitSet;

use crate::coprime::CoprimeMemo;
use crate::error::Error;
use crate::perm::{gcd, Permutation};
use crate::Result;

mod series;
mod structure;

pub use series::{SeriesKind, SeriesReport};

/// Closure gives up (with an error, never silent truncation) once a group
/// would exceed this many elements.
pub const DEFAULT_ELEMENT_BUDGET: usize = 200_000;

/// Full multiplication tables are only built for groups up to this order;
/// larger groups fall back to composing permutations on demand.
const MUL_TABLE_MAX_ORDER: usize = 2048;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(0);

/// A finite permutation group with every element materialized.
///
/// Element 0 is always the identity; the remaining elements are enumerated
/// in breadth-first order from the identity, multiplying by the generators
/// in the order they were given, which makes the enumeration deterministic.
pub struct GroupTable {
    id: u64,
    degree: usize,
    generators: Vec<Permutation>,
    generator_indices: Vec<u32>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
    mul_table: Option<Vec<u32>>,
    pub(crate) structure: OnceLock<structure::ClassData>,
    pub(crate) coprime: Mutex<CoprimeMemo>,
}

impl GroupTable {
    /// Closes the generators under composition with the default budget.
    pub fn close(degree: usize, generators: &[Permutation]) -> Result<GroupTable> {
        Self::close_with_budget(degree, generators, DEFAULT_ELEMENT_BUDGET)
    }

    pub fn close_with_budget(
        degree: usize,
        generators: &[Permutation],
        budget: usize,
    ) -> Result<GroupTable> {
        if degree == 0 {
            return Err(Error::Precondition("group degree must be at least 1".into()));
        }
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }

        let mut elements = vec![Permutation::identity(degree)];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0u32);
        let mut cursor = 0usize;
        while cursor < elements.len() {
            let current = elements[cursor].clone();
            for g in generators {
                let next = current.compose(g).expect("degrees checked above");
                if !index.contains_key(&next) {
                    if elements.len() >= budget {
                        return Err(Error::ClosureBudget { budget });
                    }
                    index.insert(next.clone(), elements.len() as u32);
                    elements.push(next);
                }
            }
            cursor += 1;
        }

        let inverses = elements.iter().map(|e| index[&e.inverse()]).collect();
        let orders = elements.iter().map(|e| e.order() as u32).collect();
        let n = elements.len();
        let mul_table = if n <= MUL_TABLE_MAX_ORDER {
            let mut table = vec![0u32; n * n];
            for (i, a) in elements.iter().enumerate() {
                for (j, b) in elements.iter().enumerate() {
                    table[i * n + j] = index[&a.compose(b).expect("closed")];
                }
            }
            Some(table)
        } else {
            None
        };
        let generator_indices = generators.iter().map(|g| index[g]).collect();

        Ok(GroupTable {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            degree,
            generators: generators.to_vec(),
            generator_indices,
            elements,
            index,
            inverses,
            orders,
            mul_table,
            structure: OnceLock::new(),
            coprime: Mutex::new(CoprimeMemo::default()),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of elements, |G|.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The generators exactly as supplied to `close`.
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[u32] {
        &self.generator_indices
    }

    pub const IDENTITY: u32 = 0;

    pub fn element(&self, i: u32) -> &Permutation {
        &self.elements[i as usize]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p).copied()
    }

    /// Order of the element at index `i` (cached).
    pub fn element_order(&self, i: u32) -> usize {
        self.orders[i as usize] as usize
    }

    /// Product of two elements by index, left-to-right.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.mul_table {
            Some(table) => table[a as usize * self.elements.len() + b as usize],
            None => {
                let p = self.elements[a as usize]
                    .compose(&self.elements[b as usize])
                    .expect("closed group");
                self.index[&p]
            }
        }
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    /// `g⁻¹ a g`.
    pub fn conjugate(&self, a: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// `a^n` by index, exponent reduced modulo the element order.
    pub fn power(&self, a: u32, n: i64) -> u32 {
        let ord = self.element_order(a) as i64;
        let mut e = n.rem_euclid(ord) as usize;
        let mut acc = Self::IDENTITY;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Primes dividing |G|.
    pub fn group_primes(&self) -> Vec<u64> {
        factor_primes(self.order() as u64)
    }

    // ---- element sets -------------------------------------------------

    pub(crate) fn check_parent(&self, s: &ElementSet) {
        assert_eq!(
            s.parent, self.id,
            "ElementSet belongs to a different GroupTable; sets never cross groups"
        );
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet {
            parent: self.id,
            subgroup: false,
            bits: FixedBitSet::with_capacity(self.order()),
        }
    }

    /// The whole group as a subgroup-flagged set.
    pub fn whole_set(&self) -> ElementSet {
        let mut bits = FixedBitSet::with_capacity(self.order());
        bits.insert_range(..);
        ElementSet {
            parent: self.id,
            subgroup: true,
            bits,
        }
    }

    /// `{identity}`.
    pub fn trivial_set(&self) -> ElementSet {
        let mut s = self.empty_set();
        s.bits.insert(0);
        s.subgroup = true;
        s
    }

    pub fn set_of(&self, indices: &[u32]) -> ElementSet {
        let mut s = self.empty_set();
        for &i in indices {
            assert!((i as usize) < self.order(), "element index out of range");
            s.bits.insert(i as usize);
        }
        s
    }

    /// Smallest subgroup containing `s`.
    pub fn subgroup_generated(&self, s: &ElementSet) -> ElementSet {
        self.check_parent(s);
        let gens: Vec<u32> = s.iter().filter(|&i| i != Self::IDENTITY).collect();
        let mut out = self.trivial_set();
        let mut worklist: Vec<u32> = vec![Self::IDENTITY];
        let mut cursor = 0;
        while cursor < worklist.len() {
            let e = worklist[cursor];
            cursor += 1;
            for &g in &gens {
                let x = self.mul(e, g);
                if !out.bits.contains(x as usize) {
                    out.bits.insert(x as usize);
                    worklist.push(x);
                }
            }
            if worklist.len() == self.order() {
                return self.whole_set();
            }
        }
        out
    }

    /// Smallest normal subgroup containing `s`: the subgroup generated by
    /// the conjugacy classes of the members of `s`.
    pub fn normal_closure(&self, s: &ElementSet) -> ElementSet {
        self.check_parent(s);
        let classes = self.class_data();
        let mut seed = self.empty_set();
        for i in s.iter() {
            for &m in &classes.members[classes.class_of[i as usize] as usize] {
                seed.bits.insert(m as usize);
            }
        }
        self.subgroup_generated(&seed)
    }

    /// Subgroup generated by `{[a, b] : a ∈ A, b ∈ B}` over all pairs.
    pub fn commutator_subgroup(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        self.check_parent(a);
        self.check_parent(b);
        let mut vals = self.empty_set();
        for x in a.iter() {
            for y in b.iter() {
                vals.bits.insert(self.commutator(x, y) as usize);
            }
        }
        self.subgroup_generated(&vals)
    }

    /// True when `h` is closed under products and inverses and contains 1.
    pub fn is_subgroup_set(&self, h: &ElementSet) -> bool {
        self.check_parent(h);
        if !h.contains(Self::IDENTITY) {
            return false;
        }
        let members: Vec<u32> = h.iter().collect();
        for &x in &members {
            if !h.contains(self.inv(x)) {
                return false;
            }
            for &y in &members {
                if !h.contains(self.mul(x, y)) {
                    return false;
                }
            }
        }
        true
    }

    /// True when conjugation by every generator preserves `h`.
    pub fn is_normal(&self, h: &ElementSet) -> bool {
        self.check_parent(h);
        for m in h.iter() {
            for &g in &self.generator_indices {
                if !h.contains(self.conjugate(m, g)) {
                    return false;
                }
            }
        }
        true
    }

    /// Elements commuting with every generator.
    pub fn center(&self) -> ElementSet {
        let mut out = self.empty_set();
        for x in 0..self.order() as u32 {
            if self
                .generator_indices
                .iter()
                .all(|&g| self.mul(x, g) == self.mul(g, x))
            {
                out.bits.insert(x as usize);
            }
        }
        out.subgroup = true;
        out
    }

    /// π-elements of the set: members whose order has prime divisors only
    /// in `pi`.
    pub fn is_pi_element(&self, i: u32, pi: &[u64]) -> bool {
        let mut n = self.element_order(i) as u64;
        for &p in pi {
            while n % p == 0 {
                n /= p;
            }
        }
        n == 1
    }

    // ---- quotients -----------------------------------------------------

    /// Quotient by a normal subgroup, realized as the permutation action on
    /// right cosets, together with the projection map.
    pub fn quotient(&self, n: &ElementSet) -> Result<Quotient> {
        self.check_parent(n);
        if !self.is_subgroup_set(n) {
            return Err(Error::Precondition(
                "quotient requires a subgroup-flagged element set".into(),
            ));
        }
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let members: Vec<u32> = n.iter().collect();
        let mut coset_of = vec![u32::MAX; self.order()];
        let mut reps: Vec<u32> = Vec::new();
        for g in 0..self.order() as u32 {
            if coset_of[g as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(g);
            for &m in &members {
                coset_of[self.mul(m, g) as usize] = c;
            }
        }
        let m = reps.len();
        debug_assert_eq!(m * members.len(), self.order());

        let coset_perm = |g: u32| -> Permutation {
            let images = reps
                .iter()
                .map(|&r| coset_of[self.mul(r, g) as usize] as usize)
                .collect();
            Permutation::from_images(images).expect("coset action is a bijection")
        };

        let quotient_gens: Vec<Permutation> =
            self.generator_indices.iter().map(|&g| coset_perm(g)).collect();
        let table = GroupTable::close(m.max(1), &quotient_gens)?;
        assert_eq!(
            table.order() * members.len(),
            self.order(),
            "coset action must have order |G|/|N|"
        );

        let mut projection = vec![0u32; self.order()];
        for g in 0..self.order() as u32 {
            projection[g as usize] = table
                .index_of(&coset_perm(g))
                .expect("projection lands in the coset group");
        }
        // minimal-index preimage of each quotient element
        let mut lifts = vec![u32::MAX; table.order()];
        for g in (0..self.order() as u32).rev() {
            lifts[projection[g as usize] as usize] = g;
        }

        Ok(Quotient {
            group: table,
            projection,
            lifts,
        })
    }

    /// Checks the coprime-action decomposition on an abelian subgroup `n`
    /// normalized by `x` with gcd(|x|, |n|) = 1: `[N,x] ∩ C_N(x) = 1`,
    /// `[N,x]·C_N(x) = N`, and `[[N,x],x] = [N,x]`.
    pub fn coprime_action_decomposition_check(
        &self,
        n: &ElementSet,
        x: u32,
    ) -> Result<bool> {
        self.check_parent(n);
        if !self.is_subgroup_set(n) {
            return Err(Error::Precondition("N must be a subgroup".into()));
        }
        let members: Vec<u32> = n.iter().collect();
        for &a in &members {
            for &b in &members {
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(Error::Precondition("N must be abelian".into()));
                }
            }
        }
        for &a in &members {
            if !n.contains(self.conjugate(a, x)) {
                return Err(Error::Precondition("x must normalize N".into()));
            }
        }
        if gcd(self.element_order(x), members.len()) != 1 {
            return Err(Error::Precondition(
                "orders of x and N must be coprime".into(),
            ));
        }

        let commutator_part = |base: &ElementSet| -> ElementSet {
            let mut seed = self.empty_set();
            for a in base.iter() {
                seed.bits
                    .insert(self.mul(self.inv(a), self.conjugate(a, x)) as usize);
            }
            self.subgroup_generated(&seed)
        };
        let nx = commutator_part(n);
        let mut centralized = self.empty_set();
        for &a in &members {
            if self.mul(a, x) == self.mul(x, a) {
                centralized.bits.insert(a as usize);
            }
        }
        centralized.subgroup = true;

        let mut intersection = nx.bits.clone();
        intersection.intersect_with(&centralized.bits);
        let trivial_intersection =
            intersection.count_ones(..) == 1 && intersection.contains(0);

        let mut product = self.empty_set();
        for a in nx.iter() {
            for c in centralized.iter() {
                product.bits.insert(self.mul(a, c) as usize);
            }
        }
        let product_is_n = product.bits == n.bits;

        let nxx = commutator_part(&nx);
        let repeated_commutator_stable = nxx.bits == nx.bits;

        Ok(trivial_intersection && product_is_n && repeated_commutator_stable)
    }
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GroupTable(degree {}, order {}, {} generators)",
            self.degree,
            self.order(),
            self.generators.len()
        )
    }
}

/// A quotient group together with its projection and a deterministic
/// section (minimal-index preimages).
pub struct Quotient {
    pub group: GroupTable,
    projection: Vec<u32>,
    lifts: Vec<u32>,
}

impl Quotient {
    /// Image of a parent element in the quotient.
    pub fn project(&self, g: u32) -> u32 {
        self.projection[g as usize]
    }

    /// Minimal-index parent preimage of a quotient element.
    pub fn lift(&self, q: u32) -> u32 {
        self.lifts[q as usize]
    }
}

/// A subset of one group's elements, by index.
#[derive(Clone)]
pub struct ElementSet {
    parent: u64,
    subgroup: bool,
    pub(crate) bits: FixedBitSet,
}

// Equality is membership equality; the subgroup flag is bookkeeping.
impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.bits == other.bits
    }
}

impl Eq for ElementSet {}

impl ElementSet {
    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, i: u32) -> bool {
        self.bits.contains(i as usize)
    }

    /// Ascending element indices.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.bits.ones().map(|i| i as u32)
    }

    /// Whether this set was produced as (and is known to be) a subgroup.
    pub fn is_subgroup_flagged(&self) -> bool {
        self.subgroup
    }

    /// `{identity}` exactly.
    pub fn is_trivial(&self) -> bool {
        self.bits.contains(0) && self.len() == 1
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        assert_eq!(self.parent, other.parent, "sets from different groups");
        self.bits.is_subset(&other.bits)
    }

    pub fn insert(&mut self, i: u32) {
        self.bits.insert(i as usize);
        self.subgroup = false;
    }

    pub(crate) fn mark_subgroup(mut self) -> Self {
        self.subgroup = true;
        self
    }
}

impl std::fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ElementSet(len {} , subgroup: {})",
            self.len(),
            self.subgroup
        )
    }
}

impl std::hash::Hash for ElementSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.parent.hash(state);
        for b in self.bits.as_slice() {
            b.hash(state);
        }
    }
}

pub(crate) fn factor_primes(mut n: u64) -> Vec<u64> {
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
