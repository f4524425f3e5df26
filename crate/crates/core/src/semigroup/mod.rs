//! Finite semigroups given by their Cayley table.
//!
//! Elements are `0..order`, and `mul(i, j)` is the entry in row `i`, column
//! `j`. A monoid is a semigroup whose `identity` field is set.

mod congruence;
mod enumerate;
mod greens;
pub mod io;
mod named;
mod transform;

pub use congruence::{enumerate_congruences, Congruence, MAX_CONGRUENCE_ENUMERATION};
pub use enumerate::{canonical_table, enumerate_semigroups, MAX_ENUMERATION_ORDER};
pub use greens::GreensData;
pub use transform::Transformation;

use crate::error::{Budget, Error, Result};
use fixedbitset::FixedBitSet;
use std::collections::HashMap;

pub type Element = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<u32>,
    identity: Option<Element>,
    generators: Option<Vec<Element>>,
}

/// A semigroup carved out of a larger one, with the map back into it.
#[derive(Clone, Debug)]
pub struct Embedded {
    pub semigroup: FiniteSemigroup,
    /// `embedding[i]` is the element of the ambient semigroup that `i` stands for.
    pub embedding: Vec<Element>,
}

/// Powers of one element: `s, s^2, ...` up to the first repetition.
#[derive(Clone, Debug)]
pub struct PowerCycle {
    /// `powers[k]` is `s^(k+1)`.
    pub powers: Vec<Element>,
    /// Exponent at which the cycle starts.
    pub index: usize,
    /// Length of the cycle.
    pub period: usize,
}

impl PowerCycle {
    fn power(&self, exponent: usize) -> Element {
        self.powers[exponent - 1]
    }

    /// Exponent of the idempotent power: the multiple of the period on the cycle.
    pub fn omega_exponent(&self) -> usize {
        let p = self.period;
        self.index.div_ceil(p) * p
    }
}

impl FiniteSemigroup {
    /// Checks a raw grid and an optional identity, returning the semigroup
    /// when the table is closed, associative and the identity is two-sided.
    pub fn validate(rows: &[Vec<i64>], identity: Option<i64>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        let mut table = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::NotSquare { row: r, len: row.len(), expected: order });
            }
            for (c, &v) in row.iter().enumerate() {
                if v < 0 || v as u64 >= order as u64 {
                    return Err(Error::OutOfRangeEntry { row: r, col: c, value: v, order });
                }
                table.push(v as u32);
            }
        }
        let identity = match identity {
            None => None,
            Some(e) if e < 0 || e as u64 >= order as u64 => return Err(Error::NoSuchElement(e.max(0) as usize)),
            Some(e) => Some(e as usize),
        };
        let s = FiniteSemigroup { order, table, identity, generators: None };
        s.check_associativity()?;
        if let Some(e) = identity {
            if let Some(i) = (0..order).find(|&i| s.mul(e, i) != i || s.mul(i, e) != i) {
                return Err(Error::BadIdentity(e, i));
            }
        }
        Ok(s)
    }

    /// Builds a semigroup from a flat row-major table that is known to be
    /// closed and associative.
    pub(crate) fn from_parts(order: usize, table: Vec<u32>, identity: Option<Element>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        FiniteSemigroup { order, table, identity, generators: None }
    }

    /// Flat row-major table, validated.
    pub fn from_flat(order: usize, table: &[u32], identity: Option<Element>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        if table.len() != order * order {
            return Err(Error::NotSquare { row: 0, len: table.len(), expected: order * order });
        }
        let rows: Vec<Vec<i64>> =
            table.chunks(order).map(|r| r.iter().map(|&v| v as i64).collect()).collect();
        Self::validate(&rows, identity.map(|e| e as i64))
    }

    pub fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(i, j);
                for k in 0..n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Err(Error::AssociativityViolation(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b] as usize
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.table.chunks(self.order)
    }

    pub fn identity(&self) -> Option<Element> {
        self.identity
    }

    pub fn is_monoid(&self) -> bool {
        self.identity.is_some()
    }

    pub fn generators(&self) -> Option<&[Element]> {
        self.generators.as_deref()
    }

    pub fn with_generators(mut self, generators: Vec<Element>) -> Self {
        self.generators = Some(generators);
        self
    }

    /// Drops the designated identity, keeping the table.
    pub fn without_identity(mut self) -> Self {
        self.identity = None;
        self
    }

    /// Finds a two-sided identity in the table, if any, and records it.
    pub fn detect_identity(mut self) -> Self {
        let n = self.order;
        self.identity = (0..n).find(|&e| (0..n).all(|i| self.mul(e, i) == i && self.mul(i, e) == i));
        self
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    /// Product of a non-empty sequence, left to right.
    pub fn product<I: IntoIterator<Item = Element>>(&self, items: I) -> Option<Element> {
        items.into_iter().reduce(|acc, x| self.mul(acc, x))
    }

    pub fn is_idempotent(&self, e: Element) -> bool {
        self.mul(e, e) == e
    }

    pub fn idempotents(&self) -> Vec<Element> {
        self.elements().filter(|&e| self.is_idempotent(e)).collect()
    }

    pub fn power_cycle(&self, s: Element) -> PowerCycle {
        let mut seen: HashMap<Element, usize> = HashMap::new();
        let mut powers = Vec::new();
        let mut cur = s;
        loop {
            if let Some(&k) = seen.get(&cur) {
                let index = k + 1;
                let period = powers.len() - k;
                return PowerCycle { powers, index, period };
            }
            seen.insert(cur, powers.len());
            powers.push(cur);
            cur = self.mul(cur, s);
        }
    }

    /// The unique idempotent power of `s`.
    pub fn omega_power(&self, s: Element) -> Element {
        let cycle = self.power_cycle(s);
        cycle.power(cycle.omega_exponent())
    }

    /// The inverse of `s^ω s` in the maximal subgroup around `s^ω`.
    pub fn omega_minus_one(&self, s: Element) -> Element {
        let cycle = self.power_cycle(s);
        // s^(ω+p-1): congruent to -1 modulo the period and on the cycle.
        let exponent = cycle.omega_exponent() + cycle.period - 1;
        let offset = (exponent - cycle.index) % cycle.period;
        cycle.power(cycle.index + offset)
    }

    /// `(ω, ω-1)` for every element.
    pub fn omega_tables(&self) -> (Vec<Element>, Vec<Element>) {
        self.elements()
            .map(|s| {
                let cycle = self.power_cycle(s);
                let w = cycle.omega_exponent();
                let offset = (w + cycle.period - 1 - cycle.index) % cycle.period;
                (cycle.power(w), cycle.power(cycle.index + offset))
            })
            .unzip()
    }

    pub fn is_band(&self) -> bool {
        self.elements().all(|e| self.is_idempotent(e))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|i| (i + 1..n).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    pub fn greens(&self) -> GreensData {
        GreensData::compute(self)
    }

    pub fn is_j_trivial(&self) -> bool {
        self.greens().is_j_trivial()
    }

    pub fn is_r_trivial(&self) -> bool {
        self.greens().is_r_trivial()
    }

    pub fn is_l_trivial(&self) -> bool {
        self.greens().is_l_trivial()
    }

    pub fn is_h_trivial(&self) -> bool {
        self.greens().is_h_trivial()
    }

    /// The semigroup with reversed multiplication.
    pub fn opposite(&self) -> Self {
        let n = self.order;
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = self.table[j * n + i];
            }
        }
        FiniteSemigroup { order: n, table, identity: self.identity, generators: self.generators.clone() }
    }

    /// Closure of `seed` under multiplication, sorted.
    pub fn closure(&self, seed: &[Element]) -> Vec<Element> {
        let mut inside = FixedBitSet::with_capacity(self.order);
        let mut members: Vec<Element> = Vec::new();
        for &s in seed {
            if !inside.put(s) {
                members.push(s);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for j in 0..members.len() {
                let y = members[j];
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if !inside.put(p) {
                        members.push(p);
                    }
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    /// Restriction of the table to a subset closed under multiplication.
    pub fn restrict(&self, elements: &[Element]) -> Result<Embedded> {
        let mut index = vec![usize::MAX; self.order];
        for (i, &e) in elements.iter().enumerate() {
            if e >= self.order {
                return Err(Error::NoSuchElement(e));
            }
            index[e] = i;
        }
        let k = elements.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in elements {
            for &b in elements {
                let p = index[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(Error::InvalidArgument(format!("subset not closed: {a}·{b}")));
                }
                table.push(p as u32);
            }
        }
        let identity = self.identity.and_then(|e| (index[e] != usize::MAX).then_some(index[e]));
        Ok(Embedded {
            semigroup: FiniteSemigroup::from_parts(k, table, identity),
            embedding: elements.to_vec(),
        })
    }

    /// The subsemigroup generated by `seed`.
    pub fn subsemigroup(&self, seed: &[Element]) -> Result<Embedded> {
        if let Some(&bad) = seed.iter().find(|&&s| s >= self.order) {
            return Err(Error::NoSuchElement(bad));
        }
        let members = self.closure(seed);
        self.restrict(&members)
    }

    /// `eSe` as a monoid with identity `e`.
    pub fn local_submonoid(&self, e: Element) -> Result<Embedded> {
        self.require_idempotent(e)?;
        let mut members: Vec<Element> = self.elements().map(|s| self.mul(self.mul(e, s), e)).collect();
        members.sort_unstable();
        members.dedup();
        let mut local = self.restrict(&members)?;
        let id = members.binary_search(&e).expect("e = eee lies in eSe");
        local.semigroup.identity = Some(id);
        Ok(local)
    }

    /// The subsemigroup generated by all elements `x ≥_J e`.
    pub fn subsemigroup_above_j(&self, e: Element) -> Result<Embedded> {
        self.require_idempotent(e)?;
        let greens = self.greens();
        self.subsemigroup_above_j_with(&greens, e)
    }

    pub(crate) fn subsemigroup_above_j_with(&self, greens: &GreensData, e: Element) -> Result<Embedded> {
        let above: Vec<Element> = self.elements().filter(|&x| greens.j_leq(e, x)).collect();
        self.subsemigroup(&above)
    }

    fn require_idempotent(&self, e: Element) -> Result<()> {
        if e >= self.order {
            return Err(Error::NoSuchElement(e));
        }
        if !self.is_idempotent(e) {
            return Err(Error::NotIdempotent(e));
        }
        Ok(())
    }

    /// Quotient by a congruence, with the projection onto class ids.
    pub fn quotient(&self, c: &Congruence) -> Result<(FiniteSemigroup, Vec<Element>)> {
        c.check_compatible(self)?;
        let k = c.class_count();
        let mut rep = vec![usize::MAX; k];
        for s in self.elements() {
            let cls = c.class_of(s);
            if rep[cls] == usize::MAX {
                rep[cls] = s;
            }
        }
        let mut table = Vec::with_capacity(k * k);
        for &a in &rep {
            for &b in &rep {
                table.push(c.class_of(self.mul(a, b)) as u32);
            }
        }
        let identity = self.identity.map(|e| c.class_of(e));
        let generators = self.generators.as_ref().map(|g| {
            let mut imgs: Vec<Element> = g.iter().map(|&x| c.class_of(x)).collect();
            imgs.dedup();
            imgs
        });
        let q = FiniteSemigroup { order: k, table, identity, generators };
        Ok((q, c.classes().to_vec()))
    }

    /// Componentwise product; element `(a, b)` is `a * |T| + b`.
    pub fn direct_product(&self, other: &FiniteSemigroup, budget: &Budget) -> Result<FiniteSemigroup> {
        let (n, m) = (self.order, other.order);
        let order = n.checked_mul(m).filter(|&o| o <= budget.elements);
        let Some(order) = order else {
            return Err(Error::ClosureBudgetExceeded(budget.elements));
        };
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            let (a1, a2) = (a / m, a % m);
            for b in 0..order {
                let (b1, b2) = (b / m, b % m);
                table.push((self.mul(a1, b1) * m + other.mul(a2, b2)) as u32);
            }
        }
        let identity = match (self.identity, other.identity) {
            (Some(e), Some(f)) => Some(e * m + f),
            _ => None,
        };
        Ok(FiniteSemigroup { order, table, identity, generators: None })
    }

    /// Size of a smallest generating set, by exhaustive subset search.
    /// Returns `None` when the order is too large for the search.
    pub fn rank(&self) -> Option<usize> {
        self.minimal_generating_set().map(|g| g.len())
    }

    pub fn minimal_generating_set(&self) -> Option<Vec<Element>> {
        let n = self.order;
        if n > 12 {
            return None;
        }
        for k in 1..=n {
            let mut combo: Vec<usize> = (0..k).collect();
            loop {
                if self.closure(&combo).len() == n {
                    return Some(combo);
                }
                // next k-combination of 0..n
                let mut i = k;
                while i > 0 && combo[i - 1] == n - k + i - 1 {
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                combo[i - 1] += 1;
                for j in i..k {
                    combo[j] = combo[j - 1] + 1;
                }
            }
        }
        None
    }

    /// Applies a relabelling `perm` (old element → new element).
    pub fn relabel(&self, perm: &[Element]) -> FiniteSemigroup {
        let n = self.order;
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[perm[i] * n + perm[j]] = perm[self.mul(i, j)] as u32;
            }
        }
        FiniteSemigroup {
            order: n,
            table,
            identity: self.identity.map(|e| perm[e]),
            generators: self.generators.as_ref().map(|g| g.iter().map(|&x| perm[x]).collect()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lz2() -> FiniteSemigroup {
        FiniteSemigroup::left_zero(2)
    }

    #[test]
    fn validate_trivial_and_left_zero() {
        let t = FiniteSemigroup::validate(&[vec![0]], None).unwrap();
        assert_eq!(t.order(), 1);
        let lz = FiniteSemigroup::validate(&[vec![0, 0], vec![1, 1]], None).unwrap();
        assert_eq!(lz.identity(), None);
        assert_eq!(lz.mul(1, 0), 1);
    }

    #[test]
    fn validate_rejects_bad_input() {
        let err = FiniteSemigroup::validate(&[vec![0, 1], vec![1, 2]], None).unwrap_err();
        assert!(matches!(err, Error::OutOfRangeEntry { row: 1, col: 1, value: 2, .. }));
        let err = FiniteSemigroup::validate(&[vec![0, 1], vec![1]], None).unwrap_err();
        assert!(matches!(err, Error::NotSquare { .. }));
        // x·y = 1 except 0·0 = 0 and 1·1 = 0 on three elements is not associative.
        let rows = vec![vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 2]];
        assert!(matches!(
            FiniteSemigroup::validate(&rows, None),
            Err(Error::AssociativityViolation(..))
        ));
        let err = FiniteSemigroup::validate(&[vec![0, 0], vec![1, 1]], Some(0)).unwrap_err();
        assert!(matches!(err, Error::BadIdentity(0, _)));
    }

    #[test]
    fn idempotent_sets() {
        assert_eq!(FiniteSemigroup::trivial().idempotents(), vec![0]);
        assert_eq!(lz2().idempotents(), vec![0, 1]);
        assert_eq!(FiniteSemigroup::cyclic_group(2).idempotents(), vec![0]);
    }

    #[test]
    fn omega_powers() {
        let sl = FiniteSemigroup::semilattice2();
        for e in sl.elements() {
            assert_eq!(sl.omega_power(e), e);
            assert_eq!(sl.omega_minus_one(e), e);
        }
        let z3 = FiniteSemigroup::cyclic_group(3);
        assert_eq!(z3.omega_power(1), 0);
        assert_eq!(z3.omega_minus_one(1), 2);
        // zero semigroup on {0, n}: n·n = 0
        let nil = FiniteSemigroup::validate(&[vec![0, 0], vec![0, 0]], None).unwrap();
        assert_eq!(nil.omega_power(1), 0);
        assert_eq!(nil.omega_minus_one(1), 0);
    }

    #[test]
    fn omega_minus_one_is_group_inverse() {
        // 0→1→2→3→2: index 2, period 2.
        let t = Transformation::new(vec![1, 2, 3, 2]).unwrap();
        let s = FiniteSemigroup::from_transformations(&[t], &Budget::default()).unwrap();
        let a = s.generators().unwrap()[0];
        let w = s.omega_power(a);
        let inv = s.omega_minus_one(a);
        assert!(s.is_idempotent(w));
        assert_eq!(s.mul(inv, w), inv);
        assert_eq!(s.mul(inv, s.mul(w, a)), w);
        assert_eq!(s.mul(inv, a), w);
    }

    #[test]
    fn predicates_on_small_semigroups() {
        let sl = FiniteSemigroup::semilattice2();
        assert!(sl.is_j_trivial() && sl.is_r_trivial() && sl.is_l_trivial());
        assert!(sl.is_band() && sl.is_commutative());
        let lz = lz2();
        assert!(lz.is_r_trivial() && !lz.is_l_trivial() && !lz.is_j_trivial() && lz.is_band());
        let z2 = FiniteSemigroup::cyclic_group(2);
        assert!(!z2.is_j_trivial() && !z2.is_band() && z2.is_commutative());
    }

    #[test]
    fn local_submonoids() {
        let z2 = FiniteSemigroup::cyclic_group(2);
        let local = z2.local_submonoid(0).unwrap();
        assert_eq!(local.semigroup.order(), 2);
        let lz = lz2();
        let local = lz.local_submonoid(1).unwrap();
        assert_eq!(local.semigroup.order(), 1);
        assert_eq!(local.embedding, vec![1]);
        assert!(matches!(z2.local_submonoid(1), Err(Error::NotIdempotent(1))));
    }

    #[test]
    fn above_j_in_brandt() {
        let b2 = FiniteSemigroup::brandt_b2();
        let ab = 2;
        let m = b2.subsemigroup_above_j(ab).unwrap();
        assert_eq!(m.semigroup.order(), 5);
        let e = m.embedding.iter().position(|&x| x == ab).unwrap();
        let s = &m.semigroup;
        let ese: std::collections::BTreeSet<_> = s.elements().map(|x| s.mul(s.mul(e, x), e)).collect();
        assert!(ese.len() > 1);
        let t = FiniteSemigroup::trivial();
        assert_eq!(t.subsemigroup_above_j(0).unwrap().semigroup.order(), 1);
    }

    #[test]
    fn quotients() {
        let z2 = FiniteSemigroup::cyclic_group(2);
        let (q, proj) = z2.quotient(&Congruence::identity(2)).unwrap();
        assert_eq!(q, z2);
        assert_eq!(proj, vec![0, 1]);
        let (q, _) = z2.quotient(&Congruence::universal(2)).unwrap();
        assert_eq!(q.order(), 1);
        let bad = Congruence::from_classes(vec![0, 1, 1]);
        let nil3 = FiniteSemigroup::validate(&[vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 0]], None).unwrap();
        assert!(nil3.quotient(&bad).is_ok());
    }

    #[test]
    fn direct_products() {
        let budget = Budget::default();
        let lz = lz2();
        let p = lz.direct_product(&FiniteSemigroup::trivial(), &budget).unwrap();
        assert_eq!(p, lz);
        let rz = FiniteSemigroup::right_zero(2);
        let p = lz.direct_product(&rz, &budget).unwrap();
        assert_eq!(p.order(), 4);
        assert!(p.is_band() && !p.is_r_trivial() && !p.is_l_trivial());
        let sl = FiniteSemigroup::semilattice2();
        let p = sl.direct_product(&sl, &budget).unwrap();
        assert!(p.is_band() && p.is_commutative());
        let tiny = Budget { elements: 3, ..budget };
        assert!(matches!(lz.direct_product(&rz, &tiny), Err(Error::ClosureBudgetExceeded(3))));
    }

    #[test]
    fn ranks() {
        assert_eq!(FiniteSemigroup::cyclic_group(3).rank(), Some(1));
        assert_eq!(lz2().rank(), Some(2));
        assert_eq!(FiniteSemigroup::brandt_b2().rank(), Some(2));
    }

    #[test]
    fn opposite_swaps_sides() {
        assert_eq!(lz2().opposite(), FiniteSemigroup::right_zero(2));
    }
}
