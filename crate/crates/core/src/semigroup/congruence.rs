use super::{Element, FiniteSemigroup};
use crate::error::{Error, Result};

/// A partition of the elements, canonically numbered by first occurrence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Congruence {
    class_of: Vec<usize>,
    class_count: usize,
}

impl Congruence {
    /// Any labelling of the elements by class keys; renumbered canonically.
    pub fn from_classes(keys: Vec<usize>) -> Self {
        let mut map = std::collections::HashMap::new();
        let class_of: Vec<usize> = keys
            .iter()
            .map(|k| {
                let next = map.len();
                *map.entry(*k).or_insert(next)
            })
            .collect();
        Congruence { class_count: map.len(), class_of }
    }

    /// Builds the partition from an equivalence test.
    pub fn from_relation(n: usize, related: impl Fn(Element, Element) -> bool) -> Self {
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            match reps.iter().position(|&r| related(r, x)) {
                Some(c) => class_of[x] = c,
                None => {
                    class_of[x] = reps.len();
                    reps.push(x);
                }
            }
        }
        Congruence { class_count: reps.len(), class_of }
    }

    pub fn identity(n: usize) -> Self {
        Congruence { class_of: (0..n).collect(), class_count: n }
    }

    pub fn universal(n: usize) -> Self {
        Congruence { class_of: vec![0; n], class_count: usize::from(n > 0) }
    }

    pub fn class_of(&self, s: Element) -> usize {
        self.class_of[s]
    }

    pub fn classes(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.class_count == self.class_of.len()
    }

    pub fn related(&self, s: Element, t: Element) -> bool {
        self.class_of[s] == self.class_of[t]
    }

    /// Members of each class, in class order.
    pub fn blocks(&self) -> Vec<Vec<Element>> {
        let mut blocks = vec![Vec::new(); self.class_count];
        for (s, &c) in self.class_of.iter().enumerate() {
            blocks[c].push(s);
        }
        blocks
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Congruence) -> bool {
        let n = self.class_of.len();
        (0..n).all(|s| (s + 1..n).all(|t| !self.related(s, t) || other.related(s, t)))
    }

    /// Checks left and right compatibility, returning the first offending pair.
    pub fn check_compatible(&self, s: &FiniteSemigroup) -> Result<()> {
        if self.class_of.len() != s.order() {
            return Err(Error::CongruenceSizeMismatch { got: self.class_of.len(), expected: s.order() });
        }
        for block in self.blocks() {
            let first = block[0];
            for &t in &block[1..] {
                for u in s.elements() {
                    if !self.related(s.mul(u, first), s.mul(u, t)) || !self.related(s.mul(first, u), s.mul(t, u)) {
                        return Err(Error::NotACongruence(first, t));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_congruence_of(&self, s: &FiniteSemigroup) -> bool {
        self.check_compatible(s).is_ok()
    }
}

/// Largest order accepted by [`enumerate_congruences`].
pub const MAX_CONGRUENCE_ENUMERATION: usize = 6;

/// Every congruence of `s`, via restricted-growth strings over all set
/// partitions followed by a compatibility filter.
pub fn enumerate_congruences(s: &FiniteSemigroup) -> Result<Vec<Congruence>> {
    let n = s.order();
    if n > MAX_CONGRUENCE_ENUMERATION {
        return Err(Error::BudgetExceeded {
            what: format!("partition enumeration on {n} elements"),
            limit: MAX_CONGRUENCE_ENUMERATION as u64,
        });
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    let mut maxes = vec![0usize; n];
    loop {
        let c = Congruence { class_count: rgs.iter().max().map_or(0, |m| m + 1), class_of: rgs.clone() };
        if c.is_congruence_of(s) {
            out.push(c);
        }
        // next restricted-growth string: rgs[0] = 0, rgs[i] ≤ 1 + max(rgs[..i])
        let mut i = n;
        loop {
            if i <= 1 {
                return Ok(out);
            }
            i -= 1;
            if rgs[i] <= maxes[i - 1] {
                rgs[i] += 1;
                maxes[i] = maxes[i - 1].max(rgs[i]);
                for j in i + 1..n {
                    rgs[j] = 0;
                    maxes[j] = maxes[i];
                }
                break;
            }
        }
    }
}
