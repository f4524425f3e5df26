use super::{Element, FiniteSemigroup};
use fixedbitset::FixedBitSet;

/// Green's relations of a finite semigroup, computed with `S¹`.
#[derive(Clone, Debug)]
pub struct GreensData {
    pub r_class_of: Vec<usize>,
    pub l_class_of: Vec<usize>,
    pub j_class_of: Vec<usize>,
    pub h_class_of: Vec<usize>,
    /// `ideal[x]` is the two-sided ideal `S¹xS¹` as a set of elements.
    ideal: Vec<FixedBitSet>,
    j_class_count: usize,
}

fn class_ids(n: usize, same: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut ids = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..n {
        if let Some(c) = reps.iter().position(|&r| same(r, x)) {
            ids[x] = c;
        } else {
            ids[x] = reps.len();
            reps.push(x);
        }
    }
    ids
}

impl GreensData {
    pub fn compute(s: &FiniteSemigroup) -> Self {
        let n = s.order();
        // xS¹ and S¹x
        let mut right = vec![FixedBitSet::with_capacity(n); n];
        let mut left = vec![FixedBitSet::with_capacity(n); n];
        for x in 0..n {
            right[x].insert(x);
            left[x].insert(x);
            for y in 0..n {
                right[x].insert(s.mul(x, y));
                left[x].insert(s.mul(y, x));
            }
        }
        // S¹xS¹ = ∪_{y ∈ S¹x} yS¹
        let ideal: Vec<FixedBitSet> = (0..n)
            .map(|x| {
                let mut acc = FixedBitSet::with_capacity(n);
                for y in left[x].ones() {
                    acc.union_with(&right[y]);
                }
                acc
            })
            .collect();
        let r_class_of = class_ids(n, |a, b| right[a].contains(b) && right[b].contains(a));
        let l_class_of = class_ids(n, |a, b| left[a].contains(b) && left[b].contains(a));
        let j_class_of = class_ids(n, |a, b| ideal[a].contains(b) && ideal[b].contains(a));
        let h_class_of =
            class_ids(n, |a, b| r_class_of[a] == r_class_of[b] && l_class_of[a] == l_class_of[b]);
        let j_class_count = j_class_of.iter().copied().max().map_or(0, |m| m + 1);
        GreensData { r_class_of, l_class_of, j_class_of, h_class_of, ideal, j_class_count }
    }

    /// `x ≤_J y`, i.e. `x ∈ S¹yS¹`.
    #[inline]
    pub fn j_leq(&self, x: Element, y: Element) -> bool {
        self.ideal[y].contains(x)
    }

    /// `x <_J y`.
    #[inline]
    pub fn j_less(&self, x: Element, y: Element) -> bool {
        self.j_leq(x, y) && !self.j_leq(y, x)
    }

    pub fn j_class_count(&self) -> usize {
        self.j_class_count
    }

    /// Strict order on J-class ids.
    pub fn j_order(&self, a: usize, b: usize) -> bool {
        let rep = |c: usize| self.j_class_of.iter().position(|&k| k == c);
        match (rep(a), rep(b)) {
            (Some(x), Some(y)) => self.j_less(x, y),
            _ => false,
        }
    }

    fn all_distinct(ids: &[usize]) -> bool {
        ids.iter().enumerate().all(|(i, &c)| c == i)
    }

    pub fn is_r_trivial(&self) -> bool {
        Self::all_distinct(&self.r_class_of)
    }

    pub fn is_l_trivial(&self) -> bool {
        Self::all_distinct(&self.l_class_of)
    }

    pub fn is_j_trivial(&self) -> bool {
        Self::all_distinct(&self.j_class_of)
    }

    pub fn is_h_trivial(&self) -> bool {
        Self::all_distinct(&self.h_class_of)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_zero_classes() {
        let g = FiniteSemigroup::left_zero(2).greens();
        assert_eq!(g.r_class_of, vec![0, 1]);
        assert_eq!(g.l_class_of, vec![0, 0]);
        assert_eq!(g.j_class_of, vec![0, 0]);
    }

    #[test]
    fn group_is_one_h_class() {
        let g = FiniteSemigroup::cyclic_group(2).greens();
        assert_eq!(g.h_class_of, vec![0, 0]);
        let t = FiniteSemigroup::trivial().greens();
        assert_eq!((t.r_class_of, t.l_class_of, t.j_class_of), (vec![0], vec![0], vec![0]));
    }

    #[test]
    fn j_order_on_brandt() {
        let b = FiniteSemigroup::brandt_b2();
        let g = b.greens();
        assert_eq!(g.j_class_count(), 2);
        assert!(g.j_less(4, 0));
        assert!(!g.j_less(0, 2));
        assert!(g.j_order(g.j_class_of[4], g.j_class_of[0]));
        assert!(!g.j_order(g.j_class_of[0], g.j_class_of[0]));
        // 0 is alone in its H-class; a, b, ab, ba form a 2x2 egg box.
        assert!(g.is_h_trivial());
        assert!(!g.is_r_trivial());
    }
}
