use super::FiniteSemigroup;
use std::collections::HashSet;

/// Exhaustive enumeration is capped at this order.
pub const MAX_ENUMERATION_ORDER: usize = 4;

const UNSET: u32 = u32::MAX;

struct Search {
    n: usize,
    table: Vec<u32>,
    found: Vec<Vec<u32>>,
}

impl Search {
    fn get(&self, a: usize, b: usize) -> Option<usize> {
        let v = self.table[a * self.n + b];
        (v != UNSET).then_some(v as usize)
    }

    /// Associativity on every triple whose four products are already known.
    fn consistent(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = self.get(a, b) else { continue };
                for c in 0..n {
                    let Some(bc) = self.get(b, c) else { continue };
                    if let (Some(l), Some(r)) = (self.get(ab, c), self.get(a, bc)) {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn fill(&mut self, cell: usize) {
        if cell == self.n * self.n {
            self.found.push(self.table.clone());
            return;
        }
        for v in 0..self.n as u32 {
            self.table[cell] = v;
            if self.consistent() {
                self.fill(cell + 1);
            }
        }
        self.table[cell] = UNSET;
    }
}

/// Next permutation in lexicographic order; false after the last one.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Lexicographically least table over all relabellings.
pub fn canonical_table(s: &FiniteSemigroup) -> Vec<u32> {
    let mut perm: Vec<usize> = s.elements().collect();
    let mut best = s.table().to_vec();
    while next_permutation(&mut perm) {
        let t = s.relabel(&perm);
        if t.table() < best.as_slice() {
            best = t.table().to_vec();
        }
    }
    best
}

/// All semigroups of order `n` (capped at [`MAX_ENUMERATION_ORDER`]) in
/// lexicographic table order. With `dedup_iso`, one canonical
/// representative per isomorphism class; anti-isomorphic tables stay distinct.
/// Each result carries a minimal generating set and a detected identity.
pub fn enumerate_semigroups(n: usize, dedup_iso: bool) -> Vec<FiniteSemigroup> {
    assert!(
        (1..=MAX_ENUMERATION_ORDER).contains(&n),
        "enumeration order must be in 1..={MAX_ENUMERATION_ORDER}"
    );
    let mut search = Search { n, table: vec![UNSET; n * n], found: Vec::new() };
    search.fill(0);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for table in search.found {
        let mut s = FiniteSemigroup::from_parts(n, table, None);
        if dedup_iso {
            let canon = canonical_table(&s);
            if !seen.insert(canon.clone()) {
                continue;
            }
            s = FiniteSemigroup::from_parts(n, canon, None);
        }
        let s = s.detect_identity();
        let gens = s.minimal_generating_set().expect("order ≤ 4");
        out.push(s.with_generators(gens));
    }
    out
}
