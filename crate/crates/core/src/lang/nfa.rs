use super::Dfa;
use crate::error::{Error, Result};
use fixedbitset::FixedBitSet;
use std::collections::{HashMap, VecDeque};

/// An ε-free nondeterministic automaton over letter indices.
#[derive(Clone, Debug)]
pub struct Nfa {
    alphabet: Vec<char>,
    initial: Vec<usize>,
    accepting: Vec<bool>,
    /// `edges[q][a]` lists successors.
    edges: Vec<Vec<Vec<usize>>>,
}

impl Nfa {
    pub fn new(alphabet: Vec<char>, states: usize) -> Nfa {
        let k = alphabet.len();
        Nfa { alphabet, initial: Vec::new(), accepting: vec![false; states], edges: vec![vec![Vec::new(); k]; states] }
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> &[usize] {
        &self.initial
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn successors(&self, q: usize, a: usize) -> &[usize] {
        &self.edges[q][a]
    }

    pub fn add_state(&mut self) -> usize {
        self.accepting.push(false);
        self.edges.push(vec![Vec::new(); self.alphabet.len()]);
        self.accepting.len() - 1
    }

    pub fn add_initial(&mut self, q: usize) {
        if !self.initial.contains(&q) {
            self.initial.push(q);
        }
    }

    pub fn set_accepting(&mut self, q: usize, yes: bool) {
        self.accepting[q] = yes;
    }

    pub fn add_transition(&mut self, p: usize, a: usize, q: usize) {
        if !self.edges[p][a].contains(&q) {
            self.edges[p][a].push(q);
        }
    }

    pub fn reverse(&self) -> Nfa {
        let n = self.state_count();
        let mut r = Nfa::new(self.alphabet.clone(), n);
        for q in 0..n {
            if self.accepting[q] {
                r.add_initial(q);
            }
            for a in 0..self.alphabet.len() {
                for &p in &self.edges[q][a] {
                    r.add_transition(p, a, q);
                }
            }
        }
        for &q in &self.initial {
            r.accepting[q] = true;
        }
        r
    }

    fn forward(&self) -> FixedBitSet {
        let mut seen = FixedBitSet::with_capacity(self.state_count());
        let mut stack = self.initial.clone();
        for &q in &self.initial {
            seen.insert(q);
        }
        while let Some(q) = stack.pop() {
            for succ in &self.edges[q] {
                for &r in succ {
                    if !seen.put(r) {
                        stack.push(r);
                    }
                }
            }
        }
        seen
    }

    /// Keeps only states that are reachable and co-reachable, renumbered in
    /// increasing order.
    pub fn trim(&self) -> Nfa {
        let live = {
            let mut f = self.forward();
            f.intersect_with(&self.reverse().forward());
            f
        };
        let mut number = vec![usize::MAX; self.state_count()];
        for (i, q) in live.ones().enumerate() {
            number[q] = i;
        }
        let mut t = Nfa::new(self.alphabet.clone(), live.count_ones(..));
        for q in live.ones() {
            t.accepting[number[q]] = self.accepting[q];
            for a in 0..self.alphabet.len() {
                for &r in &self.edges[q][a] {
                    if live.contains(r) {
                        t.add_transition(number[q], a, number[r]);
                    }
                }
            }
        }
        for &q in &self.initial {
            if live.contains(q) {
                t.add_initial(number[q]);
            }
        }
        t
    }

    /// Subset construction, failing once more than `max_states` subsets
    /// appear.
    pub fn determinize(&self, max_states: usize) -> Result<Dfa> {
        let n = self.state_count();
        let k = self.alphabet.len();
        let mut start = FixedBitSet::with_capacity(n);
        for &q in &self.initial {
            start.insert(q);
        }
        let mut index: HashMap<FixedBitSet, usize> = HashMap::from([(start.clone(), 0)]);
        let mut subsets = vec![start];
        let mut delta = Vec::new();
        let mut i = 0;
        while i < subsets.len() {
            for a in 0..k {
                let mut next = FixedBitSet::with_capacity(n);
                for q in subsets[i].ones() {
                    for &r in &self.edges[q][a] {
                        next.insert(r);
                    }
                }
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        if subsets.len() >= max_states {
                            return Err(Error::BudgetExceeded {
                                what: "subset construction".into(),
                                limit: max_states as u64,
                            });
                        }
                        index.insert(next.clone(), subsets.len());
                        subsets.push(next);
                        subsets.len() - 1
                    }
                };
                delta.push(id);
            }
            i += 1;
        }
        let accepting = subsets.iter().map(|s| s.ones().any(|q| self.accepting[q])).collect();
        Ok(Dfa::from_parts(self.alphabet.clone(), 0, accepting, delta))
    }

    pub(crate) fn determinize_unbounded(&self) -> Dfa {
        self.determinize(usize::MAX).expect("no cap")
    }

    /// Number of accepting runs on `word`, saturating.
    pub fn count_runs(&self, word: &[usize]) -> u64 {
        let mut counts = vec![0u64; self.state_count()];
        for &q in &self.initial {
            counts[q] = 1;
        }
        for &a in word {
            let mut next = vec![0u64; self.state_count()];
            for (q, &c) in counts.iter().enumerate() {
                if c > 0 {
                    for &r in &self.edges[q][a] {
                        next[r] = next[r].saturating_add(c);
                    }
                }
            }
            counts = next;
        }
        counts.iter().enumerate().filter(|&(q, _)| self.accepting[q]).fold(0u64, |s, (_, &c)| s.saturating_add(c))
    }

    /// A shortest word with two distinct accepting runs, via the self-product
    /// with a "runs have split" flag.
    pub fn ambiguity_witness(&self) -> Option<Vec<usize>> {
        let t = self.trim();
        let n = t.state_count();
        let k = t.alphabet.len();
        let key = |p: usize, q: usize, split: bool| (p * n + q) * 2 + usize::from(split);
        let mut parent: HashMap<usize, (usize, usize)> = HashMap::new();
        let mut queue = VecDeque::new();
        for &p in &t.initial {
            for &q in &t.initial {
                let s = key(p, q, p != q);
                if parent.insert(s, (usize::MAX, 0)).is_none() {
                    queue.push_back((p, q, p != q));
                }
            }
        }
        while let Some((p, q, split)) = queue.pop_front() {
            let here = key(p, q, split);
            if split && t.accepting[p] && t.accepting[q] {
                let mut word = Vec::new();
                let mut cur = here;
                while let Some(&(prev, a)) = parent.get(&cur) {
                    if prev == usize::MAX {
                        break;
                    }
                    word.push(a);
                    cur = prev;
                }
                word.reverse();
                return Some(word);
            }
            for a in 0..k {
                for &p2 in &t.edges[p][a] {
                    for &q2 in &t.edges[q][a] {
                        let s2 = split || p2 != q2;
                        let next = key(p2, q2, s2);
                        if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                            e.insert((here, a));
                            queue.push_back((p2, q2, s2));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_unambiguous(&self) -> bool {
        self.ambiguity_witness().is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ambiguous_union() {
        // two copies of a*: every word has two runs
        let mut n = Nfa::new(vec!['a'], 2);
        n.add_initial(0);
        n.add_initial(1);
        n.set_accepting(0, true);
        n.set_accepting(1, true);
        n.add_transition(0, 0, 0);
        n.add_transition(1, 0, 1);
        assert_eq!(n.ambiguity_witness(), Some(vec![]));
        assert_eq!(n.count_runs(&[0, 0]), 2);
        let d = n.determinize(10).unwrap().minimize();
        assert_eq!(d.state_count(), 1);
    }

    #[test]
    fn trim_drops_dead_states() {
        let mut n = Nfa::new(vec!['a', 'b'], 3);
        n.add_initial(0);
        n.set_accepting(1, true);
        n.add_transition(0, 0, 1);
        n.add_transition(0, 1, 2);
        let t = n.trim();
        assert_eq!(t.state_count(), 2);
        assert!(t.is_unambiguous());
    }
}
