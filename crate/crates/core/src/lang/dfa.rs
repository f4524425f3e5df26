use super::Nfa;
use crate::error::{Error, Result};
use std::collections::{HashMap, VecDeque};
use std::fmt::Write;

/// A complete deterministic automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<char>,
    states: usize,
    initial: usize,
    accepting: Vec<bool>,
    /// `delta[q * |A| + a]`.
    delta: Vec<usize>,
}

impl Dfa {
    /// Builds a DFA, sending missing transitions to a fresh sink.
    pub fn new(
        alphabet: Vec<char>,
        states: usize,
        initial: usize,
        accepting: &[usize],
        transitions: &[(usize, char, usize)],
    ) -> Result<Dfa> {
        if alphabet.is_empty() {
            return Err(Error::InvalidArgument("empty alphabet".into()));
        }
        let mut sorted = alphabet.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != alphabet.len() {
            return Err(Error::InvalidArgument("repeated letter in alphabet".into()));
        }
        if states == 0 || initial >= states {
            return Err(Error::InvalidArgument(format!("initial state {initial} out of range")));
        }
        let k = alphabet.len();
        let mut delta = vec![usize::MAX; states * k];
        let mut acc = vec![false; states];
        for &q in accepting {
            *acc.get_mut(q).ok_or_else(|| Error::InvalidArgument(format!("accepting state {q} out of range")))? = true;
        }
        for &(p, c, q) in transitions {
            if p >= states || q >= states {
                return Err(Error::InvalidArgument(format!("transition {p} {c} {q} out of range")));
            }
            let a = alphabet.iter().position(|&x| x == c).ok_or(Error::UnknownLetter(c))?;
            let slot = &mut delta[p * k + a];
            if *slot != usize::MAX && *slot != q {
                return Err(Error::InvalidArgument(format!("state {p} has two transitions on {c:?}")));
            }
            *slot = q;
        }
        let mut states = states;
        if delta.contains(&usize::MAX) {
            let sink = states;
            states += 1;
            acc.push(false);
            delta.extend(std::iter::repeat_n(sink, k));
            for d in delta.iter_mut() {
                if *d == usize::MAX {
                    *d = sink;
                }
            }
        }
        Ok(Dfa { alphabet, states, initial, accepting: acc, delta })
    }

    pub(crate) fn from_parts(alphabet: Vec<char>, initial: usize, accepting: Vec<bool>, delta: Vec<usize>) -> Dfa {
        Dfa { states: accepting.len(), alphabet, initial, accepting, delta }
    }

    /// `A*`.
    pub fn universal(alphabet: &[char]) -> Dfa {
        let t: Vec<_> = alphabet.iter().map(|&c| (0, c, 0)).collect();
        Dfa::new(alphabet.to_vec(), 1, 0, &[0], &t).expect("well-formed")
    }

    /// `{ε}`.
    pub fn empty_word(alphabet: &[char]) -> Dfa {
        Dfa::new(alphabet.to_vec(), 1, 0, &[0], &[]).expect("well-formed")
    }

    /// `B*` for the letters `b` of `subset`.
    pub fn star_of(alphabet: &[char], subset: &[char]) -> Result<Dfa> {
        if let Some(&c) = subset.iter().find(|c| !alphabet.contains(c)) {
            return Err(Error::UnknownLetter(c));
        }
        let t: Vec<_> = subset.iter().map(|&c| (0, c, 0)).collect();
        Dfa::new(alphabet.to_vec(), 1, 0, &[0], &t)
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> Vec<usize> {
        (0..self.states).filter(|&q| self.accepting[q]).collect()
    }

    pub fn letter_index(&self, c: char) -> Result<usize> {
        self.alphabet.iter().position(|&x| x == c).ok_or(Error::UnknownLetter(c))
    }

    #[inline]
    pub fn step(&self, q: usize, a: usize) -> usize {
        self.delta[q * self.alphabet.len() + a]
    }

    /// State reached from `q` on letter indices `word`.
    pub fn run_from(&self, q: usize, word: &[usize]) -> usize {
        word.iter().fold(q, |q, &a| self.step(q, a))
    }

    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        self.accepting[self.run_from(self.initial, word)]
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        let idx: Vec<usize> = word.chars().map(|c| self.letter_index(c)).collect::<Result<_>>()?;
        Ok(self.accepts_indices(&idx))
    }

    pub fn to_nfa(&self) -> Nfa {
        let k = self.alphabet.len();
        let mut nfa = Nfa::new(self.alphabet.clone(), self.states);
        nfa.add_initial(self.initial);
        for q in 0..self.states {
            nfa.set_accepting(q, self.accepting[q]);
            for a in 0..k {
                nfa.add_transition(q, a, self.step(q, a));
            }
        }
        nfa
    }

    /// An automaton for the mirror language.
    pub fn reverse(&self) -> Dfa {
        self.to_nfa().reverse().determinize_unbounded().minimize()
    }

    /// The complement language.
    pub fn complement(&self) -> Dfa {
        let mut d = self.clone();
        d.accepting.iter_mut().for_each(|b| *b = !*b);
        d
    }

    /// Minimal complete DFA, states numbered in breadth-first order from
    /// the initial state (letters in alphabet order).
    pub fn minimize(&self) -> Dfa {
        let k = self.alphabet.len();
        // reachable part
        let mut seen = vec![false; self.states];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            for a in 0..k {
                let r = self.step(q, a);
                if !std::mem::replace(&mut seen[r], true) {
                    order.push(r);
                }
            }
            i += 1;
        }
        // Moore refinement
        let mut class: Vec<usize> = vec![0; self.states];
        for &q in &order {
            class[q] = usize::from(self.accepting[q]);
        }
        let mut count = 0;
        loop {
            let mut sig_ids: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut next = vec![0; self.states];
            for &q in &order {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(class[q]);
                sig.extend((0..k).map(|a| class[self.step(q, a)]));
                let n = sig_ids.len();
                next[q] = *sig_ids.entry(sig).or_insert(n);
            }
            let new_count = sig_ids.len();
            class = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        // renumber classes breadth-first
        let mut number = vec![usize::MAX; count.max(1)];
        let mut rep = Vec::new();
        let mut queue = VecDeque::from([self.initial]);
        number[class[self.initial]] = 0;
        rep.push(self.initial);
        while let Some(q) = queue.pop_front() {
            for a in 0..k {
                let r = self.step(q, a);
                if number[class[r]] == usize::MAX {
                    number[class[r]] = rep.len();
                    rep.push(r);
                    queue.push_back(r);
                }
            }
        }
        let n = rep.len();
        let mut delta = vec![0; n * k];
        for (i, &q) in rep.iter().enumerate() {
            for a in 0..k {
                delta[i * k + a] = number[class[self.step(q, a)]];
            }
        }
        let accepting = rep.iter().map(|&q| self.accepting[q]).collect();
        Dfa::from_parts(self.alphabet.clone(), 0, accepting, delta)
    }

    /// Same language, decided on minimal forms.
    pub fn equivalent(&self, other: &Dfa) -> bool {
        self.alphabet == other.alphabet && self.minimize() == other.minimize()
    }

    /// Text format:
    ///
    /// ```text
    /// alphabet a b
    /// states 3
    /// initial 0
    /// accepting 1
    /// 0 a 1
    /// ```
    ///
    /// Missing transitions go to a fresh sink; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Dfa> {
        let mut alphabet: Option<Vec<char>> = None;
        let mut states: Option<usize> = None;
        let mut initial: Option<usize> = None;
        let mut accepting: Vec<usize> = Vec::new();
        let mut transitions = Vec::new();
        let num = |tok: &str, line: usize| -> Result<usize> {
            tok.parse().map_err(|_| Error::parse(line, format!("expected a state number, found {tok:?}")))
        };
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            let toks: Vec<&str> = body.split_whitespace().collect();
            let Some((&head, rest)) = toks.split_first() else { continue };
            match head {
                "alphabet" => {
                    let mut letters = Vec::new();
                    for t in rest {
                        let mut cs = t.chars();
                        match (cs.next(), cs.next()) {
                            (Some(c), None) => letters.push(c),
                            _ => return Err(Error::parse(line, format!("letters are single characters, found {t:?}"))),
                        }
                    }
                    alphabet = Some(letters);
                }
                "states" if rest.len() == 1 => states = Some(num(rest[0], line)?),
                "initial" if rest.len() == 1 => initial = Some(num(rest[0], line)?),
                "accepting" => {
                    for t in rest {
                        accepting.push(num(t, line)?);
                    }
                }
                _ if rest.len() == 2 => {
                    let p = num(head, line)?;
                    let mut cs = rest[0].chars();
                    let c = match (cs.next(), cs.next()) {
                        (Some(c), None) => c,
                        _ => return Err(Error::parse(line, format!("expected a letter, found {:?}", rest[0]))),
                    };
                    let q = num(rest[1], line)?;
                    transitions.push((p, c, q, line));
                }
                _ => return Err(Error::parse(line, format!("unrecognised line {body:?}"))),
            }
        }
        let alphabet = alphabet.ok_or_else(|| Error::parse(0, "missing alphabet line"))?;
        let states = states.ok_or_else(|| Error::parse(0, "missing states line"))?;
        let initial = initial.unwrap_or(0);
        for &(p, c, q, line) in &transitions {
            if p >= states || q >= states {
                return Err(Error::parse(line, format!("state out of range in {p} {c} {q}")));
            }
            if !alphabet.contains(&c) {
                return Err(Error::parse(line, format!("letter {c:?} is not in the alphabet")));
            }
        }
        let t: Vec<_> = transitions.iter().map(|&(p, c, q, _)| (p, c, q)).collect();
        Dfa::new(alphabet, states, initial, &accepting, &t).map_err(|e| Error::parse(0, e.to_string()))
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let letters: Vec<String> = self.alphabet.iter().map(char::to_string).collect();
        let _ = writeln!(out, "alphabet {}", letters.join(" "));
        let _ = writeln!(out, "states {}", self.states);
        let _ = writeln!(out, "initial {}", self.initial);
        let acc: Vec<String> = self.accepting_states().iter().map(usize::to_string).collect();
        let _ = writeln!(out, "accepting {}", acc.join(" "));
        for q in 0..self.states {
            for (a, c) in self.alphabet.iter().enumerate() {
                let _ = writeln!(out, "{q} {c} {}", self.step(q, a));
            }
        }
        out
    }
}
