use super::{Dfa, Nfa};
use crate::error::{Budget, Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};
use std::path::Path;

/// `L_0 a_1 L_1 ⋯ a_k L_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductExpression {
    factors: Vec<Dfa>,
    markers: Vec<char>,
}

fn check_alphabets(dfas: &[&Dfa]) -> Result<()> {
    let first = dfas[0].alphabet();
    if dfas.iter().any(|d| d.alphabet() != first) {
        return Err(Error::AlphabetMismatch);
    }
    Ok(())
}

impl ProductExpression {
    pub fn new(factors: Vec<Dfa>, markers: Vec<char>) -> Result<ProductExpression> {
        if markers.is_empty() || factors.len() != markers.len() + 1 {
            return Err(Error::InvalidArgument(format!(
                "{} factors need {} markers, got {}",
                factors.len(),
                factors.len().saturating_sub(1),
                markers.len()
            )));
        }
        check_alphabets(&factors.iter().collect::<Vec<_>>())?;
        for &c in &markers {
            factors[0].letter_index(c)?;
        }
        Ok(ProductExpression { factors, markers })
    }

    /// The binary product `K a L`.
    pub fn binary(k: Dfa, a: char, l: Dfa) -> Result<ProductExpression> {
        ProductExpression::new(vec![k, l], vec![a])
    }

    pub fn factors(&self) -> &[Dfa] {
        &self.factors
    }

    pub fn markers(&self) -> &[char] {
        &self.markers
    }

    pub fn alphabet(&self) -> &[char] {
        self.factors[0].alphabet()
    }

    /// Product of factors `i..=j` with the markers between them.
    fn slice(&self, i: usize, j: usize) -> Slice<'_> {
        Slice { factors: &self.factors[i..=j], markers: &self.markers[i..j] }
    }

    /// Recognizer whose accepting runs are in bijection with decompositions:
    /// the factor automata side by side, and from each accepting state of
    /// `L_{i-1}` an `a_i`-edge to the initial state of `L_i`.
    pub fn recognizer(&self) -> Nfa {
        self.slice(0, self.factors.len() - 1).recognizer()
    }

    /// Minimal DFA for the product language.
    pub fn language(&self, budget: &Budget) -> Result<Dfa> {
        self.slice(0, self.factors.len() - 1).language(budget)
    }

    /// Decompositions `u = u_0 a_1 u_1 ⋯ a_k u_k`, counted directly.
    pub fn count_decompositions(&self, word: &[usize]) -> u64 {
        self.slice(0, self.factors.len() - 1).count(word)
    }

    /// A shortest word with two decompositions.
    pub fn ambiguity_witness(&self) -> Option<Vec<usize>> {
        self.recognizer().ambiguity_witness()
    }

    pub fn is_unambiguous(&self) -> bool {
        self.ambiguity_witness().is_none()
    }

    /// For each `i`, a word of `L_{i-1} a_i (L_i ⋯ a_k L_k)` with two
    /// prefixes in `L_{i-1} a_i`; the first one found.
    pub fn determinism_witness(&self, budget: &Budget) -> Result<Option<Vec<usize>>> {
        let k = self.markers.len();
        for i in 1..=k {
            let rest = self.slice(i, k).language(budget)?;
            if let Some(w) = binary_det_witness(&self.factors[i - 1], self.markers[i - 1], &rest, budget)? {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    pub fn is_deterministic(&self, budget: &Budget) -> Result<bool> {
        Ok(self.determinism_witness(budget)?.is_none())
    }

    /// For each `i`, a word of `(L_0 a_1 ⋯ L_{i-1}) a_i L_i` with two
    /// suffixes in `a_i L_i`.
    pub fn codeterminism_witness(&self, budget: &Budget) -> Result<Option<Vec<usize>>> {
        let k = self.markers.len();
        for i in 1..=k {
            let left = self.slice(0, i - 1).language(budget)?;
            if let Some(w) = binary_codet_witness(&left, self.markers[i - 1], &self.factors[i], budget)? {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    pub fn is_codeterministic(&self, budget: &Budget) -> Result<bool> {
        Ok(self.codeterminism_witness(budget)?.is_none())
    }

    /// Brute-force counterpart of [`Self::determinism_witness`] over all words up
    /// to length `len`, shortest first.
    pub fn brute_determinism_witness(&self, len: usize) -> Option<Vec<usize>> {
        let k = self.markers.len();
        all_words(self.alphabet().len(), len).find(|w| {
            (1..=k).any(|i| {
                let rest = self.slice(i, k);
                let a = self.factors[0].letter_index(self.markers[i - 1]).expect("checked");
                let cuts = (0..w.len())
                    .filter(|&j| w[j] == a && self.factors[i - 1].accepts_indices(&w[..j]))
                    .filter(|&j| rest.count(&w[j + 1..]) > 0)
                    .count();
                let prefixes =
                    (0..w.len()).filter(|&j| w[j] == a && self.factors[i - 1].accepts_indices(&w[..j])).count();
                cuts > 0 && prefixes > 1
            })
        })
    }

    /// Brute-force counterpart of [`Self::codeterminism_witness`].
    pub fn brute_codeterminism_witness(&self, len: usize) -> Option<Vec<usize>> {
        let k = self.markers.len();
        all_words(self.alphabet().len(), len).find(|w| {
            (1..=k).any(|i| {
                let left = self.slice(0, i - 1);
                let a = self.factors[0].letter_index(self.markers[i - 1]).expect("checked");
                let suffix = |j: usize| w[j] == a && self.factors[i].accepts_indices(&w[j + 1..]);
                let cuts = (0..w.len()).filter(|&j| suffix(j) && left.count(&w[..j]) > 0).count();
                let suffixes = (0..w.len()).filter(|&j| suffix(j)).count();
                cuts > 0 && suffixes > 1
            })
        })
    }

    /// Shortest word with at least two decompositions, by enumeration.
    pub fn brute_ambiguity_witness(&self, len: usize) -> Option<Vec<usize>> {
        all_words(self.alphabet().len(), len).find(|w| self.count_decompositions(w) > 1)
    }

    pub fn render_word(&self, w: &[usize]) -> String {
        let s: String = w.iter().map(|&a| self.alphabet()[a]).collect();
        if s.is_empty() {
            "ε".to_string()
        } else {
            s
        }
    }

    /// Parses an expression file: whitespace-separated tokens alternating
    /// factor references and marker letters, `#` comments.
    ///
    /// A reference is a DFA file path (relative to `base`), `@all` for
    /// `A*`, `@eps` for `{ε}`, or `@star:xy` for `{x,y}*`. The `@` forms
    /// need an `alphabet a b` line somewhere in the file.
    pub fn parse(text: &str, base: &Path) -> Result<ProductExpression> {
        let mut alphabet: Option<Vec<char>> = None;
        let mut tokens: Vec<(usize, &str)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let body = raw.split('#').next().unwrap_or("");
            let toks: Vec<&str> = body.split_whitespace().collect();
            if toks.first() == Some(&"alphabet") {
                let letters = toks[1..]
                    .iter()
                    .map(|t| single_char(t).ok_or_else(|| Error::parse(i + 1, format!("bad letter {t:?}"))))
                    .collect::<Result<Vec<_>>>()?;
                alphabet = Some(letters);
            } else {
                tokens.extend(toks.into_iter().map(|t| (i + 1, t)));
            }
        }
        if tokens.len() < 3 || tokens.len() % 2 == 0 {
            return Err(Error::parse(
                tokens.last().map_or(0, |t| t.0),
                "expected factor, letter, factor, ..., factor",
            ));
        }
        let mut factors = Vec::new();
        let mut markers = Vec::new();
        for (n, &(line, tok)) in tokens.iter().enumerate() {
            if n % 2 == 1 {
                markers.push(single_char(tok).ok_or_else(|| Error::parse(line, format!("expected a marker letter, found {tok:?}")))?);
                continue;
            }
            let dfa = if let Some(name) = tok.strip_prefix('@') {
                let alpha = alphabet.as_deref().ok_or_else(|| Error::parse(line, format!("{tok} needs an alphabet line")))?;
                match name {
                    "all" => Dfa::universal(alpha),
                    "eps" => Dfa::empty_word(alpha),
                    _ => match name.strip_prefix("star:") {
                        Some(letters) => {
                            let sub: Vec<char> = letters.chars().collect();
                            Dfa::star_of(alpha, &sub).map_err(|e| Error::parse(line, e.to_string()))?
                        }
                        None => return Err(Error::parse(line, format!("unknown language {tok:?}"))),
                    },
                }
            } else {
                let path = base.join(tok);
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::parse(line, format!("{}: {e}", path.display())))?;
                Dfa::parse(&text).map_err(|e| Error::parse(line, format!("{}: {e}", path.display())))?
            };
            factors.push(dfa);
        }
        ProductExpression::new(factors, markers)
    }

    /// Automaton verdicts with their brute-force cross-checks.
    pub fn check(&self, budget: &Budget) -> Result<ProductReport> {
        let len = budget.word_len;
        let render = |w: Option<Vec<usize>>| w.map(|w| self.render_word(&w));
        let verdict = |auto: Option<Vec<usize>>, brute: Option<Vec<usize>>| {
            let agrees = match (&auto, &brute) {
                (None, None) => true,
                (Some(a), None) => a.len() > len,
                (None, Some(_)) => false,
                (Some(_), Some(_)) => true,
            };
            ProductVerdict { holds: auto.is_none(), witness: render(auto), brute_force_witness: render(brute), agrees }
        };
        Ok(ProductReport {
            factors: self.factors.len(),
            markers: self.markers.iter().collect(),
            len_bound: len,
            deterministic: verdict(self.determinism_witness(budget)?, self.brute_determinism_witness(len)),
            codeterministic: verdict(self.codeterminism_witness(budget)?, self.brute_codeterminism_witness(len)),
            unambiguous: verdict(self.ambiguity_witness(), self.brute_ambiguity_witness(len)),
        })
    }
}

fn single_char(t: &str) -> Option<char> {
    let mut cs = t.chars();
    match (cs.next(), cs.next()) {
        (Some(c), None) => Some(c),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ProductVerdict {
    pub holds: bool,
    /// Shortest counterexample found on the automaton.
    pub witness: Option<String>,
    /// Shortest counterexample among words up to the length bound.
    pub brute_force_witness: Option<String>,
    /// Brute force is consistent with the automaton verdict.
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ProductReport {
    pub factors: usize,
    pub markers: String,
    pub len_bound: usize,
    pub deterministic: ProductVerdict,
    pub codeterministic: ProductVerdict,
    pub unambiguous: ProductVerdict,
}

impl ProductReport {
    pub fn agrees(&self) -> bool {
        self.deterministic.agrees && self.codeterministic.agrees && self.unambiguous.agrees
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("factors     {}\nmarkers     {}\nlen bound   {}\n", self.factors, self.markers, self.len_bound);
        for (name, v) in
            [("deterministic", &self.deterministic), ("co-deterministic", &self.codeterministic), ("unambiguous", &self.unambiguous)]
        {
            out += &format!("{name:<17} {}", if v.holds { "yes" } else { "no" });
            if let Some(w) = &v.witness {
                out += &format!("  witness {w}");
            }
            out += if v.agrees { "  brute force agrees\n" } else { "  BRUTE FORCE DISAGREES\n" };
        }
        out
    }
}

struct Slice<'a> {
    factors: &'a [Dfa],
    markers: &'a [char],
}

impl Slice<'_> {
    fn recognizer(&self) -> Nfa {
        let alphabet = self.factors[0].alphabet().to_vec();
        let k = alphabet.len();
        let mut offsets = Vec::with_capacity(self.factors.len());
        let mut total = 0;
        for f in self.factors {
            offsets.push(total);
            total += f.state_count();
        }
        let mut nfa = Nfa::new(alphabet, total);
        nfa.add_initial(offsets[0] + self.factors[0].initial());
        let last = self.factors.len() - 1;
        for (i, f) in self.factors.iter().enumerate() {
            let off = offsets[i];
            for q in 0..f.state_count() {
                for a in 0..k {
                    nfa.add_transition(off + q, a, off + f.step(q, a));
                }
                if i == last {
                    nfa.set_accepting(off + q, f.is_accepting(q));
                } else if f.is_accepting(q) {
                    let a = f.letter_index(self.markers[i]).expect("checked");
                    nfa.add_transition(off + q, a, offsets[i + 1] + self.factors[i + 1].initial());
                }
            }
        }
        nfa
    }

    fn language(&self, budget: &Budget) -> Result<Dfa> {
        if self.factors.len() == 1 {
            return Ok(self.factors[0].minimize());
        }
        Ok(self.recognizer().trim().determinize(budget.elements)?.minimize())
    }

    fn count(&self, word: &[usize]) -> u64 {
        // ways[f][s]: decompositions of word[s..] as L_f a_{f+1} ⋯ L_last
        let n = word.len();
        let last = self.factors.len() - 1;
        let mut next: Vec<u64> = (0..=n).map(|s| u64::from(self.factors[last].accepts_indices(&word[s..]))).collect();
        for f in (0..last).rev() {
            let a = self.factors[f].letter_index(self.markers[f]).expect("checked");
            let mut cur = vec![0u64; n + 1];
            for (s, slot) in cur.iter_mut().enumerate() {
                for j in s..n {
                    if word[j] == a && self.factors[f].accepts_indices(&word[s..j]) {
                        *slot = slot.saturating_add(next[j + 1]);
                    }
                }
            }
            next = cur;
        }
        next[0]
    }
}

/// Shortest word of `KaL` with two prefixes in `Ka`, from the automaton
/// that follows `KaL` and `K` and counts `Ka`-prefixes up to 2.
fn binary_det_witness(k: &Dfa, a: char, l: &Dfa, budget: &Budget) -> Result<Option<Vec<usize>>> {
    check_alphabets(&[k, l])?;
    let a = k.letter_index(a)?;
    let p = ProductExpression::binary(k.clone(), k.alphabet()[a], l.clone())?.language(budget)?;
    let letters = k.alphabet().len();
    let cap = budget.elements.saturating_mul(3).max(1);
    let start = (p.initial(), k.initial(), 0u8);
    let mut parent: HashMap<(usize, usize, u8), Option<((usize, usize, u8), usize)>> = HashMap::from([(start, None)]);
    let mut queue = VecDeque::from([start]);
    while let Some(cfg) = queue.pop_front() {
        let (pq, kq, count) = cfg;
        if count >= 2 && p.is_accepting(pq) {
            let mut word = Vec::new();
            let mut cur = cfg;
            while let Some(Some((prev, letter))) = parent.get(&cur) {
                word.push(*letter);
                cur = *prev;
            }
            word.reverse();
            return Ok(Some(word));
        }
        for c in 0..letters {
            let bump = u8::from(c == a && k.is_accepting(kq));
            let next = (p.step(pq, c), k.step(kq, c), (count + bump).min(2));
            if !parent.contains_key(&next) {
                if parent.len() >= cap {
                    return Err(Error::BudgetExceeded { what: "prefix-counting automaton".into(), limit: cap as u64 });
                }
                parent.insert(next, Some((cfg, c)));
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

/// `KaL` is co-deterministic iff the mirrored product is deterministic.
fn binary_codet_witness(k: &Dfa, a: char, l: &Dfa, budget: &Budget) -> Result<Option<Vec<usize>>> {
    let w = binary_det_witness(&l.reverse(), a, &k.reverse(), budget)?;
    Ok(w.map(|mut w| {
        w.reverse();
        w
    }))
}

/// `K a L` as a minimal DFA.
pub fn concat_product(k: &Dfa, a: char, l: &Dfa, budget: &Budget) -> Result<Dfa> {
    check_alphabets(&[k, l])?;
    ProductExpression::binary(k.clone(), a, l.clone())?.language(budget)
}

pub fn is_deterministic_product(k: &Dfa, a: char, l: &Dfa, budget: &Budget) -> Result<bool> {
    Ok(binary_det_witness(k, a, l, budget)?.is_none())
}

pub fn is_codeterministic_product(k: &Dfa, a: char, l: &Dfa, budget: &Budget) -> Result<bool> {
    Ok(binary_codet_witness(k, a, l, budget)?.is_none())
}

/// Words over `letters` letters of length `0..=len`, shortlex order.
pub(crate) fn all_words(letters: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..=len).flat_map(move |n| {
        let total = (letters as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
        (0..total).map(move |mut code| {
            let mut w = vec![0; n];
            for slot in w.iter_mut().rev() {
                *slot = (code % letters as u64) as usize;
                code /= letters as u64;
            }
            w
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const AB: [char; 2] = ['a', 'b'];

    fn all() -> Dfa {
        Dfa::universal(&AB)
    }

    fn eps() -> Dfa {
        Dfa::empty_word(&AB)
    }

    #[test]
    fn units_and_contains() {
        let b = Budget::default();
        let starts_a = concat_product(&eps(), 'a', &all(), &b).unwrap();
        assert!(starts_a.accepts("ab").unwrap() && !starts_a.accepts("ba").unwrap() && !starts_a.accepts("").unwrap());
        let ends_a = concat_product(&all(), 'a', &eps(), &b).unwrap();
        assert!(ends_a.accepts("ba").unwrap() && !ends_a.accepts("ab").unwrap());
        let contains = concat_product(&all(), 'a', &all(), &b).unwrap();
        assert_eq!(contains.state_count(), 2);
        assert!(contains.accepts("bab").unwrap() && !contains.accepts("bbb").unwrap());
    }

    #[test]
    fn determinism_examples() {
        let b = Budget::default();
        assert!(is_deterministic_product(&eps(), 'a', &all(), &b).unwrap());
        assert!(!is_deterministic_product(&all(), 'a', &all(), &b).unwrap());
        assert!(is_codeterministic_product(&all(), 'a', &eps(), &b).unwrap());
        assert!(!is_deterministic_product(&all(), 'a', &eps(), &b).unwrap());
        let p = ProductExpression::binary(all(), 'a', all()).unwrap();
        assert_eq!(p.determinism_witness(&b).unwrap(), Some(vec![0, 0]));
    }

    #[test]
    fn ambiguity_examples() {
        let p = ProductExpression::binary(all(), 'a', all()).unwrap();
        assert_eq!(p.ambiguity_witness(), Some(vec![0, 0]));
        assert_eq!(p.count_decompositions(&[0, 0]), 2);
        let bstar = Dfa::star_of(&AB, &['b']).unwrap();
        let q = ProductExpression::binary(bstar.clone(), 'a', bstar).unwrap();
        assert!(q.is_unambiguous());
        assert_eq!(q.brute_ambiguity_witness(10), None);
    }

    #[test]
    fn words_in_shortlex() {
        let w: Vec<_> = all_words(2, 2).collect();
        assert_eq!(w, vec![vec![], vec![0], vec![1], vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(all_words(2, 10).count(), 2047);
    }

    #[test]
    fn malformed_expressions() {
        assert!(ProductExpression::new(vec![all()], vec![]).is_err());
        assert!(matches!(ProductExpression::binary(all(), 'c', all()), Err(Error::UnknownLetter('c'))));
        let other = Dfa::universal(&['a']);
        assert!(matches!(ProductExpression::binary(all(), 'a', other), Err(Error::AlphabetMismatch)));
    }

    #[test]
    fn parse_builtin_references() {
        let p = ProductExpression::parse("alphabet a b\n@eps a @all  # aA*\n", Path::new(".")).unwrap();
        assert_eq!(p.markers(), &['a']);
        assert!(p.is_deterministic(&Budget::default()).unwrap());
        assert!(matches!(ProductExpression::parse("@eps a", Path::new(".")), Err(Error::Parse { line: 1, .. })));
        assert!(ProductExpression::parse("alphabet a b\n@eps a\n", Path::new(".")).is_err());
    }
}
