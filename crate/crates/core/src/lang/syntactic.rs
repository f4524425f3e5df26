use super::Dfa;
use crate::error::{Budget, Error, Result};
use crate::semigroup::{Element, FiniteSemigroup};
use std::collections::HashMap;

/// Transition monoid of a minimal automaton together with the morphism
/// from words.
#[derive(Clone, Debug)]
pub struct SyntacticMonoid {
    /// Element 0 is the identity.
    pub monoid: FiniteSemigroup,
    /// Image of each alphabet letter, in alphabet order.
    pub letter_image: Vec<Element>,
    /// Elements whose words lie in the language.
    pub accepting: Vec<Element>,
    pub alphabet: Vec<char>,
    /// State map of each element on the minimal automaton.
    pub maps: Vec<Vec<u32>>,
    /// Shortlex-least word reaching each element.
    pub words: Vec<String>,
}

impl SyntacticMonoid {
    /// Computes the monoid of `d` after minimising it.
    pub fn new(d: &Dfa, budget: &Budget) -> Result<SyntacticMonoid> {
        let d = d.minimize();
        let n = d.state_count();
        let k = d.alphabet().len();
        let identity: Vec<u32> = (0..n as u32).collect();
        let mut maps = vec![identity.clone()];
        let mut words = vec![String::new()];
        let mut index: HashMap<Vec<u32>, usize> = HashMap::from([(identity, 0)]);
        let letters: Vec<Vec<u32>> =
            (0..k).map(|a| (0..n).map(|q| d.step(q, a) as u32).collect()).collect();
        let then = |f: &[u32], g: &[u32]| -> Vec<u32> { f.iter().map(|&x| g[x as usize]).collect() };
        let mut letter_image = vec![0; k];
        let mut i = 0;
        while i < maps.len() {
            for a in 0..k {
                let p = then(&maps[i], &letters[a]);
                let id = match index.get(&p) {
                    Some(&id) => id,
                    None => {
                        if maps.len() >= budget.elements {
                            return Err(Error::ClosureBudgetExceeded(budget.elements));
                        }
                        let w = format!("{}{}", words[i], d.alphabet()[a]);
                        index.insert(p.clone(), maps.len());
                        maps.push(p);
                        words.push(w);
                        maps.len() - 1
                    }
                };
                if i == 0 {
                    letter_image[a] = id;
                }
            }
            i += 1;
        }
        let order = maps.len();
        let mut table = Vec::with_capacity(order * order);
        for f in &maps {
            for g in &maps {
                table.push(index[&then(f, g)] as u32);
            }
        }
        let mut gens: Vec<Element> = letter_image.clone();
        gens.sort_unstable();
        gens.dedup();
        let monoid = FiniteSemigroup::from_parts(order, table, Some(0)).with_generators(gens);
        let accepting = (0..order).filter(|&e| d.is_accepting(maps[e][d.initial()] as usize)).collect();
        Ok(SyntacticMonoid { monoid, letter_image, accepting, alphabet: d.alphabet().to_vec(), maps, words })
    }

    pub fn order(&self) -> usize {
        self.monoid.order()
    }

    /// Image of a word.
    pub fn image(&self, word: &str) -> Result<Element> {
        let mut e = 0;
        for c in word.chars() {
            let a = self.alphabet.iter().position(|&x| x == c).ok_or(Error::UnknownLetter(c))?;
            e = self.monoid.mul(e, self.letter_image[a]);
        }
        Ok(e)
    }

    pub fn recognizes(&self, word: &str) -> Result<bool> {
        Ok(self.accepting.contains(&self.image(word)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn starts_with_a() {
        let d = Dfa::new(vec!['a', 'b'], 2, 0, &[1], &[(0, 'a', 1), (1, 'a', 1), (1, 'b', 1)]).unwrap();
        let m = SyntacticMonoid::new(&d, &Budget::default()).unwrap();
        assert_eq!(m.order(), 3);
        let (a, b) = (m.letter_image[0], m.letter_image[1]);
        for x in [a, b] {
            assert_eq!(m.monoid.mul(a, x), a);
            assert_eq!(m.monoid.mul(b, x), b);
        }
        assert!(m.monoid.is_r_trivial() && !m.monoid.is_j_trivial());
        assert_eq!(m.words, vec!["", "a", "b"]);
        assert!(m.recognizes("ab").unwrap() && !m.recognizes("ba").unwrap());
    }

    #[test]
    fn budget() {
        let d = Dfa::universal(&['a']);
        let tight = Budget { elements: 0, ..Budget::default() };
        // the identity alone fits even a zero cap
        assert_eq!(SyntacticMonoid::new(&d, &tight).unwrap().order(), 1);
        let ab = Dfa::star_of(&['a', 'b'], &['a']).unwrap();
        assert!(matches!(SyntacticMonoid::new(&ab, &tight), Err(Error::ClosureBudgetExceeded(0))));
    }
}
