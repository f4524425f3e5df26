use super::{band_canon, BandTree, Word};
use crate::error::{Error, Result};
use crate::semigroup::{Element, FiniteSemigroup};
use std::collections::HashMap;

/// Largest alphabet accepted by [`free_band`].
pub const MAX_FREE_BAND_ALPHABET: usize = 3;

/// The free band on `k` generators as a Cayley table.
#[derive(Clone, Debug)]
pub struct FreeBand {
    pub semigroup: FiniteSemigroup,
    pub trees: Vec<BandTree>,
    pub representatives: Vec<Word>,
    index: HashMap<BandTree, Element>,
}

impl FreeBand {
    pub fn alphabet_size(&self) -> usize {
        self.semigroup.generators().map_or(0, <[_]>::len)
    }

    /// The element a word over the alphabet stands for.
    pub fn element_of(&self, w: &Word) -> Option<Element> {
        self.index.get(&band_canon(w)).copied()
    }
}

/// Closes the `k` one-letter trees under concatenation followed by
/// canonicalisation.
pub fn free_band(k: usize) -> Result<FreeBand> {
    if k == 0 || k > MAX_FREE_BAND_ALPHABET {
        return Err(Error::BudgetExceeded {
            what: format!("free band on {k} generators"),
            limit: MAX_FREE_BAND_ALPHABET as u64,
        });
    }
    let mut trees: Vec<BandTree> = (1..=k as u32).map(BandTree::Leaf).collect();
    let mut reps: Vec<Word> = trees.iter().map(BandTree::representative).collect();
    let mut index: HashMap<BandTree, Element> = trees.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    // products[(i, j)] filled row by row as the work-list grows
    let mut products: HashMap<(Element, Element), Element> = HashMap::new();
    let mut done = 0;
    while done < trees.len() {
        let n = trees.len();
        for i in 0..n {
            for j in 0..n {
                if i < done && j < done {
                    continue;
                }
                let t = band_canon(&reps[i].concat(&reps[j]));
                let id = match index.get(&t) {
                    Some(&id) => id,
                    None => {
                        let id = trees.len();
                        reps.push(t.representative());
                        index.insert(t.clone(), id);
                        trees.push(t);
                        id
                    }
                };
                products.insert((i, j), id);
            }
        }
        done = n;
    }
    let n = trees.len();
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            table.push(products[&(i, j)] as u32);
        }
    }
    let semigroup = FiniteSemigroup::from_flat(n, &table, None)?.with_generators((0..k).collect());
    Ok(FreeBand { semigroup, trees, representatives: reps, index })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(free_band(1).unwrap().semigroup.order(), 1);
        assert_eq!(free_band(2).unwrap().semigroup.order(), 6);
        assert!(free_band(4).is_err());
    }

    #[test]
    fn fb2_is_a_band_generated_by_leaves() {
        let fb = free_band(2).unwrap();
        assert!(fb.semigroup.is_band());
        assert_eq!(fb.semigroup.closure(&[0, 1]).len(), 6);
        let ab = fb.element_of(&Word::parse("ab").unwrap()).unwrap();
        let aba = fb.element_of(&Word::parse("aba").unwrap()).unwrap();
        assert_ne!(ab, aba);
        assert_eq!(fb.element_of(&Word::parse("abab").unwrap()), Some(ab));
    }
}
