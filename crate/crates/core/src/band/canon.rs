use super::Word;
use std::fmt;

/// Canonical form of a free-band element.
///
/// A word `w` with at least two letters in its content is determined by its
/// content, the longest prefix `p` missing exactly one letter, the letter `a`
/// right after `p`, and dually the longest suffix `q` missing one letter and
/// the letter `b` right before it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BandTree {
    Leaf(u32),
    Node {
        /// Sorted content.
        content: Vec<u32>,
        prefix: Box<BandTree>,
        prefix_pivot: u32,
        suffix_pivot: u32,
        suffix: Box<BandTree>,
    },
}

impl BandTree {
    pub fn content(&self) -> Vec<u32> {
        match self {
            BandTree::Leaf(a) => vec![*a],
            BandTree::Node { content, .. } => content.clone(),
        }
    }

    /// A word with this canonical form: `rep(p) a b rep(q)`.
    pub fn representative(&self) -> Word {
        let mut out = Vec::new();
        self.write_rep(&mut out);
        Word::new(out).expect("trees have non-empty content")
    }

    fn write_rep(&self, out: &mut Vec<u32>) {
        match self {
            BandTree::Leaf(a) => out.push(*a),
            BandTree::Node { prefix, prefix_pivot, suffix_pivot, suffix, .. } => {
                prefix.write_rep(out);
                out.push(*prefix_pivot);
                out.push(*suffix_pivot);
                suffix.write_rep(out);
            }
        }
    }
}

impl fmt::Display for BandTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BandTree::Leaf(a) => write!(f, "x{a}"),
            BandTree::Node { prefix, prefix_pivot, suffix_pivot, suffix, .. } => {
                write!(f, "[{prefix} x{prefix_pivot} | x{suffix_pivot} {suffix}]")
            }
        }
    }
}

fn distinct(letters: &[u32]) -> Vec<u32> {
    let mut c = letters.to_vec();
    c.sort_unstable();
    c.dedup();
    c
}

/// Index of the first position at which all `target` letters have occurred.
fn completion_point(letters: impl Iterator<Item = u32>, target: usize) -> usize {
    let mut seen: Vec<u32> = Vec::new();
    for (i, a) in letters.enumerate() {
        if !seen.contains(&a) {
            seen.push(a);
            if seen.len() == target {
                return i;
            }
        }
    }
    unreachable!("target is the content size")
}

fn canon(w: &[u32]) -> BandTree {
    let content = distinct(w);
    if content.len() == 1 {
        return BandTree::Leaf(content[0]);
    }
    let k = content.len();
    let i = completion_point(w.iter().copied(), k);
    let j = w.len() - 1 - completion_point(w.iter().rev().copied(), k);
    BandTree::Node {
        content,
        prefix: Box::new(canon(&w[..i])),
        prefix_pivot: w[i],
        suffix_pivot: w[j],
        suffix: Box::new(canon(&w[j + 1..])),
    }
}

pub fn band_canon(w: &Word) -> BandTree {
    canon(w.letters())
}

/// Equality in the free band.
pub fn band_equal(u: &Word, v: &Word) -> bool {
    band_canon(u) == band_canon(v)
}
