use crate::error::{Error, Result};
use crate::semigroup::{Element, FiniteSemigroup};
use std::fmt;

/// A non-empty word over the variables `x1, x2, …` (stored 1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidArgument("empty word".into()));
        }
        if letters.contains(&0) {
            return Err(Error::InvalidArgument("variables are numbered from 1".into()));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest variable index occurring.
    pub fn max_var(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn mirror(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Value under `assignment[k-1]` for variable `x_k`.
    pub fn eval(&self, s: &FiniteSemigroup, assignment: &[Element]) -> Element {
        s.product(self.0.iter().map(|&k| assignment[k as usize - 1])).expect("words are non-empty")
    }

    /// Parses `x1 x3 x2` style tokens or plain letters (`a` = x1, `b` = x2, …).
    pub fn parse(text: &str) -> Result<Word> {
        let chars: Vec<char> = text.chars().collect();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if !c.is_ascii_lowercase() {
                return Err(Error::Syntax { position: i, expected: "a letter or x<k>".into() });
            }
            let start = i + 1;
            let mut end = start;
            while c == 'x' && end < chars.len() && chars[end].is_ascii_digit() {
                end += 1;
            }
            if end > start {
                let k: u32 = chars[start..end]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::Syntax { position: start, expected: "a variable index".into() })?;
                if k == 0 {
                    return Err(Error::Syntax { position: start, expected: "an index ≥ 1".into() });
                }
                letters.push(k);
                i = end;
            } else {
                letters.push(c as u32 - 'a' as u32 + 1);
                i += 1;
            }
        }
        if letters.is_empty() {
            return Err(Error::Syntax { position: 0, expected: "a non-empty word".into() });
        }
        Ok(Word(letters))
    }

    /// Renders with letters `a`, `b`, … (only for up to 26 variables).
    pub fn to_letters(&self) -> Option<String> {
        self.0.iter().map(|&k| (k <= 26).then(|| (b'a' + (k - 1) as u8) as char)).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in &self.0 {
            write!(f, "x{k}")?;
        }
        Ok(())
    }
}

pub fn mirror(w: &Word) -> Word {
    w.mirror()
}

fn check_level(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("G_m and I_m need m ≥ 2, got {m}")));
    }
    Ok(())
}

/// `G_2 = x2 x1`, `G_{m+1} = x_{m+1} mirror(G_m)`.
pub fn g_word(m: usize) -> Result<Word> {
    check_level(m)?;
    let mut g = Word(vec![2, 1]);
    for k in 3..=m {
        let mut v = vec![k as u32];
        v.extend(g.mirror().0);
        g = Word(v);
    }
    Ok(g)
}

/// `I_2 = x2 x1 x2`, `I_{m+1} = G_{m+1} x_{m+1} mirror(I_m)`.
pub fn i_word(m: usize) -> Result<Word> {
    check_level(m)?;
    let mut i = Word(vec![2, 1, 2]);
    for k in 3..=m {
        let mut v = g_word(k)?.0;
        v.push(k as u32);
        v.extend(i.mirror().0);
        i = Word(v);
    }
    Ok(i)
}
