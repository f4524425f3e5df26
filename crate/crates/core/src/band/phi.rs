use super::{g_word, i_word, Word};
use crate::error::{Budget, Error, Result};
use crate::omega::{Assignment, IdentityChecker, PseudoIdentity, TermArena, TermId};
use crate::semigroup::FiniteSemigroup;
use std::collections::HashMap;

fn var_name(k: u32) -> String {
    format!("x{k}")
}

/// The substitution φ into ω-terms:
///
/// ```text
/// φ(x1)      = (x1^w x2^w x1^w)^w
/// φ(x2)      = x2^w
/// φ(x_{m+1}) = (x_{m+1}^w φ(mirror(G_m) G_m)^w x_{m+1}^w)^w    (m ≥ 2)
/// ```
///
/// extended letterwise, with concatenation nested to the left.
pub struct Phi<'a> {
    arena: &'a mut TermArena,
    letters: HashMap<u32, TermId>,
}

impl<'a> Phi<'a> {
    pub fn new(arena: &'a mut TermArena) -> Self {
        Phi { arena, letters: HashMap::new() }
    }

    pub fn letter(&mut self, k: u32) -> TermId {
        if let Some(&t) = self.letters.get(&k) {
            return t;
        }
        let t = match k {
            1 => {
                let x1 = self.arena.var("x1");
                let x2 = self.arena.var("x2");
                let (w1, w2) = (self.arena.omega(x1), self.arena.omega(x2));
                let body = self.arena.concat_all(&[w1, w2, w1]).expect("non-empty");
                self.arena.omega(body)
            }
            2 => {
                let x2 = self.arena.var("x2");
                self.arena.omega(x2)
            }
            _ => {
                let m = (k - 1) as usize;
                let g = g_word(m).expect("m ≥ 2");
                let inner = g.mirror().concat(&g);
                let inner = self.word(&inner);
                let inner = self.arena.omega(inner);
                let x = self.arena.var(&var_name(k));
                let xw = self.arena.omega(x);
                let body = self.arena.concat_all(&[xw, inner, xw]).expect("non-empty");
                self.arena.omega(body)
            }
        };
        self.letters.insert(k, t);
        t
    }

    pub fn word(&mut self, w: &Word) -> TermId {
        let parts: Vec<TermId> = w.letters().iter().map(|&k| self.letter(k)).collect();
        self.arena.concat_all(&parts).expect("words are non-empty")
    }
}

/// φ applied to a word.
pub fn phi(arena: &mut TermArena, w: &Word) -> TermId {
    Phi::new(arena).word(w)
}

/// `φ(G_m) = φ(I_m)`, or the mirrored pair `φ(Ḡ_m) = φ(Ī_m)`.
pub fn phi_identity(arena: &mut TermArena, m: usize, mirrored: bool) -> Result<PseudoIdentity> {
    let (mut g, mut i) = (g_word(m)?, i_word(m)?);
    if mirrored {
        g = g.mirror();
        i = i.mirror();
    }
    let mut p = Phi::new(arena);
    let lhs = p.word(&g);
    let rhs = p.word(&i);
    let side = if mirrored { "L" } else { "R" };
    Ok(PseudoIdentity { lhs, rhs, name: Some(format!("phi-{side}{m}")) })
}

/// A word as a plain term (no ω).
pub fn word_term(arena: &mut TermArena, w: &Word) -> TermId {
    let parts: Vec<TermId> = w.letters().iter().map(|&k| arena.var(&var_name(k))).collect();
    arena.concat_all(&parts).expect("words are non-empty")
}

/// A falsifying assignment of `lhs = rhs` in the band `b`, if any.
pub fn band_word_identity_witness(
    b: &FiniteSemigroup,
    lhs: &Word,
    rhs: &Word,
    budget: &Budget,
) -> Result<Option<Assignment>> {
    if !b.is_band() {
        return Err(Error::NotABand);
    }
    let mut arena = TermArena::new();
    let id = PseudoIdentity { lhs: word_term(&mut arena, lhs), rhs: word_term(&mut arena, rhs), name: None };
    IdentityChecker::new(&arena, &id, b).witness(budget)
}

pub fn band_satisfies_word_identity(b: &FiniteSemigroup, lhs: &Word, rhs: &Word, budget: &Budget) -> Result<bool> {
    Ok(band_word_identity_witness(b, lhs, rhs, budget)?.is_none())
}
