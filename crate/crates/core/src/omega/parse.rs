//! term     := factor+            (juxtaposition, left-associative)
//! factor   := atom | atom "^w" | atom "^(w-1)"
//! atom     := variable | "(" term ")"
//! variable := [a-z][0-9]*
//!
//! `ω` is accepted in place of `w` inside exponents.

use super::{PseudoIdentity, TermArena, TermId};
use crate::error::{Error, Result};

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    arena: &'a mut TermArena,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Syntax { position: self.pos, expected: expected.to_string() })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&format!("{c:?}"))
        }
    }

    fn starts_factor(c: char) -> bool {
        c.is_ascii_lowercase() || c == '('
    }

    fn term(&mut self) -> Result<TermId> {
        let mut acc = self.factor()?;
        while let Some(c) = self.peek() {
            if !Self::starts_factor(c) {
                break;
            }
            let next = self.factor()?;
            acc = self.arena.concat(acc, next);
        }
        Ok(acc)
    }

    fn omega_symbol(&mut self) -> Result<()> {
        match self.peek() {
            Some('w') | Some('ω') => {
                self.pos += 1;
                Ok(())
            }
            _ => self.fail("\"w\""),
        }
    }

    fn factor(&mut self) -> Result<TermId> {
        let atom = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(atom);
        }
        self.pos += 1;
        if self.peek() == Some('(') {
            self.pos += 1;
            self.omega_symbol()?;
            self.expect('-')?;
            self.expect('1')?;
            self.expect(')')?;
            Ok(self.arena.omega_minus_one(atom))
        } else {
            self.omega_symbol()?;
            Ok(self.arena.omega(atom))
        }
    }

    fn atom(&mut self) -> Result<TermId> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let t = self.term()?;
                self.expect(')')?;
                Ok(t)
            }
            Some(c) if c.is_ascii_lowercase() => {
                let start = self.pos;
                self.pos += 1;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                Ok(self.arena.var(&name))
            }
            _ => self.fail("a variable or \"(\""),
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => self.fail("end of input"),
        }
    }
}

impl TermArena {
    pub fn parse_term(&mut self, text: &str) -> Result<TermId> {
        let mut p = Parser { chars: text.chars().collect(), pos: 0, arena: self };
        let t = p.term()?;
        p.finish()?;
        Ok(t)
    }

    /// `lhs = rhs`.
    pub fn parse_identity(&mut self, text: &str) -> Result<PseudoIdentity> {
        let mut p = Parser { chars: text.chars().collect(), pos: 0, arena: self };
        let lhs = p.term()?;
        p.expect('=')?;
        let rhs = p.term()?;
        p.finish()?;
        Ok(PseudoIdentity { lhs, rhs, name: None })
    }
}
