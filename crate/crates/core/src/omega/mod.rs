//! ω-terms as hash-consed DAGs.
//!
//! Terms are built from variables by concatenation, `t^ω` and `t^(ω-1)`.
//! Every node lives in a [`TermArena`]; building a node that already exists
//! returns the existing id, so equal subterms are always shared.

mod builtin;
mod eval;
mod parse;

pub use builtin::{builtin_identities, BUILTIN_NAMES};
pub use eval::{eval, Assignment, IdentityChecker};

use std::collections::HashMap;
use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermId(u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(u32);

impl TermId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl VarId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Var(VarId),
    Concat(TermId, TermId),
    Omega(TermId),
    OmegaMinusOne(TermId),
}

/// `lhs = rhs`, optionally named.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoIdentity {
    pub lhs: TermId,
    pub rhs: TermId,
    pub name: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct TermArena {
    nodes: Vec<Node>,
    index: HashMap<Node, TermId>,
    var_names: Vec<String>,
    var_index: HashMap<String, VarId>,
}

/// Notation for the two exponents when rendering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Notation {
    /// `^w` and `^(w-1)`, re-parseable.
    Ascii,
    /// `^ω` and `^(ω-1)`.
    Unicode,
}

impl TermArena {
    pub fn new() -> Self {
        Self::default()
    }

    fn intern(&mut self, node: Node) -> TermId {
        if let Some(&id) = self.index.get(&node) {
            return id;
        }
        let id = TermId(self.nodes.len() as u32);
        self.nodes.push(node);
        self.index.insert(node, id);
        id
    }

    pub fn var_id(&mut self, name: &str) -> VarId {
        if let Some(&v) = self.var_index.get(name) {
            return v;
        }
        let v = VarId(self.var_names.len() as u32);
        self.var_names.push(name.to_string());
        self.var_index.insert(name.to_string(), v);
        v
    }

    pub fn var(&mut self, name: &str) -> TermId {
        let v = self.var_id(name);
        self.intern(Node::Var(v))
    }

    pub fn concat(&mut self, left: TermId, right: TermId) -> TermId {
        self.intern(Node::Concat(left, right))
    }

    /// Left-nested concatenation of a non-empty sequence.
    pub fn concat_all(&mut self, items: &[TermId]) -> Option<TermId> {
        let (&first, rest) = items.split_first()?;
        Some(rest.iter().fold(first, |acc, &t| self.concat(acc, t)))
    }

    pub fn omega(&mut self, child: TermId) -> TermId {
        self.intern(Node::Omega(child))
    }

    pub fn omega_minus_one(&mut self, child: TermId) -> TermId {
        self.intern(Node::OmegaMinusOne(child))
    }

    pub fn node(&self, t: TermId) -> Node {
        self.nodes[t.index()]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn var_name(&self, v: VarId) -> &str {
        &self.var_names[v.index()]
    }

    pub fn lookup_var(&self, name: &str) -> Option<VarId> {
        self.var_index.get(name).copied()
    }

    /// Nodes reachable from `roots`, in increasing id order. Children always
    /// have smaller ids than their parents, so this order is topological.
    pub fn reachable(&self, roots: &[TermId]) -> Vec<TermId> {
        let mut seen = vec![false; self.nodes.len()];
        let mut stack: Vec<TermId> = roots.to_vec();
        while let Some(t) = stack.pop() {
            if std::mem::replace(&mut seen[t.index()], true) {
                continue;
            }
            match self.node(t) {
                Node::Var(_) => {}
                Node::Concat(a, b) => stack.extend([a, b]),
                Node::Omega(a) | Node::OmegaMinusOne(a) => stack.push(a),
            }
        }
        (0..self.nodes.len()).filter(|&i| seen[i]).map(|i| TermId(i as u32)).collect()
    }

    /// Variables of a term, sorted by id.
    pub fn vars(&self, t: TermId) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self
            .reachable(&[t])
            .into_iter()
            .filter_map(|n| match self.node(n) {
                Node::Var(v) => Some(v),
                _ => None,
            })
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Size of the term written out as a tree (no sharing).
    pub fn tree_size(&self, t: TermId) -> u128 {
        let mut size = vec![0u128; t.index() + 1];
        for n in self.reachable(&[t]) {
            size[n.index()] = 1 + match self.node(n) {
                Node::Var(_) => 0,
                Node::Concat(a, b) => size[a.index()].saturating_add(size[b.index()]),
                Node::Omega(a) | Node::OmegaMinusOne(a) => size[a.index()],
            };
        }
        size[t.index()]
    }

    pub fn render(&self, t: TermId) -> String {
        self.render_with(t, Notation::Ascii)
    }

    pub fn render_with(&self, t: TermId, notation: Notation) -> String {
        let mut out = String::new();
        self.write_term(&mut out, t, notation);
        out
    }

    pub fn render_identity(&self, id: &PseudoIdentity, notation: Notation) -> String {
        format!("{} = {}", self.render_with(id.lhs, notation), self.render_with(id.rhs, notation))
    }

    // Concatenation parses left-associatively, so a right operand that is
    // itself a concatenation needs brackets.
    fn write_term(&self, out: &mut String, t: TermId, notation: Notation) {
        match self.node(t) {
            Node::Concat(a, b) => {
                self.write_term(out, a, notation);
                out.push(' ');
                if matches!(self.node(b), Node::Concat(..)) {
                    out.push('(');
                    self.write_term(out, b, notation);
                    out.push(')');
                } else {
                    self.write_factor(out, b, notation);
                }
            }
            _ => self.write_factor(out, t, notation),
        }
    }

    fn write_factor(&self, out: &mut String, t: TermId, notation: Notation) {
        let (w, wm1) = match notation {
            Notation::Ascii => ("^w", "^(w-1)"),
            Notation::Unicode => ("^ω", "^(ω-1)"),
        };
        match self.node(t) {
            Node::Var(v) => out.push_str(self.var_name(v)),
            Node::Concat(..) => {
                out.push('(');
                self.write_term(out, t, notation);
                out.push(')');
            }
            Node::Omega(a) | Node::OmegaMinusOne(a) => {
                if matches!(self.node(a), Node::Var(_)) {
                    self.write_factor(out, a, notation);
                } else {
                    out.push('(');
                    self.write_term(out, a, notation);
                    out.push(')');
                }
                let _ = write!(out, "{}", if matches!(self.node(t), Node::Omega(_)) { w } else { wm1 });
            }
        }
    }
}

/// A set of pseudo-identities together with the arena holding their terms.
#[derive(Clone, Debug, Default)]
pub struct IdentitySet {
    pub arena: TermArena,
    pub identities: Vec<PseudoIdentity>,
}

impl IdentitySet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parses one identity per line; `#` starts a comment.
    pub fn parse(text: &str) -> crate::Result<Self> {
        let mut set = IdentitySet::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let id = set.arena.parse_identity(line).map_err(|e| crate::Error::parse(i + 1, e.to_string()))?;
            set.identities.push(id);
        }
        Ok(set)
    }

    pub fn builtin(name: &str) -> crate::Result<Self> {
        let mut set = IdentitySet::new();
        set.identities = builtin_identities(&mut set.arena, name)?;
        Ok(set)
    }

    pub fn push(&mut self, id: PseudoIdentity) {
        self.identities.push(id);
    }

    /// First identity that fails in `s`, with a falsifying assignment.
    pub fn first_failure(
        &self,
        s: &crate::FiniteSemigroup,
        budget: &crate::Budget,
    ) -> crate::Result<Option<(usize, Assignment)>> {
        for (i, id) in self.identities.iter().enumerate() {
            let checker = IdentityChecker::new(&self.arena, id, s);
            if let Some(w) = checker.witness(budget)? {
                return Ok(Some((i, w)));
            }
        }
        Ok(None)
    }

    pub fn satisfied_by(&self, s: &crate::FiniteSemigroup, budget: &crate::Budget) -> crate::Result<bool> {
        Ok(self.first_failure(s, budget)?.is_none())
    }

    pub fn render(&self, notation: Notation) -> Vec<String> {
        self.identities.iter().map(|id| self.arena.render_identity(id, notation)).collect()
    }
}
