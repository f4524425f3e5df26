use super::{Node, PseudoIdentity, TermArena, TermId, VarId};
use crate::error::{Budget, Error, Result};
use crate::semigroup::{Element, FiniteSemigroup};
use std::collections::BTreeMap;
use std::fmt;

/// Values for the variables of a term, by name.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    pub bindings: BTreeMap<String, Element>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(mut self, name: &str, value: Element) -> Self {
        self.bindings.insert(name.to_string(), value);
        self
    }

    pub fn get(&self, name: &str) -> Option<Element> {
        self.bindings.get(name).copied()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.bindings.iter().map(|(k, v)| format!("{k}↦{v}")).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Value of `t` in `s` under `a`.
pub fn eval(s: &FiniteSemigroup, arena: &TermArena, t: TermId, a: &Assignment) -> Result<Element> {
    let order = arena.reachable(&[t]);
    let mut value = vec![usize::MAX; t.index() + 1];
    for n in order {
        value[n.index()] = match arena.node(n) {
            Node::Var(v) => {
                let name = arena.var_name(v);
                let x = a.get(name).ok_or_else(|| Error::UnboundVariable(name.to_string()))?;
                if x >= s.order() {
                    return Err(Error::NoSuchElement(x));
                }
                x
            }
            Node::Concat(l, r) => s.mul(value[l.index()], value[r.index()]),
            Node::Omega(c) => s.omega_power(value[c.index()]),
            Node::OmegaMinusOne(c) => s.omega_minus_one(value[c.index()]),
        };
    }
    Ok(value[t.index()])
}

#[derive(Clone, Copy, Debug)]
enum Op {
    Var(usize),
    Mul(usize, usize),
    Omega(usize),
    OmegaMinusOne(usize),
}

/// Checks one pseudo-identity in one semigroup by enumerating every
/// assignment of its variables.
///
/// Assignments run in mixed-radix order. Each node records the outermost
/// loop position it depends on, so after a change at position `p` only
/// nodes involving a variable at position `≥ p` are recomputed.
pub struct IdentityChecker<'a> {
    s: &'a FiniteSemigroup,
    ops: Vec<Op>,
    /// Variables in loop order, outermost first.
    vars: Vec<(VarId, String)>,
    /// `from_level[p]`: op indices depending on a variable at position ≥ p.
    from_level: Vec<Vec<usize>>,
    lhs: usize,
    rhs: usize,
}

impl<'a> IdentityChecker<'a> {
    pub fn new(arena: &TermArena, id: &PseudoIdentity, s: &'a FiniteSemigroup) -> Self {
        let nodes = arena.reachable(&[id.lhs, id.rhs]);
        let mut slot = vec![usize::MAX; nodes.last().map_or(0, |n| n.index() + 1)];
        for (i, n) in nodes.iter().enumerate() {
            slot[n.index()] = i;
        }
        // variable sets per node, as sorted var-id lists
        let mut var_sets: Vec<Vec<VarId>> = Vec::with_capacity(nodes.len());
        for &n in &nodes {
            let set = match arena.node(n) {
                Node::Var(v) => vec![v],
                Node::Concat(a, b) => {
                    let mut u = var_sets[slot[a.index()]].clone();
                    u.extend_from_slice(&var_sets[slot[b.index()]]);
                    u.sort();
                    u.dedup();
                    u
                }
                Node::Omega(a) | Node::OmegaMinusOne(a) => var_sets[slot[a.index()]].clone(),
            };
            var_sets.push(set);
        }
        let mut all_vars: Vec<VarId> = var_sets.iter().flatten().copied().collect();
        all_vars.sort();
        all_vars.dedup();
        // Fewest dependent nodes goes innermost.
        let dependents = |v: VarId| var_sets.iter().filter(|set| set.contains(&v)).count();
        all_vars.sort_by_key(|&v| (std::cmp::Reverse(dependents(v)), v));
        let position = |v: VarId| all_vars.iter().position(|&w| w == v).expect("collected above");

        let mut ops = Vec::with_capacity(nodes.len());
        let mut level = Vec::with_capacity(nodes.len());
        for (i, &n) in nodes.iter().enumerate() {
            ops.push(match arena.node(n) {
                Node::Var(v) => Op::Var(position(v)),
                Node::Concat(a, b) => Op::Mul(slot[a.index()], slot[b.index()]),
                Node::Omega(a) => Op::Omega(slot[a.index()]),
                Node::OmegaMinusOne(a) => Op::OmegaMinusOne(slot[a.index()]),
            });
            level.push(var_sets[i].iter().map(|&v| position(v)).max().unwrap_or(0));
        }
        let from_level = (0..all_vars.len())
            .map(|p| (0..ops.len()).filter(|&i| level[i] >= p).collect())
            .collect();
        IdentityChecker {
            s,
            ops,
            vars: all_vars.iter().map(|&v| (v, arena.var_name(v).to_string())).collect(),
            from_level,
            lhs: slot[id.lhs.index()],
            rhs: slot[id.rhs.index()],
        }
    }

    pub fn variable_count(&self) -> usize {
        self.vars.len()
    }

    /// Number of assignments a full check enumerates.
    pub fn assignment_count(&self) -> u128 {
        (self.s.order() as u128).saturating_pow(self.vars.len() as u32)
    }

    /// A falsifying assignment, or `None` when the identity holds.
    pub fn witness(&self, budget: &Budget) -> Result<Option<Assignment>> {
        let needed = self.assignment_count();
        if needed > budget.assignments as u128 {
            return Err(Error::AssignmentBudgetExceeded { needed, limit: budget.assignments });
        }
        let n = self.s.order();
        let k = self.vars.len();
        let (omega, omega_m1) = self.s.omega_tables();
        let mut digits = vec![0usize; k];
        let mut value = vec![0usize; self.ops.len()];
        let mut changed_from = 0;
        loop {
            let recompute = if k == 0 { &[][..] } else { &self.from_level[changed_from][..] };
            for &i in recompute {
                value[i] = match self.ops[i] {
                    Op::Var(p) => digits[p],
                    Op::Mul(a, b) => self.s.mul(value[a], value[b]),
                    Op::Omega(a) => omega[value[a]],
                    Op::OmegaMinusOne(a) => omega_m1[value[a]],
                };
            }
            if value[self.lhs] != value[self.rhs] {
                let bindings = self.vars.iter().zip(&digits).map(|((_, name), &d)| (name.clone(), d)).collect();
                return Ok(Some(Assignment { bindings }));
            }
            // odometer step, innermost digit last
            let mut p = k;
            loop {
                if p == 0 {
                    return Ok(None);
                }
                p -= 1;
                digits[p] += 1;
                if digits[p] < n {
                    break;
                }
                digits[p] = 0;
            }
            changed_from = p;
        }
    }

    pub fn holds(&self, budget: &Budget) -> Result<bool> {
        Ok(self.witness(budget)?.is_none())
    }
}

impl TermArena {
    /// Whether `s` satisfies `id`.
    pub fn satisfies(&self, s: &FiniteSemigroup, id: &PseudoIdentity, budget: &Budget) -> Result<bool> {
        IdentityChecker::new(self, id, s).holds(budget)
    }

    pub fn satisfies_witness(
        &self,
        s: &FiniteSemigroup,
        id: &PseudoIdentity,
        budget: &Budget,
    ) -> Result<Option<Assignment>> {
        IdentityChecker::new(self, id, s).witness(budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn eval_basics() {
        let mut a = TermArena::new();
        let x = a.var("x");
        let z3 = FiniteSemigroup::cyclic_group(3);
        let asg = Assignment::new().bind("x", 2);
        assert_eq!(eval(&z3, &a, x, &asg).unwrap(), 2);
        let w = a.omega(x);
        assert_eq!(eval(&z3, &a, w, &Assignment::new().bind("x", 1)).unwrap(), 0);
        let y = a.var("y");
        let xy = a.concat(x, y);
        assert_eq!(eval(&z3, &a, xy, &asg), Err(Error::UnboundVariable("y".into())));
    }

    #[test]
    fn da_term_in_left_zero() {
        let mut a = TermArena::new();
        let id = a.parse_identity("(xy)^w x (xy)^w = (xy)^w").unwrap();
        let lz = FiniteSemigroup::left_zero(2);
        let asg = Assignment::new().bind("x", 0).bind("y", 1);
        assert_eq!(eval(&lz, &a, id.lhs, &asg).unwrap(), 0);
        assert_eq!(eval(&lz, &a, id.rhs, &asg).unwrap(), 0);
        assert!(a.satisfies(&lz, &id, &budget()).unwrap());
    }

    #[test]
    fn brandt_falsifies_da() {
        let mut a = TermArena::new();
        let id = a.parse_identity("(xy)^w x (xy)^w = (xy)^w").unwrap();
        let b2 = FiniteSemigroup::brandt_b2();
        let w = a.satisfies_witness(&b2, &id, &budget()).unwrap().unwrap();
        assert_eq!(w, Assignment::new().bind("x", 0).bind("y", 1));
        // (ab)^ω a (ab)^ω = ab·a·ab = a·ab = 0, while (ab)^ω = ab
        assert_eq!(eval(&b2, &a, id.lhs, &w).unwrap(), 4);
        assert_eq!(eval(&b2, &a, id.rhs, &w).unwrap(), 2);
    }

    #[test]
    fn trivial_satisfies_everything() {
        let mut a = TermArena::new();
        let id = a.parse_identity("x^(w-1) y z = z x").unwrap();
        assert!(a.satisfies(&FiniteSemigroup::trivial(), &id, &budget()).unwrap());
    }

    #[test]
    fn semilattice_commutation_instance() {
        let mut a = TermArena::new();
        let id = a.parse_identity("x^w y = y x^w").unwrap();
        assert!(a.satisfies(&FiniteSemigroup::semilattice2(), &id, &budget()).unwrap());
        assert!(!a.satisfies(&FiniteSemigroup::left_zero(2), &id, &budget()).unwrap());
    }

    #[test]
    fn budget_guard() {
        let mut a = TermArena::new();
        let id = a.parse_identity("x y z = z y x").unwrap();
        let small = Budget { assignments: 26, ..budget() };
        let s = FiniteSemigroup::cyclic_group(3);
        assert!(matches!(
            a.satisfies(&s, &id, &small),
            Err(Error::AssignmentBudgetExceeded { needed: 27, limit: 26 })
        ));
        let ok = Budget { assignments: 27, ..budget() };
        assert!(a.satisfies(&s, &id, &ok).unwrap());
    }

    #[test]
    fn incremental_matches_direct_eval() {
        // every assignment agrees with the from-scratch evaluator
        let mut a = TermArena::new();
        let id = a.parse_identity("(x^w y)^(w-1) z x = y (z x)^w").unwrap();
        let s = FiniteSemigroup::brandt_b2().monoid_closure();
        let checker = IdentityChecker::new(&a, &id, &s);
        let direct_fails = (0..6).any(|x| {
            (0..6).any(|y| {
                (0..6).any(|z| {
                    let asg = Assignment::new().bind("x", x).bind("y", y).bind("z", z);
                    eval(&s, &a, id.lhs, &asg).unwrap() != eval(&s, &a, id.rhs, &asg).unwrap()
                })
            })
        });
        let w = checker.witness(&budget()).unwrap();
        assert_eq!(w.is_some(), direct_fails);
        if let Some(w) = w {
            assert_ne!(eval(&s, &a, id.lhs, &w).unwrap(), eval(&s, &a, id.rhs, &w).unwrap());
        }
    }
}
