//! The congruences `~K` and `~D`, and Mal'cev products with `K`, `D` and
//! `Nil` on the left.
//!
//! `s ~K t` when, for every idempotent `e`, either both `es` and `et` fall
//! strictly below `e` in the J-order, or `es = et`. `~D` is the mirror image
//! with `se`, `te`. The quotient by `~K` is the least quotient whose
//! projection is a K-morphism, so `S ∈ K ⓜ V` iff `S/~K ∈ V`.

use crate::error::{Budget, Error, Result};
use crate::omega::IdentitySet;
use crate::semigroup::{enumerate_congruences, Congruence, FiniteSemigroup, GreensData};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MalcevSide {
    K,
    D,
    Nil,
}

impl fmt::Display for MalcevSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MalcevSide::K => "K",
            MalcevSide::D => "D",
            MalcevSide::Nil => "Nil",
        })
    }
}

type Test = dyn Fn(&FiniteSemigroup) -> Result<bool> + Send + Sync;

/// A pseudovariety, represented by its membership test.
#[derive(Clone)]
pub struct VarietyPredicate {
    name: String,
    monoid: bool,
    test: Arc<Test>,
}

impl fmt::Debug for VarietyPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VarietyPredicate").field("name", &self.name).field("monoid", &self.monoid).finish()
    }
}

impl VarietyPredicate {
    pub fn new(name: impl Into<String>, test: impl Fn(&FiniteSemigroup) -> Result<bool> + Send + Sync + 'static) -> Self {
        VarietyPredicate { name: name.into(), monoid: false, test: Arc::new(test) }
    }

    /// A predicate on monoids; [`check`](Self::check) rejects inputs without an identity.
    pub fn monoid(name: impl Into<String>, test: impl Fn(&FiniteSemigroup) -> Result<bool> + Send + Sync + 'static) -> Self {
        VarietyPredicate { name: name.into(), monoid: true, test: Arc::new(test) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_monoid_predicate(&self) -> bool {
        self.monoid
    }

    pub fn check(&self, s: &FiniteSemigroup) -> Result<bool> {
        if self.monoid && !s.is_monoid() {
            return Err(Error::NotAMonoid(self.name.clone()));
        }
        (self.test)(s)
    }

    /// Intersection of two pseudovarieties.
    pub fn and(&self, other: &VarietyPredicate) -> VarietyPredicate {
        let (a, b) = (self.clone(), other.clone());
        VarietyPredicate {
            name: format!("{} ∩ {}", self.name, other.name),
            monoid: self.monoid || other.monoid,
            test: Arc::new(move |s| Ok(a.check(s)? && b.check(s)?)),
        }
    }

    pub fn trivial() -> Self {
        Self::new("I", |s| Ok(s.order() == 1))
    }

    pub fn j_trivial() -> Self {
        Self::new("J", |s| Ok(s.is_j_trivial()))
    }

    pub fn r_trivial() -> Self {
        Self::new("R", |s| Ok(s.is_r_trivial()))
    }

    pub fn l_trivial() -> Self {
        Self::new("L", |s| Ok(s.is_l_trivial()))
    }

    /// The pseudovariety defined by a built-in identity set.
    pub fn builtin(name: &str, budget: Budget) -> Result<Self> {
        let set = IdentitySet::builtin(name)?;
        Ok(Self::new(name, move |s| set.satisfied_by(s, &budget)))
    }
}

fn sim(s: &FiniteSemigroup, greens: &GreensData, left: bool) -> Congruence {
    let idempotents = s.idempotents();
    // Signature over the idempotents: None when the product drops below e.
    let signature = |x: usize| -> Vec<Option<usize>> {
        idempotents
            .iter()
            .map(|&e| {
                let p = if left { s.mul(e, x) } else { s.mul(x, e) };
                (!greens.j_less(p, e)).then_some(p)
            })
            .collect()
    };
    let sigs: Vec<Vec<Option<usize>>> = s.elements().map(signature).collect();
    let mut keys = std::collections::HashMap::new();
    let classes = sigs
        .iter()
        .map(|sig| {
            let next = keys.len();
            *keys.entry(sig.clone()).or_insert(next)
        })
        .collect();
    Congruence::from_classes(classes)
}

/// `~K`, checked to be a congruence.
pub fn sim_k(s: &FiniteSemigroup) -> Result<Congruence> {
    sim_k_with(s, &s.greens())
}

pub fn sim_k_with(s: &FiniteSemigroup, greens: &GreensData) -> Result<Congruence> {
    let c = sim(s, greens, true);
    c.check_compatible(s)?;
    Ok(c)
}

/// `~D`, checked to be a congruence.
pub fn sim_d(s: &FiniteSemigroup) -> Result<Congruence> {
    sim_d_with(s, &s.greens())
}

pub fn sim_d_with(s: &FiniteSemigroup, greens: &GreensData) -> Result<Congruence> {
    let c = sim(s, greens, false);
    c.check_compatible(s)?;
    Ok(c)
}

/// The congruence for one side (`Nil` has none of its own).
pub fn side_congruence(s: &FiniteSemigroup, side: MalcevSide) -> Result<Congruence> {
    match side {
        MalcevSide::K => sim_k(s),
        MalcevSide::D => sim_d(s),
        MalcevSide::Nil => Err(Error::InvalidArgument("Nil has no single canonical congruence".into())),
    }
}

/// Whether every idempotent class of `c` is, as a subsemigroup, in `inner`.
pub fn is_v_morphism_onto_quotient(s: &FiniteSemigroup, c: &Congruence, inner: &VarietyPredicate) -> Result<bool> {
    let (q, _) = s.quotient(c)?;
    let blocks = c.blocks();
    for cls in q.idempotents() {
        let pre = s.restrict(&blocks[cls])?;
        if !inner.check(&pre.semigroup)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `S ∈ side ⓜ V`, decided through the canonical quotient(s).
pub fn malcev_member(s: &FiniteSemigroup, side: MalcevSide, inner: &VarietyPredicate) -> Result<bool> {
    let quotient_in = |c: Congruence| -> Result<bool> { inner.check(&s.quotient(&c)?.0) };
    match side {
        MalcevSide::K => quotient_in(sim_k(s)?),
        MalcevSide::D => quotient_in(sim_d(s)?),
        MalcevSide::Nil => Ok(quotient_in(sim_k(s)?)? && quotient_in(sim_d(s)?)?),
    }
}

/// Brute force over all congruences: the coarsest one whose projection is a
/// K-morphism (resp. D-morphism). Only for small semigroups.
pub fn least_v_quotient_oracle(s: &FiniteSemigroup, side: MalcevSide) -> Result<Congruence> {
    let name = match side {
        MalcevSide::K => "K",
        MalcevSide::D => "D",
        MalcevSide::Nil => return Err(Error::InvalidArgument("oracle is defined for K and D only".into())),
    };
    let inner = VarietyPredicate::builtin(name, Budget::default())?;
    let mut good = Vec::new();
    for c in enumerate_congruences(s)? {
        if is_v_morphism_onto_quotient(s, &c, &inner)? {
            good.push(c);
        }
    }
    if let Some(top) = good.iter().find(|c| good.iter().all(|d| d.refines(c))) {
        return Ok(top.clone());
    }
    let maximal: Vec<String> = good
        .iter()
        .filter(|c| !good.iter().any(|d| d != *c && c.refines(d)))
        .map(|c| format!("{:?}", c.classes()))
        .collect();
    Err(Error::NoLeastElement(maximal.join(" | ")))
}
