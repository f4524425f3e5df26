//! DA and the levels `R_m`, `L_m` inside it.
//!
//! `R_1 = L_1` is the class of J-trivial semigroups, and
//! `R_{m+1} = K ⓜ L_m`, `L_{m+1} = D ⓜ R_m`. Membership is decided by
//! quotienting alternately by `~K` and `~D`, or independently by checking
//! DA together with `φ(G_m) = φ(I_m)`.

mod report;
mod verify;

pub use report::{classify, AuxFlags, HierarchyReport, LevelFlags, DEFAULT_MAX_M};
pub use verify::{
    run_suite, verify_band_interval, verify_da_equivalence, verify_free_band, verify_generator_bound, verify_main_theorem,
    verify_malcev_minimality, verify_nil_corner, verify_r2_identity, AgreementReport, Disagreement,
    GeneratorBoundReport, Side, FREE_BAND_ORDERS,
};

use crate::band::phi_identity;
use crate::error::{Budget, Error, Result};
use crate::malcev::{sim_d, sim_k, VarietyPredicate};
use crate::omega::{IdentityChecker, IdentitySet, TermArena};
use crate::semigroup::FiniteSemigroup;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DaRoute {
    /// `(xy)^w x (xy)^w = (xy)^w`.
    Identity,
    /// Every regular element is idempotent.
    Regular,
    /// `e M_e e = e` for every idempotent `e`.
    Local,
    /// All three, failing if they disagree.
    All,
}

fn da_by_identity(s: &FiniteSemigroup) -> Result<bool> {
    IdentitySet::builtin("DA")?.satisfied_by(s, &Budget::default())
}

fn da_by_regular(s: &FiniteSemigroup) -> bool {
    s.elements().all(|x| s.is_idempotent(x) || !s.elements().any(|t| s.mul(s.mul(x, t), x) == x))
}

fn da_by_local(s: &FiniteSemigroup) -> Result<bool> {
    let greens = s.greens();
    for e in s.idempotents() {
        let me = s.subsemigroup_above_j_with(&greens, e)?;
        if me.embedding.iter().any(|&x| s.mul(s.mul(e, x), e) != e) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn in_da(s: &FiniteSemigroup, route: DaRoute) -> Result<bool> {
    match route {
        DaRoute::Identity => da_by_identity(s),
        DaRoute::Regular => Ok(da_by_regular(s)),
        DaRoute::Local => da_by_local(s),
        DaRoute::All => {
            let (a, b, c) = (da_by_identity(s)?, da_by_regular(s), da_by_local(s)?);
            if a == b && b == c {
                Ok(a)
            } else {
                Err(Error::RouteDisagreement(format!("identity {a}, regular {b}, local {c}")))
            }
        }
    }
}

fn check_level(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidArgument("levels start at 1".into()));
    }
    Ok(())
}

/// `S ∈ R_m`, by iterated quotients.
pub fn in_rm(s: &FiniteSemigroup, m: usize) -> Result<bool> {
    check_level(m)?;
    level(s, m, true)
}

/// `S ∈ L_m`, by iterated quotients.
pub fn in_lm(s: &FiniteSemigroup, m: usize) -> Result<bool> {
    check_level(m)?;
    level(s, m, false)
}

fn level(s: &FiniteSemigroup, m: usize, right: bool) -> Result<bool> {
    if m == 1 || s.order() == 1 {
        return Ok(s.is_j_trivial());
    }
    let c = if right { sim_k(s)? } else { sim_d(s)? };
    if c.is_identity() {
        // the quotient is S itself; the next level down has the other side
        return level(s, m - 1, !right);
    }
    let (q, _) = s.quotient(&c)?;
    level(&q, m - 1, !right)
}

/// One step of the quotient chain behind [`in_rm`] / [`in_lm`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ChainStep {
    /// `"K"` or `"D"`.
    pub congruence: String,
    pub order_before: usize,
    pub order_after: usize,
}

/// The quotients taken when deciding `R_m` (`right`) or `L_m`, ending with
/// the J-triviality verdict on the last quotient.
pub fn quotient_chain(s: &FiniteSemigroup, m: usize, right: bool) -> Result<(Vec<ChainStep>, bool)> {
    check_level(m)?;
    let mut steps = Vec::new();
    let mut cur = s.clone();
    let mut side = right;
    for _ in 1..m {
        let c = if side { sim_k(&cur)? } else { sim_d(&cur)? };
        let (q, _) = cur.quotient(&c)?;
        steps.push(ChainStep {
            congruence: if side { "K" } else { "D" }.to_string(),
            order_before: cur.order(),
            order_after: q.order(),
        });
        cur = q;
        side = !side;
    }
    let verdict = cur.is_j_trivial();
    Ok((steps, verdict))
}

fn by_identity(s: &FiniteSemigroup, m: usize, mirrored: bool, budget: &Budget) -> Result<bool> {
    if m < 2 {
        return Err(Error::InvalidArgument("the identity route needs m ≥ 2".into()));
    }
    if !in_da(s, DaRoute::Identity)? {
        return Ok(false);
    }
    let mut arena = TermArena::new();
    let id = phi_identity(&mut arena, m, mirrored)?;
    IdentityChecker::new(&arena, &id, s).holds(budget)
}

/// `S ∈ DA` and `S ⊨ φ(G_m) = φ(I_m)`.
pub fn in_rm_by_identity(s: &FiniteSemigroup, m: usize, budget: &Budget) -> Result<bool> {
    by_identity(s, m, false, budget)
}

/// `S ∈ DA` and `S ⊨ φ(Ḡ_m) = φ(Ī_m)`.
pub fn in_lm_by_identity(s: &FiniteSemigroup, m: usize, budget: &Budget) -> Result<bool> {
    by_identity(s, m, true, budget)
}

/// Every local monoid `eSe` lies in `inner`.
pub fn in_local(s: &FiniteSemigroup, inner: &VarietyPredicate) -> Result<bool> {
    for e in s.idempotents() {
        if !inner.check(&s.local_submonoid(e)?.semigroup)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// J-triviality as a monoid predicate, for `LJ`.
pub fn j_trivial_monoids() -> VarietyPredicate {
    VarietyPredicate::monoid("J_M", |s| Ok(s.is_j_trivial()))
}
