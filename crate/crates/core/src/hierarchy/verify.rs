use super::{in_da, in_lm, in_lm_by_identity, in_rm, in_rm_by_identity, DaRoute};
use crate::band::{band_canon, band_word_identity_witness, free_band, g_word, i_word, phi_identity, BandTree, Word};
use crate::corpus::CorpusItem;
use crate::error::{Budget, Error, Result};
use crate::malcev::{
    is_v_morphism_onto_quotient, least_v_quotient_oracle, malcev_member, sim_d, sim_k, MalcevSide, VarietyPredicate,
};
use crate::omega::{IdentityChecker, IdentitySet, TermArena};
use crate::semigroup::MAX_CONGRUENCE_ENUMERATION;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    R,
    L,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Disagreement {
    pub index: usize,
    pub id: String,
    pub detail: String,
}

/// Outcome of running one check over a corpus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AgreementReport {
    pub suite: String,
    pub checked: usize,
    pub disagreements: Vec<Disagreement>,
    /// Items abandoned because a budget ran out.
    pub skipped: Vec<Disagreement>,
}

impl AgreementReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }

    /// Passed with nothing skipped.
    pub fn complete(&self) -> bool {
        self.passed() && self.skipped.is_empty()
    }

    pub fn merge(mut self, other: AgreementReport) -> AgreementReport {
        self.suite = format!("{} + {}", self.suite, other.suite);
        self.checked += other.checked;
        self.disagreements.extend(other.disagreements);
        self.skipped.extend(other.skipped);
        self
    }
}

/// Reports of [`verify_generator_bound`].
pub type GeneratorBoundReport = AgreementReport;

enum Outcome {
    Agree,
    Disagree(String),
    Skip(String),
}

/// Runs `check` on every item in parallel; results keep corpus order.
pub fn run_suite<F>(suite: &str, corpus: &[CorpusItem], check: F) -> AgreementReport
where
    F: Fn(&CorpusItem) -> Result<Option<String>> + Sync,
{
    let outcomes: Vec<Outcome> = corpus
        .par_iter()
        .map(|item| match check(item) {
            Ok(None) => Outcome::Agree,
            Ok(Some(detail)) => Outcome::Disagree(detail),
            Err(e) if e.is_budget() => Outcome::Skip(e.to_string()),
            Err(e) => Outcome::Disagree(format!("error: {e}")),
        })
        .collect();
    let mut report =
        AgreementReport { suite: suite.to_string(), checked: 0, disagreements: Vec::new(), skipped: Vec::new() };
    for (index, (item, outcome)) in corpus.iter().zip(outcomes).enumerate() {
        let entry = |detail| Disagreement { index, id: item.id.clone(), detail };
        match outcome {
            Outcome::Agree => report.checked += 1,
            Outcome::Disagree(d) => {
                report.checked += 1;
                report.disagreements.push(entry(d));
            }
            Outcome::Skip(d) => report.skipped.push(entry(d)),
        }
    }
    report
}

/// `R_{m+1}` by quotients against `DA ∧ φ(G_{m+1}) = φ(I_{m+1})`, and dually.
pub fn verify_main_theorem(corpus: &[CorpusItem], m: usize, budget: &Budget) -> AgreementReport {
    run_suite(&format!("main-theorem m={m}"), corpus, |item| {
        let s = &item.semigroup;
        let mut problems = Vec::new();
        for side in [Side::R, Side::L] {
            let (quot, ident) = match side {
                Side::R => (in_rm(s, m + 1)?, in_rm_by_identity(s, m + 1, budget)?),
                Side::L => (in_lm(s, m + 1)?, in_lm_by_identity(s, m + 1, budget)?),
            };
            if quot != ident {
                let mut detail = format!("{side:?}{}: quotients {quot}, identity {ident}", m + 1);
                if !ident && in_da(s, DaRoute::Identity)? {
                    let mut arena = TermArena::new();
                    let id = phi_identity(&mut arena, m + 1, side == Side::L)?;
                    if let Some(w) = IdentityChecker::new(&arena, &id, s).witness(budget)? {
                        detail += &format!(" (falsified at {w})");
                    }
                }
                problems.push(detail);
            }
        }
        Ok((!problems.is_empty()).then(|| problems.join("; ")))
    })
}

/// `S ∈ R_m ∩ L_m` against membership in `Nil ⓜ (R_m ∩ L_m)`.
pub fn verify_nil_corner(corpus: &[CorpusItem], m: usize) -> AgreementReport {
    let corner = VarietyPredicate::new(format!("R{m} ∩ L{m}"), move |q| Ok(in_rm(q, m)? && in_lm(q, m)?));
    run_suite(&format!("nil-corner m={m}"), corpus, |item| {
        let s = &item.semigroup;
        let direct = corner.check(s)?;
        let nil = malcev_member(s, MalcevSide::Nil, &corner)?;
        Ok((direct != nil).then(|| format!("direct {direct}, Nil quotient {nil}")))
    })
}

/// Every `g`-generated member of DA lies in `R_{g+1} ∩ L_{g+1}`, and
/// monogenic members of DA are J-trivial.
pub fn verify_generator_bound(corpus: &[CorpusItem]) -> GeneratorBoundReport {
    run_suite("generator-bound", corpus, |item| {
        let s = &item.semigroup;
        let Some(g) = item.generator_count else { return Ok(None) };
        if !in_da(s, DaRoute::Regular)? {
            return Ok(None);
        }
        if g == 1 && !s.is_j_trivial() {
            return Ok(Some("monogenic member of DA is not J-trivial".into()));
        }
        let ok = in_rm(s, g + 1)? && in_lm(s, g + 1)?;
        Ok((!ok).then(|| format!("{g}-generated but outside R{0} ∩ L{0}", g + 1)))
    })
}

/// The identity, regular-element and local routes to DA agree.
pub fn verify_da_equivalence(corpus: &[CorpusItem]) -> AgreementReport {
    run_suite("da-equiv", corpus, |item| match in_da(&item.semigroup, DaRoute::All) {
        Ok(_) => Ok(None),
        Err(Error::RouteDisagreement(d)) => Ok(Some(d)),
        Err(e) => Err(e),
    })
}

/// For bands: `R_m` by quotients against the word identity `G_m = I_m`
/// (and `L_m` against the mirrored pair). Non-bands are passed over.
pub fn verify_band_interval(corpus: &[CorpusItem], levels: &[usize], budget: &Budget) -> AgreementReport {
    run_suite("band-interval", corpus, |item| {
        let b = &item.semigroup;
        if !b.is_band() {
            return Ok(None);
        }
        let mut problems = Vec::new();
        for &m in levels {
            let (g, i) = (g_word(m)?, i_word(m)?);
            let br = band_word_identity_witness(b, &g, &i, budget)?;
            let bl = band_word_identity_witness(b, &g.mirror(), &i.mirror(), budget)?;
            let (qr, ql) = (in_rm(b, m)?, in_lm(b, m)?);
            if qr != br.is_none() {
                problems.push(format!("R{m}: quotients {qr}, words {}", br.is_none()));
            }
            if ql != bl.is_none() {
                problems.push(format!("L{m}: quotients {ql}, words {}", bl.is_none()));
            }
        }
        Ok((!problems.is_empty()).then(|| problems.join("; ")))
    })
}

/// `~K`, `~D` are congruences with K-/D-morphism projections, and for
/// small orders coincide with the brute-force least quotient.
pub fn verify_malcev_minimality(corpus: &[CorpusItem]) -> AgreementReport {
    let k = VarietyPredicate::builtin("K", Budget::default()).expect("builtin");
    let d = VarietyPredicate::builtin("D", Budget::default()).expect("builtin");
    run_suite("malcev-minimality", corpus, |item| {
        let s = &item.semigroup;
        let mut problems = Vec::new();
        for (side, c, inner) in [(MalcevSide::K, sim_k(s)?, &k), (MalcevSide::D, sim_d(s)?, &d)] {
            if !is_v_morphism_onto_quotient(s, &c, inner)? {
                problems.push(format!("projection by ~{side} is not a {side}-morphism"));
            }
            if s.order() <= 4.min(MAX_CONGRUENCE_ENUMERATION) {
                let least = least_v_quotient_oracle(s, side)?;
                if least != c {
                    problems.push(format!("~{side} {:?} differs from least quotient {:?}", c.classes(), least.classes()));
                }
            }
        }
        Ok((!problems.is_empty()).then(|| problems.join("; ")))
    })
}

/// Orders of `FB(1..=3)`.
pub const FREE_BAND_ORDERS: [usize; 3] = [1, 6, 159];

/// Words over `x1..x3` of length `1..=max_len`, grouped by canonical form.
fn word_classes(max_len: usize) -> Vec<Vec<Word>> {
    let mut classes: BTreeMap<BandTree, Vec<Word>> = BTreeMap::new();
    let mut layer: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (1..=3).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
        for v in &layer {
            let w = Word::new(v.clone()).expect("non-empty");
            classes.entry(band_canon(&w)).or_default().push(w);
        }
    }
    classes.into_values().collect()
}

/// The free bands on one to three letters have the expected orders and
/// are bands; the canonical form is sound on every corpus band: words of
/// length at most 5 declared equal evaluate equally under every
/// assignment of three letters.
pub fn verify_free_band(corpus: &[CorpusItem]) -> AgreementReport {
    let mut sizes = AgreementReport {
        suite: "free-band orders".into(),
        checked: 0,
        disagreements: Vec::new(),
        skipped: Vec::new(),
    };
    for (i, &expected) in FREE_BAND_ORDERS.iter().enumerate() {
        sizes.checked += 1;
        let k = i + 1;
        let detail = match free_band(k) {
            Ok(fb) if fb.semigroup.order() == expected && fb.semigroup.is_band() => None,
            Ok(fb) => Some(format!("order {}, band {}", fb.semigroup.order(), fb.semigroup.is_band())),
            Err(e) => Some(format!("error: {e}")),
        };
        if let Some(detail) = detail {
            sizes.disagreements.push(Disagreement { index: i, id: format!("FB({k})"), detail });
        }
    }
    let classes: Vec<Vec<Word>> = word_classes(5).into_iter().filter(|c| c.len() > 1).collect();
    let soundness = run_suite("free-band soundness", corpus, |item| {
        let b = &item.semigroup;
        if !b.is_band() {
            return Ok(None);
        }
        let n = b.order();
        for code in 0..n * n * n {
            let a = [code % n, code / n % n, code / (n * n)];
            for class in &classes {
                let v = class[0].eval(b, &a);
                if let Some(w) = class[1..].iter().find(|w| w.eval(b, &a) != v) {
                    return Ok(Some(format!("{} and {w} separated at {a:?}", class[0])));
                }
            }
        }
        Ok(None)
    });
    sizes.merge(soundness)
}

/// `DA ∧ φ(G_2) = φ(I_2)` against `(xy)^w = (xy)^w x`.
pub fn verify_r2_identity(corpus: &[CorpusItem], budget: &Budget) -> AgreementReport {
    let r = IdentitySet::builtin("R").expect("builtin");
    run_suite("phi-R2", corpus, |item| {
        let s = &item.semigroup;
        let via_phi = in_rm_by_identity(s, 2, budget)?;
        let usual = r.satisfied_by(s, budget)?;
        Ok((via_phi != usual).then(|| format!("phi route {via_phi}, (xy)^w = (xy)^w x {usual}")))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FiniteSemigroup;

    fn tiny() -> Vec<CorpusItem> {
        vec![
            CorpusItem::new("trivial", FiniteSemigroup::trivial()),
            CorpusItem::new("lz2", FiniteSemigroup::left_zero(2)),
            CorpusItem::new("rz2", FiniteSemigroup::right_zero(2)),
            CorpusItem::new("b2", FiniteSemigroup::brandt_b2()),
        ]
    }

    #[test]
    fn small_suites_pass() {
        let b = Budget::default();
        assert!(verify_main_theorem(&tiny(), 1, &b).complete());
        assert!(verify_nil_corner(&tiny(), 2).complete());
        assert!(verify_generator_bound(&tiny()).complete());
        assert!(verify_da_equivalence(&tiny()).complete());
        assert!(verify_band_interval(&tiny(), &[2, 3], &b).complete());
        assert!(verify_malcev_minimality(&tiny()).complete());
        assert!(verify_r2_identity(&tiny(), &b).complete());
        assert!(verify_free_band(&tiny()).complete());
    }

    #[test]
    fn word_classes_of_length_two() {
        // x_a x_a collapses to x_a; the six words ab are all distinct
        let classes = word_classes(2);
        assert_eq!(classes.len(), 3 + 6);
    }

    #[test]
    fn empty_corpus_is_vacuous() {
        let r = verify_main_theorem(&[], 1, &Budget::default());
        assert!(r.complete() && r.checked == 0);
    }

    #[test]
    fn budget_overruns_are_skips() {
        let tight = Budget { assignments: 3, ..Budget::default() };
        let r = verify_main_theorem(&tiny(), 1, &tight);
        assert!(r.passed());
        assert!(!r.skipped.is_empty());
    }
}
