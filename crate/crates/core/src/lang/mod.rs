//! Regular languages through their syntactic monoids, and the
//! deterministic, co-deterministic and unambiguous marked products.

mod dfa;
mod nfa;
mod product;
mod syntactic;

pub use dfa::Dfa;
pub use nfa::Nfa;
pub use product::{
    concat_product, is_codeterministic_product, is_deterministic_product, ProductExpression, ProductReport,
    ProductVerdict,
};
pub use syntactic::SyntacticMonoid;

use crate::error::{Budget, Result};
use crate::hierarchy::{classify, in_da, in_lm, in_rm, AgreementReport, DaRoute, Disagreement, HierarchyReport};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Hierarchy report of a language's syntactic monoid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LanguageReport {
    pub alphabet: String,
    /// States of the minimal complete automaton.
    pub states: usize,
    pub monoid_order: usize,
    pub idempotents: usize,
    /// Elements of the monoid mapped into the language.
    pub accepting: Vec<usize>,
    pub report: HierarchyReport,
    pub meanings: Vec<String>,
}

impl LanguageReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "alphabet    {}\nstates      {}\nmonoid      order {}, {} idempotents\n",
            self.alphabet, self.states, self.monoid_order, self.idempotents
        );
        out += &self.report.render_text();
        for m in &self.meanings {
            out += &format!("meaning     {m}\n");
        }
        out
    }
}

fn meanings(r: &HierarchyReport) -> Vec<String> {
    let mut out = Vec::new();
    if !r.in_da {
        out.push("not a finite union of unambiguous products of languages B*".to_string());
        return out;
    }
    out.push("finite union of unambiguous products of languages B*".to_string());
    if r.flags.j_trivial {
        out.push("level 1: J-trivial syntactic monoid".to_string());
    }
    if let Some(m) = r.min_r.filter(|&m| m > 1) {
        out.push(format!(
            "R{m}: Boolean combinations of languages of L{} and their deterministic products",
            m - 1
        ));
    }
    if let Some(m) = r.min_l.filter(|&m| m > 1) {
        out.push(format!(
            "L{m}: Boolean combinations of languages of R{} and their co-deterministic products",
            m - 1
        ));
    }
    out
}

/// Classifies the language of `d` by its syntactic monoid.
pub fn classify_language(d: &Dfa, max_m: usize, budget: &Budget) -> Result<LanguageReport> {
    let sm = SyntacticMonoid::new(d, budget)?;
    let report = classify(&sm.monoid, max_m)?;
    Ok(LanguageReport {
        alphabet: d.alphabet().iter().collect(),
        states: sm.maps.first().map_or(0, Vec::len),
        monoid_order: sm.order(),
        idempotents: sm.monoid.idempotents().len(),
        accepting: sm.accepting.clone(),
        meanings: meanings(&report),
        report,
    })
}

/// The languages `B*` for `B ⊆ {a, b}`, as `(name, dfa)`.
pub fn star_languages() -> Vec<(String, Dfa)> {
    let ab = ['a', 'b'];
    [("{}*", &[][..]), ("a*", &['a'][..]), ("b*", &['b'][..]), ("A*", &ab[..])]
        .into_iter()
        .map(|(name, b)| (name.to_string(), Dfa::star_of(&ab, b).expect("letters in alphabet")))
        .collect()
}

/// Every product `B_0* a_1 B_1*` and `B_0* a_1 B_1* a_2 B_2*` over `{a, b}`.
pub fn product_battery() -> Vec<(String, ProductExpression)> {
    let stars = star_languages();
    let mut out = Vec::new();
    for (n0, l0) in &stars {
        for a in ['a', 'b'] {
            for (n1, l1) in &stars {
                let p = ProductExpression::binary(l0.clone(), a, l1.clone()).expect("shared alphabet");
                out.push((format!("{n0}{a}{n1}"), p));
                for b in ['a', 'b'] {
                    for (n2, l2) in &stars {
                        let p = ProductExpression::new(vec![l0.clone(), l1.clone(), l2.clone()], vec![a, b])
                            .expect("shared alphabet");
                        out.push((format!("{n0}{a}{n1}{b}{n2}"), p));
                    }
                }
            }
        }
    }
    out
}

/// Over [`product_battery`]: automaton verdicts agree with brute force up to
/// `budget.word_len`; deterministic products land in `R_2`, co-deterministic
/// ones in `L_2`, unambiguous ones in DA.
pub fn verify_language(budget: &Budget) -> AgreementReport {
    let battery = product_battery();
    let outcomes: Vec<Result<Option<String>>> = battery
        .par_iter()
        .map(|(_, p)| {
            let r = p.check(budget)?;
            let mut problems = Vec::new();
            if !r.agrees() {
                problems.push(format!("brute force disagrees: {}", r.render_text().trim_end().replace('\n', "; ")));
            }
            let m = SyntacticMonoid::new(&p.language(budget)?, budget)?.monoid;
            if r.deterministic.holds && !in_rm(&m, 2)? {
                problems.push("deterministic but syntactic monoid outside R2".into());
            }
            if r.codeterministic.holds && !in_lm(&m, 2)? {
                problems.push("co-deterministic but syntactic monoid outside L2".into());
            }
            if r.unambiguous.holds && !in_da(&m, DaRoute::Regular)? {
                problems.push("unambiguous but syntactic monoid outside DA".into());
            }
            if (r.deterministic.holds || r.codeterministic.holds) && !r.unambiguous.holds {
                problems.push("deterministic or co-deterministic but ambiguous".into());
            }
            Ok((!problems.is_empty()).then(|| problems.join("; ")))
        })
        .collect();
    let mut report =
        AgreementReport { suite: "language".into(), checked: 0, disagreements: Vec::new(), skipped: Vec::new() };
    for (index, ((id, _), outcome)) in battery.iter().zip(outcomes).enumerate() {
        let entry = |detail| Disagreement { index, id: id.clone(), detail };
        match outcome {
            Ok(None) => report.checked += 1,
            Ok(Some(d)) => {
                report.checked += 1;
                report.disagreements.push(entry(d));
            }
            Err(e) if e.is_budget() => report.skipped.push(entry(e.to_string())),
            Err(e) => {
                report.checked += 1;
                report.disagreements.push(entry(format!("error: {e}")));
            }
        }
    }
    report
}
