//! The completed dual presentations of types B and D.
//!
//! The extra relations are instantiated over all admissible index tuples and
//! each instance is checked for derivability from the base dual presentation
//! before it is added. Instances that repeat an existing equality or that
//! fail the check are reported instead of being added.

use rayon::prelude::*;
use serde::Serialize;

use super::dual::decreasing_tuples;
use super::{dual_presentation, expand_chain, Atom, Flavor, Presentation, Relation, Word};
use crate::congruence::Congruence;
use crate::error::Result;
use crate::types::CoxeterType;

/// A displayed chain `w1 = w2 = ...` instantiated at one index tuple.
#[derive(Debug, Clone)]
struct Chain {
    label: String,
    terms: Vec<Word>,
}

fn chain(label: String, terms: Vec<Vec<Atom>>) -> Chain {
    Chain {
        label,
        terms: terms.into_iter().map(Word).collect(),
    }
}

fn tuple_label(name: &str, names: &str, values: &[u16]) -> String {
    let parts: Vec<String> = names
        .chars()
        .zip(values)
        .map(|(c, v)| format!("{c}={v}"))
        .collect();
    format!("{name}[{}]", parts.join(","))
}

fn type_b_chains(n: u16) -> Vec<Chain> {
    let (al, be, ta) = (Atom::alpha, Atom::beta, Atom::tau);
    let mut out = Vec::new();
    for x in decreasing_tuples(3, 1, n) {
        let (t, s, r) = (x[0], x[1], x[2]);
        // The printed chain lists `τ_s β_ts α_sr` twice; it is kept verbatim
        // so the repeat shows up in the report.
        out.push(chain(
            tuple_label("B3-chain", "tsr", &x),
            vec![
                vec![be(s, r), ta(s), be(t, r)],
                vec![al(t, r), al(t, s), ta(r)],
                vec![be(t, s), al(s, r), ta(t)],
                vec![ta(t), al(s, r), al(t, r)],
                vec![ta(s), be(t, s), al(s, r)],
                vec![be(t, r), ta(t), al(t, s)],
                vec![ta(s), be(t, s), al(s, r)],
            ],
        ));
    }
    for x in decreasing_tuples(4, 1, n) {
        let (t, s, r, q) = (x[0], x[1], x[2], x[3]);
        let rels = [
            (
                vec![al(t, q), al(t, s), al(s, r), ta(q)],
                vec![be(s, r), be(t, r), al(r, q), ta(s)],
            ),
            (
                vec![be(t, s), al(s, q), al(s, r), ta(t)],
                vec![be(r, q), be(t, q), al(t, s), ta(r)],
            ),
            (
                vec![al(t, r), al(r, q), al(t, s)],
                vec![al(s, q), al(s, r), al(t, q)],
            ),
            (
                vec![al(t, r), al(t, s), be(r, q)],
                vec![be(s, q), al(s, r), be(t, q)],
            ),
            (
                vec![be(t, r), al(r, q), be(t, s)],
                vec![al(s, q), al(s, r), be(t, q)],
            ),
            (
                vec![be(t, r), al(r, q), al(t, s)],
                vec![be(s, q), be(s, r), be(t, q)],
            ),
        ];
        for (k, (lhs, rhs)) in rels.into_iter().enumerate() {
            out.push(chain(
                tuple_label(&format!("B4-{}", k + 1), "tsrq", &x),
                vec![lhs, rhs],
            ));
        }
    }
    out
}

fn type_d_chains(n: u16) -> Vec<Chain> {
    let (al, be) = (Atom::alpha, Atom::beta);
    let mut out = Vec::new();
    let mut push = |name: String, lhs: Vec<Atom>, rhs: Vec<Atom>| {
        out.push(chain(name, vec![lhs, rhs]));
    };
    for x in decreasing_tuples(4, 1, n) {
        let (t, s, r, q) = (x[0], x[1], x[2], x[3]);
        let l = |k: u32| tuple_label(&format!("D4-{k}"), "tsrq", &x);
        push(l(1), vec![al(t, r), al(r, q), al(t, s)], vec![al(s, q), al(s, r), al(t, q)]);
        push(l(2), vec![al(t, r), al(t, s), be(r, q)], vec![be(s, q), al(s, r), be(t, q)]);
        push(l(3), vec![be(t, s), al(t, q), al(s, r)], vec![be(r, q), be(t, r), be(s, q)]);
    }
    for x in decreasing_tuples(4, 2, n) {
        let (t, s, r, q) = (x[0], x[1], x[2], x[3]);
        let l = |k: u32| tuple_label(&format!("D4'-{k}"), "tsrq", &x);
        push(
            l(1),
            vec![al(t, q), al(q, 1), al(t, r), al(t, s), be(q, 1)],
            vec![be(s, r), be(s, 1), al(r, q), al(s, 1), be(t, q)],
        );
        push(l(2), vec![be(t, r), al(r, q), be(t, s)], vec![al(s, q), al(s, r), be(t, q)]);
        push(l(3), vec![be(t, r), al(r, q), al(t, s)], vec![be(s, q), be(s, r), be(t, q)]);
    }
    for x in decreasing_tuples(3, 2, n) {
        let (t, s, r) = (x[0], x[1], x[2]);
        let l = |k: u32| tuple_label(&format!("D3-{k}"), "tsr", &x);
        push(
            l(1),
            vec![al(t, r), al(r, 1), al(t, s), be(r, 1)],
            vec![be(s, r), be(s, 1), al(s, 1), be(t, r)],
        );
        push(l(2), vec![al(t, 1), al(t, s), be(r, 1)], vec![be(s, r), al(s, 1), be(t, r)]);
        push(
            l(3),
            vec![be(t, s), be(t, 1), al(s, r), al(t, 1)],
            vec![al(t, r), al(r, 1), al(t, s), be(r, 1)],
        );
        push(l(4), vec![be(t, s), be(t, 1), al(s, r)], vec![al(r, 1), al(s, 1), be(t, r)]);
        push(
            l(5),
            vec![be(t, s), be(t, 1), al(s, r), al(t, 1)],
            vec![be(s, r), be(s, 1), al(s, 1), be(t, r)],
        );
        push(l(6), vec![be(t, 1), al(r, 1), al(t, s)], vec![be(s, r), be(s, 1), be(t, r)]);
    }
    for x in decreasing_tuples(2, 2, n) {
        let (t, s) = (x[0], x[1]);
        push(
            tuple_label("D2-1", "ts", &x),
            vec![al(t, s), al(s, 1), be(s, 1)],
            vec![be(t, s), be(t, 1), al(t, 1)],
        );
    }
    out
}

/// One instantiated completed relation and where it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelledRelation {
    pub source: String,
    pub relation: String,
}

/// Outcome of completing a dual presentation.
#[derive(Debug, Clone, Default, Serialize)]
pub struct CompletionReport {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: u32,
    pub base_relations: usize,
    /// New relations that passed the derivability check.
    pub added: Vec<LabelledRelation>,
    /// Instances equal to a relation already present (base or added earlier).
    pub repeated: Vec<LabelledRelation>,
    /// Instances that are not consequences of the base relations.
    pub rejected: Vec<LabelledRelation>,
    /// Chain terms that repeat an earlier term of the same chain.
    pub duplicate_terms: Vec<String>,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct Completion {
    pub presentation: Presentation,
    pub report: CompletionReport,
}

/// Builds the completed dual presentation of `ty` together with the
/// verification report. Types A and I2 are returned unchanged.
pub fn complete_dual(ty: CoxeterType) -> Result<Completion> {
    let base = dual_presentation(ty)?;
    let chains = match ty {
        CoxeterType::B(n) => type_b_chains(n as u16),
        CoxeterType::D(n) => type_d_chains(n as u16),
        _ => Vec::new(),
    };

    let mut report = CompletionReport {
        ty: ty.family().to_string(),
        rank: ty.parameter(),
        base_relations: base.relations().len(),
        ..Default::default()
    };

    // Flatten chains to candidate relations, in display order.
    let mut candidates: Vec<(String, Relation)> = Vec::new();
    for c in &chains {
        let (rels, repeats) = expand_chain(&c.terms)?;
        for k in repeats {
            report
                .duplicate_terms
                .push(format!("{} term {} repeats `{}`", c.label, k + 1, c.terms[k]));
        }
        let multi = rels.len() > 1;
        for (k, r) in rels.into_iter().enumerate() {
            let source = if multi {
                format!("{} eq {}", c.label, k + 1)
            } else {
                c.label.clone()
            };
            candidates.push((source, r));
        }
    }

    let congruence = Congruence::new(&base);
    let verdicts: Vec<Result<bool>> = candidates
        .par_iter()
        .map(|(_, r)| congruence.equivalent(r.lhs(), r.rhs()))
        .collect();

    let mut accepted: Vec<Relation> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for ((source, relation), verdict) in candidates.into_iter().zip(verdicts) {
        let entry = LabelledRelation {
            source,
            relation: relation.to_string(),
        };
        if base.contains_relation(&relation) || !seen.insert(relation.clone()) {
            report.repeated.push(entry);
            continue;
        }
        if verdict? {
            report.added.push(entry);
            accepted.push(relation);
        } else {
            report.rejected.push(entry);
        }
    }
    report.pass = report.rejected.is_empty();

    let presentation = match ty {
        CoxeterType::B(_) | CoxeterType::D(_) => base.extended(Flavor::CompletedDual, accepted),
        _ => base,
    };
    Ok(Completion {
        presentation,
        report,
    })
}

/// The completed dual presentation (the dual presentation plus every
/// derivable instance of the completed relations).
pub fn completed_dual_presentation(ty: CoxeterType) -> Result<Presentation> {
    Ok(complete_dual(ty)?.presentation)
}
