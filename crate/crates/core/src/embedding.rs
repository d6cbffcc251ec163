//! Dual generators as classical braid words, checked inside the classical
//! Artin group through its Garside normal form.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::congruence::Congruence;
use crate::coxeter::CoxeterDatum;
use crate::error::{Error, Result};
use crate::garside::equal_in_group;
use crate::interval::GarsideData;
use crate::presentation::{
    classical_presentation, completed_dual_presentation, garside_word, Atom, Family, Relation,
    SignedWord, Word,
};
use crate::types::CoxeterType;

/// Largest rank accepted by the embedding checks.
pub const EMBEDDING_MAX_RANK: u32 = 4;

fn sigma_run(hi: u16, lo: u16) -> SignedWord {
    // σ_hi σ_{hi-1} ... σ_lo, empty when hi < lo
    SignedWord((lo..=hi).rev().map(|i| (Atom::sigma(i), 1)).collect())
}

fn conjugate(by: &SignedWord, x: &SignedWord) -> SignedWord {
    SignedWord::product(&[by.clone(), x.clone(), by.inverse()])
}

fn alpha_word(t: u16, s: u16) -> SignedWord {
    conjugate(&sigma_run(t - 1, s + 1), &SignedWord::letter(Atom::sigma(s)))
}

/// A dual atom written over the classical generators `σ_i`, `τ₁`.
pub fn dual_atom_as_classical_word(atom: &Atom, ty: CoxeterType) -> Result<SignedWord> {
    let mismatch = || Error::AtomTypeMismatch {
        atom: atom.to_string(),
        ty: ty.to_string(),
    };
    let n = ty.rank() as u16;
    let (t, s) = (atom.i, atom.second());
    let pair_ok = |top: u16| s >= 1 && t > s && t <= top;
    let tau1 = SignedWord::letter(Atom::tau_one());
    let b_tau = |t: u16| {
        if t == 1 {
            tau1.clone()
        } else {
            conjugate(&alpha_word(t, 1), &tau1)
        }
    };
    let d_beta_t1 = |t: u16| conjugate(&sigma_run(t - 1, 2), &tau1);
    match (ty, atom.family) {
        (CoxeterType::A(_), Family::A) if pair_ok(n + 1) => Ok(alpha_word(t, s)),
        (CoxeterType::B(_) | CoxeterType::D(_), Family::Alpha) if pair_ok(n) => Ok(alpha_word(t, s)),
        (CoxeterType::B(_), Family::Tau) if (1..=n).contains(&t) => Ok(b_tau(t)),
        (CoxeterType::B(_), Family::Beta) if pair_ok(n) => Ok(SignedWord::product(&[
            b_tau(s).inverse(),
            alpha_word(t, s),
            b_tau(s),
        ])),
        (CoxeterType::D(_), Family::Beta) if pair_ok(n) && s == 1 => Ok(d_beta_t1(t)),
        (CoxeterType::D(_), Family::Beta) if pair_ok(n) => Ok(conjugate(&alpha_word(s, 1).inverse(), &d_beta_t1(t))),
        (CoxeterType::I2(_), _) => Err(Error::Unsupported(format!("classical words for dual atoms of {ty}"))),
        _ => Err(mismatch()),
    }
}

fn word_image(w: &Word, ty: CoxeterType) -> Result<SignedWord> {
    let parts = w
        .0
        .iter()
        .map(|a| dual_atom_as_classical_word(a, ty))
        .collect::<Result<Vec<_>>>()?;
    Ok(SignedWord::product(&parts))
}

fn check_rank(ty: CoxeterType) -> Result<()> {
    ty.validate()?;
    if !matches!(ty, CoxeterType::A(_) | CoxeterType::B(_) | CoxeterType::D(_)) {
        return Err(Error::Unsupported(format!("embedding checks for {ty}")));
    }
    if ty.rank() > EMBEDDING_MAX_RANK {
        return Err(Error::UnsupportedRank {
            family: ty.family(),
            rank: ty.parameter(),
            reason: format!("embedding checks run up to rank {EMBEDDING_MAX_RANK}"),
        });
    }
    Ok(())
}

/// Family pattern of a relation, e.g. `a t b t` for `α τ β τ`.
fn pattern(r: &Relation) -> String {
    r.lhs()
        .0
        .iter()
        .map(|a| a.family.letter().to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct FamilyTally {
    pub relations: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct EmbeddingReport {
    pub check: &'static str,
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: u32,
    pub relations: usize,
    pub families: BTreeMap<String, FamilyTally>,
    /// Projection of every atom image equals its reflection.
    pub projection_consistent: bool,
    /// The image of the Garside word projects to the Coxeter element.
    pub delta_projects_to_c: bool,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// Every completed-dual relation, both sides rewritten over the classical
/// generators, holds in the classical Artin group.
pub fn verify_dual_relations_in_group(ty: CoxeterType) -> Result<EmbeddingReport> {
    check_rank(ty)?;
    let data = GarsideData::classical(ty)?;
    let datum = CoxeterDatum::new(ty)?;
    let dual = completed_dual_presentation(ty)?;

    let mut projection_consistent = true;
    for a in dual.atoms() {
        let img = datum.signed_word_image(&dual_atom_as_classical_word(a, ty)?)?;
        projection_consistent &= img == datum.atom_to_reflection(a)?;
    }
    let delta = datum.signed_word_image(&word_image(&garside_word(ty)?, ty)?)?;
    let delta_projects_to_c = &delta == datum.coxeter_element();

    let mut families: BTreeMap<String, FamilyTally> = BTreeMap::new();
    let mut failures = Vec::new();
    for r in dual.relations() {
        let tally = families.entry(pattern(r)).or_default();
        tally.relations += 1;
        if !equal_in_group(&data, &word_image(r.lhs(), ty)?, &word_image(r.rhs(), ty)?)? {
            tally.failures += 1;
            failures.push(r.to_string());
        }
    }
    let pass = failures.is_empty() && projection_consistent && delta_projects_to_c;
    Ok(EmbeddingReport {
        check: "embedding",
        ty: ty.family().to_string(),
        rank: ty.parameter(),
        relations: dual.relations().len(),
        families,
        projection_consistent,
        delta_projects_to_c,
        failures,
        pass,
    })
}

/// `σ_i ↦ α_{(i+1)i}` (`a_{(i+1)i}` in type A), `τ₁ ↦ τ₁` (B) or `β₂₁` (D).
pub fn classical_atom_as_dual(atom: &Atom, ty: CoxeterType) -> Result<Atom> {
    match (ty, atom.family) {
        (CoxeterType::A(_), Family::Sigma) => Ok(Atom::band(atom.i + 1, atom.i)),
        (CoxeterType::B(_) | CoxeterType::D(_), Family::Sigma) => Ok(Atom::alpha(atom.i + 1, atom.i)),
        (CoxeterType::B(_), Family::TauOne) => Ok(Atom::tau(1)),
        (CoxeterType::D(_), Family::TauOne) => Ok(Atom::beta(2, 1)),
        _ => Err(Error::AtomTypeMismatch {
            atom: atom.to_string(),
            ty: ty.to_string(),
        }),
    }
}

fn rewrite(w: &Word, ty: CoxeterType) -> Result<Word> {
    w.0.iter().map(|a| classical_atom_as_dual(a, ty)).collect::<Result<Vec<_>>>().map(Word)
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassicalFromDualReport {
    pub check: &'static str,
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: u32,
    pub relations: usize,
    pub rewritten: Vec<String>,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// Every classical relation, rewritten over the dual atoms, is derivable
/// from the completed dual presentation.
pub fn verify_classical_from_dual(ty: CoxeterType) -> Result<ClassicalFromDualReport> {
    check_rank(ty)?;
    let classical = classical_presentation(ty)?;
    let oracle = Congruence::new(&completed_dual_presentation(ty)?);
    let mut rewritten = Vec::new();
    let mut failures = Vec::new();
    for r in classical.relations() {
        let image = Relation::new(rewrite(r.lhs(), ty)?, rewrite(r.rhs(), ty)?)?;
        if !oracle.derivable(&image)? {
            failures.push(image.to_string());
        }
        rewritten.push(image.to_string());
    }
    Ok(ClassicalFromDualReport {
        check: "classical-from-dual",
        ty: ty.family().to_string(),
        rank: ty.parameter(),
        relations: classical.relations().len(),
        rewritten,
        pass: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atom_words() {
        let b3 = CoxeterType::B(3);
        assert_eq!(dual_atom_as_classical_word(&Atom::alpha(3, 1), b3).unwrap().to_string(), "s[2] s[1] s[2]^-1");
        assert_eq!(dual_atom_as_classical_word(&Atom::tau(2), b3).unwrap().to_string(), "s[1] t[1] s[1]^-1");
        let d3 = CoxeterType::D(3);
        assert_eq!(dual_atom_as_classical_word(&Atom::beta(2, 1), d3).unwrap().to_string(), "t[1]");
        assert!(dual_atom_as_classical_word(&Atom::tau(1), d3).is_err());
    }

    #[test]
    fn small_embeddings() {
        for ty in [CoxeterType::A(2), CoxeterType::B(2), CoxeterType::D(3)] {
            let r = verify_dual_relations_in_group(ty).unwrap();
            assert!(r.pass, "{r:#?}");
        }
    }

    #[test]
    fn classical_relations_follow() {
        for ty in [CoxeterType::B(2), CoxeterType::D(3)] {
            let r = verify_classical_from_dual(ty).unwrap();
            assert!(r.pass, "{r:#?}");
        }
        assert!(verify_classical_from_dual(CoxeterType::B(5)).is_err());
    }
}
