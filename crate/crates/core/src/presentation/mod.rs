//! Atoms, words, relations and the classical, dual and completed-dual
//! presentations of types A, B, D and I2.

mod atom;
mod classical;
mod completion;
mod dual;
mod grammar;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

pub use atom::{Atom, AtomJson, Family, Relation, SignedWord, Word};
pub use classical::classical_presentation;
pub(crate) use classical::classical_generators;
pub use completion::{complete_dual, completed_dual_presentation, Completion, CompletionReport};
pub use dual::{dual_presentation, garside_word};
pub(crate) use dual::dual_atoms;
pub use grammar::{normalize_word_text, parse_signed_word, parse_word};

use crate::error::{Error, Result};
use crate::types::CoxeterType;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    Classical,
    Dual,
    CompletedDual,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Classical => "classical",
            Flavor::Dual => "dual",
            Flavor::CompletedDual => "completed-dual",
        })
    }
}

/// A monoid presentation: a sorted atom set and a sorted, duplicate-free set
/// of homogeneous relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    ty: CoxeterType,
    flavor: Flavor,
    atoms: Vec<Atom>,
    relations: Vec<Relation>,
}

impl Presentation {
    pub(crate) fn new(
        ty: CoxeterType,
        flavor: Flavor,
        atoms: impl IntoIterator<Item = Atom>,
        relations: impl IntoIterator<Item = Relation>,
    ) -> Self {
        let atoms: BTreeSet<Atom> = atoms.into_iter().collect();
        let relations: BTreeSet<Relation> = relations.into_iter().collect();
        Presentation {
            ty,
            flavor,
            atoms: atoms.into_iter().collect(),
            relations: relations.into_iter().collect(),
        }
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.ty
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn contains_atom(&self, a: &Atom) -> bool {
        self.atoms.binary_search(a).is_ok()
    }

    pub fn contains_relation(&self, r: &Relation) -> bool {
        self.relations.binary_search(r).is_ok()
    }

    pub fn has_family(&self, family: Family) -> bool {
        self.atoms.iter().any(|a| a.family == family)
    }

    /// Returns a copy with extra relations and a new flavor.
    pub(crate) fn extended(&self, flavor: Flavor, extra: impl IntoIterator<Item = Relation>) -> Self {
        Presentation::new(
            self.ty,
            flavor,
            self.atoms.iter().copied(),
            self.relations.iter().cloned().chain(extra),
        )
    }

    pub fn to_json(&self) -> PresentationJson {
        let word = |w: &Word| w.0.iter().map(AtomJson::from).collect();
        PresentationJson {
            ty: self.ty.family().to_string(),
            rank: self.ty.parameter(),
            flavor: self.flavor.to_string(),
            atoms: self.atoms.iter().map(AtomJson::from).collect(),
            relations: self
                .relations
                .iter()
                .map(|r| RelationJson {
                    lhs: word(r.lhs()),
                    rhs: word(r.rhs()),
                })
                .collect(),
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} presentation of {}", self.flavor, self.ty)?;
        let atoms: Vec<String> = self.atoms.iter().map(|a| a.to_string()).collect();
        writeln!(f, "atoms ({}): {}", atoms.len(), atoms.join(" "))?;
        writeln!(f, "relations ({}):", self.relations.len())?;
        for r in &self.relations {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PresentationJson {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: u32,
    pub flavor: String,
    pub atoms: Vec<AtomJson>,
    pub relations: Vec<RelationJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationJson {
    pub lhs: Vec<AtomJson>,
    pub rhs: Vec<AtomJson>,
}

/// Expands the bracket family `[w1, ..., wp]`, i.e. the chain
/// `w1 w2 = w2 w3 = ... = w_{p-1} w_p = w_p w1`, into the `p - 1` relations
/// between consecutive products. For `p = 2` this is the single commutation
/// `w1 w2 = w2 w1`.
pub fn expand_family(words: &[Word]) -> Result<Vec<Relation>> {
    let p = words.len();
    if p < 2 {
        return Err(Error::InvalidFamily(p));
    }
    if words.iter().any(Word::is_empty) {
        return Err(Error::EmptyFamilyWord);
    }
    let products: Vec<Word> = (0..p).map(|k| words[k].concat(&words[(k + 1) % p])).collect();
    let pairs = if p == 2 { 1 } else { p - 1 };
    (0..pairs)
        .map(|k| Relation::new(products[k].clone(), products[k + 1].clone()))
        .collect()
}

/// Relations equating consecutive terms of a chain `w1 = w2 = ... = wk`.
/// Repeated terms are skipped; the returned flags mark terms that repeat an
/// earlier one.
pub(crate) fn expand_chain(terms: &[Word]) -> Result<(Vec<Relation>, Vec<usize>)> {
    let mut seen: Vec<&Word> = Vec::new();
    let mut repeats = Vec::new();
    let mut relations = Vec::new();
    for (k, term) in terms.iter().enumerate() {
        if seen.contains(&term) {
            repeats.push(k);
        }
        if k > 0 && terms[k - 1] != *term {
            relations.push(Relation::new(terms[k - 1].clone(), term.clone())?);
        }
        seen.push(term);
    }
    Ok((relations, repeats))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(atoms: &[Atom]) -> Word {
        Word(atoms.to_vec())
    }

    #[test]
    fn expand_commutation() {
        let x = Atom::sigma(1);
        let y = Atom::sigma(3);
        let rels = expand_family(&[w(&[x]), w(&[y])]).unwrap();
        assert_eq!(rels, vec![Relation::new(w(&[x, y]), w(&[y, x])).unwrap()]);
    }

    #[test]
    fn expand_type_a_triangle() {
        let (a32, a21, a31) = (Atom::band(3, 2), Atom::band(2, 1), Atom::band(3, 1));
        let rels = expand_family(&[w(&[a32]), w(&[a21]), w(&[a31])]).unwrap();
        assert_eq!(
            rels,
            vec![
                Relation::new(w(&[a32, a21]), w(&[a21, a31])).unwrap(),
                Relation::new(w(&[a21, a31]), w(&[a31, a32])).unwrap(),
            ]
        );
    }

    #[test]
    fn expand_type_b_square() {
        let (a21, t1, b21, t2) = (Atom::alpha(2, 1), Atom::tau(1), Atom::beta(2, 1), Atom::tau(2));
        let rels = expand_family(&[w(&[a21]), w(&[t1]), w(&[b21]), w(&[t2])]).unwrap();
        assert_eq!(
            rels,
            vec![
                Relation::new(w(&[a21, t1]), w(&[t1, b21])).unwrap(),
                Relation::new(w(&[t1, b21]), w(&[b21, t2])).unwrap(),
                Relation::new(w(&[b21, t2]), w(&[t2, a21])).unwrap(),
            ]
        );
    }

    #[test]
    fn expand_rejects_bad_families() {
        assert_eq!(expand_family(&[w(&[Atom::tau(1)])]), Err(Error::InvalidFamily(1)));
        assert_eq!(
            expand_family(&[w(&[Atom::tau(1)]), Word::empty()]),
            Err(Error::EmptyFamilyWord)
        );
    }

    #[test]
    fn chain_reports_repeated_terms() {
        let x = w(&[Atom::tau(1), Atom::tau(2)]);
        let y = w(&[Atom::tau(2), Atom::tau(1)]);
        let z = w(&[Atom::tau(3), Atom::tau(1)]);
        let (rels, repeats) = expand_chain(&[x.clone(), y.clone(), z.clone(), y.clone()]).unwrap();
        assert_eq!(rels.len(), 3);
        assert_eq!(repeats, vec![3]);
        assert_eq!(rels[2], rels[1]);
    }
}
