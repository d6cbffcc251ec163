use std::collections::HashMap;

use serde::Serialize;

use super::{enumerate_interval, enumerate_weak_order, IntervalPoset};
use crate::coxeter::{CoxeterDatum, GroupElement};
use crate::error::{Error, Result};
use crate::presentation::{classical_generators, dual_atoms, Atom, Word};
use crate::types::CoxeterType;

/// Largest `|W|` accepted for classical Garside data.
pub const CLASSICAL_LIMIT: usize = 5_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Structure {
    Dual,
    Classical,
}

/// Garside structure realized on a poset of simples: `Δ = c` with
/// reflection length (dual) or `Δ = w₀` with Coxeter length (classical).
#[derive(Debug)]
pub struct GarsideData {
    structure: Structure,
    datum: CoxeterDatum,
    poset: IntervalPoset,
    /// Atom of each poset generator, when the type has a presentation.
    generator_atoms: Vec<Option<Atom>>,
    atom_simple: HashMap<Atom, usize>,
    left_complement: Vec<usize>,
    right_complement: Vec<usize>,
    phi: Vec<usize>,
    phi_inverse: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GarsideInvariants {
    pub all_below_delta: bool,
    pub divisors_coincide: bool,
    pub atoms_are_grade_one: bool,
}

impl GarsideInvariants {
    pub fn pass(&self) -> bool {
        self.all_below_delta && self.divisors_coincide && self.atoms_are_grade_one
    }
}

impl GarsideData {
    pub fn dual(ty: CoxeterType) -> Result<Self> {
        let datum = CoxeterDatum::new(ty)?;
        let poset = enumerate_interval(&datum)?;
        let atoms = if ty.has_presentation() { dual_atoms(ty)? } else { Vec::new() };
        Self::build(Structure::Dual, datum, poset, atoms)
    }

    pub fn classical(ty: CoxeterType) -> Result<Self> {
        Self::classical_with_limit(ty, CLASSICAL_LIMIT)
    }

    pub fn classical_with_limit(ty: CoxeterType, limit: usize) -> Result<Self> {
        let datum = CoxeterDatum::new(ty)?;
        let poset = enumerate_weak_order(&datum, limit)?;
        let atoms = if ty.has_presentation() { classical_generators(ty)? } else { Vec::new() };
        Self::build(Structure::Classical, datum, poset, atoms)
    }

    fn build(structure: Structure, datum: CoxeterDatum, poset: IntervalPoset, atoms: Vec<Atom>) -> Result<Self> {
        let lookup = |w: &GroupElement, what: &str| {
            poset
                .index_of(w)
                .ok_or_else(|| Error::Structure(format!("{what} of a simple is not simple")))
        };
        let generator_index: HashMap<&GroupElement, usize> =
            poset.generators().iter().enumerate().map(|(i, g)| (g, i)).collect();
        let mut generator_atoms = vec![None; poset.generators().len()];
        let mut atom_simple = HashMap::new();
        for a in atoms {
            let r = datum.atom_to_reflection(&a)?;
            let g = *generator_index
                .get(&r)
                .ok_or_else(|| Error::Structure(format!("atom {a} is not a generator")))?;
            generator_atoms[g] = Some(a);
            atom_simple.insert(a, lookup(&r, "atom image")?);
        }

        let delta = poset.element(poset.top()).clone();
        let delta_inv = poset.inverse(poset.top()).clone();
        let mut left_complement = Vec::with_capacity(poset.len());
        let mut right_complement = Vec::with_capacity(poset.len());
        let mut phi = Vec::with_capacity(poset.len());
        let mut phi_inverse = Vec::with_capacity(poset.len());
        for i in 0..poset.len() {
            let (u, u_inv) = (poset.element(i), poset.inverse(i));
            left_complement.push(lookup(&u_inv.mul(&delta), "left complement")?);
            right_complement.push(lookup(&delta.mul(u_inv), "right complement")?);
            phi.push(lookup(&delta_inv.mul(u).mul(&delta), "Δ-conjugate")?);
            phi_inverse.push(lookup(&delta.mul(u).mul(&delta_inv), "Δ-conjugate")?);
        }
        Ok(GarsideData {
            structure,
            datum,
            poset,
            generator_atoms,
            atom_simple,
            left_complement,
            right_complement,
            phi,
            phi_inverse,
        })
    }

    pub fn structure(&self) -> Structure {
        self.structure
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.datum.coxeter_type()
    }

    pub fn datum(&self) -> &CoxeterDatum {
        &self.datum
    }

    pub fn poset(&self) -> &IntervalPoset {
        &self.poset
    }

    pub fn simple_count(&self) -> usize {
        self.poset.len()
    }

    pub fn delta(&self) -> usize {
        self.poset.top()
    }

    pub fn identity(&self) -> usize {
        self.poset.identity()
    }

    pub fn grade(&self, s: usize) -> usize {
        self.poset.grade(s)
    }

    pub fn simple_of_atom(&self, a: &Atom) -> Result<usize> {
        self.atom_simple.get(a).copied().ok_or_else(|| Error::AtomTypeMismatch {
            atom: a.to_string(),
            ty: format!("{} ({:?})", self.coxeter_type(), self.structure),
        })
    }

    pub fn simple_of_element(&self, w: &GroupElement) -> Option<usize> {
        self.poset.index_of(w)
    }

    /// `a b` when it is simple and the gradings add.
    pub fn product(&self, a: usize, b: usize) -> Option<usize> {
        let ab = self.poset.element(a).mul(self.poset.element(b));
        let i = self.poset.index_of(&ab)?;
        (self.grade(i) == self.grade(a) + self.grade(b)).then_some(i)
    }

    /// `x` with `x b = a`, when `b` right-divides `a`.
    pub fn right_quotient(&self, a: usize, b: usize) -> Option<usize> {
        let x = self.poset.element(a).mul(self.poset.inverse(b));
        let i = self.poset.index_of(&x)?;
        (self.grade(i) + self.grade(b) == self.grade(a)).then_some(i)
    }

    /// `x` with `b x = a`, when `b` left-divides `a`.
    pub fn left_quotient(&self, b: usize, a: usize) -> Option<usize> {
        let x = self.poset.inverse(b).mul(self.poset.element(a));
        let i = self.poset.index_of(&x)?;
        (self.grade(i) + self.grade(b) == self.grade(a)).then_some(i)
    }

    /// `u ↦ u⁻¹Δ`, so that `u · left_complement(u) = Δ`.
    pub fn left_complement(&self, u: usize) -> usize {
        self.left_complement[u]
    }

    /// `u ↦ Δu⁻¹`, so that `right_complement(u) · u = Δ`.
    pub fn right_complement(&self, u: usize) -> usize {
        self.right_complement[u]
    }

    /// `s ↦ Δ⁻¹ s Δ`.
    pub fn phi(&self, s: usize) -> usize {
        self.phi[s]
    }

    /// `s ↦ Δ s Δ⁻¹`.
    pub fn phi_inverse(&self, s: usize) -> usize {
        self.phi_inverse[s]
    }

    pub fn meet(&self, a: usize, b: usize) -> Result<usize> {
        self.poset.meet(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> Result<usize> {
        self.poset.join(a, b)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    /// A word for simple `s` in the atoms, when the type has a presentation.
    pub fn word(&self, s: usize) -> Option<Word> {
        self.poset
            .generator_word(s)
            .into_iter()
            .map(|g| self.generator_atoms[g])
            .collect::<Option<Vec<Atom>>>()
            .map(Word)
    }

    /// The atom word of `s`, or `r[k]` generator indices when there are
    /// no atoms.
    pub fn render(&self, s: usize) -> String {
        match self.word(s) {
            Some(w) if w.is_empty() => "1".into(),
            Some(w) => w.to_string(),
            None => self
                .poset
                .generator_word(s)
                .iter()
                .map(|g| format!("r[{}]", g + 1))
                .collect::<Vec<_>>()
                .join(" "),
        }
    }

    pub fn check_invariants(&self) -> GarsideInvariants {
        let delta = self.delta();
        let n = self.simple_count();
        let all_below_delta = (0..n).all(|u| self.leq(u, delta));
        let divisors_coincide = (0..n).all(|u| {
            let x = self.right_complement(u);
            self.grade(x) + self.grade(u) == self.grade(delta)
        });
        let atoms_are_grade_one = self.atom_simple.values().all(|&s| self.grade(s) == 1);
        GarsideInvariants {
            all_below_delta,
            divisors_coincide,
            atoms_are_grade_one,
        }
    }
}
