//! Exact models of the finite Coxeter groups.
//!
//! Types A, B and D use (signed) permutations, `I2(m)` a symbolic dihedral
//! model, and the exceptional types matrices in the basis of simple roots:
//! over the integers for F4 and E6-E8, over `Q(√5)` for H3 and H4.

mod dihedral;
mod matrix;
mod perm;
mod scalar;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

pub use dihedral::Dihedral;
pub use matrix::Matrix;
pub use perm::{Perm, SignedPerm};
pub use scalar::{Q5, Ring};

use crate::error::{Error, Result};
use crate::presentation::{Atom, Family, SignedWord, Word};
use crate::types::CoxeterType;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Perm(Perm),
    Signed(SignedPerm),
    Dihedral(Dihedral),
    Integer(Matrix<i64>),
    Golden(Matrix<Q5>),
}

fn matrix_inverse<S: Ring>(m: &Matrix<S>) -> Matrix<S> {
    // Finite order: the inverse is the last power before the identity.
    let mut prev = Matrix::identity(m.size());
    let mut p = m.clone();
    for _ in 0..10_000 {
        if p.is_identity() {
            return prev;
        }
        prev = p.clone();
        p = p.mul(m);
    }
    panic!("matrix does not have finite order");
}

impl GroupElement {
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        use GroupElement::*;
        match (self, other) {
            (Perm(a), Perm(b)) => Perm(a.mul(b)),
            (Signed(a), Signed(b)) => Signed(a.mul(b)),
            (Dihedral(a), Dihedral(b)) => Dihedral(a.mul(b)),
            (Integer(a), Integer(b)) => Integer(a.mul(b)),
            (Golden(a), Golden(b)) => Golden(a.mul(b)),
            _ => panic!("elements of different group models"),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        use GroupElement::*;
        match self {
            Perm(a) => Perm(a.inverse()),
            Signed(a) => Signed(a.inverse()),
            Dihedral(a) => Dihedral(a.inverse()),
            Integer(a) => Integer(matrix_inverse(a)),
            Golden(a) => Golden(matrix_inverse(a)),
        }
    }

    /// Reflection length: cycle formulas for the permutation models,
    /// `rank(M - I)` for matrices.
    pub fn reflection_length(&self) -> usize {
        use GroupElement::*;
        match self {
            Perm(a) => a.reflection_length(),
            Signed(a) => a.reflection_length(),
            Dihedral(a) => a.reflection_length(),
            Integer(a) => a.minus_identity().rank(),
            Golden(a) => a.minus_identity().rank(),
        }
    }

    pub fn is_identity(&self) -> bool {
        use GroupElement::*;
        match self {
            Perm(a) => a.0.iter().enumerate().all(|(i, &j)| i == j as usize),
            Signed(a) => a.0.iter().enumerate().all(|(i, &j)| i as i8 + 1 == j),
            Dihedral(a) => !a.reflection && a.k == 0,
            Integer(a) => a.is_identity(),
            Golden(a) => a.is_identity(),
        }
    }

    /// `(-1)^ℓ` computed independently of the reflection length: the
    /// determinant for matrices and signed permutations, the parity for
    /// permutations.
    pub fn determinant_sign(&self) -> i8 {
        use GroupElement::*;
        let sign = |negative: bool| if negative { -1 } else { 1 };
        match self {
            Perm(a) => sign(a.inversions() % 2 == 1),
            Signed(a) => sign(a.to_matrix().determinant() < 0),
            Dihedral(a) => sign(a.reflection),
            Integer(a) => sign(a.determinant() < 0),
            Golden(a) => sign(a.determinant() == -Q5::ONE),
        }
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Perm(p) => {
                let imgs: Vec<String> = p.0.iter().map(|x| (x + 1).to_string()).collect();
                write!(f, "perm[{}]", imgs.join(" "))
            }
            GroupElement::Signed(p) => {
                let imgs: Vec<String> = p.0.iter().map(|x| x.to_string()).collect();
                write!(f, "signed[{}]", imgs.join(" "))
            }
            GroupElement::Dihedral(d) if d.reflection => write!(f, "ref({})", d.k),
            GroupElement::Dihedral(d) => write!(f, "rot({})", d.k),
            GroupElement::Integer(m) => write!(f, "{m:?}"),
            GroupElement::Golden(m) => write!(f, "{m:?}"),
        }
    }
}

/// The invariant bilinear form of a matrix model.
#[derive(Debug, Clone)]
enum Gram {
    Integer(Matrix<i64>),
    Golden(Matrix<Q5>),
}

/// A finite Coxeter group with its simple reflections, all reflections and
/// the chosen Coxeter element.
#[derive(Debug, Clone)]
pub struct CoxeterDatum {
    ty: CoxeterType,
    simple: Vec<GroupElement>,
    reflections: Vec<GroupElement>,
    coxeter: GroupElement,
    identity: GroupElement,
    gram: Option<Gram>,
}

/// Coxeter matrix entries `m_ij > 2` of the exceptional types.
fn exceptional_edges(ty: CoxeterType) -> Vec<(usize, usize, u32)> {
    let e = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4), (6, 7), (7, 8)];
    match ty {
        CoxeterType::H3 => vec![(1, 2, 5), (2, 3, 3)],
        CoxeterType::H4 => vec![(1, 2, 5), (2, 3, 3), (3, 4, 3)],
        CoxeterType::E6 | CoxeterType::E7 | CoxeterType::E8 => {
            let n = ty.rank() as usize;
            e.iter()
                .filter(|&&(a, b)| a <= n && b <= n)
                .map(|&(a, b)| (a, b, 3))
                .collect()
        }
        _ => Vec::new(),
    }
}

/// `row i of s_i = δ_ij - 2 G_ij / G_ii`.
fn simple_reflection_matrices<S: Ring>(gram: &Matrix<S>) -> Vec<Matrix<S>> {
    let n = gram.size();
    (0..n)
        .map(|i| {
            let mut s = Matrix::identity(n);
            for j in 0..n {
                let two_g = gram.get(i, j) + gram.get(i, j);
                let delta = if i == j { S::ONE } else { S::ZERO };
                s.set(i, j, delta - two_g.div_exact(gram.get(i, i)));
            }
            s
        })
        .collect()
}

impl CoxeterDatum {
    pub fn new(ty: CoxeterType) -> Result<Self> {
        ty.validate()?;
        let n = ty.rank() as usize;
        let (simple, identity, gram) = match ty {
            CoxeterType::A(_) => (
                (1..=n).map(|i| GroupElement::Perm(Perm::transposition(n + 1, i, i + 1))).collect(),
                GroupElement::Perm(Perm::identity(n + 1)),
                None,
            ),
            CoxeterType::B(_) | CoxeterType::D(_) => {
                let t = if matches!(ty, CoxeterType::B(_)) {
                    SignedPerm::flip(n, 1)
                } else {
                    SignedPerm::signed_transposition(n, 1, 2)
                };
                let mut simple = vec![GroupElement::Signed(t)];
                simple.extend(
                    (1..n).map(|i| GroupElement::Signed(SignedPerm::transposition(n, i, i + 1))),
                );
                (simple, GroupElement::Signed(SignedPerm::identity(n)), None)
            }
            CoxeterType::I2(m) => (
                vec![
                    GroupElement::Dihedral(Dihedral::reflection(m, 0)),
                    GroupElement::Dihedral(Dihedral::reflection(m, 1)),
                ],
                GroupElement::Dihedral(Dihedral::identity(m)),
                None,
            ),
            CoxeterType::H3 | CoxeterType::H4 => {
                // G_ij = -cos(π/m_ij), with cos(π/3) = 1/2, cos(π/5) = (1+√5)/4.
                let mut g = Matrix::<Q5>::identity(n);
                for (a, b, m) in exceptional_edges(ty) {
                    let v = if m == 5 { -Q5::new(1, 1, 4) } else { Q5::new(-1, 0, 2) };
                    g.set(a - 1, b - 1, v);
                    g.set(b - 1, a - 1, v);
                }
                let simple = simple_reflection_matrices(&g)
                    .into_iter()
                    .map(GroupElement::Golden)
                    .collect();
                (simple, GroupElement::Golden(Matrix::identity(n)), Some(Gram::Golden(g)))
            }
            CoxeterType::F4 | CoxeterType::E6 | CoxeterType::E7 | CoxeterType::E8 => {
                // Symmetrized Cartan form; F4 has squared lengths 4, 4, 2, 2.
                let g = if ty == CoxeterType::F4 {
                    Matrix::from_rows(vec![
                        vec![4, -2, 0, 0],
                        vec![-2, 4, -2, 0],
                        vec![0, -2, 2, -1],
                        vec![0, 0, -1, 2],
                    ])
                } else {
                    let mut g = Matrix::<i64>::identity(n);
                    for i in 0..n {
                        g.set(i, i, 2);
                    }
                    for (a, b, _) in exceptional_edges(ty) {
                        g.set(a - 1, b - 1, -1);
                        g.set(b - 1, a - 1, -1);
                    }
                    g
                };
                let simple = simple_reflection_matrices(&g)
                    .into_iter()
                    .map(GroupElement::Integer)
                    .collect();
                (simple, GroupElement::Integer(Matrix::identity(n)), Some(Gram::Integer(g)))
            }
        };

        // c = s_n ... s_1 in the listed order; this is the image of the
        // Garside word of the dual presentations.
        let coxeter = simple
            .iter()
            .rev()
            .fold(identity.clone(), |acc: GroupElement, s| acc.mul(s));

        // Conjugation closure of the simple reflections.
        let mut reflections: Vec<GroupElement> = simple.clone();
        let mut seen: HashSet<GroupElement> = simple.iter().cloned().collect();
        let mut queue: VecDeque<usize> = (0..simple.len()).collect();
        while let Some(k) = queue.pop_front() {
            for s in &simple {
                let r = s.mul(&reflections[k]).mul(s);
                if seen.insert(r.clone()) {
                    reflections.push(r);
                    queue.push_back(reflections.len() - 1);
                }
            }
        }

        Ok(CoxeterDatum {
            ty,
            simple,
            reflections,
            coxeter,
            identity,
            gram,
        })
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank() as usize
    }

    pub fn identity(&self) -> &GroupElement {
        &self.identity
    }

    pub fn simple_reflections(&self) -> &[GroupElement] {
        &self.simple
    }

    pub fn reflections(&self) -> &[GroupElement] {
        &self.reflections
    }

    pub fn reflection_count(&self) -> usize {
        self.reflections.len()
    }

    pub fn coxeter_element(&self) -> &GroupElement {
        &self.coxeter
    }

    pub fn reflection_length(&self, w: &GroupElement) -> usize {
        w.reflection_length()
    }

    /// `Mᵀ G M = G` for the matrix models; trivially true otherwise.
    pub fn preserves_form(&self, w: &GroupElement) -> bool {
        match (&self.gram, w) {
            (Some(Gram::Integer(g)), GroupElement::Integer(m)) => &m.transpose().mul(g).mul(m) == g,
            (Some(Gram::Golden(g)), GroupElement::Golden(m)) => &m.transpose().mul(g).mul(m) == g,
            (None, _) => true,
            _ => false,
        }
    }

    fn mismatch(&self, a: &Atom) -> Error {
        Error::AtomTypeMismatch {
            atom: a.to_string(),
            ty: self.ty.to_string(),
        }
    }

    /// The reflection a dual or classical atom projects to.
    pub fn atom_to_reflection(&self, a: &Atom) -> Result<GroupElement> {
        let n = self.rank();
        let (i, j) = (a.i as usize, a.second() as usize);
        let pair_ok = |top: usize| j >= 1 && i > j && i <= top;
        let element = match (self.ty, a.family) {
            (CoxeterType::A(_), Family::A) if pair_ok(n + 1) => {
                GroupElement::Perm(Perm::transposition(n + 1, i, j))
            }
            (CoxeterType::A(_), Family::Sigma) if (1..=n).contains(&i) => self.simple[i - 1].clone(),
            (CoxeterType::B(_) | CoxeterType::D(_), Family::Alpha) if pair_ok(n) => {
                GroupElement::Signed(SignedPerm::transposition(n, i, j))
            }
            (CoxeterType::B(_) | CoxeterType::D(_), Family::Beta) if pair_ok(n) => {
                GroupElement::Signed(SignedPerm::signed_transposition(n, i, j))
            }
            (CoxeterType::B(_), Family::Tau) if (1..=n).contains(&i) => {
                GroupElement::Signed(SignedPerm::flip(n, i))
            }
            (CoxeterType::B(_) | CoxeterType::D(_), Family::TauOne) => self.simple[0].clone(),
            (CoxeterType::B(_) | CoxeterType::D(_), Family::Sigma) if (1..n).contains(&i) => {
                self.simple[i].clone()
            }
            (CoxeterType::I2(m), Family::DihedralSigma) if (1..=m as usize).contains(&i) => {
                GroupElement::Dihedral(Dihedral::reflection(m, i as i64 - 1))
            }
            (CoxeterType::I2(_), Family::Sigma) if (1..=2).contains(&i) => self.simple[i - 1].clone(),
            _ => return Err(self.mismatch(a)),
        };
        Ok(element)
    }

    /// Image of a positive word.
    pub fn word_image(&self, w: &Word) -> Result<GroupElement> {
        w.0.iter().try_fold(self.identity.clone(), |acc, a| {
            Ok(acc.mul(&self.atom_to_reflection(a)?))
        })
    }

    /// Image of a group word.
    pub fn signed_word_image(&self, w: &SignedWord) -> Result<GroupElement> {
        // Every atom maps to an involution, so exponents do not matter.
        w.0.iter().try_fold(self.identity.clone(), |acc, (a, _)| {
            Ok(acc.mul(&self.atom_to_reflection(a)?))
        })
    }

    /// All group elements by breadth-first search over right multiplication
    /// by simple reflections. The layer index is the Coxeter length.
    pub fn enumerate_group(&self, limit: usize) -> Result<GroupEnumeration> {
        let mut elements = vec![self.identity.clone()];
        let mut lengths = vec![0usize];
        let mut index: HashMap<GroupElement, usize> = HashMap::from([(self.identity.clone(), 0)]);
        let mut start = 0;
        while start < elements.len() {
            let end = elements.len();
            for k in start..end {
                for s in &self.simple {
                    let next = elements[k].mul(s);
                    if !index.contains_key(&next) {
                        if elements.len() >= limit {
                            return Err(Error::ResourceGuard {
                                what: format!("order of the Coxeter group {}", self.ty),
                                limit,
                            });
                        }
                        index.insert(next.clone(), elements.len());
                        elements.push(next);
                        lengths.push(lengths[k] + 1);
                    }
                }
            }
            start = end;
        }
        Ok(GroupEnumeration {
            elements,
            lengths,
            index,
        })
    }
}

/// The elements of a Coxeter group with their Coxeter lengths.
#[derive(Debug, Clone)]
pub struct GroupEnumeration {
    pub elements: Vec<GroupElement>,
    pub lengths: Vec<usize>,
    pub index: HashMap<GroupElement, usize>,
}

impl GroupEnumeration {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Degrees of the basic invariants.
pub fn degrees(ty: CoxeterType) -> Vec<u64> {
    let n = ty.rank() as u64;
    match ty {
        CoxeterType::A(_) => (2..=n + 1).collect(),
        CoxeterType::B(_) => (1..=n).map(|k| 2 * k).collect(),
        CoxeterType::D(_) => {
            let mut d: Vec<u64> = (1..n).map(|k| 2 * k).collect();
            d.push(n);
            d.sort_unstable();
            d
        }
        CoxeterType::I2(m) => vec![2, m as u64],
        CoxeterType::H3 => vec![2, 6, 10],
        CoxeterType::H4 => vec![2, 12, 20, 30],
        CoxeterType::F4 => vec![2, 6, 8, 12],
        CoxeterType::E6 => vec![2, 5, 6, 8, 9, 12],
        CoxeterType::E7 => vec![2, 6, 8, 10, 12, 14, 18],
        CoxeterType::E8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
    }
}

/// `|W|` as the product of the degrees.
pub fn group_order_formula(ty: CoxeterType) -> u128 {
    degrees(ty).iter().map(|&d| d as u128).product()
}

/// Number of reflections: the sum of `d_i - 1`.
pub fn reflection_count_formula(ty: CoxeterType) -> u64 {
    degrees(ty).iter().map(|d| d - 1).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_counts() {
        let cases = [
            (CoxeterType::A(3), 6),
            (CoxeterType::B(3), 9),
            (CoxeterType::D(4), 12),
            (CoxeterType::I2(5), 5),
            (CoxeterType::H3, 15),
            (CoxeterType::F4, 24),
            (CoxeterType::H4, 60),
            (CoxeterType::E6, 36),
            (CoxeterType::E7, 63),
            (CoxeterType::E8, 120),
        ];
        for (ty, count) in cases {
            let d = CoxeterDatum::new(ty).unwrap();
            assert_eq!(d.reflection_count(), count, "{ty}");
            assert_eq!(reflection_count_formula(ty), count as u64, "{ty}");
            assert!(d.reflections().iter().all(|r| r.reflection_length() == 1));
            assert!(d.reflections().iter().all(|r| d.preserves_form(r)));
            assert_eq!(d.coxeter_element().reflection_length(), d.rank(), "{ty}");
        }
    }

    #[test]
    fn reflection_set_is_closed() {
        for ty in [CoxeterType::B(3), CoxeterType::H3, CoxeterType::F4] {
            let d = CoxeterDatum::new(ty).unwrap();
            let set: HashSet<_> = d.reflections().iter().cloned().collect();
            for r in d.reflections() {
                for s in d.simple_reflections() {
                    assert!(set.contains(&s.mul(r).mul(s)));
                }
            }
        }
    }

    #[test]
    fn atom_images() {
        let b2 = CoxeterDatum::new(CoxeterType::B(2)).unwrap();
        assert_eq!(
            b2.atom_to_reflection(&Atom::tau(1)).unwrap(),
            GroupElement::Signed(SignedPerm(vec![-1, 2]))
        );
        let a2 = CoxeterDatum::new(CoxeterType::A(2)).unwrap();
        assert_eq!(
            a2.atom_to_reflection(&Atom::band(3, 1)).unwrap(),
            GroupElement::Perm(Perm::transposition(3, 3, 1))
        );
        assert!(b2.atom_to_reflection(&Atom::band(2, 1)).is_err());
        assert!(b2.atom_to_reflection(&Atom::tau(3)).is_err());
    }

    #[test]
    fn dual_relations_project_to_identities() {
        use crate::presentation::{completed_dual_presentation, garside_word};
        let mut types = vec![CoxeterType::A(1), CoxeterType::A(4), CoxeterType::B(2), CoxeterType::B(4)];
        types.extend([CoxeterType::D(3), CoxeterType::D(4), CoxeterType::I2(3), CoxeterType::I2(8)]);
        for ty in types {
            let d = CoxeterDatum::new(ty).unwrap();
            let p = completed_dual_presentation(ty).unwrap();
            for r in p.relations() {
                assert_eq!(d.word_image(r.lhs()).unwrap(), d.word_image(r.rhs()).unwrap(), "{ty} {r}");
            }
            let images: HashSet<_> = p.atoms().iter().map(|a| d.atom_to_reflection(a).unwrap()).collect();
            assert_eq!(images.len(), d.reflection_count(), "{ty}");
            assert_eq!(&d.word_image(&garside_word(ty).unwrap()).unwrap(), d.coxeter_element(), "{ty}");
        }
    }

    #[test]
    fn identity_and_inverse() {
        let d = CoxeterDatum::new(CoxeterType::H3).unwrap();
        let c = d.coxeter_element();
        assert!(c.mul(&c.inverse()).is_identity());
        assert_eq!(d.identity().reflection_length(), 0);
    }

    #[test]
    fn determinant_parity() {
        for ty in [CoxeterType::A(3), CoxeterType::D(4), CoxeterType::H3, CoxeterType::I2(7)] {
            let d = CoxeterDatum::new(ty).unwrap();
            let g = d.enumerate_group(100_000).unwrap();
            for w in &g.elements {
                let parity = if w.reflection_length() % 2 == 0 { 1 } else { -1 };
                assert_eq!(w.determinant_sign(), parity, "{ty} {w:?}");
            }
        }
    }

    #[test]
    fn small_group_orders() {
        for ty in [CoxeterType::A(3), CoxeterType::B(3), CoxeterType::D(4), CoxeterType::I2(6), CoxeterType::H3] {
            let d = CoxeterDatum::new(ty).unwrap();
            assert_eq!(d.enumerate_group(1_000_000).unwrap().order() as u128, group_order_formula(ty));
        }
        let d = CoxeterDatum::new(CoxeterType::B(4)).unwrap();
        assert!(d.enumerate_group(10).is_err());
    }
}
