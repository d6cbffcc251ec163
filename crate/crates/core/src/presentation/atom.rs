use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Generator family. The declaration order is the frozen atom order used for
/// class representatives: `Tau < Alpha < Beta`, then the remaining families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `τ_t` of the dual type-B presentation.
    Tau,
    /// `α_ts` of the dual B and D presentations.
    Alpha,
    /// `β_ts` of the dual B and D presentations.
    Beta,
    /// Band generator `a_ts` of the dual type-A presentation.
    A,
    /// Classical Artin generator `σ_i`.
    Sigma,
    /// Classical generator `τ_1` of types B and D.
    TauOne,
    /// Dual generator `σ_i` of type `I2(m)`.
    DihedralSigma,
}

impl Family {
    /// Letter used by the word grammar.
    pub fn letter(self) -> char {
        match self {
            Family::Tau | Family::TauOne => 't',
            Family::Alpha | Family::A => 'a',
            Family::Beta => 'b',
            Family::Sigma | Family::DihedralSigma => 's',
        }
    }

    pub fn is_pair_indexed(self) -> bool {
        matches!(self, Family::Alpha | Family::Beta | Family::A)
    }
}

/// A generator symbol: a family tag with one or two indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub family: Family,
    pub i: u16,
    pub j: Option<u16>,
}

impl Atom {
    fn pair(family: Family, t: u16, s: u16) -> Self {
        debug_assert!(t > s && s >= 1, "pair index must satisfy t > s >= 1");
        Atom { family, i: t, j: Some(s) }
    }

    fn single(family: Family, i: u16) -> Self {
        debug_assert!(i >= 1);
        Atom { family, i, j: None }
    }

    pub fn alpha(t: u16, s: u16) -> Self {
        Self::pair(Family::Alpha, t, s)
    }

    pub fn beta(t: u16, s: u16) -> Self {
        Self::pair(Family::Beta, t, s)
    }

    pub fn band(t: u16, s: u16) -> Self {
        Self::pair(Family::A, t, s)
    }

    pub fn tau(t: u16) -> Self {
        Self::single(Family::Tau, t)
    }

    pub fn sigma(i: u16) -> Self {
        Self::single(Family::Sigma, i)
    }

    pub fn tau_one() -> Self {
        Self::single(Family::TauOne, 1)
    }

    pub fn dihedral(i: u16) -> Self {
        Self::single(Family::DihedralSigma, i)
    }

    /// Second index, or 0 for single-index atoms.
    pub fn second(&self) -> u16 {
        self.j.unwrap_or(0)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.j {
            Some(j) => write!(f, "{}[{},{}]", self.family.letter(), self.i, j),
            None => write!(f, "{}[{}]", self.family.letter(), self.i),
        }
    }
}

/// A positive word. The empty word denotes the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Atom>);

impl Word {
    pub fn new(letters: Vec<Atom>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Atom] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }
}

impl From<Vec<Atom>> for Word {
    fn from(letters: Vec<Atom>) -> Self {
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// A homogeneous relation `lhs = rhs`, stored with the lexicographically
/// smaller side on the left.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    lhs: Word,
    rhs: Word,
}

impl Relation {
    pub fn new(a: Word, b: Word) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidRelation(format!("{a} = {b} is trivial")));
        }
        if a.len() != b.len() {
            return Err(Error::InvalidRelation(format!(
                "{a} = {b} is not homogeneous"
            )));
        }
        let (lhs, rhs) = if a < b { (a, b) } else { (b, a) };
        Ok(Relation { lhs, rhs })
    }

    pub fn lhs(&self) -> &Word {
        &self.lhs
    }

    pub fn rhs(&self) -> &Word {
        &self.rhs
    }

    pub fn len(&self) -> usize {
        self.lhs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lhs.is_empty()
    }

    pub fn map_atoms(&self, f: impl Fn(&Atom) -> Word) -> Result<Relation> {
        let map = |w: &Word| Word(w.0.iter().flat_map(|a| f(a).0).collect());
        Relation::new(map(&self.lhs), map(&self.rhs))
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// A group word: atoms with exponents `±1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SignedWord(pub Vec<(Atom, i8)>);

impl SignedWord {
    pub fn positive(w: &Word) -> Self {
        SignedWord(w.0.iter().map(|&a| (a, 1)).collect())
    }

    pub fn letter(a: Atom) -> Self {
        SignedWord(vec![(a, 1)])
    }

    pub fn inverse(&self) -> Self {
        SignedWord(self.0.iter().rev().map(|&(a, e)| (a, -e)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation with cancellation of adjacent `x x^-1` pairs at the seam.
    pub fn then(&self, other: &SignedWord) -> SignedWord {
        let mut out = self.0.clone();
        for &(a, e) in &other.0 {
            match out.last() {
                Some(&(b, f)) if b == a && f == -e => {
                    out.pop();
                }
                _ => out.push((a, e)),
            }
        }
        SignedWord(out)
    }

    pub fn product<'a>(parts: impl IntoIterator<Item = &'a SignedWord>) -> SignedWord {
        parts
            .into_iter()
            .fold(SignedWord::default(), |acc, w| acc.then(w))
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (a, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
            if *e < 0 {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// Atom serialization used by the presentation JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomJson {
    pub fam: String,
    pub i: u16,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub j: Option<u16>,
}

impl From<&Atom> for AtomJson {
    fn from(a: &Atom) -> Self {
        AtomJson {
            fam: a.family.letter().to_string(),
            i: a.i,
            j: a.j,
        }
    }
}
