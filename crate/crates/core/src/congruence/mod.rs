//! Word problem for homogeneous presentations by exhaustive closure.
//!
//! Every relation preserves length, so the congruence class of a word is a
//! finite set of words of the same length and can be enumerated outright.
//! This module is the ground truth the other engines are tested against.

mod complement;

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;

pub use complement::{
    cube_check, reverse, ComplementTable, CubeFailure, CubeReport, PairDiagnostic, Reversal,
    DEFAULT_STEP_BOUND,
};

use crate::error::{Error, Result};
use crate::presentation::{Atom, Presentation, Relation, Word};
use crate::types::CoxeterType;

/// Default cap on the size of a single congruence class.
pub const DEFAULT_CLASS_CAP: usize = 2_000_000;

pub(crate) type Letters = Vec<u16>;

/// A congruence class: the lexicographically least member and all members,
/// sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CongruenceClass {
    pub representative: Word,
    pub members: Vec<Word>,
}

impl CongruenceClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn word_length(&self) -> usize {
        self.representative.len()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.binary_search(w).is_ok()
    }
}

/// Exhaustive rewriting closure over one presentation.
#[derive(Debug, Clone)]
pub struct Congruence {
    ty: CoxeterType,
    atoms: Vec<Atom>,
    index: HashMap<Atom, u16>,
    /// Relation side to the sides it is directly related to.
    neighbours: HashMap<Letters, Vec<Letters>>,
    side_lengths: Vec<usize>,
    cap: usize,
}

impl Congruence {
    pub fn new(p: &Presentation) -> Self {
        let atoms = p.atoms().to_vec();
        let index: HashMap<Atom, u16> = atoms
            .iter()
            .enumerate()
            .map(|(k, a)| (*a, k as u16))
            .collect();
        let encode = |w: &Word| -> Letters { w.0.iter().map(|a| index[a]).collect() };
        let mut neighbours: HashMap<Letters, Vec<Letters>> = HashMap::new();
        let mut lengths = BTreeSet::new();
        for r in p.relations() {
            let (l, rr) = (encode(r.lhs()), encode(r.rhs()));
            lengths.insert(l.len());
            neighbours.entry(l.clone()).or_default().push(rr.clone());
            neighbours.entry(rr).or_default().push(l);
        }
        Congruence {
            ty: p.coxeter_type(),
            atoms,
            index,
            neighbours,
            side_lengths: lengths.into_iter().collect(),
            cap: DEFAULT_CLASS_CAP,
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.ty
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub(crate) fn encode(&self, w: &Word) -> Result<Letters> {
        w.0.iter()
            .map(|a| {
                self.index.get(a).copied().ok_or_else(|| Error::AtomTypeMismatch {
                    atom: a.to_string(),
                    ty: self.ty.to_string(),
                })
            })
            .collect()
    }

    pub(crate) fn decode(&self, w: &[u16]) -> Word {
        Word(w.iter().map(|&k| self.atoms[k as usize]).collect())
    }

    /// Words reachable from `w` by one relation application.
    fn for_each_neighbour(&self, w: &[u16], mut f: impl FnMut(Letters)) {
        for &len in &self.side_lengths {
            if len > w.len() {
                break;
            }
            for p in 0..=w.len() - len {
                if let Some(others) = self.neighbours.get(&w[p..p + len]) {
                    for o in others {
                        let mut next = w.to_vec();
                        next[p..p + len].copy_from_slice(o);
                        f(next);
                    }
                }
            }
        }
    }

    /// Breadth-first closure from `start`. Stops early when `stop` returns
    /// true for a newly reached word.
    fn closure(&self, start: Letters, mut stop: impl FnMut(&[u16]) -> bool) -> Result<(HashSet<Letters>, bool)> {
        let mut seen = HashSet::new();
        if stop(&start) {
            seen.insert(start);
            return Ok((seen, true));
        }
        seen.insert(start.clone());
        let mut queue = VecDeque::from([start]);
        while let Some(w) = queue.pop_front() {
            let mut hit = false;
            let mut overflow = false;
            self.for_each_neighbour(&w, |next| {
                if hit || overflow || seen.contains(&next) {
                    return;
                }
                if stop(&next) {
                    hit = true;
                }
                seen.insert(next.clone());
                if seen.len() > self.cap {
                    overflow = true;
                }
                queue.push_back(next);
            });
            if overflow {
                return Err(Error::ClassCap(self.cap));
            }
            if hit {
                return Ok((seen, true));
            }
        }
        Ok((seen, false))
    }

    pub(crate) fn class_letters(&self, w: Letters) -> Result<HashSet<Letters>> {
        Ok(self.closure(w, |_| false)?.0)
    }

    pub(crate) fn equivalent_letters(&self, u: &[u16], v: &[u16]) -> Result<bool> {
        if u.len() != v.len() {
            return Ok(false);
        }
        Ok(self.closure(u.to_vec(), |w| w == v)?.1)
    }

    fn make_class(&self, members: HashSet<Letters>) -> CongruenceClass {
        let mut members: Vec<Letters> = members.into_iter().collect();
        members.sort();
        let members: Vec<Word> = members.iter().map(|m| self.decode(m)).collect();
        CongruenceClass {
            representative: members[0].clone(),
            members,
        }
    }

    /// The full congruence class of `w`.
    pub fn class(&self, w: &Word) -> Result<CongruenceClass> {
        let letters = self.encode(w)?;
        Ok(self.make_class(self.class_letters(letters)?))
    }

    pub fn equivalent(&self, u: &Word, v: &Word) -> Result<bool> {
        let (u, v) = (self.encode(u)?, self.encode(v)?);
        self.equivalent_letters(&u, &v)
    }

    /// Whether `r` is a consequence of the relations.
    pub fn derivable(&self, r: &Relation) -> Result<bool> {
        self.equivalent(r.lhs(), r.rhs())
    }

    /// Classes of words that are prefixes (`left`) or suffixes of some
    /// member of the class of `w`, ordered by length then representative.
    fn divisors(&self, w: &Word, left: bool) -> Result<Vec<CongruenceClass>> {
        let members = self.class_letters(self.encode(w)?)?;
        let n = w.len();
        let mut out = Vec::new();
        for k in 0..=n {
            let mut pieces: HashSet<Letters> = members
                .iter()
                .map(|m| if left { m[..k].to_vec() } else { m[n - k..].to_vec() })
                .collect();
            let mut layer = Vec::new();
            while let Some(p) = pieces.iter().next().cloned() {
                let class = self.class_letters(p)?;
                for c in &class {
                    pieces.remove(c);
                }
                layer.push(self.make_class(class));
            }
            layer.sort();
            out.extend(layer);
        }
        Ok(out)
    }

    pub fn left_divisors(&self, w: &Word) -> Result<Vec<CongruenceClass>> {
        self.divisors(w, true)
    }

    pub fn right_divisors(&self, w: &Word) -> Result<Vec<CongruenceClass>> {
        self.divisors(w, false)
    }

    /// Checks that the left and right divisors of `w` coincide and contain
    /// every atom.
    pub fn is_garside_element(&self, w: &Word) -> Result<GarsideElementReport> {
        let left = self.left_divisors(w)?;
        let right = self.right_divisors(w)?;
        let reps: BTreeSet<&Word> = left.iter().map(|c| &c.representative).collect();
        let missing_atoms: Vec<String> = self
            .atoms
            .iter()
            .filter(|a| !reps.contains(&Word(vec![**a])))
            .map(|a| a.to_string())
            .collect();
        let coincide = left == right;
        Ok(GarsideElementReport {
            check: "garside-element",
            ty: self.ty.family().to_string(),
            rank: self.ty.parameter(),
            word: w.to_string(),
            left_divisors: left.len(),
            right_divisors: right.len(),
            divisors_coincide: coincide,
            generates: missing_atoms.is_empty(),
            pass: coincide && missing_atoms.is_empty(),
            missing_atoms,
        })
    }

    /// Number of simple elements, i.e. left divisors of `delta`, after
    /// checking that `delta` is a Garside element.
    pub fn count_simples(&self, delta: &Word) -> Result<usize> {
        let report = self.is_garside_element(delta)?;
        if !report.pass {
            return Err(Error::Structure(format!(
                "`{delta}` is not a Garside element of the {} presentation",
                self.ty
            )));
        }
        Ok(report.left_divisors)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GarsideElementReport {
    pub check: &'static str,
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: u32,
    pub word: String,
    pub left_divisors: usize,
    pub right_divisors: usize,
    pub divisors_coincide: bool,
    pub generates: bool,
    pub missing_atoms: Vec<String>,
    pub pass: bool,
}
