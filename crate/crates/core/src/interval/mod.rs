//! Simple elements as group elements: the interval `[1, c]` in absolute
//! order for the dual structures, the whole group in weak order for the
//! classical ones.

mod data;
mod formula;

use std::collections::HashMap;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use data::{GarsideData, Structure, CLASSICAL_LIMIT};
pub use formula::{classical_count, classical_formula, ncp_count, ncp_formula};

use crate::coxeter::{CoxeterDatum, GroupElement};
use crate::error::{Error, Result};
use crate::types::CoxeterType;

/// Largest poset the enumerators will build.
pub const ELEMENT_LIMIT: usize = 60_000;
/// Posets up to this size get an exhaustive pairwise lattice check.
pub const EXHAUSTIVE_LATTICE_LIMIT: usize = 2_000;
pub const SAMPLED_PAIRS: usize = 10_000;
pub const SAMPLE_SEED: u64 = 0x5eed_da7a;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Grading {
    /// Reflection length; generators are all reflections.
    Absolute,
    /// Coxeter length; generators are the simple reflections.
    Weak,
}

#[derive(Debug)]
struct Order {
    down: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
}

/// A finite graded poset of group elements ordered by length-additive
/// left divisibility: `u ≼ v` iff `ℓ(u) + ℓ(u⁻¹v) = ℓ(v)`.
///
/// Elements are stored in non-decreasing grade order, index 0 is the
/// identity and `top()` the unique maximum.
#[derive(Debug)]
pub struct IntervalPoset {
    ty: CoxeterType,
    grading: Grading,
    elements: Vec<GroupElement>,
    inverses: Vec<GroupElement>,
    grades: Vec<usize>,
    index: HashMap<GroupElement, usize>,
    generators: Vec<GroupElement>,
    /// `(generator, element)` with `elements[i] = g * e` (absolute) or
    /// `e * g` (weak).
    parent: Vec<Option<(usize, usize)>>,
    top: usize,
    order: OnceLock<Order>,
}

/// Enumerates `[1, c]` by growing grade by grade: `u` of grade `k` is
/// extended to `t u` whenever `ℓ_R(t u) = k + 1` and
/// `ℓ_R((t u)⁻¹ c) = n - k - 1`.
pub fn enumerate_interval(datum: &CoxeterDatum) -> Result<IntervalPoset> {
    enumerate_interval_with_limit(datum, ELEMENT_LIMIT)
}

pub fn enumerate_interval_with_limit(datum: &CoxeterDatum, limit: usize) -> Result<IntervalPoset> {
    let n = datum.rank();
    let c = datum.coxeter_element();
    let generators: Vec<GroupElement> = datum.reflections().to_vec();
    let tc: Vec<GroupElement> = generators.iter().map(|t| t.mul(c)).collect();

    let identity = datum.identity().clone();
    let mut elements = vec![identity.clone()];
    let mut inverses = vec![identity.clone()];
    let mut grades = vec![0];
    let mut parent = vec![None];
    let mut index = HashMap::from([(identity, 0usize)]);

    let mut start = 0;
    for k in 0..n {
        let end = elements.len();
        // Candidates per frontier element are computed independently and
        // merged in frontier order, so the result does not depend on
        // scheduling.
        let found: Vec<Vec<(usize, GroupElement, GroupElement)>> = (start..end)
            .into_par_iter()
            .map(|u| {
                let mut out = Vec::new();
                for (g, t) in generators.iter().enumerate() {
                    let v = t.mul(&elements[u]);
                    if index.contains_key(&v) {
                        continue;
                    }
                    // (t u)⁻¹ c = u⁻¹ (t c)
                    let rest = inverses[u].mul(&tc[g]);
                    if rest.reflection_length() == n - k - 1 && v.reflection_length() == k + 1 {
                        out.push((g, v, inverses[u].mul(t)));
                    }
                }
                out
            })
            .collect();
        for (offset, list) in found.into_iter().enumerate() {
            for (g, v, v_inv) in list {
                if index.contains_key(&v) {
                    continue;
                }
                if elements.len() >= limit {
                    return Err(Error::ResourceGuard {
                        what: format!("interval of {}", datum.coxeter_type()),
                        limit,
                    });
                }
                index.insert(v.clone(), elements.len());
                elements.push(v);
                inverses.push(v_inv);
                grades.push(k + 1);
                parent.push(Some((g, start + offset)));
            }
        }
        start = end;
    }

    let top = *index
        .get(c)
        .ok_or_else(|| Error::Structure("Coxeter element missing from its interval".into()))?;
    if elements.len() - start != 1 {
        return Err(Error::Structure(format!(
            "interval has {} elements of top grade",
            elements.len() - start
        )));
    }
    Ok(IntervalPoset {
        ty: datum.coxeter_type(),
        grading: Grading::Absolute,
        elements,
        inverses,
        grades,
        index,
        generators,
        parent,
        top,
        order: OnceLock::new(),
    })
}

/// The whole group in (right) weak order, graded by Coxeter length.
pub fn enumerate_weak_order(datum: &CoxeterDatum, limit: usize) -> Result<IntervalPoset> {
    let generators: Vec<GroupElement> = datum.simple_reflections().to_vec();
    let identity = datum.identity().clone();
    let mut elements = vec![identity.clone()];
    let mut inverses = vec![identity.clone()];
    let mut grades = vec![0];
    let mut parent = vec![None];
    let mut index = HashMap::from([(identity, 0usize)]);
    let mut k = 0;
    while k < elements.len() {
        for (g, s) in generators.iter().enumerate() {
            let v = elements[k].mul(s);
            if index.contains_key(&v) {
                continue;
            }
            if elements.len() >= limit {
                return Err(Error::ResourceGuard {
                    what: format!("order of the Coxeter group {}", datum.coxeter_type()),
                    limit,
                });
            }
            index.insert(v.clone(), elements.len());
            inverses.push(s.mul(&inverses[k]));
            elements.push(v);
            grades.push(grades[k] + 1);
            parent.push(Some((g, k)));
        }
        k += 1;
    }
    let top = elements.len() - 1;
    if grades[top] != datum.reflection_count() {
        return Err(Error::Structure("longest element has unexpected length".into()));
    }
    Ok(IntervalPoset {
        ty: datum.coxeter_type(),
        grading: Grading::Weak,
        elements,
        inverses,
        grades,
        index,
        generators,
        parent,
        top,
        order: OnceLock::new(),
    })
}

impl IntervalPoset {
    pub fn coxeter_type(&self) -> CoxeterType {
        self.ty
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn inverse(&self, i: usize) -> &GroupElement {
        &self.inverses[i]
    }

    pub fn index_of(&self, w: &GroupElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn grade(&self, i: usize) -> usize {
        self.grades[i]
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    /// Number of elements of each grade.
    pub fn grade_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.grades[self.top] + 1];
        for &g in &self.grades {
            counts[g] += 1;
        }
        counts
    }

    /// A word in the generators (as indices) whose product is element `i`.
    pub fn generator_word(&self, i: usize) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.grades[i]);
        let mut cur = i;
        while let Some((g, e)) = self.parent[cur] {
            word.push(g);
            cur = e;
        }
        // Absolute: elements[i] = g1 (g2 (... )), collected outermost first.
        // Weak: elements[i] = (... g2) g1, collected last first.
        if self.grading == Grading::Weak {
            word.reverse();
        }
        word
    }

    fn length_of(&self, w: &GroupElement) -> Option<usize> {
        match self.grading {
            Grading::Absolute => Some(w.reflection_length()),
            Grading::Weak => self.index.get(w).map(|&i| self.grades[i]),
        }
    }

    /// `u ≼ v` straight from the length condition.
    pub fn leq_by_definition(&self, u: usize, v: usize) -> bool {
        if self.grades[u] > self.grades[v] {
            return false;
        }
        let q = self.inverses[u].mul(&self.elements[v]);
        self.length_of(&q) == Some(self.grades[v] - self.grades[u])
    }

    /// Down-sets and up-sets as the reflexive-transitive closure of the
    /// cover relation `v = w g` with `grade(v) = grade(w) + 1`.
    fn order(&self) -> &Order {
        self.order.get_or_init(|| {
            let n = self.len();
            let mut down: Vec<FixedBitSet> = Vec::with_capacity(n);
            for v in 0..n {
                let mut set = FixedBitSet::with_capacity(n);
                set.insert(v);
                if self.grades[v] > 0 {
                    for g in &self.generators {
                        let w = self.elements[v].mul(g);
                        if let Some(&wi) = self.index.get(&w) {
                            if self.grades[wi] + 1 == self.grades[v] {
                                set.union_with(&down[wi]);
                            }
                        }
                    }
                }
                down.push(set);
            }
            let mut up = vec![FixedBitSet::with_capacity(n); n];
            for (v, set) in down.iter().enumerate() {
                for u in set.ones() {
                    up[u].insert(v);
                }
            }
            Order { down, up }
        })
    }

    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.order().down[v].contains(u)
    }

    pub fn down_set(&self, v: usize) -> Vec<usize> {
        self.order().down[v].ones().collect()
    }

    pub fn up_set(&self, u: usize) -> Vec<usize> {
        self.order().up[u].ones().collect()
    }

    fn violation(&self, what: &str, u: usize, v: usize) -> Error {
        Error::Structure(format!(
            "lattice violation: {what} of {:?} and {:?} is not unique",
            self.elements[u], self.elements[v]
        ))
    }

    /// Greatest lower bound.
    pub fn meet(&self, u: usize, v: usize) -> Result<usize> {
        let order = self.order();
        let mut lower = order.down[u].clone();
        lower.intersect_with(&order.down[v]);
        // Elements are sorted by grade, so the last one has maximal grade.
        let candidate = lower.maximum().ok_or_else(|| self.violation("meet", u, v))?;
        if order.down[candidate].count_ones(..) != lower.count_ones(..) {
            return Err(self.violation("meet", u, v));
        }
        Ok(candidate)
    }

    /// Least upper bound.
    pub fn join(&self, u: usize, v: usize) -> Result<usize> {
        let order = self.order();
        let mut upper = order.up[u].clone();
        upper.intersect_with(&order.up[v]);
        let candidate = upper.minimum().ok_or_else(|| self.violation("join", u, v))?;
        if order.up[candidate].count_ones(..) != upper.count_ones(..) {
            return Err(self.violation("join", u, v));
        }
        Ok(candidate)
    }

    /// Meet by scanning every element; used to cross-check [`meet`](Self::meet).
    pub fn meet_by_scan(&self, u: usize, v: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.len())
            .filter(|&w| self.leq_by_definition(w, u) && self.leq_by_definition(w, v))
            .collect();
        let maximal: Vec<usize> = lower
            .iter()
            .copied()
            .filter(|&w| lower.iter().all(|&x| self.leq_by_definition(x, w)))
            .collect();
        (maximal.len() == 1).then(|| maximal[0])
    }

    /// Number of pairs on which the closure order and the length condition
    /// disagree.
    pub fn order_mismatches(&self) -> usize {
        let n = self.len();
        (0..n)
            .into_par_iter()
            .map(|u| (0..n).filter(|&v| self.leq(u, v) != self.leq_by_definition(u, v)).count())
            .sum()
    }

    /// Exhaustive pair check up to [`EXHAUSTIVE_LATTICE_LIMIT`] elements,
    /// seeded sampling beyond.
    pub fn verify_lattice(&self) -> LatticeReport {
        let n = self.len();
        let exhaustive = n <= EXHAUSTIVE_LATTICE_LIMIT;
        let pairs: Vec<(usize, usize)> = if exhaustive {
            (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
            (0..SAMPLED_PAIRS).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect()
        };
        let mut failures: Vec<String> = pairs
            .par_iter()
            .filter_map(|&(u, v)| {
                let check = || -> Result<()> {
                    let m = self.meet(u, v)?;
                    let j = self.join(u, v)?;
                    if !(self.leq(m, u) && self.leq(m, v) && self.leq(u, j) && self.leq(v, j)) {
                        return Err(self.violation("bound", u, v));
                    }
                    Ok(())
                };
                check().err().map(|e| e.to_string())
            })
            .collect();
        failures.sort();
        let counts = self.grade_counts();
        let rank_symmetric = counts.iter().eq(counts.iter().rev());
        let (top_unique, bottom_unique) = (counts.last() == Some(&1), counts.first() == Some(&1));
        let pass = failures.is_empty() && rank_symmetric && top_unique && bottom_unique;
        LatticeReport {
            check: "lattice",
            ty: self.ty.family().to_string(),
            rank: self.ty.parameter(),
            grading: self.grading,
            elements: n,
            grade_counts: counts,
            exhaustive,
            seed: (!exhaustive).then_some(SAMPLE_SEED),
            pairs_checked: pairs.len(),
            violations: failures.len(),
            first_violation: failures.into_iter().next(),
            rank_symmetric,
            pass,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LatticeReport {
    pub check: &'static str,
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: u32,
    pub grading: Grading,
    pub elements: usize,
    pub grade_counts: Vec<usize>,
    pub exhaustive: bool,
    pub seed: Option<u64>,
    pub pairs_checked: usize,
    pub violations: usize,
    pub first_violation: Option<String>,
    pub rank_symmetric: bool,
    pub pass: bool,
}
