//! Left-greedy normal forms and the word problem over a [`GarsideData`].

mod halfturn;

use serde::Serialize;

pub use halfturn::{halfturn_atom, halfturn_fixed_check, generator_images, HalfturnReport};

use crate::error::{Error, Result};
use crate::interval::GarsideData;
use crate::presentation::{SignedWord, Word};

/// `Δ^k s₁ ⋯ s_r` with `s₁ ≠ Δ`, `s_r ≠ 1` and every pair left-weighted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub delta_power: i64,
    pub factors: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalFormJson {
    pub delta_power: i64,
    pub factors: Vec<String>,
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm {
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Canonical length `r`.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn to_json(&self, data: &GarsideData) -> NormalFormJson {
        NormalFormJson {
            delta_power: self.delta_power,
            factors: self.factors.iter().map(|&s| data.render(s)).collect(),
        }
    }

    /// The simples `Δ^k s₁ ⋯ s_r` for `k ≥ 0`.
    pub fn to_simples(&self, data: &GarsideData) -> Option<Vec<usize>> {
        let k = usize::try_from(self.delta_power).ok()?;
        let mut out = vec![data.delta(); k];
        out.extend(&self.factors);
        Some(out)
    }

    /// A group word in the atoms representing this element.
    pub fn to_signed_word(&self, data: &GarsideData) -> Option<SignedWord> {
        let delta = SignedWord::positive(&data.word(data.delta())?);
        let power = if self.delta_power < 0 { delta.inverse() } else { delta };
        let mut parts: Vec<SignedWord> = vec![power; self.delta_power.unsigned_abs() as usize];
        for &s in &self.factors {
            parts.push(SignedWord::positive(&data.word(s)?));
        }
        Some(SignedWord::product(&parts))
    }
}

impl std::fmt::Display for NormalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Δ^{} {:?}", self.delta_power, self.factors)
    }
}

/// Makes `(a, b)` left-weighted: moves `∂a ∧ b` from `b` to `a`.
pub fn left_weighted(data: &GarsideData, a: usize, b: usize) -> Result<(usize, usize)> {
    let m = data.meet(data.left_complement(a), b)?;
    if m == data.identity() {
        return Ok((a, b));
    }
    let am = data
        .product(a, m)
        .ok_or_else(|| Error::Structure("a · (∂a ∧ b) is not simple".into()))?;
    let rest = data
        .left_quotient(m, b)
        .ok_or_else(|| Error::Structure("∂a ∧ b does not divide b".into()))?;
    Ok((am, rest))
}

/// Incremental normal form computation.
#[derive(Debug, Clone)]
struct Accumulator<'a> {
    data: &'a GarsideData,
    k: i64,
    factors: Vec<usize>,
}

impl<'a> Accumulator<'a> {
    fn new(data: &'a GarsideData) -> Self {
        Accumulator {
            data,
            k: 0,
            factors: Vec::new(),
        }
    }

    fn check(&self, s: usize) -> Result<()> {
        if s >= self.data.simple_count() {
            return Err(Error::NotSimple(format!("simple #{s}")));
        }
        Ok(())
    }

    fn push(&mut self, s: usize) -> Result<()> {
        self.check(s)?;
        if s == self.data.identity() {
            return Ok(());
        }
        self.factors.push(s);
        let mut i = self.factors.len() - 1;
        while i > 0 {
            let (a, b) = left_weighted(self.data, self.factors[i - 1], self.factors[i])?;
            if (a, b) == (self.factors[i - 1], self.factors[i]) {
                break;
            }
            self.factors[i - 1] = a;
            self.factors[i] = b;
            i -= 1;
        }
        self.settle()
    }

    /// Right multiplication by `s⁻¹ = Δ⁻¹ (Δ s⁻¹)`, after moving `Δ⁻¹`
    /// across the positive part with `Δ y Δ⁻¹`.
    fn push_inverse(&mut self, s: usize) -> Result<()> {
        self.check(s)?;
        if s == self.data.identity() {
            return Ok(());
        }
        for f in &mut self.factors {
            *f = self.data.phi_inverse(*f);
        }
        self.k -= 1;
        self.push(self.data.right_complement(s))
    }

    /// Sweeps until every adjacent pair is left-weighted, then absorbs
    /// leading `Δ`s and drops trailing identities.
    fn settle(&mut self) -> Result<()> {
        loop {
            let mut changed = false;
            for i in (1..self.factors.len()).rev() {
                let (a, b) = left_weighted(self.data, self.factors[i - 1], self.factors[i])?;
                if (a, b) != (self.factors[i - 1], self.factors[i]) {
                    self.factors[i - 1] = a;
                    self.factors[i] = b;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        while self.factors.last() == Some(&self.data.identity()) {
            self.factors.pop();
        }
        let leading = self.factors.iter().take_while(|&&s| s == self.data.delta()).count();
        self.factors.drain(..leading);
        self.k += leading as i64;
        Ok(())
    }

    fn finish(self) -> NormalForm {
        NormalForm {
            delta_power: self.k,
            factors: self.factors,
        }
    }
}

/// Normal form of a product of simples.
pub fn normal_form(data: &GarsideData, simples: &[usize]) -> Result<NormalForm> {
    let mut acc = Accumulator::new(data);
    for &s in simples {
        acc.push(s)?;
    }
    Ok(acc.finish())
}

/// Normal form of a positive word in the atoms.
pub fn positive_normal_form(data: &GarsideData, w: &Word) -> Result<NormalForm> {
    let simples = w
        .0
        .iter()
        .map(|a| data.simple_of_atom(a))
        .collect::<Result<Vec<_>>>()?;
    normal_form(data, &simples)
}

/// Normal form of a group word in the atoms.
pub fn group_normal_form(data: &GarsideData, w: &SignedWord) -> Result<NormalForm> {
    let mut acc = Accumulator::new(data);
    for (a, e) in &w.0 {
        let s = data.simple_of_atom(a)?;
        if *e > 0 {
            acc.push(s)?;
        } else {
            acc.push_inverse(s)?;
        }
    }
    Ok(acc.finish())
}

pub fn equal_in_group(data: &GarsideData, u: &SignedWord, v: &SignedWord) -> Result<bool> {
    Ok(group_normal_form(data, u)? == group_normal_form(data, v)?)
}

/// Whether the factors satisfy the normal-form conditions.
pub fn is_normal(data: &GarsideData, nf: &NormalForm) -> Result<bool> {
    let f = &nf.factors;
    if f.first() == Some(&data.delta()) || f.last() == Some(&data.identity()) {
        return Ok(false);
    }
    for w in f.windows(2) {
        if data.meet(data.left_complement(w[0]), w[1])? != data.identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The largest simple left-dividing the product of `simples`, found by
/// scanning every simple; used to cross-check the first factor.
pub fn greedy_head_by_scan(data: &GarsideData, simples: &[usize]) -> Result<usize> {
    let target = normal_form(data, simples)?;
    let mut best = data.identity();
    for s in 0..data.simple_count() {
        // s ≼ w iff s⁻¹ w is positive.
        let mut acc = Accumulator::new(data);
        acc.push_inverse(s)?;
        for &x in simples {
            acc.push(x)?;
        }
        if acc.finish().delta_power >= 0 && data.grade(s) > data.grade(best) {
            best = s;
        }
    }
    let head = match target.delta_power {
        k if k > 0 => data.delta(),
        _ => target.factors.first().copied().unwrap_or(data.identity()),
    };
    if head != best {
        return Err(Error::Structure(format!("greedy head {head} differs from scanned head {best}")));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{completed_dual_presentation, parse_signed_word, Atom};
    use crate::types::CoxeterType;

    fn b2() -> GarsideData {
        GarsideData::dual(CoxeterType::B(2)).unwrap()
    }

    #[test]
    fn positive_examples() {
        let d = b2();
        let (t1, a21) = (Atom::tau(1), Atom::alpha(2, 1));
        let nf = positive_normal_form(&d, &Word(vec![t1, a21])).unwrap();
        assert_eq!(nf.delta_power, 0);
        assert_eq!(nf.factors, vec![d.simple_of_atom(&t1).unwrap(), d.simple_of_atom(&a21).unwrap()]);
        let nf = positive_normal_form(&d, &Word(vec![a21, t1])).unwrap();
        assert_eq!((nf.delta_power, nf.factors.len()), (1, 0));
        let s = d.simple_of_atom(&t1).unwrap();
        assert_eq!(normal_form(&d, &[s]).unwrap().factors, vec![s]);
        assert!(normal_form(&d, &[999]).is_err());
    }

    #[test]
    fn group_examples() {
        let d = b2();
        let p = completed_dual_presentation(CoxeterType::B(2)).unwrap();
        let w = |s: &str| parse_signed_word(s, &p).unwrap();
        assert!(group_normal_form(&d, &w("t[1] t[1]^-1")).unwrap().is_identity());
        let delta_inv = w("a[2,1] t[1]").inverse();
        let nf = group_normal_form(&d, &delta_inv).unwrap();
        assert_eq!((nf.delta_power, nf.factors.len()), (-1, 0));
        let nf = group_normal_form(&d, &w("a[2,1] t[1] a[2,1]^-1")).unwrap();
        assert_eq!(nf.delta_power, 0);
        assert_eq!(nf.factors, vec![d.simple_of_atom(&Atom::tau(2)).unwrap()]);
        assert!(equal_in_group(&d, &w("b[2,1] t[2]"), &w("a[2,1] t[1]")).unwrap());
        assert!(!equal_in_group(&d, &w("t[1] a[2,1]"), &w("a[2,1] t[1]")).unwrap());
    }

    #[test]
    fn round_trip_and_heads() {
        let d = GarsideData::dual(CoxeterType::B(3)).unwrap();
        let p = completed_dual_presentation(CoxeterType::B(3)).unwrap();
        let w = parse_signed_word("t[2]^-1 a[3,1] b[3,2] t[1]^-1 t[3] a[2,1]^-1 b[2,1]", &p).unwrap();
        let nf = group_normal_form(&d, &w).unwrap();
        assert!(is_normal(&d, &nf).unwrap());
        let again = group_normal_form(&d, &nf.to_signed_word(&d).unwrap()).unwrap();
        assert_eq!(nf, again);
        assert!(group_normal_form(&d, &w.then(&w.inverse())).unwrap().is_identity());
        let simples: Vec<usize> = [5, 17, 3, 11].into_iter().map(|i| i % d.simple_count()).collect();
        greedy_head_by_scan(&d, &simples).unwrap();
    }

    #[test]
    fn classical_structure() {
        let d = GarsideData::classical(CoxeterType::B(2)).unwrap();
        let p = crate::presentation::classical_presentation(CoxeterType::B(2)).unwrap();
        let w = |s: &str| parse_signed_word(s, &p).unwrap();
        assert!(equal_in_group(&d, &w("s[1] t[1] s[1] t[1]"), &w("t[1] s[1] t[1] s[1]")).unwrap());
        assert!(!equal_in_group(&d, &w("s[1] t[1]"), &w("t[1] s[1]")).unwrap());
        let nf = group_normal_form(&d, &w("s[1] t[1] s[1] t[1]")).unwrap();
        assert_eq!((nf.delta_power, nf.factors.len()), (1, 0));
    }
}
