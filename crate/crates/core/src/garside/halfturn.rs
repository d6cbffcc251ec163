use serde::Serialize;

use super::group_normal_form;
use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::interval::GarsideData;
use crate::presentation::{dual_presentation, Atom, SignedWord, Word};
use crate::types::CoxeterType;

/// The halfturn of dual `A(2n-1)`: indices shift by `n` modulo `2n`.
pub fn halfturn_atom(n: u16, a: &Atom) -> Atom {
    let shift = |x: u16| (x - 1 + n) % (2 * n) + 1;
    let (t, s) = (shift(a.i), shift(a.second()));
    Atom::band(t.max(s), t.min(s))
}

fn halfturn_word(n: u16, w: &Word) -> Word {
    Word(w.0.iter().map(|a| halfturn_atom(n, a)).collect())
}

/// Images of the dual `B(n)` atoms as group words over dual `A(2n-1)`:
/// `τ₁ ↦ a_{(n+1)1}`, `α_{(i+1)i} ↦ a_{(n+1+i)(n+i)} a_{(i+1)i}`, and the
/// remaining atoms through their conjugate expressions.
pub fn generator_images(n: u16) -> Vec<(Atom, SignedWord)> {
    let sigma = |i: u16| {
        SignedWord::positive(&Word(vec![Atom::band(n + 1 + i, n + i), Atom::band(i + 1, i)]))
    };
    let tau1 = SignedWord::letter(Atom::band(n + 1, 1));
    let alpha = |t: u16, s: u16| {
        let conj: Vec<SignedWord> = (s + 1..t).rev().map(sigma).collect();
        let conj = SignedWord::product(&conj);
        SignedWord::product(&[conj.clone(), sigma(s), conj.inverse()])
    };
    let tau = |t: u16| {
        if t == 1 {
            tau1.clone()
        } else {
            let a = alpha(t, 1);
            SignedWord::product(&[a.clone(), tau1.clone(), a.inverse()])
        }
    };
    let mut out = Vec::new();
    for t in 1..=n {
        out.push((Atom::tau(t), tau(t)));
    }
    for t in 2..=n {
        for s in 1..t {
            out.push((Atom::alpha(t, s), alpha(t, s)));
            out.push((Atom::beta(t, s), SignedWord::product(&[tau(s).inverse(), alpha(t, s), tau(s)])));
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct HalfturnImage {
    pub atom: String,
    pub expression: String,
    pub image: String,
    pub fixed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct HalfturnReport {
    pub check: &'static str,
    pub n: u16,
    pub source: String,
    pub target: String,
    pub involution: bool,
    pub automorphism: bool,
    /// Image relations that are literally relations of the target.
    pub literal_relations: usize,
    pub target_relations: usize,
    pub images: Vec<HalfturnImage>,
    pub relations: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

pub fn halfturn_fixed_check(n: u16) -> Result<HalfturnReport> {
    if !(2..=3).contains(&n) {
        return Err(Error::UnsupportedRank {
            family: "halfturn",
            rank: n as u32,
            reason: "the check runs for n = 2 and n = 3".into(),
        });
    }
    let target_ty = CoxeterType::A(2 * n as u32 - 1);
    let source_ty = CoxeterType::B(n as u32);
    let target = dual_presentation(target_ty)?;
    let source = dual_presentation(source_ty)?;
    let oracle = Congruence::new(&target);
    let data = GarsideData::dual(target_ty)?;
    let mut failures = Vec::new();

    let involution = target
        .atoms()
        .iter()
        .all(|a| halfturn_atom(n, &halfturn_atom(n, a)) == *a);

    let mut literal_relations = 0;
    let mut automorphism = true;
    for r in target.relations() {
        let image = r.map_atoms(|a| Word(vec![halfturn_atom(n, a)]))?;
        if target.contains_relation(&image) {
            literal_relations += 1;
        } else if !oracle.derivable(&image)? {
            automorphism = false;
            failures.push(format!("halfturn image of {r} is not a relation"));
        }
    }

    let mut images = Vec::new();
    let mut positive = std::collections::HashMap::new();
    for (atom, expression) in generator_images(n) {
        let nf = group_normal_form(&data, &expression)?;
        let word = nf.to_signed_word(&data).filter(|_| nf.delta_power >= 0).map(|w| {
            Word(w.0.into_iter().map(|(a, _)| a).collect())
        });
        let Some(word) = word else {
            failures.push(format!("image of {atom} is not positive"));
            continue;
        };
        let fixed = oracle.equivalent(&halfturn_word(n, &word), &word)?;
        if !fixed {
            failures.push(format!("image of {atom} is not fixed by the halfturn"));
        }
        images.push(HalfturnImage {
            atom: atom.to_string(),
            expression: expression.to_string(),
            image: word.to_string(),
            fixed,
        });
        positive.insert(atom, word);
    }

    let mut relations = 0;
    for r in source.relations() {
        relations += 1;
        let map = |w: &Word| -> Option<Word> {
            let parts: Option<Vec<Word>> = w.0.iter().map(|a| positive.get(a).cloned()).collect();
            parts.map(|p| Word(p.into_iter().flat_map(|w| w.0).collect()))
        };
        match (map(r.lhs()), map(r.rhs())) {
            (Some(l), Some(rh)) => {
                if !oracle.equivalent(&l, &rh)? {
                    failures.push(format!("{r} maps to {l} = {rh}, which fails in {target_ty}"));
                }
            }
            _ => failures.push(format!("{r} involves an atom without positive image")),
        }
    }

    let pass = failures.is_empty() && involution && automorphism;
    Ok(HalfturnReport {
        check: "halfturn",
        n,
        source: source_ty.to_string(),
        target: target_ty.to_string(),
        involution,
        automorphism,
        literal_relations,
        target_relations: target.relations().len(),
        images,
        relations,
        failures,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift() {
        assert_eq!(halfturn_atom(2, &Atom::band(2, 1)), Atom::band(4, 3));
        assert_eq!(halfturn_atom(2, &Atom::band(3, 1)), Atom::band(3, 1));
        assert_eq!(halfturn_atom(2, &Atom::band(4, 3)), Atom::band(2, 1));
        assert_eq!(halfturn_atom(3, &Atom::band(5, 2)), Atom::band(5, 2));
    }

    #[test]
    fn n2() {
        let r = halfturn_fixed_check(2).unwrap();
        assert!(r.pass, "{r:#?}");
        let tau1 = r.images.iter().find(|i| i.atom == "t[1]").unwrap();
        assert_eq!(tau1.image, "a[3,1]");
        let a21 = r.images.iter().find(|i| i.atom == "a[2,1]").unwrap();
        assert_eq!(a21.expression, "a[4,3] a[2,1]");
    }

    #[test]
    fn n3() {
        let r = halfturn_fixed_check(3).unwrap();
        assert!(r.pass, "{r:#?}");
        assert!(halfturn_fixed_check(4).is_err());
    }
}
