use super::{expand_family, Atom, Flavor, Presentation, Relation, Word};
use crate::error::{Error, Result};
use crate::types::CoxeterType;

fn one(a: Atom) -> Word {
    Word(vec![a])
}

fn family(atoms: &[Atom]) -> Vec<Word> {
    atoms.iter().copied().map(one).collect()
}

/// Decreasing index tuples `t > s > r > ...` of length `k` drawn from `lo..=hi`.
pub(crate) fn decreasing_tuples(k: usize, lo: u16, hi: u16) -> Vec<Vec<u16>> {
    fn go(k: usize, lo: u16, hi: u16, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if k == 0 {
            out.push(prefix.clone());
            return;
        }
        let least = lo + (k as u16 - 1);
        if hi < least {
            return;
        }
        for x in (least..=hi).rev() {
            prefix.push(x);
            go(k - 1, lo, x - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, lo, hi, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn dual_atoms(ty: CoxeterType) -> Result<Vec<Atom>> {
    ty.validate()?;
    let mut atoms = Vec::new();
    match ty {
        CoxeterType::A(n) => {
            let strands = n as u16 + 1;
            for t in 2..=strands {
                for s in 1..t {
                    atoms.push(Atom::band(t, s));
                }
            }
        }
        CoxeterType::B(n) => {
            let n = n as u16;
            for t in 1..=n {
                atoms.push(Atom::tau(t));
                for s in 1..t {
                    atoms.push(Atom::alpha(t, s));
                    atoms.push(Atom::beta(t, s));
                }
            }
        }
        CoxeterType::D(n) => {
            let n = n as u16;
            for t in 2..=n {
                for s in 1..t {
                    atoms.push(Atom::alpha(t, s));
                    atoms.push(Atom::beta(t, s));
                }
            }
        }
        CoxeterType::I2(m) => {
            for i in 1..=m as u16 {
                atoms.push(Atom::dihedral(i));
            }
        }
        other => {
            return Err(Error::Unsupported(format!(
                "{other} has no explicit presentation"
            )))
        }
    }
    Ok(atoms)
}

fn type_a_families(n: u32) -> Vec<Vec<Word>> {
    let strands = n as u16 + 1;
    let a = Atom::band;
    let mut fams = Vec::new();
    for t in decreasing_tuples(3, 1, strands) {
        let (t, s, r) = (t[0], t[1], t[2]);
        fams.push(family(&[a(t, s), a(s, r), a(t, r)]));
    }
    let chords: Vec<(u16, u16)> = (2..=strands)
        .flat_map(|t| (1..t).map(move |s| (t, s)))
        .collect();
    for (k, &(t, s)) in chords.iter().enumerate() {
        for &(r, q) in &chords[k + 1..] {
            let (t, s, r, q) = (t as i32, s as i32, r as i32, q as i32);
            if (t - r) * (t - q) * (s - r) * (s - q) > 0 {
                fams.push(family(&[
                    a(t as u16, s as u16),
                    a(r as u16, q as u16),
                ]));
            }
        }
    }
    fams
}

fn type_b_families(n: u32) -> Vec<Vec<Word>> {
    let n = n as u16;
    let (al, be, ta) = (Atom::alpha, Atom::beta, Atom::tau);
    let mut fams = Vec::new();
    for x in decreasing_tuples(2, 1, n) {
        let (t, s) = (x[0], x[1]);
        fams.push(family(&[al(t, s), ta(s), be(t, s), ta(t)]));
    }
    for x in decreasing_tuples(3, 1, n) {
        let (t, s, r) = (x[0], x[1], x[2]);
        fams.push(family(&[al(t, s), al(s, r), al(t, r)]));
        fams.push(family(&[be(t, s), al(s, r), be(t, r)]));
        fams.push(family(&[al(t, s), be(s, r), be(t, r)]));
        fams.push(family(&[al(t, s), ta(r)]));
        fams.push(family(&[ta(t), al(s, r)]));
        fams.push(family(&[be(t, r), ta(s)]));
    }
    for x in decreasing_tuples(4, 1, n) {
        let (t, s, r, q) = (x[0], x[1], x[2], x[3]);
        fams.push(family(&[al(t, s), al(r, q)]));
        fams.push(family(&[al(t, s), be(r, q)]));
        fams.push(family(&[be(t, s), al(r, q)]));
        fams.push(family(&[al(t, q), al(s, r)]));
        fams.push(family(&[be(t, q), al(s, r)]));
        fams.push(family(&[be(t, q), be(s, r)]));
    }
    fams
}

fn type_d_families(n: u32) -> Vec<Vec<Word>> {
    let n = n as u16;
    let (al, be) = (Atom::alpha, Atom::beta);
    let mut fams = Vec::new();
    for x in decreasing_tuples(3, 1, n) {
        let (t, s, r) = (x[0], x[1], x[2]);
        fams.push(family(&[al(t, s), al(s, r), al(t, r)]));
        fams.push(family(&[al(t, s), be(s, r), be(t, r)]));
    }
    for x in decreasing_tuples(3, 2, n) {
        let (t, s, r) = (x[0], x[1], x[2]);
        fams.push(family(&[be(t, s), al(s, r), be(t, r)]));
        fams.push(family(&[be(t, r), al(s, 1)]));
        fams.push(family(&[be(t, r), be(s, 1)]));
    }
    for x in decreasing_tuples(2, 2, n) {
        let (t, s) = (x[0], x[1]);
        fams.push(family(&[be(t, s), be(t, 1), al(s, 1)]));
        fams.push(family(&[be(t, s), al(t, 1), be(s, 1)]));
    }
    for x in decreasing_tuples(4, 1, n) {
        let (t, s, r, q) = (x[0], x[1], x[2], x[3]);
        fams.push(family(&[al(t, s), al(r, q)]));
        fams.push(family(&[al(t, s), be(r, q)]));
        fams.push(family(&[al(t, q), al(s, r)]));
        fams.push(family(&[be(t, q), al(s, r)]));
    }
    for x in decreasing_tuples(4, 2, n) {
        let (t, s, r, q) = (x[0], x[1], x[2], x[3]);
        fams.push(family(&[be(t, s), al(r, q)]));
        fams.push(family(&[be(t, q), be(s, r)]));
    }
    for t in 2..=n {
        fams.push(family(&[al(t, 1), be(t, 1)]));
    }
    fams
}

fn dihedral_families(m: u32) -> Vec<Vec<Word>> {
    let words = (1..=m as u16).rev().map(|i| one(Atom::dihedral(i))).collect();
    vec![words]
}

/// The dual presentation of `ty`: every bracket family instantiated over all
/// admissible index tuples and expanded with [`expand_family`].
pub fn dual_presentation(ty: CoxeterType) -> Result<Presentation> {
    let atoms = dual_atoms(ty)?;
    let families = match ty {
        CoxeterType::A(n) => type_a_families(n),
        CoxeterType::B(n) => type_b_families(n),
        CoxeterType::D(n) => type_d_families(n),
        CoxeterType::I2(m) => dihedral_families(m),
        _ => unreachable!("dual_atoms rejects types without presentations"),
    };
    let mut relations: Vec<Relation> = Vec::new();
    for f in &families {
        relations.extend(expand_family(f)?);
    }
    Ok(Presentation::new(ty, Flavor::Dual, atoms, relations))
}

/// The word of the Garside element `δ` in the dual generators:
/// `a_{n+1,n} ... a_{2,1}` (A), `α_{n,n-1} ... α_{2,1} τ_1` (B),
/// `α_{n,n-1} ... α_{2,1} β_{2,1}` (D) and `σ_2 σ_1` (I2).
pub fn garside_word(ty: CoxeterType) -> Result<Word> {
    ty.validate()?;
    let descending = |top: u16, f: fn(u16, u16) -> Atom| -> Vec<Atom> {
        (2..=top).rev().map(|t| f(t, t - 1)).collect()
    };
    let letters = match ty {
        CoxeterType::A(n) => descending(n as u16 + 1, Atom::band),
        CoxeterType::B(n) => {
            let mut w = descending(n as u16, Atom::alpha);
            w.push(Atom::tau(1));
            w
        }
        CoxeterType::D(n) => {
            let mut w = descending(n as u16, Atom::alpha);
            w.push(Atom::beta(2, 1));
            w
        }
        CoxeterType::I2(_) => vec![Atom::dihedral(2), Atom::dihedral(1)],
        other => {
            return Err(Error::Unsupported(format!(
                "{other} has no explicit presentation"
            )))
        }
    };
    Ok(Word(letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples() {
        assert_eq!(decreasing_tuples(2, 1, 3), vec![vec![3, 2], vec![3, 1], vec![2, 1]]);
        assert_eq!(decreasing_tuples(3, 2, 4), vec![vec![4, 3, 2]]);
        assert!(decreasing_tuples(4, 1, 3).is_empty());
        assert_eq!(decreasing_tuples(4, 1, 6).len(), 15);
    }

    #[test]
    fn small_presentations() {
        let a2 = dual_presentation(CoxeterType::A(2)).unwrap();
        assert_eq!(a2.atoms().len(), 3);
        assert_eq!(a2.relations().len(), 2);

        let b2 = dual_presentation(CoxeterType::B(2)).unwrap();
        assert_eq!(b2.atoms().len(), 4);
        assert_eq!(b2.relations().len(), 3);

        let i3 = dual_presentation(CoxeterType::I2(3)).unwrap();
        assert_eq!(i3.atoms().len(), 3);
        assert_eq!(i3.relations().len(), 2);
    }

    #[test]
    fn d3_matches_a3_sizes() {
        let d3 = dual_presentation(CoxeterType::D(3)).unwrap();
        let a3 = dual_presentation(CoxeterType::A(3)).unwrap();
        assert_eq!(d3.atoms().len(), a3.atoms().len());
        assert_eq!(d3.relations().len(), a3.relations().len());
        assert_eq!(d3.relations().len(), 10);
    }

    #[test]
    fn exceptional_types_have_no_presentation() {
        assert!(matches!(
            dual_presentation(CoxeterType::H3),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn garside_words() {
        assert_eq!(garside_word(CoxeterType::B(3)).unwrap().to_string(), "a[3,2] a[2,1] t[1]");
        assert_eq!(garside_word(CoxeterType::D(3)).unwrap().to_string(), "a[3,2] a[2,1] b[2,1]");
        assert_eq!(garside_word(CoxeterType::A(2)).unwrap().to_string(), "a[3,2] a[2,1]");
        assert_eq!(garside_word(CoxeterType::I2(5)).unwrap().to_string(), "s[2] s[1]");
    }
}
