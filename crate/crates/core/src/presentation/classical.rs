use super::{Atom, Flavor, Presentation, Relation, Word};
use crate::error::{Error, Result};
use crate::types::CoxeterType;

fn braid(x: Atom, y: Atom, m: usize) -> Result<Relation> {
    let alternating = |first: Atom, second: Atom| {
        Word((0..m).map(|k| if k % 2 == 0 { first } else { second }).collect())
    };
    Relation::new(alternating(x, y), alternating(y, x))
}

/// Classical generators in the order used for simple reflections:
/// `σ_1, ..., σ_n` for A, `τ_1, σ_1, ..., σ_{n-1}` for B and D, `σ_1, σ_2`
/// for I2.
pub(crate) fn classical_generators(ty: CoxeterType) -> Result<Vec<Atom>> {
    ty.validate()?;
    Ok(match ty {
        CoxeterType::A(n) => (1..=n as u16).map(Atom::sigma).collect(),
        CoxeterType::B(n) | CoxeterType::D(n) => std::iter::once(Atom::tau_one())
            .chain((1..n as u16).map(Atom::sigma))
            .collect(),
        CoxeterType::I2(_) => vec![Atom::sigma(1), Atom::sigma(2)],
        other => {
            return Err(Error::Unsupported(format!(
                "{other} has no explicit presentation"
            )))
        }
    })
}

/// The classical Artin presentation of `ty`.
pub fn classical_presentation(ty: CoxeterType) -> Result<Presentation> {
    let atoms = classical_generators(ty)?;
    let s = Atom::sigma;
    let t1 = Atom::tau_one();
    let mut rels = Vec::new();
    let sigma_relations = |top: u16, rels: &mut Vec<Relation>| -> Result<()> {
        for i in 1..top {
            rels.push(braid(s(i), s(i + 1), 3)?);
        }
        for i in 1..=top {
            for j in i + 2..=top {
                rels.push(braid(s(i), s(j), 2)?);
            }
        }
        Ok(())
    };
    match ty {
        CoxeterType::A(n) => sigma_relations(n as u16, &mut rels)?,
        CoxeterType::B(n) => {
            let n = n as u16;
            rels.push(braid(s(1), t1, 4)?);
            sigma_relations(n - 1, &mut rels)?;
            for j in 2..n {
                rels.push(braid(t1, s(j), 2)?);
            }
        }
        CoxeterType::D(n) => {
            let n = n as u16;
            rels.push(braid(s(1), t1, 2)?);
            rels.push(braid(s(2), t1, 3)?);
            sigma_relations(n - 1, &mut rels)?;
            for j in 3..n {
                rels.push(braid(t1, s(j), 2)?);
            }
        }
        CoxeterType::I2(m) => rels.push(braid(s(1), s(2), m as usize)?),
        _ => unreachable!(),
    }
    Ok(Presentation::new(ty, Flavor::Classical, atoms, rels))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_b2() {
        let p = classical_presentation(CoxeterType::B(2)).unwrap();
        assert_eq!(p.atoms().len(), 2);
        assert_eq!(p.relations().len(), 1);
        let r = &p.relations()[0];
        assert_eq!(r.len(), 4);
        let text = r.to_string();
        assert!(text == "s[1] t[1] s[1] t[1] = t[1] s[1] t[1] s[1]"
            || text == "t[1] s[1] t[1] s[1] = s[1] t[1] s[1] t[1]");
    }

    #[test]
    fn classical_d3() {
        let p = classical_presentation(CoxeterType::D(3)).unwrap();
        assert_eq!(p.atoms().len(), 3);
        let texts: Vec<String> = p.relations().iter().map(|r| r.to_string()).collect();
        assert_eq!(texts.len(), 3);
        let has = |a: &str, b: &str| texts.iter().any(|t| t == &format!("{a} = {b}") || t == &format!("{b} = {a}"));
        assert!(has("s[1] t[1]", "t[1] s[1]"));
        assert!(has("s[2] t[1] s[2]", "t[1] s[2] t[1]"));
        assert!(has("s[1] s[2] s[1]", "s[2] s[1] s[2]"));
    }

    #[test]
    fn classical_a1_is_free() {
        let p = classical_presentation(CoxeterType::A(1)).unwrap();
        assert_eq!(p.atoms().len(), 1);
        assert!(p.relations().is_empty());
    }

    #[test]
    fn classical_relation_counts() {
        // A(n): n-1 braid relations, C(n-1, 2) commutations.
        let p = classical_presentation(CoxeterType::A(5)).unwrap();
        assert_eq!(p.relations().len(), 4 + 6);
        let p = classical_presentation(CoxeterType::I2(7)).unwrap();
        assert_eq!(p.relations()[0].len(), 7);
    }
}
