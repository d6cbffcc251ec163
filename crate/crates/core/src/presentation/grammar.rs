//! Text syntax for words.
//!
//! ```text
//! word  := token { SP token }
//! token := fam "[" int { "," int } "]" [ "^-1" ]
//! fam   := "a" | "b" | "t" | "s"
//! ```
//!
//! The `^-1` suffix is only accepted by [`parse_signed_word`]. The family a
//! letter denotes depends on the presentation: `a` is a band generator in
//! type A and `α` in types B and D, `t` is `τ_t` in the dual B presentation
//! and the classical `τ_1` elsewhere, `s` is a classical `σ_i` or a dual
//! `I2` generator.

use super::{Atom, Family, Presentation, SignedWord, Word};
use crate::error::{Error, Result};

struct Token {
    position: usize,
    letter: char,
    indices: Vec<u32>,
    inverse: bool,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut tokens = Vec::new();
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let number = |pos: &mut usize| -> Result<u32> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if start == *pos {
            return Err(syntax(start, "expected an integer"));
        }
        text[start..*pos]
            .parse()
            .map_err(|_| syntax(start, "integer out of range"))
    };
    loop {
        skip_ws(&mut pos);
        if pos >= bytes.len() {
            break;
        }
        let start = pos;
        let letter = bytes[pos] as char;
        if !matches!(letter, 'a' | 'b' | 't' | 's') {
            return Err(syntax(pos, format!("unexpected `{letter}`, expected a, b, t or s")));
        }
        pos += 1;
        if bytes.get(pos) != Some(&b'[') {
            return Err(syntax(pos, "expected `[`"));
        }
        pos += 1;
        let mut indices = vec![number(&mut pos)?];
        while bytes.get(pos) == Some(&b',') {
            pos += 1;
            indices.push(number(&mut pos)?);
        }
        if bytes.get(pos) != Some(&b']') {
            return Err(syntax(pos, "expected `]` or `,`"));
        }
        pos += 1;
        let inverse = text[pos..].starts_with("^-1");
        if inverse {
            pos += 3;
        }
        if pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            return Err(syntax(pos, "expected whitespace between tokens"));
        }
        tokens.push(Token {
            position: start,
            letter,
            indices,
            inverse,
        });
    }
    Ok(tokens)
}

fn resolve(token: &Token, presentation: &Presentation) -> Result<Atom> {
    let family = match token.letter {
        'a' if presentation.has_family(Family::A) => Family::A,
        'a' => Family::Alpha,
        'b' => Family::Beta,
        't' if presentation.has_family(Family::Tau) => Family::Tau,
        't' => Family::TauOne,
        's' if presentation.has_family(Family::DihedralSigma) => Family::DihedralSigma,
        _ => Family::Sigma,
    };
    let index_error = |message: String| Error::Index {
        position: token.position,
        message,
    };
    let narrow = |x: u32| u16::try_from(x).map_err(|_| index_error(format!("index {x} is too large")));
    let atom = match (family.is_pair_indexed(), token.indices.as_slice()) {
        (true, &[i, j]) => {
            if i <= j || j < 1 {
                return Err(index_error(format!(
                    "{}[{i},{j}] requires first index > second index >= 1",
                    token.letter
                )));
            }
            Atom {
                family,
                i: narrow(i)?,
                j: Some(narrow(j)?),
            }
        }
        (false, &[i]) => {
            if i < 1 {
                return Err(index_error(format!("{}[{i}] requires index >= 1", token.letter)));
            }
            Atom {
                family,
                i: narrow(i)?,
                j: None,
            }
        }
        (pair, got) => {
            return Err(index_error(format!(
                "`{}` takes {} index(es), got {}",
                token.letter,
                if pair { 2 } else { 1 },
                got.len()
            )))
        }
    };
    if !presentation.contains_atom(&atom) {
        let in_family = presentation.atoms().iter().any(|a| a.family == atom.family);
        return Err(if in_family {
            index_error(format!(
                "{atom} is out of range for the {} presentation of {}",
                presentation.flavor(),
                presentation.coxeter_type()
            ))
        } else {
            Error::UnknownAtom {
                atom: atom.to_string(),
                position: token.position,
            }
        });
    }
    Ok(atom)
}

/// Parses a positive word over the atoms of `presentation`.
pub fn parse_word(text: &str, presentation: &Presentation) -> Result<Word> {
    let tokens = tokenize(text)?;
    let mut letters = Vec::with_capacity(tokens.len());
    for t in &tokens {
        if t.inverse {
            return Err(syntax(t.position, "inverses are not allowed in a positive word"));
        }
        letters.push(resolve(t, presentation)?);
    }
    Ok(Word(letters))
}

/// Parses a group word; tokens may carry a `^-1` suffix.
pub fn parse_signed_word(text: &str, presentation: &Presentation) -> Result<SignedWord> {
    let tokens = tokenize(text)?;
    tokens
        .iter()
        .map(|t| Ok((resolve(t, presentation)?, if t.inverse { -1 } else { 1 })))
        .collect::<Result<Vec<_>>>()
        .map(SignedWord)
}

/// Whitespace-normalized form of a word text: tokens separated by one space.
pub fn normalize_word_text(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{classical_presentation, dual_presentation};
    use crate::types::CoxeterType;
    use proptest::prelude::*;

    #[test]
    fn parses_dual_b_tokens() {
        let p = dual_presentation(CoxeterType::B(3)).unwrap();
        let w = parse_word("a[3,1] t[2]", &p).unwrap();
        assert_eq!(w, Word(vec![Atom::alpha(3, 1), Atom::tau(2)]));
    }

    #[test]
    fn parses_dual_d_tokens() {
        let p = dual_presentation(CoxeterType::D(3)).unwrap();
        let w = parse_word("b[2,1] b[2,1]", &p).unwrap();
        assert_eq!(w, Word(vec![Atom::beta(2, 1), Atom::beta(2, 1)]));
    }

    #[test]
    fn rejects_increasing_pair() {
        let p = dual_presentation(CoxeterType::B(3)).unwrap();
        match parse_word("t[1] a[1,3]", &p) {
            Err(Error::Index { position, .. }) => assert_eq!(position, 5),
            other => panic!("expected index error, got {other:?}"),
        }
    }

    #[test]
    fn reports_positions() {
        let p = dual_presentation(CoxeterType::B(2)).unwrap();
        assert!(matches!(parse_word("a[3,1]", &p), Err(Error::Index { position: 0, .. })));
        assert!(matches!(parse_word("x[1]", &p), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(parse_word("t[1", &p), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(parse_word("s[1]", &p), Err(Error::UnknownAtom { position: 0, .. })));
        assert!(matches!(parse_word("t[1]^-1", &p), Err(Error::Syntax { .. })));
    }

    #[test]
    fn context_dependent_letters() {
        let classical = classical_presentation(CoxeterType::B(3)).unwrap();
        let w = parse_word("t[1] s[2]", &classical).unwrap();
        assert_eq!(w, Word(vec![Atom::tau_one(), Atom::sigma(2)]));
        let i5 = dual_presentation(CoxeterType::I2(5)).unwrap();
        assert_eq!(parse_word("s[5]", &i5).unwrap(), Word(vec![Atom::dihedral(5)]));
        let a3 = dual_presentation(CoxeterType::A(3)).unwrap();
        assert_eq!(parse_word("a[4,1]", &a3).unwrap(), Word(vec![Atom::band(4, 1)]));
    }

    #[test]
    fn signed_words() {
        let p = dual_presentation(CoxeterType::B(2)).unwrap();
        let w = parse_signed_word("a[2,1] t[1] a[2,1]^-1", &p).unwrap();
        assert_eq!(w.0[2], (Atom::alpha(2, 1), -1));
        assert_eq!(w.to_string(), "a[2,1] t[1] a[2,1]^-1");
        assert!(parse_word("", &p).unwrap().is_empty());
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(picks in proptest::collection::vec(0usize..16, 0..12), pad in 1usize..4) {
            let p = dual_presentation(CoxeterType::B(4)).unwrap();
            let atoms = p.atoms();
            let tokens: Vec<String> = picks.iter().map(|&k| atoms[k % atoms.len()].to_string()).collect();
            let text = tokens.join(&" ".repeat(pad));
            let parsed = parse_word(&text, &p).unwrap();
            prop_assert_eq!(parsed.to_string(), normalize_word_text(&text));
        }
    }
}
