//! Finite Coxeter type labels.

use std::fmt;

use crate::error::{Error, Result};

/// Largest rank accepted for the infinite series. Atom indices are stored in
/// `u16`, and anything past this is far outside what the engines can handle.
pub const MAX_SERIES_RANK: u32 = 64;

/// A finite Coxeter type. `A(n)` is the type with `n` simple reflections
/// (`n + 1` strands), `I2(m)` the dihedral type of order `2m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterType {
    A(u32),
    B(u32),
    D(u32),
    I2(u32),
    H3,
    H4,
    F4,
    E6,
    E7,
    E8,
}

impl CoxeterType {
    /// Parses a type token (`A`, `B`, `D`, `I2:<m>`, `H3`, `H4`, `F4`,
    /// `E6`, `E7`, `E8`) together with an optional rank argument.
    ///
    /// The series `A`, `B`, `D` need a rank. The other types carry their
    /// rank in the token; a rank argument is accepted only if it matches.
    pub fn from_parts(token: &str, rank: Option<u32>) -> Result<Self> {
        let token = token.trim();
        let upper = token.to_ascii_uppercase();
        let need_rank = |family: &'static str| {
            rank.ok_or_else(|| Error::UnknownType(format!("{token} (type {family} needs a rank)")))
        };
        let ty = match upper.as_str() {
            "A" => CoxeterType::A(need_rank("A")?),
            "B" => CoxeterType::B(need_rank("B")?),
            "D" => CoxeterType::D(need_rank("D")?),
            "H3" => CoxeterType::H3,
            "H4" => CoxeterType::H4,
            "F4" => CoxeterType::F4,
            "E6" => CoxeterType::E6,
            "E7" => CoxeterType::E7,
            "E8" => CoxeterType::E8,
            _ => {
                if let Some(m) = upper.strip_prefix("I2:") {
                    let m: u32 = m
                        .parse()
                        .map_err(|_| Error::UnknownType(token.to_string()))?;
                    CoxeterType::I2(m)
                } else if let Some(ty) = Self::parse_compact(&upper) {
                    ty
                } else {
                    return Err(Error::UnknownType(token.to_string()));
                }
            }
        };
        if let (Some(r), false) = (rank, ty.is_series()) {
            if r != ty.rank() && !matches!(ty, CoxeterType::I2(m) if m == r) {
                return Err(Error::UnknownType(format!(
                    "{token} has rank {}, not {r}",
                    ty.rank()
                )));
            }
        }
        ty.validate()?;
        Ok(ty)
    }

    // "B3", "A10", "D4"
    fn parse_compact(upper: &str) -> Option<Self> {
        let (head, tail) = upper.split_at(1);
        let n: u32 = tail.parse().ok()?;
        match head {
            "A" => Some(CoxeterType::A(n)),
            "B" => Some(CoxeterType::B(n)),
            "D" => Some(CoxeterType::D(n)),
            _ => None,
        }
    }

    /// Checks the rank ranges this crate supports.
    pub fn validate(self) -> Result<()> {
        let fail = |family, rank, reason: &str| {
            Err(Error::UnsupportedRank {
                family,
                rank,
                reason: reason.to_string(),
            })
        };
        match self {
            CoxeterType::A(n) if n < 1 => fail("A", n, "rank must be at least 1"),
            CoxeterType::B(n) if n < 2 => fail("B", n, "rank must be at least 2"),
            CoxeterType::D(2) => fail(
                "D",
                2,
                "D(2) is reducible; use A(1) x A(1) instead",
            ),
            CoxeterType::D(n) if n < 3 => fail("D", n, "rank must be at least 3"),
            CoxeterType::I2(m) if m < 3 => fail("I2", m, "m must be at least 3"),
            CoxeterType::I2(m) if m > 1000 => fail("I2", m, "m must be at most 1000"),
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n)
                if n > MAX_SERIES_RANK =>
            {
                fail(self.family(), n, "rank is too large")
            }
            _ => Ok(()),
        }
    }

    pub fn is_series(self) -> bool {
        matches!(self, CoxeterType::A(_) | CoxeterType::B(_) | CoxeterType::D(_))
    }

    /// True for the types that have explicit presentations here.
    pub fn has_presentation(self) -> bool {
        matches!(
            self,
            CoxeterType::A(_) | CoxeterType::B(_) | CoxeterType::D(_) | CoxeterType::I2(_)
        )
    }

    /// Number of simple reflections.
    pub fn rank(self) -> u32 {
        match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => n,
            CoxeterType::I2(_) => 2,
            CoxeterType::H3 => 3,
            CoxeterType::H4 | CoxeterType::F4 => 4,
            CoxeterType::E6 => 6,
            CoxeterType::E7 => 7,
            CoxeterType::E8 => 8,
        }
    }

    pub fn family(self) -> &'static str {
        match self {
            CoxeterType::A(_) => "A",
            CoxeterType::B(_) => "B",
            CoxeterType::D(_) => "D",
            CoxeterType::I2(_) => "I2",
            CoxeterType::H3 => "H3",
            CoxeterType::H4 => "H4",
            CoxeterType::F4 => "F4",
            CoxeterType::E6 => "E6",
            CoxeterType::E7 => "E7",
            CoxeterType::E8 => "E8",
        }
    }

    /// The integer parameter used in reports: the rank, or `m` for `I2(m)`.
    pub fn parameter(self) -> u32 {
        match self {
            CoxeterType::I2(m) => m,
            other => other.rank(),
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A({n})"),
            CoxeterType::B(n) => write!(f, "B({n})"),
            CoxeterType::D(n) => write!(f, "D({n})"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
            other => f.write_str(other.family()),
        }
    }
}
