//! Exact scalars for the matrix models.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

/// Commutative ring operations needed by [`Matrix`](super::Matrix).
/// `div_exact` is only called when the quotient is known to lie in the
/// ring (fraction-free elimination), or in a field.
pub trait Ring:
    Copy
    + Eq
    + std::hash::Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    const ZERO: Self;
    const ONE: Self;
    fn div_exact(self, other: Self) -> Self;
    fn is_zero(self) -> bool {
        self == Self::ZERO
    }
}

impl Ring for i64 {
    const ZERO: Self = 0;
    const ONE: Self = 1;
    fn div_exact(self, other: Self) -> Self {
        debug_assert_eq!(self % other, 0, "inexact integer division");
        self / other
    }
}

/// An element `(a + b √5) / d` of `Q(√5)`, kept in lowest terms with
/// `d > 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Q5 {
    a: i64,
    b: i64,
    d: i64,
}

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("Q(sqrt 5) coefficient overflow")
}

impl Q5 {
    pub const fn integer(a: i64) -> Self {
        Q5 { a, b: 0, d: 1 }
    }

    /// `(a + b √5) / d`.
    pub fn new(a: i64, b: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::reduce(a as i128, b as i128, d as i128)
    }

    fn reduce(a: i128, b: i128, d: i128) -> Self {
        let mut g = a.gcd(&b).gcd(&d);
        if d < 0 {
            g = -g;
        }
        Q5 {
            a: narrow(a / g),
            b: narrow(b / g),
            d: narrow(d / g),
        }
    }

    /// The golden ratio `(1 + √5) / 2 = 2 cos(π/5)`.
    pub fn golden() -> Self {
        Q5::new(1, 1, 2)
    }

    pub fn parts(self) -> (i64, i64, i64) {
        (self.a, self.b, self.d)
    }

    pub fn is_rational(self) -> bool {
        self.b == 0
    }

    pub fn conjugate(self) -> Self {
        Q5 { b: -self.b, ..self }
    }

    pub fn recip(self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        // 1 / ((a + b√5)/d) = d (a - b√5) / (a² - 5b²)
        let (a, b, d) = (self.a as i128, self.b as i128, self.d as i128);
        let norm = a * a - 5 * b * b;
        Self::reduce(d * a, -d * b, norm)
    }
}

impl Add for Q5 {
    type Output = Q5;
    fn add(self, o: Q5) -> Q5 {
        if self.d == 1 && o.d == 1 && self.b == 0 && o.b == 0 {
            return Q5::integer(self.a.checked_add(o.a).expect("overflow"));
        }
        let (a1, b1, d1) = (self.a as i128, self.b as i128, self.d as i128);
        let (a2, b2, d2) = (o.a as i128, o.b as i128, o.d as i128);
        Q5::reduce(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2)
    }
}

impl Neg for Q5 {
    type Output = Q5;
    fn neg(self) -> Q5 {
        Q5 {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Sub for Q5 {
    type Output = Q5;
    fn sub(self, o: Q5) -> Q5 {
        self + (-o)
    }
}

impl Mul for Q5 {
    type Output = Q5;
    fn mul(self, o: Q5) -> Q5 {
        if self.d == 1 && o.d == 1 && self.b == 0 && o.b == 0 {
            return Q5::integer(self.a.checked_mul(o.a).expect("overflow"));
        }
        let (a1, b1, d1) = (self.a as i128, self.b as i128, self.d as i128);
        let (a2, b2, d2) = (o.a as i128, o.b as i128, o.d as i128);
        Q5::reduce(a1 * a2 + 5 * b1 * b2, a1 * b2 + a2 * b1, d1 * d2)
    }
}

impl Ring for Q5 {
    const ZERO: Self = Q5::integer(0);
    const ONE: Self = Q5::integer(1);
    fn div_exact(self, other: Self) -> Self {
        self * other.recip()
    }
}

impl From<i64> for Q5 {
    fn from(a: i64) -> Self {
        Q5::integer(a)
    }
}

impl fmt::Display for Q5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.b, self.d) {
            (0, 1) => write!(f, "{}", self.a),
            (0, d) => write!(f, "{}/{d}", self.a),
            (b, 1) => write!(f, "({} + {b}√5)", self.a),
            (b, d) => write!(f, "({} + {b}√5)/{d}", self.a),
        }
    }
}

impl fmt::Debug for Q5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
