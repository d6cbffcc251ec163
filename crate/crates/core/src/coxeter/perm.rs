//! Permutation models for types A, B and D.

use super::matrix::Matrix;

/// A permutation of `{1, ..., n}` stored as 0-based images.
/// Composition is `(p * q)(i) = p(q(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    /// The transposition of the 1-based points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(a - 1, b - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, q: &Perm) -> Perm {
        Perm(q.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.0.len()];
        let mut cycles = 0;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
            }
        }
        cycles
    }

    /// Number of transpositions needed: degree minus number of cycles.
    pub fn reflection_length(&self) -> usize {
        self.0.len() - self.cycle_count()
    }

    /// Coxeter length: the number of inversions.
    pub fn inversions(&self) -> usize {
        let p = &self.0;
        (0..p.len())
            .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
            .sum()
    }

    /// Permutation matrix acting on column vectors: `e_i ↦ e_{p(i)}`.
    pub fn to_matrix(&self) -> Matrix<i64> {
        let n = self.0.len();
        let mut rows = vec![vec![0i64; n]; n];
        for (i, &j) in self.0.iter().enumerate() {
            rows[j as usize][i] = 1;
        }
        Matrix::from_rows(rows)
    }
}

/// A signed permutation of `{±1, ..., ±n}`: entry `i` is `±(j + 1)` when
/// `e_{i+1} ↦ ±e_{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm(pub Vec<i8>);

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm((1..=n as i8).collect())
    }

    fn image(&self, x: i8) -> i8 {
        let y = self.0[(x.unsigned_abs() - 1) as usize];
        if x < 0 {
            -y
        } else {
            y
        }
    }

    /// `e_a ↔ e_b` for 1-based `a`, `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(a - 1, b - 1);
        p
    }

    /// `e_a ↦ -e_b`, `e_b ↦ -e_a`.
    pub fn signed_transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.0[a - 1] = -(b as i8);
        p.0[b - 1] = -(a as i8);
        p
    }

    /// `e_a ↦ -e_a`.
    pub fn flip(n: usize, a: usize) -> Self {
        let mut p = Self::identity(n);
        p.0[a - 1] = -(a as i8);
        p
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, q: &SignedPerm) -> SignedPerm {
        SignedPerm(q.0.iter().map(|&x| self.image(x)).collect())
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut inv = vec![0i8; self.0.len()];
        for (i, &y) in self.0.iter().enumerate() {
            let x = (i + 1) as i8;
            inv[(y.unsigned_abs() - 1) as usize] = if y < 0 { -x } else { x };
        }
        SignedPerm(inv)
    }

    pub fn negative_count(&self) -> usize {
        self.0.iter().filter(|&&y| y < 0).count()
    }

    /// Cycles of the underlying permutation whose sign product is `+1`.
    pub fn positive_cycles(&self) -> usize {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut positive = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut negatives = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                let y = self.0[i];
                if y < 0 {
                    negatives += 1;
                }
                i = (y.unsigned_abs() - 1) as usize;
            }
            if negatives % 2 == 0 {
                positive += 1;
            }
        }
        positive
    }

    /// Codimension of the fixed space: `n` minus the number of positive
    /// cycles (each contributes a fixed line, negative cycles none).
    pub fn reflection_length(&self) -> usize {
        self.0.len() - self.positive_cycles()
    }

    /// Signed permutation matrix: `e_i ↦ ±e_j`.
    pub fn to_matrix(&self) -> Matrix<i64> {
        let n = self.0.len();
        let mut rows = vec![vec![0i64; n]; n];
        for (i, &y) in self.0.iter().enumerate() {
            let j = (y.unsigned_abs() - 1) as usize;
            rows[j][i] = if y < 0 { -1 } else { 1 };
        }
        Matrix::from_rows(rows)
    }
}
