use std::fmt;

use super::scalar::Ring;

/// Square matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Ring> Matrix<S> {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![S::ZERO; n * n];
        for i in 0..n {
            data[i * n + i] = S::ONE;
        }
        Matrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut data = vec![S::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.data[k * n + j];
                    if !b.is_zero() {
                        data[i * n + j] = data[i * n + j] + a * b;
                    }
                }
            }
        }
        Matrix { n, data }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(self.data[j * n + i]);
            }
        }
        Matrix { n, data }
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| self.get(i, j) == if i == j { S::ONE } else { S::ZERO })
        })
    }

    /// `self - I`.
    pub fn minus_identity(&self) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            m.data[i * self.n + i] = m.data[i * self.n + i] - S::ONE;
        }
        m
    }

    /// Fraction-free (Bareiss) elimination. Returns the rank and, for a
    /// full-rank matrix, the determinant.
    fn bareiss(&self) -> (usize, S) {
        let n = self.n;
        let mut a = self.data.clone();
        let mut prev = S::ONE;
        let mut rank = 0;
        let mut sign = S::ONE;
        let mut row = 0;
        for col in 0..n {
            let Some(pivot) = (row..n).find(|&r| !a[r * n + col].is_zero()) else {
                continue;
            };
            if pivot != row {
                for j in 0..n {
                    a.swap(pivot * n + j, row * n + j);
                }
                sign = -sign;
            }
            let p = a[row * n + col];
            for r in row + 1..n {
                let f = a[r * n + col];
                for j in col + 1..n {
                    a[r * n + j] = (p * a[r * n + j] - f * a[row * n + j]).div_exact(prev);
                }
                a[r * n + col] = S::ZERO;
            }
            prev = p;
            rank += 1;
            row += 1;
            if row == n {
                break;
            }
        }
        let det = if rank == n { sign * prev } else { S::ZERO };
        (rank, det)
    }

    pub fn rank(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        self.bareiss().0
    }

    pub fn determinant(&self) -> S {
        if self.n == 0 {
            return S::ONE;
        }
        self.bareiss().1
    }
}

impl<S: Ring> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}
