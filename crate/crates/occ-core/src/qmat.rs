//! Exact linear algebra over the rationals.
//!
//! Gaussian elimination with exact fractions backs every rank, kernel,
//! and subspace computation (orbit dimensions, slice bases, Jordan
//! chains). Matrices here are at most a few hundred rows, so clarity
//! beats cleverness.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Dense matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMat {
    rows: usize,
    cols: usize,
    a: Vec<BigRational>,
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> QMat {
        QMat {
            rows,
            cols,
            a: alloc::vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> QMat {
        let mut m = QMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> BigRational>(
        rows: usize,
        cols: usize,
        mut f: F,
    ) -> QMat {
        let mut m = QMat::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> QMat {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        QMat::from_fn(r, c, |i, j| q(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.a[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.a[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, other: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        QMat::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + other.get(r, c))
    }

    pub fn scale(&self, s: &BigRational) -> QMat {
        QMat::from_fn(self.rows, self.cols, |r, c| self.get(r, c) * s)
    }

    pub fn neg(&self) -> QMat {
        QMat::from_fn(self.rows, self.cols, |r, c| -self.get(r, c))
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows);
        QMat::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = BigRational::zero();
            for k in 0..self.cols {
                if !self.get(r, k).is_zero() && !other.get(k, c).is_zero() {
                    acc += self.get(r, k) * other.get(k, c);
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = BigRational::zero();
                for k in 0..self.cols {
                    if !self.get(r, k).is_zero() && !v[k].is_zero() {
                        acc += self.get(r, k) * &v[k];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> QMat {
        QMat::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.a[r * self.cols..(r + 1) * self.cols]
    }

    /// Flatten row-major into a vector (used to treat matrices as vectors
    /// of a matrix space).
    pub fn vectorize(&self) -> Vec<BigRational> {
        self.a.clone()
    }

    pub fn from_vec(rows: usize, cols: usize, a: Vec<BigRational>) -> QMat {
        assert_eq!(a.len(), rows * cols);
        QMat { rows, cols, a }
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self) -> (QMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let mut piv = None;
            for i in r..m.rows {
                if !m.get(i, c).is_zero() {
                    piv = Some(i);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            if piv != r {
                for j in 0..m.cols {
                    let a = m.get(piv, j).clone();
                    let b = m.get(r, j).clone();
                    m.set(piv, j, b);
                    m.set(r, j, a);
                }
            }
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in c..m.cols {
                        let v = m.get(i, j) - &f * m.get(r, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one vector per free column, in RREF
    /// convention (free variable set to 1).
    pub fn kernel(&self) -> Vec<Vec<BigRational>> {
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        let mut pivot_of_col = alloc::vec![usize::MAX; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = i;
        }
        for c in 0..self.cols {
            if pivot_of_col[c] != usize::MAX {
                continue;
            }
            let mut v = alloc::vec![BigRational::zero(); self.cols];
            v[c] = BigRational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(i, c).clone();
            }
            out.push(v);
        }
        out
    }

    pub fn inverse(&self) -> Option<QMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = QMat::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        });
        let (rr, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        aug = rr;
        Some(QMat::from_fn(n, n, |r, c| aug.get(r, c + n).clone()))
    }

    pub fn det(&self) -> BigRational {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let n = m.rows;
        let mut det = BigRational::one();
        for c in 0..n {
            let mut piv = None;
            for i in c..n {
                if !m.get(i, c).is_zero() {
                    piv = Some(i);
                    break;
                }
            }
            let Some(piv) = piv else {
                return BigRational::zero();
            };
            if piv != c {
                det = -det;
                for j in 0..n {
                    let a = m.get(piv, j).clone();
                    let b = m.get(c, j).clone();
                    m.set(piv, j, b);
                    m.set(c, j, a);
                }
            }
            det *= m.get(c, c);
            let inv = m.get(c, c).recip();
            for i in c + 1..n {
                if !m.get(i, c).is_zero() {
                    let f = m.get(i, c) * &inv;
                    for j in c..n {
                        let v = m.get(i, j) - &f * m.get(c, j);
                        m.set(i, j, v);
                    }
                }
            }
        }
        det
    }

    /// Matrix whose rows are a canonical (RREF) basis of the row space.
    pub fn row_space_basis(&self) -> QMat {
        let (r, pivots) = self.rref();
        QMat::from_fn(pivots.len(), self.cols, |i, j| r.get(i, j).clone())
    }
}

/// Canonical basis of the intersection of two row spaces.
pub fn intersect_row_spaces(a: &QMat, b: &QMat) -> QMat {
    assert_eq!(a.cols(), b.cols());
    let n = a.cols();
    // columns: coefficients on rows of a, then rows of b; solve x*a = y*b
    let sys = QMat::from_fn(n, a.rows() + b.rows(), |r, c| {
        if c < a.rows() {
            a.get(c, r).clone()
        } else {
            -b.get(c - a.rows(), r).clone()
        }
    });
    let ker = sys.kernel();
    let mut rows = QMat::zero(ker.len(), n);
    for (i, v) in ker.iter().enumerate() {
        for j in 0..n {
            let mut acc = BigRational::zero();
            for k in 0..a.rows() {
                if !v[k].is_zero() {
                    acc += &v[k] * a.get(k, j);
                }
            }
            rows.set(i, j, acc);
        }
    }
    rows.row_space_basis()
}

impl fmt::Display for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
