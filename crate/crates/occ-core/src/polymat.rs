//! Matrices over a polynomial ring: determinants and minors.
//!
//! Determinants use Laplace expansion with memoization on column
//! subsets, so no division ever happens; everything stays in the ring.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::poly::{same_ring, Polynomial, RingRef};

/// Rectangular matrix with entries in one polynomial ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    ring: RingRef,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

/// Determinant of a non-square matrix was requested.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NonSquareError {
    pub rows: usize,
    pub cols: usize,
}

impl PolyMatrix {
    pub fn new(ring: &RingRef, rows: usize, cols: usize, entries: Vec<Polynomial>) -> PolyMatrix {
        assert_eq!(entries.len(), rows * cols);
        for e in &entries {
            assert!(same_ring(e.ring(), ring), "entry from a different ring");
        }
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Polynomial>(
        ring: &RingRef,
        rows: usize,
        cols: usize,
        mut f: F,
    ) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        PolyMatrix::new(ring, rows, cols, entries)
    }

    pub fn identity(ring: &RingRef, n: usize) -> PolyMatrix {
        PolyMatrix::from_fn(ring, n, n, |r, c| {
            if r == c {
                Polynomial::one(ring)
            } else {
                Polynomial::zero(ring)
            }
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Polynomial) {
        assert!(same_ring(v.ring(), &self.ring));
        self.entries[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows);
        PolyMatrix::from_fn(&self.ring, self.rows, other.cols, |r, c| {
            let mut acc = Polynomial::zero(&self.ring);
            for k in 0..self.cols {
                acc = acc.add(&self.get(r, k).mul(other.get(k, c)));
            }
            acc
        })
    }

    pub fn submatrix(&self, row_set: &[usize], col_set: &[usize]) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, row_set.len(), col_set.len(), |r, c| {
            self.get(row_set[r], col_set[c]).clone()
        })
    }

    /// Exact determinant by fraction-free cofactor expansion. Subsets of
    /// columns are memoized, so the cost is O(n * 2^n) ring operations.
    pub fn determinant(&self) -> Result<Polynomial, NonSquareError> {
        if self.rows != self.cols {
            return Err(NonSquareError {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        assert!(n <= 16, "determinant size out of range");
        // memo[mask] = det of rows 0..popcount(mask) against column set mask
        let mut memo: BTreeMap<u16, Polynomial> = BTreeMap::new();
        memo.insert(0, Polynomial::one(&self.ring));
        let full: u16 = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
        Ok(self.det_rec(full, &mut memo))
    }

    fn det_rec(&self, mask: u16, memo: &mut BTreeMap<u16, Polynomial>) -> Polynomial {
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let row = mask.count_ones() as usize - 1;
        let mut acc = Polynomial::zero(&self.ring);
        // expanding along `row`: the cofactor at column position p has sign (-1)^(row+p)
        let mut sign_negative = row % 2 == 1;
        for c in 0..self.cols {
            if mask & (1 << c) == 0 {
                continue;
            }
            let e = self.get(row, c);
            if !e.is_zero() {
                let sub = self.det_rec(mask & !(1 << c), memo);
                let term = e.mul(&sub);
                acc = if sign_negative {
                    acc.sub(&term)
                } else {
                    acc.add(&term)
                };
            }
            sign_negative = !sign_negative;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// All k-by-k minors, in lexicographic order of (row set, column set).
    /// `k = 0` yields the single polynomial 1; oversized `k` yields none.
    pub fn minors(&self, k: usize) -> Vec<Polynomial> {
        if k == 0 {
            return alloc::vec![Polynomial::one(&self.ring)];
        }
        if k > self.rows || k > self.cols {
            return Vec::new();
        }
        let row_sets = subsets(self.rows, k);
        let col_sets = subsets(self.cols, k);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            for cs in &col_sets {
                out.push(self.submatrix(rs, cs).determinant().unwrap());
            }
        }
        out
    }
}

/// k-subsets of 0..n in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}
