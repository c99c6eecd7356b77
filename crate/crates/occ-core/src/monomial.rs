//! Monomials as dense exponent vectors, and the monomial orders used by
//! the Groebner engine.
//!
//! Rings in this crate are small (at most a few dozen variables), so
//! exponents are stored densely. The cached total degree makes grevlex
//! comparisons cheap, which is where the basis computation spends its time.


use core::cmp::Ordering;

use smallvec::SmallVec;

/// Exponent vector of fixed length equal to the ring's variable count.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial {
    exps: SmallVec<[u8; 24]>,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: smallvec::smallvec![0; nvars],
            deg: 0,
        }
    }

    pub fn var(index: usize, nvars: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[index] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exps(exps: &[u32]) -> Monomial {
        let mut deg = 0u32;
        let mut v: SmallVec<[u8; 24]> = SmallVec::with_capacity(exps.len());
        for &e in exps {
            assert!(e <= u8::MAX as u32, "exponent overflow");
            deg += e;
            v.push(e as u8);
        }
        Monomial { exps: v, deg }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let mut exps = self.exps.clone();
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut exps = self.exps.clone();
        for a in exps.iter_mut() {
            let v = (*a as u32).checked_mul(k).expect("exponent overflow");
            assert!(v <= u8::MAX as u32, "exponent overflow");
            *a = v as u8;
        }
        Monomial {
            exps,
            deg: self.deg * k,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn divide_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut exps = other.exps.clone();
        for (a, b) in exps.iter_mut().zip(self.exps.iter()) {
            *a -= b;
        }
        Monomial {
            exps,
            deg: other.deg - self.deg,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        let mut deg = 0u32;
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).max(*b);
            deg += *a as u32;
        }
        Monomial { exps, deg }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of the variables appearing in this monomial, as a bit mask.
    pub fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m |= 1 << i;
            }
        }
        m
    }

    /// Drop the variable at `index`, shrinking the vector by one. Only
    /// valid when that exponent is zero (used after elimination).
    pub fn project_out(&self, index: usize) -> Monomial {
        debug_assert_eq!(self.exps[index], 0);
        let mut exps = SmallVec::with_capacity(self.exps.len() - 1);
        for (i, &e) in self.exps.iter().enumerate() {
            if i != index {
                exps.push(e);
            }
        }
        Monomial {
            exps,
            deg: self.deg,
        }
    }

    /// Insert a zero exponent at `index` (embedding into a larger ring).
    pub fn insert_var(&self, index: usize) -> Monomial {
        let mut exps = SmallVec::with_capacity(self.exps.len() + 1);
        for (i, &e) in self.exps.iter().enumerate() {
            if i == index {
                exps.push(0);
            }
            exps.push(e);
        }
        if index == self.exps.len() {
            exps.push(0);
        }
        Monomial {
            exps,
            deg: self.deg,
        }
    }
}

/// A term order. `Block { split }` is the elimination order that
/// compares the first `split` variables grevlex-first, so a Groebner
/// basis under it intersects cleanly with the subring on the remaining
/// variables.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    Block { split: usize },
}

fn grevlex_cmp_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let (mut da, mut db) = (0u32, 0u32);
    for i in lo..hi {
        da += a.exp(i);
        db += b.exp(i);
    }
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (lo..hi).rev() {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => {}
            // smaller exponent in the last differing slot wins
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        let n = a.nvars();
        match self {
            MonomialOrder::Grevlex => match a.degree().cmp(&b.degree()) {
                Ordering::Equal => grevlex_cmp_range(a, b, 0, n),
                o => o,
            },
            MonomialOrder::Lex => {
                for i in 0..n {
                    match a.exp(i).cmp(&b.exp(i)) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block { split } => {
                match grevlex_cmp_range(a, b, 0, *split) {
                    Ordering::Equal => grevlex_cmp_range(a, b, *split, n),
                    o => o,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn grevlex_standard_examples() {
        let ord = MonomialOrder::Grevlex;
        // x^2 > x*y > y^2 in two variables
        assert_eq!(ord.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        // degree dominates
        assert_eq!(ord.cmp(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
        // x*z < y^2 under grevlex (classic grlex/grevlex separator)
        assert_eq!(
            ord.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn block_order_eliminates_front() {
        let ord = MonomialOrder::Block { split: 1 };
        // any monomial containing the first variable beats any that does not
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 2]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn lcm_and_division() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 3, 0]);
        assert_eq!(a.lcm(&b), m(&[2, 3, 0]));
        assert!(a.divides(&a.lcm(&b)));
        assert_eq!(a.divide_into(&a.lcm(&b)), m(&[0, 2, 0]));
        assert!(!a.coprime(&b));
        assert!(m(&[1, 0, 0]).coprime(&m(&[0, 0, 2])));
    }
}
