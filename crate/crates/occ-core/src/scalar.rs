//! Exact coefficient arithmetic over the rationals and prime fields.
//!
//! Every computation in this crate is exact. Rational scalars are
//! arbitrary-precision fractions; prime-field scalars are canonical
//! residues in `0..p` for a prime `p < 2^31`. All arithmetic is routed
//! through a [`FieldSpec`] so mixed-field operations are impossible.

use alloc::string::String;
use core::fmt;

use num_bigint::{BigInt, Sign as BigSign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The coefficient field of a polynomial ring: either the rationals
/// (characteristic 0) or a prime field GF(p).
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

/// Errors from field construction and scalar arithmetic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FieldError {
    NotPrime(u32),
    TooLarge(u32),
    DivisionByZero,
    /// A rational literal whose denominator vanishes in GF(p).
    BadDenominator(String),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{} is not prime", p),
            FieldError::TooLarge(p) => write!(f, "characteristic {} exceeds 2^31", p),
            FieldError::DivisionByZero => write!(f, "division by zero"),
            FieldError::BadDenominator(s) => write!(f, "denominator {} is zero in this field", s),
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    let n = n as u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// GF(p) for a prime `p < 2^31`.
    pub fn prime(p: u32) -> Result<FieldSpec, FieldError> {
        if p >= 1 << 31 {
            return Err(FieldError::TooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// From a characteristic: 0 means the rationals.
    pub fn from_characteristic(c: u32) -> Result<FieldSpec, FieldError> {
        if c == 0 {
            Ok(FieldSpec::Rationals)
        } else {
            FieldSpec::prime(c)
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::Prime(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::Prime(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let p = *p as i64;
                Scalar::Fp(n.rem_euclid(p) as u32)
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(p) => {
                let p_big = BigInt::from(*p);
                let mut r = n % &p_big;
                if r.sign() == BigSign::Minus {
                    r += &p_big;
                }
                let digits = r.to_u32_digits();
                Scalar::Fp(if digits.1.is_empty() { 0 } else { digits.1[0] })
            }
        }
    }

    /// Reduce an exact rational into the field.
    pub fn from_rational(&self, r: &BigRational) -> Result<Scalar, FieldError> {
        self.from_ratio(r.numer(), r.denom())
    }

    /// Reduce the fraction `num/den` into the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rat(BigRational::new(num.clone(), den.clone()))),
            FieldSpec::Prime(_) => {
                let d = self.from_bigint(den);
                if d.is_zero() {
                    return Err(FieldError::BadDenominator(alloc::format!("{}", den)));
                }
                Ok(self.mul(&self.from_bigint(num), &self.inv(&d)?))
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (FieldSpec::Prime(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar, FieldError> {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => {
                if x.is_zero() {
                    Err(FieldError::DivisionByZero)
                } else {
                    Ok(Scalar::Rat(x.recip()))
                }
            }
            (FieldSpec::Prime(p), Scalar::Fp(x)) => {
                if *x == 0 {
                    return Err(FieldError::DivisionByZero);
                }
                // extended Euclid on (x, p)
                let (mut r0, mut r1) = (*x as i64, *p as i64);
                let (mut s0, mut s1) = (1i64, 0i64);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                debug_assert_eq!(r0, 1);
                Ok(Scalar::Fp(s0.rem_euclid(*p as i64) as u32))
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// True when the scalar prints without a leading minus sign.
    pub fn is_display_negative(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(x) => x.is_negative(),
            Scalar::Fp(_) => false,
        }
    }
}

/// A field element. `Fp` residues are canonical representatives `0..p`;
/// the modulus lives in the owning ring's [`FieldSpec`].
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp(u32),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(x) => x.is_zero(),
            Scalar::Fp(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(x) => x.is_one(),
            Scalar::Fp(x) => *x == 1,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(x) => {
                if x.is_integer() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Fp(x) => write!(f, "{}", x),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = FieldSpec::prime(101).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a, Scalar::Fp(100));
        let b = f.inv(&f.from_i64(2)).unwrap();
        assert_eq!(f.mul(&b, &f.from_i64(2)), f.one());
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert_eq!(FieldSpec::prime(100), Err(FieldError::NotPrime(100)));
        assert!(FieldSpec::prime(2147483647).is_ok()); // 2^31 - 1 is prime
        assert!(FieldSpec::prime(1 << 31).is_err());
    }

    #[test]
    fn rational_ratio_normalizes() {
        let f = FieldSpec::Rationals;
        let s = f.from_ratio(&BigInt::from(2), &BigInt::from(4)).unwrap();
        match s {
            Scalar::Rat(r) => {
                assert_eq!(r.numer(), &BigInt::from(1));
                assert_eq!(r.denom(), &BigInt::from(2));
            }
            _ => panic!(),
        }
    }

    #[test]
    fn ratio_mod_p_uses_inverse() {
        let f = FieldSpec::prime(101).unwrap();
        let s = f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(f.mul(&s, &Scalar::Fp(2)), f.one());
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(101)).is_err());
    }
}
