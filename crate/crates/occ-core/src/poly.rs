//! Multivariate polynomials with exact coefficients.
//!
//! A [`Polynomial`] is a sorted term list over a shared [`Ring`]. Terms are
//! kept in descending grevlex order, which makes the canonical form unique
//! per (ring, value): equality is structural equality. Other term orders
//! are handled by the Groebner engine, which re-sorts working copies.
//!
//! The text grammar accepted by [`parse_polynomial`]: variables match
//! `[A-Za-z]+_[0-9]+`, coefficients are integers or `a/b` fractions, the
//! operators are `+ - * ^` with parentheses, and whitespace is ignored.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::monomial::{Monomial, MonomialOrder};
use crate::scalar::{FieldSpec, Scalar};

/// Ordered list of distinct variable names. The order is fixed at ring
/// creation and drives every monomial comparison.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VariableSet {
    names: Vec<String>,
}

impl VariableSet {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> VariableSet {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for i in 0..names.len() {
            for j in 0..i {
                assert!(names[i] != names[j], "duplicate variable {}", names[i]);
            }
        }
        VariableSet { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Indexed family like `x_1..x_4`.
    pub fn indexed(prefix: &str, count: usize) -> VariableSet {
        VariableSet::new((1..=count).map(|i| alloc::format!("{}_{}", prefix, i)))
    }
}

/// A polynomial ring: a coefficient field plus an ordered variable set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ring {
    pub field: FieldSpec,
    pub vars: VariableSet,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new(field: FieldSpec, vars: VariableSet) -> RingRef {
        Arc::new(Ring { field, vars })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }
}

pub fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Exact multivariate polynomial in canonical form: no zero coefficients,
/// terms strictly descending in grevlex.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, Scalar)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &RingRef, c: Scalar) -> Polynomial {
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((Monomial::one(ring.nvars()), c));
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn one(ring: &RingRef) -> Polynomial {
        let c = ring.field.one();
        Polynomial::constant(ring, c)
    }

    pub fn from_i64(ring: &RingRef, n: i64) -> Polynomial {
        let c = ring.field.from_i64(n);
        Polynomial::constant(ring, c)
    }

    pub fn var(ring: &RingRef, index: usize) -> Polynomial {
        assert!(index < ring.nvars());
        Polynomial {
            ring: ring.clone(),
            terms: alloc::vec![(
                Monomial::var(index, ring.nvars()),
                ring.field.one()
            )],
        }
    }

    /// Normalizing constructor: merges duplicate monomials and sorts.
    pub fn from_terms(ring: &RingRef, mut terms: Vec<(Monomial, Scalar)>) -> Polynomial {
        let ord = MonomialOrder::Grevlex;
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = ring.field.add(&last.1, &c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            same_ring(&self.ring, &other.ring),
            "polynomials from different rings"
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let field = &self.ring.field;
        let ord = MonomialOrder::Grevlex;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match ord.cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&self.terms[i].1, &other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let field = &self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = &self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), field.mul(tc, c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        // accumulate into a sorted merge; fine at the scale of this crate
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &small.terms {
            acc = acc.add(&large.mul_term(m, c));
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Leading term under an arbitrary order (linear scan; the canonical
    /// storage order is grevlex).
    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        match ord {
            MonomialOrder::Grevlex => self.terms.first().map(|(m, c)| (m, c)),
            _ => self
                .terms
                .iter()
                .max_by(|a, b| ord.cmp(&a.0, &b.0))
                .map(|(m, c)| (m, c)),
        }
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let field = &self.ring.field;
        let n = self.ring.nvars();
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut exps: Vec<u32> = (0..n).map(|i| m.exp(i)).collect();
            exps[var] -= 1;
            let coeff = field.mul(c, &field.from_i64(e as i64));
            if !coeff.is_zero() {
                terms.push((Monomial::from_exps(&exps), coeff));
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Evaluate at a point of the coefficient field.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.ring.nvars());
        let field = &self.ring.field;
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..self.ring.nvars() {
                for _ in 0..m.exp(i) {
                    t = field.mul(&t, &point[i]);
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// Substitute each variable by a polynomial in `target`; the ring
    /// homomorphism underlying [`crate::groebner::RingMap`].
    pub fn substitute(&self, images: &[Polynomial], target: &RingRef) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        assert_eq!(self.ring.field, target.field, "field mismatch in substitution");
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for i in 0..self.ring.nvars() {
                let e = m.exp(i);
                if e > 0 {
                    t = t.mul(&images[i].pow(e));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Divide by the leading coefficient under `ord`.
    pub fn make_monic(&self, ord: &MonomialOrder) -> Polynomial {
        match self.leading_term(ord) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.ring.field.inv(c).expect("leading coefficient is a unit");
                self.scale(&inv)
            }
        }
    }

    /// Over the rationals: clear denominators and divide by the integer
    /// content, making the grevlex-leading coefficient positive. Identity
    /// over prime fields. Keeps coefficient growth in check during
    /// reductions.
    pub fn primitive_part(&self) -> Polynomial {
        if self.ring.field != FieldSpec::Rationals || self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            if let Scalar::Rat(r) = c {
                den_lcm = den_lcm.lcm(r.denom());
            }
        }
        let mut num_gcd = BigInt::zero();
        let scaled: Vec<BigInt> = self
            .terms
            .iter()
            .map(|(_, c)| match c {
                Scalar::Rat(r) => r.numer() * (&den_lcm / r.denom()),
                _ => unreachable!(),
            })
            .collect();
        for v in &scaled {
            num_gcd = num_gcd.gcd(v);
        }
        if num_gcd.is_zero() {
            num_gcd = BigInt::one();
        }
        if scaled[0].is_negative() {
            num_gcd = -num_gcd;
        }
        let terms = self
            .terms
            .iter()
            .zip(scaled)
            .map(|((m, _), v)| (m.clone(), Scalar::Rat(BigRational::from_integer(v / &num_gcd))))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

fn format_monomial(ring: &Ring, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for i in 0..ring.nvars() {
        match m.exp(i) {
            0 => {}
            1 => parts.push(String::from(ring.vars.name(i))),
            e => parts.push(alloc::format!("{}^{}", ring.vars.name(i), e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let field = &self.ring.field;
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = field.is_display_negative(c);
            let abs = if neg { field.neg(c) } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = format_monomial(&self.ring, m);
            if mono.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", abs, mono)?;
            }
        }
        Ok(())
    }
}

/// Parse failure with a byte offset into the input.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: {}", self.position, self.message)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    ring: &'a RingRef,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: String::from(message),
        })
    }

    fn parse_uint(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an integer");
        }
        let s = core::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse::<BigInt>().unwrap())
    }

    fn parse_atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.parse_expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.parse_uint()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den_pos = self.pos;
                    let den = self.parse_uint()?;
                    let c = self.ring.field.from_ratio(&num, &den).map_err(|e| ParseError {
                        position: den_pos,
                        message: alloc::format!("{}", e),
                    })?;
                    Ok(Polynomial::constant(self.ring, c))
                } else {
                    Ok(Polynomial::constant(
                        self.ring,
                        self.ring.field.from_bigint(&num),
                    ))
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphabetic() {
                    self.pos += 1;
                }
                if self.bytes.get(self.pos) != Some(&b'_') {
                    return self.err("variable names match [A-Za-z]+_[0-9]+");
                }
                self.pos += 1;
                if !self
                    .bytes
                    .get(self.pos)
                    .map_or(false, |b| b.is_ascii_digit())
                {
                    return self.err("variable names match [A-Za-z]+_[0-9]+");
                }
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                match self.ring.vars.index_of(name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(ParseError {
                        position: start,
                        message: alloc::format!("unknown variable {}", name),
                    }),
                }
            }
            _ => self.err("expected a variable, number, or parenthesized expression"),
        }
    }

    fn parse_factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.parse_atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.parse_uint()?;
            let e: u32 = match e.try_into() {
                Ok(v) => v,
                Err(_) => return self.err("exponent too large"),
            };
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn parse_term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.parse_factor()?);
        }
        Ok(acc)
    }

    fn parse_expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                negate = true;
            }
            Some(b'+') => {
                self.pos += 1;
            }
            _ => {}
        }
        let mut acc = self.parse_term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.parse_term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.parse_term()?);
                }
                _ => return Ok(acc),
            }
        }
    }
}

/// Parse a polynomial in the crate's text grammar.
pub fn parse_polynomial(text: &str, ring: &RingRef) -> Result<Polynomial, ParseError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        ring,
    };
    let e = p.parse_expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return p.err("trailing input");
    }
    Ok(e)
}
