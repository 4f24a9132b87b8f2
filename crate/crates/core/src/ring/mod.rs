//! Exact scalars: rationals, prime-field residues and sparse polynomials over
//! the rationals, behind one element type.

mod monomial;
mod parse;
mod poly;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
pub use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub use monomial::Monomial;
pub use parse::parse_scalar;
pub use poly::Polynomial;

use crate::error::{Error, Result};

/// Which commutative ring a scalar lives in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Ring {
    Rationals,
    PrimeField(u64),
    /// Polynomials with rational coefficients in the listed variables,
    /// declaration order = variable order for grevlex.
    Polynomial(Arc<[String]>),
}

impl Ring {
    pub fn prime_field(p: u64) -> Result<Ring> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Ring::PrimeField(p))
    }

    pub fn polynomial<S: AsRef<str>>(vars: &[S]) -> Result<Ring> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("polynomial ring needs at least one variable".into()));
        }
        let mut names: Vec<String> = Vec::with_capacity(vars.len());
        for v in vars {
            let v = v.as_ref();
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("`{v}` is not a valid variable name")));
            }
            if names.iter().any(|n| n == v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
            names.push(v.to_string());
        }
        Ok(Ring::Polynomial(names.into()))
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Ring::Polynomial(_))
    }

    pub fn zero(&self) -> RingElem {
        match self {
            Ring::Rationals => RingElem::Rational(BigRational::zero()),
            Ring::PrimeField(p) => RingElem::Residue { value: 0, p: *p },
            Ring::Polynomial(v) => RingElem::Poly(Polynomial::zero(v.clone())),
        }
    }

    pub fn one(&self) -> RingElem {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> RingElem {
        match self {
            Ring::Rationals => RingElem::Rational(BigRational::from_integer(n.into())),
            Ring::PrimeField(p) => RingElem::Residue { value: n.rem_euclid(*p as i64) as u64, p: *p },
            Ring::Polynomial(v) => RingElem::Poly(Polynomial::constant(
                v.clone(),
                BigRational::from_integer(n.into()),
            )),
        }
    }

    /// Maps a rational into this ring; fails in GF(p) when p divides the denominator.
    pub fn from_rational(&self, q: &BigRational) -> Result<RingElem> {
        match self {
            Ring::Rationals => Ok(RingElem::Rational(q.clone())),
            Ring::PrimeField(p) => rational_mod_p(q, *p).map(|value| RingElem::Residue { value, p: *p }),
            Ring::Polynomial(v) => Ok(RingElem::Poly(Polynomial::constant(v.clone(), q.clone()))),
        }
    }

    pub fn var(&self, name: &str) -> Result<RingElem> {
        match self {
            Ring::Polynomial(v) => {
                let i = v
                    .iter()
                    .position(|x| x == name)
                    .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                Ok(RingElem::Poly(Polynomial::variable(v.clone(), i)))
            }
            _ => Err(Error::UnknownVariable(name.to_string())),
        }
    }

    pub fn parse(&self, text: &str) -> Result<RingElem> {
        parse_scalar(text, self)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Rationals => f.write_str("Q"),
            Ring::PrimeField(p) => write!(f, "GF({p})"),
            Ring::Polynomial(v) => write!(f, "Q[{}]", v.join(",")),
        }
    }
}

/// An exact scalar together with (an encoding of) its ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingElem {
    Rational(BigRational),
    Residue { value: u64, p: u64 },
    Poly(Polynomial),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
    Inv,
}

/// Checked arithmetic entry point. `b` is ignored by the unary ops.
pub fn ring_arith(a: &RingElem, b: &RingElem, op: ArithOp) -> Result<RingElem> {
    match op {
        ArithOp::Neg => Ok(-a),
        ArithOp::Inv => a.inv(),
        _ => {
            a.check_same_ring(b)?;
            Ok(match op {
                ArithOp::Add => a + b,
                ArithOp::Sub => a - b,
                ArithOp::Mul => a * b,
                _ => unreachable!(),
            })
        }
    }
}

impl RingElem {
    pub fn ring(&self) -> Ring {
        match self {
            RingElem::Rational(_) => Ring::Rationals,
            RingElem::Residue { p, .. } => Ring::PrimeField(*p),
            RingElem::Poly(x) => Ring::Polynomial(x.vars().clone()),
        }
    }

    pub fn same_ring(&self, other: &RingElem) -> bool {
        match (self, other) {
            (RingElem::Rational(_), RingElem::Rational(_)) => true,
            (RingElem::Residue { p, .. }, RingElem::Residue { p: q, .. }) => p == q,
            (RingElem::Poly(a), RingElem::Poly(b)) => {
                Arc::ptr_eq(a.vars(), b.vars()) || a.vars() == b.vars()
            }
            _ => false,
        }
    }

    pub fn check_same_ring(&self, other: &RingElem) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: self.ring().to_string(), right: other.ring().to_string() })
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElem::Rational(q) => q.is_zero(),
            RingElem::Residue { value, .. } => *value == 0,
            RingElem::Poly(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            RingElem::Rational(q) => q.is_one(),
            RingElem::Residue { value, .. } => *value == 1,
            RingElem::Poly(x) => x.as_constant().is_some_and(|c| c.is_one()),
        }
    }

    pub fn inv(&self) -> Result<RingElem> {
        match self {
            RingElem::Rational(q) => {
                if q.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(RingElem::Rational(q.recip()))
                }
            }
            RingElem::Residue { value, p } => {
                if *value == 0 {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(RingElem::Residue { value: inv_mod(*value, *p), p: *p })
                }
            }
            RingElem::Poly(_) => Err(Error::NotAField(self.ring().to_string())),
        }
    }

    pub fn pow(&self, k: u32) -> RingElem {
        match self {
            RingElem::Rational(q) => RingElem::Rational(num_traits::pow(q.clone(), k as usize)),
            RingElem::Residue { value, p } => RingElem::Residue { value: pow_mod(*value, k as u64, *p), p: *p },
            RingElem::Poly(x) => RingElem::Poly(x.pow(k)),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            RingElem::Rational(q) => Some(q),
            _ => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match self {
            RingElem::Residue { value, .. } => Some(*value),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<&Polynomial> {
        match self {
            RingElem::Poly(x) => Some(x),
            _ => None,
        }
    }

    /// Evaluates a polynomial at a rational point. Rationals pass through.
    pub fn substitute(&self, assignment: &HashMap<String, BigRational>) -> Result<RingElem> {
        match self {
            RingElem::Poly(x) => x.substitute(assignment).map(RingElem::Rational),
            RingElem::Rational(_) => Ok(self.clone()),
            RingElem::Residue { .. } => Err(Error::RingMismatch {
                left: self.ring().to_string(),
                right: "Q[...]".into(),
            }),
        }
    }

    /// Re-encodes this element in `target`: rationals map into any ring,
    /// polynomials can be re-embedded in a larger variable list, and equal
    /// rings are the identity.
    pub fn coerce(&self, target: &Ring) -> Result<RingElem> {
        match (self, target) {
            (RingElem::Rational(q), _) => target.from_rational(q),
            (RingElem::Residue { p, .. }, Ring::PrimeField(t)) if p == t => Ok(self.clone()),
            (RingElem::Poly(x), Ring::Polynomial(v)) => x.rename_into(v.clone()).map(RingElem::Poly),
            (RingElem::Poly(x), _) => match x.as_constant() {
                Some(c) => target.from_rational(&c),
                None => Err(Error::RingMismatch { left: self.ring().to_string(), right: target.to_string() }),
            },
            _ => Err(Error::RingMismatch { left: self.ring().to_string(), right: target.to_string() }),
        }
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElem::Rational(q) => f.write_str(&rational_to_string(q)),
            RingElem::Residue { value, .. } => write!(f, "{value}"),
            RingElem::Poly(x) => write!(f, "{x}"),
        }
    }
}

fn mismatch(a: &RingElem, b: &RingElem) -> ! {
    panic!("ring mismatch: {} vs {}", a.ring(), b.ring())
}

impl Add for &RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        match (self, rhs) {
            (RingElem::Rational(a), RingElem::Rational(b)) => RingElem::Rational(a + b),
            (RingElem::Residue { value: a, p }, RingElem::Residue { value: b, p: q }) if p == q => {
                RingElem::Residue { value: (a + b) % p, p: *p }
            }
            (RingElem::Poly(a), RingElem::Poly(b)) if self.same_ring(rhs) => RingElem::Poly(a.add(b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        match (self, rhs) {
            (RingElem::Rational(a), RingElem::Rational(b)) => RingElem::Rational(a - b),
            (RingElem::Residue { value: a, p }, RingElem::Residue { value: b, p: q }) if p == q => {
                RingElem::Residue { value: (a + p - b) % p, p: *p }
            }
            (RingElem::Poly(a), RingElem::Poly(b)) if self.same_ring(rhs) => RingElem::Poly(a.sub(b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        match (self, rhs) {
            (RingElem::Rational(a), RingElem::Rational(b)) => RingElem::Rational(a * b),
            (RingElem::Residue { value: a, p }, RingElem::Residue { value: b, p: q }) if p == q => {
                RingElem::Residue { value: mul_mod(*a, *b, *p), p: *p }
            }
            (RingElem::Poly(a), RingElem::Poly(b)) if self.same_ring(rhs) => RingElem::Poly(a.mul(b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        match self {
            RingElem::Rational(a) => RingElem::Rational(-a),
            RingElem::Residue { value, p } => RingElem::Residue { value: (p - value) % p, p: *p },
            RingElem::Poly(a) => RingElem::Poly(a.neg()),
        }
    }
}

pub fn rational_to_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Residue of `q` modulo `p`, or an error if `p` divides the denominator.
pub fn rational_mod_p(q: &BigRational, p: u64) -> Result<u64> {
    let pb = BigInt::from(p);
    let num = q.numer().mod_floor(&pb).to_u64().unwrap();
    let den = q.denom().mod_floor(&pb).to_u64().unwrap();
    if den == 0 {
        return Err(Error::PrimeDividesDenominator { p, value: rational_to_string(q) });
    }
    Ok(mul_mod(num, inv_mod(den, p), p))
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "{a} is not invertible mod {p}");
    t0.rem_euclid(p as i128) as u64
}

/// Deterministic Miller–Rabin for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Convenience for tests and data tables: `q(1, 3)` is 1/3.
pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
