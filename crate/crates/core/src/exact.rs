//! Exact scalar arithmetic: complex numbers with arbitrary-precision
//! rational parts, and values carrying a symbolic power of pi.
//!
//! Integrals over S^3 and the unit ball of monomials are exact rational
//! multiples of pi^2, so every identity check in the sphere algebra can
//! be decided without floating point. The pi power is carried as a
//! grading; sums of mixed grade are a logic error and panic.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact rational equal to the given finite f64 (every finite f64 is dyadic).
pub fn rat_from_f64(x: f64) -> Rat {
    Rat::from_float(x).expect("finite float")
}

pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n as u64 {
        acc *= k;
    }
    acc
}

/// Complex number with exact rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq)]
pub struct Qc {
    pub re: Rat,
    pub im: Rat,
}

impl Qc {
    pub fn new(re: Rat, im: Rat) -> Self {
        Qc { re, im }
    }

    pub fn zero() -> Self {
        Qc::new(Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        Qc::new(Rat::one(), Rat::zero())
    }

    pub fn i() -> Self {
        Qc::new(Rat::zero(), Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        Qc::new(rat_int(n), Rat::zero())
    }

    pub fn from_rat(r: Rat) -> Self {
        Qc::new(r, Rat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Qc::new(self.re.clone(), -self.im.clone())
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Qc::new(&self.re * r, &self.im * r)
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl Add for &Qc {
    type Output = Qc;
    fn add(self, rhs: &Qc) -> Qc {
        Qc::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Qc {
    type Output = Qc;
    fn sub(self, rhs: &Qc) -> Qc {
        Qc::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Qc {
    type Output = Qc;
    fn mul(self, rhs: &Qc) -> Qc {
        Qc::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &Qc {
    type Output = Qc;
    fn neg(self) -> Qc {
        Qc::new(-self.re.clone(), -self.im.clone())
    }
}

impl fmt::Debug for Qc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}

impl fmt::Display for Qc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}*i", self.im)
        } else if self.im.is_positive() {
            write!(f, "{}+{}*i", self.re, self.im)
        } else {
            write!(f, "{}{}*i", self.re, self.im)
        }
    }
}

/// Exact value of the form `coeff * pi^pi_pow`.
#[derive(Clone, PartialEq, Eq)]
pub struct PiValue {
    pub coeff: Qc,
    pub pi_pow: i32,
}

impl PiValue {
    pub fn new(coeff: Qc, pi_pow: i32) -> Self {
        PiValue { coeff, pi_pow }
    }

    pub fn zero(pi_pow: i32) -> Self {
        PiValue::new(Qc::zero(), pi_pow)
    }

    pub fn real(r: Rat, pi_pow: i32) -> Self {
        PiValue::new(Qc::from_rat(r), pi_pow)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.coeff.is_real()
    }

    pub fn conj(&self) -> Self {
        PiValue::new(self.coeff.conj(), self.pi_pow)
    }

    pub fn add(&self, rhs: &PiValue) -> PiValue {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        assert_eq!(self.pi_pow, rhs.pi_pow, "pi grading mismatch in add");
        PiValue::new(&self.coeff + &rhs.coeff, self.pi_pow)
    }

    pub fn sub(&self, rhs: &PiValue) -> PiValue {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> PiValue {
        PiValue::new(-&self.coeff, self.pi_pow)
    }

    pub fn mul(&self, rhs: &PiValue) -> PiValue {
        PiValue::new(&self.coeff * &rhs.coeff, self.pi_pow + rhs.pi_pow)
    }

    pub fn scale(&self, r: &Rat) -> PiValue {
        PiValue::new(self.coeff.scale(r), self.pi_pow)
    }

    /// Divide by pi^k (shifts the grading down).
    pub fn div_pi(&self, k: i32) -> PiValue {
        PiValue::new(self.coeff.clone(), self.pi_pow - k)
    }

    pub fn to_f64(&self) -> f64 {
        let c = self.coeff.to_c64();
        debug_assert!(c.im.abs() <= 1e-12 * (1.0 + c.re.abs()));
        c.re * std::f64::consts::PI.powi(self.pi_pow)
    }

    pub fn to_c64(&self) -> Complex64 {
        self.coeff.to_c64() * std::f64::consts::PI.powi(self.pi_pow)
    }
}

impl fmt::Debug for PiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*pi^{}", self.coeff, self.pi_pow)
    }
}

impl fmt::Display for PiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_pow {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "({})*pi", self.coeff),
            k => write!(f, "({})*pi^{}", self.coeff, k),
        }
    }
}
