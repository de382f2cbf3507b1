//! Exact arithmetic in the cyclotomic field ℚ(ζ₈).
//!
//! An element is stored in the power basis `c0 + c1·ζ + c2·ζ² + c3·ζ³`
//! reduced modulo the minimal polynomial `ζ⁴ + 1`. Coefficients are
//! [`BigRational`](num::BigRational) values, which are always kept in lowest
//! terms, so structural equality is field equality.
//!
//! `i = ζ²` and `-1 = ζ⁴`; every root of unity in the field is a power of ζ.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::Field;
use crate::rational::{self, ParseRationalError, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclotomicError {
    #[error("division by zero in Q(zeta8)")]
    DivisionByZero,
    #[error("expected 4 coefficients, got {0}")]
    WrongArity(usize),
    #[error(transparent)]
    Parse(#[from] ParseRationalError),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Zeta8 {
    c: [Q; 4],
}

impl Zeta8 {
    pub fn new(c0: Q, c1: Q, c2: Q, c3: Q) -> Self {
        Zeta8 { c: [c0, c1, c2, c3] }
    }

    pub fn from_rational(q: Q) -> Self {
        Zeta8::new(q, Q::zero(), Q::zero(), Q::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Zeta8::from_rational(rational::int(n))
    }

    /// The generator ζ = e^{2πi/8}.
    pub fn zeta() -> Self {
        Zeta8::zeta_pow(1)
    }

    /// i = ζ².
    pub fn i() -> Self {
        Zeta8::zeta_pow(2)
    }

    /// ζᵏ for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut c: [Q; 4] = Default::default();
        if k < 4 {
            c[k] = Q::one();
        } else {
            c[k - 4] = -Q::one();
        }
        Zeta8 { c }
    }

    pub fn coeffs(&self) -> &[Q; 4] {
        &self.c
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<Q> {
        self.is_rational().then(|| self.c[0].clone())
    }

    /// The Galois automorphism ζ ↦ ζᵏ, `k` odd.
    pub fn galois(&self, k: i64) -> Self {
        assert!(k.rem_euclid(2) == 1, "galois exponent must be odd");
        let mut out = Zeta8::zero();
        for (j, cj) in self.c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            let image = Zeta8::zeta_pow(j as i64 * k).scale(cj);
            out = out + image;
        }
        out
    }

    /// Complex conjugation, ζ ↦ ζ⁷.
    pub fn conj(&self) -> Self {
        self.galois(7)
    }

    /// Field norm down to ℚ.
    pub fn norm(&self) -> Q {
        let n = self.clone() * self.galois(3) * self.galois(5) * self.galois(7);
        debug_assert!(n.is_rational());
        n.c[0].clone()
    }

    pub fn scale(&self, q: &Q) -> Self {
        Zeta8 {
            c: [&self.c[0] * q, &self.c[1] * q, &self.c[2] * q, &self.c[3] * q],
        }
    }

    /// Multiplicative inverse via the norm: a⁻¹ = σ₃(a)σ₅(a)σ₇(a) / N(a).
    pub fn inv(&self) -> Result<Self, CyclotomicError> {
        if self.is_zero() {
            return Err(CyclotomicError::DivisionByZero);
        }
        let cofactor = self.galois(3) * self.galois(5) * self.galois(7);
        let n = (self.clone() * cofactor.clone()).c[0].clone();
        Ok(cofactor.scale(&n.recip()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, CyclotomicError> {
        Ok(self.clone() * other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Zeta8::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    /// Least n in 1..=8 with aⁿ = 1. Roots of unity in ℚ(ζ₈) all have order
    /// dividing 8, so `None` means `a` is not a root of unity.
    pub fn unit_order(&self) -> Option<u32> {
        let one = Zeta8::one();
        let mut acc = self.clone();
        for n in 1..=8u32 {
            if acc == one {
                return Some(n);
            }
            acc = acc * self.clone();
        }
        None
    }

    /// The exponent k in 0..8 with a = ζᵏ, if `a` is a root of unity.
    pub fn root_exponent(&self) -> Option<u32> {
        let nonzero: Vec<usize> = (0..4).filter(|&j| !self.c[j].is_zero()).collect();
        if nonzero.len() != 1 {
            return None;
        }
        let j = nonzero[0];
        let c = &self.c[j];
        if c.is_one() {
            Some(j as u32)
        } else if (-c).is_one() {
            Some(j as u32 + 4)
        } else {
            None
        }
    }

    pub fn to_strings(&self) -> [String; 4] {
        [
            rational::format(&self.c[0]),
            rational::format(&self.c[1]),
            rational::format(&self.c[2]),
            rational::format(&self.c[3]),
        ]
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<Self, CyclotomicError> {
        if items.len() != 4 {
            return Err(CyclotomicError::WrongArity(items.len()));
        }
        let mut c: [Q; 4] = Default::default();
        for (slot, s) in c.iter_mut().zip(items) {
            *slot = rational::parse(s.as_ref())?;
        }
        Ok(Zeta8 { c })
    }
}

impl Default for Zeta8 {
    fn default() -> Self {
        Zeta8::zero()
    }
}

impl Zero for Zeta8 {
    fn zero() -> Self {
        Zeta8 { c: Default::default() }
    }

    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl One for Zeta8 {
    fn one() -> Self {
        Zeta8::from_rational(Q::one())
    }
}

impl Add for Zeta8 {
    type Output = Zeta8;

    fn add(self, rhs: Zeta8) -> Zeta8 {
        let [a0, a1, a2, a3] = self.c;
        let [b0, b1, b2, b3] = rhs.c;
        Zeta8 {
            c: [a0 + b0, a1 + b1, a2 + b2, a3 + b3],
        }
    }
}

impl Sub for Zeta8 {
    type Output = Zeta8;

    fn sub(self, rhs: Zeta8) -> Zeta8 {
        self + (-rhs)
    }
}

impl Neg for Zeta8 {
    type Output = Zeta8;

    fn neg(self) -> Zeta8 {
        let [a0, a1, a2, a3] = self.c;
        Zeta8 {
            c: [-a0, -a1, -a2, -a3],
        }
    }
}

impl Mul for Zeta8 {
    type Output = Zeta8;

    fn mul(self, rhs: Zeta8) -> Zeta8 {
        let mut c: [Q; 4] = Default::default();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a * b;
                // ζ⁴ = -1
                if i + j < 4 {
                    c[i + j] += prod;
                } else {
                    c[i + j - 4] -= prod;
                }
            }
        }
        Zeta8 { c }
    }
}

impl Field for Zeta8 {
    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }

    fn from_integer(n: i64) -> Self {
        Zeta8::from_int(n)
    }
}

impl From<Q> for Zeta8 {
    fn from(q: Q) -> Self {
        Zeta8::from_rational(q)
    }
}

impl fmt::Debug for Zeta8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Zeta8({})", self)
    }
}

impl fmt::Display for Zeta8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 8] = ["1", "ζ8", "i", "ζ8^3", "-1", "ζ8^5", "-i", "ζ8^7"];
        if let Some(k) = self.root_exponent() {
            return f.write_str(NAMES[k as usize]);
        }
        if self.is_zero() {
            return f.write_str("0");
        }
        const BASIS: [&str; 4] = ["", "ζ8", "ζ8^2", "ζ8^3"];
        let mut first = true;
        for (j, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = rational::format(&c.abs());
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (j, mag.as_str()) {
                (0, m) => f.write_str(m)?,
                (_, "1") => f.write_str(BASIS[j])?,
                (_, m) => write!(f, "{m}*{}", BASIS[j])?,
            }
        }
        Ok(())
    }
}
