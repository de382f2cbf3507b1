//! Dense univariate polynomials over an exact field, and places of ℙ¹.
//!
//! Polynomials are used for the Weierstrass coefficients A(t), B(t) and the
//! discriminant. Nothing here factors over ℚ: a finite [`Place`] is a monic
//! square-free *cluster* standing for the Galois orbit of its roots, and the
//! clusters produced by [`coprime_refinement`] are fine enough that every
//! root of a cluster shares one vanishing-order vector.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::{self, ParseRationalError, Q};

/// The operations an exact coefficient field must supply.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn inverse(&self) -> Option<Self>;
    fn from_integer(n: i64) -> Self;
}

impl Field for Q {
    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn from_integer(n: i64) -> Self {
        rational::int(n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("square-free decomposition of the zero polynomial")]
    DecomposeZero,
    #[error("declared total degree {total} is below the polynomial degree {degree}")]
    DegreeExceedsTotal { total: usize, degree: usize },
    #[error("a place cluster must be monic, square-free and non-constant")]
    InvalidCluster,
    #[error(transparent)]
    Parse(#[from] ParseRationalError),
}

/// Coefficients in ascending degree, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

pub type QPoly = Poly<Q>;

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial c·tⁿ.
    pub fn monomial(c: F, n: usize) -> Self {
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = c;
        Poly::new(coeffs)
    }

    /// The polynomial t.
    pub fn t() -> Self {
        Poly::monomial(F::one(), 1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial (degree −∞).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Divides by the leading coefficient. The zero polynomial is returned
    /// unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = lc.inverse().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * F::from_integer(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// p(λ·t).
    pub fn scale_variable(&self, lambda: &F) -> Self {
        let mut power = F::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.clone() * power.clone());
            power = power * lambda.clone();
        }
        Poly::new(out)
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let lead = divisor.leading().ok_or(PolyError::DivisionByZero)?;
        let lead_inv = lead.inverse().expect("nonzero leading coefficient");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact quotient when `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.div_rem(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self, PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::GcdOfZeros);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Yun's square-free decomposition `p = c·∏ fᵢ^{mᵢ}`.
    ///
    /// The factors are monic, square-free, pairwise coprime and listed by
    /// increasing multiplicity.
    pub fn squarefree_decompose(&self) -> Result<SquarefreeDecomposition<F>, PolyError> {
        let content = self.leading().cloned().ok_or(PolyError::DecomposeZero)?;
        let f = self.monic();
        let mut factors = Vec::new();
        if f.is_constant() {
            return Ok(SquarefreeDecomposition { content, factors });
        }
        let df = f.derivative();
        let a0 = f.gcd(&df)?;
        let mut b = f.div_exact(&a0).expect("gcd divides f");
        let c = df.div_exact(&a0).expect("gcd divides f'");
        let mut d = &c - &b.derivative();
        let mut multiplicity = 1u32;
        while !b.is_constant() {
            let a = b.gcd(&d)?;
            b = b.div_exact(&a).expect("gcd divides b");
            let c = d.div_exact(&a).expect("gcd divides d");
            d = &c - &b.derivative();
            if !a.is_constant() {
                factors.push((a, multiplicity));
            }
            multiplicity += 1;
        }
        Ok(SquarefreeDecomposition { content, factors })
    }

    /// Product of the distinct monic square-free factors.
    pub fn squarefree_part(&self) -> Result<Self, PolyError> {
        let dec = self.squarefree_decompose()?;
        Ok(dec.factors.iter().fold(Poly::one(), |acc, (f, _)| &acc * f))
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).map(|g| g.is_constant()).unwrap_or(false)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SquarefreeDecomposition<F> {
    pub content: F,
    pub factors: Vec<(Poly<F>, u32)>,
}

impl<F: Field> SquarefreeDecomposition<F> {
    pub fn reconstruct(&self) -> Poly<F> {
        self.factors
            .iter()
            .fold(Poly::constant(self.content.clone()), |acc, (f, m)| &acc * &f.pow(*m))
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;

    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;

    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;

    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;

    fn neg(self) -> Poly<F> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for Poly<F> {
            type Output = Poly<F>;

            fn $m(self, rhs: Poly<F>) -> Poly<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl QPoly {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<Self, PolyError> {
        let coeffs = items
            .iter()
            .map(|s| rational::parse(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }

    pub fn to_strings(&self) -> Vec<String> {
        rational::format_all(&self.coeffs)
    }

    /// Canonical order on clusters: by degree, then coefficients from the
    /// constant term upward.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl<F: fmt::Debug> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let mag = c.abs();
            let mag_str = rational::format(&mag);
            match i {
                0 => f.write_str(&mag_str)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag_str}*")?;
                    }
                    if i == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Order of vanishing; the zero polynomial vanishes to infinite order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(n) => Some(n),
            Valuation::Infinite => None,
        }
    }

    pub fn at_least(self, n: u32) -> bool {
        self >= Valuation::Finite(n)
    }

    pub fn is(self, n: u32) -> bool {
        self == Valuation::Finite(n)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(n) => write!(f, "{n}"),
            Valuation::Infinite => f.write_str("∞"),
        }
    }
}

/// A point of the base ℙ¹, or a Galois orbit of finite points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Place {
    /// The roots of a monic square-free non-constant polynomial.
    Finite(QPoly),
    Infinity,
}

impl Place {
    pub fn finite(cluster: QPoly) -> Result<Self, PolyError> {
        let valid = !cluster.is_constant() && cluster.leading().is_some_and(One::is_one) && cluster.is_squarefree();
        if valid {
            Ok(Place::Finite(cluster))
        } else {
            Err(PolyError::InvalidCluster)
        }
    }

    /// Number of geometric points the place stands for.
    pub fn orbit_size(&self) -> usize {
        match self {
            Place::Finite(c) => c.degree().unwrap_or(0),
            Place::Infinity => 1,
        }
    }

    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Finite(a), Place::Finite(b)) => a.canonical_cmp(b),
            (Place::Finite(_), Place::Infinity) => Ordering::Less,
            (Place::Infinity, Place::Finite(_)) => Ordering::Greater,
            (Place::Infinity, Place::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(c) => write!(f, "{c}"),
            Place::Infinity => f.write_str("∞"),
        }
    }
}

/// Order of vanishing of `p` at `place`.
///
/// At infinity the polynomial is read as a form of degree `total_degree`, so
/// the order is `total_degree − deg p`. At a finite cluster the order is the
/// largest m with clusterᵐ | p.
pub fn vanishing_order(p: &QPoly, place: &Place, total_degree: usize) -> Result<Valuation, PolyError> {
    let Some(deg) = p.degree() else {
        return Ok(Valuation::Infinite);
    };
    match place {
        Place::Infinity => {
            if total_degree < deg {
                Err(PolyError::DegreeExceedsTotal {
                    total: total_degree,
                    degree: deg,
                })
            } else {
                Ok(Valuation::Finite((total_degree - deg) as u32))
            }
        }
        Place::Finite(cluster) => {
            let mut rest = p.clone();
            let mut m = 0;
            while let Some(q) = rest.div_exact(cluster) {
                rest = q;
                m += 1;
            }
            Ok(Valuation::Finite(m))
        }
    }
}

/// A gcd-free basis of the inputs: pairwise coprime monic square-free
/// polynomials such that every input is a product of a subset of them.
///
/// Inputs are expected square-free; constants are ignored. The output is in
/// canonical order.
pub fn coprime_refinement(parts: &[QPoly]) -> Vec<QPoly> {
    let mut basis: Vec<QPoly> = Vec::new();
    let mut pending: Vec<QPoly> = parts.iter().filter(|p| !p.is_constant()).map(QPoly::monic).collect();
    // Each split removes deg(g) from the total degree of basis ∪ pending.
    while let Some(p) = pending.pop() {
        let shared = basis.iter().enumerate().find_map(|(i, b)| {
            let g = p.gcd(b).expect("nonzero");
            (!g.is_constant()).then_some((i, g))
        });
        match shared {
            None => basis.push(p),
            Some((i, g)) => {
                let b = basis.swap_remove(i);
                let p_rest = p.div_exact(&g).expect("gcd divides");
                let b_rest = b.div_exact(&g).expect("gcd divides");
                pending.extend([g, p_rest, b_rest].into_iter().filter(|x| !x.is_constant()));
            }
        }
    }
    basis.sort_by(|a, b| a.canonical_cmp(b));
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    /// t^9 (t^2 - 1)^6 scaled by 4.
    fn example_discriminant() -> QPoly {
        let t9 = QPoly::t().pow(9);
        let q = p(&[-1, 0, 1]).pow(6);
        (&t9 * &q).scale(&int(4))
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[0, -1, 0, 1]).gcd(&p(&[-1, 0, 1])).unwrap(), p(&[-1, 0, 1]));
        assert_eq!(p(&[0, 0, 1]).gcd(&p(&[1, 1])).unwrap(), QPoly::one());
        let d = example_discriminant();
        let expected = &QPoly::t().pow(8) * &p(&[-1, 0, 1]).pow(5);
        assert_eq!(d.gcd(&d.derivative()).unwrap(), expected);
        assert_eq!(QPoly::zero().gcd(&QPoly::zero()), Err(PolyError::GcdOfZeros));
        assert_eq!(QPoly::zero().gcd(&p(&[2, 4])).unwrap(), p(&[1, 2]).monic());
    }

    #[test]
    fn squarefree_examples() {
        let dec = example_discriminant().squarefree_decompose().unwrap();
        assert_eq!(dec.content, int(4));
        assert_eq!(dec.factors, vec![(p(&[-1, 0, 1]), 6), (QPoly::t(), 9)]);

        let dec = p(&[1, 0, 1]).squarefree_decompose().unwrap();
        assert_eq!(dec.content, int(1));
        assert_eq!(dec.factors, vec![(p(&[1, 0, 1]), 1)]);

        let f = &p(&[-2, 1]).pow(2) * &p(&[3, 1]).pow(2);
        let dec = f.squarefree_decompose().unwrap();
        assert_eq!(dec.factors, vec![(p(&[-6, 1, 1]), 2)]);
        assert_eq!(dec.reconstruct(), f);

        assert_eq!(QPoly::zero().squarefree_decompose(), Err(PolyError::DecomposeZero));
        let c = p(&[5]).squarefree_decompose().unwrap();
        assert!(c.factors.is_empty());
    }

    #[test]
    fn vanishing_orders() {
        let a = &QPoly::t().pow(3) * &p(&[-1, 0, 1]).pow(2);
        let t = Place::finite(QPoly::t()).unwrap();
        assert_eq!(vanishing_order(&a, &t, 8).unwrap(), Valuation::Finite(3));
        assert_eq!(vanishing_order(&a, &Place::Infinity, 8).unwrap(), Valuation::Finite(1));
        let pm = Place::finite(p(&[-1, 0, 1])).unwrap();
        assert_eq!(vanishing_order(&a, &pm, 8).unwrap(), Valuation::Finite(2));
        assert_eq!(vanishing_order(&QPoly::zero(), &t, 8).unwrap(), Valuation::Infinite);
        assert_eq!(
            vanishing_order(&QPoly::zero(), &Place::Infinity, 0).unwrap(),
            Valuation::Infinite
        );
        assert_eq!(
            vanishing_order(&a, &Place::Infinity, 6),
            Err(PolyError::DegreeExceedsTotal { total: 6, degree: 7 })
        );
    }

    #[test]
    fn place_validation() {
        assert!(Place::finite(p(&[-1, 0, 1])).is_ok());
        assert_eq!(Place::finite(p(&[0, 0, 1])), Err(PolyError::InvalidCluster));
        assert_eq!(Place::finite(p(&[-2, 0, 2])), Err(PolyError::InvalidCluster));
        assert_eq!(Place::finite(p(&[3])), Err(PolyError::InvalidCluster));
    }

    #[test]
    fn refinement_examples() {
        let r = coprime_refinement(&[p(&[0, -1, 0, 1]), p(&[-1, 0, 1])]);
        assert_eq!(r, vec![QPoly::t(), p(&[-1, 0, 1])]);
        let r = coprime_refinement(&[p(&[-1, 1]), p(&[1, 1])]);
        assert_eq!(r, vec![p(&[-1, 1]), p(&[1, 1])]);
        let mut r = coprime_refinement(&[p(&[-1, 0, 1]), p(&[2, -3, 1])]);
        r.sort_by(|a, b| a.canonical_cmp(b));
        assert_eq!(r, vec![p(&[-2, 1]), p(&[-1, 1]), p(&[1, 1])]);
    }

    #[test]
    fn scale_variable_and_eval() {
        let a = p(&[1, 2, 3]);
        assert_eq!(a.scale_variable(&int(-1)), p(&[1, -2, 3]));
        assert_eq!(a.eval(&int(2)), int(17));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "t^2 - 1");
        assert_eq!(p(&[0, -3, 0, 2]).to_string(), "2*t^3 - 3*t");
        assert_eq!(QPoly::zero().to_string(), "0");
    }
}
