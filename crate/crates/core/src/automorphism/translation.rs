//! Translation by the 2-torsion section `t ↦ (0 : 0 : 1)` of a model with
//! B = 0.
//!
//! On `y² = x³ + A(t)x` adding `T = (0, 0)` is `(x, y) ↦ (A/x, −A·y/x²)`. It is
//! an involution that swaps the zero section O = (0 : 1 : 0) with T. The map
//! is checked by sampling points over a prime field: images must be on the
//! curve, applying the map twice must return the point, and the projective
//! extensions at O and T must exchange them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use num::{BigInt, Integer, ToPrimitive, Zero};

use crate::kodaira::WeierstrassModel;
use crate::poly::QPoly;
use crate::rational::Q;

pub const DEFAULT_MODULUS: u64 = 10007;
pub const DEFAULT_SAMPLES: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslationError {
    #[error("two-torsion translation needs B = 0")]
    NonzeroB,
    #[error("A vanishes identically, the model is singular")]
    ZeroA,
    #[error("modulus {0} must be a prime greater than 3")]
    BadModulus(u64),
    #[error("a coefficient denominator is divisible by {0}")]
    DenominatorDivisible(u64),
    #[error("found only {found} of {wanted} sample points; retry with another prime")]
    NotEnoughPoints { found: usize, wanted: usize },
}

/// Arithmetic modulo a prime below 2³².
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, TranslationError> {
        if p <= 3 || p >= 1 << 32 || !is_prime(p) {
            return Err(TranslationError::BadModulus(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn neg(self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn pow(self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u64) -> Option<u64> {
        (!a.is_multiple_of(self.p)).then(|| self.pow(a, self.p - 2))
    }

    /// A square root by Tonelli–Shanks, if `a` is a square.
    pub fn sqrt(self, a: u64) -> Option<u64> {
        let p = self.p;
        let a = a % p;
        if a == 0 {
            return Some(0);
        }
        if self.pow(a, (p - 1) / 2) != 1 {
            return None;
        }
        let mut q = p - 1;
        let mut s = 0;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let z = (2..p)
            .find(|&z| self.pow(z, (p - 1) / 2) == p - 1)
            .expect("non-residue exists");
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, q.div_ceil(2));
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = self.mul(t2, t2);
                i += 1;
            }
            let b = self.pow(c, 1 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r)
    }

    pub fn reduce(self, q: &Q) -> Result<u64, TranslationError> {
        let p = BigInt::from(self.p);
        let den = q.denom().mod_floor(&p);
        if den.is_zero() {
            return Err(TranslationError::DenominatorDivisible(self.p));
        }
        let num = q.numer().mod_floor(&p).to_u64().expect("reduced");
        let den = den.to_u64().expect("reduced");
        Ok(self.mul(num, self.inv(den).expect("nonzero")))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Point of the projective plane over a prime field, `(X : Y : Z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectivePoint {
    pub x: u64,
    pub y: u64,
    pub z: u64,
}

impl ProjectivePoint {
    pub fn zero_section() -> Self {
        ProjectivePoint { x: 0, y: 1, z: 0 }
    }

    pub fn torsion_section() -> Self {
        ProjectivePoint { x: 0, y: 0, z: 1 }
    }

    pub fn is_degenerate(&self) -> bool {
        self.x == 0 && self.y == 0 && self.z == 0
    }

    /// Equality up to a nonzero scalar.
    pub fn same_as(&self, other: &Self, fp: PrimeField) -> bool {
        if self.is_degenerate() || other.is_degenerate() {
            return false;
        }
        let a = [self.x, self.y, self.z];
        let b = [other.x, other.y, other.z];
        (0..3).all(|i| (0..3).all(|j| fp.mul(a[i], b[j]) == fp.mul(a[j], b[i])))
    }
}

/// The translation map on one model, `(x, y) ↦ (A(t)/x, −A(t)·y/x²)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoTorsionTranslation {
    a: QPoly,
}

pub fn two_torsion_translate(model: &WeierstrassModel) -> Result<TwoTorsionTranslation, TranslationError> {
    if !model.b().is_zero() {
        return Err(TranslationError::NonzeroB);
    }
    if model.a().is_zero() {
        return Err(TranslationError::ZeroA);
    }
    Ok(TwoTorsionTranslation { a: model.a().clone() })
}

impl TwoTorsionTranslation {
    pub fn describe(&self) -> String {
        "(x, y) -> (A(t)/x, -A(t)*y/x^2)".to_string()
    }

    pub fn a(&self) -> &QPoly {
        &self.a
    }

    /// Affine map on a fiber with `A(t) = a`; `None` at the pole x = 0.
    pub fn apply_affine(fp: PrimeField, a: u64, x: u64, y: u64) -> Option<(u64, u64)> {
        let xi = fp.inv(x)?;
        let nx = fp.mul(a, xi);
        let ny = fp.neg(fp.mul(fp.mul(a, y), fp.mul(xi, xi)));
        Some((nx, ny))
    }

    /// Projective extension `(AX² : −AXY : Y² − AXZ)`, defined at O.
    pub fn apply_near_zero_section(fp: PrimeField, a: u64, pt: ProjectivePoint) -> ProjectivePoint {
        let ProjectivePoint { x, y, z } = pt;
        ProjectivePoint {
            x: fp.mul(a, fp.mul(x, x)),
            y: fp.neg(fp.mul(a, fp.mul(x, y))),
            z: fp.sub(fp.mul(y, y), fp.mul(a, fp.mul(x, z))),
        }
    }

    /// Projective extension `(−AYZ : A(X² + AZ²) : −XY)`, defined at T.
    pub fn apply_near_torsion_section(fp: PrimeField, a: u64, pt: ProjectivePoint) -> ProjectivePoint {
        let ProjectivePoint { x, y, z } = pt;
        ProjectivePoint {
            x: fp.neg(fp.mul(a, fp.mul(y, z))),
            y: fp.mul(a, fp.add(fp.mul(x, x), fp.mul(a, fp.mul(z, z)))),
            z: fp.neg(fp.mul(x, y)),
        }
    }

    pub fn verify(&self, config: &VerificationConfig) -> Result<VerificationReport, TranslationError> {
        let fp = PrimeField::new(config.modulus)?;
        let coeffs = self
            .a
            .coeffs()
            .iter()
            .map(|c| fp.reduce(c))
            .collect::<Result<Vec<_>, _>>()?;
        let eval = |t: u64| coeffs.iter().rev().fold(0, |acc, &c| fp.add(fp.mul(acc, t), c));
        let on_curve = |a: u64, x: u64, y: u64| fp.mul(y, y) == fp.add(fp.mul(x, fp.mul(x, x)), fp.mul(a, x));

        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let fixed_fiber = match &config.fiber {
            Some(t) => {
                let t = fp.reduce(t)?;
                if eval(t) == 0 {
                    return Err(TranslationError::NotEnoughPoints {
                        found: 0,
                        wanted: config.samples,
                    });
                }
                Some(t)
            }
            None => None,
        };

        let mut report = VerificationReport {
            map: self.describe(),
            modulus: fp.modulus(),
            seed: config.seed,
            requested: config.samples,
            ..VerificationReport::default()
        };
        let mut fibers = Vec::new();
        let budget = 200 * config.samples.max(1);
        for _ in 0..budget {
            if report.samples == config.samples {
                break;
            }
            let t = fixed_fiber.unwrap_or_else(|| rng.gen_range(0..fp.modulus()));
            let a = eval(t);
            if a == 0 {
                continue;
            }
            let x = rng.gen_range(1..fp.modulus());
            let rhs = fp.add(fp.mul(x, fp.mul(x, x)), fp.mul(a, x));
            let Some(mut y) = fp.sqrt(rhs) else { continue };
            if rng.gen_bool(0.5) {
                y = fp.neg(y);
            }
            report.samples += 1;
            if !fibers.contains(&t) {
                fibers.push(t);
            }
            let (nx, ny) = Self::apply_affine(fp, a, x, y).expect("x != 0");
            if on_curve(a, nx, ny) {
                report.on_curve += 1;
            }
            if nx != 0 && Self::apply_affine(fp, a, nx, ny) == Some((x, y)) {
                report.involution += 1;
            }
        }
        if report.samples < config.samples {
            return Err(TranslationError::NotEnoughPoints {
                found: report.samples,
                wanted: config.samples,
            });
        }

        let o = ProjectivePoint::zero_section();
        let tors = ProjectivePoint::torsion_section();
        report.fibers = fibers.len();
        report.section_swap = fibers
            .iter()
            .filter(|&&t| {
                let a = eval(t);
                Self::apply_near_zero_section(fp, a, o).same_as(&tors, fp)
                    && Self::apply_near_torsion_section(fp, a, tors).same_as(&o, fp)
            })
            .count();
        Ok(report)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationConfig {
    pub modulus: u64,
    pub seed: u64,
    pub samples: usize,
    /// Restrict sampling to the fiber over this t.
    pub fiber: Option<Q>,
}

impl VerificationConfig {
    pub fn new(seed: u64) -> Self {
        VerificationConfig {
            modulus: DEFAULT_MODULUS,
            seed,
            samples: DEFAULT_SAMPLES,
            fiber: None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub map: String,
    pub modulus: u64,
    pub seed: u64,
    pub requested: usize,
    pub samples: usize,
    /// Sampled points whose image satisfies the curve equation.
    pub on_curve: usize,
    /// Sampled points restored by applying the map twice.
    pub involution: usize,
    /// Distinct fibers touched by the sample.
    pub fibers: usize,
    /// Fibers on which O ↦ T and T ↦ O.
    pub section_swap: usize,
}

impl VerificationReport {
    pub fn on_curve_passed(&self) -> bool {
        self.samples > 0 && self.on_curve == self.samples
    }

    pub fn involution_passed(&self) -> bool {
        self.samples > 0 && self.involution == self.samples
    }

    pub fn section_swap_passed(&self) -> bool {
        self.fibers > 0 && self.section_swap == self.fibers
    }

    pub fn passed(&self) -> bool {
        self.on_curve_passed() && self.involution_passed() && self.section_swap_passed()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "map": self.map,
            "modulus": self.modulus,
            "seed": self.seed,
            "sample_count": self.samples,
            "fibers": self.fibers,
            "conditions": {
                "on_curve": { "passed": self.on_curve, "pass": self.on_curve_passed() },
                "involution": { "passed": self.involution, "pass": self.involution_passed() },
                "section_swap": { "passed": self.section_swap, "pass": self.section_swap_passed() },
            },
            "pass": self.passed(),
        })
    }
}
