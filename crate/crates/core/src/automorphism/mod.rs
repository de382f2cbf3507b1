//! Diagonal automorphisms `(x, y, t) ↦ (λₓx, λᵧy, λₜt)` of Weierstrass models.
//!
//! Such a map preserves `y² = x³ + A(t)x + B(t)` exactly when
//! `λₓ³ = λᵧ²`, `A(λₜt) = (λᵧ²/λₓ)·A(t)` and `B(λₜt) = λᵧ²·B(t)`. It
//! multiplies the 2-form `dt∧dx / 2y` by `λₜλₓ/λᵧ`.

mod genus;
mod local;
pub mod translation;

use std::fmt;

use num::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclotomic::{CyclotomicError, Zeta8};
use crate::kodaira::{FiberConfiguration, WeierstrassModel};
use crate::poly::{Place, Poly, QPoly};

pub use genus::{riemann_hurwitz_genus, GenusError};
pub use local::{local_point_type, LocalTypeError, PointType};
pub use translation::{
    two_torsion_translate, ProjectivePoint, TranslationError, TwoTorsionTranslation, VerificationConfig,
    VerificationReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomorphismError {
    #[error("scaling {name} = {value} is not a root of unity")]
    NotRootOfUnity { name: &'static str, value: String },
    #[error("image of cluster {cluster} under t -> {lambda_t}*t is not a place of the configuration")]
    ImageNotInConfiguration { cluster: String, lambda_t: String },
    #[error(transparent)]
    Cyclotomic(#[from] CyclotomicError),
    #[error("automorphism file: {0}")]
    Json(String),
}

pub type ZPoly = Poly<Zeta8>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialAutomorphism {
    pub lambda_x: Zeta8,
    pub lambda_y: Zeta8,
    pub lambda_t: Zeta8,
}

/// Automorphism schema: three 4-arrays of rational strings in the power
/// basis of ℚ(ζ₈).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomorphismFile {
    pub lambda_x: [String; 4],
    pub lambda_y: [String; 4],
    pub lambda_t: [String; 4],
}

impl MonomialAutomorphism {
    pub fn new(lambda_x: Zeta8, lambda_y: Zeta8, lambda_t: Zeta8) -> Result<Self, AutomorphismError> {
        for (name, value) in [
            ("lambda_x", &lambda_x),
            ("lambda_y", &lambda_y),
            ("lambda_t", &lambda_t),
        ] {
            if value.unit_order().is_none() {
                return Err(AutomorphismError::NotRootOfUnity {
                    name,
                    value: value.to_string(),
                });
            }
        }
        Ok(MonomialAutomorphism {
            lambda_x,
            lambda_y,
            lambda_t,
        })
    }

    /// Scalings given as exponents of ζ₈.
    pub fn from_exponents(x: i64, y: i64, t: i64) -> Self {
        MonomialAutomorphism {
            lambda_x: Zeta8::zeta_pow(x),
            lambda_y: Zeta8::zeta_pow(y),
            lambda_t: Zeta8::zeta_pow(t),
        }
    }

    pub fn identity() -> Self {
        MonomialAutomorphism::from_exponents(0, 0, 0)
    }

    /// `(x, y, t) ↦ (−ix, ζ₈y, −t)` on `y² = x(x² + t·p₆(t))`.
    pub fn order8_example() -> Self {
        MonomialAutomorphism::from_exponents(6, 1, 4)
    }

    pub fn compose(&self, other: &Self) -> Self {
        MonomialAutomorphism {
            lambda_x: self.lambda_x.clone() * other.lambda_x.clone(),
            lambda_y: self.lambda_y.clone() * other.lambda_y.clone(),
            lambda_t: self.lambda_t.clone() * other.lambda_t.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        MonomialAutomorphism {
            lambda_x: self.lambda_x.pow(n),
            lambda_y: self.lambda_y.pow(n),
            lambda_t: self.lambda_t.pow(n),
        }
    }

    /// Order of the automorphism as a map on (x, y, t).
    pub fn order(&self) -> u32 {
        let orders =
            [&self.lambda_x, &self.lambda_y, &self.lambda_t].map(|l| l.unit_order().expect("validated root of unity"));
        orders.into_iter().fold(1, lcm)
    }

    /// Action on the holomorphic 2-form `dt∧dx / 2y`.
    pub fn form_multiplier(&self) -> Zeta8 {
        let num = self.lambda_t.clone() * self.lambda_x.clone();
        num.div(&self.lambda_y).expect("root of unity is nonzero")
    }

    pub fn from_json(text: &str) -> Result<Self, AutomorphismError> {
        let file: AutomorphismFile = serde_json::from_str(text).map_err(|e| AutomorphismError::Json(e.to_string()))?;
        MonomialAutomorphism::new(
            Zeta8::from_strings(&file.lambda_x)?,
            Zeta8::from_strings(&file.lambda_y)?,
            Zeta8::from_strings(&file.lambda_t)?,
        )
    }

    pub fn to_file(&self) -> AutomorphismFile {
        AutomorphismFile {
            lambda_x: self.lambda_x.to_strings(),
            lambda_y: self.lambda_y.to_strings(),
            lambda_t: self.lambda_t.to_strings(),
        }
    }

    /// Checks the three preservation identities exactly over ℚ(ζ₈).
    pub fn check_preserves(&self, model: &WeierstrassModel) -> PreservationCertificate {
        let ly2 = self.lambda_y.pow(2);
        let weights = self.lambda_x.pow(3) == ly2;
        let a = lift(model.a());
        let b = lift(model.b());
        let a_factor = ly2.div(&self.lambda_x).expect("nonzero");
        let a_equivariant = a.scale_variable(&self.lambda_t) == a.scale(&a_factor);
        let b_equivariant = b.scale_variable(&self.lambda_t) == b.scale(&ly2);
        PreservationCertificate {
            weights,
            a_equivariant,
            b_equivariant,
        }
    }

    /// How `t ↦ λₜt` acts on the places of a configuration.
    pub fn base_action(&self, config: &FiberConfiguration) -> Result<BaseAction, AutomorphismError> {
        let lt = &self.lambda_t;
        let trivial = lt.is_one();
        let lt_inv = lt.inv()?;
        let cycle = lt.unit_order().expect("validated root of unity");
        let lifted: Vec<Option<ZPoly>> = config
            .entries
            .iter()
            .map(|e| match &e.place {
                Place::Finite(c) => Some(lift(c)),
                Place::Infinity => None,
            })
            .collect();

        let mut entries = Vec::with_capacity(config.entries.len());
        for (index, entry) in config.entries.iter().enumerate() {
            let action = match &entry.place {
                Place::Infinity => EntryAction {
                    index,
                    image: index,
                    fixed_places: 1,
                    moved_places: 0,
                    cycle_length: 1,
                },
                Place::Finite(cluster) => {
                    // Roots r ↦ λₜr, so the image cluster is p(λₜ⁻¹t), made monic.
                    let image_poly = lift(cluster).scale_variable(&lt_inv).monic();
                    let image = lifted
                        .iter()
                        .position(|l| l.as_ref() == Some(&image_poly))
                        .ok_or_else(|| AutomorphismError::ImageNotInConfiguration {
                            cluster: cluster.to_string(),
                            lambda_t: lt.to_string(),
                        })?;
                    let degree = entry.orbit_size;
                    let fixed = if trivial {
                        degree
                    } else {
                        u32::from(cluster.coeff(0).is_zero())
                    };
                    EntryAction {
                        index,
                        image,
                        fixed_places: fixed,
                        moved_places: degree - fixed,
                        cycle_length: if trivial { 1 } else { cycle },
                    }
                }
            };
            entries.push(action);
        }
        let fixed_base_points = if trivial {
            BaseFixedLocus::Everything
        } else {
            BaseFixedLocus::ZeroAndInfinity
        };
        Ok(BaseAction {
            fixed_base_points,
            entries,
        })
    }
}

impl fmt::Display for MonomialAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |c: &Zeta8, v: &str| match c.to_string().as_str() {
            "1" => v.to_string(),
            "-1" => format!("-{v}"),
            s if !s.contains(' ') => format!("{s}*{v}"),
            s => format!("({s})*{v}"),
        };
        write!(
            f,
            "(x, y, t) -> ({}, {}, {})",
            term(&self.lambda_x, "x"),
            term(&self.lambda_y, "y"),
            term(&self.lambda_t, "t")
        )
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

pub fn lift(p: &QPoly) -> ZPoly {
    p.map(|c| Zeta8::from_rational(c.clone()))
}

pub const WEIGHT_CONDITION: &str = "λₓ³ = λᵧ²";
pub const A_CONDITION: &str = "A(λₜt) = (λᵧ²/λₓ)A(t)";
pub const B_CONDITION: &str = "B(λₜt) = λᵧ²B(t)";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PreservationCertificate {
    pub weights: bool,
    pub a_equivariant: bool,
    pub b_equivariant: bool,
}

impl PreservationCertificate {
    pub fn preserved(&self) -> bool {
        self.weights && self.a_equivariant && self.b_equivariant
    }

    pub fn failed_conditions(&self) -> Vec<&'static str> {
        [
            (self.weights, WEIGHT_CONDITION),
            (self.a_equivariant, A_CONDITION),
            (self.b_equivariant, B_CONDITION),
        ]
        .into_iter()
        .filter_map(|(ok, name)| (!ok).then_some(name))
        .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseFixedLocus {
    /// λₜ = 1: the base is fixed pointwise.
    Everything,
    /// t ↦ λₜt with λₜ ≠ 1 fixes exactly 0 and ∞.
    ZeroAndInfinity,
}

/// Action on one configuration entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EntryAction {
    pub index: usize,
    /// Index of the entry this one is mapped onto.
    pub image: usize,
    /// Geometric places of the cluster fixed by the base map.
    pub fixed_places: u32,
    pub moved_places: u32,
    /// Length of the orbits of the moved places.
    pub cycle_length: u32,
}

impl EntryAction {
    pub fn is_stable(&self) -> bool {
        self.index == self.image
    }

    /// The cluster is mapped to itself and its places are exchanged in pairs.
    pub fn is_orbit_swapped(&self) -> bool {
        self.is_stable() && self.moved_places > 0 && self.cycle_length == 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseAction {
    pub fixed_base_points: BaseFixedLocus,
    pub entries: Vec<EntryAction>,
}

impl BaseAction {
    pub fn entry(&self, index: usize) -> &EntryAction {
        &self.entries[index]
    }
}
