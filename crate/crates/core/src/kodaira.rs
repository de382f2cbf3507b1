//! Singular fibers of jacobian elliptic fibrations over ℙ¹.
//!
//! A model `y² = x³ + A(t)x + B(t)` has A and B homogeneous of degrees `4n`
//! and `6n` on the base, with `n = 2` for K3 surfaces. The discriminant
//! `Δ = 4A³ + 27B²` then has degree `12n`, and the sum of the Euler numbers
//! of the singular fibers equals `12n` (24 for K3).
//!
//! Fiber types come from the characteristic-0 Tate table on the triple of
//! vanishing orders `(v(A), v(B), v(Δ))`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{coprime_refinement, vanishing_order, Place, PolyError, QPoly, Valuation};
use crate::rational::{self, ParseRationalError};

/// Bundle degree of a K3 Weierstrass model: A of degree 8, B of degree 12.
pub const K3_BUNDLE_DEGREE: u32 = 2;
pub const K3_EULER_NUMBER: u32 = 24;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum KodairaError {
    #[error("discriminant vanishes identically")]
    ZeroDiscriminant,
    #[error("deg A = {deg_a}, deg B = {deg_b} exceed the bounds {max_a}, {max_b}")]
    DegreeTooLarge {
        deg_a: usize,
        deg_b: usize,
        max_a: usize,
        max_b: usize,
    },
    #[error("vanishing orders (vA, vB, vD) = ({va}, {vb}, {vd}) match no Kodaira type")]
    InconsistentOrders { va: Valuation, vb: Valuation, vd: u32 },
    #[error("Euler numbers sum to {found}, expected {expected}")]
    EulerBudget {
        expected: u32,
        found: u32,
        configuration: Box<FiberConfiguration>,
    },
    #[error("unknown fiber type {0:?}")]
    UnknownFiberType(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Parse(#[from] ParseRationalError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeierstrassModel {
    a: QPoly,
    b: QPoly,
    bundle_degree: u32,
}

impl WeierstrassModel {
    /// A K3 model: deg A ≤ 8, deg B ≤ 12.
    pub fn k3(a: QPoly, b: QPoly) -> Result<Self, KodairaError> {
        WeierstrassModel::with_bundle_degree(a, b, K3_BUNDLE_DEGREE)
    }

    pub fn with_bundle_degree(a: QPoly, b: QPoly, bundle_degree: u32) -> Result<Self, KodairaError> {
        let max_a = 4 * bundle_degree as usize;
        let max_b = 6 * bundle_degree as usize;
        let deg_a = a.degree().unwrap_or(0);
        let deg_b = b.degree().unwrap_or(0);
        if deg_a > max_a || deg_b > max_b {
            return Err(KodairaError::DegreeTooLarge {
                deg_a,
                deg_b,
                max_a,
                max_b,
            });
        }
        Ok(WeierstrassModel { a, b, bundle_degree })
    }

    pub fn a(&self) -> &QPoly {
        &self.a
    }

    pub fn b(&self) -> &QPoly {
        &self.b
    }

    pub fn bundle_degree(&self) -> u32 {
        self.bundle_degree
    }

    pub fn degree_a(&self) -> usize {
        4 * self.bundle_degree as usize
    }

    pub fn degree_b(&self) -> usize {
        6 * self.bundle_degree as usize
    }

    pub fn degree_discriminant(&self) -> usize {
        12 * self.bundle_degree as usize
    }

    pub fn from_json(text: &str) -> Result<Self, ModelFileError> {
        let file: ModelFile = serde_json::from_str(text)?;
        let a = QPoly::from_strings(&file.a)?;
        let b = QPoly::from_strings(&file.b)?;
        Ok(WeierstrassModel::k3(a, b)?)
    }

    pub fn to_file(&self) -> ModelFile {
        ModelFile {
            a: self.a.to_strings(),
            b: self.b.to_strings(),
        }
    }
}

/// On-disk model schema: `{"A": [...], "B": [...]}`, ascending coefficients
/// as rational strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    #[serde(rename = "A")]
    pub a: Vec<String>,
    #[serde(rename = "B")]
    pub b: Vec<String>,
}

#[derive(Debug, Error)]
pub enum ModelFileError {
    #[error("model file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("model file: {0}")]
    Poly(#[from] PolyError),
    #[error("model file: {0}")]
    Model(#[from] KodairaError),
}

/// Δ = 4A³ + 27B².
pub fn discriminant(model: &WeierstrassModel) -> Result<QPoly, KodairaError> {
    let d = &model.a.pow(3).scale(&rational::int(4)) + &model.b.pow(2).scale(&rational::int(27));
    if d.is_zero() {
        Err(KodairaError::ZeroDiscriminant)
    } else {
        Ok(d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiberType {
    /// Iₙ, n ≥ 1.
    I(u32),
    /// Iₙ*, n ≥ 0.
    IStar(u32),
    II,
    III,
    IV,
    IVStar,
    IIIStar,
    IIStar,
}

impl FiberType {
    /// Euler number δ, equal to the order of vanishing of Δ.
    pub fn euler_number(self) -> u32 {
        match self {
            FiberType::I(n) => n,
            FiberType::IStar(n) => n + 6,
            FiberType::II => 2,
            FiberType::III => 3,
            FiberType::IV => 4,
            FiberType::IVStar => 8,
            FiberType::IIIStar => 9,
            FiberType::IIStar => 10,
        }
    }

    pub fn component_count(self) -> u32 {
        match self {
            FiberType::I(n) => n,
            FiberType::IStar(n) => n + 5,
            FiberType::II => 1,
            FiberType::III => 2,
            FiberType::IV => 3,
            FiberType::IVStar => 7,
            FiberType::IIIStar => 8,
            FiberType::IIStar => 9,
        }
    }

    /// Multiplicities of the fiber components, simple components first for
    /// Iₙ* and in diagram order for the exceptional types.
    pub fn multiplicities(self) -> Vec<u32> {
        match self {
            FiberType::I(n) => vec![1; n as usize],
            FiberType::II => vec![1],
            FiberType::III => vec![1, 1],
            FiberType::IV => vec![1, 1, 1],
            FiberType::IStar(n) => {
                let mut m = vec![1; 4];
                m.extend(std::iter::repeat_n(2, n as usize + 1));
                m
            }
            FiberType::IVStar => vec![1, 2, 3, 2, 1, 2, 1],
            FiberType::IIIStar => vec![1, 2, 3, 4, 3, 2, 1, 2],
            FiberType::IIStar => vec![2, 4, 6, 5, 4, 3, 2, 1, 3],
        }
    }

    /// Extended Dynkin diagram of the fiber; `None` for irreducible fibers.
    pub fn dynkin(self) -> Option<String> {
        match self {
            FiberType::I(1) | FiberType::II => None,
            FiberType::I(n) => Some(format!("A{}~", n - 1)),
            FiberType::III => Some("A1~".into()),
            FiberType::IV => Some("A2~".into()),
            FiberType::IStar(n) => Some(format!("D{}~", n + 4)),
            FiberType::IVStar => Some("E6~".into()),
            FiberType::IIIStar => Some("E7~".into()),
            FiberType::IIStar => Some("E8~".into()),
        }
    }
}

impl fmt::Display for FiberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberType::I(n) => write!(f, "I{n}"),
            FiberType::IStar(n) => write!(f, "I{n}*"),
            FiberType::II => f.write_str("II"),
            FiberType::III => f.write_str("III"),
            FiberType::IV => f.write_str("IV"),
            FiberType::IVStar => f.write_str("IV*"),
            FiberType::IIIStar => f.write_str("III*"),
            FiberType::IIStar => f.write_str("II*"),
        }
    }
}

impl FromStr for FiberType {
    type Err = KodairaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || KodairaError::UnknownFiberType(s.to_string());
        Ok(match s {
            "II" => FiberType::II,
            "III" => FiberType::III,
            "IV" => FiberType::IV,
            "IV*" => FiberType::IVStar,
            "III*" => FiberType::IIIStar,
            "II*" => FiberType::IIStar,
            _ => {
                let rest = s.strip_prefix('I').ok_or_else(unknown)?;
                match rest.strip_suffix('*') {
                    Some(n) => FiberType::IStar(n.parse().map_err(|_| unknown())?),
                    None => {
                        let n: u32 = rest.parse().map_err(|_| unknown())?;
                        if n == 0 {
                            return Err(unknown());
                        }
                        FiberType::I(n)
                    }
                }
            }
        })
    }
}

/// Outcome of the Tate table at one place.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reduction {
    Smooth,
    Singular(FiberType),
    NonMinimal,
}

/// Kodaira type from the vanishing orders of A, B and Δ at a place.
pub fn fiber_type(va: Valuation, vb: Valuation, vd: u32) -> Result<Reduction, KodairaError> {
    use Valuation::Finite;
    let bad = || KodairaError::InconsistentOrders { va, vb, vd };
    if va.at_least(4) && vb.at_least(6) {
        return Ok(Reduction::NonMinimal);
    }
    if vd == 0 {
        // Δ is a unit, so A or B must be one too.
        return if va.is(0) || vb.is(0) {
            Ok(Reduction::Smooth)
        } else {
            Err(bad())
        };
    }
    let expect = |delta: u32, ty: FiberType| {
        if vd == delta {
            Ok(Reduction::Singular(ty))
        } else {
            Err(bad())
        }
    };
    match (va, vb) {
        (Finite(0), Finite(0)) => Ok(Reduction::Singular(FiberType::I(vd))),
        (_, Finite(1)) if va.at_least(1) => expect(2, FiberType::II),
        (Finite(1), _) if vb.at_least(2) => expect(3, FiberType::III),
        (_, Finite(2)) if va.at_least(2) => expect(4, FiberType::IV),
        _ if va.at_least(2) && vb.at_least(3) && vd == 6 => Ok(Reduction::Singular(FiberType::IStar(0))),
        (Finite(2), Finite(3)) if vd > 6 => Ok(Reduction::Singular(FiberType::IStar(vd - 6))),
        (_, Finite(4)) if va.at_least(3) => expect(8, FiberType::IVStar),
        (Finite(3), _) if vb.at_least(5) => expect(9, FiberType::IIIStar),
        (_, Finite(5)) if va.at_least(4) => expect(10, FiberType::IIStar),
        _ => Err(bad()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberEntry {
    pub place: Place,
    pub fiber: FiberType,
    /// Geometric fibers represented: the cluster degree, or 1 at infinity.
    pub orbit_size: u32,
    pub orders: (Valuation, Valuation, u32),
}

impl FiberEntry {
    pub fn euler_contribution(&self) -> u32 {
        self.orbit_size * self.fiber.euler_number()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberConfiguration {
    pub entries: Vec<FiberEntry>,
    /// Places where the input was non-minimal and got rescaled.
    pub minimalized: Vec<Place>,
    /// Bundle degree after minimalization.
    pub bundle_degree: u32,
}

impl FiberConfiguration {
    pub fn euler_sum(&self) -> u32 {
        self.entries.iter().map(FiberEntry::euler_contribution).sum()
    }

    /// Number of geometric singular fibers.
    pub fn fiber_count(&self) -> u32 {
        self.entries.iter().map(|e| e.orbit_size).sum()
    }

    /// Rank of the lattice spanned by the zero section, a fiber and the
    /// non-identity fiber components.
    pub fn shioda_tate_contribution(&self) -> u32 {
        2 + self
            .entries
            .iter()
            .map(|e| e.orbit_size * (e.fiber.component_count() - 1))
            .sum::<u32>()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<_> = self
            .entries
            .iter()
            .map(|e| {
                let place = match &e.place {
                    Place::Finite(c) => serde_json::json!(c.to_strings()),
                    Place::Infinity => serde_json::json!("infinity"),
                };
                serde_json::json!({
                    "place": place,
                    "place_display": e.place.to_string(),
                    "type": e.fiber.to_string(),
                    "orbit_size": e.orbit_size,
                    "euler": e.fiber.euler_number(),
                    "components": e.fiber.component_count(),
                })
            })
            .collect();
        serde_json::Value::Array(entries)
    }
}

fn orders_at(
    model: &WeierstrassModel,
    disc: &QPoly,
    place: &Place,
) -> Result<(Valuation, Valuation, u32), KodairaError> {
    let va = vanishing_order(model.a(), place, model.degree_a())?;
    let vb = vanishing_order(model.b(), place, model.degree_b())?;
    let vd = vanishing_order(disc, place, model.degree_discriminant())?
        .finite()
        .expect("discriminant is nonzero");
    Ok((va, vb, vd))
}

fn squarefree_parts(p: &QPoly) -> Result<Vec<QPoly>, PolyError> {
    if p.is_zero() {
        return Ok(Vec::new());
    }
    Ok(p.squarefree_decompose()?.factors.into_iter().map(|(f, _)| f).collect())
}

/// Singular-fiber configuration of a Weierstrass model.
///
/// Non-minimal places are minimalized first (A/c⁴, B/c⁶, lowering the bundle
/// degree by the place degree). The result must have Euler sum 24; anything
/// else is reported as [`KodairaError::EulerBudget`] with the configuration
/// attached.
pub fn configuration(model: &WeierstrassModel) -> Result<FiberConfiguration, KodairaError> {
    let config = configuration_unchecked(model)?;
    let found = config.euler_sum();
    if found != K3_EULER_NUMBER {
        return Err(KodairaError::EulerBudget {
            expected: K3_EULER_NUMBER,
            found,
            configuration: Box::new(config),
        });
    }
    Ok(config)
}

/// Like [`configuration`] but without the K3 Euler-number check.
pub fn configuration_unchecked(model: &WeierstrassModel) -> Result<FiberConfiguration, KodairaError> {
    let mut model = model.clone();
    let mut minimalized = Vec::new();
    'restart: loop {
        let disc = discriminant(&model)?;
        let mut parts = squarefree_parts(&disc)?;
        parts.extend(squarefree_parts(model.a())?);
        parts.extend(squarefree_parts(model.b())?);
        let rad_disc = disc.squarefree_part()?;
        let clusters: Vec<QPoly> = coprime_refinement(&parts)
            .into_iter()
            .filter(|c| c.divides(&rad_disc))
            .collect();

        let mut entries = Vec::new();
        let places = clusters
            .into_iter()
            .map(Place::Finite)
            .chain(std::iter::once(Place::Infinity));
        for place in places {
            let (va, vb, vd) = orders_at(&model, &disc, &place)?;
            match fiber_type(va, vb, vd)? {
                Reduction::Smooth => {}
                Reduction::Singular(fiber) => entries.push(FiberEntry {
                    orbit_size: place.orbit_size() as u32,
                    place,
                    fiber,
                    orders: (va, vb, vd),
                }),
                Reduction::NonMinimal => {
                    model = minimalize(&model, &place)?;
                    minimalized.push(place);
                    continue 'restart;
                }
            }
        }
        entries.sort_by(|x, y| x.place.canonical_cmp(&y.place));
        return Ok(FiberConfiguration {
            entries,
            minimalized,
            bundle_degree: model.bundle_degree,
        });
    }
}

fn minimalize(model: &WeierstrassModel, place: &Place) -> Result<WeierstrassModel, KodairaError> {
    match place {
        Place::Infinity => {
            let n = model
                .bundle_degree
                .checked_sub(1)
                .ok_or(KodairaError::ZeroDiscriminant)?;
            WeierstrassModel::with_bundle_degree(model.a.clone(), model.b.clone(), n)
        }
        Place::Finite(c) => {
            let d = c.degree().expect("non-constant cluster") as u32;
            let divide = |p: &QPoly, e: u32| -> QPoly {
                if p.is_zero() {
                    QPoly::zero()
                } else {
                    p.div_exact(&c.pow(e)).expect("non-minimal order")
                }
            };
            let n = model
                .bundle_degree
                .checked_sub(d)
                .ok_or(KodairaError::ZeroDiscriminant)?;
            WeierstrassModel::with_bundle_degree(divide(&model.a, 4), divide(&model.b, 6), n)
        }
    }
}
