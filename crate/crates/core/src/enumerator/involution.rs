//! Fixed loci of non-symplectic involutions from the invariants (r, a, δ) of
//! their 2-elementary invariant lattice.

use std::fmt;

use serde_json::json;
use thiserror::Error;

use super::tables::{involution_points, LatticePoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error("22 - r - a = {sum} and r - a = {diff} must both be even and non-negative")]
    BadParity { sum: i64, diff: i64 },
    #[error("(r, a, δ) = ({r}, {a}, {delta}) is not an admissible 2-elementary lattice")]
    NotAdmissible { r: u32, a: u32, delta: String },
    #[error("δ must be 0 or 1, got {0}")]
    BadDelta(u8),
}

/// The two lattices whose fixed locus is not a curve of genus g plus k
/// rational curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialLattice {
    /// U(2) ⊕ E8(2): the involution acts freely.
    U2E82,
    /// U ⊕ E8(2): two elliptic curves.
    UE82,
}

impl SpecialLattice {
    pub fn invariants(self) -> (u32, u32, u8) {
        match self {
            SpecialLattice::U2E82 => (10, 10, 0),
            SpecialLattice::UE82 => (10, 8, 0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SpecialLattice::U2E82 => "U(2)+E8(2)",
            SpecialLattice::UE82 => "U+E8(2)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InvolutionData {
    pub r: u32,
    pub a: u32,
    /// `None` picks δ = 1 when admissible and δ = 0 otherwise.
    pub delta: Option<u8>,
}

impl InvolutionData {
    pub fn new(r: u32, a: u32, delta: Option<u8>) -> Self {
        InvolutionData { r, a, delta }
    }

    pub fn special(lattice: SpecialLattice) -> Self {
        let (r, a, delta) = lattice.invariants();
        InvolutionData {
            r,
            a,
            delta: Some(delta),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixedLocusDescriptor {
    Empty,
    TwoEllipticCurves,
    /// A curve of genus g and k smooth rational curves.
    Curves {
        genus: u32,
        rational_curves: u32,
    },
}

impl FixedLocusDescriptor {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            FixedLocusDescriptor::Empty => json!({ "kind": "empty" }),
            FixedLocusDescriptor::TwoEllipticCurves => json!({ "kind": "two elliptic curves" }),
            FixedLocusDescriptor::Curves { genus, rational_curves } => {
                json!({ "kind": "curves", "g": genus, "k": rational_curves })
            }
        }
    }
}

impl fmt::Display for FixedLocusDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedLocusDescriptor::Empty => write!(f, "empty"),
            FixedLocusDescriptor::TwoEllipticCurves => write!(f, "two elliptic curves"),
            FixedLocusDescriptor::Curves { genus, rational_curves } => {
                write!(
                    f,
                    "curve of genus {genus} and {rational_curves} rational curves (g={genus}, k={rational_curves})"
                )
            }
        }
    }
}

fn admissible(r: u32, a: u32, delta: u8) -> bool {
    involution_points().contains(&LatticePoint { r, a, delta })
}

pub fn involution_fixed_locus(d: &InvolutionData) -> Result<FixedLocusDescriptor, InvolutionError> {
    let (r, a) = (d.r as i64, d.a as i64);
    let sum = 22 - r - a;
    let diff = r - a;
    if sum < 0 || diff < 0 || sum % 2 != 0 || diff % 2 != 0 {
        return Err(InvolutionError::BadParity { sum, diff });
    }
    let delta = match d.delta {
        Some(delta) if delta > 1 => return Err(InvolutionError::BadDelta(delta)),
        Some(delta) if admissible(d.r, d.a, delta) => delta,
        None if admissible(d.r, d.a, 1) => 1,
        None if admissible(d.r, d.a, 0) => 0,
        _ => {
            let delta = d.delta.map_or("any".to_string(), |x| x.to_string());
            return Err(InvolutionError::NotAdmissible { r: d.r, a: d.a, delta });
        }
    };
    for special in [SpecialLattice::U2E82, SpecialLattice::UE82] {
        if special.invariants() == (d.r, d.a, delta) {
            return Ok(match special {
                SpecialLattice::U2E82 => FixedLocusDescriptor::Empty,
                SpecialLattice::UE82 => FixedLocusDescriptor::TwoEllipticCurves,
            });
        }
    }
    Ok(FixedLocusDescriptor::Curves {
        genus: (sum / 2) as u32,
        rational_curves: (diff / 2) as u32,
    })
}
