//! Local types of fixed points of an order-8 purely non-symplectic
//! automorphism.
//!
//! At a fixed point the action linearizes to `diag(ζ₈ᵃ, ζ₈ᵇ)` with
//! `a + b ≡ 1 (mod 8)`, since the determinant is the multiplier ζ₈ of the
//! 2-form. Up to swapping coordinates there are four cases.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum LocalTypeError {
    #[error("exponents ({0}, {1}) do not satisfy a + b ≡ 1 (mod 8)")]
    NotNonSymplectic(i64, i64),
    #[error("a point on a fixed curve has no partner point")]
    NotIsolated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointType {
    /// Eigenvalues (ζ₈, 1): the point lies on a pointwise fixed curve.
    OnFixedCurve,
    /// (i, ζ₈⁷).
    Isolated27,
    /// (ζ₈³, ζ₈⁶).
    Isolated36,
    /// (−1, ζ₈⁵).
    Isolated45,
}

pub fn local_point_type(a: i64, b: i64) -> Result<PointType, LocalTypeError> {
    if (a + b).rem_euclid(8) != 1 {
        return Err(LocalTypeError::NotNonSymplectic(a, b));
    }
    let lo = a.rem_euclid(8).min(b.rem_euclid(8));
    Ok(match lo {
        0 => PointType::OnFixedCurve,
        2 => PointType::Isolated27,
        3 => PointType::Isolated36,
        4 => PointType::Isolated45,
        // a + b ≡ 1 forces the smaller residue into {0, 2, 3, 4}
        _ => unreachable!("residue pair ({a}, {b})"),
    })
}

impl PointType {
    /// Eigenvalue exponents `(a, b)` of ζ₈, smaller first.
    pub fn exponents(self) -> (u32, u32) {
        match self {
            PointType::OnFixedCurve => (0, 1),
            PointType::Isolated27 => (2, 7),
            PointType::Isolated36 => (3, 6),
            PointType::Isolated45 => (4, 5),
        }
    }

    pub fn is_isolated(self) -> bool {
        self != PointType::OnFixedCurve
    }

    /// Type of the second fixed point on a σ-invariant rational curve that is
    /// pointwise fixed by σ⁴.
    pub fn partner(self) -> Result<PointType, LocalTypeError> {
        match self {
            PointType::OnFixedCurve => Err(LocalTypeError::NotIsolated),
            PointType::Isolated27 => Ok(PointType::Isolated36),
            PointType::Isolated36 => Ok(PointType::Isolated27),
            PointType::Isolated45 => Ok(PointType::Isolated45),
        }
    }

    /// Exponents of the linearized action of σ², reduced mod 8.
    pub fn squared_exponents(self) -> (u32, u32) {
        let (a, b) = self.exponents();
        ((2 * a) % 8, (2 * b) % 8)
    }

    /// Whether σ² acts with an eigenvalue 1 here, i.e. the point sits on a
    /// curve fixed by σ². Only (4,5)-points do.
    pub fn on_square_fixed_curve(self) -> bool {
        let (a, b) = self.squared_exponents();
        self.is_isolated() && (a == 0 || b == 0)
    }
}

impl fmt::Display for PointType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointType::OnFixedCurve => f.write_str("on fixed curve"),
            other => {
                let (a, b) = other.exponents();
                write!(f, "({a},{b})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_of_exponent_pairs() {
        assert_eq!(local_point_type(1, 0), Ok(PointType::OnFixedCurve));
        assert_eq!(local_point_type(0, 1), Ok(PointType::OnFixedCurve));
        assert_eq!(local_point_type(2, 7), Ok(PointType::Isolated27));
        assert_eq!(local_point_type(7, 2), Ok(PointType::Isolated27));
        assert_eq!(local_point_type(6, 3), Ok(PointType::Isolated36));
        assert_eq!(local_point_type(4, 5), Ok(PointType::Isolated45));
        assert_eq!(local_point_type(-4, 13), Ok(PointType::Isolated45));
        assert_eq!(local_point_type(3, 3), Err(LocalTypeError::NotNonSymplectic(3, 3)));
    }

    #[test]
    fn partners() {
        assert_eq!(PointType::Isolated27.partner(), Ok(PointType::Isolated36));
        assert_eq!(PointType::Isolated36.partner(), Ok(PointType::Isolated27));
        assert_eq!(PointType::Isolated45.partner(), Ok(PointType::Isolated45));
        assert_eq!(PointType::OnFixedCurve.partner(), Err(LocalTypeError::NotIsolated));
    }

    #[test]
    fn which_points_lie_on_curves_fixed_by_the_square() {
        assert_eq!(PointType::Isolated45.squared_exponents(), (0, 2));
        assert!(PointType::Isolated45.on_square_fixed_curve());
        assert!(!PointType::Isolated27.on_square_fixed_curve());
        assert!(!PointType::Isolated36.on_square_fixed_curve());
    }

    #[test]
    fn all_residue_pairs_are_covered() {
        for a in 0..8 {
            let b = (9 - a) % 8;
            let ty = local_point_type(a, b).unwrap();
            let (x, y) = ty.exponents();
            assert_eq!((x + y) % 8, 1);
        }
    }
}
