//! Invariant profiles of purely non-symplectic automorphisms σ of order 8
//! whose fourth power fixes only smooth rational curves (and at least one
//! thing), with Pic equal to the invariant lattice of σ⁴.
//!
//! [`classify_order8`] solves the constraints directly; [`brute_force_classify`]
//! scans a box of integer tuples and must agree with it.

mod involution;
mod oracle;
mod tables;

use std::cmp::Ordering;
use std::fmt;

use serde_json::json;
use thiserror::Error;

pub use involution::{involution_fixed_locus, FixedLocusDescriptor, InvolutionData, InvolutionError, SpecialLattice};
pub use oracle::{brute_force_classify, SearchBounds};
pub use tables::{
    involution_points, involution_table, order4_rows, order4_table, InvolutionTable, LatticePoint, Order4Row,
    Order4Table, SpecialLatticeEntry, INVOLUTION_JSON, ORDER4_JSON,
};

/// Rank of H²(X, ℤ) for a K3 surface.
pub const H2_RANK: u32 = 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumeratorError {
    #[error("eigenspace ranks (r={r}, l={l}, m={m}, m1={m1}) violate r ≥ 1 or r + l + 2m + 4m1 = 22")]
    InvalidRanks { r: u32, l: u32, m: u32, m1: u32 },
    #[error("k_σ² needs an even number of (4,5)-points, got {0}")]
    OddN45(u32),
    #[error("no order-4 row matches the square of the profile {0}")]
    NoOrder4Match(String),
    #[error("{count} order-4 rows match the square of the profile {profile}")]
    AmbiguousOrder4Match { profile: String, count: usize },
    #[error("matched order-4 row has odd a = {0}")]
    OddAGamma(u32),
}

/// Multiplicities of the eigenvalues 1, −1, i and ζ₈ of σ* on H²(X, ℤ).
/// Complex conjugate eigenvalues share a multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EigenRankVector {
    pub r: u32,
    pub l: u32,
    pub m: u32,
    pub m1: u32,
}

impl EigenRankVector {
    pub fn new(r: u32, l: u32, m: u32, m1: u32) -> Result<Self, EnumeratorError> {
        let v = EigenRankVector { r, l, m, m1 };
        if v.is_valid() {
            Ok(v)
        } else {
            Err(EnumeratorError::InvalidRanks { r, l, m, m1 })
        }
    }

    pub fn is_valid(&self) -> bool {
        self.r >= 1 && self.total() == H2_RANK
    }

    pub fn total(&self) -> u32 {
        self.r + self.l + 2 * self.m + 4 * self.m1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointCounts {
    pub n27: u32,
    pub n36: u32,
    pub n45: u32,
}

impl PointCounts {
    pub fn new(n27: u32, n36: u32, n45: u32) -> Self {
        PointCounts { n27, n36, n45 }
    }

    pub fn total(&self) -> u32 {
        self.n27 + self.n36 + self.n45
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FixedLocusProfile {
    pub ranks: EigenRankVector,
    pub points: PointCounts,
    /// Number of pointwise fixed rational curves.
    pub k: u32,
    /// Pairs of curves exchanged by σ and fixed by σ².
    pub a: u32,
    /// Σ (1 − g(C)) over fixed curves.
    pub alpha: i64,
}

impl FixedLocusProfile {
    /// Profile for the all-rational case, where α = k.
    pub fn rational(ranks: EigenRankVector, points: PointCounts, k: u32, a: u32) -> Self {
        FixedLocusProfile {
            ranks,
            points,
            k,
            a,
            alpha: k as i64,
        }
    }

    pub fn n(&self) -> u32 {
        self.points.total()
    }

    /// Columns `(m1, m, r, l, N, k, a)`.
    pub fn columns(&self) -> [u32; 7] {
        let v = &self.ranks;
        [v.m1, v.m, v.r, v.l, self.n(), self.k, self.a]
    }
}

impl fmt::Display for FixedLocusProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [m1, m, r, l, n, k, a] = self.columns();
        write!(f, "(m1={m1}, m={m}, r={r}, l={l}, N={n}, k={k}, a={a})")
    }
}

/// Eigenspace ranks of σ² and σ⁴, written as vectors of the same shape.
pub fn power_invariants(v: &EigenRankVector) -> (EigenRankVector, EigenRankVector) {
    let square = EigenRankVector {
        r: v.r + v.l,
        l: 2 * v.m,
        m: 2 * v.m1,
        m1: 0,
    };
    let fourth = EigenRankVector {
        r: v.r + v.l + 2 * v.m,
        l: 4 * v.m1,
        m: 0,
        m1: 0,
    };
    (square, fourth)
}

/// Holomorphic Lefschetz and topological Lefschetz relations.
pub fn lefschetz_check(p: &FixedLocusProfile) -> bool {
    let (n27, n36, n45) = (p.points.n27 as i64, p.points.n36 as i64, p.points.n45 as i64);
    let (r, l) = (p.ranks.r as i64, p.ranks.l as i64);
    n27 + n36 == 2 + 4 * p.alpha && n45 + n27 - n36 == 2 + 2 * p.alpha && n27 + n36 + n45 == 2 + r - l - 2 * p.alpha
}

/// Constraints forced when σ⁴ fixes only rational curves.
pub fn rational_fix4_constraints(p: &FixedLocusProfile) -> bool {
    p.points.n27 == p.points.n36 && p.points.n45.is_multiple_of(2) && p.alpha == p.k as i64 && p.n().is_multiple_of(2)
}

/// Rational curves fixed by σ²: the fixed curves of σ, one through each pair
/// of (4,5)-points, and both curves of each exchanged pair.
pub fn k_sigma2(p: &FixedLocusProfile) -> Result<u32, EnumeratorError> {
    if !p.points.n45.is_multiple_of(2) {
        return Err(EnumeratorError::OddN45(p.points.n45));
    }
    Ok(p.k + p.points.n45 / 2 + 2 * p.a)
}

/// Rank of the Néron–Severi group, which is the σ⁴-invariant lattice here.
pub fn ns_rank(p: &FixedLocusProfile) -> u32 {
    p.ranks.r + p.ranks.l + 2 * p.ranks.m
}

/// Sort by k descending, then m1 descending, then m ascending. Remaining
/// fields only break ties so the order is total.
pub fn canonical_cmp(x: &FixedLocusProfile, y: &FixedLocusProfile) -> Ordering {
    y.k.cmp(&x.k)
        .then(y.ranks.m1.cmp(&x.ranks.m1))
        .then(x.ranks.m.cmp(&y.ranks.m))
        .then(x.ranks.r.cmp(&y.ranks.r))
        .then(x.ranks.l.cmp(&y.ranks.l))
        .then(x.a.cmp(&y.a))
        .then(x.points.cmp(&y.points))
        .then(x.alpha.cmp(&y.alpha))
}

pub fn sort_canonical(profiles: &mut [FixedLocusProfile]) {
    profiles.sort_by(canonical_cmp);
}

/// Order-4 rows admissible as the square of σ: even m (an i-eigenspace of
/// σ² comes from ζ₈ and ζ₈³ together) and even a.
fn square_candidates() -> impl Iterator<Item = &'static Order4Row> {
    order4_rows()
        .iter()
        .filter(|row| row.m % 2 == 0 && row.a_gamma % 2 == 0)
}

/// Derive every admissible profile from the constraints.
pub fn classify_order8() -> Vec<FixedLocusProfile> {
    let max_k2 = order4_rows().iter().map(|row| row.k).max().unwrap_or(0);
    let mut found = Vec::new();
    let mut k = 0u32;
    loop {
        let alpha = k as i64;
        // n27 + n36 = 2 + 4α with n27 = n36; then n45 = 2 + 2α.
        let n27 = (1 + 2 * alpha) as u32;
        let n45 = (2 + 2 * alpha) as u32;
        let points = PointCounts::new(n27, n27, n45);
        if k + n45 / 2 > max_k2 {
            break;
        }
        let n = points.total() as i64;
        let mut a = 0u32;
        loop {
            let k2 = k + n45 / 2 + 2 * a;
            if k2 > max_k2 {
                break;
            }
            for row in square_candidates().filter(|row| row.k == k2) {
                if row.l % 2 != 0 {
                    continue;
                }
                let (m1, m) = (row.m / 2, row.l / 2);
                // r + l is the invariant rank of σ², r − l is fixed by N.
                let sum = row.r as i64;
                let diff = n - 2 + 2 * alpha;
                if (sum + diff) % 2 != 0 {
                    continue;
                }
                let r = (sum + diff) / 2;
                let l = sum - r;
                if r < 1 || l < 0 {
                    continue;
                }
                let ranks = EigenRankVector {
                    r: r as u32,
                    l: l as u32,
                    m,
                    m1,
                };
                let profile = FixedLocusProfile::rational(ranks, points, k, a);
                debug_assert!(ranks.is_valid() && lefschetz_check(&profile));
                debug_assert!(rational_fix4_constraints(&profile));
                found.push(profile);
            }
            a += 1;
        }
        k += 1;
    }
    sort_canonical(&mut found);
    found
}

/// The order-4 row describing σ² for a profile, read through the (r, l, m, k)
/// columns.
pub fn square_row(p: &FixedLocusProfile) -> Result<Order4Row, EnumeratorError> {
    let (sq, _) = power_invariants(&p.ranks);
    let k2 = k_sigma2(p)?;
    let matches: Vec<&Order4Row> = order4_rows()
        .iter()
        .filter(|row| row.m % 2 == 0)
        .filter(|row| row.r == sq.r && row.l == sq.l && row.m == sq.m && row.k == k2)
        .collect();
    match matches.as_slice() {
        [] => Err(EnumeratorError::NoOrder4Match(p.to_string())),
        [row] if row.a_gamma % 2 != 0 => Err(EnumeratorError::OddAGamma(row.a_gamma)),
        [row] => Ok(**row),
        _ => Err(EnumeratorError::AmbiguousOrder4Match {
            profile: p.to_string(),
            count: matches.len(),
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Existence {
    ExampleKnown,
    Open,
}

impl Existence {
    pub fn as_str(self) -> &'static str {
        match self {
            Existence::ExampleKnown => "example known",
            Existence::Open => "existence open",
        }
    }
}

impl fmt::Display for Existence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

const SIGMA_EXAMPLE: &str = "y^2 = x(x^2 + t^3 (t^2 - c)^2) with (x, y, t) -> (-i x, ζ8 y, -t)";
const SIGMA_TAU_EXAMPLE: &str = "the same surface, σ composed with translation by the 2-torsion section (0, 0)";

/// Realized profiles and a description of the realizing automorphism.
fn known_example(columns: [u32; 7]) -> Option<&'static str> {
    match columns {
        [1, 1, 13, 3, 10, 1, 0] => Some(SIGMA_EXAMPLE),
        [1, 1, 9, 7, 4, 0, 1] => Some(SIGMA_TAU_EXAMPLE),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedProfile {
    pub profile: FixedLocusProfile,
    pub square: Order4Row,
    pub existence: Existence,
    pub example: Option<&'static str>,
}

impl ClassifiedProfile {
    pub fn new(profile: FixedLocusProfile) -> Result<Self, EnumeratorError> {
        let square = square_row(&profile)?;
        let example = known_example(profile.columns());
        let existence = if example.is_some() {
            Existence::ExampleKnown
        } else {
            Existence::Open
        };
        Ok(ClassifiedProfile {
            profile,
            square,
            existence,
            example,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let p = &self.profile;
        let (_, fourth) = power_invariants(&p.ranks);
        json!({
            "m1": p.ranks.m1,
            "m": p.ranks.m,
            "r": p.ranks.r,
            "l": p.ranks.l,
            "N": p.n(),
            "k": p.k,
            "a": p.a,
            "n27": p.points.n27,
            "n36": p.points.n36,
            "n45": p.points.n45,
            "alpha": p.alpha,
            "ns_rank": ns_rank(p),
            "sigma2": {
                "m": self.square.m,
                "r": self.square.r,
                "l": self.square.l,
                "N": self.square.n,
                "k": self.square.k,
                "a": self.square.a_gamma,
            },
            "sigma4": { "r": fourth.r, "l": fourth.l },
            "existence": self.existence.as_str(),
            "example": self.example,
        })
    }
}

pub fn classify_annotated() -> Result<Vec<ClassifiedProfile>, EnumeratorError> {
    classify_order8().into_iter().map(ClassifiedProfile::new).collect()
}

/// Aligned text table with columns m1, m, r, l, N, k, a, existence.
pub fn render_table(rows: &[ClassifiedProfile]) -> String {
    let header = ["m1", "m", "r", "l", "N", "k", "a"];
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, value) in widths.iter_mut().zip(row.profile.columns()) {
            *w = (*w).max(value.to_string().len());
        }
    }
    let mut out = String::new();
    for (h, w) in header.iter().zip(&widths) {
        out.push_str(&format!("{h:>w$}  "));
    }
    out.push_str("existence\n");
    for row in rows {
        for (value, w) in row.profile.columns().iter().zip(&widths) {
            out.push_str(&format!("{value:>w$}  "));
        }
        out.push_str(row.existence.as_str());
        out.push('\n');
    }
    out
}

pub fn render_json(rows: &[ClassifiedProfile]) -> serde_json::Value {
    serde_json::Value::Array(rows.iter().map(ClassifiedProfile::to_json).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(ranks: (u32, u32, u32, u32), points: (u32, u32, u32), k: u32, a: u32) -> FixedLocusProfile {
        let ranks = EigenRankVector {
            r: ranks.0,
            l: ranks.1,
            m: ranks.2,
            m1: ranks.3,
        };
        FixedLocusProfile::rational(ranks, PointCounts::new(points.0, points.1, points.2), k, a)
    }

    #[test]
    fn power_invariant_examples() {
        let (sq, fourth) = power_invariants(&EigenRankVector::new(13, 3, 1, 1).unwrap());
        assert_eq!((sq.r, sq.l, sq.m), (16, 2, 2));
        assert_eq!((fourth.r, fourth.l), (18, 4));

        let id = EigenRankVector::new(22, 0, 0, 0).unwrap();
        assert_eq!(power_invariants(&id), (id, id));

        let (sq, fourth) = power_invariants(&EigenRankVector::new(6, 4, 2, 2).unwrap());
        assert_eq!((sq.r, sq.l, sq.m), (10, 4, 4));
        assert_eq!((fourth.r, fourth.l), (14, 8));
        assert!(sq.is_valid() && fourth.is_valid());
    }

    #[test]
    fn rank_vector_validation() {
        assert!(EigenRankVector::new(0, 22, 0, 0).is_err());
        assert!(EigenRankVector::new(9, 6, 1, 1).is_err());
    }

    #[test]
    fn lefschetz_examples() {
        assert!(lefschetz_check(&profile((13, 3, 1, 1), (3, 3, 4), 1, 0)));
        assert!(lefschetz_check(&profile((9, 7, 1, 1), (1, 1, 2), 0, 1)));
        assert!(!lefschetz_check(&profile((9, 6, 1, 1), (1, 1, 2), 0, 1)));
    }

    #[test]
    fn rational_constraint_examples() {
        assert!(rational_fix4_constraints(&profile((13, 3, 1, 1), (3, 3, 4), 1, 0)));
        assert!(!rational_fix4_constraints(&profile((13, 3, 1, 1), (2, 1, 2), 0, 0)));
        assert!(!rational_fix4_constraints(&profile((13, 3, 1, 1), (1, 1, 3), 0, 0)));
        let mut p = profile((13, 3, 1, 1), (3, 3, 4), 1, 0);
        p.alpha = 0;
        assert!(!rational_fix4_constraints(&p));
    }

    #[test]
    fn k_sigma2_examples() {
        assert_eq!(k_sigma2(&profile((13, 3, 1, 1), (3, 3, 4), 1, 0)), Ok(3));
        assert_eq!(k_sigma2(&profile((9, 7, 1, 1), (1, 1, 2), 0, 1)), Ok(3));
        assert_eq!(k_sigma2(&profile((6, 4, 2, 2), (1, 1, 2), 0, 0)), Ok(1));
        assert_eq!(
            k_sigma2(&profile((6, 4, 2, 2), (1, 1, 3), 0, 0)),
            Err(EnumeratorError::OddN45(3))
        );
    }

    #[test]
    fn classification_rows() {
        let rows: Vec<[u32; 7]> = classify_order8().iter().map(|p| p.columns()).collect();
        assert_eq!(
            rows,
            vec![
                [1, 1, 13, 3, 10, 1, 0],
                [2, 2, 6, 4, 4, 0, 0],
                [1, 1, 9, 7, 4, 0, 1],
                [1, 3, 7, 5, 4, 0, 0],
            ]
        );
    }

    #[test]
    fn ns_ranks() {
        let ranks: Vec<u32> = classify_order8().iter().map(ns_rank).collect();
        assert_eq!(ranks, vec![18, 14, 18, 18]);
    }

    #[test]
    fn every_profile_squares_to_an_allowed_row() {
        let allowed = [(16, 2, 2, 10, 3, 0), (10, 4, 4, 6, 1, 0), (12, 2, 6, 6, 1, 2)];
        for p in classify_order8() {
            let row = square_row(&p).unwrap();
            let key = (row.r, row.m, row.l, row.n, row.k, row.a_gamma);
            assert!(allowed.contains(&key), "{p} -> {row:?}");
            let (sq, _) = power_invariants(&p.ranks);
            assert!(sq.l % 2 == 0 && sq.m % 2 == 0);
            assert!(p.n().is_multiple_of(2) && p.points.n27 == p.points.n36);
        }
    }

    #[test]
    fn composition_with_translation_shares_the_square() {
        // (σ∘τ)² = σ², and σ∘τ has four isolated fixed points
        let rows = classify_annotated().unwrap();
        let sigma = &rows[0];
        let composed = &rows[2];
        assert_eq!(composed.profile.n(), 4);
        assert_eq!(sigma.square, composed.square);
    }

    #[test]
    fn existence_annotations() {
        let rows = classify_annotated().unwrap();
        let flags: Vec<Existence> = rows.iter().map(|r| r.existence).collect();
        assert_eq!(
            flags,
            vec![
                Existence::ExampleKnown,
                Existence::Open,
                Existence::ExampleKnown,
                Existence::Open
            ]
        );
    }

    #[test]
    fn table_rendering() {
        let text = render_table(&classify_annotated().unwrap());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[0].starts_with("m1"));
        let first: Vec<&str> = lines[1].split_whitespace().collect();
        assert_eq!(&first[..7], ["1", "1", "13", "3", "10", "1", "0"]);
        assert!(lines[2].ends_with("existence open"));
    }

    #[test]
    fn json_rendering() {
        let value = render_json(&classify_annotated().unwrap());
        let rows = value.as_array().unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[0]["N"], 10);
        assert_eq!(rows[0]["sigma2"]["k"], 3);
        assert_eq!(rows[1]["ns_rank"], 14);
    }
}
