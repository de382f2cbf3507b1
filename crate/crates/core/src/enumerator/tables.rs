//! Classification data used as external inputs: the order-4 rows for the
//! all-rational case and the admissible (r, a, δ) invariants of
//! non-symplectic involutions.

use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

pub const ORDER4_JSON: &str = include_str!("../../data/order4_rational.json");
pub const INVOLUTION_JSON: &str = include_str!("../../data/involution_lattices.json");

/// Invariants of an order-4 purely non-symplectic automorphism γ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Order4Row {
    /// Multiplicity of the eigenvalue i (and of −i).
    pub m: u32,
    pub r: u32,
    pub l: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub k: u32,
    pub a_gamma: u32,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
pub struct Order4Table {
    pub description: String,
    pub source: String,
    pub rows: Vec<Order4Row>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub r: u32,
    pub a: u32,
    pub delta: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialLatticeEntry {
    pub name: String,
    pub r: u32,
    pub a: u32,
    pub delta: u8,
    pub fixed_locus: String,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
pub struct InvolutionTable {
    pub description: String,
    pub source: String,
    pub special: Vec<SpecialLatticeEntry>,
    pub points: Vec<LatticePoint>,
}

static ORDER4: LazyLock<Order4Table> =
    LazyLock::new(|| serde_json::from_str(ORDER4_JSON).expect("embedded order-4 table parses"));

static INVOLUTIONS: LazyLock<InvolutionTable> =
    LazyLock::new(|| serde_json::from_str(INVOLUTION_JSON).expect("embedded involution table parses"));

pub fn order4_table() -> &'static Order4Table {
    &ORDER4
}

pub fn order4_rows() -> &'static [Order4Row] {
    &ORDER4.rows
}

pub fn involution_table() -> &'static InvolutionTable {
    &INVOLUTIONS
}

pub fn involution_points() -> &'static [LatticePoint] {
    &INVOLUTIONS.points
}
