//! Exact computations around purely non-symplectic automorphisms of order 8
//! on K3 surfaces.
//!
//! The crate has two halves. The lattice-theoretic half ([`enumerator`])
//! derives every admissible invariant profile of such an automorphism whose
//! fourth power fixes only smooth rational curves, and checks the derivation
//! against an exhaustive scan. The geometric half ([`poly`], [`kodaira`],
//! [`automorphism`]) analyzes jacobian elliptic K3 fibrations in Weierstrass
//! form: singular fibers, diagonal automorphisms, their action on the
//! holomorphic 2-form, and translation by a 2-torsion section.
//!
//! All arithmetic is exact. Coefficients live in ℚ or in ℚ(ζ₈)
//! ([`cyclotomic`]); finite fields only appear as a sampling backend for
//! checking rational maps.

pub mod automorphism;
pub mod cli;
pub mod cyclotomic;
pub mod enumerator;
pub mod kodaira;
pub mod poly;
pub mod rational;

pub use cyclotomic::Zeta8;
pub use poly::{Place, Poly, QPoly, Valuation};
pub use rational::Q;
