//! Symbolic and numerical toolkit for polynomial vector fields whose orbits
//! tend to the origin with a prescribed accumulation-of-secants set.
//!
//! Starting from a planar polynomial `h` whose zero set meets the unit disk
//! in a curve Γ, the crate builds a three-variable surface polynomial whose
//! positive level slices converge to Γ, assembles the associated chart and
//! ambient vector fields together with their integer exponent ledger, checks
//! the exact identities relating them (tangency, strict transform, singular
//! set), and integrates the chart field to observe the secant curve settling
//! onto the spherical image of Γ.
//!
//! All symbolic computation is exact over the rationals; floating point
//! enters only in contour extraction, root refinement, and orbit integration.

pub mod adapted;
pub mod blowup;
pub mod contour;
pub mod dynamics;
pub mod fields;
pub mod geometry;
pub mod integrate;
pub mod levelsets;
pub mod parser;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod roots;
pub mod svg;

pub use poly::{Poly, Var};
pub use rational::Rat;
