//! Correlation polytopes in exact arithmetic.
//!
//! A [`Scenario`] lists dichotomic observables and the products of them that
//! are recorded. [`enumerate_vertices`] evaluates those products on every
//! deterministic ±1 assignment, and [`dd_hull`] turns the resulting vertex set
//! into its facet inequalities.

mod dd;
pub mod exact;
mod facet;
mod scenario;
mod vertices;

pub use dd::dd_hull;
pub use facet::{
    membership, rational_from_f64, rational_to_f64, Facet, HRepresentation, MembershipReport,
    Region,
};
pub use scenario::Scenario;
pub use vertices::{
    affine_dimension, enumerate_vertices, linear_rank, VRepresentation,
    MAX_ENUMERATED_OBSERVABLES,
};

/// Arbitrary-precision fraction, always in lowest terms with positive denominator.
pub type Rational = num::BigRational;
