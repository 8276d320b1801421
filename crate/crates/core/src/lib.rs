//! Correlation polytopes of ±1 observables and quantum bounds on their facets.
//!
//! [`polytope`] enumerates the deterministic vertices of a scenario and
//! computes its facets exactly. [`spectral`] turns a facet into a two-qubit
//! operator and finds its extreme eigenvalues, optionally optimizing the
//! measurement directions. [`classical`] holds urn models and the
//! three-observable membership test; [`quantum`] the matrices and states.
//! The `corrpoly` binary is a thin wrapper over [`cli`].

pub mod classical;
pub mod cli;
pub mod error;
pub mod polytope;
pub mod quantum;
pub mod rng;
pub mod spectral;

pub use error::{Error, Result};
