//! Two-qubit spin observables, the singlet state, and the classical fragment
//! model the singlet is compared against.

mod fragment;
mod matrix;
mod operators;
mod state;

pub use fragment::{
    deviation, deviation_extrema, fragment_correlation, fragment_monte_carlo, DeviationExtrema,
    DEVIATION_SCAN_POINTS,
};
pub use matrix::{kron, ComplexMatrix, HERMITIAN_TOLERANCE};
pub use num::complex::Complex64;
pub use operators::{
    correlation_operator, correlation_operator_from_projectors, joint_projector, pauli, projector,
    spin_operator, Axis, Direction, Outcome,
};
pub(crate) use state::{inner, norm};
pub use state::{expectation, singlet_correlation, singlet_state, PureState};
