//! Quantum ranges of correlation expressions: a Hermitian eigensolver, facet
//! operators and their extreme eigenvalues, a direction optimizer, and the
//! closed-form spectra of the three- and four-observable examples.

mod bounds;
mod eigh;
mod optimize;
mod pair_states;
mod subspace;
pub mod sz;
mod tsirelson;

pub use bounds::{facet_operator, quantum_bound, BoundProblem, BoundReport};
pub use eigh::{eigh, eigvalsh, EigenSystem, MAX_EIGH_DIMENSION, MAX_SWEEPS, OFF_DIAGONAL_TOLERANCE};
pub use optimize::{optimize_angles, Optimum, SearchMode, GRID_STEP, MAX_ITERATIONS, MIN_STEP};
pub use pair_states::{max_reference, min_reference, pair_extremal_states, PairExtremalStates};
pub use subspace::{projector_distance, projector_onto, residual_outside};
pub use sz::{sz_spectrum, SzSpectrum};
pub use tsirelson::{chsh_facet, reference_vectors, tsirelson_eigenstates, TsirelsonEigenstates, TSIRELSON_BOUND};
