//! Locating an angle convention in which the extremal CHSH eigenvectors are
//! `(−1, 1, 1, 1)/2` and `(−1, −1, −1, 1)/2`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::polytope::{Facet, Scenario};
use crate::quantum::{expectation, Direction, PureState};

use super::bounds::BoundProblem;
use super::eigh::eigh;
use super::subspace::residual_outside;
use super::sz::CLUSTER_TOLERANCE;

pub const CONVENTION_GRID_STEPS: usize = 16;
pub const CONVENTION_TOLERANCE: f64 = 1e-6;
/// `2√2`.
pub const TSIRELSON_BOUND: f64 = 2.0 * std::f64::consts::SQRT_2;

pub fn reference_vectors() -> [PureState; 2] {
    [
        PureState::from_real(&[-1.0, 1.0, 1.0, 1.0]).expect("nonzero"),
        PureState::from_real(&[-1.0, -1.0, -1.0, 1.0]).expect("nonzero"),
    ]
}

/// `E(W,Y) + E(W,Z) + E(X,Y) − E(X,Z) >= −2`.
pub fn chsh_facet() -> Facet {
    Facet::from_integers(2, &[1, 1, 1, -1])
}

#[derive(Debug, Clone)]
pub struct TsirelsonEigenstates {
    /// Planar angles of W, X, Y, Z.
    pub angles: [f64; 4],
    pub lambda_min: f64,
    pub lambda_max: f64,
    /// Reference vector lying in the minimal eigenspace.
    pub state_min: PureState,
    pub state_max: PureState,
    /// Which reference vector (0 or 1) is the minimizer.
    pub min_reference_index: usize,
    pub expectation_min: f64,
    pub expectation_max: f64,
    pub residual_min: f64,
    pub residual_max: f64,
    /// Grid points visited before the match, including it.
    pub evaluated: usize,
}

/// Scans planar angles `kπ/8` for W, X, Y, Z (W outermost) and returns the
/// first setting where the operator reaches `∓2√2` and the extremal
/// eigenspaces contain the reference vectors.
///
/// Settings with a smaller range are skipped: at e.g. `W = X = Z = 0,
/// Y = π/2` the operator is `2σ_z⊗σ_x`, whose fourfold-degenerate `±2`
/// eigenspaces contain both vectors trivially.
pub fn tsirelson_eigenstates() -> Result<TsirelsonEigenstates> {
    let problem = BoundProblem::new(&chsh_facet(), &Scenario::chsh())?;
    let refs = reference_vectors();
    let step = 2.0 * PI / CONVENTION_GRID_STEPS as f64;
    let mut best = f64::INFINITY;
    let n = CONVENTION_GRID_STEPS;
    for idx in 0..n.pow(4) {
        let k = [idx / (n * n * n), idx / (n * n) % n, idx / n % n, idx % n];
        let angles = k.map(|k| k as f64 * step);
        let dirs = angles.map(Direction::planar);
        let op = problem.operator(&dirs)?;
        let es = eigh(&op)?;
        if (es.max() - TSIRELSON_BOUND).abs() > 1e-9 || (es.min() + TSIRELSON_BOUND).abs() > 1e-9 {
            continue;
        }
        let p_min = es.projector(&es.eigenspace(es.min(), CLUSTER_TOLERANCE));
        let p_max = es.projector(&es.eigenspace(es.max(), CLUSTER_TOLERANCE));
        let res = |p, s: &PureState| residual_outside(p, s.amplitudes());
        let straight = res(&p_min, &refs[0]).max(res(&p_max, &refs[1]));
        let crossed = res(&p_min, &refs[1]).max(res(&p_max, &refs[0]));
        let (min_index, residual) = if straight <= crossed { (0, straight) } else { (1, crossed) };
        best = best.min(residual);
        if residual <= CONVENTION_TOLERANCE {
            let (state_min, state_max) = (refs[min_index].clone(), refs[1 - min_index].clone());
            return Ok(TsirelsonEigenstates {
                angles,
                lambda_min: es.min(),
                lambda_max: es.max(),
                expectation_min: expectation(&state_min, &op)?,
                expectation_max: expectation(&state_max, &op)?,
                residual_min: res(&p_min, &state_min),
                residual_max: res(&p_max, &state_max),
                state_min,
                state_max,
                min_reference_index: min_index,
                evaluated: idx + 1,
            });
        }
    }
    Err(Error::ConventionNotFound(best))
}
