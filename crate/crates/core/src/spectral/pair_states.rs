use crate::error::Result;
use crate::quantum::{correlation_operator, Direction, PureState};

use super::eigh::eigh;
use super::subspace::{projector_distance, projector_onto, real_vector};

/// Spanning vectors of the `−1` eigenspace of `F(θ,0; 0,0)` in their
/// unnormalized closed form: `(0, cosθ+1, 0, sinθ)` and `(cosθ−1, 0, sinθ, 0)`.
pub fn min_reference(theta: f64) -> [[f64; 4]; 2] {
    let (s, c) = theta.sin_cos();
    [[0.0, c + 1.0, 0.0, s], [c - 1.0, 0.0, s, 0.0]]
}

/// Spanning vectors of the `+1` eigenspace: `(0, cosθ−1, 0, sinθ)` and `(cosθ+1, 0, sinθ, 0)`.
pub fn max_reference(theta: f64) -> [[f64; 4]; 2] {
    let (s, c) = theta.sin_cos();
    [[0.0, c - 1.0, 0.0, s], [c + 1.0, 0.0, s, 0.0]]
}

// Half-angle forms of the same rays; these never vanish (the closed forms
// above lose a vector at θ = 0 and θ = π).
fn min_half_angle(theta: f64) -> [[f64; 4]; 2] {
    let (s, c) = (theta / 2.0).sin_cos();
    [[0.0, c, 0.0, s], [-s, 0.0, c, 0.0]]
}

fn max_half_angle(theta: f64) -> [[f64; 4]; 2] {
    let (s, c) = (theta / 2.0).sin_cos();
    [[0.0, -s, 0.0, c], [c, 0.0, s, 0.0]]
}

#[derive(Debug, Clone)]
pub struct PairExtremalStates {
    pub theta: f64,
    /// Orthonormal basis of the `⟨X,Y⟩ = −1` eigenspace.
    pub min_states: [PureState; 2],
    /// Orthonormal basis of the `⟨X,Y⟩ = +1` eigenspace.
    pub max_states: [PureState; 2],
    pub min_values: [f64; 2],
    pub max_values: [f64; 2],
    /// Projector distance between computed and closed-form `−1` eigenspaces.
    pub min_distance: f64,
    pub max_distance: f64,
}

/// Eigenstates of `F(θ,0; 0,0)` grouped by eigenvalue and checked against
/// the closed-form spans.
pub fn pair_extremal_states(theta: f64) -> Result<PairExtremalStates> {
    let op = correlation_operator(Direction::planar(theta), Direction::planar(0.0));
    let es = eigh(&op)?;
    let span = |vs: [[f64; 4]; 2]| projector_onto(&vs.map(|v| real_vector(&v)));
    let min_distance = projector_distance(&es.projector(&[0, 1]), &span(min_half_angle(theta)));
    let max_distance = projector_distance(&es.projector(&[2, 3]), &span(max_half_angle(theta)));
    let v = es.values();
    Ok(PairExtremalStates {
        theta,
        min_states: [es.state(0), es.state(1)],
        max_states: [es.state(2), es.state(3)],
        min_values: [v[0], v[1]],
        max_values: [v[2], v[3]],
        min_distance,
        max_distance,
    })
}
