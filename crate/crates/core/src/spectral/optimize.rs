//! Direction search maximizing the quantum violation of a facet.
//!
//! A coarse grid over the free angles is scanned first, then the best grid
//! point is polished by a pattern search that tries `±step` along one
//! coordinate at a time and halves the step when no move helps.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polytope::{Facet, Scenario};
use crate::quantum::Direction;

use super::bounds::{BoundProblem, BoundReport};

pub const GRID_STEP: f64 = PI / 60.0;
pub const MIN_STEP: f64 = 1e-8;
pub const MAX_ITERATIONS: usize = 200;
// Gains below this (relative) are eigensolver noise, not progress.
const IMPROVEMENT_FLOOR: f64 = 1e-14;
/// Grids larger than this are coarsened uniformly per angle.
pub const MAX_GRID_POINTS: usize = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// All directions in the x-z plane; the first observable is pinned at θ = 0.
    Planar,
    /// Planar grid, then refinement over θ and φ of every observable but the first.
    Spherical,
    /// One parameter θ ∈ [0, π]; observable k points along planar angle kθ.
    Equidistant,
}

impl SearchMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchMode::Planar => "planar",
            SearchMode::Spherical => "spherical",
            SearchMode::Equidistant => "equidistant",
        }
    }
}

impl std::str::FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "planar" => Ok(SearchMode::Planar),
            "spherical" => Ok(SearchMode::Spherical),
            "equidistant" => Ok(SearchMode::Equidistant),
            other => Err(Error::Domain(format!("unknown search mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Optimum {
    pub directions: Vec<Direction>,
    pub report: BoundReport,
    pub mode: SearchMode,
    /// Grid points per free angle actually used.
    pub grid_steps: usize,
    pub grid_points: usize,
    pub iterations: usize,
    /// Step size when refinement stopped.
    pub final_step: f64,
}

// Parameter layout: planar/spherical use (θ₀, φ₀, θ₁, φ₁, …); equidistant uses [θ].
struct Objective<'a> {
    problem: &'a BoundProblem,
    mode: SearchMode,
    n: usize,
}

impl Objective<'_> {
    fn directions(&self, p: &[f64]) -> Vec<Direction> {
        match self.mode {
            SearchMode::Equidistant => (0..self.n).map(|k| Direction::planar(k as f64 * p[0])).collect(),
            _ => p.chunks(2).map(|c| Direction::new(c[0], c[1])).collect(),
        }
    }

    // The signed excess still has slope where the violation is flat at zero.
    fn excess(&self, p: &[f64]) -> Result<f64> {
        self.problem.excess(&self.directions(p))
    }

    fn free(&self) -> Vec<usize> {
        match self.mode {
            SearchMode::Equidistant => vec![0],
            SearchMode::Planar => (1..self.n).map(|k| 2 * k).collect(),
            SearchMode::Spherical => (2..2 * self.n).collect(),
        }
    }

    fn clamp(&self, p: &mut [f64]) {
        if self.mode == SearchMode::Equidistant {
            p[0] = p[0].clamp(0.0, PI);
        }
    }
}

fn grid_steps(free: usize, full_range: usize) -> usize {
    let mut steps = full_range;
    while steps > 4 && (steps as f64).powi(free as i32) > MAX_GRID_POINTS as f64 {
        steps -= 1;
    }
    steps
}

// Larger excess wins; ties go to the lower index.
fn better(a: (f64, usize), b: (f64, usize)) -> (f64, usize) {
    if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
        b
    } else {
        a
    }
}

/// Maximizes the violation of `facet` over measurement directions.
///
/// `initial` seeds the refinement when it beats the best grid point. It is
/// ignored in equidistant mode unless it is itself equidistant.
pub fn optimize_angles(
    facet: &Facet,
    scenario: &Scenario,
    initial: Option<&[Direction]>,
    mode: SearchMode,
) -> Result<Optimum> {
    let problem = BoundProblem::new(facet, scenario)?;
    let n = problem.observables();
    let objective = Objective {
        problem: &problem,
        mode,
        n,
    };

    let (grid_free, range, full_steps): (Vec<usize>, f64, usize) = match mode {
        SearchMode::Equidistant => (vec![0], PI, 61),
        _ => ((1..n).map(|k| 2 * k).collect(), 2.0 * PI, 120),
    };
    let steps = grid_steps(grid_free.len(), full_steps);
    let step = if mode == SearchMode::Equidistant {
        range / (steps - 1) as f64
    } else {
        range / steps as f64
    };
    let dims = if mode == SearchMode::Equidistant { 1 } else { 2 * n };
    let total = steps.pow(grid_free.len() as u32);
    let point = |mut idx: usize| {
        let mut p = vec![0.0; dims];
        for &k in grid_free.iter().rev() {
            p[k] = (idx % steps) as f64 * step;
            idx /= steps;
        }
        p
    };
    let (best_excess, best_idx) = (0..total)
        .into_par_iter()
        .map(|idx| objective.excess(&point(idx)).map(|e| (e, idx)))
        .try_reduce(|| (f64::NEG_INFINITY, usize::MAX), |a, b| Ok(better(a, b)))?;

    let mut params = point(best_idx);
    let mut value = best_excess;
    if let Some(init) = initial {
        if init.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: init.len(),
            });
        }
        let candidate: Option<Vec<f64>> = match mode {
            SearchMode::Equidistant => {
                let t = init.get(1).map_or(0.0, |d| d.theta());
                let p = vec![t];
                let same = objective
                    .directions(&p)
                    .iter()
                    .zip(init)
                    .all(|(a, b)| a.cos_angle(b) > 1.0 - 1e-12);
                same.then_some(p)
            }
            _ => Some(init.iter().flat_map(|d| [d.theta(), d.phi()]).collect()),
        };
        if let Some(p) = candidate {
            let e = objective.excess(&p)?;
            if e > value {
                params = p;
                value = e;
            }
        }
    }

    let free = objective.free();
    let mut delta = GRID_STEP;
    let mut iterations = 0;
    while iterations < MAX_ITERATIONS && delta >= MIN_STEP {
        iterations += 1;
        let mut moved = false;
        for &k in &free {
            for sign in [1.0, -1.0] {
                let mut trial = params.clone();
                trial[k] += sign * delta;
                objective.clamp(&mut trial);
                let e = objective.excess(&trial)?;
                if e > value + IMPROVEMENT_FLOOR * value.abs().max(1.0) {
                    params = trial;
                    value = e;
                    moved = true;
                    break;
                }
            }
        }
        if !moved {
            delta /= 2.0;
        }
    }

    let directions = objective.directions(&params);
    let report = problem.evaluate(&directions)?;
    Ok(Optimum {
        directions,
        report,
        mode,
        grid_steps: steps,
        grid_points: total,
        iterations,
        final_step: delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equidistant_suppes_zanotti_peaks_at_zero() {
        let opt = optimize_angles(
            &Facet::from_integers(1, &[1, 1, 1]),
            &Scenario::suppes_zanotti(),
            None,
            SearchMode::Equidistant,
        )
        .unwrap();
        assert!((opt.report.violation - 2.0).abs() < 1e-9);
        assert_eq!(opt.directions[1].theta(), 0.0);
        assert!(opt.report.coincident_directions);
    }

    #[test]
    fn single_pair_is_never_violated() {
        let s = Scenario::new(2, vec![vec![0, 1]]).unwrap();
        let opt = optimize_angles(&Facet::from_integers(1, &[1]), &s, None, SearchMode::Planar).unwrap();
        assert!(opt.report.violation < 1e-12);
        assert!((opt.report.lambda_min + 1.0).abs() < 1e-12);
    }

    #[test]
    fn planar_suppes_zanotti_reaches_two() {
        let opt = optimize_angles(
            &Facet::from_integers(1, &[1, -1, -1]),
            &Scenario::suppes_zanotti(),
            None,
            SearchMode::Planar,
        )
        .unwrap();
        assert!((opt.report.violation - 2.0).abs() < 1e-9);
    }

    #[test]
    fn grid_is_coarsened_for_many_angles() {
        assert_eq!(grid_steps(3, 120), 120);
        let s = grid_steps(7, 120);
        assert!((s as f64).powi(7) <= MAX_GRID_POINTS as f64);
    }

    #[test]
    fn wrong_initial_length() {
        let dirs = [Direction::planar(0.0); 2];
        assert!(matches!(
            optimize_angles(
                &Facet::from_integers(1, &[1, 1, 1]),
                &Scenario::suppes_zanotti(),
                Some(&dirs),
                SearchMode::Planar
            ),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
