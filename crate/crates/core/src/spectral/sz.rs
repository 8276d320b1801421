//! Spectrum of `F(0,θ) + F(0,2θ) + F(θ,2θ)`: the all-plus Suppes-Zanotti
//! expression with equidistant planar directions `0, θ, 2θ`.
//!
//! Closed forms: the two lowest branches are `μ₁ = −√(5 + 4cosθ)` and
//! `μ₂ = −(1 + 2cosθ)`, with eigenvectors along `x₁ ∝ (a, −b, b, a)` and
//! `x₂ = (−sinθ, cosθ, cosθ, sinθ)`, where `a = 2(1 + cosθ)sinθ` and
//! `b = 2cosθ + cos2θ + √(5 + 4cosθ)`. The other two eigenvalues are `−μ₁`
//! and `−μ₂`.
//!
//! The alternative form `(a, b, −b, a)` is the same vector with the
//! two tensor factors exchanged; [`sz_operator_exchanged`] is the operator
//! it belongs to.

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::quantum::{correlation_operator, ComplexMatrix, Direction};

use super::eigh::{eigh, EigenSystem};
use super::subspace::{projector_distance, projector_onto, real_vector, residual_outside};

/// Tolerance for the closed-form eigenvalues to be found in the computed spectrum.
pub const CLOSED_FORM_TOLERANCE: f64 = 1e-9;
/// Eigenvalues closer than this are grouped into one eigenspace.
pub const CLUSTER_TOLERANCE: f64 = 1e-8;

pub fn mu1(theta: f64) -> f64 {
    -(5.0 + 4.0 * theta.cos()).sqrt()
}

pub fn mu2(theta: f64) -> f64 {
    -(1.0 + 2.0 * theta.cos())
}

/// Singlet value of the expression, `−2cosθ − cos2θ`.
pub fn singlet_sum(theta: f64) -> f64 {
    -2.0 * theta.cos() - (2.0 * theta).cos()
}

fn equidistant(theta: f64) -> [Direction; 3] {
    [0.0, theta, 2.0 * theta].map(Direction::planar)
}

pub fn sz_operator(theta: f64) -> ComplexMatrix {
    let [x, y, z] = equidistant(theta);
    let sum = &correlation_operator(x, y) + &correlation_operator(x, z);
    &sum + &correlation_operator(y, z)
}

/// The same expression with the tensor factors of every term exchanged.
pub fn sz_operator_exchanged(theta: f64) -> ComplexMatrix {
    let [x, y, z] = equidistant(theta);
    let sum = &correlation_operator(y, x) + &correlation_operator(z, x);
    &sum + &correlation_operator(z, y)
}

/// `(a, b, −b, a)`, the unnormalized `μ₁` eigenvector of [`sz_operator_exchanged`].
pub fn x1_reference(theta: f64) -> [f64; 4] {
    let (s, c) = theta.sin_cos();
    let a = 2.0 * (c + 1.0) * s;
    let b = 2.0 * c + (2.0 * theta).cos() + (5.0 + 4.0 * c).sqrt();
    [a, b, -b, a]
}

/// Unit vector along `(a, −b, b, a)`, the `μ₁` eigenvector of [`sz_operator`].
///
/// Both `a` and `b` vanish as `θ → π`; they are divided by `1 + cosθ` first
/// and `b` is rationalized where `2cos²θ + 2cosθ − 1 < 0` to avoid
/// cancellation, so the limit direction `(1, 0, 0, 1)/√2` comes out cleanly.
pub fn x1(theta: f64) -> [f64; 4] {
    let (s, c) = theta.sin_cos();
    let root = (5.0 + 4.0 * c).sqrt();
    let q = 2.0 * c * c + 2.0 * c - 1.0;
    let a = 2.0 * s;
    let b = if q >= 0.0 {
        (q + root) / (1.0 + c)
    } else {
        4.0 * (1.0 - c) * (1.0 + c) * (1.0 + c) / (root - q)
    };
    let v = [a, -b, b, a];
    let len = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if len < 1e-300 {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        return [h, 0.0, 0.0, h];
    }
    v.map(|x| x / len)
}

/// `(−sinθ, cosθ, cosθ, sinθ)`, the `μ₂` eigenvector.
pub fn x2(theta: f64) -> [f64; 4] {
    let (s, c) = theta.sin_cos();
    [-s, c, c, s]
}

/// Agreement between the eigenspace of `value` and the line through `x`.
///
/// For a one-dimensional eigenspace this is the projector distance; for a
/// degenerate one, the relative component of `x` outside the eigenspace.
pub fn eigenspace_agreement(es: &EigenSystem, value: f64, x: &[f64]) -> f64 {
    let indices = es.eigenspace(value, CLUSTER_TOLERANCE);
    let p = es.projector(&indices);
    let xv: Vec<Complex64> = real_vector(x);
    if indices.len() == 1 {
        projector_distance(&p, &projector_onto(&[xv]))
    } else {
        residual_outside(&p, &xv)
    }
}

#[derive(Debug, Clone)]
pub struct SzSpectrum {
    pub theta: f64,
    pub system: EigenSystem,
    pub mu1_closed: f64,
    pub mu2_closed: f64,
    pub mu1_computed: f64,
    pub mu2_computed: f64,
    pub x1: [f64; 4],
    pub x2: [f64; 4],
    pub x1_agreement: f64,
    pub x2_agreement: f64,
    /// Set when `μ₁` or `μ₂` is a repeated eigenvalue.
    pub degenerate: bool,
}

impl SzSpectrum {
    pub fn mu1_error(&self) -> f64 {
        (self.mu1_computed - self.mu1_closed).abs()
    }

    pub fn mu2_error(&self) -> f64 {
        (self.mu2_computed - self.mu2_closed).abs()
    }
}

fn matched(es: &EigenSystem, closed: f64) -> Result<f64> {
    let (_, nearest) = es.nearest(closed);
    if (nearest - closed).abs() > CLOSED_FORM_TOLERANCE {
        return Err(Error::ClosedFormMismatch { closed, nearest });
    }
    Ok(nearest)
}

pub fn sz_spectrum(theta: f64) -> Result<SzSpectrum> {
    let system = eigh(&sz_operator(theta))?;
    let (mu1_closed, mu2_closed) = (mu1(theta), mu2(theta));
    let mu1_computed = matched(&system, mu1_closed)?;
    let mu2_computed = matched(&system, mu2_closed)?;
    let (x1, x2) = (x1(theta), x2(theta));
    let degenerate = system.eigenspace(mu1_closed, CLUSTER_TOLERANCE).len() > 1
        || system.eigenspace(mu2_closed, CLUSTER_TOLERANCE).len() > 1;
    Ok(SzSpectrum {
        theta,
        mu1_closed,
        mu2_closed,
        mu1_computed,
        mu2_computed,
        x1_agreement: eigenspace_agreement(&system, mu1_closed, &x1),
        x2_agreement: eigenspace_agreement(&system, mu2_closed, &x2),
        x1,
        x2,
        degenerate,
        system,
    })
}

/// Projector distances of the `μ₁` and `μ₂` eigenvectors from the Bell
/// states `(0,1,−1,0)/√2` and `(0,1,1,0)/√2`. Meaningful for small `θ > 0`,
/// where both eigenvalues are simple.
pub fn bell_limit_distances(theta: f64) -> Result<(f64, f64)> {
    let es = eigh(&sz_operator(theta))?;
    let singlet = projector_onto(&[real_vector(&[0.0, 1.0, -1.0, 0.0])]);
    let triplet = projector_onto(&[real_vector(&[0.0, 1.0, 1.0, 0.0])]);
    let p1 = es.projector(&es.eigenspace(mu1(theta), CLUSTER_TOLERANCE));
    let p2 = es.projector(&es.eigenspace(mu2(theta), CLUSTER_TOLERANCE));
    Ok((projector_distance(&p1, &singlet), projector_distance(&p2, &triplet)))
}
