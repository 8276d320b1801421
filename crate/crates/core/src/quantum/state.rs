use std::f64::consts::FRAC_1_SQRT_2;

use num::complex::Complex64;

use super::matrix::ComplexMatrix;
use super::operators::Direction;
use crate::error::{Error, Result};

/// Imaginary residue of `<ψ|A|ψ>` tolerated for a Hermitian `A`.
pub const EXPECTATION_IMAG_TOLERANCE: f64 = 1e-10;

/// Normalized state vector.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Normalizes `amplitudes`; fails on an empty or zero vector.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::Domain("state vector is empty".into()));
        }
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Domain("state vector has non-finite amplitudes".into()));
        }
        let norm = norm(&amplitudes);
        if norm == 0.0 {
            return Err(Error::Domain("state vector is zero".into()));
        }
        Ok(Self {
            amplitudes: amplitudes.into_iter().map(|z| z / norm).collect(),
        })
    }

    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::new(amplitudes.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn dimension(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amplitudes)
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &PureState) -> Complex64 {
        inner(&self.amplitudes, &other.amplitudes)
    }
}

pub(crate) fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub(crate) fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `|Ψ−⟩ = (0, 1, −1, 0)/√2`.
pub fn singlet_state() -> PureState {
    let h = FRAC_1_SQRT_2;
    PureState {
        amplitudes: vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(h, 0.0),
            Complex64::new(-h, 0.0),
            Complex64::new(0.0, 0.0),
        ],
    }
}

/// `⟨ψ|A|ψ⟩` for Hermitian `A`.
pub fn expectation(state: &PureState, op: &ComplexMatrix) -> Result<f64> {
    op.ensure_hermitian()?;
    if op.cols() != state.dimension() {
        return Err(Error::DimensionMismatch {
            expected: op.cols(),
            found: state.dimension(),
        });
    }
    let value = inner(&state.amplitudes, &op.apply(&state.amplitudes));
    if value.im.abs() > EXPECTATION_IMAG_TOLERANCE {
        return Err(Error::NotHermitian(value.im.abs()));
    }
    Ok(value.re)
}

/// Singlet prediction `−[cosθ₁cosθ₂ + cos(φ₁−φ₂) sinθ₁ sinθ₂]`.
pub fn singlet_correlation(d1: Direction, d2: Direction) -> f64 {
    let (s1, c1) = d1.theta().sin_cos();
    let (s2, c2) = d2.theta().sin_cos();
    -(c1 * c2 + (d1.phi() - d2.phi()).cos() * s1 * s2)
}
