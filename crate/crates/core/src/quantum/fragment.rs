//! Classical "bomb fragment" correlations and their deviation from the singlet.
//!
//! Each run draws a hidden planar angle λ uniformly from `[0, 2π)`. One side
//! reports `sign(cos λ)`, the other `-sign(cos(λ - θ))`. The two signs
//! disagree on a set of measure `2θ`, which gives `E(θ) = -1 + 2θ/π`.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::rng::SplitMix64;

fn check_angle(theta: f64) -> Result<()> {
    if (0.0..=PI).contains(&theta) {
        Ok(())
    } else {
        Err(Error::Domain(format!("angle {theta} outside [0, π]")))
    }
}

/// `E(θ) = −1 + 2θ/π` on `[0, π]`.
pub fn fragment_correlation(theta: f64) -> Result<f64> {
    check_angle(theta)?;
    Ok(-1.0 + 2.0 * theta / PI)
}

fn sign(x: f64) -> f64 {
    if x >= 0.0 {
        1.0
    } else {
        -1.0
    }
}

/// Empirical mean of `A·B` over `samples` draws of the fragment model.
pub fn fragment_monte_carlo(theta: f64, samples: u64, rng: &mut SplitMix64) -> Result<f64> {
    check_angle(theta)?;
    if samples == 0 {
        return Err(Error::Domain("sample count must be positive".into()));
    }
    let mut total = 0i64;
    for _ in 0..samples {
        let lambda = rng.uniform(0.0, TAU);
        let a = sign(lambda.cos());
        let b = -sign((lambda - theta).cos());
        total += (a * b) as i64;
    }
    Ok(total as f64 / samples as f64)
}

/// `D(θ) = E(θ) − F(θ) = −1 + 2θ/π + cos θ`, fragment minus singlet.
pub fn deviation(theta: f64) -> f64 {
    -1.0 + 2.0 * theta / PI + theta.cos()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeviationExtrema {
    pub theta_low: f64,
    pub theta_high: f64,
    /// `√(1 − (2/π)²) − (2/π)·arccos(2/π)`.
    pub max_abs_deviation: f64,
    pub deviation_low: f64,
    pub deviation_high: f64,
    /// Largest `|D|` found on a uniform grid of [`DEVIATION_SCAN_POINTS`] points.
    pub scan_max_abs: f64,
    pub scan_argmax: f64,
}

pub const DEVIATION_SCAN_POINTS: usize = 200_001;

/// Stationary points of `D(θ)` on `[0, π]` and the extremal magnitude,
/// cross-checked against a dense scan.
pub fn deviation_extrema() -> DeviationExtrema {
    let ratio = 2.0 / PI;
    let theta_low = ratio.asin();
    let theta_high = PI - theta_low;
    let max_abs_deviation = (1.0 - ratio * ratio).sqrt() - ratio * ratio.acos();

    let (scan_argmax, scan_max_abs) = (0..DEVIATION_SCAN_POINTS)
        .map(|k| {
            let theta = PI * k as f64 / (DEVIATION_SCAN_POINTS - 1) as f64;
            (theta, deviation(theta).abs())
        })
        .fold((0.0, f64::NEG_INFINITY), |best, cur| {
            if cur.1 > best.1 {
                cur
            } else {
                best
            }
        });

    DeviationExtrema {
        theta_low,
        theta_high,
        max_abs_deviation,
        deviation_low: deviation(theta_low),
        deviation_high: deviation(theta_high),
        scan_max_abs,
        scan_argmax,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn correlation_endpoints() {
        assert_eq!(fragment_correlation(0.0).unwrap(), -1.0);
        assert_eq!(fragment_correlation(PI).unwrap(), 1.0);
        assert!(fragment_correlation(PI / 2.0).unwrap().abs() < 1e-15);
        assert!(fragment_correlation(-0.1).is_err());
        assert!(fragment_correlation(3.2).is_err());
    }

    #[test]
    fn monte_carlo_zero_angle_is_exact() {
        let mut rng = SplitMix64::new(11);
        assert_eq!(fragment_monte_carlo(0.0, 100_000, &mut rng).unwrap(), -1.0);
        assert!(fragment_monte_carlo(0.5, 0, &mut rng).is_err());
    }

    #[test]
    fn monte_carlo_quarter_angle() {
        let n = 1_000_000;
        let mut rng = SplitMix64::new(2024);
        let est = fragment_monte_carlo(FRAC_PI_4, n, &mut rng).unwrap();
        assert!((est + 0.5).abs() <= 5.0 / (n as f64).sqrt());
    }

    #[test]
    fn extrema_values() {
        let ext = deviation_extrema();
        // arcsin(2/π) and the closed form, evaluated independently at 30 digits
        assert!((ext.theta_low - 0.690_107_091_374_540).abs() < 1e-12);
        assert!((ext.max_abs_deviation - 0.210_513_662_353_019).abs() < 1e-12);
        assert!((ext.deviation_low + ext.deviation_high).abs() < 1e-10);
        assert!((ext.deviation_low.abs() - ext.max_abs_deviation).abs() < 1e-12);
        assert!((ext.scan_max_abs - ext.max_abs_deviation).abs() < 1e-8);
    }
}
