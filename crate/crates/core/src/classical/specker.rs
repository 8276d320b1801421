use crate::error::{Error, Result};
use crate::polytope::{membership, rational_from_f64, rational_to_f64, HRepresentation, Region};
use crate::quantum::{singlet_correlation, Direction};

/// `arccos((√5 − 1)/2)`: beyond this angle the singlet stops violating the
/// all-plus three-observable facet.
pub fn singlet_threshold() -> f64 {
    ((5f64.sqrt() - 1.0) / 2.0).acos()
}

/// Membership of a (floating-point) correlation tuple in a polytope.
#[derive(Debug, Clone, PartialEq)]
pub struct SpeckerReport {
    pub margins: Vec<f64>,
    pub region: Region,
    /// Index of the facet with the smallest margin; the first one on ties.
    pub worst_facet: usize,
    pub worst_margin: f64,
}

impl SpeckerReport {
    pub fn violated(&self) -> bool {
        self.region == Region::Outside
    }
}

/// Margins `a·x + b` of `correlations` against every facet of `h`.
///
/// The inputs are converted to their exact binary rational values, so the
/// region is decided without rounding.
pub fn specker_check(correlations: &[f64], h: &HRepresentation) -> Result<SpeckerReport> {
    let point = correlations
        .iter()
        .map(|&x| rational_from_f64(x))
        .collect::<Result<Vec<_>>>()?;
    let report = membership(h, &point)?;
    let (worst_facet, worst) = report
        .worst()
        .ok_or_else(|| Error::Domain("polytope has no facets".into()))?;
    Ok(SpeckerReport {
        margins: report.margins.iter().map(rational_to_f64).collect(),
        region: report.region,
        worst_facet,
        worst_margin: rational_to_f64(worst),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingletProfile {
    pub theta: f64,
    /// Singlet values of `E(X,Y)`, `E(X,Z)`, `E(Y,Z)` at planar angles `0, θ, 2θ`.
    pub correlations: [f64; 3],
    /// `E(X,Y) + E(X,Z) + E(Y,Z) = −2cosθ − cos2θ`.
    pub sz_sum: f64,
    /// `sz_sum < −1`.
    pub classical_violated: bool,
}

pub fn singlet_sz_profile(theta: f64) -> Result<SingletProfile> {
    if !(theta >= 0.0) || !theta.is_finite() {
        return Err(Error::Domain(format!("angle {theta} must be finite and non-negative")));
    }
    let [x, y, z] = [0.0, theta, 2.0 * theta].map(Direction::planar);
    let correlations = [
        singlet_correlation(x, y),
        singlet_correlation(x, z),
        singlet_correlation(y, z),
    ];
    let sz_sum: f64 = correlations.iter().sum();
    Ok(SingletProfile {
        theta,
        correlations,
        sz_sum,
        classical_violated: sz_sum < -1.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{dd_hull, enumerate_vertices, Scenario};
    use std::f64::consts::FRAC_PI_2;

    fn sz() -> HRepresentation {
        dd_hull(&enumerate_vertices(&Scenario::suppes_zanotti()).unwrap()).unwrap()
    }

    #[test]
    fn perfect_anticorrelation_is_outside() {
        let r = specker_check(&[-1.0, -1.0, -1.0], &sz()).unwrap();
        assert!(r.violated());
        assert_eq!((r.worst_facet, r.worst_margin), (0, -2.0));
    }

    #[test]
    fn vertex_is_on_the_boundary() {
        let r = specker_check(&[-1.0, -1.0, 1.0], &sz()).unwrap();
        assert_eq!(r.region, Region::Boundary);
        assert_eq!(r.worst_margin, 0.0);
    }

    #[test]
    fn singlet_point_at_small_angle() {
        let p = singlet_sz_profile(0.2).unwrap();
        let r = specker_check(&p.correlations, &sz()).unwrap();
        assert!(r.violated());
        let expected = 1.0 - 2.0 * 0.2f64.cos() - 0.4f64.cos();
        assert!((r.worst_margin - expected).abs() < 1e-12);
        assert!((expected + 1.881).abs() < 1e-3);
        assert!(specker_check(&[0.0, 0.0], &sz()).is_err());
    }

    #[test]
    fn profile_examples() {
        let zero = singlet_sz_profile(0.0).unwrap();
        assert_eq!(zero.sz_sum, -3.0);
        assert!(zero.classical_violated);
        let t = singlet_threshold();
        assert!((t - 0.904557).abs() < 1e-6);
        assert!((singlet_sz_profile(t).unwrap().sz_sum + 1.0).abs() < 1e-12);
        let right = singlet_sz_profile(FRAC_PI_2).unwrap();
        assert!((right.sz_sum - 1.0).abs() < 1e-12);
        assert!(!right.classical_violated);
        assert!(singlet_sz_profile(-0.1).is_err());
    }
}
