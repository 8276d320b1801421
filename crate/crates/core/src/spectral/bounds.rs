use crate::error::{Error, Result};
use crate::polytope::{enumerate_vertices, rational_to_f64, Facet, Rational, Scenario};
use crate::quantum::{
    correlation_operator, expectation, singlet_state, ComplexMatrix, Direction, PureState,
};

use super::eigh::{eigh, eigvalsh, EigenSystem};

/// `Σ_k c_k F_k`.
pub fn facet_operator(coefficients: &[Rational], operators: &[ComplexMatrix]) -> Result<ComplexMatrix> {
    let weights: Vec<f64> = coefficients.iter().map(rational_to_f64).collect();
    weighted_sum(&weights, operators)
}

pub(crate) fn weighted_sum(weights: &[f64], operators: &[ComplexMatrix]) -> Result<ComplexMatrix> {
    if weights.len() != operators.len() {
        return Err(Error::DimensionMismatch {
            expected: operators.len(),
            found: weights.len(),
        });
    }
    let first = operators
        .first()
        .ok_or_else(|| Error::Domain("no operators to combine".into()))?;
    let (rows, cols) = (first.rows(), first.cols());
    let mut sum = ComplexMatrix::zeros(rows, cols);
    for (w, op) in weights.iter().zip(operators) {
        if (op.rows(), op.cols()) != (rows, cols) {
            return Err(Error::DimensionMismatch {
                expected: rows,
                found: op.rows(),
            });
        }
        sum = &sum + &op.scale(*w);
    }
    Ok(sum)
}

/// Quantum range of a facet's correlation expression against its classical range.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub state_min: PureState,
    pub state_max: PureState,
    /// `−b` for the facet `a·x + b >= 0`.
    pub classical_min: Rational,
    /// Largest value of `a·x` over the scenario's vertices.
    pub classical_max: Rational,
    /// `max(classical_min − lambda_min, lambda_max − classical_max, 0)`.
    pub violation: f64,
    /// Value of the expression in the singlet state.
    pub singlet_value: f64,
    /// Set when two observables paired by a monomial point along the same axis.
    pub coincident_directions: bool,
    pub spectrum: Vec<f64>,
}

/// Precomputed pieces for evaluating one facet at many direction settings.
#[derive(Debug, Clone)]
pub struct BoundProblem {
    facet: Facet,
    weights: Vec<f64>,
    pairs: Vec<(usize, usize)>,
    observables: usize,
    classical_min: Rational,
    classical_max: Rational,
}

impl BoundProblem {
    pub fn new(facet: &Facet, scenario: &Scenario) -> Result<Self> {
        if facet.dimension() != scenario.dimension() {
            return Err(Error::DimensionMismatch {
                expected: scenario.dimension(),
                found: facet.dimension(),
            });
        }
        let pairs = (0..scenario.dimension())
            .map(|k| scenario.pair(k))
            .collect::<Result<Vec<_>>>()?;
        let vertices = enumerate_vertices(scenario)?;
        let classical_max = vertices
            .vertices()
            .iter()
            .map(|v| facet.margin(v) - facet.offset())
            .max()
            .expect("at least one vertex");
        Ok(Self {
            facet: facet.clone(),
            weights: facet.normal_f64(),
            pairs,
            observables: scenario.observables(),
            classical_min: -facet.offset().clone(),
            classical_max,
        })
    }

    pub fn observables(&self) -> usize {
        self.observables
    }

    pub fn facet(&self) -> &Facet {
        &self.facet
    }

    pub fn operator(&self, directions: &[Direction]) -> Result<ComplexMatrix> {
        if directions.len() != self.observables {
            return Err(Error::DimensionMismatch {
                expected: self.observables,
                found: directions.len(),
            });
        }
        let ops: Vec<ComplexMatrix> = self
            .pairs
            .iter()
            .map(|&(i, j)| correlation_operator(directions[i], directions[j]))
            .collect();
        weighted_sum(&self.weights, &ops)
    }

    pub fn classical_min(&self) -> &Rational {
        &self.classical_min
    }

    pub fn classical_max(&self) -> &Rational {
        &self.classical_max
    }

    fn excess_of(&self, lambda_min: f64, lambda_max: f64) -> f64 {
        let lo = rational_to_f64(&self.classical_min) - lambda_min;
        let hi = lambda_max - rational_to_f64(&self.classical_max);
        lo.max(hi)
    }

    /// Signed distance by which the quantum range sticks out of the classical
    /// one; negative when it lies strictly inside.
    pub fn excess(&self, directions: &[Direction]) -> Result<f64> {
        let values = eigvalsh(&self.operator(directions)?)?;
        Ok(self.excess_of(values[0], values[values.len() - 1]))
    }

    pub fn violation(&self, directions: &[Direction]) -> Result<f64> {
        Ok(self.excess(directions)?.max(0.0))
    }

    pub fn evaluate(&self, directions: &[Direction]) -> Result<BoundReport> {
        let op = self.operator(directions)?;
        let es: EigenSystem = eigh(&op)?;
        let n = es.len();
        let coincident = self
            .pairs
            .iter()
            .any(|&(i, j)| directions[i].cos_angle(&directions[j]).abs() >= 1.0 - 1e-12);
        Ok(BoundReport {
            lambda_min: es.min(),
            lambda_max: es.max(),
            state_min: es.state(0),
            state_max: es.state(n - 1),
            classical_min: self.classical_min.clone(),
            classical_max: self.classical_max.clone(),
            violation: self.excess_of(es.min(), es.max()).max(0.0),
            singlet_value: expectation(&singlet_state(), &op)?,
            coincident_directions: coincident,
            spectrum: es.values().to_vec(),
        })
    }
}

/// Extreme eigenvalues of `Σ a_k F(d_i, d_j)` over the facet's monomials.
pub fn quantum_bound(facet: &Facet, directions: &[Direction], scenario: &Scenario) -> Result<BoundReport> {
    BoundProblem::new(facet, scenario)?.evaluate(directions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::{kron, pauli, Axis};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn facet_operator_examples() {
        let zz = kron(&pauli(Axis::Z), &pauli(Axis::Z));
        let sum = facet_operator(&[r(1), r(1), r(1)], &[zz.clone(), zz.clone(), zz.clone()]).unwrap();
        assert_eq!(sum, ComplexMatrix::diagonal(&[3.0, -3.0, -3.0, 3.0]));

        let xx = kron(&pauli(Axis::X), &pauli(Axis::X));
        let zero = facet_operator(&[r(1), r(-1)], &[xx.clone(), xx]).unwrap();
        assert_eq!(zero, ComplexMatrix::zeros(4, 4));

        assert!(matches!(
            facet_operator(&[r(1)], &[zz.clone(), zz.clone()]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(facet_operator(&[r(1), r(1)], &[zz, ComplexMatrix::identity(2)]).is_err());
    }

    #[test]
    fn facet_operator_at_zero_angle() {
        let t = 0.0;
        let ops = [
            correlation_operator(Direction::planar(0.0), Direction::planar(t)),
            correlation_operator(Direction::planar(0.0), Direction::planar(2.0 * t)),
            correlation_operator(Direction::planar(t), Direction::planar(2.0 * t)),
        ];
        let a = facet_operator(&[r(1), r(1), r(1)], &ops).unwrap();
        let es = eigh(&a).unwrap();
        for (v, e) in es.values().iter().zip([-3.0, -3.0, 3.0, 3.0]) {
            assert!((v - e).abs() < 1e-12);
        }
    }

    #[test]
    fn suppes_zanotti_bound_at_sixty_degrees() {
        let s = Scenario::suppes_zanotti();
        let f = Facet::from_integers(1, &[1, 1, 1]);
        let t = PI / 3.0;
        let dirs = [0.0, t, 2.0 * t].map(Direction::planar);
        let rep = quantum_bound(&f, &dirs, &s).unwrap();
        assert!((rep.lambda_min + 7f64.sqrt()).abs() < 1e-9);
        assert_eq!(rep.classical_min, r(-1));
        assert_eq!(rep.classical_max, r(3));
        assert!((rep.violation - (7f64.sqrt() - 1.0)).abs() < 1e-9);
        assert!(!rep.coincident_directions);
    }

    #[test]
    fn coincident_directions_reach_minus_three_only_for_the_all_plus_facet() {
        let s = Scenario::suppes_zanotti();
        let dirs = [Direction::planar(0.0); 3];
        let rep = quantum_bound(&Facet::from_integers(1, &[1, 1, 1]), &dirs, &s).unwrap();
        assert!((rep.lambda_min + 3.0).abs() < 1e-12);
        assert!(rep.coincident_directions);
        for normal in [[1, -1, -1], [-1, 1, -1], [-1, -1, 1]] {
            let rep = quantum_bound(&Facet::from_integers(1, &normal), &dirs, &s).unwrap();
            assert!((rep.lambda_min + 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn tsirelson_at_canonical_angles() {
        let s = Scenario::chsh();
        let f = Facet::from_integers(2, &[1, 1, 1, -1]);
        let dirs = [0.0, FRAC_PI_2, FRAC_PI_4, 7.0 * FRAC_PI_4].map(Direction::planar);
        let rep = quantum_bound(&f, &dirs, &s).unwrap();
        let t = 2.0 * 2f64.sqrt();
        assert!((rep.lambda_min + t).abs() < 1e-9);
        assert!((rep.lambda_max - t).abs() < 1e-9);
        assert!((rep.singlet_value + t).abs() < 1e-9);
        assert_eq!(rep.classical_min, r(-2));
        assert!((rep.violation - (t - 2.0)).abs() < 1e-9);
    }

    #[test]
    fn scale_equivariance() {
        let s = Scenario::suppes_zanotti();
        let dirs = [0.2, 1.3, -0.4].map(Direction::planar);
        let one = quantum_bound(&Facet::from_integers(1, &[1, -1, 1]), &dirs, &s).unwrap();
        let two = quantum_bound(&Facet::from_integers(2, &[2, -2, 2]), &dirs, &s).unwrap();
        assert!((two.lambda_min - 2.0 * one.lambda_min).abs() < 1e-12);
        assert!((two.lambda_max - 2.0 * one.lambda_max).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_pair_monomials() {
        let s = Scenario::new(3, vec![vec![0, 1, 2]]).unwrap();
        let f = Facet::from_integers(1, &[1]);
        let dirs = [Direction::planar(0.0); 3];
        assert!(matches!(
            quantum_bound(&f, &dirs, &s),
            Err(Error::UnsupportedMonomialOrder(_))
        ));
        let sz = Scenario::suppes_zanotti();
        assert!(matches!(
            quantum_bound(&f, &dirs, &sz),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
