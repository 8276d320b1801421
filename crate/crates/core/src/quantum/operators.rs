use std::f64::consts::TAU;

use num::complex::Complex64;

use super::matrix::{kron, ComplexMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// Measurement direction in spherical coordinates.
///
/// `phi` is kept in `[0, 2π)`. `theta` may be any real: planar scans set
/// `phi = 0` and let `theta` run around the full circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    theta: f64,
    phi: f64,
}

impl Direction {
    pub fn new(theta: f64, phi: f64) -> Self {
        let mut phi = phi.rem_euclid(TAU);
        if phi >= TAU {
            phi = 0.0;
        }
        Self { theta, phi }
    }

    /// Direction in the x-z plane at polar angle `theta`.
    pub fn planar(theta: f64) -> Self {
        Self::new(theta, 0.0)
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn unit_vector(&self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }

    /// Cosine of the angle between the two unit vectors.
    pub fn cos_angle(&self, other: &Direction) -> f64 {
        let a = self.unit_vector();
        let b = other.unit_vector();
        a.iter().zip(&b).map(|(x, y)| x * y).sum()
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn pauli(axis: Axis) -> ComplexMatrix {
    let data = match axis {
        Axis::X => vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
        Axis::Y => vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)],
        Axis::Z => vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)],
    };
    ComplexMatrix::from_vec(2, 2, data).expect("2x2")
}

/// `σ(θ,φ) = σx sinθ cosφ + σy sinθ sinφ + σz cosθ`.
pub fn spin_operator(d: Direction) -> ComplexMatrix {
    let [nx, ny, nz] = d.unit_vector();
    ComplexMatrix::from_vec(
        2,
        2,
        vec![c(nz, 0.0), c(nx, -ny), c(nx, ny), c(-nz, 0.0)],
    )
    .expect("2x2")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Plus,
    Minus,
}

impl Outcome {
    fn sign(self) -> f64 {
        match self {
            Outcome::Plus => 1.0,
            Outcome::Minus => -1.0,
        }
    }
}

/// Single-particle projector `S± = (I ± σ(d)) / 2`.
pub fn projector(outcome: Outcome, d: Direction) -> ComplexMatrix {
    let s = outcome.sign();
    let sigma = spin_operator(d);
    let mut p = ComplexMatrix::identity(2);
    for i in 0..2 {
        for j in 0..2 {
            p[(i, j)] = (p[(i, j)] + sigma[(i, j)] * s) * 0.5;
        }
    }
    p
}

/// Two-particle projector `S_{o1}(d1) ⊗ S_{o2}(d2)`.
pub fn joint_projector(o1: Outcome, d1: Direction, o2: Outcome, d2: Direction) -> ComplexMatrix {
    kron(&projector(o1, d1), &projector(o2, d2))
}

/// `F(d1, d2) = σ(d1) ⊗ σ(d2)`, the two-partite correlation observable.
pub fn correlation_operator(d1: Direction, d2: Direction) -> ComplexMatrix {
    kron(&spin_operator(d1), &spin_operator(d2))
}

/// The same observable assembled as `S++ + S-- - S+- - S-+`.
pub fn correlation_operator_from_projectors(d1: Direction, d2: Direction) -> ComplexMatrix {
    use Outcome::{Minus, Plus};
    let pp = joint_projector(Plus, d1, Plus, d2);
    let mm = joint_projector(Minus, d1, Minus, d2);
    let pm = joint_projector(Plus, d1, Minus, d2);
    let mp = joint_projector(Minus, d1, Plus, d2);
    &(&(&pp + &mm) - &pm) - &mp
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    const TOL: f64 = 1e-12;

    #[test]
    fn pauli_matrices() {
        assert_eq!(pauli(Axis::Z), ComplexMatrix::diagonal(&[1.0, -1.0]));
        assert_eq!(
            pauli(Axis::X),
            ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap()
        );
        let y = pauli(Axis::Y);
        assert_eq!(y[(0, 1)], c(0.0, -1.0));
        assert_eq!(y[(1, 0)], c(0.0, 1.0));
    }

    #[test]
    fn spin_operator_axes() {
        assert!(spin_operator(Direction::new(0.0, 0.0)).max_abs_diff(&pauli(Axis::Z)) < TOL);
        assert!(spin_operator(Direction::new(FRAC_PI_2, 0.0)).max_abs_diff(&pauli(Axis::X)) < TOL);
        assert!(
            spin_operator(Direction::new(FRAC_PI_2, FRAC_PI_2)).max_abs_diff(&pauli(Axis::Y)) < TOL
        );
    }

    #[test]
    fn phi_is_normalized() {
        let d = Direction::new(0.3, -FRAC_PI_2);
        assert!((d.phi() - 1.5 * PI).abs() < 1e-15);
        assert_eq!(Direction::new(0.3, TAU).phi(), 0.0);
        assert_eq!(Direction::new(0.3, -1e-300).phi(), 0.0);
    }

    #[test]
    fn projector_examples() {
        let up = projector(Outcome::Plus, Direction::planar(0.0));
        assert!(up.max_abs_diff(&ComplexMatrix::diagonal(&[1.0, 0.0])) < TOL);

        let d = Direction::new(1.234, 0.567);
        let plus = projector(Outcome::Plus, d);
        let minus = projector(Outcome::Minus, d);
        assert!((&plus + &minus).max_abs_diff(&ComplexMatrix::identity(2)) < TOL);
        let idem = &(&plus * &plus) - &plus;
        assert!(idem.max_abs_diff(&ComplexMatrix::zeros(2, 2)) < TOL);
        assert!(plus.is_hermitian());
    }

    #[test]
    fn kron_of_paulis() {
        let zz = kron(&pauli(Axis::Z), &pauli(Axis::Z));
        assert_eq!(zz, ComplexMatrix::diagonal(&[1.0, -1.0, -1.0, 1.0]));
        let xy = kron(&pauli(Axis::X), &pauli(Axis::Y));
        assert!((&xy * &xy).max_abs_diff(&ComplexMatrix::identity(4)) < TOL);
    }

    #[test]
    fn correlation_operator_examples() {
        let f = correlation_operator(Direction::planar(0.0), Direction::planar(0.0));
        assert!(f.max_abs_diff(&ComplexMatrix::diagonal(&[1.0, -1.0, -1.0, 1.0])) < TOL);

        let d1 = Direction::new(0.3, 0.7);
        let d2 = Direction::new(1.1, 2.0);
        let f = correlation_operator(d1, d2);
        let g = correlation_operator_from_projectors(d1, d2);
        assert!(f.max_abs_diff(&g) <= TOL);
        assert!(f.trace().norm() < TOL);
        assert!(f.is_hermitian());
    }
}
