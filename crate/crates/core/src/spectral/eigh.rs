//! Cyclic Jacobi eigensolver for dense complex Hermitian matrices.

use num::complex::Complex64;
use num::Zero;

use crate::error::{Error, Result};
use crate::quantum::{ComplexMatrix, PureState};

pub const MAX_EIGH_DIMENSION: usize = 64;
pub const MAX_SWEEPS: usize = 60;
/// Stop once the off-diagonal Frobenius norm falls below this fraction of `‖A‖_F`.
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-13;

/// Eigenvalues in ascending order with orthonormal eigenvectors stored as
/// the columns of `vectors`, column `k` belonging to `values[k]`.
///
/// Each eigenvector's largest-modulus component is real and positive (the
/// lowest index wins among near-equal moduli).
#[derive(Debug, Clone)]
pub struct EigenSystem {
    values: Vec<f64>,
    vectors: ComplexMatrix,
    sweeps: usize,
}

impl EigenSystem {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn vectors(&self) -> &ComplexMatrix {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Jacobi sweeps needed for convergence.
    pub fn sweeps(&self) -> usize {
        self.sweeps
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        self.vectors.column(k)
    }

    pub fn state(&self, k: usize) -> PureState {
        PureState::new(self.vector(k)).expect("eigenvectors are unit vectors")
    }

    /// Indices whose eigenvalue lies within `tol` of `value`.
    pub fn eigenspace(&self, value: f64, tol: f64) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&k| (self.values[k] - value).abs() <= tol)
            .collect()
    }

    /// Orthogonal projector onto the span of the listed eigenvectors.
    pub fn projector(&self, indices: &[usize]) -> ComplexMatrix {
        let n = self.vectors.rows();
        let mut p = ComplexMatrix::zeros(n, n);
        for &k in indices {
            let v = self.vector(k);
            p = &p + &ComplexMatrix::outer(&v, &v);
        }
        p
    }

    /// Eigenvalue nearest to `value`, with its index.
    pub fn nearest(&self, value: f64) -> (usize, f64) {
        self.values
            .iter()
            .copied()
            .enumerate()
            .min_by(|a, b| (a.1 - value).abs().total_cmp(&(b.1 - value).abs()))
            .expect("non-empty spectrum")
    }

    /// `V Λ V^H`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let lambda = ComplexMatrix::diagonal(&self.values);
        &(&self.vectors * &lambda) * &self.vectors.adjoint()
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Applies the unitary `G` acting on coordinates `(p, q)`: `A ← G^H A G`, `V ← V G`.
fn rotate(a: &mut ComplexMatrix, v: Option<&mut ComplexMatrix>, p: usize, q: usize, g: [[Complex64; 2]; 2]) {
    let n = a.rows();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * g[0][0] + akq * g[1][0];
        a[(k, q)] = akp * g[0][1] + akq * g[1][1];
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = g[0][0].conj() * apk + g[1][0].conj() * aqk;
        a[(q, k)] = g[0][1].conj() * apk + g[1][1].conj() * aqk;
    }
    let Some(v) = v else { return };
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * g[0][0] + vkq * g[1][0];
        v[(k, q)] = vkp * g[0][1] + vkq * g[1][1];
    }
}

/// Unitary that zeroes `a[p][q]`: a phase turning the pivot real, followed by
/// the classic real Jacobi rotation.
fn jacobi_rotation(a: &ComplexMatrix, p: usize, q: usize) -> Option<[[Complex64; 2]; 2]> {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return None;
    }
    let phase = apq / r;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + tau.hypot(1.0))
    } else {
        -1.0 / (-tau + tau.hypot(1.0))
    };
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;
    let u = phase.conj();
    Some([
        [Complex64::new(c, 0.0), Complex64::new(s, 0.0)],
        [u * -s, u * c],
    ])
}

fn fix_phase(v: &mut [Complex64]) {
    let largest = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if largest == 0.0 {
        return;
    }
    let k = v
        .iter()
        .position(|z| z.norm() >= largest * (1.0 - 1e-10))
        .expect("maximum exists");
    let rot = v[k].conj() / v[k].norm();
    for z in v.iter_mut() {
        *z *= rot;
    }
    v[k] = Complex64::new(v[k].re, 0.0);
}

// Runs Jacobi sweeps in place until `a` is numerically diagonal; returns the
// sweep count. Rotations are accumulated into `v` when given.
fn diagonalize(a: &mut ComplexMatrix, mut v: Option<&mut ComplexMatrix>) -> Result<usize> {
    let n = a.rows();
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: a.cols(),
        });
    }
    if n > MAX_EIGH_DIMENSION {
        return Err(Error::MatrixTooLarge(n));
    }
    a.ensure_hermitian()?;
    for i in 0..n {
        a[(i, i)] = Complex64::new(a[(i, i)].re, 0.0);
    }
    let threshold = OFF_DIAGONAL_TOLERANCE * a.frobenius_norm();

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(a);
        if off <= threshold {
            return Ok(sweeps);
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                if let Some(g) = jacobi_rotation(a, p, q) {
                    rotate(a, v.as_deref_mut(), p, q, g);
                    a[(p, q)] = Complex64::zero();
                    a[(q, p)] = Complex64::zero();
                    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
                    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
                }
            }
        }
        sweeps += 1;
    }
}

fn sorted_diagonal(a: &ComplexMatrix) -> Vec<usize> {
    let mut order: Vec<usize> = (0..a.rows()).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re).then(i.cmp(&j)));
    order
}

/// Eigen-decomposition of a Hermitian matrix by row-cyclic complex Jacobi sweeps.
pub fn eigh(input: &ComplexMatrix) -> Result<EigenSystem> {
    let mut a = input.clone();
    let n = a.rows();
    let mut v = ComplexMatrix::identity(n);
    let sweeps = diagonalize(&mut a, Some(&mut v))?;

    let order = sorted_diagonal(&a);
    let values: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vectors = ComplexMatrix::zeros(n, n);
    for (col, &src) in order.iter().enumerate() {
        let mut vec = v.column(src);
        fix_phase(&mut vec);
        for (row, z) in vec.into_iter().enumerate() {
            vectors[(row, col)] = z;
        }
    }
    Ok(EigenSystem {
        values,
        vectors,
        sweeps,
    })
}

/// Ascending eigenvalues only; same sweeps as [`eigh`] without accumulating
/// the rotations.
pub fn eigvalsh(input: &ComplexMatrix) -> Result<Vec<f64>> {
    let mut a = input.clone();
    diagonalize(&mut a, None)?;
    Ok(sorted_diagonal(&a).into_iter().map(|i| a[(i, i)].re).collect())
}
