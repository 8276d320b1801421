//! Comparison of (possibly degenerate) eigenspaces through their projectors.

use num::complex::Complex64;

use crate::quantum::{inner, norm, ComplexMatrix};

const RANK_TOLERANCE: f64 = 1e-12;

/// Orthogonal projector onto `span(vectors)`, orthonormalizing by modified
/// Gram-Schmidt. Vectors that are numerically dependent on earlier ones are
/// dropped.
pub fn projector_onto(vectors: &[Vec<Complex64>]) -> ComplexMatrix {
    let n = vectors.first().map_or(0, Vec::len);
    let mut basis: Vec<Vec<Complex64>> = Vec::new();
    for v in vectors {
        let scale = norm(v);
        if scale == 0.0 {
            continue;
        }
        let mut w: Vec<Complex64> = v.iter().map(|z| z / scale).collect();
        for b in &basis {
            let c = inner(b, &w);
            for (wi, bi) in w.iter_mut().zip(b) {
                *wi -= c * bi;
            }
        }
        let len = norm(&w);
        if len > RANK_TOLERANCE {
            basis.push(w.into_iter().map(|z| z / len).collect());
        }
    }
    let mut p = ComplexMatrix::zeros(n, n);
    for b in &basis {
        p = &p + &ComplexMatrix::outer(b, b);
    }
    p
}

/// Frobenius norm of `P − Q`.
pub fn projector_distance(p: &ComplexMatrix, q: &ComplexMatrix) -> f64 {
    (p - q).frobenius_norm()
}

/// `‖x − P x‖ / ‖x‖`: how far `x` sticks out of the range of `P`.
pub fn residual_outside(p: &ComplexMatrix, x: &[Complex64]) -> f64 {
    let scale = norm(x);
    let px = p.apply(x);
    let diff: Vec<Complex64> = x.iter().zip(&px).map(|(a, b)| a - b).collect();
    norm(&diff) / scale
}

pub(crate) fn real_vector(values: &[f64]) -> Vec<Complex64> {
    values.iter().map(|&x| Complex64::new(x, 0.0)).collect()
}
