//! Exact rational linear algebra on small dense matrices.

use num::{BigInt, Integer, One, Signed, Zero};

use super::Rational;

/// Reduces `rows` in place to row echelon form and returns the rank.
fn echelon(rows: &mut [Vec<Rational>]) -> usize {
    let n_rows = rows.len();
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(pivot) = (rank..n_rows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in rank + 1..n_rows {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &rows[rank][col];
            for c in col..n_cols {
                let delta = &factor * &rows[rank][c];
                rows[r][c] -= delta;
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut work = rows.to_vec();
    echelon(&mut work)
}

/// Inverse of a square matrix, or `None` if it is singular.
pub fn inverse(matrix: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = matrix.len();
    let mut aug: Vec<Vec<Rational>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for v in aug[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r == col || aug[r][col].is_zero() {
                continue;
            }
            let factor = aug[r][col].clone();
            for c in 0..2 * n {
                let delta = &factor * &aug[col][c];
                aug[r][c] -= delta;
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Positive rescaling of `v` to a primitive integer vector (collective gcd 1).
/// The zero vector is returned unchanged.
pub fn primitive_integer(v: &[Rational]) -> Vec<Rational> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return v.to_vec();
    }
    ints.into_iter()
        .map(|x| Rational::from_integer(x / gcd.abs()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rank_of_travis_rows() {
        let rows: Vec<Vec<Rational>> = [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]]
            .iter()
            .map(|row| row.iter().map(|&x| r(x)).collect())
            .collect();
        assert_eq!(rank(&rows), 3);
    }

    #[test]
    fn rank_deficient() {
        let rows = vec![vec![r(1), r(2)], vec![r(2), r(4)], vec![r(0), r(0)]];
        assert_eq!(rank(&rows), 1);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = vec![
            vec![r(1), r(1), r(0)],
            vec![r(1), r(-1), r(2)],
            vec![q(1, 2), r(0), r(3)],
        ];
        let inv = inverse(&m).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let col: Vec<Rational> = inv.iter().map(|row| row[j].clone()).collect();
                let expected = if i == j { r(1) } else { r(0) };
                assert_eq!(dot(&m[i], &col), expected);
            }
        }
        assert!(inverse(&[vec![r(1), r(2)], vec![r(2), r(4)]]).is_none());
    }

    #[test]
    fn primitive_scaling() {
        assert_eq!(
            primitive_integer(&[q(1, 2), q(-3, 4), r(0)]),
            vec![r(2), r(-3), r(0)]
        );
        assert_eq!(primitive_integer(&[r(-6), r(4)]), vec![r(-3), r(2)]);
        assert_eq!(primitive_integer(&[r(0), r(0)]), vec![r(0), r(0)]);
    }
}
