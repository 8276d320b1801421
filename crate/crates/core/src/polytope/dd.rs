//! Vertex-to-facet conversion by the Double Description method.
//!
//! Each vertex `w` is homogenized to the constraint row `(1, w)`. The facets
//! of the polytope are then the extreme rays of the cone
//! `{ (b, a) : b + a·w >= 0 for every vertex w }`, which is pointed whenever
//! the polytope is full-dimensional. The cone is built incrementally: start
//! from the simplicial cone cut out by `d + 1` independent rows, then add the
//! remaining rows in input order, combining adjacent rays that straddle each
//! new hyperplane.

use fixedbitset::FixedBitSet;
use num::{Signed, Zero};

use super::facet::{Facet, HRepresentation};
use super::vertices::{affine_dimension, VRepresentation};
use super::{exact, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
struct Ray {
    coords: Vec<Rational>,
    /// Constraint rows on which this ray is tight.
    zeros: FixedBitSet,
}

struct Cone {
    rows: Vec<Vec<Rational>>,
    rays: Vec<Ray>,
    /// Ambient dimension of the cone, `d + 1`.
    dim: usize,
}

impl Cone {
    fn initial(rows: Vec<Vec<Rational>>, basis: &[usize]) -> Self {
        let dim = rows[0].len();
        let basis_rows: Vec<Vec<Rational>> = basis.iter().map(|&i| rows[i].clone()).collect();
        let inv = exact::inverse(&basis_rows).expect("basis rows are independent");
        // Column j of the inverse is tight on every basis row except row j.
        let rays = (0..dim)
            .map(|j| {
                let col: Vec<Rational> = inv.iter().map(|row| row[j].clone()).collect();
                let mut zeros = FixedBitSet::with_capacity(rows.len());
                for (k, &i) in basis.iter().enumerate() {
                    if k != j {
                        zeros.insert(i);
                    }
                }
                Ray {
                    coords: exact::primitive_integer(&col),
                    zeros,
                }
            })
            .collect();
        Self { rows, rays, dim }
    }

    fn adjacent(&self, p: usize, n: usize) -> Option<FixedBitSet> {
        let mut common = self.rays[p].zeros.clone();
        common.intersect_with(&self.rays[n].zeros);
        if common.count_ones(..) + 2 < self.dim {
            return None;
        }
        let dominated = self
            .rays
            .iter()
            .enumerate()
            .any(|(r, ray)| r != p && r != n && common.is_subset(&ray.zeros));
        if dominated {
            return None;
        }
        let tight: Vec<Vec<Rational>> = common.ones().map(|i| self.rows[i].clone()).collect();
        (exact::rank(&tight) + 2 == self.dim).then_some(common)
    }

    fn add_constraint(&mut self, k: usize) {
        let row = &self.rows[k];
        let values: Vec<Rational> = self.rays.iter().map(|r| exact::dot(row, &r.coords)).collect();
        let positive: Vec<usize> = (0..self.rays.len()).filter(|&i| values[i].is_positive()).collect();
        let negative: Vec<usize> = (0..self.rays.len()).filter(|&i| values[i].is_negative()).collect();

        let mut created = Vec::new();
        for &p in &positive {
            for &n in &negative {
                let Some(mut zeros) = self.adjacent(p, n) else {
                    continue;
                };
                // values[p] > 0 > values[n]; the combination is tight on row k.
                let coords: Vec<Rational> = self.rays[n]
                    .coords
                    .iter()
                    .zip(&self.rays[p].coords)
                    .map(|(xn, xp)| &values[p] * xn - &values[n] * xp)
                    .collect();
                zeros.insert(k);
                created.push(Ray {
                    coords: exact::primitive_integer(&coords),
                    zeros,
                });
            }
        }

        let mut kept = Vec::with_capacity(self.rays.len() - negative.len() + created.len());
        for (i, mut ray) in std::mem::take(&mut self.rays).into_iter().enumerate() {
            if values[i].is_negative() {
                continue;
            }
            if values[i].is_zero() {
                ray.zeros.insert(k);
            }
            kept.push(ray);
        }
        kept.extend(created);
        self.rays = kept;
    }
}

/// Greedy choice of `target` linearly independent rows, in input order.
fn independent_rows(rows: &[Vec<Rational>], target: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::with_capacity(target);
    let mut basis: Vec<Vec<Rational>> = Vec::with_capacity(target);
    for (i, row) in rows.iter().enumerate() {
        basis.push(row.clone());
        if exact::rank(&basis) == basis.len() {
            chosen.push(i);
            if chosen.len() == target {
                break;
            }
        } else {
            basis.pop();
        }
    }
    chosen
}

/// Facets of the convex hull of a full-dimensional vertex set, in exact arithmetic.
pub fn dd_hull(v: &VRepresentation) -> Result<HRepresentation> {
    let d = v.dimension();
    let affine = affine_dimension(v);
    if affine < d {
        return Err(Error::DegeneratePolytope {
            affine,
            ambient: d,
        });
    }

    let rows: Vec<Vec<Rational>> = v
        .vertices()
        .iter()
        .map(|w| {
            let mut h = Vec::with_capacity(d + 1);
            h.push(Rational::from_integer(1.into()));
            h.extend(w.iter().cloned());
            h
        })
        .collect();

    let basis = independent_rows(&rows, d + 1);
    debug_assert_eq!(basis.len(), d + 1);
    let n_rows = rows.len();
    let mut cone = Cone::initial(rows, &basis);
    for k in (0..n_rows).filter(|k| !basis.contains(k)) {
        cone.add_constraint(k);
    }

    let facets = cone
        .rays
        .into_iter()
        .map(|ray| {
            let mut coords = ray.coords.into_iter();
            let offset = coords.next().expect("homogenizing coordinate");
            Facet::new(offset, coords.collect())
        })
        .collect();
    HRepresentation::new(d, facets)
}
