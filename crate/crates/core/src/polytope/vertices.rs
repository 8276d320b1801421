use std::collections::HashSet;

use num::One;

use super::{exact, Rational, Scenario};
use crate::error::{Error, Result};

/// Largest observable count accepted by [`enumerate_vertices`] (2^n assignments).
pub const MAX_ENUMERATED_OBSERVABLES: usize = 24;

/// Vertex description of a polytope: distinct points of equal dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VRepresentation {
    dimension: usize,
    vertices: Vec<Vec<Rational>>,
}

impl VRepresentation {
    pub fn new(vertices: Vec<Vec<Rational>>) -> Result<Self> {
        let dimension = vertices
            .first()
            .ok_or_else(|| Error::InvalidVertices("empty vertex set".into()))?
            .len();
        if dimension == 0 {
            return Err(Error::InvalidVertices("zero-dimensional vertices".into()));
        }
        let mut seen = HashSet::with_capacity(vertices.len());
        for v in &vertices {
            if v.len() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    found: v.len(),
                });
            }
            if !seen.insert(v) {
                return Err(Error::InvalidVertices(format!("duplicate vertex {v:?}")));
            }
        }
        Ok(Self {
            dimension,
            vertices,
        })
    }

    /// Convenience constructor from small integer coordinates.
    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|row| {
                    row.as_ref()
                        .iter()
                        .map(|&x| Rational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Value of observable `i` under assignment index `a`: bit clear is +1, set is -1.
fn assignment_sign(a: u64, i: usize) -> i8 {
    if (a >> i) & 1 == 0 {
        1
    } else {
        -1
    }
}

/// Evaluates every monomial of `scenario` for all 2^n sign assignments and
/// keeps the distinct tuples, in the order they first occur.
pub fn enumerate_vertices(scenario: &Scenario) -> Result<VRepresentation> {
    let n = scenario.observables();
    if n > MAX_ENUMERATED_OBSERVABLES {
        return Err(Error::ScenarioTooLarge(n));
    }
    let mut seen: HashSet<Vec<i8>> = HashSet::new();
    let mut vertices = Vec::new();
    for a in 0..(1u64 << n) {
        let tuple: Vec<i8> = scenario
            .monomials()
            .iter()
            .map(|m| m.iter().map(|&i| assignment_sign(a, i)).product())
            .collect();
        if seen.insert(tuple.clone()) {
            vertices.push(tuple);
        }
    }
    let vertices = vertices
        .into_iter()
        .map(|t| {
            t.into_iter()
                .map(|s| if s > 0 { Rational::one() } else { -Rational::one() })
                .collect()
        })
        .collect();
    VRepresentation::new(vertices)
}

/// Exact rank of `{v_i - v_0}`.
pub fn affine_dimension(v: &VRepresentation) -> usize {
    let base = &v.vertices[0];
    let diffs: Vec<Vec<Rational>> = v.vertices[1..]
        .iter()
        .map(|w| w.iter().zip(base).map(|(x, y)| x - y).collect())
        .collect();
    exact::rank(&diffs)
}

/// The origin-free rank of the vertex rows themselves.
pub fn linear_rank(v: &VRepresentation) -> usize {
    exact::rank(&v.vertices)
}
