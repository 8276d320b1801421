use std::cmp::Ordering;

use num::{Signed, Zero};

use super::{exact, Rational};
use crate::error::{Error, Result};

/// The inequality `normal · x + offset >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Facet {
    offset: Rational,
    normal: Vec<Rational>,
}

impl Facet {
    /// Builds the inequality as given, without rescaling.
    pub fn new(offset: Rational, normal: Vec<Rational>) -> Self {
        Self { offset, normal }
    }

    pub fn from_integers(offset: i64, normal: &[i64]) -> Self {
        Self::new(
            Rational::from_integer(offset.into()),
            normal
                .iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect(),
        )
    }

    /// Positive rescaling to integer coefficients with collective gcd 1.
    ///
    /// A positive factor never changes the inequality, so the orientation is
    /// kept: for polytopes containing the origin this yields `offset >= 0`.
    pub fn canonical(&self) -> Self {
        let mut joined = Vec::with_capacity(self.normal.len() + 1);
        joined.push(self.offset.clone());
        joined.extend(self.normal.iter().cloned());
        let mut scaled = exact::primitive_integer(&joined).into_iter();
        let offset = scaled.next().expect("offset present");
        Self {
            offset,
            normal: scaled.collect(),
        }
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn dimension(&self) -> usize {
        self.normal.len()
    }

    /// `normal · x + offset`.
    pub fn margin(&self, x: &[Rational]) -> Rational {
        exact::dot(&self.normal, x) + &self.offset
    }

    /// Normal coefficients as doubles, for assembling operators.
    pub fn normal_f64(&self) -> Vec<f64> {
        self.normal.iter().map(rational_to_f64).collect()
    }

    /// Integer coefficients, when they all fit in an `i64`.
    pub fn to_integers(&self) -> Option<(i64, Vec<i64>)> {
        let as_int = |q: &Rational| -> Option<i64> {
            if q.is_integer() {
                i64::try_from(q.to_integer()).ok()
            } else {
                None
            }
        };
        let offset = as_int(&self.offset)?;
        let normal = self.normal.iter().map(as_int).collect::<Option<Vec<_>>>()?;
        Some((offset, normal))
    }

    /// Human form `-b <= a_1 E_1 + ...` using the supplied term names.
    pub fn describe(&self, names: &[String]) -> String {
        let mut terms = String::new();
        for (coef, name) in self.normal.iter().zip(names) {
            if coef.is_zero() {
                continue;
            }
            let sign = if coef.is_negative() { "-" } else { "+" };
            let mag = coef.abs();
            let mag = if mag == Rational::from_integer(1.into()) {
                String::new()
            } else {
                format!("{mag}")
            };
            if terms.is_empty() {
                if sign == "-" {
                    terms.push('-');
                }
            } else {
                terms.push_str(&format!(" {sign} "));
            }
            terms.push_str(&format!("{mag}{name}"));
        }
        format!("{} <= {}", -&self.offset, terms)
    }
}

/// Output order for facets: ascending offset, then normals compared entry by
/// entry with larger values first (so `+` sign patterns precede `-`).
fn facet_order(a: &Facet, b: &Facet) -> Ordering {
    a.offset.cmp(&b.offset).then_with(|| {
        a.normal
            .iter()
            .zip(&b.normal)
            .map(|(x, y)| y.cmp(x))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

/// Facet description of a polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRepresentation {
    dimension: usize,
    facets: Vec<Facet>,
}

impl HRepresentation {
    /// Canonicalizes, deduplicates and sorts the given facets.
    pub fn new(dimension: usize, facets: Vec<Facet>) -> Result<Self> {
        let mut facets: Vec<Facet> = facets
            .into_iter()
            .map(|f| {
                if f.dimension() == dimension {
                    Ok(f.canonical())
                } else {
                    Err(Error::DimensionMismatch {
                        expected: dimension,
                        found: f.dimension(),
                    })
                }
            })
            .collect::<Result<_>>()?;
        facets.sort_by(facet_order);
        facets.dedup();
        Ok(Self { dimension, facets })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Position of a facet with the given normal, if present.
    pub fn position_of_normal(&self, normal: &[Rational]) -> Option<usize> {
        self.facets.iter().position(|f| f.normal == normal)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// Every margin strictly positive.
    Interior,
    /// No margin negative, at least one zero.
    Boundary,
    /// Some margin negative.
    Outside,
}

impl Region {
    pub fn contains(self) -> bool {
        self != Region::Outside
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Region::Interior => "inside",
            Region::Boundary => "boundary",
            Region::Outside => "outside",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipReport {
    pub margins: Vec<Rational>,
    pub region: Region,
}

impl MembershipReport {
    /// Index and value of the smallest margin.
    pub fn worst(&self) -> Option<(usize, &Rational)> {
        self.margins
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
    }
}

/// Evaluates every facet inequality at `point`.
pub fn membership(h: &HRepresentation, point: &[Rational]) -> Result<MembershipReport> {
    if point.len() != h.dimension {
        return Err(Error::DimensionMismatch {
            expected: h.dimension,
            found: point.len(),
        });
    }
    let margins: Vec<Rational> = h.facets.iter().map(|f| f.margin(point)).collect();
    let region = if margins.iter().any(Signed::is_negative) {
        Region::Outside
    } else if margins.iter().any(Zero::is_zero) {
        Region::Boundary
    } else {
        Region::Interior
    };
    Ok(MembershipReport { margins, region })
}

/// Exact rational value of a finite double.
pub fn rational_from_f64(x: f64) -> Result<Rational> {
    Rational::from_float(x).ok_or_else(|| Error::Domain(format!("non-finite coordinate {x}")))
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    use num::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}
