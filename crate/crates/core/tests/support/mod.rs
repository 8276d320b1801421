//! Independent reference implementations used as test oracles.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

pub type IntFacet = (i64, Vec<i64>);

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..cols {
                    let delta = &f * &m[row][c];
                    m[r][c] = &m[r][c] - delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

fn primitive(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.into_iter().map(|x| x / &g).collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Facets `b + a·x >= 0` of a full-dimensional polytope, found by trying the
/// hyperplane through every `d`-subset of vertices.
pub fn brute_force_facets(vertices: &[Vec<i64>]) -> BTreeSet<IntFacet> {
    let d = vertices[0].len();
    let mut found = BTreeSet::new();
    for subset in combinations(vertices.len(), d) {
        let mut m: Vec<Vec<BigRational>> = subset
            .iter()
            .map(|&i| std::iter::once(q(1)).chain(vertices[i].iter().map(|&x| q(x))).collect())
            .collect();
        let pivots = rref(&mut m);
        if pivots.len() != d {
            continue;
        }
        // one free column: set it to 1 and back-substitute
        let free = (0..=d).find(|c| !pivots.contains(c)).expect("nullity one");
        let mut h = vec![q(0); d + 1];
        h[free] = q(1);
        for (r, &p) in pivots.iter().enumerate() {
            h[p] = -m[r][free].clone();
        }
        let values: Vec<BigRational> = vertices
            .iter()
            .map(|v| v.iter().zip(&h[1..]).fold(h[0].clone(), |acc, (x, a)| acc + a * q(*x)))
            .collect();
        let sign = if values.iter().all(|v| !v.is_negative()) {
            1
        } else if values.iter().all(|v| !v.is_positive()) {
            -1
        } else {
            continue;
        };
        let oriented: Vec<BigRational> = h.iter().map(|x| x * q(sign)).collect();
        let ints = primitive(&oriented);
        let as_i64 = |x: &BigInt| i64::try_from(x).expect("small coefficients");
        found.insert((as_i64(&ints[0]), ints[1..].iter().map(as_i64).collect()));
    }
    found
}

/// All `±1` assignments mapped to monomial products, duplicates dropped.
pub fn oracle_vertices(observables: usize, monomials: &[Vec<usize>]) -> Vec<Vec<i64>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0..1usize << observables {
        let s = |i: usize| if mask >> i & 1 == 0 { 1 } else { -1 };
        let v: Vec<i64> = monomials.iter().map(|m| m.iter().map(|&i| s(i)).product()).collect();
        if seen.insert(v.clone()) {
            out.push(v);
        }
    }
    out
}

/// Facets from the library, as integer tuples.
pub fn library_facets(h: &corrpoly::polytope::HRepresentation) -> BTreeSet<IntFacet> {
    h.facets().iter().map(|f| f.to_integers().expect("small integer facet")).collect()
}
