//! Brute-force exact convex hull for small integer point sets.
//!
//! Every `d`-subset of points spans a candidate hyperplane; it supports a
//! facet when all points lie weakly on one side. Orientation signs come from
//! exact big-integer determinants, so there is no tolerance anywhere.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

/// Largest number of points accepted by [`brute_hull_facets`].
pub const MAX_HULL_POINTS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HullError {
    #[error("points span an affine space of dimension {rank}, expected {dim}")]
    DegenerateInput { dim: usize, rank: usize },
    #[error("{0} points exceed the brute-force limit of {MAX_HULL_POINTS}")]
    TooManyPoints(usize),
    #[error("point {index} has {found} coordinates, expected {dim}")]
    DimensionMismatch { index: usize, found: usize, dim: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    pub dim: usize,
    pub points: Vec<Vec<BigInt>>,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Vec<BigInt>>) -> Result<Self, HullError> {
        for (index, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(HullError::DimensionMismatch {
                    index,
                    found: p.len(),
                    dim,
                });
            }
        }
        Ok(PointSet { dim, points })
    }

    pub fn from_i64(dim: usize, points: &[Vec<i64>]) -> Result<Self, HullError> {
        Self::new(
            dim,
            points
                .iter()
                .map(|p| p.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }
}

/// Points `(t, t^2, ..., t^d)` for `t = 1..=n`; point `i` has parameter `i+1`.
pub fn moment_curve_points(d: usize, n: usize) -> PointSet {
    let points = (1..=n as i64)
        .map(|t| {
            let t = BigInt::from(t);
            let mut acc = BigInt::one();
            (0..d)
                .map(|_| {
                    acc *= &t;
                    acc.clone()
                })
                .collect()
        })
        .collect();
    PointSet { dim: d, points }
}

/// Fraction-free Gaussian elimination. Returns the determinant of a square
/// matrix (consumed).
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Rank of an integer matrix by fraction-free elimination.
pub fn rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let (a, b) = (m[r][c].clone(), m[i][c].clone());
            for j in c..cols {
                let v = &m[i][j] * &a - &m[r][j] * &b;
                m[i][j] = v;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Normal vector orthogonal to `d-1` vectors in dimension `d`, by cofactor
/// expansion. Zero iff the vectors are linearly dependent.
fn normal(vectors: &[Vec<BigInt>], d: usize) -> Vec<BigInt> {
    (0..d)
        .map(|skip| {
            let minor: Vec<Vec<BigInt>> = vectors
                .iter()
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let det = bareiss_determinant(minor);
            if skip % 2 == 0 {
                det
            } else {
                -det
            }
        })
        .collect()
}

fn diff(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Facets of the convex hull as sorted point-index sets, sorted.
pub fn brute_hull_facets(ps: &PointSet) -> Result<Vec<Vec<usize>>, HullError> {
    let d = ps.dim;
    let n = ps.points.len();
    if n > MAX_HULL_POINTS {
        return Err(HullError::TooManyPoints(n));
    }
    if n == 0 {
        return Err(HullError::DegenerateInput { dim: d, rank: 0 });
    }
    let diffs: Vec<Vec<BigInt>> = ps.points[1..]
        .iter()
        .map(|p| diff(p, &ps.points[0]))
        .collect();
    let r = rank(diffs);
    if r < d {
        return Err(HullError::DegenerateInput { dim: d, rank: r });
    }

    let facets: BTreeSet<Vec<usize>> = (0..n)
        .combinations(d)
        .collect::<Vec<_>>()
        .par_iter()
        .filter_map(|subset| {
            let base = &ps.points[subset[0]];
            let vs: Vec<Vec<BigInt>> = subset[1..]
                .iter()
                .map(|&i| diff(&ps.points[i], base))
                .collect();
            let nv = normal(&vs, d);
            if nv.iter().all(Zero::is_zero) {
                return None;
            }
            let (mut pos, mut neg) = (false, false);
            let mut on = Vec::new();
            for (j, p) in ps.points.iter().enumerate() {
                let s = dot(&nv, &diff(p, base));
                if s.is_zero() {
                    on.push(j);
                } else if s.is_positive() {
                    pos = true;
                } else {
                    neg = true;
                }
            }
            (!(pos && neg)).then_some(on)
        })
        .collect();
    Ok(facets.into_iter().collect())
}
