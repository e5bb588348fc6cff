//! Cyclic polytopes, g-vectors and Macaulay's growth condition.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::incidence::VertexFacetIncidence;

/// Default number of partial g-vectors the spectrum search may visit.
pub const DEFAULT_SPECTRUM_BUDGET: u64 = 2_000_000;

/// Largest dimension accepted by the spectrum enumeration.
pub const MAX_SPECTRUM_DIM: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclicError {
    #[error("need n >= d + 1 and d >= 2, got d = {d}, n = {n}")]
    InvalidDimension { d: usize, n: usize },
    #[error("enumeration exceeds the budget of {budget} steps")]
    TooLarge { budget: u64 },
}

/// Exact binomial coefficient, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn binomial_big(n: &BigUint, k: u64) -> BigUint {
    let kb = BigUint::from(k);
    if &kb > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - BigUint::from(i);
        acc /= i + 1;
    }
    acc
}

fn check_dims(d: usize, n: usize) -> Result<(), CyclicError> {
    if d < 2 || n < d + 1 {
        return Err(CyclicError::InvalidDimension { d, n });
    }
    Ok(())
}

/// Gale's evenness test for a sorted `d`-subset of `0..n`: between any two
/// non-members there is an even number of members.
pub fn is_gale_facet(n: usize, subset: &[usize]) -> bool {
    let mut prev_gap: Option<usize> = None;
    let mut between = 0usize;
    let mut it = subset.iter().peekable();
    for v in 0..n {
        if it.peek() == Some(&&v) {
            it.next();
            between += 1;
        } else {
            if prev_gap.is_some() && between % 2 == 1 {
                return false;
            }
            prev_gap = Some(v);
            between = 0;
        }
    }
    true
}

/// Facets of `C_d(n)` on vertices `0..n` in moment-curve order,
/// lexicographically sorted.
pub fn gale_facets(d: usize, n: usize) -> Result<Vec<Vec<usize>>, CyclicError> {
    check_dims(d, n)?;
    Ok((0..n)
        .combinations(d)
        .filter(|s| is_gale_facet(n, s))
        .collect())
}

/// `C_d(n)` as an incidence structure.
pub fn cyclic_polytope(d: usize, n: usize) -> Result<VertexFacetIncidence, CyclicError> {
    let facets = gale_facets(d, n)?;
    Ok(VertexFacetIncidence::new(d, facets).expect("Gale facets form a valid incidence"))
}

/// Closed-form facet count of `C_d(n)`.
pub fn cyclic_facet_count(d: usize, n: usize) -> Result<BigUint, CyclicError> {
    check_dims(d, n)?;
    let (n, k) = (n as u64, (d / 2) as u64);
    Ok(if d % 2 == 0 {
        binomial(n - k, k) + binomial(n - k - 1, k - 1)
    } else {
        binomial(n - k - 1, k) * 2u32
    })
}

/// `(g_0, ..., g_{⌊d/2⌋})` of a simplicial `d`-polytope.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GVector {
    pub d: usize,
    pub entries: Vec<BigUint>,
}

impl GVector {
    pub fn new(d: usize, entries: Vec<BigUint>) -> Self {
        GVector { d, entries }
    }

    pub fn from_u64(d: usize, entries: &[u64]) -> Self {
        GVector {
            d,
            entries: entries.iter().map(|&x| BigUint::from(x)).collect(),
        }
    }
}

impl fmt::Display for GVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.entries.iter().join(","))
    }
}

/// `g_i(C_d(n)) = C(n-d-2+i, i)`.
pub fn cyclic_g_vector(d: usize, n: usize) -> Result<GVector, CyclicError> {
    check_dims(d, n)?;
    let entries = (0..=d / 2)
        .map(|i| {
            if i == 0 {
                BigUint::one()
            } else {
                binomial((n + i - d - 2) as u64, i as u64)
            }
        })
        .collect();
    Ok(GVector { d, entries })
}

/// Facet count of a simplicial polytope from its g-vector:
/// `sum_j g_j (d - 2j + 1)`.
pub fn simplicial_facet_count(d: usize, g: &GVector) -> BigUint {
    g.entries
        .iter()
        .enumerate()
        .map(|(j, gj)| gj * BigUint::from((d + 1 - 2 * j) as u64))
        .sum()
}

/// The `i`-binomial expansion `a = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j)`
/// with `a_i > a_{i-1} > ... > a_j >= j >= 1`, as `(a_t, t)` pairs.
pub fn binomial_expansion(a: &BigUint, i: u64) -> Vec<(BigUint, u64)> {
    let mut rest = a.clone();
    let mut out = Vec::new();
    let mut t = i;
    while !rest.is_zero() && t >= 1 {
        // largest m with C(m, t) <= rest; C(m, t) is increasing for m >= t
        let mut lo = BigUint::from(t);
        let mut hi = &rest + BigUint::from(t);
        while lo < hi {
            let mid: BigUint = (&lo + &hi + 1u32) >> 1;
            if binomial_big(&mid, t) <= rest {
                lo = mid;
            } else {
                hi = mid - 1u32;
            }
        }
        rest -= binomial_big(&lo, t);
        out.push((lo, t));
        t -= 1;
    }
    out
}

/// Macaulay pseudopower `a^{<i>}`.
pub fn pseudopower(a: &BigUint, i: u64) -> BigUint {
    binomial_expansion(a, i)
        .iter()
        .map(|(m, t)| binomial_big(&(m + 1u32), t + 1))
        .sum()
}

/// True iff `g_0 = 1` and `g_{i+1} <= g_i^{<i>}` for every `i >= 1`.
pub fn m_sequence_valid(g: &GVector) -> bool {
    if g.entries.first() != Some(&BigUint::one()) {
        return false;
    }
    g.entries
        .windows(2)
        .enumerate()
        .skip(1)
        .all(|(i, w)| w[1] <= pseudopower(&w[0], i as u64))
}

/// Facet counts of simplicial `d`-polytopes with `n` vertices, over all
/// M-sequences with `g_1 = n - d - 1`.
pub fn simplicial_fd_spectrum(d: usize, n: usize) -> Result<BTreeSet<BigUint>, CyclicError> {
    simplicial_fd_spectrum_with_budget(d, n, DEFAULT_SPECTRUM_BUDGET)
}

pub fn simplicial_fd_spectrum_with_budget(
    d: usize,
    n: usize,
    budget: u64,
) -> Result<BTreeSet<BigUint>, CyclicError> {
    check_dims(d, n)?;
    if d > MAX_SPECTRUM_DIM {
        return Err(CyclicError::TooLarge { budget });
    }
    let caps = cyclic_g_vector(d, n)?.entries;
    let top = d / 2;
    let g1 = BigUint::from((n - d - 1) as u64);
    let base = BigUint::from((d + 1) as u64) + &g1 * BigUint::from((d - 1) as u64);
    if top < 2 {
        let mut s = BTreeSet::new();
        s.insert(if top == 1 { base } else { BigUint::from((d + 1) as u64) });
        return Ok(s);
    }
    let steps = AtomicU64::new(0);
    let first_max = pseudopower(&g1, 1).min(caps[2].clone());
    let firsts: Vec<u64> = (0..=first_max.to_u64().ok_or(CyclicError::TooLarge { budget })?).collect();
    let parts: Result<Vec<BTreeSet<BigUint>>, CyclicError> = firsts
        .into_par_iter()
        .map(|g2| {
            let mut out = BTreeSet::new();
            let g2 = BigUint::from(g2);
            let partial = &base + &g2 * BigUint::from((d - 3) as u64);
            spectrum_rec(d, &caps, 2, g2, partial, &steps, budget, &mut out)?;
            Ok(out)
        })
        .collect();
    Ok(parts?.into_iter().flatten().collect())
}

#[allow(clippy::too_many_arguments)]
fn spectrum_rec(
    d: usize,
    caps: &[BigUint],
    i: usize,
    gi: BigUint,
    partial: BigUint,
    steps: &AtomicU64,
    budget: u64,
    out: &mut BTreeSet<BigUint>,
) -> Result<(), CyclicError> {
    if steps.fetch_add(1, Ordering::Relaxed) >= budget {
        return Err(CyclicError::TooLarge { budget });
    }
    if i == caps.len() - 1 {
        out.insert(partial);
        return Ok(());
    }
    let max = pseudopower(&gi, i as u64).min(caps[i + 1].clone());
    let weight = BigUint::from((d + 1 - 2 * (i + 1)) as u64);
    let mut next = BigUint::zero();
    while next <= max {
        let p = &partial + &next * &weight;
        spectrum_rec(d, caps, i + 1, next.clone(), p, steps, budget, out)?;
        next += 1u32;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn small_gale_counts() {
        assert_eq!(gale_facets(4, 5).unwrap().len(), 5);
        assert_eq!(gale_facets(4, 6).unwrap().len(), 9);
        assert_eq!(gale_facets(4, 8).unwrap().len(), 20);
        assert!(gale_facets(4, 4).is_err());
    }

    #[test]
    fn facet_count_formula() {
        assert_eq!(cyclic_facet_count(4, 7).unwrap(), big(14));
        assert_eq!(cyclic_facet_count(6, 10).unwrap(), big(50));
        assert_eq!(cyclic_facet_count(5, 8).unwrap(), big(20));
    }

    #[test]
    fn g_vectors() {
        assert_eq!(cyclic_g_vector(4, 10).unwrap().entries[2], big(15));
        assert_eq!(cyclic_g_vector(6, 10).unwrap(), GVector::from_u64(6, &[1, 3, 6, 10]));
        assert_eq!(cyclic_g_vector(5, 9).unwrap().entries[2], big(6));
        assert_eq!(simplicial_facet_count(4, &GVector::from_u64(4, &[1, 5, 15])), big(35));
        assert_eq!(simplicial_facet_count(6, &GVector::from_u64(6, &[1, 3, 6, 10])), big(50));
        assert_eq!(simplicial_facet_count(5, &GVector::from_u64(5, &[1, 0, 0])), big(6));
    }

    #[test]
    fn macaulay() {
        assert_eq!(pseudopower(&big(2), 1), big(3));
        assert_eq!(pseudopower(&big(3), 2), big(4));
        assert_eq!(pseudopower(&big(0), 3), big(0));
        assert!(m_sequence_valid(&GVector::from_u64(6, &[1, 4, 10, 20])));
        assert!(!m_sequence_valid(&GVector::from_u64(4, &[1, 0, 1])));
        assert!(m_sequence_valid(&GVector::from_u64(6, &[1, 2, 3, 3])));
        assert!(!m_sequence_valid(&GVector::from_u64(6, &[1, 2, 3, 5])));
    }

    #[test]
    fn spectra() {
        let s: Vec<u64> = simplicial_fd_spectrum(4, 6)
            .unwrap()
            .iter()
            .map(|x| x.to_u64().unwrap())
            .collect();
        assert_eq!(s, vec![8, 9]);
        let s: Vec<u64> = simplicial_fd_spectrum(5, 6)
            .unwrap()
            .iter()
            .map(|x| x.to_u64().unwrap())
            .collect();
        assert_eq!(s, vec![6]);
        assert!(matches!(
            simplicial_fd_spectrum_with_budget(6, 11, 3),
            Err(CyclicError::TooLarge { .. })
        ));
    }
}
