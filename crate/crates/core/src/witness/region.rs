//! Verdict grids over a box of pairs.

use rayon::prelude::*;

use crate::characterize::{membership4, PairKind, PairStatus, Verdict};

use super::{execute_with, plan, Verification, WitnessCache, WitnessError};

/// Inclusive box `a_min..=a_max` by `b_min..=b_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegionBounds {
    pub a_min: u64,
    pub a_max: u64,
    pub b_min: u64,
    pub b_max: u64,
}

impl RegionBounds {
    /// Every in-bounds `(f_0, f_03)` pair with `f_03 <= max_f03`.
    pub fn f0f03_up_to(max_f03: u64) -> Self {
        RegionBounds {
            a_min: 1,
            a_max: max_f03 / 4,
            b_min: 1,
            b_max: max_f03,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct ScanOptions {
    /// Plan and verify a witness for every polytopal `(f_0, f_03)` cell.
    pub witnesses: bool,
    pub cache: Option<WitnessCache>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionCell {
    pub a: u64,
    pub b: u64,
    pub status: PairStatus,
    pub recipe: Option<String>,
}

fn witness_id(kind: PairKind, a: u64, b: u64, cache: Option<&WitnessCache>) -> Result<String, WitnessError> {
    let label = kind.label();
    if let Some((r, _)) = cache.and_then(|c| c.get(&label, (a, b))) {
        return Ok(r.id());
    }
    let r = plan(a, b)?;
    let (p, _) = execute_with(&r, Verification::Final)?;
    if let Some(c) = cache {
        c.put(&label, &r, &p)?;
    }
    Ok(r.id())
}

/// Cells of the box that satisfy the kind's bounds, sorted by `(a, b)`.
/// Witnesses are only produced for `(f_0, f_03)`.
pub fn region_scan(
    kind: PairKind,
    bounds: RegionBounds,
    options: &ScanOptions,
) -> Result<Vec<RegionCell>, WitnessError> {
    let cells: Vec<(u64, u64)> = (bounds.a_min..=bounds.a_max)
        .flat_map(|a| (bounds.b_min..=bounds.b_max).map(move |b| (a, b)))
        .collect();
    let mut out: Vec<RegionCell> = cells
        .par_iter()
        .filter_map(|&(a, b)| {
            let status = membership4(kind, a, b);
            if status.verdict == Verdict::OutOfBounds {
                return None;
            }
            let recipe = if options.witnesses && kind == PairKind::F0F03 && status.is_polytopal() {
                Some(witness_id(kind, a, b, options.cache.as_ref()))
            } else {
                None
            };
            Some((a, b, status, recipe))
        })
        .map(|(a, b, status, recipe)| {
            Ok(RegionCell {
                a,
                b,
                status,
                recipe: recipe.transpose()?,
            })
        })
        .collect::<Result<_, WitnessError>>()?;
    out.sort_by_key(|c| (c.a, c.b));
    Ok(out)
}
