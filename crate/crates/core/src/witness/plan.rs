//! Recipe planning for `(f_0, f_03)` pairs.
//!
//! Small pairs come from the search table. Pairs with `f_03 <= 12 f_0 - 44`
//! are reached from a base pair with `53 <= f_03 <= 64` by stacking and
//! truncating. Pairs close to the upper bound use a base chosen by the
//! residue of `f_03` mod 4; the rest walk back by stacking until one of
//! these applies.

use std::collections::HashMap;

use crate::characterize::{membership4, PairKind};

use super::bfs::{bfs_table, Features, BFS_MAX_F03};
use super::{Op, Recipe, WitnessError};

const S: u16 = Features::SIMPLEX_FACET;
const T: u16 = Features::SIMPLE_VERTEX;

fn top(f0: u64) -> u64 {
    2 * f0 * (f0 - 3)
}

fn stacked(seed: String, base: (u64, u64)) -> Recipe {
    Recipe::new(seed, vec![], base).then(Op::StackSimplexFacet, 1)
}

/// Base for `(n+1, 2n(n-3) + i)`, `n >= 8`, `0 <= i <= 4n - 4`. `None` on
/// the rows that have no polytope.
pub fn band_recipe(n: u64, i: u64) -> Option<Recipe> {
    if n < 8 || i > 4 * n - 4 {
        return None;
    }
    let pair = (n + 1, top(n) + i);
    let lower = |i_: u64, m: u64| top(m) + 4 * i_ + 8;
    let delta = |k: u64, i_: u64, m: u64| top(m) + 4 * i_ - 3 * k;
    let r = match (i % 4, i) {
        (0, 0 | 4 | 8) => {
            let j = n - 7 + i / 4;
            stacked(format!("R({j},{})", n - 1), (n, lower(j, n - 1)))
        }
        (0, 12) => stacked(format!("cyclic(4,{n})"), (n, top(n))),
        (0, i) if i == 4 * n - 4 => Recipe::new(format!("cyclic(4,{})", n + 1), vec![], pair),
        (0, i) if i <= 4 * n - 8 => Recipe::new(format!("R({},{n})", (i - 8) / 4), vec![], pair),
        (1, 1) => stacked(format!("delta_star(1,{},{})", n - 4, n - 1), (n, delta(1, n - 4, n - 1))),
        (1, 5) => stacked(format!("delta_star(1,{},{})", n - 3, n - 1), (n, delta(1, n - 3, n - 1))),
        (1, i) if i <= 4 * n - 11 => Recipe::new(format!("delta_star(1,{},{n})", (i + 3) / 4), vec![], pair),
        (2, 2) => stacked(format!("delta_star(2,{},{})", n - 3, n - 1), (n, delta(2, n - 3, n - 1))),
        (2, i) if i <= 4 * n - 14 => Recipe::new(format!("delta_star(2,{},{n})", (i + 6) / 4), vec![], pair),
        (3, i) if i <= 4 * n - 21 => Recipe::new(format!("delta_star(3,{},{n})", (i + 9) / 4), vec![], pair),
        _ => return None,
    };
    debug_assert_eq!(r.expected_pair(), pair);
    Some(r)
}

struct Planner {
    memo: HashMap<(u64, u64, u16), Option<(Recipe, u16)>>,
}

impl Planner {
    /// A recipe for `(f0, f03)` whose result has the features in `need`,
    /// together with features known to hold.
    fn plan(&mut self, f0: u64, f03: u64, need: u16) -> Result<Option<(Recipe, u16)>, WitnessError> {
        if let Some(hit) = self.memo.get(&(f0, f03, need)) {
            return Ok(hit.clone());
        }
        self.memo.insert((f0, f03, need), None);
        let found = self.search(f0, f03, need)?;
        self.memo.insert((f0, f03, need), found.clone());
        Ok(found)
    }

    fn search(&mut self, f0: u64, f03: u64, need: u16) -> Result<Option<(Recipe, u16)>, WitnessError> {
        if !membership4(PairKind::F0F03, f0, f03).is_polytopal() {
            return Ok(None);
        }
        if f03 <= BFS_MAX_F03 {
            return Ok(bfs_table()?.lookup((f0, f03), need).map(|(r, f)| (r, f.0 & (S | T))));
        }
        if f03 + 44 <= 12 * f0 {
            if let Some(r) = lower_region(f0, f03)? {
                return Ok(Some((r, S | T)));
            }
        }
        if f0 >= 9 {
            let n = f0 - 1;
            if f03 >= top(n) {
                if let Some(r) = band_recipe(n, f03 - top(n)) {
                    let known = if r.ops.is_empty() { S } else { S | T };
                    if known & need == need {
                        return Ok(Some((r, known)));
                    }
                }
            } else if f03 + 1 == top(n) {
                let m = f0 - 2;
                let seed = format!("delta_star(3,{},{m})", m - 3);
                let base = (m + 1, top(m) + 4 * (m - 3) - 9);
                let r = Recipe::new(seed, vec![], base).then(Op::StackBeyondPair, 1);
                if need & T == 0 {
                    return Ok(Some((r, S)));
                }
            }
        }
        // walk back one stacking or truncation step
        if let Some((r, _)) = self.plan(f0 - 1, f03 - 12, S)? {
            return Ok(Some((r.then(Op::StackSimplexFacet, 1), S | T)));
        }
        if f0 > 3 {
            if let Some((r, _)) = self.plan(f0 - 3, f03 - 12, T)? {
                return Ok(Some((r.then(Op::TruncateSimpleVertex, 1), S | T)));
            }
        }
        Ok(None)
    }
}

/// `n` stacking and truncation steps of `12` incidences each, from a base
/// pair with `53 <= f_03 <= 64` that has both a simplex facet and a simple
/// vertex.
fn lower_region(f0: u64, f03: u64) -> Result<Option<Recipe>, WitnessError> {
    let n = (f03 - 64).div_ceil(12);
    let b = f03 - 12 * n;
    let table = bfs_table()?;
    for m in 0..=n {
        let Some(f0b) = f0.checked_sub(n + 2 * m) else {
            break;
        };
        if let Some((r, _)) = table.lookup((f0b, b), S | T) {
            return Ok(Some(
                r.then(Op::StackSimplexFacet, (n - m) as usize)
                    .then(Op::TruncateSimpleVertex, m as usize),
            ));
        }
    }
    Ok(None)
}

/// Deterministic recipe for a polytopal pair `(f0, f03)`.
pub fn plan(f0: u64, f03: u64) -> Result<Recipe, WitnessError> {
    let status = membership4(PairKind::F0F03, f0, f03);
    if !status.is_polytopal() {
        return Err(WitnessError::NotPolytopal { f0, f03, status });
    }
    let mut p = Planner {
        memo: HashMap::new(),
    };
    match p.plan(f0, f03, 0)? {
        Some((r, _)) => Ok(r),
        None => Err(WitnessError::PlanFailure { f0, f03 }),
    }
}
