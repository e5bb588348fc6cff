//! Construction recipes and their verified execution.
//!
//! A [`Recipe`] names a seed polytope and a list of [`Op`]s. Each op picks
//! its target deterministically (lowest facet or vertex index), so a recipe
//! always rebuilds the same incidence.

mod bfs;
mod cache;
mod plan;
mod region;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::characterize::PairStatus;
use crate::constructions::{
    delta_star, r_family, split_bipyramid_facet, stack_beyond_facet, stack_beyond_pair,
    truncate_simple_vertex, ConstructionError,
};
use crate::cyclic::cyclic_polytope;
use crate::incidence::{FlagVector, LatticeChecks, LatticeError, VertexFacetIncidence};
use crate::io::{load_seed, IoError};

pub use bfs::{bfs_table, BfsTable, Features, BFS_MAX_F03};
pub use cache::{WitnessCache, CACHE_ENV};
pub use plan::{plan, band_recipe};
pub use region::{region_scan, RegionBounds, RegionCell, ScanOptions};

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error("unknown seed reference {0:?}")]
    UnknownSeed(String),
    #[error(transparent)]
    Seed(#[from] IoError),
    #[error("step {step} ({op}): {source}")]
    StepPrecondition {
        step: usize,
        op: Op,
        source: ConstructionError,
    },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("step {step}: face lattice check failed: {error}")]
    Lattice { step: usize, error: LatticeError },
    #[error("recipe produced {found:?}, expected {expected:?}")]
    Mismatch {
        expected: (u64, u64),
        found: (u64, u64),
    },
    #[error("({f0},{f03}) is not polytopal: {status}")]
    NotPolytopal { f0: u64, f03: u64, status: PairStatus },
    #[error("no construction found for ({f0},{f03})")]
    PlanFailure { f0: u64, f03: u64 },
    #[error("recipe syntax: {0}")]
    Json(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error("search table: {0}")]
    Table(String),
}

/// A construction step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Op {
    StackSimplexFacet,
    TruncateSimpleVertex,
    StackSquarePyramidFacet,
    SplitBipyramid,
    StackBeyondPair,
    Dualize,
}

impl Op {
    pub const ALL: [Op; 6] = [
        Op::StackSimplexFacet,
        Op::TruncateSimpleVertex,
        Op::StackSquarePyramidFacet,
        Op::SplitBipyramid,
        Op::StackBeyondPair,
        Op::Dualize,
    ];

    pub fn code(self) -> char {
        match self {
            Op::StackSimplexFacet => 'S',
            Op::TruncateSimpleVertex => 'T',
            Op::StackSquarePyramidFacet => 'Q',
            Op::SplitBipyramid => 'B',
            Op::StackBeyondPair => 'P',
            Op::Dualize => 'D',
        }
    }

    pub fn from_code(c: char) -> Option<Op> {
        Op::ALL.into_iter().find(|op| op.code() == c)
    }

    /// Change of `(f_0, f_03)` for a 4-polytope; `None` for duality.
    pub fn delta(self) -> Option<(i64, i64)> {
        match self {
            Op::StackSimplexFacet => Some((1, 12)),
            Op::TruncateSimpleVertex => Some((3, 12)),
            Op::StackSquarePyramidFacet => Some((1, 16)),
            Op::SplitBipyramid => Some((0, 3)),
            Op::StackBeyondPair => Some((1, 16)),
            Op::Dualize => None,
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Parses a compact op string like `"S3TB"` (code, optional repeat count).
pub fn parse_ops(text: &str) -> Result<Vec<Op>, WitnessError> {
    let mut ops = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        let op = Op::from_code(c).ok_or_else(|| WitnessError::Json(format!("bad op code {c:?}")))?;
        let mut count = String::new();
        while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
            count.push(*d);
            chars.next();
        }
        let n = if count.is_empty() { 1 } else { count.parse().unwrap() };
        ops.extend(std::iter::repeat(op).take(n));
    }
    Ok(ops)
}

fn compact_ops(ops: &[Op]) -> String {
    let mut s = String::new();
    let mut i = 0;
    while i < ops.len() {
        let j = (i..ops.len()).find(|&j| ops[j] != ops[i]).unwrap_or(ops.len());
        s.push(ops[i].code());
        if j - i > 1 {
            s.push_str(&(j - i).to_string());
        }
        i = j;
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Recipe {
    pub seed: String,
    pub ops: Vec<Op>,
    pub expected: [u64; 2],
}

impl Recipe {
    pub fn new(seed: impl Into<String>, ops: Vec<Op>, expected: (u64, u64)) -> Self {
        Recipe {
            seed: seed.into(),
            ops,
            expected: [expected.0, expected.1],
        }
    }

    pub fn expected_pair(&self) -> (u64, u64) {
        (self.expected[0], self.expected[1])
    }

    /// Seed plus compacted ops, e.g. `P10*:B2D`.
    pub fn id(&self) -> String {
        if self.ops.is_empty() {
            self.seed.clone()
        } else {
            format!("{}:{}", self.seed, compact_ops(&self.ops))
        }
    }

    /// Inverse of [`Recipe::id`].
    pub fn from_id(id: &str, expected: (u64, u64)) -> Result<Recipe, WitnessError> {
        let (seed, ops) = match id.rsplit_once(':') {
            Some((seed, ops)) => (seed, parse_ops(ops)?),
            None => (id, Vec::new()),
        };
        Ok(Recipe::new(seed, ops, expected))
    }

    /// Appends ops and moves the expected pair by their increments.
    pub(crate) fn then(mut self, op: Op, times: usize) -> Self {
        let (a, b) = op.delta().expect("duality changes the pair non-additively");
        for _ in 0..times {
            self.ops.push(op);
            self.expected[0] = (self.expected[0] as i64 + a) as u64;
            self.expected[1] = (self.expected[1] as i64 + b) as u64;
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("recipes always serialize")
    }

    pub fn from_json(text: &str) -> Result<Recipe, WitnessError> {
        serde_json::from_str(text).map_err(|e| WitnessError::Json(e.to_string()))
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> ({},{})", self.id(), self.expected[0], self.expected[1])
    }
}

fn call_args(reference: &str, name: &str) -> Option<Vec<usize>> {
    let inner = reference.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(|t| t.trim().parse().ok()).collect()
}

/// Builds a seed: a database name, `R(i,n)`, `delta_star(k,i,n)` or
/// `cyclic(d,n)`.
pub fn resolve_seed(reference: &str) -> Result<VertexFacetIncidence, WitnessError> {
    if let Some(a) = call_args(reference, "R") {
        if let [i, n] = a[..] {
            return Ok(r_family(i, n)?);
        }
    }
    if let Some(a) = call_args(reference, "delta_star") {
        if let [k, i, n] = a[..] {
            return Ok(delta_star(k, i, n)?);
        }
    }
    if let Some(a) = call_args(reference, "cyclic") {
        if let [d, n] = a[..] {
            return Ok(cyclic_polytope(d, n).map_err(ConstructionError::from)?);
        }
    }
    match load_seed(reference) {
        Ok(s) => Ok(s.incidence.clone()),
        Err(IoError::UnknownSeed(_)) => Err(WitnessError::UnknownSeed(reference.to_string())),
        Err(e) => Err(e.into()),
    }
}

pub(crate) fn first_simplex_facet(p: &VertexFacetIncidence) -> Option<usize> {
    p.facets().iter().position(|f| f.len() == p.dim())
}

pub(crate) fn first_simple_vertex(p: &VertexFacetIncidence) -> Option<usize> {
    p.vertex_degrees().iter().position(|&c| c == p.dim())
}

/// Applies one op to its canonical target.
pub fn apply_op(p: &VertexFacetIncidence, op: Op) -> Result<VertexFacetIncidence, ConstructionError> {
    let none = |what: &str| ConstructionError::NoTarget(what.to_string());
    match op {
        Op::StackSimplexFacet => {
            let f = first_simplex_facet(p).ok_or_else(|| none("no simplex facet"))?;
            stack_beyond_facet(p, f)
        }
        Op::TruncateSimpleVertex => {
            let v = first_simple_vertex(p).ok_or_else(|| none("no simple vertex"))?;
            truncate_simple_vertex(p, v)
        }
        Op::StackSquarePyramidFacet => {
            let local = p.classify_local();
            let f = *local
                .square_pyramid_facets
                .first()
                .ok_or_else(|| none("no square pyramid facet"))?;
            stack_beyond_facet(p, f)
        }
        Op::SplitBipyramid => {
            let local = p.classify_local();
            let b = local
                .splittable_bipyramid()
                .ok_or_else(|| none("no bipyramid facet with a simple apex"))?;
            split_bipyramid_facet(p, b.facet)
        }
        Op::StackBeyondPair => stack_beyond_pair(p),
        Op::Dualize => Ok(p.dualize()),
    }
}

/// Applies ops in order without lattice checks.
pub fn apply_ops(p: &VertexFacetIncidence, ops: &[Op]) -> Result<VertexFacetIncidence, WitnessError> {
    let mut q = p.clone();
    for (step, &op) in ops.iter().enumerate() {
        q = apply_op(&q, op).map_err(|source| WitnessError::StepPrecondition { step, op, source })?;
    }
    Ok(q)
}

/// How much face-lattice checking [`execute_with`] performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verification {
    /// Count the pair from the incidences only.
    PairOnly,
    /// Full lattice checks and flag vector of the result.
    Final,
    /// Full lattice checks after every step.
    EveryStep,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepReport {
    pub op: Op,
    pub before: (u64, u64),
    pub after: (u64, u64),
    pub checks: Option<LatticeChecks>,
}

impl StepReport {
    pub fn delta(&self) -> (i64, i64) {
        (
            self.after.0 as i64 - self.before.0 as i64,
            self.after.1 as i64 - self.before.1 as i64,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExecutionReport {
    pub seed_pair: (u64, u64),
    pub seed_checks: Option<LatticeChecks>,
    pub steps: Vec<StepReport>,
    pub flag_vector: Option<FlagVector>,
    pub checks: Option<LatticeChecks>,
    pub expected: (u64, u64),
    pub found: (u64, u64),
}

impl ExecutionReport {
    pub fn matches(&self) -> bool {
        self.expected == self.found
    }
}

fn lattice_checks(p: &VertexFacetIncidence, step: usize) -> Result<(LatticeChecks, FlagVector), WitnessError> {
    let l = p
        .face_lattice()
        .map_err(|error| WitnessError::Lattice { step, error })?;
    let checks = l.checks();
    if !checks.all_pass() {
        let error = l.verify().expect_err("a failed check reports an error");
        return Err(WitnessError::Lattice { step, error });
    }
    Ok((checks, l.flag_vector()))
}

/// Executes with full verification of every intermediate polytope.
pub fn execute(r: &Recipe) -> Result<(VertexFacetIncidence, ExecutionReport), WitnessError> {
    execute_with(r, Verification::EveryStep)
}

pub fn execute_with(
    r: &Recipe,
    level: Verification,
) -> Result<(VertexFacetIncidence, ExecutionReport), WitnessError> {
    let mut p = resolve_seed(&r.seed)?;
    let seed_checks = match level {
        Verification::EveryStep => Some(lattice_checks(&p, 0)?.0),
        _ => None,
    };
    let seed_pair = p.pair();
    let mut steps = Vec::with_capacity(r.ops.len());
    for (step, &op) in r.ops.iter().enumerate() {
        let before = p.pair();
        p = apply_op(&p, op).map_err(|source| WitnessError::StepPrecondition { step, op, source })?;
        let checks = match level {
            Verification::EveryStep => Some(lattice_checks(&p, step + 1)?.0),
            _ => None,
        };
        steps.push(StepReport {
            op,
            before,
            after: p.pair(),
            checks,
        });
    }
    let (checks, flag_vector) = match level {
        Verification::PairOnly => (None, None),
        _ => {
            let (c, fv) = lattice_checks(&p, r.ops.len())?;
            (Some(c), Some(fv))
        }
    };
    let found = match &flag_vector {
        Some(fv) => fv.pair(),
        None => p.pair(),
    };
    let report = ExecutionReport {
        seed_pair,
        seed_checks,
        steps,
        flag_vector,
        checks,
        expected: r.expected_pair(),
        found,
    };
    if !report.matches() {
        return Err(WitnessError::Mismatch {
            expected: report.expected,
            found,
        });
    }
    Ok((p, report))
}
