//! Membership predicates for face- and flag-vector pairs.
//!
//! Every bound involving a square root or a ceiling is evaluated as an
//! integer inequality; the transformation is written next to each check.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Ratio;
use thiserror::Error;

use crate::cyclic::{binomial, cyclic_facet_count};
use crate::incidence::FVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterizeError {
    #[error("unknown pair kind {0:?}")]
    UnknownKind(String),
    #[error("invalid dimension {0}")]
    InvalidDimension(usize),
    #[error("fatness is undefined when f0 + f3 = 10")]
    DegenerateDenominator,
    #[error("fatness needs a 4-dimensional f-vector, got {0} entries")]
    NotFourDimensional(usize),
}

/// Which two coordinates a pair refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairKind {
    F0F3,
    F0F1,
    F0F2,
    F1F2,
    F0F03,
    /// `(f_0, f_{d-1})` of a `d`-polytope.
    HighDim(usize),
}

impl PairKind {
    pub fn label(&self) -> String {
        match self {
            PairKind::F0F3 => "f0,f3".into(),
            PairKind::F0F1 => "f0,f1".into(),
            PairKind::F0F2 => "f0,f2".into(),
            PairKind::F1F2 => "f1,f2".into(),
            PairKind::F0F03 => "f0,f03".into(),
            PairKind::HighDim(d) => format!("f0,f{}", d - 1),
        }
    }
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A kind string resolved to a canonical kind, possibly with the two
/// arguments exchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResolvedKind {
    pub kind: PairKind,
    pub swap: bool,
}

impl ResolvedKind {
    /// Puts the arguments in the order the canonical kind expects.
    pub fn order(&self, a: u64, b: u64) -> (u64, u64) {
        if self.swap {
            (b, a)
        } else {
            (a, b)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Coord {
    F(usize),
    F03,
}

fn parse_coord(s: &str) -> Option<Coord> {
    let s = s.trim().to_ascii_lowercase();
    let digits = s.strip_prefix('f')?;
    match digits {
        "03" => Some(Coord::F03),
        _ => digits.parse().ok().map(Coord::F),
    }
}

/// Resolves strings like `"f0,f03"`, `"f3,f0"` or `"f3,f2"` for dimension
/// `dim`. Duality `f_i <-> f_{d-1-i}` and argument order are folded into a
/// canonical kind.
pub fn resolve_kind(text: &str, dim: usize) -> Result<ResolvedKind, CharacterizeError> {
    let unknown = || CharacterizeError::UnknownKind(text.to_string());
    let (x, y) = text.split_once(',').ok_or_else(unknown)?;
    let (x, y) = (parse_coord(x).ok_or_else(unknown)?, parse_coord(y).ok_or_else(unknown)?);
    if dim < 2 {
        return Err(CharacterizeError::InvalidDimension(dim));
    }
    if dim != 4 {
        let top = Coord::F(dim - 1);
        return match (x, y) {
            (Coord::F(0), b) if b == top => Ok(ResolvedKind {
                kind: PairKind::HighDim(dim),
                swap: false,
            }),
            (a, Coord::F(0)) if a == top => Ok(ResolvedKind {
                kind: PairKind::HighDim(dim),
                swap: true,
            }),
            _ => Err(unknown()),
        };
    }
    let dual = |c: Coord| match c {
        Coord::F(i) if i <= 3 => Some(Coord::F(3 - i)),
        Coord::F03 => Some(Coord::F03),
        _ => None,
    };
    let canonical = |a: Coord, b: Coord| match (a, b) {
        (Coord::F(0), Coord::F(3)) => Some(PairKind::F0F3),
        (Coord::F(0), Coord::F(1)) => Some(PairKind::F0F1),
        (Coord::F(0), Coord::F(2)) => Some(PairKind::F0F2),
        (Coord::F(1), Coord::F(2)) => Some(PairKind::F1F2),
        (Coord::F(0), Coord::F03) => Some(PairKind::F0F03),
        _ => None,
    };
    let (dx, dy) = (dual(x).ok_or_else(unknown)?, dual(y).ok_or_else(unknown)?);
    for (a, b, swap) in [(x, y, false), (y, x, true), (dx, dy, false), (dy, dx, true)] {
        if let Some(kind) = canonical(a, b) {
            return Ok(ResolvedKind { kind, swap });
        }
    }
    Err(unknown())
}

impl FromStr for PairKind {
    type Err = CharacterizeError;

    /// Parses a canonical 4-dimensional kind such as `"f0,f03"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let r = resolve_kind(s, 4)?;
        if r.swap {
            return Err(CharacterizeError::UnknownKind(s.to_string()));
        }
        Ok(r.kind)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Polytopal,
    Exceptional,
    OutOfBounds,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Polytopal => "Polytopal",
            Verdict::Exceptional => "Exceptional",
            Verdict::OutOfBounds => "OutOfBounds",
            Verdict::Unknown => "Unknown",
        })
    }
}

/// Why a verdict was reached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Reason {
    WithinBounds,
    /// A named inequality fails.
    Bound(&'static str),
    Sporadic,
    /// `f_03 = 2 f_0 (f_0 - 3) - k`.
    Family(u64),
    /// `f_2 = f_0^2 - 3 f_0 - 1`.
    NearUpperBound,
    /// On an excluded square-root curve.
    Curve,
    /// Odd facet count too close to the cyclic polytope.
    NonsimplicialBand,
    /// Listed in the registry of known small exceptions.
    Registry,
    Large,
    Small,
    UnresolvedOddBand,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::WithinBounds => write!(f, "within bounds"),
            Reason::Bound(b) => write!(f, "violates {b}"),
            Reason::Sporadic => write!(f, "sporadic pair"),
            Reason::Family(k) => write!(f, "f03 = 2f0(f0-3)-{k}"),
            Reason::NearUpperBound => write!(f, "f2 = f0^2-3f0-1"),
            Reason::Curve => write!(f, "on excluded curve"),
            Reason::NonsimplicialBand => {
                write!(f, "odd facet count above the non-simplicial bound")
            }
            Reason::Registry => write!(f, "known small exceptional pair"),
            Reason::Large => write!(f, "large pair"),
            Reason::Small => write!(f, "small pair, undecided"),
            Reason::UnresolvedOddBand => write!(f, "odd facet count in undecided band"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairStatus {
    pub verdict: Verdict,
    pub reason: Reason,
    pub witness_hint: Option<String>,
}

impl PairStatus {
    fn new(verdict: Verdict, reason: Reason) -> Self {
        PairStatus {
            verdict,
            reason,
            witness_hint: None,
        }
    }

    fn hint(mut self, h: impl Into<String>) -> Self {
        self.witness_hint = Some(h.into());
        self
    }

    pub fn is_polytopal(&self) -> bool {
        self.verdict == Verdict::Polytopal
    }
}

impl fmt::Display for PairStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.verdict, self.reason)
    }
}

pub const F0F03_SPORADIC: [(u64, u64); 18] = [
    (6, 24),
    (6, 25),
    (6, 28),
    (7, 28),
    (7, 30),
    (7, 31),
    (7, 33),
    (7, 34),
    (7, 37),
    (7, 40),
    (8, 33),
    (8, 34),
    (8, 37),
    (8, 40),
    (9, 37),
    (9, 40),
    (10, 40),
    (10, 43),
];

/// `k` with `f_03 = 2 f_0 (f_0 - 3) - k` impossible.
pub const F0F03_FAMILY: [u64; 7] = [1, 2, 3, 5, 6, 9, 13];

pub const F0F1_SPORADIC: [(u64, u64); 4] = [(6, 12), (7, 14), (8, 17), (10, 20)];

pub const F0F2_SPORADIC: [(u64, u64); 10] = [
    (6, 12),
    (6, 14),
    (7, 13),
    (7, 15),
    (8, 15),
    (8, 16),
    (9, 16),
    (10, 17),
    (11, 20),
    (13, 21),
];

pub const F1F2_SPORADIC: [(u64, u64); 22] = [
    (12, 12),
    (13, 14),
    (14, 13),
    (14, 14),
    (15, 15),
    (15, 16),
    (16, 15),
    (16, 17),
    (16, 18),
    (17, 16),
    (17, 20),
    (18, 16),
    (18, 18),
    (19, 21),
    (20, 17),
    (20, 23),
    (20, 24),
    (21, 19),
    (21, 26),
    (23, 20),
    (24, 20),
    (26, 21),
];

/// Known small exceptional `(f_0, f_{d-1})` pairs in dimension `d >= 5`.
/// Not exhaustive.
pub const HIGH_DIM_REGISTRY: [(usize, u64, u64); 1] = [(6, 8, 14)];

fn out(name: &'static str) -> PairStatus {
    PairStatus::new(Verdict::OutOfBounds, Reason::Bound(name))
}

fn polytopal() -> PairStatus {
    PairStatus::new(Verdict::Polytopal, Reason::WithinBounds)
}

fn exceptional(r: Reason) -> PairStatus {
    PairStatus::new(Verdict::Exceptional, r)
}

/// Least `t` with `t >= sqrt(x + 9/4) + 1/2`, i.e. least `t >= 1` with
/// `(2t - 1)^2 >= 4x + 9`.
pub fn ceil_sqrt_shift(x: u64) -> u64 {
    let target = 4 * x as u128 + 9;
    let r = (target as f64).sqrt() as u128;
    // exact correction around the float estimate
    let mut s = r.saturating_sub(2);
    while s * s < target {
        s += 1;
    }
    // s = ceil(sqrt(target)); 2t - 1 >= s with 2t - 1 odd
    let odd = if s % 2 == 1 { s } else { s + 1 };
    ((odd + 1) / 2) as u64
}

/// `½ x + ⌈√(x + 9/4) + ½⌉ + 1 <= y`, doubled: `x + 2t + 2 <= 2y`; the
/// outer `10 <= ...` becomes `20 <= x + 2t + 2`.
fn f1f2_lower(x: u64, y: u64) -> bool {
    let t = ceil_sqrt_shift(x);
    let lhs = x + 2 * t + 2;
    lhs >= 20 && lhs <= 2 * y
}

/// `y = ½ x + √(x + 13/4) + 2` holds iff `(2y - x - 4)^2 = 4x + 13` with
/// `2y - x - 4 > 0`.
pub fn on_f1f2_curve(x: u64, y: u64) -> bool {
    let z = 2 * y as i128 - x as i128 - 4;
    z > 0 && z * z == 4 * x as i128 + 13
}

/// Decides a 4-dimensional pair; `HighDim` kinds are passed on to
/// [`membership_high`] with refined thresholds.
pub fn membership4(kind: PairKind, a: u64, b: u64) -> PairStatus {
    match kind {
        PairKind::F0F3 => {
            // 5 <= a <= b(b-3)/2 and 5 <= b <= a(a-3)/2, doubled
            if a < 5 || b < 5 {
                return out("5 <= f0, 5 <= f3");
            }
            if 2 * a > b * (b - 3) {
                return out("f0 <= f3(f3-3)/2");
            }
            if 2 * b > a * (a - 3) {
                return out("f3 <= f0(f0-3)/2");
            }
            polytopal()
        }
        PairKind::F0F1 => {
            if 2 * a < 10 || 2 * a > b {
                return out("10 <= 2f0 <= f1");
            }
            if 2 * b > a * (a - 1) {
                return out("f1 <= f0(f0-1)/2");
            }
            if F0F1_SPORADIC.contains(&(a, b)) {
                return exceptional(Reason::Sporadic);
            }
            polytopal()
        }
        PairKind::F0F2 => {
            // ½(2a + 3 + √(8a+9)) <= b  iff  x = 2b - 2a - 3 >= 0 and x^2 >= 8a + 9
            let x = 2 * b as i128 - 2 * a as i128 - 3;
            if x < 0 || x * x < 8 * a as i128 + 9 {
                return out("f2 >= (2f0+3+sqrt(8f0+9))/2");
            }
            // 10 <= ½(2a + 3 + √(8a+9))  iff  √(8a+9) >= 17 - 2a
            let r = 17 - 2 * a as i128;
            if r > 0 && 8 * a as i128 + 9 < r * r {
                return out("(2f0+3+sqrt(8f0+9))/2 >= 10");
            }
            if b > a * a - 3 * a {
                return out("f2 <= f0^2-3f0");
            }
            if b == a * a - 3 * a - 1 {
                return exceptional(Reason::NearUpperBound);
            }
            if F0F2_SPORADIC.contains(&(a, b)) {
                return exceptional(Reason::Sporadic);
            }
            polytopal()
        }
        PairKind::F1F2 => {
            if !f1f2_lower(a, b) {
                return out("f2 >= f1/2 + ceil(sqrt(f1+9/4)+1/2) + 1");
            }
            if !f1f2_lower(b, a) {
                return out("f1 >= f2/2 + ceil(sqrt(f2+9/4)+1/2) + 1");
            }
            if on_f1f2_curve(a, b) || on_f1f2_curve(b, a) {
                return exceptional(Reason::Curve);
            }
            if F1F2_SPORADIC.contains(&(a, b)) {
                return exceptional(Reason::Sporadic);
            }
            polytopal()
        }
        PairKind::F0F03 => {
            if a < 5 || 4 * a > b {
                return out("20 <= 4f0 <= f03");
            }
            let top = 2 * a * (a - 3);
            if b > top {
                return out("f03 <= 2f0(f0-3)");
            }
            if F0F03_SPORADIC.contains(&(a, b)) {
                return exceptional(Reason::Sporadic);
            }
            if let Some(&k) = F0F03_FAMILY.iter().find(|&&k| top.checked_sub(k) == Some(b)) {
                return exceptional(Reason::Family(k));
            }
            let st = polytopal();
            if b == top {
                st.hint(format!("cyclic(4,{a})"))
            } else {
                st
            }
        }
        PairKind::HighDim(d) => membership_high(d, a, b, true).unwrap_or_else(|_| out("d >= 2")),
    }
}

/// Any verdict for a kind string, after duality and argument order are
/// resolved.
pub fn membership(kind: &str, dim: usize, a: u64, b: u64, refined: bool) -> Result<PairStatus, CharacterizeError> {
    let r = resolve_kind(kind, dim)?;
    let (x, y) = r.order(a, b);
    Ok(match r.kind {
        PairKind::HighDim(d) => membership_high(d, x, y, refined)?,
        k => membership4(k, x, y),
    })
}

fn facets_cyclic(d: usize, n: u64) -> BigUint {
    cyclic_facet_count(d, n as usize).expect("n >= d + 1 checked by caller")
}

/// Sum threshold above which every pair within the upper bounds is
/// decided: `C(3d+1, ⌊d/2⌋)`, or 58 (d=5) and 132 (d=6) when refined.
pub fn large_threshold(d: usize, refined: bool) -> BigUint {
    match (d, refined) {
        (5, true) => BigUint::from(58u32),
        (6, true) => BigUint::from(132u32),
        _ => binomial(3 * d as u64 + 1, (d / 2) as u64),
    }
}

/// Most facets of a non-simplicial `d`-polytope with `n` vertices.
pub fn nonsimplicial_facet_bound(d: usize, n: u64) -> Result<BigUint, CharacterizeError> {
    if d < 2 || n < d as u64 + 1 {
        return Err(CharacterizeError::InvalidDimension(d));
    }
    Ok(facets_cyclic(d, n) - BigUint::from((d / 2) as u64))
}

/// `(n, m) = (f_0, f_{d-1})` in dimension `d`.
pub fn membership_high(d: usize, n: u64, m: u64, refined: bool) -> Result<PairStatus, CharacterizeError> {
    if d < 2 {
        return Err(CharacterizeError::InvalidDimension(d));
    }
    let lo = d as u64 + 1;
    if n < lo || m < lo {
        return Ok(out("n, m >= d+1"));
    }
    let (bn, bm) = (BigUint::from(n), BigUint::from(m));
    let cn = facets_cyclic(d, n);
    let cm = facets_cyclic(d, m);
    if bm > cn {
        return Ok(out("m <= f(C_d(n))"));
    }
    if bn > cm {
        return Ok(out("n <= f(C_d(m))"));
    }
    if d == 4 {
        return Ok(membership4(PairKind::F0F3, n, m));
    }
    let neighborly = bm == cn;
    let with_hint = |s: PairStatus| {
        if neighborly && s.is_polytopal() {
            s.hint(format!("cyclic({d},{n})"))
        } else {
            s
        }
    };
    if d <= 3 {
        return Ok(with_hint(polytopal()));
    }
    if HIGH_DIM_REGISTRY.contains(&(d, n, m)) {
        return Ok(exceptional(Reason::Registry));
    }
    let half = BigUint::from((d / 2) as u64);
    let large = BigUint::from(n + m) >= large_threshold(d, refined);
    if d % 2 == 1 {
        let in_band = |x: &BigUint, c: &BigUint| x % 2u32 == BigUint::from(1u32) && &(c - &half) < x && x < c;
        if in_band(&bm, &cn) || in_band(&bn, &cm) {
            return Ok(exceptional(Reason::NonsimplicialBand));
        }
        let unresolved = |x: &BigUint, y: u64, c: &BigUint| {
            x % 2u32 == BigUint::from(1u32) && facets_cyclic(d, y - 1) < *x && *x <= c - &half
        };
        if (n > lo && unresolved(&bm, n, &cn)) || (m > lo && unresolved(&bn, m, &cm)) {
            return Ok(PairStatus::new(Verdict::Unknown, Reason::UnresolvedOddBand));
        }
    }
    Ok(if large {
        with_hint(PairStatus::new(Verdict::Polytopal, Reason::Large))
    } else {
        PairStatus::new(Verdict::Unknown, Reason::Small)
    })
}

/// Exceptional pair with its annotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalPair {
    pub a: u64,
    pub b: u64,
    pub reason: Reason,
}

/// Largest second coordinate that can be within bounds for first
/// coordinate `a`.
fn second_max(kind: PairKind, a: u64) -> u64 {
    match kind {
        PairKind::F0F3 => a * a.saturating_sub(3) / 2,
        PairKind::F0F1 => a * a.saturating_sub(1) / 2,
        PairKind::F0F2 => a * a.saturating_sub(3),
        PairKind::F1F2 => 2 * a,
        PairKind::F0F03 => 2 * a * a.saturating_sub(3),
        PairKind::HighDim(_) => 0,
    }
}

/// All exceptional pairs with first coordinate in `range`.
pub fn exceptional_pairs4(kind: PairKind, range: std::ops::RangeInclusive<u64>) -> Vec<ExceptionalPair> {
    let mut outv = Vec::new();
    for a in range {
        for b in 1..=second_max(kind, a) {
            let s = membership4(kind, a, b);
            if s.verdict == Verdict::Exceptional {
                outv.push(ExceptionalPair { a, b, reason: s.reason });
            }
        }
    }
    outv
}

/// Necessary flag-vector conditions that are not characterizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlagPairKind {
    F0F02,
    F1F02,
}

/// `6 f_0 <= f_02 <= 3 f_0 (f_0 - 3)` or `3 f_1 <= f_02 <= 6 f_1 - 3√(8 f_1 + 1) - 3`.
pub fn flag_necessary_bounds(kind: FlagPairKind, a: u64, b: u64) -> bool {
    let (a, b) = (a as i128, b as i128);
    match kind {
        FlagPairKind::F0F02 => 6 * a <= b && b <= 3 * a * (a - 3),
        FlagPairKind::F1F02 => {
            // b <= 6a - 3 - 3√(8a+1)  iff  r = 6a - 3 - b >= 0 and r^2 >= 9(8a+1)
            let r = 6 * a - 3 - b;
            3 * a <= b && r >= 0 && r * r >= 9 * (8 * a + 1)
        }
    }
}

/// `(f_1 + f_2 - 20) / (f_0 + f_3 - 10)` as an exact fraction.
pub fn fatness(f: &FVector) -> Result<Ratio<i64>, CharacterizeError> {
    if f.dim() != 4 {
        return Err(CharacterizeError::NotFourDimensional(f.dim()));
    }
    let e = |i: usize| f.get(i) as i64;
    let den = e(0) + e(3) - 10;
    if den == 0 {
        return Err(CharacterizeError::DegenerateDenominator);
    }
    Ok(Ratio::new(e(1) + e(2) - 20, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn f0f03_examples() {
        assert_eq!(membership4(PairKind::F0F03, 6, 24).reason, Reason::Sporadic);
        assert_eq!(membership4(PairKind::F0F03, 6, 35).reason, Reason::Family(1));
        assert!(membership4(PairKind::F0F03, 5, 20).is_polytopal());
        assert_eq!(membership4(PairKind::F0F03, 5, 19).verdict, Verdict::OutOfBounds);
        assert_eq!(membership4(PairKind::F0F03, 6, 37).verdict, Verdict::OutOfBounds);
    }

    #[test]
    fn f1f2_examples() {
        assert!(membership4(PairKind::F1F2, 10, 10).is_polytopal());
        assert_eq!(membership4(PairKind::F1F2, 27, 21).reason, Reason::Curve);
        assert_eq!(membership4(PairKind::F1F2, 21, 27).reason, Reason::Curve);
        assert_eq!(ceil_sqrt_shift(10), 4);
    }

    #[test]
    fn ceil_sqrt_matches_definition() {
        for x in 0..5000u64 {
            let t = ceil_sqrt_shift(x);
            let ok = |t: u64| (2 * t as i128 - 1).pow(2) >= 4 * x as i128 + 9;
            assert!(ok(t) && !ok(t - 1), "x={x}");
        }
    }

    #[test]
    fn kind_resolution() {
        assert_eq!(
            resolve_kind("f3,f0", 4).unwrap(),
            ResolvedKind { kind: PairKind::F0F3, swap: true }
        );
        assert_eq!(resolve_kind("f3,f2", 4).unwrap().kind, PairKind::F0F1);
        assert_eq!(resolve_kind("f3,f03", 4).unwrap().kind, PairKind::F0F03);
        assert_eq!(resolve_kind("f2,f1", 4).unwrap(), ResolvedKind { kind: PairKind::F1F2, swap: true });
        assert_eq!(resolve_kind("f0,f5", 6).unwrap().kind, PairKind::HighDim(6));
        assert!(resolve_kind("f0,f9", 4).is_err());
        assert_eq!("f0,f03".parse::<PairKind>().unwrap(), PairKind::F0F03);
    }

    #[test]
    fn high_dim_examples() {
        assert_eq!(membership_high(6, 8, 14, true).unwrap().reason, Reason::Registry);
        assert_eq!(membership_high(5, 8, 19, true).unwrap().reason, Reason::NonsimplicialBand);
        let m = cyclic_facet_count(6, 500).unwrap().to_u64().unwrap();
        assert!(membership_high(6, 500, m, true).unwrap().is_polytopal());
        assert!(membership_high(4, 7, 14, true).unwrap().is_polytopal());
        assert_eq!(nonsimplicial_facet_bound(5, 8).unwrap(), BigUint::from(18u32));
        assert_eq!(nonsimplicial_facet_bound(4, 7).unwrap(), BigUint::from(12u32));
        assert_eq!(nonsimplicial_facet_bound(3, 5).unwrap(), BigUint::from(5u32));
        assert_eq!(large_threshold(6, false), BigUint::from(969u32));
    }

    #[test]
    fn flag_bounds_and_fatness() {
        assert!(flag_necessary_bounds(FlagPairKind::F0F02, 5, 30));
        assert!(!flag_necessary_bounds(FlagPairKind::F0F02, 6, 55));
        assert!(flag_necessary_bounds(FlagPairKind::F1F02, 10, 30));
        assert_eq!(
            fatness(&FVector::new(vec![5, 10, 10, 5])),
            Err(CharacterizeError::DegenerateDenominator)
        );
        assert_eq!(fatness(&FVector::new(vec![6, 15, 18, 9])).unwrap(), Ratio::new(13, 5));
        assert_eq!(fatness(&FVector::new(vec![8, 24, 32, 16])).unwrap(), Ratio::new(18, 7));
    }
}
