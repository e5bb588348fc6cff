use std::fmt;

use fixedbitset::FixedBitSet;

use super::FaceLattice;

/// Face counts `f_0, ..., f_{d-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn new(entries: Vec<u64>) -> Self {
        FVector(entries)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u64 {
        self.0[i]
    }

    pub fn reversed(&self) -> FVector {
        FVector(self.0.iter().rev().copied().collect())
    }

    /// Alternating sum `f_0 - f_1 + f_2 - ...`.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
            .sum()
    }

    pub fn satisfies_euler(&self) -> bool {
        let d = self.0.len();
        self.euler_characteristic() == if d % 2 == 0 { 0 } else { 2 }
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Chain counts `f_S` for every `S ⊆ {0, ..., d-1}`, indexed by bitmask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlagVector {
    dim: usize,
    values: Vec<u64>,
}

/// A linear relation or inequality every 4-dimensional flag vector obeys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FlagIdentity {
    Euler,
    /// `f_01 = 2 f_1`
    F01,
    /// `f_12 = f_02`
    F12,
    /// `f_13 = f_02`
    F13,
    /// `f_23 = 2 f_2`
    F23,
    /// `f_012 = 2 f_02`
    F012,
    /// `f_013 = 2 f_02`
    F013,
    /// `f_023 = 2 f_02`
    F023,
    /// `f_123 = 2 f_02`
    F123,
    /// `f_0123 = 4 f_02`
    F0123,
    /// `f_02 = -2 f_0 + 2 f_1 + f_03`
    F02FromF03,
    /// `f_03 - 3 f_0 - 3 f_3 + 10 >= 0`
    FacetInequality,
    /// `4 f_0 - 4 f_1 + f_03 <= 0`
    EdgeInequality,
}

impl FlagIdentity {
    pub const ALL: [FlagIdentity; 13] = [
        FlagIdentity::Euler,
        FlagIdentity::F01,
        FlagIdentity::F12,
        FlagIdentity::F13,
        FlagIdentity::F23,
        FlagIdentity::F012,
        FlagIdentity::F013,
        FlagIdentity::F023,
        FlagIdentity::F123,
        FlagIdentity::F0123,
        FlagIdentity::F02FromF03,
        FlagIdentity::FacetInequality,
        FlagIdentity::EdgeInequality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FlagIdentity::Euler => "euler",
            FlagIdentity::F01 => "f01=2f1",
            FlagIdentity::F12 => "f12=f02",
            FlagIdentity::F13 => "f13=f02",
            FlagIdentity::F23 => "f23=2f2",
            FlagIdentity::F012 => "f012=2f02",
            FlagIdentity::F013 => "f013=2f02",
            FlagIdentity::F023 => "f023=2f02",
            FlagIdentity::F123 => "f123=2f02",
            FlagIdentity::F0123 => "f0123=4f02",
            FlagIdentity::F02FromF03 => "f02=-2f0+2f1+f03",
            FlagIdentity::FacetInequality => "f03-3f0-3f3+10>=0",
            FlagIdentity::EdgeInequality => "4f0-4f1+f03<=0",
        }
    }

    /// Evaluates the relation on a 4-dimensional flag vector.
    pub fn holds(self, fv: &FlagVector) -> bool {
        let g = |s: &[usize]| fv.get(s) as i64;
        let f02 = g(&[0, 2]);
        match self {
            FlagIdentity::Euler => g(&[0]) - g(&[1]) + g(&[2]) - g(&[3]) == 0,
            FlagIdentity::F01 => g(&[0, 1]) == 2 * g(&[1]),
            FlagIdentity::F12 => g(&[1, 2]) == f02,
            FlagIdentity::F13 => g(&[1, 3]) == f02,
            FlagIdentity::F23 => g(&[2, 3]) == 2 * g(&[2]),
            FlagIdentity::F012 => g(&[0, 1, 2]) == 2 * f02,
            FlagIdentity::F013 => g(&[0, 1, 3]) == 2 * f02,
            FlagIdentity::F023 => g(&[0, 2, 3]) == 2 * f02,
            FlagIdentity::F123 => g(&[1, 2, 3]) == 2 * f02,
            FlagIdentity::F0123 => g(&[0, 1, 2, 3]) == 4 * f02,
            FlagIdentity::F02FromF03 => f02 == -2 * g(&[0]) + 2 * g(&[1]) + g(&[0, 3]),
            FlagIdentity::FacetInequality => g(&[0, 3]) - 3 * g(&[0]) - 3 * g(&[3]) + 10 >= 0,
            FlagIdentity::EdgeInequality => 4 * g(&[0]) - 4 * g(&[1]) + g(&[0, 3]) <= 0,
        }
    }
}

impl FlagVector {
    pub fn from_values(dim: usize, values: Vec<u64>) -> Self {
        assert_eq!(values.len(), 1 << dim, "flag vector needs 2^d entries");
        FlagVector { dim, values }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Value at the subset given as a bitmask over ranks.
    pub fn by_mask(&self, mask: usize) -> u64 {
        self.values[mask]
    }

    /// Value at the subset `s` of ranks; order and repeats are ignored.
    pub fn get(&self, s: &[usize]) -> u64 {
        let mask = s.iter().fold(0usize, |m, &i| m | (1 << i));
        self.values[mask]
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn f_vector(&self) -> FVector {
        FVector::new((0..self.dim).map(|i| self.values[1 << i]).collect())
    }

    /// `(f_0, f_{0,d-1})`.
    pub fn pair(&self) -> (u64, u64) {
        (self.get(&[0]), self.get(&[0, self.dim - 1]))
    }

    /// Flag vector of the dual: rank `i` becomes `d-1-i`.
    pub fn reversed(&self) -> FlagVector {
        let d = self.dim;
        let mut values = vec![0; self.values.len()];
        for (mask, &v) in self.values.iter().enumerate() {
            let mut r = 0usize;
            for i in 0..d {
                if mask & (1 << i) != 0 {
                    r |= 1 << (d - 1 - i);
                }
            }
            values[r] = v;
        }
        FlagVector { dim: d, values }
    }

    /// Relations that fail; always empty for a genuine 4-polytope.
    pub fn violated_identities(&self) -> Vec<FlagIdentity> {
        if self.dim != 4 {
            return Vec::new();
        }
        FlagIdentity::ALL
            .iter()
            .copied()
            .filter(|id| !id.holds(self))
            .collect()
    }
}

impl fmt::Display for FlagVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for mask in 1..self.values.len() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "f")?;
            for i in 0..self.dim {
                if mask & (1 << i) != 0 {
                    write!(f, "{i}")?;
                }
            }
            write!(f, "={}", self.values[mask])?;
        }
        Ok(())
    }
}

/// Counts chains rank set by rank set. For each mask, `count[x]` is the
/// number of chains ending in `x` whose ranks are the mask's ranks up to
/// `rank(x)`.
pub(crate) fn compute(l: &FaceLattice) -> FlagVector {
    let d = l.dim();
    let k = l.len();
    let by_rank: Vec<Vec<usize>> = (0..d as i32).map(|r| l.faces_of_rank(r)).collect();

    // strict down-sets
    let mut below: Vec<FixedBitSet> = Vec::with_capacity(k);
    for x in 0..k {
        let mut s = FixedBitSet::with_capacity(k);
        for &y in l.covers_down(x) {
            s.insert(y);
            s.union_with(&below[y]);
        }
        below.push(s);
    }

    let mut values = vec![0u64; 1 << d];
    values[0] = 1;
    let mut count = vec![0u64; k];
    for mask in 1usize..(1 << d) {
        let ranks: Vec<usize> = (0..d).filter(|&i| mask & (1 << i) != 0).collect();
        for &x in &by_rank[ranks[0]] {
            count[x] = 1;
        }
        for w in ranks.windows(2) {
            for &y in &by_rank[w[1]] {
                count[y] = by_rank[w[0]]
                    .iter()
                    .filter(|&&x| below[y].contains(x))
                    .map(|&x| count[x])
                    .sum();
            }
        }
        let last = *ranks.last().unwrap();
        values[mask] = by_rank[last].iter().map(|&x| count[x]).sum();
    }
    FlagVector { dim: d, values }
}
