use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use thiserror::Error;

use super::{FVector, FlagVector, VertexFacetIncidence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("face poset is not graded: {0}")]
    NotGraded(String),
    #[error("faces {0:?} and {1:?} have no unique greatest common lower bound")]
    NotLattice(Vec<usize>, Vec<usize>),
    #[error("interval from {lower:?} to {upper:?} has {middle} middle elements instead of 2")]
    DiamondViolation {
        lower: Vec<usize>,
        upper: Vec<usize>,
        middle: usize,
    },
    #[error("Euler characteristic is {found}, expected {expected}")]
    EulerViolation { found: i64, expected: i64 },
}

/// A face as a vertex set plus its rank (dimension).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub rank: i32,
}

/// Outcome of the structural checks on a face lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeChecks {
    pub graded: bool,
    pub lattice: bool,
    pub diamond: bool,
    pub euler: bool,
}

impl LatticeChecks {
    pub fn all_pass(&self) -> bool {
        self.graded && self.lattice && self.diamond && self.euler
    }
}

/// The face poset of a polytope, ordered by inclusion.
///
/// Faces are sorted by cardinality, so index 0 is the empty face and the
/// last index is the polytope itself.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    dim: usize,
    num_vertices: usize,
    sets: Vec<FixedBitSet>,
    levels: Vec<usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    index: HashMap<FixedBitSet, usize>,
}

pub(crate) fn build_face_lattice(p: &VertexFacetIncidence) -> Result<FaceLattice, LatticeError> {
    let n = p.num_vertices();
    let facets = p.facet_sets();

    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut stack: Vec<FixedBitSet> = Vec::new();
    for f in &facets {
        if seen.insert(f.clone()) {
            stack.push(f.clone());
        }
    }
    while let Some(x) = stack.pop() {
        for f in &facets {
            let mut y = x.clone();
            y.intersect_with(f);
            if !seen.contains(&y) {
                seen.insert(y.clone());
                stack.push(y);
            }
        }
    }
    let empty = FixedBitSet::with_capacity(n);
    seen.insert(empty);
    let mut full = FixedBitSet::with_capacity(n);
    full.insert_range(..);
    seen.insert(full.clone());

    let mut sets: Vec<FixedBitSet> = seen.into_iter().collect();
    sets.sort_by(|a, b| {
        a.count_ones(..)
            .cmp(&b.count_ones(..))
            .then_with(|| a.ones().cmp(b.ones()))
    });
    let index: HashMap<FixedBitSet, usize> =
        sets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let top = sets.len() - 1;

    // facets containing each vertex, as bitsets over facet indices
    let m = facets.len();
    let mut vertex_facets = vec![FixedBitSet::with_capacity(m); n];
    for (j, f) in facets.iter().enumerate() {
        for v in f.ones() {
            vertex_facets[v].insert(j);
        }
    }

    let mut up: Vec<Vec<usize>> = vec![Vec::new(); sets.len()];
    for (xi, x) in sets.iter().enumerate() {
        if xi == top {
            continue;
        }
        let mut above = FixedBitSet::with_capacity(m);
        above.insert_range(..);
        for v in x.ones() {
            above.intersect_with(&vertex_facets[v]);
        }
        let mut candidates: Vec<usize> = Vec::new();
        for v in 0..n {
            if x.contains(v) {
                continue;
            }
            let mut fs = above.clone();
            fs.intersect_with(&vertex_facets[v]);
            let c = if fs.is_clear() {
                top
            } else {
                let mut y = full.clone();
                for j in fs.ones() {
                    y.intersect_with(&facets[j]);
                }
                index[&y]
            };
            if !candidates.contains(&c) {
                candidates.push(c);
            }
        }
        let minimal: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&c| {
                !candidates
                    .iter()
                    .any(|&d| d != c && sets[d].is_subset(&sets[c]))
            })
            .collect();
        let mut minimal = minimal;
        minimal.sort_unstable();
        up[xi] = minimal;
    }

    let mut down: Vec<Vec<usize>> = vec![Vec::new(); sets.len()];
    for (x, ys) in up.iter().enumerate() {
        for &y in ys {
            down[y].push(x);
        }
    }

    // longest chain from the empty face
    let mut levels = vec![0usize; sets.len()];
    for x in 0..sets.len() {
        for &y in &up[x] {
            levels[y] = levels[y].max(levels[x] + 1);
        }
    }

    let lattice = FaceLattice {
        dim: p.dim(),
        num_vertices: n,
        sets,
        levels,
        up,
        down,
        index,
    };
    lattice.check_graded()?;
    Ok(lattice)
}

impl FaceLattice {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Number of elements including the empty face and the polytope.
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn rank(&self, face: usize) -> i32 {
        self.levels[face] as i32 - 1
    }

    pub fn vertices(&self, face: usize) -> Vec<usize> {
        self.sets[face].ones().collect()
    }

    pub fn face(&self, face: usize) -> Face {
        Face {
            vertices: self.vertices(face),
            rank: self.rank(face),
        }
    }

    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.len()).map(|i| self.face(i))
    }

    /// Index of the face with exactly this vertex set.
    pub fn find(&self, vertices: &[usize]) -> Option<usize> {
        if vertices.iter().any(|&v| v >= self.num_vertices) {
            return None;
        }
        let s = super::to_bitset(self.num_vertices, vertices);
        self.index.get(&s).copied()
    }

    /// Faces covering `face`.
    pub fn covers_up(&self, face: usize) -> &[usize] {
        &self.up[face]
    }

    /// Faces covered by `face`.
    pub fn covers_down(&self, face: usize) -> &[usize] {
        &self.down[face]
    }

    /// Indices of faces of the given rank.
    pub fn faces_of_rank(&self, rank: i32) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.rank(i) == rank).collect()
    }

    pub fn f_vector(&self) -> FVector {
        let mut f = vec![0u64; self.dim];
        for i in 0..self.len() {
            let r = self.rank(i);
            if r >= 0 && (r as usize) < self.dim {
                f[r as usize] += 1;
            }
        }
        FVector::new(f)
    }

    pub fn flag_vector(&self) -> FlagVector {
        super::flag::compute(self)
    }

    fn check_graded(&self) -> Result<(), LatticeError> {
        let top = self.len() - 1;
        if self.levels[top] != self.dim + 1 {
            return Err(LatticeError::NotGraded(format!(
                "longest chain has length {}, expected {}",
                self.levels[top],
                self.dim + 1
            )));
        }
        for (x, ys) in self.up.iter().enumerate() {
            for &y in ys {
                if self.levels[y] != self.levels[x] + 1 {
                    return Err(LatticeError::NotGraded(format!(
                        "cover {:?} < {:?} skips ranks {} to {}",
                        self.vertices(x),
                        self.vertices(y),
                        self.rank(x),
                        self.rank(y)
                    )));
                }
            }
        }
        let points: Vec<usize> = self.faces_of_rank(0);
        let singletons = points
            .iter()
            .all(|&i| self.sets[i].count_ones(..) == 1);
        if points.len() != self.num_vertices || !singletons {
            return Err(LatticeError::NotGraded(
                "rank-0 faces are not exactly the vertices".into(),
            ));
        }
        Ok(())
    }

    /// Every interval of length two has exactly two middle elements.
    pub fn check_diamond(&self) -> Result<(), LatticeError> {
        let mut count: HashMap<usize, usize> = HashMap::new();
        for x in 0..self.len() {
            count.clear();
            for &y in &self.up[x] {
                for &z in &self.up[y] {
                    *count.entry(z).or_insert(0) += 1;
                }
            }
            if let Some((&z, &c)) = count.iter().filter(|(_, &c)| c != 2).min() {
                return Err(LatticeError::DiamondViolation {
                    lower: self.vertices(x),
                    upper: self.vertices(z),
                    middle: c,
                });
            }
        }
        Ok(())
    }

    /// Down-sets as bitsets over face indices, derived from covers only.
    fn downsets(&self) -> Vec<FixedBitSet> {
        let k = self.len();
        let mut ds: Vec<FixedBitSet> = Vec::with_capacity(k);
        for x in 0..k {
            let mut d = FixedBitSet::with_capacity(k);
            d.insert(x);
            for &y in &self.down[x] {
                d.union_with(&ds[y]);
            }
            ds.push(d);
        }
        ds
    }

    /// Meets exist and equal set intersection: the order ideal below
    /// `x ∩ y` must be exactly the common lower bounds of `x` and `y`.
    pub fn check_lattice(&self) -> Result<(), LatticeError> {
        let ds = self.downsets();
        for x in 0..self.len() {
            for y in (x + 1)..self.len() {
                let mut s = self.sets[x].clone();
                s.intersect_with(&self.sets[y]);
                let common = ds[x].intersection(&ds[y]).collect::<FixedBitSet>();
                let ok = match self.index.get(&s) {
                    Some(&m) => {
                        let mut cm = common.clone();
                        cm.grow(ds[m].len());
                        cm == ds[m]
                    }
                    None => false,
                };
                if !ok {
                    return Err(LatticeError::NotLattice(self.vertices(x), self.vertices(y)));
                }
            }
        }
        Ok(())
    }

    /// Euler–Poincaré relation for the proper nonempty faces.
    pub fn check_euler(&self) -> Result<(), LatticeError> {
        let f = self.f_vector();
        let found: i64 = f
            .entries()
            .iter()
            .enumerate()
            .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
            .sum();
        let expected = if self.dim % 2 == 0 { 0 } else { 2 };
        if found != expected {
            return Err(LatticeError::EulerViolation { found, expected });
        }
        Ok(())
    }

    /// Runs every check and reports each result.
    pub fn checks(&self) -> LatticeChecks {
        LatticeChecks {
            graded: self.check_graded().is_ok(),
            lattice: self.check_lattice().is_ok(),
            diamond: self.check_diamond().is_ok(),
            euler: self.check_euler().is_ok(),
        }
    }

    /// Runs every check and fails on the first violation.
    pub fn verify(&self) -> Result<(), LatticeError> {
        self.check_graded()?;
        self.check_diamond()?;
        self.check_euler()?;
        self.check_lattice()
    }
}
