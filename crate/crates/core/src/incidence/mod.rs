//! Combinatorial polytopes given by vertex-facet incidences.
//!
//! A [`VertexFacetIncidence`] stores a polytope as the list of vertex sets of
//! its facets. Everything else (faces of all dimensions, f- and flag vectors,
//! duals, local structure) is derived from it.

mod flag;
mod lattice;
mod local;

use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub use flag::{FVector, FlagIdentity, FlagVector};
pub use lattice::{Face, FaceLattice, LatticeChecks, LatticeError};
pub use local::{BipyramidFacet, LocalStructure};
pub(crate) use local::distinct_ridges as local_ridges;

/// Vertex index. Vertices of an incidence are always `0..num_vertices`.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IncidenceError {
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("a {dim}-polytope needs at least {} facets, got {facets}", dim + 1)]
    TooFewFacets { dim: usize, facets: usize },
    #[error("a {dim}-polytope needs at least {} vertices, got {vertices}", dim + 1)]
    TooFewVertices { dim: usize, vertices: usize },
    #[error("facet {facet} has {size} vertices, fewer than the dimension {dim}")]
    FacetTooSmall { facet: usize, size: usize, dim: usize },
    #[error("vertex {vertex} lies in {count} facets, a {dim}-polytope needs at least {dim}")]
    VertexInTooFewFacets { vertex: VertexId, count: usize, dim: usize },
    #[error("facet {inner} is contained in facet {outer}")]
    NestedFacets { inner: usize, outer: usize },
}

/// A combinatorial `dim`-polytope: facets as sorted vertex lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexFacetIncidence {
    dim: usize,
    num_vertices: usize,
    facets: Vec<Vec<VertexId>>,
}

impl VertexFacetIncidence {
    /// Validates and builds an incidence. Facet order is kept, vertex lists
    /// inside each facet are sorted and deduplicated.
    pub fn new(dim: usize, facets: Vec<Vec<VertexId>>) -> Result<Self, IncidenceError> {
        let p = Self::new_unchecked(dim, facets);
        p.validate()?;
        Ok(p)
    }

    pub(crate) fn new_unchecked(dim: usize, mut facets: Vec<Vec<VertexId>>) -> Self {
        for f in &mut facets {
            f.sort_unstable();
            f.dedup();
        }
        let num_vertices = facets
            .iter()
            .flat_map(|f| f.iter().copied())
            .max()
            .map_or(0, |m| m + 1);
        Self {
            dim,
            num_vertices,
            facets,
        }
    }

    fn validate(&self) -> Result<(), IncidenceError> {
        let dim = self.dim;
        if dim < 2 {
            return Err(IncidenceError::DimensionTooSmall(dim));
        }
        if self.facets.len() < dim + 1 {
            return Err(IncidenceError::TooFewFacets {
                dim,
                facets: self.facets.len(),
            });
        }
        if self.num_vertices < dim + 1 {
            return Err(IncidenceError::TooFewVertices {
                dim,
                vertices: self.num_vertices,
            });
        }
        for (i, f) in self.facets.iter().enumerate() {
            if f.len() < dim {
                return Err(IncidenceError::FacetTooSmall {
                    facet: i,
                    size: f.len(),
                    dim,
                });
            }
        }
        let degrees = self.vertex_degrees();
        if let Some((vertex, &count)) = degrees.iter().enumerate().find(|(_, &c)| c < dim) {
            return Err(IncidenceError::VertexInTooFewFacets { vertex, count, dim });
        }
        let sets = self.facet_sets();
        for (i, a) in sets.iter().enumerate() {
            for (j, b) in sets.iter().enumerate() {
                if i != j && a.is_subset(b) && (a != b || i > j) {
                    return Err(IncidenceError::NestedFacets { inner: i, outer: j });
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn facets(&self) -> &[Vec<VertexId>] {
        &self.facets
    }

    pub fn facet(&self, index: usize) -> Option<&[VertexId]> {
        self.facets.get(index).map(Vec::as_slice)
    }

    /// Vertex-facet incidences, i.e. `f_{0,d-1}`.
    pub fn num_incidences(&self) -> usize {
        self.facets.iter().map(Vec::len).sum()
    }

    /// `(f_0, f_{0,d-1})`, read off the incidences directly.
    pub fn pair(&self) -> (u64, u64) {
        (self.num_vertices as u64, self.num_incidences() as u64)
    }

    /// Number of facets containing each vertex.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices];
        for f in &self.facets {
            for &v in f {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Indices of the facets containing `v`.
    pub fn facets_containing(&self, v: VertexId) -> Vec<usize> {
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, f)| f.binary_search(&v).is_ok())
            .map(|(i, _)| i)
            .collect()
    }

    pub(crate) fn facet_sets(&self) -> Vec<FixedBitSet> {
        self.facets
            .iter()
            .map(|f| to_bitset(self.num_vertices, f))
            .collect()
    }

    pub fn is_simple_vertex(&self, v: VertexId) -> bool {
        v < self.num_vertices && self.facets_containing(v).len() == self.dim
    }

    /// Ridges of facet `index` together with the neighbouring facet across
    /// each ridge. Ridges are the inclusion-maximal intersections with other
    /// facets.
    pub fn facet_ridges(&self, index: usize) -> Vec<(usize, Vec<VertexId>)> {
        let f = &self.facets[index];
        let inters: Vec<(usize, Vec<VertexId>)> = self
            .facets
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != index)
            .map(|(j, g)| (j, intersect_sorted(f, g)))
            .filter(|(_, r)| !r.is_empty())
            .collect();
        inters
            .iter()
            .filter(|(_, r)| {
                !inters
                    .iter()
                    .any(|(_, s)| s.len() > r.len() && is_subset_sorted(r, s))
            })
            .cloned()
            .collect()
    }

    /// Two facets are ridge-adjacent when their intersection is a ridge of both.
    pub fn ridge_adjacent(&self, a: usize, b: usize) -> bool {
        a != b && self.facet_ridges(a).iter().any(|(j, _)| *j == b)
    }

    /// Polar dual: facet `j` of the result holds vertex `i` iff facet `i`
    /// of `self` holds vertex `j`.
    pub fn dualize(&self) -> VertexFacetIncidence {
        let mut facets = vec![Vec::new(); self.num_vertices];
        for (i, f) in self.facets.iter().enumerate() {
            for &v in f {
                facets[v].push(i);
            }
        }
        VertexFacetIncidence::new_unchecked(self.dim, facets)
    }

    /// Facets sorted and vertex lists sorted; used for comparison and hashing.
    pub fn canonical(&self) -> VertexFacetIncidence {
        let mut facets = self.facets.clone();
        facets.sort();
        VertexFacetIncidence {
            dim: self.dim,
            num_vertices: self.num_vertices,
            facets,
        }
    }

    pub fn face_lattice(&self) -> Result<FaceLattice, LatticeError> {
        lattice::build_face_lattice(self)
    }

    pub fn classify_local(&self) -> LocalStructure {
        local::classify_local(self)
    }
}

impl fmt::Display for VertexFacetIncidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-polytope", self.dim)?;
        for facet in &self.facets {
            write!(f, " [")?;
            for (k, v) in facet.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

pub fn build_face_lattice(p: &VertexFacetIncidence) -> Result<FaceLattice, LatticeError> {
    lattice::build_face_lattice(p)
}

pub fn flag_vector(l: &FaceLattice) -> FlagVector {
    l.flag_vector()
}

pub fn dualize(p: &VertexFacetIncidence) -> VertexFacetIncidence {
    p.dualize()
}

pub fn classify_local(p: &VertexFacetIncidence) -> LocalStructure {
    p.classify_local()
}

pub(crate) fn to_bitset(len: usize, items: &[usize]) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(len);
    for &i in items {
        s.insert(i);
    }
    s
}

pub(crate) fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub(crate) fn is_subset_sorted(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}
