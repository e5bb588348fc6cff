//! Combinatorial operations on polytopes: stacking, truncating, pyramids,
//! bipyramid splitting and facet splitting, plus the stacked and split
//! families built on cyclic polytopes and their duals.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use thiserror::Error;

use crate::cyclic::{cyclic_polytope, CyclicError};
use crate::incidence::{
    intersect_sorted, is_subset_sorted, IncidenceError, LatticeError, VertexFacetIncidence,
    VertexId,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("facet {0} does not exist")]
    UnknownFacet(usize),
    #[error("vertex {0} does not exist")]
    UnknownVertex(VertexId),
    #[error("vertex {0} is not simple")]
    NotSimpleVertex(VertexId),
    #[error("facet {0} is not a bipyramid over a triangle")]
    NotBipyramid(usize),
    #[error("bipyramid facet {0} has no simple apex")]
    NoSimpleApex(usize),
    #[error("beyond set is empty")]
    EmptyBeyondSet,
    #[error("beyond set is not connected through ridges")]
    DisconnectedBeyondSet,
    #[error("beyond set has a bad boundary: {0}")]
    BadBoundary(String),
    #[error("invalid cut: {0}")]
    InvalidCut(String),
    #[error("vertices {0:?} on the cut-off side are not simple")]
    SimplicityViolation(Vec<VertexId>),
    #[error("facet is not a wedge: {0}")]
    NotAWedge(String),
    #[error("expected dimension {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("parameters out of range: {0}")]
    InvalidParameters(String),
    #[error("no eligible target: {0}")]
    NoTarget(String),
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
    #[error(transparent)]
    Cyclic(#[from] CyclicError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

type Result<T> = std::result::Result<T, ConstructionError>;

fn check_facet(p: &VertexFacetIncidence, f: usize) -> Result<()> {
    if f >= p.num_facets() {
        return Err(ConstructionError::UnknownFacet(f));
    }
    Ok(())
}

fn ridge_sets(p: &VertexFacetIncidence, f: usize) -> Vec<Vec<VertexId>> {
    crate::incidence::local_ridges(p, f)
}

/// Conv of `p` and a point beyond facet `facet` only: the facet is replaced
/// by cones from the new vertex over its ridges.
pub fn stack_beyond_facet(p: &VertexFacetIncidence, facet: usize) -> Result<VertexFacetIncidence> {
    check_facet(p, facet)?;
    let v = p.num_vertices();
    let mut facets: Vec<Vec<VertexId>> = p
        .facets()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != facet)
        .map(|(_, f)| f.clone())
        .collect();
    for mut g in ridge_sets(p, facet) {
        g.push(v);
        facets.push(g);
    }
    Ok(VertexFacetIncidence::new(p.dim(), facets)?)
}

/// Facets a new point lies beyond.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeyondSet {
    facets: Vec<usize>,
}

impl BeyondSet {
    pub fn new(p: &VertexFacetIncidence, mut facets: Vec<usize>) -> Result<Self> {
        facets.sort_unstable();
        facets.dedup();
        if facets.is_empty() {
            return Err(ConstructionError::EmptyBeyondSet);
        }
        for &f in &facets {
            check_facet(p, f)?;
        }
        let mut seen = vec![facets[0]];
        let mut stack = vec![facets[0]];
        while let Some(a) = stack.pop() {
            for (b, _) in p.facet_ridges(a) {
                if facets.contains(&b) && !seen.contains(&b) {
                    seen.push(b);
                    stack.push(b);
                }
            }
        }
        if seen.len() != facets.len() {
            return Err(ConstructionError::DisconnectedBeyondSet);
        }
        Ok(BeyondSet { facets })
    }

    pub fn facets(&self) -> &[usize] {
        &self.facets
    }
}

/// Conv of `p` and a point beyond exactly the facets of `b`: beyond facets
/// are removed and each ridge between a beyond and a beneath facet is coned
/// from the new vertex.
pub fn stack_beyond_facet_set(
    p: &VertexFacetIncidence,
    b: &BeyondSet,
) -> Result<VertexFacetIncidence> {
    for &f in b.facets() {
        check_facet(p, f)?;
    }
    let beyond: BTreeSet<usize> = b.facets().iter().copied().collect();
    let v = p.num_vertices();

    let mut boundary: BTreeMap<Vec<VertexId>, usize> = BTreeMap::new();
    for &f in &beyond {
        for (g, ridge) in p.facet_ridges(f) {
            if !beyond.contains(&g) {
                *boundary.entry(ridge).or_insert(0) += 1;
            }
        }
    }
    for (ridge, count) in &boundary {
        let holders = p
            .facets()
            .iter()
            .filter(|f| is_subset_sorted(ridge, f))
            .count();
        if *count != 1 || holders != 2 {
            return Err(ConstructionError::BadBoundary(format!(
                "ridge {ridge:?} is not shared by exactly one beyond and one beneath facet"
            )));
        }
    }

    let mut facets: Vec<Vec<VertexId>> = p
        .facets()
        .iter()
        .enumerate()
        .filter(|(i, _)| !beyond.contains(i))
        .map(|(_, f)| f.clone())
        .collect();
    let mut covered = vec![false; v];
    for f in &facets {
        for &x in f {
            covered[x] = true;
        }
    }
    if let Some(x) = covered.iter().position(|c| !c) {
        return Err(ConstructionError::BadBoundary(format!(
            "vertex {x} lies only in beyond facets"
        )));
    }
    for (mut ridge, _) in boundary {
        ridge.push(v);
        facets.push(ridge);
    }
    let q = VertexFacetIncidence::new(p.dim(), facets)
        .map_err(|e| ConstructionError::BadBoundary(e.to_string()))?;
    if b.facets().len() > 1 {
        q.face_lattice()
            .and_then(|l| l.verify())
            .map_err(|e| ConstructionError::BadBoundary(e.to_string()))?;
    }
    Ok(q)
}

/// Cuts off a simple vertex by a hyperplane; the dual of stacking.
pub fn truncate_simple_vertex(
    p: &VertexFacetIncidence,
    vertex: VertexId,
) -> Result<VertexFacetIncidence> {
    if vertex >= p.num_vertices() {
        return Err(ConstructionError::UnknownVertex(vertex));
    }
    if !p.is_simple_vertex(vertex) {
        return Err(ConstructionError::NotSimpleVertex(vertex));
    }
    let dual = p.dualize();
    Ok(stack_beyond_facet(&dual, vertex)?.dualize())
}

/// Replaces a triangular bipyramid facet by the two tetrahedra over its
/// equator.
pub fn split_bipyramid_facet(
    p: &VertexFacetIncidence,
    facet: usize,
) -> Result<VertexFacetIncidence> {
    check_facet(p, facet)?;
    let local = p.classify_local();
    let b = local
        .bipyramid_facets
        .iter()
        .find(|b| b.facet == facet)
        .ok_or(ConstructionError::NotBipyramid(facet))?;
    if b.simple_apex.is_none() {
        return Err(ConstructionError::NoSimpleApex(facet));
    }
    let mut facets = p.facets().to_vec();
    let eq = b.equator.to_vec();
    let mut lower = eq.clone();
    lower.push(b.apexes[0]);
    let mut upper = eq;
    upper.push(b.apexes[1]);
    facets[facet] = lower;
    facets.push(upper);
    Ok(VertexFacetIncidence::new(p.dim(), facets)?)
}

/// A point of the splitting polygon: a vertex it passes through or an edge
/// it crosses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CutElement {
    Vertex(VertexId),
    Edge(VertexId, VertexId),
}

impl CutElement {
    fn normalized(self) -> Self {
        match self {
            CutElement::Edge(a, b) if a > b => CutElement::Edge(b, a),
            e => e,
        }
    }

    fn lies_in(&self, face: &[VertexId]) -> bool {
        match *self {
            CutElement::Vertex(v) => face.binary_search(&v).is_ok(),
            CutElement::Edge(a, b) => {
                face.binary_search(&a).is_ok() && face.binary_search(&b).is_ok()
            }
        }
    }
}

/// A polygon in the boundary of a facet along which the facet is split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetCut {
    pub facet: usize,
    pub elements: Vec<CutElement>,
}

impl FacetCut {
    pub fn new(facet: usize, elements: Vec<CutElement>) -> Self {
        FacetCut { facet, elements }
    }

    /// Number of vertices the polygon passes through.
    pub fn k(&self) -> usize {
        self.elements
            .iter()
            .filter(|e| matches!(e, CutElement::Vertex(_)))
            .count()
    }

    /// Number of polygon corners.
    pub fn i(&self) -> usize {
        self.elements.len()
    }
}

/// Result of checking a cut against the facet's boundary complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutAnalysis {
    pub passed: Vec<VertexId>,
    /// Crossed edges in polygon order.
    pub crossed: Vec<(VertexId, VertexId)>,
    pub side_a: Vec<VertexId>,
    pub side_b: Vec<VertexId>,
    /// Polygon corners in cyclic order, starting at the smallest element.
    pub cycle: Vec<CutElement>,
}

/// Boundary complex of a facet of a 4-polytope: its 2-faces and edges.
struct FacetComplex {
    vertices: Vec<VertexId>,
    faces: Vec<Vec<VertexId>>,
    edges: BTreeSet<(VertexId, VertexId)>,
}

impl FacetComplex {
    fn new(p: &VertexFacetIncidence, facet: usize) -> Self {
        let vertices = p.facets()[facet].clone();
        let faces = ridge_sets(p, facet);
        let mut edges = BTreeSet::new();
        for (x, &a) in vertices.iter().enumerate() {
            for &b in &vertices[x + 1..] {
                let shared = faces
                    .iter()
                    .filter(|q| q.binary_search(&a).is_ok() && q.binary_search(&b).is_ok())
                    .count();
                if shared >= 2 {
                    edges.insert((a, b));
                }
            }
        }
        FacetComplex {
            vertices,
            faces,
            edges,
        }
    }

    fn is_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    fn neighbours(&self, v: VertexId) -> Vec<VertexId> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }
}

fn invalid(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::InvalidCut(msg.into())
}

/// Checks that the cut is a simple closed polygon in the facet boundary
/// separating its vertices into two sides.
pub fn analyze_cut(p: &VertexFacetIncidence, cut: &FacetCut) -> Result<CutAnalysis> {
    if p.dim() != 4 {
        return Err(ConstructionError::DimensionMismatch {
            expected: 4,
            found: p.dim(),
        });
    }
    check_facet(p, cut.facet)?;
    let cx = FacetComplex::new(p, cut.facet);

    let elements: Vec<CutElement> = cut.elements.iter().map(|e| e.normalized()).collect();
    let unique: BTreeSet<CutElement> = elements.iter().copied().collect();
    if unique.len() != elements.len() {
        return Err(invalid("repeated element"));
    }
    if elements.len() < 3 {
        return Err(invalid("a polygon needs at least three corners"));
    }
    let passed: BTreeSet<VertexId> = elements
        .iter()
        .filter_map(|e| match e {
            CutElement::Vertex(v) => Some(*v),
            _ => None,
        })
        .collect();
    if passed.len() > 3 {
        return Err(invalid("more than three passed vertices"));
    }
    for e in &elements {
        match *e {
            CutElement::Vertex(v) if cx.vertices.binary_search(&v).is_err() => {
                return Err(invalid(format!("vertex {v} is not in the facet")))
            }
            CutElement::Edge(a, b) => {
                if !cx.is_edge(a, b) {
                    return Err(invalid(format!("{{{a},{b}}} is not an edge of the facet")));
                }
                if passed.contains(&a) || passed.contains(&b) {
                    return Err(invalid(format!("edge {{{a},{b}}} meets a passed vertex")));
                }
            }
            _ => {}
        }
    }

    // segments of the polygon, one per 2-face it crosses or runs along
    let mut segments: BTreeSet<(CutElement, CutElement)> = BTreeSet::new();
    let mut along: BTreeMap<(VertexId, VertexId), Vec<usize>> = BTreeMap::new();
    let mut crossing_faces: Vec<usize> = Vec::new();
    for (qi, q) in cx.faces.iter().enumerate() {
        let pts: Vec<CutElement> = elements.iter().copied().filter(|e| e.lies_in(q)).collect();
        match pts.len() {
            0 | 1 => {}
            2 => {
                let (x, y) = (pts[0].min(pts[1]), pts[0].max(pts[1]));
                segments.insert((x, y));
                match (x, y) {
                    (CutElement::Vertex(a), CutElement::Vertex(b)) if cx.is_edge(a, b) => {
                        along.entry((a.min(b), a.max(b))).or_default().push(qi);
                    }
                    _ => crossing_faces.push(qi),
                }
            }
            n => return Err(invalid(format!("2-face {q:?} meets the polygon in {n} points"))),
        }
    }

    let mut adj: BTreeMap<CutElement, Vec<CutElement>> = BTreeMap::new();
    for &(x, y) in &segments {
        adj.entry(x).or_default().push(y);
        adj.entry(y).or_default().push(x);
    }
    for e in &elements {
        let deg = adj.get(e).map_or(0, Vec::len);
        if deg != 2 {
            return Err(invalid(format!("corner {e:?} has {deg} polygon sides")));
        }
    }
    let start = *unique.iter().next().unwrap();
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = adj[&start][0].min(adj[&start][1]);
    while cur != start {
        cycle.push(cur);
        let nb = &adj[&cur];
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
        if cycle.len() > elements.len() {
            break;
        }
    }
    if cycle.len() != elements.len() {
        return Err(invalid("polygon is not a single closed curve"));
    }
    // the given order, if it differs from the set order, must follow the polygon
    let n_el = elements.len();
    for w in 0..n_el {
        let (x, y) = (elements[w], elements[(w + 1) % n_el]);
        if !segments.contains(&(x.min(y), x.max(y))) {
            return Err(invalid(format!("consecutive corners {x:?} and {y:?} share no 2-face")));
        }
    }

    // sides: components of the facet graph without passed vertices and crossed edges
    let crossed_set: HashSet<(VertexId, VertexId)> = elements
        .iter()
        .filter_map(|e| match *e {
            CutElement::Edge(a, b) => Some((a, b)),
            _ => None,
        })
        .collect();
    let rest: Vec<VertexId> = cx
        .vertices
        .iter()
        .copied()
        .filter(|v| !passed.contains(v))
        .collect();
    let mut comp: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut ncomp = 0;
    for &s in &rest {
        if comp.contains_key(&s) {
            continue;
        }
        comp.insert(s, ncomp);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in cx.neighbours(x) {
                if passed.contains(&y) || crossed_set.contains(&(x.min(y), x.max(y))) {
                    continue;
                }
                if let std::collections::btree_map::Entry::Vacant(e) = comp.entry(y) {
                    e.insert(ncomp);
                    stack.push(y);
                }
            }
        }
        ncomp += 1;
    }
    if ncomp != 2 {
        return Err(invalid(format!("polygon leaves {ncomp} regions instead of 2")));
    }
    for &(a, b) in &crossed_set {
        if comp[&a] == comp[&b] {
            return Err(invalid(format!("edge {{{a},{b}}} does not separate the sides")));
        }
    }
    for &qi in &crossing_faces {
        let sides: BTreeSet<usize> = cx.faces[qi]
            .iter()
            .filter_map(|v| comp.get(v).copied())
            .collect();
        if sides.len() != 2 {
            return Err(invalid(format!("polygon does not cut 2-face {:?}", cx.faces[qi])));
        }
    }
    for ((a, b), faces) in &along {
        let sides: Vec<BTreeSet<usize>> = faces
            .iter()
            .map(|&qi| {
                cx.faces[qi]
                    .iter()
                    .filter_map(|v| comp.get(v).copied())
                    .collect()
            })
            .collect();
        let ok = sides.len() == 2
            && sides.iter().all(|s| s.len() == 1)
            && sides[0] != sides[1];
        if !ok {
            return Err(invalid(format!("polygon runs along edge {{{a},{b}}} without separating")));
        }
    }

    let side_a: Vec<VertexId> = rest.iter().copied().filter(|v| comp[v] == 0).collect();
    let side_b: Vec<VertexId> = rest.iter().copied().filter(|v| comp[v] == 1).collect();
    let crossed = cycle
        .iter()
        .filter_map(|e| match *e {
            CutElement::Edge(a, b) => Some((a, b)),
            _ => None,
        })
        .collect();
    Ok(CutAnalysis {
        passed: passed.into_iter().collect(),
        crossed,
        side_a,
        side_b,
        cycle,
    })
}

/// Splits a facet into two along the cut polygon. One side of the cut must
/// consist of simple vertices of `p`.
pub fn facet_split(p: &VertexFacetIncidence, cut: &FacetCut) -> Result<VertexFacetIncidence> {
    let an = analyze_cut(p, cut)?;
    let simple = |s: &[VertexId]| s.iter().all(|&v| p.is_simple_vertex(v));
    let (near, far) = if simple(&an.side_a) {
        (&an.side_a, &an.side_b)
    } else if simple(&an.side_b) {
        (&an.side_b, &an.side_a)
    } else {
        let mut bad: Vec<VertexId> = an
            .side_a
            .iter()
            .chain(&an.side_b)
            .copied()
            .filter(|&v| !p.is_simple_vertex(v))
            .collect();
        bad.sort_unstable();
        return Err(ConstructionError::SimplicityViolation(bad));
    };

    let n = p.num_vertices();
    let new_ids: Vec<VertexId> = (n..n + an.crossed.len()).collect();
    let mut facets: Vec<Vec<VertexId>> = p.facets().to_vec();
    for (gi, g) in facets.iter_mut().enumerate() {
        if gi == cut.facet {
            continue;
        }
        for (&(a, b), &w) in an.crossed.iter().zip(&new_ids) {
            if g.binary_search(&a).is_ok() && g.binary_search(&b).is_ok() {
                g.push(w);
            }
        }
    }
    let mut f1: Vec<VertexId> = near.clone();
    f1.extend(&an.passed);
    f1.extend(&new_ids);
    let mut f2: Vec<VertexId> = far.clone();
    f2.extend(&an.passed);
    f2.extend(&new_ids);
    facets[cut.facet] = f1;
    facets.push(f2);
    Ok(VertexFacetIncidence::new(p.dim(), facets)?)
}

/// Labelled wedge facet: `top[0..N]` is one of the two large polygons in
/// cyclic order with `{top[0], top[N-1]}` the common edge, and `bottom[j]`
/// is the neighbour of `top[j]` off the top polygon for `1 <= j <= N-2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wedge {
    pub top: Vec<VertexId>,
    pub bottom: Vec<Option<VertexId>>,
}

/// Recognizes a facet that is a wedge over a polygon with at least five
/// sides.
pub fn recognize_wedge(p: &VertexFacetIncidence, facet: usize) -> Result<Wedge> {
    check_facet(p, facet)?;
    let cx = FacetComplex::new(p, facet);
    let max = cx.faces.iter().map(Vec::len).max().unwrap_or(0);
    let large: Vec<&Vec<VertexId>> = cx.faces.iter().filter(|q| q.len() == max).collect();
    if large.len() != 2 || max < 5 {
        return Err(ConstructionError::NotAWedge(format!(
            "{} largest 2-faces of size {max}",
            large.len()
        )));
    }
    let (top, bottom) = if large[0] < large[1] {
        (large[0], large[1])
    } else {
        (large[1], large[0])
    };
    let e = intersect_sorted(top, bottom);
    if e.len() != 2 || !cx.is_edge(e[0], e[1]) {
        return Err(ConstructionError::NotAWedge("large 2-faces do not share an edge".into()));
    }
    if cx.vertices.len() != 2 * max - 2 {
        return Err(ConstructionError::NotAWedge("wrong vertex count".into()));
    }
    let in_top = |v: &VertexId| top.binary_search(v).is_ok();
    let mut order = vec![e[0]];
    let mut prev = e[1];
    let mut cur = e[0];
    while order.len() < max {
        let next = cx
            .neighbours(cur)
            .into_iter()
            .filter(|v| in_top(v) && *v != prev && !order.contains(v))
            .min()
            .ok_or_else(|| ConstructionError::NotAWedge("top polygon is broken".into()))?;
        order.push(next);
        prev = cur;
        cur = next;
    }
    if *order.last().unwrap() != e[1] {
        return Err(ConstructionError::NotAWedge("top polygon does not close".into()));
    }
    let mut low = vec![None; max];
    for j in 1..max - 1 {
        let off: Vec<VertexId> = cx
            .neighbours(order[j])
            .into_iter()
            .filter(|v| !in_top(v))
            .collect();
        if off.len() != 1 {
            return Err(ConstructionError::NotAWedge(format!(
                "top vertex {} has {} neighbours off the top",
                order[j],
                off.len()
            )));
        }
        low[j] = Some(off[0]);
    }
    Ok(Wedge {
        top: order,
        bottom: low,
    })
}

/// The splitting polygon used for `δ_k(i, ·)` on a wedge facet.
///
/// With `T = top` and `B = bottom` the cut-off side and passed vertices are:
/// k=0: side `T1..T(i-2)`; k=1: same side, passing `T(i-1)`; k=2: same side,
/// passing `T0, T(i-1)`; k=3, i=3: side `B2`, passing `T2, B1, B3`;
/// k=3, i>=4: side `T1..T(i-2)`, passing `T(i-1), B1, B2`.
pub fn wedge_cut(p: &VertexFacetIncidence, facet: usize, k: usize, i: usize) -> Result<FacetCut> {
    let w = recognize_wedge(p, facet)?;
    let n_top = w.top.len();
    let t = |j: usize| w.top[j];
    let b = |j: usize| w.bottom[j].expect("bottom defined on inner top vertices");
    let bad = || ConstructionError::InvalidParameters(format!("no wedge cut for k={k}, i={i}"));
    if i < 3 {
        return Err(bad());
    }
    let (side, passed): (Vec<VertexId>, Vec<VertexId>) = match k {
        0 | 1 | 2 if i <= n_top => {
            let side = (1..=i - 2).map(t).collect();
            let passed = match k {
                0 => vec![],
                1 => vec![t(i - 1)],
                _ => vec![t(0), t(i - 1)],
            };
            (side, passed)
        }
        3 if i == 3 && n_top >= 5 => (vec![b(2)], vec![t(2), b(1), b(3)]),
        3 if i >= 4 && i < n_top => ((1..=i - 2).map(t).collect(), vec![t(i - 1), b(1), b(2)]),
        _ => return Err(bad()),
    };
    let cx = FacetComplex::new(p, facet);
    let mut elements: Vec<CutElement> = passed.iter().map(|&v| CutElement::Vertex(v)).collect();
    for &a in &side {
        for c in cx.neighbours(a) {
            if !side.contains(&c) && !passed.contains(&c) {
                elements.push(CutElement::Edge(a.min(c), a.max(c)));
            }
        }
    }
    let unordered = FacetCut::new(facet, elements);
    let an = analyze_cut_unordered(p, &unordered)?;
    Ok(FacetCut::new(facet, an.cycle))
}

fn analyze_cut_unordered(p: &VertexFacetIncidence, cut: &FacetCut) -> Result<CutAnalysis> {
    // order the elements along the polygon before the full check
    let cx = FacetComplex::new(p, cut.facet);
    let elements: Vec<CutElement> = cut.elements.iter().map(|e| e.normalized()).collect();
    let mut adj: BTreeMap<CutElement, Vec<CutElement>> = BTreeMap::new();
    for q in &cx.faces {
        let pts: Vec<CutElement> = elements.iter().copied().filter(|e| e.lies_in(q)).collect();
        if pts.len() == 2 {
            let v = adj.entry(pts[0]).or_default();
            if !v.contains(&pts[1]) {
                v.push(pts[1]);
            }
            let v = adj.entry(pts[1]).or_default();
            if !v.contains(&pts[0]) {
                v.push(pts[0]);
            }
        }
    }
    let mut sorted = elements.clone();
    sorted.sort();
    let start = sorted[0];
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = adj
        .get(&start)
        .and_then(|v| v.iter().min().copied())
        .ok_or_else(|| invalid("isolated corner"))?;
    while cur != start && cycle.len() <= elements.len() {
        cycle.push(cur);
        let next = adj[&cur]
            .iter()
            .copied()
            .find(|&x| x != prev)
            .ok_or_else(|| invalid("open polygon"))?;
        prev = cur;
        cur = next;
    }
    analyze_cut(p, &FacetCut::new(cut.facet, cycle))
}

fn check_delta_range(k: usize, i: usize, n: usize) -> Result<()> {
    let ok = n >= 7
        && i >= 3
        && match k {
            0..=2 => i <= n - 2,
            3 => i <= n - 3,
            _ => false,
        };
    if !ok {
        return Err(ConstructionError::InvalidParameters(format!(
            "delta needs k <= 3, 3 <= i <= {} and n >= 7; got k={k}, i={i}, n={n}",
            if k == 3 { "n-3" } else { "n-2" }
        )));
    }
    Ok(())
}

/// `δ_k(i, n)`: facet 0 of the dual cyclic polytope `C_4(n)*` split by
/// the canonical wedge cut.
pub fn delta(k: usize, i: usize, n: usize) -> Result<VertexFacetIncidence> {
    check_delta_range(k, i, n)?;
    let dual = cyclic_polytope(4, n)?.dualize();
    let cut = wedge_cut(&dual, 0, k, i)?;
    facet_split(&dual, &cut)
}

/// `δ*_k(i, n)`, the dual of [`delta`].
pub fn delta_star(k: usize, i: usize, n: usize) -> Result<VertexFacetIncidence> {
    Ok(delta(k, i, n)?.dualize())
}

/// Edges lying in the largest number of facets, with that number.
pub fn max_facet_edges(p: &VertexFacetIncidence) -> (usize, Vec<(VertexId, VertexId)>) {
    let mut counts: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    for f in p.facets() {
        for (x, &a) in f.iter().enumerate() {
            for &b in &f[x + 1..] {
                *counts.entry((a, b)).or_insert(0) += 1;
            }
        }
    }
    let max = counts.values().copied().max().unwrap_or(0);
    let edges = counts
        .into_iter()
        .filter(|&(_, c)| c == max)
        .map(|(e, _)| e)
        .collect();
    (max, edges)
}

/// Edges of `C_4(n)` contained in `n - 2` facets.
pub fn universal_edges(p: &VertexFacetIncidence) -> Vec<(VertexId, VertexId)> {
    let n = p.num_vertices();
    let (max, edges) = max_facet_edges(p);
    if n >= 2 && max == n - 2 {
        edges
    } else {
        Vec::new()
    }
}

/// `i` facets around the smallest universal edge of `C_4(n)`, consecutive
/// through ridges, starting at the smallest facet containing the edge.
pub fn universal_edge_facets(p: &VertexFacetIncidence, i: usize) -> Result<Vec<usize>> {
    let (a, b) = *universal_edges(p)
        .first()
        .ok_or_else(|| ConstructionError::NoTarget("no universal edge".into()))?;
    let around: Vec<usize> = (0..p.num_facets())
        .filter(|&f| {
            let fs = &p.facets()[f];
            fs.binary_search(&a).is_ok() && fs.binary_search(&b).is_ok()
        })
        .collect();
    if i == 0 || i > around.len() {
        return Err(ConstructionError::InvalidParameters(format!(
            "{i} facets requested around an edge in {} facets",
            around.len()
        )));
    }
    let mut chosen = vec![*around
        .iter()
        .min_by(|&&x, &&y| p.facets()[x].cmp(&p.facets()[y]))
        .unwrap()];
    while chosen.len() < i {
        let last = *chosen.last().unwrap();
        let next = p
            .facet_ridges(last)
            .into_iter()
            .map(|(g, _)| g)
            .filter(|g| around.contains(g) && !chosen.contains(g))
            .min_by(|&x, &y| p.facets()[x].cmp(&p.facets()[y]))
            .ok_or_else(|| ConstructionError::NoTarget("walk around edge stopped".into()))?;
        chosen.push(next);
    }
    Ok(chosen)
}

/// `R_i(n)`: `C_4(n)` with a point beyond `i` facets around a universal edge.
pub fn r_family(i: usize, n: usize) -> Result<VertexFacetIncidence> {
    if n < 6 || i == 0 || i > n - 3 {
        return Err(ConstructionError::InvalidParameters(format!(
            "R_i(n) needs n >= 6 and 1 <= i <= n-3; got i={i}, n={n}"
        )));
    }
    let c = cyclic_polytope(4, n)?;
    let chosen = universal_edge_facets(&c, i)?;
    let b = BeyondSet::new(&c, chosen)?;
    stack_beyond_facet_set(&c, &b)
}

/// First pair of ridge-adjacent simplex facets, by index.
pub fn adjacent_simplex_pair(p: &VertexFacetIncidence) -> Option<(usize, usize)> {
    let d = p.dim();
    let simp: Vec<usize> = (0..p.num_facets())
        .filter(|&f| p.facets()[f].len() == d)
        .collect();
    for (x, &a) in simp.iter().enumerate() {
        for &b in &simp[x + 1..] {
            if intersect_sorted(&p.facets()[a], &p.facets()[b]).len() == d - 1 {
                return Some((a, b));
            }
        }
    }
    None
}

/// Stacks beyond the first pair of adjacent simplex facets.
pub fn stack_beyond_pair(p: &VertexFacetIncidence) -> Result<VertexFacetIncidence> {
    let (a, b) = adjacent_simplex_pair(p)
        .ok_or_else(|| ConstructionError::NoTarget("no two adjacent simplex facets".into()))?;
    let set = BeyondSet::new(p, vec![a, b])?;
    stack_beyond_facet_set(p, &set)
}

/// A `k`-gon as a 2-polytope.
pub fn polygon(k: usize) -> Result<VertexFacetIncidence> {
    if k < 3 {
        return Err(ConstructionError::InvalidParameters(format!("polygon with {k} sides")));
    }
    let facets = (0..k).map(|j| vec![j, (j + 1) % k]).collect();
    Ok(VertexFacetIncidence::new(2, facets)?)
}

/// Pyramid with apex `base.num_vertices()`.
pub fn pyramid_over(base: &VertexFacetIncidence) -> Result<VertexFacetIncidence> {
    let apex = base.num_vertices();
    let mut facets = vec![(0..apex).collect::<Vec<_>>()];
    for g in base.facets() {
        let mut f = g.clone();
        f.push(apex);
        facets.push(f);
    }
    Ok(VertexFacetIncidence::new(base.dim() + 1, facets)?)
}

/// Bipyramid with apexes `n` and `n+1` over `base`.
pub fn bipyramid_over(base: &VertexFacetIncidence) -> Result<VertexFacetIncidence> {
    let n = base.num_vertices();
    let mut facets = Vec::new();
    for apex in [n, n + 1] {
        for g in base.facets() {
            let mut f = g.clone();
            f.push(apex);
            facets.push(f);
        }
    }
    Ok(VertexFacetIncidence::new(base.dim() + 1, facets)?)
}

/// Prism over `base`: vertex `v` has copies `v` and `v + n`.
pub fn prism_over(base: &VertexFacetIncidence) -> Result<VertexFacetIncidence> {
    let n = base.num_vertices();
    let mut facets = vec![(0..n).collect::<Vec<_>>(), (n..2 * n).collect()];
    for g in base.facets() {
        let mut f = g.clone();
        f.extend(g.iter().map(|v| v + n));
        facets.push(f);
    }
    Ok(VertexFacetIncidence::new(base.dim() + 1, facets)?)
}

pub fn polygon_prism(k: usize) -> Result<VertexFacetIncidence> {
    prism_over(&polygon(k)?)
}

pub fn polygon_bipyramid(k: usize) -> Result<VertexFacetIncidence> {
    bipyramid_over(&polygon(k)?)
}

/// `times`-fold iterated pyramid.
pub fn iterated_pyramid(base: &VertexFacetIncidence, times: usize) -> Result<VertexFacetIncidence> {
    let mut p = base.clone();
    for _ in 0..times {
        p = pyramid_over(&p)?;
    }
    Ok(p)
}

/// The `d`-dimensional cross-polytope.
pub fn cross_polytope(d: usize) -> Result<VertexFacetIncidence> {
    let mut p = polygon(4)?;
    for _ in 2..d {
        p = bipyramid_over(&p)?;
    }
    Ok(p)
}

/// The `d`-simplex on vertices `0..=d`.
pub fn simplex(d: usize) -> Result<VertexFacetIncidence> {
    let facets = (0..=d)
        .map(|skip| (0..=d).filter(|&v| v != skip).collect())
        .collect();
    Ok(VertexFacetIncidence::new(d, facets)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair_of(p: &VertexFacetIncidence) -> (u64, u64) {
        let l = p.face_lattice().unwrap();
        l.verify().unwrap();
        l.flag_vector().pair()
    }

    #[test]
    fn stacking_simplex() {
        let s = simplex(4).unwrap();
        assert_eq!(pair_of(&stack_beyond_facet(&s, 2).unwrap()), (6, 32));
        assert_eq!(pair_of(&truncate_simple_vertex(&s, 0).unwrap()), (8, 32));
        assert!(matches!(
            stack_beyond_facet(&s, 9),
            Err(ConstructionError::UnknownFacet(9))
        ));
    }

    #[test]
    fn singleton_beyond_set_is_stacking() {
        let c = cyclic_polytope(4, 6).unwrap();
        let b = BeyondSet::new(&c, vec![3]).unwrap();
        assert_eq!(
            stack_beyond_facet_set(&c, &b).unwrap(),
            stack_beyond_facet(&c, 3).unwrap()
        );
        assert_eq!(pair_of(&stack_beyond_facet(&c, 0).unwrap()), (7, 48));
    }

    #[test]
    fn cyclic_has_no_simple_vertex() {
        let c = cyclic_polytope(4, 6).unwrap();
        assert!(matches!(
            truncate_simple_vertex(&c, 0),
            Err(ConstructionError::NotSimpleVertex(0))
        ));
    }

    #[test]
    fn r_two_six() {
        assert_eq!(pair_of(&r_family(2, 6).unwrap()), (7, 52));
        let c = cyclic_polytope(4, 6).unwrap();
        assert_eq!(universal_edges(&c)[0], (0, 1));
    }

    #[test]
    fn disconnected_beyond_set() {
        let c = cyclic_polytope(4, 8).unwrap();
        let far = (1..c.num_facets())
            .find(|&g| intersect_sorted(&c.facets()[0], &c.facets()[g]).len() < 3)
            .unwrap();
        assert!(matches!(
            BeyondSet::new(&c, vec![0, far]),
            Err(ConstructionError::DisconnectedBeyondSet)
        ));
    }

    #[test]
    fn pyramids_and_prisms() {
        let q = iterated_pyramid(&polygon(4).unwrap(), 2).unwrap();
        assert_eq!(pair_of(&q), (6, 26));
        assert_eq!(pair_of(&pyramid_over(&polygon_prism(3).unwrap()).unwrap()), (7, 29));
        assert_eq!(pair_of(&iterated_pyramid(&polygon(6).unwrap(), 2).unwrap()), (8, 38));
        let local = q.classify_local();
        assert!(local.has_square_pyramid());
    }

    #[test]
    fn wedge_labels() {
        let dual = cyclic_polytope(4, 8).unwrap().dualize();
        let w = recognize_wedge(&dual, 0).unwrap();
        assert_eq!(w.top.len(), 6);
        assert_eq!(w.bottom.iter().filter(|b| b.is_some()).count(), 4);
    }

    #[test]
    fn delta_increments() {
        let dual = cyclic_polytope(4, 8).unwrap().dualize();
        let (v0, i0) = dual.pair();
        let f0 = dual.num_facets();
        for (k, i, dv, di) in [(0, 3, 3, 12), (3, 5, 2, 11), (1, 4, 3, 13), (2, 6, 4, 18)] {
            let q = delta(k, i, 8).unwrap();
            let (v, inc) = pair_of(&q);
            assert_eq!((v - v0, inc - i0), (dv, di), "k={k} i={i}");
            assert_eq!(q.num_facets(), f0 + 1);
        }
    }

    #[test]
    fn bad_cuts() {
        let dual = cyclic_polytope(4, 8).unwrap().dualize();
        let w = recognize_wedge(&dual, 0).unwrap();
        let cut = FacetCut::new(0, vec![CutElement::Vertex(w.top[1]), CutElement::Vertex(w.top[3])]);
        assert!(matches!(facet_split(&dual, &cut), Err(ConstructionError::InvalidCut(_))));
    }

    #[test]
    fn simplicity_violation() {
        // C_4(6) has no simple vertex, so no side of any cut qualifies
        let c = cyclic_polytope(4, 6).unwrap();
        let f = c.facets()[0].clone();
        let elements = f[1..].iter().map(|&v| CutElement::Edge(f[0], v)).collect();
        let res = facet_split(&c, &FacetCut::new(0, elements));
        assert!(
            matches!(res, Err(ConstructionError::SimplicityViolation(_))),
            "{res:?}"
        );
    }

    #[test]
    fn bipyramid_split() {
        let base = polygon_bipyramid(3).unwrap();
        let p = pyramid_over(&base).unwrap();
        let b = p.classify_local().splittable_bipyramid().unwrap().facet;
        let q = split_bipyramid_facet(&p, b).unwrap();
        let (a, c) = (pair_of(&p), pair_of(&q));
        assert_eq!((c.0 - a.0, c.1 - a.1), (0, 3));
        assert!(matches!(
            split_bipyramid_facet(&p, 1),
            Err(ConstructionError::NotBipyramid(1))
        ));
    }
}
