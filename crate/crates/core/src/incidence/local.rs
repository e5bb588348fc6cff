use super::{VertexFacetIncidence, VertexId};

/// A facet that is a bipyramid over a triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipyramidFacet {
    pub facet: usize,
    pub apexes: [VertexId; 2],
    pub equator: [VertexId; 3],
    /// The smallest apex that is a simple vertex of the polytope, if any.
    pub simple_apex: Option<VertexId>,
}

/// Local features used by the constructions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LocalStructure {
    pub simple_vertices: Vec<VertexId>,
    pub simplex_facets: Vec<usize>,
    pub square_pyramid_facets: Vec<usize>,
    pub bipyramid_facets: Vec<BipyramidFacet>,
}

impl LocalStructure {
    pub fn has_simple_vertex(&self) -> bool {
        !self.simple_vertices.is_empty()
    }

    pub fn has_simplex_facet(&self) -> bool {
        !self.simplex_facets.is_empty()
    }

    pub fn has_square_pyramid(&self) -> bool {
        !self.square_pyramid_facets.is_empty()
    }

    /// First bipyramid facet with a simple apex.
    pub fn splittable_bipyramid(&self) -> Option<&BipyramidFacet> {
        self.bipyramid_facets.iter().find(|b| b.simple_apex.is_some())
    }
}

/// Distinct ridges of a facet, sorted.
pub(crate) fn distinct_ridges(p: &VertexFacetIncidence, facet: usize) -> Vec<Vec<VertexId>> {
    let mut r: Vec<Vec<VertexId>> = p.facet_ridges(facet).into_iter().map(|(_, g)| g).collect();
    r.sort();
    r.dedup();
    r
}

pub(crate) fn classify_local(p: &VertexFacetIncidence) -> LocalStructure {
    let d = p.dim();
    let degrees = p.vertex_degrees();
    let simple_vertices: Vec<VertexId> = (0..p.num_vertices()).filter(|&v| degrees[v] == d).collect();
    let simplex_facets: Vec<usize> = (0..p.num_facets())
        .filter(|&i| p.facets()[i].len() == d)
        .collect();

    let mut square_pyramid_facets = Vec::new();
    let mut bipyramid_facets = Vec::new();
    if d == 4 {
        for (i, f) in p.facets().iter().enumerate() {
            if f.len() != 5 {
                continue;
            }
            let ridges = distinct_ridges(p, i);
            let sizes: Vec<usize> = ridges.iter().map(Vec::len).collect();
            if ridges.len() == 5 && sizes.iter().filter(|&&s| s == 4).count() == 1 {
                square_pyramid_facets.push(i);
            } else if ridges.len() == 6 && sizes.iter().all(|&s| s == 3) {
                let count_in = |v: VertexId| ridges.iter().filter(|r| r.contains(&v)).count();
                let apexes: Vec<VertexId> = f.iter().copied().filter(|&v| count_in(v) == 3).collect();
                let equator: Vec<VertexId> = f.iter().copied().filter(|&v| count_in(v) == 4).collect();
                if apexes.len() == 2 && equator.len() == 3 {
                    let simple_apex = apexes.iter().copied().find(|&a| degrees[a] == d);
                    bipyramid_facets.push(BipyramidFacet {
                        facet: i,
                        apexes: [apexes[0], apexes[1]],
                        equator: [equator[0], equator[1], equator[2]],
                        simple_apex,
                    });
                }
            }
        }
    }
    LocalStructure {
        simple_vertices,
        simplex_facets,
        square_pyramid_facets,
        bipyramid_facets,
    }
}
