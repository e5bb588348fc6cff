//! Breadth-first closure of the seed database under all ops, bounded by
//! `f_03 <= 80`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::OnceLock;

use crate::constructions::adjacent_simplex_pair;
use crate::incidence::VertexFacetIncidence;
use crate::io::seed_database;

use super::{apply_op, first_simple_vertex, first_simplex_facet, Op, Recipe, WitnessError};

pub const BFS_MAX_F03: u64 = 80;

/// Which ops a polytope (and its dual) admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Features(pub u16);

impl Features {
    pub const SIMPLEX_FACET: u16 = 1;
    pub const SIMPLE_VERTEX: u16 = 2;
    pub const SQUARE_PYRAMID: u16 = 4;
    pub const BIPYRAMID: u16 = 8;
    pub const SIMPLEX_PAIR: u16 = 16;
    pub const BOTH: u16 = Self::SIMPLEX_FACET | Self::SIMPLE_VERTEX;

    fn local(p: &VertexFacetIncidence) -> u16 {
        let l = p.classify_local();
        let mut m = 0;
        if first_simplex_facet(p).is_some() {
            m |= Self::SIMPLEX_FACET;
        }
        if first_simple_vertex(p).is_some() {
            m |= Self::SIMPLE_VERTEX;
        }
        if l.has_square_pyramid() {
            m |= Self::SQUARE_PYRAMID;
        }
        if l.splittable_bipyramid().is_some() {
            m |= Self::BIPYRAMID;
        }
        if adjacent_simplex_pair(p).is_some() {
            m |= Self::SIMPLEX_PAIR;
        }
        m
    }

    pub fn of(p: &VertexFacetIncidence) -> Features {
        Features(Self::local(p) | Self::local(&p.dualize()) << 5)
    }

    pub fn has(self, mask: u16) -> bool {
        self.0 & mask == mask
    }
}

struct Node {
    pair: (u64, u64),
    features: Features,
    parent: Option<(usize, Op)>,
    seed: String,
}

/// Every reachable state, first found per `(pair, features)`.
pub struct BfsTable {
    nodes: Vec<Node>,
    by_pair: BTreeMap<(u64, u64), Vec<usize>>,
}

fn sources() -> Result<Vec<String>, WitnessError> {
    let mut out: Vec<String> = seed_database()?.iter().map(|s| s.name.clone()).collect();
    for n in 6..=7 {
        for i in 1..=n - 3 {
            out.push(format!("R({i},{n})"));
        }
    }
    for k in 0..=3 {
        let top = if k == 3 { 4 } else { 5 };
        for i in 3..=top {
            out.push(format!("delta_star({k},{i},7)"));
        }
    }
    Ok(out)
}

impl BfsTable {
    pub fn build() -> Result<BfsTable, WitnessError> {
        let mut nodes: Vec<Node> = Vec::new();
        let mut polys: Vec<VertexFacetIncidence> = Vec::new();
        let mut seen: HashMap<((u64, u64), Features), usize> = HashMap::new();
        let mut queue = VecDeque::new();
        let mut add = |p: VertexFacetIncidence,
                       parent: Option<(usize, Op)>,
                       seed: String,
                       nodes: &mut Vec<Node>,
                       polys: &mut Vec<VertexFacetIncidence>,
                       queue: &mut VecDeque<usize>| {
            let pair = p.pair();
            if pair.1 > BFS_MAX_F03 {
                return;
            }
            let features = Features::of(&p);
            if seen.contains_key(&(pair, features)) {
                return;
            }
            seen.insert((pair, features), nodes.len());
            queue.push_back(nodes.len());
            nodes.push(Node {
                pair,
                features,
                parent,
                seed,
            });
            polys.push(p);
        };
        for name in sources()? {
            let p = super::resolve_seed(&name)?;
            add(p, None, name, &mut nodes, &mut polys, &mut queue);
        }
        while let Some(idx) = queue.pop_front() {
            for op in Op::ALL {
                if let Some((_, df)) = op.delta() {
                    if nodes[idx].pair.1 + df as u64 > BFS_MAX_F03 {
                        continue;
                    }
                }
                let Ok(q) = apply_op(&polys[idx], op) else {
                    continue;
                };
                let seed = nodes[idx].seed.clone();
                add(q, Some((idx, op)), seed, &mut nodes, &mut polys, &mut queue);
            }
        }
        let mut by_pair: BTreeMap<(u64, u64), Vec<usize>> = BTreeMap::new();
        for (i, n) in nodes.iter().enumerate() {
            by_pair.entry(n.pair).or_default().push(i);
        }
        Ok(BfsTable { nodes, by_pair })
    }

    fn recipe(&self, mut idx: usize) -> Recipe {
        let pair = self.nodes[idx].pair;
        let mut ops = Vec::new();
        while let Some((parent, op)) = self.nodes[idx].parent {
            ops.push(op);
            idx = parent;
        }
        ops.reverse();
        Recipe::new(self.nodes[idx].seed.clone(), ops, pair)
    }

    /// Shortest recipe for `pair` whose result has all features in `need`.
    pub fn lookup(&self, pair: (u64, u64), need: u16) -> Option<(Recipe, Features)> {
        let idx = *self
            .by_pair
            .get(&pair)?
            .iter()
            .find(|&&i| self.nodes[i].features.has(need))?;
        Some((self.recipe(idx), self.nodes[idx].features))
    }

    /// All reached pairs, sorted.
    pub fn pairs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.by_pair.keys().copied()
    }

    /// Reached pairs whose polytope can have all features in `need`.
    pub fn pairs_with(&self, need: u16) -> Vec<(u64, u64)> {
        self.by_pair
            .iter()
            .filter(|(_, v)| v.iter().any(|&i| self.nodes[i].features.has(need)))
            .map(|(k, _)| *k)
            .collect()
    }

    pub fn num_states(&self) -> usize {
        self.nodes.len()
    }
}

static TABLE: OnceLock<Result<BfsTable, String>> = OnceLock::new();

/// The shared table, built on first use.
pub fn bfs_table() -> Result<&'static BfsTable, WitnessError> {
    TABLE
        .get_or_init(|| BfsTable::build().map_err(|e| e.to_string()))
        .as_ref()
        .map_err(|e| WitnessError::Table(e.clone()))
}
