//! Named polytopes with known `(f_0, f_03)` pairs.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use crate::constructions::{
    iterated_pyramid, polygon, polygon_bipyramid, polygon_prism, pyramid_over, r_family, simplex,
    ConstructionError,
};
use crate::cyclic::cyclic_polytope;
use crate::incidence::VertexFacetIncidence;
use crate::witness::{apply_ops, parse_ops};

use super::{parse_bracket_format, serialize_facet_list, IoError};

const FACET_LISTS: &str = include_str!("../../data/facet_lists.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedEntry {
    pub name: String,
    pub incidence: VertexFacetIncidence,
    pub expected_pair: (u64, u64),
    /// Row tag `(f0,f03)` plus how the entry is obtained.
    pub source: String,
}

enum Source {
    Stored,
    Build(fn() -> Result<VertexFacetIncidence, ConstructionError>),
    Dual(&'static str),
    /// Base seed name and compact op string.
    Recipe(&'static str, &'static str),
}

struct SeedDef {
    name: &'static str,
    pair: (u64, u64),
    source: Source,
}

const fn def(name: &'static str, f0: u64, f03: u64, source: Source) -> SeedDef {
    SeedDef {
        name,
        pair: (f0, f03),
        source,
    }
}

use Source::*;

/// Ordered so every reference points to an earlier entry.
const DEFS: &[SeedDef] = &[
    def("simplex", 5, 20, Build(|| simplex(4))),
    def("pyr2-quadrangle", 6, 26, Build(|| iterated_pyramid(&polygon(4)?, 2))),
    def("pyr-bipyramid3", 6, 29, Build(|| pyramid_over(&polygon_bipyramid(3)?))),
    def("pyr-prism3", 7, 29, Build(|| pyramid_over(&polygon_prism(3)?))),
    def("pyr2-pentagon", 7, 32, Build(|| iterated_pyramid(&polygon(5)?, 2))),
    def("pyr2-hexagon", 8, 38, Build(|| iterated_pyramid(&polygon(6)?, 2))),
    def("C4(6)", 6, 36, Build(|| Ok(cyclic_polytope(4, 6)?))),
    def("C4(7)", 7, 56, Build(|| Ok(cyclic_polytope(4, 7)?))),
    def("C4(8)", 8, 80, Build(|| Ok(cyclic_polytope(4, 8)?))),
    def("R2(6)", 7, 52, Build(|| r_family(2, 6))),
    def("P1", 7, 35, Stored),
    def("P2", 7, 36, Stored),
    def("P3", 7, 39, Stored),
    def("P4", 7, 42, Stored),
    def("P5", 7, 45, Stored),
    def("P6", 7, 46, Stored),
    def("P7", 7, 49, Stored),
    def("P8", 8, 39, Stored),
    def("P9", 8, 42, Stored),
    def("P10", 8, 43, Stored),
    def("P11", 8, 45, Stored),
    def("P12", 8, 46, Stored),
    def("P13", 8, 49, Stored),
    def("P14", 8, 52, Stored),
    def("P15", 8, 55, Stored),
    def("P16", 8, 59, Stored),
    def("P17", 8, 60, Stored),
    def("P18", 8, 62, Stored),
    def("P19", 8, 63, Stored),
    def("P20", 8, 65, Stored),
    def("P21", 8, 66, Stored),
    def("P22", 8, 68, Stored),
    def("P23", 8, 69, Stored),
    def("P24", 8, 70, Stored),
    def("P25", 8, 72, Stored),
    def("P26", 8, 73, Stored),
    def("P27", 8, 76, Stored),
    def("P1*", 8, 35, Dual("P1")),
    def("P2*", 8, 36, Dual("P2")),
    def("P3*", 9, 39, Dual("P3")),
    def("P9*", 9, 42, Dual("P9")),
    def("P10*", 9, 43, Dual("P10")),
    def("P11*", 10, 45, Dual("P11")),
    def("P12*", 10, 46, Dual("P12")),
    def("P5*", 11, 45, Dual("P5")),
    def("P13*", 11, 49, Dual("P13")),
    def("P14*", 12, 52, Dual("P14")),
    def("P15*", 13, 55, Dual("P15")),
    def("P4*", 10, 42, Dual("P4")),
    def("P6*", 11, 46, Dual("P6")),
    def("P7*", 12, 49, Dual("P7")),
    def("C4(6)*", 9, 36, Dual("C4(6)")),
    def("R2(6)*", 13, 52, Dual("R2(6)")),
    def("row(9,45)", 9, 45, Recipe("P9*", "B")),
    def("row(9,46)", 9, 46, Recipe("P10*", "B")),
    def("row(9,49)", 9, 49, Recipe("row(9,46)", "B")),
    def("row(9,52)", 9, 52, Recipe("P2*", "Q")),
    def("row(10,49)", 10, 49, Recipe("row(9,49)", "D")),
    def("row(10,52)", 10, 52, Recipe("row(10,49)", "B")),
    def("row(10,55)", 10, 55, Recipe("P3*", "Q")),
    def("row(11,52)", 11, 52, Recipe("row(9,52)", "D")),
    def("row(11,55)", 11, 55, Recipe("row(10,55)", "D")),
    def("row(9,79)", 9, 79, Recipe("P19", "Q")),
];

fn stored_list(name: &str) -> Option<&'static str> {
    FACET_LISTS
        .lines()
        .find_map(|l| l.split_once(' ').filter(|(n, _)| *n == name).map(|(_, b)| b))
}

fn build_err(name: &str, e: impl std::fmt::Display) -> IoError {
    IoError::Build {
        name: name.to_string(),
        message: e.to_string(),
    }
}

fn build_all() -> Result<Vec<SeedEntry>, IoError> {
    let mut out: Vec<SeedEntry> = Vec::with_capacity(DEFS.len());
    for s in DEFS {
        let find = |n: &str| {
            out.iter()
                .find(|e| e.name == n)
                .map(|e| &e.incidence)
                .ok_or_else(|| build_err(s.name, format!("refers to unknown seed {n}")))
        };
        let (incidence, how) = match s.source {
            Stored => {
                let line = stored_list(s.name).ok_or_else(|| build_err(s.name, "missing facet list"))?;
                (parse_bracket_format(line)?, "stored facet list".to_string())
            }
            Build(f) => (f().map_err(|e| build_err(s.name, e))?, "construction".to_string()),
            Dual(of) => (find(of)?.dualize(), format!("dual of {of}")),
            Recipe(base, ops) => {
                let ops = parse_ops(ops).map_err(|e| build_err(s.name, e))?;
                let p = apply_ops(find(base)?, &ops).map_err(|e| build_err(s.name, e))?;
                (p, format!("{base} then {ops:?}"))
            }
        };
        if incidence.pair() != s.pair {
            return Err(build_err(
                s.name,
                format!("has pair {:?}, expected {:?}", incidence.pair(), s.pair),
            ));
        }
        out.push(SeedEntry {
            name: s.name.to_string(),
            incidence,
            expected_pair: s.pair,
            source: format!("({},{}) {how}", s.pair.0, s.pair.1),
        });
    }
    Ok(out)
}

static DATABASE: OnceLock<Result<Vec<SeedEntry>, IoError>> = OnceLock::new();

/// All seeds, built once.
pub fn seed_database() -> Result<&'static [SeedEntry], IoError> {
    DATABASE
        .get_or_init(build_all)
        .as_ref()
        .map(Vec::as_slice)
        .map_err(Clone::clone)
}

pub fn seed_names() -> Vec<&'static str> {
    DEFS.iter().map(|s| s.name).collect()
}

pub fn load_seed(name: &str) -> Result<&'static SeedEntry, IoError> {
    if !DEFS.iter().any(|s| s.name == name) {
        return Err(IoError::UnknownSeed(name.to_string()));
    }
    Ok(seed_database()?
        .iter()
        .find(|e| e.name == name)
        .expect("every definition yields an entry"))
}

/// File name for a seed: `*` becomes `_dual`, other punctuation `_`.
pub fn seed_file_name(name: &str) -> String {
    let mut s = String::new();
    for c in name.chars() {
        match c {
            '*' => s.push_str("_dual"),
            '(' | ',' => s.push('_'),
            ')' => {}
            c => s.push(c),
        }
    }
    s + ".fl"
}

/// Writes every seed in the line format to `dir`.
pub fn export_seeds(dir: &Path) -> Result<Vec<PathBuf>, IoError> {
    fs::create_dir_all(dir).map_err(|e| build_err("export", e))?;
    let mut written = Vec::new();
    for e in seed_database()? {
        let path = dir.join(seed_file_name(&e.name));
        let text = format!(
            "# {} {}\n{}",
            e.name,
            e.source,
            serialize_facet_list(&e.incidence)
        );
        fs::write(&path, text).map_err(|err| build_err(&e.name, err))?;
        written.push(path);
    }
    Ok(written)
}
