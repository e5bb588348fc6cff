//! On-disk witness store: `<root>/<kind>/<f0>_<f03>.facets` in the line
//! format, with the recipe and a SHA-256 of the facet body in comments.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::incidence::VertexFacetIncidence;
use crate::io::{parse_facet_list, serialize_facet_list};

use super::{Recipe, WitnessError};

/// Environment variable overriding the cache directory.
pub const CACHE_ENV: &str = "POLYPAIR_CACHE";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCache {
    root: PathBuf,
}

fn digest(body: &str) -> String {
    hex::encode(Sha256::digest(body.as_bytes()))
}

fn cache_err(e: impl std::fmt::Display) -> WitnessError {
    WitnessError::Cache(e.to_string())
}

impl WitnessCache {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        WitnessCache { root: root.into() }
    }

    /// `$POLYPAIR_CACHE`, or `polypair-cache` under the system temp dir.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_ENV) {
            Some(dir) => Self::new(dir),
            None => Self::new(std::env::temp_dir().join("polypair-cache")),
        }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn path(&self, kind: &str, pair: (u64, u64)) -> PathBuf {
        let dir: String = kind
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
            .collect();
        self.root.join(dir).join(format!("{}_{}.facets", pair.0, pair.1))
    }

    /// A stored witness whose digest and pair check out. Corrupt entries
    /// read as missing.
    pub fn get(&self, kind: &str, pair: (u64, u64)) -> Option<(Recipe, VertexFacetIncidence)> {
        let text = fs::read_to_string(self.path(kind, pair)).ok()?;
        let mut recipe = None;
        let mut sum = None;
        let mut body = String::new();
        for line in text.lines() {
            if let Some(r) = line.strip_prefix("# recipe ") {
                recipe = Recipe::from_json(r).ok();
            } else if let Some(s) = line.strip_prefix("# sha256 ") {
                sum = Some(s.trim().to_string());
            } else if !line.starts_with('#') {
                body.push_str(line);
                body.push('\n');
            }
        }
        if sum? != digest(&body) {
            return None;
        }
        let p = parse_facet_list(&body).ok()?;
        let recipe = recipe?;
        (p.pair() == pair && recipe.expected_pair() == pair).then_some((recipe, p))
    }

    /// Writes atomically: a temp file in the target directory is renamed
    /// over the entry.
    pub fn put(&self, kind: &str, recipe: &Recipe, p: &VertexFacetIncidence) -> Result<PathBuf, WitnessError> {
        let path = self.path(kind, p.pair());
        let dir = path.parent().expect("cache paths have a parent");
        fs::create_dir_all(dir).map_err(cache_err)?;
        let body = serialize_facet_list(&p.canonical());
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(cache_err)?;
        write!(
            tmp,
            "# witness ({},{})\n# recipe {}\n# sha256 {}\n{}",
            p.pair().0,
            p.pair().1,
            recipe.to_json(),
            digest(&body),
            body
        )
        .map_err(cache_err)?;
        tmp.persist(&path).map_err(cache_err)?;
        Ok(path)
    }
}
