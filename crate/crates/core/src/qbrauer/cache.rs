//! JSON persistence of multiplication tables, keyed by rank and format version.

use super::engine::{Engine, MulTable};
use super::sparse::Sparse;
use crate::coefficients::Ground;
use crate::error::{Error, Result};
use std::path::{Path, PathBuf};
use std::sync::Arc;

pub const FORMAT_VERSION: u32 = 1;

#[derive(serde::Serialize, serde::Deserialize)]
struct TableFile {
    format_version: u32,
    n: usize,
    words: usize,
    right_t: Vec<Vec<Vec<(u32, String)>>>,
    right_e: Vec<Vec<(u32, String)>>,
}

pub fn path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("qbrauer-n{n}-v{FORMAT_VERSION}.json"))
}

fn encode(v: &Sparse) -> Vec<(u32, String)> {
    v.iter().map(|(i, c)| (*i, c.to_compact())).collect()
}

fn decode(v: Vec<(u32, String)>, dim: usize) -> Result<Sparse> {
    v.into_iter()
        .map(|(i, s)| {
            if i as usize >= dim {
                return Err(Error::Cache(format!("index {i} out of range")));
            }
            Ok((i, Ground::from_compact(&s).map_err(|e| Error::Cache(e.to_string()))?))
        })
        .collect()
}

/// Loads a table if the file exists; a stale or malformed file is an error.
pub fn load(dir: &Path, n: usize, sub: Option<Arc<Engine>>) -> Result<Option<Engine>> {
    let p = path(dir, n);
    if !p.exists() {
        return Ok(None);
    }
    let text = std::fs::read_to_string(&p).map_err(|e| Error::Cache(format!("{}: {e}", p.display())))?;
    let file: TableFile = serde_json::from_str(&text).map_err(|e| Error::Cache(format!("{}: {e}", p.display())))?;
    let mut e = Engine::skeleton(n, sub)?;
    let dim = e.dim();
    if file.format_version != FORMAT_VERSION || file.n != n || file.words != dim {
        return Err(Error::Cache(format!("{} does not match rank {n} format {FORMAT_VERSION}", p.display())));
    }
    if file.right_t.len() != n.saturating_sub(1) || file.right_t.iter().any(|r| r.len() != dim) {
        return Err(Error::Cache(format!("{}: truncated table", p.display())));
    }
    let right_t = file.right_t.into_iter().map(|r| r.into_iter().map(|v| decode(v, dim)).collect()).collect::<Result<_>>()?;
    let right_e: Vec<Sparse> = file.right_e.into_iter().map(|v| decode(v, dim)).collect::<Result<_>>()?;
    if n >= 2 && right_e.len() != dim {
        return Err(Error::Cache(format!("{}: truncated table", p.display())));
    }
    e.table = MulTable { right_t, right_e };
    Ok(Some(e))
}

pub fn store(dir: &Path, e: &Engine) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|err| Error::Cache(format!("{}: {err}", dir.display())))?;
    let file = TableFile {
        format_version: FORMAT_VERSION,
        n: e.n,
        words: e.dim(),
        right_t: e.table.right_t.iter().map(|r| r.iter().map(encode).collect()).collect(),
        right_e: e.table.right_e.iter().map(encode).collect(),
    };
    let p = path(dir, e.n);
    // write then rename so readers never see a partial file
    let tmp = p.with_extension("json.tmp");
    let text = serde_json::to_string(&file).map_err(|err| Error::Cache(err.to_string()))?;
    std::fs::write(&tmp, text).map_err(|err| Error::Cache(format!("{}: {err}", tmp.display())))?;
    std::fs::rename(&tmp, &p).map_err(|err| Error::Cache(format!("{}: {err}", p.display())))?;
    Ok(())
}
