//! Structure-constant tables on disk: `sc_n{n}_r{r}_{ring-tag}.json` with a
//! versioned header. A file that fails to parse, carries another version or
//! describes another algebra is ignored (and later overwritten).

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use specht_core::qschur::{SchurAlgebra, StructureConstantTable, TextTable};
use specht_core::ring::Ring;

use crate::CliError;

pub const CACHE_FORMAT: &str = "specht-structure-constants";
pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format: String,
    version: u32,
    n: usize,
    r: usize,
    ring: String,
    products: TextTable,
}

pub fn cache_path<R: Ring>(dir: &Path, alg: &SchurAlgebra<R>) -> PathBuf {
    dir.join(format!("sc_n{}_r{}_{}.json", alg.n(), alg.r(), alg.ring.spec().tag()))
}

/// Seeds `alg` from its cache file; returns the number of products loaded.
pub fn load<R: Ring>(dir: &Path, alg: &SchurAlgebra<R>) -> usize {
    let path = cache_path(dir, alg);
    let Ok(text) = std::fs::read_to_string(&path) else { return 0 };
    let ignore = |why: &str| {
        eprintln!("specht: ignoring cache {}: {why}", path.display());
        0
    };
    let file: CacheFile = match serde_json::from_str(&text) {
        Ok(f) => f,
        Err(e) => return ignore(&e.to_string()),
    };
    if file.format != CACHE_FORMAT || file.version != CACHE_VERSION {
        return ignore(&format!("format {} version {}", file.format, file.version));
    }
    if (file.n, file.r, file.ring.as_str()) != (alg.n(), alg.r(), alg.ring.spec().tag().as_str()) {
        return ignore("written for another algebra");
    }
    let table = match StructureConstantTable::from_text(alg, &file.products) {
        Ok(t) => t,
        Err(e) => return ignore(&e.to_string()),
    };
    match alg.load_table(&table) {
        Ok(()) => table.entries.len(),
        Err(e) => ignore(&e.to_string()),
    }
}

/// Writes every product `alg` knows (loaded or computed) to its cache file.
pub fn save<R: Ring>(dir: &Path, alg: &SchurAlgebra<R>) -> Result<(PathBuf, usize), CliError> {
    let path = cache_path(dir, alg);
    let io = |source| CliError::Io { path: path.display().to_string(), source };
    std::fs::create_dir_all(dir).map_err(io)?;
    let table = alg.cached_table();
    let file = CacheFile {
        format: CACHE_FORMAT.to_string(),
        version: CACHE_VERSION,
        n: alg.n(),
        r: alg.r(),
        ring: alg.ring.spec().tag(),
        products: table.to_text(alg),
    };
    let tmp = path.with_extension("json.tmp");
    std::fs::write(&tmp, serde_json::to_string(&file).expect("tables serialize")).map_err(io)?;
    std::fs::rename(&tmp, &path).map_err(io)?;
    Ok((path, table.entries.len()))
}
