//! On-disk cache of decomposition matrices.
//!
//! A matrix for `(e, charge, n)` lives in `<dir>/<digest>.json`, where the
//! digest is the hex SHA-256 of the context, the size and the convention
//! fingerprint. Files that fail to load, or describe a different context,
//! are treated as misses and overwritten.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use fockcanon_core::{DecompositionMatrix, FockContext, CONVENTION_FINGERPRINT};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliError;
use crate::format::{matrix_doc, matrix_from_doc, to_json, MatrixDoc};

pub const CACHE_ENV: &str = "FOCKCANON_CACHE";

/// The stored document: the fingerprint it was computed under, and the
/// matrix in the public schema.
#[derive(Serialize, Deserialize)]
struct CacheDoc {
    convention: String,
    matrix: MatrixDoc,
}

pub fn cache_key(ctx: &FockContext, n: u32) -> String {
    let text = format!(
        "e={};charge={};n={n};conv={CONVENTION_FINGERPRINT}",
        ctx.e(),
        ctx.charge()
    );
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Writes `bytes` to a temporary file next to `path`, then renames it into
/// place, so readers never see a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `explicit` if given, else `$FOCKCANON_CACHE`, else no cache.
    pub fn locate(explicit: Option<&Path>) -> Option<Cache> {
        explicit
            .map(Path::to_path_buf)
            .or_else(|| {
                std::env::var_os(CACHE_ENV)
                    .filter(|v| !v.is_empty())
                    .map(PathBuf::from)
            })
            .map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, ctx: &FockContext, n: u32) -> PathBuf {
        self.dir.join(format!("{}.json", cache_key(ctx, n)))
    }

    pub fn load(&self, ctx: &FockContext, n: u32) -> Option<DecompositionMatrix> {
        let text = fs::read_to_string(self.path_for(ctx, n)).ok()?;
        let doc: CacheDoc = serde_json::from_str(&text).ok()?;
        if doc.convention != CONVENTION_FINGERPRINT {
            return None;
        }
        let d = matrix_from_doc(&doc.matrix).ok()?;
        (d.ctx() == ctx && d.n() == n).then_some(d)
    }

    pub fn store(&self, d: &DecompositionMatrix) -> Result<PathBuf, CliError> {
        let path = self.path_for(d.ctx(), d.n());
        let doc = CacheDoc {
            convention: CONVENTION_FINGERPRINT.into(),
            matrix: matrix_doc(d),
        };
        write_atomic(&path, to_json(&doc)?.as_bytes())?;
        Ok(path)
    }

    /// Cached matrix, or a fresh computation that is then stored.
    pub fn get_or_compute(
        &self,
        ctx: &FockContext,
        n: u32,
        compute: impl FnOnce() -> Result<DecompositionMatrix, CliError>,
    ) -> Result<DecompositionMatrix, CliError> {
        if let Some(hit) = self.load(ctx, n) {
            return Ok(hit);
        }
        let d = compute()?;
        self.store(&d)?;
        Ok(d)
    }
}
