//! Campaigns that compare solver output against the closed forms, plus the
//! report, witness and cache files they leave behind.
//!
//! Layout under the output directory:
//!
//! ```text
//! report.csv | report.json | report.md
//! witnesses/<family>-<n>-<quantity>.json
//! cache/results.json
//! ```

mod cache;
mod campaign;
mod report;

use std::fs;
use std::path::{Path, PathBuf};

pub use cache::{CacheKey, ResultsCache};
pub use campaign::{
    run_campaign, witness_file_name, Campaign, DeskCaps, Status, Summary, VerificationRow,
};
pub use report::{render_report, ReportFormat};

use crate::colouring::Colouring;
use crate::error::Result;

pub const CACHE_ENV: &str = "CHROMASUM_CACHE";

/// Cache location: `$CHROMASUM_CACHE` if set, else `<out>/cache/results.json`.
pub fn default_cache_path(out: &Path) -> PathBuf {
    match std::env::var_os(CACHE_ENV) {
        Some(p) if !p.is_empty() => PathBuf::from(p),
        _ => out.join("cache").join("results.json"),
    }
}

/// Writes the requested reports and every referenced witness under `out`.
pub fn write_outputs(rows: &[VerificationRow], out: &Path, formats: &[ReportFormat]) -> Result<()> {
    fs::create_dir_all(out.join("witnesses"))?;
    for r in rows {
        if let (Some(path), Some(w)) = (&r.witness_path, &r.witness) {
            fs::write(out.join(path), serde_json::to_string(w)? + "\n")?;
        }
    }
    for &f in formats {
        fs::write(out.join(f.file_name()), render_report(rows, f)?)?;
    }
    Ok(())
}

pub fn load_witness(path: &Path) -> Result<Colouring> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

/// Full `verify` pipeline: open the cache, run, write outputs, save the cache.
pub fn verify(
    campaign: &Campaign,
    out: &Path,
    formats: &[ReportFormat],
    cache_path: &Path,
) -> Result<Vec<VerificationRow>> {
    let mut cache = ResultsCache::open(cache_path);
    let rows = run_campaign(campaign, &mut cache)?;
    cache.save()?;
    write_outputs(&rows, out, formats)?;
    Ok(rows)
}
