//! File formats, report serialization and input resolution for the
//! `takiff` command-line tool. The mathematics lives in [`takiff_core`].

pub mod format;
pub mod report_json;

use std::path::Path;
use std::time::Instant;

use anyhow::{Context, Result};
use takiff_core::catalog::{self, CatalogEntry, Flags};
use takiff_core::report::Clock;
use takiff_core::{InvariantSet, LieAlgebra};

pub use format::{AlgebraFile, FamilyFile};
pub use report_json::{report_to_json, ReportJson};

/// An algebra with its basic invariants, from a file or the catalog.
#[derive(Debug, Clone)]
pub struct Input {
    pub algebra: LieAlgebra,
    pub invariants: InvariantSet,
    pub flags: Flags,
    pub entry: Option<CatalogEntry>,
}

/// Resolves a catalog name first, then falls back to reading a JSON file.
pub fn resolve(input: &str) -> Result<Input> {
    if let Ok(entry) = catalog::load(input) {
        return Ok(Input {
            algebra: entry.algebra.clone(),
            invariants: entry.invariants.clone(),
            flags: entry.flags,
            entry: Some(entry),
        });
    }
    let path = Path::new(input);
    if !path.exists() {
        anyhow::bail!("`{input}` is neither a catalog entry nor an existing file");
    }
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
    let file: AlgebraFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing {input} as an algebra file"))?;
    let (algebra, invariants, flags) = file
        .into_algebra()
        .with_context(|| format!("loading {input}"))?;
    Ok(Input {
        algebra,
        invariants,
        flags,
        entry: None,
    })
}

/// Wall-clock milliseconds since construction.
#[derive(Debug, Clone, Copy)]
pub struct WallClock(Instant);

impl WallClock {
    pub fn start() -> Self {
        Self(Instant::now())
    }
}

impl Clock for WallClock {
    fn now_ms(&self) -> u64 {
        self.0.elapsed().as_millis() as u64
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json_string<T: serde::Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}
