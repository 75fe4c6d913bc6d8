//! Report documents: JSON `{meta, records}` or flat CSV, written atomically.

use std::io::{self, Write};
use std::path::Path;

use fracsob_core::{EmbeddingReport, VerificationReport};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::config::{Format, RunConfig};

/// A record with a fixed CSV layout.
pub trait CsvRow: Serialize {
    const HEADER: &'static [&'static str];
    fn row(&self) -> Vec<String>;
}

pub const VERIFY_HEADER: &[&str] = &["check", "case", "lhs", "rhs", "ratio", "tolerance", "rule", "passed", "L", "N"];
pub const SWEEP_HEADER: &[&str] = &["function", "s", "holder_sup", "hs_norm", "ratio", "L", "N"];
pub const NORM_HEADER: &[&str] = &["function", "kind", "order", "value", "L", "N"];

impl CsvRow for VerificationReport {
    const HEADER: &'static [&'static str] = VERIFY_HEADER;
    fn row(&self) -> Vec<String> {
        let rule = serde_json::to_value(self.rule).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
        vec![
            self.check.clone(),
            self.case.clone(),
            self.lhs.to_string(),
            self.rhs.to_string(),
            self.ratio.to_string(),
            self.tolerance.to_string(),
            rule,
            self.passed.to_string(),
            self.half_width.to_string(),
            self.samples.to_string(),
        ]
    }
}

impl CsvRow for EmbeddingReport {
    const HEADER: &'static [&'static str] = SWEEP_HEADER;
    fn row(&self) -> Vec<String> {
        vec![
            self.function_id.clone(),
            self.s.to_string(),
            self.holder_quotient_sup.to_string(),
            self.hs_norm_value.to_string(),
            self.ratio.to_string(),
            self.half_width.to_string(),
            self.samples.to_string(),
        ]
    }
}

/// One norm evaluation.
#[derive(Debug, Clone, Serialize)]
pub struct NormRecord {
    pub function: String,
    pub kind: String,
    /// Name and value of the order parameter (`s`, `sigma` or `gamma`).
    #[serde(skip)]
    pub order: Option<(&'static str, f64)>,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
    pub value: f64,
    #[serde(rename = "L")]
    pub half_width: f64,
    #[serde(rename = "N")]
    pub samples: usize,
}

impl CsvRow for NormRecord {
    const HEADER: &'static [&'static str] = NORM_HEADER;
    fn row(&self) -> Vec<String> {
        vec![
            self.function.clone(),
            self.kind.clone(),
            self.order.map(|(_, v)| v.to_string()).unwrap_or_default(),
            self.value.to_string(),
            self.half_width.to_string(),
            self.samples.to_string(),
        ]
    }
}

/// `meta` fields shared by every command. No clock or host data, so
/// identical invocations give identical bytes.
pub fn base_meta(cfg: &RunConfig, command: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("L".into(), json!(cfg.grid.half_width()));
    m.insert("N".into(), json!(cfg.grid.len()));
    m.insert("command".into(), json!(command));
    m.insert("tolerances".into(), json!(cfg.tolerances.as_map()));
    m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    m
}

pub fn render<R: CsvRow>(format: Format, meta: Map<String, Value>, records: &[R]) -> anyhow::Result<Vec<u8>> {
    match format {
        Format::Json => {
            let doc = json!({ "meta": meta, "records": records });
            let mut out = serde_json::to_vec_pretty(&doc)?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(R::HEADER)?;
            for r in records {
                w.write_record(r.row())?;
            }
            Ok(w.into_inner().map_err(|e| e.into_error())?)
        }
    }
}

/// Writes to a sibling temporary file, then renames over `path`.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Sends the document to `--out`, or to stdout.
pub fn emit(cfg: &RunConfig, bytes: &[u8]) -> anyhow::Result<()> {
    match &cfg.out {
        Some(path) => write_atomic(path, bytes).map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}
