//! Run configuration: grid, tolerance overrides, output target.

use std::path::PathBuf;

use clap::ValueEnum;
use fracsob_core::{Grid, GridF64, Tolerances};

use crate::UsageError;

pub const GRID_ENV: &str = "FRACSOB_GRID";
const MIN_LOG2_N: u32 = 10;
const MAX_LOG2_N: u32 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub grid: GridF64,
    pub tolerances: Tolerances,
    pub out: Option<PathBuf>,
    pub format: Format,
}

/// Parses `"L,N"`; `N` must be a power of two in `[2^10, 2^20]`.
pub fn parse_grid(text: &str) -> Result<GridF64, UsageError> {
    let bad = |why: &str| UsageError(format!("invalid grid {text:?}: {why}"));
    let (l, n) = text.split_once(',').ok_or_else(|| bad("expected \"L,N\""))?;
    let l: f64 = l.trim().parse().map_err(|_| bad("L is not a number"))?;
    let n: usize = n.trim().parse().map_err(|_| bad("N is not an integer"))?;
    if !(l.is_finite() && l > 0.0) {
        return Err(bad("L must be positive and finite"));
    }
    if !n.is_power_of_two() || !((1 << MIN_LOG2_N)..=(1 << MAX_LOG2_N)).contains(&n) {
        return Err(bad("N must be a power of two between 2^10 and 2^20"));
    }
    Grid::new(l, n).map_err(|e| bad(&e.to_string()))
}

/// Parses `key=value` and applies it.
pub fn apply_tolerance(tol: &mut Tolerances, text: &str) -> Result<(), UsageError> {
    let bad = |why: &str| UsageError(format!("invalid tolerance {text:?}: {why}"));
    let (k, v) = text.split_once('=').ok_or_else(|| bad("expected key=value"))?;
    let v: f64 = v.trim().parse().map_err(|_| bad("value is not a number"))?;
    if !(v.is_finite() && v >= 0.0) {
        return Err(bad("value must be finite and non-negative"));
    }
    if !tol.set(k.trim(), v) {
        let known: Vec<&str> = tol.keys().collect();
        return Err(bad(&format!("unknown key; known keys: {}", known.join(", "))));
    }
    Ok(())
}

impl RunConfig {
    /// Grid precedence: `--grid`, then `FRACSOB_GRID`, then the default.
    pub fn resolve(
        grid_flag: Option<&str>,
        grid_env: Option<&str>,
        tol_flags: &[String],
        out: Option<PathBuf>,
        format: Format,
    ) -> Result<Self, UsageError> {
        let grid = match grid_flag.or(grid_env) {
            Some(text) => parse_grid(text)?,
            None => Grid::default_physical(),
        };
        let mut tolerances = Tolerances::default();
        for t in tol_flags {
            apply_tolerance(&mut tolerances, t)?;
        }
        Ok(RunConfig { grid, tolerances, out, format })
    }

    /// The refinement used for stability checks: `2N` samples on `1.5L`.
    pub fn refined_grid(&self) -> GridF64 {
        Grid::new(self.grid.half_width() * 1.5, self.grid.len() * 2).expect("refinement of a valid grid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let g = parse_grid("40,16384").unwrap();
        assert_eq!((g.half_width(), g.len()), (40.0, 16384));
        for bad in ["40", "0,16384", "40,1000", "40,512", "40,2097152", "x,1024", "inf,1024"] {
            assert!(parse_grid(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn precedence_and_tolerances() {
        let c = RunConfig::resolve(Some("20,1024"), Some("30,2048"), &[], None, Format::Json).unwrap();
        assert_eq!(c.grid.len(), 1024);
        let c = RunConfig::resolve(None, Some("30,2048"), &["drift=0.05".into()], None, Format::Csv).unwrap();
        assert_eq!((c.grid.len(), c.tolerances.get("drift")), (2048, 0.05));
        assert!(RunConfig::resolve(None, None, &["nosuch=1".into()], None, Format::Json).is_err());
        assert!(RunConfig::resolve(None, None, &["drift=-1".into()], None, Format::Json).is_err());
        let r = RunConfig::resolve(None, None, &[], None, Format::Json).unwrap().refined_grid();
        assert_eq!((r.half_width(), r.len()), (60.0, 1 << 15));
    }
}
