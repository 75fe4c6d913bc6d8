//! Serializable records produced by the verification routines.
//!
//! Records are plain `f64` regardless of the scalar type used for the
//! computation so that reports from either precision share one schema.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::conventions::Grid;
use crate::scalar::{to_f64, Real};

/// Default tolerance for each named check; the CLI overrides them with
/// `--tol key=value`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tolerances(BTreeMap<String, f64>);

impl Default for Tolerances {
    fn default() -> Self {
        let pairs = [
            ("plancherel", 1e-6),
            ("identity_smooth", 0.01),
            ("identity_rough", 0.02),
            ("reconstruction", 1e-6),
            ("cauchy_schwarz_slack", 1e-9),
            ("corollary_slack", 1e-9),
            ("drift", 0.02),
            ("slope", 0.05),
            ("scale", 1e-12),
            ("sobolev_slack", 1e-12),
        ];
        Tolerances(pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect())
    }
}

impl Tolerances {
    pub fn get(&self, key: &str) -> f64 {
        self.0.get(key).copied().unwrap_or(f64::NAN)
    }

    /// Sets `key`; returns false if the key is not a known tolerance.
    pub fn set(&mut self, key: &str, value: f64) -> bool {
        match self.0.get_mut(key) {
            Some(v) => {
                *v = value;
                true
            }
            None => false,
        }
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }

    pub fn as_map(&self) -> &BTreeMap<String, f64> {
        &self.0
    }
}

/// How `lhs` and `rhs` are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// `|lhs/rhs - 1| ≤ tol`, with `0/0 = 1`.
    Ratio,
    /// `lhs ≤ rhs + tol`.
    UpperBound,
    /// `|lhs - rhs| ≤ tol·(1 + |rhs|)`.
    Absolute,
    /// `|lhs - rhs| ≤ tol`.
    Difference,
}

/// One inequality or identity check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub case: String,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
    pub tolerance: f64,
    pub rule: Rule,
    pub passed: bool,
    #[serde(rename = "L")]
    pub half_width: f64,
    #[serde(rename = "N")]
    pub samples: usize,
    /// Auxiliary values (snapped parameters, tails, truncations).
    pub details: BTreeMap<String, f64>,
}

/// `lhs / rhs` with `0/0 = 1`.
pub fn ratio_or_one(lhs: f64, rhs: f64) -> f64 {
    if lhs == 0.0 && rhs == 0.0 {
        1.0
    } else {
        lhs / rhs
    }
}

impl VerificationReport {
    pub fn new<T: Real>(
        check: &str,
        case: impl Into<String>,
        lhs: T,
        rhs: T,
        tolerance: f64,
        rule: Rule,
        grid: &Grid<T>,
    ) -> Self {
        let (lhs, rhs) = (to_f64(lhs), to_f64(rhs));
        let ratio = match rule {
            Rule::UpperBound => {
                if rhs == 0.0 {
                    if lhs == 0.0 {
                        0.0
                    } else {
                        f64::INFINITY
                    }
                } else {
                    lhs / rhs
                }
            }
            _ => ratio_or_one(lhs, rhs),
        };
        let passed = match rule {
            Rule::Ratio => (ratio - 1.0).abs() <= tolerance,
            Rule::UpperBound => lhs <= rhs + tolerance,
            Rule::Absolute => (lhs - rhs).abs() <= tolerance * (1.0 + rhs.abs()),
            Rule::Difference => (lhs - rhs).abs() <= tolerance,
        };
        VerificationReport {
            check: check.to_string(),
            case: case.into(),
            lhs,
            rhs,
            ratio,
            tolerance,
            rule,
            passed: passed && lhs.is_finite() && rhs.is_finite(),
            half_width: to_f64(grid.half_width()),
            samples: grid.len(),
            details: BTreeMap::new(),
        }
    }

    pub fn with_detail(mut self, key: &str, value: f64) -> Self {
        self.details.insert(key.to_string(), value);
        self
    }
}

/// Hölder-quotient over Sobolev-norm ratio for one function and order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EmbeddingReport {
    pub function_id: String,
    pub s: f64,
    pub holder_quotient_sup: f64,
    pub hs_norm_value: f64,
    pub ratio: f64,
    /// Lag at which the Hölder quotient peaks.
    pub argmax_gap: f64,
    pub gap_grid: Vec<f64>,
    #[serde(rename = "L")]
    pub half_width: f64,
    #[serde(rename = "N")]
    pub samples: usize,
}
