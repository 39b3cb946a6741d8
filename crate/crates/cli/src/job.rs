use std::path::PathBuf;

use equiloc_core::Rational;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    #[default]
    Check,
    SClass,
    Compare,
    Classify,
    Decide,
    OrbitSClass,
    OrbitCompare,
    Sweep,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Latex,
    Json,
}

/// One invocation. Every command-line flag has a field here, so a job can
/// also be stored as JSON and replayed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct JobSpec {
    pub command: Command,
    /// Polytope or orbit description in JSON.
    pub file: Option<PathBuf>,
    /// Builder name: `simplex`, `hirzebruch`, `pl_bundle`, `s2xs2`.
    pub model: Option<String>,
    pub n: Option<usize>,
    pub k: Option<i64>,
    pub sigma: Option<Rational>,
    pub tau: Option<Rational>,
    pub a: Option<Vec<i64>>,
    /// Orbit spectrum, weakly decreasing.
    pub spectrum: Option<Vec<Rational>>,
    pub vector: Option<Vec<i64>>,
    pub vector2: Option<Vec<i64>>,
    pub param_mode: bool,
    pub incommensurable: bool,
    pub format: Format,
    /// Half-width of the sweep grid.
    pub range: Option<i64>,
    /// Relative series truncation for the perturbation engine.
    pub truncation: Option<usize>,
}
