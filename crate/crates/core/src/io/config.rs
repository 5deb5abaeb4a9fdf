use serde::{Deserialize, Serialize};

use crate::env::{Environment, Family};
use crate::error::{Error, Result};
use crate::graph::SwitchingGraph;
use crate::policy::{PolicyConfig, Variant};
use crate::sim::default_gap_grid;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolicySpec {
    pub variant: Variant,
    pub budget: f64,
    pub horizon: u64,
}

/// One policy on one environment.
///
/// ```json
/// {"policy": {"variant": "ssse", "budget": 2, "horizon": 1000},
///  "environment": {"means": [0.5, 0.3], "family": "gaussian"},
///  "seed": 7}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub policy: PolicySpec,
    pub environment: Environment,
    /// Unit costs when absent.
    #[serde(default)]
    pub graph: Option<SwitchingGraph>,
    #[serde(default)]
    pub seed: u64,
}

impl RunConfig {
    pub fn policy_config(&self) -> Result<PolicyConfig> {
        let k = self.environment.arms();
        let graph = match &self.graph {
            Some(g) if g.arms() != k => {
                return Err(Error::Config(format!("graph has {} arms, environment has {k}", g.arms())))
            }
            Some(g) => g.clone(),
            None => SwitchingGraph::unit(k),
        };
        let p = &self.policy;
        PolicyConfig::on_graph(p.variant, graph, p.budget, p.horizon)
    }
}

/// Worst-case regret over a grid of budgets, horizons and gaps.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub k: usize,
    pub variants: Vec<Variant>,
    pub budgets: Vec<f64>,
    pub horizons: Vec<u64>,
    #[serde(default = "default_gap_grid")]
    pub gaps: Vec<f64>,
    pub replications: usize,
    #[serde(default)]
    pub family: Family,
    #[serde(default)]
    pub graph: Option<SwitchingGraph>,
    #[serde(default)]
    pub base_seed: u64,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let empty = [
            ("variants", self.variants.is_empty()),
            ("budgets", self.budgets.is_empty()),
            ("horizons", self.horizons.is_empty()),
            ("gaps", self.gaps.is_empty()),
        ];
        if let Some((name, _)) = empty.iter().find(|(_, e)| *e) {
            return Err(Error::Config(format!("{name} must not be empty")));
        }
        if self.replications == 0 {
            return Err(Error::Config("replications must be at least 1".into()));
        }
        if self.k == 0 {
            return Err(Error::Config("k must be at least 1".into()));
        }
        if let Some(g) = &self.graph {
            if g.arms() != self.k {
                return Err(Error::Config(format!("graph has {} arms, expected {}", g.arms(), self.k)));
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> SwitchingGraph {
        self.graph.clone().unwrap_or_else(|| SwitchingGraph::unit(self.k))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphSolver {
    /// Exact up to the solver cap, approximate beyond.
    #[default]
    Auto,
    Exact,
    Approx,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphConfig {
    pub graph: SwitchingGraph,
    /// Budget for the index computation; indices are omitted without it.
    #[serde(default)]
    pub budget: Option<f64>,
    #[serde(default)]
    pub solver: GraphSolver,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsConfig {
    pub k: usize,
    pub budget: f64,
    pub horizon: u64,
    #[serde(default)]
    pub gap: Option<f64>,
    #[serde(default)]
    pub graph: Option<SwitchingGraph>,
    /// Rows of the phase table.
    #[serde(default = "default_phases")]
    pub phases: u64,
}

fn default_phases() -> u64 {
    6
}
