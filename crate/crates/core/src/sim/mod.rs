//! Deterministic run engine and trace diagnostics.

mod cover;
mod regret;

pub use cover::{cover_stats, CoverStats};
pub use regret::{
    default_gap_grid, gap_environment, regret_only, worst_case_regret, GapPoint, RegretReport,
};

use serde::Serialize;

use crate::env::Environment;
use crate::error::{Error, Result};
use crate::graph::SwitchingGraph;
use crate::policy::{Policy, PolicyConfig};
use crate::rng::run_rng;

/// Full record of one run. Rounds are 0-based positions in the vectors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunTrace {
    pub actions: Vec<usize>,
    pub rewards: Vec<f64>,
    /// Switching cost accumulated up to and including each round, as
    /// charged by the policy's own accountant.
    pub cum_cost: Vec<f64>,
    pub seed: u64,
}

impl RunTrace {
    pub fn len(&self) -> usize {
        self.actions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.actions.is_empty()
    }

    pub fn switches(&self) -> usize {
        self.actions.windows(2).filter(|w| w[0] != w[1]).count()
    }

    pub fn total_cost(&self) -> f64 {
        self.cum_cost.last().copied().unwrap_or(0.0)
    }
}

/// Runs a fresh policy from `config` on `env` for the configured horizon.
pub fn run_once(config: &PolicyConfig, env: &Environment, seed: u64) -> Result<RunTrace> {
    check_arms(config, env)?;
    let mut policy = config.build();
    Ok(run_policy(&mut policy, env, config.horizon(), seed))
}

/// Drives any policy for `horizon` rounds. Round `t` draws its reward from
/// a generator seeded by `seed` alone, so identical inputs give identical
/// traces.
pub fn run_policy<P: Policy>(policy: &mut P, env: &Environment, horizon: u64, seed: u64) -> RunTrace {
    let n = horizon as usize;
    let mut rng = run_rng(seed);
    let mut trace = RunTrace {
        actions: Vec::with_capacity(n),
        rewards: Vec::with_capacity(n),
        cum_cost: Vec::with_capacity(n),
        seed,
    };
    for _ in 0..n {
        let arm = policy.next_arm();
        let reward = env.sample(arm, &mut rng);
        policy.observe(arm, reward);
        trace.actions.push(arm);
        trace.rewards.push(reward);
        trace.cum_cost.push(policy.cost_spent());
    }
    trace
}

pub(crate) fn check_arms(config: &PolicyConfig, env: &Environment) -> Result<()> {
    if config.arms() != env.arms() {
        return Err(Error::ArmCount { expected: config.arms(), got: env.arms() });
    }
    Ok(())
}

/// `Σ_t (μ* - μ_{a_t})`, summed round by round.
pub fn pseudo_regret(trace: &RunTrace, env: &Environment) -> f64 {
    pseudo_regret_of(&trace.actions, env)
}

pub fn pseudo_regret_of(actions: &[usize], env: &Environment) -> f64 {
    actions.iter().fold(0.0, |acc, &a| acc + env.gap(a))
}

/// Cumulative switching cost of `actions` on `graph`, recomputed from
/// scratch.
pub fn cumulative_cost(actions: &[usize], graph: &SwitchingGraph) -> Vec<f64> {
    let mut total = 0.0;
    let mut out = Vec::with_capacity(actions.len());
    let mut prev = None;
    for &a in actions {
        if let Some(p) = prev {
            if p != a {
                total += graph.cost(p, a).value();
            }
        }
        prev = Some(a);
        out.push(total);
    }
    out
}

/// Outcome of checking a trace against its budget.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BudgetAudit {
    /// Recomputed total switching cost.
    pub total: f64,
    /// The recomputed cumulative cost equals the trace's own, round by round.
    pub agrees: bool,
    pub within_budget: bool,
}

impl BudgetAudit {
    pub fn passed(&self) -> bool {
        self.agrees && self.within_budget
    }
}

pub fn audit_budget(trace: &RunTrace, graph: &SwitchingGraph, budget: f64) -> BudgetAudit {
    let recomputed = cumulative_cost(&trace.actions, graph);
    let total = recomputed.last().copied().unwrap_or(0.0);
    BudgetAudit {
        total,
        agrees: recomputed == trace.cum_cost,
        within_budget: total <= budget,
    }
}
