use rayon::prelude::*;
use serde::Serialize;

use crate::env::{Environment, Family};
use crate::error::{Error, Result};
use crate::policy::{Policy, PolicyConfig};
use crate::rng::{derive_seed, run_rng};

use super::check_arms;

/// `{0.02, 0.04, …, 0.50}`.
pub fn default_gap_grid() -> Vec<f64> {
    (1..=25).map(|i| i as f64 * 0.02).collect()
}

/// All arms at mean 0 except the last, which has mean `gap`.
pub fn gap_environment(k: usize, gap: f64, family: Family) -> Result<Environment> {
    let mut means = vec![0.0; k];
    means[k - 1] = gap;
    Environment::new(means, family)
}

/// Pseudo-regret of one run without recording a trace.
///
/// Once the policy commits to a single arm, no further rewards are drawn;
/// the remaining gaps are added in the same order a full run would add
/// them, so the result equals `pseudo_regret(run_once(..))` exactly.
pub fn regret_only(config: &PolicyConfig, env: &Environment, seed: u64) -> Result<f64> {
    check_arms(config, env)?;
    let mut policy = config.build();
    let mut rng = run_rng(seed);
    let horizon = config.horizon();
    let mut regret = 0.0;
    for t in 0..horizon {
        if let Some(arm) = policy.committed_arm() {
            let gap = env.gap(arm);
            for _ in t..horizon {
                regret += gap;
            }
            break;
        }
        let arm = policy.next_arm();
        let reward = env.sample(arm, &mut rng);
        policy.observe(arm, reward);
        regret += env.gap(arm);
    }
    Ok(regret)
}

/// Regret statistics at one grid gap.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapPoint {
    pub gap: f64,
    pub mean: f64,
    pub std_err: f64,
    pub min: f64,
    pub max: f64,
    /// Per-replication pseudo-regret in replication order.
    pub runs: Vec<f64>,
}

/// Empirical worst case over a finite gap grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegretReport {
    pub horizon: u64,
    pub replications: usize,
    pub base_seed: u64,
    pub points: Vec<GapPoint>,
    /// Largest mean regret over the grid.
    pub max: f64,
    /// Standard error at the maximizing gap.
    pub max_std_err: f64,
    pub worst_gap: f64,
}

/// Mean pseudo-regret for every gap in `grid`, maximized over the grid.
///
/// Replication `r` uses seed `derive_seed(base_seed, r)` at every gap.
/// Replications run on the current rayon pool and are aggregated in index
/// order, so the report does not depend on the degree of parallelism.
pub fn worst_case_regret(
    config: &PolicyConfig,
    grid: &[f64],
    replications: usize,
    base_seed: u64,
    family: Family,
) -> Result<RegretReport> {
    if grid.is_empty() {
        return Err(Error::Config("gap grid is empty".into()));
    }
    if let Some(&g) = grid.iter().find(|&&g| !(g > 0.0 && g <= 1.0)) {
        return Err(Error::Config(format!("gap {g} is outside (0, 1]")));
    }
    if replications == 0 {
        return Err(Error::Config("replications must be at least 1".into()));
    }
    let k = config.arms();
    let envs = grid
        .iter()
        .map(|&g| gap_environment(k, g, family))
        .collect::<Result<Vec<_>>>()?;
    let jobs: Vec<(usize, usize)> =
        (0..grid.len()).flat_map(|g| (0..replications).map(move |r| (g, r))).collect();
    let values = jobs
        .par_iter()
        .map(|&(g, r)| regret_only(config, &envs[g], derive_seed(base_seed, r as u64)))
        .collect::<Result<Vec<f64>>>()?;

    let points: Vec<GapPoint> = grid
        .iter()
        .zip(values.chunks(replications))
        .map(|(&gap, runs)| summarize(gap, runs.to_vec()))
        .collect();
    let worst = points
        .iter()
        .fold(&points[0], |best, p| if p.mean > best.mean { p } else { best });
    Ok(RegretReport {
        horizon: config.horizon(),
        replications,
        base_seed,
        max: worst.mean,
        max_std_err: worst.std_err,
        worst_gap: worst.gap,
        points,
    })
}

fn summarize(gap: f64, runs: Vec<f64>) -> GapPoint {
    let n = runs.len() as f64;
    let mean = runs.iter().sum::<f64>() / n;
    let std_err = if runs.len() > 1 {
        let var = runs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
        (var / n).sqrt()
    } else {
        0.0
    };
    let min = runs.iter().copied().fold(f64::INFINITY, f64::min);
    let max = runs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    GapPoint { gap, mean, std_err, min, max, runs }
}
