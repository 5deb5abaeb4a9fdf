//! Fixed interval grids for the elimination policies.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::unit_index;

/// How interval endpoints grow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Grid {
    /// `t_i = k^{1-a_i} T^{a_i}` with `a_i = (2 - 2^{-(i-1)}) / (2 - 2^{-m})`;
    /// balances worst-case regret across intervals.
    Minimax,
    /// `a_i = i / (m+1)`; tuned for gap-dependent regret.
    Geometric,
}

/// Interval endpoints `1 = t_0 < t_1 < … < t_{m+1} = T`.
///
/// Interval 1 covers rounds `[1, t_1]`, interval `l >= 2` covers
/// `(t_{l-1}, t_l]`. The first `m` intervals explore, the last exploits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalPlan {
    /// Number of exploration intervals after capping and merging.
    pub m_eff: u64,
    pub endpoints: Vec<u64>,
}

/// Beyond `⌈log2 log2 (T/k)⌉ + 1` exploration intervals the worst-case
/// rate no longer improves, so larger indices are capped there.
pub fn interval_cap(k: usize, horizon: u64) -> u64 {
    let ratio = (horizon as f64 / k as f64).max(4.0);
    ratio.log2().log2().ceil() as u64 + 1
}

/// Builds the grid for index `m` (already derived from the budget).
pub fn plan_for_index(k: usize, m: u64, horizon: u64, grid: Grid) -> Result<IntervalPlan> {
    if k == 0 || horizon < k as u64 {
        return Err(Error::HorizonTooSmall { horizon, k });
    }
    let m = m.min(interval_cap(k, horizon));
    let (ln_k, ln_t) = ((k as f64).ln(), (horizon as f64).ln());
    let mut endpoints = vec![1u64];
    let mut last = 0u64;
    for i in 1..=m {
        let a = match grid {
            Grid::Minimax => {
                (2.0 - 0.5f64.powi(i as i32 - 1)) / (2.0 - 0.5f64.powi(m as i32))
            }
            Grid::Geometric => i as f64 / (m as f64 + 1.0),
        };
        let t = floor_snapped(((1.0 - a) * ln_k + a * ln_t).exp()).min(horizon);
        // Intervals too short to give every arm one round are merged into
        // the next interval; the final endpoint is always T.
        if t >= last + k as u64 && t < horizon {
            endpoints.push(t);
            last = t;
        }
    }
    endpoints.push(horizon);
    Ok(IntervalPlan { m_eff: endpoints.len() as u64 - 2, endpoints })
}

/// Unit-cost grid of the minimax policy for budget `S`.
pub fn plan_intervals_ssse(k: usize, budget: f64, horizon: u64) -> Result<IntervalPlan> {
    plan_for_index(k, budget_index(k, budget, horizon)?, horizon, Grid::Minimax)
}

/// Unit-cost geometric grid for budget `S`.
pub fn plan_intervals_ssse2(k: usize, budget: f64, horizon: u64) -> Result<IntervalPlan> {
    plan_for_index(k, budget_index(k, budget, horizon)?, horizon, Grid::Geometric)
}

fn budget_index(k: usize, budget: f64, horizon: u64) -> Result<u64> {
    if budget.is_nan() || budget < 0.0 {
        return Err(Error::BadBudget(budget));
    }
    Ok(unit_index(k, budget).unwrap_or_else(|| interval_cap(k.max(1), horizon)))
}

// floor() that forgives values a few ulps below an integer
fn floor_snapped(x: f64) -> u64 {
    let r = x.round();
    if (x - r).abs() <= 1e-9 * x.abs().max(1.0) {
        r as u64
    } else {
        x.floor() as u64
    }
}

impl IntervalPlan {
    /// Number of intervals, `m_eff + 1`.
    pub fn intervals(&self) -> usize {
        self.endpoints.len() - 1
    }

    /// Inclusive 1-based round range of interval `l` (1-based).
    pub fn range(&self, l: usize) -> (u64, u64) {
        let start = if l == 1 { 1 } else { self.endpoints[l - 1] + 1 };
        (start, self.endpoints[l])
    }

    pub fn len_of(&self, l: usize) -> u64 {
        let (a, b) = self.range(l);
        b + 1 - a
    }

    /// Length of the shortest exploration interval, if any.
    pub fn shortest_exploration(&self) -> Option<u64> {
        (1..=self.m_eff as usize).map(|l| self.len_of(l)).min()
    }

    pub fn horizon(&self) -> u64 {
        *self.endpoints.last().expect("plan has endpoints")
    }
}
