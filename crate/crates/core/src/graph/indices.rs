use serde::Serialize;

use super::{Cost, SwitchingGraph};
use crate::error::{Error, Result};

/// `⌊x⌋` with negative (and NaN) inputs clamped to 0 and `+∞` saturating.
pub fn floor_index(x: f64) -> u64 {
    if x.is_nan() || x < 0.0 {
        0
    } else if x >= u64::MAX as f64 {
        u64::MAX
    } else {
        x.floor() as u64
    }
}

/// Unit-cost index `m(S) = ⌊(S-1)/(k-1)⌋`; `None` for a single arm, where
/// no switch is ever needed.
pub fn unit_index(k: usize, budget: f64) -> Option<u64> {
    if k < 2 {
        None
    } else {
        Some(floor_index((budget - 1.0) / (k - 1) as f64))
    }
}

/// Interval counts a budget affords on a switching graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BudgetIndices {
    /// `⌊(S-1)/(k-1)⌋`
    pub m_unit: u64,
    /// `⌊(S - max c) / H⌋`, achievable by the Hamiltonian policy.
    pub m_upper: u64,
    /// `⌊(S - max_i min_j c) / H⌋`, beyond which no policy can go.
    pub m_lower: u64,
}

/// Evaluates the three budget indices for `(g, S, H)`.
///
/// A zero-weight path makes every covering walk free, so the graph
/// indices saturate at `u64::MAX` once the budget pays for the single
/// most expensive switch.
pub fn budget_indices(g: &SwitchingGraph, budget: f64, path_weight: Cost) -> Result<BudgetIndices> {
    let k = g.arms();
    if k < 2 {
        return Err(Error::DegenerateGraph);
    }
    if budget.is_nan() || budget < 0.0 {
        return Err(Error::BadBudget(budget));
    }
    if path_weight.is_infinite() {
        return Err(Error::NoFinitePath);
    }
    let h = path_weight.value();
    let index = |c: Cost| -> u64 {
        if c.is_infinite() {
            return 0;
        }
        let slack = budget - c.value();
        if h == 0.0 {
            if slack >= 0.0 {
                u64::MAX
            } else {
                0
            }
        } else {
            floor_index(slack / h)
        }
    };
    Ok(BudgetIndices {
        m_unit: unit_index(k, budget).expect("k >= 2"),
        m_upper: index(g.max_cost()),
        m_lower: index(g.max_min_cost()),
    })
}
