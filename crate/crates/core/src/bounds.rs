//! Closed-form regret bounds, budget phases and critical points.
//!
//! Every value is reported with its absolute constant set to 1, so only
//! shapes and ratios are meaningful. Regime thresholds use base-2 logs;
//! the bound expressions themselves use natural logs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    budget_indices, metric_closure, shortest_hamiltonian_path, unit_index, SwitchingGraph,
};

/// `1 / (2 - 2^{-m})`: 1 at `m = 0`, decreasing to 1/2.
pub fn regret_exponent(m: u64) -> f64 {
    1.0 / (2.0 - 0.5f64.powf(m as f64))
}

/// `log2 log2 (T/k)`, or `-∞` when `T <= k`.
pub fn final_phase_threshold(k: usize, horizon: u64) -> f64 {
    let ratio = horizon as f64 / k as f64;
    if ratio <= 1.0 {
        f64::NEG_INFINITY
    } else {
        ratio.log2().log2()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `m <= log2 log2 (T/k)`: the budget limits the achievable rate.
    Transient,
    /// `m > log2 log2 (T/k)`: the budget no longer binds and regret is
    /// of order `sqrt(kT)`.
    FinalPhase,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub k: usize,
    pub budget: f64,
    pub horizon: u64,
    /// Index used by the upper bound: `m(S)` on unit costs, the upper graph
    /// index otherwise. `u64::MAX` stands for an unbounded index.
    pub m_upper: u64,
    /// Index used by the lower bound.
    pub m_lower: u64,
    /// Unit-cost index `m(S)`, used by the gap-dependent bounds.
    pub m_unit: u64,
    /// Weight of the Hamiltonian path that priced the graph indices.
    pub path_weight: Option<f64>,
    /// `1 / (2 - 2^{-m_upper})`
    pub exponent: f64,
    pub lower_exponent: f64,
    /// `ln k · ln T · k^{1-e} T^e`
    pub upper_value: f64,
    /// `k^{-3/2-e} (m+1)^{-2} T^e` with the lower index.
    pub lower_transient: f64,
    /// `sqrt(kT)`
    pub lower_final: f64,
    /// The lower branch selected by `regime`.
    pub lower_value: f64,
    /// Regime of the lower index.
    pub regime: Regime,
    pub gap: Option<f64>,
    /// `k^{m/(m+1)} ln k · T^{1/(m+1)} ln T / Δ`; needs a gap.
    pub dd_upper: Option<f64>,
    /// `k^{-3/2-1/(m+1)} (m+1)^{-2} T^{1/(m+1)}`, defined for
    /// `m <= log2 (T/k)`.
    pub dd_lower: Option<f64>,
    /// Always true: values omit an unknown absolute constant.
    pub up_to_constant: bool,
}

/// Evaluates all bounds for `(k, S, T)`.
///
/// With a graph, the Hamiltonian-path indices are computed on its metric
/// closure (a metric graph is its own closure); without one, unit costs
/// are assumed and all indices equal `m(S)`.
pub fn evaluate_bounds(
    k: usize,
    budget: f64,
    horizon: u64,
    graph: Option<&SwitchingGraph>,
    gap: Option<f64>,
) -> Result<BoundReport> {
    if k == 0 || horizon < k as u64 {
        return Err(Error::HorizonTooSmall { horizon, k });
    }
    if budget.is_nan() || budget < 0.0 {
        return Err(Error::BadBudget(budget));
    }
    if let Some(d) = gap {
        if !(d > 0.0 && d <= 1.0) {
            return Err(Error::Config(format!("gap {d} is outside (0, 1]")));
        }
    }
    let m_unit = unit_index(k, budget).unwrap_or(u64::MAX);
    let (m_upper, m_lower, path_weight) = match graph {
        Some(g) if k >= 2 => {
            if g.arms() != k {
                return Err(Error::Config(format!("graph has {} arms, expected {k}", g.arms())));
            }
            let closure = metric_closure(g);
            let path = shortest_hamiltonian_path(&closure.graph)?;
            let idx = budget_indices(&closure.graph, budget, path.weight)?;
            (idx.m_upper, idx.m_lower, Some(path.weight.value()))
        }
        _ => (m_unit, m_unit, None),
    };

    let (kf, tf) = (k as f64, horizon as f64);
    let (ln_k, ln_t) = (kf.ln(), tf.ln());
    let e_up = regret_exponent(m_upper);
    let e_low = regret_exponent(m_lower);
    let upper_value = ln_k * ln_t * kf.powf(1.0 - e_up) * tf.powf(e_up);
    let lower_transient = kf.powf(-1.5 - e_low) * (m_lower as f64 + 1.0).powi(-2) * tf.powf(e_low);
    let lower_final = (kf * tf).sqrt();
    let regime = if m_lower as f64 > final_phase_threshold(k, horizon) {
        Regime::FinalPhase
    } else {
        Regime::Transient
    };
    let lower_value = match regime {
        Regime::Transient => lower_transient,
        Regime::FinalPhase => lower_final,
    };

    let mu = m_unit as f64 + 1.0;
    let dd_upper = gap.map(|d| kf.powf((mu - 1.0) / mu) * ln_k * tf.powf(1.0 / mu) * ln_t / d);
    let dd_lower = ((m_unit as f64) <= (tf / kf).log2())
        .then(|| kf.powf(-1.5 - 1.0 / mu) * mu.powi(-2) * tf.powf(1.0 / mu));

    Ok(BoundReport {
        k,
        budget,
        horizon,
        m_upper,
        m_lower,
        m_unit,
        path_weight,
        exponent: e_up,
        lower_exponent: e_low,
        upper_value,
        lower_transient,
        lower_final,
        lower_value,
        regime,
        gap,
        dd_upper,
        dd_lower,
        up_to_constant: true,
    })
}

/// Budgets `[(j-1)(k-1)+1, j(k-1)+1)` sharing the unit index `m = j-1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Phase {
    pub j: u64,
    /// Inclusive lower budget.
    pub start: u64,
    /// Exclusive upper budget, the `j`-th critical point.
    pub end: u64,
    /// Regret exponent inside the phase.
    pub exponent: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseTable {
    pub k: usize,
    pub phases: Vec<Phase>,
}

pub fn phase_table(k: usize, j_max: u64) -> Result<PhaseTable> {
    if k < 2 {
        return Err(Error::DegenerateGraph);
    }
    if j_max == 0 {
        return Err(Error::Config("phase count must be at least 1".into()));
    }
    let w = k as u64 - 1;
    let phases = (1..=j_max)
        .map(|j| Phase { j, start: (j - 1) * w + 1, end: j * w + 1, exponent: regret_exponent(j - 1) })
        .collect();
    Ok(PhaseTable { k, phases })
}

/// `j(k-1)+1` for `j = 1..=j_max`: the budgets at which the exponent drops.
pub fn critical_points(k: usize, j_max: u64) -> Vec<u64> {
    let w = k.saturating_sub(1) as u64;
    (1..=j_max).map(|j| j * w + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponents() {
        assert_eq!(regret_exponent(0), 1.0);
        assert!((regret_exponent(1) - 2.0 / 3.0).abs() < 1e-15);
        assert!((regret_exponent(2) - 4.0 / 7.0).abs() < 1e-15);
        assert!((regret_exponent(3) - 8.0 / 15.0).abs() < 1e-15);
        for m in 0..=10u64 {
            let p = 0.5f64.powi(m as i32);
            let excess = p / (2.0 * (2.0 - p));
            assert!((regret_exponent(m) - 0.5 - excess).abs() < 1e-15);
            assert!(regret_exponent(m + 1) < regret_exponent(m));
            assert!(regret_exponent(m) > 0.5);
        }
    }

    #[test]
    fn two_arm_upper_value() {
        let r = evaluate_bounds(2, 2.0, 1024, None, None).unwrap();
        assert!((r.exponent - 2.0 / 3.0).abs() < 1e-15);
        let expected = 2f64.ln() * 1024f64.ln() * 2f64.powf(1.0 / 3.0) * 1024f64.powf(2.0 / 3.0);
        assert!((r.upper_value - expected).abs() <= 1e-12 * expected);
        assert_eq!(r.regime, Regime::Transient);
    }

    #[test]
    fn upper_lower_ratio() {
        for (k, s, t) in [(2usize, 2.0, 1024u64), (3, 7.0, 100_000), (5, 13.0, 1 << 30)] {
            let r = evaluate_bounds(k, s, t, None, None).unwrap();
            let (kf, tf, m) = (k as f64, t as f64, r.m_unit as f64);
            let expected = kf.ln() * tf.ln() * kf.powf(2.5) * (m + 1.0).powi(2);
            let ratio = r.upper_value / r.lower_transient;
            assert!((ratio - expected).abs() <= 1e-9 * expected, "{ratio} vs {expected}");
        }
    }

    #[test]
    fn unit_graph_matches_unit_bounds() {
        let g = SwitchingGraph::unit(4);
        for s in 0..20 {
            let a = evaluate_bounds(4, s as f64, 5000, Some(&g), Some(0.1)).unwrap();
            let b = evaluate_bounds(4, s as f64, 5000, None, Some(0.1)).unwrap();
            assert_eq!((a.m_upper, a.m_lower), (b.m_upper, b.m_lower));
            assert_eq!(a.upper_value, b.upper_value);
            assert_eq!(a.lower_value, b.lower_value);
        }
    }

    #[test]
    fn regime_split() {
        // log2 log2 (2^17 / 2) = log2 16 = 4
        let t = 1u64 << 17;
        assert_eq!(evaluate_bounds(2, 5.0, t, None, None).unwrap().regime, Regime::Transient);
        let r = evaluate_bounds(2, 6.0, t, None, None).unwrap();
        assert_eq!(r.regime, Regime::FinalPhase);
        assert_eq!(r.lower_value, r.lower_final);
        assert_eq!(evaluate_bounds(3, 100.0, 3, None, None).unwrap().regime, Regime::FinalPhase);
    }

    #[test]
    fn upper_nonincreasing_in_budget() {
        let mut prev = f64::INFINITY;
        for s in 0..40 {
            let r = evaluate_bounds(3, s as f64, 1 << 20, None, None).unwrap();
            assert!(r.upper_value <= prev);
            prev = r.upper_value;
        }
    }

    #[test]
    fn gap_dependent_bounds() {
        let r = evaluate_bounds(2, 2.0, 4096, None, Some(0.25)).unwrap();
        let expected = 2f64.sqrt() * 2f64.ln() * 64.0 * 4096f64.ln() / 0.25;
        assert!((r.dd_upper.unwrap() - expected).abs() <= 1e-12 * expected);
        let expected = 2f64.powf(-2.0) * 0.25 * 64.0;
        assert!((r.dd_lower.unwrap() - expected).abs() <= 1e-12 * expected);
        // m = 20 > log2(4096 / 2) = 11
        assert!(evaluate_bounds(2, 21.0, 4096, None, None).unwrap().dd_lower.is_none());
    }

    #[test]
    fn phases_abut() {
        let table = phase_table(3, 6).unwrap();
        assert_eq!(table.phases[0].start, 1);
        assert_eq!(table.phases[0].exponent, 1.0);
        for w in table.phases.windows(2) {
            assert_eq!(w[0].end, w[1].start);
        }
        assert!(table.phases.iter().all(|p| p.end - p.start == 2));
        assert_eq!(critical_points(3, 4), vec![3, 5, 7, 9]);
        assert!(phase_table(1, 3).is_err());
        assert!(phase_table(3, 0).is_err());
    }
}
