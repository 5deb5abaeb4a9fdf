//! Budget-feasible learning policies.
//!
//! All policies are driven round by round through [`Policy`]: ask for an
//! arm with [`Policy::next_arm`], then report the reward with
//! [`Policy::observe`]. [`PolicyConfig`] validates the problem once and
//! builds fresh, independent policy states.

mod elimination;
mod plan;
mod ucb;

pub use elimination::{EliminationPolicy, Transit};
pub use plan::{
    interval_cap, plan_for_index, plan_intervals_ssse, plan_intervals_ssse2, Grid, IntervalPlan,
};
pub use ucb::NaiveUcb;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    budget_indices, metric_closure, shortest_hamiltonian_path, unit_index, HamiltonianPath,
    MetricClosure, SwitchingGraph,
};
use elimination::Traversal;

/// Round-by-round learner.
pub trait Policy {
    fn arms(&self) -> usize;

    /// Arm to play in the next round.
    fn next_arm(&mut self) -> usize;

    /// Reward observed for `arm` in the round just played.
    fn observe(&mut self, arm: usize, reward: f64);

    /// `Some(arm)` once every remaining round is guaranteed to play `arm`.
    fn committed_arm(&self) -> Option<usize>;

    /// Switching cost incurred so far.
    fn cost_spent(&self) -> f64;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Successive elimination on the minimax grid, unit costs.
    Ssse,
    /// Successive elimination on the geometric grid, unit costs.
    Ssse2,
    /// Hamiltonian-order elimination on a metric switching graph.
    Hsse,
    /// Hamiltonian-order elimination on the metric closure of an arbitrary
    /// graph, with each closure switch walked along a shortest path.
    HsseExpanded,
    /// UCB1 that freezes when the budget runs out, unit costs.
    NaiveUcb,
}

impl Variant {
    pub const ALL: [Variant; 5] =
        [Variant::Ssse, Variant::Ssse2, Variant::Hsse, Variant::HsseExpanded, Variant::NaiveUcb];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Ssse => "ssse",
            Variant::Ssse2 => "ssse2",
            Variant::Hsse => "hsse",
            Variant::HsseExpanded => "hsse_expanded",
            Variant::NaiveUcb => "naive_ucb",
        }
    }

    fn uses_graph(self) -> bool {
        matches!(self, Variant::Hsse | Variant::HsseExpanded)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A validated `(variant, graph, S, T)` problem.
///
/// Construction does all precomputation (Hamiltonian path, closure,
/// interval plan) and rejects inputs the variant cannot handle, so
/// [`PolicyConfig::build`] is infallible and cheap.
#[derive(Debug, Clone)]
pub struct PolicyConfig {
    variant: Variant,
    budget: f64,
    horizon: u64,
    graph: SwitchingGraph,
    closure: Option<MetricClosure>,
    path: Option<HamiltonianPath>,
    index: Option<u64>,
    plan: Option<IntervalPlan>,
}

impl PolicyConfig {
    /// Unit switching costs on `k` arms.
    pub fn unit(variant: Variant, k: usize, budget: f64, horizon: u64) -> Result<Self> {
        Self::on_graph(variant, SwitchingGraph::unit(k), budget, horizon)
    }

    /// Runs on `graph`, solving for a Hamiltonian path when the variant
    /// needs one (exactly up to [`crate::graph::EXACT_SOLVER_CAP`] arms).
    pub fn on_graph(variant: Variant, graph: SwitchingGraph, budget: f64, horizon: u64) -> Result<Self> {
        Self::assemble(variant, graph, budget, horizon, None)
    }

    /// Like [`PolicyConfig::on_graph`] with a caller-supplied path. For the
    /// expanded variant the path must be over the metric closure.
    pub fn with_path(
        variant: Variant,
        graph: SwitchingGraph,
        budget: f64,
        horizon: u64,
        path: HamiltonianPath,
    ) -> Result<Self> {
        Self::assemble(variant, graph, budget, horizon, Some(path))
    }

    fn assemble(
        variant: Variant,
        graph: SwitchingGraph,
        budget: f64,
        horizon: u64,
        path: Option<HamiltonianPath>,
    ) -> Result<Self> {
        let k = graph.arms();
        if horizon < k as u64 {
            return Err(Error::HorizonTooSmall { horizon, k });
        }
        if budget.is_nan() || budget < 0.0 {
            return Err(Error::BadBudget(budget));
        }
        if !variant.uses_graph() && !graph.is_unit() {
            return Err(Error::Config(format!("variant {variant} assumes unit switching costs")));
        }
        let mut cfg = PolicyConfig {
            variant,
            budget,
            horizon,
            graph,
            closure: None,
            path: None,
            index: None,
            plan: None,
        };
        match variant {
            Variant::NaiveUcb => {}
            Variant::Ssse | Variant::Ssse2 => {
                let m = unit_index(k, budget).unwrap_or_else(|| interval_cap(k, horizon));
                let grid = if variant == Variant::Ssse { Grid::Minimax } else { Grid::Geometric };
                cfg.index = Some(m);
                cfg.plan = Some(plan_for_index(k, m, horizon, grid)?);
            }
            Variant::Hsse | Variant::HsseExpanded => {
                if variant == Variant::Hsse && !cfg.graph.is_metric() {
                    return Err(Error::NotMetric);
                }
                if variant == Variant::HsseExpanded {
                    if (k as u64).saturating_mul(k as u64) > horizon {
                        return Err(Error::ExpansionGuard { k, horizon });
                    }
                    cfg.closure = Some(metric_closure(&cfg.graph));
                }
                let planning = cfg.closure.as_ref().map_or(&cfg.graph, |c| &c.graph);
                let path = match path {
                    Some(p) => {
                        p.validate(planning)?;
                        p
                    }
                    None => shortest_hamiltonian_path(planning)?,
                };
                if path.weight.is_infinite() {
                    return Err(Error::NoFinitePath);
                }
                let m = if k < 2 {
                    interval_cap(k, horizon)
                } else {
                    budget_indices(planning, budget, path.weight)?.m_upper
                };
                let plan = plan_for_index(k, m, horizon, Grid::Minimax)?;
                if let Some(closure) = &cfg.closure {
                    check_block_room(&plan, k, closure.max_intermediates() as u64)?;
                }
                cfg.index = Some(m);
                cfg.plan = Some(plan);
                cfg.path = Some(path);
            }
        }
        Ok(cfg)
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn arms(&self) -> usize {
        self.graph.arms()
    }

    pub fn budget(&self) -> f64 {
        self.budget
    }

    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    /// Graph whose costs are charged against the budget.
    pub fn graph(&self) -> &SwitchingGraph {
        &self.graph
    }

    pub fn closure(&self) -> Option<&MetricClosure> {
        self.closure.as_ref()
    }

    pub fn path(&self) -> Option<&HamiltonianPath> {
        self.path.as_ref()
    }

    /// Interval index before capping: `m(S)` for unit-cost variants and the
    /// upper graph index for the Hamiltonian ones.
    pub fn index(&self) -> Option<u64> {
        self.index
    }

    pub fn plan(&self) -> Option<&IntervalPlan> {
        self.plan.as_ref()
    }

    /// Fresh policy state for one run.
    pub fn build(&self) -> AnyPolicy {
        let k = self.arms();
        match self.variant {
            Variant::NaiveUcb => AnyPolicy::NaiveUcb(NaiveUcb::new(k, self.budget)),
            _ => {
                let traversal = match &self.path {
                    Some(p) => Traversal::Path(p.order.clone()),
                    None => Traversal::Cyclic,
                };
                AnyPolicy::Elimination(EliminationPolicy::new(
                    self.plan.clone().expect("elimination variants carry a plan"),
                    traversal,
                    self.graph.clone(),
                    self.closure.clone(),
                    self.budget,
                ))
            }
        }
    }
}

// Every exploration block holds at least floor(L/k) rounds and the final
// block the whole last interval; each must fit the longest detour plus one
// round on its destination.
fn check_block_room(plan: &IntervalPlan, k: usize, max_via: u64) -> Result<()> {
    if max_via == 0 {
        return Ok(());
    }
    let exploration = (1..=plan.m_eff as usize).map(|l| plan.len_of(l) / k as u64);
    let available = exploration.chain([plan.len_of(plan.intervals())]).min().unwrap_or(0);
    if available < max_via + 1 {
        return Err(Error::PathTooLong { needed: max_via + 1, available });
    }
    Ok(())
}

/// Concrete policy produced by [`PolicyConfig::build`].
#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum AnyPolicy {
    Elimination(EliminationPolicy),
    NaiveUcb(NaiveUcb),
}

impl AnyPolicy {
    pub fn as_elimination(&self) -> Option<&EliminationPolicy> {
        match self {
            AnyPolicy::Elimination(p) => Some(p),
            AnyPolicy::NaiveUcb(_) => None,
        }
    }
}

impl Policy for AnyPolicy {
    fn arms(&self) -> usize {
        match self {
            AnyPolicy::Elimination(p) => p.arms(),
            AnyPolicy::NaiveUcb(p) => p.arms(),
        }
    }

    fn next_arm(&mut self) -> usize {
        match self {
            AnyPolicy::Elimination(p) => p.next_arm(),
            AnyPolicy::NaiveUcb(p) => p.next_arm(),
        }
    }

    fn observe(&mut self, arm: usize, reward: f64) {
        match self {
            AnyPolicy::Elimination(p) => p.observe(arm, reward),
            AnyPolicy::NaiveUcb(p) => p.observe(arm, reward),
        }
    }

    fn committed_arm(&self) -> Option<usize> {
        match self {
            AnyPolicy::Elimination(p) => p.committed_arm(),
            AnyPolicy::NaiveUcb(p) => p.committed_arm(),
        }
    }

    fn cost_spent(&self) -> f64 {
        match self {
            AnyPolicy::Elimination(p) => p.cost_spent(),
            AnyPolicy::NaiveUcb(p) => p.cost_spent(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Cost;

    // Drives a policy with deterministic rewards `reward(arm, round)`.
    fn drive<P: Policy>(p: &mut P, horizon: u64, reward: impl Fn(usize, u64) -> f64) -> Vec<usize> {
        (1..=horizon)
            .map(|t| {
                let a = p.next_arm();
                p.observe(a, reward(a, t));
                a
            })
            .collect()
    }

    fn switches(actions: &[usize]) -> usize {
        actions.windows(2).filter(|w| w[0] != w[1]).count()
    }

    #[test]
    fn block_rounding_spreads_remainder() {
        // k = 3, S = 3 gives m = 1; T chosen so the first interval has 10
        // rounds: 3^{1-2/3} T^{2/3} = 10.x
        let horizon = 18;
        let cfg = PolicyConfig::unit(Variant::Ssse, 3, 3.0, horizon).unwrap();
        assert_eq!(cfg.plan().unwrap().endpoints, vec![1, 9, 18]);
        let mut p = cfg.build();
        let actions = drive(&mut p, horizon, |_, _| 0.0);
        assert_eq!(&actions[..9], &[0, 0, 0, 1, 1, 1, 2, 2, 2]);

        // ten rounds over three arms in path order (1, 2, 0)
        let mut p = EliminationPolicy::new(
            IntervalPlan { m_eff: 1, endpoints: vec![1, 10, 31] },
            Traversal::Path(vec![1, 2, 0]),
            SwitchingGraph::unit(3),
            None,
            3.0,
        );
        let actions = drive(&mut p, 10, |_, _| 0.0);
        assert_eq!(actions, vec![1, 1, 1, 1, 2, 2, 2, 0, 0, 0]);
    }

    #[test]
    fn ssse_two_arm_switch_pattern() {
        let cfg = PolicyConfig::unit(Variant::Ssse, 2, 2.0, 1000).unwrap();
        let mut p = cfg.build();
        // arm 1 clearly better
        let actions = drive(&mut p, 1000, |a, _| a as f64);
        assert_eq!(&actions[..63], &[0; 63][..]);
        assert_eq!(&actions[63..125], &[1; 62][..]);
        assert!(actions[125..].iter().all(|&a| a == 1));
        assert_eq!(switches(&actions), 1);
        assert_eq!(p.cost_spent(), 1.0);
    }

    #[test]
    fn zero_index_plays_lowest_arm() {
        let cfg = PolicyConfig::unit(Variant::Ssse, 4, 3.0, 200).unwrap();
        let mut p = cfg.build();
        let actions = drive(&mut p, 200, |a, _| a as f64);
        assert!(actions.iter().all(|&a| a == 0));
        assert_eq!(p.committed_arm(), Some(0));
    }

    #[test]
    fn switch_count_bound_unit_costs() {
        for k in 2..6 {
            for s in 0..(4 * k) {
                for variant in [Variant::Ssse, Variant::Ssse2, Variant::Hsse, Variant::NaiveUcb] {
                    let cfg = PolicyConfig::unit(variant, k, s as f64, 3000).unwrap();
                    let mut p = cfg.build();
                    let actions = drive(&mut p, 3000, |a, t| ((a * 7 + t as usize * 13) % 10) as f64 / 10.0);
                    let used = switches(&actions);
                    assert!(used as f64 <= s as f64, "{variant} k={k} S={s} used {used}");
                    if variant != Variant::NaiveUcb {
                        let m = cfg.index().unwrap();
                        assert!(used as u64 <= m * (k as u64 - 1) + 1);
                    }
                    if let AnyPolicy::Elimination(e) = &p {
                        assert_eq!(e.guard_trips(), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn balance_within_one() {
        let cfg = PolicyConfig::unit(Variant::Ssse, 5, 40.0, 5000).unwrap();
        let mut p = cfg.build();
        let plan = cfg.plan().unwrap().clone();
        let mut t = 0u64;
        for l in 1..=plan.m_eff as usize {
            while t < plan.endpoints[l] {
                let a = p.next_arm();
                // equal means: nothing is eliminated
                p.observe(a, 0.5);
                t += 1;
            }
            let AnyPolicy::Elimination(e) = &p else { unreachable!() };
            let c = e.play_counts();
            let (lo, hi) = (c.iter().min().unwrap(), c.iter().max().unwrap());
            assert!(hi - lo <= 1, "interval {l}: {c:?}");
        }
    }

    #[test]
    fn naive_ucb_zero_budget_is_constant() {
        let cfg = PolicyConfig::unit(Variant::NaiveUcb, 3, 0.0, 100).unwrap();
        let mut p = cfg.build();
        let actions = drive(&mut p, 100, |a, _| a as f64);
        assert!(actions.iter().all(|&a| a == 0));
    }

    #[test]
    fn naive_ucb_unbounded_matches_ucb1() {
        let reward = |a: usize, t: u64| ((a * 31 + t as usize * 17) % 23) as f64 / 23.0;
        let cfg = PolicyConfig::unit(Variant::NaiveUcb, 3, 500.0, 500).unwrap();
        let mut p = cfg.build();
        let actions = drive(&mut p, 500, reward);

        let (mut n, mut s) = ([0f64; 3], [0f64; 3]);
        for (t, &got) in actions.iter().enumerate() {
            let t = t as u64 + 1;
            let a = if t <= 3 {
                t as usize - 1
            } else {
                let idx = |i: usize| s[i] / n[i] + (2.0 * (t as f64).ln() / n[i]).sqrt();
                (0..3).fold(0, |b, i| if idx(i) > idx(b) { i } else { b })
            };
            assert_eq!(got, a, "round {t}");
            n[a] += 1.0;
            s[a] += reward(a, t);
        }
    }

    #[test]
    fn hsse_follows_path_direction() {
        // line metric 0 - 1 - 2 with the path starting at 2
        let g = SwitchingGraph::from_f64(&[
            vec![0.0, 1.0, 2.0],
            vec![1.0, 0.0, 1.0],
            vec![2.0, 1.0, 0.0],
        ])
        .unwrap();
        let path = HamiltonianPath { order: vec![2, 1, 0], weight: Cost::new(2.0).unwrap(), exact: true };
        let cfg = PolicyConfig::with_path(Variant::Hsse, g, 8.0, 20_000, path).unwrap();
        // (8 - 2) / 2 = 3 exploration intervals
        assert_eq!(cfg.index(), Some(3));
        let plan = cfg.plan().unwrap().clone();
        let mut p = cfg.build();
        let actions = drive(&mut p, 20_000, |_, _| 0.0);
        let (a1, b1) = plan.range(1);
        let (a2, _) = plan.range(2);
        assert_eq!(actions[a1 as usize - 1], 2);
        assert_eq!(actions[b1 as usize - 1], 0);
        assert_eq!(actions[a2 as usize - 1], 0);
        let (_, b2) = plan.range(2);
        assert_eq!(actions[b2 as usize - 1], 2);
        assert!(p.cost_spent() <= 3.0 * 2.0 + 2.0);
    }

    #[test]
    fn hsse_rejects_non_metric_and_disconnected() {
        let inf = f64::INFINITY;
        let non_metric = SwitchingGraph::from_f64(&[
            vec![0.0, 1.0, 5.0],
            vec![1.0, 0.0, 1.0],
            vec![5.0, 1.0, 0.0],
        ])
        .unwrap();
        assert_eq!(
            PolicyConfig::on_graph(Variant::Hsse, non_metric.clone(), 10.0, 1000).unwrap_err(),
            Error::NotMetric
        );
        assert!(PolicyConfig::on_graph(Variant::HsseExpanded, non_metric, 10.0, 1000).is_ok());
        let split = SwitchingGraph::from_f64(&[
            vec![0.0, 1.0, inf, inf],
            vec![1.0, 0.0, inf, inf],
            vec![inf, inf, 0.0, 1.0],
            vec![inf, inf, 1.0, 0.0],
        ])
        .unwrap();
        assert_eq!(
            PolicyConfig::on_graph(Variant::Hsse, split.clone(), 10.0, 1000).unwrap_err(),
            Error::NoFinitePath
        );
        assert_eq!(
            PolicyConfig::on_graph(Variant::HsseExpanded, split, 10.0, 1000).unwrap_err(),
            Error::NoFinitePath
        );
    }

    #[test]
    fn unit_only_variants_reject_general_graphs() {
        let g = SwitchingGraph::from_f64(&[vec![0.0, 2.0], vec![2.0, 0.0]]).unwrap();
        for v in [Variant::Ssse, Variant::Ssse2, Variant::NaiveUcb] {
            assert!(matches!(PolicyConfig::on_graph(v, g.clone(), 5.0, 100), Err(Error::Config(_))));
        }
    }

    #[test]
    fn config_errors() {
        assert_eq!(
            PolicyConfig::unit(Variant::Ssse, 5, 3.0, 4).unwrap_err(),
            Error::HorizonTooSmall { horizon: 4, k: 5 }
        );
        assert!(matches!(PolicyConfig::unit(Variant::Ssse, 2, -1.0, 10), Err(Error::BadBudget(_))));
        assert_eq!(
            PolicyConfig::unit(Variant::HsseExpanded, 5, 9.0, 24).unwrap_err(),
            Error::ExpansionGuard { k: 5, horizon: 24 }
        );
    }

    #[test]
    fn expansion_block_precheck() {
        // chain 0-1-2-3 with every shortcut forbidden: the 0 -> 3 detour
        // has two intermediates
        let inf = f64::INFINITY;
        let g = SwitchingGraph::from_f64(&[
            vec![0.0, 1.0, inf, inf],
            vec![1.0, 0.0, 1.0, inf],
            vec![inf, 1.0, 0.0, 1.0],
            vec![inf, inf, 1.0, 0.0],
        ])
        .unwrap();
        assert!(matches!(
            PolicyConfig::on_graph(Variant::HsseExpanded, g.clone(), 30.0, 16),
            Err(Error::PathTooLong { needed: 3, .. })
        ));
        assert!(PolicyConfig::on_graph(Variant::HsseExpanded, g, 30.0, 5000).is_ok());
    }

    #[test]
    fn single_arm_is_trivial() {
        for v in Variant::ALL {
            let cfg = PolicyConfig::unit(v, 1, 0.0, 50).unwrap();
            let mut p = cfg.build();
            assert!(drive(&mut p, 50, |_, _| 1.0).iter().all(|&a| a == 0));
        }
    }
}
