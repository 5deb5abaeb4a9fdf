use std::collections::VecDeque;

use serde::Serialize;

use super::plan::IntervalPlan;
use super::Policy;
use crate::graph::{MetricClosure, SwitchingGraph};

/// Order in which active arms are visited inside an exploration interval.
#[derive(Debug, Clone)]
pub(crate) enum Traversal {
    /// Ascending index order, rotated to continue from the last arm played.
    Cyclic,
    /// Hamiltonian path order, forward on odd intervals and reversed on
    /// even ones.
    Path(Vec<usize>),
}

/// One closure-level switch realized as a walk through intermediate arms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transit {
    /// 1-based round of the first intermediate play.
    pub round: u64,
    pub from: usize,
    pub to: usize,
    pub via: Vec<usize>,
}

/// Successive elimination on a fixed interval grid.
///
/// Arms are played in consecutive blocks, eliminated at interval
/// endpoints when their upper confidence bound drops below another arm's
/// lower bound, and the empirical best is played for the last interval.
#[derive(Debug, Clone)]
pub struct EliminationPolicy {
    k: usize,
    plan: IntervalPlan,
    log_horizon: f64,
    traversal: Traversal,
    graph: SwitchingGraph,
    closure: Option<MetricClosure>,
    budget: f64,

    active: Vec<bool>,
    counts: Vec<u64>,
    sums: Vec<f64>,
    interval: usize,
    queue: VecDeque<(usize, u64)>,
    scheduled: u64,
    tail: Option<usize>,
    current: Option<usize>,
    spent: f64,
    final_arm: Option<usize>,
    frozen: bool,
    guard_trips: u64,
    transits: Vec<Transit>,
}

impl EliminationPolicy {
    pub(crate) fn new(
        plan: IntervalPlan,
        traversal: Traversal,
        graph: SwitchingGraph,
        closure: Option<MetricClosure>,
        budget: f64,
    ) -> Self {
        let k = graph.arms();
        EliminationPolicy {
            k,
            log_horizon: (plan.horizon() as f64).ln(),
            plan,
            traversal,
            graph,
            closure,
            budget,
            active: vec![true; k],
            counts: vec![0; k],
            sums: vec![0.0; k],
            interval: 0,
            queue: VecDeque::new(),
            scheduled: 0,
            tail: None,
            current: None,
            spent: 0.0,
            final_arm: None,
            frozen: false,
            guard_trips: 0,
            transits: Vec::new(),
        }
    }

    pub fn plan(&self) -> &IntervalPlan {
        &self.plan
    }

    /// Arms still in play.
    pub fn active_arms(&self) -> Vec<usize> {
        (0..self.k).filter(|&i| self.active[i]).collect()
    }

    /// 1-based index of the interval currently being played (0 before the
    /// first round).
    pub fn interval(&self) -> usize {
        self.interval
    }

    /// Arm chosen for the exploitation interval, once it has started.
    pub fn final_arm(&self) -> Option<usize> {
        self.final_arm
    }

    pub fn play_counts(&self) -> &[u64] {
        &self.counts
    }

    /// Number of times the budget guard refused a scheduled switch. Stays
    /// zero unless rounding in the cost arithmetic disagrees with the
    /// budget indices.
    pub fn guard_trips(&self) -> u64 {
        self.guard_trips
    }

    /// Closure-level switches that were expanded into multi-hop walks.
    pub fn transits(&self) -> &[Transit] {
        &self.transits
    }

    fn mean(&self, i: usize) -> f64 {
        self.sums[i] / self.counts[i] as f64
    }

    fn bounds(&self, i: usize) -> (f64, f64) {
        if self.counts[i] == 0 {
            return (f64::NEG_INFINITY, f64::INFINITY);
        }
        let radius = (2.0 * self.log_horizon / self.counts[i] as f64).sqrt();
        let mean = self.mean(i);
        (mean - radius, mean + radius)
    }

    fn eliminate(&mut self) {
        let best_lcb = (0..self.k)
            .filter(|&i| self.active[i])
            .map(|i| self.bounds(i).0)
            .fold(f64::NEG_INFINITY, f64::max);
        for i in 0..self.k {
            if self.active[i] && self.bounds(i).1 < best_lcb {
                self.active[i] = false;
            }
        }
        debug_assert!(self.active.iter().any(|&a| a), "every arm eliminated");
    }

    fn empirical_best(&self) -> usize {
        let mut best = None;
        let mut best_mean = f64::NEG_INFINITY;
        for i in (0..self.k).filter(|&i| self.active[i]) {
            let m = if self.counts[i] == 0 { f64::NEG_INFINITY } else { self.mean(i) };
            if best.is_none() || m > best_mean {
                best = Some(i);
                best_mean = m;
            }
        }
        best.expect("active set is never empty")
    }

    fn initial_arm(&self) -> usize {
        match &self.traversal {
            Traversal::Cyclic => 0,
            Traversal::Path(order) => order[0],
        }
    }

    fn traversal_order(&self) -> Vec<usize> {
        match &self.traversal {
            Traversal::Cyclic => {
                let active = self.active_arms();
                let start = self
                    .current
                    .and_then(|c| active.iter().position(|&a| a == c))
                    .unwrap_or(0);
                let mut order = active[start..].to_vec();
                order.extend_from_slice(&active[..start]);
                order
            }
            Traversal::Path(path) => {
                let mut order: Vec<usize> =
                    path.iter().copied().filter(|&a| self.active[a]).collect();
                if self.interval.is_multiple_of(2) {
                    order.reverse();
                }
                order
            }
        }
    }

    fn push_block(&mut self, arm: usize, len: u64) {
        if len == 0 {
            return;
        }
        let mut len = len;
        if let (Some(from), Some(closure)) = (self.tail, &self.closure) {
            if from != arm {
                let path = closure.path(from, arm).expect("closure path exists");
                let via = path[1..path.len() - 1].to_vec();
                if !via.is_empty() {
                    // guaranteed by the block-length precheck at build time
                    debug_assert!((via.len() as u64) < len);
                    self.transits.push(Transit { round: self.scheduled + 1, from, to: arm, via: via.clone() });
                    for &v in &via {
                        self.queue.push_back((v, 1));
                    }
                    self.scheduled += via.len() as u64;
                    len -= (via.len() as u64).min(len - 1);
                }
            }
        }
        self.queue.push_back((arm, len));
        self.scheduled += len;
        self.tail = Some(arm);
    }

    fn advance(&mut self) {
        let m = self.plan.m_eff as usize;
        if self.interval >= self.plan.intervals() {
            // past the horizon: keep repeating the last arm
            let arm = self.current.unwrap_or_else(|| self.initial_arm());
            self.queue.push_back((arm, 1));
            return;
        }
        if self.interval >= 1 && self.interval <= m {
            self.eliminate();
        }
        self.interval += 1;
        let len = self.plan.len_of(self.interval);
        if self.interval <= m {
            let order = self.traversal_order();
            let a = order.len() as u64;
            let (base, extra) = (len / a, len % a);
            let mut by_count: Vec<usize> = (0..order.len()).collect();
            by_count.sort_by_key(|&p| (self.counts[order[p]], p));
            let mut sizes = vec![base; order.len()];
            for &p in by_count.iter().take(extra as usize) {
                sizes[p] += 1;
            }
            for (p, &arm) in order.iter().enumerate() {
                self.push_block(arm, sizes[p]);
            }
        } else {
            let best = if self.interval == 1 { self.initial_arm() } else { self.empirical_best() };
            self.final_arm = Some(best);
            self.push_block(best, len);
        }
    }
}

impl Policy for EliminationPolicy {
    fn arms(&self) -> usize {
        self.k
    }

    fn next_arm(&mut self) -> usize {
        if self.frozen {
            return self.current.expect("frozen after at least one round");
        }
        while self.queue.is_empty() {
            self.advance();
        }
        let front = self.queue.front_mut().expect("queue refilled");
        let arm = front.0;
        front.1 -= 1;
        if front.1 == 0 {
            self.queue.pop_front();
        }
        if let Some(cur) = self.current {
            if cur != arm {
                let cost = self.graph.cost(cur, arm).value();
                if self.spent + cost > self.budget {
                    self.guard_trips += 1;
                    self.frozen = true;
                    self.queue.clear();
                    return cur;
                }
                self.spent += cost;
            }
        }
        self.current = Some(arm);
        arm
    }

    fn observe(&mut self, arm: usize, reward: f64) {
        self.counts[arm] += 1;
        self.sums[arm] += reward;
    }

    fn committed_arm(&self) -> Option<usize> {
        if self.frozen {
            return self.current;
        }
        let best = self.final_arm?;
        if self.current != Some(best) {
            return None;
        }
        match self.queue.len() {
            0 => Some(best),
            1 if self.queue[0].0 == best => Some(best),
            _ => None,
        }
    }

    fn cost_spent(&self) -> f64 {
        self.spent
    }
}
