//! Adversarial instance family used by the minimax lower-bound construction.
//!
//! The schedule of shrinking errors `Δ_1 > Δ_2 > … > Δ_{m+1}` is tied to the
//! interval grid of the unit-cost policy: `Δ_j` is roughly
//! `1 / (k (m+1) sqrt(t_{j-1}))`. The base environment `α` puts a small lead
//! `Δ_{m+1}/2` on arm 0; perturbed environments `β` lift one arm by `Δ_j`
//! (or drop arm 0 by `Δ_{m+1}`), so a policy that skips an arm for too long
//! in the matching stage pays linear regret on one of them.

use serde::{Deserialize, Serialize};

use crate::env::{Environment, Family};
use crate::error::{Error, Result};
use crate::graph::unit_index;

/// Shrinking error schedule for `(k, S, T)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HardInstanceSchedule {
    pub k: usize,
    pub budget: f64,
    pub horizon: u64,
    /// `m(S)` of the unit-cost problem.
    pub m: u64,
    /// `Δ_1 … Δ_{m+1}`.
    pub deltas: Vec<f64>,
}

/// Which perturbation of the base environment to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum HardCase {
    /// Raise `arm` by `Δ_1`.
    First { arm: usize },
    /// Raise `arm` by `Δ_stage`, `2 <= stage <= m`.
    Middle { stage: usize, arm: usize },
    /// Raise `arm` by `Δ_{m+1}`.
    LastRaise { arm: usize },
    /// Lower arm 0 by `Δ_{m+1}`.
    LastLower,
}

/// Base environment plus a generator of its perturbations.
#[derive(Debug, Clone)]
pub struct HardInstances {
    pub schedule: HardInstanceSchedule,
    pub base: Environment,
}

impl HardInstanceSchedule {
    pub fn new(k: usize, budget: f64, horizon: u64) -> Result<Self> {
        if k < 2 || horizon < 2 * k as u64 {
            return Err(Error::HardInstancePrecondition { k, horizon });
        }
        if budget.is_nan() || budget < 0.0 {
            return Err(Error::BadBudget(budget));
        }
        let m = unit_index(k, budget).unwrap_or(0);
        let deltas = shrinking_errors(k, m, horizon);
        Ok(HardInstanceSchedule { k, budget, horizon, m, deltas })
    }

    /// `Δ_j`, 1-based.
    pub fn delta(&self, j: usize) -> f64 {
        self.deltas[j - 1]
    }

    pub fn last(&self) -> f64 {
        *self.deltas.last().expect("schedule is never empty")
    }
}

fn shrinking_errors(k: usize, m: u64, horizon: u64) -> Vec<f64> {
    let kf = k as f64;
    let ratio = kf / horizon as f64;
    let denom_exp = 2.0 - 0.5f64.powi(m as i32);
    let scale = kf.powf(-0.5) / (kf * (m as f64 + 1.0));
    let mut deltas = Vec::with_capacity(m as usize + 1);
    deltas.push(1.0);
    if m == 0 {
        return deltas;
    }
    for j in 2..=m as i32 {
        let e = (1.0 - 0.5f64.powi(j - 1)) / denom_exp;
        deltas.push(scale * ratio.powf(e));
    }
    let e = (1.0 - 0.5f64.powi(m as i32)) / denom_exp;
    deltas.push(scale * ratio.powf(e) / 2.0);
    deltas
}

/// Schedule, base environment `α = (Δ_{m+1}/2, 0, …, 0)` and the
/// perturbation generator for `(k, S, T)`.
pub fn make_hard_instances(k: usize, budget: f64, horizon: u64) -> Result<HardInstances> {
    let schedule = HardInstanceSchedule::new(k, budget, horizon)?;
    let mut means = vec![0.0; k];
    means[0] = schedule.last() / 2.0;
    let base = Environment::with_arms(k, means, Family::Gaussian)?;
    Ok(HardInstances { schedule, base })
}

impl HardInstances {
    /// Environment `β` for `case`. Raising arm 0 by `Δ_1` would exceed the
    /// unit mean range and is rejected with [`Error::GapTooLarge`].
    pub fn perturbed(&self, case: HardCase) -> Result<Environment> {
        let k = self.schedule.k;
        let m = self.schedule.m as usize;
        let mut means = self.base.means().to_vec();
        let check_arm = |arm: usize| {
            if arm >= k {
                Err(Error::ArmOutOfRange { arm, k })
            } else {
                Ok(arm)
            }
        };
        match case {
            HardCase::First { arm } => means[check_arm(arm)?] += self.schedule.delta(1),
            HardCase::Middle { stage, arm } => {
                if stage < 2 || stage > m {
                    return Err(Error::BadCase(format!("stage {stage} not in 2..={m}")));
                }
                means[check_arm(arm)?] += self.schedule.delta(stage);
            }
            HardCase::LastRaise { arm } => means[check_arm(arm)?] += self.schedule.last(),
            HardCase::LastLower => means[0] -= self.schedule.last(),
        }
        Environment::with_arms(k, means, Family::Gaussian)
    }

    /// Every case the construction distinguishes, in a fixed order.
    pub fn cases(&self) -> Vec<HardCase> {
        let k = self.schedule.k;
        let m = self.schedule.m as usize;
        let mut out: Vec<HardCase> = (0..k).map(|arm| HardCase::First { arm }).collect();
        for stage in 2..=m {
            out.extend((0..k).map(|arm| HardCase::Middle { stage, arm }));
        }
        out.extend((0..k).map(|arm| HardCase::LastRaise { arm }));
        out.push(HardCase::LastLower);
        out
    }

    /// Whether `env` lies in the class `Λ`: arm 0 leads every other arm by
    /// an amount in `[Δ_{m+1}/4, Δ_{m+1}/2]`.
    pub fn in_class(&self, env: &Environment) -> bool {
        let d = self.schedule.last();
        let mu = env.means();
        mu.len() == self.schedule.k
            && mu[1..].iter().all(|&x| {
                let lead = mu[0] - x;
                lead >= d / 4.0 && lead <= d / 2.0
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn first_error_is_one() {
        for (k, s, t) in [(2, 0.0, 4), (3, 5.0, 1000), (5, 40.0, 100_000)] {
            let sched = HardInstanceSchedule::new(k, s, t).unwrap();
            assert_eq!(sched.delta(1), 1.0);
            assert_eq!(sched.deltas.len() as u64, sched.m + 1);
        }
    }

    #[test]
    fn two_arm_single_stage_value() {
        // 2^{-1/2} (2/1024)^{1/3} / 8 = 2^{-1/2} 2^{-3} 2^{-3} = 2^{-6.5}
        let sched = HardInstanceSchedule::new(2, 2.0, 1024).unwrap();
        assert_eq!(sched.m, 1);
        let expected = 2f64.powf(-6.5);
        assert!((sched.delta(2) - expected).abs() < 1e-15);
        assert!((sched.delta(2) - 0.01105).abs() < 5e-6);
    }

    #[test]
    fn zero_index_schedule_is_trivial() {
        let sched = HardInstanceSchedule::new(3, 1.0, 100).unwrap();
        assert_eq!(sched.m, 0);
        assert_eq!(sched.deltas, vec![1.0]);
    }

    #[test]
    fn preconditions() {
        assert!(HardInstanceSchedule::new(1, 3.0, 100).is_err());
        assert!(HardInstanceSchedule::new(3, 3.0, 5).is_err());
        assert!(HardInstanceSchedule::new(3, -1.0, 50).is_err());
    }

    #[test]
    fn base_in_class_and_cases_build() {
        let hard = make_hard_instances(3, 7.0, 10_000).unwrap();
        assert_eq!(hard.schedule.m, 3);
        assert!(hard.in_class(&hard.base));
        let cases = hard.cases();
        assert_eq!(cases.len(), 3 + 2 * 3 + 3 + 1);
        for case in cases {
            let res = hard.perturbed(case);
            match case {
                HardCase::First { arm: 0 } => {
                    assert!(matches!(res, Err(Error::GapTooLarge { .. })))
                }
                _ => {
                    let env = res.unwrap();
                    if let HardCase::LastLower = case {
                        assert_ne!(env.best_arm(), 0);
                    }
                }
            }
        }
        let beta = hard.perturbed(HardCase::Middle { stage: 2, arm: 2 }).unwrap();
        assert_eq!(beta.best_arm(), 2);
        assert!(hard.perturbed(HardCase::Middle { stage: 4, arm: 1 }).is_err());
    }

    proptest! {
        #[test]
        fn errors_strictly_decrease(k in 2usize..12, frac in 0.0f64..1.0, extra in 0u64..1_000_000) {
            // up to m = 30 stages; far beyond log2 log2 T for any realistic horizon
            let s = frac * 30.0 * (k - 1) as f64 + 1.0;
            let t = 2 * k as u64 + extra;
            let sched = HardInstanceSchedule::new(k, s, t).unwrap();
            for w in sched.deltas.windows(2) {
                prop_assert!(w[1] < w[0]);
            }
            for &d in &sched.deltas[1..] {
                prop_assert!(d > 0.0 && d < 1.0);
            }
        }
    }
}
