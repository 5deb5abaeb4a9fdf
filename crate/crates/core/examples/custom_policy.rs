//! Plugging a hand-written policy into the run engine. This one explores
//! each arm for a fixed number of rounds and then commits, using `k`
//! switches at most.

use switchbandit::sim::{pseudo_regret, run_policy};
use switchbandit::{Environment, Family, Policy};

struct ExploreThenCommit {
    k: usize,
    per_arm: u64,
    t: u64,
    sums: Vec<f64>,
    choice: Option<usize>,
    last: Option<usize>,
    switches: u64,
}

impl ExploreThenCommit {
    fn new(k: usize, per_arm: u64) -> Self {
        ExploreThenCommit { k, per_arm, t: 0, sums: vec![0.0; k], choice: None, last: None, switches: 0 }
    }
}

impl Policy for ExploreThenCommit {
    fn arms(&self) -> usize {
        self.k
    }

    fn next_arm(&mut self) -> usize {
        let arm = self.choice.unwrap_or((self.t / self.per_arm) as usize);
        if self.last.is_some_and(|l| l != arm) {
            self.switches += 1;
        }
        self.last = Some(arm);
        arm
    }

    fn observe(&mut self, arm: usize, reward: f64) {
        self.t += 1;
        if self.choice.is_none() {
            self.sums[arm] += reward;
            if self.t == self.per_arm * self.k as u64 {
                let best = (0..self.k).max_by(|&a, &b| self.sums[a].total_cmp(&self.sums[b])).unwrap();
                self.choice = Some(best);
            }
        }
    }

    fn committed_arm(&self) -> Option<usize> {
        self.choice.filter(|&c| self.last == Some(c))
    }

    fn cost_spent(&self) -> f64 {
        self.switches as f64
    }
}

fn main() -> switchbandit::Result<()> {
    let env = Environment::new(vec![0.3, 0.6, 0.5], Family::Bernoulli)?;
    for per_arm in [10, 100, 1000] {
        let mut policy = ExploreThenCommit::new(env.arms(), per_arm);
        let trace = run_policy(&mut policy, &env, 30_000, 1);
        println!(
            "per arm {per_arm:>4}: committed to {:?}, switches {}, regret {:.1}",
            policy.committed_arm(),
            trace.switches(),
            pseudo_regret(&trace, &env)
        );
    }
    Ok(())
}
