use super::Policy;

/// UCB1 that stops switching once the next switch would exceed the budget.
///
/// Every arm is pulled once in index order, then the arm maximizing
/// `mean + sqrt(2 ln t / n)` is chosen (ties to the lowest index). When the
/// index asks for a switch the budget cannot pay for, the policy stays on
/// its current arm for the rest of the horizon.
#[derive(Debug, Clone)]
pub struct NaiveUcb {
    budget: f64,
    counts: Vec<u64>,
    sums: Vec<f64>,
    round: u64,
    current: Option<usize>,
    switches: u64,
    frozen: bool,
}

impl NaiveUcb {
    pub fn new(k: usize, budget: f64) -> Self {
        NaiveUcb {
            budget,
            counts: vec![0; k],
            sums: vec![0.0; k],
            round: 0,
            current: None,
            switches: 0,
            frozen: false,
        }
    }

    pub fn switches(&self) -> u64 {
        self.switches
    }

    pub fn is_frozen(&self) -> bool {
        self.frozen
    }

    fn index_choice(&self) -> usize {
        if let Some(unplayed) = self.counts.iter().position(|&n| n == 0) {
            return unplayed;
        }
        let log_t = (self.round as f64).ln();
        let mut best = 0;
        let mut best_index = f64::NEG_INFINITY;
        for (i, (&n, &s)) in self.counts.iter().zip(&self.sums).enumerate() {
            let n = n as f64;
            let index = s / n + (2.0 * log_t / n).sqrt();
            if index > best_index {
                best = i;
                best_index = index;
            }
        }
        best
    }
}

impl Policy for NaiveUcb {
    fn arms(&self) -> usize {
        self.counts.len()
    }

    fn next_arm(&mut self) -> usize {
        self.round += 1;
        if self.frozen {
            return self.current.expect("frozen after at least one round");
        }
        let choice = self.index_choice();
        if let Some(cur) = self.current {
            if choice != cur {
                if (self.switches + 1) as f64 > self.budget {
                    self.frozen = true;
                    return cur;
                }
                self.switches += 1;
            }
        }
        self.current = Some(choice);
        choice
    }

    fn observe(&mut self, arm: usize, reward: f64) {
        self.counts[arm] += 1;
        self.sums[arm] += reward;
    }

    fn committed_arm(&self) -> Option<usize> {
        if self.frozen {
            self.current
        } else {
            None
        }
    }

    fn cost_spent(&self) -> f64 {
        self.switches as f64
    }
}
