//! Bandit environments: latent reward distributions and reward sampling.

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::RunRng;

/// Reward distribution family shared by all arms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `N(mu, 1)` rewards.
    #[default]
    Gaussian,
    /// `{0, 1}` rewards with success probability `mu`.
    Bernoulli,
}

/// A validated `k`-armed environment.
///
/// Both families are treated as sub-Gaussian with variance proxy 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawEnvironment", into = "RawEnvironment")]
pub struct Environment {
    means: Vec<f64>,
    family: Family,
    best: usize,
}

#[derive(Serialize, Deserialize)]
struct RawEnvironment {
    means: Vec<f64>,
    #[serde(default)]
    family: Family,
}

impl TryFrom<RawEnvironment> for Environment {
    type Error = Error;
    fn try_from(raw: RawEnvironment) -> Result<Self> {
        Environment::new(raw.means, raw.family)
    }
}

impl From<Environment> for RawEnvironment {
    fn from(env: Environment) -> Self {
        RawEnvironment { means: env.means, family: env.family }
    }
}

impl Environment {
    /// Builds an environment, rejecting mean vectors whose range exceeds 1
    /// and Bernoulli means outside `[0, 1]`.
    pub fn new(means: Vec<f64>, family: Family) -> Result<Self> {
        if means.is_empty() {
            return Err(Error::ArmCount { expected: 1, got: 0 });
        }
        for (arm, &mu) in means.iter().enumerate() {
            if !mu.is_finite() {
                return Err(Error::NonFiniteMean { arm });
            }
            if family == Family::Bernoulli && !(0.0..=1.0).contains(&mu) {
                return Err(Error::BadSupport { arm, mean: mu });
            }
        }
        let hi = means.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let lo = means.iter().copied().fold(f64::INFINITY, f64::min);
        if hi - lo > 1.0 {
            return Err(Error::GapTooLarge { range: hi - lo });
        }
        // lowest index among maximizers
        let best = means.iter().position(|&mu| mu == hi).unwrap_or(0);
        Ok(Environment { means, family, best })
    }

    /// Checked constructor matching the arm count against `k`.
    pub fn with_arms(k: usize, means: Vec<f64>, family: Family) -> Result<Self> {
        if k == 0 || means.len() != k {
            return Err(Error::ArmCount { expected: k, got: means.len() });
        }
        Self::new(means, family)
    }

    pub fn arms(&self) -> usize {
        self.means.len()
    }

    pub fn means(&self) -> &[f64] {
        &self.means
    }

    pub fn mean(&self, arm: usize) -> f64 {
        self.means[arm]
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Optimal arm; ties go to the lowest index.
    pub fn best_arm(&self) -> usize {
        self.best
    }

    pub fn best_mean(&self) -> f64 {
        self.means[self.best]
    }

    /// `mu* - mu_arm`.
    pub fn gap(&self, arm: usize) -> f64 {
        self.best_mean() - self.means[arm]
    }

    /// Draws one reward of `arm`.
    pub fn sample(&self, arm: usize, rng: &mut RunRng) -> f64 {
        let mu = self.means[arm];
        match self.family {
            Family::Gaussian => {
                let z: f64 = rng.sample(StandardNormal);
                mu + z
            }
            Family::Bernoulli => {
                if rng.random::<f64>() < mu {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }
}

/// Samples a reward of `arm`, checking the index.
pub fn sample_reward(env: &Environment, arm: usize, rng: &mut RunRng) -> Result<f64> {
    if arm >= env.arms() {
        return Err(Error::ArmOutOfRange { arm, k: env.arms() });
    }
    Ok(env.sample(arm, rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{derive_seed, run_rng};

    #[test]
    fn best_arm_ties_to_lowest_index() {
        let env = Environment::with_arms(2, vec![0.5, 0.5], Family::Gaussian).unwrap();
        assert_eq!(env.best_arm(), 0);
        let env = Environment::with_arms(3, vec![0.9, 0.1, 0.5], Family::Gaussian).unwrap();
        assert_eq!(env.best_arm(), 0);
        assert_eq!(env.best_mean(), 0.9);
    }

    #[test]
    fn rejects_wide_range_and_bad_support() {
        let err = Environment::with_arms(2, vec![1.6, 0.1], Family::Gaussian).unwrap_err();
        assert!(matches!(err, Error::GapTooLarge { .. }));
        let err = Environment::with_arms(2, vec![1.2, 0.9], Family::Bernoulli).unwrap_err();
        assert!(matches!(err, Error::BadSupport { arm: 0, .. }));
        assert!(Environment::with_arms(2, vec![1.0, 0.0], Family::Bernoulli).is_ok());
        assert!(Environment::with_arms(3, vec![0.0, 0.5], Family::Gaussian).is_err());
        assert!(Environment::new(vec![], Family::Gaussian).is_err());
        assert!(Environment::new(vec![f64::NAN], Family::Gaussian).is_err());
    }

    #[test]
    fn bernoulli_support() {
        let env = Environment::new(vec![0.3], Family::Bernoulli).unwrap();
        let mut rng = run_rng(5);
        for _ in 0..1000 {
            let r = env.sample(0, &mut rng);
            assert!(r == 0.0 || r == 1.0);
        }
    }

    #[test]
    fn gaussian_sample_mean_million_draws() {
        let env = Environment::new(vec![0.7], Family::Gaussian).unwrap();
        let mut rng = run_rng(2024);
        let n = 1_000_000;
        let mean = (0..n).map(|_| env.sample(0, &mut rng)).sum::<f64>() / n as f64;
        assert!((mean - 0.7).abs() <= 0.005, "mean {mean}");
    }

    #[test]
    fn sample_means_concentrate_across_seeds() {
        let n = 100_000usize;
        let bound = 5.0 / (n as f64).sqrt();
        for family in [Family::Gaussian, Family::Bernoulli] {
            let env = Environment::new(vec![0.4], family).unwrap();
            let passes = (0..100)
                .filter(|&s| {
                    let mut rng = run_rng(derive_seed(9, s));
                    let mean = (0..n).map(|_| env.sample(0, &mut rng)).sum::<f64>() / n as f64;
                    (mean - 0.4).abs() <= bound
                })
                .count();
            assert!(passes >= 99, "{family:?}: {passes}/100");
        }
    }

    #[test]
    fn identical_seeds_give_identical_draws() {
        let env = Environment::new(vec![0.1, 0.2], Family::Gaussian).unwrap();
        let draw = |seed| {
            let mut rng = run_rng(seed);
            (0..64).map(|t| env.sample(t % 2, &mut rng).to_bits()).collect::<Vec<_>>()
        };
        assert_eq!(draw(7), draw(7));
        assert_ne!(draw(7), draw(8));
    }

    #[test]
    fn sample_reward_checks_index() {
        let env = Environment::new(vec![0.1, 0.2], Family::Gaussian).unwrap();
        let mut rng = run_rng(1);
        assert!(sample_reward(&env, 2, &mut rng).is_err());
        assert!(sample_reward(&env, 1, &mut rng).is_ok());
    }

    #[test]
    fn json_round_trip_validates() {
        let env: Environment =
            serde_json::from_str(r#"{"means":[0.2,0.8],"family":"bernoulli"}"#).unwrap();
        assert_eq!(env.best_arm(), 1);
        let back: Environment = serde_json::from_str(&serde_json::to_string(&env).unwrap()).unwrap();
        assert_eq!(back, env);
        assert!(serde_json::from_str::<Environment>(r#"{"means":[2.0,0.1]}"#).is_err());
    }
}
