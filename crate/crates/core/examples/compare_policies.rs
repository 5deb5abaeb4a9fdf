//! Every variant on the same unit-cost problem, averaged over seeds.

use switchbandit::rng::derive_seed;
use switchbandit::sim::pseudo_regret;
use switchbandit::{run_once, Environment, Family, PolicyConfig, Variant};

fn main() -> switchbandit::Result<()> {
    let env = Environment::new(vec![0.5, 0.4, 0.55], Family::Gaussian)?;
    let (budget, horizon, reps) = (8.0, 20_000, 50);
    println!("means {:?}, S = {budget}, T = {horizon}", env.means());
    for variant in Variant::ALL {
        let config = PolicyConfig::unit(variant, env.arms(), budget, horizon)?;
        let (mut regret, mut switches) = (0.0, 0);
        for r in 0..reps {
            let trace = run_once(&config, &env, derive_seed(99, r))?;
            regret += pseudo_regret(&trace, &env);
            switches += trace.switches();
        }
        println!(
            "{:<14} mean regret {:>8.1}  mean switches {:>5.2}",
            variant.name(),
            regret / reps as f64,
            switches as f64 / reps as f64
        );
    }
    Ok(())
}
