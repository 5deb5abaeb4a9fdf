//! Cover times and re-switch counts. With equal means nothing is ever
//! eliminated, so every interval sweeps all arms and the trace completes
//! `m + 1` covers.

use switchbandit::sim::cover_stats;
use switchbandit::{run_once, Environment, Family, PolicyConfig, Variant};

fn main() -> switchbandit::Result<()> {
    let k = 4;
    let config = PolicyConfig::unit(Variant::Ssse, k, 10.0, 30_000)?;
    let m = config.plan().unwrap().m_eff as usize;
    println!("m_eff = {m}, endpoints {:?}", config.plan().unwrap().endpoints);

    for (name, means) in [("equal means", vec![0.5; k]), ("clear winner", vec![0.1, 0.2, 0.9, 0.3])] {
        let env = Environment::new(means, Family::Gaussian)?;
        let trace = run_once(&config, &env, 5)?;
        let stats = cover_stats(&trace.actions, k, m);
        println!("{name}:");
        println!("  covers {} taus {:?}", stats.covers, stats.taus);
        println!("  re-switches per arm {:?}", stats.reswitches);
    }
    Ok(())
}
