//! Run limited-switch successive elimination once on unit switching costs
//! and report regret, switches and the budget audit.
//!
//! cargo run --example run_policy

use switchbandit::sim::{audit_budget, pseudo_regret};
use switchbandit::{run_once, Environment, Family, PolicyConfig, Variant};

fn main() -> switchbandit::Result<()> {
    let env = Environment::new(vec![0.5, 0.45, 0.6, 0.3], Family::Bernoulli)?;
    let config = PolicyConfig::unit(Variant::Ssse, env.arms(), 10.0, 20_000)?;

    let trace = run_once(&config, &env, 7)?;
    let audit = audit_budget(&trace, config.graph(), config.budget());

    println!("variant       {}", config.variant());
    println!("index m(S)    {:?}", config.index());
    println!("endpoints     {:?}", config.plan().map(|p| &p.endpoints));
    println!("rounds        {}", trace.len());
    println!("switches      {} (cost {} of {})", trace.switches(), audit.total, config.budget());
    println!("final arm     {} (best is {})", trace.actions.last().unwrap(), env.best_arm());
    println!("pseudo-regret {:.1}", pseudo_regret(&trace, &env));
    println!("audit passed  {}", audit.passed());
    Ok(())
}
