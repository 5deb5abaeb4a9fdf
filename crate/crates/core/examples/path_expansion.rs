//! Path-expanded elimination on a non-metric graph with a forbidden edge.
//! Switches the plan needs between 0 and 2 are routed through arm 1, and
//! each detour is recorded as a transit.

use switchbandit::policy::AnyPolicy;
use switchbandit::sim::{audit_budget, run_policy};
use switchbandit::{Environment, Family, PolicyConfig, SwitchingGraph, Variant};

fn main() -> switchbandit::Result<()> {
    let inf = f64::INFINITY;
    let graph = SwitchingGraph::from_f64(&[
        vec![0.0, 1.0, inf],
        vec![1.0, 0.0, 1.0],
        vec![inf, 1.0, 0.0],
    ])?;
    let env = Environment::new(vec![0.6, 0.2, 0.5], Family::Bernoulli)?;
    let config = PolicyConfig::on_graph(Variant::HsseExpanded, graph, 12.0, 5_000)?;
    let closure = config.closure().unwrap();
    println!("closure path 0->2: {:?}", closure.path(0, 2).unwrap());
    println!("planning path {:?}", config.path().unwrap().order);

    let AnyPolicy::Elimination(mut policy) = config.build() else { unreachable!() };
    let trace = run_policy(&mut policy, &env, config.horizon(), 3);
    for t in policy.transits() {
        println!("round {:>5}: {} -> {} via {:?}", t.round, t.from, t.to, t.via);
    }
    let direct = trace.actions.windows(2).filter(|w| w[0].abs_diff(w[1]) == 2).count();
    println!("direct 0<->2 switches: {direct}");
    println!("audit passed: {}", audit_budget(&trace, config.graph(), config.budget()).passed());
    Ok(())
}
