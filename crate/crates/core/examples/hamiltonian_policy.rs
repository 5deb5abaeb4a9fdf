//! Hamiltonian-order elimination on a metric graph: arms are swept along
//! the shortest Hamiltonian path, back and forth, so each interval costs
//! at most `H`.

use switchbandit::sim::{audit_budget, pseudo_regret};
use switchbandit::{run_once, Environment, Family, PolicyConfig, SwitchingGraph, Variant};

fn main() -> switchbandit::Result<()> {
    let pos = [0.0f64, 4.0, 1.0, 2.5, 6.0];
    let rows: Vec<Vec<f64>> = pos.iter().map(|a| pos.iter().map(|b| (a - b).abs()).collect()).collect();
    let graph = SwitchingGraph::from_f64(&rows)?;
    let env = Environment::new(vec![0.3, 0.5, 0.4, 0.55, 0.2], Family::Gaussian)?;

    let config = PolicyConfig::on_graph(Variant::Hsse, graph, 30.0, 50_000)?;
    let path = config.path().unwrap();
    println!("path {:?}, H = {}", path.order, path.weight);
    println!("index {:?}, endpoints {:?}", config.index(), config.plan().unwrap().endpoints);

    let trace = run_once(&config, &env, 11)?;
    let audit = audit_budget(&trace, config.graph(), config.budget());
    println!("cost {} of {}, switches {}", audit.total, config.budget(), trace.switches());
    println!("regret {:.1}, final arm {}", pseudo_regret(&trace, &env), trace.actions.last().unwrap());

    // the non-metric case is refused here; see the path_expansion example
    let bent = SwitchingGraph::from_f64(&[vec![0.0, 1.0, 5.0], vec![1.0, 0.0, 1.0], vec![5.0, 1.0, 0.0]])?;
    match PolicyConfig::on_graph(Variant::Hsse, bent, 30.0, 50_000) {
        Ok(_) => println!("unexpected: non-metric graph accepted"),
        Err(e) => println!("non-metric graph rejected: {e}"),
    }
    Ok(())
}
