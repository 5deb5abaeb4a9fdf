//! Budget indices on a metric graph and the bracket
//! `m_upper <= m_lower` they give around the attainable rate.

use switchbandit::bounds::regret_exponent;
use switchbandit::graph::{budget_indices, shortest_hamiltonian_path};
use switchbandit::SwitchingGraph;

fn main() -> switchbandit::Result<()> {
    // arms on a line at positions 0, 1, 3, 6
    let pos = [0.0f64, 1.0, 3.0, 6.0];
    let rows: Vec<Vec<f64>> = pos.iter().map(|a| pos.iter().map(|b| (a - b).abs()).collect()).collect();
    let g = SwitchingGraph::from_f64(&rows)?;
    let path = shortest_hamiltonian_path(&g)?;
    println!("H = {} along {:?}", path.weight, path.order);
    println!("max cost {}, max-min cost {}", g.max_cost(), g.max_min_cost());

    println!("{:>5} {:>7} {:>8} {:>8} {:>10} {:>10}", "S", "m_unit", "m_upper", "m_lower", "e_upper", "e_lower");
    for budget in [6.0, 12.0, 18.0, 24.0, 36.0, 60.0] {
        let idx = budget_indices(&g, budget, path.weight)?;
        println!(
            "{budget:>5} {:>7} {:>8} {:>8} {:>10.4} {:>10.4}",
            idx.m_unit,
            idx.m_upper,
            idx.m_lower,
            regret_exponent(idx.m_upper),
            regret_exponent(idx.m_lower)
        );
    }
    Ok(())
}
