//! Switching graphs: metric closure of a graph with a forbidden edge, and
//! exact versus approximate shortest Hamiltonian paths.

use switchbandit::graph::{
    metric_closure, shortest_hamiltonian_path_approx, shortest_hamiltonian_path_exact,
};
use switchbandit::SwitchingGraph;

fn main() -> switchbandit::Result<()> {
    let inf = f64::INFINITY;
    // 0-2 is forbidden and 1-3 is far cheaper through arm 2
    let g = SwitchingGraph::from_f64(&[
        vec![0.0, 1.0, inf, 4.0],
        vec![1.0, 0.0, 1.0, 9.0],
        vec![inf, 1.0, 0.0, 1.0],
        vec![4.0, 9.0, 1.0, 0.0],
    ])?;
    println!("metric: {}", g.is_metric());

    let closure = metric_closure(&g);
    println!("closure is metric: {}", closure.graph.is_metric());
    for (i, j) in [(0, 2), (1, 3), (0, 3)] {
        println!(
            "  {i}->{j}: direct {}, closure {} via {:?}",
            g.cost(i, j),
            closure.graph.cost(i, j),
            closure.path(i, j).unwrap()
        );
    }

    let exact = shortest_hamiltonian_path_exact(&closure.graph)?;
    let approx = shortest_hamiltonian_path_approx(&closure.graph)?;
    println!("exact  {:?} weight {}", exact.order, exact.weight);
    println!("approx {:?} weight {}", approx.order, approx.weight);

    // larger random metric instance: the approximation stays within 2x
    let pts: Vec<(f64, f64)> = (0..12).map(|i| ((i * 7 % 11) as f64, (i * 5 % 13) as f64)).collect();
    let rows: Vec<Vec<f64>> = pts
        .iter()
        .map(|a| pts.iter().map(|b| ((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt()).collect())
        .collect();
    let big = SwitchingGraph::from_f64(&rows)?;
    let e = shortest_hamiltonian_path_exact(&big)?.weight.value();
    let a = shortest_hamiltonian_path_approx(&big)?.weight.value();
    println!("12 points: exact {e:.3}, approx {a:.3}, ratio {:.3}", a / e);
    Ok(())
}
