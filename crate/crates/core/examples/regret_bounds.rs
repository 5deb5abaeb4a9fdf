//! Closed-form bounds (absolute constants set to 1), budget phases and the
//! critical budgets where the exponent drops.

use switchbandit::bounds::{critical_points, evaluate_bounds, phase_table};
use switchbandit::SwitchingGraph;

fn main() -> switchbandit::Result<()> {
    let (k, horizon) = (3, 1u64 << 20);
    for p in phase_table(k, 6)?.phases {
        println!("phase {}: S in [{}, {}) exponent {:.4}", p.j, p.start, p.end, p.exponent);
    }
    println!("critical budgets {:?}", critical_points(k, 6));

    println!("\n{:>4} {:>4} {:>10} {:>12} {:>12} {:>12}", "S", "m", "exponent", "upper", "lower", "regime");
    for budget in [1.0, 3.0, 5.0, 7.0, 9.0, 11.0, 13.0] {
        let r = evaluate_bounds(k, budget, horizon, None, Some(0.1))?;
        println!(
            "{budget:>4} {:>4} {:>10.4} {:>12.3e} {:>12.3e} {:>12?}",
            r.m_upper, r.exponent, r.upper_value, r.lower_value, r.regime
        );
    }

    let pos = [0.0f64, 1.0, 3.0];
    let rows: Vec<Vec<f64>> = pos.iter().map(|a| pos.iter().map(|b| (a - b).abs()).collect()).collect();
    let g = SwitchingGraph::from_f64(&rows)?;
    let r = evaluate_bounds(k, 12.0, horizon, Some(&g), None)?;
    println!(
        "\nline graph, S = 12: H = {:?}, m_upper {}, m_lower {}, exponents {:.4} / {:.4}",
        r.path_weight, r.m_upper, r.m_lower, r.exponent, r.lower_exponent
    );
    Ok(())
}
