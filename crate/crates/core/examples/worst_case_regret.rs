//! Empirical worst-case regret over the default gap grid, for two budgets.
//! Replications run in parallel on the rayon pool.

use std::time::Instant;

use switchbandit::sim::{default_gap_grid, worst_case_regret};
use switchbandit::{Family, PolicyConfig, Variant};

fn main() -> switchbandit::Result<()> {
    let grid = default_gap_grid();
    for budget in [1.0, 2.0, 3.0] {
        let start = Instant::now();
        let config = PolicyConfig::unit(Variant::Ssse, 2, budget, 1 << 14)?;
        let report = worst_case_regret(&config, &grid, 100, 2024, Family::Gaussian)?;
        println!(
            "S = {budget}: max regret {:.1} ± {:.1} at gap {:.2}  ({:.2}s)",
            report.max,
            report.max_std_err,
            report.worst_gap,
            start.elapsed().as_secs_f64()
        );
        for p in report.points.iter().step_by(6) {
            println!("    gap {:.2}: mean {:>7.1}  [{:.1}, {:.1}]", p.gap, p.mean, p.min, p.max);
        }
    }
    Ok(())
}
