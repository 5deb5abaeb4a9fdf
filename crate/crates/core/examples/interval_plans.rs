//! How the switching budget turns into an interval plan, for both grids.

use switchbandit::graph::unit_index;
use switchbandit::policy::{plan_intervals_ssse, plan_intervals_ssse2};

fn main() -> switchbandit::Result<()> {
    let (k, horizon) = (3, 100_000);
    println!("k = {k}, T = {horizon}");
    println!("{:>4} {:>4} {:>6}  {:<44} geometric", "S", "m", "m_eff", "minimax");
    for budget in [0.0, 2.0, 3.0, 4.0, 5.0, 7.0, 9.0, 11.0, 40.0] {
        let m = unit_index(k, budget).unwrap();
        let minimax = plan_intervals_ssse(k, budget, horizon)?;
        let geometric = plan_intervals_ssse2(k, budget, horizon)?;
        println!(
            "{budget:>4} {m:>4} {:>6}  {:<44} {:?}",
            minimax.m_eff,
            format!("{:?}", minimax.endpoints),
            geometric.endpoints
        );
    }
    Ok(())
}
