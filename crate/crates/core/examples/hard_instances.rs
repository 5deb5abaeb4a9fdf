//! The adversarial family behind the lower bound: a base environment with
//! a tiny lead on arm 0 and perturbations that lift one arm at a stage.

use switchbandit::hard::make_hard_instances;

fn main() -> switchbandit::Result<()> {
    let hard = make_hard_instances(3, 5.0, 1 << 16)?;
    let s = &hard.schedule;
    println!("k = {}, S = {}, T = {}, m = {}", s.k, s.budget, s.horizon, s.m);
    for (j, d) in s.deltas.iter().enumerate() {
        println!("  delta_{} = {d:.3e}", j + 1);
    }
    println!("base lead {:.2e} on arm 0, in class: {}", hard.base.mean(0), hard.in_class(&hard.base));
    for case in hard.cases() {
        match hard.perturbed(case) {
            Ok(env) => {
                let means: Vec<String> = env.means().iter().map(|m| format!("{m:.2e}")).collect();
                println!("  {case:?}: best arm {}, means [{}]", env.best_arm(), means.join(", "));
            }
            Err(e) => println!("  {case:?}: {e}"),
        }
    }
    Ok(())
}
