#![allow(dead_code)]

use std::io::Write;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use switchbandit::graph::SwitchingGraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// L1 distances between random integer points: always metric, integer
/// costs so every sum is exact.
pub fn random_metric_graph(r: &mut ChaCha8Rng, k: usize) -> SwitchingGraph {
    let pts: Vec<(i64, i64)> = (0..k).map(|_| (r.random_range(0..8), r.random_range(0..8))).collect();
    let rows = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| ((pts[i].0 - pts[j].0).abs() + (pts[i].1 - pts[j].1).abs()) as f64)
                .collect()
        })
        .collect::<Vec<Vec<f64>>>();
    SwitchingGraph::from_f64(&rows).unwrap()
}

/// Symmetric integer costs in `1..=max`, each edge forbidden with
/// probability `p_inf`. Usually violates the triangle inequality.
#[allow(clippy::needless_range_loop)]
pub fn random_graph(r: &mut ChaCha8Rng, k: usize, max: u32, p_inf: f64) -> SwitchingGraph {
    let mut rows = vec![vec![0.0; k]; k];
    for i in 0..k {
        for j in (i + 1)..k {
            let c = if r.random_bool(p_inf) { f64::INFINITY } else { r.random_range(1..=max) as f64 };
            rows[i][j] = c;
            rows[j][i] = c;
        }
    }
    SwitchingGraph::from_f64(&rows).unwrap()
}

/// Prints a result line straight to stderr so it shows up even when the
/// test harness captures output.
pub fn report(line: &str) {
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "{line}");
}
