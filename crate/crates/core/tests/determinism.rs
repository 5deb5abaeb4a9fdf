use switchbandit::policy::{PolicyConfig, Variant};
use switchbandit::rng::derive_seed;
use switchbandit::sim::{default_gap_grid, run_once, worst_case_regret};
use switchbandit::{Environment, Family, SwitchingGraph};

#[test]
fn worst_case_report_independent_of_thread_count() {
    let cfg = PolicyConfig::unit(Variant::Ssse2, 3, 5.0, 3000).unwrap();
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| worst_case_regret(&cfg, &default_gap_grid(), 16, 42, Family::Bernoulli).unwrap())
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one, run(7));
}

#[test]
fn concurrent_runs_match_sequential_runs() {
    let g = SwitchingGraph::from_f64(&[
        vec![0.0, 1.0, 4.0, 2.0],
        vec![1.0, 0.0, 1.0, 9.0],
        vec![4.0, 1.0, 0.0, 1.0],
        vec![2.0, 9.0, 1.0, 0.0],
    ])
    .unwrap();
    let cfg = PolicyConfig::on_graph(Variant::HsseExpanded, g, 20.0, 4000).unwrap();
    let env = Environment::new(vec![0.1, 0.4, 0.35, 0.2], Family::Gaussian).unwrap();
    let sequential: Vec<_> = (0..32).map(|r| run_once(&cfg, &env, derive_seed(9, r)).unwrap()).collect();
    let threads: Vec<_> = (0..32)
        .map(|r| {
            let (cfg, env) = (cfg.clone(), env.clone());
            std::thread::spawn(move || run_once(&cfg, &env, derive_seed(9, r)).unwrap())
        })
        .collect();
    let concurrent: Vec<_> = threads.into_iter().map(|h| h.join().unwrap()).collect();
    assert_eq!(sequential, concurrent);
}
