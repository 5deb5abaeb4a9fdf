//! Writes a trace CSV, reads it back, and renders a regret-versus-horizon
//! chart with its fitted log-log slope. Files go to a temporary directory
//! unless a path is given: `cargo run --example export_artifacts -- out/`.

use std::fs::{self, File};
use std::io::BufWriter;
use std::path::PathBuf;

use switchbandit::io::svg::{Chart, Scale, Series, Style};
use switchbandit::io::{log_log_slope, read_trace_csv, write_trace_csv};
use switchbandit::sim::{default_gap_grid, worst_case_regret};
use switchbandit::{run_once, Environment, Family, PolicyConfig, Variant};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("switchbandit-demo"));
    fs::create_dir_all(&dir)?;

    let env = Environment::new(vec![0.4, 0.6], Family::Bernoulli)?;
    let config = PolicyConfig::unit(Variant::Ssse2, 2, 4.0, 2_000)?;
    let trace = run_once(&config, &env, 42)?;
    let csv_path = dir.join("trace.csv");
    write_trace_csv(BufWriter::new(File::create(&csv_path)?), &trace)?;
    let back = read_trace_csv(File::open(&csv_path)?)?;
    println!("{}: {} rounds, round trip equal: {}", csv_path.display(), back.len(), back.actions == trace.actions);

    let horizons: Vec<u64> = (10..=15).map(|e| 1u64 << e).collect();
    let mut points = Vec::new();
    for &t in &horizons {
        let cfg = PolicyConfig::unit(Variant::Ssse, 2, 2.0, t)?;
        let report = worst_case_regret(&cfg, &default_gap_grid(), 40, 7, Family::Gaussian)?;
        points.push((t as f64, report.max));
    }
    let (xs, ys): (Vec<f64>, Vec<f64>) = points.iter().copied().unzip();
    let slope = log_log_slope(&xs, &ys).unwrap();
    let chart = Chart::new("worst-case regret, k = 2, S = 2", "T", "regret")
        .scales(Scale::Log, Scale::Log)
        .with(Series::new("ssse", points, Style::Points))
        .note(format!("slope {slope:.3}"));
    let svg_path = dir.join("regret_vs_horizon.svg");
    fs::write(&svg_path, chart.render())?;
    println!("{}: fitted slope {slope:.3}", svg_path.display());
    Ok(())
}
