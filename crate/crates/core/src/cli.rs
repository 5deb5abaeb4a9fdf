//! The `switchbandit` command-line front end.
//!
//! Each subcommand reads a single JSON config. Exit codes: 0 on success,
//! 2 for invalid arguments or configs, 3 for failures while producing
//! output. Set `SWITCHBANDIT_WORKERS` (or `--workers`) to cap the number of
//! worker threads used for replications.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::bounds::{critical_points, evaluate_bounds, phase_table, BoundReport, PhaseTable};
use crate::error::Error;
use crate::graph::{
    budget_indices, metric_closure, shortest_hamiltonian_path, shortest_hamiltonian_path_approx,
    shortest_hamiltonian_path_exact, Cost, HamiltonianPath, SwitchingGraph,
};
use crate::io::svg::{Chart, Scale, Series, Style};
use crate::io::{
    log_log_slope, write_trace_csv, BoundsConfig, GraphConfig, GraphSolver, RunConfig, SweepConfig,
    SWEEP_HEADER,
};
use crate::policy::{PolicyConfig, Variant};
use crate::sim::{audit_budget, pseudo_regret, run_once, worst_case_regret};

pub const WORKERS_ENV: &str = "SWITCHBANDIT_WORKERS";

#[derive(Debug, Parser)]
#[command(name = "switchbandit", version, about = "Bandits under a switching-cost budget")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Maximum number of worker threads.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one policy on one environment; writes trace.csv and report.json.
    Run {
        /// JSON run config.
        config: PathBuf,
        /// Output directory, created if missing.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Overrides the seed in the config.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Worst-case regret over budgets, horizons and gaps; writes CSV tables
    /// and SVG charts.
    Sweep {
        /// JSON sweep config.
        config: PathBuf,
        /// Output directory, created if missing.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Overrides the base seed in the config.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Shortest Hamiltonian path, budget indices and metric closure.
    Graph {
        /// JSON graph config.
        config: PathBuf,
        /// Write JSON here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form bounds, phase table and critical points.
    Bounds {
        /// JSON bounds config.
        config: PathBuf,
        /// Write JSON here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Runtime(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Validation(e.to_string())
    }
}

fn runtime(context: &str, e: impl std::fmt::Display) -> CliError {
    CliError::Runtime(format!("{context}: {e}"))
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Worker cap from `--workers` and the environment, whichever is smaller.
fn worker_cap(flag: Option<usize>) -> Result<Option<usize>, CliError> {
    let env = match std::env::var(WORKERS_ENV) {
        Ok(v) => Some(
            v.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Validation(format!("{WORKERS_ENV} must be a positive integer, got {v:?}")))?,
        ),
        Err(_) => None,
    };
    let cap = match (flag, env) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    if cap == Some(0) {
        return Err(CliError::Validation("worker count must be at least 1".into()));
    }
    Ok(cap)
}

pub fn execute(cli: Cli) -> Result<(), CliError> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = worker_cap(cli.workers)? {
        pool = pool.num_threads(n);
    }
    let pool = pool.build().map_err(|e| runtime("thread pool", e))?;
    pool.install(|| match cli.command {
        Command::Run { config, out, seed } => {
            let mut cfg: RunConfig = load(&config)?;
            if let Some(s) = seed {
                cfg.seed = s;
            }
            cmd_run(&cfg, &out).map(|_| ())
        }
        Command::Sweep { config, out, seed } => {
            let mut cfg: SweepConfig = load(&config)?;
            if let Some(s) = seed {
                cfg.base_seed = s;
            }
            cmd_sweep(&cfg, &out).map(|_| ())
        }
        Command::Graph { config, out } => {
            let cfg: GraphConfig = load(&config)?;
            emit(&cmd_graph(&cfg)?, out.as_deref())
        }
        Command::Bounds { config, out } => {
            let cfg: BoundsConfig = load(&config)?;
            emit(&cmd_bounds(&cfg)?, out.as_deref())
        }
    })
}

fn load<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> Result<(), CliError> {
    let text = to_json(value);
    match out {
        Some(p) => write_file(p, text.as_bytes()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|e| runtime(&format!("writing {}", path.display()), e))
}

fn ensure_dir(dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|e| runtime(&format!("creating {}", dir.display()), e))
}

/// Summary of a single run, written as `report.json`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub variant: Variant,
    pub k: usize,
    pub budget: f64,
    pub horizon: u64,
    pub seed: u64,
    /// Interval index before capping, for elimination variants.
    pub index: Option<u64>,
    pub pseudo_regret: f64,
    pub switches: usize,
    pub switching_cost: f64,
    /// Independently recomputed cost agrees with the policy and fits the
    /// budget.
    pub budget_respected: bool,
}

pub fn cmd_run(cfg: &RunConfig, out: &Path) -> Result<RunReport, CliError> {
    let policy = cfg.policy_config()?;
    let trace = run_once(&policy, &cfg.environment, cfg.seed)?;
    let audit = audit_budget(&trace, policy.graph(), policy.budget());
    let report = RunReport {
        variant: policy.variant(),
        k: policy.arms(),
        budget: policy.budget(),
        horizon: policy.horizon(),
        seed: cfg.seed,
        index: policy.index(),
        pseudo_regret: pseudo_regret(&trace, &cfg.environment),
        switches: trace.switches(),
        switching_cost: audit.total,
        budget_respected: audit.passed(),
    };
    ensure_dir(out)?;
    let mut csv = Vec::new();
    write_trace_csv(&mut csv, &trace).map_err(|e| runtime("formatting trace", e))?;
    write_file(&out.join("trace.csv"), &csv)?;
    write_file(&out.join("report.json"), to_json(&report).as_bytes())?;
    Ok(report)
}

/// Worst case over the gap grid for one `(variant, S, T)` cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepCell {
    pub variant: Variant,
    pub budget: f64,
    pub horizon: u64,
    pub index: Option<u64>,
    pub worst_gap: f64,
    pub max_regret: f64,
    pub std_err: f64,
    pub upper_bound: f64,
    pub lower_bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepOutcome {
    pub cells: Vec<SweepCell>,
    /// Log-log slope of worst-case regret in `T`, per `(variant, S)`.
    pub slopes: Vec<(Variant, f64, f64)>,
}

pub fn cmd_sweep(cfg: &SweepConfig, out: &Path) -> Result<SweepOutcome, CliError> {
    cfg.validate()?;
    let graph = cfg.graph();
    let mut rows = String::new();
    rows.push_str(SWEEP_HEADER);
    rows.push_str("\nvariant,budget,horizon,gap,mean_regret,std_err,replications\n");
    let mut cells = Vec::new();
    for &variant in &cfg.variants {
        for &budget in &cfg.budgets {
            for &horizon in &cfg.horizons {
                let policy = PolicyConfig::on_graph(variant, graph.clone(), budget, horizon)?;
                let report = worst_case_regret(&policy, &cfg.gaps, cfg.replications, cfg.base_seed, cfg.family)?;
                for p in &report.points {
                    rows.push_str(&format!(
                        "{variant},{budget},{horizon},{},{},{},{}\n",
                        p.gap, p.mean, p.std_err, cfg.replications
                    ));
                }
                let g = cfg.graph.as_ref().filter(|_| matches!(variant, Variant::Hsse | Variant::HsseExpanded));
                let b = evaluate_bounds(cfg.k, budget, horizon, g, None)?;
                cells.push(SweepCell {
                    variant,
                    budget,
                    horizon,
                    index: policy.index(),
                    worst_gap: report.worst_gap,
                    max_regret: report.max,
                    std_err: report.max_std_err,
                    upper_bound: b.upper_value,
                    lower_bound: b.lower_value,
                });
            }
        }
    }

    let mut summary = String::from("# switchbandit sweep-summary v1\n");
    summary.push_str("variant,budget,horizon,index,worst_gap,max_regret,std_err,upper_bound,lower_bound\n");
    for c in &cells {
        let index = c.index.map(|m| m.to_string()).unwrap_or_default();
        summary.push_str(&format!(
            "{},{},{},{index},{},{},{},{},{}\n",
            c.variant, c.budget, c.horizon, c.worst_gap, c.max_regret, c.std_err, c.upper_bound, c.lower_bound
        ));
    }

    let mut slopes = Vec::new();
    let mut horizon_chart = Chart::new("Worst-case regret vs horizon", "T", "regret")
        .scales(Scale::Log, Scale::Log);
    for &variant in &cfg.variants {
        for &budget in &cfg.budgets {
            let pts: Vec<(f64, f64)> = cells
                .iter()
                .filter(|c| c.variant == variant && c.budget == budget)
                .map(|c| (c.horizon as f64, c.max_regret))
                .collect();
            let name = format!("{variant} S={budget}");
            let (xs, ys): (Vec<f64>, Vec<f64>) = pts.iter().copied().unzip();
            if let Some(slope) = log_log_slope(&xs, &ys) {
                slopes.push((variant, budget, slope));
                horizon_chart = horizon_chart.note(format!("{name}: slope {slope:.3}"));
            }
            horizon_chart = horizon_chart.with(Series::new(name, pts, Style::Points));
        }
    }

    let t_max = *cfg.horizons.iter().max().expect("validated non-empty");
    let mut budget_chart = Chart::new(format!("Worst-case regret vs budget, T = {t_max}"), "S", "regret")
        .scales(Scale::Linear, Scale::Log);
    for &variant in &cfg.variants {
        let pts = cells
            .iter()
            .filter(|c| c.variant == variant && c.horizon == t_max)
            .map(|c| (c.budget, c.max_regret))
            .collect();
        budget_chart = budget_chart.with(Series::new(variant.to_string(), pts, Style::Step));
    }
    let first = cfg.variants[0];
    let envelope = |f: fn(&SweepCell) -> f64| -> Vec<(f64, f64)> {
        cells.iter().filter(|c| c.variant == first && c.horizon == t_max).map(|c| (c.budget, f(c))).collect()
    };
    budget_chart = budget_chart
        .with(Series::new("upper bound (C=1)", envelope(|c| c.upper_bound), Style::Step).dashed())
        .with(Series::new("lower bound (C=1)", envelope(|c| c.lower_bound), Style::Step).dashed());

    ensure_dir(out)?;
    write_file(&out.join("results.csv"), rows.as_bytes())?;
    write_file(&out.join("summary.csv"), summary.as_bytes())?;
    write_file(&out.join("regret_vs_budget.svg"), budget_chart.render().as_bytes())?;
    write_file(&out.join("regret_vs_horizon.svg"), horizon_chart.render().as_bytes())?;
    Ok(SweepOutcome { cells, slopes })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathReport {
    #[serde(rename = "H")]
    pub h: Cost,
    pub order: Vec<usize>,
    pub exact: bool,
}

impl From<HamiltonianPath> for PathReport {
    fn from(p: HamiltonianPath) -> Self {
        PathReport { h: p.weight, order: p.order, exact: p.exact }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Detour {
    pub from: usize,
    pub to: usize,
    pub via: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosureReport {
    pub cost: Vec<Vec<Cost>>,
    #[serde(flatten)]
    pub path: PathReport,
    /// Pairs whose shortest connection passes through other arms.
    pub detours: Vec<Detour>,
    /// Indices on the closure, which the expanded policy plans with.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_upper: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_lower: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphReport {
    pub k: usize,
    pub metric: bool,
    #[serde(flatten)]
    pub path: PathReport,
    pub max_cost: Cost,
    pub max_min_cost: Cost,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_unit: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_upper: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_lower: Option<u64>,
    /// Present for graphs that violate the triangle inequality.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closure: Option<ClosureReport>,
}

fn solve(g: &SwitchingGraph, solver: GraphSolver) -> Result<HamiltonianPath, Error> {
    match solver {
        GraphSolver::Auto => shortest_hamiltonian_path(g),
        GraphSolver::Exact => shortest_hamiltonian_path_exact(g),
        GraphSolver::Approx => shortest_hamiltonian_path_approx(g),
    }
}

pub fn cmd_graph(cfg: &GraphConfig) -> Result<GraphReport, CliError> {
    let g = &cfg.graph;
    let k = g.arms();
    let metric = g.is_metric();
    let path = solve(g, cfg.solver)?;
    let (mut m_unit, mut m_upper, mut m_lower) = (None, None, None);
    if let Some(budget) = cfg.budget {
        if k >= 2 && path.weight.is_finite() {
            let idx = budget_indices(g, budget, path.weight)?;
            (m_unit, m_upper, m_lower) = (Some(idx.m_unit), Some(idx.m_upper), Some(idx.m_lower));
        } else if budget.is_nan() || budget < 0.0 {
            return Err(Error::BadBudget(budget).into());
        }
    }
    let closure = if metric {
        None
    } else {
        let c = metric_closure(g);
        let closure_path = solve(&c.graph, cfg.solver)?;
        let mut detours = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if let Some(p) = c.path(i, j) {
                    if p.len() > 2 {
                        detours.push(Detour { from: i, to: j, via: p[1..p.len() - 1].to_vec() });
                    }
                }
            }
        }
        let (mut m_upper, mut m_lower) = (None, None);
        if let Some(budget) = cfg.budget {
            if k >= 2 && closure_path.weight.is_finite() {
                let idx = budget_indices(&c.graph, budget, closure_path.weight)?;
                (m_upper, m_lower) = (Some(idx.m_upper), Some(idx.m_lower));
            }
        }
        Some(ClosureReport { cost: c.graph.rows(), path: closure_path.into(), detours, m_upper, m_lower })
    };
    Ok(GraphReport {
        k,
        metric,
        path: path.into(),
        max_cost: g.max_cost(),
        max_min_cost: g.max_min_cost(),
        m_unit,
        m_upper,
        m_lower,
        closure,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsOutput {
    pub report: BoundReport,
    pub phase_table: Option<PhaseTable>,
    pub critical_points: Vec<u64>,
}

pub fn cmd_bounds(cfg: &BoundsConfig) -> Result<BoundsOutput, CliError> {
    let report = evaluate_bounds(cfg.k, cfg.budget, cfg.horizon, cfg.graph.as_ref(), cfg.gap)?;
    let (phase_table, critical_points) = if cfg.k >= 2 {
        (Some(phase_table(cfg.k, cfg.phases.max(1))?), critical_points(cfg.k, cfg.phases))
    } else {
        (None, Vec::new())
    };
    Ok(BoundsOutput { report, phase_table, critical_points })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_graph_report() {
        let cfg = GraphConfig { graph: SwitchingGraph::unit(5), budget: Some(9.0), solver: GraphSolver::Auto };
        let r = cmd_graph(&cfg).unwrap();
        assert_eq!(r.path.h, Cost::new(4.0).unwrap());
        assert_eq!(r.path.order, vec![0, 1, 2, 3, 4]);
        assert_eq!((r.m_unit, r.m_upper, r.m_lower), (Some(2), Some(2), Some(2)));
        assert!(r.closure.is_none());
        let json = to_json(&r);
        assert!(json.contains("\"H\": 4.0"));
    }

    #[test]
    fn non_metric_graph_includes_closure() {
        let g = SwitchingGraph::from_f64(&[vec![0.0, 1.0, 5.0], vec![1.0, 0.0, 1.0], vec![5.0, 1.0, 0.0]]).unwrap();
        let r = cmd_graph(&GraphConfig { graph: g, budget: None, solver: GraphSolver::Exact }).unwrap();
        let c = r.closure.unwrap();
        assert_eq!(c.cost[0][2], Cost::new(2.0).unwrap());
        assert_eq!(c.detours, vec![Detour { from: 0, to: 2, via: vec![1] }, Detour { from: 2, to: 0, via: vec![1] }]);
        assert_eq!((c.m_upper, c.m_lower), (None, None));
    }

    #[test]
    fn closure_indices_use_closure_costs() {
        let g = SwitchingGraph::from_f64(&[vec![0.0, 1.0, 5.0], vec![1.0, 0.0, 1.0], vec![5.0, 1.0, 0.0]]).unwrap();
        let r = cmd_graph(&GraphConfig { graph: g, budget: Some(9.0), solver: GraphSolver::Auto }).unwrap();
        // H = 2 on both; max cost 5 on the raw graph, 2 on the closure
        assert_eq!((r.m_upper, r.m_lower), (Some(2), Some(4)));
        let c = r.closure.unwrap();
        assert_eq!((c.m_upper, c.m_lower), (Some(3), Some(4)));
    }

    #[test]
    fn bounds_output() {
        let out = cmd_bounds(&BoundsConfig { k: 3, budget: 5.0, horizon: 10_000, gap: None, graph: None, phases: 4 })
            .unwrap();
        assert_eq!(out.critical_points, vec![3, 5, 7, 9]);
        assert_eq!(out.report.m_unit, 2);
    }

    #[test]
    fn zero_workers_rejected() {
        assert!(worker_cap(Some(0)).is_err());
    }
}
