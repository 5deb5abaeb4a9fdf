//! File formats: JSON experiment configs, versioned CSV tables, SVG charts.

mod config;
pub mod svg;

pub use config::{BoundsConfig, GraphConfig, GraphSolver, PolicySpec, RunConfig, SweepConfig};

use std::io::{Read, Write};

use crate::sim::RunTrace;

/// First line of every trace CSV.
pub const TRACE_HEADER: &str = "# switchbandit trace v1";
/// First line of every sweep result CSV.
pub const SWEEP_HEADER: &str = "# switchbandit sweep v1";

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("unexpected header line {0:?}")]
    Header(String),
}

/// Writes `t,action,reward,cum_cost` rows (1-based `t`) after the version
/// comment.
pub fn write_trace_csv<W: Write>(mut out: W, trace: &RunTrace) -> Result<(), FormatError> {
    writeln!(out, "{TRACE_HEADER}")?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t", "action", "reward", "cum_cost"])?;
    for (i, ((a, r), c)) in trace.actions.iter().zip(&trace.rewards).zip(&trace.cum_cost).enumerate() {
        w.serialize((i + 1, a, r, c))?;
    }
    w.flush()?;
    Ok(())
}

/// Parses a file written by [`write_trace_csv`]. The seed is not stored in
/// the CSV and comes back as 0.
pub fn read_trace_csv<R: Read>(mut input: R) -> Result<RunTrace, FormatError> {
    let mut text = String::new();
    input.read_to_string(&mut text)?;
    let (first, body) = text.split_once('\n').unwrap_or((&text, ""));
    if first.trim_end() != TRACE_HEADER {
        return Err(FormatError::Header(first.to_string()));
    }
    let mut trace = RunTrace { actions: vec![], rewards: vec![], cum_cost: vec![], seed: 0 };
    for row in csv::Reader::from_reader(body.as_bytes()).deserialize() {
        let (_t, a, r, c): (u64, usize, f64, f64) = row?;
        trace.actions.push(a);
        trace.rewards.push(r);
        trace.cum_cost.push(c);
    }
    Ok(trace)
}

/// Ordinary least-squares fit `y = slope * x + intercept`.
pub fn least_squares(xs: &[f64], ys: &[f64]) -> Option<(f64, f64)> {
    let n = xs.len();
    if n < 2 || n != ys.len() {
        return None;
    }
    let nf = n as f64;
    let mx = xs.iter().sum::<f64>() / nf;
    let my = ys.iter().sum::<f64>() / nf;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    Some((slope, my - slope * mx))
}

/// Slope of `ln y` against `ln x`.
pub fn log_log_slope(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    least_squares(&lx, &ly).map(|(s, _)| s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_round_trip() {
        let trace = RunTrace {
            actions: vec![0, 1, 1, 2],
            rewards: vec![0.5, -1.25, 3.0e-7, 0.1],
            cum_cost: vec![0.0, 1.0, 1.0, 2.5],
            seed: 0,
        };
        let mut buf = Vec::new();
        write_trace_csv(&mut buf, &trace).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("# switchbandit trace v1\nt,action,reward,cum_cost\n1,0,0.5,0.0\n"));
        assert_eq!(read_trace_csv(&buf[..]).unwrap(), trace);
        assert!(matches!(read_trace_csv("t,action\n".as_bytes()), Err(FormatError::Header(_))));
    }

    #[test]
    fn slope_of_power_law() {
        let xs = [10.0, 100.0, 1000.0, 10000.0];
        let ys: Vec<f64> = xs.iter().map(|x: &f64| 3.0 * x.powf(0.6)).collect();
        assert!((log_log_slope(&xs, &ys).unwrap() - 0.6).abs() < 1e-12);
        assert!(least_squares(&[1.0], &[2.0]).is_none());
        assert!(least_squares(&[1.0, 1.0], &[2.0, 3.0]).is_none());
    }
}
