//! A small, dependency-free SVG line chart writer.
//!
//! Output is a pure function of the chart contents, so charts are
//! byte-stable across runs.

use std::fmt::Write;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 460.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 170.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;
const PALETTE: [&str; 8] =
    ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    /// Piecewise constant: each value holds until the next x.
    Step,
    Line,
    /// Markers joined by a thin line.
    Points,
}

#[derive(Debug, Clone)]
pub struct Series {
    pub name: String,
    pub points: Vec<(f64, f64)>,
    pub style: Style,
    pub dashed: bool,
}

impl Series {
    pub fn new(name: impl Into<String>, points: Vec<(f64, f64)>, style: Style) -> Self {
        Series { name: name.into(), points, style, dashed: false }
    }

    pub fn dashed(mut self) -> Self {
        self.dashed = true;
        self
    }
}

#[derive(Debug, Clone)]
pub struct Chart {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub x_scale: Scale,
    pub y_scale: Scale,
    pub series: Vec<Series>,
    /// Free text lines printed under the legend.
    pub notes: Vec<String>,
}

struct Axis {
    scale: Scale,
    lo: f64,
    hi: f64,
    pixel_lo: f64,
    pixel_hi: f64,
}

impl Axis {
    fn fit(scale: Scale, values: impl Iterator<Item = f64>, pixel_lo: f64, pixel_hi: f64) -> Axis {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for v in values {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        if !lo.is_finite() {
            (lo, hi) = if scale == Scale::Log { (1.0, 10.0) } else { (0.0, 1.0) };
        }
        if scale == Scale::Log {
            lo = 10f64.powf(lo.log10().floor());
            hi = 10f64.powf(hi.log10().ceil());
            if hi <= lo {
                hi = lo * 10.0;
            }
        } else if hi <= lo {
            (lo, hi) = (lo - 0.5, hi + 0.5);
        } else {
            let pad = 0.05 * (hi - lo);
            lo -= pad;
            hi += pad;
        }
        Axis { scale, lo, hi, pixel_lo, pixel_hi }
    }

    fn map(&self, v: f64) -> f64 {
        let frac = match self.scale {
            Scale::Linear => (v - self.lo) / (self.hi - self.lo),
            Scale::Log => (v.log10() - self.lo.log10()) / (self.hi.log10() - self.lo.log10()),
        };
        self.pixel_lo + frac * (self.pixel_hi - self.pixel_lo)
    }

    fn ticks(&self) -> Vec<f64> {
        match self.scale {
            Scale::Log => {
                let (a, b) = (self.lo.log10().round() as i32, self.hi.log10().round() as i32);
                let stride = ((b - a) as usize).div_ceil(8).max(1);
                (a..=b).step_by(stride).map(|e| 10f64.powi(e)).collect()
            }
            Scale::Linear => {
                let raw = (self.hi - self.lo) / 6.0;
                let mag = 10f64.powf(raw.log10().floor());
                let step = [1.0, 2.0, 5.0, 10.0].iter().map(|m| m * mag).find(|s| *s >= raw).unwrap_or(mag * 10.0);
                let mut t = (self.lo / step).ceil() * step;
                let mut out = Vec::new();
                while t <= self.hi + 1e-9 * step {
                    out.push(if t.abs() < 1e-12 * step { 0.0 } else { t });
                    t += step;
                }
                out
            }
        }
    }
}

fn label(v: f64) -> String {
    if v != 0.0 && (v.abs() >= 1e5 || v.abs() < 1e-3) {
        format!("{v:.0e}")
    } else {
        let s = format!("{v:.3}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

impl Chart {
    pub fn new(title: impl Into<String>, x_label: impl Into<String>, y_label: impl Into<String>) -> Self {
        Chart {
            title: title.into(),
            x_label: x_label.into(),
            y_label: y_label.into(),
            x_scale: Scale::Linear,
            y_scale: Scale::Linear,
            series: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn scales(mut self, x: Scale, y: Scale) -> Self {
        self.x_scale = x;
        self.y_scale = y;
        self
    }

    pub fn with(mut self, series: Series) -> Self {
        self.series.push(series);
        self
    }

    pub fn note(mut self, text: impl Into<String>) -> Self {
        self.notes.push(text.into());
        self
    }

    fn usable(&self, (x, y): (f64, f64)) -> bool {
        let ok = |v: f64, s: Scale| v.is_finite() && (s == Scale::Linear || v > 0.0);
        ok(x, self.x_scale) && ok(y, self.y_scale)
    }

    pub fn render(&self) -> String {
        let pts = || self.series.iter().flat_map(|s| s.points.iter().copied()).filter(|&p| self.usable(p));
        let x = Axis::fit(self.x_scale, pts().map(|p| p.0), LEFT, WIDTH - RIGHT);
        let y = Axis::fit(self.y_scale, pts().map(|p| p.1), HEIGHT - BOTTOM, TOP);

        // long legends extend the canvas below the plot
        let legend_rows = (self.series.len() + self.notes.len()) as f64;
        let canvas = HEIGHT.max(TOP + 34.0 + 18.0 * legend_rows);
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{canvas}" viewBox="0 0 {WIDTH} {canvas}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="22" text-anchor="middle" font-size="15">{}</text>"#,
            (LEFT + WIDTH - RIGHT) / 2.0,
            escape(&self.title)
        );
        let (x0, x1, y0, y1) = (LEFT, WIDTH - RIGHT, HEIGHT - BOTTOM, TOP);
        let _ = writeln!(
            s,
            r#"<path d="M{x0:.1},{y1:.1} V{y0:.1} H{x1:.1}" fill="none" stroke="black"/>"#
        );
        for t in x.ticks() {
            let px = x.map(t);
            let _ = writeln!(
                s,
                r##"<line x1="{px:.1}" y1="{y0:.1}" x2="{px:.1}" y2="{:.1}" stroke="black"/><text x="{px:.1}" y="{:.1}" text-anchor="middle">{}</text>"##,
                y0 + 5.0,
                y0 + 18.0,
                label(t)
            );
        }
        for t in y.ticks() {
            let py = y.map(t);
            let _ = writeln!(
                s,
                r##"<line x1="{:.1}" y1="{py:.1}" x2="{x0:.1}" y2="{py:.1}" stroke="black"/><line x1="{x0:.1}" y1="{py:.1}" x2="{x1:.1}" y2="{py:.1}" stroke="#e0e0e0"/><text x="{:.1}" y="{:.1}" text-anchor="end">{}</text>"##,
                x0 - 5.0,
                x0 - 8.0,
                py + 4.0,
                label(t)
            );
        }
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{}</text>"#,
            (x0 + x1) / 2.0,
            HEIGHT - 18.0,
            escape(&self.x_label)
        );
        let _ = writeln!(
            s,
            r#"<text x="20" y="{:.1}" text-anchor="middle" transform="rotate(-90 20 {:.1})">{}</text>"#,
            (y0 + y1) / 2.0,
            (y0 + y1) / 2.0,
            escape(&self.y_label)
        );

        for (i, series) in self.series.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            let mut p: Vec<(f64, f64)> = series.points.iter().copied().filter(|&q| self.usable(q)).collect();
            p.sort_by(|a, b| a.0.total_cmp(&b.0));
            if !p.is_empty() {
                let mut d = format!("M{:.1},{:.1}", x.map(p[0].0), y.map(p[0].1));
                for q in &p[1..] {
                    if series.style == Style::Step {
                        let _ = write!(d, " H{:.1} V{:.1}", x.map(q.0), y.map(q.1));
                    } else {
                        let _ = write!(d, " L{:.1},{:.1}", x.map(q.0), y.map(q.1));
                    }
                }
                let width = if series.style == Style::Points { 1.0 } else { 2.0 };
                let dash = if series.dashed { r#" stroke-dasharray="6,4""# } else { "" };
                let _ = writeln!(
                    s,
                    r#"<path d="{d}" fill="none" stroke="{color}" stroke-width="{width}"{dash}/>"#
                );
                if series.style == Style::Points {
                    for q in &p {
                        let _ = writeln!(
                            s,
                            r#"<circle cx="{:.1}" cy="{:.1}" r="3.5" fill="{color}"/>"#,
                            x.map(q.0),
                            y.map(q.1)
                        );
                    }
                }
            }
            let ly = TOP + 10.0 + 18.0 * i as f64;
            let _ = writeln!(
                s,
                r#"<line x1="{:.1}" y1="{ly:.1}" x2="{:.1}" y2="{ly:.1}" stroke="{color}" stroke-width="2"/><text x="{:.1}" y="{:.1}">{}</text>"#,
                x1 + 12.0,
                x1 + 32.0,
                x1 + 38.0,
                ly + 4.0,
                escape(&series.name)
            );
        }
        for (i, note) in self.notes.iter().enumerate() {
            let ny = TOP + 24.0 + 18.0 * (self.series.len() + i) as f64;
            let _ = writeln!(s, r#"<text x="{:.1}" y="{ny:.1}">{}</text>"#, x1 + 12.0, escape(note));
        }
        s.push_str("</svg>\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_deterministically() {
        let chart = Chart::new("regret <vs> S", "S", "regret")
            .with(Series::new("ssse", vec![(1.0, 10.0), (2.0, 5.0), (3.0, 5.0)], Style::Step))
            .with(Series::new("bound", vec![(1.0, 12.0), (3.0, 6.0)], Style::Line).dashed())
            .note("slope 0.66");
        let a = chart.render();
        assert_eq!(a, chart.render());
        assert!(a.starts_with("<svg"));
        assert!(a.trim_end().ends_with("</svg>"));
        assert!(a.contains("regret &lt;vs&gt; S"));
        assert!(a.contains(" H"));
        assert!(a.contains("stroke-dasharray"));
    }

    #[test]
    fn log_axes_skip_nonpositive_points() {
        let chart = Chart::new("t", "T", "R")
            .scales(Scale::Log, Scale::Log)
            .with(Series::new("a", vec![(0.0, 1.0), (100.0, 10.0), (1000.0, 40.0)], Style::Points));
        let svg = chart.render();
        assert_eq!(svg.matches("<circle").count(), 2);
        assert!(!svg.contains("NaN") && !svg.contains("inf"));
    }

    #[test]
    fn long_legend_grows_canvas() {
        let mut chart = Chart::new("t", "x", "y");
        for i in 0..30 {
            chart = chart.with(Series::new(format!("s{i}"), vec![(0.0, i as f64)], Style::Line));
        }
        let svg = chart.render();
        assert!(!svg.contains(&format!(r#"height="{HEIGHT}""#)));
        assert!(Chart::new("t", "x", "y").render().contains(&format!(r#"height="{HEIGHT}""#)));
    }

    #[test]
    fn empty_chart_renders() {
        let svg = Chart::new("empty", "x", "y").render();
        assert!(svg.contains("</svg>"));
    }
}
