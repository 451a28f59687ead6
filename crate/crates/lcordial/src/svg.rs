//! Line plot of `J(n, m)` against `n`, one polyline per bound `m`.
//!
//! Output is a standalone SVG 1.1 document built only from `svg`, `g`,
//! `line`, `polyline` and `text` elements. Series colors cycle through
//! [`PALETTE`] in increasing `m`.

use std::fmt::Write as _;
use std::io::{self, Write};

use lcordial_core::survey::SurveyTable;

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 480.0;
const LEFT: f64 = 64.0;
const RIGHT: f64 = 150.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 56.0;
const TICK: f64 = 5.0;
const MAX_TICKS: f64 = 10.0;

/// Tableau-10.
pub const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

/// Smallest step of the form {1, 2, 5}·10^k, at least 1, giving at most
/// `MAX_TICKS` intervals over `span`.
fn tick_step(span: f64) -> f64 {
    let mut scale = 1.0;
    loop {
        for f in [1.0, 2.0, 5.0] {
            let step = f * scale;
            if span / step <= MAX_TICKS {
                return step;
            }
        }
        scale *= 10.0;
    }
}

struct Axis {
    lo: f64,
    hi: f64,
    step: f64,
}

impl Axis {
    fn new(lo: f64, hi: f64) -> Self {
        let (lo, hi) = if hi > lo {
            (lo, hi)
        } else {
            (lo - 1.0, hi + 1.0)
        };
        let step = tick_step(hi - lo);
        Axis { lo, hi, step }
    }

    fn ticks(&self) -> Vec<f64> {
        let first = (self.lo / self.step).ceil() as i64;
        let last = (self.hi / self.step).floor() as i64;
        (first..=last).map(|i| i as f64 * self.step).collect()
    }
}

pub fn render_svg(table: &SurveyTable) -> String {
    let (n_min, n_max) = table.n_range();
    let j_max = table.cells().iter().map(|c| c.j).max().unwrap_or(0) as f64;
    let x_axis = Axis::new(n_min as f64, n_max as f64);
    let y_step = tick_step(j_max.max(1.0));
    let y_axis = Axis {
        lo: 0.0,
        hi: (j_max.max(1.0) / y_step).ceil() * y_step,
        step: y_step,
    };

    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let x = |v: f64| LEFT + (v - x_axis.lo) / (x_axis.hi - x_axis.lo) * plot_w;
    let y = |v: f64| TOP + plot_h - (v - y_axis.lo) / (y_axis.hi - y_axis.lo) * plot_h;
    let (x0, y0) = (LEFT, TOP + plot_h);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );

    let _ = writeln!(s, r#"<g id="axes" stroke="black" stroke-width="1">"#);
    let _ = writeln!(
        s,
        r#"<line x1="{x0:.2}" y1="{y0:.2}" x2="{:.2}" y2="{y0:.2}"/>"#,
        LEFT + plot_w
    );
    let _ = writeln!(
        s,
        r#"<line x1="{x0:.2}" y1="{y0:.2}" x2="{x0:.2}" y2="{TOP:.2}"/>"#
    );
    for t in x_axis.ticks() {
        let xt = x(t);
        let _ = writeln!(
            s,
            r#"<line x1="{xt:.2}" y1="{y0:.2}" x2="{xt:.2}" y2="{:.2}"/>"#,
            y0 + TICK
        );
    }
    for t in y_axis.ticks() {
        let yt = y(t);
        let _ = writeln!(
            s,
            r#"<line x1="{x0:.2}" y1="{yt:.2}" x2="{:.2}" y2="{yt:.2}"/>"#,
            x0 - TICK
        );
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="tick-labels" fill="black" stroke="none">"#);
    for t in x_axis.ticks() {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{t}</text>"#,
            x(t),
            y0 + TICK + 14.0
        );
    }
    for t in y_axis.ticks() {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{t}</text>"#,
            x0 - TICK - 3.0,
            y(t) + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">n</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 14.0
    );
    let _ = writeln!(
        s,
        r#"<text x="16" y="{:.2}" text-anchor="middle" transform="rotate(-90 16 {:.2})">J(n, m)</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0
    );
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="series" fill="none" stroke-width="1.5">"#);
    for (i, &m) in table.m_values().iter().enumerate() {
        let points: Vec<String> = table
            .series(m)
            .into_iter()
            .map(|(n, j)| format!("{:.2},{:.2}", x(n as f64), y(j as f64)))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline data-m="{m}" stroke="{}" points="{}"/>"#,
            PALETTE[i % PALETTE.len()],
            points.join(" ")
        );
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="legend" stroke-width="2">"#);
    let lx = LEFT + plot_w + 16.0;
    for (i, &m) in table.m_values().iter().enumerate() {
        let ly = TOP + 10.0 + 20.0 * i as f64;
        let color = PALETTE[i % PALETTE.len()];
        let _ = writeln!(
            s,
            r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}"/>"#,
            lx + 24.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" fill="black" stroke="none">m = {m}</text>"#,
            lx + 30.0,
            ly + 4.0
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    s
}

pub fn emit_svg_lineplot<W: Write>(table: &SurveyTable, mut sink: W) -> io::Result<()> {
    sink.write_all(render_svg(table).as_bytes())?;
    sink.flush()
}
