//! Self-contained SVG 1.1 line chart of absolute-error sweeps: linear m on
//! the x axis, log-scale error on the y axis, one polyline per kind. Output
//! is a pure function of the input rows, so bytes are reproducible.

use gstar_core::{ApproxKind, ErrorRow};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const LEFT: f64 = 72.0;
const RIGHT: f64 = 660.0;
const TOP: f64 = 24.0;
const BOTTOM: f64 = 450.0;

fn color(kind: ApproxKind) -> &'static str {
    match kind {
        ApproxKind::Exact => "#333333",
        ApproxKind::Hedges => "#c0392b",
        ApproxKind::Mortici(1) => "#e67e22",
        ApproxKind::Mortici(2) => "#b8860b",
        ApproxKind::Mortici(3) => "#27ae60",
        ApproxKind::Mortici(4) => "#16a085",
        ApproxKind::Mortici(5) => "#2980b9",
        ApproxKind::Mortici(6) => "#8e44ad",
        ApproxKind::Mortici(_) => "#555555",
    }
}

fn fmt_coord(v: f64) -> String {
    format!("{v:.2}")
}

pub fn render(rows: &[ErrorRow], kinds: &[ApproxKind]) -> String {
    // data ranges
    let (m_min, m_max) = match (rows.first(), rows.last()) {
        (Some(a), Some(b)) if b.m > a.m => (a.m, b.m),
        (Some(a), _) => (a.m - 1.0, a.m + 1.0),
        _ => (0.0, 1.0),
    };
    let mut log_min = f64::INFINITY;
    let mut log_max = f64::NEG_INFINITY;
    for row in rows {
        for &(_, d) in &row.deltas {
            if let Some(d) = d {
                if d > 0.0 {
                    log_min = log_min.min(d.log10());
                    log_max = log_max.max(d.log10());
                }
            }
        }
    }
    let (dec_lo, dec_hi) = if log_min.is_finite() {
        let lo = log_min.floor() as i32;
        let hi = log_max.ceil() as i32;
        if lo == hi { (lo, hi + 1) } else { (lo, hi) }
    } else {
        (-16, 0)
    };

    let x_of = |m: f64| LEFT + (m - m_min) / (m_max - m_min) * (RIGHT - LEFT);
    let y_of = |log_d: f64| {
        BOTTOM - (log_d - f64::from(dec_lo)) / f64::from(dec_hi - dec_lo) * (BOTTOM - TOP)
    };

    let mut out = String::with_capacity(16 * 1024);
    out.push_str(r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    out.push('\n');
    out.push_str(&format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    ));
    out.push('\n');
    out.push_str(r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    out.push('\n');

    // decade gridlines and y labels
    let dec_step = if dec_hi - dec_lo > 14 { 2 } else { 1 };
    let mut dec = dec_lo;
    while dec <= dec_hi {
        let y = y_of(f64::from(dec));
        out.push_str(&format!(
            r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#dddddd" stroke-width="1"/>"##,
            fmt_coord(LEFT),
            fmt_coord(y),
            fmt_coord(RIGHT),
            fmt_coord(y)
        ));
        out.push('\n');
        out.push_str(&format!(
            r##"<text x="{}" y="{}" font-family="monospace" font-size="11" text-anchor="end" fill="#333333">1e{}</text>"##,
            fmt_coord(LEFT - 6.0),
            fmt_coord(y + 4.0),
            dec
        ));
        out.push('\n');
        dec += dec_step;
    }

    // x ticks
    let ticks = 6;
    for i in 0..=ticks {
        let m = m_min + (m_max - m_min) * f64::from(i) / f64::from(ticks);
        let x = x_of(m);
        out.push_str(&format!(
            r##"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="#999999" stroke-width="1"/>"##,
            fmt_coord(x),
            fmt_coord(BOTTOM),
            fmt_coord(BOTTOM + 5.0)
        ));
        out.push('\n');
        out.push_str(&format!(
            r##"<text x="{}" y="{}" font-family="monospace" font-size="11" text-anchor="middle" fill="#333333">{}</text>"##,
            fmt_coord(x),
            fmt_coord(BOTTOM + 18.0),
            format_m(m)
        ));
        out.push('\n');
    }

    // axes
    out.push_str(&format!(
        r##"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="#333333" stroke-width="1"/>"##,
        fmt_coord(LEFT),
        fmt_coord(TOP),
        fmt_coord(BOTTOM)
    ));
    out.push('\n');
    out.push_str(&format!(
        r##"<line x1="{0}" y1="{1}" x2="{2}" y2="{1}" stroke="#333333" stroke-width="1"/>"##,
        fmt_coord(LEFT),
        fmt_coord(BOTTOM),
        fmt_coord(RIGHT)
    ));
    out.push('\n');
    out.push_str(&format!(
        r##"<text x="{}" y="{}" font-family="monospace" font-size="12" text-anchor="middle" fill="#333333">m</text>"##,
        fmt_coord((LEFT + RIGHT) / 2.0),
        fmt_coord(HEIGHT - 10.0)
    ));
    out.push('\n');
    out.push_str(&format!(
        r##"<text x="16" y="{0}" font-family="monospace" font-size="12" text-anchor="middle" fill="#333333" transform="rotate(-90 16 {0})">absolute error</text>"##,
        fmt_coord((TOP + BOTTOM) / 2.0)
    ));
    out.push('\n');

    // one polyline per kind; gaps (missing or zero deltas) split segments
    for &kind in kinds {
        let stroke = color(kind);
        let mut segment: Vec<(f64, f64)> = Vec::new();
        let flush = |segment: &mut Vec<(f64, f64)>, out: &mut String| {
            if segment.len() >= 2 {
                let pts: Vec<String> = segment
                    .iter()
                    .map(|&(x, y)| format!("{},{}", fmt_coord(x), fmt_coord(y)))
                    .collect();
                out.push_str(&format!(
                    r#"<polyline fill="none" stroke="{stroke}" stroke-width="1.5" points="{}"/>"#,
                    pts.join(" ")
                ));
                out.push('\n');
            } else if let Some(&(x, y)) = segment.first() {
                out.push_str(&format!(
                    r#"<circle cx="{}" cy="{}" r="2" fill="{stroke}"/>"#,
                    fmt_coord(x),
                    fmt_coord(y)
                ));
                out.push('\n');
            }
            segment.clear();
        };
        for row in rows {
            match row.delta(kind) {
                Some(d) if d > 0.0 => segment.push((x_of(row.m), y_of(d.log10()))),
                _ => flush(&mut segment, &mut out),
            }
        }
        flush(&mut segment, &mut out);
    }

    // legend
    for (i, &kind) in kinds.iter().enumerate() {
        let y = TOP + 16.0 + 18.0 * i as f64;
        out.push_str(&format!(
            r#"<line x1="{0}" y1="{1}" x2="{2}" y2="{1}" stroke="{3}" stroke-width="2"/>"#,
            fmt_coord(RIGHT + 14.0),
            fmt_coord(y),
            fmt_coord(RIGHT + 40.0),
            color(kind)
        ));
        out.push('\n');
        out.push_str(&format!(
            r##"<text x="{}" y="{}" font-family="monospace" font-size="12" fill="#333333">{}</text>"##,
            fmt_coord(RIGHT + 46.0),
            fmt_coord(y + 4.0),
            kind
        ));
        out.push('\n');
    }

    out.push_str("</svg>\n");
    out
}

fn format_m(m: f64) -> String {
    if (m - m.round()).abs() < 1e-9 {
        format!("{}", m.round() as i64)
    } else {
        format!("{m:.2}")
    }
}
