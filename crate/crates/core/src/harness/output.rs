//! CSV and SVG writers for [`ReportBundle`]s. Every file is written to a
//! temporary sibling first and renamed into place.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use super::ReportBundle;
use crate::error::{Error, Result};

pub const REPORT_HEADER: [&str; 6] = ["method", "n_params", "max_abs", "rms", "argmax_x", "endpoint_max_abs"];

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 50.0;
const PALETTE: [&str; 8] = [
    "#000000", "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2",
];
const DASHES: [&str; 4] = ["", "8 4", "2 3", "8 3 2 3"];

/// Shortest decimal that parses back to the same `f64`.
pub fn format_f64(v: f64) -> String {
    let plain = format!("{v}");
    let sci = format!("{v:e}");
    if sci.len() < plain.len() {
        sci
    } else {
        plain
    }
}

/// Path of the error-report CSV written next to `path`.
pub fn report_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".report.csv");
    PathBuf::from(s)
}

/// Write `bytes` to `path` via a temporary file in the same directory.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp{}", std::process::id()));
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, bytes).map_err(|e| Error::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        Error::io(path, e)
    })
}

fn csv_bytes(rows: impl IntoIterator<Item = Vec<String>>) -> Vec<u8> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .flexible(false)
        .from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).expect("writing to memory cannot fail");
    }
    w.into_inner().expect("writing to memory cannot fail")
}

/// Curves as `x,<label>,...` with one row per abscissa, plus the error
/// reports in `<path>.report.csv`.
pub fn emit_csv(bundle: &ReportBundle, path: &Path) -> Result<()> {
    bundle.check_shared_grid()?;
    let mut rows = Vec::with_capacity(bundle.grid_len() + 1);
    let mut header = vec!["x".to_string()];
    header.extend(bundle.curves.iter().map(|c| c.label.clone()));
    rows.push(header);
    if let Some(first) = bundle.curves.first() {
        for (i, x) in first.xs.iter().enumerate() {
            let mut row = vec![format_f64(*x)];
            row.extend(bundle.curves.iter().map(|c| format_f64(c.ys[i])));
            rows.push(row);
        }
    }
    write_atomic(path, &csv_bytes(rows))?;

    let mut report_rows = vec![REPORT_HEADER.iter().map(|s| s.to_string()).collect::<Vec<_>>()];
    for r in &bundle.reports {
        report_rows.push(vec![
            r.method.clone(),
            r.n_params.to_string(),
            format_f64(r.max_abs),
            format_f64(r.rms),
            format_f64(r.argmax_x),
            format_f64(r.endpoint_max_abs),
        ]);
    }
    write_atomic(&report_path(path), &csv_bytes(report_rows))
}

fn escape_xml(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

/// Data range padded by 5% per side; a collapsed range becomes `[v−1, v+1]`.
pub fn padded_range(values: impl IntoIterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values
        .into_iter()
        .filter(|v| v.is_finite())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), v| (l.min(v), h.max(v)));
    if !lo.is_finite() {
        return (-1.0, 1.0);
    }
    if lo == hi {
        return (lo - 1.0, hi + 1.0);
    }
    let pad = 0.05 * (hi - lo);
    (lo - pad, hi + pad)
}

/// Render the bundle as a standalone 800×500 SVG 1.1 document.
pub fn render_svg(bundle: &ReportBundle) -> Result<String> {
    if bundle.curves.is_empty() {
        return Err(Error::arg("SVG output needs at least one curve"));
    }
    let all_x = bundle
        .curves
        .iter()
        .flat_map(|c| c.xs.iter())
        .chain(bundle.markers.iter().flat_map(|m| m.xs.iter()))
        .copied();
    let all_y = bundle
        .curves
        .iter()
        .flat_map(|c| c.ys.iter())
        .chain(bundle.markers.iter().flat_map(|m| m.ys.iter()))
        .copied();
    let (x0, x1) = padded_range(all_x);
    let (y0, y1) = padded_range(all_y);
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = |x: f64| MARGIN_LEFT + (x - x0) / (x1 - x0) * plot_w;
    let sy = |y: f64| MARGIN_TOP + (y1 - y) / (y1 - y0) * plot_h;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="24" font-family="sans-serif" font-size="16" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        escape_xml(&bundle.title)
    );
    let _ = writeln!(
        s,
        r##"<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="#444444" stroke-width="1"/>"##
    );

    // ticks: five per axis at even fractions of the padded range
    for k in 0..=4 {
        let fx = x0 + (x1 - x0) * k as f64 / 4.0;
        let fy = y0 + (y1 - y0) * k as f64 / 4.0;
        let (px, py) = (sx(fx), sy(fy));
        let base = MARGIN_TOP + plot_h;
        let _ = writeln!(
            s,
            r##"<line x1="{px:.2}" y1="{base:.2}" x2="{px:.2}" y2="{:.2}" stroke="#444444"/><text x="{px:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="middle">{}</text>"##,
            base + 5.0,
            base + 18.0,
            tick_label(fx)
        );
        let _ = writeln!(
            s,
            r##"<line x1="{:.2}" y1="{py:.2}" x2="{MARGIN_LEFT:.2}" y2="{py:.2}" stroke="#444444"/><text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="end">{}</text>"##,
            MARGIN_LEFT - 5.0,
            MARGIN_LEFT - 8.0,
            py + 4.0,
            tick_label(fy)
        );
    }

    for (k, c) in bundle.curves.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let dash = DASHES[k % DASHES.len()];
        let dash_attr = if dash.is_empty() {
            String::new()
        } else {
            format!(r#" stroke-dasharray="{dash}""#)
        };
        // non-finite values split the curve into separate polylines
        let mut segment: Vec<String> = Vec::new();
        let flush = |segment: &mut Vec<String>, s: &mut String| {
            if !segment.is_empty() {
                let _ = writeln!(
                    s,
                    r#"<polyline fill="none" stroke="{color}" stroke-width="1.5"{dash_attr} points="{}"/>"#,
                    segment.join(" ")
                );
                segment.clear();
            }
        };
        for (x, y) in c.xs.iter().zip(&c.ys) {
            if x.is_finite() && y.is_finite() {
                segment.push(format!("{:.2},{:.2}", sx(*x), sy(*y)));
            } else {
                flush(&mut segment, &mut s);
            }
        }
        flush(&mut segment, &mut s);
    }

    for (k, m) in bundle.markers.iter().enumerate() {
        let color = PALETTE[(k + 1) % PALETTE.len()];
        for (x, y) in m.xs.iter().zip(&m.ys) {
            if x.is_finite() && y.is_finite() {
                let _ = writeln!(
                    s,
                    r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="{color}" stroke="black" stroke-width="0.5"/>"#,
                    sx(*x),
                    sy(*y)
                );
            }
        }
    }

    // legend, top right inside the plot
    let entries = bundle.curves.len() + bundle.markers.len();
    let lx = MARGIN_LEFT + plot_w - 230.0;
    let ly = MARGIN_TOP + 10.0;
    let _ = writeln!(
        s,
        r##"<rect x="{lx:.2}" y="{ly:.2}" width="220" height="{:.2}" fill="white" fill-opacity="0.85" stroke="#888888"/>"##,
        16.0 * entries as f64 + 8.0
    );
    for (k, c) in bundle.curves.iter().enumerate() {
        let y = ly + 14.0 + 16.0 * k as f64;
        let dash = DASHES[k % DASHES.len()];
        let dash_attr = if dash.is_empty() {
            String::new()
        } else {
            format!(r#" stroke-dasharray="{dash}""#)
        };
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{}" stroke-width="1.5"{dash_attr}/><text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11">{}</text>"#,
            lx + 8.0,
            y - 4.0,
            lx + 38.0,
            y - 4.0,
            PALETTE[k % PALETTE.len()],
            lx + 44.0,
            y,
            escape_xml(&c.label)
        );
    }
    for (k, m) in bundle.markers.iter().enumerate() {
        let y = ly + 14.0 + 16.0 * (bundle.curves.len() + k) as f64;
        let _ = writeln!(
            s,
            r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="{}" stroke="black" stroke-width="0.5"/><text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11">{}</text>"#,
            lx + 23.0,
            y - 4.0,
            PALETTE[(k + 1) % PALETTE.len()],
            lx + 44.0,
            y,
            escape_xml(&m.label)
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

fn tick_label(v: f64) -> String {
    if v == 0.0 || (1e-3..1e4).contains(&v.abs()) {
        let t = format!("{v:.3}");
        let t = t.trim_end_matches('0').trim_end_matches('.');
        if t == "-0" {
            "0".into()
        } else {
            t.to_string()
        }
    } else {
        format!("{v:.2e}")
    }
}

pub fn emit_svg(bundle: &ReportBundle, path: &Path) -> Result<()> {
    write_atomic(path, render_svg(bundle)?.as_bytes())
}
