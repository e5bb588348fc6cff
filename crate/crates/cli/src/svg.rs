//! Scatter plot of a region scan. `(f0, f03)` cells are drawn at
//! `(f0, f03 - 4 f0)`.

use std::fmt::Write;

use polypair::characterize::{PairKind, Verdict};
use polypair::witness::RegionCell;

const STEP: u64 = 12;
const MARGIN: u64 = 40;

fn class(v: Verdict) -> &'static str {
    match v {
        Verdict::Polytopal => "polytopal",
        Verdict::Exceptional => "exceptional",
        Verdict::Unknown => "unknown",
        Verdict::OutOfBounds => "out",
    }
}

fn plane(kind: PairKind, c: &RegionCell) -> (u64, u64) {
    match kind {
        PairKind::F0F03 => (c.a, c.b - 4 * c.a),
        _ => (c.a, c.b),
    }
}

/// One `<circle>` per cell, classed by verdict.
pub fn scatter(kind: PairKind, cells: &[RegionCell]) -> String {
    let pts: Vec<(u64, u64)> = cells.iter().map(|c| plane(kind, c)).collect();
    let (x0, x1) = (
        pts.iter().map(|p| p.0).min().unwrap_or(0),
        pts.iter().map(|p| p.0).max().unwrap_or(0),
    );
    let (y0, y1) = (
        pts.iter().map(|p| p.1).min().unwrap_or(0),
        pts.iter().map(|p| p.1).max().unwrap_or(0),
    );
    let w = (x1 - x0) * STEP + 2 * MARGIN;
    let h = (y1 - y0) * STEP + 2 * MARGIN;
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    s.push_str(
        "<style>.polytopal{fill:#1f4e9c}.exceptional{fill:#d62728}.unknown{fill:#999999}</style>\n",
    );
    let ylabel = if kind == PairKind::F0F03 { "f03-4f0" } else { "b" };
    writeln!(
        s,
        r#"<text x="{}" y="{}" font-size="12">{}</text><text x="4" y="14" font-size="12">{ylabel}</text>"#,
        w - MARGIN,
        h - 8,
        if kind == PairKind::F0F03 { "f0" } else { "a" }
    )
    .unwrap();
    for (c, (x, y)) in cells.iter().zip(&pts) {
        let cx = MARGIN + (x - x0) * STEP;
        let cy = h - MARGIN - (y - y0) * STEP;
        writeln!(
            s,
            r#"<circle class="{}" cx="{cx}" cy="{cy}" r="4"><title>({},{})</title></circle>"#,
            class(c.status.verdict),
            c.a,
            c.b
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}
