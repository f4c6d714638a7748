//! Deterministic SVG drawings of polygons and their diagonals.

use compat_core::{IndexPair, Polygon};
use std::fmt::Write;

const SIZE: f64 = 400.0;
const MARGIN: f64 = 24.0;

/// Maps polygon coordinates into a `SIZE x SIZE` panel, y pointing up.
struct Frame {
    min_x: i64,
    max_y: i64,
    scale: f64,
    dx: f64,
}

impl Frame {
    fn fit(p: &Polygon, dx: f64) -> Self {
        let xs = p.vertices().iter().map(|v| v.x);
        let ys = p.vertices().iter().map(|v| v.y);
        let (min_x, max_x) = (xs.clone().min().unwrap(), xs.max().unwrap());
        let (min_y, max_y) = (ys.clone().min().unwrap(), ys.max().unwrap());
        let span = (max_x - min_x).max(max_y - min_y).max(1) as f64;
        Self { min_x, max_y, scale: (SIZE - 2.0 * MARGIN) / span, dx }
    }

    fn map(&self, p: &Polygon, i: usize) -> (f64, f64) {
        let v = p.at(i);
        (
            self.dx + MARGIN + (v.x - self.min_x) as f64 * self.scale,
            MARGIN + (self.max_y - v.y) as f64 * self.scale,
        )
    }
}

fn panel(out: &mut String, p: &Polygon, diagonals: &[IndexPair], dx: f64) {
    let f = Frame::fit(p, dx);
    let points: Vec<String> = (0..p.len())
        .map(|i| {
            let (x, y) = f.map(p, i);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    writeln!(out, r#"<polygon class="outline" points="{}" fill="none" stroke="black"/>"#, points.join(" ")).unwrap();
    for d in diagonals {
        let (x1, y1) = f.map(p, d.lo());
        let (x2, y2) = f.map(p, d.hi());
        writeln!(
            out,
            r#"<line class="diagonal" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="steelblue"/>"#
        )
        .unwrap();
    }
    for i in 0..p.len() {
        let (x, y) = f.map(p, i);
        writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="2.5"/>"#).unwrap();
        writeln!(out, r#"<text class="label" x="{:.2}" y="{:.2}" font-size="11">{i}</text>"#, x + 4.0, y - 4.0).unwrap();
    }
}

/// One panel per polygon, side by side, each showing the same diagonals.
pub fn render(polygons: &[&Polygon], diagonals: &[IndexPair]) -> String {
    let width = SIZE * polygons.len() as f64;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{SIZE:.0}" viewBox="0 0 {width:.0} {SIZE:.0}">"#
    )
    .unwrap();
    for (k, p) in polygons.iter().enumerate() {
        panel(&mut out, p, diagonals, k as f64 * SIZE);
    }
    out.push_str("</svg>\n");
    out
}
