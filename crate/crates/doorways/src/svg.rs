//! SVG rendering for the partition plots and feasible polygons.
//!
//! Coordinates follow the plots in the write-ups: slope on the horizontal
//! axis, intercept on the vertical, origin at the bottom left (so the
//! vertical axis is flipped relative to SVG's).

use num_traits::ToPrimitive;

use crate::hallway::FiniteHallway;
use crate::sight::{feasible_polygon, rational_line_of_sight, FeasiblePolygon, Mode, Pt};
use crate::sturmian::{arrangement_lines, partition_p};

fn f(x: f64) -> String {
    // Enough digits for crisp lines at any reasonable canvas size.
    let s = format!("{x:.4}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn num(r: &crate::numeric::BigRational) -> f64 {
    r.to_f64().expect("desk-scale coordinates fit f64")
}

impl FeasiblePolygon {
    /// The polygon as an SVG path in raw `(slope, intercept)` coordinates
    /// (empty string for an empty polygon). Callers flip and scale.
    pub fn svg_path(&self) -> String {
        svg_path(self.vertices())
    }
}

/// Closed path through the given points, in raw coordinates.
pub fn svg_path(points: &[Pt]) -> String {
    if points.is_empty() {
        return String::new();
    }
    let mut d = String::new();
    for (k, (x, y)) in points.iter().enumerate() {
        let cmd = if k == 0 { 'M' } else { 'L' };
        d.push_str(&format!("{cmd}{} {} ", f(num(x)), f(num(y))));
    }
    d.push('Z');
    d
}

/// The order-`n` cell decomposition of the parameter square as a standalone
/// SVG document: arrangement lines over the unit square, optionally with
/// shaded cells and word labels at the cell witnesses.
pub fn partition_plot(n: usize, size: u32, shade: bool, labels: bool) -> String {
    let size = size.max(64) as f64;
    let pad = size * 0.05;
    let side = size - 2.0 * pad;
    let px = |x: f64| pad + x * side;
    let py = |y: f64| pad + (1.0 - y) * side;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {s} {s}\" \
         width=\"{s}\" height=\"{s}\">\n",
        s = f(size)
    ));
    out.push_str(&format!(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\" stroke=\"none\"/>\n",
        f(px(0.0)),
        f(py(1.0)),
        f(side),
        f(side)
    ));

    let cells = if shade || labels { partition_p(n) } else { Vec::new() };
    if shade {
        let count = cells.len().max(1);
        for (k, cell) in cells.iter().enumerate() {
            let mut d = String::new();
            for (j, (x, y)) in cell.polygon.vertices().iter().enumerate() {
                let cmd = if j == 0 { 'M' } else { 'L' };
                d.push_str(&format!("{cmd}{} {} ", f(px(num(x))), f(py(num(y)))));
            }
            d.push('Z');
            let hue = k * 360 / count;
            out.push_str(&format!(
                "<path d=\"{d}\" fill=\"hsl({hue}, 65%, 88%)\" stroke=\"none\"/>\n"
            ));
        }
    }

    // Each line y = -i*x + b crosses the square from (x, y) = ((b-1)/i, 1)
    // down to (b/i, 0).
    for (i, b) in arrangement_lines(n) {
        let x1 = (b - 1) as f64 / i as f64;
        let x2 = b as f64 / i as f64;
        out.push_str(&format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#444\" stroke-width=\"1\"/>\n",
            f(px(x1)),
            f(py(1.0)),
            f(px(x2)),
            f(py(0.0))
        ));
    }

    out.push_str(&format!(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\" \
         stroke-width=\"1.5\"/>\n",
        f(px(0.0)),
        f(py(1.0)),
        f(side),
        f(side)
    ));

    if labels {
        let font = (side / 28.0).max(8.0);
        for cell in &cells {
            let text: String = cell.word.letters().iter().map(i64::to_string).collect();
            out.push_str(&format!(
                "<text x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"middle\" \
                 dominant-baseline=\"middle\" font-family=\"monospace\">{text}</text>\n",
                f(px(num(&cell.witness.0))),
                f(py(num(&cell.witness.1))),
                f(font)
            ));
        }
    }

    out.push_str("</svg>\n");
    out
}

/// The feasible polygon of a hallway as a standalone SVG document, with the
/// minimal-denominator witness line marked when one exists.
pub fn feasible_polygon_plot(h: &FiniteHallway, size: u32) -> String {
    let size = size.max(64) as f64;
    let pad = size * 0.08;
    let side = size - 2.0 * pad;
    let poly = feasible_polygon(h, Mode::Open);

    // Fit the polygon's bounding box (or a unit box when empty).
    let verts = poly.vertices();
    let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 1.0f64, 0.0f64, 1.0f64);
    if !verts.is_empty() {
        x0 = verts.iter().map(|p| num(&p.0)).fold(f64::INFINITY, f64::min);
        x1 = verts.iter().map(|p| num(&p.0)).fold(f64::NEG_INFINITY, f64::max);
        y0 = verts.iter().map(|p| num(&p.1)).fold(f64::INFINITY, f64::min);
        y1 = verts.iter().map(|p| num(&p.1)).fold(f64::NEG_INFINITY, f64::max);
    }
    let w = (x1 - x0).max(1e-6);
    let hgt = (y1 - y0).max(1e-6);
    let scale = (side / w).min(side / hgt);
    let px = |x: f64| pad + (x - x0) * scale;
    let py = |y: f64| pad + (y1 - y) * scale;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {s} {s}\" \
         width=\"{s}\" height=\"{s}\">\n",
        s = f(size)
    ));
    if !poly.is_nonempty() {
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-family=\"monospace\">\
             no line of sight</text>\n",
            f(size / 2.0),
            f(size / 2.0)
        ));
    } else {
        let mut d = String::new();
        for (j, (x, y)) in verts.iter().enumerate() {
            let cmd = if j == 0 { 'M' } else { 'L' };
            d.push_str(&format!("{cmd}{} {} ", f(px(num(x))), f(py(num(y)))));
        }
        d.push('Z');
        out.push_str(&format!(
            "<path d=\"{d}\" fill=\"hsl(210, 60%, 88%)\" stroke=\"#225\" stroke-width=\"1.5\"/>\n"
        ));
        if let Ok(wit) = rational_line_of_sight(h) {
            let (sx, sy) = (
                wit.slope.as_rational().map(num),
                wit.intercept.as_rational().map(num),
            );
            if let (Some(sx), Some(sy)) = (sx, sy) {
                out.push_str(&format!(
                    "<circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"#c22\"/>\n",
                    f(px(sx)),
                    f(py(sy))
                ));
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    #[test]
    fn paths_are_closed_and_plain() {
        let path = svg_path(&[
            (rat(0, 1), rat(0, 1)),
            (rat(1, 1), rat(0, 1)),
            (rat(1, 2), rat(1, 2)),
        ]);
        assert_eq!(path, "M0 0 L1 0 L0.5 0.5 Z");
        assert_eq!(svg_path(&[]), "");
    }

    #[test]
    fn partition_plots_have_lines_and_cells() {
        let doc = partition_plot(2, 400, true, true);
        assert!(doc.starts_with("<svg"));
        assert!(doc.ends_with("</svg>\n"));
        // Three arrangement lines for n = 2 and four shaded cells.
        assert_eq!(doc.matches("<line").count(), 3);
        assert_eq!(doc.matches("hsl(").count(), 4);
        assert_eq!(doc.matches("<text").count(), 4);
        let plain = partition_plot(2, 400, false, false);
        assert_eq!(plain.matches("hsl(").count(), 0);
    }

    #[test]
    fn polygon_plots_mark_the_witness() {
        let h = FiniteHallway::from_lefts(&[0, 0, 1]);
        let doc = feasible_polygon_plot(&h, 300);
        assert!(doc.contains("<path"));
        assert!(doc.contains("<circle"));
        let blocked = FiniteHallway::from_lefts(&[0, 0, 2]);
        let doc = feasible_polygon_plot(&blocked, 300);
        assert!(doc.contains("no line of sight"));
    }
}
