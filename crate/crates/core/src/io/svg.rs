use std::fmt::Write as _;
use std::path::Path;

use crate::geom::{Point, PointSet};

use super::IoError;

/// Something drawn on top of the points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Overlay {
    /// Outline only (hulls, partition parts).
    Polygon(Vec<Point>),
    /// Filled translucent polygon.
    Hole(Vec<Point>),
    /// Dashed line through two points, clipped to the view.
    Line(Point, Point),
}

const FILLS: [&str; 6] = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"];

/// SVG 1.1 text of `s` with `overlays`. Output depends only on the inputs.
/// The y axis points up, as in the plane.
pub fn svg_document(s: &PointSet, overlays: &[Overlay]) -> String {
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (0i64, 1i64, 0i64, 1i64);
    if let Some(first) = s.get(0) {
        (min_x, max_x, min_y, max_y) = (first.x, first.x, first.y, first.y);
        for p in s.iter() {
            min_x = min_x.min(p.x);
            max_x = max_x.max(p.x);
            min_y = min_y.min(p.y);
            max_y = max_y.max(p.y);
        }
    }
    let span = ((max_x - min_x).max(max_y - min_y).max(1)) as f64;
    let margin = 0.05 * span;
    let (vx, vy) = (min_x as f64 - margin, -(max_y as f64) - margin);
    let (vw, vh) = ((max_x - min_x) as f64 + 2.0 * margin, (max_y - min_y) as f64 + 2.0 * margin);
    let radius = span / 150.0;
    let stroke = span / 400.0;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{vx:.3} {vy:.3} {vw:.3} {vh:.3}" width="800" height="{:.0}">"#,
        800.0 * vh / vw
    );
    let mut holes = 0;
    for overlay in overlays {
        match overlay {
            Overlay::Hole(v) | Overlay::Polygon(v) => {
                let pts: Vec<String> = v.iter().map(|p| format!("{},{}", p.x, -p.y)).collect();
                let style = if matches!(overlay, Overlay::Hole(_)) {
                    holes += 1;
                    let c = FILLS[(holes - 1) % FILLS.len()];
                    format!(r#"fill="{c}" fill-opacity="0.35" stroke="{c}""#)
                } else {
                    r##"fill="none" stroke="#555555""##.to_string()
                };
                let _ = writeln!(out, r#"  <polygon points="{}" {style} stroke-width="{stroke:.3}"/>"#, pts.join(" "));
            }
            Overlay::Line(a, b) => {
                let (dx, dy) = ((b.x - a.x) as f64, (b.y - a.y) as f64);
                let len = (dx * dx + dy * dy).sqrt().max(1.0);
                let t = 2.0 * (vw + vh) / len;
                let (x1, y1) = (a.x as f64 - t * dx, a.y as f64 - t * dy);
                let (x2, y2) = (a.x as f64 + t * dx, a.y as f64 + t * dy);
                let _ = writeln!(
                    out,
                    r##"  <line x1="{x1:.3}" y1="{:.3}" x2="{x2:.3}" y2="{:.3}" stroke="#000000" stroke-width="{stroke:.3}" stroke-dasharray="{:.3} {:.3}"/>"##,
                    -y1,
                    -y2,
                    4.0 * stroke,
                    3.0 * stroke
                );
            }
        }
    }
    for p in s.iter() {
        let _ = writeln!(out, r#"  <circle cx="{}" cy="{}" r="{radius:.3}" fill="black"/>"#, p.x, -p.y);
    }
    out.push_str("</svg>\n");
    out
}

/// Writes [`svg_document`] to `path`.
pub fn render_svg(s: &PointSet, overlays: &[Overlay], path: &Path) -> Result<(), IoError> {
    std::fs::write(path, svg_document(s, overlays))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::random_general_position;

    #[test]
    fn points_only() {
        let s = random_general_position(7, 1, 100).unwrap();
        let doc = svg_document(&s, &[]);
        assert_eq!(doc.matches("<circle").count(), 7);
        assert!(!doc.contains("<polygon"));
        assert_eq!(doc, svg_document(&s, &[]));
    }

    #[test]
    fn shaded_pair() {
        let s = random_general_position(19, 2, 1000).unwrap();
        let pair = crate::disjoint::find_two_disjoint_5holes(&s).unwrap().unwrap();
        let overlays = [
            Overlay::Hole(pair.a.vertices().to_vec()),
            Overlay::Hole(pair.b.vertices().to_vec()),
            Overlay::Line(pair.separator.from, pair.separator.to),
        ];
        let doc = svg_document(&s, &overlays);
        assert_eq!(doc.matches("fill-opacity").count(), 2);
        assert!(doc.contains("stroke-dasharray"));
    }

    #[test]
    fn unwritable_path() {
        let s = random_general_position(5, 1, 100).unwrap();
        let err = render_svg(&s, &[], Path::new("/nonexistent-dir/x.svg")).unwrap_err();
        assert!(matches!(err, IoError::Io(_)));
    }
}
