//! Point files, seeded generation, JSON reports and SVG figures.

mod random;
mod report;
mod svg;

use std::fmt::Write as _;

use thiserror::Error;

use crate::geom::{validate_general_position, GeomError, Point, PointSet};

pub use random::random_general_position;
pub use report::{IndexedPoint, Payload, ReportDocument, SCHEMA_VERSION};
pub use svg::{render_svg, svg_document, Overlay};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{error} (source lines {})", join(lines))]
    Invalid { error: GeomError, lines: Vec<usize> },
    #[error("unsatisfiable: {0}")]
    Unsatisfiable(String),
    #[error("report does not match its input: {0}")]
    ReportMismatch(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn join(lines: &[usize]) -> String {
    lines.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(", ")
}

/// Parses a points file: one `x y` pair of signed integers per line, blank
/// lines and `#` comments ignored. Validation errors carry the 1-based
/// source lines of the offending points.
pub fn parse_points(text: &str) -> Result<PointSet, IoError> {
    let mut points = Vec::new();
    let mut source_lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = Vec::with_capacity(2);
        let mut rest = raw;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            fields.push((offset + start + 1, &tail[..len]));
            offset += start + len;
            rest = &tail[len..];
        }
        if fields.len() != 2 {
            let column = fields.get(2).map_or(raw.len() + 1, |f| f.0);
            return Err(IoError::Parse { line, column, message: format!("expected 2 integers, found {}", fields.len()) });
        }
        let mut coords = [0i64; 2];
        for (slot, (column, field)) in coords.iter_mut().zip(&fields) {
            *slot = field.parse().map_err(|_| IoError::Parse {
                line,
                column: *column,
                message: format!("`{field}` is not an integer"),
            })?;
        }
        points.push(Point::new(coords[0], coords[1]));
        source_lines.push(line);
    }
    validate_general_position(&points).map_err(|error| {
        let lines = match error {
            GeomError::DuplicatePoint(i, j) => vec![source_lines[i], source_lines[j]],
            GeomError::CollinearTriple(i, j, k) => vec![source_lines[i], source_lines[j], source_lines[k]],
            GeomError::CoordinateOverflow(i) => vec![source_lines[i]],
            _ => Vec::new(),
        };
        IoError::Invalid { error, lines }
    })
}

/// Canonical text form: one `x y` line per point in canonical order.
pub fn emit(s: &PointSet) -> String {
    let mut out = String::new();
    for p in s.iter() {
        let _ = writeln!(out, "{} {}", p.x, p.y);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle() {
        let s = parse_points("0 0\n4 0\n0 4\n").unwrap();
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn collinear_lines_skip_comments() {
        match parse_points("0 0\n# c\n1 1\n2 2\n0 5\n") {
            Err(IoError::Invalid { error: GeomError::CollinearTriple(..), lines }) => assert_eq!(lines, vec![1, 3, 4]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_token() {
        match parse_points("0 zero\n") {
            Err(IoError::Parse { line: 1, column: 3, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_points("1 2 3\n"), Err(IoError::Parse { line: 1, column: 5, .. })));
        assert!(matches!(parse_points("\n7\n"), Err(IoError::Parse { line: 2, .. })));
    }

    #[test]
    fn round_trip() {
        let s = random_general_position(30, 4, 1000).unwrap();
        assert_eq!(parse_points(&emit(&s)).unwrap(), s);
    }
}
