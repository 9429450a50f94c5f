//! Point files in, CSV and SVG out.

use std::fmt::Write as _;

use subdiv_core::{Boundary, PointSequence};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("input is not valid UTF-8")]
    Encoding,
    #[error("row {row}: expected {expected} columns, found {got}")]
    Ragged { row: usize, expected: usize, got: usize },
    #[error("row {row}, column {column}: `{cell}` is not a finite number")]
    NonNumeric { row: usize, column: usize, cell: String },
    #[error("points need at least 2 coordinates, found {0}")]
    DimensionTooLow(usize),
    #[error("at least 4 points are required, found {0}")]
    TooFewPoints(usize),
    #[error("invalid JSON: {0}")]
    Json(String),
}

/// Points need 4 entries so that at least one stencil exists.
pub const MIN_POINTS: usize = 4;

/// Parses CSV rows or a JSON array of arrays. Rows are numbered from 1.
pub fn parse_points(bytes: &[u8], boundary: Boundary) -> Result<PointSequence, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|_| ParseError::Encoding)?;
    let rows = if text.trim_start().starts_with('[') {
        json_rows(text)?
    } else {
        csv_rows(text)?
    };
    let dim = rows.first().map_or(0, Vec::len);
    for (i, r) in rows.iter().enumerate() {
        if r.len() != dim {
            return Err(ParseError::Ragged { row: i + 1, expected: dim, got: r.len() });
        }
    }
    if !rows.is_empty() && dim < 2 {
        return Err(ParseError::DimensionTooLow(dim));
    }
    if rows.len() < MIN_POINTS {
        return Err(ParseError::TooFewPoints(rows.len()));
    }
    let flat = rows.into_iter().flatten().collect();
    // dimension and finiteness are already checked
    Ok(PointSequence::from_flat(dim, flat, boundary).expect("validated rows"))
}

fn csv_rows(text: &str) -> Result<Vec<Vec<f64>>, ParseError> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, line)| {
            line.split(',')
                .enumerate()
                .map(|(j, cell)| {
                    let cell = cell.trim();
                    cell.parse::<f64>()
                        .ok()
                        .filter(|x| x.is_finite())
                        .ok_or_else(|| ParseError::NonNumeric { row: i + 1, column: j + 1, cell: cell.to_string() })
                })
                .collect()
        })
        .collect()
}

fn json_rows(text: &str) -> Result<Vec<Vec<f64>>, ParseError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let outer = value.as_array().ok_or_else(|| ParseError::Json("expected an array of arrays".into()))?;
    outer
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let row = row
                .as_array()
                .ok_or_else(|| ParseError::Json(format!("row {} is not an array", i + 1)))?;
            row.iter()
                .enumerate()
                .map(|(j, cell)| {
                    cell.as_f64().ok_or_else(|| ParseError::NonNumeric {
                        row: i + 1,
                        column: j + 1,
                        cell: cell.to_string(),
                    })
                })
                .collect()
        })
        .collect()
}

/// One point per row, 17 significant digits per coordinate.
pub fn format_csv(poly: &PointSequence) -> String {
    let mut out = String::with_capacity(poly.len() * poly.dim() * 25);
    for p in poly.iter() {
        for (j, x) in p.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            write!(out, "{x:.16e}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Keeps the coordinates of a point sequence other than `axis`.
pub fn drop_axis(poly: &PointSequence, axis: usize) -> PointSequence {
    let out_dim = poly.dim() - 1;
    poly.map_points(out_dim, |p, q| {
        let kept = p.iter().enumerate().filter(|&(j, _)| j != axis).map(|(_, x)| *x);
        for (dst, x) in q.iter_mut().zip(kept) {
            *dst = x;
        }
    })
    .expect("projection keeps finite values")
}

#[derive(Debug, Error, PartialEq)]
pub enum SvgError {
    #[error("nothing to draw")]
    Empty,
    #[error("SVG output needs 2D points, got dimension {0}")]
    NotPlanar(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Style {
    pub stroke: String,
    pub stroke_width: f64,
    /// Radius of a dot drawn at every vertex, none when zero.
    pub marker_radius: f64,
}

impl Default for Style {
    fn default() -> Self {
        Style { stroke: "#1f4e79".into(), stroke_width: 1.5, marker_radius: 0.0 }
    }
}

/// Width of the SVG canvas in user units.
const CANVAS: f64 = 1000.0;
const MARGIN: f64 = 0.05;

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
    pad_x: f64,
    pad_y: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn fit(layers: &[(&PointSequence, &Style)]) -> Frame {
        let (mut min_x, mut max_x, mut min_y, mut max_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for (poly, _) in layers {
            for p in poly.iter() {
                min_x = min_x.min(p[0]);
                max_x = max_x.max(p[0]);
                min_y = min_y.min(p[1]);
                max_y = max_y.max(p[1]);
            }
        }
        let span = (max_x - min_x).max(max_y - min_y);
        let span = if span > 0.0 { span } else { 1.0 };
        let scale = CANVAS / span;
        let (w, h) = ((max_x - min_x) * scale, (max_y - min_y) * scale);
        let (pad_x, pad_y) = (MARGIN * w.max(CANVAS * 0.01), MARGIN * h.max(CANVAS * 0.01));
        Frame { min_x, max_y, scale, pad_x, pad_y, width: w + 2.0 * pad_x, height: h + 2.0 * pad_y }
    }

    // y grows downwards in SVG
    fn map(&self, p: &[f64]) -> (f64, f64) {
        (self.pad_x + (p[0] - self.min_x) * self.scale, self.pad_y + (self.max_y - p[1]) * self.scale)
    }
}

fn path_data(frame: &Frame, poly: &PointSequence) -> String {
    let mut d = String::new();
    for (i, p) in poly.iter().enumerate() {
        let (x, y) = frame.map(p);
        let cmd = match i {
            0 => "M",
            1 => " L",
            _ => "",
        };
        write!(d, "{cmd} {x:.3},{y:.3}").unwrap();
    }
    if poly.boundary() == Boundary::Closed && poly.len() > 2 {
        d.push_str(" Z");
    }
    d
}

/// Standalone SVG with one path per layer, all sharing one fitted frame.
pub fn render_svg(layers: &[(&PointSequence, &Style)]) -> Result<String, SvgError> {
    if layers.is_empty() || layers.iter().any(|(p, _)| p.is_empty()) {
        return Err(SvgError::Empty);
    }
    if let Some((p, _)) = layers.iter().find(|(p, _)| p.dim() != 2) {
        return Err(SvgError::NotPlanar(p.dim()));
    }
    let frame = Frame::fit(layers);
    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {:.3} {:.3}" width="{:.0}" height="{:.0}">"#,
        frame.width, frame.height, frame.width, frame.height
    )
    .unwrap();
    for (poly, style) in layers {
        writeln!(
            svg,
            r#"<path d="{}" fill="none" stroke="{}" stroke-width="{}" stroke-linejoin="round"/>"#,
            path_data(&frame, poly),
            style.stroke,
            style.stroke_width
        )
        .unwrap();
        if style.marker_radius > 0.0 {
            for p in poly.iter() {
                let (x, y) = frame.map(p);
                writeln!(svg, r#"<circle cx="{x:.3}" cy="{y:.3}" r="{}" fill="{}"/>"#, style.marker_radius, style.stroke)
                    .unwrap();
            }
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Single-path SVG of a planar polyline.
pub fn emit_svg(poly: &PointSequence, style: &Style) -> Result<Vec<u8>, SvgError> {
    render_svg(&[(poly, style)]).map(String::into_bytes)
}
