//! Linear non-uniform four-point Lagrange subdivision.
//!
//! For a stencil `f[-1], f[0], f[1], f[2]` sampled at `xi[-1..=2]`, the two
//! new points are the cubic interpolant evaluated at the quarter and
//! three-quarter points of `[xi[0], xi[1]]`. The weights depend on the grid
//! only through `alpha = (xi[0] - xi[-1]) / (xi[1] - xi[0])` and
//! `beta = (xi[2] - xi[1]) / (xi[1] - xi[0])`.

use alloc::vec::Vec;

use crate::geometry::{grid_ratios, Boundary, Grid, Point, PointSequence};
use crate::{Error, Result};

/// Coefficients `(a[-1], a[0], a[1], a[2])` of one refined point. They sum to
/// one for every admissible `(alpha, beta)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StencilWeights(pub [f64; 4]);

impl StencilWeights {
    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn reversed(&self) -> Self {
        let [a, b, c, d] = self.0;
        StencilWeights([d, c, b, a])
    }

    /// Weighted combination of four points into `out`.
    pub fn combine_into(&self, f: [&[f64]; 4], out: &mut [f64]) {
        for (c, o) in out.iter_mut().enumerate() {
            *o = self.0[0] * f[0][c] + self.0[1] * f[1][c] + self.0[2] * f[2][c] + self.0[3] * f[3][c];
        }
    }
}

/// Uniform-grid rule for the first new point, in 128ths.
pub const UNIFORM_RULE_128: [f64; 4] = [-7.0, 105.0, 35.0, -5.0];

pub(crate) fn weights_unchecked(alpha: f64, beta: f64) -> [f64; 4] {
    let a_m1 = -(3.0 * (4.0 * beta + 3.0))
        / (64.0 * (alpha * alpha + alpha) * (alpha + beta + 1.0));
    let a_0 = (3.0 * (4.0 * alpha + 1.0) * (4.0 * beta + 3.0)) / (64.0 * alpha * (beta + 1.0));
    let a_1 = ((4.0 * alpha + 1.0) * (4.0 * beta + 3.0)) / (64.0 * beta * (alpha + 1.0));
    let a_2 = -(3.0 * (4.0 * alpha + 1.0))
        / (64.0 * (beta * beta + beta) * (alpha + beta + 1.0));
    [a_m1, a_0, a_1, a_2]
}

fn check_positive(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositive { name, value })
    }
}

/// Weights of the rule producing the point at the quarter of the central
/// interval.
pub fn lagrange_weights(alpha: f64, beta: f64) -> Result<StencilWeights> {
    check_positive("alpha", alpha)?;
    check_positive("beta", beta)?;
    Ok(StencilWeights(weights_unchecked(alpha, beta)))
}

/// Weights of both rules: the second is the first with arguments swapped and
/// the stencil reversed.
pub(crate) fn rule_weights(alpha: f64, beta: f64) -> (StencilWeights, StencilWeights) {
    let first = StencilWeights(weights_unchecked(alpha, beta));
    let second = StencilWeights(weights_unchecked(beta, alpha)).reversed();
    (first, second)
}

/// Both refined points of one stencil.
pub fn apply_rules(alpha: f64, beta: f64, f: [&[f64]; 4]) -> Result<(Point, Point)> {
    check_positive("alpha", alpha)?;
    check_positive("beta", beta)?;
    let dim = f[0].len();
    if let Some(bad) = f.iter().find(|p| p.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: bad.len(),
        });
    }
    let (w0, w1) = rule_weights(alpha, beta);
    let mut p0 = alloc::vec![0.0; dim];
    let mut p1 = alloc::vec![0.0; dim];
    w0.combine_into(f, &mut p0);
    w1.combine_into(f, &mut p1);
    Ok((Point::from_raw(p0), Point::from_raw(p1)))
}

/// One step of the grid-aware Lagrange scheme on open data sampled at `g`.
///
/// Stencil `i` (for `1 <= i <= len - 3`) produces output points `2(i-1)` and
/// `2(i-1) + 1`, i.e. the samples at Chaikin-refined positions `2i` and
/// `2i + 1` of `g`.
pub fn lagrange_subdivide(f: &PointSequence, g: &Grid) -> Result<PointSequence> {
    if f.boundary() != Boundary::Open {
        return Err(Error::InvalidConfig(
            "grid-based subdivision needs open data",
        ));
    }
    if f.len() != g.len() {
        return Err(Error::LengthMismatch {
            left: f.len(),
            right: g.len(),
        });
    }
    if f.len() < 4 {
        return Err(Error::TooShort {
            needed: 4,
            got: f.len(),
        });
    }
    let ratios = grid_ratios(g)?;
    let dim = f.dim();
    let mut out: Vec<f64> = Vec::with_capacity(2 * (f.len() - 3) * dim);
    let mut buf = alloc::vec![0.0; dim];
    for i in ratios.stencil_indices() {
        let (alpha, beta) = ratios.stencil(i).expect("stencil index in range");
        let stencil = [f.point(i - 1), f.point(i), f.point(i + 1), f.point(i + 2)];
        let (w0, w1) = rule_weights(alpha, beta);
        w0.combine_into(stencil, &mut buf);
        out.extend_from_slice(&buf);
        w1.combine_into(stencil, &mut buf);
        out.extend_from_slice(&buf);
    }
    Ok(PointSequence::from_raw(dim, out, Boundary::Open))
}
