//! The grid-free non-linear scheme.
//!
//! Each stencil `f[i-1..=i+2]` estimates its own grid ratios from the data:
//! quadratic samples satisfy `A * d[i-1] - d[i] + B * d[i+1] = 0` for the
//! differences `d`, with `(A, B)` a bijective function of `(alpha, beta)`.
//! The scheme solves for `(A, B)` in the least-squares sense, inverts the map,
//! clamps the ratios to `[(1 + rho / 2^k)^-1, 1 + rho / 2^k]` at level `k`, and
//! applies the Lagrange rules with them.

use alloc::vec::Vec;

use crate::geometry::{dot, sub_into, Boundary, PointSequence};
use crate::lagrange::rule_weights;
use crate::{Error, Result};

/// Parameters of a refinement run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefineConfig {
    /// Flexibility. Zero gives the fixed uniform Lagrange scheme.
    pub rho: f64,
    pub iterations: u32,
    pub boundary: Boundary,
    /// Relative threshold below which the Gram determinants are taken as zero.
    pub degeneracy_tol: f64,
}

impl Default for RefineConfig {
    fn default() -> Self {
        RefineConfig {
            rho: 2.0,
            iterations: 5,
            boundary: Boundary::Closed,
            degeneracy_tol: 1e-12,
        }
    }
}

impl RefineConfig {
    pub fn with_rho(mut self, rho: f64) -> Self {
        self.rho = rho;
        self
    }

    pub fn with_iterations(mut self, iterations: u32) -> Self {
        self.iterations = iterations;
        self
    }

    pub fn with_boundary(mut self, boundary: Boundary) -> Self {
        self.boundary = boundary;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !self.rho.is_finite() || self.rho < 0.0 {
            return Err(Error::InvalidConfig("rho must be non-negative"));
        }
        if !self.degeneracy_tol.is_finite() || self.degeneracy_tol < 0.0 {
            return Err(Error::InvalidConfig(
                "degeneracy tolerance must be non-negative",
            ));
        }
        Ok(())
    }
}

/// Annihilation coefficients of one stencil.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AbPair {
    pub a: f64,
    pub b: f64,
}

/// Grid ratios recovered for one stencil at refinement level `level`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaBetaPair {
    pub alpha: f64,
    pub beta: f64,
    pub level: u32,
}

/// `[(1 + rho / 2^k)^-1, 1 + rho / 2^k]`, the admissible ratio interval at
/// level `k`.
pub fn truncation_bounds(level: u32, rho: f64) -> (f64, f64) {
    let hi = 1.0 + libm::ldexp(rho, -(level.min(i32::MAX as u32) as i32));
    (1.0 / hi, hi)
}

/// Coefficient of `d_prev` in the annihilation relation, solved from the
/// 2x2 normal equations by Cramer's rule.
fn annihilation_coefficient(d_prev: &[f64], d_mid: &[f64], d_next: &[f64], tol: f64) -> f64 {
    let pp = dot(d_prev, d_prev);
    let nn = dot(d_next, d_next);
    let pn = dot(d_prev, d_next);
    let pm = dot(d_prev, d_mid);
    let nm = dot(d_next, d_mid);
    let mm = dot(d_mid, d_mid);

    let num = pm * nn - pn * nm;
    let den = pp * nn - pn * pn;

    let den_scale = pp * nn;
    let num_scale = libm::sqrt(pp * mm) * nn;
    if den.abs() <= tol * den_scale || num.abs() <= tol * num_scale {
        0.5
    } else {
        (num / den).abs()
    }
}

/// Estimates `(A, B)` from three consecutive differences.
///
/// Falls back to `A = B = 1/2` (uniform ratios) when the outer differences
/// are parallel or the numerator vanishes, relative to `tol`.
pub fn estimate_ab(d_prev: &[f64], d_mid: &[f64], d_next: &[f64], tol: f64) -> Result<AbPair> {
    let dim = d_prev.len();
    if dim < 2 {
        return Err(Error::DimensionTooLow { needed: 2, got: dim });
    }
    for d in [d_mid, d_next] {
        if d.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: d.len(),
            });
        }
    }
    Ok(AbPair {
        a: annihilation_coefficient(d_prev, d_mid, d_next, tol),
        b: annihilation_coefficient(d_next, d_mid, d_prev, tol),
    })
}

/// `(alpha, beta) -> (A, B)`, the coefficients annihilating quadratics
/// sampled on a grid with those ratios.
pub fn annihilation_coefficients(alpha: f64, beta: f64) -> AbPair {
    let s = alpha + beta + 2.0;
    AbPair {
        a: (beta + 1.0) / (alpha * s),
        b: (alpha + 1.0) / (beta * s),
    }
}

fn unclamped_ratio(a: f64, b: f64) -> f64 {
    1.0 / (a + libm::sqrt(a * (a + 1.0) * b * (b + 1.0)) / (b + 1.0))
}

fn clamp_ratio(x: f64, lo: f64, hi: f64) -> f64 {
    lo.max(hi.min(x))
}

/// Inverse of [`annihilation_coefficients`], truncated to the level-`k`
/// interval.
pub fn recover_alpha_beta(ab: AbPair, level: u32, rho: f64) -> Result<AlphaBetaPair> {
    if ab.a.is_nan() || ab.a <= 0.0 {
        return Err(Error::NonPositive {
            name: "A",
            value: ab.a,
        });
    }
    if ab.b.is_nan() || ab.b <= 0.0 {
        return Err(Error::NonPositive {
            name: "B",
            value: ab.b,
        });
    }
    Ok(recover_unchecked(ab, level, rho))
}

fn recover_unchecked(ab: AbPair, level: u32, rho: f64) -> AlphaBetaPair {
    let (lo, hi) = truncation_bounds(level, rho);
    AlphaBetaPair {
        alpha: clamp_ratio(unclamped_ratio(ab.a, ab.b), lo, hi),
        beta: clamp_ratio(unclamped_ratio(ab.b, ab.a), lo, hi),
        level,
    }
}

/// Recovered ratios of the stencil `f[-1], f[0], f[1], f[2]`.
pub fn stencil_parameters(f: [&[f64]; 4], level: u32, cfg: &RefineConfig) -> AlphaBetaPair {
    let dim = f[0].len();
    let mut d = alloc::vec![0.0; 3 * dim];
    let (d_prev, rest) = d.split_at_mut(dim);
    let (d_mid, d_next) = rest.split_at_mut(dim);
    sub_into(f[1], f[0], d_prev);
    sub_into(f[2], f[1], d_mid);
    sub_into(f[3], f[2], d_next);
    let ab = AbPair {
        a: annihilation_coefficient(d_prev, d_mid, d_next, cfg.degeneracy_tol),
        b: annihilation_coefficient(d_next, d_mid, d_prev, cfg.degeneracy_tol),
    };
    recover_unchecked(ab, level, cfg.rho)
}

/// Stencil centres visited by one step: `1..=n-3` for open data, `0..n` for
/// closed data.
pub(crate) fn stencil_centres(n: usize, boundary: Boundary) -> core::ops::Range<usize> {
    match boundary {
        Boundary::Open => 1..n.saturating_sub(2).max(1),
        Boundary::Closed => 0..n,
    }
}

pub(crate) fn stencil_at(f: &PointSequence, centre: usize) -> [&[f64]; 4] {
    let c = centre as isize;
    match f.boundary() {
        Boundary::Open => [
            f.point(centre - 1),
            f.point(centre),
            f.point(centre + 1),
            f.point(centre + 2),
        ],
        Boundary::Closed => [
            f.point_wrapped(c - 1),
            f.point_wrapped(c),
            f.point_wrapped(c + 1),
            f.point_wrapped(c + 2),
        ],
    }
}

pub(crate) fn check_refinable(f: &PointSequence) -> Result<()> {
    if f.dim() < 2 {
        return Err(Error::DimensionTooLow {
            needed: 2,
            got: f.dim(),
        });
    }
    if f.len() < 4 {
        return Err(Error::TooShort {
            needed: 4,
            got: f.len(),
        });
    }
    Ok(())
}

/// One refinement step at level `k`. The boundary mode is taken from `f`.
pub fn refine_step(f: &PointSequence, level: u32, cfg: &RefineConfig) -> Result<PointSequence> {
    cfg.validate()?;
    check_refinable(f)?;
    let dim = f.dim();
    let centres = stencil_centres(f.len(), f.boundary());
    let mut out: Vec<f64> = Vec::with_capacity(2 * centres.len() * dim);
    let mut buf = alloc::vec![0.0; dim];
    for centre in centres {
        let stencil = stencil_at(f, centre);
        let p = stencil_parameters(stencil, level, cfg);
        let (w0, w1) = rule_weights(p.alpha, p.beta);
        w0.combine_into(stencil, &mut buf);
        out.extend_from_slice(&buf);
        w1.combine_into(stencil, &mut buf);
        out.extend_from_slice(&buf);
    }
    Ok(PointSequence::from_raw(dim, out, f.boundary()))
}

/// Every iterate `f^0, ..., f^K` of a run with `K = cfg.iterations`.
pub fn subdivide_levels(f0: &PointSequence, cfg: &RefineConfig) -> Result<Vec<PointSequence>> {
    cfg.validate()?;
    let mut levels = Vec::with_capacity(cfg.iterations as usize + 1);
    let mut cur = f0.clone().with_boundary(cfg.boundary);
    for k in 0..cfg.iterations {
        if cur.len() < 4 && cur.boundary() == Boundary::Open && k > 0 {
            return Err(Error::Exhausted {
                iteration: k,
                points: cur.len(),
            });
        }
        let next = refine_step(&cur, k, cfg)?;
        levels.push(cur);
        cur = next;
    }
    levels.push(cur);
    Ok(levels)
}

/// Runs `cfg.iterations` steps on `f0` using `cfg.boundary`.
pub fn subdivide(f0: &PointSequence, cfg: &RefineConfig) -> Result<PointSequence> {
    cfg.validate()?;
    let mut cur = f0.clone().with_boundary(cfg.boundary);
    for k in 0..cfg.iterations {
        if cur.len() < 4 && cur.boundary() == Boundary::Open && k > 0 {
            return Err(Error::Exhausted {
                iteration: k,
                points: cur.len(),
            });
        }
        cur = refine_step(&cur, k, cfg)?;
    }
    Ok(cur)
}
