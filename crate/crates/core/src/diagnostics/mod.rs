//! Numerical checks of the convergence machinery.
//!
//! A step of the scheme is a linear operator built from the data it acts on
//! ([`masks`]). Those masks approach the uniform Lagrange mask at rate
//! `2^-k`, their symbols vanish at `z = ±1` ([`symbol`]), and the step differs
//! from the uniform step by a term controlled by the differences of the data.
//! This module measures each of those quantities along a run.

pub mod curve;
pub mod masks;
pub mod symbol;

use alloc::vec::Vec;

use crate::geometry::{distance, forward_diff, PointSequence};
use crate::lagrange::rule_weights;
use crate::scheme::{refine_step, subdivide_levels, truncation_bounds, RefineConfig};
use crate::{Error, Result};

pub use curve::{cumulative_arclength, menger_curvature, total_length};
pub use masks::{masks_for_step, uniform_limit_mask, MaskRow, MaskSet};
pub use symbol::{property_a_residual, SymbolValue};

/// `sup_i ||b^{i,k} - b*||_inf` over the rows of a mask set.
pub fn asymptotic_gap(masks: &MaskSet) -> f64 {
    let reference = uniform_limit_mask();
    masks
        .rows
        .iter()
        .flat_map(|row| row.coeffs.iter().zip(&reference).map(|(b, r)| (b - r).abs()))
        .fold(0.0, f64::max)
}

fn sup_distance(a: &PointSequence, b: &PointSequence) -> f64 {
    a.iter().zip(b.iter()).map(|(p, q)| distance(p, q)).fold(0.0, f64::max)
}

/// `||S_k f - T f||_inf`, with `T` the uniform Lagrange step (`rho = 0`).
pub fn perturbation_residual(f: &PointSequence, level: u32, cfg: &RefineConfig) -> Result<f64> {
    let nonlinear = refine_step(f, level, cfg)?;
    let uniform = refine_step(f, level, &cfg.with_rho(0.0))?;
    Ok(sup_distance(&nonlinear, &uniform))
}

/// `||∇f||_inf` with the Euclidean norm on points.
pub fn grad_norm(f: &PointSequence) -> Result<f64> {
    Ok(forward_diff(f)?.sup_norm())
}

/// `||∇f^k||_inf` for `k = 0..=cfg.iterations`.
pub fn diff_decay(f0: &PointSequence, cfg: &RefineConfig) -> Result<Vec<f64>> {
    subdivide_levels(f0, cfg)?.iter().map(grad_norm).collect()
}

/// Pointwise Euclidean distances between exact samples and refined data.
pub fn reproduction_error(exact: &PointSequence, refined: &PointSequence) -> Result<Vec<f64>> {
    if exact.len() != refined.len() {
        return Err(Error::LengthMismatch {
            left: exact.len(),
            right: refined.len(),
        });
    }
    if exact.dim() != refined.dim() {
        return Err(Error::DimensionMismatch {
            expected: exact.dim(),
            got: refined.dim(),
        });
    }
    Ok(exact.iter().zip(refined.iter()).map(|(p, q)| distance(p, q)).collect())
}

/// Lipschitz constants of `(alpha - 1, beta - 1) -> (Λ0, Λ1)` weights over
/// the clamp box of one level, the input measured in the sup norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightLipschitz {
    /// Output in the sup norm, bounding the mask gap.
    pub sup: f64,
    /// Output in the l1 norm, bounding the perturbation operator.
    pub l1: f64,
}

/// Estimates [`WeightLipschitz`] on a `samples x samples` log-spaced lattice of
/// the level-`k` box, using central differences of the weights. The lattice
/// includes the corners and `(1, 1)`.
pub fn weight_lipschitz(level: u32, rho: f64, samples: usize) -> WeightLipschitz {
    let (lo, hi) = truncation_bounds(level, rho);
    if hi == lo {
        return WeightLipschitz { sup: 0.0, l1: 0.0 };
    }
    let samples = samples.max(3) | 1;
    let at = |t: usize| {
        let s = t as f64 / (samples - 1) as f64;
        libm::exp(libm::log(lo) * (1.0 - s) + libm::log(hi) * s)
    };
    let flat = |a: f64, b: f64| {
        let (w0, w1) = rule_weights(a, b);
        let mut out = [0.0; 8];
        out[..4].copy_from_slice(&w0.0);
        out[4..].copy_from_slice(&w1.0);
        out
    };
    let mut best = WeightLipschitz { sup: 0.0, l1: 0.0 };
    for ta in 0..samples {
        for tb in 0..samples {
            let (a, b) = (at(ta), at(tb));
            let h = 1e-6 * a.min(b);
            let (ap, am) = (flat(a + h, b), flat(a - h, b));
            let (bp, bm) = (flat(a, b + h), flat(a, b - h));
            let mut rows = [0.0f64; 8];
            for j in 0..8 {
                rows[j] = ((ap[j] - am[j]) / (2.0 * h)).abs() + ((bp[j] - bm[j]) / (2.0 * h)).abs();
            }
            best.sup = best.sup.max(rows.iter().copied().fold(0.0, f64::max));
            best.l1 = best.l1.max(rows[..4].iter().sum::<f64>()).max(rows[4..].iter().sum::<f64>());
        }
    }
    best
}

/// Measurements for one level of a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevelRecord {
    pub level: u32,
    /// Sup-norm distance of the level's masks to the uniform mask.
    pub mask_gap: f64,
    /// Largest `|d_1(±1)|` over the level's masks.
    pub d_a_residual: f64,
    /// Relative sup distance between the masks applied linearly and the step.
    pub quasi_residual: f64,
    /// `||S_k f - T f||_inf`.
    pub pert_residual: f64,
    /// `||∇f^k||_inf`.
    pub grad_norm: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct DiagnosticsReport {
    pub levels: Vec<LevelRecord>,
}

/// Measures every level `k = 0..cfg.iterations` of the run started at `f0`.
pub fn diagnose(f0: &PointSequence, cfg: &RefineConfig) -> Result<DiagnosticsReport> {
    let levels = subdivide_levels(f0, cfg)?;
    let mut report = DiagnosticsReport::default();
    for (k, pair) in levels.windows(2).enumerate() {
        let (f, next) = (&pair[0], &pair[1]);
        let level = k as u32;
        let masks = masks_for_step(f, level, cfg)?;
        let linear = masks.apply(f)?;
        let scale = f.sup_norm().max(f64::MIN_POSITIVE);
        report.levels.push(LevelRecord {
            level,
            mask_gap: asymptotic_gap(&masks),
            d_a_residual: symbol::max_abs(&property_a_residual(&masks, 1, 0)?),
            quasi_residual: sup_distance(&linear, next) / scale,
            pert_residual: perturbation_residual(f, level, cfg)?,
            grad_norm: grad_norm(f)?,
        });
    }
    Ok(report)
}
