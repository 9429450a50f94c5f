//! Data-dependent linear masks realizing one non-linear step.
//!
//! Output point `i` of a step is `sum_j b[i - 2j] * f[j]`. Stencil `m`
//! produces outputs `2m` and `2m + 1`; its Λ0 weights sit at the even offsets
//! `2, 0, -2, -4` (for `f[m-1], ..., f[m+2]`) and its Λ1 weights at the odd
//! offsets `3, 1, -1, -3`. Both outputs of a stencil share one mask.

use alloc::vec::Vec;

use crate::geometry::{Boundary, PointSequence};
use crate::lagrange::{rule_weights, StencilWeights};
use crate::scheme::{check_refinable, stencil_at, stencil_centres, stencil_parameters, RefineConfig};
use crate::{Error, Result};

/// Smallest mask offset.
pub const MASK_MIN_OFFSET: i32 = -4;
/// Number of mask slots, offsets `-4..=3`.
pub const MASK_LEN: usize = 8;

/// Mask coefficients indexed by `offset - MASK_MIN_OFFSET`.
pub type MaskCoeffs = [f64; MASK_LEN];

#[derive(Debug, Clone, PartialEq)]
pub struct MaskRow {
    /// Global output index `2m + l`, with `m` the stencil centre.
    pub output_index: usize,
    pub coeffs: MaskCoeffs,
}

impl MaskRow {
    pub fn coeff(&self, offset: i32) -> f64 {
        if (MASK_MIN_OFFSET..MASK_MIN_OFFSET + MASK_LEN as i32).contains(&offset) {
            self.coeffs[(offset - MASK_MIN_OFFSET) as usize]
        } else {
            0.0
        }
    }

    pub fn even_sum(&self) -> f64 {
        self.coeffs.iter().step_by(2).sum()
    }

    pub fn odd_sum(&self) -> f64 {
        self.coeffs.iter().skip(1).step_by(2).sum()
    }
}

/// Masks of one step at level `level`, in output order.
#[derive(Debug, Clone, PartialEq)]
pub struct MaskSet {
    pub level: u32,
    pub boundary: Boundary,
    /// Length of the data the masks were built from.
    pub source_len: usize,
    pub rows: Vec<MaskRow>,
}

fn place(first: StencilWeights, second: StencilWeights) -> MaskCoeffs {
    let mut coeffs = [0.0; MASK_LEN];
    for jj in 0..4 {
        // f[m - 1 + jj] sits at offset l - 2(jj - 1)
        let even = -2 * (jj as i32 - 1);
        coeffs[(even - MASK_MIN_OFFSET) as usize] = first.0[jj];
        coeffs[(even + 1 - MASK_MIN_OFFSET) as usize] = second.0[jj];
    }
    coeffs
}

/// Mask of the uniform-grid Lagrange scheme every level converges to.
pub fn uniform_limit_mask() -> MaskCoeffs {
    let (first, second) = rule_weights(1.0, 1.0);
    place(first, second)
}

pub fn masks_for_step(f: &PointSequence, level: u32, cfg: &RefineConfig) -> Result<MaskSet> {
    cfg.validate()?;
    check_refinable(f)?;
    let centres = stencil_centres(f.len(), f.boundary());
    let mut rows = Vec::with_capacity(2 * centres.len());
    for m in centres {
        let p = stencil_parameters(stencil_at(f, m), level, cfg);
        let (first, second) = rule_weights(p.alpha, p.beta);
        let coeffs = place(first, second);
        rows.push(MaskRow {
            output_index: 2 * m,
            coeffs,
        });
        rows.push(MaskRow {
            output_index: 2 * m + 1,
            coeffs,
        });
    }
    Ok(MaskSet {
        level,
        boundary: f.boundary(),
        source_len: f.len(),
        rows,
    })
}

impl MaskSet {
    /// Applies the masks as a linear operator to `g`, which must have the
    /// length and boundary of the data the masks came from.
    pub fn apply(&self, g: &PointSequence) -> Result<PointSequence> {
        if g.len() != self.source_len {
            return Err(Error::LengthMismatch {
                left: self.source_len,
                right: g.len(),
            });
        }
        let dim = g.dim();
        let n = g.len() as i64;
        let mut out = alloc::vec![0.0; self.rows.len() * dim];
        for (row, dst) in self.rows.iter().zip(out.chunks_exact_mut(dim)) {
            let i = row.output_index as i64;
            for (slot, &b) in row.coeffs.iter().enumerate() {
                let offset = slot as i64 + MASK_MIN_OFFSET as i64;
                if (i - offset).rem_euclid(2) != 0 || b == 0.0 {
                    continue;
                }
                let mut j = (i - offset) / 2;
                match self.boundary {
                    Boundary::Closed => j = j.rem_euclid(n),
                    Boundary::Open if !(0..n).contains(&j) => {
                        return Err(Error::InvalidConfig("mask reaches outside the data"))
                    }
                    Boundary::Open => {}
                }
                for (o, x) in dst.iter_mut().zip(g.point(j as usize)) {
                    *o += b * x;
                }
            }
        }
        Ok(PointSequence::from_raw(dim, out, self.boundary))
    }
}
