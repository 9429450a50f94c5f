//! Laurent-polynomial symbols of masks and the difference symbols used by
//! Property A.

use alloc::vec::Vec;

use super::masks::{MaskSet, MASK_MIN_OFFSET};
use crate::{Error, Result};

/// `sum_j coeffs[j] * z^(min_exp + j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPoly {
    pub min_exp: i32,
    pub coeffs: Vec<f64>,
}

fn int_pow(z: f64, e: i32) -> f64 {
    let mut acc = 1.0;
    let base = if e < 0 { 1.0 / z } else { z };
    for _ in 0..e.unsigned_abs() {
        acc *= base;
    }
    acc
}

impl LaurentPoly {
    pub fn new(min_exp: i32, coeffs: Vec<f64>) -> Self {
        LaurentPoly { min_exp, coeffs }
    }

    pub fn zero() -> Self {
        LaurentPoly::new(0, Vec::new())
    }

    fn max_exp(&self) -> i32 {
        self.min_exp + self.coeffs.len() as i32 - 1
    }

    /// `self + scale * z^shift * other`
    pub fn add_scaled_shifted(&self, other: &LaurentPoly, scale: f64, shift: i32) -> LaurentPoly {
        if other.coeffs.is_empty() {
            return self.clone();
        }
        if self.coeffs.is_empty() {
            return LaurentPoly::new(
                other.min_exp + shift,
                other.coeffs.iter().map(|c| scale * c).collect(),
            );
        }
        let lo = self.min_exp.min(other.min_exp + shift);
        let hi = self.max_exp().max(other.max_exp() + shift);
        let mut coeffs = alloc::vec![0.0; (hi - lo + 1) as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_exp - lo) as usize + j] += c;
        }
        for (j, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.min_exp + shift - lo) as usize + j] += scale * c;
        }
        LaurentPoly::new(lo, coeffs)
    }

    /// Value of the `r`-th derivative at `z`.
    pub fn eval_derivative(&self, z: f64, r: usize) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, &c)| {
                let e = self.min_exp + j as i32;
                let falling: f64 = (0..r as i32).map(|t| (e - t) as f64).product();
                c * falling * int_pow(z, e - r as i32)
            })
            .sum()
    }

    pub fn eval(&self, z: f64) -> f64 {
        self.eval_derivative(z, 0)
    }
}

/// The symbol `sum_j b_j z^j` of mask row `row`.
pub fn mask_symbol(masks: &MaskSet, row: usize) -> LaurentPoly {
    LaurentPoly::new(MASK_MIN_OFFSET, masks.rows[row].coeffs.to_vec())
}

fn binomial(m: usize, j: usize) -> f64 {
    (0..j).fold(1.0, |acc, t| acc * (m - t) as f64 / (t + 1) as f64)
}

/// `d_m(z) = sum_{j=0}^{m} (-1)^j C(m, j) z^j b^{i-j}(z)` for the row at
/// position `row` of the set (requires `row >= m`).
pub fn difference_symbol(masks: &MaskSet, row: usize, order: usize) -> LaurentPoly {
    (0..=order).fold(LaurentPoly::zero(), |acc, j| {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        acc.add_scaled_shifted(&mask_symbol(masks, row - j), sign * binomial(order, j), j as i32)
    })
}

/// One evaluation of a difference symbol derivative at `z = ±1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymbolValue {
    /// Global output index `i` of the row.
    pub output_index: usize,
    pub level: u32,
    pub order: usize,
    pub derivative: usize,
    pub z: f64,
    pub value: f64,
}

/// Evaluates `d^{i,k}_m` (derivative `r`) at `z = 1` and `z = -1` for every
/// row that has `order` predecessors in the set.
pub fn property_a_residual(masks: &MaskSet, order: usize, r: usize) -> Result<Vec<SymbolValue>> {
    if order == 0 || r >= order {
        return Err(Error::InvalidOrder {
            order,
            derivative: r,
        });
    }
    let mut out = Vec::new();
    for row in order..masks.rows.len() {
        let d = difference_symbol(masks, row, order);
        for z in [1.0, -1.0] {
            out.push(SymbolValue {
                output_index: masks.rows[row].output_index,
                level: masks.level,
                order,
                derivative: r,
                z,
                value: d.eval_derivative(z, r),
            });
        }
    }
    Ok(out)
}

/// Largest `|value|` of a residual list, `0` when empty.
pub fn max_abs(values: &[SymbolValue]) -> f64 {
    values.iter().map(|v| v.value.abs()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagnostics::masks::{masks_for_step, MaskRow, MASK_LEN};
    use crate::geometry::{Boundary, PointSequence};
    use crate::scheme::RefineConfig;
    use alloc::vec;

    #[test]
    fn laurent_eval_and_derivative() {
        // z^-1 + 2 + 3z^2
        let p = LaurentPoly::new(-1, vec![1.0, 2.0, 0.0, 3.0]);
        assert_eq!(p.eval(1.0), 6.0);
        assert_eq!(p.eval(-1.0), 4.0);
        assert_eq!(p.eval(2.0), 0.5 + 2.0 + 12.0);
        // -z^-2 + 6z
        assert_eq!(p.eval_derivative(1.0, 1), 5.0);
        assert_eq!(p.eval_derivative(-1.0, 1), -7.0);
        // 2z^-3 + 6
        assert_eq!(p.eval_derivative(1.0, 2), 8.0);
    }

    #[test]
    fn shifted_sum() {
        let p = LaurentPoly::new(0, vec![1.0, 1.0]);
        let q = p.add_scaled_shifted(&p, -1.0, 1);
        assert_eq!(q, LaurentPoly::new(0, vec![1.0, 0.0, -1.0]));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6.0);
        assert_eq!(binomial(5, 0), 1.0);
        assert_eq!(binomial(5, 5), 1.0);
    }

    fn sample_masks() -> MaskSet {
        let f = PointSequence::from_flat(
            2,
            vec![0.0, 0.0, 1.0, 0.3, 1.5, 1.4, 2.7, 1.9, 3.1, 3.5, 4.0, 3.6, 5.5, 5.0],
            Boundary::Closed,
        )
        .unwrap();
        masks_for_step(&f, 0, &RefineConfig::default().with_rho(5.0)).unwrap()
    }

    #[test]
    fn unit_row_sums_kill_symbols_at_plus_minus_one() {
        let m = sample_masks();
        for order in 1..=3 {
            let v = property_a_residual(&m, order, 0).unwrap();
            assert_eq!(v.len(), 2 * (m.rows.len() - order));
            assert!(max_abs(&v) < 1e-12);
        }
    }

    #[test]
    fn broken_row_sums_leave_residual() {
        let mut m = sample_masks();
        m.rows[3] = MaskRow {
            output_index: m.rows[3].output_index,
            coeffs: [0.2; MASK_LEN],
        };
        let v = property_a_residual(&m, 1, 0).unwrap();
        assert!(max_abs(&v) > 0.1);
    }

    #[test]
    fn invalid_orders() {
        let m = sample_masks();
        assert!(matches!(property_a_residual(&m, 0, 0), Err(Error::InvalidOrder { .. })));
        assert!(matches!(property_a_residual(&m, 2, 2), Err(Error::InvalidOrder { .. })));
        assert!(property_a_residual(&m, 2, 1).is_ok());
    }
}
