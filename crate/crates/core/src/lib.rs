//! Grid-free, non-linear, non-stationary subdivision of curves in `R^n`.
//!
//! The refinement rules are four-point Lagrange rules whose grid ratios are
//! estimated from the data itself through an annihilation operator for
//! quadratics. Data sampled from a quadratic `F: R -> R^n` (not confined to a
//! line) on a non-uniform grid is refined into samples of `F` on the
//! Chaikin-refined grid, without the grid ever being supplied.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! - [`geometry`]: point sequences, differences, grids and Chaikin grid refinement.
//! - [`lagrange`]: the linear non-uniform four-point Lagrange scheme.
//! - [`scheme`]: the non-linear scheme built on top of it.
//! - [`diagnostics`]: quasilinear masks, symbol checks, perturbation and
//!   convergence measurements, curvature and arc length.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod diagnostics;
mod error;
pub mod geometry;
pub mod lagrange;
pub mod scheme;

pub use error::{Error, Result};
pub use geometry::{Boundary, Grid, GridRatios, Point, PointSequence};
pub use lagrange::StencilWeights;
pub use scheme::{AbPair, AlphaBetaPair, RefineConfig};
