//! Point sequences, forward differences and parameter grids.
//!
//! Grids never reach the non-linear scheme. They exist so that tests and
//! experiments can describe where data was sampled and where a reproducing
//! scheme must place the refined samples.

use alloc::vec::Vec;
use core::slice::ChunksExact;

use crate::{Error, Result};

/// How the ends of a finite sequence are treated.
///
/// `Open` drops every stencil that lacks one of its four points, so a
/// refinement step maps `N` points to `2(N - 3)`. `Closed` wraps indices
/// cyclically and maps `N` points to `2N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Boundary {
    Open,
    #[default]
    Closed,
}

impl Boundary {
    pub fn as_str(self) -> &'static str {
        match self {
            Boundary::Open => "open",
            Boundary::Closed => "closed",
        }
    }
}

impl core::str::FromStr for Boundary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "open" => Ok(Boundary::Open),
            "closed" => Ok(Boundary::Closed),
            _ => Err(Error::InvalidConfig("boundary must be `open` or `closed`")),
        }
    }
}

/// A point of `R^n` with finite coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::DimensionTooLow { needed: 1, got: 0 });
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite { index: 0 });
        }
        Ok(Point(coords))
    }

    pub(crate) fn from_raw(coords: Vec<f64>) -> Self {
        Point(coords)
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }
}

/// An ordered list of points of one common dimension.
///
/// Coordinates are stored row-major in a single buffer.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSequence {
    coords: Vec<f64>,
    dim: usize,
    boundary: Boundary,
}

impl PointSequence {
    /// Builds a sequence from a flat row-major coordinate buffer.
    pub fn from_flat(dim: usize, coords: Vec<f64>, boundary: Boundary) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionTooLow { needed: 1, got: 0 });
        }
        if !coords.len().is_multiple_of(dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: coords.len() % dim,
            });
        }
        if let Some(pos) = coords.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite { index: pos / dim });
        }
        Ok(PointSequence {
            coords,
            dim,
            boundary,
        })
    }

    /// Builds a sequence from individual points, checking that the dimension
    /// is uniform.
    pub fn from_points<I, P>(points: I, boundary: Boundary) -> Result<Self>
    where
        I: IntoIterator<Item = P>,
        P: AsRef<[f64]>,
    {
        let mut coords = Vec::new();
        let mut dim = None;
        for p in points {
            let p = p.as_ref();
            match dim {
                None => dim = Some(p.len()),
                Some(d) if d != p.len() => {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        got: p.len(),
                    })
                }
                _ => {}
            }
            coords.extend_from_slice(p);
        }
        match dim {
            Some(d) => Self::from_flat(d, coords, boundary),
            None => Err(Error::TooShort { needed: 1, got: 0 }),
        }
    }

    pub(crate) fn from_raw(dim: usize, coords: Vec<f64>, boundary: Boundary) -> Self {
        debug_assert!(dim > 0 && coords.len().is_multiple_of(dim));
        PointSequence {
            coords,
            dim,
            boundary,
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn with_boundary(mut self, boundary: Boundary) -> Self {
        self.boundary = boundary;
        self
    }

    /// Coordinates of the `i`-th point. Panics when out of range.
    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    /// Point at a possibly out-of-range index, wrapped cyclically.
    pub fn point_wrapped(&self, i: isize) -> &[f64] {
        let n = self.len() as isize;
        self.point(i.rem_euclid(n) as usize)
    }

    pub fn iter(&self) -> ChunksExact<'_, f64> {
        self.coords.chunks_exact(self.dim)
    }

    pub fn as_flat(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_flat(self) -> Vec<f64> {
        self.coords
    }

    /// Applies `op` to every point, keeping the boundary mode.
    pub fn map_points<F>(&self, out_dim: usize, mut op: F) -> Result<Self>
    where
        F: FnMut(&[f64], &mut [f64]),
    {
        let mut coords = alloc::vec![0.0; self.len() * out_dim];
        for (src, dst) in self.iter().zip(coords.chunks_exact_mut(out_dim)) {
            op(src, dst);
        }
        Self::from_flat(out_dim, coords, self.boundary)
    }

    /// Largest Euclidean norm over all points.
    pub fn sup_norm(&self) -> f64 {
        self.iter().map(norm).fold(0.0, f64::max)
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    libm::sqrt(dot(a, a))
}

pub(crate) fn distance(a: &[f64], b: &[f64]) -> f64 {
    libm::sqrt(a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum())
}

pub(crate) fn sub_into(a: &[f64], b: &[f64], out: &mut [f64]) {
    for ((o, x), y) in out.iter_mut().zip(a).zip(b) {
        *o = x - y;
    }
}

/// Forward differences `f[i+1] - f[i]`.
///
/// Open sequences yield `len - 1` differences; closed ones yield `len`
/// differences, the last one wrapping back to the first point.
pub fn forward_diff(f: &PointSequence) -> Result<PointSequence> {
    let n = f.len();
    let dim = f.dim();
    let count = match f.boundary() {
        Boundary::Open if n < 2 => return Err(Error::TooShort { needed: 2, got: n }),
        Boundary::Closed if n < 1 => return Err(Error::TooShort { needed: 1, got: n }),
        Boundary::Open => n - 1,
        Boundary::Closed => n,
    };
    let mut coords = alloc::vec![0.0; count * dim];
    for (i, out) in coords.chunks_exact_mut(dim).enumerate() {
        sub_into(f.point((i + 1) % n), f.point(i), out);
    }
    Ok(PointSequence::from_raw(dim, coords, f.boundary()))
}

/// Strictly increasing sequence of real parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid(Vec<f64>);

impl Grid {
    pub fn new(xi: Vec<f64>) -> Result<Self> {
        if let Some(index) = xi.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        if let Some(index) = xi.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing { index });
        }
        Ok(Grid(xi))
    }

    /// Equispaced grid `start, start + step, ...` with `len` entries.
    pub fn uniform(start: f64, step: f64, len: usize) -> Result<Self> {
        Self::new((0..len).map(|i| start + step * i as f64).collect())
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Drops `count` entries at each end.
    pub fn trimmed(&self, count: usize) -> Result<Self> {
        if self.len() < 2 * count {
            return Err(Error::TooShort {
                needed: 2 * count,
                got: self.len(),
            });
        }
        Ok(Grid(self.0[count..self.len() - count].to_vec()))
    }
}

/// Ratios of neighbouring interval lengths of a grid.
///
/// `alpha(i) = (xi[i] - xi[i-1]) / (xi[i+1] - xi[i])` is defined for
/// `1 <= i <= len - 2` and `beta(i) = (xi[i+2] - xi[i+1]) / (xi[i+1] - xi[i])`
/// for `0 <= i <= len - 3`. Both exist at the stencil indices
/// `1 <= i <= len - 3`, which is where the four-point rules read them.
#[derive(Debug, Clone, PartialEq)]
pub struct GridRatios {
    alpha: Vec<f64>,
    beta: Vec<f64>,
}

impl GridRatios {
    /// `alpha(i)` for `i` in `1..=len-2`.
    pub fn alpha(&self, i: usize) -> Option<f64> {
        i.checked_sub(1).and_then(|j| self.alpha.get(j).copied())
    }

    /// `beta(i)` for `i` in `0..=len-3`.
    pub fn beta(&self, i: usize) -> Option<f64> {
        self.beta.get(i).copied()
    }

    /// `(alpha(i), beta(i))` when both are defined.
    pub fn stencil(&self, i: usize) -> Option<(f64, f64)> {
        Some((self.alpha(i)?, self.beta(i)?))
    }

    /// All alphas, the first entry being `alpha(1)`.
    pub fn alphas(&self) -> &[f64] {
        &self.alpha
    }

    /// All betas, the first entry being `beta(0)`.
    pub fn betas(&self) -> &[f64] {
        &self.beta
    }

    /// Stencil indices `1..=len-3` where both ratios exist.
    pub fn stencil_indices(&self) -> core::ops::Range<usize> {
        1..self.alpha.len()
    }
}

pub fn grid_ratios(g: &Grid) -> Result<GridRatios> {
    let xi = g.values();
    if xi.len() < 3 {
        return Err(Error::TooShort {
            needed: 3,
            got: xi.len(),
        });
    }
    let h: Vec<f64> = xi.windows(2).map(|w| w[1] - w[0]).collect();
    let alpha = h.windows(2).map(|w| w[0] / w[1]).collect();
    let beta = h.windows(2).map(|w| w[1] / w[0]).collect();
    Ok(GridRatios { alpha, beta })
}

/// One step of Chaikin corner cutting on a grid: every interval
/// `[xi[i], xi[i+1]]` contributes its quarter and three-quarter points.
pub fn chaikin_refine(g: &Grid) -> Result<Grid> {
    let xi = g.values();
    if xi.len() < 2 {
        return Err(Error::TooShort {
            needed: 2,
            got: xi.len(),
        });
    }
    let mut out = Vec::with_capacity(2 * (xi.len() - 1));
    for w in xi.windows(2) {
        out.push(0.75 * w[0] + 0.25 * w[1]);
        out.push(0.25 * w[0] + 0.75 * w[1]);
    }
    Grid::new(out)
}

/// `depth` successive Chaikin refinements, the stand-in for the limit
/// parametrization of the grid sequence.
pub fn chaikin_limit_grid(g: &Grid, depth: u32) -> Result<Grid> {
    let mut cur = g.clone();
    for _ in 0..depth {
        cur = chaikin_refine(&cur)?;
    }
    Ok(cur)
}
