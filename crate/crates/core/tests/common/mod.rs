#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use subdiv_core::geometry::{chaikin_refine, grid_ratios};
use subdiv_core::{Boundary, Grid, PointSequence};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Grid whose consecutive interval ratios are log-uniform in `[1/r, r]`.
/// Interval lengths stay in `[0.02, 1]` so the samples stay well spread.
pub fn grid_with_ratios(rng: &mut impl Rng, len: usize, r: f64) -> Grid {
    let mut xs = vec![rng.gen_range(-1.0..1.0)];
    let mut h: f64 = rng.gen_range(0.05..0.5);
    for _ in 1..len {
        xs.push(xs.last().unwrap() + h);
        let step = r.powf(rng.gen_range(-1.0..=1.0));
        h = if (0.02..=1.0).contains(&(h * step)) { h * step } else { h / step };
    }
    Grid::new(xs).unwrap()
}

/// `sum_j c[j] x^j` per coordinate.
pub fn poly(coeffs: &[Vec<f64>], x: f64) -> Vec<f64> {
    coeffs.iter().map(|c| c.iter().rev().fold(0.0, |acc, a| acc * x + a)).collect()
}

pub fn random_coeffs(rng: &mut impl Rng, dim: usize, degree: usize) -> Vec<Vec<f64>> {
    (0..dim).map(|_| (0..=degree).map(|_| rng.gen_range(-2.0..2.0)).collect()).collect()
}

pub fn sample(coeffs: &[Vec<f64>], g: &Grid) -> PointSequence {
    PointSequence::from_points(g.values().iter().map(|&x| poly(coeffs, x)), Boundary::Open).unwrap()
}

/// Grid after one open step: Chaikin refinement minus two points per end.
pub fn next_grid(g: &Grid) -> Grid {
    chaikin_refine(g).unwrap().trimmed(2).unwrap()
}

/// Largest of `alpha`, `beta` and their reciprocals over all stencils.
pub fn ratio_spread(g: &Grid) -> f64 {
    let r = grid_ratios(g).unwrap();
    r.stencil_indices()
        .map(|i| {
            let (a, b) = r.stencil(i).unwrap();
            a.max(1.0 / a).max(b).max(1.0 / b)
        })
        .fold(1.0, f64::max)
}

pub fn random_points(rng: &mut impl Rng, n: usize, dim: usize, boundary: Boundary) -> PointSequence {
    let flat = (0..n * dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
    PointSequence::from_flat(dim, flat, boundary).unwrap()
}

pub fn max_dist(a: &PointSequence, b: &PointSequence) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b.iter())
        .map(|(p, q)| p.iter().zip(q).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt())
        .fold(0.0, f64::max)
}
