//! Discrete curvature and arc length of polylines.

use alloc::vec::Vec;

use crate::geometry::{distance, dot, sub_into, Boundary, PointSequence};
use crate::{Error, Result};

/// Curvature of the circle through three points, `None` when two of them
/// coincide. Collinear distinct points give `0`.
pub fn menger(a: &[f64], b: &[f64], c: &[f64]) -> Option<f64> {
    let dim = a.len();
    let mut u = alloc::vec![0.0; dim];
    let mut v = alloc::vec![0.0; dim];
    sub_into(b, a, &mut u);
    sub_into(c, a, &mut v);
    let ab = distance(a, b);
    let bc = distance(b, c);
    let ca = distance(c, a);
    if ab == 0.0 || bc == 0.0 || ca == 0.0 {
        return None;
    }
    // |u|^2 |v|^2 - (u.v)^2 = (2 * area)^2
    let gram = (dot(&u, &u) * dot(&v, &v) - dot(&u, &v) * dot(&u, &v)).max(0.0);
    Some(2.0 * libm::sqrt(gram) / (ab * bc * ca))
}

/// Menger curvature at every point that has two neighbours: interior points
/// of open data, all points of closed data.
pub fn menger_curvature(poly: &PointSequence) -> Result<Vec<Option<f64>>> {
    let n = poly.len();
    if n < 3 {
        return Err(Error::TooShort { needed: 3, got: n });
    }
    let values = match poly.boundary() {
        Boundary::Open => (1..n - 1)
            .map(|i| menger(poly.point(i - 1), poly.point(i), poly.point(i + 1)))
            .collect(),
        Boundary::Closed => (0..n as isize)
            .map(|i| {
                menger(
                    poly.point_wrapped(i - 1),
                    poly.point_wrapped(i),
                    poly.point_wrapped(i + 1),
                )
            })
            .collect(),
    };
    Ok(values)
}

/// Running sums of segment lengths, starting at `0`, one entry per point.
/// The closing segment of a closed polyline is not included.
pub fn cumulative_arclength(poly: &PointSequence) -> Result<Vec<f64>> {
    if poly.is_empty() {
        return Err(Error::TooShort { needed: 1, got: 0 });
    }
    let mut acc = 0.0;
    let mut out = Vec::with_capacity(poly.len());
    out.push(0.0);
    for i in 1..poly.len() {
        acc += distance(poly.point(i - 1), poly.point(i));
        out.push(acc);
    }
    Ok(out)
}

/// Total length, including the closing segment for closed polylines.
pub fn total_length(poly: &PointSequence) -> f64 {
    let n = poly.len();
    let open: f64 = (1..n).map(|i| distance(poly.point(i - 1), poly.point(i))).sum();
    match poly.boundary() {
        Boundary::Closed if n > 1 => open + distance(poly.point(n - 1), poly.point(0)),
        _ => open,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn unit_circle_points() {
        let t: [f64; 3] = [0.3, 1.4, 2.9];
        let k = menger(
            &[libm::cos(t[0]), libm::sin(t[0])],
            &[libm::cos(t[1]), libm::sin(t[1])],
            &[libm::cos(t[2]), libm::sin(t[2])],
        )
        .unwrap();
        assert!((k - 1.0).abs() < 1e-14);
    }

    #[test]
    fn collinear_and_known_triples() {
        assert_eq!(menger(&[0.0, 0.0], &[1.0, 1.0], &[3.0, 3.0]), Some(0.0));
        let k = menger(&[0.0, 0.0], &[1.0, 1.0], &[2.0, 0.0]).unwrap();
        assert!((k - 1.0).abs() < 1e-15);
        assert_eq!(menger(&[0.0, 0.0], &[0.0, 0.0], &[2.0, 0.0]), None);
    }

    #[test]
    fn per_index_reporting() {
        let f = PointSequence::from_flat(2, vec![0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 2.0, 0.0], Boundary::Open)
            .unwrap();
        assert_eq!(menger_curvature(&f).unwrap(), vec![None, None]);
        let closed = f.with_boundary(Boundary::Closed);
        assert_eq!(menger_curvature(&closed).unwrap().len(), 4);
        let short = PointSequence::from_flat(2, vec![0.0; 4], Boundary::Open).unwrap();
        assert!(menger_curvature(&short).is_err());
    }

    #[test]
    fn square_arclength() {
        let sq = PointSequence::from_flat(2, vec![0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0, 1.0], Boundary::Closed)
            .unwrap();
        assert_eq!(cumulative_arclength(&sq).unwrap(), vec![0.0, 1.0, 2.0, 3.0]);
        assert_eq!(total_length(&sq), 4.0);
        let one = PointSequence::from_flat(3, vec![1.0, 2.0, 3.0], Boundary::Open).unwrap();
        assert_eq!(cumulative_arclength(&one).unwrap(), vec![0.0]);
    }
}
