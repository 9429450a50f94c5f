use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use subdiv::io::{emit_svg, format_csv, parse_points, ParseError, Style, SvgError};
use subdiv_core::{Boundary, PointSequence};

#[test]
fn csv_points() {
    let f = parse_points(b"0,0\n1,1\n2,4\n4,16\n", Boundary::Open).unwrap();
    assert_eq!(f.len(), 4);
    assert_eq!(f.dim(), 2);
    assert_eq!(f.point(3), &[4.0, 16.0]);
}

#[test]
fn json_points() {
    let f = parse_points(b"[[0,0,0],[1,0,0],[0,1,0],[0,0,1]]", Boundary::Closed).unwrap();
    assert_eq!((f.len(), f.dim()), (4, 3));
}

#[test]
fn ragged_row_is_named() {
    let e = parse_points(b"0,0\n1,1\n2,4,5\n4,16\n", Boundary::Open).unwrap_err();
    assert_eq!(e, ParseError::Ragged { row: 3, expected: 2, got: 3 });
    assert!(e.to_string().contains("row 3"));
}

#[test]
fn rejected_inputs() {
    assert!(matches!(
        parse_points(b"0,0\n1,abc\n2,4\n4,16\n", Boundary::Open),
        Err(ParseError::NonNumeric { row: 2, column: 2, .. })
    ));
    assert!(matches!(parse_points(b"0,nan\n1,1\n2,4\n4,16\n", Boundary::Open), Err(ParseError::NonNumeric { .. })));
    assert_eq!(parse_points(b"0\n1\n2\n3\n", Boundary::Open), Err(ParseError::DimensionTooLow(1)));
    assert_eq!(parse_points(b"0,0\n1,1\n2,4\n", Boundary::Open), Err(ParseError::TooFewPoints(3)));
    assert!(matches!(parse_points(b"[[0,0],[1,1]", Boundary::Open), Err(ParseError::Json(_))));
}

#[test]
fn csv_round_trip_is_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let flat: Vec<f64> = (0..300).map(|_| rng.gen_range(-1e6..1e6) * 10f64.powi(rng.gen_range(-12..4))).collect();
    let f = PointSequence::from_flat(3, flat, Boundary::Open).unwrap();
    let back = parse_points(format_csv(&f).as_bytes(), Boundary::Open).unwrap();
    assert_eq!(back.as_flat(), f.as_flat());
}

fn svg(flat: Vec<f64>, boundary: Boundary) -> String {
    let f = PointSequence::from_flat(2, flat, boundary).unwrap();
    String::from_utf8(emit_svg(&f, &Style::default()).unwrap()).unwrap()
}

#[test]
fn two_points_draw_one_segment() {
    let s = svg(vec![0.0, 0.0, 1.0, 2.0], Boundary::Open);
    assert_eq!(s.matches("<path").count(), 1);
    assert_eq!(s.matches(" L").count(), 1);
    assert!(!s.contains('Z'));
}

#[test]
fn closed_path_ends_with_z() {
    let s = svg(vec![0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0, 1.0], Boundary::Closed);
    assert!(s.contains(" Z\""));
}

#[test]
fn view_box_has_margin_and_flips_y() {
    let s = svg(vec![0.0, 0.0, 10.0, 0.0, 10.0, 5.0], Boundary::Open);
    // 1000 x 500 drawing plus 5% of each extent on both sides
    assert!(s.contains(r#"viewBox="0 0 1100.000 550.000""#), "{s}");
    // the lowest point is drawn at the bottom
    assert!(s.contains("M 50.000,525.000"), "{s}");
}

#[test]
fn svg_output_is_deterministic() {
    let flat = vec![0.3, 0.1, 1.7, 2.2, -0.4, 5.0, 3.3, 3.3];
    assert_eq!(svg(flat.clone(), Boundary::Closed), svg(flat, Boundary::Closed));
}

#[test]
fn svg_errors() {
    let empty = PointSequence::from_flat(2, vec![], Boundary::Open).unwrap();
    assert_eq!(emit_svg(&empty, &Style::default()), Err(SvgError::Empty));
    let space = PointSequence::from_flat(3, vec![0.0; 6], Boundary::Open).unwrap();
    assert_eq!(emit_svg(&space, &Style::default()), Err(SvgError::NotPlanar(3)));
}
