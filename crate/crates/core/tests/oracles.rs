//! Frozen values and independent recomputations for the named instances.

use num_complex::Complex64;
use rzdet::construct::{construct, ConstructOptions, InterlacerSpec};
use rzdet::corpus::{self, vamos_bases, vamos_nonbases};
use rzdet::pencil::det_poly;
use rzdet::poly::io::parse_json;
use rzdet::realroots::{real_roots, DEFAULT_TOL};
use rzdet::scalar::{GaussRational, Scalar};

type Q = GaussRational;

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn vamos_matches_golden_file() {
    let frozen = parse_json(&golden("vamos.json")).unwrap();
    assert_eq!(frozen.poly, corpus::vamos().poly);
}

#[test]
fn vamos_bookkeeping() {
    let p = corpus::vamos().poly_as::<Q>();
    assert_eq!(vamos_nonbases().len(), 5);
    assert_eq!(vamos_bases().len(), 65);
    assert_eq!(p.degree(), Some(4));
    assert_eq!(p.evaluate(&vec![Q::zero(); 8]).unwrap(), Q::from_i64(65));
    assert_eq!(p.evaluate(&vec![Q::one(); 8]).unwrap(), Q::from_i64(65 * 16));
}

#[test]
fn vamos_agrees_with_direct_sum_over_bases() {
    let p = corpus::vamos().poly_as::<Q>();
    for k in 0..5i64 {
        let x: Vec<Q> = (0..8).map(|j| Q::from_ratio((j * 7 + k * 3) % 11 - 5, 1 + (j + k) % 4)).collect();
        let direct = vamos_bases()
            .iter()
            .map(|b| b.iter().fold(Q::one(), |acc, &j| acc * (x[j].clone() + Q::one())))
            .fold(Q::zero(), |acc, t| acc + t);
        assert_eq!(p.evaluate(&x).unwrap(), direct);
    }
}

#[test]
fn circle_pencil_reproduces_hand_computation() {
    let circle = corpus::circle();
    let (pencil, trace) = construct(
        &circle.poly_as::<Q>(),
        &circle.x0_as::<Q>(),
        &InterlacerSpec::default(),
        &ConstructOptions::default(),
    )
    .unwrap();
    let q = |a: i64, b: i64| Q::from_ratio(a, 1) + Q::from_ratio(b, 1) * Q::i();
    assert_eq!(pencil.matrices()[0], vec![vec![q(1, 0), q(0, 0)], vec![q(0, 0), q(1, 0)]]);
    assert_eq!(pencil.matrices()[1], vec![vec![q(0, 0), q(0, -1)], vec![q(0, 1), q(0, 0)]]);
    assert_eq!(pencil.matrices()[2], vec![vec![q(0, 0), q(-1, 0)], vec![q(-1, 0), q(0, 0)]]);
    assert_eq!(trace.kappa, Q::from_ratio(1, 2));
    assert_eq!(det_poly(&pencil).unwrap().0, circle.poly_as::<Q>());
}

#[test]
fn tv_screen_line_has_two_nonreal_roots() {
    // along x2 = x1 the restriction is 1 - 2 t^4
    let tv = corpus::tv_screen().poly_as::<Q>();
    let r = tv.restrict_to_line(&[Q::zero(), Q::zero()], &[Q::one(), Q::one()]).unwrap();
    let roots = real_roots(&r, DEFAULT_TOL).unwrap();
    assert_eq!(roots.real_count(), 2);
    assert_eq!(roots.complex_count, 2);
    let t = 0.5f64.powf(0.25);
    assert!((roots.roots[1].value - t).abs() < 1e-12);
    let f = r.convert::<Complex64>();
    assert!(f.eval_c64(Complex64::new(0.0, t)).norm() < 1e-12);
}
