use super::*;
use crate::pencil::det_poly;
use crate::scalar::GaussRational as Q;
use num_complex::Complex64;
use rand::Rng;

fn q(n: i64) -> Q {
    Q::from_i64(n)
}

fn circle<S: Scalar>() -> Polynomial<S> {
    Polynomial::from_terms(
        2,
        vec![
            (vec![0, 0], S::one()),
            (vec![2, 0], -S::one()),
            (vec![0, 2], -S::one()),
        ],
    )
    .unwrap()
}

fn form(terms: Vec<(Vec<u32>, Q)>, degree: u32) -> HomogeneousPolynomial<Q> {
    HomogeneousPolynomial::new(Polynomial::from_terms(3, terms).unwrap(), degree).unwrap()
}

fn lin(a: Q, b: Q, c: Q) -> Polynomial<Q> {
    Polynomial::linear(Q::zero(), &[a, b, c])
}

/// `det(I + x1 B1 + x2 B2)` for random hermitian `B1, B2` of size `n`.
fn random_hermitian_det(n: usize, seed: u64) -> Polynomial<Complex64> {
    let mut rng = stream(seed, 0);
    let mut mats = vec![crate::linalg::identity::<Complex64>(n)];
    for _ in 0..2 {
        let mut b = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        for i in 0..n {
            b[i][i] = Complex64::new(rng.random_range(-1.0..1.0), 0.0);
            for j in i + 1..n {
                let z = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
                b[i][j] = z;
                b[j][i] = z.conj();
            }
        }
        mats.push(b);
    }
    det_poly(&MatrixPencil::new(mats).unwrap()).unwrap().0.real_part()
}

#[test]
fn circle_divisor_points() {
    let p = HomogeneousPolynomial::homogenize(&circle::<Q>(), 2).unwrap();
    let qf = form(vec![(vec![1, 0, 0], q(2))], 1);
    let div = intersection_divisor(&p, &qf, 3).unwrap();
    assert_eq!(div.degree(), 2);
    assert_eq!(div.pair_count(), 1);
    let i_pt = ProjectivePoint::new(vec![q(0), q(1), Q::i()]).unwrap();
    assert!(div.points.iter().any(|d| d.point == i_pt && d.multiplicity == 1));
    assert!(div.points.iter().any(|d| d.point == i_pt.conj()));
}

#[test]
fn circle_hand_trace() {
    let p = HomogeneousPolynomial::homogenize(&circle::<Q>(), 2).unwrap();
    let qf = form(vec![(vec![1, 0, 0], q(2))], 1);
    let i_pt = ProjectivePoint::new(vec![q(0), q(1), Q::i()]).unwrap();
    let half = Divisor {
        points: vec![DivisorPoint {
            point: i_pt,
            multiplicity: 1,
            partner: None,
        }],
    };
    let basis = vanishing_basis(&p, &half).unwrap();
    let cols = rotate_basis(&basis, &qf).unwrap();
    let v = fill_matrix(&p, &cols).unwrap();
    let half_q = Q::from_ratio(1, 2);
    assert_eq!(*v.get(0, 0), lin(q(2), q(0), q(0)));
    assert_eq!(*v.get(0, 1), lin(q(0), Q::i(), q(1)));
    assert_eq!(*v.get(1, 0), lin(q(0), -Q::i(), q(1)));
    assert_eq!(*v.get(1, 1), lin(half_q.clone(), q(0), q(0)));
    let ex = extract_pencil(&v, &p).unwrap();
    assert_eq!(ex.c, q(1));
    assert_eq!(ex.u[0], vec![vec![half_q.clone(), q(0)], vec![q(0), q(2)]]);
    let norm = normalize_at_basepoint(&ex.u, &[q(1), q(0), q(0)], 1e-9).unwrap();
    assert_eq!(norm.sign, 1);
    assert_eq!(norm.mats[0], crate::linalg::identity::<Q>(2));
    assert_eq!(norm.mats[1], vec![vec![q(0), -Q::i()], vec![Q::i(), q(0)]]);
    assert_eq!(norm.mats[2], vec![vec![q(0), q(-1)], vec![q(-1), q(0)]]);
}

#[test]
fn circle_end_to_end_exact() {
    let (pencil, trace) =
        construct(&circle::<Q>(), &[q(0), q(0)], &InterlacerSpec::default(), &ConstructOptions::default()).unwrap();
    assert_eq!(pencil.size(), 2);
    assert_eq!(pencil.matrices()[0], crate::linalg::identity::<Q>(2));
    let a1 = vec![vec![q(0), -Q::i()], vec![Q::i(), q(0)]];
    let a1c: Vec<Vec<Q>> = a1.iter().map(|r| r.iter().map(|v| v.conj()).collect()).collect();
    assert!(pencil.matrices()[1] == a1 || pencil.matrices()[1] == a1c);
    assert_eq!(pencil.matrices()[2], vec![vec![q(0), q(-1)], vec![q(-1), q(0)]]);
    assert_eq!(trace.residuals.det_exact, Some(true));
    assert_eq!(trace.residuals.minor_residual, 0.0);
    assert_eq!(trace.kappa, Q::from_ratio(1, 2));
    let js = trace.to_json();
    assert_eq!(js["stages"]["c"]["re"], "1");
    assert_eq!(serde_json::to_string(&js).unwrap(), serde_json::to_string(&trace.to_json()).unwrap());
}

#[test]
fn conic_with_contact_interlacer() {
    let p = HomogeneousPolynomial::homogenize(&circle::<Q>(), 2).unwrap();
    // x1 = 1 is tangent at (1, 0)
    let tangent = form(vec![(vec![1, 0, 0], q(1)), (vec![0, 1, 0], q(-1))], 1);
    let div = intersection_divisor(&p, &tangent, 5).unwrap();
    assert_eq!(div.points.len(), 1);
    assert_eq!(div.points[0].multiplicity, 2);
    let (d, dt) = split_divisor(&div, 0).unwrap();
    assert_eq!(d.degree(), 1);
    assert_eq!(d, dt);
}

#[test]
fn secant_interlacer_has_odd_real_points() {
    let p = HomogeneousPolynomial::homogenize(&circle::<Q>(), 2).unwrap();
    // x1 = 3/5 cuts the circle at (3/5, ±4/5)
    let secant = form(vec![(vec![1, 0, 0], q(3)), (vec![0, 1, 0], q(-5))], 1);
    let err = construct(
        &circle::<Q>(),
        &[q(0), q(0)],
        &InterlacerSpec::Explicit(secant.clone()),
        &ConstructOptions::default(),
    )
    .unwrap_err();
    match err {
        Error::Stage { stage, source, .. } => {
            assert_eq!(stage, "split-divisor");
            assert_eq!(*source, Error::OddRealMultiplicity(1));
        }
        e => panic!("{e:?}"),
    }
    assert_eq!(intersection_divisor(&p, &secant, 0).unwrap().degree(), 2);
}

#[test]
fn outside_line_interlaces() {
    // x1 = 5/4 misses the disk, so it interlaces as well
    let outside = form(vec![(vec![1, 0, 0], q(5)), (vec![0, 1, 0], q(-4))], 1);
    let (pencil, trace) = construct(
        &circle::<Q>(),
        &[q(0), q(0)],
        &InterlacerSpec::Explicit(outside),
        &ConstructOptions::default(),
    )
    .unwrap();
    assert_eq!(trace.residuals.det_exact, Some(true));
    assert_eq!(pencil.matrices()[0], crate::linalg::identity::<Q>(2));
}

#[test]
fn small_inner_conic_gives_indefinite_basepoint() {
    let p = random_hermitian_det(3, 7);
    let eps = 0.05;
    let small = HomogeneousPolynomial::new(
        Polynomial::from_terms(
            3,
            vec![
                (vec![2, 0, 0], Complex64::new(eps * eps, 0.0)),
                (vec![0, 2, 0], Complex64::new(-1.0, 0.0)),
                (vec![0, 0, 2], Complex64::new(-1.0, 0.0)),
            ],
        )
        .unwrap(),
        2,
    )
    .unwrap();
    let x0 = [Complex64::new(0.0, 0.0); 2];
    let err = construct(&p, &x0, &InterlacerSpec::Explicit(small.clone()), &ConstructOptions::default()).unwrap_err();
    match err {
        Error::Stage { stage, source, .. } => {
            assert_eq!(stage, "normalize");
            assert_eq!(*source, Error::IndefiniteBasePoint);
        }
        e => panic!("{e:?}"),
    }
    let hp = HomogeneousPolynomial::homogenize(&p, 3).unwrap();
    let raw = construct_raw(&hp, &small, 0, 5).unwrap();
    let (def, _) = raw.u_pencil().unwrap().definiteness_at(&x0, 1e-9).unwrap();
    assert_eq!(def, crate::pencil::Definiteness::Indefinite);
}

#[test]
fn tv_screen_fails_precondition() {
    let tv = Polynomial::from_terms(
        2,
        vec![(vec![0, 0], q(1)), (vec![4, 0], q(-1)), (vec![0, 4], q(-1))],
    )
    .unwrap();
    match construct(&tv, &[q(0), q(0)], &InterlacerSpec::default(), &ConstructOptions::default()).unwrap_err() {
        Error::Stage { stage, source, .. } => {
            assert_eq!(stage, "precondition");
            assert!(matches!(*source, Error::NotRealZero(_)));
        }
        e => panic!("{e:?}"),
    }
}

#[test]
fn reducible_curve_is_singular() {
    let xy = form(vec![(vec![1, 1, 0], q(1))], 2);
    assert!(matches!(check_smooth(&xy, 0), Err(Error::SingularCurve(_))));
    let two_lines = Polynomial::from_terms(2, vec![(vec![0, 0], q(1)), (vec![2, 0], q(-1))]).unwrap();
    match construct(&two_lines, &[q(0), q(0)], &InterlacerSpec::default(), &ConstructOptions::default()).unwrap_err() {
        Error::Stage { stage, source, .. } => {
            assert_eq!(stage, "smoothness");
            assert!(matches!(*source, Error::SingularCurve(_)));
        }
        e => panic!("{e:?}"),
    }
}

#[test]
fn smooth_conic_and_cusp() {
    let p = HomogeneousPolynomial::homogenize(&circle::<Q>(), 2).unwrap();
    check_smooth(&p, 0).unwrap();
    check_smooth(&p.convert::<Complex64>(), 0).unwrap();
    // X0 X2^2 = X1^3 has a cusp at [1,0,0]
    let cusp = form(vec![(vec![1, 0, 2], q(1)), (vec![0, 3, 0], q(-1))], 3);
    assert!(check_smooth(&cusp, 0).is_err());
    assert!(check_smooth(&cusp.convert::<Complex64>(), 0).is_err());
}

#[test]
fn float_cubic_round_trip() {
    let p = random_hermitian_det(3, 7);
    let x0 = [Complex64::new(0.0, 0.0); 2];
    let hp = HomogeneousPolynomial::homogenize(&p, 3).unwrap();
    let (qf, _) = hp.directional_derivative(&[Complex64::new(1.0, 0.0), x0[0], x0[1]]).unwrap();
    let div = intersection_divisor(&hp, &qf, 1).unwrap();
    assert_eq!(div.degree(), 6);
    assert_eq!(div.real_points().count(), 0);
    let (pencil, trace) = construct(&p, &x0, &InterlacerSpec::default(), &ConstructOptions::default()).unwrap();
    assert_eq!(pencil.size(), 3);
    assert!(trace.residuals.det_residual < 1e-6, "{:?}", trace.residuals);
    assert!(trace.residuals.rank_one_residual < 1e-6);
}

#[test]
fn splits_give_same_determinant() {
    let p = random_hermitian_det(3, 11);
    let x0 = [Complex64::new(0.0, 0.0); 2];
    let mut dets = Vec::new();
    for seed in [1, 2, 3] {
        let opts = ConstructOptions { seed, ..Default::default() };
        let (pencil, _) = construct(&p, &x0, &InterlacerSpec::default(), &opts).unwrap();
        dets.push(det_poly(&pencil).unwrap().0);
    }
    for d in &dets[1..] {
        let diff = d - &dets[0];
        assert!(diff.max_coeff() < 1e-6, "{diff:?}");
    }
}

#[test]
fn linear_polynomial_is_one_by_one() {
    let p = Polynomial::from_terms(2, vec![(vec![0, 0], q(2)), (vec![1, 0], q(1))]).unwrap();
    let (pencil, _) = construct(&p, &[q(0), q(0)], &InterlacerSpec::default(), &ConstructOptions::default()).unwrap();
    assert_eq!(pencil.matrices()[1], vec![vec![Q::from_ratio(1, 2)]]);
}

#[test]
fn random_hermitian_family() {
    for n in [3usize, 4, 5] {
        for seed in 0..6 {
            let p = random_hermitian_det(n, 100 + seed);
            let x0 = [Complex64::new(0.0, 0.0); 2];
            let (pencil, t) = construct(&p, &x0, &InterlacerSpec::default(), &ConstructOptions::default())
                .unwrap_or_else(|e| panic!("n={n} seed={seed}: {e}"));
            assert_eq!(pencil.size(), n);
            assert!(t.residuals.det_residual < 1e-6, "n={n} seed={seed}: {:?}", t.residuals);
        }
    }
}
