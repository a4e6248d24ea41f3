//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test --release --test acceptance`.

use std::time::{Duration, Instant};

use num_complex::Complex64;
use rzdet::construct::{construct, construct_raw, ConstructOptions, InterlacerSpec};
use rzdet::corpus::{self, Instance};
use rzdet::interlace::{interlaces_sampled, psd_interlacing_check};
use rzdet::linalg::hermitian_eigenvalues;
use rzdet::pencil::{
    cauchy_cross_check, derdet_check, det_poly, pairing_check, realify, verify_lmi, Definiteness, MatrixPencil,
    SymmetryClass,
};
use rzdet::poly::{HomogeneousPolynomial, PolyMatrix, Polynomial};
use rzdet::report::Status;
use rzdet::rz::{hermite_matrix, hermite_psd_check, is_rz_sampled, MembershipOracle, RzStatus};
use rzdet::sampling::{stream, unit_sphere};
use rzdet::scalar::{CoeffMode, GaussRational, Scalar};

use rand::Rng;

type Q = GaussRational;
type C = Complex64;

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict { ok, detail: detail.into() }
}

fn c(re: f64) -> C {
    C::new(re, 0.0)
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn homogenize<S: Scalar>(p: &Polynomial<S>) -> HomogeneousPolynomial<S> {
    HomogeneousPolynomial::homogenize(p, p.degree().unwrap_or(0)).unwrap()
}

fn base<S: Scalar>(x0: &[S]) -> Vec<S> {
    std::iter::once(S::one()).chain(x0.iter().cloned()).collect()
}

fn directional<S: Scalar>(p: &Polynomial<S>, y: &[S]) -> HomogeneousPolynomial<S> {
    homogenize(p).directional_derivative(&base(y)).unwrap().0
}

// 1. exact circle
fn circle_end_to_end() -> Verdict {
    let start = Instant::now();
    let circle = corpus::circle();
    let p = circle.poly_as::<Q>();
    let x0 = circle.x0_as::<Q>();
    let (pencil, _) = match construct(&p, &x0, &InterlacerSpec::default(), &ConstructOptions::default()) {
        Ok(r) => r,
        Err(e) => return verdict(false, format!("construct failed: {e}")),
    };
    let elapsed = start.elapsed();
    let a0_identity = pencil.matrices()[0] == rzdet::linalg::identity::<Q>(2);
    let hermitian = pencil.size() == 2;
    let det_exact = det_poly(&pencil).map(|(d, _)| d == p).unwrap_or(false);
    verdict(
        a0_identity && hermitian && det_exact && elapsed < Duration::from_secs(1),
        format!("2x2 pencil, A0 = I exactly: {a0_identity}, det == p exactly: {det_exact}, runtime {}", secs(elapsed)),
    )
}

// 2. round trip on generated ground truth
fn round_trip() -> Verdict {
    let mut failures = Vec::new();
    let mut worst_det: f64 = 0.0;
    let mut worst_id: f64 = 0.0;
    let mut slowest = Duration::ZERO;
    let mut retries = 0;
    for seed in 0..50u64 {
        let m = 2 + (seed % 3) as usize;
        let start = Instant::now();
        let inst = corpus::random_rz(m, seed, CoeffMode::Float).unwrap();
        let p = inst.poly_as::<C>();
        let x0 = inst.x0_as::<C>();
        let opts = ConstructOptions { seed, ..ConstructOptions::default() };
        match construct(&p, &x0, &InterlacerSpec::default(), &opts) {
            Ok((pencil, trace)) => {
                retries += trace.attempts - 1;
                let report = verify_lmi(&pencil, &p, &x0, 1e-9, 200, seed).unwrap();
                worst_det = worst_det.max(report.det_residual);
                worst_id = worst_id.max(report.basepoint_identity_error);
                if !(report.passed()
                    && report.cofactor_is_one()
                    && report.det_residual <= 1e-6
                    && report.basepoint_identity_error <= 1e-8)
                {
                    failures.push(format!("{} verify {:?}", inst.name, report.status));
                }
            }
            Err(e) => failures.push(format!("{}: {e}", inst.name)),
        }
        let t = start.elapsed();
        slowest = slowest.max(t);
        if t > Duration::from_secs(10) {
            failures.push(format!("{} took {}", inst.name, secs(t)));
        }
    }
    verdict(
        failures.is_empty(),
        format!(
            "50 instances m in {{2,3,4}}: max det residual {worst_det:.1e}, max |A(x0) - I| {worst_id:.1e}, \
             {retries} retries, slowest {}{}",
            secs(slowest),
            if failures.is_empty() { String::new() } else { format!("; failures: {failures:?}") }
        ),
    )
}

// 3. RZ classification of the named polynomials
fn rz_classification() -> Verdict {
    let mut parts = Vec::new();
    let mut ok = true;
    let mut cases: Vec<(Instance, usize, RzStatus)> = vec![
        (corpus::circle(), 200, RzStatus::RzConfirmedSampled),
        (corpus::tv_screen(), 200, RzStatus::NotRz),
        (corpus::vamos(), 500, RzStatus::RzConfirmedSampled),
    ];
    for d in 2..=6 {
        cases.push((corpus::bad_quadratic(d).unwrap(), 200, RzStatus::RzConfirmedSampled));
    }
    for (inst, lines, want) in cases {
        let start = Instant::now();
        let v = is_rz_sampled(&inst.poly_as::<Q>(), &inst.x0_as::<Q>(), lines, 1e-9, 0).unwrap();
        let t = start.elapsed();
        let witness_ok = want != RzStatus::NotRz || v.witness.as_ref().is_some_and(|w| w.complex_roots > 0);
        let good = v.status == want && witness_ok && t < Duration::from_secs(5);
        ok &= good;
        parts.push(format!("{} {:?} ({})", inst.name, v.status, secs(t)));
    }
    verdict(ok, parts.join(", "))
}

/// `p + 10 (x1² + … + xd²)^k` with `2k ≥ deg p`: nonreal roots on most lines.
fn perturbed(p: &Polynomial<C>) -> Polynomial<C> {
    let d = p.nvars();
    let k = p.degree().unwrap().div_ceil(2);
    let mut sq = Polynomial::zero(d);
    for i in 0..d {
        sq = &sq + &Polynomial::var(d, i).pow(2);
    }
    p + &sq.pow(k).scale(&c(10.0))
}

fn rz_family() -> Vec<(String, Polynomial<C>, Vec<C>)> {
    let mut out = Vec::new();
    for inst in [corpus::circle(), corpus::bad_quadratic(2).unwrap(), corpus::bad_quadratic(3).unwrap()] {
        out.push((inst.name.clone(), inst.poly_as::<C>(), inst.x0_as::<C>()));
    }
    let mut seed = 0;
    while out.len() < 25 {
        let m = 2 + (seed % 3) as usize;
        let mode = if seed % 2 == 0 { CoeffMode::Float } else { CoeffMode::Rational };
        let inst = corpus::random_rz(m, 100 + seed, mode).unwrap();
        out.push((inst.name.clone(), inst.poly_as::<C>(), inst.x0_as::<C>()));
        seed += 1;
    }
    out
}

// 4. Hermite and sampled RZ agree
fn hermite_agreement() -> Verdict {
    let mut instances = rz_family();
    let negatives: Vec<_> = instances
        .iter()
        .map(|(n, p, x0)| (format!("{n}-perturbed"), perturbed(p), x0.clone()))
        .collect();
    instances.extend(negatives);
    let mut disagreements = Vec::new();
    let mut rz = 0;
    for (name, p, x0) in &instances {
        let v = is_rz_sampled(p, x0, 200, 1e-9, 0).unwrap();
        let h = hermite_psd_check(&hermite_matrix(p, x0).unwrap(), 200, 1e-9, 0);
        if v.status == RzStatus::RzConfirmedSampled {
            rz += 1;
        }
        if v.status.status() != h.status {
            disagreements.push(format!("{name}: lines {:?}, hermite {:?}", v.status, h.status));
        }
    }
    let circle = corpus::circle();
    let h = hermite_matrix(&circle.poly_as::<Q>(), &circle.x0_as::<Q>()).unwrap();
    let two = Q::from_i64(2);
    let closed = PolyMatrix::from_rows(vec![
        vec![Polynomial::constant(2, two.clone()), Polynomial::zero(2)],
        vec![
            Polynomial::zero(2),
            &Polynomial::var(2, 0).pow(2).scale(&two) + &Polynomial::var(2, 1).pow(2).scale(&two),
        ],
    ])
    .unwrap();
    let closed_ok = h.matrix == closed;
    verdict(
        disagreements.is_empty() && closed_ok && instances.len() == 50,
        format!(
            "{} instances ({rz} RZ, {} not): {} disagreements; circle Hermite matrix == [[2,0],[0,2(x1^2+x2^2)]]: {closed_ok}{}",
            instances.len(),
            instances.len() - rz,
            disagreements.len(),
            if disagreements.is_empty() { String::new() } else { format!(" {disagreements:?}") }
        ),
    )
}

/// A point with `p < 0`: outside the hyperbolicity cone and its negative.
fn outside_point(p: &Polynomial<C>, x0: &[C], seed: u64) -> Vec<C> {
    let mut rng = stream(seed, 77);
    loop {
        let u = unit_sphere(&mut rng, x0.len());
        let r = rng.random_range(0.5..8.0);
        let y: Vec<C> = x0.iter().zip(&u).map(|(a, b)| c(a.re + r * b)).collect();
        if p.eval_c64(&y).re < -1e-3 {
            return y;
        }
    }
}

// 5. interlacing suite
fn interlacing_suite() -> Verdict {
    let mut positives: Vec<(String, Polynomial<C>, Vec<C>)> = rz_family().into_iter().take(23).collect();
    let vamos = corpus::vamos();
    positives.push((vamos.name.clone(), vamos.poly_as(), vamos.x0_as()));
    let bq = corpus::bad_quadratic(6).unwrap();
    positives.push((bq.name.clone(), bq.poly_as(), bq.x0_as()));

    let mut failures = Vec::new();
    let mut agree = 0;
    let mut total = 0;
    let mut run = |name: &str, p: &Polynomial<C>, x0: &[C], q: &HomogeneousPolynomial<C>, want: Status| {
        let hp = homogenize(p);
        let s = interlaces_sampled(&hp, q, x0, 200, 1e-9, 1).unwrap();
        let b = psd_interlacing_check(&hp, q, x0, 200, 1e-9, 1).unwrap();
        total += 1;
        if s.status == b.status {
            agree += 1;
        }
        if s.status != want || b.status != want {
            failures.push(format!("{name}: sampled {:?}, bezoutiant {:?}", s.status, b.status));
        }
    };
    for (name, p, x0) in &positives {
        run(name, p, x0, &directional(p, x0), Status::Pass);
    }
    for (k, (name, p, x0)) in rz_family().iter().enumerate() {
        let y = outside_point(p, x0, k as u64);
        run(&format!("{name}-outside-direction"), p, x0, &directional(p, &y), Status::Fail);
    }
    verdict(
        failures.is_empty() && agree == total && total == 50,
        format!(
            "{} positive and {} engineered negative instances; verdicts agree on {agree}/{total}{}",
            positives.len(),
            total - positives.len(),
            if failures.is_empty() { String::new() } else { format!("; unexpected: {failures:?}") }
        ),
    )
}

fn corpus_pencils() -> Vec<(String, MatrixPencil<C>, Vec<C>)> {
    let mut out = Vec::new();
    let circle = corpus::circle();
    out.push((circle.name.clone(), circle.pencil_as::<C>().unwrap(), circle.x0_as::<C>()));
    for seed in 0..6u64 {
        let m = 2 + (seed % 3) as usize;
        let mode = if seed % 2 == 0 { CoeffMode::Float } else { CoeffMode::Rational };
        let inst = corpus::random_rz(m, 200 + seed, mode).unwrap();
        out.push((inst.name.clone(), inst.pencil_as::<C>().unwrap(), inst.x0_as::<C>()));
        let opts = ConstructOptions { seed, ..ConstructOptions::default() };
        let (pencil, _) = construct(&inst.poly_as::<C>(), &inst.x0_as::<C>(), &InterlacerSpec::default(), &opts).unwrap();
        out.push((format!("constructed-{}", inst.name), pencil, inst.x0_as::<C>()));
    }
    out
}

// 6. identity suite
fn identity_suite() -> Verdict {
    let mut worst_derdet: f64 = 0.0;
    let mut worst_pairing: f64 = 0.0;
    let mut bad = Vec::new();
    let pencils = corpus_pencils();
    for (k, (name, pencil, x0)) in pencils.iter().enumerate() {
        let d = derdet_check(pencil, 50, 1e-9, k as u64).unwrap();
        let pr = pairing_check(pencil, x0, 50, 1e-8, k as u64).unwrap();
        worst_derdet = worst_derdet.max(d.max_residual.unwrap_or(0.0));
        worst_pairing = worst_pairing.max(pr.max_residual.unwrap_or(0.0));
        if !d.passed() || !pr.passed() {
            bad.push(name.clone());
        }
    }

    // exact adjugate identity on rational pencils of size 1..4
    let mut adj_ok = true;
    for m in 1..=4 {
        let inst = corpus::random_rz(m, 300 + m as u64, CoeffMode::Rational).unwrap();
        let u = inst.pencil_as::<Q>().unwrap().homogeneous_matrix();
        let det = u.det().unwrap();
        let prod = u.mul(&u.adj().unwrap()).unwrap();
        for i in 0..m {
            for j in 0..m {
                let want = if i == j { det.clone() } else { Polynomial::zero(3) };
                adj_ok &= prod.get(i, j) == &want;
            }
        }
    }

    // exact projective/affine identity on a line, rational corpus members
    let mut line_ok = true;
    let mut rng = stream(6, 0);
    let mut rat = || Q::from_ratio(rng.random_range(-9..=9), rng.random_range(1..=5));
    for inst in [corpus::circle(), corpus::bad_quadratic(3).unwrap(), corpus::random_rz(3, 5, CoeffMode::Rational).unwrap()] {
        let p = inst.poly_as::<Q>();
        let m = p.degree().unwrap();
        let h = homogenize(&p);
        for _ in 0..10 {
            let s = rat();
            if s == -Q::one() {
                continue;
            }
            let x: Vec<Q> = (0..p.nvars()).map(|_| rat()).collect();
            let x0: Vec<Q> = (0..p.nvars()).map(|_| rat()).collect();
            let big: Vec<Q> = std::iter::once(Q::one() + s.clone())
                .chain(x.iter().zip(&x0).map(|(a, b)| a.clone() + s.clone() * b.clone()))
                .collect();
            let inv = Q::one() / (s.clone() + Q::one());
            let y: Vec<Q> = x.iter().zip(&x0).map(|(a, b)| b.clone() + inv.clone() * (a.clone() - b.clone())).collect();
            line_ok &= h.evaluate(&big).unwrap() == (s + Q::one()).powi(m) * p.evaluate(&y).unwrap();
        }
    }
    verdict(
        bad.is_empty() && adj_ok && line_ok && worst_derdet <= 1e-9 && worst_pairing <= 1e-8,
        format!(
            "{} pencils: max trace-identity residual {worst_derdet:.1e}, max pairing residual {worst_pairing:.1e} \
             at 50 curve points each; exact adjugate identity 1..4x4: {adj_ok}; exact line identity: {line_ok}{}",
            pencils.len(),
            if bad.is_empty() { String::new() } else { format!("; failing {bad:?}") }
        ),
    )
}

/// Raw pencil of a random cubic built from a small conic inside its oval.
fn indefinite_pencil(seed: u64) -> Option<(MatrixPencil<C>, Polynomial<C>)> {
    let inst = corpus::random_rz(3, seed, CoeffMode::Float).ok()?;
    let p = inst.poly_as::<C>();
    let eps = 0.05;
    let small = HomogeneousPolynomial::new(
        Polynomial::from_terms(3, vec![(vec![2, 0, 0], c(eps * eps)), (vec![0, 2, 0], c(-1.0)), (vec![0, 0, 2], c(-1.0))])
            .unwrap(),
        2,
    )
    .unwrap();
    let raw = construct_raw(&homogenize(&p), &small, seed, 5).ok()?;
    let u = raw.u_pencil().ok()?;
    let (det, _) = det_poly(&u).ok()?;
    Some((u, det))
}

// 7. cofactor interlacing against base-point definiteness
fn cross_check() -> Verdict {
    let mut positive_ok = 0;
    let mut agreement = 0;
    let mut total = 0;
    let mut issues = Vec::new();
    for seed in 0..20u64 {
        let m = 2 + (seed % 3) as usize;
        let inst = corpus::random_rz(m, 400 + seed, CoeffMode::Float).unwrap();
        let (p, x0) = (inst.poly_as::<C>(), inst.x0_as::<C>());
        let opts = ConstructOptions { seed, ..ConstructOptions::default() };
        let (pencil, _) = match construct(&p, &x0, &InterlacerSpec::default(), &opts) {
            Ok(r) => r,
            Err(e) => {
                issues.push(format!("{}: {e}", inst.name));
                continue;
            }
        };
        let r = cauchy_cross_check(&pencil, &p, &x0, 100, 1e-9, seed).unwrap();
        total += 1;
        agreement += r.agreement as usize;
        if r.basepoint == Definiteness::PositiveDefinite && r.cofactor_verdicts.iter().all(|v| v.passed()) {
            positive_ok += 1;
        } else {
            issues.push(format!("{}: {:?}", inst.name, r.basepoint));
        }
    }
    let mut negative_ok = 0;
    let mut seed = 0;
    let mut engineered = 0;
    while engineered < 10 && seed < 100 {
        seed += 1;
        let Some((u, p)) = indefinite_pencil(seed) else { continue };
        let x0 = vec![c(0.0); 2];
        let r = cauchy_cross_check(&u, &p, &x0, 100, 1e-9, seed).unwrap();
        if r.basepoint != Definiteness::Indefinite {
            continue;
        }
        engineered += 1;
        total += 1;
        agreement += r.agreement as usize;
        if r.cofactor_verdicts.iter().any(|v| !v.passed()) {
            negative_ok += 1;
        } else {
            issues.push(format!("indefinite seed {seed}: all cofactors interlace"));
        }
    }
    verdict(
        positive_ok == 20 && negative_ok == 10 && agreement == total,
        format!(
            "positive pencils with all cofactors interlacing {positive_ok}/20; indefinite pencils with a failing cofactor \
             {negative_ok}/{engineered}; agreement {agreement}/{total}{}",
            if issues.is_empty() { String::new() } else { format!("; {issues:?}") }
        ),
    )
}

// 8. realification
fn realification() -> Verdict {
    let mut pencils: Vec<MatrixPencil<C>> = vec![corpus::circle().pencil_as().unwrap()];
    for m in 2..=4 {
        let inst = corpus::random_rz_with(m, 500 + m as u64, CoeffMode::Float, SymmetryClass::Hermitian).unwrap();
        pencils.push(inst.pencil_as().unwrap());
    }
    let mut worst: f64 = 0.0;
    let mut sign_mismatch = 0;
    let mut compared = 0;
    for (k, a) in pencils.iter().enumerate() {
        let r = realify(a).unwrap();
        let mut rng = stream(8, k as u64);
        for _ in 0..100 {
            let x: Vec<f64> = (0..a.dim()).map(|_| rng.random_range(-1.5..1.5)).collect();
            let (ma, mr) = (a.eval_f64(&x), r.eval_f64(&x));
            let (da, dr) = (ma.determinant(), mr.determinant());
            let want = da * da;
            worst = worst.max((dr - want).norm() / want.norm().max(1e-300));
            let (ea, er) = (hermitian_eigenvalues(&ma)[0], hermitian_eigenvalues(&mr)[0]);
            if ea.abs() > 1e-9 {
                compared += 1;
                if (ea >= 0.0) != (er >= 0.0) {
                    sign_mismatch += 1;
                }
            }
        }
    }
    verdict(
        worst <= 1e-10 && sign_mismatch == 0,
        format!(
            "{} pencils x 100 points: max relative |det R - det(A)^2| {worst:.1e}; PSD verdict mismatches {sign_mismatch}/{compared}",
            pencils.len()
        ),
    )
}

// 9. membership and nesting
fn membership() -> Verdict {
    let mut instances: Vec<(String, Polynomial<C>, Vec<C>)> = vec![{
        let c0 = corpus::circle();
        (c0.name.clone(), c0.poly_as(), c0.x0_as())
    }];
    for seed in 0..4u64 {
        let inst = corpus::random_rz(2 + (seed % 3) as usize, 600 + seed, CoeffMode::Float).unwrap();
        instances.push((inst.name.clone(), inst.poly_as(), inst.x0_as()));
    }
    let tol = 1e-9;
    let mut mismatches = 0;
    let mut nesting_violations = 0;
    let mut checked = 0;
    let mut inside_count = 0;
    for (k, (_, p, x0)) in instances.iter().enumerate() {
        let oracle = MembershipOracle::new(p, x0).unwrap();
        let mut rng = stream(9, k as u64);
        for _ in 0..500 {
            let u = unit_sphere(&mut rng, x0.len());
            let dir: Vec<C> = u.iter().map(|&v| c(v)).collect();
            let line = p.restrict_to_line(x0, &dir).unwrap();
            let exit = rzdet::realroots::complex_roots(&line)
                .unwrap()
                .into_iter()
                .filter(|r| r.re > 0.0 && r.im.abs() < 1e-8)
                .map(|r| r.re)
                .fold(f64::INFINITY, f64::min);
            let reach = if exit.is_finite() { 2.0 * exit } else { 5.0 };
            let r = rng.random_range(0.0..reach);
            if exit.is_finite() && (r - exit).abs() < 1e-6 * exit.max(1.0) {
                continue;
            }
            let inside = r < exit;
            let x: Vec<f64> = x0.iter().zip(&u).map(|(a, b)| a.re + r * b).collect();
            let values = oracle.values(&x);
            let member = values.iter().all(|v| *v >= -tol);
            if values[0].abs() <= tol {
                continue;
            }
            checked += 1;
            if member != inside || (inside && values[0] <= 0.0) {
                mismatches += 1;
            }
            if inside {
                inside_count += 1;
                if values.iter().any(|v| *v < -tol) {
                    nesting_violations += 1;
                }
            }
        }
    }
    verdict(
        mismatches == 0 && nesting_violations == 0,
        format!(
            "{} polynomials, {checked} points ({inside_count} inside): membership mismatches {mismatches}, \
             nesting violations {nesting_violations}",
            instances.len()
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 9] = [
        ("circle end-to-end", circle_end_to_end),
        ("round trip on generated pencils", round_trip),
        ("RZ classification", rz_classification),
        ("Hermite/RZ agreement", hermite_agreement),
        ("interlacing suite", interlacing_suite),
        ("identity suite", identity_suite),
        ("cofactor interlacing cross-check", cross_check),
        ("realification", realification),
        ("membership and nesting", membership),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|s| name.contains(s.as_str())) {
            continue;
        }
        let start = Instant::now();
        let v = f();
        let tag = if v.ok { "PASS" } else { "FAIL" };
        println!("criterion {} [{tag}] {name} ({}): {}", k + 1, secs(start.elapsed()), v.detail);
        failed += !v.ok as usize;
    }
    if failed > 0 {
        println!("{failed} criterion/criteria failed");
        std::process::exit(1);
    }
}
