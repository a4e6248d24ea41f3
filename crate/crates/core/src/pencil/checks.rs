//! Certificates for a pencil: the LMI verification and the identity suite
//! (pairing, eigenspace orthogonality, cofactor interlacing, derivative of
//! the determinant).

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::interlace::interlaces_sampled;
use crate::linalg::hermitian_eigenvalues;
use crate::poly::io::to_json_value;
use crate::poly::{HomogeneousPolynomial, Polynomial, DEFAULT_ADJUGATE_BOUND};
use crate::realroots::complex_roots;
use crate::report::{Status, VerdictReport, Witness};
use crate::rz::MembershipOracle;
use crate::sampling::{in_box, normal, par_indexed, stream, unit_sphere};
use crate::scalar::Scalar;

use super::{adjugate_c64, classify_spectrum, det_form, det_poly, Definiteness, MatrixPencil};

/// Threshold on the relative determinant residual `|det A − p·h|`.
pub const DET_RESIDUAL_TOL: f64 = 1e-6;

/// Relative size below which float cofactor coefficients are dropped.
pub const COFACTOR_CHOP: f64 = 1e-10;

/// Outcome of [`verify_lmi`].
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub status: Status,
    /// Largest relative `|det A(x) − p(x) h(x)|` over the sampled points.
    pub det_residual: f64,
    pub basepoint_spectrum: Vec<f64>,
    pub basepoint: Definiteness,
    /// Largest entry of `A(x⁰) − I`.
    pub basepoint_identity_error: f64,
    /// The quotient `h = det A / p`.
    pub cofactor: Value,
    pub cofactor_degree: u32,
    /// `h` at the points sampled from the component of `x⁰`.
    pub cofactor_samples: Vec<f64>,
    pub checks: Vec<VerdictReport>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `true` when `h` is the constant 1.
    pub fn cofactor_is_one(&self) -> bool {
        self.cofactor_degree == 0
            && self
                .cofactor_samples
                .iter()
                .chain(std::iter::once(&1.0))
                .all(|v| (v - 1.0).abs() < 1e-9)
    }
}

fn base_projective<S: Scalar>(x0: &[S]) -> Vec<S> {
    let mut v = vec![S::one()];
    v.extend_from_slice(x0);
    v
}

fn to_f64<S: Scalar>(x: &[S]) -> Vec<f64> {
    x.iter().map(|v| v.to_c64().re).collect()
}

/// Half-width of a box around `x⁰` that contains the component of `x⁰`
/// along sampled directions (capped for unbounded components).
fn component_radius(p: &Polynomial<Complex64>, x0: &[f64], seed: u64) -> f64 {
    const CAP: f64 = 10.0;
    let base: Vec<Complex64> = x0.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    let mut rng = stream(seed, u64::MAX);
    let mut radius: f64 = 0.0;
    for _ in 0..64 {
        let dir: Vec<Complex64> = unit_sphere(&mut rng, x0.len())
            .into_iter()
            .map(|v| Complex64::new(v, 0.0))
            .collect();
        let reach = p
            .restrict_to_line(&base, &dir)
            .ok()
            .and_then(|f| complex_roots(&f).ok())
            .and_then(|roots| {
                roots
                    .iter()
                    .filter(|z| z.im.abs() <= 1e-8 * (1.0 + z.norm()) && z.re > 0.0)
                    .map(|z| z.re)
                    .min_by(f64::total_cmp)
            })
            .unwrap_or(CAP);
        radius = radius.max(reach);
    }
    radius.min(CAP).max(1e-3) * 1.05
}

/// Certify `{x : A(x) ⪰ 0}` as an LMI description of the component of
/// `{p > 0}` containing `x⁰`: `A(x⁰)` must be positive definite and
/// `det A = p·h` with `h > 0` on that component.
pub fn verify_lmi<S: Scalar>(
    pencil: &MatrixPencil<S>,
    p: &Polynomial<S>,
    x0: &[S],
    tol: f64,
    samples: usize,
    seed: u64,
) -> Result<VerificationReport> {
    if pencil.dim() != p.nvars() || x0.len() != p.nvars() {
        return Err(Error::DimensionMismatch {
            expected: pencil.dim(),
            got: p.nvars(),
        });
    }
    let p0 = p.evaluate(x0)?.to_c64();
    if !(p0.re > 0.0) {
        return Err(Error::Precondition("p must be positive at the base point".into()));
    }
    let x0f = to_f64(x0);
    let mut checks = Vec::new();

    // (i) definiteness at the base point
    let (basepoint, spectrum) = pencil.definiteness_at(x0, tol)?;
    let a0 = pencil.eval_f64(&x0f);
    let ident_err = (0..pencil.size())
        .flat_map(|i| (0..pencil.size()).map(move |j| (i, j)))
        .map(|(i, j)| (a0[(i, j)] - if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) }).norm())
        .fold(0.0, f64::max);
    let status = match basepoint {
        Definiteness::PositiveDefinite => Status::Pass,
        Definiteness::Inconclusive => Status::Inconclusive,
        _ => Status::Fail,
    };
    let mut r = VerdictReport::new("basepoint-definite", status, 1, tol);
    if status != Status::Pass {
        let lo = spectrum.first().copied().unwrap_or(0.0);
        r = r.with_witness(Witness::point(x0f.clone(), format!("minimum eigenvalue {lo:.6e} at the base point")));
    }
    checks.push(r);

    // (ii) det A = p·h
    let (det, _) = det_poly(pencil)?;
    let (h, exact) = det.exact_divide(p, DET_RESIDUAL_TOL)?;
    // float quotients carry rounding noise in every monomial
    let h = h.chop(COFACTOR_CHOP);
    let pf = p.convert::<Complex64>();
    let hf = h.convert::<Complex64>();
    let detf = det.convert::<Complex64>();
    let residuals = par_indexed(seed, samples, |_, rng| {
        let x = in_box(rng, &x0f, 1.0);
        let xc: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        let numeric = pencil.eval_f64(&x).determinant();
        let ph = pf.eval_c64(&xc) * hf.eval_c64(&xc);
        let scale = (pf.abs_eval(&xc) * hf.abs_eval(&xc)).max(detf.abs_eval(&xc)).max(f64::MIN_POSITIVE);
        ((numeric - ph).norm() / scale, x)
    });
    let (det_residual, worst_x) = residuals
        .iter()
        .cloned()
        .fold((0.0, x0f.clone()), |acc, (v, x)| if v > acc.0 { (v, x) } else { acc });
    let div_ok = exact && det_residual <= DET_RESIDUAL_TOL;
    let mut r = VerdictReport::new(
        "determinant-factorization",
        if div_ok { Status::Pass } else { Status::Fail },
        samples,
        DET_RESIDUAL_TOL,
    )
    .with_residual(det_residual);
    if !div_ok {
        let why = if exact { "determinant residual above threshold" } else { "det A is not divisible by p" };
        r = r.with_witness(Witness::point(worst_x, why));
    }
    checks.push(r);

    // (iii) h > 0 on the component of x⁰
    let h_degree = h.degree().unwrap_or(0);
    let mut h_samples = Vec::new();
    let mut r = VerdictReport::new("cofactor-positive", Status::Pass, 0, tol);
    if h.is_zero() {
        r.status = Status::Fail;
        r = r.with_witness(Witness::point(x0f.clone(), "quotient vanishes identically"));
    } else if h_degree == 0 {
        let c = h.coeff(&vec![0; p.nvars()]).to_c64().re;
        h_samples.push(c);
        if c <= 0.0 {
            r.status = Status::Fail;
            r = r.with_witness(Witness::point(x0f.clone(), format!("constant quotient {c}")));
        }
    } else {
        let oracle = MembershipOracle::new(p, x0)?;
        let radius = component_radius(&pf, &x0f, seed);
        let draws = par_indexed(seed ^ 0xc0f_ac70, samples * 50, |_, rng| {
            let x = in_box(rng, &x0f, radius);
            oracle.contains(&x, 0.0).then_some(x)
        });
        let inside: Vec<Vec<f64>> = draws.into_iter().flatten().take(samples).collect();
        r.samples = inside.len();
        for x in &inside {
            let xc: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
            let v = hf.eval_c64(&xc).re;
            let scale = hf.abs_eval(&xc).max(f64::MIN_POSITIVE);
            h_samples.push(v);
            if v < -tol * scale && r.status != Status::Fail {
                r.status = Status::Fail;
                r.witness = Some(Witness::point(x.clone(), format!("quotient {v:.6e} < 0 inside the component")));
            } else if v <= tol * scale && r.status == Status::Pass {
                r.status = Status::Inconclusive;
                r.witness = Some(Witness::point(x.clone(), format!("quotient {v:.3e} near zero")));
            }
        }
        if inside.is_empty() {
            r.status = Status::Inconclusive;
            r = r.with_note("no points of the component were sampled");
        }
    }
    checks.push(r);

    let status = checks.iter().fold(Status::Pass, |s, c| s.and(c.status));
    Ok(VerificationReport {
        status,
        det_residual,
        basepoint_spectrum: spectrum,
        basepoint,
        basepoint_identity_error: ident_err,
        cofactor: to_json_value(&h),
        cofactor_degree: h_degree,
        cofactor_samples: h_samples,
        checks,
    })
}

fn random_real_point<R: Rng>(rng: &mut R, n: usize) -> Vec<Complex64> {
    (0..n).map(|_| Complex64::new(normal(rng), 0.0)).collect()
}

fn row_norm(m: &DMatrix<Complex64>, i: usize) -> f64 {
    m.row(i).iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
}

fn col_norm(m: &DMatrix<Complex64>, j: usize) -> f64 {
    m.column(j).iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
}

/// `true` when the restriction of `P` to a random line has no repeated
/// roots.
fn is_reduced<S: Scalar>(form: &HomogeneousPolynomial<S>, seed: u64) -> Result<bool> {
    let n = form.nvars();
    let mut rng = stream(seed, u64::MAX - 1);
    let (a, b): (Vec<S>, Vec<S>) = if S::EXACT {
        (
            (0..n).map(|_| S::from_i64(rng.random_range(-20..=20))).collect(),
            (0..n).map(|_| S::from_i64(rng.random_range(-20..=20))).collect(),
        )
    } else {
        (
            (0..n).map(|_| S::from_f64(normal(&mut rng))).collect(),
            (0..n).map(|_| S::from_f64(normal(&mut rng))).collect(),
        )
    };
    let f = form.poly().restrict_to_line(&a, &b)?;
    if f.degree().unwrap_or(0) == 0 {
        return Ok(true);
    }
    if S::EXACT {
        return Ok(f.gcd(&f.derivative()).degree() == Some(0));
    }
    let roots = complex_roots(&f)?;
    let scale = 1.0 + roots.iter().map(|z| z.norm()).fold(0.0, f64::max);
    for i in 0..roots.len() {
        for j in 0..i {
            if (roots[i] - roots[j]).norm() < 1e-7 * scale {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Check `G_i U(X⁰) F_j = V_ij · P'_{X⁰}` at complex points of the curve
/// `det U = 0`, where `V = adj U` with rows `G_i` and columns `F_j`.
pub fn pairing_check<S: Scalar>(
    pencil: &MatrixPencil<S>,
    x0: &[S],
    curve_samples: usize,
    tol: f64,
    seed: u64,
) -> Result<VerdictReport> {
    let big_x0 = base_projective(x0);
    let form = det_form(pencil)?;
    if form.is_zero() {
        return Err(Error::Precondition("determinant vanishes identically".into()));
    }
    if !is_reduced(&form, seed)? {
        return Err(Error::Precondition("determinant is not reduced".into()));
    }
    let (dp, _) = form.directional_derivative(&big_x0)?;
    let dpf = dp.poly().convert::<Complex64>();
    let formf = form.poly().convert::<Complex64>();
    let u0 = pencil.eval_projective_c64(&big_x0.iter().map(|v| v.to_c64()).collect::<Vec<_>>());
    let k = pencil.dim() + 1;
    let n = pencil.size();
    let outcomes = par_indexed(seed, curve_samples, |idx, rng| -> Option<(f64, Vec<f64>)> {
        for _ in 0..8 {
            let a = random_real_point(rng, k);
            let b = random_real_point(rng, k);
            let f = formf.restrict_to_line(&a, &b).ok()?;
            let roots = complex_roots(&f).ok()?;
            if roots.is_empty() {
                continue;
            }
            let s = roots[idx % roots.len()];
            let x: Vec<Complex64> = a.iter().zip(&b).map(|(ai, bi)| ai + s * bi).collect();
            let norm = x.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
            let x: Vec<Complex64> = x.iter().map(|v| v / norm).collect();
            let ux = pencil.eval_projective_c64(&x);
            let v = adjugate_c64(&ux);
            let dpx = dpf.eval_c64(&x);
            let lhs = &v * &u0 * &v;
            let u0n = u0.norm();
            let mut worst: f64 = 0.0;
            for i in 0..n {
                for j in 0..n {
                    let rhs = v[(i, j)] * dpx;
                    let scale = row_norm(&v, i) * u0n * col_norm(&v, j) + v[(i, j)].norm() * dpx.norm();
                    worst = worst.max((lhs[(i, j)] - rhs).norm() / scale.max(f64::MIN_POSITIVE));
                }
            }
            let point = x.iter().flat_map(|z| [z.re, z.im]).collect();
            return Some((worst, point));
        }
        None
    });
    let found: Vec<(f64, Vec<f64>)> = outcomes.into_iter().flatten().collect();
    if found.is_empty() && curve_samples > 0 {
        return Err(Error::Precondition("no curve points located (degenerate pencil)".into()));
    }
    let worst = found
        .iter()
        .cloned()
        .fold((0.0, Vec::new()), |acc, (v, x)| if v >= acc.0 { (v, x) } else { acc });
    let mut r = VerdictReport::new("pairing-identity", Status::Pass, found.len(), tol).with_residual(worst.0);
    if worst.0 > tol {
        r.status = Status::Fail;
        r = r.with_witness(Witness::point(
            worst.1,
            format!("relative residual {:.3e} (coordinates as re, im pairs)", worst.0),
        ));
    }
    Ok(r)
}

/// Outcome of [`eigenspace_orthogonality_check`].
#[derive(Debug, Clone, Serialize)]
pub struct OrthogonalityReport {
    pub report: VerdictReport,
    pub basepoint: Definiteness,
    /// Roots `s_i` of `P(X − sX⁰)` on the line.
    pub eigenvalues: Vec<f64>,
    /// `v_i* U(X⁰) v_i` for unit kernel vectors `v_i` of `U(X − s_i X⁰)`.
    pub compressions: Vec<f64>,
    pub orthogonality_residual: f64,
}

/// Along the line `{X − sX⁰}` the kernels of `U(X − s_i X⁰)` are
/// `U(X⁰)`-orthogonal, and `U(X⁰)` is definite exactly when all the
/// compressions `v_i* U(X⁰) v_i` share its sign.
pub fn eigenspace_orthogonality_check<S: Scalar>(
    pencil: &MatrixPencil<S>,
    x0: &[S],
    line: Option<&[f64]>,
    tol: f64,
    seed: u64,
) -> Result<OrthogonalityReport> {
    let n = pencil.size();
    let big_x0: Vec<Complex64> = base_projective(x0).iter().map(|v| v.to_c64()).collect();
    let u0 = pencil.eval_projective_c64(&big_x0);
    let spectrum = hermitian_eigenvalues(&u0);
    let basepoint = classify_spectrum(&spectrum, tol);
    if n == 1 {
        return Ok(OrthogonalityReport {
            report: VerdictReport::new("eigenspace-orthogonality", Status::Pass, 0, tol)
                .with_note("size 1: nothing to compare"),
            basepoint,
            eigenvalues: Vec::new(),
            compressions: vec![u0[(0, 0)].re],
            orthogonality_residual: 0.0,
        });
    }
    let u0_inv = u0
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::Precondition("U(X⁰) is singular".into()))?;
    let mut rng = stream(seed, 0);
    let attempts = if line.is_some() { 1 } else { 16 };
    for attempt in 0..attempts {
        let xdir: Vec<Complex64> = match line {
            Some(l) => l.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
            None => random_real_point(&mut rng, pencil.dim() + 1),
        };
        if xdir.len() != pencil.dim() + 1 {
            return Err(Error::DimensionMismatch {
                expected: pencil.dim() + 1,
                got: xdir.len(),
            });
        }
        let ux = pencil.eval_projective_c64(&xdir);
        let m = &u0_inv * &ux;
        let (_, t) = nalgebra::Schur::new(m).unpack();
        let mut s: Vec<Complex64> = (0..n).map(|i| t[(i, i)]).collect();
        s.sort_by(|a, b| a.re.total_cmp(&b.re));
        let scale = 1.0 + s.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let separated = (1..n).all(|i| (s[i] - s[i - 1]).norm() > 1e-6 * scale);
        if !separated {
            continue;
        }
        let vecs: Vec<nalgebra::DVector<Complex64>> = s
            .iter()
            .map(|&si| {
                let k = &ux - &u0 * si;
                let svd = k.svd(false, true);
                let vt = svd.v_t.unwrap();
                let idx = (0..n)
                    .min_by(|&a, &b| svd.singular_values[a].total_cmp(&svd.singular_values[b]))
                    .unwrap();
                vt.row(idx).adjoint().into_owned()
            })
            .collect();
        let u0n = u0.norm();
        let mut ortho: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i == j || (s[i] - s[j].conj()).norm() <= 1e-6 * scale {
                    continue;
                }
                let v = (vecs[j].adjoint() * &u0 * &vecs[i])[(0, 0)];
                ortho = ortho.max(v.norm() / u0n);
            }
        }
        let compressions: Vec<f64> = vecs
            .iter()
            .map(|v| (v.adjoint() * &u0 * v)[(0, 0)].re)
            .collect();
        let cscale = u0n.max(f64::MIN_POSITIVE);
        let all_pos = compressions.iter().all(|&c| c > tol * cscale);
        let all_neg = compressions.iter().all(|&c| c < -tol * cscale);
        let real_line = s.iter().all(|z| z.im.abs() <= 1e-8 * scale);
        let consistent = match basepoint {
            Definiteness::PositiveDefinite => all_pos && real_line,
            Definiteness::NegativeDefinite => all_neg && real_line,
            Definiteness::Indefinite => !(all_pos || all_neg),
            Definiteness::Inconclusive => true,
        };
        let mut status = if ortho <= tol && consistent { Status::Pass } else { Status::Fail };
        if basepoint == Definiteness::Inconclusive && status == Status::Pass {
            status = Status::Inconclusive;
        }
        let mut report = VerdictReport::new("eigenspace-orthogonality", status, n, tol)
            .with_residual(ortho)
            .with_note(format!("line attempt {}", attempt + 1));
        if status == Status::Fail {
            let detail = if ortho > tol {
                format!("kernel vectors not U(X0)-orthogonal: {ortho:.3e}")
            } else {
                format!("compressions {compressions:?} disagree with {basepoint:?}")
            };
            report = report.with_witness(Witness::line(
                xdir.iter().map(|z| z.re).collect(),
                big_x0.iter().map(|z| z.re).collect(),
                detail,
            ));
        }
        return Ok(OrthogonalityReport {
            report,
            basepoint,
            eigenvalues: s.iter().map(|z| z.re).collect(),
            compressions,
            orthogonality_residual: ortho,
        });
    }
    Err(Error::RetriesExhausted("no line with distinct intersection points".into()))
}

/// Outcome of [`cauchy_cross_check`].
#[derive(Debug, Clone, Serialize)]
pub struct CrossCheckReport {
    pub report: VerdictReport,
    pub basepoint: Definiteness,
    /// Interlacing verdict of each diagonal cofactor `V_jj`.
    pub cofactor_verdicts: Vec<VerdictReport>,
    /// Whether "all `V_jj` interlace" matches "`U(X⁰)` definite".
    pub agreement: bool,
}

/// Diagonal cofactors `V_jj` of `adj U` against `P`: they all interlace `P`
/// exactly when `U(X⁰)` is definite.
pub fn cauchy_cross_check<S: Scalar>(
    pencil: &MatrixPencil<S>,
    p: &Polynomial<S>,
    x0: &[S],
    num_lines: usize,
    tol: f64,
    seed: u64,
) -> Result<CrossCheckReport> {
    let n = pencil.size();
    let m = p.degree().unwrap_or(0);
    if m as usize != n {
        return Err(Error::Precondition(format!(
            "pencil of size {n} for a polynomial of degree {m}"
        )));
    }
    let big_p = HomogeneousPolynomial::homogenize(p, m)?;
    let adj = pencil.homogeneous_matrix().adjugate(DEFAULT_ADJUGATE_BOUND)?;
    let (basepoint, _) = pencil.definiteness_at(x0, tol)?;
    let mut verdicts = Vec::with_capacity(n);
    for j in 0..n {
        let vjj = adj.get(j, j).real_part();
        if vjj.is_zero() {
            return Err(Error::Precondition(format!(
                "diagonal cofactor V_{}{} vanishes identically",
                j + 1,
                j + 1
            )));
        }
        let vjj = if S::EXACT { vjj } else { vjj.chop(1e-12) };
        let form = HomogeneousPolynomial::new(vjj, (n - 1) as u32)?;
        let mut v = interlaces_sampled(&big_p, &form, x0, num_lines, tol, seed)?;
        v.check = format!("cofactor-{}-interlaces", j + 1);
        verdicts.push(v);
    }
    let any_fail = verdicts.iter().any(|v| v.status == Status::Fail);
    let any_doubt = verdicts.iter().any(|v| v.status == Status::Inconclusive);
    let (status, agreement) = match basepoint {
        Definiteness::Inconclusive => (Status::Inconclusive, true),
        _ if any_doubt && !any_fail => (Status::Inconclusive, true),
        b => {
            let agree = b.is_definite() != any_fail;
            (if agree { Status::Pass } else { Status::Fail }, agree)
        }
    };
    let mut report = VerdictReport::new("cofactor-interlacing-cross-check", status, num_lines * n, tol)
        .with_note(format!("basepoint {basepoint:?}"));
    if !agreement {
        let w = verdicts
            .iter()
            .find_map(|v| v.witness.clone())
            .unwrap_or_else(|| Witness::point(to_f64(x0), "cofactors interlace but U(X0) is not definite"));
        report = report.with_witness(w);
    }
    Ok(CrossCheckReport {
        report,
        basepoint,
        cofactor_verdicts: verdicts,
        agreement,
    })
}

/// Check `∂P/∂X_α = Σ A_{α,lk} V_kl` (`V = adj U`) at random real points.
pub fn derdet_check<S: Scalar>(
    pencil: &MatrixPencil<S>,
    samples: usize,
    tol: f64,
    seed: u64,
) -> Result<VerdictReport> {
    let form = det_form(pencil)?;
    let k = pencil.dim() + 1;
    let partials: Vec<Polynomial<Complex64>> = (0..k)
        .map(|a| form.poly().partial_derivative(a).convert::<Complex64>())
        .collect();
    let mats: Vec<DMatrix<Complex64>> = pencil
        .matrices()
        .iter()
        .map(|m| crate::linalg::to_dmatrix(m, pencil.size()))
        .collect();
    let n = pencil.size();
    let worst = par_indexed(seed, samples, |_, rng| {
        let x: Vec<Complex64> = unit_sphere(rng, k).into_iter().map(|v| Complex64::new(v, 0.0)).collect();
        let v = adjugate_c64(&pencil.eval_projective_c64(&x));
        let mut worst: f64 = 0.0;
        for a in 0..k {
            let mut rhs = Complex64::new(0.0, 0.0);
            let mut scale = 0.0;
            for l in 0..n {
                for kk in 0..n {
                    let t = mats[a][(l, kk)] * v[(kk, l)];
                    rhs += t;
                    scale += t.norm();
                }
            }
            let lhs = partials[a].eval_c64(&x);
            let scale = scale.max(partials[a].abs_eval(&x)).max(f64::MIN_POSITIVE);
            worst = worst.max((lhs - rhs).norm() / scale);
        }
        (worst, x.iter().map(|z| z.re).collect::<Vec<f64>>())
    });
    let (res, at) = worst
        .into_iter()
        .fold((0.0, Vec::new()), |acc, (v, x)| if v >= acc.0 { (v, x) } else { acc });
    let mut r = VerdictReport::new("derivative-of-determinant", Status::Pass, samples, tol).with_residual(res);
    if res > tol {
        r.status = Status::Fail;
        r = r.with_witness(Witness::point(at, format!("relative residual {res:.3e}")));
    }
    Ok(r)
}
