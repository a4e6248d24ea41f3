//! Determinantal representations of plane real-zero polynomials.
//!
//! Given `p(x_1, x_2)` real-zero at `x⁰` whose projective curve `P = 0` is
//! smooth, and a form `Q` of degree `m − 1` interlacing `P` at `X⁰ = (1, x⁰)`,
//! [`construct`] returns hermitian `A_0, A_1, A_2` with
//! `det(A_0 + x_1 A_1 + x_2 A_2) = p / p(x⁰)` and `A(x⁰) = I`.
//!
//! Pipeline:
//! 1. the intersection divisor of `P` and `Q` ([`intersection_divisor`]);
//! 2. half of it, `D`, and the conjugate half `Dτ` ([`split_divisor`]);
//! 3. forms of degree `m − 1` through `D`, rotated so `Q` is first
//!    ([`vanishing_basis`], [`rotate_basis`]);
//! 4. the rank-one completion `V` ([`fill_matrix`]);
//! 5. `U = adj V / P^{m−2}` ([`extract_pencil`]), congruent to a pencil
//!    equal to `I` at the base point ([`normalize_at_basepoint`]).
//!
//! The first principal minor of the result is `κ·Q`, with `κ` recorded in
//! the [`ConstructionTrace`].

mod elimination;
mod forms;

use num_complex::Complex64;
use rand::Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::pencil::io::pencil_to_json_value;
use crate::pencil::{det_form, MatrixPencil, DET_RESIDUAL_TOL};
use crate::poly::io::coeff_json;
use crate::poly::{HomogeneousPolynomial, PolyMatrix, Polynomial, ProjectivePoint};
use crate::rz::{is_rz_sampled, RzStatus};
use crate::sampling::{in_box, stream};
use crate::scalar::Scalar;

pub use elimination::{check_smooth, intersection_divisor};
pub use forms::{
    extract_pencil, fill_matrix, monomials, normalize_at_basepoint, rotate_basis, split_choices, split_divisor,
    split_divisor_with, vanishing_basis, Extracted, Normalized,
};

/// One point of a divisor on the curve.
#[derive(Debug, Clone, PartialEq)]
pub struct DivisorPoint<S> {
    pub point: ProjectivePoint<S>,
    pub multiplicity: u32,
    /// Index of the conjugate point, for non-real points.
    pub partner: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Divisor<S> {
    pub points: Vec<DivisorPoint<S>>,
}

impl<S: Scalar> Divisor<S> {
    pub fn degree(&self) -> u32 {
        self.points.iter().map(|p| p.multiplicity).sum()
    }

    pub fn pair_count(&self) -> usize {
        self.points
            .iter()
            .enumerate()
            .filter(|(i, p)| p.partner.is_some_and(|j| j > *i))
            .count()
    }

    pub fn real_points(&self) -> impl Iterator<Item = &DivisorPoint<S>> {
        self.points.iter().filter(|p| p.partner.is_none())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.points
                .iter()
                .map(|p| {
                    json!({
                        "point": point_json(&p.point),
                        "multiplicity": p.multiplicity,
                        "conjugate": p.partner,
                    })
                })
                .collect(),
        )
    }
}

/// JSON for a scalar: `{"re": .., "im": ..}` with rational strings in exact
/// mode and numbers in float mode.
pub fn scalar_json<S: Scalar>(c: &S) -> Value {
    json!({
        "re": coeff_json(c, |g| &g.re, |z| z.re),
        "im": coeff_json(c, |g| &g.im, |z| z.im),
    })
}

fn point_json<S: Scalar>(p: &ProjectivePoint<S>) -> Value {
    Value::Array(p.coords().iter().map(scalar_json).collect())
}

fn scalar_string<S: Scalar>(c: &S) -> String {
    match c.to_exact() {
        Some(g) => {
            let re = crate::scalar::format_rational(&g.re);
            let im = crate::scalar::format_rational(&g.im);
            if c.is_real() {
                re
            } else if g.re == num_rational::BigRational::from_integer(0.into()) {
                format!("{im}i")
            } else {
                format!("({re}{}{im}i)", if im.starts_with('-') { "" } else { "+" })
            }
        }
        None => {
            let z = c.to_c64();
            if z.im == 0.0 {
                format!("{}", z.re)
            } else {
                format!("({}{:+}i)", z.re, z.im)
            }
        }
    }
}

/// Human-readable form in `X0, X1, X2`.
pub fn form_string<S: Scalar>(p: &Polynomial<S>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|a, b| b.0.cmp(a.0));
    for (e, c) in terms {
        let mut s = scalar_string(c);
        for (i, &k) in e.iter().enumerate() {
            match k {
                0 => {}
                1 => s.push_str(&format!("*X{i}")),
                _ => s.push_str(&format!("*X{i}^{k}")),
            }
        }
        parts.push(s);
    }
    parts.join(" + ")
}

/// Which interlacer to use.
#[derive(Debug, Clone, PartialEq)]
pub enum InterlacerSpec<S> {
    /// `Σ_α X'_α ∂P/∂X_α` at `X' = (1, x')`; `None` means `x' = x⁰`.
    DerivativeAt(Option<Vec<S>>),
    /// A form of degree `m − 1` (or `m − 2`, multiplied by `X_0`).
    Explicit(HomogeneousPolynomial<S>),
}

impl<S> Default for InterlacerSpec<S> {
    fn default() -> Self {
        InterlacerSpec::DerivativeAt(None)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConstructOptions {
    pub seed: u64,
    /// Tolerance for definiteness decisions at the base point.
    pub tol: f64,
    /// Lines sampled by the real-zero precondition.
    pub rz_lines: usize,
    /// Points at which the final determinant is compared with `p`.
    pub verify_samples: usize,
    pub max_retries: usize,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        ConstructOptions {
            seed: 0,
            tol: 1e-9,
            rz_lines: 64,
            verify_samples: 200,
            max_retries: 5,
        }
    }
}

/// Stages 1 to 5 of the pipeline, before normalization.
#[derive(Debug, Clone)]
pub struct RawConstruction<S> {
    pub divisor: Divisor<S>,
    pub split: Vec<bool>,
    pub d: Divisor<S>,
    pub dtau: Divisor<S>,
    /// First column `V_{i1}`; the first row is its conjugate.
    pub columns: Vec<HomogeneousPolynomial<S>>,
    pub v: PolyMatrix<S>,
    pub c: S,
    pub u: Vec<Vec<Vec<S>>>,
}

impl<S: Scalar> RawConstruction<S> {
    /// `U` as a pencil (not normalized).
    pub fn u_pencil(&self) -> Result<MatrixPencil<S>> {
        MatrixPencil::new(self.u.clone())
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Residuals {
    /// Largest `|det A(x) − p̂(x)| / |p̂|(x)` over the sample points.
    pub det_residual: f64,
    pub det_exact: Option<bool>,
    /// `max |A(x⁰) − I|`.
    pub identity_error: f64,
    /// `adj(A)_{11} − κ·Q`, relative to the coefficients of `κ·Q`.
    pub minor_residual: f64,
    /// Largest relative `2 × 2` minor of `V` at points of the curve.
    pub rank_one_residual: f64,
}

#[derive(Debug, Clone)]
pub struct ConstructionTrace<S> {
    pub degree: u32,
    pub x0: Vec<S>,
    /// `p / p(x⁰)` homogenized.
    pub form: HomogeneousPolynomial<S>,
    pub interlacer: HomogeneousPolynomial<S>,
    pub rz_status: Option<RzStatus>,
    pub attempts: usize,
    pub attempt_seed: u64,
    pub raw: Option<RawConstruction<S>>,
    pub sign: i64,
    pub pivots: Vec<S>,
    pub kappa: S,
    pub pencil: MatrixPencil<S>,
    pub residuals: Residuals,
    pub notes: Vec<String>,
}

fn matrix_json<S: Scalar>(m: &[Vec<S>]) -> Value {
    Value::Array(
        m.iter()
            .map(|r| Value::Array(r.iter().map(scalar_json).collect()))
            .collect(),
    )
}

impl<S: Scalar> ConstructionTrace<S> {
    pub fn to_json(&self) -> Value {
        let raw = self.raw.as_ref().map(|r| {
            let n = r.v.rows();
            let v: Vec<Vec<String>> = (0..n)
                .map(|i| (0..n).map(|j| form_string(r.v.get(i, j))).collect())
                .collect();
            json!({
                "divisor": r.divisor.to_json(),
                "split": r.split,
                "D": r.d.to_json(),
                "Dtau": r.dtau.to_json(),
                "column_forms": r.columns.iter().map(|f| form_string(f.poly())).collect::<Vec<_>>(),
                "row_forms": r.columns.iter().map(|f| form_string(f.conj().poly())).collect::<Vec<_>>(),
                "V": v,
                "c": scalar_json(&r.c),
                "U": r.u.iter().map(|m| matrix_json(m)).collect::<Vec<_>>(),
            })
        });
        json!({
            "mode": S::MODE,
            "degree": self.degree,
            "x0": self.x0.iter().map(scalar_json).collect::<Vec<_>>(),
            "form": form_string(self.form.poly()),
            "interlacer": form_string(self.interlacer.poly()),
            "rz_precondition": self.rz_status,
            "attempts": self.attempts,
            "attempt_seed": self.attempt_seed,
            "stages": raw,
            "normalization": {
                "sign": self.sign,
                "pivots": self.pivots.iter().map(scalar_json).collect::<Vec<_>>(),
                "kappa": scalar_json(&self.kappa),
            },
            "pencil": pencil_to_json_value(&self.pencil),
            "residuals": self.residuals,
            "notes": self.notes,
        })
    }
}

/// Errors after which another seed may succeed.
fn retryable(e: &Error) -> bool {
    matches!(
        e,
        Error::GeneralPosition(_)
            | Error::Solve(_)
            | Error::BasisDimension { .. }
            | Error::DegenerateAdjoint
            | Error::InexactDivision(_)
            | Error::DivisorDegree { .. }
            | Error::IrrationalScaling
            | Error::RetriesExhausted(_)
    )
}

type Staged<T> = std::result::Result<T, (&'static str, Error)>;

fn at<T>(stage: &'static str, r: Result<T>) -> Staged<T> {
    r.map_err(|e| (stage, e))
}

/// Stages 1 to 5 for one seed.
fn raw_once<S: Scalar>(
    p: &HomogeneousPolynomial<S>,
    q: &HomogeneousPolynomial<S>,
    seed: u64,
) -> Staged<RawConstruction<S>> {
    let divisor = at("intersection-divisor", intersection_divisor(p, q, seed))?;
    let split = split_choices(divisor.pair_count(), seed);
    let (d, dtau) = at("split-divisor", split_divisor_with(&divisor, &split))?;
    let basis = at("vanishing-basis", vanishing_basis(p, &d))?;
    let columns = at("vanishing-basis", rotate_basis(&basis, q))?;
    let v = at("fill-matrix", fill_matrix(p, &columns))?;
    let Extracted { c, u } = at("extract-pencil", extract_pencil(&v, p))?;
    Ok(RawConstruction {
        divisor,
        split,
        d,
        dtau,
        columns,
        v,
        c,
        u,
    })
}

fn attempt_seed(seed: u64, attempt: usize) -> u64 {
    if attempt == 0 {
        seed
    } else {
        stream(seed, 5000 + attempt as u64).random()
    }
}

fn retry<T>(max_retries: usize, seed: u64, mut f: impl FnMut(u64) -> Staged<T>) -> Result<(T, usize, u64)> {
    let tries = max_retries.max(1);
    let mut last = None;
    for attempt in 0..tries {
        let s = attempt_seed(seed, attempt);
        match f(s) {
            Ok(v) => return Ok((v, attempt + 1, s)),
            Err((stage, e)) => {
                let again = retryable(&e);
                last = Some((stage, e));
                if !again {
                    let (stage, e) = last.unwrap();
                    return Err(Error::Stage {
                        stage,
                        attempts: attempt + 1,
                        source: Box::new(e),
                    });
                }
            }
        }
    }
    let (stage, e) = last.unwrap();
    Err(Error::Stage {
        stage,
        attempts: tries,
        source: Box::new(e),
    })
}

/// Stages 1 to 5 without normalization or verification, for a form `P` of
/// degree `m ≥ 2` and `Q` of degree `m − 1`. Also usable with a `Q` that
/// does not interlace, in which case `U(X⁰)` is typically indefinite.
pub fn construct_raw<S: Scalar>(
    p: &HomogeneousPolynomial<S>,
    q: &HomogeneousPolynomial<S>,
    seed: u64,
    max_retries: usize,
) -> Result<RawConstruction<S>> {
    if p.degree() < 2 {
        return Err(Error::Precondition("the rank-one completion needs degree at least 2".into()));
    }
    let q = interlacer_form(p, q)?;
    retry(max_retries, seed, |s| raw_once(p, &q, s)).map(|(r, _, _)| r)
}

fn interlacer_form<S: Scalar>(p: &HomogeneousPolynomial<S>, q: &HomogeneousPolynomial<S>) -> Result<HomogeneousPolynomial<S>> {
    if q.nvars() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: q.nvars() });
    }
    let q = crate::interlace::adjust_interlacer(p, q)?;
    if !q.poly().has_real_coefficients() {
        return Err(Error::Precondition("the interlacer must have real coefficients".into()));
    }
    Ok(q)
}

fn base_point<S: Scalar>(x0: &[S]) -> Vec<S> {
    let mut v = vec![S::one()];
    v.extend_from_slice(x0);
    v
}

/// `κ` with `adj(A)_{11} = κ·Q`.
fn kappa<S: Scalar>(raw: &RawConstruction<S>, norm: &Normalized<S>, m: u32) -> S {
    let sigma = S::from_i64(norm.sign).powi(m - 1);
    let mut k = sigma * raw.c.powi(m - 2);
    for d in &norm.pivots[1..] {
        k = k / d.clone();
    }
    k
}

fn verify<S: Scalar>(
    pencil: &MatrixPencil<S>,
    form: &HomogeneousPolynomial<S>,
    q: &HomogeneousPolynomial<S>,
    kappa: &S,
    raw: Option<&RawConstruction<S>>,
    x0: &[S],
    opts: &ConstructOptions,
    seed: u64,
) -> Result<Residuals> {
    let affine = form.dehomogenize().convert::<Complex64>();
    let x0f: Vec<f64> = x0.iter().map(|v| v.to_c64().re).collect();
    let mut det_residual: f64 = 0.0;
    for k in 0..opts.verify_samples {
        let mut rng = stream(seed, 6000 + k as u64);
        let x = in_box(&mut rng, &x0f, 1.0);
        let xc: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        let det = pencil.eval_f64(&x).determinant();
        let want = affine.eval_c64(&xc);
        let scale = affine.abs_eval(&xc).max(det.norm()).max(f64::MIN_POSITIVE);
        det_residual = det_residual.max((det - want).norm() / scale);
    }
    let det_exact = if S::EXACT {
        Some(det_form(pencil)?.poly() == form.poly())
    } else {
        None
    };
    let at_base = pencil.eval_f64(&x0f);
    let identity_error = (0..pencil.size())
        .flat_map(|i| (0..pencil.size()).map(move |j| (i, j)))
        .map(|(i, j)| (at_base[(i, j)] - if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) }).norm())
        .fold(0.0, f64::max);
    let minor_residual = if pencil.size() >= 2 {
        let minor = pencil.homogeneous_matrix().minor(0, 0).determinant(usize::MAX)?;
        let want = q.poly().scale(kappa);
        let diff = &minor - &want;
        diff.max_coeff() / want.max_coeff().max(f64::MIN_POSITIVE)
    } else {
        0.0
    };
    let rank_one_residual = match raw {
        Some(r) => {
            let pts = forms::curve_points(form, 4, seed)?;
            forms::rank_one_residual(&r.v, &pts)
        }
        None => 0.0,
    };
    let res = Residuals {
        det_residual,
        det_exact,
        identity_error,
        minor_residual,
        rank_one_residual,
    };
    let mut failures = Vec::new();
    if det_exact == Some(false) {
        failures.push("determinant differs from p".to_string());
    }
    if det_residual > DET_RESIDUAL_TOL {
        failures.push(format!("determinant residual {det_residual:.3e}"));
    }
    if identity_error > 1e-8 {
        failures.push(format!("A(x0) differs from I by {identity_error:.3e}"));
    }
    if minor_residual > 1e-6 {
        failures.push(format!("first principal minor residual {minor_residual:.3e}"));
    }
    if rank_one_residual > 1e-6 {
        failures.push(format!("rank-one residual {rank_one_residual:.3e}"));
    }
    if failures.is_empty() {
        Ok(res)
    } else {
        Err(Error::InexactDivision(format!("verification failed: {}", failures.join("; "))))
    }
}

/// Positive hermitian determinantal representation of a plane polynomial
/// `p`, real-zero at `x0`, with smooth projective curve.
pub fn construct<S: Scalar>(
    p: &Polynomial<S>,
    x0: &[S],
    interlacer: &InterlacerSpec<S>,
    opts: &ConstructOptions,
) -> Result<(MatrixPencil<S>, ConstructionTrace<S>)> {
    let pre = |e: Error| Error::Stage {
        stage: "precondition",
        attempts: 1,
        source: Box::new(e),
    };
    if p.nvars() != 2 || x0.len() != 2 {
        return Err(pre(Error::DimensionMismatch {
            expected: 2,
            got: if p.nvars() != 2 { p.nvars() } else { x0.len() },
        }));
    }
    let m = p.degree().ok_or_else(|| pre(Error::ZeroPolynomial))?;
    if m == 0 {
        return Err(pre(Error::Precondition("constant polynomial".into())));
    }
    let p0 = p.evaluate(x0)?;
    if p0.negligible(p.max_coeff(), 1e-14) {
        return Err(pre(Error::VanishesAtBasePoint));
    }
    let scaled = p.scale(&(S::one() / p0));
    let form = HomogeneousPolynomial::homogenize(&scaled, m)?;
    let mut notes = Vec::new();
    let big_x0 = base_point(x0);

    let rz = is_rz_sampled(&scaled, x0, opts.rz_lines, opts.tol.max(1e-9), opts.seed).map_err(pre)?;
    match rz.status {
        RzStatus::NotRz => {
            return Err(pre(Error::NotRealZero(match &rz.witness {
                Some(w) => format!(
                    "line through {:?} in direction {:?} has {} non-real roots",
                    w.x0, w.dir, w.complex_roots
                ),
                None => "a sampled line has non-real roots".into(),
            })))
        }
        RzStatus::Inconclusive => notes.push("real-zero precondition inconclusive on some lines".into()),
        RzStatus::RzConfirmedSampled => {}
    }

    if m == 1 {
        let mats: Vec<Vec<Vec<S>>> = (0..3)
            .map(|a| {
                let mut e = vec![0u32; 3];
                e[a] = 1;
                vec![vec![form.poly().coeff(&e)]]
            })
            .collect();
        let pencil = MatrixPencil::new(mats)?;
        let q = HomogeneousPolynomial::new(Polynomial::one(3), 0)?;
        let residuals = verify(&pencil, &form, &q, &S::one(), None, x0, opts, opts.seed)
            .map_err(|e| Error::Stage {
                stage: "verify",
                attempts: 1,
                source: Box::new(e),
            })?;
        let trace = ConstructionTrace {
            degree: 1,
            x0: x0.to_vec(),
            form,
            interlacer: q,
            rz_status: Some(rz.status),
            attempts: 1,
            attempt_seed: opts.seed,
            raw: None,
            sign: 1,
            pivots: vec![S::one()],
            kappa: S::one(),
            pencil: pencil.clone(),
            residuals,
            notes,
        };
        return Ok((pencil, trace));
    }

    let q = match interlacer {
        InterlacerSpec::DerivativeAt(at) => {
            let dir = base_point(at.as_deref().unwrap_or(x0));
            if dir.len() != 3 {
                return Err(pre(Error::DimensionMismatch { expected: 2, got: dir.len() - 1 }));
            }
            let (q, vanished) = form.directional_derivative(&dir).map_err(pre)?;
            if vanished {
                return Err(pre(Error::ZeroPolynomial));
            }
            q
        }
        InterlacerSpec::Explicit(q) => interlacer_form(&form, q).map_err(pre)?,
    };

    check_smooth(&form, opts.seed).map_err(|e| Error::Stage {
        stage: "smoothness",
        attempts: 1,
        source: Box::new(e),
    })?;

    let ((raw, norm, pencil, kappa, residuals), attempts, seed) = retry(opts.max_retries, opts.seed, |s| {
        let raw = raw_once(&form, &q, s)?;
        let norm = at("normalize", normalize_at_basepoint(&raw.u, &big_x0, opts.tol))?;
        let pencil = at("normalize", MatrixPencil::new(norm.mats.clone()))?;
        let k = kappa(&raw, &norm, m);
        let residuals = at("verify", verify(&pencil, &form, &q, &k, Some(&raw), x0, opts, s))?;
        Ok((raw, norm, pencil, k, residuals))
    })?;
    if attempts > 1 {
        notes.push(format!("succeeded on attempt {attempts}"));
    }
    let trace = ConstructionTrace {
        degree: m,
        x0: x0.to_vec(),
        form,
        interlacer: q,
        rz_status: Some(rz.status),
        attempts,
        attempt_seed: seed,
        raw: Some(raw),
        sign: norm.sign,
        pivots: norm.pivots,
        kappa,
        pencil: pencil.clone(),
        residuals,
        notes,
    };
    Ok((pencil, trace))
}

#[cfg(test)]
mod tests;
