//! Bezoutiants and interlacing tests.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{nullspace, rank, to_dmatrix};
use crate::poly::{HomogeneousPolynomial, PolyMatrix, Polynomial, UnivariatePolynomial};
use crate::realroots::{real_roots, Rootedness};
use crate::report::{Status, VerdictReport, Witness};
use crate::rz::relative_min_eigenvalue;
use crate::sampling::{par_indexed, stream, unit_sphere};
use crate::scalar::Scalar;

/// Bezoutiant of coefficient sequences (ascending), with entries in any
/// polynomial ring: `Σ b_ij t^i s^j = (f(t) g(s) − f(s) g(t)) / (t − s)`.
fn bezout_generic<S: Scalar>(f: &[Polynomial<S>], g: &[Polynomial<S>], m: usize, nvars: usize) -> PolyMatrix<S> {
    let zero = Polynomial::zero(nvars);
    let at = |v: &[Polynomial<S>], k: usize| v.get(k).cloned().unwrap_or_else(|| zero.clone());
    let mut b = PolyMatrix::zeros(m, m, nvars);
    for a in 1..=m {
        for lo in 0..a {
            let c = &(&at(f, a) * &at(g, lo)) - &(&at(f, lo) * &at(g, a));
            if c.is_zero() {
                continue;
            }
            for k in 0..a - lo {
                let (i, j) = (lo + k, a - 1 - k);
                let v = b.get(i, j) + &c;
                b.set(i, j, v);
            }
        }
    }
    b
}

/// Bezout matrix `B(f, g)` of univariate polynomials, `m = deg f`.
pub fn bezout_matrix<S: Scalar>(
    f: &UnivariatePolynomial<S>,
    g: &UnivariatePolynomial<S>,
) -> Result<Vec<Vec<S>>> {
    let m = f.degree().ok_or(Error::ZeroPolynomial)?;
    if m == 0 {
        return Err(Error::DegreeMismatch("Bezoutiant needs deg f >= 1".into()));
    }
    if g.degree().is_some_and(|dg| dg > m) {
        return Err(Error::DegreeMismatch(format!("deg g exceeds deg f = {m}")));
    }
    let lift = |u: &UnivariatePolynomial<S>| -> Vec<Polynomial<S>> {
        u.coeffs().iter().map(|c| Polynomial::constant(0, c.clone())).collect()
    };
    let b = bezout_generic(&lift(f), &lift(g), m, 0);
    Ok((0..m)
        .map(|i| (0..m).map(|j| b.get(i, j).coeff(&[])).collect())
        .collect())
}

/// Nullity of `B(f, g)`: the number of common roots of `f` and `g`, with
/// multiplicity.
pub fn common_zero_count<S: Scalar>(
    f: &UnivariatePolynomial<S>,
    g: &UnivariatePolynomial<S>,
    tol: f64,
) -> Result<usize> {
    let b = bezout_matrix(f, g)?;
    let m = b.len();
    Ok(m - rank(&b, m, tol))
}

/// Bring a candidate interlacer to degree `m − 1`: a form of degree `m − 2`
/// is multiplied by `X_0`.
pub fn adjust_interlacer<S: Scalar>(
    p: &HomogeneousPolynomial<S>,
    q: &HomogeneousPolynomial<S>,
) -> Result<HomogeneousPolynomial<S>> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let m = p.degree();
    if q.degree() + 1 == m {
        Ok(q.clone())
    } else if q.degree() + 2 == m {
        let x0 = HomogeneousPolynomial::new(Polynomial::var(p.nvars(), 0), 1)?;
        Ok(q.mul(&x0))
    } else {
        Err(Error::DegreeMismatch(format!(
            "interlacer of degree {} for a form of degree {m}",
            q.degree()
        )))
    }
}

/// Coefficients (ascending in `t`) of `t^m f(x⁰ + x/t)` as polynomials in `x`.
fn reversed_symbolic<S: Scalar>(f: &Polynomial<S>, x0: &[S], m: usize) -> Result<Vec<Polynomial<S>>> {
    let parts = f.symbolic_line_coefficients(x0)?;
    Ok((0..=m)
        .map(|j| parts.get(m - j).cloned().unwrap_or_else(|| Polynomial::zero(f.nvars())))
        .collect())
}

fn random_line_restriction<S: Scalar>(
    p: &HomogeneousPolynomial<S>,
    a: &[S],
    b: &[S],
) -> Result<UnivariatePolynomial<S>> {
    p.poly().restrict_to_line(a, b)
}

/// `true` when `P` and `Q` have no common factor. Decided by restricting both
/// to random projective lines: a shared factor survives on every line, while
/// a generic line misses the finitely many common points.
pub fn relatively_prime<S: Scalar>(
    p: &HomogeneousPolynomial<S>,
    q: &HomogeneousPolynomial<S>,
    seed: u64,
) -> Result<bool> {
    if p.is_zero() || q.is_zero() {
        return Ok(false);
    }
    if q.degree() == 0 || p.degree() == 0 {
        return Ok(true);
    }
    let n = p.nvars();
    for attempt in 0..4u64 {
        let mut rng = stream(seed ^ 0x5eed_0f_c0ffee, attempt);
        let (a, b): (Vec<S>, Vec<S>) = if S::EXACT {
            (
                (0..n).map(|_| S::from_i64(rng.random_range(-9..=9))).collect(),
                (0..n).map(|_| S::from_i64(rng.random_range(-9..=9))).collect(),
            )
        } else {
            (
                unit_sphere(&mut rng, n).into_iter().map(S::from_f64).collect(),
                unit_sphere(&mut rng, n).into_iter().map(S::from_f64).collect(),
            )
        };
        let f = random_line_restriction(p, &a, &b)?;
        let g = random_line_restriction(q, &a, &b)?;
        if f.degree() != Some(p.degree() as usize) || g.degree() != Some(q.degree() as usize) {
            continue; // line through a point at infinity of the chart; pick another
        }
        if S::EXACT {
            if f.gcd(&g).degree() == Some(0) {
                return Ok(true);
            }
        } else {
            let fc = f.monic();
            let gc = g.monic();
            let b = bezout_matrix(&fc, &gc.scale(&S::one()))?;
            let bm = to_dmatrix(&b, b.len());
            let sv = bm.singular_values();
            let smax = sv.iter().cloned().fold(0.0, f64::max);
            let smin = sv.iter().cloned().fold(f64::INFINITY, f64::min);
            if smin > 1e-10 * smax {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Bezoutiant field `B(P, Q; x⁰)`: the Bezout matrix of `t^m p(x⁰ + x/t)` and
/// `t^{m−1} q(x⁰ + x/t)`, with entries polynomial in `x`.
pub fn bezoutiant_field<S: Scalar>(
    p: &HomogeneousPolynomial<S>,
    q: &HomogeneousPolynomial<S>,
    x0: &[S],
) -> Result<PolyMatrix<S>> {
    let q = adjust_interlacer(p, q)?;
    if !relatively_prime(p, &q, 0)? {
        return Err(Error::NotRelativelyPrime);
    }
    let m = p.degree() as usize;
    let ph = p.dehomogenize();
    let qh = q.dehomogenize();
    if ph.evaluate(x0)?.is_zero() {
        return Err(Error::VanishesAtBasePoint);
    }
    let f = reversed_symbolic(&ph, x0, m)?;
    let g = reversed_symbolic(&qh, x0, m - 1)?;
    Ok(bezout_generic(&f, &g, m, ph.nvars()))
}

/// The projective base point `(1, x⁰)` in floats.
fn base_vector<S: Scalar>(x0: &[S]) -> Vec<S> {
    let mut v = vec![S::one()];
    v.extend_from_slice(x0);
    v
}

/// Outcome of the alternation test on one line.
#[derive(Debug, Clone, PartialEq)]
pub enum ChainOutcome {
    Holds,
    /// Roots of P or Q not real, or an adjacent pair out of order.
    Violated(String),
    Inconclusive(String),
}

/// Check `s_1 ≤ s'_1 ≤ s_2 ≤ … ≤ s'_{m−1} ≤ s_m` for the roots `s` of `f`
/// and `s'` of `g` (with multiplicity), allowing ties within `tol·scale`.
pub fn alternation_chain<S: Scalar>(
    f: &UnivariatePolynomial<S>,
    g: &UnivariatePolynomial<S>,
    tol: f64,
) -> Result<ChainOutcome> {
    let rf = real_roots(f, tol)?;
    let rg = real_roots(g, tol)?;
    for (name, r) in [("P", &rf), ("Q", &rg)] {
        match r.rootedness() {
            Rootedness::AllReal => {}
            Rootedness::NotAllReal => {
                return Ok(ChainOutcome::Violated(format!(
                    "{name} has {} non-real roots on the line",
                    r.complex_count
                )))
            }
            Rootedness::Inconclusive => {
                return Ok(ChainOutcome::Inconclusive(format!(
                    "{name} has roots of uncertain reality"
                )))
            }
        }
    }
    let s = rf.expanded();
    let t = rg.expanded();
    if t.len() + 1 != s.len() {
        return Ok(ChainOutcome::Violated(format!(
            "{} roots of P against {} roots of Q",
            s.len(),
            t.len()
        )));
    }
    let scale = 1.0 + s.iter().chain(&t).fold(0.0f64, |a, v| a.max(v.abs()));
    let band = tol.sqrt().max(tol) * scale;
    for k in 0..t.len() {
        if s[k] > t[k] + band {
            return Ok(ChainOutcome::Violated(format!(
                "s_{} = {:.6} > s'_{} = {:.6}",
                k + 1,
                s[k],
                k + 1,
                t[k]
            )));
        }
        if t[k] > s[k + 1] + band {
            return Ok(ChainOutcome::Violated(format!(
                "s'_{} = {:.6} > s_{} = {:.6}",
                k + 1,
                t[k],
                k + 2,
                s[k + 1]
            )));
        }
    }
    Ok(ChainOutcome::Holds)
}

/// Sampled interlacing test along lines `X + s·X⁰` through the base point.
pub fn interlaces_sampled<S: Scalar>(
    p: &HomogeneousPolynomial<S>,
    q: &HomogeneousPolynomial<S>,
    x0: &[S],
    num_lines: usize,
    tol: f64,
    seed: u64,
) -> Result<VerdictReport> {
    let q = adjust_interlacer(p, q)?;
    if !relatively_prime(p, &q, seed)? {
        return Err(Error::NotRelativelyPrime);
    }
    let big_x0 = base_vector(x0);
    let n = p.nvars();
    let outcomes = par_indexed(seed, num_lines, |_, rng| -> Result<(ChainOutcome, Vec<f64>)> {
        let x = unit_sphere(rng, n);
        let xs: Vec<S> = x.iter().map(|&v| S::from_f64(v)).collect();
        let f = p.restrict_pencil(&xs, &big_x0)?;
        let g = q.restrict_pencil(&xs, &big_x0)?;
        Ok((alternation_chain(&f, &g, tol)?, x))
    });
    let base_f: Vec<f64> = big_x0.iter().map(|v| v.to_c64().re).collect();
    let mut report = VerdictReport::new("interlacing-sampled", Status::Pass, num_lines, tol);
    for o in outcomes {
        let (outcome, x) = o?;
        match outcome {
            ChainOutcome::Holds => {}
            ChainOutcome::Violated(msg) => {
                report.status = Status::Fail;
                report.witness = Some(Witness::line(x, base_f.clone(), msg));
                return Ok(report);
            }
            ChainOutcome::Inconclusive(msg) => {
                if report.status == Status::Pass {
                    report.status = Status::Inconclusive;
                    report.witness = Some(Witness::line(x, base_f.clone(), msg));
                }
            }
        }
    }
    Ok(report)
}

/// Sampled positive-semidefiniteness of the Bezoutiant field, after
/// orienting `Q` so that `p(x⁰) q(x⁰) > 0`.
pub fn psd_interlacing_check<S: Scalar>(
    p: &HomogeneousPolynomial<S>,
    q: &HomogeneousPolynomial<S>,
    x0: &[S],
    samples: usize,
    tol: f64,
    seed: u64,
) -> Result<VerdictReport> {
    let q = adjust_interlacer(p, q)?;
    let base = base_vector(x0);
    let pv = p.evaluate(&base)?.to_c64().re;
    let qv = q.evaluate(&base)?.to_c64().re;
    let q = if pv * qv < 0.0 { q.scale(&-S::one()) } else { q };
    let field = bezoutiant_field(p, &q, x0)?;
    let d = x0.len();
    let margins = par_indexed(seed, samples, |_, rng| {
        let x = unit_sphere(rng, d);
        let xc: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        (relative_min_eigenvalue(&field.eval_c64(&xc)), x)
    });
    let worst = margins.iter().map(|(v, _)| *v).fold(f64::INFINITY, f64::min);
    let mut report = VerdictReport::new("interlacing-bezoutiant-psd", Status::Pass, samples, tol)
        .with_residual(worst.min(0.0).abs());
    if qv == 0.0 {
        report.status = Status::Fail;
        report = report.with_note("interlacer vanishes at the base point");
        return Ok(report);
    }
    if let Some((v, x)) = margins.iter().find(|(v, _)| *v < -tol) {
        report.status = Status::Fail;
        report = report.with_witness(Witness::point(
            x.clone(),
            format!("relative minimum eigenvalue {v:.3e}"),
        ));
    }
    Ok(report)
}

/// Vectors spanning the kernel of `B(f, g)`; exposed for diagnostics.
pub fn bezout_kernel<S: Scalar>(
    f: &UnivariatePolynomial<S>,
    g: &UnivariatePolynomial<S>,
    tol: f64,
) -> Result<Vec<Vec<S>>> {
    let b = bezout_matrix(f, g)?;
    let m = b.len();
    Ok(nullspace(&b, m, tol))
}
