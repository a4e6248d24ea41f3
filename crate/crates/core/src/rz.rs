//! Real-zero certification, Hermite matrices, Renegar derivatives and
//! membership in the rigidly convex region.
//!
//! `p` is real-zero with respect to `x⁰` when every restriction
//! `t ↦ p(x⁰ + t·x)` has only real roots. The sampled test checks random
//! directions; the Hermite test checks positive semidefiniteness of the
//! Hankel matrix of root power sums, sampled over directions.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::hermitian_eigenvalues;
use crate::poly::{HomogeneousPolynomial, PolyMatrix, Polynomial};
use crate::realroots::{power_sums_symbolic, root_census, Rootedness};
use crate::report::{Status, VerdictReport, Witness};
use crate::sampling::{par_indexed, unit_sphere};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RzStatus {
    /// Every sampled line was real-rooted; a probabilistic verdict.
    RzConfirmedSampled,
    NotRz,
    Inconclusive,
}

impl RzStatus {
    pub fn status(self) -> Status {
        match self {
            RzStatus::RzConfirmedSampled => Status::Pass,
            RzStatus::NotRz => Status::Fail,
            RzStatus::Inconclusive => Status::Inconclusive,
        }
    }
}

/// A line `x0 + t·dir` whose restriction is not (or not clearly) real-rooted.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LineWitness {
    pub x0: Vec<f64>,
    pub dir: Vec<f64>,
    pub real_roots: usize,
    pub complex_roots: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RzVerdict {
    pub status: RzStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<LineWitness>,
    pub lines_tested: usize,
    pub tol: f64,
}

fn check_base<S: Scalar>(p: &Polynomial<S>, x0: &[S]) -> Result<S> {
    let v = p.evaluate(x0)?;
    if v.negligible(p.max_coeff(), 1e-14) {
        return Err(Error::VanishesAtBasePoint);
    }
    Ok(v)
}

const EXACT_DIR_SCALE: f64 = (1u64 << 20) as f64;

/// Sampled real-zero test along `num_lines` uniformly random directions.
pub fn is_rz_sampled<S: Scalar>(
    p: &Polynomial<S>,
    x0: &[S],
    num_lines: usize,
    tol: f64,
    seed: u64,
) -> Result<RzVerdict> {
    check_base(p, x0)?;
    let d = p.nvars();
    let x0f: Vec<f64> = x0.iter().map(|v| v.to_c64().re).collect();
    let outcomes = par_indexed(seed, num_lines, |_, rng| -> Result<Option<(Rootedness, LineWitness)>> {
        let mut dir = unit_sphere(rng, d);
        if S::EXACT {
            // short dyadic coordinates keep the exact restriction small
            dir.iter_mut().for_each(|v| *v = (*v * EXACT_DIR_SCALE).round() / EXACT_DIR_SCALE);
        }
        let dir_s: Vec<S> = dir.iter().map(|&v| S::from_f64(v)).collect();
        let r = p.restrict_to_line(x0, &dir_s)?;
        let (verdict, real, complex) = root_census(&r, tol)?;
        match verdict {
            Rootedness::AllReal => Ok(None),
            verdict => Ok(Some((
                verdict,
                LineWitness {
                    x0: x0f.clone(),
                    dir,
                    real_roots: real,
                    complex_roots: complex,
                },
            ))),
        }
    });
    let mut first_doubt = None;
    for o in outcomes {
        match o? {
            Some((Rootedness::NotAllReal, w)) => {
                return Ok(RzVerdict {
                    status: RzStatus::NotRz,
                    witness: Some(w),
                    lines_tested: num_lines,
                    tol,
                })
            }
            Some((_, w)) if first_doubt.is_none() => first_doubt = Some(w),
            _ => {}
        }
    }
    Ok(RzVerdict {
        status: if first_doubt.is_some() {
            RzStatus::Inconclusive
        } else {
            RzStatus::RzConfirmedSampled
        },
        witness: first_doubt,
        lines_tested: num_lines,
        tol,
    })
}

/// Hankel matrix of power sums of the roots of `t^m p(x⁰ + x/t)`, with
/// polynomial entries in the direction `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteMatrix<S> {
    pub matrix: PolyMatrix<S>,
    pub x0: Vec<S>,
    pub degree: u32,
}

pub fn hermite_matrix<S: Scalar>(p: &Polynomial<S>, x0: &[S]) -> Result<HermiteMatrix<S>> {
    check_base(p, x0)?;
    let d = p.nvars();
    let m = p.degree().unwrap_or(0) as usize;
    // c_k = degree-k part of p(x0 + x) is the coefficient of t^{m-k}
    let parts = p.symbolic_line_coefficients(x0)?;
    let coeffs: Vec<Polynomial<S>> = (0..=m)
        .map(|j| parts.get(m - j).cloned().unwrap_or_else(|| Polynomial::zero(d)))
        .collect();
    let mut matrix = PolyMatrix::zeros(m, m, d);
    if m > 0 {
        let sums = power_sums_symbolic(&coeffs, 2 * m - 2)?;
        for i in 0..m {
            for j in 0..m {
                matrix.set(i, j, sums[i + j].clone());
            }
        }
    }
    Ok(HermiteMatrix {
        matrix,
        x0: x0.to_vec(),
        degree: m as u32,
    })
}

/// Smallest eigenvalue of a hermitian matrix relative to its spectral radius.
pub(crate) fn relative_min_eigenvalue(m: &nalgebra::DMatrix<Complex64>) -> f64 {
    let ev = hermitian_eigenvalues(m);
    let scale = ev.iter().map(|v| v.abs()).fold(0.0, f64::max);
    if scale == 0.0 {
        return 0.0;
    }
    ev[0] / scale
}

/// Sampled positive-semidefiniteness test of a Hermite matrix over unit
/// directions (the matrix at `λx` is a diagonal congruence of the one at
/// `x`, so the sphere suffices).
pub fn hermite_psd_check<S: Scalar>(
    h: &HermiteMatrix<S>,
    num_samples: usize,
    tol: f64,
    seed: u64,
) -> VerdictReport {
    let m = h.degree as usize;
    if m == 0 {
        return VerdictReport::new("hermite-psd", Status::Pass, 0, tol)
            .with_note("empty matrix");
    }
    let d = h.matrix.nvars();
    let margins = par_indexed(seed, num_samples, |_, rng| {
        let x = unit_sphere(rng, d);
        let xc: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        (relative_min_eigenvalue(&h.matrix.eval_c64(&xc)), x)
    });
    let worst = margins
        .iter()
        .map(|(v, _)| *v)
        .fold(f64::INFINITY, f64::min);
    let mut report = VerdictReport::new("hermite-psd", Status::Pass, num_samples, tol)
        .with_residual(worst.min(0.0).abs());
    if let Some((v, x)) = margins.iter().find(|(v, _)| *v < -tol) {
        report.status = Status::Fail;
        report = report.with_witness(Witness::point(
            x.clone(),
            format!("relative minimum eigenvalue {v:.3e}"),
        ));
    }
    report
}

/// `k`-th Renegar derivative: the dehomogenized `d^k/ds^k P(X + sX⁰)` at
/// `s = 0`, with `X⁰ = (1, x⁰)`. The flag reports an identically zero
/// result (which happens exactly when `k > deg p`).
pub fn renegar_derivative<S: Scalar>(
    p: &Polynomial<S>,
    x0: &[S],
    k: u32,
) -> Result<(Polynomial<S>, bool)> {
    if x0.len() != p.nvars() {
        return Err(Error::DimensionMismatch {
            expected: p.nvars(),
            got: x0.len(),
        });
    }
    let m = p.degree().unwrap_or(0);
    let mut big_x0 = vec![S::one()];
    big_x0.extend_from_slice(x0);
    let mut form = HomogeneousPolynomial::homogenize(p, m)?;
    for _ in 0..k {
        form = form.directional_derivative(&big_x0)?.0;
        if form.is_zero() {
            break;
        }
    }
    let out = form.dehomogenize();
    let vanished = out.is_zero();
    Ok((out, vanished))
}

/// The nested description of the rigidly convex region through `x⁰`:
/// `p ≥ 0` together with all Renegar derivatives `p^{(k)} ≥ 0`,
/// `k = 1, …, m−1`. Caller vouches that `p` is real-zero at `x⁰`.
#[derive(Debug, Clone)]
pub struct MembershipOracle {
    /// `p, p^{(1)}, …, p^{(m-1)}`, each signed to be positive at `x⁰`.
    levels: Vec<Polynomial<Complex64>>,
}

impl MembershipOracle {
    pub fn new<S: Scalar>(p: &Polynomial<S>, x0: &[S]) -> Result<Self> {
        let v = check_base(p, x0)?;
        let sign = if v.to_c64().re < 0.0 { -1.0 } else { 1.0 };
        let m = p.degree().unwrap_or(0);
        let mut levels = Vec::new();
        for k in 0..m.max(1) {
            let (q, _) = renegar_derivative(p, x0, k)?;
            levels.push(q.convert::<Complex64>().scale(&Complex64::new(sign, 0.0)));
        }
        Ok(MembershipOracle { levels })
    }

    /// Values `p(x), p^{(1)}(x), …` at a real point.
    pub fn values(&self, x: &[f64]) -> Vec<f64> {
        self.levels.iter().map(|q| q.eval_real(x).re).collect()
    }

    pub fn contains(&self, x: &[f64], tol: f64) -> bool {
        self.values(x).iter().all(|&v| v >= -tol)
    }
}

/// `true` iff `x` satisfies `p ≥ −tol` and `p^{(k)} ≥ −tol` for all `k`.
pub fn membership<S: Scalar>(p: &Polynomial<S>, x0: &[S], x: &[f64], tol: f64) -> Result<bool> {
    Ok(MembershipOracle::new(p, x0)?.contains(x, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussRational as Q;

    fn circle<S: Scalar>() -> Polynomial<S> {
        Polynomial::from_terms(
            2,
            [
                (vec![0, 0], S::one()),
                (vec![2, 0], -S::one()),
                (vec![0, 2], -S::one()),
            ],
        )
        .unwrap()
    }

    fn tv<S: Scalar>() -> Polynomial<S> {
        Polynomial::from_terms(
            2,
            [
                (vec![0, 0], S::one()),
                (vec![4, 0], -S::one()),
                (vec![0, 4], -S::one()),
            ],
        )
        .unwrap()
    }

    #[test]
    fn circle_is_rz_tv_is_not() {
        let z = [Q::zero(), Q::zero()];
        let v = is_rz_sampled(&circle::<Q>(), &z, 50, 1e-8, 7).unwrap();
        assert_eq!(v.status, RzStatus::RzConfirmedSampled);
        let v = is_rz_sampled(&tv::<Q>(), &z, 10, 1e-8, 7).unwrap();
        assert_eq!(v.status, RzStatus::NotRz);
        assert_eq!(v.witness.unwrap().complex_roots, 2);
        let zf = [Complex64::new(0.0, 0.0); 2];
        let v = is_rz_sampled(&tv::<Complex64>(), &zf, 10, 1e-8, 7).unwrap();
        assert_eq!(v.status, RzStatus::NotRz);
    }

    #[test]
    fn base_point_on_curve_rejected() {
        let x = [Q::one(), Q::zero()];
        assert_eq!(
            is_rz_sampled(&circle::<Q>(), &x, 5, 1e-8, 0).unwrap_err(),
            Error::VanishesAtBasePoint
        );
    }

    #[test]
    fn circle_hermite_closed_form() {
        let h = hermite_matrix(&circle::<Q>(), &[Q::zero(), Q::zero()]).unwrap();
        let x1 = Polynomial::<Q>::var(2, 0);
        let x2 = Polynomial::<Q>::var(2, 1);
        let r = &(&x1 * &x1) + &(&x2 * &x2);
        assert_eq!(h.matrix.get(0, 0), &Polynomial::constant(2, Q::from_i64(2)));
        assert!(h.matrix.get(0, 1).is_zero());
        assert!(h.matrix.get(1, 0).is_zero());
        assert_eq!(h.matrix.get(1, 1), &r.scale(&Q::from_i64(2)));
        assert!(hermite_psd_check(&h, 100, 1e-9, 1).passed());
    }

    #[test]
    fn linear_hermite_is_one() {
        let p = Polynomial::linear(Q::one(), &[-Q::one(), Q::zero()]);
        let h = hermite_matrix(&p, &[Q::zero(), Q::zero()]).unwrap();
        assert_eq!(h.matrix.rows(), 1);
        assert_eq!(h.matrix.get(0, 0), &Polynomial::one(2));
    }

    #[test]
    fn tv_hermite_has_negative_direction() {
        let h = hermite_matrix(&tv::<Q>(), &[Q::zero(), Q::zero()]).unwrap();
        let r = hermite_psd_check(&h, 50, 1e-9, 3);
        assert_eq!(r.status, Status::Fail);
        assert!(r.witness.is_some());
    }

    #[test]
    fn renegar_of_circle() {
        let z = [Q::zero(), Q::zero()];
        let (r1, _) = renegar_derivative(&circle::<Q>(), &z, 1).unwrap();
        assert_eq!(r1, Polynomial::constant(2, Q::from_i64(2)));
        let (r2, _) = renegar_derivative(&circle::<Q>(), &z, 2).unwrap();
        assert_eq!(r2, Polynomial::constant(2, Q::from_i64(2)));
        let (r0, _) = renegar_derivative(&circle::<Q>(), &z, 0).unwrap();
        assert_eq!(r0, circle());
        let (_, vanished) = renegar_derivative(&circle::<Q>(), &z, 3).unwrap();
        assert!(vanished);
    }

    #[test]
    fn circle_membership() {
        let z = [Q::zero(), Q::zero()];
        assert!(membership(&circle::<Q>(), &z, &[0.5, 0.0], 1e-12).unwrap());
        assert!(!membership(&circle::<Q>(), &z, &[2.0, 0.0], 1e-12).unwrap());
        assert!(membership(&circle::<Q>(), &z, &[0.0, 0.0], 1e-12).unwrap());
    }
}
