//! Linear matrix pencils `A_0 + x_1 A_1 + … + x_d A_d` with hermitian
//! coefficients, their determinants, and their real-symmetric doubling.

mod checks;
pub mod io;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, least_squares, udu_upper};
use crate::poly::{convert_scalar, HomogeneousPolynomial, PolyMatrix, Polynomial, DEFAULT_DET_BOUND};
use crate::sampling::{in_box, stream};
use crate::scalar::Scalar;

pub use checks::{
    COFACTOR_CHOP, DET_RESIDUAL_TOL,
    cauchy_cross_check, derdet_check, eigenspace_orthogonality_check, pairing_check, verify_lmi,
    CrossCheckReport, OrthogonalityReport, VerificationReport,
};

/// Relative tolerance for the hermitian test on float coefficients.
const HERMITIAN_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetryClass {
    RealSymmetric,
    Hermitian,
}

/// Sign pattern of a hermitian matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Definiteness {
    PositiveDefinite,
    NegativeDefinite,
    Indefinite,
    /// Some eigenvalue lies within the tolerance band around zero.
    Inconclusive,
}

impl Definiteness {
    pub fn is_definite(self) -> bool {
        matches!(self, Definiteness::PositiveDefinite | Definiteness::NegativeDefinite)
    }
}

/// `A_0 + x_1 A_1 + … + x_d A_d`, each `A_α` an `n × n` hermitian matrix.
///
/// Projectively the same data reads `U(X) = X_0 A_0 + … + X_d A_d`.
#[derive(Clone, PartialEq)]
pub struct MatrixPencil<S> {
    n: usize,
    mats: Vec<Vec<Vec<S>>>,
    class: SymmetryClass,
}

impl<S: std::fmt::Debug> std::fmt::Debug for MatrixPencil<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MatrixPencil")
            .field("n", &self.n)
            .field("class", &self.class)
            .field("mats", &self.mats)
            .finish()
    }
}

fn mat_scale<S: Scalar>(m: &[Vec<S>]) -> f64 {
    m.iter().flatten().map(|v| v.magnitude()).fold(0.0, f64::max)
}

impl<S: Scalar> MatrixPencil<S> {
    /// Build from `d + 1` square matrices of equal size. Each must be
    /// hermitian (exactly, or to a relative `1e-9` in float mode).
    pub fn new(mats: Vec<Vec<Vec<S>>>) -> Result<Self> {
        if mats.is_empty() {
            return Err(Error::Precondition("a pencil needs at least A_0".into()));
        }
        let n = mats[0].len();
        for m in &mats {
            if m.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: m.len() });
            }
            if let Some(r) = m.iter().find(|r| r.len() != n) {
                return Err(Error::NotSquare { rows: n, cols: r.len() });
            }
        }
        let scale = mats.iter().map(|m| mat_scale(m)).fold(0.0, f64::max);
        let mut real = true;
        for (alpha, m) in mats.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    let gap = m[i][j].clone() - m[j][i].conj();
                    if !gap.negligible(scale, HERMITIAN_TOL) {
                        return Err(Error::Precondition(format!(
                            "A_{alpha} is not hermitian at ({i}, {j})"
                        )));
                    }
                    if !m[i][j].im().negligible(scale, HERMITIAN_TOL) {
                        real = false;
                    }
                }
            }
        }
        let class = if real {
            SymmetryClass::RealSymmetric
        } else {
            SymmetryClass::Hermitian
        };
        Ok(MatrixPencil { n, mats, class })
    }

    /// Number of affine variables `d`.
    pub fn dim(&self) -> usize {
        self.mats.len() - 1
    }

    /// Matrix size `n`.
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn class(&self) -> SymmetryClass {
        self.class
    }

    pub fn matrices(&self) -> &[Vec<Vec<S>>] {
        &self.mats
    }

    pub fn matrix(&self, alpha: usize) -> Result<&Vec<Vec<S>>> {
        self.mats.get(alpha).ok_or(Error::OutOfRange {
            index: alpha,
            len: self.mats.len(),
        })
    }

    /// `U(X) = Σ X_α A_α` at a projective point.
    pub fn at_projective(&self, x: &[S]) -> Result<Vec<Vec<S>>> {
        if x.len() != self.mats.len() {
            return Err(Error::DimensionMismatch {
                expected: self.mats.len(),
                got: x.len(),
            });
        }
        let mut out = vec![vec![S::zero(); self.n]; self.n];
        for (c, m) in x.iter().zip(&self.mats) {
            if c.is_zero() {
                continue;
            }
            for i in 0..self.n {
                for j in 0..self.n {
                    out[i][j] = out[i][j].clone() + c.clone() * m[i][j].clone();
                }
            }
        }
        Ok(out)
    }

    /// `A(x) = A_0 + Σ x_i A_i`.
    pub fn at(&self, x: &[S]) -> Result<Vec<Vec<S>>> {
        let mut big = Vec::with_capacity(x.len() + 1);
        big.push(S::one());
        big.extend_from_slice(x);
        self.at_projective(&big)
    }

    /// `U(X)` in floating point at a complex projective point.
    pub fn eval_projective_c64(&self, x: &[Complex64]) -> DMatrix<Complex64> {
        let mut out = DMatrix::<Complex64>::zeros(self.n, self.n);
        for (c, m) in x.iter().zip(&self.mats) {
            for i in 0..self.n {
                for j in 0..self.n {
                    out[(i, j)] += c * m[i][j].to_c64();
                }
            }
        }
        out
    }

    /// `A(x)` in floating point at a real affine point.
    pub fn eval_f64(&self, x: &[f64]) -> DMatrix<Complex64> {
        let mut big = vec![Complex64::new(1.0, 0.0)];
        big.extend(x.iter().map(|&v| Complex64::new(v, 0.0)));
        self.eval_projective_c64(&big)
    }

    /// `U(X)` as a matrix of linear forms in `X_0, …, X_d`.
    pub fn homogeneous_matrix(&self) -> PolyMatrix<S> {
        PolyMatrix::linear_pencil(&self.mats)
    }

    /// `A(x)` as a matrix of affine-linear polynomials in `x_1, …, x_d`.
    pub fn affine_matrix(&self) -> PolyMatrix<S> {
        let d = self.dim();
        let mut out = PolyMatrix::zeros(self.n, self.n, d);
        for i in 0..self.n {
            for j in 0..self.n {
                let coeffs: Vec<S> = self.mats[1..].iter().map(|m| m[i][j].clone()).collect();
                out.set(i, j, Polynomial::linear(self.mats[0][i][j].clone(), &coeffs));
            }
        }
        out
    }

    /// Block-diagonal pencil `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.mats.len() != other.mats.len() {
            return Err(Error::DimensionMismatch {
                expected: self.mats.len(),
                got: other.mats.len(),
            });
        }
        let n = self.n + other.n;
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| {
                let mut m = vec![vec![S::zero(); n]; n];
                for i in 0..self.n {
                    for j in 0..self.n {
                        m[i][j] = a[i][j].clone();
                    }
                }
                for i in 0..other.n {
                    for j in 0..other.n {
                        m[self.n + i][self.n + j] = b[i][j].clone();
                    }
                }
                m
            })
            .collect();
        Self::new(mats)
    }

    /// Multiply every coefficient by a real scalar.
    pub fn scale(&self, c: &S) -> Self {
        MatrixPencil {
            n: self.n,
            mats: self
                .mats
                .iter()
                .map(|m| m.iter().map(|r| r.iter().map(|v| v.clone() * c.clone()).collect()).collect())
                .collect(),
            class: self.class,
        }
    }

    /// `A_α ← T A_α T*` for every `α`.
    pub fn congruence(&self, t: &[Vec<S>]) -> Result<Self> {
        let tstar = crate::linalg::conj_transpose(t);
        let mats = self
            .mats
            .iter()
            .map(|m| crate::linalg::mat_mul(&crate::linalg::mat_mul(t, m), &tstar))
            .collect();
        Self::new(mats)
    }

    pub fn convert<T: Scalar>(&self) -> MatrixPencil<T> {
        MatrixPencil {
            n: self.n,
            mats: self
                .mats
                .iter()
                .map(|m| {
                    m.iter()
                        .map(|r| r.iter().map(|v| convert_scalar::<S, T>(v)).collect())
                        .collect()
                })
                .collect(),
            class: self.class,
        }
    }

    /// Sign pattern of `A(x⁰)`. In exact mode a successful triangular
    /// factorization decides the answer without rounding; otherwise the
    /// eigenvalues are compared with `±tol·scale`.
    pub fn definiteness_at(&self, x0: &[S], tol: f64) -> Result<(Definiteness, Vec<f64>)> {
        let a = self.at(x0)?;
        let spectrum = hermitian_eigenvalues(&crate::linalg::to_dmatrix(&a, self.n));
        if S::EXACT {
            if let Ok((_, d)) = udu_upper(&a) {
                let pos = d.iter().filter(|v| v.to_c64().re > 0.0).count();
                let verdict = if pos == d.len() {
                    Definiteness::PositiveDefinite
                } else if pos == 0 {
                    Definiteness::NegativeDefinite
                } else {
                    Definiteness::Indefinite
                };
                return Ok((verdict, spectrum));
            }
        }
        Ok((classify_spectrum(&spectrum, tol), spectrum))
    }
}

/// Definiteness from eigenvalues, with a band of `tol` times the spectral
/// radius treated as undecided.
pub fn classify_spectrum(spectrum: &[f64], tol: f64) -> Definiteness {
    if spectrum.is_empty() {
        return Definiteness::PositiveDefinite;
    }
    let scale = spectrum.iter().fold(0.0f64, |a, v| a.max(v.abs())).max(f64::MIN_POSITIVE);
    let band = tol * scale;
    let lo = spectrum.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = spectrum.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if lo > band {
        Definiteness::PositiveDefinite
    } else if hi < -band {
        Definiteness::NegativeDefinite
    } else if lo < -band && hi > band {
        Definiteness::Indefinite
    } else {
        Definiteness::Inconclusive
    }
}

/// Monomial exponents of total degree at most `n` in `d` variables.
fn monomials_up_to(d: usize, n: u32) -> Vec<Vec<u32>> {
    fn rec(d: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(d, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, n, &mut Vec::new(), &mut out);
    out
}

/// Determinant of `A(x)` by interpolation: numeric determinants at seeded
/// points in the unit box, fitted by least squares over the monomials of
/// degree at most `n`.
fn interpolated_det<S: Scalar>(pencil: &MatrixPencil<S>) -> Polynomial<S> {
    let d = pencil.dim();
    let monos = monomials_up_to(d, pencil.size() as u32);
    let count = 2 * monos.len();
    let mut rng = stream(0x1e7e_7e57, 0);
    let pts: Vec<Vec<f64>> = (0..count).map(|_| in_box(&mut rng, &vec![0.0; d], 1.0)).collect();
    let a = DMatrix::from_fn(count, monos.len(), |r, c| {
        let v: f64 = monos[c]
            .iter()
            .zip(&pts[r])
            .map(|(&e, &x)| x.powi(e as i32))
            .product();
        Complex64::new(v, 0.0)
    });
    let b = nalgebra::DVector::from_fn(count, |r, _| pencil.eval_f64(&pts[r]).determinant());
    let sol = least_squares(&a, &b);
    let big = sol.iter().fold(0.0f64, |acc, v| acc.max(v.norm()));
    let mut p = Polynomial::zero(d);
    for (e, c) in monos.into_iter().zip(sol.iter()) {
        if c.norm() > 1e-12 * big {
            p.add_term(e, S::from_c64(*c));
        }
    }
    p
}

/// `det A(x)` as a polynomial in `x`, with a flag set when it vanishes
/// identically. Symbolic up to `bound`; larger float pencils are
/// interpolated and larger exact ones are refused.
pub fn det_poly_with_bound<S: Scalar>(
    pencil: &MatrixPencil<S>,
    bound: usize,
) -> Result<(Polynomial<S>, bool)> {
    let p = if pencil.size() <= bound {
        pencil.affine_matrix().determinant(bound)?
    } else if S::EXACT {
        return Err(Error::SizeBound {
            size: pencil.size(),
            bound,
        });
    } else {
        interpolated_det(pencil)
    };
    let zero = p.is_zero();
    Ok((p, zero))
}

pub fn det_poly<S: Scalar>(pencil: &MatrixPencil<S>) -> Result<(Polynomial<S>, bool)> {
    det_poly_with_bound(pencil, DEFAULT_DET_BOUND)
}

/// `det U(X)` as a form of degree `n`.
pub fn det_form<S: Scalar>(pencil: &MatrixPencil<S>) -> Result<HomogeneousPolynomial<S>> {
    let (p, _) = det_poly(pencil)?;
    HomogeneousPolynomial::homogenize(&p, pencil.size() as u32)
}

/// Replace `A = B + iC` by the real symmetric `[[B, −C], [C, B]]` of twice
/// the size.
pub fn realify<S: Scalar>(pencil: &MatrixPencil<S>) -> Result<MatrixPencil<S>> {
    let n = pencil.size();
    let mats = pencil
        .matrices()
        .iter()
        .map(|a| {
            let mut m = vec![vec![S::zero(); 2 * n]; 2 * n];
            for i in 0..n {
                for j in 0..n {
                    let b = a[i][j].re();
                    let c = a[i][j].im();
                    m[i][j] = b.clone();
                    m[n + i][n + j] = b;
                    m[i][n + j] = -c.clone();
                    m[n + i][j] = c;
                }
            }
            m
        })
        .collect();
    MatrixPencil::new(mats)
}

/// Numeric adjugate by signed minors (`adj Y · Y = det Y · I`).
pub(crate) fn adjugate_c64(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = m.nrows();
    if n == 1 {
        return DMatrix::from_element(1, 1, Complex64::new(1.0, 0.0));
    }
    DMatrix::from_fn(n, n, |j, i| {
        let minor = m.clone().remove_row(i).remove_column(j);
        let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
        minor.determinant() * sign
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussRational as Q;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    pub(crate) fn circle_pencil() -> MatrixPencil<Q> {
        let i = Q::i();
        MatrixPencil::new(vec![
            vec![vec![q(1), q(0)], vec![q(0), q(1)]],
            vec![vec![q(0), -i.clone()], vec![i, q(0)]],
            vec![vec![q(0), q(-1)], vec![q(-1), q(0)]],
        ])
        .unwrap()
    }

    #[test]
    fn circle_determinant() {
        let (p, zero) = det_poly(&circle_pencil()).unwrap();
        assert!(!zero);
        let expect = Polynomial::from_terms(
            2,
            [(vec![0, 0], q(1)), (vec![2, 0], q(-1)), (vec![0, 2], q(-1))],
        )
        .unwrap();
        assert_eq!(p, expect);
        assert_eq!(circle_pencil().class(), SymmetryClass::Hermitian);
    }

    #[test]
    fn diagonal_determinant_is_product() {
        let diag = |v: [i64; 2]| vec![vec![q(v[0]), q(0)], vec![q(0), q(v[1])]];
        let p = MatrixPencil::new(vec![diag([1, 2]), diag([3, -1]), diag([0, 5])]).unwrap();
        let (d, _) = det_poly(&p).unwrap();
        let f1 = Polynomial::linear(q(1), &[q(3), q(0)]);
        let f2 = Polynomial::linear(q(2), &[q(-1), q(5)]);
        assert_eq!(d, &f1 * &f2);
        assert_eq!(p.class(), SymmetryClass::RealSymmetric);
    }

    #[test]
    fn zero_pencil_flagged() {
        let z = vec![vec![q(0); 3]; 3];
        let p = MatrixPencil::new(vec![z.clone(), z.clone(), z]).unwrap();
        let (d, zero) = det_poly(&p).unwrap();
        assert!(zero && d.is_zero());
    }

    #[test]
    fn non_hermitian_rejected() {
        let m = vec![vec![q(0), q(1)], vec![q(0), q(0)]];
        assert!(MatrixPencil::new(vec![m]).is_err());
    }

    #[test]
    fn realify_example() {
        let i = Q::i();
        let a = vec![vec![q(0), -i.clone()], vec![i, q(0)]];
        let p = MatrixPencil::new(vec![a]).unwrap();
        let r = realify(&p).unwrap();
        let expect: Vec<Vec<Q>> = [[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]]
            .iter()
            .map(|row| row.iter().map(|&v| q(v)).collect())
            .collect();
        assert_eq!(r.matrices()[0], expect);
        assert_eq!(r.class(), SymmetryClass::RealSymmetric);
    }

    #[test]
    fn realified_circle_squares_determinant() {
        let (p, _) = det_poly(&circle_pencil()).unwrap();
        let (r, _) = det_poly(&realify(&circle_pencil()).unwrap()).unwrap();
        assert_eq!(r, &p * &p);
    }

    #[test]
    fn interpolated_matches_symbolic() {
        let c = circle_pencil().convert::<Complex64>();
        let (sym, _) = det_poly(&c).unwrap();
        let (interp, _) = det_poly_with_bound(&c, 1).unwrap();
        for x in [[0.3, -0.2], [1.5, 0.7]] {
            let a = sym.eval_real(&x);
            let b = interp.eval_real(&x);
            assert!((a - b).norm() < 1e-10);
        }
    }

    #[test]
    fn adjugate_identity() {
        let m = circle_pencil().convert::<Complex64>().eval_f64(&[0.4, 0.1]);
        let prod = &m * adjugate_c64(&m);
        let d = m.determinant();
        for i in 0..2 {
            for j in 0..2 {
                let e = if i == j { d } else { Complex64::new(0.0, 0.0) };
                assert!((prod[(i, j)] - e).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn definiteness_classes() {
        let c = circle_pencil();
        assert_eq!(c.definiteness_at(&[q(0), q(0)], 1e-9).unwrap().0, Definiteness::PositiveDefinite);
        assert_eq!(
            c.scale(&q(-1)).definiteness_at(&[q(0), q(0)], 1e-9).unwrap().0,
            Definiteness::NegativeDefinite
        );
        assert_eq!(c.definiteness_at(&[q(2), q(0)], 1e-9).unwrap().0, Definiteness::Indefinite);
        assert_eq!(classify_spectrum(&[0.0, 1.0], 1e-9), Definiteness::Inconclusive);
    }
}
