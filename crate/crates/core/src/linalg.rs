//! Dense linear algebra over either coefficient field.
//!
//! Exact scalars go through fraction-based row reduction; floats go through
//! nalgebra's SVD and symmetric eigensolvers.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Minimum-norm least-squares solution of `a x ≈ b`.
pub fn least_squares(a: &DMatrix<Complex64>, b: &DVector<Complex64>) -> DVector<Complex64> {
    if a.ncols() == 0 {
        return DVector::zeros(0);
    }
    let svd = a.clone().svd(true, true);
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let eps = smax * 1e-13 * (a.nrows().max(a.ncols()) as f64);
    svd.solve(b, eps).unwrap_or_else(|_| DVector::zeros(a.ncols()))
}

pub fn to_dmatrix<S: Scalar>(a: &[Vec<S>], ncols: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(a.len(), ncols, |i, j| a[i][j].to_c64())
}

pub fn from_dmatrix<S: Scalar>(m: &DMatrix<Complex64>) -> Vec<Vec<S>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| S::from_c64(m[(i, j)])).collect())
        .collect()
}

/// Singular values and right singular vectors of `a` (rows padded with zeros
/// so that a full set of `ncols` right vectors is returned). Row `k` of the
/// returned `v_t` pairs with singular value `k`, in decreasing order.
fn full_svd(a: &DMatrix<Complex64>) -> (Vec<f64>, DMatrix<Complex64>) {
    let n = a.ncols();
    let mut padded = DMatrix::<Complex64>::zeros(a.nrows().max(n), n);
    padded.view_mut((0, 0), (a.nrows(), n)).copy_from(a);
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.unwrap();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
    let sv: Vec<f64> = order.iter().map(|&k| svd.singular_values[k]).collect();
    let vt = DMatrix::from_fn(n, n, |r, c| v_t[(order[r], c)]);
    (sv, vt)
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref<S: Scalar>(m: &mut [Vec<S>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = S::one() / m[row][col].clone();
        for c in col..m[row].len() {
            m[row][c] = m[row][c].clone() * inv.clone();
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..m[r].len() {
                    let v = m[row][c].clone();
                    m[r][c] = m[r][c].clone() - f.clone() * v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Numerical rank with relative singular-value threshold `tol` (exact rank
/// in exact mode).
pub fn rank<S: Scalar>(a: &[Vec<S>], ncols: usize, tol: f64) -> usize {
    if S::EXACT {
        let mut m = a.to_vec();
        rref(&mut m, ncols).len()
    } else {
        if a.is_empty() || ncols == 0 {
            return 0;
        }
        let (sv, _) = full_svd(&to_dmatrix(a, ncols));
        let smax = sv.first().copied().unwrap_or(0.0);
        sv.iter().filter(|&&s| s > tol * smax && s > 0.0).count()
    }
}

/// Basis of the right nullspace of `a` (an `a.len() × ncols` matrix).
pub fn nullspace<S: Scalar>(a: &[Vec<S>], ncols: usize, tol: f64) -> Vec<Vec<S>> {
    if S::EXACT {
        let mut m = a.to_vec();
        let pivots = rref(&mut m, ncols);
        let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(); ncols];
                v[f] = S::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m[r][f].clone();
                }
                v
            })
            .collect()
    } else {
        if a.is_empty() {
            return (0..ncols)
                .map(|k| (0..ncols).map(|j| if j == k { S::one() } else { S::zero() }).collect())
                .collect();
        }
        let (sv, vt) = full_svd(&to_dmatrix(a, ncols));
        let smax = sv.first().copied().unwrap_or(0.0);
        (0..ncols)
            .filter(|&k| sv[k] <= tol * smax)
            .map(|k| (0..ncols).map(|j| S::from_c64(vt[(k, j)].conj())).collect())
            .collect()
    }
}

/// Unique solution of `a x = b`. Fails when the system is inconsistent or
/// underdetermined (float: rank deficiency at `tol`, or relative residual
/// above `tol`).
pub fn solve_unique<S: Scalar>(a: &[Vec<S>], b: &[S], ncols: usize, tol: f64) -> Result<Vec<S>> {
    if S::EXACT {
        let mut m: Vec<Vec<S>> = a
            .iter()
            .zip(b)
            .map(|(row, r)| {
                let mut row = row.clone();
                row.push(r.clone());
                row
            })
            .collect();
        let pivots = rref(&mut m, ncols + 1);
        if pivots.last() == Some(&ncols) {
            return Err(Error::Solve("inconsistent system".into()));
        }
        if pivots.len() < ncols {
            return Err(Error::Solve(format!(
                "solution not unique ({} free parameters)",
                ncols - pivots.len()
            )));
        }
        Ok((0..ncols).map(|r| m[r][ncols].clone()).collect())
    } else {
        let am = to_dmatrix(a, ncols);
        let r = rank(a, ncols, tol);
        if r < ncols {
            return Err(Error::Solve(format!(
                "solution not unique (numerical rank {r} < {ncols})"
            )));
        }
        let bv = DVector::from_iterator(b.len(), b.iter().map(|v| v.to_c64()));
        let x = least_squares(&am, &bv);
        let resid = (&am * &x - &bv).norm();
        let scale = bv.norm().max(am.norm() * x.norm()).max(f64::MIN_POSITIVE);
        if resid > tol.sqrt() * scale {
            return Err(Error::Solve(format!(
                "inconsistent system (relative residual {:.3e})",
                resid / scale
            )));
        }
        Ok(x.iter().map(|v| S::from_c64(*v)).collect())
    }
}

/// Eigenvalues (ascending) of the hermitian part of `m`.
pub fn hermitian_eigenvalues(m: &DMatrix<Complex64>) -> Vec<f64> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    let h = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let mut ev: Vec<f64> = SymmetricEigen::new(h).eigenvalues.iter().cloned().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Eigen-decomposition of the hermitian part of `m`: eigenvalues ascending
/// and matching unit eigenvectors as columns.
pub fn hermitian_eigen(m: &DMatrix<Complex64>) -> (Vec<f64>, DMatrix<Complex64>) {
    let n = m.nrows();
    let h = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(h);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let vals = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vecs = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    (vals, vecs)
}

/// Factor a hermitian matrix as `M = W · diag(d) · W*` with `W` unit upper
/// triangular, eliminating from the last row and column upward. Fails on a
/// zero pivot.
pub fn udu_upper<S: Scalar>(m: &[Vec<S>]) -> Result<(Vec<Vec<S>>, Vec<S>)> {
    let n = m.len();
    let mut a: Vec<Vec<S>> = m.to_vec();
    let mut w = vec![vec![S::zero(); n]; n];
    let mut d = vec![S::zero(); n];
    let scale = m
        .iter()
        .flat_map(|r| r.iter().map(|v| v.magnitude()))
        .fold(0.0, f64::max);
    for k in (0..n).rev() {
        let piv = a[k][k].re();
        if piv.negligible(scale, 1e-14) {
            return Err(Error::Solve("zero pivot in triangular factorization".into()));
        }
        d[k] = piv.clone();
        w[k][k] = S::one();
        for i in 0..k {
            w[i][k] = a[i][k].clone() / piv.clone();
        }
        for i in 0..k {
            for j in 0..k {
                let v = w[i][k].clone() * piv.clone() * w[j][k].conj();
                a[i][j] = a[i][j].clone() - v;
            }
        }
    }
    Ok((w, d))
}

/// Inverse of an upper triangular matrix by back substitution.
pub fn upper_triangular_inverse<S: Scalar>(r: &[Vec<S>]) -> Result<Vec<Vec<S>>> {
    let n = r.len();
    let mut inv = vec![vec![S::zero(); n]; n];
    for j in 0..n {
        if r[j][j].is_zero() {
            return Err(Error::Solve("singular triangular matrix".into()));
        }
        inv[j][j] = S::one() / r[j][j].clone();
        for i in (0..j).rev() {
            let mut acc = S::zero();
            for k in i + 1..=j {
                acc = acc + r[i][k].clone() * inv[k][j].clone();
            }
            inv[i][j] = -acc / r[i][i].clone();
        }
    }
    Ok(inv)
}

pub fn mat_mul<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>]) -> Vec<Vec<S>> {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    (0..k).fold(S::zero(), |acc, l| acc + a[i][l].clone() * b[l][j].clone())
                })
                .collect()
        })
        .collect()
}

pub fn conj_transpose<S: Scalar>(a: &[Vec<S>]) -> Vec<Vec<S>> {
    let n = a.len();
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| (0..n).map(|i| a[i][j].conj()).collect()).collect()
}

pub fn identity<S: Scalar>(n: usize) -> Vec<Vec<S>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { S::one() } else { S::zero() }).collect())
        .collect()
}

/// Determinant of a constant matrix by elimination.
pub fn det<S: Scalar>(a: &[Vec<S>]) -> S {
    if !S::EXACT {
        let m = to_dmatrix(a, a.len());
        return S::from_c64(m.determinant());
    }
    let n = a.len();
    let mut m = a.to_vec();
    let mut acc = S::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return S::zero();
        };
        if p != col {
            m.swap(p, col);
            acc = -acc;
        }
        let piv = m[col][col].clone();
        acc = acc * piv.clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone() / piv.clone();
            for c in col..n {
                let v = m[col][c].clone();
                m[r][c] = m[r][c].clone() - f.clone() * v;
            }
        }
    }
    acc
}
