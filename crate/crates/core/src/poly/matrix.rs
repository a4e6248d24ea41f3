use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::Polynomial;

/// Largest size for which [`PolyMatrix::determinant`] runs by default.
pub const DEFAULT_DET_BOUND: usize = 8;
/// Largest size for which [`PolyMatrix::adjugate`] runs by default.
pub const DEFAULT_ADJUGATE_BOUND: usize = 6;

/// Dense matrix of polynomials sharing one variable count.
#[derive(Clone, PartialEq)]
pub struct PolyMatrix<S> {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<Polynomial<S>>,
}

impl<S: Scalar> PolyMatrix<S> {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            nvars,
            entries: vec![Polynomial::zero(nvars); rows * cols],
        }
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        let mut m = Self::zeros(n, n, nvars);
        for i in 0..n {
            m.set(i, i, Polynomial::one(nvars));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial<S>>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let nvars = rows
            .first()
            .and_then(|row| row.first())
            .map_or(0, |p| p.nvars());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
            for p in row {
                if p.nvars() != nvars {
                    return Err(Error::DimensionMismatch {
                        expected: nvars,
                        got: p.nvars(),
                    });
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            nvars,
            entries,
        })
    }

    /// `Σ_α X_α · A_α` for constant matrices `A_α` (row-major `n × n`).
    pub fn linear_pencil(mats: &[Vec<Vec<S>>]) -> Self {
        let nvars = mats.len();
        let n = mats.first().map_or(0, |m| m.len());
        let mut out = Self::zeros(n, n, nvars);
        for i in 0..n {
            for j in 0..n {
                let coeffs: Vec<S> = mats.iter().map(|m| m[i][j].clone()).collect();
                out.set(i, j, Polynomial::linear(S::zero(), &coeffs));
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<S> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial<S>) {
        assert_eq!(p.nvars(), self.nvars, "variable count mismatch");
        self.entries[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> impl Iterator<Item = &Polynomial<S>> {
        self.entries.iter()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&Polynomial<S>) -> Polynomial<T>) -> PolyMatrix<T> {
        let entries: Vec<Polynomial<T>> = self.entries.iter().map(f).collect();
        let nvars = entries.first().map_or(self.nvars, |p| p.nvars());
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars,
            entries,
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows, self.nvars);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Transpose with coefficientwise conjugation.
    pub fn conj_transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows, self.nvars);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols, self.nvars);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Polynomial::zero(self.nvars);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = rhs.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, p: &Polynomial<S>) -> Self {
        self.map(|e| e * p)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    /// Matrix with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zeros(self.rows - 1, self.cols - 1, self.nvars);
        for (r, rr) in (0..self.rows).filter(|&r| r != i).enumerate() {
            for (c, cc) in (0..self.cols).filter(|&c| c != j).enumerate() {
                out.set(r, c, self.get(rr, cc).clone());
            }
        }
        out
    }

    pub fn evaluate(&self, x: &[S]) -> Result<Vec<Vec<S>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).evaluate(x)).collect())
            .collect()
    }

    pub fn eval_c64(&self, x: &[Complex64]) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).eval_c64(x))
    }

    /// Determinant with the default size bound.
    pub fn det(&self) -> Result<Polynomial<S>> {
        self.determinant(DEFAULT_DET_BOUND)
    }

    /// Determinant by cofactor expansion, sharing subdeterminants: the
    /// value for rows `0..k` and a `k`-subset of columns is memoized by
    /// column bitmask, so the cost is `O(2^n · n)` polynomial products.
    pub fn determinant(&self, bound: usize) -> Result<Polynomial<S>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n > bound {
            return Err(Error::SizeBound { size: n, bound });
        }
        if n == 0 {
            return Ok(Polynomial::one(self.nvars));
        }
        let full = (1usize << n) - 1;
        let mut dp: Vec<Option<Polynomial<S>>> = vec![None; 1 << n];
        dp[0] = Some(Polynomial::one(self.nvars));
        let mut masks: Vec<usize> = (1..=full).collect();
        masks.sort_by_key(|m| m.count_ones());
        for mask in masks {
            let k = mask.count_ones() as usize;
            let row = k - 1;
            let mut acc = Polynomial::zero(self.nvars);
            for c in 0..n {
                if mask & (1 << c) == 0 {
                    continue;
                }
                let a = self.get(row, c);
                if a.is_zero() {
                    continue;
                }
                let rest = dp[mask & !(1 << c)].as_ref().unwrap();
                if rest.is_zero() {
                    continue;
                }
                let above = (mask >> (c + 1)).count_ones();
                let term = a * rest;
                acc = if above % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            dp[mask] = Some(acc);
        }
        Ok(dp[full].take().unwrap())
    }

    /// Adjugate with the default size bound.
    pub fn adj(&self) -> Result<Self> {
        self.adjugate(DEFAULT_ADJUGATE_BOUND)
    }

    /// Transposed matrix of signed cofactors; the `1 × 1` adjugate is `[1]`.
    pub fn adjugate(&self, bound: usize) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n > bound {
            return Err(Error::SizeBound { size: n, bound });
        }
        let mut out = Self::zeros(n, n, self.nvars);
        for i in 0..n {
            for j in 0..n {
                let d = self.minor(i, j).determinant(usize::MAX)?;
                let d = if (i + j) % 2 == 0 { d } else { -&d };
                out.set(j, i, d);
            }
        }
        Ok(out)
    }
}

impl<S: std::fmt::Debug> std::fmt::Debug for PolyMatrix<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<&[Polynomial<S>]> = self.entries.chunks(self.cols.max(1)).collect();
        f.debug_list().entries(rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussRational as Q;

    fn v(i: usize) -> Polynomial<Q> {
        Polynomial::var(4, i)
    }

    #[test]
    fn two_by_two_adjugate() {
        let m = PolyMatrix::from_rows(vec![vec![v(0), v(1)], vec![v(2), v(3)]]).unwrap();
        let adj = m.adj().unwrap();
        assert_eq!(adj.get(0, 0), &v(3));
        assert_eq!(adj.get(0, 1), &-&v(1));
        assert_eq!(adj.get(1, 0), &-&v(2));
        assert_eq!(adj.get(1, 1), &v(0));
        assert_eq!(m.det().unwrap(), &(&v(0) * &v(3)) - &(&v(1) * &v(2)));
    }

    #[test]
    fn one_by_one_adjugate_is_one() {
        let m = PolyMatrix::from_rows(vec![vec![v(2)]]).unwrap();
        assert_eq!(m.adj().unwrap().get(0, 0), &Polynomial::one(4));
    }

    #[test]
    fn permutation_matrix_sign() {
        let one = Polynomial::<Q>::one(1);
        let z = Polynomial::<Q>::zero(1);
        let m = PolyMatrix::from_rows(vec![
            vec![z.clone(), one.clone(), z.clone()],
            vec![z.clone(), z.clone(), one.clone()],
            vec![one.clone(), z.clone(), z.clone()],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), one);
        let swap = PolyMatrix::from_rows(vec![vec![z.clone(), one.clone()], vec![one.clone(), z]]).unwrap();
        assert_eq!(swap.det().unwrap(), -&one);
    }

    #[test]
    fn size_bounds() {
        let m = PolyMatrix::<Q>::identity(7, 1);
        assert_eq!(m.adj().unwrap_err(), Error::SizeBound { size: 7, bound: 6 });
        assert_eq!(m.det().unwrap(), Polynomial::one(1));
        let r = PolyMatrix::<Q>::zeros(2, 3, 1);
        assert!(matches!(r.det(), Err(Error::NotSquare { .. })));
    }
}
