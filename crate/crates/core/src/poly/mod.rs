//! Sparse multivariate polynomials and the primitives built on them.

mod homogeneous;
pub mod io;
mod matrix;
mod point;
mod univariate;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub use homogeneous::HomogeneousPolynomial;
pub use matrix::{PolyMatrix, DEFAULT_ADJUGATE_BOUND, DEFAULT_DET_BOUND};
pub use point::ProjectivePoint;
pub use univariate::UnivariatePolynomial;

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

/// Sparse polynomial in `nvars` variables.
///
/// Terms are kept in a `BTreeMap`, so iteration order (and anything
/// serialized from it) is deterministic. Zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct Polynomial<S> {
    nvars: usize,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, S::one())
    }

    /// The coordinate function `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, S::one());
        p
    }

    /// Build from terms, summing repeated monomials.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, S)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    got: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Affine-linear polynomial `c0 + Σ c_i x_i`.
    pub fn linear(c0: S, coeffs: &[S]) -> Self {
        let n = coeffs.len();
        let mut p = Self::constant(n, c0);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> S {
        self.terms.get(e).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` stands for the degree of the zero polynomial (−∞).
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum::<u32>()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn add_term(&mut self, e: Monomial, c: S) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[var] -= 1;
            out.add_term(f, c.clone() * S::from_i64(e[var] as i64));
        }
        out
    }

    /// Coefficientwise complex conjugate.
    pub fn conj(&self) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.conj()))
                .collect(),
        }
    }

    /// Coefficientwise real part.
    pub fn real_part(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.re());
        }
        out
    }

    pub fn has_real_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }

    pub fn evaluate(&self, x: &[S]) -> Result<S> {
        if x.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: x.len(),
            });
        }
        let mut pows: Vec<Vec<S>> = vec![vec![S::one()]; self.nvars];
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let row = &mut pows[i];
                while row.len() <= k as usize {
                    let next = row.last().unwrap().clone() * x[i].clone();
                    row.push(next);
                }
                t = t * row[k as usize].clone();
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Floating evaluation, regardless of coefficient mode.
    pub fn eval_c64(&self, x: &[Complex64]) -> Complex64 {
        assert_eq!(x.len(), self.nvars, "dimension mismatch");
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut t = c.to_c64();
                for (i, &k) in e.iter().enumerate() {
                    if k > 0 {
                        t *= x[i].powu(k);
                    }
                }
                t
            })
            .sum()
    }

    pub fn eval_real(&self, x: &[f64]) -> Complex64 {
        let z: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        self.eval_c64(&z)
    }

    /// `Σ |c_α| |x^α|`, the natural scale for evaluation residuals.
    pub fn abs_eval(&self, x: &[Complex64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut t = c.magnitude();
                for (i, &k) in e.iter().enumerate() {
                    if k > 0 {
                        t *= x[i].norm().powi(k as i32);
                    }
                }
                t
            })
            .sum()
    }

    pub fn max_coeff(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.magnitude())
            .fold(0.0, f64::max)
    }

    /// Drop coefficients below `tol · max_coeff` (no-op in exact mode).
    pub fn chop(&self, tol: f64) -> Self {
        if S::EXACT {
            return self.clone();
        }
        let scale = self.max_coeff();
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if !c.negligible(scale, tol) {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    /// Homogeneous component of total degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() == k {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    /// `x ↦ p(x + shift)`.
    pub fn translate(&self, shift: &[S]) -> Result<Self> {
        if shift.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: shift.len(),
            });
        }
        let images: Vec<Self> = (0..self.nvars)
            .map(|i| &Self::var(self.nvars, i) + &Self::constant(self.nvars, shift[i].clone()))
            .collect();
        self.compose(&images)
    }

    /// Substitute polynomial `images[i]` for variable `i`.
    pub fn compose(&self, images: &[Self]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: images.len(),
            });
        }
        let target = images.first().map(|q| q.nvars).unwrap_or(0);
        let mut powers: Vec<Vec<Self>> = vec![vec![Self::one(target)]; self.nvars];
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let row = &mut powers[i];
                while row.len() <= k as usize {
                    let next = row.last().unwrap() * &images[i];
                    row.push(next);
                }
                t = &t * &row[k as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Change the coefficient field.
    pub fn convert<T: Scalar>(&self) -> Polynomial<T> {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), convert_scalar::<S, T>(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Insert a new variable at position `at` (all existing terms get exponent 0).
    pub fn insert_var(&self, at: usize) -> Self {
        let mut out = Self::zero(self.nvars + 1);
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f.insert(at, 0);
            out.add_term(f, c.clone());
        }
        out
    }

    /// Univariate polynomial `t ↦ p(x0 + t·dir)`, by exact substitution.
    pub fn restrict_to_line(&self, x0: &[S], dir: &[S]) -> Result<UnivariatePolynomial<S>> {
        for v in [x0, dir] {
            if v.len() != self.nvars {
                return Err(Error::DimensionMismatch {
                    expected: self.nvars,
                    got: v.len(),
                });
            }
        }
        let lines: Vec<UnivariatePolynomial<S>> = (0..self.nvars)
            .map(|i| UnivariatePolynomial::new(vec![x0[i].clone(), dir[i].clone()]))
            .collect();
        let mut powers: Vec<Vec<UnivariatePolynomial<S>>> =
            vec![vec![UnivariatePolynomial::one()]; self.nvars];
        let mut out = UnivariatePolynomial::zero();
        for (e, c) in &self.terms {
            let mut t = UnivariatePolynomial::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let row = &mut powers[i];
                while row.len() <= k as usize {
                    let next = row.last().unwrap().mul(&lines[i]);
                    row.push(next);
                }
                t = t.mul(&row[k as usize]);
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// `t ↦ t^m p(x0 + t⁻¹ dir)`: the coefficient reversal of the line
    /// restriction, padded to length `m + 1`.
    pub fn reversed_restriction(
        &self,
        x0: &[S],
        dir: &[S],
        m: u32,
    ) -> Result<UnivariatePolynomial<S>> {
        if let Some(d) = self.degree() {
            if d > m {
                return Err(Error::DegreeTooLow { target: m, degree: d });
            }
        }
        let r = self.restrict_to_line(x0, dir)?;
        Ok(r.reverse_padded(m as usize))
    }

    /// Coefficients of `t ↦ p(x0 + t x)` as polynomials in a symbolic `x`:
    /// entry `k` is the degree-`k` part of `x ↦ p(x0 + x)`.
    pub fn symbolic_line_coefficients(&self, x0: &[S]) -> Result<Vec<Self>> {
        let shifted = self.translate(x0)?;
        let deg = shifted.degree().unwrap_or(0);
        Ok((0..=deg).map(|k| shifted.homogeneous_part(k)).collect())
    }

    /// Exact division `self / divisor`.
    ///
    /// Returns the quotient and whether the division was exact: remainder
    /// zero in exact mode, relative least-squares residual at most `tol` in
    /// float mode.
    pub fn exact_divide(&self, divisor: &Self, tol: f64) -> Result<(Self, bool)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if divisor.nvars != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: divisor.nvars,
            });
        }
        if self.is_zero() {
            return Ok((Self::zero(self.nvars), true));
        }
        if S::EXACT {
            Ok(self.long_divide(divisor))
        } else {
            Ok(self.least_squares_divide(divisor, tol))
        }
    }

    fn leading(&self) -> Option<(&Monomial, &S)> {
        // graded lexicographic: highest total degree, ties broken lexicographically
        self.terms
            .iter()
            .max_by(|a, b| {
                let da: u32 = a.0.iter().sum();
                let db: u32 = b.0.iter().sum();
                da.cmp(&db).then_with(|| a.0.cmp(b.0))
            })
    }

    fn long_divide(&self, divisor: &Self) -> (Self, bool) {
        let (lm, lc) = divisor.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((e, c)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if !e.iter().zip(&lm).all(|(a, b)| a >= b) {
                return (quot, false);
            }
            let qe: Monomial = e.iter().zip(&lm).map(|(a, b)| a - b).collect();
            let qc = c / lc.clone();
            let mut step = Self::zero(self.nvars);
            step.add_term(qe, qc);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        (quot, true)
    }

    fn least_squares_divide(&self, divisor: &Self, tol: f64) -> (Self, bool) {
        let n = self.nvars;
        let (Some(df), Some(dg)) = (self.degree(), divisor.degree()) else {
            return (Self::zero(n), false);
        };
        if dg > df {
            return (Self::zero(n), false);
        }
        // candidate quotient support: exponents e with e + g ∈ supp(f) for some g in supp(divisor)
        let mut support: BTreeMap<Monomial, usize> = BTreeMap::new();
        for e in self.terms.keys() {
            for g in divisor.terms.keys() {
                if e.iter().zip(g).all(|(a, b)| a >= b) {
                    let q: Monomial = e.iter().zip(g).map(|(a, b)| a - b).collect();
                    let len = support.len();
                    support.entry(q).or_insert(len);
                }
            }
        }
        let qs: Vec<Monomial> = support.keys().cloned().collect();
        let mut rows: BTreeMap<Monomial, usize> = BTreeMap::new();
        for e in self.terms.keys() {
            let len = rows.len();
            rows.entry(e.clone()).or_insert(len);
        }
        for q in &qs {
            for g in divisor.terms.keys() {
                let e: Monomial = q.iter().zip(g).map(|(a, b)| a + b).collect();
                let len = rows.len();
                rows.entry(e).or_insert(len);
            }
        }
        let mut a = nalgebra::DMatrix::<Complex64>::zeros(rows.len(), qs.len());
        for (j, q) in qs.iter().enumerate() {
            for (g, c) in &divisor.terms {
                let e: Monomial = q.iter().zip(g).map(|(a, b)| a + b).collect();
                a[(rows[&e], j)] += c.to_c64();
            }
        }
        let mut b = nalgebra::DVector::<Complex64>::zeros(rows.len());
        for (e, c) in &self.terms {
            b[rows[e]] = c.to_c64();
        }
        let sol = crate::linalg::least_squares(&a, &b);
        let mut quot = Self::zero(n);
        let qscale = sol.iter().map(|v| v.norm()).fold(0.0, f64::max);
        for (j, q) in qs.iter().enumerate() {
            if sol[j].norm() > 1e-15 * qscale {
                quot.add_term(q.clone(), S::from_c64(sol[j]));
            }
        }
        let resid = (&a * &sol - &b).norm();
        let scale = b.norm().max(f64::MIN_POSITIVE);
        (quot, resid <= tol * scale)
    }
}

pub(crate) fn convert_scalar<S: Scalar, T: Scalar>(c: &S) -> T {
    match c.to_exact() {
        Some(g) => T::from_parts(g.re, g.im),
        None => T::from_c64(c.to_c64()),
    }
}

impl<S: Scalar> Add for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn add(self, rhs: &Polynomial<S>) -> Polynomial<S> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn sub(self, rhs: &Polynomial<S>) -> Polynomial<S> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<S: Scalar> Mul for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn mul(self, rhs: &Polynomial<S>) -> Polynomial<S> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Monomial = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Neg for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn neg(self) -> Polynomial<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> Add for Polynomial<S> {
    type Output = Polynomial<S>;
    fn add(self, rhs: Polynomial<S>) -> Polynomial<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for Polynomial<S> {
    type Output = Polynomial<S>;
    fn sub(self, rhs: Polynomial<S>) -> Polynomial<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Mul for Polynomial<S> {
    type Output = Polynomial<S>;
    fn mul(self, rhs: Polynomial<S>) -> Polynomial<S> {
        &self * &rhs
    }
}

impl<S: fmt::Debug> fmt::Debug for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<S: fmt::Debug> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{:?}", c)?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{}", i + 1, k)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussRational as Q;

    fn circle() -> Polynomial<Q> {
        let x = Polynomial::<Q>::var(2, 0);
        let y = Polynomial::<Q>::var(2, 1);
        &(&Polynomial::one(2) - &(&x * &x)) - &(&y * &y)
    }

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    #[test]
    fn evaluate_circle() {
        let p = circle();
        assert_eq!(p.evaluate(&[q(0), q(0)]).unwrap(), q(1));
        assert_eq!(p.evaluate(&[q(1), q(0)]).unwrap(), q(0));
        assert_eq!(p.evaluate(&[q(1), q(1)]).unwrap(), q(-1));
        assert!(matches!(
            p.evaluate(&[q(1)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn degree_sentinel_for_zero() {
        assert_eq!(Polynomial::<Q>::zero(3).degree(), None);
        assert_eq!(circle().degree(), Some(2));
    }

    #[test]
    fn restrict_circle() {
        let p = circle();
        let r = p.restrict_to_line(&[q(0), q(0)], &[q(1), q(0)]).unwrap();
        assert_eq!(r.coeffs(), &[q(1), q(0), q(-1)]);
        let r = p.restrict_to_line(&[q(0), q(0)], &[q(1), q(1)]).unwrap();
        assert_eq!(r.coeffs(), &[q(1), q(0), q(-2)]);
        let r = p.restrict_to_line(&[q(1), q(1)], &[q(0), q(0)]).unwrap();
        assert_eq!(r.coeffs(), &[q(-1)]);
    }

    #[test]
    fn reversed_restriction_circle() {
        let p = circle();
        let r = p
            .reversed_restriction(&[q(0), q(0)], &[q(1), q(0)], 2)
            .unwrap();
        assert_eq!(r.coeffs(), &[q(-1), q(0), q(1)]);
        // symbolic direction (a, b) = (3, 4): t^2 - 25
        let r = p
            .reversed_restriction(&[q(0), q(0)], &[q(3), q(4)], 2)
            .unwrap();
        assert_eq!(r.coeffs(), &[q(-25), q(0), q(1)]);
        let one = Polynomial::<Q>::one(2);
        let r = one.reversed_restriction(&[q(0), q(0)], &[q(3), q(4)], 0).unwrap();
        assert_eq!(r.coeffs(), &[q(1)]);
        assert!(matches!(
            p.reversed_restriction(&[q(0), q(0)], &[q(1), q(0)], 1),
            Err(Error::DegreeTooLow { .. })
        ));
    }

    #[test]
    fn exact_divide_difference_of_squares() {
        let a = Polynomial::<Q>::var(2, 0);
        let b = Polynomial::<Q>::var(2, 1);
        let f = &(&a * &a) - &(&b * &b);
        let g = &a - &b;
        let (quot, ok) = f.exact_divide(&g, 0.0).unwrap();
        assert!(ok);
        assert_eq!(quot, &a + &b);
        let (_, ok) = (&a * &a).exact_divide(&b, 0.0).unwrap();
        assert!(!ok);
        assert_eq!(
            f.exact_divide(&Polynomial::zero(2), 0.0).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn float_divide_matches_exact() {
        let a = Polynomial::<Complex64>::var(3, 0);
        let b = Polynomial::<Complex64>::var(3, 1);
        let c = Polynomial::<Complex64>::var(3, 2);
        let p = &(&(&a * &a) - &(&b * &b)) - &(&c * &c);
        let w = &(&a * &Polynomial::constant(3, Complex64::new(0.5, 1.0))) + &(&b * &c);
        let f = &p * &w;
        let (quot, ok) = f.exact_divide(&p, 1e-12).unwrap();
        assert!(ok);
        let diff = &quot - &w;
        assert!(diff.max_coeff() < 1e-12);
        let (_, ok) = (&f + &c).exact_divide(&p, 1e-12).unwrap();
        assert!(!ok);
    }

    #[test]
    fn translate_and_compose() {
        let p = circle();
        let t = p.translate(&[q(1), q(0)]).unwrap();
        // 1 - (x+1)^2 - y^2 = -2x - x^2 - y^2
        assert_eq!(t.evaluate(&[q(0), q(0)]).unwrap(), q(0));
        assert_eq!(t.evaluate(&[q(-1), q(0)]).unwrap(), q(1));
    }
}
