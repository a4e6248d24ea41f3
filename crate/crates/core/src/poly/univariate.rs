use std::fmt;

use num_complex::Complex64;

use crate::scalar::Scalar;

/// Dense univariate polynomial, ascending coefficient order.
///
/// The leading stored coefficient is nonzero unless the polynomial is zero
/// (empty coefficient vector).
#[derive(Clone, PartialEq)]
pub struct UnivariatePolynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> UnivariatePolynomial<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UnivariatePolynomial { coeffs }
    }

    pub fn zero() -> Self {
        UnivariatePolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[S]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            acc.mul(&Self::new(vec![-r.clone(), S::one()]))
        })
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    pub fn eval_c64(&self, t: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * t + c.to_c64())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * S::from_i64(k as i64))
                .collect(),
        )
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|v| v.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = S::one() / l.clone();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Coefficient vector reversed after zero-padding to length `m + 1`.
    pub fn reverse_padded(&self, m: usize) -> Self {
        let mut c: Vec<S> = (0..=m).map(|k| self.coeff(k)).collect();
        c.reverse();
        Self::new(c)
    }

    /// Euclidean division. Panics on an (exactly) zero divisor.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        let db = rhs.degree().expect("division by zero polynomial");
        let lead = rhs.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![S::zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = rem[k + db].clone() / lead.clone();
            if !c.is_zero() {
                for (j, b) in rhs.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].clone() - c.clone() * b.clone();
                }
            }
            rem[k + db] = S::zero();
            quot[k] = c;
        }
        rem.truncate(db);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic gcd by the Euclidean algorithm. Meaningful in exact mode;
    /// float callers should expect noise-sensitive answers.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = if S::EXACT { r } else { r.chop_relative(1e-10, a.max_coeff()) };
        }
        a.monic()
    }

    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.magnitude()).fold(0.0, f64::max)
    }

    fn chop_relative(&self, tol: f64, scale: f64) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|c| if c.negligible(scale, tol) { S::zero() } else { c.clone() })
                .collect(),
        )
    }

    /// Squarefree factorization (Yun): returns `(factor, multiplicity)` pairs
    /// with monic, pairwise coprime factors of positive degree.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).0;
        let mut c = fp.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.monic(), i));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    pub fn convert<T: Scalar>(&self) -> UnivariatePolynomial<T> {
        UnivariatePolynomial::new(
            self.coeffs
                .iter()
                .map(super::convert_scalar::<S, T>)
                .collect(),
        )
    }
}

impl<S: fmt::Debug> fmt::Debug for UnivariatePolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
                        .map(|(k, c)| match k {
                0 => format!("{:?}", c),
                1 => format!("{:?}*t", c),
                _ => format!("{:?}*t^{}", c, k),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussRational as Q;

    fn up(c: &[i64]) -> UnivariatePolynomial<Q> {
        UnivariatePolynomial::new(c.iter().map(|&v| Q::from_i64(v)).collect())
    }

    #[test]
    fn trims_leading_zeros() {
        assert_eq!(up(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(up(&[0]).degree(), None);
    }

    #[test]
    fn division_and_gcd() {
        // (t-1)^2 (t+3)
        let f = up(&[3, -5, 1, 1]);
        let (q, r) = f.div_rem(&up(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, up(&[-3, 2, 1]));
        assert_eq!(f.gcd(&f.derivative()), up(&[-1, 1]));
    }

    #[test]
    fn squarefree_parts() {
        // (t-2)^2 (t+3)
        let f = UnivariatePolynomial::from_roots(&[Q::from_i64(2), Q::from_i64(2), Q::from_i64(-3)]);
        let parts = f.squarefree_decomposition();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], (up(&[3, 1]), 1));
        assert_eq!(parts[1], (up(&[-2, 1]), 2));
    }
}
