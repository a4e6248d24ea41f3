use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::{Polynomial, UnivariatePolynomial};

/// A form of degree `m` in the projective coordinates `X_0, …, X_d`
/// (variable 0 is `X_0`).
#[derive(Clone, PartialEq)]
pub struct HomogeneousPolynomial<S> {
    poly: Polynomial<S>,
    degree: u32,
}

impl<S: Scalar> HomogeneousPolynomial<S> {
    /// Wrap `poly`, asserting every term has total degree `degree`.
    pub fn new(poly: Polynomial<S>, degree: u32) -> Result<Self> {
        if let Some(bad) = poly
            .terms()
            .map(|(e, _)| e.iter().sum::<u32>())
            .find(|&d| d != degree)
        {
            return Err(Error::DegreeMismatch(format!(
                "term of degree {bad} in a form of degree {degree}"
            )));
        }
        Ok(HomogeneousPolynomial { poly, degree })
    }

    /// Wrap a homogeneous polynomial, reading its degree off the terms.
    pub fn from_poly(poly: Polynomial<S>) -> Result<Self> {
        let d = poly.degree().unwrap_or(0);
        Self::new(poly, d)
    }

    /// `X_0^m p(X_1/X_0, …, X_d/X_0)`.
    pub fn homogenize(p: &Polynomial<S>, m: u32) -> Result<Self> {
        if let Some(d) = p.degree() {
            if d > m {
                return Err(Error::DegreeTooLow { target: m, degree: d });
            }
        }
        let mut out = Polynomial::zero(p.nvars() + 1);
        for (e, c) in p.terms() {
            let deg: u32 = e.iter().sum();
            let mut f = Vec::with_capacity(e.len() + 1);
            f.push(m - deg);
            f.extend_from_slice(e);
            out.add_term(f, c.clone());
        }
        Ok(HomogeneousPolynomial {
            poly: out,
            degree: m,
        })
    }

    /// Substitute `X_0 = 1`.
    pub fn dehomogenize(&self) -> Polynomial<S> {
        let mut out = Polynomial::zero(self.poly.nvars() - 1);
        for (e, c) in self.poly.terms() {
            out.add_term(e[1..].to_vec(), c.clone());
        }
        out
    }

    pub fn poly(&self) -> &Polynomial<S> {
        &self.poly
    }

    pub fn into_poly(self) -> Polynomial<S> {
        self.poly
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of projective coordinates, `d + 1`.
    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn evaluate(&self, x: &[S]) -> Result<S> {
        self.poly.evaluate(x)
    }

    pub fn conj(&self) -> Self {
        HomogeneousPolynomial {
            poly: self.poly.conj(),
            degree: self.degree,
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        HomogeneousPolynomial {
            poly: self.poly.scale(c),
            degree: self.degree,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        HomogeneousPolynomial {
            poly: &self.poly * &rhs.poly,
            degree: self.degree + rhs.degree,
        }
    }

    /// `Σ_α X⁰_α ∂P/∂X_α`, of degree `m − 1`.
    ///
    /// The second component flags a result that vanishes identically
    /// (`P` constant along the pencil of lines through `X⁰`).
    pub fn directional_derivative(&self, x0: &[S]) -> Result<(Self, bool)> {
        if x0.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: x0.len(),
            });
        }
        if x0.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroPoint);
        }
        let mut out = Polynomial::zero(self.nvars());
        for (a, c) in x0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = &out + &self.poly.partial_derivative(a).scale(c);
        }
        let vanished = out.is_zero();
        Ok((
            HomogeneousPolynomial {
                poly: out,
                degree: self.degree.saturating_sub(1),
            },
            vanished,
        ))
    }

    /// `s ↦ P(X + s·X⁰)`.
    pub fn restrict_pencil(&self, x: &[S], x0: &[S]) -> Result<UnivariatePolynomial<S>> {
        self.poly.restrict_to_line(x, x0)
    }

    pub fn convert<T: Scalar>(&self) -> HomogeneousPolynomial<T> {
        HomogeneousPolynomial {
            poly: self.poly.convert(),
            degree: self.degree,
        }
    }
}

impl<S: std::fmt::Debug> std::fmt::Debug for HomogeneousPolynomial<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} (degree {})", self.poly, self.degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussRational as Q;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn circle() -> Polynomial<Q> {
        Polynomial::from_terms(
            2,
            [(vec![0, 0], q(1)), (vec![2, 0], q(-1)), (vec![0, 2], q(-1))],
        )
        .unwrap()
    }

    #[test]
    fn homogenize_examples() {
        let h = HomogeneousPolynomial::homogenize(&circle(), 2).unwrap();
        let expect = Polynomial::from_terms(
            3,
            [(vec![2, 0, 0], q(1)), (vec![0, 2, 0], q(-1)), (vec![0, 0, 2], q(-1))],
        )
        .unwrap();
        assert_eq!(h.poly(), &expect);

        let c = HomogeneousPolynomial::homogenize(&Polynomial::constant(2, q(2)), 1).unwrap();
        assert_eq!(c.poly(), &Polynomial::from_terms(3, [(vec![1, 0, 0], q(2))]).unwrap());

        let p = Polynomial::from_terms(2, [(vec![1, 0], q(1)), (vec![1, 1], q(1))]).unwrap();
        let h = HomogeneousPolynomial::homogenize(&p, 3).unwrap();
        let expect = Polynomial::from_terms(3, [(vec![2, 1, 0], q(1)), (vec![1, 1, 1], q(1))]).unwrap();
        assert_eq!(h.poly(), &expect);

        assert!(matches!(
            HomogeneousPolynomial::homogenize(&circle(), 1),
            Err(Error::DegreeTooLow { .. })
        ));
    }

    #[test]
    fn dehomogenize_examples() {
        let h = HomogeneousPolynomial::homogenize(&circle(), 2).unwrap();
        assert_eq!(h.dehomogenize(), circle());
        let f = HomogeneousPolynomial::new(
            Polynomial::from_terms(3, [(vec![1, 2, 0], q(1)), (vec![0, 0, 3], q(1))]).unwrap(),
            3,
        )
        .unwrap();
        assert_eq!(
            f.dehomogenize(),
            Polynomial::from_terms(2, [(vec![2, 0], q(1)), (vec![0, 3], q(1))]).unwrap()
        );
    }

    #[test]
    fn directional_derivative_examples() {
        let h = HomogeneousPolynomial::homogenize(&circle(), 2).unwrap();
        let (d, vanished) = h.directional_derivative(&[q(1), q(0), q(0)]).unwrap();
        assert!(!vanished);
        assert_eq!(d.poly(), &Polynomial::from_terms(3, [(vec![1, 0, 0], q(2))]).unwrap());
        let x0x1 = HomogeneousPolynomial::new(
            Polynomial::from_terms(3, [(vec![1, 1, 0], q(1))]).unwrap(),
            2,
        )
        .unwrap();
        let (d, _) = x0x1.directional_derivative(&[q(0), q(1), q(0)]).unwrap();
        assert_eq!(d.poly(), &Polynomial::var(3, 0));
        assert_eq!(
            h.directional_derivative(&[q(0), q(0), q(0)]).unwrap_err(),
            Error::ZeroPoint
        );
        // X_0 X_1 differentiated along X_2 vanishes
        let (_, vanished) = x0x1.directional_derivative(&[q(0), q(0), q(1)]).unwrap();
        assert!(vanished);
    }

    #[test]
    fn non_homogeneous_rejected() {
        assert!(HomogeneousPolynomial::new(circle(), 2).is_err());
    }
}
