use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A point `[X_0 : … : X_d]` of projective space, stored in normalized form:
/// the first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectivePoint<S> {
    coords: Vec<S>,
}

/// Relative threshold below which a float coordinate counts as zero for the
/// normalization.
const FLOAT_ZERO: f64 = 1e-12;

impl<S: Scalar> ProjectivePoint<S> {
    pub fn new(coords: Vec<S>) -> Result<Self> {
        let scale = coords.iter().map(|c| c.magnitude()).fold(0.0, f64::max);
        let pivot = coords
            .iter()
            .position(|c| !c.is_zero() && !c.negligible(scale, if S::EXACT { 0.0 } else { FLOAT_ZERO }))
            .ok_or(Error::ZeroPoint)?;
        let inv = S::one() / coords[pivot].clone();
        let coords = coords
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                if i < pivot {
                    S::zero()
                } else if i == pivot {
                    S::one()
                } else {
                    c * inv.clone()
                }
            })
            .collect();
        Ok(ProjectivePoint { coords })
    }

    /// Affine point `x` viewed as `[1 : x]`.
    pub fn from_affine(x: &[S]) -> Self {
        let mut c = Vec::with_capacity(x.len() + 1);
        c.push(S::one());
        c.extend_from_slice(x);
        ProjectivePoint { coords: c }
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn conj(&self) -> Self {
        ProjectivePoint {
            coords: self.coords.iter().map(|c| c.conj()).collect(),
        }
    }

    pub fn to_c64(&self) -> Vec<Complex64> {
        self.coords.iter().map(|c| c.to_c64()).collect()
    }

    /// Largest imaginary part of the normalized coordinates.
    pub fn imag_size(&self) -> f64 {
        self.coords
            .iter()
            .map(|c| c.to_c64().im.abs())
            .fold(0.0, f64::max)
    }

    pub fn is_real(&self, tol: f64) -> bool {
        if S::EXACT {
            self.coords.iter().all(|c| c.is_real())
        } else {
            let scale = self
                .coords
                .iter()
                .map(|c| c.magnitude())
                .fold(1.0, f64::max);
            self.imag_size() <= tol * scale
        }
    }

    /// Distance between normalized representatives.
    pub fn distance(&self, other: &Self) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a.to_c64() - b.to_c64()).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussRational as Q;

    #[test]
    fn normalization_is_unique() {
        let a = ProjectivePoint::new(vec![Q::from_i64(0), Q::from_i64(2), Q::i() * Q::from_i64(2)]).unwrap();
        let b = ProjectivePoint::new(vec![Q::from_i64(0), Q::i(), -Q::one()]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coords()[1], Q::one());
        assert!(!a.is_real(0.0));
        assert_eq!(ProjectivePoint::<Q>::new(vec![Q::zero(); 3]), Err(Error::ZeroPoint));
    }
}
