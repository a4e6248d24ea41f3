//! Real-zero polynomials and their determinantal representations.
//!
//! The crate works over two scalar types through the [`scalar::Scalar`]
//! trait: exact Gaussian rationals ([`scalar::GaussRational`]) and
//! `Complex64`. Most operations are generic, so the same call runs in
//! either mode.
//!
//! - [`poly`], [`realroots`]: sparse polynomials, line restrictions, real
//!   root isolation and power sums.
//! - [`rz`]: sampled real-zero tests, Hermite matrices, Renegar derivatives
//!   and membership in the rigidly convex region.
//! - [`interlace`]: Bezout matrices and interlacing tests.
//! - [`construct`]: builds a pencil `A0 + x1 A1 + x2 A2` with
//!   `A0 = I` and determinant `p` for a plane polynomial `p`.
//! - [`pencil`]: matrix pencils and the checks that certify them.
//! - [`corpus`]: named and randomly generated test polynomials.
//! - [`cli`]: the `rzdet` command-line tool.

pub mod cli;
pub mod construct;
pub mod corpus;
pub mod error;
pub mod interlace;
pub mod linalg;
pub mod pencil;
pub mod poly;
pub mod realroots;
pub mod report;
pub mod rz;
pub mod sampling;
pub mod scalar;

pub use error::{Error, Result};
