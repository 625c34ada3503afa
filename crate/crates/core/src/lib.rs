//! Polynomial quotients by quasi-symmetric ideals.
//!
//! The crate computes the monomial and fundamental quasi-symmetric
//! polynomials, the recursive `G` family whose leading monomials are the
//! exponent vectors reaching a given level, graded slices of the ideals
//! `J_n^(e)`, Hilbert functions of the quotients, Catalan normal forms, and
//! exact checks of the S-polynomial identities behind the Gröbner basis.
//!
//! All arithmetic is generic over an exact [`Scalar`]; [`Rational`] is the
//! default coefficient field.

pub mod compositions;
pub mod error;
pub mod gbverify;
pub mod gfunctions;
pub mod idealcalc;
pub mod linalg;
pub mod polyring;
pub mod qsym;
pub mod scalar;
pub mod verify;

pub use compositions::{Composition, GenComposition, PathDiagram};
pub use error::{Error, Result};
pub use gfunctions::GFamily;
pub use idealcalc::{GradedSliceBasis, HilbertTable, IdealCalc};
pub use polyring::{Monomial, Polynomial};
pub use scalar::Scalar;

/// Arbitrary-precision rationals, the default coefficient field.
pub type Rational = num_rational::BigRational;
/// Rationals with `i64` numerator and denominator; fast for small cases.
pub type SmallRational = num_rational::Ratio<i64>;

pub type Poly = Polynomial<Rational>;
pub type SmallPoly = Polynomial<SmallRational>;
pub type Family = GFamily<Rational>;
pub type Ideal = IdealCalc<Rational>;
pub type SliceBasis = GradedSliceBasis<Rational>;
