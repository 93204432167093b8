//! Exact coefficient arithmetic.

pub mod cyclotomic;
pub mod det;
pub mod linalg;
pub mod poly;
pub mod random;
pub mod ring;
pub mod text;

pub use cyclotomic::{cyclotomic_modulus, CyclotomicField, CyclotomicNumber, Rational};
pub use det::{det_bareiss, det_cofactor};
pub use linalg::{axpy, EchelonBasis, Matrix, SparseVec};
pub use poly::CycPolynomial;
pub use random::random_point;
pub use ring::{Domain, Field, Ring};
pub use text::{parse_cyclotomic, parse_polynomial};
