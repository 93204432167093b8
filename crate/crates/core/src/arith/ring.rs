//! Minimal ring abstractions shared by the exact linear algebra routines.
//!
//! Elements carry their own ring data (the cyclotomic order), so "zero" and
//! "one" are produced from an existing element rather than from a ring object.

use std::fmt::Debug;

pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
}

/// An integral domain with exact division where the quotient exists.
pub trait Domain: Ring {
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

pub trait Field: Domain {
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }
}
