//! Exact scalar fields: ℚ and the cyclotomic fields ℚ(ζₙ).

mod cyclotomic;
mod rational;

use core::fmt::Debug;

pub use cyclotomic::{cyclotomic_polynomial, totient, Cyclotomic, MAX_ORDER};
pub use rational::{ParseRationalError, Rational};

/// A field whose elements carry enough context to build their own zero and
/// one (for cyclotomics, the field order).
pub trait Field: Clone + PartialEq + Debug {
    type Ctx: Copy + PartialEq + Debug;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: Self::Ctx) -> Self;
    fn one(ctx: Self::Ctx) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Panics on zero.
    fn inv(&self) -> Self;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

impl Field for Rational {
    type Ctx = ();

    fn ctx(&self) {}
    fn zero(_: ()) -> Self {
        Rational::ZERO
    }
    fn one(_: ()) -> Self {
        Rational::ONE
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}
