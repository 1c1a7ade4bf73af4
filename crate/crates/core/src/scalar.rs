//! Scalar abstraction for the numeric kernels.
//!
//! Everything numerical in this crate is generic over the floating-point
//! type through [`Scalar`]; `f64` is what the CLI and the benchmark harness
//! instantiate, `f32` exists mainly to keep the kernels honest about
//! precision assumptions.

use nalgebra::RealField;
use num_traits::{FromPrimitive, ToPrimitive};
use rand::Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

/// Floating-point scalar usable by every kernel in this crate.
///
/// Bundles the linear-algebra requirements (`RealField`) with primitive
/// conversions and the random draws the simulator needs.
pub trait Scalar:
    RealField + FromPrimitive + ToPrimitive + Copy + Default + std::iter::Sum<Self>
{
    /// Standard normal draw.
    fn std_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;
    /// Standard exponential (mean one) draw.
    fn std_exp<R: Rng + ?Sized>(rng: &mut R) -> Self;
    /// Uniform draw from `[0, 1)`.
    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Uniform draw from `[lo, hi)`.
    fn uniform_in<R: Rng + ?Sized>(rng: &mut R, lo: Self, hi: Self) -> Self {
        lo + (hi - lo) * Self::unit_uniform(rng)
    }
}

impl Scalar for f64 {
    fn std_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
    fn std_exp<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Exp1.sample(rng)
    }
    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.gen()
    }
}

impl Scalar for f32 {
    fn std_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
    fn std_exp<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Exp1.sample(rng)
    }
    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.gen()
    }
}

/// Convert an `f64` constant into the working scalar type.
#[inline]
pub fn fromf<S: Scalar>(x: f64) -> S {
    S::from_f64(x).expect("f64 constant representable in scalar type")
}

/// Convert the working scalar into `f64` (for reporting).
#[inline]
pub fn tof64<S: Scalar>(x: S) -> f64 {
    x.to_f64().expect("scalar representable as f64")
}
