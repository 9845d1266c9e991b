//! The coefficient field every structure map is written over.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{FromPrimitive, Num};

/// A field element usable as a matrix entry.
///
/// Everything in this crate is generic over `Scalar`; the intended instance is
/// [`crate::Rational`] (arbitrary precision), where every identity check is an
/// exact equality. Machine rationals and floats also satisfy the bound, which
/// is handy for kernels whose entries never leave `{-1, 0, 1}`.
pub trait Scalar:
    Num + Neg<Output = Self> + FromPrimitive + Clone + PartialEq + Debug + Display + FromStr + Send + Sync + 'static
{
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;

    /// `self += a * b` without cloning either factor.
    fn add_product(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        *self = self.add_ref(&p);
    }

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every field contains the integers")
    }
}

impl<T> Scalar for T
where
    T: Num + Neg<Output = T> + FromPrimitive + Clone + PartialEq + Debug + Display + FromStr + Send + Sync + 'static,
    for<'a> &'a T: Mul<&'a T, Output = T> + Add<&'a T, Output = T> + Sub<&'a T, Output = T>,
{
    #[inline]
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    #[inline]
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    #[inline]
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
}

/// Parses a scalar written as `"p/q"`, `"p"`, or a bare integer.
pub fn parse_scalar<T: Scalar>(text: &str) -> Option<T> {
    let text = text.trim();
    if let Ok(v) = text.parse::<T>() {
        return Some(v);
    }
    // Float-like scalars do not parse "p/q" themselves.
    let (p, q) = text.split_once('/')?;
    let p = T::from_i64(p.trim().parse().ok()?)?;
    let q = T::from_i64(q.trim().parse().ok()?)?;
    if q.is_zero() {
        return None;
    }
    Some(p / q)
}
