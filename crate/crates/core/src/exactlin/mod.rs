//! Exact linear algebra over a [`Scalar`](crate::Scalar) field: dense maps,
//! the Kronecker calculus under one fixed flattening, and slot-wise
//! evaluation of tensor identities.

mod chain;
mod linear_map;
mod solve;
mod tensor;

pub use chain::{find_counterexample, maps_agree, Chain};
pub use linear_map::LinearMap;
pub use solve::Echelon;
pub use tensor::{flat_index, multi_index, SparseTensor};

use crate::error::Result;
use crate::scalar::Scalar;

/// `f ∘ g`.
pub fn compose<T: Scalar>(f: &LinearMap<T>, g: &LinearMap<T>) -> Result<LinearMap<T>> {
    f.compose(g)
}

/// `f ⊗ g`.
pub fn tensor_map<T: Scalar>(f: &LinearMap<T>, g: &LinearMap<T>) -> LinearMap<T> {
    f.tensor(g)
}

/// The flip `k^m ⊗ k^n -> k^n ⊗ k^m`.
pub fn swap<T: Scalar>(m: usize, n: usize) -> LinearMap<T> {
    LinearMap::swap(m, n)
}

pub fn apply<T: Scalar>(f: &LinearMap<T>, v: &[T]) -> Result<Vec<T>> {
    f.apply(v)
}

pub fn invert<T: Scalar>(f: &LinearMap<T>) -> Result<LinearMap<T>> {
    f.invert()
}
