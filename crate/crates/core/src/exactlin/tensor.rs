use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// A vector in `V_1 ⊗ ... ⊗ V_k`, stored sparsely by flattened index.
///
/// Slots of dimension one are allowed and behave like the ground field.
#[derive(Clone, PartialEq)]
pub struct SparseTensor<T> {
    dims: Vec<usize>,
    coeffs: BTreeMap<usize, T>,
}

pub(crate) fn flat_len(dims: &[usize]) -> usize {
    dims.iter().product()
}

/// Row-major decomposition of a flattened index.
pub fn multi_index(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in dims.iter().enumerate().rev() {
        out[slot] = flat % d;
        flat /= d;
    }
    out
}

pub fn flat_index(dims: &[usize], multi: &[usize]) -> usize {
    dims.iter().zip(multi).fold(0, |acc, (&d, &i)| acc * d + i)
}

impl<T: Scalar> SparseTensor<T> {
    pub fn zero(dims: Vec<usize>) -> Self {
        SparseTensor {
            dims,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis vector with flattened index `flat`.
    pub fn basis(dims: Vec<usize>, flat: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(flat, T::one());
        SparseTensor { dims, coeffs }
    }

    pub fn from_dense(dims: Vec<usize>, values: &[T]) -> Self {
        let coeffs = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        SparseTensor { dims, coeffs }
    }

    pub(crate) fn from_parts(dims: Vec<usize>, coeffs: BTreeMap<usize, T>) -> Self {
        SparseTensor { dims, coeffs }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        flat_len(&self.dims)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, flat: usize) -> T {
        self.coeffs.get(&flat).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &T)> {
        self.coeffs.iter().map(|(&k, v)| (k, v))
    }

    pub fn to_dense(&self) -> Vec<T> {
        let mut out = vec![T::zero(); self.len()];
        for (&k, v) in &self.coeffs {
            out[k] = v.clone();
        }
        out
    }

    pub(crate) fn into_coeffs(self) -> BTreeMap<usize, T> {
        self.coeffs
    }
}

impl<T: Scalar> fmt::Display for SparseTensor<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (n, (&k, v)) in self.coeffs.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let idx = multi_index(&self.dims, k);
            let idx: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            if v.is_one() {
                write!(f, "e[{}]", idx.join(","))?;
            } else {
                write!(f, "({v})e[{}]", idx.join(","))?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for SparseTensor<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseTensor{:?}({self})", self.dims)
    }
}
