//! Pipelines of structure maps acting on individual tensor slots.
//!
//! Every Sweedler-notation identity in this crate is written as two `Chain`s
//! over the same input slots. A chain never materializes `f ⊗ id ⊗ ...`; each
//! step rewrites only the nonzero coefficients of a sparse tensor, so a
//! triple-product identity costs one sparse evaluation per basis vector.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::linear_map::LinearMap;
use super::tensor::{flat_index, flat_len, multi_index, SparseTensor};
use crate::error::{Error, Result};
use crate::report::Witness;
use crate::scalar::Scalar;

#[derive(Clone)]
enum Step<T> {
    Apply {
        at: usize,
        arity: usize,
        out: Vec<usize>,
        dom: usize,
        cod: usize,
        // nonzero (row, value) pairs of every column
        columns: Arc<Vec<Vec<(usize, T)>>>,
    },
    // reorders slots at..at + perm.len()
    Permute { at: usize, perm: Vec<usize> },
}

#[derive(Clone, Default)]
pub struct Chain<T> {
    steps: Vec<Step<T>>,
}

impl<T: Scalar> Chain<T> {
    pub fn new() -> Self {
        Chain { steps: Vec::new() }
    }

    /// Replaces slots `at..at + arity` by the image of `f`, split into slots
    /// of dimensions `out`. `arity == 0` inserts (e.g. a unit), an empty
    /// `out` contracts (e.g. a counit).
    pub fn op(mut self, at: usize, arity: usize, f: &LinearMap<T>, out: &[usize]) -> Self {
        let columns = (0..f.dom_dim()).map(|j| f.column_support(j)).collect();
        self.steps.push(Step::Apply {
            at,
            arity,
            out: out.to_vec(),
            dom: f.dom_dim(),
            cod: f.cod_dim(),
            columns: Arc::new(columns),
        });
        self
    }

    /// Applies an endomorphism-shaped `f` to the single slot `at`.
    pub fn map(self, at: usize, f: &LinearMap<T>) -> Self {
        let cod = f.cod_dim();
        self.op(at, 1, f, &[cod])
    }

    /// Two slots in, one slot out (a multiplication or an action).
    pub fn merge(self, at: usize, f: &LinearMap<T>) -> Self {
        let cod = f.cod_dim();
        self.op(at, 2, f, &[cod])
    }

    /// One slot in, two slots out (a comultiplication or a coaction).
    pub fn split(self, at: usize, f: &LinearMap<T>, out: [usize; 2]) -> Self {
        self.op(at, 1, f, &out)
    }

    /// Inserts the image of `k -> V` as a new slot at position `at`.
    pub fn insert(self, at: usize, f: &LinearMap<T>) -> Self {
        let cod = f.cod_dim();
        self.op(at, 0, f, &[cod])
    }

    /// Contracts slot `at` with a functional `V -> k`.
    pub fn contract(self, at: usize, f: &LinearMap<T>) -> Self {
        self.op(at, 1, f, &[])
    }

    /// Reorders the leading slots: new slot `k` is old slot `perm[k]`.
    pub fn permute(self, perm: &[usize]) -> Self {
        self.permute_at(0, perm)
    }

    /// Reorders slots `at..at + perm.len()`, leaving the rest in place.
    pub fn permute_at(mut self, at: usize, perm: &[usize]) -> Self {
        self.steps.push(Step::Permute { at, perm: perm.to_vec() });
        self
    }

    /// The same chain acting `offset` slots further right.
    pub fn shifted(&self, offset: usize) -> Self {
        let steps = self
            .steps
            .iter()
            .map(|s| {
                let mut s = s.clone();
                match &mut s {
                    Step::Apply { at, .. } | Step::Permute { at, .. } => *at += offset,
                }
                s
            })
            .collect();
        Chain { steps }
    }

    pub fn then(mut self, other: &Chain<T>) -> Self {
        self.steps.extend(other.steps.iter().cloned());
        self
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn eval(&self, mut t: SparseTensor<T>) -> Result<SparseTensor<T>> {
        for step in &self.steps {
            t = step.apply(t)?;
        }
        Ok(t)
    }

    /// Evaluates the chain on every basis vector of `in_dims` and assembles
    /// the resulting matrix.
    pub fn to_map(&self, in_dims: &[usize]) -> Result<LinearMap<T>> {
        let total = flat_len(in_dims);
        let images: Vec<SparseTensor<T>> = (0..total)
            .into_par_iter()
            .map(|j| self.eval(SparseTensor::basis(in_dims.to_vec(), j)))
            .collect::<Result<_>>()?;
        let cod = match images.first() {
            Some(t) => t.len(),
            None => self.out_len(in_dims)?,
        };
        let mut m = LinearMap::zero(cod, total);
        for (j, img) in images.iter().enumerate() {
            for (i, v) in img.iter() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    fn out_len(&self, in_dims: &[usize]) -> Result<usize> {
        let mut dims = in_dims.to_vec();
        for step in &self.steps {
            dims = step.out_dims(&dims)?;
        }
        Ok(flat_len(&dims))
    }
}

impl<T: Scalar> Step<T> {
    fn out_dims(&self, dims: &[usize]) -> Result<Vec<usize>> {
        match self {
            Step::Apply { at, arity, out, dom, cod, .. } => {
                if at + arity > dims.len() {
                    return Err(Error::Format(format!(
                        "step reads slots {at}..{} of a {}-slot tensor",
                        at + arity,
                        dims.len()
                    )));
                }
                let mid = flat_len(&dims[*at..at + arity]);
                if mid != *dom || flat_len(out) != *cod {
                    return Err(Error::DimensionMismatch {
                        op: "chain step",
                        left: (*cod, *dom),
                        right: (flat_len(out), mid),
                    });
                }
                let mut nd = dims[..*at].to_vec();
                nd.extend_from_slice(out);
                nd.extend_from_slice(&dims[at + arity..]);
                Ok(nd)
            }
            Step::Permute { at, perm } => {
                let k = perm.len();
                let mut seen = vec![false; k];
                if at + k > dims.len() || perm.iter().any(|&p| p >= k || std::mem::replace(&mut seen[p], true)) {
                    return Err(Error::Format(format!(
                        "{perm:?} at slot {at} is not a permutation within {} slots",
                        dims.len()
                    )));
                }
                let mut nd = dims.to_vec();
                for (i, &p) in perm.iter().enumerate() {
                    nd[at + i] = dims[at + p];
                }
                Ok(nd)
            }
        }
    }

    fn apply(&self, t: SparseTensor<T>) -> Result<SparseTensor<T>> {
        let new_dims = self.out_dims(t.dims())?;
        match self {
            Step::Apply { at, arity, cod, columns, .. } => {
                let dims = t.dims();
                let mid = flat_len(&dims[*at..at + arity]);
                let post = flat_len(&dims[at + arity..]);
                let mut acc: BTreeMap<usize, T> = BTreeMap::new();
                for (idx, c) in t.iter() {
                    let p = idx / (mid * post);
                    let q = (idx / post) % mid;
                    let r = idx % post;
                    for (i, a) in &columns[q] {
                        let k = (p * cod + i) * post + r;
                        acc.entry(k).or_insert_with(T::zero).add_product(c, a);
                    }
                }
                acc.retain(|_, v| !v.is_zero());
                Ok(SparseTensor::from_parts(new_dims, acc))
            }
            Step::Permute { at, perm } => {
                let old_dims = t.dims().to_vec();
                let coeffs = t
                    .into_coeffs()
                    .into_iter()
                    .map(|(idx, v)| {
                        let old = multi_index(&old_dims, idx);
                        let mut new = old.clone();
                        for (i, &p) in perm.iter().enumerate() {
                            new[at + i] = old[at + p];
                        }
                        (flat_index(&new_dims, &new), v)
                    })
                    .collect();
                Ok(SparseTensor::from_parts(new_dims, coeffs))
            }
        }
    }
}

/// Checks `lhs(x) == rhs(x)` for every basis vector `x` of `in_dims`,
/// returning the first counterexample in flattened-index order.
pub fn find_counterexample<T: Scalar>(in_dims: &[usize], lhs: &Chain<T>, rhs: &Chain<T>) -> Option<Witness> {
    let total = flat_len(in_dims);
    let probe = |flat: usize| -> Option<Witness> {
        let x = SparseTensor::basis(in_dims.to_vec(), flat);
        let basis = multi_index(in_dims, flat);
        match (lhs.eval(x.clone()), rhs.eval(x)) {
            (Ok(l), Ok(r)) if l == r => None,
            (Ok(l), Ok(r)) => Some(Witness::new(basis, l.to_string(), r.to_string())),
            (Err(e), _) | (_, Err(e)) => {
                Some(Witness::new(basis, "?", "?").with_note(format!("ill-formed identity: {e}")))
            }
        }
    };
    if total <= 64 {
        (0..total).find_map(probe)
    } else {
        (0..total).into_par_iter().find_map_first(probe)
    }
}

/// Compares two maps with the same domain by applying both to every basis
/// vector of `in_dims`.
pub fn maps_agree<T: Scalar>(in_dims: &[usize], f: &LinearMap<T>, g: &LinearMap<T>) -> Option<Witness> {
    let out = [f.cod_dim()];
    let n = flat_len(in_dims);
    let lhs = Chain::new().op(0, in_dims.len(), f, &out);
    let rhs = Chain::new().op(0, in_dims.len(), g, &[g.cod_dim()]);
    if f.dom_dim() != n || g.dom_dim() != n {
        return Some(Witness::new(vec![], format!("{:?}", f.shape()), format!("{:?}", g.shape()))
            .with_note("maps have incompatible shapes"));
    }
    find_counterexample(in_dims, &lhs, &rhs)
}
