use super::structure::{identity_entry, HopfQuasigroup};
use crate::error::{Error, Result};
use crate::exactlin::{Chain, LinearMap};
use crate::loops::Loop;
use crate::report::{Entry, Report, Witness};
use crate::scalar::Scalar;

/// An invertible map that is an algebra map, a coalgebra map, and commutes
/// with the antipode. The inverse is cached.
#[derive(Debug, Clone, PartialEq)]
pub struct HqgAutomorphism<T> {
    matrix: LinearMap<T>,
    inverse: LinearMap<T>,
}

impl<T: Scalar> HqgAutomorphism<T> {
    pub fn new(h: &HopfQuasigroup<T>, matrix: LinearMap<T>) -> Result<Self> {
        let report = check_automorphism(h, &matrix);
        if let Some(failed) = report.failures().next() {
            return Err(Error::AxiomFailed {
                identity: format!("automorphism: {}", failed.name),
                witness: failed.witness.clone(),
            });
        }
        let inverse = matrix.invert()?;
        Ok(HqgAutomorphism { matrix, inverse })
    }

    pub fn identity(dim: usize) -> Self {
        HqgAutomorphism {
            matrix: LinearMap::identity(dim),
            inverse: LinearMap::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.cod_dim()
    }

    pub fn matrix(&self) -> &LinearMap<T> {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &LinearMap<T> {
        &self.inverse
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        Ok(HqgAutomorphism {
            matrix: self.matrix.compose(&other.matrix)?,
            inverse: other.inverse.compose(&self.inverse)?,
        })
    }

    pub fn inverse(&self) -> Self {
        HqgAutomorphism {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }
}

/// Invertibility, multiplicativity, unit and counit preservation,
/// comultiplicativity, and `S∘α = α∘S`.
pub fn check_automorphism<T: Scalar>(h: &HopfQuasigroup<T>, alpha: &LinearMap<T>) -> Report {
    let mut report = Report::new("automorphism");
    let n = h.dim();
    if alpha.shape() != (n, n) {
        report.push(Entry::fail(
            "shape",
            Witness::new(vec![], format!("{:?}", alpha.shape()), format!("{:?}", (n, n))),
        ));
        return report;
    }
    let c = || Chain::<T>::new();
    report.push(Entry::timed("invertible", || {
        alpha
            .invert()
            .err()
            .map(|e| Witness::new(vec![], "singular", "invertible").with_note(e.to_string()))
    }));
    report.push(identity_entry(
        "α(hg) = α(h)α(g)",
        &[n, n],
        c().merge(0, h.mult()).map(0, alpha),
        c().map(0, alpha).map(1, alpha).merge(0, h.mult()),
    ));
    report.push(identity_entry(
        "α(1) = 1",
        &[],
        c().insert(0, h.unit()).map(0, alpha),
        c().insert(0, h.unit()),
    ));
    report.push(identity_entry(
        "Δ(α(h)) = α(h1) ⊗ α(h2)",
        &[n],
        c().map(0, alpha).split(0, h.comult(), [n, n]),
        c().split(0, h.comult(), [n, n]).map(0, alpha).map(1, alpha),
    ));
    report.push(identity_entry(
        "ε(α(h)) = ε(h)",
        &[n],
        c().map(0, alpha).contract(0, h.counit()),
        c().contract(0, h.counit()),
    ));
    report.push(identity_entry(
        "S(α(h)) = α(S(h))",
        &[n],
        c().map(0, alpha).map(0, h.antipode()),
        c().map(0, h.antipode()).map(0, alpha),
    ));
    report
}

/// The linear extension of a loop automorphism to `kL`.
pub fn automorphism_from_loop_perm<T: Scalar>(
    l: &Loop,
    h: &HopfQuasigroup<T>,
    perm: &[usize],
) -> Result<HqgAutomorphism<T>> {
    if h.dim() != l.size() {
        return Err(Error::AmbientMismatch);
    }
    if let Some(why) = l.automorphism_violation(perm) {
        return Err(Error::NotLoopAutomorphism(why));
    }
    HqgAutomorphism::new(h, LinearMap::permutation(perm))
}
