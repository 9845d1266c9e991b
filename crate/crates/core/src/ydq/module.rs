use std::sync::Arc;

use super::expr::{comodule_entries, compat, plain_entries, quasimodule_entries, CompatReport, YdqExpr};
use super::group::GElement;
use crate::error::{Error, Result};
use crate::exactlin::{Chain, LinearMap};
use crate::hopfq::{ab_flexible_witness, HopfQuasigroup, HqgAutomorphism};
use crate::report::Report;
use crate::scalar::Scalar;

/// A left `H`-quasimodule and right `H`-comodule carrying its component
/// label `(α, β)`.
///
/// `action` is `m × (n·m)` with column `h*m + x` the image of `e_h ⊗ e_x`;
/// `coaction` is `(m·n) × m` with row `x*n + h` the coefficient of
/// `e_x ⊗ e_h`.
#[derive(Clone, Debug)]
pub struct YdqModule<T> {
    component: GElement<T>,
    mdim: usize,
    action: LinearMap<T>,
    coaction: LinearMap<T>,
}

impl<T: Scalar> YdqModule<T> {
    /// Validates the quasimodule and comodule axioms and the twisted
    /// compatibility; the first failing identity becomes the error.
    pub fn new(component: GElement<T>, action: LinearMap<T>, coaction: LinearMap<T>) -> Result<Self> {
        let m = Self::from_parts_unchecked(component, action, coaction)?;
        let mut report = check_quasimodule(&m);
        report.absorb("", check_comodule(&m));
        for e in check_compat(&m).entries() {
            report.push(e);
        }
        if let Some(failed) = report.failures().next() {
            return Err(Error::AxiomFailed {
                identity: failed.name.clone(),
                witness: failed.witness.clone(),
            });
        }
        Ok(m)
    }

    /// Checks shapes only.
    pub fn from_parts_unchecked(component: GElement<T>, action: LinearMap<T>, coaction: LinearMap<T>) -> Result<Self> {
        let n = component.ambient().dim();
        let mdim = action.cod_dim();
        if action.dom_dim() != n * mdim {
            return Err(Error::DimensionMismatch {
                op: "module action",
                left: action.shape(),
                right: (mdim, n * mdim),
            });
        }
        if coaction.shape() != (mdim * n, mdim) {
            return Err(Error::DimensionMismatch {
                op: "module coaction",
                left: coaction.shape(),
                right: (mdim * n, mdim),
            });
        }
        Ok(YdqModule {
            component,
            mdim,
            action,
            coaction,
        })
    }

    /// The base field with `h·1 = ε(h)` and `1 ↦ 1 ⊗ 1_H`, in `(id, id)`.
    pub fn trivial(ambient: Arc<HopfQuasigroup<T>>) -> Self {
        let action = ambient.counit().clone();
        let coaction = ambient.unit().clone();
        YdqModule {
            component: GElement::identity(ambient),
            mdim: 1,
            action,
            coaction,
        }
    }

    pub fn ambient(&self) -> &Arc<HopfQuasigroup<T>> {
        self.component.ambient()
    }

    pub fn component(&self) -> &GElement<T> {
        &self.component
    }

    pub fn mdim(&self) -> usize {
        self.mdim
    }

    pub fn action(&self) -> &LinearMap<T> {
        &self.action
    }

    pub fn coaction(&self) -> &LinearMap<T> {
        &self.coaction
    }

    pub fn expr(&self) -> YdqExpr<T> {
        YdqExpr::of(self)
    }

    /// The same structure maps under another label, for mutation tests.
    pub fn relabeled(&self, component: GElement<T>) -> Result<Self> {
        Self::from_parts_unchecked(component, self.action.clone(), self.coaction.clone())
    }
}

impl<T: Scalar> PartialEq for YdqModule<T> {
    fn eq(&self, other: &Self) -> bool {
        self.mdim == other.mdim
            && self.action == other.action
            && self.coaction == other.coaction
            && self.component == other.component
    }
}

pub fn check_quasimodule<T: Scalar>(m: &YdqModule<T>) -> Report {
    let mut r = Report::new("quasimodule");
    for e in quasimodule_entries(&m.expr()) {
        r.push(e);
    }
    r
}

pub fn check_comodule<T: Scalar>(m: &YdqModule<T>) -> Report {
    let mut r = Report::new("comodule");
    for e in comodule_entries(&m.expr()) {
        r.push(e);
    }
    r
}

/// Both forms of the twisted compatibility over all basis pairs.
pub fn check_compat<T: Scalar>(m: &YdqModule<T>) -> CompatReport {
    compat(&m.expr())
}

/// The classical condition `h1·m0 ⊗ h2m1 = (h2·m)0 ⊗ (h2·m)1h1` and the
/// two quasi-comodule conditions. Meaningful for modules in `(id, id)`.
pub fn check_plain_ydq<T: Scalar>(m: &YdqModule<T>) -> Report {
    let mut r = Report::new("plain-ydq");
    for e in plain_entries(&m.expr()) {
        r.push(e);
    }
    r
}

/// `H` itself with `ρ = Δ` and `h·h' = (β(h2)h')α(S⁻¹(h1))`, in `(α, β)`.
///
/// Requires `α(h1)(gβ(h2)) = (α(h1)g)β(h2)`; the result is validated like
/// any other module.
pub fn make_canonical<T: Scalar>(
    h: &Arc<HopfQuasigroup<T>>,
    alpha: &HqgAutomorphism<T>,
    beta: &HqgAutomorphism<T>,
) -> Result<YdqModule<T>> {
    let n = h.dim();
    if let Some(w) = ab_flexible_witness(h, Some(alpha.matrix()), Some(beta.matrix())) {
        return Err(Error::Precondition(format!(
            "(α,β)-flexibility α(h1)(gβ(h2)) = (α(h1)g)β(h2) fails at {w}"
        )));
    }
    let component = GElement::new(Arc::clone(h), alpha.clone(), beta.clone())?;
    let alpha_s_inv = alpha.matrix().compose(h.antipode_inv())?;
    let action = Chain::new()
        .split(0, h.comult(), [n, n])
        .map(0, &alpha_s_inv)
        .map(1, beta.matrix())
        .permute(&[1, 2, 0])
        .merge(0, h.mult())
        .merge(0, h.mult())
        .to_map(&[n, n])?;
    YdqModule::new(component, action, h.comult().clone())
}
