use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopfq::{HopfQuasigroup, HqgAutomorphism};
use crate::scalar::Scalar;

/// A pair `(α, β)` of automorphisms of a fixed ambient Hopf quasigroup,
/// multiplied by `(α, β) ∗ (γ, δ) = (αγ, δγ⁻¹βγ)`.
#[derive(Clone)]
pub struct GElement<T> {
    ambient: Arc<HopfQuasigroup<T>>,
    alpha: HqgAutomorphism<T>,
    beta: HqgAutomorphism<T>,
}

/// Whether two handles point at the same Hopf quasigroup (by identity or by
/// structure).
pub fn same_ambient<T: Scalar>(a: &Arc<HopfQuasigroup<T>>, b: &Arc<HopfQuasigroup<T>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<T: Scalar> GElement<T> {
    pub fn new(ambient: Arc<HopfQuasigroup<T>>, alpha: HqgAutomorphism<T>, beta: HqgAutomorphism<T>) -> Result<Self> {
        let n = ambient.dim();
        if alpha.dim() != n || beta.dim() != n {
            return Err(Error::AmbientMismatch);
        }
        Ok(GElement { ambient, alpha, beta })
    }

    /// The unit `(id, id)`.
    pub fn identity(ambient: Arc<HopfQuasigroup<T>>) -> Self {
        let n = ambient.dim();
        GElement {
            ambient,
            alpha: HqgAutomorphism::identity(n),
            beta: HqgAutomorphism::identity(n),
        }
    }

    pub fn ambient(&self) -> &Arc<HopfQuasigroup<T>> {
        &self.ambient
    }

    pub fn alpha(&self) -> &HqgAutomorphism<T> {
        &self.alpha
    }

    pub fn beta(&self) -> &HqgAutomorphism<T> {
        &self.beta
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_identity() && self.beta.is_identity()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        g_mul(self, other)
    }

    pub fn inv(&self) -> Self {
        g_inv(self)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if same_ambient(&self.ambient, &other.ambient) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }
}

/// `(α, β) ∗ (γ, δ) = (αγ, δγ⁻¹βγ)`.
pub fn g_mul<T: Scalar>(x: &GElement<T>, y: &GElement<T>) -> Result<GElement<T>> {
    x.check_same(y)?;
    let gamma = &y.alpha;
    let twisted = y.beta.compose(&gamma.inverse().compose(&x.beta.compose(gamma)?)?)?;
    Ok(GElement {
        ambient: Arc::clone(&x.ambient),
        alpha: x.alpha.compose(gamma)?,
        beta: twisted,
    })
}

/// `(α, β)⁻¹ = (α⁻¹, αβ⁻¹α⁻¹)`.
pub fn g_inv<T: Scalar>(x: &GElement<T>) -> GElement<T> {
    let a_inv = x.alpha.inverse();
    let beta = x
        .alpha
        .compose(&x.beta.inverse())
        .and_then(|ab| ab.compose(&a_inv))
        .expect("automorphisms of one ambient share a dimension");
    GElement {
        ambient: Arc::clone(&x.ambient),
        alpha: a_inv,
        beta,
    }
}

impl<T: Scalar> PartialEq for GElement<T> {
    fn eq(&self, other: &Self) -> bool {
        self.alpha.matrix() == other.alpha.matrix()
            && self.beta.matrix() == other.beta.matrix()
            && same_ambient(&self.ambient, &other.ambient)
    }
}

impl<T: fmt::Debug> fmt::Debug for GElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GElement")
            .field("alpha", &self.alpha)
            .field("beta", &self.beta)
            .finish()
    }
}
