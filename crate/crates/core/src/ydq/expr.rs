//! Modules whose underlying space is a tensor product of several slots.
//!
//! Tensor products, conjugates and braidings are built as [`Chain`]s over
//! the factor slots instead of dense matrices on the product space. A pair
//! of 16-dimensional modules then never needs its 256 × 4096 action matrix;
//! identities are checked one basis vector at a time.

use std::sync::Arc;

use super::group::{g_inv, g_mul, same_ambient, GElement};
use super::module::YdqModule;
use crate::error::{Error, Result};
use crate::exactlin::{find_counterexample, Chain, LinearMap};
use crate::hopfq::HopfQuasigroup;
use crate::report::{Entry, Witness};
use crate::scalar::Scalar;

/// Action `(h, s1, .., sk) → (s1, .., sk)` and coaction
/// `(s1, .., sk) → (s1, .., sk, h)` over slots of the given dimensions.
#[derive(Clone)]
pub struct YdqExpr<T> {
    component: GElement<T>,
    slots: Vec<usize>,
    action: Chain<T>,
    coaction: Chain<T>,
}

impl<T: Scalar> YdqExpr<T> {
    pub fn of(m: &YdqModule<T>) -> Self {
        let n = m.ambient().dim();
        YdqExpr {
            component: m.component().clone(),
            slots: vec![m.mdim()],
            action: Chain::new().merge(0, m.action()),
            coaction: Chain::new().split(0, m.coaction(), [m.mdim(), n]),
        }
    }

    pub fn ambient(&self) -> &Arc<HopfQuasigroup<T>> {
        self.component.ambient()
    }

    pub fn component(&self) -> &GElement<T> {
        &self.component
    }

    pub fn slots(&self) -> &[usize] {
        &self.slots
    }

    pub fn arity(&self) -> usize {
        self.slots.len()
    }

    pub fn dim(&self) -> usize {
        self.slots.iter().product()
    }

    pub fn action(&self) -> &Chain<T> {
        &self.action
    }

    pub fn coaction(&self) -> &Chain<T> {
        &self.coaction
    }

    /// Input slots `(h, s1, .., sk)` of the action.
    pub fn action_dims(&self) -> Vec<usize> {
        let mut d = vec![self.ambient().dim()];
        d.extend_from_slice(&self.slots);
        d
    }

    fn check_ambient(&self, other: &GElement<T>) -> Result<()> {
        if same_ambient(self.ambient(), other.ambient()) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// `h·(x ⊗ y) = γ(h1)·x ⊗ γ⁻¹βγ(h2)·y` and
    /// `ρ(x ⊗ y) = (x0 ⊗ y0) ⊗ y1x1`, for `self` in `(α, β)` and `other`
    /// in `(γ, δ)`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.check_ambient(&other.component)?;
        let h = Arc::clone(self.ambient());
        let n = h.dim();
        let (a, b) = (self.arity(), other.arity());
        let gamma = other.component.alpha();
        let twisted = gamma
            .inverse_matrix()
            .compose(&self.component.beta().matrix().compose(gamma.matrix())?)?;
        // (h1, h2, A.., B..) → (h1, A.., h2, B..)
        let mut order = vec![0];
        order.extend(2..2 + a);
        order.push(1);
        order.extend(2 + a..2 + a + b);
        let action = Chain::new()
            .split(0, h.comult(), [n, n])
            .map(0, gamma.matrix())
            .map(1, &twisted)
            .permute(&order)
            .then(&self.action)
            .then(&other.action.shifted(a));
        // (ha, B.., hb) → (B.., hb, ha) starting at slot a
        let mut tail: Vec<usize> = (1..=b).collect();
        tail.extend([b + 1, 0]);
        let coaction = self
            .coaction
            .clone()
            .then(&other.coaction.shifted(a + 1))
            .permute_at(a, &tail)
            .merge(a + b, h.mult());
        let mut slots = self.slots.clone();
        slots.extend_from_slice(&other.slots);
        Ok(YdqExpr {
            component: g_mul(&self.component, &other.component)?,
            slots,
            action,
            coaction,
        })
    }

    /// The conjugate `ˣN` for `x = (α, β)` and `self` in `(γ, δ)`:
    /// `h ▷ n = γ⁻¹βγα⁻¹(h)·n`, `n ↦ n0 ⊗ αβ⁻¹(n1)`.
    pub fn conjugate(&self, x: &GElement<T>) -> Result<Self> {
        self.check_ambient(x)?;
        let gamma = self.component.alpha();
        let on_action = gamma
            .inverse_matrix()
            .compose(x.beta().matrix())?
            .compose(gamma.matrix())?
            .compose(x.alpha().inverse_matrix())?;
        let on_coaction = x.alpha().matrix().compose(x.beta().inverse_matrix())?;
        let component = g_mul(&g_mul(x, &self.component)?, &g_inv(x))?;
        Ok(YdqExpr {
            component,
            slots: self.slots.clone(),
            action: Chain::new().map(0, &on_action).then(&self.action),
            coaction: self.coaction.clone().map(self.arity(), &on_coaction),
        })
    }

    /// `c(x ⊗ y) = y0 ⊗ τ(y1)·x` on slots `(X.., Y..) → (Y.., X..)`; the
    /// braiding proper uses `τ = β⁻¹` for `self` in `(α, β)`.
    pub fn braiding_with(&self, other: &Self, twist: &LinearMap<T>) -> Chain<T> {
        let (x, y) = (self.arity(), other.arity());
        let mut order: Vec<usize> = (x..=x + y).collect();
        order.extend(0..x);
        other
            .coaction
            .shifted(x)
            .map(x + y, twist)
            .permute(&order)
            .then(&self.action.shifted(y))
    }

    pub fn braiding(&self, other: &Self) -> Result<Chain<T>> {
        self.check_ambient(&other.component)?;
        Ok(self.braiding_with(other, self.component.beta().inverse_matrix()))
    }

    /// `c⁻¹(y ⊗ x) = β⁻¹(S(y1))·x ⊗ y0` on slots `(Y.., X..) → (X.., Y..)`.
    pub fn braiding_inverse(&self, other: &Self) -> Result<Chain<T>> {
        self.check_ambient(&other.component)?;
        let (x, y) = (self.arity(), other.arity());
        let twist = self.component.beta().inverse_matrix().compose(self.ambient().antipode())?;
        let mut order = vec![y];
        order.extend(y + 1..y + 1 + x);
        order.extend(0..y);
        Ok(other
            .coaction
            .clone()
            .map(y, &twist)
            .permute(&order)
            .then(&self.action))
    }

    /// Dense matrices on the flattened product space.
    pub fn materialize(&self) -> Result<YdqModule<T>> {
        let action = self.action.to_map(&self.action_dims())?;
        let coaction = self.coaction.to_map(&self.slots)?;
        YdqModule::from_parts_unchecked(self.component.clone(), action, coaction)
    }

    /// First disagreement in slot layout, component, action or coaction.
    pub fn structure_difference(&self, other: &Self) -> Option<Witness> {
        if self.slots != other.slots {
            return Some(
                Witness::new(vec![], format!("{:?}", self.slots), format!("{:?}", other.slots))
                    .with_note("slot dimensions differ"),
            );
        }
        if self.component != other.component {
            return Some(Witness::new(vec![], "component", "component").with_note("component labels differ"));
        }
        if let Some(w) = find_counterexample(&self.action_dims(), &self.action, &other.action) {
            return Some(w.with_note("actions differ"));
        }
        find_counterexample(&self.slots, &self.coaction, &other.coaction).map(|w| w.with_note("coactions differ"))
    }
}

fn entry<T: Scalar>(name: &str, dims: &[usize], lhs: Chain<T>, rhs: Chain<T>) -> Entry {
    Entry::timed(name, || find_counterexample(dims, &lhs, &rhs))
}

/// `1·m = m`, `h1·(S(h2)·m) = ε(h)m` and `S(h1)·(h2·m) = ε(h)m`.
pub fn quasimodule_entries<T: Scalar>(e: &YdqExpr<T>) -> Vec<Entry> {
    let h = e.ambient();
    let n = h.dim();
    let dims = e.action_dims();
    let c = || Chain::<T>::new();
    let act = &e.action;
    let eps = c().contract(0, h.counit());
    vec![
        entry("1·m = m", &e.slots, c().insert(0, h.unit()).then(act), c()),
        entry(
            "h1·(S(h2)·m) = ε(h)m",
            &dims,
            c().split(0, h.comult(), [n, n])
                .map(1, h.antipode())
                .then(&act.shifted(1))
                .then(act),
            eps.clone(),
        ),
        entry(
            "S(h1)·(h2·m) = ε(h)m",
            &dims,
            c().split(0, h.comult(), [n, n])
                .map(0, h.antipode())
                .then(&act.shifted(1))
                .then(act),
            eps,
        ),
    ]
}

/// Coassociativity and the counit law of the right coaction.
pub fn comodule_entries<T: Scalar>(e: &YdqExpr<T>) -> Vec<Entry> {
    let h = e.ambient();
    let (n, k) = (h.dim(), e.arity());
    let rho = &e.coaction;
    vec![
        entry(
            "m00 ⊗ m01 ⊗ m1 = m0 ⊗ m11 ⊗ m12",
            &e.slots,
            rho.clone().then(rho),
            rho.clone().split(k, h.comult(), [n, n]),
        ),
        entry("m0ε(m1) = m", &e.slots, rho.clone().contract(k, h.counit()), Chain::new()),
    ]
}

/// Outcome of the two equivalent forms of the twisted Yetter-Drinfeld
/// compatibility, each with its first counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatReport {
    /// `ρ(h·m) = h21·m0 ⊗ (β(h22)m1)α(S⁻¹(h1))`
    pub coaction_of_action: Option<Witness>,
    /// `h1·m0 ⊗ β(h2)m1 = (h2·m)0 ⊗ (h2·m)1α(h1)`
    pub twisted_yd: Option<Witness>,
}

impl CompatReport {
    pub fn coaction_of_action_holds(&self) -> bool {
        self.coaction_of_action.is_none()
    }

    pub fn twisted_yd_holds(&self) -> bool {
        self.twisted_yd.is_none()
    }

    pub fn passed(&self) -> bool {
        self.coaction_of_action_holds() && self.twisted_yd_holds()
    }

    /// The first counterexample, preferring the coaction form.
    pub fn witness(&self) -> Option<&Witness> {
        self.coaction_of_action.as_ref().or(self.twisted_yd.as_ref())
    }

    pub fn entries(&self) -> Vec<Entry> {
        vec![
            Entry::from_witness(COACTION_OF_ACTION, self.coaction_of_action.clone()),
            Entry::from_witness(TWISTED_YD, self.twisted_yd.clone()),
        ]
    }
}

pub const COACTION_OF_ACTION: &str = "ρ(h·m) = h21·m0 ⊗ (β(h22)m1)α(S⁻¹(h1))";
pub const TWISTED_YD: &str = "h1·m0 ⊗ β(h2)m1 = (h2·m)0 ⊗ (h2·m)1α(h1)";

pub(crate) fn coaction_of_action_witness<T: Scalar>(e: &YdqExpr<T>) -> Option<Witness> {
    let h = e.ambient();
    let (n, k) = (h.dim(), e.arity());
    let alpha_s_inv = match e.component.alpha().matrix().compose(h.antipode_inv()) {
        Ok(m) => m,
        Err(err) => return Some(Witness::new(vec![], "", "").with_note(err.to_string())),
    };
    let lhs = e.action.clone().then(&e.coaction);
    // (h1, h21, h22, S.., m1) → (h21, S.., β(h22), m1, αS⁻¹(h1))
    let mut order = vec![1];
    order.extend(3..3 + k);
    order.extend([2, 3 + k, 0]);
    let rhs = Chain::new()
        .split(0, h.comult(), [n, n])
        .split(1, h.comult(), [n, n])
        .then(&e.coaction.shifted(3))
        .map(0, &alpha_s_inv)
        .map(2, e.component.beta().matrix())
        .permute(&order)
        .then(&e.action)
        .merge(k, h.mult())
        .merge(k, h.mult());
    find_counterexample(&e.action_dims(), &lhs, &rhs)
}

/// `h1·m0 ⊗ β(h2)m1 = (h2·m)0 ⊗ (h2·m)1α(h1)` with the given twists.
pub(crate) fn yd_witness<T: Scalar>(e: &YdqExpr<T>, alpha: &LinearMap<T>, beta: &LinearMap<T>) -> Option<Witness> {
    let h = e.ambient();
    let (n, k) = (h.dim(), e.arity());
    let mut order = vec![0];
    order.extend(2..2 + k);
    order.extend([1, 2 + k]);
    let lhs = Chain::new()
        .split(0, h.comult(), [n, n])
        .then(&e.coaction.shifted(2))
        .map(1, beta)
        .permute(&order)
        .then(&e.action)
        .merge(k, h.mult());
    let mut order = (1..=k + 1).collect::<Vec<_>>();
    order.push(0);
    let rhs = Chain::new()
        .split(0, h.comult(), [n, n])
        .then(&e.action.shifted(1))
        .then(&e.coaction.shifted(1))
        .map(0, alpha)
        .permute(&order)
        .merge(k, h.mult());
    find_counterexample(&e.action_dims(), &lhs, &rhs)
}

pub fn compat<T: Scalar>(e: &YdqExpr<T>) -> CompatReport {
    CompatReport {
        coaction_of_action: coaction_of_action_witness(e),
        twisted_yd: yd_witness(e, e.component.alpha().matrix(), e.component.beta().matrix()),
    }
}

pub const PLAIN_YD: &str = "h1·m0 ⊗ h2m1 = (h2·m)0 ⊗ (h2·m)1h1";
pub const QUASI_LEFT: &str = "m0 ⊗ m1(hg) = m0 ⊗ (m1h)g";
pub const QUASI_MIDDLE: &str = "m0 ⊗ h(m1g) = m0 ⊗ (hm1)g";

/// The untwisted compatibility and the two quasi-comodule conditions that
/// the classical definition adds over a non-associative ambient.
pub fn plain_entries<T: Scalar>(e: &YdqExpr<T>) -> Vec<Entry> {
    let h = e.ambient();
    let (n, k) = (h.dim(), e.arity());
    let id = LinearMap::identity(n);
    let mut dims = e.slots.clone();
    dims.extend([n, n]);
    let legs = e.coaction.clone();
    let swapped = legs.clone().permute_at(k, &[1, 0]);
    vec![
        Entry::timed(PLAIN_YD, || yd_witness(e, &id, &id)),
        entry(
            QUASI_LEFT,
            &dims,
            legs.clone().merge(k + 1, h.mult()).merge(k, h.mult()),
            legs.merge(k, h.mult()).merge(k, h.mult()),
        ),
        entry(
            QUASI_MIDDLE,
            &dims,
            swapped.clone().merge(k + 1, h.mult()).merge(k, h.mult()),
            swapped.merge(k, h.mult()).merge(k, h.mult()),
        ),
    ]
}
