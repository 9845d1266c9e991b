use super::expr::YdqExpr;
use super::group::GElement;
use super::module::YdqModule;
use crate::error::Result;
use crate::exactlin::{find_counterexample, Chain, LinearMap};
use crate::report::{Entry, Report, Witness};
use crate::scalar::Scalar;

/// Chooses the map applied to `n1` inside `c(m ⊗ n) = n0 ⊗ τ(n1)·m`
/// from the component of the left factor.
pub type Twist<T> = fn(&GElement<T>) -> LinearMap<T>;

/// `τ = β⁻¹`, the braiding proper.
pub fn standard_twist<T: Scalar>(x: &GElement<T>) -> LinearMap<T> {
    x.beta().inverse_matrix().clone()
}

/// `M ⊗ N` in component `(αγ, δγ⁻¹βγ)`.
pub fn tensor_ydq<T: Scalar>(m: &YdqModule<T>, n: &YdqModule<T>) -> Result<YdqModule<T>> {
    m.expr().tensor(&n.expr())?.materialize()
}

/// `ˣN`: the space of `N` with action and coaction twisted by `x`.
pub fn conjugate<T: Scalar>(n: &YdqModule<T>, x: &GElement<T>) -> Result<YdqModule<T>> {
    n.expr().conjugate(x)?.materialize()
}

/// `c(m ⊗ n) = n0 ⊗ β⁻¹(n1)·m` as a matrix `M ⊗ N → ᴹN ⊗ M`.
pub fn braiding<T: Scalar>(m: &YdqModule<T>, n: &YdqModule<T>) -> Result<LinearMap<T>> {
    m.expr().braiding(&n.expr())?.to_map(&[m.mdim(), n.mdim()])
}

/// `c⁻¹(n ⊗ m) = β⁻¹(S(n1))·m ⊗ n0` as a matrix `ᴹN ⊗ M → M ⊗ N`.
pub fn braiding_inverse<T: Scalar>(m: &YdqModule<T>, n: &YdqModule<T>) -> Result<LinearMap<T>> {
    m.expr().braiding_inverse(&n.expr())?.to_map(&[n.mdim(), m.mdim()])
}

fn concat(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    v
}

fn failed_construction(name: &str, err: crate::Error) -> Entry {
    Entry::fail(name, Witness::new(vec![], "", "").with_note(err.to_string()))
}

pub const MODULE_MAP: &str = "c(h·(m ⊗ n)) = h·c(m ⊗ n)";
pub const COMODULE_MAP: &str = "ρ(c(m ⊗ n)) = (c ⊗ id)ρ(m ⊗ n)";

/// `H`-linearity and `H`-colinearity of `c: X ⊗ Y → ˣY ⊗ X`, with the
/// target structure taken to be `tensor(conjugate(Y, comp X), X)`.
pub fn braiding_morphism_entries<T: Scalar>(x: &YdqExpr<T>, y: &YdqExpr<T>, twist: Twist<T>) -> Vec<Entry> {
    let target = match y.conjugate(x.component()).and_then(|cy| cy.tensor(x)) {
        Ok(t) => t,
        Err(e) => return vec![failed_construction(MODULE_MAP, e)],
    };
    let source = match x.tensor(y) {
        Ok(s) => s,
        Err(e) => return vec![failed_construction(MODULE_MAP, e)],
    };
    let c = x.braiding_with(y, &twist(x.component()));
    let dims = source.action_dims();
    let slots = source.slots().to_vec();
    vec![
        Entry::timed(MODULE_MAP, || {
            find_counterexample(
                &dims,
                &source.action().clone().then(&c),
                &c.shifted(1).then(target.action()),
            )
        }),
        Entry::timed(COMODULE_MAP, || {
            find_counterexample(
                &slots,
                &c.clone().then(target.coaction()),
                &source.coaction().clone().then(&c),
            )
        }),
    ]
}

/// `c∘c⁻¹ = id` on `ˣY ⊗ X` and `c⁻¹∘c = id` on `X ⊗ Y`.
pub fn braiding_inverse_entries<T: Scalar>(x: &YdqExpr<T>, y: &YdqExpr<T>) -> Vec<Entry> {
    let (c, c_inv) = match x.braiding(y).and_then(|c| Ok((c, x.braiding_inverse(y)?))) {
        Ok(p) => p,
        Err(e) => return vec![failed_construction("c∘c⁻¹ = id", e)],
    };
    let forward = concat(x.slots(), y.slots());
    let backward = concat(y.slots(), x.slots());
    vec![
        Entry::timed("c∘c⁻¹ = id", || {
            find_counterexample(&backward, &c_inv.clone().then(&c), &Chain::new())
        }),
        Entry::timed("c⁻¹∘c = id", || find_counterexample(&forward, &c.clone().then(&c_inv), &Chain::new())),
    ]
}

pub const HEXAGON_LEFT: &str = "c(M⊗N,P) = (c(M,ᴺP) ⊗ id)∘(id ⊗ c(N,P))";
pub const HEXAGON_LEFT_TARGET: &str = "ᴹ⊗ᴺP = ᴹ(ᴺP)";
pub const HEXAGON_RIGHT: &str = "c(M,N⊗P) = (id ⊗ c(M,P))∘(c(M,N) ⊗ id)";
pub const HEXAGON_RIGHT_TARGET: &str = "ᴹ(N⊗P) = ᴹN ⊗ ᴹP";

/// Both hexagon identities on every basis vector of `M ⊗ N ⊗ P`, plus the
/// agreement of the conjugated objects they pass through.
pub fn hexagon_entries<T: Scalar>(m: &YdqExpr<T>, n: &YdqExpr<T>, p: &YdqExpr<T>, twist: Twist<T>) -> Vec<Entry> {
    let mut out = Vec::with_capacity(4);
    let dims = concat(&concat(m.slots(), n.slots()), p.slots());
    let braid = |a: &YdqExpr<T>, b: &YdqExpr<T>| a.braiding_with(b, &twist(a.component()));

    let left = (|| -> Result<_> {
        let mn = m.tensor(n)?;
        let np = p.conjugate(n.component())?;
        let lhs = braid(&mn, p);
        let rhs = braid(n, p).shifted(m.arity()).then(&braid(m, &np));
        let target_a = p.conjugate(mn.component())?;
        let target_b = np.conjugate(m.component())?;
        Ok((lhs, rhs, target_a, target_b))
    })();
    match left {
        Ok((lhs, rhs, a, b)) => {
            out.push(Entry::timed(HEXAGON_LEFT, || find_counterexample(&dims, &lhs, &rhs)));
            out.push(Entry::timed(HEXAGON_LEFT_TARGET, || a.structure_difference(&b)));
        }
        Err(e) => out.push(failed_construction(HEXAGON_LEFT, e)),
    }

    let right = (|| -> Result<_> {
        let np = n.tensor(p)?;
        let lhs = braid(m, &np);
        let rhs = braid(m, n).then(&braid(m, p).shifted(n.arity()));
        let target_a = np.conjugate(m.component())?;
        let target_b = n.conjugate(m.component())?.tensor(&p.conjugate(m.component())?)?;
        Ok((lhs, rhs, target_a, target_b))
    })();
    match right {
        Ok((lhs, rhs, a, b)) => {
            out.push(Entry::timed(HEXAGON_RIGHT, || find_counterexample(&dims, &lhs, &rhs)));
            out.push(Entry::timed(HEXAGON_RIGHT_TARGET, || a.structure_difference(&b)));
        }
        Err(e) => out.push(failed_construction(HEXAGON_RIGHT, e)),
    }
    out
}

/// `c(ˣM, ˣN) = c(M, N)` on the shared underlying space.
pub fn phi_braiding_witness<T: Scalar>(m: &YdqExpr<T>, n: &YdqExpr<T>, x: &GElement<T>) -> Option<Witness> {
    let dims = concat(m.slots(), n.slots());
    let conjugated = m
        .conjugate(x)
        .and_then(|cm| cm.braiding(&n.conjugate(x)?))
        .and_then(|c| Ok((c, m.braiding(n)?)));
    match conjugated {
        Ok((lhs, rhs)) => find_counterexample(&dims, &lhs, &rhs),
        Err(e) => Some(Witness::new(vec![], "", "").with_note(e.to_string())),
    }
}

pub fn verify_braiding_morphism<T: Scalar>(m: &YdqModule<T>, n: &YdqModule<T>) -> Report {
    verify_braiding_morphism_with(m, n, standard_twist)
}

pub fn verify_braiding_morphism_with<T: Scalar>(m: &YdqModule<T>, n: &YdqModule<T>, twist: Twist<T>) -> Report {
    let mut r = Report::new("braiding-morphism");
    for e in braiding_morphism_entries(&m.expr(), &n.expr(), twist) {
        r.push(e);
    }
    r
}

pub fn verify_braiding_inverse<T: Scalar>(m: &YdqModule<T>, n: &YdqModule<T>) -> Report {
    let mut r = Report::new("braiding-inverse");
    for e in braiding_inverse_entries(&m.expr(), &n.expr()) {
        r.push(e);
    }
    r
}

pub fn verify_hexagons<T: Scalar>(m: &YdqModule<T>, n: &YdqModule<T>, p: &YdqModule<T>) -> Report {
    verify_hexagons_with(m, n, p, standard_twist)
}

pub fn verify_hexagons_with<T: Scalar>(
    m: &YdqModule<T>,
    n: &YdqModule<T>,
    p: &YdqModule<T>,
    twist: Twist<T>,
) -> Report {
    let mut r = Report::new("hexagons");
    for e in hexagon_entries(&m.expr(), &n.expr(), &p.expr(), twist) {
        r.push(e);
    }
    r
}

pub fn verify_phi_braiding<T: Scalar>(m: &YdqModule<T>, n: &YdqModule<T>, x: &GElement<T>) -> bool {
    phi_braiding_witness(&m.expr(), &n.expr(), x).is_none()
}
