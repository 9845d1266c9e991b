use std::collections::BTreeMap;

use rand::Rng;

use super::braiding::standard_twist;
use super::module::YdqModule;
use crate::error::{Error, Result};
use crate::exactlin::{find_counterexample, Chain, Echelon, LinearMap};
use crate::report::{Entry, Report, Witness};
use crate::scalar::Scalar;

/// An `H`-linear, `H`-colinear map between two modules of one component.
#[derive(Clone, Debug)]
pub struct YdqMorphism<T> {
    source: YdqModule<T>,
    target: YdqModule<T>,
    map: LinearMap<T>,
}

impl<T: Scalar> YdqMorphism<T> {
    pub fn new(source: YdqModule<T>, target: YdqModule<T>, map: LinearMap<T>) -> Result<Self> {
        let report = check_morphism(&source, &target, &map);
        if let Some(failed) = report.failures().next() {
            return Err(Error::AxiomFailed {
                identity: format!("morphism: {}", failed.name),
                witness: failed.witness.clone(),
            });
        }
        Ok(YdqMorphism { source, target, map })
    }

    pub fn identity(m: &YdqModule<T>) -> Self {
        YdqMorphism {
            source: m.clone(),
            target: m.clone(),
            map: LinearMap::identity(m.mdim()),
        }
    }

    pub fn scaled(&self, c: &T) -> Self {
        YdqMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            map: self.map.scale(c),
        }
    }

    pub fn source(&self) -> &YdqModule<T> {
        &self.source
    }

    pub fn target(&self) -> &YdqModule<T> {
        &self.target
    }

    pub fn map(&self) -> &LinearMap<T> {
        &self.map
    }
}

/// Same component, matching shape, `f(h·m) = h·f(m)` and
/// `ρ(f(m)) = (f ⊗ id)ρ(m)`.
pub fn check_morphism<T: Scalar>(source: &YdqModule<T>, target: &YdqModule<T>, f: &LinearMap<T>) -> Report {
    let mut r = Report::new("morphism");
    if f.shape() != (target.mdim(), source.mdim()) {
        r.push(Entry::fail(
            "shape",
            Witness::new(vec![], format!("{:?}", f.shape()), format!("{:?}", (target.mdim(), source.mdim()))),
        ));
        return r;
    }
    if source.component() != target.component() {
        r.push(Entry::fail(
            "same component",
            Witness::new(vec![], "", "").with_note("source and target carry different labels"),
        ));
        return r;
    }
    let n = source.ambient().dim();
    let c = || Chain::<T>::new();
    r.push(Entry::timed("f(h·m) = h·f(m)", || {
        find_counterexample(
            &[n, source.mdim()],
            &c().merge(0, source.action()).map(0, f),
            &c().map(1, f).merge(0, target.action()),
        )
    }));
    r.push(Entry::timed("ρ(f(m)) = (f ⊗ id)ρ(m)", || {
        find_counterexample(
            &[source.mdim()],
            &c().map(0, f).split(0, target.coaction(), [target.mdim(), n]),
            &c().split(0, source.coaction(), [source.mdim(), n]).map(0, f),
        )
    }));
    r
}

/// A basis of all morphisms `source → target`, by exact elimination on the
/// linear conditions for the entries of `f`.
pub fn morphism_space<T: Scalar>(source: &YdqModule<T>, target: &YdqModule<T>) -> Result<Vec<LinearMap<T>>> {
    if source.component() != target.component() {
        return Err(Error::Precondition("morphisms must stay inside one component".into()));
    }
    let n = source.ambient().dim();
    let (m, mp) = (source.mdim(), target.mdim());
    // entry (i, j) of f is unknown i*m + j
    let var = |i: usize, j: usize| i * m + j;
    let mut ech = Echelon::new(mp * m);
    let mut push = |row: BTreeMap<usize, T>| {
        let row: BTreeMap<usize, T> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        if !row.is_empty() {
            ech.push(row);
        }
    };
    let add = |row: &mut BTreeMap<usize, T>, k: usize, v: &T, negate: bool| {
        let e = row.entry(k).or_insert_with(T::zero);
        if negate {
            *e = e.sub_ref(v);
        } else {
            *e = e.add_ref(v);
        }
    };
    for h in 0..n {
        for k in 0..m {
            // f(h·e_k) - h·f(e_k), component r
            let image = source.action().column(h * m + k);
            for r in 0..mp {
                let mut row = BTreeMap::new();
                for (j, v) in image.iter().enumerate() {
                    if !v.is_zero() {
                        add(&mut row, var(r, j), v, false);
                    }
                }
                for i in 0..mp {
                    let a = target.action().get(r, h * mp + i);
                    if !a.is_zero() {
                        add(&mut row, var(i, k), a, true);
                    }
                }
                push(row);
            }
        }
    }
    for k in 0..m {
        // ρ'(f(e_k)) - (f ⊗ id)ρ(e_k), component (r, a)
        for r in 0..mp {
            for a in 0..n {
                let mut row = BTreeMap::new();
                for i in 0..mp {
                    let c = target.coaction().get(r * n + a, i);
                    if !c.is_zero() {
                        add(&mut row, var(i, k), c, false);
                    }
                }
                for j in 0..m {
                    let c = source.coaction().get(j * n + a, k);
                    if !c.is_zero() {
                        add(&mut row, var(r, j), c, true);
                    }
                }
                push(row);
            }
        }
    }
    ech.nullspace()
        .into_iter()
        .map(|v| LinearMap::from_row_major(mp, m, v))
        .collect()
}

/// A random integer combination of `basis` with coefficients in
/// `-3..=3`, redrawn until nonzero.
pub fn sample_morphism<T: Scalar, R: Rng>(basis: &[LinearMap<T>], rng: &mut R) -> Option<LinearMap<T>> {
    let first = basis.first()?;
    loop {
        let mut acc = LinearMap::zero(first.cod_dim(), first.dom_dim());
        for b in basis {
            let c = T::from_int(rng.gen_range(-3..=3));
            if !c.is_zero() {
                acc = acc.add(&b.scale(&c)).ok()?;
            }
        }
        if acc.entries().iter().any(|v| !v.is_zero()) {
            return Some(acc);
        }
    }
}

/// A random invertible integer matrix: a product of unit lower and unit
/// upper triangular factors with small entries. Off-diagonal entries are
/// nonzero with probability about `2 / dim`, so transported structures
/// stay sparse.
pub fn random_invertible<T: Scalar, R: Rng>(dim: usize, rng: &mut R) -> LinearMap<T> {
    let density = (2.0 / dim.max(1) as f64).min(1.0);
    let mut draw = |i: usize, j: usize, below: bool| {
        if i == j {
            T::one()
        } else if (i > j) == below && rng.gen_bool(density) {
            let v = rng.gen_range(1..=2);
            T::from_int(if rng.gen_bool(0.5) { v } else { -v })
        } else {
            T::zero()
        }
    };
    let lower = LinearMap::from_fn(dim, dim, |i, j| draw(i, j, true));
    let upper = LinearMap::from_fn(dim, dim, |i, j| draw(i, j, false));
    lower.compose(&upper).expect("square factors of one size")
}

/// The structure of `m` moved along the isomorphism `p`, so that `p`
/// itself becomes a morphism `m → transport(m, p)`.
pub fn transport<T: Scalar>(m: &YdqModule<T>, p: &LinearMap<T>) -> Result<YdqModule<T>> {
    let p_inv = p.invert()?;
    let n = m.ambient().dim();
    let id_h = LinearMap::identity(n);
    let action = p.compose(m.action())?.compose(&id_h.tensor(&p_inv))?;
    let coaction = p.tensor(&id_h).compose(m.coaction())?.compose(&p_inv)?;
    YdqModule::from_parts_unchecked(m.component().clone(), action, coaction)
}

/// `(g ⊗ f)∘c(M, N) = c(M', N')∘(f ⊗ g)` for `f: M → M'`, `g: N → N'`.
pub fn naturality_witness<T: Scalar>(f: &YdqMorphism<T>, g: &YdqMorphism<T>) -> Option<Witness> {
    let twist = standard_twist(f.source().component());
    let before = f.source().expr().braiding_with(&g.source().expr(), &twist);
    let after = f.target().expr().braiding_with(&g.target().expr(), &twist);
    find_counterexample(
        &[f.source().mdim(), g.source().mdim()],
        &before.map(0, g.map()).map(1, f.map()),
        &Chain::new().map(0, f.map()).map(1, g.map()).then(&after),
    )
}

pub fn verify_naturality<T: Scalar>(f: &YdqMorphism<T>, g: &YdqMorphism<T>) -> bool {
    naturality_witness(f, g).is_none()
}
