use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::braiding::{
    braiding_inverse_entries, braiding_morphism_entries, hexagon_entries, phi_braiding_witness, standard_twist,
};
use super::expr::{comodule_entries, compat, plain_entries, quasimodule_entries, YdqExpr, PLAIN_YD};
use super::group::{g_inv, g_mul, same_ambient, GElement};
use super::module::YdqModule;
use super::morphism::{morphism_space, naturality_witness, random_invertible, sample_morphism, transport, YdqMorphism};
use crate::error::Error;
use crate::hopfq::HopfQuasigroup;
use crate::report::{Entry, Report, Witness};
use crate::scalar::Scalar;

/// One family of checks in the master suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Unit, inverse and associativity of `∗` on the generators.
    Group,
    /// The base field behaves as a unit object.
    Unit,
    /// Quasimodule, comodule and twisted compatibility of each module.
    Compat,
    /// The untwisted quasi-comodule conditions; off unless requested.
    Strict,
    TensorGrading,
    TensorCompat,
    TensorAssociativity,
    ConjugationCompat,
    ConjugationFunctor,
    ConjugationTensor,
    BraidingInverse,
    BraidingMorphism,
    Hexagons,
    Naturality,
    Phi,
}

impl Suite {
    pub const ALL: [Suite; 15] = [
        Suite::Group,
        Suite::Unit,
        Suite::Compat,
        Suite::Strict,
        Suite::TensorGrading,
        Suite::TensorCompat,
        Suite::TensorAssociativity,
        Suite::ConjugationCompat,
        Suite::ConjugationFunctor,
        Suite::ConjugationTensor,
        Suite::BraidingInverse,
        Suite::BraidingMorphism,
        Suite::Hexagons,
        Suite::Naturality,
        Suite::Phi,
    ];

    /// Everything except [`Suite::Strict`].
    pub fn defaults() -> BTreeSet<Suite> {
        Suite::ALL.into_iter().filter(|s| *s != Suite::Strict).collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Group => "group",
            Suite::Unit => "unit",
            Suite::Compat => "compat",
            Suite::Strict => "strict",
            Suite::TensorGrading => "tensor-grading",
            Suite::TensorCompat => "tensor-compat",
            Suite::TensorAssociativity => "tensor-associativity",
            Suite::ConjugationCompat => "conjugation-compat",
            Suite::ConjugationFunctor => "conjugation-functor",
            Suite::ConjugationTensor => "conjugation-tensor",
            Suite::BraidingInverse => "braiding-inverse",
            Suite::BraidingMorphism => "braiding-morphism",
            Suite::Hexagons => "hexagons",
            Suite::Naturality => "naturality",
            Suite::Phi => "phi",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Format(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone)]
pub struct TCategoryOptions {
    pub suites: BTreeSet<Suite>,
    /// Seeds the random isomorphisms and morphism samples.
    pub seed: u64,
    pub naturality_samples: usize,
}

impl Default for TCategoryOptions {
    fn default() -> Self {
        TCategoryOptions {
            suites: Suite::defaults(),
            seed: 0,
            naturality_samples: 5,
        }
    }
}

fn prefixed(suite: Suite, label: &str, entries: Vec<Entry>) -> Vec<Entry> {
    entries
        .into_iter()
        .map(|e| {
            let name = format!("{suite}[{label}] {}", e.name);
            e.renamed(name)
        })
        .collect()
}

fn note(w: Witness, what: String) -> Witness {
    let text = match &w.note {
        Some(n) => format!("{what}; {n}"),
        None => what,
    };
    w.with_note(text)
}

/// First failing entry across all generators, reported under one name.
fn over_gens<T: Scalar>(
    name: String,
    gens: &[GElement<T>],
    check: impl Fn(&GElement<T>) -> Vec<Entry> + Sync,
) -> Entry {
    Entry::timed(name, || {
        gens.par_iter().enumerate().find_map_first(|(i, x)| {
            check(x).into_iter().find(|e| !e.passed).map(|e| {
                let w = e.witness.unwrap_or_else(|| Witness::new(vec![], "", ""));
                note(w, format!("x = g{i}: {}", e.name))
            })
        })
    })
}

fn structure_entry<T: Scalar>(
    name: &'static str,
    lhs: crate::Result<YdqExpr<T>>,
    rhs: crate::Result<YdqExpr<T>>,
) -> Entry {
    match (lhs, rhs) {
        (Ok(a), Ok(b)) => Entry::from_witness(name, a.structure_difference(&b)),
        (Err(e), _) | (_, Err(e)) => Entry::fail(name, Witness::new(vec![], "", "").with_note(e.to_string())),
    }
}

fn module_entries<T: Scalar>(e: &YdqExpr<T>) -> Vec<Entry> {
    let mut out = quasimodule_entries(e);
    out.extend(comodule_entries(e));
    out.extend(compat(e).entries());
    out
}

fn group_entries<T: Scalar>(gens: &[GElement<T>]) -> Vec<Entry> {
    let g = gens.len();
    let Some(first) = gens.first() else {
        return vec![];
    };
    let e = GElement::identity(Arc::clone(first.ambient()));
    let unit = Entry::timed("(id,id) is a two-sided unit", || {
        gens.iter().enumerate().find_map(|(i, x)| {
            let ok = g_mul(&e, x).map(|y| &y == x).unwrap_or(false) && g_mul(x, &e).map(|y| &y == x).unwrap_or(false);
            (!ok).then(|| Witness::new(vec![i], "e∗x, x∗e", "x"))
        })
    });
    let inverse = Entry::timed("x∗x⁻¹ = x⁻¹∗x = (id,id)", || {
        gens.par_iter().enumerate().find_map_first(|(i, x)| {
            let xi = g_inv(x);
            let ok = g_mul(x, &xi).map(|y| y.is_identity()).unwrap_or(false)
                && g_mul(&xi, x).map(|y| y.is_identity()).unwrap_or(false);
            (!ok).then(|| Witness::new(vec![i], "x∗x⁻¹", "(id,id)"))
        })
    });
    let products: Vec<Vec<Option<GElement<T>>>> = gens
        .par_iter()
        .map(|x| gens.iter().map(|y| g_mul(x, y).ok()).collect())
        .collect();
    let assoc = Entry::timed("(x∗y)∗z = x∗(y∗z)", || {
        (0..g * g * g).into_par_iter().find_map_first(|t| {
            let (i, j, k) = (t / (g * g), (t / g) % g, t % g);
            let lhs = products[i][j].as_ref().and_then(|xy| g_mul(xy, &gens[k]).ok());
            let rhs = products[j][k].as_ref().and_then(|yz| g_mul(&gens[i], yz).ok());
            match (lhs, rhs) {
                (Some(a), Some(b)) if a == b => None,
                _ => Some(Witness::new(vec![i, j, k], "(x∗y)∗z", "x∗(y∗z)")),
            }
        })
    });
    vec![unit, inverse, assoc]
}

fn unit_entries<T: Scalar>(h: &Arc<HopfQuasigroup<T>>, label: &str, m: &YdqModule<T>) -> Vec<Entry> {
    let one = YdqModule::trivial(Arc::clone(h));
    let same = |name: &'static str, got: crate::Result<YdqModule<T>>| match got {
        Ok(x) if &x == m => Entry::pass(name),
        Ok(x) => {
            let w = match x.action().first_difference(m.action()) {
                Some((i, j)) => Witness::new(vec![i, j], x.action().get(i, j).to_string(), m.action().get(i, j).to_string())
                    .with_note("action entries differ"),
                None => Witness::new(vec![], "", "").with_note("coaction or label differs"),
            };
            Entry::fail(name, w)
        }
        Err(e) => Entry::fail(name, Witness::new(vec![], "", "").with_note(e.to_string())),
    };
    let identity_map = |name: &'static str, c: crate::Result<crate::exactlin::LinearMap<T>>| match c {
        Ok(c) if c.is_identity() => Entry::pass(name),
        Ok(_) => Entry::fail(name, Witness::new(vec![], "c", "id")),
        Err(e) => Entry::fail(name, Witness::new(vec![], "", "").with_note(e.to_string())),
    };
    prefixed(
        Suite::Unit,
        label,
        vec![
            same("X ⊗ I = X", super::braiding::tensor_ydq(m, &one)),
            same("I ⊗ X = X", super::braiding::tensor_ydq(&one, m)),
            identity_map("c(X, I) = id", super::braiding::braiding(m, &one)),
            identity_map("c(I, X) = id", super::braiding::braiding(&one, m)),
        ],
    )
}

fn naturality_entries<T: Scalar>(modules: &[(String, YdqModule<T>)], opts: &TCategoryOptions) -> Vec<Entry> {
    let k = modules.len();
    if k == 0 {
        return vec![];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::new();
    for s in 0..opts.naturality_samples {
        let (xi, yi) = (s % k, (s + 1 + s / k) % k);
        let (xn, x) = (&modules[xi].0, &modules[xi].1);
        let (yn, y) = (&modules[yi].0, &modules[yi].1);
        let name = format!("{}[{xn},{yn}] sample {s}", Suite::Naturality);
        // Hom(M, P·M) = P∘End(M); solving for End(M) keeps the entries small
        let mut solve = |m: &YdqModule<T>| -> crate::Result<YdqMorphism<T>> {
            let p = random_invertible(m.mdim(), &mut rng);
            let target = transport(m, &p)?;
            let basis = morphism_space(m, m)?;
            let e = sample_morphism(&basis, &mut rng)
                .ok_or_else(|| Error::Precondition("no nonzero morphism found".into()))?;
            YdqMorphism::new(m.clone(), target, p.compose(&e)?)
        };
        let pair = solve(x).and_then(|f| Ok((f, solve(y)?)));
        out.push(match pair {
            Ok((f, g)) => Entry::timed(name, || naturality_witness(&f, &g)),
            Err(e) => Entry::fail(name, Witness::new(vec![], "", "").with_note(e.to_string())),
        });
    }
    out
}

/// Runs every selected suite over all modules, pairs and triples of
/// `modules` and over the generators `gens`, in a fixed order.
pub fn verify_t_category<T: Scalar>(
    h: &Arc<HopfQuasigroup<T>>,
    modules: &[(String, YdqModule<T>)],
    gens: &[GElement<T>],
    opts: &TCategoryOptions,
) -> Report {
    let mut report = Report::new("t-category");
    report.fact("ambient-dim", h.dim());
    report.fact("modules", modules.len());
    report.fact("generators", gens.len());
    report.fact(
        "suites",
        opts.suites.iter().map(|s| s.name()).collect::<Vec<_>>().join(","),
    );
    let foreign_module = modules.iter().find(|(_, m)| !same_ambient(m.ambient(), h));
    let foreign_gen = gens.iter().position(|x| !same_ambient(x.ambient(), h));
    if foreign_module.is_some() || foreign_gen.is_some() {
        report.push(Entry::fail(
            "ambient",
            Witness::new(vec![], "", "").with_note(Error::AmbientMismatch.to_string()),
        ));
        return report;
    }
    let has = |s: Suite| opts.suites.contains(&s);
    let exprs: Vec<(String, YdqExpr<T>)> = modules.iter().map(|(n, m)| (n.clone(), m.expr())).collect();
    let k = exprs.len();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    let triples: Vec<(usize, usize, usize)> = (0..k)
        .flat_map(|i| (0..k).flat_map(move |j| (0..k).map(move |l| (i, j, l))))
        .collect();
    let pair_label = |i: usize, j: usize| format!("{},{}", exprs[i].0, exprs[j].0);
    let per_pair = |suite: Suite, f: &(dyn Fn(&YdqExpr<T>, &YdqExpr<T>) -> Vec<Entry> + Sync)| -> Vec<Entry> {
        pairs
            .par_iter()
            .map(|&(i, j)| prefixed(suite, &pair_label(i, j), f(&exprs[i].1, &exprs[j].1)))
            .collect::<Vec<_>>()
            .concat()
    };
    let per_triple =
        |suite: Suite, f: &(dyn Fn(&YdqExpr<T>, &YdqExpr<T>, &YdqExpr<T>) -> Vec<Entry> + Sync)| -> Vec<Entry> {
            triples
                .par_iter()
                .map(|&(i, j, l)| {
                    let label = format!("{},{},{}", exprs[i].0, exprs[j].0, exprs[l].0);
                    prefixed(suite, &label, f(&exprs[i].1, &exprs[j].1, &exprs[l].1))
                })
                .collect::<Vec<_>>()
                .concat()
        };
    let per_module = |suite: Suite, f: &(dyn Fn(&YdqExpr<T>) -> Vec<Entry> + Sync)| -> Vec<Entry> {
        exprs
            .par_iter()
            .map(|(name, e)| prefixed(suite, name, f(e)))
            .collect::<Vec<_>>()
            .concat()
    };

    let mut entries: Vec<Entry> = Vec::new();
    if has(Suite::Group) {
        entries.extend(prefixed(Suite::Group, "gens", group_entries(gens)));
    }
    if has(Suite::Unit) {
        let one = YdqModule::trivial(Arc::clone(h));
        entries.extend(prefixed(Suite::Unit, "I", module_entries(&one.expr())));
        for (name, m) in modules {
            entries.extend(unit_entries(h, name, m));
        }
    }
    if has(Suite::Compat) {
        entries.extend(per_module(Suite::Compat, &module_entries));
    }
    if has(Suite::Strict) {
        // the untwisted compatibility only makes sense in the unit component
        entries.extend(per_module(Suite::Strict, &|e| {
            let untwisted = e.component().is_identity();
            plain_entries(e)
                .into_iter()
                .filter(|x| untwisted || x.name != PLAIN_YD)
                .collect()
        }));
    }
    if has(Suite::TensorGrading) {
        entries.extend(per_pair(Suite::TensorGrading, &|x, y| {
            let got = x.tensor(y).map(|t| t.component().clone());
            let want = g_mul(x.component(), y.component());
            let ok = matches!((&got, &want), (Ok(a), Ok(b)) if a == b);
            vec![if ok {
                Entry::pass("comp(X⊗Y) = comp(X)∗comp(Y)")
            } else {
                Entry::fail("comp(X⊗Y) = comp(X)∗comp(Y)", Witness::new(vec![], "comp(X⊗Y)", "comp(X)∗comp(Y)"))
            }]
        }));
    }
    if has(Suite::TensorCompat) {
        entries.extend(per_pair(Suite::TensorCompat, &|x, y| match x.tensor(y) {
            Ok(t) => module_entries(&t),
            Err(e) => vec![Entry::fail("X⊗Y", Witness::new(vec![], "", "").with_note(e.to_string()))],
        }));
    }
    if has(Suite::TensorAssociativity) {
        entries.extend(per_triple(Suite::TensorAssociativity, &|x, y, z| {
            vec![structure_entry(
                "(X⊗Y)⊗Z = X⊗(Y⊗Z)",
                x.tensor(y).and_then(|xy| xy.tensor(z)),
                y.tensor(z).and_then(|yz| x.tensor(&yz)),
            )]
        }));
    }
    if has(Suite::ConjugationCompat) {
        entries.extend(per_module(Suite::ConjugationCompat, &|e| {
            vec![over_gens("conj(X, x) is a module".into(), gens, |x| match e.conjugate(x) {
                Ok(c) => module_entries(&c),
                Err(err) => vec![Entry::fail("conj(X, x)", Witness::new(vec![], "", "").with_note(err.to_string()))],
            })]
        }));
    }
    if has(Suite::ConjugationFunctor) {
        entries.extend(per_module(Suite::ConjugationFunctor, &|e| {
            let unit = structure_entry("conj(X, e) = X", e.conjugate(&GElement::identity(Arc::clone(h))), Ok(e.clone()));
            let composite = over_gens("conj(conj(X, y), x) = conj(X, x∗y)".into(), gens, |x| {
                gens.iter()
                    .enumerate()
                    .map(|(j, y)| {
                        let lhs = e.conjugate(y).and_then(|cy| cy.conjugate(x));
                        let rhs = g_mul(x, y).and_then(|xy| e.conjugate(&xy));
                        let entry = structure_entry("conj(conj(X, y), x) = conj(X, x∗y)", lhs, rhs);
                        let name = format!("y = g{j}");
                        entry.renamed(name)
                    })
                    .filter(|e| !e.passed)
                    .take(1)
                    .collect()
            });
            vec![unit, composite]
        }));
    }
    if has(Suite::ConjugationTensor) {
        entries.extend(per_pair(Suite::ConjugationTensor, &|x, y| {
            vec![over_gens("conj(X⊗Y, z) = conj(X, z) ⊗ conj(Y, z)".into(), gens, |z| {
                vec![structure_entry(
                    "conj(X⊗Y, z) = conj(X, z) ⊗ conj(Y, z)",
                    x.tensor(y).and_then(|xy| xy.conjugate(z)),
                    x.conjugate(z).and_then(|cx| cx.tensor(&y.conjugate(z)?)),
                )]
            })]
        }));
    }
    if has(Suite::BraidingInverse) {
        entries.extend(per_pair(Suite::BraidingInverse, &braiding_inverse_entries));
    }
    if has(Suite::BraidingMorphism) {
        entries.extend(per_pair(Suite::BraidingMorphism, &|x, y| {
            braiding_morphism_entries(x, y, standard_twist)
        }));
    }
    if has(Suite::Hexagons) {
        entries.extend(per_triple(Suite::Hexagons, &|x, y, z| hexagon_entries(x, y, z, standard_twist)));
    }
    if has(Suite::Naturality) {
        entries.extend(naturality_entries(modules, opts));
    }
    if has(Suite::Phi) {
        entries.extend(per_pair(Suite::Phi, &|x, y| {
            vec![over_gens("c(conj(X, z), conj(Y, z)) = c(X, Y)".into(), gens, |z| {
                vec![Entry::from_witness("c(conj(X, z), conj(Y, z)) = c(X, Y)", phi_braiding_witness(x, y, z))]
            })]
        }));
    }
    for e in entries {
        report.push(e);
    }
    report
}
