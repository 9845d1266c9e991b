use crate::error::{Error, Result};
use crate::exactlin::{find_counterexample, Chain, LinearMap};
use crate::loops::Loop;
use crate::report::{Entry, Report, Witness};
use crate::scalar::Scalar;

/// The five structure maps of a (co)quasigroup-type object on `k^n`.
///
/// Shapes: `mult: n x n²`, `unit: n x 1`, `comult: n² x n`, `counit: 1 x n`,
/// `antipode: n x n`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureMaps<T> {
    pub mult: LinearMap<T>,
    pub unit: LinearMap<T>,
    pub comult: LinearMap<T>,
    pub counit: LinearMap<T>,
    pub antipode: LinearMap<T>,
}

impl<T: Scalar> StructureMaps<T> {
    pub fn dim(&self) -> usize {
        self.antipode.cod_dim()
    }

    pub fn validate_shapes(&self) -> Result<usize> {
        let n = self.antipode.cod_dim();
        let expect = [
            ("mult", &self.mult, (n, n * n)),
            ("unit", &self.unit, (n, 1)),
            ("comult", &self.comult, (n * n, n)),
            ("counit", &self.counit, (1, n)),
            ("antipode", &self.antipode, (n, n)),
        ];
        for (name, map, shape) in expect {
            if map.shape() != shape {
                return Err(Error::Format(format!(
                    "{name} has shape {:?}, expected {shape:?} for dimension {n}",
                    map.shape()
                )));
            }
        }
        Ok(n)
    }

    /// Transposes every map: the structure of the dual space in the dual basis.
    pub fn transposed(&self) -> Self {
        StructureMaps {
            mult: self.comult.transpose(),
            unit: self.counit.transpose(),
            comult: self.mult.transpose(),
            counit: self.unit.transpose(),
            antipode: self.antipode.transpose(),
        }
    }
}

/// A finite-dimensional Hopf quasigroup given by structure constants.
///
/// The product may be nonassociative; the coproduct is coassociative; the
/// antipode satisfies the four cancellation identities and is invertible.
#[derive(Debug, Clone, PartialEq)]
pub struct HopfQuasigroup<T> {
    maps: StructureMaps<T>,
    antipode_inv: LinearMap<T>,
}

impl<T: Scalar> HopfQuasigroup<T> {
    /// Builds and fully verifies a Hopf quasigroup.
    pub fn new(maps: StructureMaps<T>) -> Result<Self> {
        let h = Self::from_parts_unchecked(maps)?;
        let report = check_hopf_quasigroup(&h);
        if let Some(failed) = report.failures().next() {
            return Err(Error::AxiomFailed {
                identity: failed.name.clone(),
                witness: failed.witness.clone(),
            });
        }
        Ok(h)
    }

    /// Checks only shapes and invertibility of the antipode. Used for
    /// file input that is reported on rather than rejected, and for
    /// mutation tests.
    pub fn from_parts_unchecked(maps: StructureMaps<T>) -> Result<Self> {
        maps.validate_shapes()?;
        let antipode_inv = maps.antipode.invert().map_err(|_| Error::NotInvertible {
            what: "antipode".into(),
        })?;
        Ok(HopfQuasigroup { maps, antipode_inv })
    }

    pub fn dim(&self) -> usize {
        self.maps.dim()
    }

    pub fn mult(&self) -> &LinearMap<T> {
        &self.maps.mult
    }

    pub fn unit(&self) -> &LinearMap<T> {
        &self.maps.unit
    }

    pub fn comult(&self) -> &LinearMap<T> {
        &self.maps.comult
    }

    pub fn counit(&self) -> &LinearMap<T> {
        &self.maps.counit
    }

    pub fn antipode(&self) -> &LinearMap<T> {
        &self.maps.antipode
    }

    pub fn antipode_inv(&self) -> &LinearMap<T> {
        &self.antipode_inv
    }

    pub fn maps(&self) -> &StructureMaps<T> {
        &self.maps
    }

    pub fn into_maps(self) -> StructureMaps<T> {
        self.maps
    }

    /// Coordinates of the unit element.
    pub fn unit_vector(&self) -> Vec<T> {
        self.maps.unit.column(0)
    }
}

/// Linearises an inverse-property loop: basis = elements, grouplike
/// coproduct, `S(e_s) = e_{s⁻¹}`.
pub fn loop_algebra<T: Scalar>(l: &Loop) -> Result<HopfQuasigroup<T>> {
    let inv = l.inverse_map()?;
    let n = l.size();
    let mult = LinearMap::from_fn(n, n * n, |k, col| {
        if l.mul(col / n, col % n) == k {
            T::one()
        } else {
            T::zero()
        }
    });
    let unit = LinearMap::from_fn(n, 1, |k, _| if k == l.identity() { T::one() } else { T::zero() });
    let comult = LinearMap::from_fn(n * n, n, |row, s| if row == s * n + s { T::one() } else { T::zero() });
    let counit = LinearMap::from_fn(1, n, |_, _| T::one());
    let antipode = LinearMap::permutation(&inv);
    HopfQuasigroup::new(StructureMaps {
        mult,
        unit,
        comult,
        counit,
        antipode,
    })
}

pub(crate) fn identity_entry<T: Scalar>(name: &str, dims: &[usize], lhs: Chain<T>, rhs: Chain<T>) -> Entry {
    Entry::timed(name, || find_counterexample(dims, &lhs, &rhs))
}

/// Unit, counit, and bialgebra-compatibility identities shared by Hopf
/// quasigroups and Hopf coquasigroups.
pub(crate) fn bialgebra_entries<T: Scalar>(m: &StructureMaps<T>) -> Vec<Entry> {
    let n = m.dim();
    let c = || Chain::<T>::new();
    vec![
        identity_entry("1h = h", &[n], c().insert(0, &m.unit).merge(0, &m.mult), c()),
        identity_entry("h1 = h", &[n], c().insert(1, &m.unit).merge(0, &m.mult), c()),
        identity_entry("ε(h1)h2 = h", &[n], c().split(0, &m.comult, [n, n]).contract(0, &m.counit), c()),
        identity_entry("h1ε(h2) = h", &[n], c().split(0, &m.comult, [n, n]).contract(1, &m.counit), c()),
        identity_entry(
            "Δ(hg) = h1g1 ⊗ h2g2",
            &[n, n],
            c().merge(0, &m.mult).split(0, &m.comult, [n, n]),
            c().split(0, &m.comult, [n, n])
                .split(2, &m.comult, [n, n])
                .permute(&[0, 2, 1, 3])
                .merge(0, &m.mult)
                .merge(1, &m.mult),
        ),
        identity_entry(
            "Δ(1) = 1 ⊗ 1",
            &[],
            c().insert(0, &m.unit).split(0, &m.comult, [n, n]),
            c().insert(0, &m.unit).insert(1, &m.unit),
        ),
        identity_entry(
            "ε(hg) = ε(h)ε(g)",
            &[n, n],
            c().merge(0, &m.mult).contract(0, &m.counit),
            c().contract(0, &m.counit).contract(0, &m.counit),
        ),
        identity_entry("ε(1) = 1", &[], c().insert(0, &m.unit).contract(0, &m.counit), c()),
    ]
}

/// The axiom suite: coassociativity, unit and counit laws, multiplicativity
/// of `Δ` and `ε`, and the four antipode identities, each over all basis
/// pairs.
pub fn check_hopf_quasigroup<T: Scalar>(h: &HopfQuasigroup<T>) -> Report {
    let m = h.maps();
    let n = h.dim();
    let (mult, comult, counit, s) = (&m.mult, &m.comult, &m.counit, &m.antipode);
    let c = || Chain::<T>::new();
    let mut report = Report::new("hopf-quasigroup");
    report.fact("dim", n);
    report.push(identity_entry(
        "(h1 ⊗ h2) ⊗ h3 coassociative",
        &[n],
        c().split(0, comult, [n, n]).split(0, comult, [n, n]),
        c().split(0, comult, [n, n]).split(1, comult, [n, n]),
    ));
    for e in bialgebra_entries(m) {
        report.push(e);
    }
    // inputs are h ⊗ g throughout
    let eps_g = c().contract(0, counit);
    report.push(identity_entry(
        "S(h1)(h2g) = ε(h)g",
        &[n, n],
        c().split(0, comult, [n, n]).map(0, s).merge(1, mult).merge(0, mult),
        eps_g.clone(),
    ));
    report.push(identity_entry(
        "h1(S(h2)g) = ε(h)g",
        &[n, n],
        c().split(0, comult, [n, n]).map(1, s).merge(1, mult).merge(0, mult),
        eps_g.clone(),
    ));
    report.push(identity_entry(
        "(gS(h1))h2 = gε(h)",
        &[n, n],
        c().split(0, comult, [n, n])
            .permute(&[2, 0, 1])
            .map(1, s)
            .merge(0, mult)
            .merge(0, mult),
        eps_g.clone(),
    ));
    report.push(identity_entry(
        "(gh1)S(h2) = gε(h)",
        &[n, n],
        c().split(0, comult, [n, n])
            .permute(&[2, 0, 1])
            .map(2, s)
            .merge(0, mult)
            .merge(0, mult),
        eps_g,
    ));
    report
}

/// Antimultiplicativity and anticomultiplicativity of the antipode.
pub fn antipode_properties<T: Scalar>(h: &HopfQuasigroup<T>) -> Report {
    let (n, m) = (h.dim(), h.maps());
    let c = || Chain::<T>::new();
    let mut report = Report::new("antipode");
    report.push(identity_entry(
        "S(hg) = S(g)S(h)",
        &[n, n],
        c().merge(0, &m.mult).map(0, &m.antipode),
        c().map(0, &m.antipode)
            .map(1, &m.antipode)
            .permute(&[1, 0])
            .merge(0, &m.mult),
    ));
    report.push(identity_entry(
        "Δ(S(h)) = S(h2) ⊗ S(h1)",
        &[n],
        c().map(0, &m.antipode).split(0, &m.comult, [n, n]),
        c().split(0, &m.comult, [n, n])
            .map(0, &m.antipode)
            .map(1, &m.antipode)
            .permute(&[1, 0]),
    ));
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfPredicates {
    pub moufang: bool,
    pub flexible: bool,
    pub moufang_witness: Option<Witness>,
    pub flexible_witness: Option<Witness>,
}

/// Moufang `h1(g(h2f)) = ((h1g)h2)f` and flexible `h1(gh2) = (h1g)h2`.
pub fn hopf_predicates<T: Scalar>(h: &HopfQuasigroup<T>) -> HopfPredicates {
    let (n, mult, comult) = (h.dim(), h.mult(), h.comult());
    let c = || Chain::<T>::new();
    let legs = c().split(0, comult, [n, n]).permute(&[0, 2, 1, 3]);
    let moufang = find_counterexample(
        &[n, n, n],
        &legs.clone().merge(2, mult).merge(1, mult).merge(0, mult),
        &legs.merge(0, mult).merge(0, mult).merge(0, mult),
    );
    let flexible = ab_flexible_witness(h, None, None);
    HopfPredicates {
        moufang: moufang.is_none(),
        flexible: flexible.is_none(),
        moufang_witness: moufang,
        flexible_witness: flexible,
    }
}

/// `α(h1)(gβ(h2)) = (α(h1)g)β(h2)` on all basis pairs; `None` means the
/// identity map.
pub fn ab_flexible_witness<T: Scalar>(
    h: &HopfQuasigroup<T>,
    alpha: Option<&LinearMap<T>>,
    beta: Option<&LinearMap<T>>,
) -> Option<Witness> {
    let (n, mult) = (h.dim(), h.mult());
    let mut legs = Chain::new().split(0, h.comult(), [n, n]).permute(&[0, 2, 1]);
    if let Some(a) = alpha {
        legs = legs.map(0, a);
    }
    if let Some(b) = beta {
        legs = legs.map(2, b);
    }
    find_counterexample(
        &[n, n],
        &legs.clone().merge(1, mult).merge(0, mult),
        &legs.merge(0, mult).merge(0, mult),
    )
}
