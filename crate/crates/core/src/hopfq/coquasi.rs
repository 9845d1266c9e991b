use super::structure::{bialgebra_entries, identity_entry, HopfQuasigroup, StructureMaps};
use crate::error::Result;
use crate::exactlin::{find_counterexample, Chain};
use crate::report::{Report, Witness};
use crate::scalar::Scalar;

/// Associative algebra with a counital, possibly non-coassociative
/// coproduct and a coquasigroup antipode.
#[derive(Debug, Clone, PartialEq)]
pub struct HopfCoquasigroup<T> {
    maps: StructureMaps<T>,
}

impl<T: Scalar> HopfCoquasigroup<T> {
    pub fn from_parts_unchecked(maps: StructureMaps<T>) -> Result<Self> {
        maps.validate_shapes()?;
        Ok(HopfCoquasigroup { maps })
    }

    pub fn dim(&self) -> usize {
        self.maps.dim()
    }

    pub fn maps(&self) -> &StructureMaps<T> {
        &self.maps
    }

    pub fn into_maps(self) -> StructureMaps<T> {
        self.maps
    }

    /// Back to the quasigroup side; fails only if the antipode is singular.
    pub fn dualize(&self) -> Result<HopfQuasigroup<T>> {
        HopfQuasigroup::from_parts_unchecked(self.maps.transposed())
    }
}

/// The dual Hopf coquasigroup `H*` in the dual basis.
pub fn dualize<T: Scalar>(h: &HopfQuasigroup<T>) -> HopfCoquasigroup<T> {
    HopfCoquasigroup {
        maps: h.maps().transposed(),
    }
}

/// Associativity, unit/counit laws, bialgebra compatibility and the four
/// coquasigroup antipode identities. Flexibility, the Moufang condition and
/// coassociativity are recorded as facts.
pub fn check_coquasigroup<T: Scalar>(h: &HopfCoquasigroup<T>) -> Report {
    let m = h.maps();
    let n = h.dim();
    let (mult, comult, s) = (&m.mult, &m.comult, &m.antipode);
    let c = || Chain::<T>::new();
    let mut report = Report::new("hopf-coquasigroup");
    report.fact("dim", n);
    report.push(identity_entry(
        "(hg)f = h(gf)",
        &[n, n, n],
        c().merge(0, mult).merge(0, mult),
        c().merge(1, mult).merge(0, mult),
    ));
    for e in bialgebra_entries(m) {
        report.push(e);
    }
    // h ↦ h1 ⊗ h21 ⊗ h22 and h ↦ h11 ⊗ h12 ⊗ h2
    let right_nested = c().split(0, comult, [n, n]).split(1, comult, [n, n]);
    let left_nested = c().split(0, comult, [n, n]).split(0, comult, [n, n]);
    let one_h = c().insert(0, &m.unit);
    let h_one = c().insert(1, &m.unit);
    report.push(identity_entry(
        "S(h1)h21 ⊗ h22 = 1 ⊗ h",
        &[n],
        right_nested.clone().map(0, s).merge(0, mult),
        one_h.clone(),
    ));
    report.push(identity_entry(
        "h1S(h21) ⊗ h22 = 1 ⊗ h",
        &[n],
        right_nested.map(1, s).merge(0, mult),
        one_h,
    ));
    report.push(identity_entry(
        "h11 ⊗ S(h12)h2 = h ⊗ 1",
        &[n],
        left_nested.clone().map(1, s).merge(1, mult),
        h_one.clone(),
    ));
    report.push(identity_entry(
        "h11 ⊗ h12S(h2) = h ⊗ 1",
        &[n],
        left_nested.map(2, s).merge(1, mult),
        h_one,
    ));
    let p = coquasigroup_predicates(h);
    report.fact("coassociative", p.coassociative);
    report.fact("flexible", p.flexible);
    report.fact("moufang", p.moufang);
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoquasigroupPredicates {
    pub coassociative: bool,
    pub flexible: bool,
    pub moufang: bool,
    pub moufang_witness: Option<Witness>,
}

/// Iterated legs follow the subscript nesting literally: `h21` is the first
/// leg of `Δ` applied to the second leg of `Δ(h)`.
pub fn coquasigroup_predicates<T: Scalar>(h: &HopfCoquasigroup<T>) -> CoquasigroupPredicates {
    let m = h.maps();
    let n = h.dim();
    let (mult, comult) = (&m.mult, &m.comult);
    let c = || Chain::<T>::new();
    let coassociative = find_counterexample(
        &[n],
        &c().split(0, comult, [n, n]).split(0, comult, [n, n]),
        &c().split(0, comult, [n, n]).split(1, comult, [n, n]),
    )
    .is_none();
    // h1h22 ⊗ h21 = h11h2 ⊗ h12
    let flexible = find_counterexample(
        &[n],
        &c().split(0, comult, [n, n])
            .split(1, comult, [n, n])
            .permute(&[0, 2, 1])
            .merge(0, mult),
        &c().split(0, comult, [n, n])
            .split(0, comult, [n, n])
            .permute(&[0, 2, 1])
            .merge(0, mult),
    )
    .is_none();
    // h1h221 ⊗ h21 ⊗ h222 = h111h12 ⊗ h112 ⊗ h2
    let lhs = c()
        .split(0, comult, [n, n]) // h1 h2
        .split(1, comult, [n, n]) // h1 h21 h22
        .split(2, comult, [n, n]) // h1 h21 h221 h222
        .permute(&[0, 2, 1, 3])
        .merge(0, mult);
    let rhs = c()
        .split(0, comult, [n, n]) // h1 h2
        .split(0, comult, [n, n]) // h11 h12 h2
        .split(0, comult, [n, n]) // h111 h112 h12 h2
        .permute(&[0, 2, 1, 3])
        .merge(0, mult);
    let moufang = find_counterexample(&[n], &lhs, &rhs);
    CoquasigroupPredicates {
        coassociative,
        flexible,
        moufang: moufang.is_none(),
        moufang_witness: moufang,
    }
}
