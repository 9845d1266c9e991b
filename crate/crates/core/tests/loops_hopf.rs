use std::time::{Duration, Instant};

use proptest::prelude::*;
use quasibraid::hopfq::{
    antipode_properties, automorphism_from_loop_perm, check_automorphism, check_coquasigroup, check_hopf_quasigroup,
    coquasigroup_predicates, dualize, hopf_predicates, loop_algebra, HopfQuasigroup, StructureMaps,
};
use quasibraid::loops::{builtin_loop, cyclic, octonion_index, octonion_loop, symmetric3, validate_loop, Loop};
use quasibraid::{Error, Hqg, Rational};

/// Steiner loop of the affine plane AG(2,3): identity 0, points 1..=9 are
/// `Z3²`, `x∘x = e` and `x∘y = -x-y` otherwise.
fn steiner10() -> Loop {
    let point = |k: usize| ((k - 1) / 3, (k - 1) % 3);
    let index = |(a, b): (usize, usize)| 1 + 3 * a + b;
    let table: Vec<Vec<usize>> = (0..10)
        .map(|x| {
            (0..10)
                .map(|y| match (x, y) {
                    (0, y) => y,
                    (x, 0) => x,
                    (x, y) if x == y => 0,
                    (x, y) => {
                        let (p, q) = (point(x), point(y));
                        index(((6 - p.0 - q.0) % 3, (6 - p.1 - q.1) % 3))
                    }
                })
                .collect()
        })
        .collect();
    validate_loop(&table, 0).unwrap()
}

/// Smallest non-associative loop; every element is its own inverse but the
/// inverse property fails.
fn order5() -> Loop {
    validate_loop(
        &[
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ],
        0,
    )
    .unwrap()
}

/// The span of the octonion loop as an 8-dimensional real algebra, with
/// `±e_k` read off the loop table.
fn octonion_product(l: &Loop, x: &[i64; 8], y: &[i64; 8]) -> [i64; 8] {
    let mut out = [0i64; 8];
    for a in 0..8 {
        for b in 0..8 {
            let p = l.mul(octonion_index(a, false), octonion_index(b, false));
            let (unit, sign) = if p >= 8 { (p - 8, -1) } else { (p, 1) };
            out[unit] += sign * x[a] * y[b];
        }
    }
    out
}

fn norm(x: &[i64; 8]) -> i64 {
    x.iter().map(|v| v * v).sum()
}

fn vec8() -> impl Strategy<Value = [i64; 8]> {
    proptest::array::uniform8(-4i64..=4)
}

proptest! {
    /// Hurwitz: a real composition algebra of dimension 8 is the octonions.
    #[test]
    fn octonion_table_spans_a_composition_algebra(x in vec8(), y in vec8()) {
        let l = octonion_loop();
        prop_assert_eq!(norm(&octonion_product(&l, &x, &y)), norm(&x) * norm(&y));
    }

    #[test]
    fn octonion_span_is_alternative(x in vec8(), y in vec8()) {
        let l = octonion_loop();
        let xx = octonion_product(&l, &x, &x);
        prop_assert_eq!(octonion_product(&l, &x, &octonion_product(&l, &x, &y)), octonion_product(&l, &xx, &y));
        let yy = octonion_product(&l, &y, &y);
        prop_assert_eq!(octonion_product(&l, &octonion_product(&l, &x, &y), &y), octonion_product(&l, &x, &yy));
    }

    #[test]
    fn inner_automorphisms_of_s3_compose_to_automorphisms(gs in proptest::collection::vec(0usize..6, 1..5)) {
        let l = symmetric3();
        let h: Hqg = loop_algebra(&l).unwrap();
        let mut acc = automorphism_from_loop_perm(&l, &h, &l.conjugation(gs[0]).unwrap()).unwrap();
        for &g in &gs[1..] {
            let next = automorphism_from_loop_perm(&l, &h, &l.conjugation(g).unwrap()).unwrap();
            acc = acc.compose(&next).unwrap();
            prop_assert!(check_automorphism(&h, acc.matrix()).passed);
        }
        prop_assert!(check_automorphism(&h, acc.inverse().matrix()).passed);
    }
}

#[test]
fn builtin_tables() {
    let c3 = cyclic(3).unwrap();
    assert_eq!(c3.inverse_map().unwrap(), vec![0, 2, 1]);
    assert_eq!(builtin_loop("cyclic(1)").unwrap().size(), 1);
    assert!(matches!(builtin_loop("a5"), Err(Error::UnknownLoop(_))));
    let s3 = symmetric3();
    let f = s3.classify();
    assert!(f.is_associative && f.is_moufang && f.has_inverse_property);
    // S3 is not abelian
    assert!((0..6).any(|s| (0..6).any(|t| s3.mul(s, t) != s3.mul(t, s))));
}

#[test]
fn octonion_classification() {
    let f = octonion_loop().classify();
    assert!(f.has_inverse_property);
    assert!(f.is_moufang);
    assert!(f.is_flexible);
    assert!(!f.is_associative);
}

#[test]
fn steiner_loop_is_inverse_property_but_not_moufang() {
    let l = steiner10();
    let f = l.classify();
    assert!(f.has_inverse_property);
    assert!(f.is_flexible);
    assert!(!f.is_moufang);
    assert!(!f.is_associative);
    // the linearisation is still a Hopf quasigroup
    let h: Hqg = loop_algebra(&l).unwrap();
    assert!(check_hopf_quasigroup(&h).passed);
    assert!(antipode_properties(&h).passed);
    let p = hopf_predicates(&h);
    assert!(!p.moufang);
    assert!(p.moufang_witness.is_some());
    assert!(p.flexible);
}

#[test]
fn loops_without_inverse_property_do_not_linearise() {
    let l = order5();
    assert!(!l.classify().has_inverse_property);
    assert!(matches!(loop_algebra::<Rational>(&l), Err(Error::NoInverseProperty(_))));
}

#[test]
fn invalid_tables_are_rejected() {
    assert!(matches!(
        validate_loop(&[vec![0, 1], vec![1, 1]], 0),
        Err(Error::NotLatinSquare(_))
    ));
    assert!(matches!(
        validate_loop(&[vec![1, 0], vec![0, 1]], 0),
        Err(Error::IdentityFails { .. })
    ));
}

#[test]
fn octonion_linearisation_passes_every_axiom() {
    let start = Instant::now();
    let h: Hqg = loop_algebra(&octonion_loop()).unwrap();
    let axioms = check_hopf_quasigroup(&h);
    let antipode = antipode_properties(&h);
    let p = hopf_predicates(&h);
    let elapsed = start.elapsed();
    assert!(axioms.passed, "{axioms}");
    assert!(antipode.passed, "{antipode}");
    assert!(p.moufang && p.flexible);
    assert!(!octonion_loop().classify().is_associative);
    assert!(elapsed < Duration::from_secs(10), "{elapsed:?}");
}

#[test]
fn dual_of_octonions_is_a_coquasigroup() {
    let h: Hqg = loop_algebra(&octonion_loop()).unwrap();
    let d = dualize(&h);
    assert!(check_coquasigroup(&d).passed);
    let p = coquasigroup_predicates(&d);
    assert!(!p.coassociative);
    assert!(p.moufang);
    assert!(p.flexible);
    // dualising twice returns the original structure
    let back = d.dualize().unwrap();
    assert_eq!(back.maps(), h.maps());
}

#[test]
fn c2_is_self_dual_up_to_the_basis_pairing() {
    let h: Hqg = loop_algebra(&cyclic(2).unwrap()).unwrap();
    let d = dualize(&h);
    // in the character basis χ± = δ0 ± δ1 the dual is kC2 again
    let m = d.maps();
    let chars = [[1i64, 1], [1, -1]];
    let mul = |x: [i64; 2], y: [i64; 2]| -> [i64; 2] {
        let v: Vec<Rational> = (0..2)
            .map(|k| {
                let mut s = Rational::from_integer(0.into());
                for i in 0..2 {
                    for j in 0..2 {
                        s += m.mult.get(k, i * 2 + j) * Rational::from_integer((x[i] * y[j]).into());
                    }
                }
                s
            })
            .collect();
        [v[0].to_integer().try_into().unwrap(), v[1].to_integer().try_into().unwrap()]
    };
    assert_eq!(mul(chars[1], chars[1]), chars[0]);
    assert_eq!(mul(chars[0], chars[1]), chars[1]);
}

#[test]
fn conjugation_by_an_octonion_unit_is_not_an_automorphism() {
    let l = octonion_loop();
    let h: Hqg = loop_algebra(&l).unwrap();
    let perm = l.conjugation(octonion_index(1, false)).unwrap();
    assert!(l.automorphism_violation(&perm).is_some());
    assert!(matches!(
        automorphism_from_loop_perm(&l, &h, &perm),
        Err(Error::NotLoopAutomorphism(_))
    ));
    let fano = [0, 2, 3, 1, 4, 6, 7, 5];
    let sigma: Vec<usize> = (0..16).map(|i| fano[i % 8] + if i >= 8 { 8 } else { 0 }).collect();
    assert!(check_automorphism(&h, automorphism_from_loop_perm(&l, &h, &sigma).unwrap().matrix()).passed);
}

#[test]
fn mutated_structure_is_rejected_with_a_witness() {
    let h: Hqg = loop_algebra(&symmetric3()).unwrap();
    let mut maps: StructureMaps<Rational> = h.into_maps();
    // e1·e1 = e0 becomes e1·e1 = e4
    maps.mult.set(0, 7, Rational::from_integer(0.into()));
    maps.mult.set(4, 7, Rational::from_integer(1.into()));
    let broken = HopfQuasigroup::from_parts_unchecked(maps.clone()).unwrap();
    let report = check_hopf_quasigroup(&broken);
    assert!(!report.passed);
    assert!(report.failures().all(|e| e.witness.is_some()));
    assert!(matches!(HopfQuasigroup::new(maps), Err(Error::AxiomFailed { .. })));
}
