use num_bigint::BigInt;
use proptest::prelude::*;
use quasibraid::exactlin::{find_counterexample, Chain, Echelon, LinearMap};
use quasibraid::{Matrix, Rational};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn matrix(cod: usize, dom: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(rational(), cod * dom)
        .prop_map(move |v| LinearMap::from_row_major(cod, dom, v).unwrap())
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(c, d)| matrix(c, d))
}

/// Schoolbook product, independent of the library's kernel.
fn naive_product(f: &Matrix, g: &Matrix) -> Vec<Vec<Rational>> {
    let (a, b, c) = (f.cod_dim(), f.dom_dim(), g.dom_dim());
    let mut out = vec![vec![q(0, 1); c]; a];
    for i in 0..a {
        for j in 0..c {
            for k in 0..b {
                out[i][j] += f.get(i, k) * g.get(k, j);
            }
        }
    }
    out
}

/// Kronecker product from its defining formula.
fn naive_kron(f: &Matrix, g: &Matrix) -> Vec<Vec<Rational>> {
    let (p, r) = (f.cod_dim(), g.cod_dim());
    let (qd, s) = (f.dom_dim(), g.dom_dim());
    let mut out = vec![vec![q(0, 1); qd * s]; p * r];
    for i in 0..p {
        for j in 0..qd {
            for k in 0..r {
                for l in 0..s {
                    out[i * r + k][j * s + l] = f.get(i, j) * g.get(k, l);
                }
            }
        }
    }
    out
}

fn rows(m: &Matrix) -> Vec<Vec<Rational>> {
    m.rows().map(|r| r.to_vec()).collect()
}

proptest! {
    #[test]
    fn compose_matches_schoolbook((f, g) in (1usize..=4, 1usize..=4, 1usize..=4)
        .prop_flat_map(|(a, b, c)| (matrix(a, b), matrix(b, c))))
    {
        prop_assert_eq!(rows(&f.compose(&g).unwrap()), naive_product(&f, &g));
    }

    #[test]
    fn compose_is_associative((f, g, h) in (1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3)
        .prop_flat_map(|(a, b, c, d)| (matrix(a, b), matrix(b, c), matrix(c, d))))
    {
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn tensor_matches_kronecker(f in any_matrix(), g in any_matrix()) {
        prop_assert_eq!(rows(&f.tensor(&g)), naive_kron(&f, &g));
    }

    #[test]
    fn tensor_is_associative(f in any_matrix(), g in any_matrix(), h in any_matrix()) {
        prop_assert_eq!(f.tensor(&g).tensor(&h), f.tensor(&g.tensor(&h)));
    }

    #[test]
    fn tensor_is_functorial((f1, f2, g1, g2) in (1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3)
        .prop_flat_map(|(a, b, c, d, e, k)| (matrix(a, b), matrix(b, c), matrix(d, e), matrix(e, k))))
    {
        let lhs = f1.compose(&f2).unwrap().tensor(&g1.compose(&g2).unwrap());
        let rhs = f1.tensor(&g1).compose(&f2.tensor(&g2)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn swap_is_an_involution_and_natural(f in any_matrix(), g in any_matrix()) {
        let (m, n) = (f.dom_dim(), g.dom_dim());
        let s: Matrix = LinearMap::swap(m, n);
        let back: Matrix = LinearMap::swap(n, m);
        prop_assert!(back.compose(&s).unwrap().is_identity());
        let lhs = LinearMap::swap(f.cod_dim(), g.cod_dim()).compose(&f.tensor(&g)).unwrap();
        let rhs = g.tensor(&f).compose(&s).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_multiplies_back(m in (1usize..=5).prop_flat_map(|n| matrix(n, n))) {
        match m.invert() {
            Ok(inv) => {
                prop_assert!(m.compose(&inv).unwrap().is_identity());
                prop_assert!(inv.compose(&m).unwrap().is_identity());
            }
            Err(_) => {
                // singular: the rows are dependent
                let mut ech = Echelon::new(m.dom_dim());
                for r in m.rows() {
                    ech.push(r.iter().cloned().enumerate().collect());
                }
                prop_assert!(ech.rank() < m.cod_dim());
            }
        }
    }

    #[test]
    fn nullspace_vectors_are_killed(m in any_matrix()) {
        let mut ech = Echelon::new(m.dom_dim());
        for r in m.rows() {
            ech.push(r.iter().cloned().enumerate().collect());
        }
        let null = ech.nullspace();
        prop_assert_eq!(null.len() + ech.rank(), m.dom_dim());
        for v in &null {
            prop_assert!(m.apply(v).unwrap().iter().all(|x| *x == q(0, 1)));
        }
    }

    #[test]
    fn chain_to_map_agrees_with_dense_algebra(g in matrix(3, 2), h in matrix(3, 3)) {
        // (h ⊗ g)∘swap on V3 ⊗ V2 evaluated sparsely and densely
        let chain = Chain::new().permute(&[1, 0]).map(0, &g).map(1, &h);
        let dense = g.tensor(&h).compose(&LinearMap::swap(3, 2)).unwrap();
        prop_assert_eq!(chain.to_map(&[3, 2]).unwrap(), dense.clone());
        let other = Chain::new().then(&Chain::new().permute(&[1, 0])).map(0, &g).map(1, &h);
        prop_assert!(find_counterexample(&[3, 2], &chain, &other).is_none());
        let h2 = h.compose(&h).unwrap();
        let squared = Chain::new().permute(&[1, 0]).map(0, &g).map(1, &h2);
        let agree = h2.tensor(&g) == h.tensor(&g);
        prop_assert_eq!(find_counterexample(&[3, 2], &chain, &squared).is_none(), agree);
    }
}

#[test]
fn singular_matrix_is_reported() {
    let m = LinearMap::from_rows(vec![vec![q(1, 1), q(2, 1)], vec![q(1, 2), q(1, 1)]], 2).unwrap();
    assert!(m.invert().is_err());
}

#[test]
fn exact_fractions_survive_inversion() {
    let m = LinearMap::from_rows(vec![vec![q(1, 3), q(1, 7)], vec![q(2, 5), q(1, 1)]], 2).unwrap();
    let inv = m.invert().unwrap();
    assert!(m.compose(&inv).unwrap().is_identity());
    // det = 1/3 - 2/35 = 29/105
    assert_eq!(*inv.get(0, 0), q(105, 29));
}
