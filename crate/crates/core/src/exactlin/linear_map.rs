use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A linear map `k^dom -> k^cod` stored as a dense row-major `cod x dom`
/// matrix.
///
/// Tensor products of spaces are flattened row-major: the basis vector
/// `e_i ⊗ e_j` of `V ⊗ W` (dimensions `m`, `n`) has index `i * n + j`.
#[derive(Clone, PartialEq)]
pub struct LinearMap<T> {
    cod: usize,
    dom: usize,
    entries: Vec<T>,
}

impl<T: Scalar> LinearMap<T> {
    pub fn zero(cod: usize, dom: usize) -> Self {
        LinearMap {
            cod,
            dom,
            entries: vec![T::zero(); cod * dom],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// The `1 x 1` map multiplying by `c`.
    pub fn scalar(c: T) -> Self {
        LinearMap {
            cod: 1,
            dom: 1,
            entries: vec![c],
        }
    }

    pub fn diagonal(diag: &[T]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| if i == j { diag[i].clone() } else { T::zero() })
    }

    pub fn from_fn(cod: usize, dom: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(cod * dom);
        for i in 0..cod {
            for j in 0..dom {
                entries.push(f(i, j));
            }
        }
        LinearMap { cod, dom, entries }
    }

    pub fn from_row_major(cod: usize, dom: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != cod * dom {
            return Err(Error::DimensionMismatch {
                op: "from_row_major",
                left: (cod, dom),
                right: (entries.len(), 1),
            });
        }
        Ok(LinearMap { cod, dom, entries })
    }

    /// Builds a map from its rows; every row must have length `dom`.
    pub fn from_rows(rows: Vec<Vec<T>>, dom: usize) -> Result<Self> {
        let cod = rows.len();
        let mut entries = Vec::with_capacity(cod * dom);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != dom {
                return Err(Error::Format(format!(
                    "row {i} has {} entries, expected {dom}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(LinearMap { cod, dom, entries })
    }

    /// Builds a map from the images of the domain basis vectors.
    pub fn from_columns(cod: usize, columns: &[Vec<T>]) -> Result<Self> {
        let dom = columns.len();
        let mut m = Self::zero(cod, dom);
        for (j, col) in columns.iter().enumerate() {
            if col.len() != cod {
                return Err(Error::DimensionMismatch {
                    op: "from_columns",
                    left: (cod, dom),
                    right: (col.len(), 1),
                });
            }
            for (i, v) in col.iter().enumerate() {
                m.entries[i * dom + j] = v.clone();
            }
        }
        Ok(m)
    }

    /// The permutation matrix sending `e_j` to `e_{perm[j]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zero(n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.entries[i * n + j] = T::one();
        }
        m
    }

    /// The flip `V ⊗ W -> W ⊗ V` for `dim V = m`, `dim W = n`: index
    /// `i * n + j` goes to `j * m + i`.
    pub fn swap(m: usize, n: usize) -> Self {
        let perm: Vec<usize> = (0..m * n).map(|k| (k % n) * m + k / n).collect();
        Self::permutation(&perm)
    }

    #[inline]
    pub fn cod_dim(&self) -> usize {
        self.cod
    }

    #[inline]
    pub fn dom_dim(&self) -> usize {
        self.dom
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.cod, self.dom)
    }

    pub fn is_square(&self) -> bool {
        self.cod == self.dom
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.dom + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.dom + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.dom..(i + 1) * self.dom]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        (0..self.cod).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.cod).map(|i| self.get(i, j).clone()).collect()
    }

    /// Nonzero entries of column `j` as `(row, value)` pairs.
    pub fn column_support(&self, j: usize) -> Vec<(usize, T)> {
        (0..self.cod)
            .filter_map(|i| {
                let v = self.get(i, j);
                (!v.is_zero()).then(|| (i, v.clone()))
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.cod).all(|i| {
                (0..self.dom).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dom, self.cod, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        LinearMap {
            cod: self.cod,
            dom: self.dom,
            entries: self.entries.iter().map(|v| v.mul_ref(c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op: "add",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(LinearMap {
            cod: self.cod,
            dom: self.dom,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        })
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if self.dom != g.cod {
            return Err(Error::DimensionMismatch {
                op: "compose",
                left: self.shape(),
                right: g.shape(),
            });
        }
        let mut out = Self::zero(self.cod, g.dom);
        for i in 0..self.cod {
            let acc = &mut out.entries[i * g.dom..(i + 1) * g.dom];
            for k in 0..self.dom {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for (j, b) in g.row(k).iter().enumerate() {
                    if !b.is_zero() {
                        acc[j].add_product(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product `self ⊗ g` under the row-major flattening.
    pub fn tensor(&self, g: &Self) -> Self {
        let (cod, dom) = (self.cod * g.cod, self.dom * g.dom);
        let mut out = Self::zero(cod, dom);
        for i in 0..self.cod {
            for j in 0..self.dom {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..g.cod {
                    for l in 0..g.dom {
                        let b = g.get(k, l);
                        if !b.is_zero() {
                            out.entries[(i * g.cod + k) * dom + j * g.dom + l] = a.mul_ref(b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.dom {
            return Err(Error::DimensionMismatch {
                op: "apply",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        let mut out = vec![T::zero(); self.cod];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    o.add_product(a, x);
                }
            }
        }
        Ok(out)
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn invert(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotInvertible {
                what: format!("non-square {}x{} map", self.cod, self.dom),
            });
        }
        let n = self.cod;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero()).ok_or_else(|| {
                Error::NotInvertible {
                    what: format!("{n}x{n} map (rank deficient at column {col})"),
                }
            })?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a.get(col, col).clone();
            if !p.is_one() {
                let scale = T::one() / p;
                a.scale_row(col, &scale);
                inv.scale_row(col, &scale);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                a.sub_row_multiple(r, col, &factor);
                inv.sub_row_multiple(r, col, &factor);
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, r: usize, s: usize) {
        for j in 0..self.dom {
            self.entries.swap(r * self.dom + j, s * self.dom + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &T) {
        for v in &mut self.entries[r * self.dom..(r + 1) * self.dom] {
            *v = v.mul_ref(c);
        }
    }

    // row r -= factor * row s
    fn sub_row_multiple(&mut self, r: usize, s: usize, factor: &T) {
        for j in 0..self.dom {
            let b = &self.entries[s * self.dom + j];
            if b.is_zero() {
                continue;
            }
            let d = factor.mul_ref(b);
            let v = &mut self.entries[r * self.dom + j];
            *v = v.sub_ref(&d);
        }
    }

    /// Index and values of the first entry where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((usize::MAX, usize::MAX));
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.dom, k % self.dom))
    }
}

impl<T: fmt::Debug> fmt::Debug for LinearMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinearMap {}x{} [", self.cod, self.dom)?;
        for row in self.entries.chunks(self.dom.max(1)) {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:?}")).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::{One, Zero};

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    fn qmap(rows: &[&[i64]]) -> LinearMap<Rational> {
        let dom = rows[0].len();
        LinearMap::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| q(v, 1)).collect()).collect(),
            dom,
        )
        .unwrap()
    }

    #[test]
    fn compose_identity() {
        let id = LinearMap::<Rational>::identity(3);
        assert_eq!(id.compose(&id).unwrap(), id);
    }

    #[test]
    fn compose_rejects_mismatch_naming_both_shapes() {
        let f = LinearMap::<Rational>::zero(2, 3);
        let g = LinearMap::<Rational>::zero(2, 2);
        let err = f.compose(&g).unwrap_err().to_string();
        assert!(err.contains("(2, 3)") && err.contains("(2, 2)"), "{err}");
    }

    #[test]
    fn tensor_of_identities_is_identity() {
        let m = LinearMap::<Rational>::identity(2).tensor(&LinearMap::identity(3));
        assert!(m.is_identity());
        assert_eq!(m.shape(), (6, 6));
    }

    #[test]
    fn tensor_with_scalar_scales() {
        let f = qmap(&[&[1, 2], &[3, 4]]);
        let c = q(5, 7);
        assert_eq!(f.tensor(&LinearMap::scalar(c.clone())), f.scale(&c));
        assert_eq!(LinearMap::scalar(c.clone()).tensor(&f), f.scale(&c));
    }

    #[test]
    fn swap_edge_cases() {
        assert!(LinearMap::<Rational>::swap(1, 4).is_identity());
        assert!(LinearMap::<Rational>::swap(4, 1).is_identity());
        let s = LinearMap::<Rational>::swap(2, 3);
        assert!(LinearMap::<Rational>::swap(3, 2).compose(&s).unwrap().is_identity());
    }

    #[test]
    fn swap_moves_every_basis_vector() {
        // enumerate e_i ⊗ e_j of k^2 ⊗ k^3
        let s = LinearMap::<Rational>::swap(2, 3);
        for i in 0..2 {
            for j in 0..3 {
                let mut v = vec![Rational::zero(); 6];
                v[i * 3 + j] = Rational::one();
                let w = s.apply(&v).unwrap();
                let mut expect = vec![Rational::zero(); 6];
                expect[j * 2 + i] = Rational::one();
                assert_eq!(w, expect, "e_{i} ⊗ e_{j}");
            }
        }
    }

    #[test]
    fn apply_extracts_columns() {
        let f = qmap(&[&[1, 2, 0], &[0, -1, 7]]);
        for j in 0..3 {
            let mut e = vec![Rational::zero(); 3];
            e[j] = Rational::one();
            assert_eq!(f.apply(&e).unwrap(), f.column(j));
        }
        assert!(f.apply(&[Rational::one()]).is_err());
        let zero = LinearMap::<Rational>::zero(2, 3);
        assert!(zero.apply(&f.column(0)[..2].iter().cloned().chain([q(1, 1)]).collect::<Vec<_>>())
            .unwrap()
            .iter()
            .all(|v| v.is_zero()));
    }

    #[test]
    fn invert_diagonal_and_singular() {
        let d = LinearMap::diagonal(&[q(2, 1), q(3, 1)]);
        assert_eq!(d.invert().unwrap(), LinearMap::diagonal(&[q(1, 2), q(1, 3)]));
        assert!(LinearMap::<Rational>::identity(4).invert().unwrap().is_identity());
        let singular = qmap(&[&[1, 2], &[2, 4]]);
        let err = singular.invert().unwrap_err();
        assert!(err.to_string().contains("not invertible"));
    }

    #[test]
    fn invert_needs_pivoting() {
        let f = qmap(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let inv = f.invert().unwrap();
        assert!(f.compose(&inv).unwrap().is_identity());
        assert_eq!(inv, f.transpose());
    }

    #[test]
    fn permutation_convention() {
        let p = LinearMap::<Rational>::permutation(&[2, 0, 1]);
        let mut e0 = vec![Rational::zero(); 3];
        e0[0] = Rational::one();
        assert_eq!(p.apply(&e0).unwrap()[2], Rational::one());
    }

    #[test]
    fn works_over_machine_floats() {
        let s = LinearMap::<f64>::swap(2, 2);
        assert!(s.compose(&s).unwrap().is_identity());
    }
}
