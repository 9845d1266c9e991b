use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// Incremental row-echelon form over sparse rows.
///
/// Rows are reduced against the stored pivots as they arrive, so the working
/// set never exceeds the number of unknowns even when the constraint list is
/// long and highly redundant.
pub struct Echelon<T> {
    ncols: usize,
    // pivot column -> row whose leading entry sits in that column
    pivots: BTreeMap<usize, BTreeMap<usize, T>>,
}

impl<T: Scalar> Echelon<T> {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a constraint `Σ row[c] x_c = 0`. Returns whether it was new.
    pub fn push(&mut self, mut row: BTreeMap<usize, T>) -> bool {
        row.retain(|_, v| !v.is_zero());
        loop {
            let Some((&lead, _)) = row.iter().find(|(c, _)| self.pivots.contains_key(c)) else {
                break;
            };
            let pivot = &self.pivots[&lead];
            let factor = row[&lead].clone() / pivot[&lead].clone();
            for (c, v) in pivot {
                let e = row.entry(*c).or_insert_with(T::zero);
                *e = e.sub_ref(&factor.mul_ref(v));
            }
            row.retain(|_, v| !v.is_zero());
        }
        // keep only rows whose lead has no pivot yet; earlier columns are already eliminated
        match row.keys().next().copied() {
            None => false,
            Some(lead) => {
                debug_assert!(lead < self.ncols);
                self.pivots.insert(lead, row);
                true
            }
        }
    }

    /// A basis of the solution space, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.pivots.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![T::zero(); self.ncols];
                x[f] = T::one();
                // rows are not fully reduced: later pivot columns first
                for (&p, row) in self.pivots.iter().rev() {
                    let mut acc = T::zero();
                    for (&c, v) in row.range(p + 1..) {
                        if !x[c].is_zero() {
                            acc.add_product(v, &x[c]);
                        }
                    }
                    x[p] = -(acc / row[&p].clone());
                }
                x
            })
            .collect()
    }
}
