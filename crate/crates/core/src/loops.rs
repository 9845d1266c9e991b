//! Finite loops given by Cayley tables, the identities that decide whether
//! they linearise to Hopf quasigroups, and a few builtin examples.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest loop accepted from any source.
pub const MAX_LOOP_ORDER: usize = 64;

/// A quasigroup with two-sided identity. `table[s * size + t]` is `st`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loop {
    size: usize,
    table: Vec<usize>,
    identity: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopFlags {
    pub has_inverse_property: bool,
    pub is_moufang: bool,
    pub is_flexible: bool,
    pub is_associative: bool,
}

/// On-disk form: `{ "size": n, "identity": e, "table": [[...], ...] }`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LoopFile {
    pub size: usize,
    pub identity: usize,
    pub table: Vec<Vec<usize>>,
}

/// Checks the Latin-square and identity conditions.
pub fn validate_loop(table: &[Vec<usize>], identity: usize) -> Result<Loop> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotLatinSquare("empty table".into()));
    }
    if n > MAX_LOOP_ORDER {
        return Err(Error::ResourceLimit(format!("loop order {n} exceeds {MAX_LOOP_ORDER}")));
    }
    if identity >= n {
        return Err(Error::Format(format!("identity index {identity} out of range for order {n}")));
    }
    for (r, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotLatinSquare(format!("row {r} has length {}, expected {n}", row.len())));
        }
        if let Some(&v) = row.iter().find(|&&v| v >= n) {
            return Err(Error::NotLatinSquare(format!("row {r} contains out-of-range entry {v}")));
        }
    }
    for r in 0..n {
        if let Some(v) = first_repeat((0..n).map(|c| table[r][c]), n) {
            return Err(Error::NotLatinSquare(format!("row {r} repeats {v}")));
        }
    }
    for c in 0..n {
        if let Some(v) = first_repeat((0..n).map(|r| table[r][c]), n) {
            return Err(Error::NotLatinSquare(format!("column {c} repeats {v}")));
        }
    }
    if let Some(x) = (0..n).find(|&x| table[identity][x] != x || table[x][identity] != x) {
        return Err(Error::IdentityFails { identity, witness: x });
    }
    Ok(Loop {
        size: n,
        table: table.iter().flatten().copied().collect(),
        identity,
    })
}

fn first_repeat(values: impl Iterator<Item = usize>, n: usize) -> Option<usize> {
    let mut seen = vec![false; n];
    values.into_iter().find(|&v| std::mem::replace(&mut seen[v], true))
}

impl Loop {
    pub fn from_file(file: &LoopFile) -> Result<Self> {
        if file.table.len() != file.size {
            return Err(Error::Format(format!(
                "declared size {} but table has {} rows",
                file.size,
                file.table.len()
            )));
        }
        validate_loop(&file.table, file.identity)
    }

    pub fn to_file(&self) -> LoopFile {
        LoopFile {
            size: self.size,
            identity: self.identity,
            table: (0..self.size).map(|s| self.table[s * self.size..(s + 1) * self.size].to_vec()).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.table[s * self.size + t]
    }

    fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    /// Two-sided inverse candidate of `s`: the unique `u` with `us = e`,
    /// provided it also satisfies `su = e`.
    fn two_sided_inverse(&self, s: usize) -> Option<usize> {
        let u = self.elements().find(|&u| self.mul(u, s) == self.identity)?;
        (self.mul(s, u) == self.identity).then_some(u)
    }

    /// First `(s, t)` violating `s⁻¹(st) = t` or `(ts)s⁻¹ = t`.
    fn inverse_property_violation(&self) -> Option<String> {
        for s in self.elements() {
            let Some(u) = self.two_sided_inverse(s) else {
                return Some(format!("element {s} has no two-sided inverse"));
            };
            for t in self.elements() {
                if self.mul(u, self.mul(s, t)) != t {
                    return Some(format!("s⁻¹(st) ≠ t at s = {s}, t = {t}"));
                }
                if self.mul(self.mul(t, s), u) != t {
                    return Some(format!("(ts)s⁻¹ ≠ t at s = {s}, t = {t}"));
                }
            }
        }
        None
    }

    fn all_triples(&self, pred: impl Fn(usize, usize, usize) -> bool) -> bool {
        self.elements()
            .all(|s| self.elements().all(|t| self.elements().all(|r| pred(s, t, r))))
    }

    pub fn classify(&self) -> LoopFlags {
        LoopFlags {
            has_inverse_property: self.inverse_property_violation().is_none(),
            is_moufang: self.all_triples(|s, t, r| {
                self.mul(s, self.mul(t, self.mul(s, r))) == self.mul(self.mul(self.mul(s, t), s), r)
            }),
            is_flexible: self
                .elements()
                .all(|s| self.elements().all(|t| self.mul(s, self.mul(t, s)) == self.mul(self.mul(s, t), s))),
            is_associative: self.all_triples(|s, t, r| {
                self.mul(s, self.mul(t, r)) == self.mul(self.mul(s, t), r)
            }),
        }
    }

    /// `s ↦ s⁻¹`; requires the inverse property.
    pub fn inverse_map(&self) -> Result<Vec<usize>> {
        if let Some(why) = self.inverse_property_violation() {
            return Err(Error::NoInverseProperty(why));
        }
        Ok(self
            .elements()
            .map(|s| self.two_sided_inverse(s).expect("checked above"))
            .collect())
    }

    /// First pair `(s, t)` with `perm(st) ≠ perm(s)perm(t)`, or a bijectivity
    /// / identity failure.
    pub fn automorphism_violation(&self, perm: &[usize]) -> Option<String> {
        if perm.len() != self.size {
            return Some(format!("permutation has length {}, loop has order {}", perm.len(), self.size));
        }
        if perm.iter().any(|&p| p >= self.size) || first_repeat(perm.iter().copied(), self.size).is_some() {
            return Some(format!("{perm:?} is not a permutation"));
        }
        if perm[self.identity] != self.identity {
            return Some(format!("identity is sent to {}", perm[self.identity]));
        }
        for s in self.elements() {
            for t in self.elements() {
                if perm[self.mul(s, t)] != self.mul(perm[s], perm[t]) {
                    return Some(format!("perm(st) ≠ perm(s)perm(t) at s = {s}, t = {t}"));
                }
            }
        }
        None
    }

    /// `s ↦ (gs)g⁻¹`. An automorphism whenever the loop is a group.
    pub fn conjugation(&self, g: usize) -> Result<Vec<usize>> {
        if g >= self.size {
            return Err(Error::Format(format!("{g} is not an element of a loop of order {}", self.size)));
        }
        let inv = self.inverse_map()?;
        Ok(self.elements().map(|s| self.mul(self.mul(g, s), inv[g])).collect())
    }
}

/// `cyclic(n)` (also `cN`), `s3`, or `octonion16`.
pub fn builtin_loop(name: &str) -> Result<Loop> {
    let lower = name.trim().to_ascii_lowercase();
    if let Some(n) = parse_cyclic(&lower) {
        return cyclic(n);
    }
    match lower.as_str() {
        "s3" => Ok(symmetric3()),
        "octonion16" | "octonions" => Ok(octonion_loop()),
        _ => Err(Error::UnknownLoop(name.to_string())),
    }
}

fn parse_cyclic(name: &str) -> Option<usize> {
    let digits = name
        .strip_prefix("cyclic(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| name.strip_prefix("cyclic"))
        .or_else(|| name.strip_prefix('c'))?;
    digits.trim().parse().ok()
}

pub fn cyclic(n: usize) -> Result<Loop> {
    if n == 0 {
        return Err(Error::UnknownLoop("cyclic(0)".into()));
    }
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    validate_loop(&table, 0)
}

/// The six permutations of `{0, 1, 2}` in the order used for `s3`; element 0
/// is the identity, 1..=3 are transpositions, 4 and 5 are the 3-cycles.
pub const S3_ELEMENTS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 0, 2],
    [0, 2, 1],
    [2, 1, 0],
    [1, 2, 0],
    [2, 0, 1],
];

/// Symmetric group on three letters, `(st)(x) = s(t(x))`.
pub fn symmetric3() -> Loop {
    let index = |p: [usize; 3]| S3_ELEMENTS.iter().position(|q| *q == p).expect("closed");
    let table: Vec<Vec<usize>> = S3_ELEMENTS
        .iter()
        .map(|s| {
            S3_ELEMENTS
                .iter()
                .map(|t| index([s[t[0]], s[t[1]], s[t[2]]]))
                .collect()
        })
        .collect();
    validate_loop(&table, 0).expect("S3 is a group")
}

/// Oriented lines of the Fano plane: `e_a e_b = e_c` for each `(a, b, c)`,
/// and cyclically.
pub const FANO_TRIPLES: [(usize, usize, usize); 7] = [
    (1, 2, 3),
    (1, 4, 5),
    (2, 4, 6),
    (3, 4, 7),
    (1, 7, 6),
    (2, 5, 7),
    (3, 6, 5),
];

/// Index of `±e_unit` in `octonion16` (`unit` 0 is the real unit).
pub fn octonion_index(unit: usize, negative: bool) -> usize {
    unit + if negative { 8 } else { 0 }
}

/// The 16-element Moufang loop `{±1, ±e_1, ..., ±e_7}` of unit octonions.
/// Index `k < 8` is `+e_k`, index `k + 8` is `-e_k`, with `e_0 = 1`.
pub fn octonion_loop() -> Loop {
    // unit products: (sign, unit)
    let mut prod = [[(false, 0usize); 8]; 8];
    for a in 0..8 {
        prod[0][a] = (false, a);
        prod[a][0] = (false, a);
    }
    for a in 1..8 {
        prod[a][a] = (true, 0);
    }
    for &(a, b, c) in &FANO_TRIPLES {
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            prod[x][y] = (false, z);
            prod[y][x] = (true, z);
        }
    }
    let table: Vec<Vec<usize>> = (0..16)
        .map(|s| {
            (0..16)
                .map(|t| {
                    let (sign, unit) = prod[s % 8][t % 8];
                    let negative = sign ^ (s >= 8) ^ (t >= 8);
                    octonion_index(unit, negative)
                })
                .collect()
        })
        .collect();
    validate_loop(&table, 0).expect("octonion units form a loop")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_true() -> LoopFlags {
        LoopFlags {
            has_inverse_property: true,
            is_moufang: true,
            is_flexible: true,
            is_associative: true,
        }
    }

    #[test]
    fn c2_is_valid_and_classifies_fully() {
        let l = validate_loop(&[vec![0, 1], vec![1, 0]], 0).unwrap();
        assert_eq!(l.size(), 2);
        assert_eq!(l.classify(), all_true());
        assert_eq!(l.inverse_map().unwrap(), vec![0, 1]);
    }

    #[test]
    fn repeated_entry_rejected() {
        let err = validate_loop(&[vec![0, 0], vec![1, 0]], 0).unwrap_err();
        assert!(err.to_string().contains("not a Latin square"), "{err}");
        assert!(err.to_string().contains("row 0"));
    }

    #[test]
    fn column_repeat_rejected() {
        let err = validate_loop(&[vec![0, 1], vec![0, 1]], 0).unwrap_err();
        assert!(err.to_string().contains("column 0"), "{err}");
    }

    #[test]
    fn identity_failure_names_witness() {
        // Latin square whose element 1 is not an identity
        let err = validate_loop(&[vec![0, 1], vec![1, 0]], 1).unwrap_err();
        assert!(matches!(err, Error::IdentityFails { identity: 1, witness: 0 }));
    }

    #[test]
    fn c3_inverse() {
        let l = builtin_loop("cyclic(3)").unwrap();
        assert_eq!(l.inverse_map().unwrap(), vec![0, 2, 1]);
        assert_eq!(builtin_loop("c3").unwrap(), l);
    }

    #[test]
    fn trivial_loop() {
        let l = builtin_loop("cyclic(1)").unwrap();
        assert_eq!(l.size(), 1);
        assert_eq!(l.classify(), all_true());
    }

    #[test]
    fn s3_matches_permutation_composition() {
        let l = builtin_loop("s3").unwrap();
        for (i, s) in S3_ELEMENTS.iter().enumerate() {
            for (j, t) in S3_ELEMENTS.iter().enumerate() {
                let st = S3_ELEMENTS[l.mul(i, j)];
                for x in 0..3 {
                    assert_eq!(st[x], s[t[x]]);
                }
            }
        }
        assert_eq!(l.classify(), all_true());
        // not abelian
        assert_ne!(l.mul(1, 2), l.mul(2, 1));
    }

    #[test]
    fn octonion_loop_is_moufang_not_associative() {
        let l = builtin_loop("octonion16").unwrap();
        assert_eq!(l.size(), 16);
        assert_eq!(
            l.classify(),
            LoopFlags {
                has_inverse_property: true,
                is_moufang: true,
                is_flexible: true,
                is_associative: false,
            }
        );
    }

    #[test]
    fn octonion_inverses_flip_imaginary_signs() {
        let l = octonion_loop();
        let inv = l.inverse_map().unwrap();
        assert_eq!(inv[octonion_index(0, false)], octonion_index(0, false));
        assert_eq!(inv[octonion_index(0, true)], octonion_index(0, true));
        for k in 1..8 {
            assert_eq!(inv[octonion_index(k, false)], octonion_index(k, true));
            assert_eq!(inv[octonion_index(k, true)], octonion_index(k, false));
        }
    }

    #[test]
    fn octonion_fano_products() {
        let l = octonion_loop();
        let e = |k| octonion_index(k, false);
        assert_eq!(l.mul(e(1), e(2)), e(3));
        assert_eq!(l.mul(e(2), e(1)), octonion_index(3, true));
        assert_eq!(l.mul(e(2), e(4)), e(6));
        assert_eq!(l.mul(e(3), e(4)), e(7));
        assert_eq!(l.mul(e(5), e(5)), octonion_index(0, true));
    }

    #[test]
    fn unknown_builtin() {
        assert!(matches!(builtin_loop("a5"), Err(Error::UnknownLoop(_))));
    }

    #[test]
    fn inverse_map_requires_ip() {
        // a loop of order 5 without the inverse property
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let l = validate_loop(&t, 0).unwrap();
        assert!(!l.classify().has_inverse_property);
        assert!(matches!(l.inverse_map(), Err(Error::NoInverseProperty(_))));
    }

    #[test]
    fn automorphism_checks() {
        let c3 = cyclic(3).unwrap();
        assert!(c3.automorphism_violation(&[0, 2, 1]).is_none());
        assert!(c3.automorphism_violation(&[1, 0, 2]).is_some());
        let s3 = symmetric3();
        for g in 0..6 {
            assert!(s3.automorphism_violation(&s3.conjugation(g).unwrap()).is_none());
        }
    }

    #[test]
    fn file_round_trip() {
        let l = octonion_loop();
        let json = serde_json::to_string(&l.to_file()).unwrap();
        let back: LoopFile = serde_json::from_str(&json).unwrap();
        assert_eq!(Loop::from_file(&back).unwrap(), l);
    }
}
