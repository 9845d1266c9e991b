//! JSON file formats. Scalars are written as `"p/q"` strings; integers may
//! also be given as bare JSON numbers on input.
//!
//! * loop file: `{"size", "identity", "table"}`
//! * structure file: `{"dim", "mult", "unit", "comult", "counit", "antipode"}`
//!   where `mult[i][j][k]` is the coefficient of `e_k` in `e_i e_j`,
//!   `comult[i][j][k]` that of `e_j ⊗ e_k` in `Δ(e_i)`, and
//!   `antipode[i][j]` that of `e_j` in `S(e_i)`
//! * module file: `{"hopf", "component": {"alpha", "beta"}, "mdim",
//!   "action", "coaction"}` with row-major matrices; `hopf` is a path
//!   relative to the module file or `builtin:NAME`

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactlin::LinearMap;
use crate::hopfq::{loop_algebra, HopfQuasigroup, HqgAutomorphism, StructureMaps};
use crate::loops::{builtin_loop, Loop, LoopFile};
use crate::scalar::{parse_scalar, Scalar};
use crate::ydq::{GElement, YdqModule};

/// A scalar as it appears in a file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Q(pub String);

impl Q {
    pub fn of<T: Scalar>(v: &T) -> Self {
        Q(v.to_string())
    }

    pub fn parse<T: Scalar>(&self) -> Result<T> {
        parse_scalar(&self.0).ok_or_else(|| Error::Format(format!("`{}` is not a rational number", self.0)))
    }
}

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Q;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a \"p/q\" string or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Q, E> {
                Ok(Q(v.to_string()))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Q, E> {
                Ok(Q(v.to_string()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Q, E> {
                Ok(Q(v.to_string()))
            }
        }
        d.deserialize_any(V)
    }
}

pub type MatrixJson = Vec<Vec<Q>>;

pub fn matrix_to_json<T: Scalar>(m: &LinearMap<T>) -> MatrixJson {
    m.rows().map(|r| r.iter().map(Q::of).collect()).collect()
}

/// Rows of the expected `(cod, dom)` shape.
pub fn matrix_from_json<T: Scalar>(rows: &MatrixJson, shape: (usize, usize), what: &str) -> Result<LinearMap<T>> {
    if rows.len() != shape.0 || rows.iter().any(|r| r.len() != shape.1) {
        return Err(Error::Format(format!(
            "{what}: expected a {} × {} matrix",
            shape.0, shape.1
        )));
    }
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(Q::parse).collect::<Result<Vec<T>>>())
        .collect::<Result<Vec<_>>>()?;
    LinearMap::from_rows(parsed, shape.1)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureFile {
    pub dim: usize,
    pub mult: Vec<Vec<Vec<Q>>>,
    pub unit: Vec<Q>,
    pub comult: Vec<Vec<Vec<Q>>>,
    pub counit: Vec<Q>,
    pub antipode: Vec<Vec<Q>>,
}

impl StructureFile {
    pub fn from_maps<T: Scalar>(m: &StructureMaps<T>) -> Self {
        let n = m.dim();
        let cube = |f: &dyn Fn(usize, usize, usize) -> Q| -> Vec<Vec<Vec<Q>>> {
            (0..n)
                .map(|i| (0..n).map(|j| (0..n).map(|k| f(i, j, k)).collect()).collect())
                .collect()
        };
        StructureFile {
            dim: n,
            mult: cube(&|i, j, k| Q::of(m.mult.get(k, i * n + j))),
            unit: (0..n).map(|k| Q::of(m.unit.get(k, 0))).collect(),
            comult: cube(&|i, j, k| Q::of(m.comult.get(j * n + k, i))),
            counit: (0..n).map(|i| Q::of(m.counit.get(0, i))).collect(),
            antipode: (0..n)
                .map(|i| (0..n).map(|j| Q::of(m.antipode.get(j, i))).collect())
                .collect(),
        }
    }

    pub fn to_maps<T: Scalar>(&self) -> Result<StructureMaps<T>> {
        let n = self.dim;
        let bad = |what: &str| Error::Format(format!("structure file: `{what}` does not match dim {n}"));
        let cube_ok = |c: &Vec<Vec<Vec<Q>>>| c.len() == n && c.iter().all(|r| r.len() == n && r.iter().all(|v| v.len() == n));
        if !cube_ok(&self.mult) {
            return Err(bad("mult"));
        }
        if !cube_ok(&self.comult) {
            return Err(bad("comult"));
        }
        if self.unit.len() != n {
            return Err(bad("unit"));
        }
        if self.counit.len() != n {
            return Err(bad("counit"));
        }
        if self.antipode.len() != n || self.antipode.iter().any(|r| r.len() != n) {
            return Err(bad("antipode"));
        }
        let mut mult = LinearMap::zero(n, n * n);
        let mut comult = LinearMap::zero(n * n, n);
        let mut antipode = LinearMap::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    mult.set(k, i * n + j, self.mult[i][j][k].parse()?);
                    comult.set(j * n + k, i, self.comult[i][j][k].parse()?);
                }
                antipode.set(j, i, self.antipode[i][j].parse()?);
            }
        }
        let unit = LinearMap::from_columns(n, &[self.unit.iter().map(Q::parse).collect::<Result<Vec<T>>>()?])?;
        let counit = LinearMap::from_rows(vec![self.counit.iter().map(Q::parse).collect::<Result<Vec<T>>>()?], n)?;
        Ok(StructureMaps {
            mult,
            unit,
            comult,
            counit,
            antipode,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub alpha: MatrixJson,
    pub beta: MatrixJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModuleFile {
    pub hopf: String,
    pub component: ComponentJson,
    pub mdim: usize,
    pub action: MatrixJson,
    pub coaction: MatrixJson,
}

impl ModuleFile {
    pub fn from_module<T: Scalar>(m: &YdqModule<T>, hopf: impl Into<String>) -> Self {
        ModuleFile {
            hopf: hopf.into(),
            component: ComponentJson {
                alpha: matrix_to_json(m.component().alpha().matrix()),
                beta: matrix_to_json(m.component().beta().matrix()),
            },
            mdim: m.mdim(),
            action: matrix_to_json(m.action()),
            coaction: matrix_to_json(m.coaction()),
        }
    }

    /// Validates the automorphisms and every module axiom.
    pub fn to_module<T: Scalar>(&self, h: &Arc<HopfQuasigroup<T>>) -> Result<YdqModule<T>> {
        let (n, m) = (h.dim(), self.mdim);
        let alpha = HqgAutomorphism::new(h, matrix_from_json(&self.component.alpha, (n, n), "component.alpha")?)?;
        let beta = HqgAutomorphism::new(h, matrix_from_json(&self.component.beta, (n, n), "component.beta")?)?;
        let component = GElement::new(Arc::clone(h), alpha, beta)?;
        let action = matrix_from_json(&self.action, (m, n * m), "action")?;
        let coaction = matrix_from_json(&self.coaction, (m * n, m), "coaction")?;
        YdqModule::new(component, action, coaction)
    }

    /// Validates the automorphisms and shapes only, so that a module that
    /// breaks its axioms can still be loaded and inspected.
    pub fn to_module_unchecked<T: Scalar>(&self, h: &Arc<HopfQuasigroup<T>>) -> Result<YdqModule<T>> {
        let (n, m) = (h.dim(), self.mdim);
        let alpha = HqgAutomorphism::new(h, matrix_from_json(&self.component.alpha, (n, n), "component.alpha")?)?;
        let beta = HqgAutomorphism::new(h, matrix_from_json(&self.component.beta, (n, n), "component.beta")?)?;
        let component = GElement::new(Arc::clone(h), alpha, beta)?;
        let action = matrix_from_json(&self.action, (m, n * m), "action")?;
        let coaction = matrix_from_json(&self.coaction, (m * n, m), "coaction")?;
        YdqModule::from_parts_unchecked(component, action, coaction)
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_json<D: for<'de> Deserialize<'de>>(path: &Path) -> Result<D> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

pub fn write_json<S: Serialize>(path: &Path, value: &S) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_loop(path: &Path) -> Result<Loop> {
    Loop::from_file(&read_json::<LoopFile>(path)?)
}

/// Either a loop file (linearised) or a structure file, told apart by
/// their keys. Structure files are checked against the full axiom suite.
pub fn read_hopf<T: Scalar>(path: &Path) -> Result<HopfQuasigroup<T>> {
    let value: serde_json::Value = read_json(path)?;
    if value.get("table").is_some() {
        let file: LoopFile = serde_json::from_value(value)?;
        loop_algebra(&Loop::from_file(&file)?)
    } else {
        let file: StructureFile = serde_json::from_value(value)?;
        HopfQuasigroup::new(file.to_maps()?)
    }
}

/// `builtin:NAME` or a path resolved against `base`.
pub fn resolve_hopf<T: Scalar>(reference: &str, base: &Path) -> Result<HopfQuasigroup<T>> {
    match reference.strip_prefix("builtin:") {
        Some(name) => loop_algebra(&builtin_loop(name)?),
        None => read_hopf(&resolve_path(reference, base)),
    }
}

pub fn resolve_path(reference: &str, base: &Path) -> PathBuf {
    let p = Path::new(reference);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}

/// Reads a module file, loading its ambient through `resolve_hopf`.
pub fn read_module<T: Scalar>(path: &Path) -> Result<(Arc<HopfQuasigroup<T>>, YdqModule<T>)> {
    let file: ModuleFile = read_json(path)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let h = Arc::new(resolve_hopf(&file.hopf, base)?);
    let m = file.to_module(&h)?;
    Ok((h, m))
}
