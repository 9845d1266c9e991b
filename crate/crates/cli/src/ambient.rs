use std::path::{Path, PathBuf};
use std::sync::Arc;

use quasibraid::exactlin::LinearMap;
use quasibraid::hopfq::{automorphism_from_loop_perm, loop_algebra, HopfQuasigroup, StructureMaps};
use quasibraid::io::{self, matrix_from_json, MatrixJson, StructureFile};
use quasibraid::loops::{builtin_loop, Loop, LoopFile};
use quasibraid::{Automorphism, Error, Hqg, Rational, Result};
use serde::Deserialize;

/// A Hopf quasigroup together with the loop it came from, if any.
pub struct Ambient {
    pub hopf: Arc<Hqg>,
    pub source: Option<Loop>,
    /// How module files should refer back to this ambient.
    pub reference: String,
}

/// Where the raw structure came from, before any axiom check.
pub enum Source {
    Loop(Loop),
    Structure(StructureMaps<Rational>),
}

pub fn read_source(builtin: Option<&str>, path: Option<&Path>) -> Result<(Source, String)> {
    match (builtin, path) {
        (Some(name), None) => Ok((Source::Loop(builtin_loop(name)?), format!("builtin:{name}"))),
        (None, Some(path)) => {
            let value: serde_json::Value = io::read_json(path)?;
            let reference = std::fs::canonicalize(path)
                .unwrap_or_else(|_| path.to_path_buf())
                .display()
                .to_string();
            if value.get("table").is_some() {
                let file: LoopFile = serde_json::from_value(value)?;
                Ok((Source::Loop(Loop::from_file(&file)?), reference))
            } else {
                let file: StructureFile = serde_json::from_value(value)?;
                Ok((Source::Structure(file.to_maps()?), reference))
            }
        }
        (Some(_), Some(_)) => Err(Error::Format("give either --builtin or a path, not both".into())),
        (None, None) => Err(Error::Format("no input: give --builtin NAME or a path".into())),
    }
}

pub fn guard_dim(dim: usize, max_dim: usize) -> Result<()> {
    if dim > max_dim {
        return Err(Error::ResourceLimit(format!(
            "ambient dimension {dim} exceeds --max-dim {max_dim}"
        )));
    }
    Ok(())
}

/// Loads and validates an ambient Hopf quasigroup.
pub fn load(builtin: Option<&str>, path: Option<&Path>, max_dim: usize) -> Result<Ambient> {
    let (source, reference) = read_source(builtin, path)?;
    let (hopf, source) = match source {
        Source::Loop(l) => {
            guard_dim(l.size(), max_dim)?;
            (loop_algebra(&l)?, Some(l))
        }
        Source::Structure(maps) => {
            guard_dim(maps.dim(), max_dim)?;
            (HopfQuasigroup::new(maps)?, None)
        }
    };
    Ok(Ambient {
        hopf: Arc::new(hopf),
        source,
        reference,
    })
}

/// An automorphism as written in a config file.
#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum AutSpec {
    Identity,
    /// Conjugation `x ↦ gxg⁻¹` by a loop element.
    Inner(usize),
    /// A loop permutation, linearly extended.
    Perm(Vec<usize>),
    Matrix(MatrixJson),
}

impl AutSpec {
    /// `id`, `inner:K`, `perm:a,b,c` or `matrix:FILE`.
    pub fn parse_flag(text: &str) -> Result<Self> {
        let bad = || Error::Format(format!("automorphism `{text}`: expected id, inner:K, perm:LIST or matrix:FILE"));
        if text == "id" || text == "identity" {
            return Ok(AutSpec::Identity);
        }
        let (kind, rest) = text.split_once(':').ok_or_else(bad)?;
        match kind {
            "inner" => Ok(AutSpec::Inner(rest.trim().parse().map_err(|_| bad())?)),
            "perm" => Ok(AutSpec::Perm(parse_list(rest).ok_or_else(bad)?)),
            "matrix" => Ok(AutSpec::Matrix(io::read_json(&PathBuf::from(rest))?)),
            _ => Err(bad()),
        }
    }

    pub fn build(&self, ambient: &Ambient) -> Result<Automorphism> {
        let h = &ambient.hopf;
        let need_loop = || {
            ambient
                .source
                .as_ref()
                .ok_or_else(|| Error::Format("inner and permutation automorphisms need a loop ambient".into()))
        };
        match self {
            AutSpec::Identity => Ok(Automorphism::identity(h.dim())),
            AutSpec::Inner(g) => {
                let l = need_loop()?;
                automorphism_from_loop_perm(l, h, &l.conjugation(*g)?)
            }
            AutSpec::Perm(p) => automorphism_from_loop_perm(need_loop()?, h, p),
            AutSpec::Matrix(rows) => Automorphism::new(h, matrix_from_json(rows, (h.dim(), h.dim()), "automorphism")?),
        }
    }

    /// The raw matrix, without any automorphism check.
    pub fn matrix(&self, ambient: &Ambient) -> Result<LinearMap<Rational>> {
        let n = ambient.hopf.dim();
        match self {
            AutSpec::Identity => Ok(LinearMap::identity(n)),
            AutSpec::Inner(g) => {
                let l = ambient
                    .source
                    .as_ref()
                    .ok_or_else(|| Error::Format("inner automorphisms need a loop ambient".into()))?;
                Ok(LinearMap::permutation(&l.conjugation(*g)?))
            }
            AutSpec::Perm(p) => {
                let mut seen = vec![false; n];
                let valid = p.len() == n && p.iter().all(|&i| i < n && !std::mem::replace(&mut seen[i], true));
                if !valid {
                    return Err(Error::Format(format!("{p:?} is not a permutation of 0..{n}")));
                }
                Ok(LinearMap::permutation(p))
            }
            AutSpec::Matrix(rows) => matrix_from_json(rows, (n, n), "automorphism"),
        }
    }
}

fn parse_list(text: &str) -> Option<Vec<usize>> {
    text.split(',').map(|s| s.trim().parse().ok()).collect()
}
