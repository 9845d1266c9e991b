use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::Arc;

use quasibraid::io::{self, ModuleFile};
use quasibraid::ydq::{make_canonical, same_ambient, verify_t_category, Suite, TCategoryOptions};
use quasibraid::report::Report;
use quasibraid::{Element, Error, Module, Result};
use serde::Deserialize;

use crate::ambient::{self, Ambient, AutSpec};

/// A `verify-tcategory` run description.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub name: String,
    pub ambient: AmbientSpec,
    /// Named automorphisms, referred to by name everywhere else.
    pub automorphisms: BTreeMap<String, AutSpec>,
    pub elements: Elements,
    pub modules: Vec<ModuleSpec>,
    /// Defaults to every suite except `strict`.
    #[serde(default)]
    pub suites: Option<Vec<Suite>>,
    /// Adds the `strict` suite.
    #[serde(default)]
    pub strict: bool,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_samples")]
    pub naturality_samples: usize,
}

fn default_samples() -> usize {
    5
}

#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum AmbientSpec {
    Builtin(String),
    /// A loop or structure file, relative to the config.
    File(String),
}

/// `"all"` takes every ordered pair of named automorphisms.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Elements {
    Keyword(String),
    Pairs(Vec<(String, String)>),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub name: String,
    /// `H` itself in component `(α, β)`.
    #[serde(default)]
    pub canonical: Option<(String, String)>,
    /// The base field in `(id, id)`.
    #[serde(default)]
    pub trivial: bool,
    /// A module file, relative to the config.
    #[serde(default)]
    pub file: Option<String>,
}

enum ModuleSource<'a> {
    Canonical(&'a str, &'a str),
    Trivial,
    File(&'a str),
}

impl ModuleSpec {
    fn source(&self) -> Result<ModuleSource<'_>> {
        match (&self.canonical, self.trivial, &self.file) {
            (Some((a, b)), false, None) => Ok(ModuleSource::Canonical(a, b)),
            (None, true, None) => Ok(ModuleSource::Trivial),
            (None, false, Some(f)) => Ok(ModuleSource::File(f)),
            _ => Err(Error::Format(format!(
                "module `{}`: give exactly one of canonical, trivial or file",
                self.name
            ))),
        }
    }
}

pub fn read(path: &Path) -> Result<Config> {
    io::read_json(path)
}

struct Resolved {
    ambient: Ambient,
    auts: BTreeMap<String, quasibraid::Automorphism>,
}

impl Resolved {
    fn aut(&self, name: &str) -> Result<&quasibraid::Automorphism> {
        self.auts
            .get(name)
            .ok_or_else(|| Error::Format(format!("unknown automorphism `{name}`")))
    }

    fn element(&self, a: &str, b: &str) -> Result<Element> {
        Element::new(Arc::clone(&self.ambient.hopf), self.aut(a)?.clone(), self.aut(b)?.clone())
    }
}

/// Loads everything the config names and runs the selected suites.
pub fn run(config: &Config, base: &Path, max_dim: usize, seed: Option<u64>) -> Result<Report> {
    let ambient = match &config.ambient {
        AmbientSpec::Builtin(name) => ambient::load(Some(name), None, max_dim)?,
        AmbientSpec::File(file) => ambient::load(None, Some(&io::resolve_path(file, base)), max_dim)?,
    };
    let auts = config
        .automorphisms
        .iter()
        .map(|(name, spec)| Ok((name.clone(), spec.build(&ambient)?)))
        .collect::<Result<_>>()?;
    let r = Resolved { ambient, auts };
    let h = &r.ambient.hopf;

    let gens = match &config.elements {
        Elements::Keyword(k) if k == "all" => {
            let names: Vec<&String> = r.auts.keys().collect();
            let mut out = Vec::new();
            for a in &names {
                for b in &names {
                    out.push(r.element(a, b)?);
                }
            }
            out
        }
        Elements::Keyword(k) => return Err(Error::Format(format!("elements: expected \"all\" or a list of pairs, got `{k}`"))),
        Elements::Pairs(pairs) => pairs.iter().map(|(a, b)| r.element(a, b)).collect::<Result<_>>()?,
    };

    let mut modules = Vec::new();
    for spec in &config.modules {
        let m = match spec.source()? {
            ModuleSource::Canonical(a, b) => make_canonical(h, r.aut(a)?, r.aut(b)?)?,
            ModuleSource::Trivial => Module::trivial(Arc::clone(h)),
            ModuleSource::File(file) => {
                let path = io::resolve_path(file, base);
                let file: ModuleFile = io::read_json(&path)?;
                let other = io::resolve_hopf(&file.hopf, path.parent().unwrap_or(Path::new(".")))?;
                if !same_ambient(&Arc::new(other), h) {
                    return Err(Error::AmbientMismatch);
                }
                file.to_module(h)?
            }
        };
        modules.push((spec.name.clone(), m));
    }
    let mut names = BTreeSet::new();
    if let Some(dup) = modules.iter().find(|(n, _)| !names.insert(n.clone())) {
        return Err(Error::Format(format!("module name `{}` is used twice", dup.0)));
    }

    let mut suites: BTreeSet<Suite> = match &config.suites {
        Some(list) => list.iter().copied().collect(),
        None => Suite::defaults(),
    };
    if config.strict {
        suites.insert(Suite::Strict);
    }
    let opts = TCategoryOptions {
        suites,
        seed: seed.unwrap_or(config.seed),
        naturality_samples: config.naturality_samples,
    };
    let mut report = verify_t_category(h, &modules, &gens, &opts);
    report.fact("config", &config.name);
    report.fact("seed", opts.seed);
    Ok(report)
}
