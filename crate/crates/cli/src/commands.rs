use std::path::Path;
use std::sync::Arc;

use quasibraid::hopfq::{
    antipode_properties, check_automorphism, check_coquasigroup, check_hopf_quasigroup, coquasigroup_predicates,
    dualize, hopf_predicates, loop_algebra, HopfQuasigroup,
};
use quasibraid::io::{self, ModuleFile};
use quasibraid::loops::{builtin_loop, Loop};
use quasibraid::report::{Entry, Report, Witness};
use quasibraid::ydq::{check_comodule, check_compat, check_plain_ydq, check_quasimodule, make_canonical, PLAIN_YD};
use quasibraid::{Element, Hqg, Module, Result};

use crate::ambient::{self, AutSpec, Source};
use crate::config;

pub fn check_loop(builtin: Option<&str>, path: Option<&Path>) -> Result<Report> {
    let l = match (builtin, path) {
        (Some(name), None) => builtin_loop(name)?,
        (None, Some(path)) => io::read_loop(path)?,
        _ => return Err(quasibraid::Error::Format("give exactly one of --builtin NAME or a path".into())),
    };
    let mut r = Report::new("loop");
    // validation already happened while loading; a loaded loop passed both
    r.push(Entry::pass("Latin square"));
    r.push(Entry::pass("two-sided identity"));
    loop_facts(&mut r, &l);
    Ok(r)
}

fn loop_facts(r: &mut Report, l: &Loop) {
    let flags = l.classify();
    r.fact("order", l.size());
    r.fact("identity", l.identity());
    r.fact("inverse-property", flags.has_inverse_property);
    r.fact("moufang", flags.is_moufang);
    r.fact("flexible", flags.is_flexible);
    r.fact("associative", flags.is_associative);
}

pub fn check_hopf(builtin: Option<&str>, path: Option<&Path>, dual: bool, max_dim: usize) -> Result<Report> {
    let (source, _) = ambient::read_source(builtin, path)?;
    let mut r = Report::new(if dual { "hopf-coquasigroup" } else { "hopf-quasigroup" });
    let h: Hqg = match source {
        Source::Loop(l) => {
            ambient::guard_dim(l.size(), max_dim)?;
            loop_facts(&mut r, &l);
            loop_algebra(&l)?
        }
        Source::Structure(maps) => {
            ambient::guard_dim(maps.dim(), max_dim)?;
            HopfQuasigroup::from_parts_unchecked(maps)?
        }
    };
    r.fact("dim", h.dim());
    if dual {
        let d = dualize(&h);
        r.absorb("axioms", check_coquasigroup(&d));
        let p = coquasigroup_predicates(&d);
        r.fact("coassociative", p.coassociative);
        r.fact("hopf-moufang", p.moufang);
        r.fact("hopf-flexible", p.flexible);
    } else {
        r.absorb("axioms", check_hopf_quasigroup(&h));
        r.absorb("antipode", antipode_properties(&h));
        let p = hopf_predicates(&h);
        r.fact("hopf-moufang", p.moufang);
        r.fact("hopf-flexible", p.flexible);
    }
    Ok(r)
}

pub fn check_aut(builtin: Option<&str>, path: Option<&Path>, map: &str, max_dim: usize) -> Result<Report> {
    let amb = ambient::load(builtin, path, max_dim)?;
    let spec = AutSpec::parse_flag(map)?;
    let mut r = Report::new("automorphism");
    r.fact("map", map);
    if let (Some(l), AutSpec::Perm(p)) = (&amb.source, &spec) {
        r.push(Entry::from_witness(
            "loop automorphism",
            l.automorphism_violation(p)
                .map(|why| Witness::new(vec![], "", "").with_note(why)),
        ));
    }
    r.absorb("", check_automorphism(&amb.hopf, &spec.matrix(&amb)?));
    Ok(r)
}

pub struct BuildYdq<'a> {
    pub builtin: Option<&'a str>,
    pub path: Option<&'a Path>,
    pub alpha: &'a str,
    pub beta: &'a str,
    pub out: Option<&'a Path>,
    pub strict: bool,
    pub max_dim: usize,
}

pub fn build_ydq(args: &BuildYdq<'_>) -> Result<Report> {
    let amb = ambient::load(args.builtin, args.path, args.max_dim)?;
    let alpha = AutSpec::parse_flag(args.alpha)?.build(&amb)?;
    let beta = AutSpec::parse_flag(args.beta)?.build(&amb)?;
    let m = make_canonical(&amb.hopf, &alpha, &beta)?;
    let mut r = module_report(&m, args.strict);
    r.fact("alpha", args.alpha);
    r.fact("beta", args.beta);
    if let Some(out) = args.out {
        io::write_json(out, &ModuleFile::from_module(&m, amb.reference.clone()))?;
    }
    Ok(r)
}

/// Loads a module file without trusting it and checks every axiom.
pub fn check_module(path: &Path, strict: bool, max_dim: usize) -> Result<Report> {
    let file: ModuleFile = io::read_json(path)?;
    let h: Hqg = io::resolve_hopf(&file.hopf, path.parent().unwrap_or(Path::new(".")))?;
    ambient::guard_dim(h.dim(), max_dim)?;
    let m = file.to_module_unchecked(&Arc::new(h))?;
    Ok(module_report(&m, strict))
}

/// `strict` adds the untwisted quasi-comodule conditions, and in the unit
/// component the untwisted compatibility as well.
fn module_report(m: &Module, strict: bool) -> Report {
    let mut r = Report::new("ydq-module");
    r.fact("ambient-dim", m.ambient().dim());
    r.fact("mdim", m.mdim());
    r.absorb("", check_quasimodule(m));
    r.absorb("", check_comodule(m));
    for e in check_compat(m).entries() {
        r.push(e);
    }
    if strict {
        let untwisted = m.component() == &Element::identity(Arc::clone(m.ambient()));
        let mut plain = check_plain_ydq(m);
        if !untwisted {
            plain.entries.retain(|e| e.name != PLAIN_YD);
        }
        r.absorb("strict", plain);
    }
    r
}

pub fn verify_tcategory(path: &Path, max_dim: usize, seed: Option<u64>) -> Result<Report> {
    let cfg = config::read(path)?;
    config::run(&cfg, path.parent().unwrap_or(Path::new(".")), max_dim, seed)
}
