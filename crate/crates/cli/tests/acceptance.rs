//! One line per acceptance criterion. Every check is exact; the only
//! tolerances are the runtime budgets, pinned below.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use quasibraid::hopfq::{
    antipode_properties, automorphism_from_loop_perm, check_hopf_quasigroup, hopf_predicates, loop_algebra,
};
use quasibraid::loops::{cyclic, octonion_loop, symmetric3, Loop};
use quasibraid::report::Report;
use quasibraid::ydq::{
    braiding, check_compat, check_plain_ydq, g_inv, g_mul, make_canonical, verify_t_category, Suite,
    TCategoryOptions, PLAIN_YD, QUASI_LEFT, QUASI_MIDDLE,
};
use quasibraid::{Automorphism, Element, Hqg, Module, Rational};

const OCTONION_BUDGET: Duration = Duration::from_secs(10);
const TENSOR_BUDGET: Duration = Duration::from_secs(60);
const BRAIDING_BUDGET: Duration = Duration::from_secs(120);

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn within(elapsed: Duration, budget: Duration) -> Result<(), String> {
    ensure(
        elapsed < budget,
        format!("took {:.2} s, budget {} s", elapsed.as_secs_f64(), budget.as_secs()),
    )
}

fn first_failure(r: &Report) -> String {
    match r.failures().next() {
        Some(e) => match &e.witness {
            Some(w) => format!("{} at {w}", e.name),
            None => e.name.clone(),
        },
        None => "no failure".into(),
    }
}

fn passed(r: &Report) -> Result<(), String> {
    ensure(r.passed, first_failure(r))
}

struct Inner {
    l: Loop,
    h: Arc<Hqg>,
    auts: Vec<Automorphism>,
}

impl Inner {
    fn new(l: Loop) -> Self {
        let h = Arc::new(loop_algebra(&l).unwrap());
        let auts = (0..l.size())
            .map(|g| automorphism_from_loop_perm(&l, &h, &l.conjugation(g).unwrap()).unwrap())
            .collect();
        Inner { l, h, auts }
    }

    fn element(&self, a: usize, b: usize) -> Element {
        Element::new(Arc::clone(&self.h), self.auts[a].clone(), self.auts[b].clone()).unwrap()
    }

    fn elements(&self) -> Vec<Element> {
        let n = self.auts.len();
        (0..n * n).map(|k| self.element(k / n, k % n)).collect()
    }

    fn canonical(&self, a: usize, b: usize) -> Module {
        make_canonical(&self.h, &self.auts[a], &self.auts[b]).unwrap()
    }

    fn corpus(&self) -> Vec<(String, Module)> {
        [(0, 0), (1, 4), (4, 2)]
            .iter()
            .map(|&(a, b)| (format!("H{a}{b}"), self.canonical(a, b)))
            .collect()
    }
}

fn run_suites(s3: &Inner, modules: &[(String, Module)], gens: &[Element], suites: &[Suite], samples: usize) -> Report {
    let opts = TCategoryOptions {
        suites: suites.iter().copied().collect::<BTreeSet<_>>(),
        seed: 0,
        naturality_samples: samples,
    };
    verify_t_category(&s3.h, modules, gens, &opts)
}

fn count(r: &Report, prefix: &str) -> usize {
    r.entries.iter().filter(|e| e.name.starts_with(prefix)).count()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let l = octonion_loop();
    let h: Hqg = loop_algebra(&l).unwrap();
    let axioms = check_hopf_quasigroup(&h);
    let antipode = antipode_properties(&h);
    let p = hopf_predicates(&h);
    let associative = l.classify().is_associative;
    let elapsed = start.elapsed();
    passed(&axioms)?;
    passed(&antipode)?;
    ensure(p.moufang, "Moufang Hopf predicate fails")?;
    ensure(!associative, "octonion loop classified as associative")?;
    within(elapsed, OCTONION_BUDGET)?;
    Ok(format!(
        "{} axioms, {} antipode identities, Moufang, non-associative in {:.2} s",
        axioms.entries.len(),
        antipode.entries.len(),
        elapsed.as_secs_f64()
    ))
}

fn criterion_2() -> Outcome {
    let mut canonical = 0;
    let mut check = |m: &Module, what: String| -> Result<(), String> {
        let r = check_compat(m);
        canonical += 1;
        ensure(r.coaction_of_action_holds() && r.twisted_yd_holds(), what)
    };
    for n in [2, 3] {
        let c = Inner::new(cyclic(n).unwrap());
        for k in 0..n * n {
            check(&c.canonical(k / n, k % n), format!("kC{n} pair {k}"))?;
        }
    }
    let s3 = Inner::new(symmetric3());
    for k in 0..36 {
        check(&s3.canonical(k / 6, k % 6), format!("kS3 (c{}, c{})", k / 6, k % 6))?;
    }
    let o = Arc::new(loop_algebra::<Rational>(&octonion_loop()).unwrap());
    let id = Automorphism::identity(16);
    check(&make_canonical(&o, &id, &id).unwrap(), "octonion16 (id,id)".into())?;

    // mutations: each corpus module relabeled into a foreign component
    let mut mutated = 0;
    for (name, m) in s3.corpus() {
        for x in s3.elements() {
            if &x == m.component() {
                continue;
            }
            let r = check_compat(&m.relabeled(x).unwrap());
            ensure(
                !r.coaction_of_action_holds() && !r.twisted_yd_holds(),
                format!("relabeled {name} keeps a compatibility form"),
            )?;
            mutated += 1;
        }
    }
    ensure(mutated >= 10, format!("only {mutated} mutations"))?;
    Ok(format!("{canonical} canonical instances true/true, {mutated} mutated instances false/false"))
}

fn criterion_3() -> Outcome {
    let s3 = Inner::new(symmetric3());
    let e = s3.element(0, 0);
    let mut instances = vec![s3.canonical(0, 0), Module::trivial(Arc::clone(&s3.h))];
    for a in 0..6 {
        for b in 0..6 {
            instances.push(s3.canonical(a, b).relabeled(e.clone()).unwrap());
        }
    }
    let mut agree_true = 0;
    for m in &instances {
        let plain = check_plain_ydq(m);
        let twisted = check_compat(m).twisted_yd_holds();
        ensure(plain.entry(PLAIN_YD).unwrap().passed == twisted, "untwisted and twisted checks disagree")?;
        ensure(
            plain.entry(QUASI_LEFT).unwrap().passed && plain.entry(QUASI_MIDDLE).unwrap().passed,
            "quasi-comodule condition fails on an associative ambient",
        )?;
        agree_true += usize::from(twisted);
    }
    Ok(format!(
        "{} instances in (id,id) agree ({agree_true} hold, {} fail), quasi-comodule conditions pass",
        instances.len(),
        instances.len() - agree_true
    ))
}

fn criterion_4() -> Outcome {
    let s3 = Inner::new(symmetric3());
    let gens = s3.elements();
    let g = gens.len();
    let e = s3.element(0, 0);
    for x in &gens {
        ensure(&g_mul(&e, x).unwrap() == x && &g_mul(x, &e).unwrap() == x, "unit law")?;
        let xi = g_inv(x);
        let beta = x
            .alpha()
            .compose(&x.beta().inverse())
            .and_then(|ab| ab.compose(&x.alpha().inverse()))
            .unwrap();
        ensure(
            xi.alpha().matrix() == x.alpha().inverse_matrix() && xi.beta().matrix() == beta.matrix(),
            "inverse is not (α⁻¹, αβ⁻¹α⁻¹)",
        )?;
        ensure(g_mul(x, &xi).unwrap().is_identity() && g_mul(&xi, x).unwrap().is_identity(), "inverse law")?;
    }
    let products: Vec<Vec<Element>> = gens
        .iter()
        .map(|x| gens.iter().map(|y| g_mul(x, y).unwrap()).collect())
        .collect();
    let mut triples = 0;
    for i in 0..g {
        for j in 0..g {
            for k in 0..g {
                let lhs = g_mul(&products[i][j], &gens[k]).unwrap();
                let rhs = g_mul(&gens[i], &products[j][k]).unwrap();
                ensure(lhs == rhs, format!("associativity fails at ({i}, {j}, {k})"))?;
                triples += 1;
            }
        }
    }
    Ok(format!("{g} elements: unit, inverse formula, associativity on all {triples} triples"))
}

fn criterion_5() -> Outcome {
    let s3 = Inner::new(symmetric3());
    let start = Instant::now();
    let r = run_suites(
        &s3,
        &s3.corpus(),
        &[],
        &[Suite::TensorCompat, Suite::TensorGrading, Suite::TensorAssociativity],
        0,
    );
    let elapsed = start.elapsed();
    passed(&r)?;
    within(elapsed, TENSOR_BUDGET)?;
    Ok(format!(
        "9 products pass compat and grading, {} associativity triples equal, {:.2} s",
        count(&r, "tensor-associativity"),
        elapsed.as_secs_f64()
    ))
}

fn criterion_6() -> Outcome {
    let s3 = Inner::new(symmetric3());
    let r = run_suites(
        &s3,
        &s3.corpus(),
        &s3.elements(),
        &[Suite::ConjugationCompat, Suite::ConjugationFunctor, Suite::ConjugationTensor],
        0,
    );
    passed(&r)?;
    Ok(format!("{} entries over 36 elements and 3 modules", r.entries.len()))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let s3 = Inner::new(symmetric3());
    let r = run_suites(
        &s3,
        &s3.corpus(),
        &[],
        &[Suite::BraidingMorphism, Suite::BraidingInverse, Suite::Hexagons],
        0,
    );
    passed(&r)?;
    let o = Inner {
        l: octonion_loop(),
        h: Arc::new(loop_algebra(&octonion_loop()).unwrap()),
        auts: vec![Automorphism::identity(16)],
    };
    let om = vec![("O".to_string(), o.canonical(0, 0))];
    let pairwise = run_suites(&o, &om, &[], &[Suite::BraidingMorphism, Suite::BraidingInverse], 0);
    passed(&pairwise)?;
    let elapsed = start.elapsed();
    within(elapsed, BRAIDING_BUDGET)?;
    Ok(format!(
        "kS3: {} pair and {} hexagon entries; octonion16 pairwise: {} entries; {:.2} s",
        count(&r, "braiding-"),
        count(&r, "hexagons"),
        pairwise.entries.len(),
        elapsed.as_secs_f64()
    ))
}

fn criterion_8() -> Outcome {
    let s3 = Inner::new(symmetric3());
    let r = run_suites(&s3, &s3.corpus(), &s3.elements(), &[Suite::Naturality, Suite::Phi], 6);
    passed(&r)?;
    let samples = count(&r, "naturality");
    ensure(samples >= 5, format!("only {samples} naturality samples"))?;
    Ok(format!(
        "{samples} naturality squares commute, φ-compatibility on {} pairs × 36 elements",
        count(&r, "phi")
    ))
}

fn criterion_9() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let configs = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs");
    let mut summary = Vec::new();
    for name in ["kS3-inner.json", "octonion16-id.json"] {
        let mut outputs = Vec::new();
        for run in 0..2 {
            let out = dir.path().join(format!("{name}.{run}"));
            let status = Command::new(env!("CARGO_BIN_EXE_quasibraid"))
                .args(["verify-tcategory"])
                .arg(configs.join(name))
                .arg("--json")
                .arg(&out)
                .output()
                .map_err(|e| e.to_string())?;
            ensure(status.status.code() == Some(0), format!("{name} exits {:?}", status.status.code()))?;
            outputs.push(std::fs::read(&out).map_err(|e| e.to_string())?);
        }
        ensure(outputs[0] == outputs[1], format!("{name} reports differ between runs"))?;
        summary.push(format!("{name} ({} bytes)", outputs[0].len()));
    }
    Ok(format!("exit 0 and byte-identical reports: {}", summary.join(", ")))
}

fn criterion_10() -> Outcome {
    let s3 = Inner::new(symmetric3());
    let l = &s3.l;
    let inv = l.inverse_map().unwrap();
    let m = s3.canonical(0, 0);
    let c = braiding(&m, &m).unwrap();
    let one = Rational::from_integer(1.into());
    for g in 0..6 {
        for h in 0..6 {
            let conj = l.mul(l.mul(h, g), inv[h]);
            let column = c.column(g * 6 + h);
            for (row, v) in column.iter().enumerate() {
                let want = row == h * 6 + conj;
                ensure(
                    (v == &one) == want && (want || v == &Rational::from_integer(0.into())),
                    format!("c(e{g} ⊗ e{h}) disagrees with e{h} ⊗ e{conj}"),
                )?;
            }
        }
    }
    Ok("c(g⊗h) = h ⊗ hgh⁻¹ on all 36 basis pairs".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("octonion16 Hopf quasigroup, Moufang, non-associative", criterion_1),
        ("both compatibility forms agree on canonical and mutated modules", criterion_2),
        ("untwisted reduction on kS3", criterion_3),
        ("group G laws on inner pairs of S3", criterion_4),
        ("tensor products on the kS3 corpus", criterion_5),
        ("conjugation functors on the kS3 corpus", criterion_6),
        ("braiding, inverse and hexagons", criterion_7),
        ("naturality and φ-compatibility", criterion_8),
        ("shipped configs pass deterministically", criterion_9),
        ("braiding matches the conjugation oracle", criterion_10),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS {title}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL {title}: {why}", i + 1);
            }
        }
    }
    println!("{} / {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
