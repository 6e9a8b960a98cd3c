//! Command bodies. Each builds a JSON report, writes it, then maps the outcome to an exit code.

use crate::{Cli, Command, Global, LabelArgs, SpecArgs};
use qbrauer::cellular::{self, linalg, spectrum, CellModule};
use qbrauer::coefficients::{Coeff, Ground, Num, NumericPoint, Specialization};
use qbrauer::combinatorics::{coset_count, ct_eigenvalue, updown_tableaux, CellLabel, Partition};
use qbrauer::qbrauer::{parse_letters, QBrauer};
use qbrauer::semisimplicity;
use qbrauer::Error;
use serde_json::{json, Value};

/// Version of the report layout.
pub const FORMAT_VERSION: u32 = 1;
pub const DEFAULT_SEED: u64 = 20240101;

#[derive(Debug)]
pub enum Failure {
    /// A computed identity or prediction did not hold.
    Check(String),
    Usage(String),
    /// Cache or file-system trouble.
    Environment(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Environment(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Verification(_) => Failure::Check(e.to_string()),
            Error::Cache(_) => Failure::Environment(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

/// A finished report and whether its checks passed.
struct Report {
    command: &'static str,
    config: Value,
    result: Value,
    ok: bool,
    summary: String,
}

pub fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    let report = match &cli.command {
        Command::VerifyRelations { n } => verify_relations(g, *n)?,
        Command::Gram { label, spec } => gram(g, label, spec)?,
        Command::JmSpectrum { label } => jm_spectrum(g, label)?,
        Command::Branching { label, seed } => branching(g, label, *seed)?,
        Command::Scan { n, from, to, seed } => scan(g, *n, *from, *to, *seed)?,
        Command::Semisimple { n, spec, seed } => semisimple(g, *n, spec, *seed)?,
        Command::Mul { n, lhs, rhs } => mul(g, *n, lhs, rhs)?,
        Command::BasisCount { n } => basis_count(g, *n)?,
    };
    emit(g, &report)?;
    if report.ok {
        Ok(())
    } else {
        Err(Failure::Check(report.summary))
    }
}

fn emit(g: &Global, r: &Report) -> Outcome {
    let doc = json!({
        "format_version": FORMAT_VERSION,
        "command": r.command,
        "config": r.config,
        "ok": r.ok,
        "result": r.result,
    });
    let mut text = serde_json::to_string_pretty(&doc).map_err(|e| Failure::Environment(e.to_string()))?;
    text.push('\n');
    match &g.output {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Environment(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn check_rank(g: &Global, n: usize, min: usize) -> Outcome {
    if n < min {
        return Err(Failure::Usage(format!("--n must be at least {min}, got {n}")));
    }
    if n > g.max_n {
        return Err(Failure::Usage(format!("--n {n} exceeds --max-n {}", g.max_n)));
    }
    Ok(())
}

fn algebra(g: &Global, n: usize) -> Result<QBrauer, Failure> {
    Ok(match &g.cache_dir {
        Some(d) => {
            std::fs::create_dir_all(d).map_err(|e| Failure::Environment(format!("cannot create {}: {e}", d.display())))?;
            QBrauer::with_cache(n, d)?
        }
        None => QBrauer::new(n)?,
    })
}

fn label(g: &Global, a: &LabelArgs) -> Result<CellLabel, Failure> {
    check_rank(g, a.n, 1)?;
    let lambda: Partition = a.lambda.parse()?;
    let l = CellLabel::new(a.f, lambda);
    l.check(a.n)?;
    Ok(l)
}

fn label_config(a: &LabelArgs, l: &CellLabel) -> Value {
    json!({ "n": a.n, "f": l.f, "lambda": l.lambda })
}

fn spec(a: &SpecArgs) -> Result<Option<Specialization>, Failure> {
    if let Some(x) = a.z_exp {
        return Ok(Some(Specialization::IntegerExponent(x)));
    }
    let Some(s) = &a.numeric else { return Ok(None) };
    let parts: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("--numeric expects `char,q0,z0`, got `{s}`")))?;
    let [ch, q0, z0] = parts[..] else {
        return Err(Failure::Usage(format!("--numeric expects three integers, got `{s}`")));
    };
    let ch = u64::try_from(ch).map_err(|_| Failure::Usage("characteristic must be non-negative".into()))?;
    Ok(Some(Specialization::NumericPoint(NumericPoint::from_ints(ch, q0, z0)?)))
}

fn spec_name(s: &Option<Specialization>) -> String {
    s.as_ref().map_or("symbolic".to_string(), |s| s.to_string())
}

fn num_text(x: &Num) -> String {
    match x {
        Num::Mod { v, .. } => v.to_string(),
        other => other.to_string(),
    }
}

fn double_factorial(n: usize) -> u64 {
    (1..=n as u64).map(|k| 2 * k - 1).product()
}

fn verify_relations(g: &Global, n: usize) -> Result<Report, Failure> {
    check_rank(g, n, 2)?;
    let alg = algebra(g, n)?;
    alg.check_word_consistency()?;
    let checks = alg.verify_relations();
    let expected = double_factorial(n);
    let ok = alg.dim() as u64 == expected && checks.iter().all(|c| c.holds);
    let failing: Vec<&str> = checks.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect();
    Ok(Report {
        command: "verify-relations",
        config: json!({ "n": n }),
        result: json!({ "dim": alg.dim(), "expected_dim": expected, "relations": checks }),
        ok,
        summary: format!("dim {} (expected {expected}), failing relations {failing:?}", alg.dim()),
    })
}

fn gram(g: &Global, a: &LabelArgs, s: &SpecArgs) -> Result<Report, Failure> {
    let l = label(g, a)?;
    let sp = spec(s)?;
    let alg = algebra(g, a.n)?;
    let m = CellModule::new(&alg, l.clone())?;
    let gm = m.gram()?;
    let (entries, det, det_zero): (Vec<Vec<String>>, String, bool) = match &sp {
        None => {
            let c = linalg::map_matrix(&gm, |x| x.to_coeff());
            let d = if c.is_empty() { Coeff::one() } else { linalg::det(&c, &Coeff::one()) };
            (linalg::map_matrix(&gm, |x| x.pretty()), d.pretty(), d.is_zero())
        }
        Some(Specialization::IntegerExponent(x)) => {
            let c = cellular::specialize_matrix(&gm, |v| Ok(v.subst_z_power(*x).to_coeff()))?;
            let d = if c.is_empty() { Coeff::one() } else { linalg::det(&c, &Coeff::one()) };
            (linalg::map_matrix(&c, |v| v.pretty()), d.pretty(), d.is_zero())
        }
        Some(Specialization::NumericPoint(p)) => {
            let c = cellular::specialize_matrix(&gm, |v: &Ground| v.eval(p.q0(), p.z0()))?;
            let one = Num::one_in(p.characteristic());
            let d = if c.is_empty() { one } else { linalg::det(&c, &one) };
            (linalg::map_matrix(&c, num_text), num_text(&d), d.is_zero())
        }
    };
    let mut config = label_config(a, &l);
    config["spec"] = json!(spec_name(&sp));
    Ok(Report {
        command: "gram",
        config,
        result: json!({ "dim": m.dim(), "entries": entries, "det": det, "det_zero": det_zero }),
        ok: true,
        summary: String::new(),
    })
}

fn jm_spectrum(g: &Global, a: &LabelArgs) -> Result<Report, Failure> {
    let l = label(g, a)?;
    let n = a.n;
    let alg = algebra(g, n)?;
    let m = CellModule::new(&alg, l.clone())?;
    let tableaux: Vec<Value> = updown_tableaux(n, &l.lambda)?
        .iter()
        .filter(|t| t.label() == l)
        .map(|t| json!({ "tableau": t.to_string(), "eigenvalues": (1..=n).map(|k| ct_eigenvalue(t, k).pretty()).collect::<Vec<_>>() }))
        .collect();
    let mut triangular = Vec::new();
    let mut bad = Vec::new();
    for k in 1..=n {
        let c = m.check_triangular(k)?;
        if !c.holds {
            bad.push(k);
        }
        triangular.push(json!({ "k": k, "holds": c.holds, "nonzero_off_diagonal": c.nonzero_off_diagonal, "violations": c.violations }));
    }
    Ok(Report {
        command: "jm-spectrum",
        config: label_config(a, &l),
        result: json!({ "dim": m.dim(), "tableaux": tableaux, "triangularity": triangular }),
        ok: bad.is_empty(),
        summary: format!("L_k not triangular with the expected diagonal for k in {bad:?}"),
    })
}

fn branching(g: &Global, a: &LabelArgs, seed: u64) -> Result<Report, Failure> {
    let l = label(g, a)?;
    let alg = algebra(g, a.n)?;
    let m = CellModule::new(&alg, l.clone())?;
    let r = cellular::filtration_check(&m, &spectrum::random_point(seed)?)?;
    let mut config = label_config(a, &l);
    config["seed"] = json!(seed);
    Ok(Report { command: "branching", config, ok: r.holds, summary: format!("restriction filtration of {l} does not match"), result: json!(r) })
}

fn scan(g: &Global, n: usize, from: Option<i32>, to: Option<i32>, seed: u64) -> Result<Report, Failure> {
    check_rank(g, n, 2)?;
    for k in 2..=n {
        algebra(g, k)?;
    }
    let (lo, hi) = semisimplicity::default_window(n);
    let (from, to) = (from.unwrap_or(lo), to.unwrap_or(hi));
    let r = semisimplicity::scan(n, from, to, seed)?;
    Ok(Report {
        command: "scan",
        config: json!({ "n": n, "from": from, "to": to, "seed": seed }),
        ok: r.matches,
        summary: format!("vanishing exponents {:?} differ from the predicted {:?}", r.zeros, r.expected),
        result: json!(r),
    })
}

fn semisimple(g: &Global, n: usize, s: &SpecArgs, seed: u64) -> Result<Report, Failure> {
    check_rank(g, n, 2)?;
    let sp = spec(s)?.ok_or_else(|| Failure::Usage("semisimple needs --z-exp or --numeric".into()))?;
    for k in 2..=n {
        algebra(g, k)?;
    }
    let v = semisimplicity::brute_semisimple(n, &sp, seed)?;
    Ok(Report {
        command: "semisimple",
        config: json!({ "n": n, "spec": sp.to_string(), "seed": seed }),
        ok: v.observed == v.predicted,
        summary: format!("observed semisimple = {}, predicted {}", v.observed, v.predicted),
        result: json!(v),
    })
}

fn mul(g: &Global, n: usize, lhs: &str, rhs: &str) -> Result<Report, Failure> {
    check_rank(g, n, 1)?;
    let alg = algebra(g, n)?;
    let x = alg.product::<Ground>(&parse_letters(lhs)?)?;
    let y = alg.product::<Ground>(&parse_letters(rhs)?)?;
    let p = alg.mul(&x, &y)?;
    let terms: Vec<Value> = p.terms().iter().map(|(w, c)| json!({ "word": w.to_string(), "coeff": c.pretty() })).collect();
    Ok(Report { command: "mul", config: json!({ "n": n, "lhs": lhs, "rhs": rhs }), result: json!({ "terms": terms }), ok: true, summary: String::new() })
}

fn basis_count(g: &Global, n: usize) -> Result<Report, Failure> {
    check_rank(g, n, 1)?;
    let fact = |m: usize| (1..=m as u64).product::<u64>();
    let by_f: Vec<Value> = (0..=n / 2)
        .map(|f| {
            let d = coset_count(f, n);
            json!({ "f": f, "cosets": d, "words": d * d * fact(n - 2 * f) })
        })
        .collect();
    let total: u64 = (0..=n / 2).map(|f| coset_count(f, n).pow(2) * fact(n - 2 * f)).sum();
    let alg = algebra(g, n)?;
    let ok = total == alg.dim() as u64 && total == double_factorial(n);
    Ok(Report {
        command: "basis-count",
        config: json!({ "n": n }),
        result: json!({ "total": total, "table_dim": alg.dim(), "by_deficiency": by_f }),
        ok,
        summary: format!("count {total}, table {}, (2n-1)!! = {}", alg.dim(), double_factorial(n)),
    })
}
