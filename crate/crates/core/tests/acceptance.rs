//! The acceptance gate: twelve criteria, one PASS/FAIL line each.
//!
//! Every comparison is exact. Symbolic checks compare canonical elements of
//! `Z[q^±1, z^±1]` or `Q(q, z)`; numeric checks run in `F_p` with `p = 2^61 - 1`
//! at points drawn from the pinned seeds below, and a numeric zero is never
//! accepted as a vanishing determinant without a symbolic rank computation.

mod common;

use qbrauer::cellular::{
    admissibility_exponent, filtration_check, functor_f_check, radical_dim, radical_factor_shape, spectrum, two_box_shapes, CellModule,
    RadicalFactors, VModule,
};
use qbrauer::coefficients::{Coeff, Ground, NumericPoint, Specialization};
use qbrauer::combinatorics::{coset_count, labels, std_tableaux, updown_tableaux, CellLabel, Partition};
use qbrauer::qbrauer::oracle::FreeQuotientOracle;
use qbrauer::qbrauer::{Letter, QBrauer};
use qbrauer::semisimplicity::{bad_exponent_set, brute_semisimple, scan};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

/// Seed for random evaluation points in `F_{2^61-1}`.
const POINT_SEED: u64 = 17;
/// Seed for the numeric prescreen of Gram determinants.
const SCAN_SEED: u64 = 1;
/// Oracle field and parameter point.
const ORACLE_POINT: (u64, u64, u64) = (1_000_003, 3, 7);
/// Scan windows per rank; each strictly contains the predicted set.
const SCAN_WINDOWS: [(usize, i32, i32); 4] = [(2, -2, 2), (3, -4, 3), (4, -6, 4), (5, -8, 5)];
/// Exponents for the classical limit.
const LIMIT_EXPONENTS: std::ops::RangeInclusive<i32> = -2..=3;

type Outcome = Result<String, String>;
/// Name, check, and the tolerance it is held to.
type Criterion = (&'static str, fn() -> Outcome, &'static str);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn alg(n: usize) -> QBrauer {
    QBrauer::new(n).expect("table build")
}

fn double_factorial(n: usize) -> usize {
    (1..=n).map(|k| 2 * k - 1).product()
}

fn rank_and_closure() -> Outcome {
    let mut dims = Vec::new();
    for n in 2..=5 {
        let b = QBrauer::new(n).map_err(|e| format!("n={n}: {e}"))?;
        ensure(b.dim() == double_factorial(n), || format!("n={n}: {} words, expected {}", b.dim(), double_factorial(n)))?;
        b.check_word_consistency().map_err(|e| e.to_string())?;
        let mut gens: Vec<Letter> = (1..n).flat_map(|i| [Letter::T(i), Letter::TInv(i)]).collect();
        gens.push(Letter::E);
        for x in 0..b.dim() as u32 {
            for &g in &gens {
                let img = b.right_letter_sparse(&[(x, Ground::one())], g);
                ensure(img.iter().all(|(i, _)| (*i as usize) < b.dim()), || format!("n={n}: product left the basis"))?;
            }
        }
        dims.push(b.dim());
    }
    Ok(format!("ranks {dims:?}, no stuck words"))
}

fn relations() -> Outcome {
    let mut count = 0;
    for n in 2..=5 {
        for r in alg(n).verify_relations() {
            ensure(r.holds, || format!("n={n}: {} fails on {} basis words", r.name, r.failures))?;
            count += 1;
        }
    }
    Ok(format!("{count} relation checks on the regular representations, n=2..5"))
}

fn oracle() -> Outcome {
    let (p, q0, z0) = ORACLE_POINT;
    let mut counts = Vec::new();
    for n in 1..=3 {
        let b = alg(n);
        let span = b.basis().iter().map(|w| w.letters().len()).max().unwrap_or(0) + 1;
        let o = FreeQuotientOracle::build(n, p, q0, z0, span).map_err(|e| e.to_string())?;
        let pairs = o.check_products(&b).map_err(|e| e.to_string())?;
        ensure(pairs == b.dim() * b.dim(), || format!("n={n}: {pairs} pairs compared"))?;
        counts.push(pairs);
    }
    Ok(format!("basis-pair products agree: {counts:?} (F_{p}, q={q0}, z={z0})"))
}

fn jm_suite() -> Outcome {
    for n in 2..=5 {
        let b = alg(n);
        let l: Vec<_> = (1..=n).map(|i| b.jm::<Ground>(i).unwrap()).collect();
        for i in 0..n {
            for j in i + 1..n {
                ensure(b.mul(&l[i], &l[j]).unwrap() == b.mul(&l[j], &l[i]).unwrap(), || format!("L_{} L_{} != L_{} L_{} in B_{n}", i + 1, j + 1, j + 1, i + 1))?;
            }
        }
    }
    let b = alg(4);
    let mut s = b.zero::<Ground>();
    for i in 1..=4 {
        s = s.add(&b.jm(i).unwrap()).unwrap();
    }
    let witness = [Letter::E, Letter::T(1), Letter::T(2), Letter::T(3)]
        .into_iter()
        .find(|&g| b.right_mul_gen(&s, g).unwrap() != b.left_mul_gen(g, &s).unwrap())
        .ok_or("sum of JM elements commutes with every generator of B_4")?;
    let mut certs = 0;
    for n in 1..=5 {
        let b = alg(n);
        for label in labels(n) {
            let m = CellModule::new(&b, label.clone()).unwrap();
            for k in 1..=n {
                let c = m.check_triangular(k).unwrap();
                ensure(c.holds, || format!("L_{k} on {label}: {:?}", c.violations))?;
                certs += 1;
            }
        }
    }
    let m = CellModule::new(&alg(2), CellLabel::new(1, Partition::empty())).unwrap();
    let want = Coeff::monomial(1, 2, -2).sub(&Coeff::one()).div(&Coeff::q().sub(&Coeff::monomial(1, -1, 0))).unwrap();
    let got = m.jm_matrix(2).unwrap()[0][0].clone();
    ensure(got == want, || format!("B_2 eigenvalue {}", got.pretty()))?;
    Ok(format!("all pairs commute n<=5; witness {witness} in B_4; {certs} triangular certificates; B_2 eigenvalue {}", got.pretty()))
}

fn dimensions() -> Outcome {
    let mut checked = 0;
    for n in 1..=6 {
        let b = (n <= 5).then(|| alg(n));
        for label in labels(n) {
            let by_cosets = coset_count(label.f, n) as usize * std_tableaux(&label.lambda, 1).len();
            let by_paths = updown_tableaux(n, &label.lambda).unwrap().len();
            ensure(label.dimension() == by_cosets && by_cosets == by_paths, || format!("{label} in B_{n}: {} / {by_cosets} / {by_paths}", label.dimension()))?;
            if let Some(b) = &b {
                let d = CellModule::new(b, label.clone()).unwrap().dim();
                ensure(d == by_paths, || format!("{label} in B_{n}: module has dimension {d}"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} labels, n<=6 (modules built for n<=5)"))
}

fn branching() -> Outcome {
    let point = spectrum::random_point(POINT_SEED).unwrap();
    let mut count = 0;
    for n in 1..=5 {
        let b = alg(n);
        for label in labels(n) {
            let r = filtration_check(&CellModule::new(&b, label.clone()).unwrap(), &point).unwrap();
            ensure(r.holds, || format!("{label} in B_{n}: {:?}", r.layers))?;
            count += 1;
        }
    }
    Ok(format!("{count} filtrations, layers and JM spectra match"))
}

fn semisimplicity_scan() -> Outcome {
    let mut parts = Vec::new();
    for (n, from, to) in SCAN_WINDOWS {
        let r = scan(n, from, to, SCAN_SEED).unwrap();
        ensure(r.matches, || format!("n={n}: zeros {:?}, expected {:?}", r.zeros, r.expected))?;
        ensure(r.expected == bad_exponent_set(n), || format!("n={n}: window misses part of the predicted set"))?;
        parts.push(format!("n={n} {:?}", r.zeros));
    }
    Ok(parts.join("; "))
}

fn hecke_gate() -> Outcome {
    // (rank, p, q0, z0): q0^2 has order e in F_p, with e <= rank.
    let cases = [(3, 7, 2, 3, 3), (4, 7, 2, 3, 3), (4, 17, 2, 3, 4), (5, 11, 3, 2, 5)];
    let mut parts = Vec::new();
    for (n, p, q0, z0, e) in cases {
        let spec = Specialization::NumericPoint(NumericPoint::from_ints(p, q0, z0).unwrap());
        let v = brute_semisimple(n, &spec, SCAN_SEED).map_err(|x| x.to_string())?;
        ensure(v.e == Some(e), || format!("{spec}: e = {:?}, expected {e}", v.e))?;
        ensure(!v.observed && !v.predicted, || format!("n={n}, {spec}: reported semisimple"))?;
        parts.push(format!("n={n} e={e}"));
    }
    Ok(format!("not semisimple: {}", parts.join(", ")))
}

fn admissibility() -> Outcome {
    let mut hits = Vec::new();
    for n in 3..=4 {
        let b = alg(n);
        for label in labels(n).into_iter().filter(|l| l.f == 1) {
            let m = CellModule::new(&b, label.clone()).unwrap();
            let mu = &label.lambda;
            for a in 2 - 2 * n as i32..=n as i32 + 1 {
                let admissible: Vec<Partition> =
                    two_box_shapes(mu).into_iter().filter(|l| admissibility_exponent(l, mu).unwrap() == Some(a)).collect();
                let spec = Specialization::IntegerExponent(a);
                let corank = radical_dim(&m, &spec).unwrap();
                ensure((corank >= 1) == !admissible.is_empty(), || format!("{label} in B_{n}, a={a}: corank {corank}, admissible {admissible:?}"))?;
                if corank > 0 {
                    let found = radical_factor_shape(&m, &spec).unwrap();
                    ensure(found == RadicalFactors::Shapes(admissible.clone()), || format!("{label} in B_{n}, a={a}: radical {found:?}, admissible {admissible:?}"))?;
                    hits.push(format!("B_{n} {mu} a={a}->{}", admissible.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("+")));
                }
            }
        }
    }
    Ok(hits.join(", "))
}

fn v_form() -> Outcome {
    let mut dims = Vec::new();
    for n in 3..=4 {
        let v = VModule::new(&alg(n)).unwrap();
        let r = v.check().unwrap();
        ensure(r.holds, || format!("n={n}: {r:?}"))?;
        dims.push(r.dim);
    }
    Ok(format!("dim V = {dims:?} for n=3,4; form invariant, entries of the expected shape"))
}

fn classical() -> Outcome {
    for a in LIMIT_EXPONENTS {
        let (ok, total) = common::check_limits(3, a);
        ensure(ok == total && total == 225, || format!("a={a}: {ok}/{total} products"))?;
        let d = qbrauer::coefficients::classical_limit(&Ground::delta().to_coeff(), a).unwrap();
        ensure(d == num_rational::BigRational::from_integer(a.into()), || format!("delta tends to {d}, not {a}"))?;
    }
    Ok(format!("225 products of B_3 for each a in {LIMIT_EXPONENTS:?}; delta -> a"))
}

fn functor() -> Outcome {
    let mut count = 0;
    for n in 2..=5 {
        let b = alg(n);
        for label in labels(n) {
            let r = functor_f_check(&CellModule::new(&b, label.clone()).unwrap()).unwrap();
            ensure(r.holds, || format!("{label} in B_{n}: image {}, expected {}", r.image_dim, r.expected_dim))?;
            count += 1;
        }
    }
    Ok(format!("{count} labels, n=2..5"))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("rank and closure", rank_and_closure, "exact"),
        ("defining relations", relations, "exact"),
        ("oracle equivalence", oracle, "exact in F_1000003"),
        ("Jucys-Murphy suite", jm_suite, "exact"),
        ("cell module dimensions", dimensions, "exact"),
        ("restriction filtration", branching, "exact; spectra in F_(2^61-1)"),
        ("semisimplicity scan", semisimplicity_scan, "exact; zeros confirmed symbolically"),
        ("Hecke gate", hecke_gate, "exact in F_p"),
        ("admissibility and radicals", admissibility, "exact"),
        ("V-form", v_form, "exact"),
        ("classical limit", classical, "exact over Q"),
        ("corner functor", functor, "exact"),
    ];
    let mut failed = 0;
    for (i, (name, check, tol)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} [{tol}, {secs:.2}s]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{tol}, {secs:.2}s]: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
