//! Cell modules: module axioms, the invariant form and small worked cases.

use qbrauer::cellular::{linalg, CellModule};
use qbrauer::coefficients::Ground;
use qbrauer::combinatorics::{labels, updown_tableaux, CellLabel, Partition};
use qbrauer::qbrauer::{Letter, QBrauer};

type M = linalg::Matrix<Ground>;

fn mm(a: &M, b: &M) -> M {
    linalg::ring_mat_mul(a, b)
}

fn scaled(a: &M, c: &Ground) -> M {
    a.iter().map(|r| r.iter().map(|x| x.mul(c)).collect()).collect()
}

fn plus(a: &M, b: &M) -> M {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.add(y)).collect()).collect()
}

/// Every defining relation, as identities between right-action matrices.
fn check_axioms(m: &CellModule) {
    let n = m.n();
    let d = m.dim();
    let id: M = (0..d).map(|i| (0..d).map(|j| if i == j { Ground::one() } else { Ground::zero() }).collect()).collect();
    let t: Vec<M> = (1..n).map(|i| m.act(Letter::T(i)).unwrap()).collect();
    let ti: Vec<M> = (1..n).map(|i| m.act(Letter::TInv(i)).unwrap()).collect();
    let label = m.label();
    for i in 0..n.saturating_sub(1) {
        assert_eq!(mm(&t[i], &t[i]), plus(&id, &scaled(&t[i], &Ground::qdiff())), "{label}: quadratic T{}", i + 1);
        assert_eq!(mm(&t[i], &ti[i]), id, "{label}: inverse T{}", i + 1);
        if i + 1 < t.len() {
            assert_eq!(mm(&mm(&t[i], &t[i + 1]), &t[i]), mm(&mm(&t[i + 1], &t[i]), &t[i + 1]), "{label}: braid");
        }
        for j in i + 2..t.len() {
            assert_eq!(mm(&t[i], &t[j]), mm(&t[j], &t[i]), "{label}: far commutation");
        }
    }
    if n < 2 {
        return;
    }
    let e = m.act(Letter::E).unwrap();
    assert_eq!(mm(&e, &e), scaled(&e, &Ground::delta()), "{label}: E^2");
    assert_eq!(mm(&t[0], &e), scaled(&e, &Ground::q()), "{label}: T1 E");
    assert_eq!(mm(&e, &t[0]), scaled(&e, &Ground::q()), "{label}: E T1");
    if n >= 3 {
        assert_eq!(mm(&mm(&e, &t[1]), &e), scaled(&e, &Ground::z()), "{label}: E T2 E");
    }
    for i in 3..n {
        assert_eq!(mm(&t[i - 1], &e), mm(&e, &t[i - 1]), "{label}: T{i} E");
    }
    if n >= 4 {
        let b = mm(&mm(&mm(&t[1], &t[2]), &ti[0]), &ti[1]);
        let e2 = mm(&mm(&e, &b), &e);
        assert_eq!(mm(&b, &e2), e2, "{label}: b E(2)");
        assert_eq!(mm(&e2, &b), e2, "{label}: E(2) b");
    }
}

#[test]
fn module_axioms_up_to_five() {
    for n in 1..=5 {
        let alg = QBrauer::new(n).unwrap();
        for label in labels(n) {
            check_axioms(&CellModule::new(&alg, label).unwrap());
        }
    }
}

#[test]
fn gram_is_symmetric_and_invariant() {
    for n in 2..=4 {
        let alg = QBrauer::new(n).unwrap();
        for label in labels(n) {
            let m = CellModule::new(&alg, label.clone()).unwrap();
            let g = m.gram().unwrap();
            assert_eq!(g, linalg::transpose(&g), "{label}");
            let mut gens: Vec<Letter> = (1..n).map(Letter::T).collect();
            gens.push(Letter::E);
            for l in gens {
                // σ fixes the generators, so ⟨x·g, y⟩ = ⟨x, y·g⟩.
                let a = m.act(l).unwrap();
                assert_eq!(mm(&a, &g), mm(&g, &linalg::transpose(&a)), "{label}, {l}");
            }
        }
    }
}

#[test]
fn dimensions_match_updown_counts() {
    for n in 1..=6 {
        for label in labels(n) {
            assert_eq!(label.dimension(), updown_tableaux(n, &label.lambda).unwrap().len(), "{label}");
        }
    }
    for n in 1..=5 {
        let alg = QBrauer::new(n).unwrap();
        for label in labels(n) {
            assert_eq!(CellModule::new(&alg, label.clone()).unwrap().dim(), label.dimension());
        }
    }
}

#[test]
fn hecke_layer_has_no_e_action() {
    let alg = QBrauer::new(4).unwrap();
    for label in labels(4).into_iter().filter(|l| l.f == 0) {
        let m = CellModule::new(&alg, label.clone()).unwrap();
        assert!(m.act(Letter::E).unwrap().iter().flatten().all(|x| x.is_zero()), "{label}");
    }
}

#[test]
fn t1_absorbs_into_e_on_rank_four() {
    let alg = QBrauer::new(4).unwrap();
    for label in labels(4) {
        let m = CellModule::new(&alg, label).unwrap();
        let (t, e) = (m.act(Letter::T(1)).unwrap(), m.act(Letter::E).unwrap());
        assert_eq!(mm(&t, &e), scaled(&e, &Ground::q()));
    }
}

#[test]
fn worked_dimensions() {
    let p = |s: &str| -> Partition { s.parse().unwrap() };
    let cases = [(2, 1, Partition::empty(), 1), (4, 1, p("2"), 6), (3, 0, p("2,1"), 2)];
    for (n, f, lambda, d) in cases {
        let alg = QBrauer::new(n).unwrap();
        assert_eq!(CellModule::new(&alg, CellLabel::new(f, lambda)).unwrap().dim(), d);
    }
}
