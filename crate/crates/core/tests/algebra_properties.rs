//! Structural properties of the multiplication table.

use proptest::prelude::*;
use qbrauer::coefficients::Ground;
use qbrauer::combinatorics::Perm;
use qbrauer::hecke::HeckeElt;
use qbrauer::qbrauer::{AlgebraElt, Letter, NormalWord, QBrauer};

fn alg(n: usize) -> QBrauer {
    QBrauer::new(n).unwrap()
}

fn word(b: &QBrauer, i: usize) -> AlgebraElt<Ground> {
    AlgebraElt::word(b.basis()[i % b.dim()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sigma_reverses_products(x in 0usize..105, y in 0usize..105) {
        let b = alg(4);
        let (x, y) = (word(&b, x), word(&b, y));
        prop_assert_eq!(b.mul(&x, &y).unwrap().sigma(), b.mul(&y.sigma(), &x.sigma()).unwrap());
    }

    #[test]
    fn associative(x in 0usize..105, y in 0usize..105, z in 0usize..105) {
        let b = alg(4);
        let (x, y, z) = (word(&b, x), word(&b, y), word(&b, z));
        prop_assert_eq!(b.mul(&b.mul(&x, &y).unwrap(), &z).unwrap(), b.mul(&x, &b.mul(&y, &z).unwrap()).unwrap());
    }

    #[test]
    fn hecke_words_multiply_as_in_the_hecke_algebra(u in 0usize..24, v in 0usize..24) {
        let b = alg(4);
        let perms = Perm::all(4);
        let (u, v) = (perms[u], perms[v]);
        let id = Perm::identity(4);
        let lift = |w: Perm| AlgebraElt::<Ground>::word(NormalWord { f: 0, d1: id, w, d2: id });
        let h = HeckeElt::<Ground>::basis(4, 1, u).unwrap().mul(&HeckeElt::basis(4, 1, v).unwrap()).unwrap();
        let mut want = AlgebraElt::zero(4);
        for (w, c) in h.terms() {
            want = want.add(&lift(*w).scale(c)).unwrap();
        }
        prop_assert_eq!(b.mul(&lift(u), &lift(v)).unwrap(), want);
    }

    #[test]
    fn ideals_are_two_sided(x in 0usize..945, y in 0usize..945) {
        let b = alg(5);
        let (wx, wy) = (&b.basis()[x], &b.basis()[y]);
        let p = b.mul(&word(&b, x), &word(&b, y)).unwrap();
        let floor = wx.f.max(wy.f);
        prop_assert!(p.terms().keys().all(|w| w.f >= floor));
    }

    #[test]
    fn corner_embedding_is_multiplicative(x in 0usize..3, y in 0usize..3) {
        let (small, big) = (alg(2), alg(4));
        let (x, y) = (word(&small, x), word(&small, y));
        let lhs = big.phi_embed(&small.mul(&x, &y).unwrap()).unwrap();
        let rhs = big.mul(&big.phi_embed(&x).unwrap(), &big.phi_embed(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jm_elements_commute(i in 1usize..=4, j in 1usize..=4) {
        let b = alg(4);
        let (li, lj) = (b.jm::<Ground>(i).unwrap(), b.jm::<Ground>(j).unwrap());
        prop_assert_eq!(b.mul(&li, &lj).unwrap(), b.mul(&lj, &li).unwrap());
    }
}

#[test]
fn corner_idempotent_and_e_squares() {
    for n in 3..=5 {
        let b = alg(n);
        let t = b.tilde_e1::<Ground>().unwrap();
        assert_eq!(b.mul(&t, &t).unwrap(), t);
        assert_eq!(b.phi_embed(&alg(n - 2).one::<Ground>()).unwrap(), t);
    }
    for n in 2..=5 {
        let b = alg(n);
        for l in 1..n {
            let e = b.e_index::<Ground>(l).unwrap();
            assert_eq!(b.mul(&e, &e).unwrap(), e.scale(&Ground::delta()), "E_{l} in B_{n}");
        }
    }
}

#[test]
fn jm_definitions_agree() {
    for n in 2..=5 {
        let b = alg(n);
        for i in 1..=n {
            assert_eq!(b.jm::<Ground>(i).unwrap(), b.jm_recursive::<Ground>(i).unwrap());
        }
    }
}

#[test]
fn jm_sum_is_not_central_in_rank_four() {
    let b = alg(4);
    let mut s = b.zero::<Ground>();
    for i in 1..=4 {
        s = s.add(&b.jm(i).unwrap()).unwrap();
    }
    let witnesses: Vec<Letter> = [Letter::E, Letter::T(1), Letter::T(2), Letter::T(3)]
        .into_iter()
        .filter(|&g| b.right_mul_gen(&s, g).unwrap() != b.left_mul_gen(g, &s).unwrap())
        .collect();
    assert!(!witnesses.is_empty());
    for n in 2..=3 {
        let b = alg(n);
        let mut s = b.zero::<Ground>();
        for i in 1..=n {
            s = s.add(&b.jm(i).unwrap()).unwrap();
        }
        let mut gens: Vec<Letter> = (1..n).map(Letter::T).collect();
        gens.push(Letter::E);
        let central = gens.iter().all(|&g| b.right_mul_gen(&s, g).unwrap() == b.left_mul_gen(g, &s).unwrap());
        println!("B_{n}: sum of JM elements central: {central}");
    }
}
