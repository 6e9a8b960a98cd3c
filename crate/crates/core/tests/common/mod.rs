//! Test oracles shared by the integration suites.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use qbrauer::coefficients::{classical_limit, Ground};
use qbrauer::qbrauer::{Letter, QBrauer};
use std::collections::{BTreeMap, BTreeSet};

/// A Brauer diagram on `2n` points: top `i` is point `i`, bottom `i` is point `n + i`
/// (0-based); `pair[p]` is the partner of `p`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Diagram {
    n: usize,
    pair: Vec<usize>,
}

impl Diagram {
    pub fn identity(n: usize) -> Diagram {
        let pair = (0..2 * n).map(|p| if p < n { p + n } else { p - n }).collect();
        Diagram { n, pair }
    }

    /// Crossing of strands `i` and `i + 1` (1-based).
    pub fn s(n: usize, i: usize) -> Diagram {
        let mut d = Diagram::identity(n);
        let (a, b) = (i - 1, i);
        d.pair[a] = n + b;
        d.pair[n + b] = a;
        d.pair[b] = n + a;
        d.pair[n + a] = b;
        d
    }

    /// Cap on top points `i, i + 1` and cup on the bottom ones (1-based).
    pub fn e(n: usize, i: usize) -> Diagram {
        let mut d = Diagram::identity(n);
        let (a, b) = (i - 1, i);
        d.pair[a] = b;
        d.pair[b] = a;
        d.pair[n + a] = n + b;
        d.pair[n + b] = n + a;
        d
    }

    /// `self` stacked above `o`, with the number of closed loops formed in the middle.
    pub fn compose(&self, o: &Diagram) -> (Diagram, usize) {
        let n = self.n;
        // Points: self 0..2n, o 2n..4n. Middle row: self bottom n+j glued to o top j.
        let partner = |p: usize| if p < 2 * n { self.pair[p] } else { 2 * n + o.pair[p - 2 * n] };
        let glue = |p: usize| -> Option<usize> {
            if (n..2 * n).contains(&p) {
                Some(2 * n + (p - n))
            } else if (2 * n..3 * n).contains(&p) {
                Some(p - 2 * n + n)
            } else {
                None
            }
        };
        let outer = |p: usize| -> usize { if p < n { p } else { p - 2 * n } };
        let mut visited = vec![false; 4 * n];
        let mut pair = vec![usize::MAX; 2 * n];
        for start in (0..n).chain(3 * n..4 * n) {
            if visited[start] {
                continue;
            }
            let mut p = start;
            loop {
                visited[p] = true;
                let q = partner(p);
                visited[q] = true;
                match glue(q) {
                    Some(r) => p = r,
                    None => {
                        pair[outer(start)] = outer(q);
                        pair[outer(q)] = outer(start);
                        break;
                    }
                }
            }
        }
        let mut loops = 0;
        for start in n..2 * n {
            if visited[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            while !visited[p] {
                visited[p] = true;
                let q = partner(p);
                visited[q] = true;
                p = glue(q).expect("middle points are glued");
            }
        }
        (Diagram { n, pair }, loops)
    }

    /// Product of letters at `q = 1`, where `T_i^±1` become crossings.
    pub fn of_letters(n: usize, letters: &[Letter]) -> (Diagram, usize) {
        let mut d = Diagram::identity(n);
        let mut loops = 0;
        for l in letters {
            let g = match *l {
                Letter::T(i) | Letter::TInv(i) => Diagram::s(n, i),
                Letter::E => Diagram::e(n, 1),
            };
            let (next, k) = d.compose(&g);
            d = next;
            loops += k;
        }
        (d, loops)
    }
}

/// Linear combination of diagrams over `Q`.
pub type DiagramSum = BTreeMap<Diagram, BigRational>;

pub fn add_term(acc: &mut DiagramSum, d: Diagram, c: BigRational) {
    let e = acc.entry(d.clone()).or_insert_with(|| BigRational::from_integer(BigInt::from(0)));
    *e += c;
    if *e == BigRational::from_integer(BigInt::from(0)) {
        acc.remove(&d);
    }
}

/// Number of basis products whose limit matches the diagram product.
pub fn check_limits(n: usize, a: i32) -> (usize, usize) {
    let alg = QBrauer::new(n).unwrap();
    let diagrams: Vec<Diagram> = alg
        .basis()
        .iter()
        .map(|w| {
            let (d, loops) = Diagram::of_letters(n, &w.letters());
            assert_eq!(loops, 0, "basis word {w} closes a loop");
            d
        })
        .collect();
    assert_eq!(diagrams.iter().collect::<BTreeSet<_>>().len(), alg.dim(), "basis words give distinct diagrams");
    let mut ok = 0;
    let mut total = 0;
    for (x, dx) in diagrams.iter().enumerate() {
        for (y, dy) in diagrams.iter().enumerate() {
            let prod = alg.mul_sparse(&[(x as u32, Ground::one())], &[(y as u32, Ground::one())]);
            let mut got = DiagramSum::new();
            for (w, c) in prod {
                add_term(&mut got, diagrams[w as usize].clone(), classical_limit(&c.to_coeff(), a).unwrap());
            }
            let (d, loops) = dx.compose(dy);
            let mut want = DiagramSum::new();
            add_term(&mut want, d, BigRational::from_integer(BigInt::from(a).pow(loops as u32)));
            total += 1;
            ok += usize::from(got == want);
        }
    }
    (ok, total)
}

#[test]
fn diagram_relations() {
    let n = 3;
    let e = Diagram::e(n, 1);
    let (ee, loops) = e.compose(&e);
    assert_eq!((ee, loops), (e.clone(), 1));
    let (ese, loops) = Diagram::of_letters(n, &[Letter::E, Letter::T(2), Letter::E]);
    assert_eq!((ese, loops), (e, 0));
    let (ss, _) = Diagram::s(n, 1).compose(&Diagram::s(n, 1));
    assert_eq!(ss, Diagram::identity(n));
}
