//! The q-Brauer algebra `B_n(q, z)`: normal-form basis, multiplication table,
//! the anti-involution `σ`, Jucys-Murphy elements and the corner embedding of `B_{n-2}`.

mod cache;
mod elt;
mod engine;
pub mod oracle;
mod sparse;
mod word;

pub use elt::{ideal_truncate, sigma, AlgebraElt};
pub use engine::MulTable;
pub use sparse::Sparse;
pub use word::{e_power_letters, parse_letters, Letter, NormalWord};

use crate::coefficients::{Ground, Ring};
use crate::error::{Error, Result};
use engine::Engine;
use std::collections::HashMap;
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};

/// Largest rank with a supported table build.
pub const MAX_RANK: usize = 7;

fn registry() -> &'static Mutex<HashMap<usize, Arc<Engine>>> {
    static REG: OnceLock<Mutex<HashMap<usize, Arc<Engine>>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

fn engine(n: usize, cache_dir: Option<&Path>) -> Result<Arc<Engine>> {
    if n > MAX_RANK {
        return Err(Error::InvalidInput(format!("rank {n} exceeds the supported maximum {MAX_RANK}")));
    }
    if let Some(e) = registry().lock().unwrap().get(&n) {
        return Ok(e.clone());
    }
    let sub = if n >= 2 { Some(engine(n - 2, cache_dir)?) } else { None };
    let built = match cache_dir.and_then(|d| cache::load(d, n, sub.clone()).transpose()) {
        Some(e) => e?,
        None => {
            let e = Engine::build(n, sub)?;
            if let Some(d) = cache_dir {
                cache::store(d, &e)?;
            }
            e
        }
    };
    // single writer: a racing builder for the same rank yields an identical table
    let mut reg = registry().lock().unwrap();
    Ok(reg.entry(n).or_insert_with(|| Arc::new(built)).clone())
}

/// Outcome of one defining relation checked on the regular representation.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
    /// Basis words `x` with `x·lhs ≠ x·rhs`.
    pub failures: usize,
}

/// Handle to the sealed multiplication table of `B_n`.
#[derive(Clone)]
pub struct QBrauer {
    e: Arc<Engine>,
}

impl std::fmt::Debug for QBrauer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QBrauer(n={}, dim={})", self.n(), self.dim())
    }
}

impl QBrauer {
    pub fn new(n: usize) -> Result<QBrauer> {
        Ok(QBrauer { e: engine(n, None)? })
    }

    /// Like [`QBrauer::new`], reading and writing table files under `dir`.
    pub fn with_cache(n: usize, dir: &Path) -> Result<QBrauer> {
        Ok(QBrauer { e: engine(n, Some(dir))? })
    }

    pub fn n(&self) -> usize {
        self.e.n
    }

    pub fn dim(&self) -> usize {
        self.e.dim()
    }

    /// Normal words, grouped by deficiency.
    pub fn basis(&self) -> &[NormalWord] {
        &self.e.words
    }

    pub fn index_of(&self, w: &NormalWord) -> Option<usize> {
        self.e.word_index.get(w).map(|&i| i as usize)
    }

    pub fn table(&self) -> &MulTable {
        &self.e.table
    }

    /// The algebra of rank `n - 2`.
    pub fn sub(&self) -> Option<QBrauer> {
        self.e.sub.clone().map(|e| QBrauer { e })
    }

    pub fn to_sparse<R: Ring>(&self, a: &AlgebraElt<R>) -> Result<Sparse<R>> {
        self.check_rank(a)?;
        a.terms()
            .iter()
            .map(|(w, c)| {
                let i = self.e.word_index.get(w).ok_or_else(|| Error::InvalidInput(format!("{w} is not a normal word")))?;
                Ok((*i, c.clone()))
            })
            .collect::<Result<Vec<_>>>()
            .map(|mut v| {
                v.sort_by_key(|t| t.0);
                v
            })
    }

    pub fn from_sparse<R: Ring>(&self, v: &[(u32, R)]) -> AlgebraElt<R> {
        let mut a = AlgebraElt::zero(self.n());
        for (i, c) in v {
            a.add_term(self.e.words[*i as usize], c.clone());
        }
        a
    }

    fn check_rank<R: Ring>(&self, a: &AlgebraElt<R>) -> Result<()> {
        if a.n() != self.n() {
            return Err(Error::InvalidInput(format!("element of rank {} used in B_{}", a.n(), self.n())));
        }
        Ok(())
    }

    pub fn one<R: Ring>(&self) -> AlgebraElt<R> {
        AlgebraElt::word(NormalWord::identity(self.n()))
    }

    pub fn zero<R: Ring>(&self) -> AlgebraElt<R> {
        AlgebraElt::zero(self.n())
    }

    pub fn generator_elt<R: Ring>(&self, g: Letter) -> Result<AlgebraElt<R>> {
        self.product(&[g])
    }

    /// Product of letters, left to right.
    pub fn product<R: Ring>(&self, letters: &[Letter]) -> Result<AlgebraElt<R>> {
        for l in letters {
            l.check(self.n())?;
        }
        let v = vec![(self.e.identity_index(), R::one())];
        Ok(self.from_sparse(&self.e.right_letters(&v, letters)))
    }

    pub fn right_mul_gen<R: Ring>(&self, x: &AlgebraElt<R>, g: Letter) -> Result<AlgebraElt<R>> {
        g.check(self.n())?;
        Ok(self.from_sparse(&self.e.right_letter(&self.to_sparse(x)?, g)))
    }

    /// `g · x`, computed as `σ(σ(x)·g)`.
    pub fn left_mul_gen<R: Ring>(&self, g: Letter, x: &AlgebraElt<R>) -> Result<AlgebraElt<R>> {
        Ok(self.right_mul_gen(&x.sigma(), g)?.sigma())
    }

    pub fn mul<R: Ring>(&self, a: &AlgebraElt<R>, b: &AlgebraElt<R>) -> Result<AlgebraElt<R>> {
        let (va, vb) = (self.to_sparse(a)?, self.to_sparse(b)?);
        Ok(self.from_sparse(&self.e.mul(&va, &vb)))
    }

    /// Product in index form, for hot loops.
    pub fn mul_sparse<R: Ring>(&self, a: &[(u32, R)], b: &[(u32, R)]) -> Sparse<R> {
        self.e.mul(a, b)
    }

    pub fn right_letter_sparse<R: Ring>(&self, v: &[(u32, R)], g: Letter) -> Sparse<R> {
        self.e.right_letter(v, g)
    }

    /// `E^k`, with `E^0 = 1`.
    pub fn e_power<R: Ring>(&self, k: usize) -> Result<AlgebraElt<R>> {
        if 2 * k > self.n() {
            return Err(Error::InvalidInput(format!("E^{k} needs n >= {}, got n={}", 2 * k, self.n())));
        }
        let e = crate::combinatorics::Perm::identity(self.n());
        Ok(AlgebraElt::word(NormalWord { f: k, d1: e, w: e, d2: e }))
    }

    /// `E_ℓ = T_{ℓ,1} T_{2,ℓ+1}^-1 E_1 T_{2,ℓ+1} T_{ℓ,1}^-1` for `1 ≤ ℓ < n`.
    pub fn e_index<R: Ring>(&self, l: usize) -> Result<AlgebraElt<R>> {
        if l == 0 || l >= self.n() {
            return Err(Error::InvalidInput(format!("E_{l} needs 1 <= l < n={}", self.n())));
        }
        let mut w: Vec<Letter> = (1..l).rev().map(Letter::T).collect();
        w.extend((2..=l).rev().map(Letter::TInv));
        w.push(Letter::E);
        w.extend((2..=l).map(Letter::T));
        w.extend((1..l).map(Letter::TInv));
        self.product(&w)
    }

    /// The idempotent `q z^-1 T_1^-1 T_2 E_1` (needs `n ≥ 3`).
    pub fn tilde_e1<R: Ring>(&self) -> Result<AlgebraElt<R>> {
        if self.n() < 3 {
            return Err(Error::InvalidInput(format!("the corner idempotent needs n >= 3, got n={}", self.n())));
        }
        let x = self.product::<R>(&[Letter::TInv(1), Letter::T(2), Letter::E])?;
        Ok(x.scale(&R::monomial(1, 1, -1)))
    }

    /// Transposition `(j, i) = T_j ⋯ T_{i-2} T_{i-1} T_{i-2} ⋯ T_j` for `j < i`.
    pub fn transposition<R: Ring>(&self, j: usize, i: usize) -> Result<AlgebraElt<R>> {
        if j == 0 || j >= i || i > self.n() {
            return Err(Error::InvalidInput(format!("({j},{i}) needs 1 <= j < i <= n={}", self.n())));
        }
        let mut w: Vec<Letter> = (j..i).map(Letter::T).collect();
        w.extend((j..i - 1).rev().map(Letter::T));
        self.product(&w)
    }

    /// `E_{j,i} = T_{1,j}^-1 T_{i,2} E_1 T_{2,i} T_{j,1}^-1` for `j < i`.
    pub fn e_pair<R: Ring>(&self, j: usize, i: usize) -> Result<AlgebraElt<R>> {
        if j == 0 || j >= i || i > self.n() {
            return Err(Error::InvalidInput(format!("E_({j},{i}) needs 1 <= j < i <= n={}", self.n())));
        }
        let mut w: Vec<Letter> = (1..j).rev().map(Letter::TInv).collect();
        w.extend((2..i).rev().map(Letter::T));
        w.push(Letter::E);
        w.extend((2..i).map(Letter::T));
        w.extend((1..j).map(Letter::TInv));
        self.product(&w)
    }

    /// Jucys-Murphy element `L_i` from the direct sum over `j < i`.
    pub fn jm<R: Ring>(&self, i: usize) -> Result<AlgebraElt<R>> {
        if i == 0 || i > self.n() {
            return Err(Error::InvalidInput(format!("L_{i} needs 1 <= i <= n={}", self.n())));
        }
        let k = R::monomial(-1, 2, -1);
        let mut acc = self.zero::<R>();
        for j in 1..i {
            acc = acc.add(&self.transposition(j, i)?)?;
            acc = acc.add(&self.e_pair::<R>(j, i)?.scale(&k))?;
        }
        Ok(acc)
    }

    /// `L_i` from `L_i = T_{i-1} L_{i-1} T_{i-1} + T_{i-1} - q^2 z^-1 E_{i-1,i}`.
    pub fn jm_recursive<R: Ring>(&self, i: usize) -> Result<AlgebraElt<R>> {
        if i == 0 || i > self.n() {
            return Err(Error::InvalidInput(format!("L_{i} needs 1 <= i <= n={}", self.n())));
        }
        let mut l = self.zero::<R>();
        for m in 2..=i {
            let t = Letter::T(m - 1);
            let conj = self.left_mul_gen(t, &self.right_mul_gen(&l, t)?)?;
            let e = self.e_pair::<R>(m - 1, m)?.scale(&R::monomial(-1, 2, -1));
            l = conj.add(&self.generator_elt(t)?)?.add(&e)?;
        }
        Ok(l)
    }

    /// Corner embedding `B_{n-2} → Ẽ_1 B_n Ẽ_1`: `1 ↦ Ẽ_1`, `E_1 ↦ Ẽ_1 E_3`, `T_i ↦ Ẽ_1 T_{i+2}`.
    pub fn phi_embed<R: Ring>(&self, x: &AlgebraElt<R>) -> Result<AlgebraElt<R>> {
        if self.n() < 3 || x.n() + 2 != self.n() {
            return Err(Error::InvalidInput(format!("cannot embed rank {} into B_{}", x.n(), self.n())));
        }
        let sub = self.sub().expect("rank >= 2 has a subalgebra");
        let base = self.to_sparse(&self.tilde_e1::<R>()?)?;
        let e3 = if self.n() >= 4 { Some(self.to_sparse(&self.e_index::<R>(3)?)?) } else { None };
        let mut acc = sparse::Acc::new();
        for (w, c) in sub.to_sparse(x)? {
            let mut v = base.clone();
            for l in &sub.e.letters[w as usize] {
                v = match *l {
                    Letter::T(i) => self.e.right_letter(&v, Letter::T(i + 2)),
                    Letter::TInv(i) => self.e.right_letter(&v, Letter::TInv(i + 2)),
                    Letter::E => self.e.mul(&v, e3.as_ref().expect("B_{n-2} has E_1 only when n >= 4")),
                };
            }
            acc.add_scaled(&v, &c);
        }
        Ok(self.from_sparse(&acc.finish()))
    }

    /// Checks every defining relation as an identity of right multiplication operators
    /// on the regular representation.
    pub fn verify_relations(&self) -> Vec<RelationCheck> {
        relations(self.n())
            .into_iter()
            .map(|(name, lhs, rhs)| {
                let failures = (0..self.dim() as u32)
                    .filter(|&x| {
                        let v = vec![(x, Ground::one())];
                        self.apply_side(&v, &lhs) != self.apply_side(&v, &rhs)
                    })
                    .count();
                RelationCheck { name, holds: failures == 0, failures }
            })
            .collect()
    }

    fn apply_side(&self, v: &[(u32, Ground)], side: &Side) -> Sparse {
        let mut acc = sparse::Acc::new();
        for (c, w) in side {
            acc.add_scaled(&self.e.right_letters(v, w), c);
        }
        acc.finish()
    }

    /// `1 · letters(x) = x` for every basis word.
    pub fn check_word_consistency(&self) -> Result<()> {
        for (x, w) in self.e.words.iter().enumerate() {
            let got = self.e.right_letters(&[(self.e.identity_index(), Ground::one())], &self.e.letters[x]);
            if got != vec![(x as u32, Ground::one())] {
                return Err(Error::Verification(format!("letters of {w} multiply to {}", self.from_sparse(&got))));
            }
        }
        Ok(())
    }
}

type Side = Vec<(Ground, Vec<Letter>)>;

fn relations(n: usize) -> Vec<(String, Side, Side)> {
    use Letter::*;
    let one = Ground::one;
    let mut out: Vec<(String, Side, Side)> = Vec::new();
    for i in 1..n {
        out.push((format!("T{i}^2 = 1 + (q-q^-1)T{i}"), vec![(one(), vec![T(i), T(i)])], vec![(one(), vec![]), (Ground::qdiff(), vec![T(i)])]));
        out.push((format!("T{i} T{i}^-1 = 1"), vec![(one(), vec![T(i), TInv(i)])], vec![(one(), vec![])]));
        out.push((format!("T{i}^-1 T{i} = 1"), vec![(one(), vec![TInv(i), T(i)])], vec![(one(), vec![])]));
        if i + 1 < n {
            let j = i + 1;
            out.push((format!("T{i} T{j} T{i} = T{j} T{i} T{j}"), vec![(one(), vec![T(i), T(j), T(i)])], vec![(one(), vec![T(j), T(i), T(j)])]));
        }
        for j in i + 2..n {
            out.push((format!("T{i} T{j} = T{j} T{i}"), vec![(one(), vec![T(i), T(j)])], vec![(one(), vec![T(j), T(i)])]));
        }
    }
    if n >= 2 {
        out.push(("E1^2 = delta E1".into(), vec![(one(), vec![E, E])], vec![(Ground::delta(), vec![E])]));
        out.push(("T1 E1 = q E1".into(), vec![(one(), vec![T(1), E])], vec![(Ground::q(), vec![E])]));
        out.push(("E1 T1 = q E1".into(), vec![(one(), vec![E, T(1)])], vec![(Ground::q(), vec![E])]));
    }
    if n >= 3 {
        out.push(("E1 T2 E1 = z E1".into(), vec![(one(), vec![E, T(2), E])], vec![(Ground::z(), vec![E])]));
        out.push(("E1 T2^-1 E1 = z^-1 E1".into(), vec![(one(), vec![E, TInv(2), E])], vec![(Ground::monomial(1, 0, -1), vec![E])]));
    }
    for i in 3..n {
        out.push((format!("T{i} E1 = E1 T{i}"), vec![(one(), vec![T(i), E])], vec![(one(), vec![E, T(i)])]));
    }
    if n >= 4 {
        let b = vec![T(2), T(3), TInv(1), TInv(2)];
        let e2: Vec<Letter> = [vec![E], b.clone(), vec![E]].concat();
        let left: Vec<Letter> = [b.clone(), e2.clone()].concat();
        let right: Vec<Letter> = [e2.clone(), b].concat();
        out.push(("b E(2) = E(2)".into(), vec![(one(), left)], vec![(one(), e2.clone())]));
        out.push(("E(2) b = E(2)".into(), vec![(one(), right)], vec![(one(), e2)]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        for (n, d) in [(0, 1), (1, 1), (2, 3), (3, 15), (4, 105)] {
            assert_eq!(QBrauer::new(n).unwrap().dim(), d);
        }
    }

    #[test]
    fn small_products() {
        let b = QBrauer::new(3).unwrap();
        let e1 = b.generator_elt::<Ground>(Letter::E).unwrap();
        assert_eq!(b.mul(&e1, &e1).unwrap(), e1.scale(&Ground::delta()));
        assert_eq!(b.right_mul_gen(&e1, Letter::T(1)).unwrap(), e1.scale(&Ground::q()));
        assert_eq!(b.product::<Ground>(&[Letter::E, Letter::T(2), Letter::E]).unwrap(), e1.scale(&Ground::z()));
        assert_eq!(e1, b.e_power(1).unwrap());
    }

    #[test]
    fn relations_small() {
        for n in 2..=4 {
            let b = QBrauer::new(n).unwrap();
            b.check_word_consistency().unwrap();
            for r in b.verify_relations() {
                assert!(r.holds, "n={n}: {} fails on {} words", r.name, r.failures);
            }
        }
    }

    #[test]
    fn jm_two() {
        let b = QBrauer::new(3).unwrap();
        let l2 = b.jm::<Ground>(2).unwrap();
        let want = b.generator_elt::<Ground>(Letter::T(1)).unwrap().add(&b.generator_elt::<Ground>(Letter::E).unwrap().scale(&Ground::monomial(-1, 2, -1))).unwrap();
        assert_eq!(l2, want);
        assert!(b.jm::<Ground>(1).unwrap().is_zero());
        assert_eq!(b.jm::<Ground>(3).unwrap(), b.jm_recursive::<Ground>(3).unwrap());
    }
}
