//! Construction of the multiplication table on normal words.
//!
//! Three ingredients, each computed once per `n`:
//!
//! * `E^f T_u` for every `u ∈ S_n`, rewritten as `Σ E^f T_w T_d` by peeling
//!   left descents: a flip `s_{2k-1}` contributes `q`, a swap of two arcs is
//!   absorbed up to shorter Hecke terms.
//! * `E_1 T_u E_1 = E_1 · shift(Z(u))` with `Z(u)` in the algebra of rank
//!   `n - 2`, found by stripping descents down to one of three double coset
//!   representatives.
//! * `E^f T_u E_1 = lift(E^{f-1} · Z(u))`, computed in the rank `n - 2` table.

use super::sparse::{Acc, Sparse};
use super::word::{Letter, NormalWord};
use crate::coefficients::{Ground, Ring};
use crate::combinatorics::{coset_reps_d, Perm};
use crate::error::{Error, Result};
use crate::hecke::HeckeElt;
use std::collections::HashMap;
use std::sync::Arc;

/// Words sharing one deficiency `f`.
pub(crate) struct Layer {
    pub f: usize,
    pub d: Vec<Perm>,
    pub d_index: HashMap<Perm, usize>,
    pub w: Vec<Perm>,
    pub w_index: HashMap<Perm, usize>,
    pub offset: usize,
    /// `E^f T_u = Σ c · E^f T_w T_d`, keyed by symmetric-group index of `u`,
    /// entries `(w_idx·|D| + d_idx, c)`.
    pub a: Vec<Sparse>,
}

impl Layer {
    pub fn tail_count(&self) -> usize {
        self.w.len() * self.d.len()
    }

    pub fn word_index(&self, d1: usize, tail: u32) -> u32 {
        (self.offset + d1 * self.tail_count()) as u32 + tail
    }
}

/// The sealed right regular representation on generators.
pub struct MulTable {
    /// `right_t[i-1][x]` is `x · T_i`.
    pub right_t: Vec<Vec<Sparse>>,
    /// `right_e[x]` is `x · E_1` (empty when `n < 2`).
    pub right_e: Vec<Sparse>,
}

pub(crate) struct Engine {
    pub n: usize,
    pub sym: Vec<Perm>,
    pub sym_index: HashMap<Perm, u32>,
    pub layers: Vec<Layer>,
    pub words: Vec<NormalWord>,
    pub word_index: HashMap<NormalWord, u32>,
    pub sigma: Vec<u32>,
    pub letters: Vec<Vec<Letter>>,
    pub table: MulTable,
    pub sub: Option<Arc<Engine>>,
}

fn stuck(msg: String) -> Error {
    Error::Verification(format!("stuck word: {msg}"))
}

impl Engine {
    pub fn build(n: usize, sub: Option<Arc<Engine>>) -> Result<Engine> {
        let mut e = Engine::skeleton(n, sub)?;
        e.table.right_t = (1..n).map(|i| e.build_right_t(i)).collect::<Result<_>>()?;
        if n >= 2 {
            e.table.right_e = e.build_right_e()?;
        }
        Ok(e)
    }

    /// Everything except the multiplication table.
    pub fn skeleton(n: usize, sub: Option<Arc<Engine>>) -> Result<Engine> {
        if n >= 2 && sub.as_ref().map(|s| s.n) != Some(n - 2) {
            return Err(Error::InvalidInput(format!("rank {n} needs the rank {} engine", n.saturating_sub(2))));
        }
        let sym = Perm::all(n);
        let sym_index: HashMap<Perm, u32> = sym.iter().enumerate().map(|(i, p)| (*p, i as u32)).collect();
        let mut layers = Vec::new();
        let mut words = Vec::new();
        for f in 0..=n / 2 {
            let d: Vec<Perm> = coset_reps_d(f, n)?.into_iter().map(|r| r.perm).collect();
            let w: Vec<Perm> = sym.iter().filter(|p| p.fixes_first(2 * f)).copied().collect();
            for x in &w {
                for y in &d {
                    if x.mul(y).length() != x.length() + y.length() {
                        return Err(Error::Verification(format!("T_{x} T_{y} is not a basis element")));
                    }
                }
            }
            let mut layer = Layer {
                f,
                d_index: d.iter().enumerate().map(|(i, p)| (*p, i)).collect(),
                w_index: w.iter().enumerate().map(|(i, p)| (*p, i)).collect(),
                d,
                w,
                offset: words.len(),
                a: vec![],
            };
            for d1 in &layer.d {
                for w in &layer.w {
                    for d2 in &layer.d {
                        words.push(NormalWord { f, d1: *d1, w: *w, d2: *d2 });
                    }
                }
            }
            layer.a = a_table(&layer, n, &sym, &sym_index)?;
            layers.push(layer);
        }
        let word_index: HashMap<NormalWord, u32> = words.iter().enumerate().map(|(i, w)| (*w, i as u32)).collect();
        let sigma = words.iter().map(|w| word_index[&w.sigma()]).collect();
        let letters = words.iter().map(|w| w.letters()).collect();
        Ok(Engine { n, sym, sym_index, layers, words, word_index, sigma, letters, table: MulTable { right_t: vec![], right_e: vec![] }, sub })
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    fn split(&self, x: u32) -> (usize, usize, Perm, Perm) {
        let word = &self.words[x as usize];
        let layer = &self.layers[word.f];
        (word.f, layer.d_index[&word.d1], word.w, word.d2)
    }

    /// `E^f T_u` re-indexed with prefix `d1`.
    fn e_t(&self, f: usize, d1: usize, u: &Perm, k: &Ground, acc: &mut Acc<Ground>) {
        let layer = &self.layers[f];
        for (tail, c) in &layer.a[self.sym_index[u] as usize] {
            acc.add(layer.word_index(d1, *tail), c.mul(k));
        }
    }

    fn build_right_t(&self, i: usize) -> Result<Vec<Sparse>> {
        let c = Ground::qdiff();
        Ok((0..self.dim() as u32)
            .map(|x| {
                let (f, d1, w, d2) = self.split(x);
                let u = w.mul(&d2);
                let mut acc = Acc::new();
                self.e_t(f, d1, &u.mul_s(i), &Ground::one(), &mut acc);
                if u.has_right_descent(i) {
                    self.e_t(f, d1, &u, &c, &mut acc);
                }
                acc.finish()
            })
            .collect())
    }

    /// `T_i · v`, through `σ`.
    pub fn left_t(&self, v: &[(u32, Ground)], i: usize) -> Sparse {
        let mut acc = Acc::new();
        for (x, c) in v {
            for (y, d) in &self.table.right_t[i - 1][self.sigma[*x as usize] as usize] {
                acc.add(self.sigma[*y as usize], d.mul(c));
            }
        }
        acc.finish()
    }

    pub fn right_letter<R: Ring>(&self, v: &[(u32, R)], l: Letter) -> Sparse<R> {
        let mut acc = Acc::new();
        match l {
            Letter::T(i) => {
                for (x, c) in v {
                    acc.add_scaled_ground(&self.table.right_t[i - 1][*x as usize], c);
                }
            }
            Letter::TInv(i) => {
                let qd = R::qdiff().neg();
                for (x, c) in v {
                    acc.add_scaled_ground(&self.table.right_t[i - 1][*x as usize], c);
                    acc.add(*x, c.mul(&qd));
                }
            }
            Letter::E => {
                for (x, c) in v {
                    acc.add_scaled_ground(&self.table.right_e[*x as usize], c);
                }
            }
        }
        acc.finish()
    }

    pub fn right_letters<R: Ring>(&self, v: &[(u32, R)], letters: &[Letter]) -> Sparse<R> {
        letters.iter().fold(v.to_vec(), |acc, l| self.right_letter(&acc, *l))
    }

    pub fn mul<R: Ring>(&self, a: &[(u32, R)], b: &[(u32, R)]) -> Sparse<R> {
        let mut acc = Acc::new();
        for (y, c) in b {
            acc.add_scaled(&self.right_letters(a, &self.letters[*y as usize]), c);
        }
        acc.finish()
    }

    pub fn identity_index(&self) -> u32 {
        self.word_index[&NormalWord::identity(self.n)]
    }

    /// Index of the word `E^f`.
    pub fn e_power_index(&self, f: usize) -> u32 {
        let e = Perm::identity(self.n);
        self.word_index[&NormalWord { f, d1: e, w: e, d2: e }]
    }

    /// `Z(u)` with `E_1 T_u E_1 = E_1 · shift(Z(u))`, for all `u`, in the rank `n-2` basis.
    fn sandwich_table(&self) -> Result<Vec<Sparse>> {
        let n = self.n;
        let sub = self.sub.as_ref().expect("n >= 2");
        let one = sub.identity_index();
        let c = Ground::qdiff();
        let (q, z) = (Ground::q(), Ground::z());
        let s2 = (n >= 3).then(|| Perm::s(n, 2));
        let cross = (n >= 4).then(|| Perm::from_word(n, &[2, 1, 3, 2]));
        let mut zt: Vec<Sparse> = vec![vec![]; self.sym.len()];
        for (ui, u) in self.sym.iter().enumerate() {
            let idx = |p: Perm| self.sym_index[&p] as usize;
            let val: Sparse = if u.is_identity() {
                vec![(one, Ground::delta())]
            } else if u.has_left_descent(1) {
                super::sparse::scale(&zt[idx(u.s_mul(1))], &q)
            } else if u.has_right_descent(1) {
                super::sparse::scale(&zt[idx(u.mul_s(1))], &q)
            } else if let Some(i) = (3..n).find(|&i| u.has_left_descent(i)) {
                sub.left_t(&zt[idx(u.s_mul(i))], i - 2)
            } else if let Some(i) = (3..n).find(|&i| u.has_right_descent(i)) {
                sub.right_letter(&zt[idx(u.mul_s(i))], Letter::T(i - 2))
            } else if Some(*u) == s2 {
                vec![(one, z.clone())]
            } else if Some(*u) == cross {
                // E_1 T_2 T_1 T_3 T_2 E_1 = E_1E_3 + (q - q^-1) q z E_1 T_3 + (q - q^-1) z E_1
                let mut acc = Acc::new();
                acc.add(sub.e_power_index(1), Ground::one());
                let t1 = sub.word_index[&NormalWord { f: 0, d1: Perm::identity(n - 2), w: Perm::s(n - 2, 1), d2: Perm::identity(n - 2) }];
                acc.add(t1, c.mul(&q).mul(&z));
                acc.add(one, c.mul(&z));
                acc.finish()
            } else {
                return Err(stuck(format!("E1 T{u} E1 has no reduction")));
            };
            zt[ui] = val;
        }
        Ok(zt)
    }

    /// `E_1 · shift(v)` for `v` in the rank `n-2` basis.
    fn lift(&self, v: &[(u32, Ground)]) -> Result<Sparse> {
        let sub = self.sub.as_ref().expect("n >= 2");
        let mut acc = Acc::new();
        for (x, c) in v {
            let w = &sub.words[*x as usize];
            let lifted = NormalWord { f: w.f + 1, d1: w.d1.shift(2), w: w.w.shift(2), d2: w.d2.shift(2) };
            let i = self.word_index.get(&lifted).ok_or_else(|| stuck(format!("lift of {w} is {lifted}, not a normal word")))?;
            acc.add(*i, c.clone());
        }
        Ok(acc.finish())
    }

    fn build_right_e(&self) -> Result<Vec<Sparse>> {
        let sub = self.sub.as_ref().expect("n >= 2");
        let zt = self.sandwich_table()?;
        let mut memo: HashMap<(usize, u32), Sparse> = HashMap::new();
        let layer1 = &self.layers[1];
        let mut out = Vec::with_capacity(self.dim());
        for x in 0..self.dim() as u32 {
            let (f, _, w, d2) = self.split(x);
            let d1 = self.words[x as usize].d1;
            let u = w.mul(&d2);
            let ui = self.sym_index[&u];
            if let std::collections::hash_map::Entry::Vacant(e) = memo.entry((f, ui)) {
                let v = if f == 0 {
                    // T_u E_1 = σ(E_1 T_{u^-1})
                    let a = &layer1.a[self.sym_index[&u.inverse()] as usize];
                    let mut acc = Acc::new();
                    for (tail, c) in a {
                        acc.add(self.sigma[layer1.word_index(0, *tail) as usize], c.clone());
                    }
                    acc.finish()
                } else {
                    let start = vec![(sub.e_power_index(f - 1), Ground::one())];
                    self.lift(&sub.mul(&start, &zt[ui as usize]))?
                };
                e.insert(v);
            }
            let mut v = memo[&(f, ui)].clone();
            for j in d1.inverse().reduced_word().into_iter().rev() {
                v = self.left_t(&v, j);
            }
            out.push(v);
        }
        Ok(out)
    }
}

/// `E^f T_u` for every `u`, by induction on length. Words in `W·D` are basis
/// words; otherwise a left descent is peeled: a flip gives `q`, a descent inside
/// `W` passes through `E^f`, and a prefix `s_{2k} s_{2k+1}` becomes
/// `s_{2k} s_{2k-1}` because `E^f T_{2k} T_{2k+1} T_{2k-1}^-1 T_{2k}^-1 = E^f`.
fn a_table(layer: &Layer, n: usize, sym: &[Perm], sym_index: &HashMap<Perm, u32>) -> Result<Vec<Sparse>> {
    let nd = layer.d.len();
    let mut basis: HashMap<Perm, u32> = HashMap::new();
    for (wi, w) in layer.w.iter().enumerate() {
        for (di, d) in layer.d.iter().enumerate() {
            if basis.insert(w.mul(d), (wi * nd + di) as u32).is_some() {
                return Err(Error::Verification(format!("{w}·{d} occurs twice")));
            }
        }
    }
    let mut st = ATable { layer, n, sym_index, basis, a: vec![None; sym.len()], open: vec![false; sym.len()] };
    for u in sym {
        st.get(u)?;
    }
    Ok(st.a.into_iter().map(|x| x.expect("filled")).collect())
}

struct ATable<'a> {
    layer: &'a Layer,
    n: usize,
    sym_index: &'a HashMap<Perm, u32>,
    basis: HashMap<Perm, u32>,
    a: Vec<Option<Sparse>>,
    /// Entries under construction, to catch a rule cycle.
    open: Vec<bool>,
}

impl ATable<'_> {
    fn get(&mut self, u: &Perm) -> Result<Sparse> {
        let ui = self.sym_index[u] as usize;
        if let Some(v) = &self.a[ui] {
            return Ok(v.clone());
        }
        if self.open[ui] {
            return Err(Error::Verification(format!("rewriting E^{} T_{u} loops", self.layer.f)));
        }
        self.open[ui] = true;
        let v = self.compute(u)?;
        self.open[ui] = false;
        self.a[ui] = Some(v.clone());
        Ok(v)
    }

    fn compute(&mut self, u: &Perm) -> Result<Sparse> {
        let (f, n, nd) = (self.layer.f, self.n, self.layer.d.len());
        if let Some(&tail) = self.basis.get(u) {
            return Ok(vec![(tail, Ground::one())]);
        }
        if let Some(k) = (1..=f).find(|k| u.has_left_descent(2 * k - 1)) {
            let rest = Perm::s(n, 2 * k - 1).mul(u);
            return Ok(super::sparse::scale(&self.get(&rest)?, &Ground::q()));
        }
        let c = Ground::qdiff();
        if let Some(j) = (2 * f + 1..n).find(|&j| u.has_left_descent(j)) {
            let rest = Perm::s(n, j).mul(u);
            let mut acc = Acc::new();
            for (tail, x) in self.get(&rest)? {
                let (wi, di) = (tail as usize / nd, tail as usize % nd);
                let w = self.layer.w[wi];
                let sw = Perm::s(n, j).mul(&w);
                acc.add((self.layer.w_index[&sw] * nd + di) as u32, x.clone());
                if sw.length() < w.length() {
                    acc.add(tail, x.mul(&c));
                }
            }
            return Ok(acc.finish());
        }
        for k in 1..f {
            let r1 = Perm::s(n, 2 * k).mul(u);
            if r1.length() > u.length() {
                continue;
            }
            let rest = Perm::s(n, 2 * k + 1).mul(&r1);
            if rest.length() > r1.length() {
                continue;
            }
            let h = HeckeElt::<Ground>::basis(n, 1, rest)?.mul_gen_left(2 * k - 1).mul_gen_left(2 * k);
            let mut acc = Acc::new();
            for (x, cx) in h.terms() {
                acc.add_scaled(&self.get(x)?, cx);
            }
            return Ok(acc.finish());
        }
        Err(Error::Verification(format!("E^{f} T_{u} has no reduction rule")))
    }
}
