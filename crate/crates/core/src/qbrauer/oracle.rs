//! Independent multiplication oracle for small rank: the free algebra on
//! `T_i, E_1` modulo the defining relations, saturated linearly over `F_p` at a
//! fixed parameter point. It never looks at normal words.

use super::{Letter, QBrauer};
use crate::coefficients::{inv_mod, Ground};
use crate::error::{Error, Result};
use std::collections::{BTreeMap, HashMap};

/// Letter code: `0` is `E_1`, `i ≥ 1` is `T_i`.
type Word = Vec<u8>;
pub type Vector = BTreeMap<u32, u64>;

pub struct FreeQuotientOracle {
    n: usize,
    p: u64,
    q0: u64,
    z0: u64,
    /// All words up to the saturation length, in degree-lex order.
    words: Vec<Word>,
    index: HashMap<Word, u32>,
    /// Reduced rows keyed by leading (largest) word, leading coefficient 1.
    pivots: HashMap<u32, Vector>,
    saturation_len: usize,
}

fn double_factorial(n: usize) -> usize {
    (1..=n).map(|k| 2 * k - 1).product()
}

impl FreeQuotientOracle {
    /// Saturates at increasing lengths until words of length `≤ span_len` have a
    /// quotient of dimension `(2n-1)!!`.
    pub fn build(n: usize, p: u64, q0: u64, z0: u64, span_len: usize) -> Result<FreeQuotientOracle> {
        if !(1..=3).contains(&n) {
            return Err(Error::InvalidInput(format!("the free-quotient oracle supports 1 <= n <= 3, got {n}")));
        }
        let target = double_factorial(n);
        for len in span_len + 1..=span_len + 4 {
            let o = Self::saturate(n, p, q0, z0, len)?;
            let dim = o.dimension(span_len);
            if dim < target {
                return Err(Error::InvalidInput(format!("words up to length {span_len} span only {dim} of {target} dimensions")));
            }
            if dim == target {
                return Ok(o);
            }
        }
        Err(Error::Verification(format!("saturation did not reach dimension {target} for n={n}")))
    }

    fn saturate(n: usize, p: u64, q0: u64, z0: u64, len: usize) -> Result<FreeQuotientOracle> {
        let gens: Vec<u8> = if n >= 2 { (0..n as u8).collect() } else { vec![] };
        let mut words: Vec<Word> = vec![vec![]];
        let mut layer: Vec<Word> = vec![vec![]];
        for _ in 0..len {
            let next: Vec<Word> = layer.iter().flat_map(|w| gens.iter().map(move |g| [w.as_slice(), &[*g]].concat())).collect();
            words.extend(next.iter().cloned());
            layer = next;
        }
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i as u32)).collect();
        let mut o = FreeQuotientOracle { n, p, q0, z0, words, index, pivots: HashMap::new(), saturation_len: len };
        let rels = o.relations();
        let short: Vec<Word> = o.words.clone();
        for (r, rlen) in &rels {
            for u in &short {
                if u.len() + rlen > len {
                    break;
                }
                for v in &short {
                    if u.len() + rlen + v.len() > len {
                        break;
                    }
                    let mut row = Vector::new();
                    for (w, c) in r {
                        let full = [u.as_slice(), w, v].concat();
                        o.add(&mut row, o.index[&full], *c);
                    }
                    o.insert(row);
                }
            }
        }
        Ok(o)
    }

    fn m(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn add(&self, v: &mut Vector, k: u32, c: u64) {
        let e = v.entry(k).or_insert(0);
        *e = (*e + c) % self.p;
        if *e == 0 {
            v.remove(&k);
        }
    }

    /// Relations as `Σ c·word` with their longest word length.
    fn relations(&self) -> Vec<(Vec<(Word, u64)>, usize)> {
        let (p, q, z) = (self.p, self.q0, self.z0);
        let qi = inv_mod(q, p);
        let zi = inv_mod(z, p);
        let c = (q + p - qi) % p;
        let delta = (z + p - zi) % p * inv_mod(c, p) % p;
        let neg = |x: u64| (p - x % p) % p;
        let one = 1u64;
        let n = self.n as u8;
        let mut out = Vec::new();
        for i in 1..n {
            out.push(vec![(vec![i, i], one), (vec![], neg(1)), (vec![i], neg(c))]);
            if i + 1 < n {
                out.push(vec![(vec![i, i + 1, i], one), (vec![i + 1, i, i + 1], neg(1))]);
            }
            for j in i + 2..n {
                out.push(vec![(vec![i, j], one), (vec![j, i], neg(1))]);
            }
        }
        if n >= 2 {
            out.push(vec![(vec![0, 0], one), (vec![0], neg(delta))]);
            out.push(vec![(vec![1, 0], one), (vec![0], neg(q))]);
            out.push(vec![(vec![0, 1], one), (vec![0], neg(q))]);
        }
        if n >= 3 {
            out.push(vec![(vec![0, 2, 0], one), (vec![0], neg(z))]);
        }
        out.into_iter().map(|r: Vec<(Word, u64)>| {
            let l = r.iter().map(|(w, _)| w.len()).max().unwrap_or(0);
            (r, l)
        })
        .collect()
    }

    /// Reduces `v` against every pivot.
    fn reduce(&self, mut v: Vector) -> Vector {
        loop {
            let hit = v.iter().rev().find(|(k, _)| self.pivots.contains_key(k)).map(|(k, c)| (*k, *c));
            let Some((k, c)) = hit else { return v };
            for (j, d) in &self.pivots[&k] {
                self.add(&mut v, *j, self.p - d * c % self.p);
            }
        }
    }

    fn insert(&mut self, row: Vector) {
        let v = self.reduce(row);
        let Some((&lead, &lc)) = v.iter().next_back() else { return };
        let inv = inv_mod(lc, self.p);
        let v: Vector = v.into_iter().map(|(k, c)| (k, c * inv % self.p)).collect();
        self.pivots.insert(lead, v);
    }

    /// Number of words of length `≤ len` that are not leading words.
    pub fn dimension(&self, len: usize) -> usize {
        self.words.iter().enumerate().filter(|(i, w)| w.len() <= len && !self.pivots.contains_key(&(*i as u32))).count()
    }

    pub fn saturation_len(&self) -> usize {
        self.saturation_len
    }

    /// Normal form of a product of letters, `T_i^-1` expanded as `T_i - (q - q^-1)`.
    pub fn normal_form(&self, letters: &[Letter]) -> Result<Vector> {
        let c = self.m(self.q0 as i64 - inv_mod(self.q0, self.p) as i64);
        let mut terms: Vec<(Word, u64)> = vec![(vec![], 1)];
        for l in letters {
            l.check(self.n)?;
            let mut next = Vec::new();
            for (w, k) in terms {
                match *l {
                    Letter::E => next.push(([w.as_slice(), &[0]].concat(), k)),
                    Letter::T(i) => next.push(([w.as_slice(), &[i as u8]].concat(), k)),
                    Letter::TInv(i) => {
                        next.push(([w.as_slice(), &[i as u8]].concat(), k));
                        next.push((w, self.p - k * c % self.p));
                    }
                }
            }
            terms = next;
        }
        let mut v = Vector::new();
        for (w, k) in terms {
            let i = self.index.get(&w).ok_or_else(|| Error::InvalidInput(format!("word of length {} exceeds the saturation length", w.len())))?;
            self.add(&mut v, *i, k);
        }
        Ok(self.reduce(v))
    }

    fn eval(&self, g: &Ground) -> Result<u64> {
        g.eval_mod(self.q0, self.z0, self.p)
    }

    /// Compares `x · g` from the table with the oracle, for every normal word `x`
    /// and every generator `g`. Returns the number of comparisons.
    pub fn check_right_mul(&self, alg: &QBrauer) -> Result<usize> {
        if alg.n() != self.n {
            return Err(Error::InvalidInput("rank mismatch".into()));
        }
        let mut gens: Vec<Letter> = (1..self.n).flat_map(|i| [Letter::T(i), Letter::TInv(i)]).collect();
        if self.n >= 2 {
            gens.push(Letter::E);
        }
        let nf: Vec<Vector> = alg.basis().iter().map(|w| self.normal_form(&w.letters())).collect::<Result<_>>()?;
        let mut count = 0;
        for (x, w) in alg.basis().iter().enumerate() {
            for g in &gens {
                let mut letters = w.letters();
                letters.push(*g);
                let want = self.normal_form(&letters)?;
                let mut got = Vector::new();
                for (y, c) in alg.right_letter_sparse(&[(x as u32, Ground::one())], *g) {
                    let k = self.eval(&c)?;
                    for (j, d) in &nf[y as usize] {
                        self.add(&mut got, *j, d * k % self.p);
                    }
                }
                if got != want {
                    return Err(Error::Verification(format!("{w} * {g} disagrees with the free quotient")));
                }
                count += 1;
            }
        }
        Ok(count)
    }

    /// `v · l`, reduced. Fails if a word of `v` is too long to extend inside the saturated range.
    pub fn right_mul(&self, v: &Vector, l: Letter) -> Result<Vector> {
        l.check(self.n)?;
        let mut out = Vector::new();
        for (k, c) in v {
            let w = &self.words[*k as usize];
            if w.len() >= self.saturation_len {
                return Err(Error::InvalidInput(format!("word of length {} cannot be extended", w.len())));
            }
            for (u, d) in self.normal_form(&[l])? {
                let full = [w.as_slice(), &self.words[u as usize]].concat();
                let j = self.index.get(&full).ok_or_else(|| Error::InvalidInput("product leaves the saturated range".into()))?;
                self.add(&mut out, *j, c * d % self.p);
            }
        }
        Ok(self.reduce(out))
    }

    /// Compares the table product `x · y` with the oracle for every pair of normal
    /// words, multiplying letter by letter in the quotient. Returns the number of pairs.
    pub fn check_products(&self, alg: &QBrauer) -> Result<usize> {
        if alg.n() != self.n {
            return Err(Error::InvalidInput("rank mismatch".into()));
        }
        let nf: Vec<Vector> = alg.basis().iter().map(|w| self.normal_form(&w.letters())).collect::<Result<_>>()?;
        let mut count = 0;
        for (x, wx) in alg.basis().iter().enumerate() {
            for (y, wy) in alg.basis().iter().enumerate() {
                let mut want = nf[x].clone();
                for l in wy.letters() {
                    want = self.right_mul(&want, l)?;
                }
                let mut got = Vector::new();
                for (k, c) in alg.mul_sparse(&[(x as u32, Ground::one())], &[(y as u32, Ground::one())]) {
                    let e = self.eval(&c)?;
                    for (j, d) in &nf[k as usize] {
                        self.add(&mut got, *j, d * e % self.p);
                    }
                }
                if got != want {
                    return Err(Error::Verification(format!("{wx} * {wy} disagrees with the free quotient")));
                }
                count += 1;
            }
        }
        Ok(count)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn point(&self) -> (u64, u64, u64) {
        (self.p, self.q0, self.z0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u64 = 1_000_003;

    #[test]
    fn dimensions_and_agreement() {
        for (n, d) in [(2, 3), (3, 15)] {
            let b = QBrauer::new(n).unwrap();
            let span = b.basis().iter().map(|w| w.letters().len()).max().unwrap() + 1;
            let o = FreeQuotientOracle::build(n, P, 3, 7, span).unwrap();
            assert_eq!(o.dimension(span), d);
            assert!(o.check_right_mul(&b).unwrap() > 0);
            assert_eq!(o.check_products(&b).unwrap(), d * d);
        }
    }

    #[test]
    fn sandwich_relation() {
        let o = FreeQuotientOracle::build(3, P, 3, 7, 5).unwrap();
        let lhs = o.normal_form(&[Letter::E, Letter::T(2), Letter::E]).unwrap();
        let rhs: Vector = o.normal_form(&[Letter::E]).unwrap().into_iter().map(|(k, c)| (k, c * 7 % P)).collect();
        assert_eq!(lhs, rhs);
    }
}
