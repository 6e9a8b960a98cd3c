//! The Iwahori-Hecke algebra of the symmetric group on a window of letters,
//! with quadratic relation `(T_i - q)(T_i + q^-1) = 0`.

use crate::coefficients::{Coeff, Ring};
use crate::combinatorics::{coset_word, row_stabilizer_generators, Partition, Perm, StandardTableau};
use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Linear combination of `T_w`, `w` a permutation of the letters `start..=n`
/// (stored as an element of `S_n` fixing `1..start`).
#[derive(Clone, PartialEq)]
pub struct HeckeElt<R: Ring = Coeff> {
    n: usize,
    start: usize,
    terms: BTreeMap<Perm, R>,
}

impl<R: Ring> HeckeElt<R> {
    pub fn zero(n: usize, start: usize) -> Self {
        assert!(start >= 1 && start <= n.max(1), "empty window {start}..={n}");
        HeckeElt { n, start, terms: BTreeMap::new() }
    }

    pub fn one(n: usize, start: usize) -> Self {
        Self::basis(n, start, Perm::identity(n)).expect("identity is in every window")
    }

    /// `T_w`.
    pub fn basis(n: usize, start: usize, w: Perm) -> Result<Self> {
        let mut h = Self::zero(n, start);
        h.check_perm(&w)?;
        h.terms.insert(w, R::one());
        Ok(h)
    }

    /// `T_i`.
    pub fn gen(n: usize, start: usize, i: usize) -> Result<Self> {
        if i < start || i >= n {
            return Err(Error::InvalidInput(format!("T_{i} is not in the window {start}..={n}")));
        }
        Self::basis(n, start, Perm::s(n, i))
    }

    /// `T_i^-1 = T_i - (q - q^-1)`.
    pub fn gen_inv(n: usize, start: usize, i: usize) -> Result<Self> {
        let mut h = Self::gen(n, start, i)?;
        h.add_term(Perm::identity(n), R::qdiff().neg());
        Ok(h)
    }

    pub fn from_terms(n: usize, start: usize, terms: impl IntoIterator<Item = (Perm, R)>) -> Result<Self> {
        let mut h = Self::zero(n, start);
        for (w, c) in terms {
            h.check_perm(&w)?;
            h.add_term(w, c);
        }
        Ok(h)
    }

    fn check_perm(&self, w: &Perm) -> Result<()> {
        if w.n() != self.n || !w.fixes_first(self.start - 1) {
            return Err(Error::InvalidInput(format!("{w} is not a permutation of {}..={}", self.start, self.n)));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn terms(&self) -> &BTreeMap<Perm, R> {
        &self.terms
    }

    pub fn coeff(&self, w: &Perm) -> R {
        self.terms.get(w).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c·T_w` in place.
    pub fn add_term(&mut self, w: Perm, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn same_window(&self, o: &Self) -> Result<()> {
        if (self.n, self.start) != (o.n, o.start) {
            return Err(Error::InvalidInput(format!(
                "window mismatch: {}..={} vs {}..={}",
                self.start, self.n, o.start, o.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_window(o)?;
        let mut h = self.clone();
        for (w, c) in &o.terms {
            h.add_term(*w, c.clone());
        }
        Ok(h)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn scale(&self, k: &R) -> Self {
        if k.is_zero() {
            return Self::zero(self.n, self.start);
        }
        self.map(|c| c.mul(k))
    }

    fn map(&self, f: impl Fn(&R) -> R) -> Self {
        HeckeElt { n: self.n, start: self.start, terms: self.terms.iter().map(|(w, c)| (*w, f(c))).filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Same element over another coefficient ring.
    pub fn convert<S: Ring>(&self, f: impl Fn(&R) -> S) -> HeckeElt<S> {
        HeckeElt { n: self.n, start: self.start, terms: self.terms.iter().map(|(w, c)| (*w, f(c))).filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// `self · T_i`.
    pub fn mul_gen_right(&self, i: usize) -> Self {
        assert!(i >= self.start && i < self.n, "T_{i} outside the window");
        let mut h = Self::zero(self.n, self.start);
        let qd = R::qdiff();
        for (w, c) in &self.terms {
            let ws = w.mul_s(i);
            h.add_term(ws, c.clone());
            if w.has_right_descent(i) {
                h.add_term(*w, c.mul(&qd));
            }
        }
        h
    }

    /// `T_i · self`.
    pub fn mul_gen_left(&self, i: usize) -> Self {
        assert!(i >= self.start && i < self.n, "T_{i} outside the window");
        let mut h = Self::zero(self.n, self.start);
        let qd = R::qdiff();
        for (w, c) in &self.terms {
            h.add_term(w.s_mul(i), c.clone());
            if w.has_left_descent(i) {
                h.add_term(*w, c.mul(&qd));
            }
        }
        h
    }

    /// `self · T_w`.
    pub fn mul_basis_right(&self, w: &Perm) -> Self {
        w.reduced_word().into_iter().fold(self.clone(), |h, i| h.mul_gen_right(i))
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.same_window(o)?;
        let mut out = Self::zero(self.n, self.start);
        for (w, c) in &o.terms {
            for (v, d) in self.mul_basis_right(w).terms {
                out.add_term(v, d.mul(c));
            }
        }
        Ok(out)
    }

    /// Coefficient of `T_1`.
    pub fn trace(&self) -> R {
        self.coeff(&Perm::identity(self.n))
    }

    /// The anti-automorphism fixing every `T_i`: `T_w ↦ T_{w^-1}`.
    pub fn star(&self) -> Self {
        HeckeElt { n: self.n, start: self.start, terms: self.terms.iter().map(|(w, c)| (w.inverse(), c.clone())).collect() }
    }
}

pub fn hecke_mul<R: Ring>(a: &HeckeElt<R>, b: &HeckeElt<R>) -> Result<HeckeElt<R>> {
    a.mul(b)
}

pub fn trace<R: Ring>(a: &HeckeElt<R>) -> R {
    a.trace()
}

pub fn star<R: Ring>(a: &HeckeElt<R>) -> HeckeElt<R> {
    a.star()
}

/// Elements of the Young subgroup of `λ` on the letters `start..`, inside `S_n`.
pub fn young_subgroup(shape: &Partition, start: usize, n: usize) -> Vec<Perm> {
    let gens = row_stabilizer_generators(shape, start as u32);
    let mut seen = BTreeSet::from([Perm::identity(n)]);
    let mut frontier = vec![Perm::identity(n)];
    while let Some(w) = frontier.pop() {
        for &i in &gens {
            let v = w.mul_s(i);
            if seen.insert(v) {
                frontier.push(v);
            }
        }
    }
    seen.into_iter().collect()
}

/// `x_λ = Σ_{w ∈ S_λ} q^{ℓ(w)} T_w` on the window `start..=n`.
pub fn x_lambda<R: Ring>(shape: &Partition, start: usize, n: usize) -> Result<HeckeElt<R>> {
    if start - 1 + shape.size() != n {
        return Err(Error::InvalidInput(format!("{shape} does not fill the window {start}..={n}")));
    }
    let terms = young_subgroup(shape, start, n).into_iter().map(|w| {
        let l = w.length() as i32;
        (w, R::monomial(1, l, 0))
    });
    HeckeElt::from_terms(n, start, terms)
}

/// `x_{st} = T_{d(s)}^* x_λ T_{d(t)}`.
pub fn murphy_x<R: Ring>(s: &StandardTableau, t: &StandardTableau, n: usize) -> Result<HeckeElt<R>> {
    if s.shape() != t.shape() || s.start() != t.start() {
        return Err(Error::InvalidInput(format!("tableaux {s} and {t} have different shapes")));
    }
    let start = s.start() as usize;
    let x = x_lambda::<R>(s.shape(), start, n)?;
    let left = HeckeElt::basis(n, start, coset_word(s, n).inverse())?;
    left.mul(&x)?.mul(&HeckeElt::basis(n, start, coset_word(t, n))?)
}

impl<R: Ring> fmt::Display for HeckeElt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c} * T{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<R: Ring> fmt::Debug for HeckeElt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElt[{}..={}]({self})", self.start, self.n)
    }
}

impl serde::Serialize for HeckeElt<Coeff> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("HeckeElt", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("window_start", &self.start)?;
        let terms: Vec<(Perm, String)> = self.terms.iter().map(|(w, c)| (*w, c.to_string())).collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::Ground;

    type H = HeckeElt<Ground>;

    #[test]
    fn quadratic_relation() {
        let t1 = H::gen(3, 1, 1).unwrap();
        let sq = t1.mul(&t1).unwrap();
        let want = H::one(3, 1).add(&t1.scale(&Ground::qdiff())).unwrap();
        assert_eq!(sq, want);
        assert_eq!(H::gen_inv(3, 1, 1).unwrap().mul(&t1).unwrap(), H::one(3, 1));
    }

    #[test]
    fn reduced_products_are_single_terms() {
        let p = H::gen(3, 1, 1).unwrap().mul_gen_right(2).mul_gen_right(1);
        assert_eq!(p.len(), 1);
        assert!(p.terms().contains_key(&Perm::from_word(3, &[1, 2, 1])));
        assert!(H::gen(3, 1, 1).unwrap().mul_gen_right(2).trace().is_zero());
    }

    #[test]
    fn left_and_right_agree() {
        for w in Perm::all(4) {
            let h = H::basis(4, 1, w).unwrap();
            for i in 1..4 {
                let g = H::gen(4, 1, i).unwrap();
                assert_eq!(h.mul_gen_left(i), g.mul(&h).unwrap());
            }
        }
    }

    #[test]
    fn x_lambda_absorbs_row_generators() {
        let l: Partition = "2".parse().unwrap();
        let x = x_lambda::<Ground>(&l, 1, 2).unwrap();
        assert_eq!(x.mul_gen_right(1), x.scale(&Ground::q()));
        let t = StandardTableau::superstandard(&l, 1);
        assert_eq!(murphy_x::<Ground>(&t, &t, 2).unwrap(), x);
    }

    #[test]
    fn star_reverses_products() {
        let a = H::gen(3, 1, 1).unwrap().mul_gen_right(2);
        assert_eq!(a.star(), H::gen(3, 1, 2).unwrap().mul_gen_right(1));
    }

    #[test]
    fn window_mismatch() {
        let a = H::gen(4, 3, 3).unwrap();
        assert!(a.mul(&H::one(4, 1)).is_err());
        assert!(H::gen(4, 3, 2).is_err());
    }
}
