use super::word::NormalWord;
use crate::coefficients::{Coeff, Ground, Ring};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// Sparse linear combination of normal words of one rank.
#[derive(Clone, PartialEq)]
pub struct AlgebraElt<R: Ring = Ground> {
    n: usize,
    terms: BTreeMap<NormalWord, R>,
}

impl<R: Ring> AlgebraElt<R> {
    pub fn zero(n: usize) -> Self {
        AlgebraElt { n, terms: BTreeMap::new() }
    }

    pub fn word(w: NormalWord) -> Self {
        Self::term(w, R::one())
    }

    pub fn term(w: NormalWord, c: R) -> Self {
        let mut a = Self::zero(w.n());
        a.add_term(w, c);
        a
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<NormalWord, R> {
        &self.terms
    }

    pub fn coeff(&self, w: &NormalWord) -> R {
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

    pub fn add_term(&mut self, w: NormalWord, c: R) {
        assert_eq!(w.n(), self.n, "word of rank {} in an element of rank {}", w.n(), self.n);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn same_rank(&self, o: &Self) -> Result<()> {
        if self.n != o.n {
            return Err(Error::InvalidInput(format!("rank mismatch: {} vs {}", self.n, o.n)));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_rank(o)?;
        let mut a = self.clone();
        for (w, c) in &o.terms {
            a.add_term(*w, c.clone());
        }
        Ok(a)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&R::one().neg())
    }

    pub fn scale(&self, k: &R) -> Self {
        let mut a = Self::zero(self.n);
        for (w, c) in &self.terms {
            a.add_term(*w, c.mul(k));
        }
        a
    }

    /// Same element over another coefficient ring.
    pub fn convert<S: Ring>(&self, f: impl Fn(&R) -> S) -> AlgebraElt<S> {
        let mut a = AlgebraElt::zero(self.n);
        for (w, c) in &self.terms {
            a.add_term(*w, f(c));
        }
        a
    }

    /// The anti-involution fixing `E_1` and every `T_i`, which maps each normal word to a normal word.
    pub fn sigma(&self) -> Self {
        let mut a = Self::zero(self.n);
        for (w, c) in &self.terms {
            a.add_term(w.sigma(), c.clone());
        }
        a
    }

    /// Drops all words of deficiency `≥ f`, i.e. the image modulo the ideal generated by `E^f`.
    pub fn ideal_truncate(&self, f: usize) -> Self {
        let mut a = Self::zero(self.n);
        for (w, c) in &self.terms {
            if w.f < f {
                a.add_term(*w, c.clone());
            }
        }
        a
    }

    /// Largest deficiency present.
    pub fn max_deficiency(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.f).max()
    }
}

impl AlgebraElt<Ground> {
    pub fn to_coeff(&self) -> AlgebraElt<Coeff> {
        self.convert(|c| c.to_coeff())
    }
}

pub fn sigma<R: Ring>(a: &AlgebraElt<R>) -> AlgebraElt<R> {
    a.sigma()
}

pub fn ideal_truncate<R: Ring>(a: &AlgebraElt<R>, f: usize) -> AlgebraElt<R> {
    a.ideal_truncate(f)
}

impl<R: Ring> fmt::Display for AlgebraElt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c} * {w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<R: Ring> fmt::Debug for AlgebraElt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElt[n={}]({self})", self.n)
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct TermJson {
    word: NormalWord,
    coeff: Coeff,
}

impl<R: Ring> serde::Serialize for AlgebraElt<R> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            seq.serialize_element(&TermJson { word: *w, coeff: c.to_coeff() })?;
        }
        seq.end()
    }
}

impl AlgebraElt<Coeff> {
    /// Reads the JSON list of `{word, coeff}` produced by serialization.
    pub fn from_json(n: usize, v: &serde_json::Value) -> Result<Self> {
        let terms: Vec<TermJson> = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut a = Self::zero(n);
        for t in terms {
            if t.word.n() != n {
                return Err(Error::Parse(format!("word {} has rank {}, expected {n}", t.word, t.word.n())));
            }
            a.add_term(t.word, t.coeff);
        }
        Ok(a)
    }
}
