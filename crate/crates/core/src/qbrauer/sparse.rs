use crate::coefficients::{Ground, Ring};
use std::collections::BTreeMap;

/// Sparse vector over basis indices, sorted, without zeros.
pub type Sparse<R = Ground> = Vec<(u32, R)>;

/// Accumulator for sparse linear combinations.
pub struct Acc<R: Ring> {
    terms: BTreeMap<u32, R>,
}

impl<R: Ring> Default for Acc<R> {
    fn default() -> Self {
        Acc { terms: BTreeMap::new() }
    }
}

impl<R: Ring> Acc<R> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: u32, c: R) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(i) {
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

    /// Adds `k·v`.
    pub fn add_scaled(&mut self, v: &[(u32, R)], k: &R) {
        for (i, c) in v {
            self.add(*i, c.mul(k));
        }
    }

    /// Adds `k·v` for a vector of structure constants.
    pub fn add_scaled_ground(&mut self, v: &[(u32, Ground)], k: &R) {
        for (i, c) in v {
            self.add(*i, R::from_ground(c).mul(k));
        }
    }

    pub fn finish(self) -> Sparse<R> {
        self.terms.into_iter().collect()
    }
}

pub fn scale<R: Ring>(v: &[(u32, R)], k: &R) -> Sparse<R> {
    if k.is_zero() {
        return vec![];
    }
    v.iter().map(|(i, c)| (*i, c.mul(k))).filter(|(_, c)| !c.is_zero()).collect()
}
