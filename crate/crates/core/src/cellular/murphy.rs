//! Expansion of Hecke elements in the Murphy basis `x^μ_{uv}` of a window.

use crate::coefficients::Ground;
use crate::combinatorics::{partitions, std_tableaux, Partition, Perm, StandardTableau};
use crate::error::{Error, Result};
use crate::hecke::{murphy_x, HeckeElt};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

/// Row of the reduced echelon form: a combination of Murphy elements whose
/// expansion has coefficient 1 at its pivot and 0 at every other pivot.
struct Row {
    /// Expansion in the `T_w` basis.
    terms: BTreeMap<Perm, Ground>,
    /// Coefficients on the Murphy elements, by flat index.
    combo: BTreeMap<usize, Ground>,
}

/// Murphy basis of the Hecke algebra on the letters `start..=n`.
///
/// The `x^μ_{uv}` form a basis over `Z[q^±1]`. Expansion uses a reduced echelon
/// form built with unit pivots only, so every coefficient stays a Laurent polynomial.
pub struct MurphyBasis {
    n: usize,
    start: usize,
    shapes: Vec<Partition>,
    tableaux: Vec<Vec<StandardTableau>>,
    /// Flat index to `(shape, u, v)`.
    labels: Vec<(usize, usize, usize)>,
    pivots: HashMap<Perm, Row>,
}

/// A term `c · x^{shapes[shape]}_{uv}`.
#[derive(Clone, Debug, PartialEq)]
pub struct MurphyTerm {
    pub shape: usize,
    pub u: usize,
    pub v: usize,
    pub coeff: Ground,
}

fn unit_inverse(g: &Ground) -> Option<Ground> {
    let (m, c) = g.numerator().as_monomial()?;
    let sign = if c.is_one() {
        1
    } else if (-c).is_one() {
        -1
    } else {
        return None;
    };
    let inv = Ground::monomial(sign, -m.q, -m.z);
    Some(inv.mul(&Ground::qdiff().pow(g.qdiff_power())))
}

fn key(w: &Perm) -> (usize, Perm) {
    (w.length(), *w)
}

fn add_into<K: Ord + Copy>(m: &mut BTreeMap<K, Ground>, k: K, c: Ground) {
    if c.is_zero() {
        return;
    }
    let s = m.get(&k).map_or(c.clone(), |x| x.add(&c));
    if s.is_zero() {
        m.remove(&k);
    } else {
        m.insert(k, s);
    }
}

impl MurphyBasis {
    pub fn new(start: usize, n: usize) -> Result<MurphyBasis> {
        if start == 0 || start > n + 1 {
            return Err(Error::InvalidInput(format!("empty window {start}..={n}")));
        }
        let m = n + 1 - start;
        let shapes = partitions(m, None);
        let tableaux: Vec<Vec<StandardTableau>> = shapes.iter().map(|s| std_tableaux(s, start as u32)).collect();
        let mut pivots: HashMap<Perm, Row> = HashMap::new();
        let mut labels = Vec::new();
        if m == 0 {
            let e = Perm::identity(n);
            let row = Row { terms: BTreeMap::from([(e, Ground::one())]), combo: BTreeMap::from([(0, Ground::one())]) };
            pivots.insert(e, row);
            return Ok(MurphyBasis { n, start, shapes, tableaux, labels: vec![(0, 0, 0)], pivots });
        }
        for (si, ts) in tableaux.iter().enumerate() {
            for (ui, u) in ts.iter().enumerate() {
                for (vi, v) in ts.iter().enumerate() {
                    let x = murphy_x::<Ground>(u, v, n)?;
                    let mut row = Row { terms: x.terms().clone(), combo: BTreeMap::from([(labels.len(), Ground::one())]) };
                    labels.push((si, ui, vi));
                    for (p, r) in &pivots {
                        if let Some(c) = row.terms.get(p).cloned() {
                            for (w, d) in &r.terms {
                                add_into(&mut row.terms, *w, d.mul(&c).neg());
                            }
                            for (j, d) in &r.combo {
                                add_into(&mut row.combo, *j, d.mul(&c).neg());
                            }
                        }
                    }
                    let pivot = row
                        .terms
                        .iter()
                        .filter_map(|(w, c)| unit_inverse(c).map(|i| (key(w), i)))
                        .max_by_key(|(k, _)| *k)
                        .ok_or_else(|| Error::Verification(format!("no unit pivot for x_({u},{v}) on {start}..={n}")))?;
                    let (p, inv) = (pivot.0 .1, pivot.1);
                    row.terms = row.terms.into_iter().map(|(w, c)| (w, c.mul(&inv))).collect();
                    row.combo = row.combo.into_iter().map(|(j, c)| (j, c.mul(&inv))).collect();
                    for r in pivots.values_mut() {
                        if let Some(c) = r.terms.get(&p).cloned() {
                            for (w, d) in &row.terms {
                                add_into(&mut r.terms, *w, d.mul(&c).neg());
                            }
                            for (j, d) in &row.combo {
                                add_into(&mut r.combo, *j, d.mul(&c).neg());
                            }
                        }
                    }
                    pivots.insert(p, row);
                }
            }
        }
        let total: usize = (1..=m).product();
        if pivots.len() != total {
            return Err(Error::Verification(format!("{} Murphy elements for a Hecke algebra of rank {total}", pivots.len())));
        }
        Ok(MurphyBasis { n, start, shapes, tableaux, labels, pivots })
    }

    /// Shared instance per window.
    pub fn cached(start: usize, n: usize) -> Result<Arc<MurphyBasis>> {
        type Registry = Mutex<HashMap<(usize, usize), Arc<MurphyBasis>>>;
        static REG: OnceLock<Registry> = OnceLock::new();
        let reg = REG.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(b) = reg.lock().unwrap().get(&(start, n)) {
            return Ok(b.clone());
        }
        let b = Arc::new(MurphyBasis::new(start, n)?);
        Ok(reg.lock().unwrap().entry((start, n)).or_insert(b).clone())
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn shape_index(&self, p: &Partition) -> Option<usize> {
        self.shapes.iter().position(|s| s == p)
    }

    /// Standard tableaux of a shape, superstandard first.
    pub fn tableaux(&self, shape: usize) -> &[StandardTableau] {
        &self.tableaux[shape]
    }

    /// Coefficients of `h` in the Murphy basis.
    pub fn expand(&self, h: impl IntoIterator<Item = (Perm, Ground)>) -> Result<Vec<MurphyTerm>> {
        let mut acc: BTreeMap<usize, Ground> = BTreeMap::new();
        for (w, c) in h {
            if w.n() != self.n || !w.fixes_first(self.start - 1) {
                return Err(Error::InvalidInput(format!("{w} is not in the window {}..={}", self.start, self.n)));
            }
            let r = &self.pivots[&w];
            for (j, d) in &r.combo {
                add_into(&mut acc, *j, d.mul(&c));
            }
        }
        Ok(acc
            .into_iter()
            .map(|(j, coeff)| {
                let (shape, u, v) = self.labels[j];
                MurphyTerm { shape, u, v, coeff }
            })
            .collect())
    }

    /// Expansion of a [`HeckeElt`] on this window.
    pub fn expand_elt(&self, h: &HeckeElt<Ground>) -> Result<Vec<MurphyTerm>> {
        self.expand(h.terms().iter().map(|(w, c)| (*w, c.clone())))
    }
}

impl std::fmt::Debug for MurphyBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MurphyBasis({}..={})", self.start, self.n)
    }
}
