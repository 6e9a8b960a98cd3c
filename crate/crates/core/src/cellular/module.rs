use super::linalg::{self, Matrix};
use super::murphy::MurphyBasis;
use crate::coefficients::{Coeff, Field, Ground};
use crate::combinatorics::{
    coset_reps_d, coset_word, ct_eigenvalue, dominance, ud_compare, updown_tableaux, CellLabel, Dominance, Perm, StandardTableau, Step,
    UdVerdict, UpDownTableau,
};
use crate::error::{Error, Result};
use crate::hecke::young_subgroup;
use crate::qbrauer::{AlgebraElt, Letter, NormalWord, QBrauer, Sparse};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

/// Which summation range the removal step of `b_t` uses.
///
/// After a removal at row `k` of the new shape `λ`, the step sums
/// `q^{b_k - j} T_{j,2f-1}^-1` over `j` in a range ending at `b_k = 2f - 1 + λ_1 + ⋯ + λ_k`.
/// `Full` starts at `b_{k-1}` and has `λ_k + 1` terms, one per position of the removed
/// node's row; `Short` starts at `b_{k-1} + 1` and drops the first of them. Only `Full`
/// gives a basis; `Short` is kept so tests can show the transition matrix degenerates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RemovalSum {
    Full,
    Short,
}

/// A right cell module `C(f, λ) = E^f x_λ B_n + B_n^{▷λ} / B_n^{▷λ}`.
///
/// Coordinates refer to the coset basis `E^f x_λ T_{d(t)} T_v`, indexed by
/// `t_index · |D_{f,n}| + v_index`.
pub struct CellModule {
    alg: QBrauer,
    label: CellLabel,
    murphy: Arc<MurphyBasis>,
    shape: usize,
    cosets: Vec<Perm>,
    coset_index: HashMap<Perm, usize>,
    basis: Vec<Sparse>,
    updown: Vec<UpDownTableau>,
    transition: OnceLock<Matrix<Ground>>,
    transition_inv: OnceLock<Matrix<Coeff>>,
}

impl std::fmt::Debug for CellModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CellModule({} of B_{}, dim {})", self.label, self.n(), self.dim())
    }
}

/// Entry-by-entry check of the JM action against the up-down order.
#[derive(Clone, Debug, serde::Serialize)]
pub struct TriangularityCertificate {
    pub label: CellLabel,
    pub k: usize,
    /// `(t, computed diagonal entry, c_t(k))` in JM-basis order.
    pub diagonal: Vec<(String, Coeff, Coeff)>,
    /// Nonzero entries `(t, s)` with `s` not above `t`, and wrong diagonal entries.
    pub violations: Vec<String>,
    pub nonzero_off_diagonal: usize,
    pub holds: bool,
}

fn word(f: usize, w: Perm, d2: Perm) -> NormalWord {
    NormalWord { f, d1: Perm::identity(w.n()), w, d2 }
}

impl CellModule {
    pub fn new(alg: &QBrauer, label: CellLabel) -> Result<CellModule> {
        let n = alg.n();
        label.check(n)?;
        let f = label.f;
        let murphy = MurphyBasis::cached(2 * f + 1, n)?;
        let shape = murphy.shape_index(&label.lambda).expect("label shape is a partition of the window");
        let cosets: Vec<Perm> = coset_reps_d(f, n)?.into_iter().map(|c| c.perm).collect();
        let coset_index = cosets.iter().enumerate().map(|(i, d)| (*d, i)).collect();
        let tableaux = murphy.tableaux(shape);
        debug_assert!(coset_word(&tableaux[0], n).is_identity());
        let ys = if label.lambda.is_empty() { vec![Perm::identity(n)] } else { young_subgroup(&label.lambda, 2 * f + 1, n) };
        let mut basis = Vec::with_capacity(tableaux.len() * cosets.len());
        for t in tableaux {
            let dt = coset_word(t, n);
            for v in &cosets {
                let mut v_terms: Vec<(u32, Ground)> = ys
                    .iter()
                    .map(|y| {
                        let i = alg.index_of(&word(f, y.mul(&dt), *v)).expect("coset basis words are normal words");
                        (i as u32, Ground::monomial(1, y.length() as i32, 0))
                    })
                    .collect();
                v_terms.sort_by_key(|t| t.0);
                basis.push(v_terms);
            }
        }
        let updown = updown_tableaux(n, &label.lambda)?;
        if updown.len() != basis.len() {
            return Err(Error::Verification(format!("{} up-down tableaux but {} coset basis vectors for {label}", updown.len(), basis.len())));
        }
        Ok(CellModule {
            alg: alg.clone(),
            label,
            murphy,
            shape,
            cosets,
            coset_index,
            basis,
            updown,
            transition: OnceLock::new(),
            transition_inv: OnceLock::new(),
        })
    }

    pub fn label(&self) -> &CellLabel {
        &self.label
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn algebra(&self) -> &QBrauer {
        &self.alg
    }

    /// `(t, v)` for each coset basis index.
    pub fn coset_labels(&self) -> Vec<(StandardTableau, Perm)> {
        let ts = self.murphy.tableaux(self.shape);
        ts.iter().flat_map(|t| self.cosets.iter().map(move |v| (t.clone(), *v))).collect()
    }

    /// Up-down tableaux indexing the JM basis, in a linear extension of `≺`.
    pub fn updown(&self) -> &[UpDownTableau] {
        &self.updown
    }

    /// Coset basis vector `i` as an algebra element in index form.
    pub fn basis_vector(&self, i: usize) -> &Sparse {
        &self.basis[i]
    }

    /// Coordinates of `x + B_n^{▷λ}` for `x ∈ E^f x_λ B_n + B_n^{▷λ}`.
    pub fn reduce(&self, x: &[(u32, Ground)]) -> Result<Vec<Ground>> {
        let f = self.label.f;
        let words = self.alg.basis();
        let mut groups: BTreeMap<usize, Vec<(Perm, Ground)>> = BTreeMap::new();
        for (i, c) in x {
            let w = &words[*i as usize];
            if w.f > f {
                continue;
            }
            if w.f < f || !w.d1.is_identity() {
                return Err(Error::Verification(format!("{w} is not in E^{f} B_n + B_n^(f+1)")));
            }
            let d = self.coset_index[&w.d2];
            groups.entry(d).or_default().push((w.w, c.clone()));
        }
        let nd = self.cosets.len();
        let mut out = vec![Ground::zero(); self.dim()];
        for (d, h) in groups {
            for m in self.murphy.expand(h)? {
                if m.shape == self.shape {
                    if m.u != 0 {
                        return Err(Error::Verification(format!("reduction left a term x_(u,v) of shape {} with u not superstandard", self.label.lambda)));
                    }
                    let k = m.v * nd + d;
                    out[k] = out[k].add(&m.coeff);
                    continue;
                }
                let mu = &self.murphy.shapes()[m.shape];
                if dominance(mu, &self.label.lambda)? != Dominance::Above {
                    return Err(Error::Verification(format!("reduction produced shape {mu}, not dominating {}", self.label.lambda)));
                }
            }
        }
        Ok(out)
    }

    fn rows(&self, image: impl Fn(&Sparse) -> Sparse + Sync) -> Result<Matrix<Ground>> {
        use rayon::prelude::*;
        self.basis.par_iter().map(|b| self.reduce(&image(b))).collect()
    }

    /// Matrix of right multiplication by a generator; row `i` is the image of basis vector `i`.
    pub fn act(&self, g: Letter) -> Result<Matrix<Ground>> {
        g.check(self.n())?;
        self.rows(|b| self.alg.right_letter_sparse(b, g))
    }

    pub fn act_elt(&self, x: &AlgebraElt<Ground>) -> Result<Matrix<Ground>> {
        let xs = self.alg.to_sparse(x)?;
        self.rows(|b| self.alg.mul_sparse(b, &xs))
    }

    /// Right factor contributed by step `k` of `t`, as a sum of letter words.
    fn step_factor(t: &UpDownTableau, k: usize, sum: RemovalSum) -> Vec<(Ground, Vec<Letter>)> {
        let shape = t.at(k);
        let f = (k - shape.size()) / 2;
        let prefix = |r: usize| -> usize { (1..=r).map(|i| shape.row(i) as usize).sum() };
        match t.step(k) {
            Step::Add(p) => {
                let a = 2 * f + prefix(p.row as usize);
                vec![(Ground::one(), (a..k).map(Letter::T).collect())]
            }
            Step::Remove(p) => {
                let r = p.row as usize;
                let b = |i: usize| 2 * f - 1 + prefix(i);
                let hi = b(r);
                let lo = match sum {
                    RemovalSum::Full => b(r - 1),
                    RemovalSum::Short => b(r - 1) + 1,
                };
                let head: Vec<Letter> = (2 * f..k).map(Letter::TInv).collect();
                (lo..=hi)
                    .map(|j| {
                        let mut w = head.clone();
                        w.extend((2 * f - 1..j).map(Letter::TInv));
                        (Ground::monomial(1, (hi - j) as i32, 0), w)
                    })
                    .collect()
            }
        }
    }

    /// `m_t = E^f x_λ b_t` as an algebra element in index form.
    pub fn jm_vector(&self, t: &UpDownTableau, sum: RemovalSum) -> Result<Sparse> {
        if t.n() != self.n() || t.shape() != &self.label.lambda {
            return Err(Error::InvalidInput(format!("{t} does not index a basis vector of {}", self.label)));
        }
        // b_t is built by left multiplications, so m_t applies the step factors from k = n down.
        let mut v = self.basis[0].clone();
        for k in (1..=self.n()).rev() {
            let mut acc: BTreeMap<u32, Ground> = BTreeMap::new();
            for (c, letters) in Self::step_factor(t, k, sum) {
                let mut x = v.clone();
                for l in &letters {
                    x = self.alg.right_letter_sparse(&x, *l);
                }
                for (i, d) in x {
                    let s = acc.get(&i).map_or(d.mul(&c), |e| e.add(&d.mul(&c)));
                    if s.is_zero() {
                        acc.remove(&i);
                    } else {
                        acc.insert(i, s);
                    }
                }
            }
            v = acc.into_iter().collect();
        }
        Ok(v)
    }

    /// Rows are the coset coordinates of `m_t` for a given removal range.
    pub fn transition_with(&self, sum: RemovalSum) -> Result<Matrix<Ground>> {
        use rayon::prelude::*;
        self.updown.par_iter().map(|t| self.reduce(&self.jm_vector(t, sum)?)).collect()
    }

    /// Transition matrix `P` from the coset basis to the JM basis.
    pub fn transition(&self) -> Result<&Matrix<Ground>> {
        if let Some(p) = self.transition.get() {
            return Ok(p);
        }
        let p = self.transition_with(RemovalSum::Full)?;
        Ok(self.transition.get_or_init(|| p))
    }

    fn transition_inverse(&self) -> Result<&Matrix<Coeff>> {
        if let Some(p) = self.transition_inv.get() {
            return Ok(p);
        }
        let p = linalg::map_matrix(self.transition()?, |g| g.to_coeff());
        let inv = linalg::inverse(&p, &Coeff::one())
            .ok_or_else(|| Error::Verification(format!("JM vectors of {} are linearly dependent", self.label)))?;
        Ok(self.transition_inv.get_or_init(|| inv))
    }

    /// Coefficient of `E^f x_λ` in `x` modulo `B_n^{▷λ}`, for `x ∈ E^f x_λ B_n x_λ E^f`.
    fn cell_coefficient(&self, x: &[(u32, Ground)]) -> Result<Ground> {
        let f = self.label.f;
        let words = self.alg.basis();
        let mut groups: BTreeMap<(Perm, Perm), Vec<(Perm, Ground)>> = BTreeMap::new();
        for (i, c) in x {
            let w = &words[*i as usize];
            if w.f > f {
                continue;
            }
            if w.f < f {
                return Err(Error::Verification(format!("{w} lies below deficiency {f}")));
            }
            groups.entry((w.d1, w.d2)).or_default().push((w.w, c.clone()));
        }
        let mut out = Ground::zero();
        for ((d1, d2), h) in groups {
            for m in self.murphy.expand(h)? {
                if m.shape == self.shape {
                    if !(d1.is_identity() && d2.is_identity() && m.u == 0 && m.v == 0) {
                        return Err(Error::Verification(format!("Gram product has a stray term of shape {}", self.label.lambda)));
                    }
                    out = out.add(&m.coeff);
                } else if dominance(&self.murphy.shapes()[m.shape], &self.label.lambda)? != Dominance::Above {
                    return Err(Error::Verification(format!("Gram product has shape {} below {}", self.murphy.shapes()[m.shape], self.label.lambda)));
                }
            }
        }
        Ok(out)
    }

    /// Gram matrix of the invariant form on the coset basis:
    /// `x_i σ(x_j) ≡ G_ij · E^f x_λ (mod B_n^{▷λ})`.
    pub fn gram(&self) -> Result<Matrix<Ground>> {
        use rayon::prelude::*;
        let d = self.dim();
        let sig: Vec<Sparse> = self.basis.iter().map(|b| self.alg.to_sparse(&self.alg.from_sparse(b).sigma()).unwrap()).collect();
        let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i..d).map(move |j| (i, j))).collect();
        let vals: Vec<Ground> = pairs.par_iter().map(|&(i, j)| self.cell_coefficient(&self.alg.mul_sparse(&self.basis[i], &sig[j]))).collect::<Result<_>>()?;
        let mut g = vec![vec![Ground::zero(); d]; d];
        for ((i, j), v) in pairs.into_iter().zip(vals) {
            g[i][j] = v.clone();
            g[j][i] = v;
        }
        Ok(g)
    }

    /// Gram matrix on the JM basis, `P G Pᵀ`.
    pub fn gram_jm(&self) -> Result<Matrix<Ground>> {
        let p = self.transition()?;
        Ok(linalg::ring_mat_mul(&linalg::ring_mat_mul(p, &self.gram()?), &linalg::transpose(p)))
    }

    /// Matrix of `L_k` on the JM basis.
    pub fn jm_matrix(&self, k: usize) -> Result<Matrix<Coeff>> {
        let lk = self.alg.jm::<Ground>(k)?;
        let pa = linalg::ring_mat_mul(self.transition()?, &self.act_elt(&lk)?);
        let pa = linalg::map_matrix(&pa, |g| g.to_coeff());
        Ok(linalg::mat_mul(&pa, self.transition_inverse()?, &Coeff::zero()))
    }

    /// Checks that `L_k` is triangular on the JM basis with diagonal `c_t(k)`.
    pub fn check_triangular(&self, k: usize) -> Result<TriangularityCertificate> {
        let m = self.jm_matrix(k)?;
        let mut diagonal = Vec::new();
        let mut violations = Vec::new();
        let mut nonzero = 0;
        for (a, t) in self.updown.iter().enumerate() {
            let want = ct_eigenvalue(t, k);
            if m[a][a] != want {
                violations.push(format!("diagonal at {t}: got {}, expected {}", m[a][a].pretty(), want.pretty()));
            }
            diagonal.push((t.to_string(), m[a][a].clone(), want));
            for (b, s) in self.updown.iter().enumerate() {
                if a == b || m[a][b].is_zero() {
                    continue;
                }
                nonzero += 1;
                if !matches!(ud_compare(s, t)?, UdVerdict::Above(_)) {
                    violations.push(format!("m_{t} L_{k} has a term at {s}, which is not above {t}"));
                }
            }
        }
        Ok(TriangularityCertificate { label: self.label.clone(), k, diagonal, holds: violations.is_empty(), violations, nonzero_off_diagonal: nonzero })
    }
}

/// Specializes every entry of a matrix over the ground ring into a field.
pub fn specialize_matrix<F: Field>(m: &Matrix<Ground>, f: impl Fn(&Ground) -> Result<F>) -> Result<Matrix<F>> {
    m.iter().map(|r| r.iter().map(&f).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::labels;

    fn module(n: usize, f: usize, l: &str) -> CellModule {
        CellModule::new(&QBrauer::new(n).unwrap(), CellLabel::new(f, l.parse().unwrap())).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(module(2, 1, "").dim(), 1);
        assert_eq!(module(4, 1, "2").dim(), 6);
        assert_eq!(module(3, 0, "2,1").dim(), 2);
    }

    #[test]
    fn rank_two_actions() {
        let c = module(2, 1, "");
        assert_eq!(c.act(Letter::E).unwrap(), vec![vec![Ground::delta()]]);
        assert_eq!(c.act(Letter::T(1)).unwrap(), vec![vec![Ground::q()]]);
        assert_eq!(c.gram().unwrap(), vec![vec![Ground::delta()]]);
        let want = Coeff::monomial(1, 2, -2).sub(&Coeff::one()).div(&Ground::qdiff().to_coeff()).unwrap();
        assert_eq!(c.jm_matrix(2).unwrap(), vec![vec![want]]);
        assert_eq!(module(2, 0, "2").jm_matrix(2).unwrap(), vec![vec![Coeff::q()]]);
        assert!(module(2, 0, "2").jm_matrix(1).unwrap()[0][0].is_zero());
    }

    #[test]
    fn one_row_gram_is_poincare() {
        for n in 1..=4 {
            let want = Perm::all(n).iter().fold(Ground::zero(), |s, w| s.add(&Ground::monomial(1, 2 * w.length() as i32, 0)));
            assert_eq!(module(n, 0, &n.to_string()).gram().unwrap(), vec![vec![want]]);
        }
    }

    #[test]
    fn triangular_small() {
        for n in 1..=4 {
            let b = QBrauer::new(n).unwrap();
            for l in labels(n) {
                let c = CellModule::new(&b, l.clone()).unwrap();
                for k in 1..=n {
                    let cert = c.check_triangular(k).unwrap();
                    assert!(cert.holds, "{l} k={k}: {:?}", cert.violations);
                }
            }
        }
    }
}

#[cfg(test)]
mod range_tests {
    use super::*;
    use crate::coefficients::{Int, LaurentPoly, Mono};
    use crate::combinatorics::labels;

    #[test]
    fn short_removal_sum_is_degenerate() {
        // C(1, (1)) of B_3 has a removal step at k = 3 with an empty short sum.
        let c = CellModule::new(&QBrauer::new(3).unwrap(), CellLabel::new(1, "1".parse().unwrap())).unwrap();
        let p = linalg::map_matrix(&c.transition_with(RemovalSum::Short).unwrap(), |g| g.to_coeff());
        assert!(linalg::det(&p, &Coeff::one()).is_zero());
        let p = linalg::map_matrix(c.transition().unwrap(), |g| g.to_coeff());
        assert!(!linalg::det(&p, &Coeff::one()).is_zero());
    }

    #[test]
    fn removal_eigenvalue_uses_twice_the_content() {
        // Single-content exponent 2 - c(p) against the computed diagonal: it must disagree
        // somewhere a removed node has nonzero content.
        let mut seen = false;
        for n in 3..=4 {
            let b = QBrauer::new(n).unwrap();
            for l in labels(n).into_iter().filter(|l| l.f > 0) {
                let c = CellModule::new(&b, l).unwrap();
                for k in 2..=n {
                    let m = c.jm_matrix(k).unwrap();
                    for (a, t) in c.updown().iter().enumerate() {
                        if let Step::Remove(p) = t.step(k) {
                            if p.content() != 0 {
                                let num = LaurentPoly::from_terms([(Mono::new(2 - p.content(), -2), Int::one()), (Mono::ONE, -Int::one())]);
                                let single = Ground::from_parts(num, 1).to_coeff();
                                assert_ne!(m[a][a], single);
                                seen = true;
                            }
                        }
                    }
                }
            }
        }
        assert!(seen);
    }
}
