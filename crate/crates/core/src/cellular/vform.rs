//! The module `V = E_1 B_n + B_n^2 / B_n^2` with basis `E_1 T_w T_d`
//! (`w` fixing `1, 2`, `d` a coset representative) and its trace form
//! `φ(x, y) = τ(h)` where `x σ(y) ≡ E_1 h`.

use super::linalg::{self, Matrix};
use crate::coefficients::{eval_poly, Coeff, Ground, Num};
use crate::error::{Error, Result};
use crate::qbrauer::{Letter, NormalWord, QBrauer, Sparse};
use std::collections::HashMap;

/// `V` for one rank, with its basis words.
pub struct VModule {
    alg: QBrauer,
    /// Algebra indices of the basis words.
    words: Vec<u32>,
    position: HashMap<u32, usize>,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct VFormReport {
    pub n: usize,
    pub dim: usize,
    pub gram_symmetric: bool,
    /// Every `T_k` acts by a symmetric matrix.
    pub hecke_actions_symmetric: bool,
    /// `G A_k = A_k G` for every `T_k`.
    pub commutes_with_hecke: bool,
    /// `A G = G Aᵀ` for every generator, `E_1` included.
    pub invariant: bool,
    /// `(G_ii - δ) / ((q - q^-1) z)` is a Laurent polynomial in `q`.
    pub diagonal_shape: bool,
    /// `G_ij / z` is a Laurent polynomial in `q`, congruent to `0` or a power of `q`
    /// modulo `q - q^-1`.
    pub off_diagonal_shape: bool,
    pub holds: bool,
}

impl VModule {
    pub fn new(alg: &QBrauer) -> Result<VModule> {
        if alg.n() < 2 {
            return Err(Error::InvalidInput("V needs n >= 2".into()));
        }
        let words: Vec<u32> = alg.basis().iter().enumerate().filter(|(_, w)| w.f == 1 && w.d1.is_identity()).map(|(i, _)| i as u32).collect();
        let position = words.iter().enumerate().map(|(k, i)| (*i, k)).collect();
        Ok(VModule { alg: alg.clone(), words, position })
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn basis_words(&self) -> Vec<&NormalWord> {
        self.words.iter().map(|&i| &self.alg.basis()[i as usize]).collect()
    }

    /// Coordinates of an element of `E_1 B_n` modulo `B_n^2`.
    fn coordinates(&self, x: &Sparse) -> Result<Vec<Ground>> {
        let mut out = vec![Ground::zero(); self.dim()];
        for (i, c) in x {
            let w = &self.alg.basis()[*i as usize];
            if w.f >= 2 {
                continue;
            }
            let k = self.position.get(i).ok_or_else(|| Error::Verification(format!("{w} is not in E_1 B_n + B_n^2")))?;
            out[*k] = out[*k].add(c);
        }
        Ok(out)
    }

    /// Matrix of a generator on `V`; row `i` is the image of basis vector `i`.
    pub fn act(&self, g: Letter) -> Result<Matrix<Ground>> {
        g.check(self.alg.n())?;
        self.words.iter().map(|&i| self.coordinates(&self.alg.right_letter_sparse(&[(i, Ground::one())], g))).collect()
    }

    /// `τ(h)` for `x σ(y) ≡ E_1 h (mod B_n^2)`.
    fn trace_pairing(&self, x: &Sparse) -> Result<Ground> {
        let mut out = Ground::zero();
        for (i, c) in x {
            let w = &self.alg.basis()[*i as usize];
            if w.f >= 2 {
                continue;
            }
            if w.f == 0 || !w.d1.is_identity() || !w.d2.is_identity() {
                return Err(Error::Verification(format!("{w} is not in E_1 H + B_n^2")));
            }
            if w.w.is_identity() {
                out = out.add(c);
            }
        }
        Ok(out)
    }

    /// Gram matrix of `φ` on the basis of `V`.
    pub fn gram(&self) -> Result<Matrix<Ground>> {
        use rayon::prelude::*;
        let d = self.dim();
        let sig: Vec<Sparse> =
            self.words.iter().map(|&i| self.alg.to_sparse(&self.alg.from_sparse(&[(i, Ground::one())]).sigma())).collect::<Result<_>>()?;
        let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).collect();
        let vals: Vec<Ground> = pairs
            .par_iter()
            .map(|&(i, j)| self.trace_pairing(&self.alg.mul_sparse(&[(self.words[i], Ground::one())], &sig[j])))
            .collect::<Result<_>>()?;
        Ok(vals.chunks(d).map(|r| r.to_vec()).collect())
    }

    /// Symmetry, invariance, commutation and entry-shape checks.
    pub fn check(&self) -> Result<VFormReport> {
        let n = self.alg.n();
        let g = self.gram()?;
        let tr = linalg::transpose(&g);
        let gram_symmetric = g == tr;
        let mut hecke_actions_symmetric = true;
        let mut commutes_with_hecke = true;
        let mut invariant = true;
        let mut letters: Vec<Letter> = (1..n).map(Letter::T).collect();
        letters.push(Letter::E);
        for l in letters {
            let a = self.act(l)?;
            let at = linalg::transpose(&a);
            let ag = linalg::ring_mat_mul(&a, &g);
            invariant &= ag == linalg::ring_mat_mul(&g, &at);
            if let Letter::T(_) = l {
                hecke_actions_symmetric &= a == at;
                commutes_with_hecke &= ag == linalg::ring_mat_mul(&g, &a);
            }
        }
        let scale_diag = Ground::qdiff().mul(&Ground::z()).to_coeff();
        let delta = Ground::delta();
        let mut diagonal_shape = true;
        let mut off_diagonal_shape = true;
        for (i, row) in g.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i == j {
                    let h = x.sub(&delta).to_coeff().div(&scale_diag)?;
                    diagonal_shape &= h.is_laurent() && h.is_z_free();
                } else {
                    let h = x.to_coeff().div(&Coeff::z())?;
                    off_diagonal_shape &= h.is_laurent() && h.is_z_free() && unit_power_mod_qdiff(&h)?;
                }
            }
        }
        let holds = gram_symmetric && hecke_actions_symmetric && commutes_with_hecke && invariant && diagonal_shape && off_diagonal_shape;
        Ok(VFormReport {
            n,
            dim: self.dim(),
            gram_symmetric,
            hecke_actions_symmetric,
            commutes_with_hecke,
            invariant,
            diagonal_shape,
            off_diagonal_shape,
            holds,
        })
    }
}

/// For a Laurent polynomial `h` in `q`: whether `h ≡ 0` or `h ≡ q^b` modulo `q - q^-1`.
/// Since `Z[q, q^-1] / (q^2 - 1)` embeds in `Z × Z` via `h ↦ (h(1), h(-1))`, this
/// amounts to `(h(1), h(-1))` being `(0, 0)` or `(1, ±1)`.
fn unit_power_mod_qdiff(h: &Coeff) -> Result<bool> {
    let at = |x: i64| -> Result<Num> {
        let (q0, z0) = (Num::rational(x, 1), Num::rational(1, 1));
        eval_poly(h.numerator(), &q0, &z0)?.div(&eval_poly(h.denominator(), &q0, &z0)?)
    };
    let (plus, minus) = (at(1)?, at(-1)?);
    let r = |v: i64| Num::rational(v, 1);
    Ok((plus.is_zero() && minus.is_zero()) || (plus == r(1) && (minus == r(1) || minus == r(-1))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_form_is_delta() {
        let v = VModule::new(&QBrauer::new(2).unwrap()).unwrap();
        assert_eq!(v.dim(), 1);
        assert_eq!(v.gram().unwrap(), vec![vec![Ground::delta()]]);
    }

    #[test]
    fn form_checks_hold() {
        for n in 2..=4 {
            let v = VModule::new(&QBrauer::new(n).unwrap()).unwrap();
            let r = v.check().unwrap();
            assert!(r.holds, "{r:?}");
        }
    }
}
