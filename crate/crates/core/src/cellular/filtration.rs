//! Restriction of `C(f, λ)` from `B_n` to `B_{n-1}`: the chain of submodules
//! generated by the elements `y^λ_μ`, checked layer by layer.

use super::linalg::{self, Matrix, Subspace};
use super::module::CellModule;
use super::spectrum;
use crate::coefficients::{Coeff, Ground, Num, NumericPoint};
use crate::combinatorics::{branching_list, ct_eigenvalue_ground, updown_tableaux, CellLabel, Partition, Perm};
use crate::error::{Error, Result};
use crate::hecke::young_subgroup;
use crate::qbrauer::{AlgebraElt, Letter, NormalWord, QBrauer, Sparse};

/// One layer `N_k / N_{k-1}` of the restriction filtration.
#[derive(Clone, Debug, serde::Serialize)]
pub struct FiltrationLayer {
    /// Expected factor, a cell label of `B_{n-1}`.
    pub factor: CellLabel,
    pub expected_dim: usize,
    pub observed_dim: usize,
    /// `N_k` equals the span of the JM vectors whose truncation lies in the first `k` factors.
    pub matches_jm_span: bool,
    /// The joint spectrum of `L_1, …, L_{n-1}` on the layer equals that of the factor.
    pub spectrum_matches: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct FiltrationReport {
    pub label: CellLabel,
    pub n: usize,
    /// Evaluation point used for the spectra.
    pub point: String,
    pub layers: Vec<FiltrationLayer>,
    pub total_dim: usize,
    pub holds: bool,
}

/// `E^f x_μ` in `B_n`, with `μ` acting on the strands `2f+1..n`.
fn e_x(alg: &QBrauer, f: usize, mu: &Partition) -> Sparse {
    let n = alg.n();
    let id = Perm::identity(n);
    let ys = if mu.is_empty() { vec![id] } else { young_subgroup(mu, 2 * f + 1, n) };
    let mut v: Sparse = ys
        .iter()
        .map(|y| {
            let w = NormalWord { f, d1: id, w: *y, d2: id };
            let i = alg.index_of(&w).expect("E^f x_mu words are normal words");
            (i as u32, Ground::monomial(1, y.length() as i32, 0))
        })
        .collect();
    v.sort_by_key(|t| t.0);
    v
}

fn apply(alg: &QBrauer, mut v: Sparse, letters: impl IntoIterator<Item = Letter>) -> Sparse {
    for l in letters {
        v = alg.right_letter_sparse(&v, l);
    }
    v
}

/// Generator of the layer of the restriction of `C(f, λ)` indexed by `μ`.
///
/// For `μ = λ` minus a node in row `k` this is `E^f x_λ T_a ⋯ T_{n-1}` with
/// `a = 2f + λ_1 + ⋯ + λ_k`; for `μ = λ` plus a node in row `k` it is
/// `E_{2f-1} T_{2f}^-1 ⋯ T_{n-1}^-1 · T_{2f-1}^-1 ⋯ T_{b-1}^-1 · E^{f-1} x_μ`
/// with `b = 2f - 1 + λ_1 + ⋯ + λ_k`.
pub fn y_element(alg: &QBrauer, f: usize, lambda: &Partition, mu: &Partition) -> Result<AlgebraElt<Ground>> {
    let n = alg.n();
    let br = branching_list(f, lambda, n)?;
    let prefix = |r: usize| -> usize { (1..=r).map(|i| lambda.row(i) as usize).sum() };
    let v = if br.removals.contains(mu) {
        let r = row_of_difference(lambda, mu);
        let a = 2 * f + prefix(r);
        apply(alg, e_x(alg, f, lambda), (a..n).map(Letter::T))
    } else if br.additions.contains(mu) {
        let r = row_of_difference(mu, lambda);
        let b = 2 * f - 1 + prefix(r);
        let e = alg.to_sparse(&alg.e_index::<Ground>(2 * f - 1)?)?;
        let head = apply(alg, e, (2 * f..n).chain(2 * f - 1..b).map(Letter::TInv));
        alg.mul_sparse(&head, &e_x(alg, f - 1, mu))
    } else {
        return Err(Error::InvalidInput(format!("{mu} is not in the restriction list of ({f}, {lambda})")));
    };
    Ok(alg.from_sparse(&v))
}

/// Row of the single node of `big` not in `small`.
fn row_of_difference(big: &Partition, small: &Partition) -> usize {
    (1..=big.parts().len()).find(|&i| big.row(i) != small.row(i)).expect("partitions differ by one node")
}

/// Generators of `B_{n-1}` inside `B_n`.
fn sub_generators(n: usize) -> Vec<Letter> {
    let mut g: Vec<Letter> = (1..n.saturating_sub(1)).map(Letter::T).collect();
    if n >= 3 {
        g.push(Letter::E);
    }
    g
}

/// Builds `N_1 ⊂ ⋯ ⊂ N_m` and checks each layer against its expected factor:
/// dimension, agreement with the JM basis, and the joint JM spectrum at `point`.
pub fn filtration_check(m: &CellModule, point: &NumericPoint) -> Result<FiltrationReport> {
    let alg = m.algebra();
    let n = m.n();
    let label = m.label().clone();
    let br = branching_list(label.f, &label.lambda, n)?;
    let (q0, z0) = (point.q0(), point.z0());
    let ev = |g: &Ground| g.eval(q0, z0);
    let one = Num::one_in(point.characteristic());

    let gens: Vec<Matrix<Ground>> = sub_generators(n).into_iter().map(|g| m.act(g)).collect::<Result<_>>()?;
    let gens_sym: Vec<Matrix<Coeff>> = gens.iter().map(|a| linalg::map_matrix(a, |g| g.to_coeff())).collect();
    let gens_num: Vec<Matrix<Num>> = gens.iter().map(|a| super::specialize_matrix(a, ev)).collect::<Result<_>>()?;
    let jms: Vec<Matrix<Num>> =
        (1..n).map(|i| super::specialize_matrix(&m.act_elt(&alg.jm::<Ground>(i)?)?, ev)).collect::<Result<_>>()?;
    let p = m.transition()?;

    let mut sym = Subspace::<Coeff>::new(m.dim());
    let mut num = Subspace::<Num>::new(m.dim());
    let mut layers = Vec::new();
    let mut seen: Vec<CellLabel> = Vec::new();
    for (mu, factor) in br.list().iter().zip(br.labels()) {
        let y = m.reduce(&alg.to_sparse(&y_element(alg, label.f, &label.lambda, mu)?)?)?;
        let before = sym.dim();
        sym.extend_closure(&[y.iter().map(|g| g.to_coeff()).collect()], &gens_sym);
        let observed_dim = sym.dim() - before;
        let expected_dim = factor.dimension();
        seen.push(factor.clone());

        let mut jm_span = Subspace::<Coeff>::new(m.dim());
        for (row, t) in p.iter().zip(m.updown()) {
            if seen.contains(&t.label_at(n - 1)) {
                jm_span.insert(&row.iter().map(|g| g.to_coeff()).collect::<Vec<_>>());
            }
        }
        let matches_jm_span = jm_span.equals(&sym);

        let old_rows = num.basis().clone();
        let y_num: Vec<Num> = y.iter().map(ev).collect::<Result<_>>()?;
        let fresh = num.extend_closure(&[y_num], &gens_num);
        let spectrum_matches = fresh.len() == observed_dim && {
            let mut rows = old_rows;
            rows.extend(fresh.iter().cloned());
            let off = rows.len() - fresh.len();
            let mut quotient: Vec<Matrix<Num>> = Vec::new();
            for a in &jms {
                let mut qm = Vec::new();
                for v in &fresh {
                    let x = linalg::solve_left(&rows, &linalg::vec_mat(v, a), &one)
                        .ok_or_else(|| Error::Verification(format!("N_{} of {label} is not stable under the JM elements", layers.len() + 1)))?;
                    qm.push(x[off..].to_vec());
                }
                quotient.push(qm);
            }
            let expected: Vec<Vec<Num>> = updown_tableaux(n - 1, &factor.lambda)?
                .iter()
                .filter(|s| s.label() == factor)
                .map(|s| (1..n).map(|i| ev(&ct_eigenvalue_ground(s, i))).collect::<Result<Vec<_>>>())
                .collect::<Result<_>>()?;
            spectrum::joint_spectrum_is(&quotient, fresh.len(), &expected, &one)
        };
        let holds = observed_dim == expected_dim && matches_jm_span && spectrum_matches;
        layers.push(FiltrationLayer { factor, expected_dim, observed_dim, matches_jm_span, spectrum_matches, holds });
    }
    let total_dim = sym.dim();
    let holds = total_dim == m.dim() && layers.iter().all(|l| l.holds);
    Ok(FiltrationReport { label, n, point: crate::coefficients::Specialization::NumericPoint(point.clone()).to_string(), layers, total_dim, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::labels;

    #[test]
    fn small_filtrations_hold() {
        let point = spectrum::random_point(11).unwrap();
        for n in 1..=4 {
            let alg = QBrauer::new(n).unwrap();
            for label in labels(n) {
                let m = CellModule::new(&alg, label.clone()).unwrap();
                let r = filtration_check(&m, &point).unwrap();
                assert!(r.holds, "{label} in B_{n}: {r:?}");
            }
        }
    }

    #[test]
    fn three_strand_layers() {
        let alg = QBrauer::new(3).unwrap();
        let m = CellModule::new(&alg, CellLabel::new(1, "1".parse().unwrap())).unwrap();
        let r = filtration_check(&m, &spectrum::random_point(3).unwrap()).unwrap();
        let dims: Vec<usize> = r.layers.iter().map(|l| l.observed_dim).collect();
        assert_eq!(dims.iter().sum::<usize>(), 3);
        assert_eq!(r.layers[0].factor, CellLabel::new(1, Partition::empty()));

        let alg = QBrauer::new(4).unwrap();
        let m = CellModule::new(&alg, CellLabel::new(2, Partition::empty())).unwrap();
        let r = filtration_check(&m, &spectrum::random_point(3).unwrap()).unwrap();
        assert_eq!(r.layers.len(), 1);
        assert_eq!((r.layers[0].factor.f, r.layers[0].observed_dim), (1, 3));
    }
}
