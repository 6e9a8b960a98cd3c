//! Radicals of cell modules under a specialization, two-box admissibility,
//! and the corner functor `M ↦ M Ẽ_1`.

use super::linalg::{self, Matrix};
use super::module::{specialize_matrix, CellModule};
use super::spectrum;
use crate::coefficients::{Coeff, Field, Ground, Num, NumericPoint, Specialization};
use crate::combinatorics::{ct_eigenvalue_ground, updown_tableaux, CellLabel, Node, Partition};
use crate::error::{Error, Result};
use crate::qbrauer::{AlgebraElt, Letter};
use std::collections::BTreeSet;

/// Boxes of `big` outside `small`, if `small ⊆ big`.
fn skew_nodes(big: &Partition, small: &Partition) -> Option<Vec<Node>> {
    let rows = big.len().max(small.len());
    let mut out = Vec::new();
    for i in 1..=rows {
        let (b, s) = (big.row(i), small.row(i));
        if s > b {
            return None;
        }
        out.extend((s + 1..=b).map(|c| Node::new(i as u32, c)));
    }
    Some(out)
}

/// The exponent `a` with `z^2 = q^{2a}` at which `λ` is `(1, μ)`-admissible:
/// `μ ⊂ λ`, the two extra boxes lie in different columns, and `a = 1 - c(p_1) - c(p_2)`.
/// `None` when the containment or column condition fails.
pub fn admissibility_exponent(lambda: &Partition, mu: &Partition) -> Result<Option<i32>> {
    if lambda.size() != mu.size() + 2 {
        return Err(Error::InvalidInput(format!("|{lambda}| must be |{mu}| + 2")));
    }
    let Some(nodes) = skew_nodes(lambda, mu) else { return Ok(None) };
    if nodes[0].col == nodes[1].col {
        return Ok(None);
    }
    Ok(Some(1 - nodes[0].content() - nodes[1].content()))
}

/// Whether `λ` is `(1, μ)`-admissible under `spec`.
pub fn admissible(lambda: &Partition, mu: &Partition, spec: &Specialization) -> Result<bool> {
    let Some(a) = admissibility_exponent(lambda, mu)? else { return Ok(false) };
    Ok(match spec {
        // z = q^b gives z^2 = q^{2b}.
        Specialization::IntegerExponent(b) => *b == a,
        Specialization::NumericPoint(p) => p.z0().mul(p.z0()) == p.q0().pow(2 * a as i64)?,
    })
}

/// Partitions `μ` plus two boxes in different columns, decreasing lexicographically.
pub fn two_box_shapes(mu: &Partition) -> Vec<Partition> {
    let mut out = BTreeSet::new();
    for p in mu.addable() {
        let nu = mu.add_node(p).expect("addable");
        for r in nu.addable() {
            if r.col != p.col {
                out.insert(nu.add_node(r).expect("addable").parts().to_vec());
            }
        }
    }
    let mut v: Vec<Partition> = out.into_iter().map(|p| Partition::new(p).expect("valid")).collect();
    v.sort_by(|a, b| b.lex_cmp(a));
    v
}

/// Composition factors of a radical, read off from its Jucys-Murphy spectrum.
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize)]
pub enum RadicalFactors {
    Zero,
    /// Shapes `λ` whose cell modules `C(0, λ)` make up the radical.
    Shapes(Vec<Partition>),
    Inconclusive { radical_dim: usize, reason: String },
}

fn ground_to_coeff(a: i32) -> impl Fn(&Ground) -> Result<Coeff> {
    move |g| Ok(g.subst_z_power(a).to_coeff())
}

fn ground_to_num(p: &NumericPoint) -> impl Fn(&Ground) -> Result<Num> + '_ {
    move |g| g.eval(p.q0(), p.z0())
}

/// Corank of the Gram matrix of `m` under `spec`.
pub fn radical_dim(m: &CellModule, spec: &Specialization) -> Result<usize> {
    let g = m.gram()?;
    Ok(match spec {
        Specialization::IntegerExponent(a) => g.len() - linalg::rank(&specialize_matrix(&g, ground_to_coeff(*a))?),
        Specialization::NumericPoint(p) => g.len() - linalg::rank(&specialize_matrix(&g, ground_to_num(p))?),
    })
}

/// Composition factors of the radical of `C(1, μ)` under `spec`, identified by
/// matching the joint spectrum of `L_1, …, L_n` on the radical against the
/// spectra of `C(0, λ)` for the two-box shapes `λ ⊃ μ`.
pub fn radical_factor_shape(m: &CellModule, spec: &Specialization) -> Result<RadicalFactors> {
    if m.label().f != 1 {
        return Err(Error::InvalidInput(format!("radical factors are identified for labels (1, μ), not {}", m.label())));
    }
    match spec {
        Specialization::IntegerExponent(a) => factor_shapes(m, ground_to_coeff(*a), &Coeff::one()),
        Specialization::NumericPoint(p) => factor_shapes(m, ground_to_num(p), &Num::one_in(p.characteristic())),
    }
}

fn factor_shapes<F: Field>(m: &CellModule, sp: impl Fn(&Ground) -> Result<F>, one: &F) -> Result<RadicalFactors> {
    let alg = m.algebra();
    let n = m.n();
    let g = specialize_matrix(&m.gram()?, &sp)?;
    let rad = linalg::left_kernel(&g, one);
    let d = rad.len();
    if d == 0 {
        return Ok(RadicalFactors::Zero);
    }
    let mut restricted: Vec<Matrix<F>> = Vec::new();
    for k in 1..=n {
        let a = specialize_matrix(&m.act_elt(&alg.jm::<Ground>(k)?)?, &sp)?;
        let rows = rad
            .iter()
            .map(|r| linalg::solve_left(&rad, &linalg::vec_mat(r, &a), one).ok_or_else(|| Error::Verification(format!("radical of {} is not a submodule", m.label()))))
            .collect::<Result<Matrix<F>>>()?;
        restricted.push(rows);
    }
    let mut shapes = Vec::new();
    let mut union: Vec<Vec<F>> = Vec::new();
    for gamma in two_box_shapes(&m.label().lambda) {
        let tuples: Vec<Vec<F>> = updown_tableaux(n, &gamma)?
            .iter()
            .filter(|s| s.label().f == 0)
            .map(|s| (1..=n).map(|k| sp(&ct_eigenvalue_ground(s, k))).collect::<Result<Vec<F>>>())
            .collect::<Result<_>>()?;
        if tuples.iter().all(|t| spectrum::joint_multiplicity(&restricted, t, one) > 0) {
            shapes.push(gamma);
            union.extend(tuples);
        }
    }
    if shapes.is_empty() {
        return Ok(RadicalFactors::Inconclusive { radical_dim: d, reason: "no two-box shape fits the radical's spectrum".into() });
    }
    if !spectrum::joint_spectrum_is(&restricted, d, &union, one) {
        let names: Vec<String> = shapes.iter().map(|s| s.to_string()).collect();
        return Ok(RadicalFactors::Inconclusive { radical_dim: d, reason: format!("shapes {} do not account for the whole spectrum", names.join(", ")) });
    }
    Ok(RadicalFactors::Shapes(shapes))
}

/// Outcome of comparing `dim C(f, λ) Ẽ_1` with `dim C(f - 1, λ)` of `B_{n-2}`.
#[derive(Clone, Debug, serde::Serialize)]
pub struct FunctorReport {
    pub label: CellLabel,
    pub image_dim: usize,
    pub expected_dim: usize,
    pub holds: bool,
}

/// Rank of `Ẽ_1` on `C(f, λ)` against `dim C(f - 1, λ)`, which is `0` when `f = 0`.
///
/// For `n = 2` the idempotent is not available and `E_1` is used instead: the two
/// differ by the invertible scalar `δ` there, so the image is the same.
pub fn functor_f_check(m: &CellModule) -> Result<FunctorReport> {
    let alg = m.algebra();
    let e: AlgebraElt<Ground> = if m.n() >= 3 { alg.tilde_e1()? } else { alg.generator_elt(Letter::E)? };
    let a = linalg::map_matrix(&m.act_elt(&e)?, |g| g.to_coeff());
    let image_dim = linalg::rank(&a);
    let label = m.label().clone();
    let expected_dim = if label.f == 0 { 0 } else { CellLabel::new(label.f - 1, label.lambda.clone()).dimension() };
    Ok(FunctorReport { label, image_dim, expected_dim, holds: image_dim == expected_dim })
}

/// On `C(1, μ)` at `point`, the joint spectrum of the Hecke elements
/// `J_k = Σ_{j<k} (j, k)` is the union of the spectra of the two-box shapes
/// `λ ⊃ μ`, each once.
pub fn two_box_hecke_check(m: &CellModule, point: &NumericPoint) -> Result<bool> {
    if m.label().f != 1 {
        return Err(Error::InvalidInput(format!("the two-box pattern concerns labels (1, μ), not {}", m.label())));
    }
    let alg = m.algebra();
    let n = m.n();
    let sp = ground_to_num(point);
    let one = Num::one_in(point.characteristic());
    let mut mats = Vec::new();
    for k in 1..=n {
        let mut j = alg.zero::<Ground>();
        for i in 1..k {
            j = j.add(&alg.transposition(i, k)?)?;
        }
        mats.push(specialize_matrix(&m.act_elt(&j)?, &sp)?);
    }
    let mut expected = Vec::new();
    for gamma in two_box_shapes(&m.label().lambda) {
        for s in updown_tableaux(n, &gamma)?.iter().filter(|s| s.label().f == 0) {
            expected.push((1..=n).map(|k| sp(&ct_eigenvalue_ground(s, k))).collect::<Result<Vec<Num>>>()?);
        }
    }
    Ok(spectrum::joint_spectrum_is(&mats, m.dim(), &expected, &one))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::labels;
    use crate::qbrauer::QBrauer;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn admissibility_examples() {
        assert_eq!(admissibility_exponent(&p("2"), &Partition::empty()).unwrap(), Some(0));
        assert_eq!(admissibility_exponent(&p("1,1"), &Partition::empty()).unwrap(), None);
        assert_eq!(admissibility_exponent(&p("2,1"), &p("1")).unwrap(), Some(1));
        assert!(admissible(&p("2,1"), &p("1"), &Specialization::IntegerExponent(1)).unwrap());
        assert!(!admissible(&p("2,1"), &p("1"), &Specialization::IntegerExponent(2)).unwrap());
        assert!(admissibility_exponent(&p("2"), &p("1")).is_err());
        assert_eq!(two_box_shapes(&p("1")), vec![p("3"), p("2,1")]);
    }

    #[test]
    fn radical_of_three_strand_module() {
        let alg = QBrauer::new(3).unwrap();
        let m = CellModule::new(&alg, CellLabel::new(1, p("1"))).unwrap();
        let z_is_q = Specialization::IntegerExponent(1);
        assert!(radical_dim(&m, &z_is_q).unwrap() >= 1);
        assert_eq!(radical_factor_shape(&m, &z_is_q).unwrap(), RadicalFactors::Shapes(vec![p("2,1")]));
        assert_eq!(radical_dim(&m, &Specialization::IntegerExponent(2)).unwrap(), 0);
        let alg2 = QBrauer::new(2).unwrap();
        let m2 = CellModule::new(&alg2, CellLabel::new(1, Partition::empty())).unwrap();
        assert_eq!(radical_dim(&m2, &Specialization::IntegerExponent(3)).unwrap(), 0);
    }

    #[test]
    fn functor_and_two_box() {
        let point = spectrum::random_point(5).unwrap();
        for n in 2..=4 {
            let alg = QBrauer::new(n).unwrap();
            for label in labels(n) {
                let m = CellModule::new(&alg, label.clone()).unwrap();
                assert!(functor_f_check(&m).unwrap().holds, "{label}");
                if label.f == 1 {
                    assert!(two_box_hecke_check(&m, &point).unwrap(), "{label}");
                }
            }
        }
    }
}
