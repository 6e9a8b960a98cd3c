//! When is `B_n(q, z)` semisimple: the closed-form criterion, and a brute-force
//! verdict from Gram determinants of cell modules.

use crate::cellular::{linalg, specialize_matrix, spectrum, CellModule};
use crate::coefficients::{Ground, Num, Specialization};
use crate::combinatorics::{labels, CellLabel};
use crate::error::{Error, Result};
use crate::qbrauer::QBrauer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeSet;

/// Exponents `a` such that `z^2 = q^{2a}` breaks semisimplicity of `B_n` when `e > n`:
/// `4-2n ≤ a ≤ n-2`, except odd `a` with `4-2n < a ≤ 3-n`.
pub fn bad_exponent_set(n: usize) -> BTreeSet<i32> {
    let n = n as i32;
    (4 - 2 * n..=n - 2).filter(|&a| !(a > 4 - 2 * n && a <= 3 - n && a % 2 != 0)).collect()
}

/// The closed-form prediction. `e = None` means `q^2` is not a root of unity;
/// `relation = Some(a)` means `z^2 = q^{2a}` holds, `None` that no such relation holds.
pub fn criterion(n: usize, e: Option<u64>, relation: Option<i32>) -> bool {
    let e_ok = e.is_none_or(|e| e > n as u64);
    e_ok && relation.is_none_or(|a| !bad_exponent_set(n).contains(&a))
}

/// Gram matrices of every cell module of one rank, computed once.
pub struct GramTable {
    pub n: usize,
    pub entries: Vec<(CellLabel, linalg::Matrix<Ground>)>,
}

impl GramTable {
    pub fn new(n: usize) -> Result<GramTable> {
        let alg = QBrauer::new(n)?;
        let entries = labels(n)
            .into_par_iter()
            .map(|l| {
                let m = CellModule::new(&alg, l.clone())?;
                Ok((l, m.gram()?))
            })
            .collect::<Result<_>>()?;
        Ok(GramTable { n, entries })
    }
}

/// Decides `det G = 0` under `spec`. For `z = q^a` a nonzero value at a random
/// point settles it; a zero value is confirmed by an exact rank computation over `Q(q)`.
pub fn det_vanishes(g: &linalg::Matrix<Ground>, spec: &Specialization, seed: u64) -> Result<bool> {
    if g.is_empty() {
        return Ok(false);
    }
    match spec {
        Specialization::NumericPoint(p) => {
            let m = specialize_matrix(g, |x| x.eval(p.q0(), p.z0()))?;
            Ok(linalg::det(&m, &Num::one_in(p.characteristic())).is_zero())
        }
        Specialization::IntegerExponent(a) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let ch = spectrum::EVAL_PRIME;
            let q0 = loop {
                let v = Num::modular(rng.gen_range(2..ch - 1) as i64, ch);
                if !v.mul(&v).is_one() {
                    break v;
                }
            };
            let z0 = q0.pow(*a as i64)?;
            let m = specialize_matrix(g, |x| x.eval(&q0, &z0))?;
            if !linalg::det(&m, &Num::one_in(ch)).is_zero() {
                return Ok(false);
            }
            let m = specialize_matrix(g, |x| Ok(x.subst_z_power(*a).to_coeff()))?;
            Ok(linalg::rank(&m) < m.len())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LabelDet {
    /// Rank of the algebra the label belongs to.
    pub n: usize,
    pub f: usize,
    pub lambda: Vec<u32>,
    pub det_zero: bool,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct SemisimplicityVerdict {
    pub n: usize,
    pub spec: String,
    /// Quantum characteristic; `None` is infinite.
    pub e: Option<u64>,
    /// Every Gram determinant of `B_n` is nonzero.
    pub full_route: bool,
    /// `e > n` and every Gram determinant of a deficiency-one label of `B_k`, `2 ≤ k ≤ n`, is nonzero.
    pub reduced_route: bool,
    pub observed: bool,
    pub predicted: bool,
    pub labels: Vec<LabelDet>,
}

/// `Some(a)` if `z^2 = q^{2a}` at `spec` for some `a` in the bad set of `n`, else `None`.
/// Other relations do not affect the criterion.
fn bad_relation(n: usize, spec: &Specialization) -> Result<Option<i32>> {
    Ok(match spec {
        Specialization::IntegerExponent(a) => Some(*a),
        Specialization::NumericPoint(p) => {
            let z2 = p.z0().mul(p.z0());
            let mut hit = None;
            for a in bad_exponent_set(n) {
                if p.q0().pow(2 * a as i64)? == z2 {
                    hit = Some(a);
                    break;
                }
            }
            hit
        }
    })
}

fn check_spec(spec: &Specialization) -> Result<()> {
    if *spec == Specialization::IntegerExponent(0) {
        return Err(Error::InvalidInput("z = q^0 makes z - z^-1 zero".into()));
    }
    Ok(())
}

/// Brute-force semisimplicity from Gram determinants, by two routes that must agree.
pub fn brute_semisimple(n: usize, spec: &Specialization, seed: u64) -> Result<SemisimplicityVerdict> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("semisimplicity needs n >= 2, got {n}")));
    }
    check_spec(spec)?;
    let tables: Vec<GramTable> = (2..=n).map(GramTable::new).collect::<Result<_>>()?;
    let e = spec.quantum_characteristic();
    let mut jobs: Vec<(usize, &CellLabel, &linalg::Matrix<Ground>)> = Vec::new();
    for t in &tables {
        for (l, g) in &t.entries {
            if t.n == n || l.f == 1 {
                jobs.push((t.n, l, g));
            }
        }
    }
    let dets: Vec<LabelDet> = jobs
        .par_iter()
        .map(|(k, l, g)| Ok(LabelDet { n: *k, f: l.f, lambda: l.lambda.parts().to_vec(), det_zero: det_vanishes(g, spec, seed)? }))
        .collect::<Result<_>>()?;
    let full_route = dets.iter().filter(|d| d.n == n).all(|d| !d.det_zero);
    let e_ok = e.is_none_or(|e| e > n as u64);
    let reduced_route = e_ok && dets.iter().filter(|d| d.f == 1).all(|d| !d.det_zero);
    if full_route != reduced_route {
        return Err(Error::Verification(format!("the two semisimplicity routes disagree for n={n} at {spec}")));
    }
    let predicted = criterion(n, e, bad_relation(n, spec)?);
    Ok(SemisimplicityVerdict { n, spec: spec.to_string(), e, full_route, reduced_route, observed: full_route, predicted, labels: dets })
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct ScanReport {
    pub n: usize,
    pub from: i32,
    pub to: i32,
    /// Exponents `a` at which some Gram determinant vanishes identically under `z = q^a`.
    pub zeros: BTreeSet<i32>,
    /// `(a, k, label)` for each vanishing determinant, `k` the rank of the label.
    pub witnesses: Vec<(i32, usize, CellLabel)>,
    pub expected: BTreeSet<i32>,
    pub matches: bool,
}

/// Exponents in `[from, to]` at which some `det G_{f,λ}(q, q^a)` of `B_k`, `2 ≤ k ≤ n`,
/// `f ≥ 1`, vanishes identically in `q`.
pub fn scan(n: usize, from: i32, to: i32, seed: u64) -> Result<ScanReport> {
    if n < 2 || from > to {
        return Err(Error::InvalidInput(format!("scan needs n >= 2 and from <= to, got n={n}, [{from}, {to}]")));
    }
    let tables: Vec<GramTable> = (2..=n).map(GramTable::new).collect::<Result<_>>()?;
    let mut jobs = Vec::new();
    for a in from..=to {
        for t in &tables {
            for (l, g) in t.entries.iter().filter(|(l, _)| l.f >= 1) {
                jobs.push((a, t.n, l, g));
            }
        }
    }
    let hits: Vec<bool> = jobs.par_iter().map(|(a, _, _, g)| det_vanishes(g, &Specialization::IntegerExponent(*a), seed)).collect::<Result<_>>()?;
    let witnesses: Vec<(i32, usize, CellLabel)> = jobs.iter().zip(&hits).filter(|(_, h)| **h).map(|((a, k, l, _), _)| (*a, *k, (*l).clone())).collect();
    let zeros: BTreeSet<i32> = witnesses.iter().map(|w| w.0).collect();
    let expected: BTreeSet<i32> = bad_exponent_set(n).into_iter().filter(|a| (from..=to).contains(a)).collect();
    Ok(ScanReport { n, from, to, matches: zeros == expected, zeros, witnesses, expected })
}

/// The default scan window, one step past the bad set on each side.
pub fn default_window(n: usize) -> (i32, i32) {
    (4 - 2 * n as i32 - 2, n as i32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::NumericPoint;

    #[test]
    fn bad_sets() {
        assert_eq!(bad_exponent_set(2), BTreeSet::from([0]));
        assert_eq!(bad_exponent_set(3), BTreeSet::from([-2, 0, 1]));
        assert_eq!(bad_exponent_set(4), BTreeSet::from([-4, -2, 0, 1, 2]));
        assert_eq!(bad_exponent_set(5), BTreeSet::from([-6, -4, -2, -1, 0, 1, 2, 3]));
    }

    #[test]
    fn criterion_examples() {
        assert!(criterion(3, None, Some(2)));
        assert!(!criterion(3, Some(3), None));
        assert!(!criterion(4, None, Some(-4)));
    }

    #[test]
    fn small_scans() {
        assert_eq!(scan(2, -2, 2, 1).unwrap().zeros, BTreeSet::from([0]));
        assert!(scan(3, -4, 3, 1).unwrap().matches);
    }

    #[test]
    fn brute_force_verdicts() {
        let v = brute_semisimple(2, &Specialization::IntegerExponent(3), 1).unwrap();
        assert!(v.observed && v.predicted);
        let v = brute_semisimple(3, &Specialization::IntegerExponent(1), 1).unwrap();
        assert!(!v.observed && !v.predicted);
        let v = brute_semisimple(3, &Specialization::IntegerExponent(2), 1).unwrap();
        assert!(v.observed && v.predicted);
        // q0 = 2 in F_7: q0^2 = 4 has order 3, so e = 3.
        let p = NumericPoint::from_ints(7, 2, 3).unwrap();
        let v = brute_semisimple(3, &Specialization::NumericPoint(p), 1).unwrap();
        assert_eq!(v.e, Some(3));
        assert!(!v.observed && !v.predicted);
    }
}
