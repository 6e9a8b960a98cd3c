//! Joint spectra of commuting matrices and random evaluation points.

use super::linalg::{self, Matrix};
use crate::coefficients::{is_prime, Field, NumericPoint};
use crate::error::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Prime used for numeric evaluation points, `2^61 - 1`.
pub const EVAL_PRIME: u64 = (1 << 61) - 1;

/// A seeded random point of `F_p` for [`EVAL_PRIME`].
pub fn random_point(seed: u64) -> Result<NumericPoint> {
    debug_assert!(is_prime(EVAL_PRIME));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let q0 = rng.gen_range(2..EVAL_PRIME - 1) as i64;
        let z0 = rng.gen_range(2..EVAL_PRIME - 1) as i64;
        if let Ok(p) = NumericPoint::from_ints(EVAL_PRIME, q0, z0) {
            return Ok(p);
        }
    }
}

/// Dimension of the joint generalized eigenspace of `mats` for the eigenvalues `tuple`.
pub fn joint_multiplicity<F: Field>(mats: &[Matrix<F>], tuple: &[F], one: &F) -> usize {
    let d = mats.first().map_or(0, |m| m.len());
    if d == 0 {
        return 0;
    }
    let mut stacked: Matrix<F> = vec![Vec::new(); d];
    for (m, v) in mats.iter().zip(tuple) {
        let shifted: Matrix<F> = m.iter().enumerate().map(|(i, r)| r.iter().enumerate().map(|(j, x)| if i == j { x.sub(v) } else { x.clone() }).collect()).collect();
        let p = linalg::mat_pow(&shifted, d, one);
        for (row, pr) in stacked.iter_mut().zip(p) {
            row.extend(pr);
        }
    }
    d - linalg::rank(&stacked)
}

/// Distinct tuples with multiplicities, in first-seen order.
pub fn tally<F: Field>(tuples: &[Vec<F>]) -> Vec<(Vec<F>, usize)> {
    let mut out: Vec<(Vec<F>, usize)> = Vec::new();
    for t in tuples {
        match out.iter_mut().find(|(u, _)| u == t) {
            Some(e) => e.1 += 1,
            None => out.push((t.clone(), 1)),
        }
    }
    out
}

/// True when the joint spectrum of `mats`, acting on a space of dimension `d`,
/// is exactly the multiset `expected`.
pub fn joint_spectrum_is<F: Field>(mats: &[Matrix<F>], d: usize, expected: &[Vec<F>], one: &F) -> bool {
    if expected.len() != d || mats.iter().any(|m| m.len() != d) {
        return false;
    }
    if mats.is_empty() {
        return true;
    }
    tally(expected).iter().all(|(t, m)| joint_multiplicity(mats, t, one) == *m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::Num;

    #[test]
    fn jordan_block_spectrum() {
        let r = |x: i64| Num::rational(x, 1);
        let a = vec![vec![r(2), r(1), r(0)], vec![r(0), r(2), r(0)], vec![r(0), r(0), r(3)]];
        let b = vec![vec![r(5), r(0), r(0)], vec![r(0), r(5), r(0)], vec![r(0), r(0), r(5)]];
        let one = r(1);
        assert!(joint_spectrum_is(&[a.clone(), b.clone()], 3, &[vec![r(2), r(5)], vec![r(3), r(5)], vec![r(2), r(5)]], &one));
        assert!(!joint_spectrum_is(&[a, b], 3, &[vec![r(2), r(5)], vec![r(3), r(5)], vec![r(3), r(5)]], &one));
        assert!(random_point(7).unwrap() == random_point(7).unwrap());
    }
}
