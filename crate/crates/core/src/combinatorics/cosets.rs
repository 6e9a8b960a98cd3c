use super::perm::{s_range_word, Perm};
use crate::error::{Error, Result};

/// One element of `D_{f,n}` with the data that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetRep {
    pub perm: Perm,
    /// Pairs `(j_k, i_k)`, `k = 1..f`.
    pub pairs: Vec<(usize, usize)>,
    /// `s_{2f,i_f} s_{2f-1,j_f} ⋯ s_{2,i_1} s_{1,j_1}` spelled out.
    pub word: Vec<usize>,
}

/// The distinguished representatives `D_{f,n}` built from their defining words.
///
/// Ordered by length, then by the permutation. `D_{0,n} = {1}`.
pub fn coset_reps_d(f: usize, n: usize) -> Result<Vec<CosetRep>> {
    if 2 * f > n {
        return Err(Error::InvalidInput(format!("deficiency {f} out of range for n={n}")));
    }
    let mut out = Vec::new();
    let mut pairs = Vec::with_capacity(f);
    choose(f, n, 1, 0, &mut pairs, &mut out);
    out.sort_by_key(|r| (r.perm.length(), r.perm));
    Ok(out)
}

fn choose(f: usize, n: usize, k: usize, last_i: usize, pairs: &mut Vec<(usize, usize)>, out: &mut Vec<CosetRep>) {
    if k > f {
        let mut word = Vec::new();
        for k in (1..=f).rev() {
            let (j, i) = pairs[k - 1];
            word.extend(s_range_word(2 * k, i));
            word.extend(s_range_word(2 * k - 1, j));
        }
        out.push(CosetRep { perm: Perm::from_word(n, &word), pairs: pairs.clone(), word });
        return;
    }
    for i in (last_i + 1)..=n {
        for j in (2 * k - 1)..i {
            pairs.push((j, i));
            choose(f, n, k + 1, i, pairs, out);
            pairs.pop();
        }
    }
}

/// `n! / (2^f (n-2f)! f!)`.
pub fn coset_count(f: usize, n: usize) -> u64 {
    let fact = |m: usize| (1..=m as u64).product::<u64>();
    fact(n) / (2u64.pow(f as u32) * fact(n - 2 * f) * fact(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let d13: Vec<Perm> = coset_reps_d(1, 3).unwrap().into_iter().map(|r| r.perm).collect();
        assert_eq!(d13, vec![Perm::identity(3), Perm::s(3, 2), Perm::from_word(3, &[2, 1])]);
        let d12 = coset_reps_d(1, 2).unwrap();
        assert_eq!(d12.len(), 1);
        assert!(d12[0].perm.is_identity());
        assert_eq!(coset_reps_d(2, 4).unwrap().len(), 3);
        assert_eq!(coset_reps_d(0, 5).unwrap().len(), 1);
        assert!(coset_reps_d(2, 3).is_err());
    }

    #[test]
    fn counts_and_reducedness() {
        for n in 0..=7 {
            for f in 0..=n / 2 {
                let reps = coset_reps_d(f, n).unwrap();
                assert_eq!(reps.len() as u64, coset_count(f, n), "f={f} n={n}");
                let mut perms: Vec<Perm> = reps.iter().map(|r| r.perm).collect();
                perms.dedup();
                assert_eq!(perms.len(), reps.len());
                for r in &reps {
                    assert_eq!(r.perm.length(), r.word.len(), "{:?} not reduced", r.word);
                }
            }
        }
    }
}
