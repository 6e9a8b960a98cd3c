use crate::error::{Error, Result};
use std::fmt;

pub const MAX_N: usize = 16;

/// Permutation of `{1..n}` acting on the right: `img[i-1]` is the image `i·w`.
///
/// Products compose left to right, `i·(uv) = (i·u)·v`, so the word
/// `s_{i1} s_{i2} ⋯ s_{ik}` is read in order. Elements of `S_{2f+1,n}` are kept
/// in this full window and simply fix `1..2f`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    n: u8,
    img: [u8; MAX_N],
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        assert!(n <= MAX_N, "rank {n} exceeds {MAX_N}");
        let mut img = [0u8; MAX_N];
        for (i, x) in img.iter_mut().enumerate().take(n) {
            *x = i as u8;
        }
        Perm { n: n as u8, img }
    }

    /// From a one-line list of images (1-based).
    pub fn from_images(images: &[usize]) -> Result<Perm> {
        let n = images.len();
        if n > MAX_N {
            return Err(Error::InvalidInput(format!("rank {n} exceeds {MAX_N}")));
        }
        let mut seen = [false; MAX_N];
        let mut p = Perm::identity(n);
        for (i, &v) in images.iter().enumerate() {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidInput(format!("{images:?} is not a permutation")));
            }
            seen[v - 1] = true;
            p.img[i] = (v - 1) as u8;
        }
        Ok(p)
    }

    /// Simple transposition `s_i`, `1 ≤ i < n`.
    pub fn s(n: usize, i: usize) -> Perm {
        assert!(i >= 1 && i < n, "s_{i} out of range for n={n}");
        let mut p = Perm::identity(n);
        p.img.swap(i - 1, i);
        p
    }

    /// Product of simple transpositions `s_{w[0]} s_{w[1]} ⋯`.
    pub fn from_word(n: usize, word: &[usize]) -> Perm {
        let mut p = Perm::identity(n);
        for &i in word {
            p = p.mul_s(i);
        }
        p
    }

    /// `s_{i,j}`: `s_i s_{i+1} ⋯ s_{j-1}` for `i < j`, `s_{i-1} s_{i-2} ⋯ s_j` for `i > j`, `1` for `i = j`.
    pub fn s_range(n: usize, i: usize, j: usize) -> Perm {
        Perm::from_word(n, &s_range_word(i, j))
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Image of the 1-based letter `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        (1..=self.n()).map(|i| self.apply(i)).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n()).all(|i| self.img[i] as usize == i)
    }

    pub fn mul(&self, o: &Perm) -> Perm {
        assert_eq!(self.n, o.n, "rank mismatch");
        let mut p = *self;
        for i in 0..self.n() {
            p.img[i] = o.img[self.img[i] as usize];
        }
        p
    }

    pub fn inverse(&self) -> Perm {
        let mut p = *self;
        for i in 0..self.n() {
            p.img[self.img[i] as usize] = i as u8;
        }
        p
    }

    /// `w·s_i`: swaps the values `i` and `i+1`.
    pub fn mul_s(&self, i: usize) -> Perm {
        let mut p = *self;
        let (a, b) = ((i - 1) as u8, i as u8);
        for x in p.img.iter_mut().take(self.n()) {
            if *x == a {
                *x = b;
            } else if *x == b {
                *x = a;
            }
        }
        p
    }

    /// `s_i·w`: swaps the entries in positions `i` and `i+1`.
    pub fn s_mul(&self, i: usize) -> Perm {
        let mut p = *self;
        p.img.swap(i - 1, i);
        p
    }

    /// Length, the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut l = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.img[i] > self.img[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.img[i - 1] > inv.img[i]
    }

    /// `ℓ(s_i w) < ℓ(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.img[i - 1] > self.img[i]
    }

    /// A reduced word, found by peeling right descents.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = *self;
        let mut word = Vec::with_capacity(self.length());
        'outer: loop {
            for i in 1..self.n() {
                if w.has_right_descent(i) {
                    word.push(i);
                    w = w.mul_s(i);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    /// Embeds into `S_m`, `m ≥ n`, fixing the new letters.
    pub fn extend(&self, m: usize) -> Perm {
        assert!(m >= self.n());
        let mut p = Perm::identity(m);
        p.img[..self.n()].copy_from_slice(&self.img[..self.n()]);
        p
    }

    /// The image under `s_i ↦ s_{i+k}` inside `S_{n+k}`.
    pub fn shift(&self, k: usize) -> Perm {
        let mut p = Perm::identity(self.n() + k);
        for i in 0..self.n() {
            p.img[i + k] = self.img[i] + k as u8;
        }
        p
    }

    /// Inverse of [`Perm::shift`]; `None` if the first `k` letters are not fixed.
    pub fn unshift(&self, k: usize) -> Option<Perm> {
        if (0..k).any(|i| self.img[i] as usize != i) {
            return None;
        }
        let mut p = Perm::identity(self.n() - k);
        for i in k..self.n() {
            p.img[i - k] = self.img[i] - k as u8;
        }
        Some(p)
    }

    /// True when the letters `1..=k` are fixed, i.e. the element lies in `S_{k+1,n}`.
    pub fn fixes_first(&self, k: usize) -> bool {
        (0..k).all(|i| self.img[i] as usize == i)
    }

    /// All permutations of `{1..n}`, ordered by length then lexicographically.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        permute(&mut cur, 0, &mut out);
        out.sort_by_key(|p| (p.length(), *p));
        out
    }
}

fn permute(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Perm>) {
    if k == cur.len() {
        out.push(Perm::from_images(cur).unwrap());
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permute(cur, k + 1, out);
        cur.swap(k, i);
    }
}

/// Word of `s_{i,j}`.
pub fn s_range_word(i: usize, j: usize) -> Vec<usize> {
    if i < j {
        (i..j).collect()
    } else {
        (j..i).rev().collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 1..=self.n() {
            if i > 1 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.apply(i))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl serde::Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images().serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Perm, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Perm::from_images(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_and_lengths() {
        let w = Perm::from_word(4, &[2, 3, 1, 2]);
        assert_eq!(w.length(), 4);
        assert_eq!(Perm::from_word(4, &w.reduced_word()), w);
        assert_eq!(Perm::from_word(3, &[1, 1]), Perm::identity(3));
        assert_eq!(Perm::s_range(5, 3, 1), Perm::from_word(5, &[2, 1]));
        assert_eq!(Perm::s_range(5, 2, 4), Perm::from_word(5, &[2, 3]));
    }

    #[test]
    fn descents_match_lengths() {
        for w in Perm::all(4) {
            for i in 1..4 {
                assert_eq!(w.has_right_descent(i), w.mul_s(i).length() < w.length());
                assert_eq!(w.has_left_descent(i), w.s_mul(i).length() < w.length());
                assert_eq!(w.s_mul(i), Perm::s(4, i).mul(&w));
            }
        }
    }

    #[test]
    fn shift_embeds() {
        let w = Perm::from_word(3, &[1, 2]);
        assert_eq!(w.shift(2), Perm::from_word(5, &[3, 4]));
        assert_eq!(w.shift(2).unshift(2), Some(w));
    }
}
