use crate::combinatorics::Perm;
use crate::error::{Error, Result};
use std::fmt;

/// Basis monomial `σ(T_{d1}) E^f T_w T_{d2}` with `d1, d2 ∈ D_{f,n}` and `w ∈ S_{2f+1,n}`.
///
/// `σ(T_{d1}) = T_{d1^-1}` since `σ` reverses words and fixes every `T_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct NormalWord {
    pub f: usize,
    pub d1: Perm,
    pub w: Perm,
    pub d2: Perm,
}

impl NormalWord {
    pub fn identity(n: usize) -> NormalWord {
        let e = Perm::identity(n);
        NormalWord { f: 0, d1: e, w: e, d2: e }
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    /// The word of `σ(x)`: `(f, d2, w^-1, d1)`.
    pub fn sigma(&self) -> NormalWord {
        NormalWord { f: self.f, d1: self.d2, w: self.w.inverse(), d2: self.d1 }
    }

    /// Generator letters whose product (left to right) is this monomial.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out: Vec<Letter> = self.d1.inverse().reduced_word().into_iter().map(Letter::T).collect();
        out.extend(e_power_letters(self.f));
        out.extend(self.w.reduced_word().into_iter().map(Letter::T));
        out.extend(self.d2.reduced_word().into_iter().map(Letter::T));
        out
    }
}

/// Letters of `E^f` from `E^{k+1} = E_1 T_{2,2k+2} T_{2k+1,1}^-1 E^k`.
pub fn e_power_letters(f: usize) -> Vec<Letter> {
    let mut out = Vec::new();
    for k in (0..f).rev() {
        out.push(Letter::E);
        out.extend((2..=2 * k + 1).map(Letter::T));
        // T_{2k+1,1} = T_{2k} ⋯ T_1, so its inverse is T_1^-1 ⋯ T_{2k}^-1
        out.extend((1..=2 * k).map(Letter::TInv));
    }
    out
}

impl fmt::Display for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(f={}, d1={}, w={}, d2={})", self.f, self.d1, self.w, self.d2)
    }
}

impl fmt::Debug for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A generator of the algebra, or the inverse of a Hecke generator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Letter {
    T(usize),
    TInv(usize),
    E,
}

impl Letter {
    pub fn check(&self, n: usize) -> Result<()> {
        match *self {
            Letter::T(i) | Letter::TInv(i) if i == 0 || i >= n => Err(Error::InvalidInput(format!("{self} is not a generator for n={n}"))),
            Letter::E if n < 2 => Err(Error::InvalidInput(format!("E1 needs n >= 2, got n={n}"))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::T(i) => write!(f, "T{i}"),
            Letter::TInv(i) => write!(f, "T{i}^-1"),
            Letter::E => write!(f, "E1"),
        }
    }
}

impl std::str::FromStr for Letter {
    type Err = Error;
    /// `T3`, `T3^-1`, `T3inv`, `E1` or `E`.
    fn from_str(s: &str) -> Result<Letter> {
        let t = s.trim();
        if t == "E1" || t == "E" {
            return Ok(Letter::E);
        }
        let bad = || Error::Parse(format!("unknown generator `{s}`"));
        let rest = t.strip_prefix('T').ok_or_else(bad)?;
        let (num, inv) = if let Some(r) = rest.strip_suffix("^-1") {
            (r, true)
        } else if let Some(r) = rest.strip_suffix("inv") {
            (r, true)
        } else {
            (rest, false)
        };
        let i: usize = num.parse().map_err(|_| bad())?;
        Ok(if inv { Letter::TInv(i) } else { Letter::T(i) })
    }
}

/// Parses a product like `E1 T2 T3^-1` (whitespace or `*` separated).
pub fn parse_letters(s: &str) -> Result<Vec<Letter>> {
    s.split(|c: char| c.is_whitespace() || c == '*').filter(|x| !x.is_empty()).map(|x| x.parse()).collect()
}
