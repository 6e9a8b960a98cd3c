use super::int::Int;
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// Exponent pair of the monomial `q^q z^z`. Ordered with `z` as the outer variable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mono {
    pub q: i32,
    pub z: i32,
}

impl Mono {
    pub const ONE: Mono = Mono { q: 0, z: 0 };

    pub fn new(q: i32, z: i32) -> Mono {
        Mono { q, z }
    }

    fn times(self, o: Mono) -> Mono {
        Mono { q: self.q + o.q, z: self.z + o.z }
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Mono) -> Ordering {
        (self.z, self.q).cmp(&(o.z, o.q))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Mono) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Laurent polynomial `Σ c q^i z^j` with integer coefficients.
///
/// Terms are kept sorted by [`Mono`] order with no zero coefficients, so the
/// representation is canonical and derived equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(Mono, Int)>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::constant(Int::one())
    }

    pub fn constant(c: Int) -> LaurentPoly {
        LaurentPoly::monomial(c, 0, 0)
    }

    pub fn monomial(c: Int, q: i32, z: i32) -> LaurentPoly {
        if c.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly { terms: vec![(Mono { q, z }, c)] }
        }
    }

    pub fn q() -> LaurentPoly {
        LaurentPoly::monomial(Int::one(), 1, 0)
    }

    pub fn z() -> LaurentPoly {
        LaurentPoly::monomial(Int::one(), 0, 1)
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Mono, Int)>>(it: I) -> LaurentPoly {
        let mut v: Vec<(Mono, Int)> = it.into_iter().collect();
        v.sort_by_key(|a| a.0);
        let mut out: Vec<(Mono, Int)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        LaurentPoly { terms: out }
    }

    pub fn terms(&self) -> &[(Mono, Int)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mono::ONE && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Returns the single term if the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(Mono, &Int)> {
        if self.terms.len() == 1 {
            Some((self.terms[0].0, &self.terms[0].1))
        } else {
            None
        }
    }

    pub fn coeff_of(&self, m: Mono) -> Int {
        match self.terms.binary_search_by(|t| t.0.cmp(&m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Int::zero(),
        }
    }

    /// Leading term in [`Mono`] order.
    pub fn leading(&self) -> Option<&(Mono, Int)> {
        self.terms.last()
    }

    /// Componentwise minimum exponents; `None` for zero.
    pub fn min_exponents(&self) -> Option<Mono> {
        let mut it = self.terms.iter();
        let first = it.next()?.0;
        Some(it.fold(first, |acc, (m, _)| Mono { q: acc.q.min(m.q), z: acc.z.min(m.z) }))
    }

    pub fn max_exponents(&self) -> Option<Mono> {
        let mut it = self.terms.iter();
        let first = it.next()?.0;
        Some(it.fold(first, |acc, (m, _)| Mono { q: acc.q.max(m.q), z: acc.z.max(m.z) }))
    }

    pub fn is_z_free(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.z == 0)
    }

    pub fn shift(&self, by: Mono) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (m.times(by), c.clone())).collect() }
    }

    pub fn scale(&self, k: &Int) -> LaurentPoly {
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect() }
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn add(&self, o: &LaurentPoly) -> LaurentPoly {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &LaurentPoly) -> LaurentPoly {
        self.merge(o, true)
    }

    fn merge(&self, o: &LaurentPoly, negate: bool) -> LaurentPoly {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Greater
            } else if j == b.len() {
                Ordering::Less
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        LaurentPoly { terms: out }
    }

    pub fn mul(&self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((m, c)) = o.as_monomial() {
            return LaurentPoly { terms: self.terms.iter().map(|(a, x)| (a.times(m), x * c)).collect() };
        }
        if let Some((m, c)) = self.as_monomial() {
            return LaurentPoly { terms: o.terms.iter().map(|(a, x)| (a.times(m), c * x)).collect() };
        }
        let mut v = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                v.push((ma.times(*mb), ca * cb));
            }
        }
        LaurentPoly::from_terms(v)
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes `z = q^a`.
    pub fn subst_z_power(&self, a: i32) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| (Mono { q: m.q + a * m.z, z: 0 }, c.clone())))
    }

    /// Applies an exponent map to every monomial, merging collisions.
    pub fn map_exponents(&self, f: impl Fn(Mono) -> Mono) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| (f(*m), c.clone())))
    }

    /// Substitutes `q = 1`, leaving a polynomial in `z`.
    pub fn at_q_one(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| (Mono { q: 0, z: m.z }, c.clone())))
    }

    /// Substitutes `q = -1`, leaving a polynomial in `z`.
    pub fn at_q_minus_one(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Mono { q: 0, z: m.z }, if m.q.rem_euclid(2) == 1 { -c } else { c.clone() })),
        )
    }

    /// Integer gcd of all coefficients (non-negative).
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_int_exact(&self, k: &Int) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, c.div_exact(k))).collect() }
    }

    /// Divides by `q^2 - 1`, returning `None` when the division is not exact.
    pub fn div_q2_minus_1(&self) -> Option<LaurentPoly> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.terms.len() {
            let z = self.terms[i].0.z;
            let mut j = i;
            while j < self.terms.len() && self.terms[j].0.z == z {
                j += 1;
            }
            let slice = &self.terms[i..j];
            let lo = slice[0].0.q;
            let hi = slice[slice.len() - 1].0.q;
            let width = (hi - lo + 1) as usize;
            let mut r: Vec<Int> = vec![Int::zero(); width];
            for (m, c) in slice {
                r[(m.q - lo) as usize] = c.clone();
            }
            let mut quot: Vec<Int> = vec![Int::zero(); width];
            for k in (2..width).rev() {
                let c = std::mem::replace(&mut r[k], Int::zero());
                if c.is_zero() {
                    continue;
                }
                r[k - 2] = &r[k - 2] + &c;
                quot[k - 2] = c;
            }
            if !r.iter().all(|c| c.is_zero()) {
                return None;
            }
            for (k, c) in quot.into_iter().enumerate() {
                if !c.is_zero() {
                    out.push((Mono { q: lo + k as i32, z }, c));
                }
            }
            i = j;
        }
        Some(LaurentPoly { terms: out })
    }

    /// Value at a point of `Z/p`, or `None` if a negative power hits a zero argument.
    pub fn eval_mod(&self, q0: u64, z0: u64, p: u64) -> Option<u64> {
        let qi = if q0.is_multiple_of(p) { None } else { Some(super::field::inv_mod(q0, p)) };
        let zi = if z0.is_multiple_of(p) { None } else { Some(super::field::inv_mod(z0, p)) };
        let mut acc: u64 = 0;
        for (m, c) in &self.terms {
            let qv = if m.q >= 0 { super::field::pow_mod(q0, m.q as u64, p) } else { super::field::pow_mod(qi?, (-m.q) as u64, p) };
            let zv = if m.z >= 0 { super::field::pow_mod(z0, m.z as u64, p) } else { super::field::pow_mod(zi?, (-m.z) as u64, p) };
            let term = (c.rem_u64(p) as u128 * qv as u128 % p as u128 * zv as u128 % p as u128) as u64;
            acc = (acc + term) % p;
        }
        Some(acc)
    }

    /// Human-oriented rendering, e.g. `q^2*z^-1 - 3*q + 1`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || *m == Mono::ONE {
                factors.push(abs.to_string());
            }
            for (sym, e) in [("q", m.q), ("z", m.z)] {
                match e {
                    0 => {}
                    1 => factors.push(sym.to_string()),
                    _ => factors.push(format!("{sym}^{e}")),
                }
            }
            s.push_str(&factors.join("*"));
        }
        s
    }

    /// Parses the exact term grammar produced by `Display`.
    pub fn parse_terms(s: &str) -> Result<LaurentPoly> {
        let s = s.trim();
        if s == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut terms = Vec::new();
        for t in s.split('+') {
            let bad = || Error::Parse(format!("bad polynomial term `{t}`"));
            let mut parts = t.trim().split('*');
            let c: Int = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let qe = parts.next().and_then(|p| p.strip_prefix("q^")).ok_or_else(bad)?;
            let ze = parts.next().and_then(|p| p.strip_prefix("z^")).ok_or_else(bad)?;
            if parts.next().is_some() {
                return Err(bad());
            }
            let q: i32 = qe.parse().map_err(|_| bad())?;
            let z: i32 = ze.parse().map_err(|_| bad())?;
            if c.is_zero() {
                return Err(bad());
            }
            terms.push((Mono { q, z }, c));
        }
        let p = LaurentPoly::from_terms(terms.iter().cloned());
        if p.terms.len() != terms.len() {
            return Err(Error::Parse(format!("repeated monomials in `{s}`")));
        }
        Ok(p)
    }
}

/// Exact grammar: `0`, or terms `c*q^i*z^j` joined by `+` in increasing monomial order.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, "+")?;
            }
            write!(f, "{}*q^{}*z^{}", c, m.q, m.z)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse_terms(s).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let q = LaurentPoly::q();
        let qi = LaurentPoly::monomial(Int::one(), -1, 0);
        assert!(q.mul(&qi).is_one());
        let c = q.sub(&qi);
        assert_eq!(c.mul(&c).to_string(), "1*q^-2*z^0+-2*q^0*z^0+1*q^2*z^0");
        assert!(c.sub(&c).is_zero());
    }

    #[test]
    fn division_by_q2_minus_1() {
        let x = p("1*q^4*z^1+-1*q^0*z^1");
        let d = x.div_q2_minus_1().unwrap();
        assert_eq!(d, p("1*q^0*z^1+1*q^2*z^1"));
        assert!(p("1*q^1*z^0").div_q2_minus_1().is_none());
    }

    #[test]
    fn text_round_trip() {
        let x = p("-3*q^-2*z^1+7*q^5*z^2");
        assert_eq!(p(&x.to_string()), x);
        assert_eq!(x.pretty(), "7*q^5*z^2 - 3*q^-2*z");
    }
}
