use super::int::Int;
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

pub fn pow_mod(b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u128 = 1 % p as u128;
    let m = p as u128;
    let mut base = b as u128 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

/// Inverse modulo a prime via Fermat's little theorem.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Element of a prime field `F_p` or of `Q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Num {
    Mod { p: u64, v: u64 },
    Rat(BigRational),
}

impl Num {
    pub fn modular(v: i64, p: u64) -> Num {
        Num::Mod { p, v: Int::from(v).rem_u64(p) }
    }

    pub fn rational(n: i64, d: i64) -> Num {
        Num::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// The integer `v` in a field of the given characteristic (0 for `Q`).
    pub fn from_int_in(v: &Int, characteristic: u64) -> Num {
        if characteristic == 0 {
            Num::Rat(BigRational::from_integer(v.to_big()))
        } else {
            Num::Mod { p: characteristic, v: v.rem_u64(characteristic) }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Num::Mod { p, .. } => *p,
            Num::Rat(_) => 0,
        }
    }

    pub fn zero_in(characteristic: u64) -> Num {
        Num::from_int_in(&Int::zero(), characteristic)
    }

    pub fn one_in(characteristic: u64) -> Num {
        Num::from_int_in(&Int::one(), characteristic)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Num::Mod { v, .. } => *v == 0,
            Num::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Num::Mod { v, .. } => *v == 1,
            Num::Rat(r) => r.is_one(),
        }
    }

    fn same_field(&self, o: &Num) -> u64 {
        let (a, b) = (self.characteristic(), o.characteristic());
        assert_eq!(a, b, "mixing fields of characteristic {a} and {b}");
        a
    }

    pub fn add(&self, o: &Num) -> Num {
        let p = self.same_field(o);
        match (self, o) {
            (Num::Mod { v: a, .. }, Num::Mod { v: b, .. }) => Num::Mod { p, v: ((*a as u128 + *b as u128) % p as u128) as u64 },
            (Num::Rat(a), Num::Rat(b)) => Num::Rat(a + b),
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Num {
        match self {
            Num::Mod { p, v } => Num::Mod { p: *p, v: (p - v) % p },
            Num::Rat(a) => Num::Rat(-a),
        }
    }

    pub fn sub(&self, o: &Num) -> Num {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Num) -> Num {
        let p = self.same_field(o);
        match (self, o) {
            (Num::Mod { v: a, .. }, Num::Mod { v: b, .. }) => Num::Mod { p, v: ((*a as u128 * *b as u128) % p as u128) as u64 },
            (Num::Rat(a), Num::Rat(b)) => Num::Rat(a * b),
            _ => unreachable!(),
        }
    }

    pub fn inv(&self) -> Result<Num> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Num::Mod { p, v } => Num::Mod { p: *p, v: inv_mod(*v, *p) },
            Num::Rat(a) => Num::Rat(a.recip()),
        })
    }

    pub fn div(&self, o: &Num) -> Result<Num> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Num> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Num::one_in(self.characteristic());
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            k >>= 1;
        }
        Ok(acc)
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Num::Mod { p, v } => write!(f, "{v} mod {p}"),
            Num::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.is_negative() {
                    write!(f, "-{}/{}", -r.numer(), r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Evaluates a Laurent polynomial at `(q0, z0)`.
pub fn eval_poly(p: &LaurentPoly, q0: &Num, z0: &Num) -> Result<Num> {
    let ch = q0.characteristic();
    let mut acc = Num::zero_in(ch);
    for (m, c) in p.terms() {
        let t = Num::from_int_in(c, ch).mul(&q0.pow(m.q as i64)?).mul(&z0.pow(m.z as i64)?);
        acc = acc.add(&t);
    }
    Ok(acc)
}

/// Operations needed by the exact linear algebra routines.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Panics on division by zero; callers pivot on nonzero entries only.
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Size estimate used to pick cheap pivots.
    fn weight(&self) -> usize {
        1
    }
}

impl Field for Num {
    fn zero_like(&self) -> Num {
        Num::zero_in(self.characteristic())
    }
    fn one_like(&self) -> Num {
        Num::one_in(self.characteristic())
    }
    fn is_zero(&self) -> bool {
        Num::is_zero(self)
    }
    fn add(&self, o: &Num) -> Num {
        Num::add(self, o)
    }
    fn sub(&self, o: &Num) -> Num {
        Num::sub(self, o)
    }
    fn mul(&self, o: &Num) -> Num {
        Num::mul(self, o)
    }
    fn div(&self, o: &Num) -> Num {
        Num::div(self, o).expect("division by zero")
    }
    fn neg(&self) -> Num {
        Num::neg(self)
    }
}

impl Field for super::coeff::Coeff {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn is_zero(&self) -> bool {
        Self::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Self::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Self::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Self::mul(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        Self::div(self, o).expect("division by zero")
    }
    fn neg(&self) -> Self {
        Self::neg(self)
    }
    fn weight(&self) -> usize {
        self.numerator().len() + self.denominator().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_inverse() {
        assert_eq!(inv_mod(3, 7), 5);
        assert_eq!(inv_mod(2, 7), 4);
        let x = Num::modular(3, 7);
        assert!(x.mul(&x.inv().unwrap()).is_one());
    }

    #[test]
    fn primes() {
        assert!(is_prime(7) && is_prime(2_147_483_647) && !is_prime(91));
    }
}
