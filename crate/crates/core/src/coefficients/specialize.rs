use super::coeff::Coeff;
use super::field::{eval_poly, is_prime, Num};
use super::ground::Ground;
use super::int::Int;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;

/// A point of a prime field or of `Q` at which `q`, `z`, `q - q^-1` and
/// `z - z^-1` are all invertible.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NumericPoint {
    q0: Num,
    z0: Num,
}

impl NumericPoint {
    pub fn new(q0: Num, z0: Num) -> Result<NumericPoint> {
        if q0.characteristic() != z0.characteristic() {
            return Err(Error::InvalidInput("q0 and z0 live in different fields".into()));
        }
        let ch = q0.characteristic();
        if ch != 0 && !is_prime(ch) {
            return Err(Error::InvalidInput(format!("characteristic {ch} is not prime")));
        }
        for (name, x) in [("q0", &q0), ("z0", &z0)] {
            if x.is_zero() {
                return Err(Error::InvalidInput(format!("{name} must be invertible")));
            }
            if x.sub(&x.inv()?).is_zero() {
                return Err(Error::InvalidInput(format!("{name} - {name}^-1 must be invertible")));
            }
        }
        Ok(NumericPoint { q0, z0 })
    }

    /// Point of `F_p` (or `Q` when `characteristic == 0`) with integer coordinates.
    pub fn from_ints(characteristic: u64, q0: i64, z0: i64) -> Result<NumericPoint> {
        let mk = |v: i64| Num::from_int_in(&Int::from(v), characteristic);
        NumericPoint::new(mk(q0), mk(z0))
    }

    pub fn characteristic(&self) -> u64 {
        self.q0.characteristic()
    }

    pub fn q0(&self) -> &Num {
        &self.q0
    }

    pub fn z0(&self) -> &Num {
        &self.z0
    }
}

/// A parameter specialization: either `z = q^a` with `q` generic, or a numeric point.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Specialization {
    IntegerExponent(i32),
    NumericPoint(NumericPoint),
}

impl Specialization {
    /// Quantum characteristic of the specialized `q` (`None` means infinite).
    pub fn quantum_characteristic(&self) -> Option<u64> {
        match self {
            Specialization::IntegerExponent(_) => None,
            Specialization::NumericPoint(p) => quantum_characteristic(p.q0()),
        }
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Specialization::IntegerExponent(a) => write!(f, "z=q^{a}"),
            Specialization::NumericPoint(p) => {
                let field = match p.characteristic() {
                    0 => "Q".to_string(),
                    ch => format!("F_{ch}"),
                };
                let strip = |n: &Num| match n {
                    Num::Mod { v, .. } => v.to_string(),
                    other => other.to_string(),
                };
                write!(f, "{field}: q={}, z={}", strip(p.q0()), strip(p.z0()))
            }
        }
    }
}

/// Image of a coefficient under a specialization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Specialized {
    /// Rational function of `q` alone.
    Univariate(Coeff),
    Value(Num),
}

impl Specialized {
    pub fn is_zero(&self) -> bool {
        match self {
            Specialized::Univariate(c) => c.is_zero(),
            Specialized::Value(v) => v.is_zero(),
        }
    }
}

impl fmt::Display for Specialized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Specialized::Univariate(c) => write!(f, "{c}"),
            Specialized::Value(v) => write!(f, "{v}"),
        }
    }
}

/// `δ = (z - z^-1)/(q - q^-1)` in canonical form.
pub fn delta() -> Coeff {
    Ground::delta().to_coeff()
}

pub fn specialize(c: &Coeff, s: &Specialization) -> Result<Specialized> {
    match s {
        Specialization::IntegerExponent(a) => Ok(Specialized::Univariate(c.subst_z_power(*a)?)),
        Specialization::NumericPoint(p) => {
            let d = eval_poly(c.denominator(), p.q0(), p.z0())?;
            if d.is_zero() {
                return Err(Error::Pole(format!("denominator of {} vanishes at {s}", c.pretty())));
            }
            Ok(Specialized::Value(eval_poly(c.numerator(), p.q0(), p.z0())?.div(&d)?))
        }
    }
}

/// Specializes an element of the ground ring, avoiding the fraction-field detour.
pub fn specialize_ground(g: &Ground, s: &Specialization) -> Result<Specialized> {
    match s {
        Specialization::IntegerExponent(a) => Ok(Specialized::Univariate(g.subst_z_power(*a).to_coeff())),
        Specialization::NumericPoint(p) => Ok(Specialized::Value(g.eval(p.q0(), p.z0())?)),
    }
}

/// Value at `q = 1` of `c` after substituting `z = q^a`.
pub fn classical_limit(c: &Coeff, a: i32) -> Result<BigRational> {
    let s = c.subst_z_power(a)?;
    // Canonical fractions are reduced, so at most one side carries the factor q - 1.
    let sum = |p: &super::laurent::LaurentPoly| -> BigInt { p.terms().iter().map(|(_, c)| c.to_big()).sum() };
    let den = sum(s.denominator());
    if den.is_zero() {
        return Err(Error::Pole(format!("{} has a pole at q=1 when z=q^{a}", c.pretty())));
    }
    Ok(BigRational::new(sum(s.numerator()), den))
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Least `e ≥ 1` with `1 + q0^2 + ... + q0^(2e-2) = 0`, or `None` when no such `e` exists.
pub fn quantum_characteristic(q0: &Num) -> Option<u64> {
    match q0 {
        // Over Q the partial sums vanish only if q0^2 is a nontrivial root of unity.
        Num::Rat(_) => None,
        Num::Mod { p, .. } => {
            let p = *p;
            let s = q0.mul(q0);
            if s.is_zero() {
                return None;
            }
            if s.is_one() {
                return Some(p);
            }
            // The sum is (s^e - 1)/(s - 1), zero exactly when ord(s) divides e.
            let mut ord = p - 1;
            for f in prime_factors(p - 1) {
                while ord % f == 0 && s.pow((ord / f) as i64).map(|x| x.is_one()).unwrap_or(false) {
                    ord /= f;
                }
            }
            Some(ord)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_characteristic_examples() {
        assert_eq!(quantum_characteristic(&Num::modular(1, 5)), Some(5));
        assert_eq!(quantum_characteristic(&Num::rational(2, 1)), None);
        assert_eq!(quantum_characteristic(&Num::modular(3, 7)), Some(3));
    }

    #[test]
    fn brute_force_agrees_with_order_formula() {
        for p in [5u64, 7, 11, 13, 17] {
            for q in 1..p {
                let q0 = Num::modular(q as i64, p);
                let mut sum = Num::zero_in(p);
                let mut pw = Num::one_in(p);
                let mut e = None;
                for k in 1..=p {
                    sum = sum.add(&pw);
                    pw = pw.mul(&q0).mul(&q0);
                    if sum.is_zero() {
                        e = Some(k);
                        break;
                    }
                }
                assert_eq!(quantum_characteristic(&q0), e, "p={p} q={q}");
            }
        }
    }
}
