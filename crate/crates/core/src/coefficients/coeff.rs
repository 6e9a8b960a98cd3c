use super::dense::{b_div, b_gcd, b_is_one, from_dense, to_dense};
use super::int::Int;
use super::laurent::{LaurentPoly, Mono};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Exact element of the fraction field `Q(q, z)`, stored as a reduced fraction
/// of Laurent polynomials.
///
/// Canonical form: the denominator has no negative exponents and is not divisible
/// by `q` or `z`, numerator and denominator are coprime in `Z[q, z]`, and the
/// leading coefficient of the denominator is positive. Equality is therefore
/// structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coeff {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Coeff {
    pub fn zero() -> Coeff {
        Coeff { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Coeff {
        Coeff::from_poly(LaurentPoly::one())
    }

    pub fn from_int(k: i64) -> Coeff {
        Coeff::from_poly(LaurentPoly::constant(Int::from(k)))
    }

    pub fn from_poly(p: LaurentPoly) -> Coeff {
        Coeff { num: p, den: LaurentPoly::one() }
    }

    pub fn monomial(c: i64, q: i32, z: i32) -> Coeff {
        Coeff::from_poly(LaurentPoly::monomial(Int::from(c), q, z))
    }

    pub fn q() -> Coeff {
        Coeff::monomial(1, 1, 0)
    }

    pub fn z() -> Coeff {
        Coeff::monomial(1, 0, 1)
    }

    /// Builds `num/den` and reduces it to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Coeff> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Coeff::canonical(num, den))
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Coeff {
        if num.is_zero() {
            return Coeff::zero();
        }
        let dm = den.min_exponents().expect("nonzero denominator");
        let unit = Mono::new(-dm.q, -dm.z);
        let (mut num, mut den) = (num.shift(unit), den.shift(unit));
        if let Some((_, c)) = den.as_monomial() {
            // Denominator is an integer constant.
            let g = num.content().gcd(c);
            let mut c = c.clone();
            if !g.is_one() {
                num = num.div_int_exact(&g);
                c = c.div_exact(&g);
            }
            if c.is_negative() {
                num = num.neg();
                c = -c;
            }
            return Coeff { num, den: LaurentPoly::constant(c) };
        }
        let nm = num.min_exponents().unwrap();
        let nd = to_dense(&num, nm);
        let dd = to_dense(&den, Mono::ONE);
        let g = b_gcd(&nd, &dd);
        if !b_is_one(&g) {
            num = from_dense(&b_div(&nd, &g).expect("gcd divides numerator"), nm);
            den = from_dense(&b_div(&dd, &g).expect("gcd divides denominator"), Mono::ONE);
        }
        if den.leading().unwrap().1.is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Coeff { num, den }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in `Z[q^±1, z^±1]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_z_free(&self) -> bool {
        self.num.is_z_free() && self.den.is_z_free()
    }

    pub fn add(&self, o: &Coeff) -> Coeff {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return Coeff::from_poly(self.num.add(&o.num));
            }
            return Coeff::canonical(self.num.add(&o.num), self.den.clone());
        }
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        Coeff::canonical(num, self.den.mul(&o.den))
    }

    pub fn neg(&self) -> Coeff {
        Coeff { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Coeff) -> Coeff {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Coeff) -> Coeff {
        if self.is_zero() || o.is_zero() {
            return Coeff::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Coeff::from_poly(self.num.mul(&o.num));
        }
        Coeff::canonical(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Result<Coeff> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Coeff::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Coeff) -> Result<Coeff> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Coeff::canonical(self.num.mul(&o.den), self.den.mul(&o.num)))
    }

    pub fn pow(&self, e: i32) -> Result<Coeff> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Coeff::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Substitutes `z = q^a`.
    pub fn subst_z_power(&self, a: i32) -> Result<Coeff> {
        let den = self.den.subst_z_power(a);
        if den.is_zero() {
            return Err(Error::Pole(format!("denominator of {self} vanishes at z=q^{a}")));
        }
        Ok(Coeff::canonical(self.num.subst_z_power(a), den))
    }

    /// Human-oriented rendering.
    pub fn pretty(&self) -> String {
        if self.den.is_one() {
            self.num.pretty()
        } else {
            format!("({})/({})", self.num.pretty(), self.den.pretty())
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl FromStr for Coeff {
    type Err = Error;
    fn from_str(s: &str) -> Result<Coeff> {
        let (n, d) = s.split_once('/').ok_or_else(|| Error::Parse(format!("missing `/` in `{s}`")))?;
        Coeff::new(LaurentPoly::parse_terms(n)?, LaurentPoly::parse_terms(d)?)
    }
}

impl serde::Serialize for Coeff {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Coeff {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Coeff, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Coeff {
        s.parse().unwrap()
    }

    #[test]
    fn reduces_to_lowest_terms() {
        // (q^2 - 1) / (q - 1) = q + 1
        let x = c("1*q^2*z^0+-1*q^0*z^0/1*q^1*z^0+-1*q^0*z^0");
        assert_eq!(x, Coeff::from_poly(LaurentPoly::parse_terms("1*q^0*z^0+1*q^1*z^0").unwrap()));
        // negative leading denominator coefficient flips signs
        let y = c("1*q^0*z^0/-2*q^1*z^0");
        assert_eq!(y.to_string(), "-1*q^-1*z^0/2*q^0*z^0");
    }

    #[test]
    fn round_trip_text() {
        let x = c("3*q^-1*z^2+1*q^0*z^0/1*q^0*z^0+1*q^1*z^1");
        assert_eq!(c(&x.to_string()), x);
    }

    #[test]
    fn division_by_zero_is_error() {
        assert!(Coeff::one().div(&Coeff::zero()).is_err());
    }
}
