use super::coeff::Coeff;
use super::field::{inv_mod, Num};
use super::int::Int;
use super::laurent::{LaurentPoly, Mono};
use crate::error::{Error, Result};
use std::fmt;

/// Element of `Z[q^±1, z^±1, (q - q^-1)^-1]`, the ring in which every structure
/// constant of the algebra lives.
///
/// Stored as `num · (q - q^-1)^-k` with `k` minimal, which makes the
/// representation canonical and keeps addition free of polynomial gcds.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ground {
    num: LaurentPoly,
    k: u32,
}

/// `q - q^-1`
fn c_poly() -> LaurentPoly {
    LaurentPoly::from_terms([(Mono::new(1, 0), Int::one()), (Mono::new(-1, 0), -Int::one())])
}

impl Ground {
    pub fn zero() -> Ground {
        Ground { num: LaurentPoly::zero(), k: 0 }
    }

    pub fn one() -> Ground {
        Ground { num: LaurentPoly::one(), k: 0 }
    }

    pub fn from_int(v: i64) -> Ground {
        Ground { num: LaurentPoly::constant(Int::from(v)), k: 0 }
    }

    pub fn from_poly(p: LaurentPoly) -> Ground {
        Ground { num: p, k: 0 }
    }

    pub fn monomial(c: i64, q: i32, z: i32) -> Ground {
        Ground::from_poly(LaurentPoly::monomial(Int::from(c), q, z))
    }

    pub fn q() -> Ground {
        Ground::monomial(1, 1, 0)
    }

    pub fn z() -> Ground {
        Ground::monomial(1, 0, 1)
    }

    /// `q - q^-1`, the coefficient in the quadratic relation.
    pub fn qdiff() -> Ground {
        Ground::from_poly(c_poly())
    }

    /// `δ = (z - z^-1)/(q - q^-1)`.
    pub fn delta() -> Ground {
        let zd = LaurentPoly::from_terms([(Mono::new(0, 1), Int::one()), (Mono::new(0, -1), -Int::one())]);
        Ground { num: zd, k: 1 }
    }

    /// `num · (q - q^-1)^-k`, reduced.
    pub fn from_parts(num: LaurentPoly, k: u32) -> Ground {
        Ground { num, k }.reduced()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn qdiff_power(&self) -> u32 {
        self.k
    }

    fn reduced(mut self) -> Ground {
        if self.num.is_zero() {
            self.k = 0;
            return self;
        }
        while self.k > 0 && self.num.at_q_one().is_zero() && self.num.at_q_minus_one().is_zero() {
            let d = self.num.div_q2_minus_1().expect("divisible by q^2-1");
            self.num = d.shift(Mono::new(1, 0));
            self.k -= 1;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.k == 0 && self.num.is_one()
    }

    fn lift_to(&self, k: u32) -> LaurentPoly {
        if k == self.k {
            self.num.clone()
        } else {
            self.num.mul(&c_poly().pow(k - self.k))
        }
    }

    pub fn add(&self, o: &Ground) -> Ground {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let k = self.k.max(o.k);
        let g = Ground { num: self.lift_to(k).add(&o.lift_to(k)), k };
        if k == 0 {
            g
        } else {
            g.reduced()
        }
    }

    pub fn sub(&self, o: &Ground) -> Ground {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Ground {
        Ground { num: self.num.neg(), k: self.k }
    }

    pub fn mul(&self, o: &Ground) -> Ground {
        if self.is_zero() || o.is_zero() {
            return Ground::zero();
        }
        let g = Ground { num: self.num.mul(&o.num), k: self.k + o.k };
        if g.k == 0 {
            g
        } else {
            g.reduced()
        }
    }

    pub fn scale_int(&self, v: i64) -> Ground {
        Ground { num: self.num.scale(&Int::from(v)), k: self.k }.reduced()
    }

    pub fn mul_monomial(&self, q: i32, z: i32) -> Ground {
        Ground { num: self.num.shift(Mono::new(q, z)), k: self.k }
    }

    pub fn pow(&self, e: u32) -> Ground {
        let mut acc = Ground::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The same value in the fraction field.
    pub fn to_coeff(&self) -> Coeff {
        if self.k == 0 {
            return Coeff::from_poly(self.num.clone());
        }
        let q2m1 = LaurentPoly::from_terms([(Mono::new(2, 0), Int::one()), (Mono::new(0, 0), -Int::one())]);
        Coeff::new(self.num.shift(Mono::new(self.k as i32, 0)), q2m1.pow(self.k)).expect("nonzero denominator")
    }

    /// Substitutes `z = q^a`; the result has no `z`.
    pub fn subst_z_power(&self, a: i32) -> Ground {
        Ground { num: self.num.subst_z_power(a), k: self.k }.reduced()
    }

    /// Value in `Z/p`; errors if `q0 - q0^-1` vanishes and a denominator is present.
    pub fn eval_mod(&self, q0: u64, z0: u64, p: u64) -> Result<u64> {
        let v = self.num.eval_mod(q0, z0, p).ok_or_else(|| Error::Pole("q0 or z0 is zero".into()))?;
        if self.k == 0 {
            return Ok(v);
        }
        let qi = inv_mod(q0, p);
        let c = (q0 % p + p - qi) % p;
        if c == 0 {
            return Err(Error::Pole("q0 - q0^-1 vanishes".into()));
        }
        let ci = inv_mod(c, p);
        let mut out = v as u128;
        for _ in 0..self.k {
            out = out * ci as u128 % p as u128;
        }
        Ok(out as u64)
    }

    /// Value at a numeric point.
    pub fn eval(&self, q0: &Num, z0: &Num) -> Result<Num> {
        let v = super::field::eval_poly(&self.num, q0, z0)?;
        if self.k == 0 {
            return Ok(v);
        }
        let c = q0.sub(&q0.inv()?);
        let ck = c.pow(self.k as i64)?;
        v.div(&ck)
    }

    /// Compact serialization `k|num` used by the table cache.
    pub fn to_compact(&self) -> String {
        format!("{}|{}", self.k, self.num)
    }

    pub fn from_compact(s: &str) -> Result<Ground> {
        let (k, n) = s.split_once('|').ok_or_else(|| Error::Parse(format!("bad ground element `{s}`")))?;
        let k: u32 = k.parse().map_err(|_| Error::Parse(format!("bad exponent in `{s}`")))?;
        Ok(Ground::from_parts(LaurentPoly::parse_terms(n)?, k))
    }

    pub fn pretty(&self) -> String {
        match self.k {
            0 => self.num.pretty(),
            1 => format!("({})/(q - q^-1)", self.num.pretty()),
            k => format!("({})/(q - q^-1)^{k}", self.num.pretty()),
        }
    }
}

impl fmt::Debug for Ground {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl fmt::Display for Ground {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_coeff())
    }
}
