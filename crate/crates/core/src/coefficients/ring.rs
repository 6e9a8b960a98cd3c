use super::coeff::Coeff;
use super::ground::Ground;
use std::fmt;

/// Coefficient ring for algebra elements. Structure constants are computed in
/// [`Ground`] and mapped in with [`Ring::from_ground`].
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn from_ground(g: &Ground) -> Self;
    fn to_coeff(&self) -> Coeff;

    fn monomial(c: i64, q: i32, z: i32) -> Self {
        Self::from_ground(&Ground::monomial(c, q, z))
    }

    /// `q - q^-1`
    fn qdiff() -> Self {
        Self::from_ground(&Ground::qdiff())
    }
}

impl Ring for Ground {
    fn zero() -> Self {
        Ground::zero()
    }
    fn one() -> Self {
        Ground::one()
    }
    fn is_zero(&self) -> bool {
        Ground::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Ground::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Ground::sub(self, o)
    }
    fn neg(&self) -> Self {
        Ground::neg(self)
    }
    fn mul(&self, o: &Self) -> Self {
        Ground::mul(self, o)
    }
    fn from_ground(g: &Ground) -> Self {
        g.clone()
    }
    fn to_coeff(&self) -> Coeff {
        Ground::to_coeff(self)
    }
}

impl Ring for Coeff {
    fn zero() -> Self {
        Coeff::zero()
    }
    fn one() -> Self {
        Coeff::one()
    }
    fn is_zero(&self) -> bool {
        Coeff::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Coeff::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Coeff::sub(self, o)
    }
    fn neg(&self) -> Self {
        Coeff::neg(self)
    }
    fn mul(&self, o: &Self) -> Self {
        Coeff::mul(self, o)
    }
    fn from_ground(g: &Ground) -> Self {
        g.to_coeff()
    }
    fn to_coeff(&self) -> Coeff {
        self.clone()
    }
}
