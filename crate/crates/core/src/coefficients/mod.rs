//! Exact coefficient arithmetic: Laurent polynomials in `q`, `z`, their fraction
//! field, the ground ring of structure constants, and specializations.

mod coeff;
pub(crate) mod dense;
mod field;
mod ground;
mod int;
mod laurent;
mod ring;
mod specialize;

pub use coeff::Coeff;
pub use field::{eval_poly, inv_mod, is_prime, pow_mod, Field, Num};
pub use ground::Ground;
pub use int::Int;
pub use laurent::{LaurentPoly, Mono};
pub use ring::Ring;
pub use specialize::{
    classical_limit, delta, quantum_characteristic, specialize, specialize_ground, NumericPoint, Specialization,
    Specialized,
};
