//! Cell modules `C(f, λ)`: coset and Jucys-Murphy bases, generator actions,
//! Gram matrices, the restriction filtration and radicals.

mod filtration;
pub mod linalg;
pub mod murphy;
mod module;
mod radical;
pub mod spectrum;
mod vform;

pub use module::{specialize_matrix, CellModule, RemovalSum, TriangularityCertificate};
pub use filtration::{filtration_check, y_element, FiltrationLayer, FiltrationReport};
pub use vform::{VFormReport, VModule};
pub use radical::{
    admissibility_exponent, admissible, functor_f_check, radical_dim, radical_factor_shape, two_box_hecke_check, two_box_shapes,
    FunctorReport, RadicalFactors,
};
