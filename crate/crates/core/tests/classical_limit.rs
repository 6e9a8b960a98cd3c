//! With `z = q^a`, the structure constants of `B_3` tend to those of the Brauer
//! algebra with loop parameter `a` as `q → 1`.

mod common;

use common::check_limits;
use num_bigint::BigInt;
use num_rational::BigRational;
use qbrauer::coefficients::{classical_limit, Ground};

#[test]
fn three_strands_all_exponents() {
    for a in -2..=3 {
        let (ok, total) = check_limits(3, a);
        assert_eq!(ok, total, "a={a}");
        assert_eq!(total, 225);
    }
}

#[test]
fn delta_limit() {
    for a in -2..=3 {
        assert_eq!(classical_limit(&Ground::delta().to_coeff(), a).unwrap(), BigRational::from_integer(BigInt::from(a)));
    }
}
