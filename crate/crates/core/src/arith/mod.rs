//! Exact scalars: rationals and cyclotomic numbers.

mod cyclo;

pub use cyclo::{cyclotomic_polynomial, euler_phi, CycloNum};

/// Arbitrary-precision rationals.
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}
