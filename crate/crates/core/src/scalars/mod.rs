//! Exact coefficients: big rationals, polynomials in `q, t` and their
//! fraction field.

mod frac;
mod parse;
mod poly;

pub use frac::ScalarQT;
pub use parse::parse_scalar;
pub use poly::PolyQT;

pub type Rational = num_rational::BigRational;

/// `n / d` as a big rational.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// The integer `n` as a big rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
