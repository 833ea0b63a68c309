//! Exact number types: integer polynomials, real quadratic numbers, real
//! algebraic numbers and cyclotomic numbers.

pub mod algebraic;
pub mod cyclotomic;
pub mod matrix;
pub mod poly;
pub mod quadratic;
pub mod tower;

pub use algebraic::AlgebraicReal;
pub use cyclotomic::Cyclotomic;
pub use poly::{IntPoly, RootInterval};
pub use quadratic::QuadraticNumber;
pub use tower::TowerNumber;

pub type Rational = num_rational::BigRational;

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}


/// Nearest `f64` to an exact rational, for display only.
pub fn rational_to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}
