//! Exact coefficient fields, monomials and orders, polynomials, and the
//! polynomial-expression parser.

pub mod field;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;

pub use field::{Field, Scalar};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{ArithOp, Polynomial, Term};
pub use ring::{Limits, Ring, RingSpec};
