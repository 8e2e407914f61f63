//! Exact coefficients, monomials, monomial orders and sparse polynomials.

pub mod coeff;
pub mod division;
pub mod monomial;
pub mod parse;
pub mod polynomial;
pub mod ring;

pub use coeff::{Coeff, Field};
pub use division::{divide, normal_form, Division};
pub use monomial::{compare, Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use polynomial::{MonomialDisplay, Polynomial};
pub use ring::{Limits, Ring, RingRef};
