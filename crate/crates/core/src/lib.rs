//! Exact commutative algebra over Q and F_p, with checkers for statements
//! around the homological conjectures: direct-summand splitting, acyclicity,
//! syzygy bounds, symbolic powers, Frobenius criteria and algebra modifications.
//!
//! Local statements are read at the homogeneous maximal ideal of a graded
//! polynomial ring, which stands in for a complete regular local ring.

pub mod checks;
pub mod error;
pub mod frobenius;
pub mod groebner;
pub mod modification;
pub mod module;
pub mod poly;
pub mod symbolic;

pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, Ideal};
pub use poly::{Field, Monomial, MonomialOrder, Polynomial, Ring, RingRef};
