//! Gröbner bases of ideals and submodules, and the ideal toolkit.

pub mod buchberger;
pub mod ideal;
pub mod vector;

pub use buchberger::VectorBasis;
pub use ideal::{
    codimension, dimension, eliminate, groebner_basis, ideal_quotient, intersection, membership,
    quotient_by_element, radical_membership, saturation, saturation_rabinowitsch, GroebnerBasis, Ideal,
};
pub use vector::{FreeSpace, ModuleOrder, Term, Vector};
