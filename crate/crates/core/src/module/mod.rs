//! Finitely presented modules over polynomial rings and their quotients.

pub mod base;
pub mod fp;
pub mod linalg;
pub mod matrix;
pub mod random;
pub mod resolution;
pub mod schreyer;

pub use base::{BaseRef, BaseRing};
pub use fp::{
    annihilator, image_basis, in_image, kernel_generators, lift, minimal_generators, prune, same_image, subquotient,
    syzygy_module, FPModule, Pruned, Subquotient,
};
pub use linalg::{fitting_ideal, minor, minors, rank_of_map, subsets};
pub use matrix::ModuleMap;
pub use resolution::{
    betti_numbers, complex_homology, hom_module, is_acyclic, minimal_resolution, tor_modules, Complex,
    HomModule, Resolution, ResolutionStatus,
};
