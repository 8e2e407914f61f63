//! Seeded random graded modules for property tests and corpus generation.

use rand::Rng;

use crate::error::Result;
use crate::module::{BaseRef, FPModule, ModuleMap};
use crate::poly::{Monomial, Polynomial};

fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            go(i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    if nvars > 0 {
        go(0, d, &mut vec![0; nvars], &mut out);
    }
    out
}

/// Homogeneous polynomial of degree `d` with coefficients in `-3..=3`, each
/// monomial present with probability `density`.
pub fn random_form<R: Rng>(base: &BaseRef, d: u32, density: f64, rng: &mut R) -> Polynomial {
    let ring = base.ring();
    let field = ring.field();
    let mut terms = Vec::new();
    for m in monomials_of_degree(ring.nvars(), d) {
        if rng.gen_bool(density) {
            terms.push((m, field.from_i64(rng.gen_range(-3..=3))));
        }
    }
    Polynomial::from_terms(ring, terms)
}

/// Cokernel of a `gens × rels` matrix whose columns are homogeneous of degrees
/// in `1..=max_degree`, with all generators in degree 0. Zero columns are redrawn.
pub fn random_graded_module<R: Rng>(base: &BaseRef, gens: usize, rels: usize, max_degree: u32, rng: &mut R) -> Result<FPModule> {
    let mut cols = Vec::with_capacity(rels);
    while cols.len() < rels {
        let d = rng.gen_range(1..=max_degree.max(1));
        let col: Vec<Polynomial> = (0..gens).map(|_| random_form(base, d, 0.6, rng)).collect();
        if col.iter().any(|p| !p.is_zero()) {
            cols.push(col);
        }
    }
    Ok(FPModule::new(ModuleMap::from_columns(base, gens, cols)?))
}
