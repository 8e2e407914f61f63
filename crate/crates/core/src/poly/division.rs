//! Multivariate division with remainder.

use crate::error::{Error, Result};
use crate::poly::monomial::Monomial;
use crate::poly::polynomial::Polynomial;
use crate::poly::ring::Ring;

/// Result of dividing `f` by a list `G`: `f = sum(quotients[i] * G[i]) + remainder`.
#[derive(Debug, Clone)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Full division of `f` by `divisors`. At every step the leading term of the
/// running dividend is cancelled by the first divisor (in list order) whose
/// leading monomial divides it; otherwise it moves to the remainder.
pub fn divide(f: &Polynomial, divisors: &[Polynomial]) -> Result<Division> {
    let ring = f.ring();
    for g in divisors {
        if !Ring::same(g.ring(), ring) {
            return Err(Error::RingMismatch(format!("divisor in {} but dividend in {}", g.ring(), ring)));
        }
    }
    let field = ring.field();
    let active: Vec<(usize, &Monomial, u64)> = divisors
        .iter()
        .enumerate()
        .filter_map(|(i, g)| g.leading_monomial().map(|m| (i, m, m.support_mask())))
        .collect();
    let mut quotient_terms: Vec<Vec<(Monomial, crate::poly::coeff::Coeff)>> = vec![Vec::new(); divisors.len()];
    let mut remainder = Vec::new();
    let mut rest = f.clone();
    while let Some((m, c)) = rest.terms().first().cloned() {
        let mask = m.support_mask();
        let hit = active.iter().find(|(_, lm, lmask)| lmask & !mask == 0 && lm.divides(&m));
        match hit {
            Some(&(i, lm, _)) => {
                let g = &divisors[i];
                let qm = lm.quotient_of(&m);
                let qc = field.div(&c, g.leading_coeff().unwrap());
                rest = rest.add_scaled(g, &qm, &field.neg(&qc));
                quotient_terms[i].push((qm, qc));
            }
            None => {
                remainder.push((m.clone(), c.clone()));
                rest = Polynomial::from_sorted(ring, rest.terms()[1..].to_vec());
            }
        }
    }
    Ok(Division {
        quotients: quotient_terms.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect(),
        remainder: Polynomial::from_sorted(ring, remainder),
    })
}

/// Remainder of `f` on division by `divisors`.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial> {
    Ok(divide(f, divisors)?.remainder)
}
