use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::groebner::Ideal;
use crate::poly::{Polynomial, RingRef};

/// Ambient ring of a module: a polynomial ring `R`, or a quotient `R/Q`.
/// Elements are represented by polynomials of `R`.
#[derive(Debug, Clone)]
pub struct BaseRing {
    ring: RingRef,
    quotient: Option<Ideal>,
    domain: bool,
}

pub type BaseRef = Arc<BaseRing>;

impl BaseRing {
    pub fn polynomial(ring: &RingRef) -> BaseRef {
        Arc::new(BaseRing { ring: ring.clone(), quotient: None, domain: true })
    }

    /// `R/Q`. `domain_certified` is the caller's claim that `Q` is prime; it
    /// only unlocks rank computations and is never verified here.
    pub fn quotient(ring: &RingRef, ideal: &Ideal, domain_certified: bool) -> Result<BaseRef> {
        if ideal.is_zero() {
            return Ok(BaseRing::polynomial(ring));
        }
        let reduced = ideal.reduced()?;
        Ok(Arc::new(BaseRing { ring: ring.clone(), quotient: Some(reduced), domain: domain_certified }))
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn quotient_ideal(&self) -> Option<&Ideal> {
        self.quotient.as_ref()
    }

    pub fn quotient_gens(&self) -> &[Polynomial] {
        self.quotient.as_ref().map(|q| q.gens()).unwrap_or(&[])
    }

    pub fn is_polynomial(&self) -> bool {
        self.quotient.is_none()
    }

    pub fn is_domain(&self) -> bool {
        self.domain
    }

    /// Canonical representative modulo the quotient ideal.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        match &self.quotient {
            None => p.clone(),
            Some(q) => q.groebner_basis().expect("quotient basis is precomputed").normal_form(p),
        }
    }

    pub fn is_zero(&self, p: &Polynomial) -> bool {
        p.is_zero() || self.reduce(p).is_zero()
    }

    /// Whether the quotient ideal lies in the homogeneous maximal ideal, i.e.
    /// the origin is a point of `Spec(R/Q)`.
    pub fn origin_on_spectrum(&self) -> bool {
        self.quotient_gens().iter().all(|g| self.ring.field().is_zero(&g.constant_term()))
    }

    pub fn same(a: &BaseRef, b: &BaseRef) -> bool {
        Arc::ptr_eq(a, b)
            || (crate::poly::Ring::same(&a.ring, &b.ring)
                && match (&a.quotient, &b.quotient) {
                    (None, None) => true,
                    (Some(x), Some(y)) => x.gens() == y.gens(),
                    _ => false,
                })
    }
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.quotient {
            None => write!(f, "{}", self.ring),
            Some(q) => write!(f, "{} / {}", self.ring, q),
        }
    }
}
