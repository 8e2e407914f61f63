use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::coeff::{Coeff, Field};
use crate::poly::monomial::Monomial;
use crate::poly::ring::{Ring, RingRef};

/// Sparse polynomial: nonzero terms in strictly descending order of the
/// ring's monomial order. The zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        Ring::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &RingRef) -> Polynomial {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &RingRef, c: Coeff) -> Polynomial {
        Polynomial::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &RingRef, n: i64) -> Polynomial {
        Polynomial::constant(ring, ring.field().from_i64(n))
    }

    pub fn variable(ring: &RingRef, index: usize) -> Polynomial {
        Polynomial::term(ring, Monomial::variable(ring.nvars(), index), ring.field().one())
    }

    pub fn term(ring: &RingRef, m: Monomial, c: Coeff) -> Polynomial {
        debug_assert_eq!(m.nvars(), ring.nvars());
        if ring.field().is_zero(&c) {
            return Polynomial::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(m, c)] }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal monomials, drops zeros.
    pub fn from_terms(ring: &RingRef, mut terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        let order = ring.order();
        let field = ring.field();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !field.is_zero(c));
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Trusted constructor: terms already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted(ring: &RingRef, terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| ring.order().compare(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant, hence a unit.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_unit() && self.field().is_one(&self.terms[0].1)
    }

    pub fn constant_term(&self) -> Coeff {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.field().zero(),
        }
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Variables occurring in some term.
    pub fn support(&self) -> Vec<usize> {
        let n = self.ring.nvars();
        (0..n).filter(|&i| self.terms.iter().any(|(m, _)| m.exponent(i) > 0)).collect()
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        let f = self.field();
        if f.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), f.mul(a, c))).collect(),
        }
    }

    /// Multiply by `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let f = self.field();
        if f.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), f.mul(a, c))).collect(),
        }
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&self.field().inv(lc)),
        }
    }

    /// `self + c * m * other`, merging in one pass.
    pub fn add_scaled(&self, other: &Polynomial, m: &Monomial, c: &Coeff) -> Polynomial {
        let field = self.field();
        let order = self.ring.order();
        let a = &self.terms;
        let b = &other.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut i = 0;
        let mut j = 0;
        let shifted = |j: usize| (b[j].0.mul(m), field.mul(&b[j].1, c));
        let mut current = if b.is_empty() { None } else { Some(shifted(0)) };
        while let Some((bm, bc)) = current.take() {
            while i < a.len() && order.compare(&a[i].0, &bm) == Ordering::Greater {
                out.push(a[i].clone());
                i += 1;
            }
            if i < a.len() && a[i].0 == bm {
                let s = field.add(&a[i].1, &bc);
                if !field.is_zero(&s) {
                    out.push((bm, s));
                }
                i += 1;
            } else if !field.is_zero(&bc) {
                out.push((bm, bc));
            }
            j += 1;
            if j < b.len() {
                current = Some(shifted(j));
            }
        }
        out.extend_from_slice(&a[i..]);
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_same_ring(other);
        self.add_scaled(other, &Monomial::one(self.ring.nvars()), &self.field().one())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.check_same_ring(other);
        let f = self.field();
        self.add_scaled(other, &Monomial::one(self.ring.nvars()), &f.neg(&f.one()))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_same_ring(other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let f = self.field();
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            return large.mul_term(&small.terms[0].0, &small.terms[0].1);
        }
        let mut products = Vec::with_capacity(self.len() * other.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                products.push((ma.mul(mb), f.mul(ca, cb)));
            }
        }
        Polynomial::from_terms(&self.ring, products)
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        // guard against exponent overflow up front
        if let Some(d) = self.terms.iter().flat_map(|(m, _)| m.exponents().iter()).max() {
            if (*d as u64) * (e as u64) > u32::MAX as u64 {
                return Err(Error::ExponentOverflow);
            }
        }
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        self.check_same_ring(divisor);
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let field = self.field();
        let (lm, lc) = &divisor.terms[0];
        let lc_inv = field.inv(lc);
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.terms.first() {
            if !lm.divides(m) {
                return None;
            }
            let qm = lm.quotient_of(m);
            let qc = field.mul(c, &lc_inv);
            rest = rest.add_scaled(divisor, &qm, &field.neg(&qc));
            quotient.push((qm, qc));
        }
        Some(Polynomial::from_sorted(&self.ring, quotient))
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to `var_map[i]`.
    pub fn map_into(&self, target: &RingRef, var_map: &[usize]) -> Polynomial {
        debug_assert_eq!(var_map.len(), self.ring.nvars());
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; n];
                for (i, &x) in m.exponents().iter().enumerate() {
                    e[var_map[i]] += x;
                }
                (Monomial::from_exponents(&e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Same variables, possibly different order.
    pub fn reorder(&self, target: &RingRef) -> Polynomial {
        let map: Vec<usize> = (0..self.ring.nvars()).collect();
        self.map_into(target, &map)
    }

    /// Substitutes `images[i]` for variable `i`; the result lives in the images' ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let target = images[0].ring().clone();
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e).expect("substitution exponent overflow"));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let f = self.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(i) > 0)
            .map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                let k = e[i];
                e[i] -= 1;
                (Monomial::from_exponents(&e), f.mul(c, &f.from_i64(k as i64)))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    fn check_same_ring(&self, other: &Polynomial) {
        assert!(
            Ring::same(&self.ring, &other.ring),
            "polynomials from different rings: {} vs {}",
            self.ring,
            other.ring
        );
    }

    /// Ring check returning an error instead of panicking.
    pub fn ensure_ring(&self, ring: &RingRef) -> Result<()> {
        if Ring::same(&self.ring, ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{} vs {}", self.ring, ring)))
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

pub(crate) fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &[String], m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{}", vars[i])?;
        } else {
            write!(f, "{}^{}", vars[i], e)?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        let vars = self.ring.vars();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = field.is_negative(c);
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if field.is_one(&a) {
                write_monomial(f, vars, m)?;
            } else {
                write!(f, "{a}*")?;
                write_monomial(f, vars, m)?;
            }
        }
        Ok(())
    }
}

/// Displays a monomial with the ring's variable names.
pub struct MonomialDisplay<'a>(pub &'a RingRef, pub &'a Monomial);

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1.is_one() {
            write!(f, "1")
        } else {
            write_monomial(f, self.0.vars(), self.1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff::Field;
    use crate::poly::monomial::MonomialOrder;
    use crate::poly::parse::parse_polynomial;
    use proptest::prelude::*;

    fn ring() -> RingRef {
        Ring::new(Field::Rational, &["x", "y", "z"], MonomialOrder::GrevLex).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &ring()).unwrap()
    }

    #[test]
    fn exact_division() {
        let f = p("x^3 - y^3");
        let g = p("x - y");
        assert_eq!(f.exact_div(&g).unwrap(), p("x^2 + x*y + y^2"));
        assert!(f.exact_div(&p("x + y")).is_none());
    }

    #[test]
    fn derivative_and_substitution() {
        let f = p("x^2*y + 3*z");
        assert_eq!(f.derivative(0), p("2*x*y"));
        let t = Ring::new(Field::Rational, &["t"], MonomialOrder::GrevLex).unwrap();
        let imgs: Vec<Polynomial> = ["t^3", "t^4", "t^5"].iter().map(|s| parse_polynomial(s, &t).unwrap()).collect();
        assert!(p("y^2 - x*z").substitute(&imgs).is_zero());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u32..4, 3), -5i64..6), 0..6).prop_map(|terms| {
            let r = ring();
            let terms = terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(&e), r.field().from_i64(c)))
                .collect();
            Polynomial::from_terms(&r, terms)
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn product_divides_exactly(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b), Some(a));
        }
    }
}
