//! Elements of free modules `R^n` as sorted term lists, and the module
//! term orders used by the Gröbner engine.
//!
//! Polynomials are the rank-one case; the same Buchberger implementation
//! serves ideals and submodules.

use std::cmp::Ordering;

use crate::poly::{Coeff, Monomial, Polynomial, RingRef};

/// Term order on `R^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleOrder {
    /// Position over term; a smaller position index is larger.
    Pot,
    /// Positions below `head` dominate every other term and compare POT among
    /// themselves. Remaining terms compare by graded reverse lex on the first
    /// `block` variables, then by position, then by graded reverse lex on the
    /// rest. Used to eliminate the first variable block from module relations.
    HeadBlock { head: usize, block: usize },
    /// Positions below `head` dominate every other term. Within each of the
    /// two blocks, terms compare by weighted degree, then by the ring order,
    /// then by position.
    HeadDegree { head: usize },
}

/// A free module `R^rank` with a term order.
#[derive(Debug, Clone)]
pub struct FreeSpace {
    pub ring: RingRef,
    pub rank: usize,
    pub order: ModuleOrder,
    /// Degree shift of each position for pair selection; empty means zero.
    pub weights: Vec<u64>,
}

pub type Term = (usize, Monomial, Coeff);

/// Nonzero terms sorted strictly descending in the space's order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Vector {
    pub terms: Vec<Term>,
}

impl Vector {
    pub fn zero() -> Vector {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_position(&self) -> Option<usize> {
        self.terms.first().map(|t| t.0)
    }
}

fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

fn block(a: &Monomial, b: &Monomial, r: std::ops::Range<usize>) -> Ordering {
    a.partial_degree(r.clone())
        .cmp(&b.partial_degree(r.clone()))
        .then_with(|| revlex(&a.exponents()[r.clone()], &b.exponents()[r]))
}

impl FreeSpace {
    pub fn new(ring: &RingRef, rank: usize) -> FreeSpace {
        FreeSpace { ring: ring.clone(), rank, order: ModuleOrder::Pot, weights: Vec::new() }
    }

    pub fn with_order(ring: &RingRef, rank: usize, order: ModuleOrder) -> FreeSpace {
        FreeSpace { ring: ring.clone(), rank, order, weights: Vec::new() }
    }

    pub fn with_weights(mut self, weights: Vec<u64>) -> FreeSpace {
        self.weights = weights;
        self
    }

    pub fn weight(&self, pos: usize) -> u64 {
        self.weights.get(pos).copied().unwrap_or(0)
    }

    /// Largest weighted degree of a term of `v`.
    pub fn sugar(&self, v: &Vector) -> u64 {
        v.terms.iter().map(|(p, m, _)| m.degree() + self.weight(*p)).max().unwrap_or(0)
    }

    pub fn compare(&self, pa: usize, ma: &Monomial, pb: usize, mb: &Monomial) -> Ordering {
        match self.order {
            ModuleOrder::Pot => pb.cmp(&pa).then_with(|| self.ring.order().compare(ma, mb)),
            ModuleOrder::HeadBlock { head, block: k } => {
                let (ha, hb) = (pa < head, pb < head);
                match (ha, hb) {
                    (true, true) => pb.cmp(&pa).then_with(|| self.ring.order().compare(ma, mb)),
                    (true, false) => Ordering::Greater,
                    (false, true) => Ordering::Less,
                    (false, false) => {
                        let n = ma.nvars();
                        block(ma, mb, 0..k)
                            .then_with(|| pb.cmp(&pa))
                            .then_with(|| block(ma, mb, k..n))
                    }
                }
            }
            ModuleOrder::HeadDegree { head } => (pa < head)
                .cmp(&(pb < head))
                .then_with(|| (ma.degree() + self.weight(pa)).cmp(&(mb.degree() + self.weight(pb))))
                .then_with(|| self.ring.order().compare(ma, mb))
                .then_with(|| pb.cmp(&pa)),
        }
    }

    /// Sorts and merges arbitrary terms.
    pub fn normalize(&self, mut terms: Vec<Term>) -> Vector {
        let field = self.ring.field();
        terms.sort_by(|a, b| self.compare(b.0, &b.1, a.0, &a.1));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.0 == t.0 && last.1 == t.1 => last.2 = field.add(&last.2, &t.2),
                _ => out.push(t),
            }
        }
        out.retain(|t| !field.is_zero(&t.2));
        Vector { terms: out }
    }

    pub fn from_column(&self, column: &[Polynomial]) -> Vector {
        debug_assert!(column.len() <= self.rank);
        let mut terms = Vec::new();
        for (pos, p) in column.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push((pos, m.clone(), c.clone()));
            }
        }
        self.normalize(terms)
    }

    /// Places `column` starting at position `offset`.
    pub fn from_column_at(&self, column: &[Polynomial], offset: usize) -> Vector {
        let mut terms = Vec::new();
        for (k, p) in column.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push((offset + k, m.clone(), c.clone()));
            }
        }
        self.normalize(terms)
    }

    pub fn to_column(&self, v: &Vector) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); self.rank];
        for (pos, m, c) in &v.terms {
            buckets[*pos].push((m.clone(), c.clone()));
        }
        buckets.into_iter().map(|t| Polynomial::from_terms(&self.ring, t)).collect()
    }

    /// Extracts positions `range` as a column (reindexed from zero).
    pub fn slice_column(&self, v: &Vector, range: std::ops::Range<usize>) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); range.len()];
        for (pos, m, c) in &v.terms {
            if range.contains(pos) {
                buckets[pos - range.start].push((m.clone(), c.clone()));
            }
        }
        buckets.into_iter().map(|t| Polynomial::from_terms(&self.ring, t)).collect()
    }

    /// `a[from..] + c * m * b`.
    pub fn add_scaled_tail(&self, a: &[Term], b: &Vector, m: &Monomial, c: &Coeff) -> Vector {
        let field = self.ring.field();
        let bt = &b.terms;
        let mut out = Vec::with_capacity(a.len() + bt.len());
        let mut i = 0;
        for (pb, mb, cb) in bt {
            let sm = mb.mul(m);
            let sc = field.mul(cb, c);
            while i < a.len() && self.compare(a[i].0, &a[i].1, *pb, &sm) == Ordering::Greater {
                out.push(a[i].clone());
                i += 1;
            }
            if i < a.len() && a[i].0 == *pb && a[i].1 == sm {
                let s = field.add(&a[i].2, &sc);
                if !field.is_zero(&s) {
                    out.push((*pb, sm, s));
                }
                i += 1;
            } else if !field.is_zero(&sc) {
                out.push((*pb, sm, sc));
            }
        }
        out.extend_from_slice(&a[i..]);
        Vector { terms: out }
    }

    pub fn add_scaled(&self, a: &Vector, b: &Vector, m: &Monomial, c: &Coeff) -> Vector {
        self.add_scaled_tail(&a.terms, b, m, c)
    }

    pub fn add(&self, a: &Vector, b: &Vector) -> Vector {
        let one = self.ring.field().one();
        self.add_scaled(a, b, &Monomial::one(self.ring.nvars()), &one)
    }

    pub fn sub(&self, a: &Vector, b: &Vector) -> Vector {
        let f = self.ring.field();
        self.add_scaled(a, b, &Monomial::one(self.ring.nvars()), &f.neg(&f.one()))
    }

    pub fn scale_poly(&self, v: &Vector, p: &Polynomial) -> Vector {
        let mut acc = Vector::zero();
        for (m, c) in p.terms() {
            acc = self.add_scaled(&acc, v, m, c);
        }
        acc
    }

    pub fn monic(&self, v: &Vector) -> Vector {
        let field = self.ring.field();
        match v.lead() {
            None => v.clone(),
            Some((_, _, lc)) => {
                if field.is_one(lc) {
                    return v.clone();
                }
                let inv = field.inv(lc);
                Vector { terms: v.terms.iter().map(|(p, m, c)| (*p, m.clone(), field.mul(c, &inv))).collect() }
            }
        }
    }

    pub fn unit(&self, pos: usize) -> Vector {
        Vector { terms: vec![(pos, Monomial::one(self.ring.nvars()), self.ring.field().one())] }
    }
}
