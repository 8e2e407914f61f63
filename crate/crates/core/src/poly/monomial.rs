use std::cmp::Ordering;

use smallvec::SmallVec;

use crate::error::{Error, Result};

type Exponents = SmallVec<[u32; 8]>;

/// Exponent vector with cached total degree.
///
/// Multiplication panics on 32-bit exponent overflow; the checked variants
/// are used wherever exponents come from user input.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u64,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn variable(nvars: usize, index: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Monomial {
        Monomial { degree: exps.iter().map(|&e| e as u64).sum(), exps: SmallVec::from_slice(exps) }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Bit `i` set iff variable `i` (mod 64) occurs; a cheap divisibility prefilter.
    pub fn support_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << (i % 64);
            }
        }
        mask
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = Exponents::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial { exps, degree: self.degree + other.degree })
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial exponent overflow")
    }

    pub fn checked_pow(&self, e: u32) -> Result<Monomial> {
        let mut exps = Exponents::with_capacity(self.exps.len());
        for a in &self.exps {
            exps.push(a.checked_mul(e).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial { degree: self.degree * e as u64, exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| b - a).collect();
        Monomial { degree: other.degree - self.degree, exps }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial { degree: exps.iter().map(|&e| e as u64).sum(), exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        Monomial { degree: exps.iter().map(|&e| e as u64).sum(), exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Degree restricted to the variable range.
    pub fn partial_degree(&self, range: std::ops::Range<usize>) -> u64 {
        self.exps[range].iter().map(|&e| e as u64).sum()
    }

    /// Index of the single variable, if this monomial is a pure power `x_i^k` with `k > 0`.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

/// Supported monomial orders. `Elimination(k)` compares the first `k`
/// variables by graded reverse lex, breaking ties with graded reverse lex on
/// the remaining variables; every monomial involving the first block is then
/// larger than every monomial free of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    GrevLex,
    Elimination(usize),
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex(a.exponents(), b.exponents()),
            MonomialOrder::GrLex => a.degree.cmp(&b.degree).then_with(|| lex(a.exponents(), b.exponents())),
            MonomialOrder::GrevLex => {
                a.degree.cmp(&b.degree).then_with(|| revlex(a.exponents(), b.exponents()))
            }
            MonomialOrder::Elimination(k) => {
                let k = (*k).min(a.nvars());
                let n = a.nvars();
                block_grevlex(a, b, 0..k).then_with(|| block_grevlex(a, b, k..n))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrLex => "grlex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Elimination(k) => format!("elim{k}"),
        }
    }

    pub fn parse(name: &str) -> Option<MonomialOrder> {
        match name {
            "lex" => Some(MonomialOrder::Lex),
            "grlex" | "deglex" => Some(MonomialOrder::GrLex),
            "grevlex" | "degrevlex" => Some(MonomialOrder::GrevLex),
            other => other.strip_prefix("elim").and_then(|k| k.parse().ok()).map(MonomialOrder::Elimination),
        }
    }
}

/// Checked comparison for monomials of possibly different lengths.
pub fn compare(u: &Monomial, v: &Monomial, order: MonomialOrder) -> Result<Ordering> {
    if u.nvars() != v.nvars() {
        return Err(Error::DimensionMismatch(format!(
            "monomials of length {} and {}",
            u.nvars(),
            v.nvars()
        )));
    }
    Ok(order.compare(u, v))
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
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

fn block_grevlex(a: &Monomial, b: &Monomial, range: std::ops::Range<usize>) -> Ordering {
    a.partial_degree(range.clone())
        .cmp(&b.partial_degree(range.clone()))
        .then_with(|| revlex(&a.exponents()[range.clone()], &b.exponents()[range]))
}
