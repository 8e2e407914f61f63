//! Exact coefficient fields: the rationals and prime fields `F_p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime modulus (exclusive).
pub const MAX_PRIME: u32 = 1 << 31;

/// Coefficient field of a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
}

/// A field element. Rationals are kept in lowest terms with positive
/// denominator; residues are kept in `[0, p)`.
///
/// A coefficient carries no field tag of its own beyond its variant: all
/// arithmetic goes through [`Field`], which owns the modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coeff {
    Rational(BigRational),
    Residue(u32),
}

impl Field {
    /// Builds `F_p`, rejecting composite or out-of-range moduli.
    pub fn prime(p: u32) -> Result<Field> {
        if !(2..MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidArgument(format!(
                "{p} is not a prime below 2^31"
            )));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Rational => Coeff::Rational(BigRational::zero()),
            Field::Prime(_) => Coeff::Residue(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Rational => Coeff::Rational(BigRational::one()),
            Field::Prime(_) => Coeff::Residue(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            Field::Rational => Coeff::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Coeff::Residue(n.rem_euclid(*p as i64) as u32),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self {
            Field::Rational => Coeff::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Coeff::Residue(r.to_u32().expect("residue fits in u32"))
            }
        }
    }

    /// `num / den`; in characteristic `p` the denominator must be a unit.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Field::Rational => Ok(Coeff::Rational(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(_) => {
                let d = self.from_bigint(den);
                if self.is_zero(&d) {
                    return Err(Error::NonInvertibleDenominator(den.to_string()));
                }
                Ok(self.div(&self.from_bigint(num), &d))
            }
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rational(q) => q.is_zero(),
            Coeff::Residue(r) => *r == 0,
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rational(q) => q.is_one(),
            Coeff::Residue(r) => *r == 1,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rational, Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x + y),
            (Field::Prime(p), Coeff::Residue(x), Coeff::Residue(y)) => {
                Coeff::Residue(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            _ => mixed(),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Rational, Coeff::Rational(x)) => Coeff::Rational(-x),
            (Field::Prime(p), Coeff::Residue(x)) => Coeff::Residue(if *x == 0 { 0 } else { p - x }),
            _ => mixed(),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rational, Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x - y),
            (Field::Prime(p), Coeff::Residue(x), Coeff::Residue(y)) => {
                Coeff::Residue(((*x as u64 + (*p - *y) as u64) % *p as u64) as u32)
            }
            _ => mixed(),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rational, Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x * y),
            (Field::Prime(p), Coeff::Residue(x), Coeff::Residue(y)) => {
                Coeff::Residue(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            _ => mixed(),
        }
    }

    /// Multiplicative inverse. Panics on zero; callers test first.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        assert!(!self.is_zero(a), "inverse of zero coefficient");
        match (self, a) {
            (Field::Rational, Coeff::Rational(x)) => Coeff::Rational(x.recip()),
            (Field::Prime(p), Coeff::Residue(x)) => Coeff::Residue(inv_mod(*x, *p)),
            _ => mixed(),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(&self, a: &Coeff, mut e: u64) -> Coeff {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// True when the element is a negative rational. Residues are never negative.
    pub fn is_negative(&self, a: &Coeff) -> bool {
        matches!(a, Coeff::Rational(q) if q.is_negative())
    }

    /// Image of the integer `n` (as a field element) is zero.
    pub fn integer_vanishes(&self, n: usize) -> bool {
        match self {
            Field::Rational => n == 0,
            Field::Prime(p) => n.is_multiple_of(*p as usize),
        }
    }
}

#[cold]
fn mixed() -> ! {
    panic!("coefficients from different fields mixed in one operation")
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i64) as u32
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if (n as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "ZZ/{p}"),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Coeff::Residue(r) => write!(f, "{r}"),
        }
    }
}

impl Coeff {
    /// Absolute value for printing signs separately; residues are returned as is.
    pub(crate) fn abs(&self) -> Coeff {
        match self {
            Coeff::Rational(q) => Coeff::Rational(q.abs()),
            Coeff::Residue(r) => Coeff::Residue(*r),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse_round_trips() {
        let f = Field::prime(101).unwrap();
        for a in 1..101 {
            let c = f.from_i64(a);
            assert!(f.is_one(&f.mul(&c, &f.inv(&c))));
        }
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(15).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2_147_483_647).is_ok());
    }

    #[test]
    fn rationals_are_normalized() {
        let q = Field::Rational;
        let c = q.from_fraction(&BigInt::from(6), &BigInt::from(-4)).unwrap();
        assert_eq!(c.to_string(), "-3/2");
    }

    #[test]
    fn denominator_divisible_by_p_is_rejected() {
        let f = Field::prime(3).unwrap();
        let err = f.from_fraction(&BigInt::from(1), &BigInt::from(6)).unwrap_err();
        assert!(matches!(err, Error::NonInvertibleDenominator(_)));
    }

    #[test]
    fn negative_residues_wrap() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.from_i64(-1), Coeff::Residue(6));
        assert_eq!(f.neg(&Coeff::Residue(0)), Coeff::Residue(0));
    }
}
