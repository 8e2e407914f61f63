//! Positive characteristic: Frobenius powers, Fedder-type splitting tests at
//! the origin, Frobenius pushforwards and the Kunz regularity check.

use crate::error::{Error, Result};
use crate::groebner::{ideal_quotient, Ideal};
use crate::module::{prune, BaseRef, BaseRing, FPModule, ModuleMap};
use crate::poly::{Coeff, Monomial, Polynomial, RingRef};

/// `p^e`, guarded against overflow.
pub fn frobenius_exponent(ring: &RingRef, e: u32) -> Result<u32> {
    let p = ring.characteristic();
    if p == 0 {
        return Err(Error::CharacteristicZero);
    }
    if e == 0 {
        return Err(Error::InvalidArgument("Frobenius iterate must be at least 1".into()));
    }
    p.checked_pow(e).ok_or(Error::ExponentOverflow)
}

/// `f^q` over a prime field, where raising to `q` fixes every coefficient.
pub fn frobenius_of(f: &Polynomial, q: u32) -> Result<Polynomial> {
    let terms = f.terms().iter().map(|(m, c)| Ok((m.checked_pow(q)?, c.clone()))).collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::from_terms(f.ring(), terms))
}

/// `I^[p^e]`.
pub fn frobenius_power(ideal: &Ideal, e: u32) -> Result<Ideal> {
    let q = frobenius_exponent(ideal.ring(), e)?;
    let gens = ideal.gens().iter().map(|g| frobenius_of(g, q)).collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring(), gens)
}

/// `(I^[q] : I)`. For a principal ideal `(f)` this is `(f^{q-1})`.
pub fn fedder_colon(ideal: &Ideal, q: u32) -> Result<Ideal> {
    let ring = ideal.ring();
    if ideal.is_zero() {
        return Ok(Ideal::unit(ring));
    }
    if let [f] = ideal.gens() {
        return Ideal::new(ring, vec![f.pow(q - 1)?]);
    }
    let e = q.ilog(ring.characteristic());
    ideal_quotient(&frobenius_power(ideal, e)?, ideal)
}

/// A term outside `𝔪^[q]`: all exponents below `q`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrobeniusWitness {
    /// The element of the colon ideal (times the twist) carrying the term.
    pub element: Polynomial,
    pub monomial: Monomial,
    pub coefficient: Coeff,
}

fn witness_in(elements: &[Polynomial], q: u32) -> Option<FrobeniusWitness> {
    for g in elements {
        if let Some((m, c)) = g.terms().iter().find(|(m, _)| m.exponents().iter().all(|&a| a < q)) {
            return Some(FrobeniusWitness { element: g.clone(), monomial: m.clone(), coefficient: c.clone() });
        }
    }
    None
}

#[derive(Debug, Clone)]
pub struct TwistedReport {
    pub iterate: u32,
    pub splits: bool,
    pub witness: Option<FrobeniusWitness>,
}

fn ensure_prime_field(ideal: &Ideal) -> Result<()> {
    if ideal.ring().characteristic() == 0 {
        return Err(Error::CharacteristicZero);
    }
    if ideal.is_unit()? {
        return Err(Error::InvalidArgument(format!("{ideal} is the unit ideal")));
    }
    Ok(())
}

/// Whether `·s^{1/q} : S → S^{1/q}` splits at the origin, `q = p^e`:
/// `s·(I^[q] : I) ⊄ 𝔪^[q]`.
pub fn twisted_split_check(ideal: &Ideal, s: &Polynomial, e: u32) -> Result<TwistedReport> {
    ensure_prime_field(ideal)?;
    s.ensure_ring(ideal.ring())?;
    if ideal.contains(s)? {
        return Err(Error::ElementInIdeal(format!("{s} lies in {ideal}")));
    }
    let q = frobenius_exponent(ideal.ring(), e)?;
    let colon = fedder_colon(ideal, q)?;
    let twisted: Vec<Polynomial> = colon.gens().iter().map(|g| s.mul(g)).collect();
    let witness = witness_in(&twisted, q);
    Ok(TwistedReport { iterate: e, splits: witness.is_some(), witness })
}

/// Fedder's criterion: `S = R/I` is F-pure at the origin iff `(I^[p] : I) ⊄ 𝔪^[p]`.
pub fn fedder_f_pure(ideal: &Ideal) -> Result<TwistedReport> {
    twisted_split_check(ideal, &Polynomial::one(ideal.ring()), 1)
}

#[derive(Debug, Clone)]
pub struct TwistedSearch {
    /// Reports for `e = 1, 2, …` up to the first splitting iterate or `e_max`.
    pub attempts: Vec<TwistedReport>,
}

impl TwistedSearch {
    pub fn smallest(&self) -> Option<u32> {
        self.attempts.iter().find(|r| r.splits).map(|r| r.iterate)
    }
}

pub const DEFAULT_MAX_ITERATE: u32 = 3;

pub fn twisted_split_search(ideal: &Ideal, s: &Polynomial, e_max: u32) -> Result<TwistedSearch> {
    let mut attempts = Vec::new();
    for e in 1..=e_max {
        let r = twisted_split_check(ideal, s, e)?;
        let done = r.splits;
        attempts.push(r);
        if done {
            break;
        }
    }
    Ok(TwistedSearch { attempts })
}

/// `S = R/I` over a prime field.
#[derive(Debug, Clone)]
pub struct FrobeniusContext {
    pub ideal: Ideal,
    pub max_iterate: u32,
}

impl FrobeniusContext {
    pub fn new(ideal: &Ideal) -> Result<FrobeniusContext> {
        if ideal.ring().characteristic() == 0 {
            return Err(Error::CharacteristicZero);
        }
        Ok(FrobeniusContext { ideal: ideal.clone(), max_iterate: DEFAULT_MAX_ITERATE })
    }

    pub fn base(&self) -> Result<BaseRef> {
        BaseRing::quotient(self.ideal.ring(), &self.ideal, false)
    }
}

/// `S^{1/q}` presented as an `S`-module.
#[derive(Debug, Clone)]
pub struct Pushforward {
    pub iterate: u32,
    /// Generator `k` is `x^{a/q}` with `a = exponents[k]`, each entry below `q`.
    pub exponents: Vec<Vec<u32>>,
    pub module: FPModule,
}

fn residue_box(nvars: usize, q: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..nvars {
        out = out.into_iter().flat_map(|v: Vec<u32>| (0..q).map(move |a| {
            let mut w = v.clone();
            w.push(a);
            w
        })).collect();
    }
    out
}

/// Generators `x^a`, `0 ≤ a_i < q`; one relation for each generator `g` of
/// `I` and each `x^b` in the box, namely `g·x^b` rewritten through
/// `x^c = (x^{⌊c/q⌋})^q · x^{c mod q}`.
pub fn frobenius_pushforward(ctx: &FrobeniusContext, e: u32) -> Result<Pushforward> {
    let ring = ctx.ideal.ring();
    let q = frobenius_exponent(ring, e)?;
    let n = ring.nvars();
    let size = (q as u64).checked_pow(n as u32).filter(|&s| s <= 1 << 16).ok_or_else(|| {
        Error::ResourceCap(format!("Frobenius pushforward would have {q}^{n} generators"))
    })? as usize;
    let exponents = residue_box(n, q);
    debug_assert_eq!(exponents.len(), size);
    let index = |a: &[u32]| a.iter().fold(0usize, |acc, &x| acc * q as usize + x as usize);
    let base = ctx.base()?;
    let mut cols = Vec::new();
    for g in ctx.ideal.gens() {
        for b in &exponents {
            let shifted = g.mul_term(&Monomial::from_exponents(b), &ring.field().one());
            let mut parts: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); size];
            for (m, c) in shifted.terms() {
                let (quo, rem): (Vec<u32>, Vec<u32>) = m.exponents().iter().map(|&x| (x / q, x % q)).unzip();
                parts[index(&rem)].push((Monomial::from_exponents(&quo), c.clone()));
            }
            let col: Vec<Polynomial> = parts.into_iter().map(|t| base.reduce(&Polynomial::from_terms(ring, t))).collect();
            if col.iter().any(|p| !p.is_zero()) {
                cols.push(col);
            }
        }
    }
    let module = FPModule::new(ModuleMap::from_columns(&base, size, cols)?);
    Ok(Pushforward { iterate: e, exponents, module })
}

#[derive(Debug, Clone)]
pub struct KunzReport {
    pub regular: bool,
    /// Exponent vectors (over `p`) of a free basis when regular.
    pub basis: Vec<Vec<u32>>,
    /// A nonzero relation of the pruned presentation otherwise.
    pub obstruction: Option<Vec<Polynomial>>,
    pub minimal_generators: usize,
}

/// Regularity at the origin as freeness of `S^{1/p}`: after pruning unit
/// relations the presentation must vanish.
pub fn kunz_check(ctx: &FrobeniusContext) -> Result<KunzReport> {
    let push = frobenius_pushforward(ctx, 1)?;
    let pruned = prune(&push.module, &[])?;
    let rel = pruned.module.relations().reduced().without_zero_columns();
    let basis: Vec<Vec<u32>> = pruned.kept.iter().map(|&k| push.exponents[k].clone()).collect();
    let regular = rel.cols() == 0;
    Ok(KunzReport {
        regular,
        minimal_generators: basis.len(),
        basis: if regular { basis } else { Vec::new() },
        obstruction: rel.columns().first().cloned(),
    })
}

/// Jacobian criterion for a hypersurface through the origin: singular there
/// iff `f ∈ 𝔪²`.
pub fn hypersurface_singular_at_origin(f: &Polynomial) -> bool {
    f.terms().iter().all(|(m, _)| m.degree() >= 2)
}
