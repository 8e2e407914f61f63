//! Symbolic powers of prime ideals by saturation, and the uniform containment
//! `𝔭^(dn) ⊆ 𝔭^n` in a polynomial ring of dimension `d`.

use crate::error::{Error, Result};
use crate::groebner::{codimension, quotient_by_element, radical_membership, saturation, Ideal};
use crate::module::{minors, BaseRing, ModuleMap};
use crate::poly::Polynomial;

#[derive(Debug, Clone)]
pub enum Separator {
    Given(Polynomial),
    /// Minors of the Jacobian matrix of size `codim 𝔭` that lie outside `𝔭`,
    /// tried in lexicographic order.
    Auto,
}

/// Evidence that the saturation is the `𝔭`-primary component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryCertificate {
    pub contains_ordinary_power: bool,
    /// Every generator of the result lies in `rad(𝔭) = 𝔭`.
    pub radical_inside_prime: bool,
    /// Every generator of `𝔭` lies in the radical of the result.
    pub prime_inside_radical: bool,
    /// `(result : g) = result` for the separator and the first variable outside `𝔭`.
    pub probes: Vec<(Polynomial, bool)>,
}

impl PrimaryCertificate {
    pub fn passes(&self) -> bool {
        self.contains_ordinary_power
            && self.radical_inside_prime
            && self.prime_inside_radical
            && self.probes.iter().all(|(_, ok)| *ok)
    }
}

#[derive(Debug, Clone)]
pub struct SymbolicPowerResult {
    pub prime: Ideal,
    pub exponent: u32,
    pub ideal: Ideal,
    pub separator: Polynomial,
    pub certificate: PrimaryCertificate,
}

/// Size-`codim 𝔭` minors of the Jacobian matrix outside `𝔭`, deduplicated, in order.
pub fn jacobian_candidates(prime: &Ideal) -> Result<Vec<Polynomial>> {
    let ring = prime.ring();
    let c = codimension(prime)?;
    if c <= 0 || prime.gens().is_empty() {
        return Ok(Vec::new());
    }
    let rows: Vec<Vec<Polynomial>> =
        prime.gens().iter().map(|g| (0..ring.nvars()).map(|i| g.derivative(i)).collect()).collect();
    let jac = ModuleMap::from_rows(&BaseRing::polynomial(ring), rows)?;
    let c = (c as usize).min(jac.rows()).min(jac.cols());
    let mut out: Vec<Polynomial> = Vec::new();
    for m in minors(&jac, c)? {
        if !m.is_zero() && !out.contains(&m) && !prime.contains(&m)? {
            out.push(m);
        }
    }
    Ok(out)
}

fn certify(prime: &Ideal, power: &Ideal, result: &Ideal, f: &Polynomial) -> Result<PrimaryCertificate> {
    let ring = prime.ring();
    let contains_ordinary_power = result.contains_ideal(power)?;
    let mut radical_inside_prime = true;
    for g in result.gens() {
        if !radical_membership(g, prime)? {
            radical_inside_prime = false;
            break;
        }
    }
    let mut prime_inside_radical = true;
    for g in prime.gens() {
        if !radical_membership(g, result)? {
            prime_inside_radical = false;
            break;
        }
    }
    let mut probe_elems = vec![f.clone()];
    for i in 0..ring.nvars() {
        let v = Polynomial::variable(ring, i);
        if !prime.contains(&v)? {
            if v != *f {
                probe_elems.push(v);
            }
            break;
        }
    }
    let mut probes = Vec::new();
    for g in probe_elems {
        let ok = quotient_by_element(result, &g)?.same_ideal(result)?;
        probes.push((g, ok));
    }
    Ok(PrimaryCertificate { contains_ordinary_power, radical_inside_prime, prime_inside_radical, probes })
}

/// `𝔭^(n)` as `(𝔭^n : f^∞)`, certified a posteriori.
pub fn symbolic_power(prime: &Ideal, n: u32, separator: &Separator) -> Result<SymbolicPowerResult> {
    if n == 0 {
        return Err(Error::InvalidArgument("symbolic power exponent must be at least 1".into()));
    }
    if prime.is_unit()? || prime.is_zero() {
        return Err(Error::InvalidArgument(format!("{prime} is not a proper nonzero ideal")));
    }
    let power = prime.power(n)?;
    let candidates = match separator {
        Separator::Given(f) => {
            f.ensure_ring(prime.ring())?;
            if prime.contains(f)? {
                return Err(Error::ElementInIdeal(format!("separating element {f} lies in {prime}")));
            }
            vec![f.clone()]
        }
        Separator::Auto => jacobian_candidates(prime)?,
    };
    let mut last = None;
    for f in candidates {
        let result = saturation(&power, &f)?;
        let certificate = certify(prime, &power, &result, &f)?;
        if certificate.passes() {
            return Ok(SymbolicPowerResult { prime: prime.clone(), exponent: n, ideal: result, separator: f, certificate });
        }
        last = Some(f);
    }
    Err(Error::SeparatingElementInsufficient(match last {
        Some(f) => format!("saturating {prime}^{n} by {f} is not certified primary"),
        None => format!("no Jacobian minor of {prime} lies outside it"),
    }))
}

#[derive(Debug, Clone)]
pub struct ContainmentReport {
    pub dimension: usize,
    pub exponent: u32,
    pub symbolic: SymbolicPowerResult,
    /// Generators of `𝔭^(dn)` outside `𝔭^n`; empty when the containment holds.
    pub outside: Vec<Polynomial>,
}

impl ContainmentReport {
    pub fn holds(&self) -> bool {
        self.outside.is_empty()
    }
}

/// Checks `𝔭^(dn) ⊆ 𝔭^n` with `d` the number of variables. A failure
/// contradicts a theorem and is reported as an internal error.
pub fn containment_check(prime: &Ideal, n: u32, separator: &Separator) -> Result<ContainmentReport> {
    let d = prime.ring().nvars();
    let symbolic = symbolic_power(prime, d as u32 * n, separator)?;
    let power = prime.power(n)?;
    let mut outside = Vec::new();
    for g in symbolic.ideal.gens() {
        if !power.contains(g)? {
            outside.push(g.clone());
        }
    }
    let report = ContainmentReport { dimension: d, exponent: n, symbolic, outside };
    if !report.holds() {
        return Err(Error::CrossCheck(format!(
            "symbolic power {}^({}) is not inside {}^{n}: {} escapes",
            prime,
            d as u32 * n,
            prime,
            report.outside[0]
        )));
    }
    Ok(report)
}
