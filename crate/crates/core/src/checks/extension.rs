//! Finite extensions `R ⊂ S = R[y_1..y_m]/J`, their presentations as
//! `R`-modules, and the splitting checks.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::groebner::ideal::{shift_down, shift_up};
use crate::groebner::{FreeSpace, GroebnerBasis, Ideal, ModuleOrder, VectorBasis};
use crate::module::fp::minimal_generators;
use crate::module::{hom_module, lift, prune, BaseRef, FPModule, ModuleMap};
use crate::poly::{parse_polynomial, Monomial, MonomialOrder, Polynomial, Ring, RingRef};

#[derive(Debug, Clone)]
pub struct FiniteExtension {
    base: BaseRef,
    /// `k[y_1..y_m, x_1..x_d]` under the `y`-block elimination order.
    ring: RingRef,
    adjoined: usize,
    relations: Vec<Polynomial>,
}

impl FiniteExtension {
    /// Ring holding the adjoined variables in front of the base variables.
    pub fn ambient_ring(base: &BaseRef, adjoined: &[String]) -> Result<RingRef> {
        let r = base.ring();
        let mut names = adjoined.to_vec();
        names.extend(r.vars().iter().cloned());
        Ok(Ring::from_names(r.field(), names, MonomialOrder::Elimination(adjoined.len()))?.with_limits(r.limits().clone()))
    }

    pub fn new(base: &BaseRef, adjoined: &[&str], relations: &[&str]) -> Result<FiniteExtension> {
        let names: Vec<String> = adjoined.iter().map(|s| s.to_string()).collect();
        let ring = FiniteExtension::ambient_ring(base, &names)?;
        let rels = relations.iter().map(|s| parse_polynomial(s, &ring)).collect::<Result<Vec<_>>>()?;
        FiniteExtension::from_polynomials(base, &ring, rels)
    }

    /// `ring` must come from [`FiniteExtension::ambient_ring`].
    pub fn from_polynomials(base: &BaseRef, ring: &RingRef, relations: Vec<Polynomial>) -> Result<FiniteExtension> {
        let d = base.ring().nvars();
        if ring.nvars() < d || ring.vars()[ring.nvars() - d..] != *base.ring().vars() {
            return Err(Error::RingMismatch(format!("{ring} does not extend {}", base.ring())));
        }
        for p in &relations {
            p.ensure_ring(ring)?;
        }
        Ok(FiniteExtension { base: base.clone(), ring: ring.clone(), adjoined: ring.nvars() - d, relations })
    }

    /// `S = R`, with no adjoined variables.
    pub fn trivial(base: &BaseRef) -> Result<FiniteExtension> {
        let ring = FiniteExtension::ambient_ring(base, &[])?;
        FiniteExtension::from_polynomials(base, &ring, Vec::new())
    }

    pub fn base(&self) -> &BaseRef {
        &self.base
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn adjoined(&self) -> usize {
        self.adjoined
    }

    pub fn adjoined_names(&self) -> &[String] {
        &self.ring.vars()[..self.adjoined]
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    /// `R → k[y, x]`.
    pub fn embed(&self, p: &Polynomial) -> Polynomial {
        shift_up(p, &self.ring, self.adjoined)
    }
}

/// `S` as an `R`-module: generator `k` is the standard monomial `basis[k]`,
/// and generator 0 is `1_S`.
#[derive(Debug, Clone)]
pub struct ExtensionModule {
    pub extension: FiniteExtension,
    gb: GroebnerBasis,
    pub basis: Vec<Monomial>,
    pub module: FPModule,
}

fn y_free(m: &Monomial, k: usize) -> bool {
    m.exponents()[..k].iter().all(|&e| e == 0)
}

fn x_free(m: &Monomial, k: usize) -> bool {
    m.exponents()[k..].iter().all(|&e| e == 0)
}

pub fn as_module(ext: &FiniteExtension) -> Result<ExtensionModule> {
    let ring = &ext.ring;
    let m = ext.adjoined;
    let base = &ext.base;
    let mut gens = ext.relations.clone();
    gens.extend(base.quotient_gens().iter().map(|q| ext.embed(q)));
    let gb = GroebnerBasis::compute(ring, &gens)?;

    let pure: Vec<Monomial> = gb.leading_monomials().into_iter().filter(|lm| x_free(lm, m)).collect();
    for j in 0..m {
        if !pure.iter().any(|lm| lm.pure_power_of() == Some(j)) {
            return Err(Error::NotFinite(ring.vars()[j].clone()));
        }
    }

    // faithfulness: J ∩ R must already vanish in R
    for g in gb.polys() {
        if g.terms().iter().all(|(mono, _)| y_free(mono, m)) {
            let down = shift_down(g, base.ring(), m);
            if !base.is_zero(&down) {
                return Err(Error::InvalidArgument(format!("extension is not faithful: {down} vanishes in S")));
            }
        }
    }

    let basis = standard_monomials(ring.nvars(), m, &pure);
    let mut basis: Vec<Monomial> = basis.into_iter().collect();
    basis.sort_by(|a, b| ring.order().compare(a, b));

    let n = basis.len();
    let space = FreeSpace::with_order(ring, 1 + n, ModuleOrder::HeadBlock { head: 1, block: m });
    let zero = Polynomial::zero(ring);
    let mut vecs = Vec::new();
    for g in gb.polys() {
        let mut col = vec![zero.clone(); 1 + n];
        col[0] = g.clone();
        vecs.push(space.from_column(&col));
    }
    for (k, b) in basis.iter().enumerate() {
        let mut col = vec![zero.clone(); 1 + n];
        col[0] = Polynomial::term(ring, b.clone(), ring.field().one());
        col[1 + k] = Polynomial::one(ring);
        vecs.push(space.from_column(&col));
    }
    let vb = VectorBasis::compute(&space, &vecs)?;
    let mut rels = Vec::new();
    for e in &vb.elements {
        let (pos, lm, _) = e.lead().unwrap();
        if *pos >= 1 && y_free(lm, m) {
            let col: Vec<Polynomial> =
                space.slice_column(e, 1..1 + n).iter().map(|p| base.reduce(&shift_down(p, base.ring(), m))).collect();
            if !col.iter().all(|p| p.is_zero()) {
                rels.push(col);
            }
        }
    }
    let keep = minimal_generators(base, n, &rels, &[], &vec![0; n])?;
    let rels: Vec<Vec<Polynomial>> = keep.into_iter().map(|k| rels[k].clone()).collect();
    let module = FPModule::new(ModuleMap::from_columns(base, n, rels)?);
    Ok(ExtensionModule { extension: ext.clone(), gb, basis, module })
}

/// `y`-monomials outside the ideal of the `x`-free leading monomials.
fn standard_monomials(nvars: usize, m: usize, leads: &[Monomial]) -> HashSet<Monomial> {
    let mut seen = HashSet::new();
    let mut stack = vec![Monomial::one(nvars)];
    while let Some(mono) = stack.pop() {
        if leads.iter().any(|l| l.divides(&mono)) || !seen.insert(mono.clone()) {
            continue;
        }
        for j in 0..m {
            stack.push(mono.mul(&Monomial::variable(nvars, j)));
        }
    }
    seen
}

impl ExtensionModule {
    pub fn base(&self) -> &BaseRef {
        &self.extension.base
    }

    /// Basis elements printed in the extension ring.
    pub fn basis_labels(&self) -> Vec<String> {
        let ring = &self.extension.ring;
        self.basis.iter().map(|b| Polynomial::term(ring, b.clone(), ring.field().one()).to_string()).collect()
    }

    /// Coordinates over `R` of an element of `k[y, x]` in the generators.
    pub fn coordinates(&self, f: &Polynomial) -> Result<Vec<Polynomial>> {
        let m = self.extension.adjoined;
        let ring = &self.extension.ring;
        let base = self.base();
        let nf = self.gb.normal_form(f);
        let nvars = ring.nvars();
        let mut parts: Vec<Vec<(Monomial, crate::poly::Coeff)>> = vec![Vec::new(); self.basis.len()];
        for (mono, c) in nf.terms() {
            let mut yexp = mono.exponents().to_vec();
            for e in yexp[m..].iter_mut() {
                *e = 0;
            }
            let ypart = Monomial::from_exponents(&yexp);
            let k = self
                .basis
                .iter()
                .position(|b| *b == ypart)
                .ok_or_else(|| Error::CrossCheck(format!("normal form leaves the standard basis in {nf}")))?;
            parts[k].push((Monomial::from_exponents(&mono.exponents()[m..nvars]), c.clone()));
        }
        Ok(parts.into_iter().map(|t| base.reduce(&Polynomial::from_terms(base.ring(), t))).collect())
    }

    /// The element `Σ c_k basis[k]` of `k[y, x]`.
    pub fn element(&self, coeffs: &[Polynomial]) -> Polynomial {
        let ring = &self.extension.ring;
        let mut acc = Polynomial::zero(ring);
        for (b, c) in self.basis.iter().zip(coeffs) {
            acc = acc.add(&self.extension.embed(c).mul_term(b, &ring.field().one()));
        }
        acc
    }

    /// Matrix of multiplication by `f` on the generators.
    pub fn multiplication(&self, f: &Polynomial) -> Result<ModuleMap> {
        let ring = &self.extension.ring;
        let cols = self
            .basis
            .iter()
            .map(|b| self.coordinates(&f.mul_term(b, &ring.field().one())))
            .collect::<Result<Vec<_>>>()?;
        ModuleMap::from_columns(self.base(), self.basis.len(), cols)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitVerdict {
    Splits,
    /// Split after localizing at the homogeneous maximal ideal only.
    SplitsLocally,
    DoesNotSplit,
}

impl SplitVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            SplitVerdict::Splits => "splits",
            SplitVerdict::SplitsLocally => "splits-locally-at-m",
            SplitVerdict::DoesNotSplit => "does-not-split",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SplitReport {
    pub verdict: SplitVerdict,
    /// `λ` on the module generators. For `Splits`, `λ(1) = 1`; for
    /// `SplitsLocally`, `λ(1)` is a unit at the origin.
    pub witness: Option<Vec<Polynomial>>,
    /// `{λ(1) : λ ∈ Hom_R(S, R)}`, without the quotient ideal.
    pub evaluation_ideal: Ideal,
}

/// Whether `λ` is `R`-linear on the presentation of `S`.
pub fn is_module_map(em: &ExtensionModule, lambda: &[Polynomial]) -> bool {
    let base = em.base();
    lambda.len() == em.module.gens()
        && em.module.relations().columns().iter().all(|col| {
            let v = col.iter().zip(lambda).fold(Polynomial::zero(base.ring()), |acc, (a, l)| acc.add(&a.mul(l)));
            base.is_zero(&v)
        })
}

fn maximal_plus_quotient(base: &BaseRef) -> Result<Ideal> {
    let ring = base.ring();
    let mut gens: Vec<Polynomial> = (0..ring.nvars()).map(|i| Polynomial::variable(ring, i)).collect();
    gens.extend(base.quotient_gens().iter().cloned());
    Ideal::new(ring, gens)
}

/// Replays a split report against the stored presentation.
pub fn replay_split(em: &ExtensionModule, report: &SplitReport) -> Result<bool> {
    let base = em.base();
    let Some(lambda) = &report.witness else { return Ok(report.verdict == SplitVerdict::DoesNotSplit) };
    if !is_module_map(em, lambda) {
        return Ok(false);
    }
    let at_one = &lambda[0];
    Ok(match report.verdict {
        SplitVerdict::Splits => base.is_zero(&at_one.sub(&Polynomial::one(base.ring()))),
        SplitVerdict::SplitsLocally => !maximal_plus_quotient(base)?.contains(at_one)?,
        SplitVerdict::DoesNotSplit => false,
    })
}

/// Decides whether `R → S` has an `R`-linear retraction, by evaluating all of
/// `Hom_R(S, R)` at `1`.
pub fn split_check(em: &ExtensionModule) -> Result<SplitReport> {
    let base = em.base().clone();
    let ring = base.ring().clone();
    let hom = hom_module(&em.module, &FPModule::free(&base, 1))?;
    let values: Vec<Polynomial> = hom.maps.iter().map(|x| base.reduce(x.entry(0, 0))).collect();
    let evaluation_ideal = Ideal::new(&ring, values.clone())?;
    let combine = |c: &[Polynomial]| -> Vec<Polynomial> {
        (0..em.module.gens())
            .map(|k| {
                let v = hom.maps.iter().zip(c).fold(Polynomial::zero(&ring), |acc, (x, ch)| acc.add(&ch.mul(x.entry(0, k))));
                base.reduce(&v)
            })
            .collect()
    };
    let row = ModuleMap::from_columns(&base, 1, values.iter().map(|v| vec![v.clone()]).collect())?;
    let report = if let Some(c) = lift(&row, &[Polynomial::one(&ring)])? {
        SplitReport { verdict: SplitVerdict::Splits, witness: Some(combine(&c)), evaluation_ideal }
    } else {
        let mq = maximal_plus_quotient(&base)?;
        let mut local = None;
        for (h, v) in values.iter().enumerate() {
            if !mq.contains(v)? {
                let mut c = vec![Polynomial::zero(&ring); values.len()];
                c[h] = Polynomial::one(&ring);
                local = Some(combine(&c));
                break;
            }
        }
        match local {
            Some(w) => SplitReport { verdict: SplitVerdict::SplitsLocally, witness: Some(w), evaluation_ideal },
            None => SplitReport { verdict: SplitVerdict::DoesNotSplit, witness: None, evaluation_ideal },
        }
    };
    if !replay_split(em, &report)? {
        return Err(Error::CrossCheck("splitting witness fails its replay".into()));
    }
    if report.verdict == SplitVerdict::DoesNotSplit && base.is_polynomial() {
        return Err(Error::CrossCheck(format!(
            "a finite extension of the polynomial ring {ring} was found not to split"
        )));
    }
    Ok(report)
}

/// Splitting by the normalized trace `λ(s) = Tr(·s)/n` on a free extension of rank `n`.
pub fn trace_splitting(em: &ExtensionModule) -> Result<SplitReport> {
    let base = em.base().clone();
    let ring = base.ring().clone();
    let field = ring.field();
    let pruned = prune(&em.module, &[0])?;
    if !pruned.module.relations().is_zero() {
        return Err(Error::NotFree);
    }
    let n = pruned.kept.len();
    if field.integer_vanishes(n) {
        return Err(Error::TraceDegenerate(n));
    }
    let inv_n = field.inv(&field.from_i64(n as i64));
    let ext_ring = em.extension.ring.clone();
    let mut lambda = Vec::with_capacity(em.basis.len());
    for b in &em.basis {
        let elem = Polynomial::term(&ext_ring, b.clone(), ext_ring.field().one());
        let mut trace = Polynomial::zero(&ring);
        for (l, &k) in pruned.kept.iter().enumerate() {
            let coords = em.coordinates(&elem.mul_term(&em.basis[k], &ext_ring.field().one()))?;
            // coordinate of the product on free generator l
            for (old, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    trace = trace.add(&c.mul(&pruned.old_in_new[old][l]));
                }
            }
        }
        lambda.push(base.reduce(&trace.scale(&inv_n)));
    }
    let values: Vec<Polynomial> = vec![lambda[0].clone()];
    let report = SplitReport {
        verdict: SplitVerdict::Splits,
        witness: Some(lambda),
        evaluation_ideal: Ideal::new(&ring, values)?,
    };
    if !replay_split(em, &report)? {
        return Err(Error::CrossCheck("normalized trace is not a splitting".into()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::BaseRing;
    use crate::poly::Field;

    fn poly_base(field: Field, vars: &[&str]) -> BaseRef {
        BaseRing::polynomial(&Ring::new(field, vars, MonomialOrder::GrevLex).unwrap())
    }

    fn node_base() -> BaseRef {
        let r = Ring::new(Field::Rational, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        BaseRing::quotient(&r, &Ideal::from_strs(&r, &["x*y"]).unwrap(), false).unwrap()
    }

    #[test]
    fn trivial_extension_is_free_of_rank_one() {
        let b = poly_base(Field::Rational, &["x", "y"]);
        let em = as_module(&FiniteExtension::trivial(&b).unwrap()).unwrap();
        assert_eq!(em.module.gens(), 1);
        assert!(em.module.relations().is_zero());
        let rep = split_check(&em).unwrap();
        assert_eq!(rep.verdict, SplitVerdict::Splits);
        assert_eq!(rep.witness.unwrap()[0].to_string(), "1");
        let tr = trace_splitting(&em).unwrap();
        assert_eq!(tr.witness.unwrap()[0].to_string(), "1");
    }

    #[test]
    fn square_root_extension() {
        let b = poly_base(Field::Rational, &["x"]);
        let em = as_module(&FiniteExtension::new(&b, &["y"], &["y^2 - x"]).unwrap()).unwrap();
        assert_eq!(em.basis_labels(), vec!["1", "y"]);
        assert!(em.module.relations().is_zero());
        assert_eq!(split_check(&em).unwrap().verdict, SplitVerdict::Splits);
        let tr = trace_splitting(&em).unwrap();
        let w: Vec<String> = tr.witness.unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(w, vec!["1", "0"]);
        // multiplication by y has matrix [[0, x], [1, 0]]
        let y = parse_polynomial("y", em.extension.ring()).unwrap();
        let mult = em.multiplication(&y).unwrap();
        assert_eq!(mult.to_string(), "[[0, x], [1, 0]]");
    }

    #[test]
    fn trace_degenerates_in_characteristic_two() {
        let b = poly_base(Field::prime(2).unwrap(), &["x"]);
        let em = as_module(&FiniteExtension::new(&b, &["y"], &["y^2 - x"]).unwrap()).unwrap();
        assert_eq!(trace_splitting(&em).unwrap_err(), Error::TraceDegenerate(2));
        assert_eq!(split_check(&em).unwrap().verdict, SplitVerdict::Splits);
    }

    #[test]
    fn normalization_of_the_node_does_not_split() {
        let b = node_base();
        let ext = FiniteExtension::new(&b, &["e"], &["e^2 - e", "e*y", "e*x - x"]).unwrap();
        let em = as_module(&ext).unwrap();
        assert_eq!(em.basis_labels(), vec!["1", "e"]);
        let rep = split_check(&em).unwrap();
        assert_eq!(rep.verdict, SplitVerdict::DoesNotSplit);
        assert!(rep.witness.is_none());
        // oracle: λ(1) = a, λ(e) = c need y·c = 0 and x·(c − a) = 0 in R, forcing a ∈ (x, y)
        let m = maximal_plus_quotient(&b).unwrap();
        assert!(rep.evaluation_ideal.gens().iter().all(|g| m.contains(g).unwrap()));
        assert!(matches!(trace_splitting(&em), Err(Error::NotFree)));
    }

    #[test]
    fn non_free_extension_of_a_polynomial_ring_splits() {
        let b = poly_base(Field::Rational, &["x", "y"]);
        let em = as_module(&FiniteExtension::new(&b, &["u"], &["u^2", "x*u"]).unwrap()).unwrap();
        assert!(!em.module.relations().is_zero());
        let rep = split_check(&em).unwrap();
        assert_eq!(rep.verdict, SplitVerdict::Splits);
        assert!(replay_split(&em, &rep).unwrap());
        // a non-free extension over F_5 with two adjoined nilpotents
        let b5 = poly_base(Field::prime(5).unwrap(), &["x", "y"]);
        let em = as_module(&FiniteExtension::new(&b5, &["u", "v"], &["u^2", "v^2", "u*v", "x*u - y*v"]).unwrap()).unwrap();
        assert_eq!(split_check(&em).unwrap().verdict, SplitVerdict::Splits);
    }

    #[test]
    fn certificate_failures() {
        let b = poly_base(Field::Rational, &["x"]);
        let ext = FiniteExtension::new(&b, &["y"], &["x*y - 1"]).unwrap();
        assert_eq!(as_module(&ext).unwrap_err(), Error::NotFinite("y".into()));
        let ext = FiniteExtension::new(&b, &["y"], &["y", "x"]).unwrap();
        assert!(matches!(as_module(&ext), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn coordinates_round_trip() {
        let b = poly_base(Field::Rational, &["x", "y"]);
        let ext = FiniteExtension::new(&b, &["u", "v"], &["u^2 - x", "v^3 - y*u"]).unwrap();
        let em = as_module(&ext).unwrap();
        assert_eq!(em.basis.len(), 6);
        let f = parse_polynomial("u^3*v^4 + x*v - 2", ext.ring()).unwrap();
        let c = em.coordinates(&f).unwrap();
        let back = em.element(&c);
        let j = Ideal::new(ext.ring(), ext.relations().to_vec()).unwrap();
        assert!(j.contains(&back.sub(&f)).unwrap());
    }
}
