//! Ideals of polynomial rings and the ideal-theoretic toolkit built on
//! reduced Gröbner bases.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::groebner::buchberger::VectorBasis;
use crate::groebner::vector::{FreeSpace, Vector};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring, RingRef};

/// Reduced Gröbner basis of an ideal: monic, sorted ascending by leading term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingRef,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn compute(ring: &RingRef, gens: &[Polynomial]) -> Result<GroebnerBasis> {
        let space = FreeSpace::new(ring, 1);
        let vecs: Vec<Vector> = gens.iter().map(to_vector).collect();
        let vb = VectorBasis::compute(&space, &vecs)?;
        Ok(GroebnerBasis { ring: ring.clone(), polys: vb.elements.iter().map(|v| from_vector(ring, v)).collect() })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(|p| p.is_constant())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.leading_monomial().unwrap().clone()).collect()
    }

    /// Full normal form; canonical because the basis is reduced.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let space = FreeSpace::new(&self.ring, 1);
        let vecs: Vec<Vector> = self.polys.iter().map(to_vector).collect();
        let refs: Vec<&Vector> = vecs.iter().collect();
        from_vector(&self.ring, &crate::groebner::buchberger::reduce_full(&space, &to_vector(f), &refs))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

pub(crate) fn to_vector(p: &Polynomial) -> Vector {
    Vector { terms: p.terms().iter().map(|(m, c)| (0, m.clone(), c.clone())).collect() }
}

pub(crate) fn from_vector(ring: &RingRef, v: &Vector) -> Polynomial {
    Polynomial::from_terms(ring, v.terms.iter().map(|(_, m, c)| (m.clone(), c.clone())).collect())
}

/// Ideal given by generators, with a lazily computed reduced Gröbner basis.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl PartialEq for Ideal {
    /// Equality of generator lists; use [`Ideal::same_ideal`] for equality of ideals.
    fn eq(&self, other: &Self) -> bool {
        Ring::same(&self.ring, &other.ring) && self.gens == other.gens
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            g.ensure_ring(ring)?;
        }
        Ok(Ideal { ring: ring.clone(), gens: gens.into_iter().filter(|g| !g.is_zero()).collect(), gb: OnceLock::new() })
    }

    pub fn zero(ring: &RingRef) -> Ideal {
        Ideal { ring: ring.clone(), gens: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(ring: &RingRef) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    /// The homogeneous maximal ideal generated by all variables.
    pub fn maximal(ring: &RingRef) -> Ideal {
        Ideal::new(ring, (0..ring.nvars()).map(|i| Polynomial::variable(ring, i)).collect()).unwrap()
    }

    pub fn from_strs(ring: &RingRef, gens: &[&str]) -> Result<Ideal> {
        let polys = gens.iter().map(|s| crate::poly::parse_polynomial(s, ring)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn groebner_basis(&self) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = GroebnerBasis::compute(&self.ring, &self.gens)?;
        let _ = self.gb.set(gb);
        Ok(self.gb.get().unwrap())
    }

    /// The ideal generated by its own reduced Gröbner basis.
    pub fn reduced(&self) -> Result<Ideal> {
        let gb = self.groebner_basis()?.clone();
        let ideal = Ideal { ring: self.ring.clone(), gens: gb.polys.clone(), gb: OnceLock::new() };
        let _ = ideal.gb.set(gb);
        Ok(ideal)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.is_unit())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        f.ensure_ring(&self.ring)?;
        if f.is_zero() {
            return Ok(true);
        }
        Ok(self.groebner_basis()?.contains(f))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        f.ensure_ring(&self.ring)?;
        Ok(self.groebner_basis()?.normal_form(f))
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals, by comparing reduced Gröbner bases.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        ensure_same(self, other)?;
        Ok(self.groebner_basis()?.polys == other.groebner_basis()?.polys)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        ensure_same(self, other)?;
        Ideal::new(&self.ring, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        ensure_same(self, other)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I^n`, generated by products of generators; `I^0 = (1)`.
    pub fn power(&self, n: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..n {
            acc = acc.product(self)?.reduced()?;
        }
        Ok(acc)
    }

    /// Same generators in another ring with the same variables (e.g. a different order).
    pub fn reorder(&self, target: &RingRef) -> Result<Ideal> {
        Ideal::new(target, self.gens.iter().map(|g| g.reorder(target)).collect())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

fn ensure_same(a: &Ideal, b: &Ideal) -> Result<()> {
    if Ring::same(&a.ring, &b.ring) {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!("{} vs {}", a.ring, b.ring)))
    }
}

pub fn groebner_basis(ideal: &Ideal) -> Result<GroebnerBasis> {
    ideal.groebner_basis().cloned()
}

pub fn membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

/// Name not used by any variable of `ring`.
pub(crate) fn fresh_name(ring: &Ring, stem: &str) -> String {
    let mut k = 0;
    loop {
        let name = format!("_{stem}{k}");
        if ring.var_index(&name).is_none() {
            return name;
        }
        k += 1;
    }
}

/// Ring `k[t, x]` with one fresh variable in front, eliminating `t`.
pub(crate) fn with_fresh_leading(ring: &RingRef, stem: &str) -> RingRef {
    let name = fresh_name(ring, stem);
    ring.with_leading_vars(&[name.as_str()], MonomialOrder::Elimination(1))
}

/// Embeds `p` into a ring with `k` fresh leading variables.
pub(crate) fn shift_up(p: &Polynomial, target: &RingRef, k: usize) -> Polynomial {
    let map: Vec<usize> = (0..p.ring().nvars()).map(|i| i + k).collect();
    p.map_into(target, &map)
}

/// Drops the first `k` variables of `p`, which must not occur.
pub(crate) fn shift_down(p: &Polynomial, target: &RingRef, k: usize) -> Polynomial {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            debug_assert!(m.exponents()[..k].iter().all(|&e| e == 0));
            (Monomial::from_exponents(&m.exponents()[k..]), c.clone())
        })
        .collect();
    Polynomial::from_terms(target, terms)
}

/// `I ∩ k[x_j : j ∉ vars]`, returned as an ideal of the original ring.
pub fn eliminate(ideal: &Ideal, vars: &[usize]) -> Result<Ideal> {
    let ring = &ideal.ring;
    let n = ring.nvars();
    for &v in vars {
        if v >= n {
            return Err(Error::IndexOutOfRange { index: v, valid: format!("0..{n}") });
        }
    }
    let mut perm: Vec<usize> = vars.to_vec();
    perm.sort_unstable();
    perm.dedup();
    let k = perm.len();
    perm.extend((0..n).filter(|i| !vars.contains(i)));
    // position of original variable i in the new ring
    let mut place = vec![0; n];
    for (new, &old) in perm.iter().enumerate() {
        place[old] = new;
    }
    let names: Vec<String> = perm.iter().map(|&i| ring.vars()[i].clone()).collect();
    let big = Ring::from_names(ring.field(), names, MonomialOrder::Elimination(k))?.with_limits(ring.limits().clone());
    let gens: Vec<Polynomial> = ideal.gens.iter().map(|g| g.map_into(&big, &place)).collect();
    let gb = GroebnerBasis::compute(&big, &gens)?;
    let back: Vec<usize> = perm.clone();
    let kept = gb
        .polys
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0)))
        .map(|p| p.map_into(ring, &back))
        .collect();
    Ideal::new(ring, kept)
}

/// `I ∩ J` via elimination of `t` from `t·I + (1 − t)·J`.
pub fn intersection(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    ensure_same(a, b)?;
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(&a.ring));
    }
    let big = with_fresh_leading(&a.ring, "t");
    let t = Polynomial::variable(&big, 0);
    let one_minus_t = Polynomial::one(&big).sub(&t);
    let mut gens = Vec::new();
    for g in &a.gens {
        gens.push(t.mul(&shift_up(g, &big, 1)));
    }
    for g in &b.gens {
        gens.push(one_minus_t.mul(&shift_up(g, &big, 1)));
    }
    let gb = GroebnerBasis::compute(&big, &gens)?;
    let kept = gb
        .polys
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exponent(0) == 0))
        .map(|p| shift_down(p, &a.ring, 1))
        .collect();
    Ideal::new(&a.ring, kept)
}

/// `(I : f)` for a single nonzero element.
pub fn quotient_by_element(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    f.ensure_ring(&ideal.ring)?;
    if f.is_zero() {
        return Err(Error::InvalidArgument("quotient by the zero element".into()));
    }
    if f.is_constant() {
        return ideal.reduced();
    }
    let principal = Ideal::new(&ideal.ring, vec![f.clone()])?;
    let meet = intersection(ideal, &principal)?;
    let gens = meet
        .gens
        .iter()
        .map(|g| g.exact_div(f).ok_or_else(|| Error::CrossCheck(format!("{f} does not divide {g} in I ∩ (f)"))))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&ideal.ring, gens)?.reduced()
}

/// `(I : J) = ∩_g (I : g)` over the generators of `J`.
pub fn ideal_quotient(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    ensure_same(ideal, by)?;
    if by.is_zero() {
        return Err(Error::InvalidArgument("quotient by the zero ideal".into()));
    }
    let mut acc: Option<Ideal> = None;
    for g in &by.gens {
        let q = quotient_by_element(ideal, g)?;
        acc = Some(match acc {
            None => q,
            Some(a) => intersection(&a, &q)?.reduced()?,
        });
    }
    Ok(acc.unwrap())
}

/// `(I : f^∞)` by iterated quotients until two consecutive reduced bases agree.
pub fn saturation(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    let mut current = ideal.reduced()?;
    loop {
        ideal.ring.limits().check_cancel()?;
        let next = quotient_by_element(&current, f)?;
        if next.groebner_basis()?.polys == current.groebner_basis()?.polys {
            return Ok(current);
        }
        current = next;
    }
}

/// `(I : f^∞)` in one elimination: `(I + (1 − t·f)) ∩ k[x]`.
pub fn saturation_rabinowitsch(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    f.ensure_ring(&ideal.ring)?;
    if f.is_zero() {
        return Err(Error::InvalidArgument("saturation by the zero element".into()));
    }
    let big = with_fresh_leading(&ideal.ring, "t");
    let t = Polynomial::variable(&big, 0);
    let mut gens: Vec<Polynomial> = ideal.gens.iter().map(|g| shift_up(g, &big, 1)).collect();
    gens.push(Polynomial::one(&big).sub(&t.mul(&shift_up(f, &big, 1))));
    let gb = GroebnerBasis::compute(&big, &gens)?;
    let kept = gb
        .polys
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exponent(0) == 0))
        .map(|p| shift_down(p, &ideal.ring, 1))
        .collect();
    Ideal::new(&ideal.ring, kept)?.reduced()
}

/// Whether `f^N ∈ I` for some `N`: `1 ∈ I + (1 − t·f)`.
pub fn radical_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    f.ensure_ring(&ideal.ring)?;
    if f.is_zero() {
        return Ok(true);
    }
    let big = with_fresh_leading(&ideal.ring, "t");
    let t = Polynomial::variable(&big, 0);
    let mut gens: Vec<Polynomial> = ideal.gens.iter().map(|g| shift_up(g, &big, 1)).collect();
    gens.push(Polynomial::one(&big).sub(&t.mul(&shift_up(f, &big, 1))));
    Ok(GroebnerBasis::compute(&big, &gens)?.is_unit())
}

/// Krull dimension of `R/I` from the leading-term ideal: the largest set of
/// variables containing the support of no leading monomial. `-1` for the unit ideal.
pub fn dimension(ideal: &Ideal) -> Result<i64> {
    let gb = ideal.groebner_basis()?;
    if gb.is_unit() {
        return Ok(-1);
    }
    let supports: Vec<Vec<usize>> =
        gb.leading_monomials().iter().map(|m| (0..m.nvars()).filter(|&i| m.exponent(i) > 0).collect()).collect();
    let n = ideal.ring.nvars();
    let mut chosen = vec![false; n];
    let mut best = 0;
    independent_search(&supports, &mut chosen, 0, 0, &mut best);
    Ok(best as i64)
}

fn independent_search(supports: &[Vec<usize>], chosen: &mut [bool], next: usize, size: usize, best: &mut usize) {
    if size + (chosen.len() - next) <= *best {
        return;
    }
    if next == chosen.len() {
        *best = size;
        return;
    }
    chosen[next] = true;
    let ok = supports.iter().all(|s| !s.iter().all(|&i| chosen[i]));
    if ok {
        independent_search(supports, chosen, next + 1, size + 1, best);
    }
    chosen[next] = false;
    independent_search(supports, chosen, next + 1, size, best);
}

/// `nvars − dimension`; the unit ideal has codimension `nvars + 1`, standing
/// in for infinity so that every lower bound holds.
pub fn codimension(ideal: &Ideal) -> Result<i64> {
    let d = dimension(ideal)?;
    Ok(ideal.ring.nvars() as i64 - d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Field};
    use proptest::prelude::*;

    fn ring(vars: &[&str]) -> RingRef {
        Ring::new(Field::Rational, vars, MonomialOrder::GrevLex).unwrap()
    }

    fn ideal(r: &RingRef, gens: &[&str]) -> Ideal {
        Ideal::from_strs(r, gens).unwrap()
    }

    fn poly(r: &RingRef, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    fn same(a: &Ideal, b: &Ideal) -> bool {
        a.same_ideal(b).unwrap()
    }

    #[test]
    fn small_bases() {
        let r1 = ring(&["x"]);
        assert_eq!(groebner_basis(&ideal(&r1, &["x"])).unwrap().polys(), &[poly(&r1, "x")]);
        let r = ring(&["x", "y"]);
        assert_eq!(groebner_basis(&ideal(&r, &["x*y"])).unwrap().polys(), &[poly(&r, "x*y")]);
        assert!(groebner_basis(&Ideal::zero(&r)).unwrap().polys().is_empty());
    }

    #[test]
    fn twisted_cubic_elimination_vanishes_on_parametrization() {
        let r = ring(&["x", "y", "z"]);
        let i = ideal(&r, &["y - x^2", "z - x^3"]);
        let elim = eliminate(&i, &[0]).unwrap();
        assert!(!elim.is_zero());
        // oracle: substitute (t, t^2, t^3) into every eliminant
        let s = ring(&["t"]);
        let images = [poly(&s, "t"), poly(&s, "t^2"), poly(&s, "t^3")];
        for g in elim.gens() {
            assert!(g.terms().iter().all(|(m, _)| m.exponent(0) == 0));
            assert!(g.substitute(&images).is_zero(), "{g}");
            assert!(i.contains(g).unwrap());
        }
        assert!(elim.contains(&poly(&r, "z^2 - y^3")).unwrap());
    }

    #[test]
    fn membership_examples() {
        let r = ring(&["x", "y"]);
        assert!(membership(&Polynomial::zero(&r), &ideal(&r, &["x*y"])).unwrap());
        assert!(!membership(&poly(&r, "x"), &ideal(&r, &["x*y"])).unwrap());
        assert!(membership(&poly(&r, "x^2 + x*y"), &ideal(&r, &["x"])).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2", "x*y"]);
        assert!(same(&ideal_quotient(&i, &Ideal::unit(&r)).unwrap(), &i));
        let q = ideal_quotient(&i, &ideal(&r, &["x"])).unwrap();
        assert!(same(&q, &ideal(&r, &["x", "y"])));
        for f in q.gens() {
            assert!(i.contains(&f.mul(&poly(&r, "x"))).unwrap());
        }
        assert!(same(&ideal_quotient(&ideal(&r, &["x*y"]), &ideal(&r, &["x"])).unwrap(), &ideal(&r, &["y"])));
        assert!(ideal_quotient(&i, &Ideal::zero(&r)).is_err());
    }

    #[test]
    fn saturation_examples() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2", "x*y"]);
        assert!(same(&saturation(&i, &poly(&r, "1")).unwrap(), &i));
        assert!(saturation(&i, &poly(&r, "x")).unwrap().is_unit().unwrap());
        let xy = ideal(&r, &["x*y"]);
        let s = saturation(&xy, &poly(&r, "x")).unwrap();
        assert!(same(&s, &ideal(&r, &["y"])));
        assert!(same(&saturation_rabinowitsch(&xy, &poly(&r, "x")).unwrap(), &s));
        assert!(same(&saturation(&s, &poly(&r, "x")).unwrap(), &s));
    }

    #[test]
    fn intersection_examples() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2", "y - x"]);
        assert!(same(&intersection(&i, &i).unwrap(), &i));
        assert!(same(&intersection(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap(), &ideal(&r, &["x*y"])));
        let r4 = ring(&["x", "y", "z", "w"]);
        let a = ideal(&r4, &["x", "y"]);
        let b = ideal(&r4, &["z", "w"]);
        let m = intersection(&a, &b).unwrap();
        let expected = ideal(&r4, &["x*z", "x*w", "y*z", "y*w"]);
        assert!(m.contains_ideal(&expected).unwrap() && expected.contains_ideal(&m).unwrap());
    }

    #[test]
    fn dimension_examples() {
        let r = ring(&["x", "y"]);
        assert_eq!(dimension(&Ideal::zero(&r)).unwrap(), 2);
        assert_eq!(dimension(&ideal(&r, &["x*y"])).unwrap(), 1);
        assert_eq!(dimension(&Ideal::unit(&r)).unwrap(), -1);
        let r3 = ring(&["x", "y", "z"]);
        assert_eq!(codimension(&ideal(&r3, &["x", "y"])).unwrap(), 2);
    }

    #[test]
    fn radical_examples() {
        let r = ring(&["x", "y"]);
        assert!(radical_membership(&poly(&r, "x"), &ideal(&r, &["x^3"])).unwrap());
        assert!(!radical_membership(&poly(&r, "y"), &ideal(&r, &["x^3"])).unwrap());
        let i = ideal(&r, &["x^2", "y^2"]);
        assert!(radical_membership(&poly(&r, "x + y"), &i).unwrap());
        assert!(i.contains(&poly(&r, "x + y").pow(3).unwrap()).unwrap());
    }

    #[test]
    fn resource_cap_is_an_error() {
        let r = ring(&["x", "y", "z"]);
        let small = r.with_limits(crate::poly::Limits { max_basis: 1, ..Default::default() });
        let i = Ideal::from_strs(&small, &["x^2 - y", "x*y - z", "y^2 - x*z"]).unwrap();
        assert!(matches!(i.groebner_basis(), Err(Error::ResourceCap(_))));
    }

    fn arb_poly(r: RingRef) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((0u32..3, 0u32..3, 0u32..3, -3i64..4), 1..4).prop_map(move |ts| {
            let terms = ts.into_iter().map(|(a, b, c, k)| (Monomial::from_exponents(&[a, b, c]), r.field().from_i64(k))).collect();
            Polynomial::from_terms(&r, terms)
        })
    }

    fn check_buchberger(gb: &GroebnerBasis) -> bool {
        let space = FreeSpace::new(gb.ring(), 1);
        let ps = gb.polys();
        for i in 0..ps.len() {
            for j in i + 1..ps.len() {
                let (li, lj) = (ps[i].leading_monomial().unwrap(), ps[j].leading_monomial().unwrap());
                let l = li.lcm(lj);
                let one = gb.ring().field().one();
                let a = space.add_scaled(&Vector::zero(), &to_vector(&ps[i]), &li.quotient_of(&l), &one);
                let s = space.add_scaled(&a, &to_vector(&ps[j]), &lj.quotient_of(&l), &gb.ring().field().neg(&one));
                if !gb.normal_form(&from_vector(gb.ring(), &s)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn canonical_and_buchberger(gens in prop::collection::vec(arb_poly(ring(&["x", "y", "z"])), 1..4), k in 1i64..5) {
            let r = gens[0].ring().clone();
            let a = Ideal::new(&r, gens.clone()).unwrap();
            let mut permuted: Vec<Polynomial> = gens.iter().rev().map(|g| g.scale(&r.field().from_i64(k))).collect();
            permuted.push(gens[0].mul(&gens[gens.len() - 1]));
            let b = Ideal::new(&r, permuted).unwrap();
            let ga = a.groebner_basis().unwrap();
            prop_assert_eq!(ga.polys(), b.groebner_basis().unwrap().polys());
            prop_assert!(check_buchberger(ga));
            for g in &gens {
                prop_assert!(ga.contains(g));
            }
            // reduced and monic
            for (i, p) in ga.polys().iter().enumerate() {
                prop_assert!(r.field().is_one(p.leading_coeff().unwrap()));
                for (j, q) in ga.polys().iter().enumerate() {
                    if i != j {
                        let lm = q.leading_monomial().unwrap();
                        prop_assert!(p.terms().iter().all(|(m, _)| !lm.divides(m)));
                    }
                }
            }
        }

        #[test]
        fn quotient_adjunction(gens in prop::collection::vec(arb_poly(ring(&["x", "y", "z"])), 1..3), f in arb_poly(ring(&["x", "y", "z"]))) {
            prop_assume!(!f.is_zero());
            let r = f.ring().clone();
            let i = Ideal::new(&r, gens).unwrap();
            let q = quotient_by_element(&i, &f).unwrap();
            for g in q.gens() {
                prop_assert!(i.contains(&g.mul(&f)).unwrap());
            }
            prop_assert!(q.contains_ideal(&i).unwrap());
            let d_i = dimension(&i).unwrap();
            let d_q = dimension(&q).unwrap();
            prop_assert!(d_q <= d_i);
        }
    }
}
