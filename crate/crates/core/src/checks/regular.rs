//! Regular sequences on modules and the Nakayama nondegeneracy condition.

use crate::error::Result;
use crate::module::{in_image, syzygy_module, FPModule, ModuleMap};
use crate::poly::Polynomial;

/// `[A | x_1·I | … | x_k·I]`, a presentation of `M/(x_1..x_k)M`.
pub fn quotient_presentation(m: &FPModule, seq: &[Polynomial]) -> Result<ModuleMap> {
    let base = m.base();
    let n = m.gens();
    let mut cols = m.relations().columns().to_vec();
    for x in seq {
        for i in 0..n {
            let mut c = vec![Polynomial::zero(base.ring()); n];
            c[i] = x.clone();
            cols.push(c);
        }
    }
    ModuleMap::from_columns(base, n, cols)
}

/// An element `t_{i+1}` of `((x_1..x_i)M :_M x_{i+1})` outside `(x_1..x_i)M`,
/// with the identity `x_{i+1}·t_{i+1} = Σ_{j≤i} x_j·t_j` in `M`.
#[derive(Debug, Clone, PartialEq)]
pub struct ColonWitness {
    /// Number of parameters already processed (0-based position of `x_{i+1}`).
    pub index: usize,
    /// `t_1..t_{i+1}` as combinations of M's generators.
    pub terms: Vec<Vec<Polynomial>>,
}

impl ColonWitness {
    pub fn head(&self) -> &[Polynomial] {
        &self.terms[self.index]
    }
}

/// First strict colon witness at position `i`, scanning the syzygies of
/// `[x_{i+1}·I | x_1·I … x_i·I | A]` in basis order.
pub fn colon_witness(m: &FPModule, seq: &[Polynomial], i: usize) -> Result<Option<ColonWitness>> {
    let base = m.base();
    let n = m.gens();
    if n == 0 {
        return Ok(None);
    }
    let mut order = vec![seq[i].clone()];
    order.extend(seq[..i].iter().cloned());
    let big = quotient_presentation(&FPModule::new(ModuleMap::zero(base, n, 0)), &order)?;
    let stacked = big.hstack(m.relations())?;
    let below = quotient_presentation(m, &seq[..i])?;
    for s in syzygy_module(&stacked)?.columns() {
        let head: Vec<Polynomial> = s[..n].iter().map(|p| base.reduce(p)).collect();
        if !in_image(&below, &head)? {
            let mut terms: Vec<Vec<Polynomial>> =
                (0..i).map(|j| s[(j + 1) * n..(j + 2) * n].iter().map(|p| base.reduce(&p.neg())).collect()).collect();
            terms.push(head);
            return Ok(Some(ColonWitness { index: i, terms }));
        }
    }
    Ok(None)
}

/// Whether `x_{i+1}·t_{i+1} − Σ x_j·t_j` vanishes in `M`.
pub fn witness_identity_holds(m: &FPModule, seq: &[Polynomial], w: &ColonWitness) -> Result<bool> {
    let n = m.gens();
    let mut v: Vec<Polynomial> = w.terms[w.index].iter().map(|t| t.mul(&seq[w.index])).collect();
    for j in 0..w.index {
        for k in 0..n {
            v[k] = v[k].sub(&seq[j].mul(&w.terms[j][k]));
        }
    }
    m.is_zero_element(&v)
}

/// `M ≠ (x_1..x_d)M` at the origin: the quotient keeps a minimal generator.
pub fn nakayama_check(m: &FPModule, params: &[Polynomial]) -> Result<bool> {
    Ok(FPModule::new(quotient_presentation(m, params)?).minimal_generator_count() > 0)
}

#[derive(Debug, Clone)]
pub struct RegularSequenceReport {
    /// 1-based position of the first element that is a zerodivisor modulo the previous ones.
    pub failed_at: Option<usize>,
    pub witness: Option<ColonWitness>,
    pub nakayama: bool,
}

impl RegularSequenceReport {
    pub fn is_regular(&self) -> bool {
        self.failed_at.is_none() && self.nakayama
    }
}

pub fn regular_sequence_check(m: &FPModule, seq: &[Polynomial]) -> Result<RegularSequenceReport> {
    for x in seq {
        x.ensure_ring(m.base().ring())?;
    }
    for i in 0..seq.len() {
        if let Some(w) = colon_witness(m, seq, i)? {
            return Ok(RegularSequenceReport { failed_at: Some(i + 1), witness: Some(w), nakayama: nakayama_check(m, seq)? });
        }
    }
    Ok(RegularSequenceReport { failed_at: None, witness: None, nakayama: nakayama_check(m, seq)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{intersection, Ideal};
    use crate::module::{BaseRef, BaseRing};
    use crate::poly::{parse_polynomial, Field, MonomialOrder, Ring};

    fn ring(vars: &[&str]) -> crate::poly::RingRef {
        Ring::new(Field::Rational, vars, MonomialOrder::GrevLex).unwrap()
    }

    fn polys(b: &BaseRef, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|t| parse_polynomial(t, b.ring()).unwrap()).collect()
    }

    #[test]
    fn variables_are_regular() {
        let b = BaseRing::polynomial(&ring(&["x", "y"]));
        let rep = regular_sequence_check(&FPModule::free(&b, 1), &polys(&b, &["x", "y"])).unwrap();
        assert!(rep.is_regular());
        assert!(nakayama_check(&FPModule::free(&b, 1), &polys(&b, &["x"])).unwrap());
        assert!(!nakayama_check(&FPModule::free(&b, 0), &polys(&b, &["x"])).unwrap());
        assert!(!nakayama_check(&FPModule::free(&b, 1), &polys(&b, &["x + 1"])).unwrap());
    }

    #[test]
    fn zerodivisor_on_the_node() {
        let r = ring(&["x", "y"]);
        let b = BaseRing::quotient(&r, &Ideal::from_strs(&r, &["x*y"]).unwrap(), false).unwrap();
        let m = FPModule::free(&b, 1);
        let seq = polys(&b, &["x"]);
        let rep = regular_sequence_check(&m, &seq).unwrap();
        assert_eq!(rep.failed_at, Some(1));
        let w = rep.witness.unwrap();
        assert_eq!(w.head()[0].to_string(), "y");
        assert!(witness_identity_holds(&m, &seq, &w).unwrap());
    }

    #[test]
    fn two_planes_fail_at_the_second_element() {
        let r = ring(&["x", "y", "z", "w"]);
        let i = intersection(&Ideal::from_strs(&r, &["x", "y"]).unwrap(), &Ideal::from_strs(&r, &["z", "w"]).unwrap()).unwrap();
        let b = BaseRing::quotient(&r, &i, false).unwrap();
        let m = FPModule::free(&b, 1);
        let seq = polys(&b, &["x - z", "y - w"]);
        let rep = regular_sequence_check(&m, &seq).unwrap();
        assert_eq!(rep.failed_at, Some(2));
        let w = rep.witness.unwrap();
        assert_eq!(w.index, 1);
        assert!(witness_identity_holds(&m, &seq, &w).unwrap());
        // the witness is not in (x − z)M
        assert!(!crate::module::in_image(&quotient_presentation(&m, &seq[..1]).unwrap(), w.head()).unwrap());
        assert!(rep.nakayama);
    }
}
