//! Acyclicity of finite free complexes by ranks and Fitting ideals, checked
//! against direct homology.

use crate::error::{Error, Result};
use crate::groebner::codimension;
use crate::module::{complex_homology, fitting_ideal, rank_of_map, BaseRef, BaseRing, Complex, ModuleMap};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcyclicitySpot {
    pub index: usize,
    /// Rank of the free module `F_i`.
    pub free_rank: usize,
    /// Rank of `φ_i`.
    pub map_rank: usize,
    /// Codimension of the ideal of `map_rank`-minors; `None` for the unit ideal.
    pub fitting_codim: Option<usize>,
    pub rank_ok: bool,
    pub codim_ok: bool,
}

#[derive(Debug, Clone)]
pub struct AcyclicityReport {
    /// False over quotient ambients, where codimension and grade may differ.
    pub applicable: bool,
    pub spots: Vec<AcyclicitySpot>,
    /// Verdict of the rank and Fitting-ideal conditions, when applicable.
    pub criterion_acyclic: Option<bool>,
    pub homology_acyclic: bool,
    /// Spots `i ≥ 1` with nonzero homology.
    pub nonzero_homology: Vec<usize>,
}

pub fn be_acyclicity_check(complex: &Complex, domain_certified: bool) -> Result<AcyclicityReport> {
    let base = complex.base();
    if !base.is_domain() && !domain_certified {
        return Err(Error::NotDomain);
    }
    let rank_base = if base.is_domain() {
        base.clone()
    } else {
        BaseRing::quotient(base.ring(), base.quotient_ideal().expect("non-domain bases are quotients"), true)?
    };
    let s = complex.length();
    let ranks: Vec<usize> =
        (1..=s).map(|i| rank_of_map(&complex.map(i).with_base(&rank_base))).collect::<Result<Vec<_>>>()?;
    let applicable = base.is_polynomial();
    let mut spots = Vec::with_capacity(s);
    for i in 1..=s {
        let r = ranks[i - 1];
        let next = if i < s { ranks[i] } else { 0 };
        let free_rank = complex.ranks()[i];
        let fitting_codim = if applicable { fitting_codim(complex.map(i), r)? } else { None };
        spots.push(AcyclicitySpot {
            index: i,
            free_rank,
            map_rank: r,
            fitting_codim,
            rank_ok: r + next == free_rank,
            codim_ok: !applicable || fitting_codim.is_none_or(|c| c >= i),
        });
    }
    let mut nonzero_homology = Vec::new();
    for i in 1..=s {
        if !complex_homology(complex, i)?.module.is_zero()? {
            nonzero_homology.push(i);
        }
    }
    let homology_acyclic = nonzero_homology.is_empty();
    let criterion_acyclic = applicable.then(|| spots.iter().all(|p| p.rank_ok && p.codim_ok));
    if let Some(v) = criterion_acyclic {
        if v != homology_acyclic {
            return Err(Error::CrossCheck(format!(
                "rank/Fitting criterion says {v}, homology says {homology_acyclic} (nonzero at {nonzero_homology:?})"
            )));
        }
    }
    Ok(AcyclicityReport { applicable, spots, criterion_acyclic, homology_acyclic, nonzero_homology })
}

fn fitting_codim(map: &ModuleMap, r: usize) -> Result<Option<usize>> {
    let ideal = fitting_ideal(map, r)?;
    if ideal.is_unit()? {
        return Ok(None);
    }
    Ok(Some(codimension(&ideal)? as usize))
}

/// The complex with every entry sent through `var_map` into `target`'s ring
/// (variable `i` goes to variable `var_map[i]`): the tensor product with the
/// algebra `target` over the original base.
pub fn base_change(complex: &Complex, target: &BaseRef, var_map: &[usize]) -> Result<Complex> {
    let maps = complex
        .maps()
        .iter()
        .map(|m| {
            let cols = m.columns().iter().map(|c| c.iter().map(|p| target.reduce(&p.map_into(target.ring(), var_map))).collect()).collect();
            ModuleMap::from_columns(target, m.rows(), cols)
        })
        .collect::<Result<Vec<_>>>()?;
    Complex::new(target, complex.ranks()[0], maps)
}
