//! Syzygy and Betti number bounds, depth and the Cohen–Macaulay property.

use crate::error::{Error, Result};
use crate::groebner::{dimension, Ideal};
use crate::module::linalg::rank_at_points;
use crate::module::{annihilator, minimal_resolution, rank_of_map, FPModule, Resolution, ResolutionStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// `rank Im φ_i ≥ i` for `1 ≤ i ≤ s−1`.
    SyzygyRank,
    /// `b_i ≥ 2i+1` for `i < s−1`.
    Betti,
    /// `b_{s−1} ≥ s`.
    LastBetti,
}

impl BoundKind {
    pub fn name(&self) -> &'static str {
        match self {
            BoundKind::SyzygyRank => "syzygy-rank",
            BoundKind::Betti => "betti",
            BoundKind::LastBetti => "last-betti",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub kind: BoundKind,
    pub index: usize,
    pub value: usize,
    pub bound: usize,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        self.value >= self.bound
    }

    pub fn margin(&self) -> i64 {
        self.value as i64 - self.bound as i64
    }
}

#[derive(Debug, Clone)]
pub struct SyzygyBoundReport {
    pub length: usize,
    pub betti: Vec<usize>,
    /// `rank Im φ_i` for `i = 1..=s`.
    pub syzygy_ranks: Vec<usize>,
    pub checks: Vec<BoundCheck>,
}

impl SyzygyBoundReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(BoundCheck::holds)
    }
}

fn require_polynomial(m: &FPModule) -> Result<()> {
    if m.base().is_polynomial() {
        Ok(())
    } else {
        Err(Error::InvalidArgument("this check needs a polynomial ambient ring".into()))
    }
}

/// `rank Im φ_i`, read off the Betti numbers by exactness and confirmed by
/// evaluation, with a determinantal fallback when evaluation falls short.
fn image_rank(res: &Resolution, i: usize) -> Result<usize> {
    let alternating: i64 = res.betti[i..].iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
    let map = res.complex.map(i);
    let seen = rank_at_points(map, 4);
    if seen as i64 == alternating {
        return Ok(seen);
    }
    let exact = rank_of_map(map)?;
    if exact as i64 != alternating {
        return Err(Error::CrossCheck(format!("rank of φ_{i} is {exact}, exactness predicts {alternating}")));
    }
    Ok(exact)
}

pub fn syzygy_bound_check(m: &FPModule) -> Result<SyzygyBoundReport> {
    require_polynomial(m)?;
    let res = minimal_resolution(m, None)?;
    if res.status != ResolutionStatus::Complete {
        return Err(Error::CrossCheck("resolution over a polynomial ring did not terminate".into()));
    }
    let s = res.length();
    let betti = res.betti.clone();
    let syzygy_ranks = (1..=s).map(|i| image_rank(&res, i)).collect::<Result<Vec<_>>>()?;
    let mut checks = Vec::new();
    for i in 1..s {
        checks.push(BoundCheck { kind: BoundKind::SyzygyRank, index: i, value: syzygy_ranks[i - 1], bound: i });
    }
    for i in 0..s.saturating_sub(1) {
        checks.push(BoundCheck { kind: BoundKind::Betti, index: i, value: betti[i], bound: 2 * i + 1 });
    }
    if s >= 1 {
        checks.push(BoundCheck { kind: BoundKind::LastBetti, index: s - 1, value: betti[s - 1], bound: s });
    }
    Ok(SyzygyBoundReport { length: s, betti, syzygy_ranks, checks })
}

#[derive(Debug, Clone)]
pub struct DepthReport {
    pub nvars: usize,
    pub projective_dimension: usize,
    /// `nvars − pd`, valid for graded modules.
    pub depth: usize,
    /// Krull dimension of the support; −1 for the zero module.
    pub dimension: i64,
    pub annihilator: Ideal,
    pub is_cm: bool,
}

pub fn depth_and_cm_check(m: &FPModule) -> Result<DepthReport> {
    require_polynomial(m)?;
    let d = m.base().ring().nvars();
    let res = minimal_resolution(m, None)?;
    let pd = res.length();
    let ann = annihilator(m)?;
    let dim = dimension(&ann)?;
    let depth = d - pd;
    Ok(DepthReport { nvars: d, projective_dimension: pd, depth, dimension: dim, annihilator: ann, is_cm: dim == depth as i64 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::intersection;
    use crate::module::random::random_graded_module;
    use crate::module::{BaseRef, BaseRing};
    use crate::poly::{parse_polynomial, Field, MonomialOrder, Ring};
    use rand::SeedableRng;

    fn base(vars: &[&str]) -> BaseRef {
        BaseRing::polynomial(&Ring::new(Field::Rational, vars, MonomialOrder::GrevLex).unwrap())
    }

    fn cyclic(b: &BaseRef, gens: &[&str]) -> FPModule {
        FPModule::cyclic(b, &gens.iter().map(|s| parse_polynomial(s, b.ring()).unwrap()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn residue_field_meets_the_bounds_with_equality() {
        let b = base(&["x1", "x2", "x3"]);
        let rep = syzygy_bound_check(&cyclic(&b, &["x1", "x2", "x3"])).unwrap();
        assert_eq!(rep.length, 3);
        assert_eq!(rep.betti, vec![1, 3, 3, 1]);
        assert_eq!(rep.syzygy_ranks, vec![1, 2, 1]);
        assert!(rep.holds());
        let tight: Vec<(BoundKind, usize)> = rep.checks.iter().filter(|c| c.margin() == 0).map(|c| (c.kind, c.index)).collect();
        assert!(tight.contains(&(BoundKind::SyzygyRank, 1)));
        assert!(tight.contains(&(BoundKind::SyzygyRank, 2)));
    }

    #[test]
    fn free_module_is_vacuous() {
        let b = base(&["x", "y"]);
        let rep = syzygy_bound_check(&FPModule::free(&b, 2)).unwrap();
        assert_eq!(rep.length, 0);
        assert!(rep.checks.is_empty());
        assert!(rep.holds());
    }

    #[test]
    fn random_linear_presentations_meet_the_bounds() {
        let b = base(&["x", "y", "z", "w"]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..3 {
            let m = random_graded_module(&b, 3, 5, 1, &mut rng).unwrap();
            let rep = syzygy_bound_check(&m).unwrap();
            assert!(rep.holds(), "{:?}", rep.checks);
        }
    }

    #[test]
    fn cohen_macaulay_examples() {
        let b = base(&["x", "y"]);
        let rep = depth_and_cm_check(&FPModule::free(&b, 1)).unwrap();
        assert_eq!((rep.projective_dimension, rep.depth, rep.dimension, rep.is_cm), (0, 2, 2, true));
        let rep = depth_and_cm_check(&cyclic(&b, &["x*y"])).unwrap();
        assert_eq!((rep.projective_dimension, rep.depth, rep.dimension, rep.is_cm), (1, 1, 1, true));

        let b4 = base(&["x", "y", "z", "w"]);
        let r = b4.ring();
        let planes = intersection(&Ideal::from_strs(r, &["x", "y"]).unwrap(), &Ideal::from_strs(r, &["z", "w"]).unwrap()).unwrap();
        let m = FPModule::cyclic(&b4, planes.gens()).unwrap();
        let rep = depth_and_cm_check(&m).unwrap();
        assert_eq!(rep.projective_dimension, 3);
        assert_eq!(rep.dimension, 2);
        assert_eq!(crate::groebner::codimension(&planes).unwrap(), 2);
        assert!(!rep.is_cm);
    }
}
