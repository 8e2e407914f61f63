//! Complexes of free modules, minimal resolutions, homology, Tor and Hom.

use crate::error::{Error, Result};
use crate::module::base::BaseRef;
use crate::module::fp::{ensure_same_base, graded_row_shifts, kernel_generators, minimal_generators, prune, subquotient, FPModule, Subquotient};
use crate::module::matrix::ModuleMap;
use crate::module::schreyer::schreyer_resolution;
use crate::poly::Polynomial;

/// `0 → F_s → … → F_0` with `maps[i-1] = φ_i : F_i → F_{i-1}`.
#[derive(Debug, Clone)]
pub struct Complex {
    base: BaseRef,
    ranks: Vec<usize>,
    maps: Vec<ModuleMap>,
}

impl Complex {
    /// Checks matching ranks and that consecutive composites vanish.
    pub fn new(base: &BaseRef, f0_rank: usize, maps: Vec<ModuleMap>) -> Result<Complex> {
        let complex = Complex::assemble(base, f0_rank, maps)?;
        for k in 1..complex.maps.len() {
            if !complex.maps[k - 1].compose(&complex.maps[k])?.is_zero() {
                return Err(Error::InvalidArgument(format!("φ_{} ∘ φ_{} is not zero", k, k + 1)));
            }
        }
        Ok(complex)
    }

    /// Checks matching ranks only, for maps that form a complex by construction.
    fn assemble(base: &BaseRef, f0_rank: usize, maps: Vec<ModuleMap>) -> Result<Complex> {
        let mut ranks = vec![f0_rank];
        for (k, m) in maps.iter().enumerate() {
            ensure_same_base(base, m.base())?;
            if m.rows() != ranks[k] {
                return Err(Error::DimensionMismatch(format!(
                    "φ_{} has {} rows but F_{} has rank {}",
                    k + 1,
                    m.rows(),
                    k,
                    ranks[k]
                )));
            }
            ranks.push(m.cols());
        }
        Ok(Complex { base: base.clone(), ranks, maps })
    }

    pub fn base(&self) -> &BaseRef {
        &self.base
    }

    /// Ranks of `F_0..F_s`.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Length `s`.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn maps(&self) -> &[ModuleMap] {
        &self.maps
    }

    /// `φ_i` for `1 ≤ i ≤ s`.
    pub fn map(&self, i: usize) -> &ModuleMap {
        &self.maps[i - 1]
    }

    /// Same maps with every entry read in another base (for tensoring).
    pub fn with_base(&self, base: &BaseRef) -> Result<Complex> {
        Complex::assemble(base, self.ranks[0], self.maps.iter().map(|m| m.with_base(base)).collect())
    }

    /// Koszul complex of a sequence: `F_i = Λ^i R^n`, bases the `i`-subsets
    /// in lexicographic order.
    pub fn koszul(base: &BaseRef, seq: &[Polynomial]) -> Result<Complex> {
        use crate::module::linalg::subsets;
        let n = seq.len();
        let mut maps = Vec::new();
        for i in 1..=n {
            let src = subsets(n, i);
            let tgt = subsets(n, i - 1);
            let mut m = ModuleMap::zero(base, tgt.len(), src.len()).into_columns();
            for (j, s) in src.iter().enumerate() {
                for (k, &drop) in s.iter().enumerate() {
                    let face: Vec<usize> = s.iter().copied().filter(|&x| x != drop).collect();
                    let row = tgt.iter().position(|t| *t == face).unwrap();
                    let term = if k % 2 == 0 { seq[drop].clone() } else { seq[drop].neg() };
                    m[j][row] = term;
                }
            }
            maps.push(ModuleMap::from_columns(base, tgt.len(), m)?);
        }
        Complex::new(base, 1, maps)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResolutionStatus {
    Complete,
    /// The length cap was reached with a nonzero kernel remaining.
    Truncated,
}

#[derive(Debug, Clone)]
pub struct Resolution {
    pub complex: Complex,
    pub minimal: bool,
    pub betti: Vec<usize>,
    pub status: ResolutionStatus,
    /// `F_0 → M` sends generator `k` of `F_0` to this combination of M's generators.
    pub augmentation: ModuleMap,
}

impl Resolution {
    /// Projective dimension when complete.
    pub fn length(&self) -> usize {
        self.complex.length()
    }
}

/// Default length cap: `nvars + 1` over polynomial rings (never reached, by
/// Hilbert's syzygy theorem), 12 over quotients.
pub fn default_length_cap(base: &BaseRef) -> usize {
    if base.is_polynomial() {
        base.ring().nvars() + 1
    } else {
        12
    }
}

/// Cancels unit entries of `next` against columns of `current`:
/// a unit at `(r, c)` of `next` makes column `r` of `current` redundant.
/// Row `c` of the map `after` following `next` goes with it.
fn cancel_units(current: &mut ModuleMap, next: &mut ModuleMap, mut after: Option<&mut ModuleMap>) -> Result<()> {
    let base = current.base().clone();
    let field = base.ring().field();
    let mut cols = next.reduced().into_columns();
    let mut rows = next.rows();
    loop {
        // fewest other entries in the pivot row and column keeps fill-in low
        let mut row_count = vec![0usize; rows];
        for col in &cols {
            for (i, p) in col.iter().enumerate() {
                if !p.is_zero() {
                    row_count[i] += 1;
                }
            }
        }
        let mut pivot: Option<(usize, usize, usize)> = None;
        for (c, col) in cols.iter().enumerate() {
            let col_count = col.iter().filter(|p| !p.is_zero()).count();
            for (r, e) in col.iter().enumerate() {
                if !e.is_zero() && e.is_constant() {
                    let cost = (row_count[r] - 1) * (col_count - 1);
                    if pivot.is_none_or(|(_, _, best)| cost < best) {
                        pivot = Some((r, c, cost));
                    }
                }
            }
        }
        let Some((r, c, _)) = pivot else {
            *next = ModuleMap::from_columns(&base, rows, cols)?;
            if after.is_none() {
                *next = next.without_zero_columns();
            }
            return Ok(());
        };
        let pc = cols.remove(c);
        let u_inv = field.inv(&pc[r].constant_term());
        let express: Vec<Polynomial> = pc.iter().map(|p| p.scale(&field.neg(&u_inv))).collect();
        for col in cols.iter_mut() {
            let a = col[r].clone();
            if !a.is_zero() {
                for i in 0..col.len() {
                    if i != r && !express[i].is_zero() {
                        col[i] = base.reduce(&col[i].add(&a.mul(&express[i])));
                    }
                }
            }
            col.remove(r);
        }
        rows -= 1;
        let keep: Vec<usize> = (0..current.cols()).filter(|&j| j != r).collect();
        *current = current.select_columns(&keep);
        if let Some(after) = after.as_deref_mut() {
            let cols = after
                .columns()
                .iter()
                .map(|col| col.iter().enumerate().filter(|(i, _)| *i != c).map(|(_, p)| p.clone()).collect())
                .collect();
            *after = ModuleMap::from_columns(&base, after.rows() - 1, cols)?;
        }
    }
}

/// Cancels unit entries throughout a complex of free modules, leaving
/// `F_0` alone, then drops trailing zero maps.
fn minimize(maps: &mut Vec<ModuleMap>) -> Result<()> {
    for k in 0..maps.len().saturating_sub(1) {
        let (low, high) = maps.split_at_mut(k + 1);
        let (next, rest) = high.split_first_mut().unwrap();
        cancel_units(&mut low[k], next, rest.first_mut())?;
    }
    while maps.last().is_some_and(|m| m.cols() == 0) {
        maps.pop();
    }
    Ok(())
}

/// Minimal graded free resolution. Graded modules over polynomial rings go
/// through a Schreyer frame with unit cancellation; otherwise iterated
/// syzygies with greedy minimal generators.
pub fn minimal_resolution(module: &FPModule, length_cap: Option<usize>) -> Result<Resolution> {
    let base = module.base().clone();
    let cap = length_cap.unwrap_or_else(|| default_length_cap(&base));
    let pruned = prune(module, &[])?;
    let m = pruned.module;
    let n0 = m.gens();
    let mut augmentation_cols = Vec::new();
    for &k in &pruned.kept {
        augmentation_cols.push(crate::module::fp::unit_column(&base, module.gens(), k));
    }
    let augmentation = ModuleMap::from_columns(&base, module.gens(), augmentation_cols)?;

    let rel = m.relations().reduced().without_zero_columns();
    let graded = if base.is_polynomial() { graded_row_shifts(&rel) } else { None };
    let (maps, status) = match graded {
        Some(shifts) => schreyer_maps(&rel, shifts, cap)?,
        None => iterated_maps(&rel, cap)?,
    };
    let complex = Complex::assemble(&base, n0, maps)?;
    let betti = complex.ranks().to_vec();
    Ok(Resolution { complex, minimal: true, betti, status, augmentation })
}

fn schreyer_maps(rel: &ModuleMap, shifts: Vec<i64>, cap: usize) -> Result<(Vec<ModuleMap>, ResolutionStatus)> {
    let mut maps = schreyer_resolution(rel, shifts.iter().map(|&s| s as u64).collect())?;
    minimize(&mut maps)?;
    let mut status = ResolutionStatus::Complete;
    if maps.len() > cap {
        maps.truncate(cap);
        status = ResolutionStatus::Truncated;
    }
    Ok((maps, status))
}

fn iterated_maps(rel: &ModuleMap, cap: usize) -> Result<(Vec<ModuleMap>, ResolutionStatus)> {
    let base = rel.base().clone();
    let n0 = rel.rows();
    let mut maps: Vec<ModuleMap> = Vec::new();
    let mut shifts: Vec<i64> = vec![0; n0];
    // φ_1: minimal generators of the relation module
    let keep = minimal_generators(&base, n0, rel.columns(), &[], &shifts)?;
    let mut current = rel.select_columns(&keep);
    let mut status = ResolutionStatus::Complete;
    if current.cols() > 0 {
        if cap == 0 {
            status = ResolutionStatus::Truncated;
        } else {
            loop {
                base.ring().limits().check_cancel()?;
                let empty = ModuleMap::zero(&base, current.rows(), 0);
                let kernel = kernel_generators(&current, &empty)?;
                let next_shifts: Vec<i64> = (0..current.cols()).map(|j| current.column_degree(j, &shifts)).collect();
                let keep = minimal_generators(&base, current.cols(), &kernel, &[], &next_shifts)?;
                let mut next =
                    ModuleMap::from_columns(&base, current.cols(), keep.iter().map(|&k| kernel[k].clone()).collect())?;
                cancel_units(&mut current, &mut next, None)?;
                let next_shifts: Vec<i64> = (0..current.cols()).map(|j| current.column_degree(j, &shifts)).collect();
                maps.push(current);
                if next.cols() == 0 {
                    break;
                }
                if maps.len() == cap {
                    status = ResolutionStatus::Truncated;
                    break;
                }
                shifts = next_shifts;
                current = next;
            }
        }
    }
    Ok((maps, status))
}

/// Total Betti numbers of a module.
pub fn betti_numbers(module: &FPModule) -> Result<Vec<usize>> {
    Ok(minimal_resolution(module, None)?.betti)
}

/// `ker φ_i / Im φ_{i+1}`, with `φ_0 = 0` and `φ_{s+1} = 0`.
pub fn complex_homology(complex: &Complex, i: usize) -> Result<Subquotient> {
    let s = complex.length();
    if i > s {
        return Err(Error::IndexOutOfRange { index: i, valid: format!("0..={s}") });
    }
    let base = complex.base();
    let rank = complex.ranks()[i];
    let f = if i == 0 { ModuleMap::zero(base, 0, rank) } else { complex.map(i).clone() };
    let image = if i < s { complex.map(i + 1).clone() } else { ModuleMap::zero(base, rank, 0) };
    let target_rel = ModuleMap::zero(base, f.rows(), 0);
    let src_rel = ModuleMap::zero(base, rank, 0);
    subquotient(&f, &target_rel, &image, &src_rel)
}

/// Whether all homology at `1..=s` vanishes.
pub fn is_acyclic(complex: &Complex) -> Result<bool> {
    for i in 1..=complex.length() {
        if !complex_homology(complex, i)?.module.is_zero()? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Tor_i(M, N)`: resolve `M`, tensor with `N`, take homology.
pub fn tor_modules(m: &FPModule, n: &FPModule, i: usize) -> Result<Subquotient> {
    ensure_same_base(m.base(), n.base())?;
    let base = m.base().clone();
    let res = minimal_resolution(m, Some(i + 1))?;
    let c = &res.complex;
    if i > c.length() {
        return Ok(Subquotient { module: FPModule::free(&base, 0), embedding: ModuleMap::zero(&base, 0, 0) });
    }
    let ng = n.gens();
    let ident = |k: usize| ModuleMap::identity(&base, k);
    let b = n.relations();
    let ranks = c.ranks();
    let f = if i == 0 { ModuleMap::zero(&base, 0, ranks[0] * ng) } else { c.map(i).kronecker(&ident(ng)) };
    let target_rel = if i == 0 { ModuleMap::zero(&base, 0, 0) } else { ident(ranks[i - 1]).kronecker(b) };
    let image = if i < c.length() { c.map(i + 1).kronecker(&ident(ng)) } else { ModuleMap::zero(&base, ranks[i] * ng, 0) };
    let src_rel = ident(ranks[i]).kronecker(b);
    subquotient(&f, &target_rel, &image, &src_rel)
}

/// `Hom(M, N)` with, for each generator, its matrix `X` (`N.gens × M.gens`):
/// column `j` is the image of M's `j`-th generator in N's generators.
#[derive(Debug, Clone)]
pub struct HomModule {
    pub module: FPModule,
    pub maps: Vec<ModuleMap>,
}

impl HomModule {
    /// Value of generator `h` on a combination `v` of M's generators.
    pub fn evaluate(&self, h: usize, v: &[Polynomial]) -> Vec<Polynomial> {
        self.maps[h].apply(v)
    }
}

pub fn hom_module(m: &FPModule, n: &FPModule) -> Result<HomModule> {
    ensure_same_base(m.base(), n.base())?;
    let base = m.base().clone();
    let (mg, ng) = (m.gens(), n.gens());
    let a = m.relations();
    let b = n.relations();
    let ident = |k: usize| ModuleMap::identity(&base, k);
    // vec(X) stacks the columns of X; vec(X·A) = (Aᵀ ⊗ I) vec(X)
    let f = a.transpose().kronecker(&ident(ng));
    let target_rel = ident(a.cols()).kronecker(b);
    let image = ident(mg).kronecker(b);
    let src_rel = ModuleMap::zero(&base, mg * ng, 0);
    let sq = subquotient(&f, &target_rel, &image, &src_rel)?;
    let maps = sq
        .embedding
        .columns()
        .iter()
        .map(|v| {
            let cols = (0..mg).map(|j| v[j * ng..(j + 1) * ng].to_vec()).collect();
            ModuleMap::from_columns(&base, ng, cols)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HomModule { module: sq.module, maps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::module::base::BaseRing;
    use crate::module::fp::{same_image, syzygy_module};
    use crate::module::linalg::rank_of_map;
    use crate::poly::{parse_polynomial, Field, MonomialOrder, Ring};
    use proptest::prelude::*;

    fn base(vars: &[&str]) -> BaseRef {
        BaseRing::polynomial(&Ring::new(Field::Rational, vars, MonomialOrder::GrevLex).unwrap())
    }

    fn p(b: &BaseRef, s: &str) -> Polynomial {
        parse_polynomial(s, b.ring()).unwrap()
    }

    fn cyclic(b: &BaseRef, gens: &[&str]) -> FPModule {
        FPModule::cyclic(b, &gens.iter().map(|s| p(b, s)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn syzygy_examples() {
        let b = base(&["x", "y"]);
        assert_eq!(syzygy_module(&ModuleMap::identity(&b, 2)).unwrap().cols(), 0);
        let row = ModuleMap::parse(&b, &[&["x", "y"]]).unwrap();
        let syz = syzygy_module(&row).unwrap();
        assert!(row.compose(&syz).unwrap().is_zero());
        assert!(same_image(&syz, &ModuleMap::parse(&b, &[&["y"], &["-x"]]).unwrap()).unwrap());
        let rep = ModuleMap::parse(&b, &[&["x", "x"]]).unwrap();
        assert!(same_image(&syzygy_module(&rep).unwrap(), &ModuleMap::parse(&b, &[&["1"], &["-1"]]).unwrap()).unwrap());
    }

    #[test]
    fn residue_field_resolution_matches_koszul() {
        let b = base(&["x1", "x2", "x3"]);
        let k = cyclic(&b, &["x1", "x2", "x3"]);
        let res = minimal_resolution(&k, None).unwrap();
        assert_eq!(res.betti, vec![1, 3, 3, 1]);
        assert_eq!(res.length(), 3);
        assert_eq!(res.status, ResolutionStatus::Complete);
        let ranks: Vec<usize> = (1..=3).map(|i| rank_of_map(res.complex.map(i)).unwrap()).collect();
        assert_eq!(ranks, vec![1, 2, 1]);
        assert!(is_acyclic(&res.complex).unwrap());
        for m in res.complex.maps() {
            for c in m.columns() {
                assert!(c.iter().all(|e| e.constant_term() == b.ring().field().zero()));
            }
        }
    }

    #[test]
    fn small_resolutions() {
        let b = base(&["x", "y"]);
        let free = FPModule::free(&b, 1);
        let res = minimal_resolution(&free, None).unwrap();
        assert_eq!(res.betti, vec![1]);
        let hyp = cyclic(&b, &["x*y"]);
        assert_eq!(minimal_resolution(&hyp, None).unwrap().betti, vec![1, 1]);
    }

    #[test]
    fn betti_numbers_ignore_the_presentation() {
        let b = base(&["x", "y", "z"]);
        let plain = cyclic(&b, &["x", "y*z"]);
        // same module with a redundant relation and a generator killed by a unit
        let noisy = FPModule::new(
            ModuleMap::parse(&b, &[&["x", "y*z", "x*y + y*z", "0"], &["0", "0", "z", "1"]]).unwrap(),
        );
        assert_eq!(betti_numbers(&plain).unwrap(), betti_numbers(&noisy).unwrap());
        assert_eq!(betti_numbers(&plain).unwrap(), vec![1, 2, 1]);
    }

    #[test]
    fn quotient_resolution_is_truncated() {
        let r = Ring::new(Field::Rational, &["x"], MonomialOrder::GrevLex).unwrap();
        let q = BaseRing::quotient(&r, &Ideal::from_strs(&r, &["x^2"]).unwrap(), false).unwrap();
        let k = FPModule::cyclic(&q, &[parse_polynomial("x", &r).unwrap()]).unwrap();
        let res = minimal_resolution(&k, Some(4)).unwrap();
        assert_eq!(res.status, ResolutionStatus::Truncated);
        assert_eq!(res.betti, vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn hom_examples() {
        let b = base(&["x"]);
        let s = FPModule::free(&b, 1);
        let h = hom_module(&s, &s).unwrap();
        assert_eq!(h.module.gens(), 1);
        assert!(h.module.relations().is_zero());
        assert_eq!(h.evaluate(0, &[p(&b, "1")]), vec![p(&b, "1")]);
        let tors = cyclic(&b, &["x"]);
        assert!(hom_module(&tors, &s).unwrap().module.is_zero().unwrap());
        let end = hom_module(&tors, &tors).unwrap();
        assert_eq!(end.module.gens(), 1);
        assert!(same_image(end.module.relations(), tors.relations()).unwrap());
    }

    #[test]
    fn tor_examples() {
        let b = base(&["x"]);
        let free = FPModule::free(&b, 2);
        let n = cyclic(&b, &["x"]);
        assert!(tor_modules(&free, &n, 1).unwrap().module.is_zero().unwrap());
        let t1 = tor_modules(&n, &n, 1).unwrap().module;
        assert_eq!(t1.gens(), 1);
        assert!(same_image(t1.relations(), n.relations()).unwrap());
        let m = cyclic(&b, &["x^3 - x"]);
        assert!(tor_modules(&m, &n, 2).unwrap().module.is_zero().unwrap());
        // Tor_0 is the tensor product
        let t0 = tor_modules(&n, &n, 0).unwrap().module;
        assert_eq!(t0.minimal_generator_count(), 1);
    }

    #[test]
    fn koszul_homology() {
        let b = base(&["x", "y"]);
        let reg = Complex::koszul(&b, &[p(&b, "x"), p(&b, "y")]).unwrap();
        assert!(complex_homology(&reg, 1).unwrap().module.is_zero().unwrap());
        let bad = Complex::koszul(&b, &[p(&b, "x"), p(&b, "x")]).unwrap();
        let h = complex_homology(&bad, 1).unwrap();
        assert!(!h.module.is_zero().unwrap());
        // the cycle (1, -1) survives; it is a multiple of the reported generator
        let zero = Complex::new(&b, 1, vec![]).unwrap();
        assert!(complex_homology(&zero, 1).is_err());
        assert!(is_acyclic(&zero).unwrap());
        let flat = Complex::new(&b, 1, vec![ModuleMap::zero(&b, 1, 1), ModuleMap::zero(&b, 1, 1)]).unwrap();
        let h1 = complex_homology(&flat, 1).unwrap();
        assert_eq!(h1.module.gens(), 1);
        assert!(h1.module.relations().is_zero());
    }

    fn linear_matrix(b: &BaseRef, rows: usize, cols: usize, coeffs: &[i64]) -> ModuleMap {
        let n = b.ring().nvars();
        let columns = (0..cols)
            .map(|j| {
                (0..rows)
                    .map(|i| {
                        let mut acc = Polynomial::zero(b.ring());
                        for v in 0..n {
                            let c = coeffs[((j * rows + i) * n + v) % coeffs.len()];
                            acc = acc.add(&Polynomial::variable(b.ring(), v).scale(&b.ring().field().from_i64(c)));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        ModuleMap::from_columns(b, rows, columns).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn syzygies_compose_to_zero(coeffs in prop::collection::vec(-2i64..3, 12), rows in 1usize..3, cols in 1usize..4) {
            let b = base(&["x", "y", "z"]);
            let m = linear_matrix(&b, rows, cols, &coeffs);
            let syz = syzygy_module(&m).unwrap();
            prop_assert!(m.compose(&syz).unwrap().is_zero());
        }

        #[test]
        fn schreyer_frame_agrees_with_iterated_syzygies(seed in any::<u64>(), gens in 1usize..3, extra in 0usize..3) {
            use rand::SeedableRng;
            let ring = Ring::new(Field::prime(32003).unwrap(), &["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
            let b = BaseRing::polynomial(&ring);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let m = crate::module::random::random_graded_module(&b, gens, gens + extra, 2, &mut rng).unwrap();
            let rel = m.relations().without_zero_columns();
            let shifts = graded_row_shifts(&rel).unwrap();
            let (fast, _) = schreyer_maps(&rel, shifts, 4).unwrap();
            let (slow, _) = iterated_maps(&rel, 4).unwrap();
            let cols = |maps: &[ModuleMap]| maps.iter().map(ModuleMap::cols).collect::<Vec<_>>();
            prop_assert_eq!(cols(&fast), cols(&slow));
            for k in 1..fast.len() {
                prop_assert!(fast[k - 1].compose(&fast[k]).unwrap().is_zero());
            }
            prop_assert!(fast.iter().all(|f| f.columns().iter().flatten().all(|e| e.is_zero() || !e.is_constant())));
        }

        #[test]
        fn resolutions_are_exact_and_rank_additive(coeffs in prop::collection::vec(-2i64..3, 18), rows in 1usize..3, cols in 1usize..4) {
            let b = base(&["x", "y", "z"]);
            let m = FPModule::new(linear_matrix(&b, rows, cols, &coeffs));
            let res = minimal_resolution(&m, None).unwrap();
            prop_assert_eq!(res.status, ResolutionStatus::Complete);
            prop_assert!(is_acyclic(&res.complex).unwrap());
            let c = &res.complex;
            let ranks: Vec<usize> = (1..=c.length()).map(|i| rank_of_map(c.map(i)).unwrap()).collect();
            for i in 1..=c.length() {
                let next = if i < c.length() { ranks[i] } else { 0 };
                prop_assert_eq!(ranks[i - 1] + next, c.ranks()[i]);
            }
        }

        #[test]
        fn tor_one_is_symmetric_in_generator_count(a in prop::collection::vec(-2i64..3, 6), c in prop::collection::vec(-2i64..3, 6)) {
            let b = base(&["x", "y"]);
            let m = FPModule::new(linear_matrix(&b, 1, 2, &a));
            let n = FPModule::new(linear_matrix(&b, 1, 1, &c));
            let mn = tor_modules(&m, &n, 1).unwrap().module;
            let nm = tor_modules(&n, &m, 1).unwrap().module;
            prop_assert_eq!(mn.minimal_generator_count(), nm.minimal_generator_count());
        }
    }
}
