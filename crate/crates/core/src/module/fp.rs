//! Finitely presented modules, syzygies, lifting and presentations of subquotients.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{FreeSpace, ModuleOrder, Vector, VectorBasis};
use crate::module::base::{BaseRef, BaseRing};
use crate::module::linalg::{at_origin, field_rank};
use crate::module::matrix::ModuleMap;
use crate::poly::{Monomial, Polynomial};

/// `coker(relations)` over the base ring: `gens` generators, one relation per column.
#[derive(Debug, Clone, PartialEq)]
pub struct FPModule {
    relations: ModuleMap,
}

impl FPModule {
    pub fn new(relations: ModuleMap) -> FPModule {
        FPModule { relations }
    }

    pub fn free(base: &BaseRef, rank: usize) -> FPModule {
        FPModule { relations: ModuleMap::zero(base, rank, 0) }
    }

    /// `R/I` for an ideal given by generators.
    pub fn cyclic(base: &BaseRef, ideal_gens: &[Polynomial]) -> Result<FPModule> {
        Ok(FPModule { relations: ModuleMap::from_columns(base, 1, ideal_gens.iter().map(|g| vec![g.clone()]).collect())? })
    }

    pub fn base(&self) -> &BaseRef {
        self.relations.base()
    }

    pub fn gens(&self) -> usize {
        self.relations.rows()
    }

    pub fn relations(&self) -> &ModuleMap {
        &self.relations
    }

    /// Whether every generator lies in the relation module.
    pub fn is_zero(&self) -> Result<bool> {
        if self.gens() == 0 {
            return Ok(true);
        }
        let basis = image_basis(&self.relations)?;
        let space = basis.space.clone();
        Ok((0..self.gens()).all(|i| basis.contains(&space.unit(i))))
    }

    /// Whether `v` (a combination of generators) is zero in the module.
    pub fn is_zero_element(&self, v: &[Polynomial]) -> Result<bool> {
        let basis = image_basis(&self.relations)?;
        Ok(basis.contains(&basis.space.from_column(v)))
    }

    /// Number of generators of `M ⊗ k` at the origin, the local minimal
    /// generator count. Zero when the origin is not on the support of the base.
    pub fn minimal_generator_count(&self) -> usize {
        if !self.base().origin_on_spectrum() {
            return 0;
        }
        let field = self.base().ring().field();
        self.gens() - field_rank(field, at_origin(&self.relations))
    }
}

impl fmt::Display for FPModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coker {} over {}", self.relations, self.base())
    }
}

fn space_for(base: &BaseRef, rank: usize) -> FreeSpace {
    FreeSpace::new(base.ring(), rank)
}

/// `q·e_i` for every quotient generator `q` and position `i < rank`.
fn quotient_vectors(base: &BaseRing, space: &FreeSpace, rank: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    for i in 0..rank {
        for q in base.quotient_gens() {
            out.push(space.scale_poly(&space.unit(i), q));
        }
    }
    out
}

/// Gröbner basis of `Im(map) + Q·R^rows` under position-over-term.
pub fn image_basis(map: &ModuleMap) -> Result<VectorBasis> {
    let space = space_for(map.base(), map.rows());
    let mut gens: Vec<Vector> = map.columns().iter().map(|c| space.from_column(c)).collect();
    gens.extend(quotient_vectors(map.base(), &space, map.rows()));
    VectorBasis::compute(&space, &gens)
}

/// Row shifts making every column of `map` homogeneous, normalized to a
/// minimum of zero. Zeros when the entries admit no such grading.
fn row_shifts(map: &ModuleMap) -> Vec<i64> {
    graded_row_shifts(map).unwrap_or_else(|| vec![0; map.rows()])
}

/// Row shifts making every column of `map` homogeneous, if there are any,
/// normalized to a minimum of zero.
pub fn graded_row_shifts(map: &ModuleMap) -> Option<Vec<i64>> {
    let n = map.rows();
    let mut shift: Vec<Option<i64>> = vec![None; n];
    let cols = map.columns();
    let consistent = (|| {
        for start in 0..n {
            if shift[start].is_some() {
                continue;
            }
            shift[start] = Some(0);
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                let si = shift[i].unwrap();
                for col in cols {
                    let Some(di) = col[i].total_degree() else { continue };
                    let target = di as i64 + si;
                    for (k, p) in col.iter().enumerate() {
                        let Some(dk) = p.total_degree() else { continue };
                        if !p.is_homogeneous() {
                            return false;
                        }
                        let sk = target - dk as i64;
                        match shift[k] {
                            None => {
                                shift[k] = Some(sk);
                                stack.push(k);
                            }
                            Some(old) if old != sk => return false,
                            _ => {}
                        }
                    }
                }
            }
        }
        true
    })();
    if !consistent {
        return None;
    }
    let shift: Vec<i64> = shift.into_iter().map(|s| s.unwrap_or(0)).collect();
    let low = shift.iter().copied().min().unwrap_or(0);
    Some(shift.into_iter().map(|s| s - low).collect())
}

/// Gröbner basis of the vectors `(A_j; e_j)` and `(q·e_i; 0)` in `R^{n+m}`
/// under a head-dominant weighted degree order; head positions are `0..n`.
/// Only the head part of the basis is completed; the second component holds
/// vectors with zero head part that generate all such vectors of the span.
fn augmented_basis(map: &ModuleMap, extra_head: &ModuleMap) -> Result<(VectorBasis, Vec<Vector>)> {
    let (n, m) = (map.rows(), map.cols());
    let shifts = row_shifts(map);
    let weights: Vec<u64> = shifts
        .iter()
        .map(|&s| s as u64)
        .chain((0..m).map(|j| map.column_degree(j, &shifts).max(0) as u64))
        .collect();
    let space = FreeSpace::with_order(map.base().ring(), n + m, ModuleOrder::HeadDegree { head: n }).with_weights(weights);
    let mut gens = Vec::with_capacity(m + extra_head.cols());
    for (j, c) in map.columns().iter().enumerate() {
        let mut col = c.clone();
        col.extend((0..m).map(|k| if k == j { Polynomial::one(map.base().ring()) } else { Polynomial::zero(map.base().ring()) }));
        gens.push(space.from_column(&col));
    }
    for c in extra_head.columns() {
        gens.push(space.from_column(c));
    }
    gens.extend(quotient_vectors(map.base(), &space, n));
    VectorBasis::compute_head(&space, &gens, n)
}

/// Generators of `{v : map(v) ∈ Im(target_rel) + Q·R^n}` as columns of length `map.cols()`.
pub fn kernel_generators(map: &ModuleMap, target_rel: &ModuleMap) -> Result<Vec<Vec<Polynomial>>> {
    let n = map.rows();
    let (basis, syzygies) = augmented_basis(map, target_rel)?;
    let mut out = Vec::new();
    for e in &syzygies {
        let tail = basis.space.slice_column(e, n..n + map.cols());
        if !tail.iter().all(|p| map.base().is_zero(p)) {
            out.push(tail.iter().map(|p| map.base().reduce(p)).collect());
        }
    }
    Ok(out)
}

/// `ψ` with `Im ψ = ker φ` over the base ring.
pub fn syzygy_module(map: &ModuleMap) -> Result<ModuleMap> {
    let empty = ModuleMap::zero(map.base(), map.rows(), 0);
    let cols = kernel_generators(map, &empty)?;
    ModuleMap::from_columns(map.base(), map.cols(), cols)
}

/// Coefficients `c` with `map · c ≡ v` modulo the quotient ideal, if any.
pub fn lift(map: &ModuleMap, v: &[Polynomial]) -> Result<Option<Vec<Polynomial>>> {
    if v.len() != map.rows() {
        return Err(Error::DimensionMismatch(format!("vector of length {} for {} rows", v.len(), map.rows())));
    }
    let empty = ModuleMap::zero(map.base(), map.rows(), 0);
    let (basis, _) = augmented_basis(map, &empty)?;
    let n = map.rows();
    let space = &basis.space;
    let field = space.ring.field();
    let mut w = space.from_column(v);
    while let Some((pos, m, c)) = w.lead().cloned() {
        if pos >= n {
            break;
        }
        let hit = basis.elements.iter().find(|e| {
            let (p, lm, _) = e.lead().unwrap();
            *p == pos && lm.divides(&m)
        });
        match hit {
            Some(e) => {
                let q = e.lead().unwrap().1.quotient_of(&m);
                w = space.add_scaled(&w, e, &q, &field.neg(&c));
            }
            None => return Ok(None),
        }
    }
    let tail = space.slice_column(&w, n..n + map.cols());
    Ok(Some(tail.iter().map(|p| map.base().reduce(&p.neg())).collect()))
}

/// Whether `v` lies in `Im(map) + Q·R^n`.
pub fn in_image(map: &ModuleMap, v: &[Polynomial]) -> Result<bool> {
    let basis = image_basis(map)?;
    Ok(basis.contains(&basis.space.from_column(v)))
}

/// Equality of submodules `Im a = Im b` by mutual membership.
pub fn same_image(a: &ModuleMap, b: &ModuleMap) -> Result<bool> {
    let ba = image_basis(a)?;
    let bb = image_basis(b)?;
    Ok(b.columns().iter().all(|c| ba.contains(&ba.space.from_column(c)))
        && a.columns().iter().all(|c| bb.contains(&bb.space.from_column(c))))
}

fn vector_degree(v: &[Polynomial], shifts: &[i64]) -> i64 {
    v.iter().zip(shifts).filter_map(|(p, s)| p.total_degree().map(|d| d as i64 + s)).max().unwrap_or(0)
}

/// Greedy minimal generators: candidates sorted by degree (stable), each kept
/// when it is not in the span of `ambient` and the previously kept ones.
/// Minimal for graded input. Homogeneous candidates of one degree are
/// decided together by linear algebra on normal forms.
pub fn minimal_generators(
    base: &BaseRef,
    rank: usize,
    candidates: &[Vec<Polynomial>],
    ambient: &[Vec<Polynomial>],
    shifts: &[i64],
) -> Result<Vec<usize>> {
    let weights = shifts.iter().map(|&s| s.max(0) as u64).collect();
    let space = FreeSpace::with_order(base.ring(), rank, ModuleOrder::HeadDegree { head: 0 }).with_weights(weights);
    let mut start: Vec<Vector> = ambient.iter().map(|c| space.from_column(c)).collect();
    start.extend(quotient_vectors(base, &space, rank));
    let mut basis = VectorBasis::compute(&space, &start)?;
    let vectors: Vec<Vector> = candidates.iter().map(|c| space.from_column(c)).collect();
    let homogeneous = vectors.iter().all(|v| {
        let d = space.sugar(v);
        v.terms.iter().all(|(p, m, _)| m.degree() + space.weight(*p) == d)
    });
    let mut order: Vec<usize> = (0..candidates.len()).collect();
    order.sort_by_key(|&k| vector_degree(&candidates[k], shifts));
    let mut kept = Vec::new();
    if homogeneous {
        let field = space.ring.field();
        let mut rest = &order[..];
        while let Some(&first) = rest.first() {
            let d = space.sugar(&vectors[first]);
            let len = rest.iter().take_while(|&&k| space.sugar(&vectors[k]) == d).count();
            let (batch, tail) = rest.split_at(len);
            rest = tail;
            // echelon rows of normal forms keyed by leading term
            let mut rows: HashMap<(usize, Monomial), Vector> = HashMap::new();
            let mut new = Vec::new();
            for &k in batch {
                let mut v = basis.reduce(&vectors[k]);
                while let Some((pos, m, c)) = v.lead().cloned() {
                    match rows.get(&(pos, m.clone())) {
                        Some(row) => v = space.add_scaled(&v, row, &Monomial::one(space.ring.nvars()), &field.neg(&c)),
                        None => break,
                    }
                }
                if let Some((pos, m, _)) = v.lead().cloned() {
                    rows.insert((pos, m), space.monic(&v));
                    new.push(vectors[k].clone());
                    kept.push(k);
                }
            }
            if !new.is_empty() && !rest.is_empty() {
                basis = basis.extend(&new)?;
            }
        }
    } else {
        for k in order {
            if !basis.contains(&vectors[k]) {
                basis = basis.extend(&[vectors[k].clone()])?;
                kept.push(k);
            }
        }
    }
    kept.sort_unstable();
    Ok(kept)
}

/// Result of pruning a presentation: the smaller module, the indices of the
/// surviving generators, and each old generator written in the new ones.
#[derive(Debug, Clone)]
pub struct Pruned {
    pub module: FPModule,
    pub kept: Vec<usize>,
    pub old_in_new: Vec<Vec<Polynomial>>,
}

/// Removes generators that a relation with a nonzero constant entry expresses
/// through the others. Pivot: first unit in row-major scan, skipping
/// `protected` rows. Zero relations are dropped.
pub fn prune(module: &FPModule, protected: &[usize]) -> Result<Pruned> {
    let base = module.base().clone();
    let ring = base.ring().clone();
    let field = ring.field();
    let rel = module.relations.reduced();
    let mut cols: Vec<Vec<Polynomial>> = rel.columns().to_vec();
    let mut alive: Vec<usize> = (0..module.gens()).collect();
    // old generator k as a combination of the current alive generators (indexed by position in `alive`)
    let mut images: Vec<Vec<Polynomial>> = (0..module.gens())
        .map(|k| (0..module.gens()).map(|i| if i == k { Polynomial::one(&ring) } else { Polynomial::zero(&ring) }).collect())
        .collect();
    loop {
        ring.limits().check_cancel()?;
        let mut pivot = None;
        'scan: for r in 0..alive.len() {
            if protected.contains(&alive[r]) {
                continue;
            }
            for (c, col) in cols.iter().enumerate() {
                let e = &col[r];
                if !e.is_zero() && e.is_constant() {
                    pivot = Some((r, c));
                    break 'scan;
                }
            }
        }
        let Some((r, c)) = pivot else { break };
        let pc = cols.remove(c);
        let u_inv = field.inv(&pc[r].constant_term());
        // e_r = -u^{-1} * sum_{i != r} pc[i] e_i
        let express: Vec<Polynomial> = pc.iter().map(|p| p.scale(&field.neg(&u_inv))).collect();
        for col in cols.iter_mut() {
            let a = col[r].clone();
            if !a.is_zero() {
                for i in 0..col.len() {
                    if i != r {
                        col[i] = base.reduce(&col[i].add(&a.mul(&express[i])));
                    }
                }
            }
            col.remove(r);
        }
        for img in images.iter_mut() {
            let a = img[r].clone();
            if !a.is_zero() {
                for i in 0..img.len() {
                    if i != r {
                        img[i] = base.reduce(&img[i].add(&a.mul(&express[i])));
                    }
                }
            }
            img.remove(r);
        }
        alive.remove(r);
    }
    cols.retain(|c| !c.iter().all(|p| p.is_zero()));
    let relations = ModuleMap::from_columns(&base, alive.len(), cols)?;
    Ok(Pruned { module: FPModule::new(relations), kept: alive, old_in_new: images })
}

/// Presentation of `{v ∈ R^m : f(v) ∈ Im(target_rel)} / (Im(image) + Im(src_rel))`.
/// `image` and `src_rel` must map into the kernel.
#[derive(Debug, Clone)]
pub struct Subquotient {
    pub module: FPModule,
    /// Generator `k` of the module as a vector of the source `R^m`.
    pub embedding: ModuleMap,
}

pub fn subquotient(f: &ModuleMap, target_rel: &ModuleMap, image: &ModuleMap, src_rel: &ModuleMap) -> Result<Subquotient> {
    let base = f.base().clone();
    let m = f.cols();
    let kernel = kernel_generators(f, target_rel)?;
    let mut ambient: Vec<Vec<Polynomial>> = image.columns().to_vec();
    ambient.extend(src_rel.columns().iter().cloned());
    let shifts = vec![0; m];
    let kept = minimal_generators(&base, m, &kernel, &ambient, &shifts)?;
    let kappa: Vec<Vec<Polynomial>> = kept.iter().map(|&k| kernel[k].clone()).collect();
    let r = kappa.len();
    if r == 0 {
        return Ok(Subquotient { module: FPModule::free(&base, 0), embedding: ModuleMap::zero(&base, m, 0) });
    }
    let mut all = kappa.clone();
    all.extend(ambient);
    let stacked = ModuleMap::from_columns(&base, m, all)?;
    let syz = syzygy_module(&stacked)?;
    let rels: Vec<Vec<Polynomial>> = syz.columns().iter().map(|c| c[..r].to_vec()).collect();
    let module = FPModule::new(ModuleMap::from_columns(&base, r, rels)?);
    let pruned = prune(&module, &[])?;
    let embedding = ModuleMap::from_columns(&base, m, pruned.kept.iter().map(|&k| kappa[k].clone()).collect())?;
    Ok(Subquotient { module: pruned.module, embedding })
}

/// Unit vector helper.
pub fn unit_column(base: &BaseRef, rank: usize, i: usize) -> Vec<Polynomial> {
    (0..rank).map(|k| if k == i { Polynomial::one(base.ring()) } else { Polynomial::zero(base.ring()) }).collect()
}

/// Ensures two modules share a base.
pub fn ensure_same_base(a: &BaseRef, b: &BaseRef) -> Result<()> {
    if BaseRing::same(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!("{a} vs {b}")))
    }
}

/// `ann(M) = ∩_i (Im A : e_i)` as an ideal of the ambient polynomial ring
/// (containing the quotient ideal).
pub fn annihilator(module: &FPModule) -> Result<crate::groebner::Ideal> {
    use crate::groebner::{intersection, Ideal};
    let base = module.base();
    let ring = base.ring();
    let mut acc = Ideal::unit(ring);
    for i in 0..module.gens() {
        let e = ModuleMap::from_columns(base, module.gens(), vec![unit_column(base, module.gens(), i)])?;
        let mut gens: Vec<Polynomial> = kernel_generators(&e, module.relations())?.into_iter().map(|c| c[0].clone()).collect();
        gens.extend(base.quotient_gens().iter().cloned());
        acc = intersection(&acc, &Ideal::new(ring, gens)?)?;
    }
    Ok(acc)
}
