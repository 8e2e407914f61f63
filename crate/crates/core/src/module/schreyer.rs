//! Free resolutions by Schreyer's construction: the syzygies of the S-pairs
//! of a Gröbner basis form a Gröbner basis for the induced order, so every
//! level after the first needs only reductions, never a completion.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groebner::{FreeSpace, ModuleOrder, Term, Vector, VectorBasis};
use crate::module::base::BaseRef;
use crate::module::matrix::ModuleMap;
use crate::poly::{Coeff, Monomial, Polynomial};

/// The induced order on one free module of the frame.
struct Frame {
    /// Position in `F_0` reached by following leading terms down.
    root: Vec<usize>,
    /// Product of the leading monomials along that path.
    total: Vec<Monomial>,
    /// Positions at levels `1..k` along the path, lowest first.
    path: Vec<Vec<usize>>,
}

struct Levels<'a> {
    space0: &'a FreeSpace,
    frames: Vec<Frame>,
}

impl Levels<'_> {
    /// Compares two terms of `F_level`.
    fn compare(&self, level: usize, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        if level == 0 {
            return self.space0.compare(a.0, a.1, b.0, b.1);
        }
        let f = &self.frames[level - 1];
        let (pa, pb) = (a.0, b.0);
        self.space0
            .compare(f.root[pa], &a.1.mul(&f.total[pa]), f.root[pb], &b.1.mul(&f.total[pb]))
            .then_with(|| f.path[pa].cmp(&f.path[pb]))
            .then_with(|| pa.cmp(&pb))
    }

    fn normalize(&self, level: usize, mut terms: Vec<Term>) -> Vector {
        let field = self.space0.ring.field();
        terms.sort_by(|x, y| self.compare(level, (y.0, &y.1), (x.0, &x.1)));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.0 == t.0 && last.1 == t.1 => last.2 = field.add(&last.2, &t.2),
                _ => out.push(t),
            }
        }
        out.retain(|t| !field.is_zero(&t.2));
        Vector { terms: out }
    }

    /// `a + c·m·b` in `F_level`.
    fn add_scaled(&self, level: usize, a: &Vector, b: &Vector, m: &Monomial, c: &Coeff) -> Vector {
        let field = self.space0.ring.field();
        let a = &a.terms;
        let mut out = Vec::with_capacity(a.len() + b.terms.len());
        let mut i = 0;
        for (pb, mb, cb) in &b.terms {
            let sm = mb.mul(m);
            let sc = field.mul(cb, c);
            while i < a.len() && self.compare(level, (a[i].0, &a[i].1), (*pb, &sm)) == Ordering::Greater {
                out.push(a[i].clone());
                i += 1;
            }
            if i < a.len() && a[i].0 == *pb && a[i].1 == sm {
                let s = field.add(&a[i].2, &sc);
                if !field.is_zero(&s) {
                    out.push((*pb, sm, s));
                }
                i += 1;
            } else if !field.is_zero(&sc) {
                out.push((*pb, sm, sc));
            }
        }
        out.extend_from_slice(&a[i..]);
        Vector { terms: out }
    }

    /// Records the leading terms of `basis` (elements of `F_level`) as the
    /// frame of `F_{level+1}`.
    fn push_frame(&mut self, level: usize, basis: &[Vector]) {
        let mut frame = Frame { root: Vec::new(), total: Vec::new(), path: Vec::new() };
        for g in basis {
            let (p, m, _) = g.lead().expect("nonzero basis element");
            if level == 0 {
                frame.root.push(*p);
                frame.total.push(m.clone());
                frame.path.push(Vec::new());
            } else {
                let below = &self.frames[level - 1];
                frame.root.push(below.root[*p]);
                frame.total.push(m.mul(&below.total[*p]));
                let mut path = below.path[*p].clone();
                path.push(*p);
                frame.path.push(path);
            }
        }
        self.frames.push(frame);
    }
}

/// Orders a basis so that, within each leading position, the exponent of the
/// first variable present in the leading monomials never decreases. The
/// syzygy leads then avoid that variable, which bounds the length.
fn arrange(basis: &mut [Vector], nvars: usize) {
    let var = (0..nvars).find(|&v| basis.iter().any(|g| g.lead().unwrap().1.exponent(v) > 0));
    basis.sort_by_key(|g| {
        let (p, m, _) = g.lead().unwrap();
        (*p, var.map(|v| m.exponent(v)).unwrap_or(0))
    });
}

fn to_columns(base: &BaseRef, rank: usize, basis: &[Vector]) -> Result<ModuleMap> {
    let ring = base.ring();
    let cols = basis
        .iter()
        .map(|v| {
            let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
            for (p, m, c) in &v.terms {
                buckets[*p].push((m.clone(), c.clone()));
            }
            buckets.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect()
        })
        .collect();
    ModuleMap::from_columns(base, rank, cols)
}

/// Syzygies of the S-pairs of `basis` (a Gröbner basis in `F_level`), as
/// elements of `F_{level+1}`.
fn pair_syzygies(levels: &Levels, level: usize, basis: &[Vector]) -> Result<Vec<Vector>> {
    let field = levels.space0.ring.field();
    let mut by_pos: HashMap<usize, Vec<usize>> = HashMap::new();
    for (k, g) in basis.iter().enumerate() {
        by_pos.entry(g.lead().unwrap().0).or_default().push(k);
    }
    let mut out = Vec::new();
    for j in 0..basis.len() {
        let (pj, lj, _) = basis[j].lead().unwrap();
        // minimal generators of the monomial ideal (lcm(lt_i, lt_j) / lt_j : i < j)
        let cands: Vec<(usize, Monomial)> = by_pos[pj]
            .iter()
            .filter(|&&i| i < j)
            .map(|&i| (i, lj.quotient_of(&basis[i].lead().unwrap().1.lcm(lj))))
            .collect();
        let chosen: Vec<&(usize, Monomial)> = cands
            .iter()
            .enumerate()
            .filter(|(a, (_, m))| {
                !cands.iter().enumerate().any(|(b, (_, o))| b != *a && o.divides(m) && (o != m || b < *a))
            })
            .map(|(_, c)| c)
            .collect();
        for (i, mji) in chosen {
            levels.space0.ring.limits().check_cancel()?;
            let li = &basis[*i].lead().unwrap().1;
            let mij = li.quotient_of(&mji.mul(lj));
            let one = field.one();
            let mut s = levels.add_scaled(level, &Vector::zero(), &basis[*i], &mij, &one);
            s = levels.add_scaled(level, &s, &basis[j], mji, &field.neg(&one));
            let mut terms: Vec<Term> = vec![(j, mji.clone(), one.clone()), (*i, mij, field.neg(&one))];
            while let Some((p, m, c)) = s.lead().cloned() {
                let hit = by_pos
                    .get(&p)
                    .and_then(|ks| ks.iter().copied().find(|&k| basis[k].lead().unwrap().1.divides(&m)));
                let Some(k) = hit else {
                    return Err(Error::CrossCheck("S-pair did not reduce to zero in a Schreyer frame".into()));
                };
                let q = basis[k].lead().unwrap().1.quotient_of(&m);
                s = levels.add_scaled(level, &s, &basis[k], &q, &field.neg(&c));
                terms.push((k, q, c));
            }
            out.push(levels.normalize(level + 1, terms));
        }
    }
    Ok(out)
}

/// A free resolution of `coker(relations)` over a polynomial ring, usually
/// not minimal. `weights` are the degrees of the generators, used only to
/// pick the order on `F_0`.
pub fn schreyer_resolution(relations: &ModuleMap, weights: Vec<u64>) -> Result<Vec<ModuleMap>> {
    let base = relations.base().clone();
    let ring = base.ring().clone();
    let nvars = ring.nvars();
    let space0 = FreeSpace::with_order(&ring, relations.rows(), ModuleOrder::HeadDegree { head: 0 }).with_weights(weights);
    let gens: Vec<Vector> = relations.columns().iter().map(|c| space0.from_column(c)).collect();
    let mut basis = VectorBasis::compute(&space0, &gens)?.elements;
    arrange(&mut basis, nvars);
    let mut levels = Levels { space0: &space0, frames: Vec::new() };
    let mut maps = Vec::new();
    let mut rank = relations.rows();
    let mut level = 0;
    while !basis.is_empty() {
        maps.push(to_columns(&base, rank, &basis)?);
        levels.push_frame(level, &basis);
        let mut next = pair_syzygies(&levels, level, &basis)?;
        rank = basis.len();
        level += 1;
        // the arrangement renumbers F_{level+1}; no frame refers to it yet
        arrange(&mut next, nvars);
        basis = next;
    }
    Ok(maps)
}
