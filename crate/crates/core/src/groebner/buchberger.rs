//! Buchberger's algorithm over free modules with the normal selection
//! strategy and Gebauer–Möller pair elimination.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::groebner::vector::{FreeSpace, Vector};
use crate::poly::Monomial;

/// Reduced Gröbner basis of a submodule of a free module: monic elements
/// sorted ascending by leading term.
#[derive(Debug, Clone)]
pub struct VectorBasis {
    pub space: FreeSpace,
    pub elements: Vec<Vector>,
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

struct Lead {
    pos: usize,
    mono: Monomial,
    mask: u64,
}

struct Engine<'a> {
    space: &'a FreeSpace,
    polys: Vec<Vector>,
    leads: Vec<Lead>,
    sugars: Vec<u64>,
    live: Vec<bool>,
    pairs: Vec<Pair>,
    product_criterion: bool,
    /// Reduced vectors leading at or beyond this position are set aside
    /// instead of joining the basis.
    head: usize,
    set_aside: Vec<Vector>,
}

fn lead_of(v: &Vector) -> Lead {
    let (pos, mono, _) = v.lead().expect("nonzero vector");
    Lead { pos: *pos, mono: mono.clone(), mask: mono.support_mask() }
}

impl<'a> Engine<'a> {
    fn new(space: &'a FreeSpace) -> Self {
        Engine {
            space,
            polys: Vec::new(),
            leads: Vec::new(),
            sugars: Vec::new(),
            live: Vec::new(),
            pairs: Vec::new(),
            product_criterion: space.rank == 1,
            head: usize::MAX,
            set_aside: Vec::new(),
        }
    }

    fn check_limits(&self) -> Result<()> {
        let limits = self.space.ring.limits();
        limits.check_cancel()?;
        let size = self.live.iter().filter(|&&l| l).count();
        if size > limits.max_basis {
            return Err(Error::ResourceCap(format!("Gröbner basis exceeded {} elements", limits.max_basis)));
        }
        Ok(())
    }

    /// Top-reduces `v` against the live basis.
    fn top_reduce(&self, mut v: Vector) -> Vector {
        let field = self.space.ring.field();
        loop {
            let Some((pos, m, c)) = v.lead().cloned() else { return v };
            let mask = m.support_mask();
            let hit = (0..self.polys.len()).find(|&k| {
                let l = &self.leads[k];
                self.live[k] && l.pos == pos && l.mask & !mask == 0 && l.mono.divides(&m)
            });
            match hit {
                Some(k) => {
                    let q = self.leads[k].mono.quotient_of(&m);
                    v = self.space.add_scaled(&v, &self.polys[k], &q, &field.neg(&c));
                }
                None => return v,
            }
        }
    }

    /// Inserts a new basis element (already top-reduced, nonzero, monic) and
    /// updates the pair set following Gebauer–Möller.
    fn insert(&mut self, h: Vector, sugar: u64) {
        let hl = lead_of(&h);
        let hidx = self.polys.len();
        let disjoint = |a: &Monomial, b: &Monomial| self.product_criterion && a.is_coprime(b);

        // candidate pairs (h, g) at the same position
        let cands: Vec<(usize, Monomial, bool)> = (0..hidx)
            .filter(|&g| self.live[g] && self.leads[g].pos == hl.pos)
            .map(|g| {
                let lcm = hl.mono.lcm(&self.leads[g].mono);
                let dis = disjoint(&hl.mono, &self.leads[g].mono);
                (g, lcm, dis)
            })
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (idx, (g, lcm, dis)) in cands.iter().enumerate() {
            if *dis {
                kept.push((*g, lcm.clone(), true));
                continue;
            }
            let dominated_later = cands[idx + 1..].iter().any(|(_, l2, _)| l2.divides(lcm));
            let dominated_kept = kept.iter().any(|(_, l2, _)| l2.divides(lcm));
            if !dominated_later && !dominated_kept {
                kept.push((*g, lcm.clone(), false));
            }
        }
        // drop old pairs whose lcm is strictly divisible through h
        self.pairs.retain(|p| {
            if self.leads[p.i].pos != hl.pos {
                return true;
            }
            if !hl.mono.divides(&p.lcm) {
                return true;
            }
            let li = hl.mono.lcm(&self.leads[p.i].mono);
            let lj = hl.mono.lcm(&self.leads[p.j].mono);
            li == p.lcm || lj == p.lcm
        });

        for (g, lcm, dis) in kept {
            if !dis {
                let sugar = (self.sugars[g] + lcm.degree() - self.leads[g].mono.degree())
                    .max(sugar + lcm.degree() - hl.mono.degree());
                self.pairs.push(Pair { i: g, j: hidx, lcm, sugar });
            }
        }

        for g in 0..hidx {
            if self.live[g] && self.leads[g].pos == hl.pos && hl.mono.divides(&self.leads[g].mono) {
                self.live[g] = false;
            }
        }
        self.polys.push(h);
        self.leads.push(hl);
        self.sugars.push(sugar);
        self.live.push(true);
    }

    fn spoly(&self, p: &Pair) -> Vector {
        let field = self.space.ring.field();
        let (a, b) = (&self.polys[p.i], &self.polys[p.j]);
        let ma = self.leads[p.i].mono.quotient_of(&p.lcm);
        let mb = self.leads[p.j].mono.quotient_of(&p.lcm);
        let sa = self.space.add_scaled(&Vector::zero(), a, &ma, &field.one());
        self.space.add_scaled(&sa, b, &mb, &field.neg(&field.one()))
    }

    fn next_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let space = self.space;
        let leads = &self.leads;
        let best = (0..self.pairs.len())
            .min_by(|&x, &y| {
                let (p, q) = (&self.pairs[x], &self.pairs[y]);
                p.sugar
                    .cmp(&q.sugar)
                    .then_with(|| space.compare(leads[p.i].pos, &p.lcm, leads[q.i].pos, &q.lcm))
                    .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
            })
            .unwrap();
        Some(self.pairs.swap_remove(best))
    }

    fn add_generator(&mut self, v: Vector, sugar: u64) -> Result<()> {
        let r = self.top_reduce(v);
        if r.lead_position().is_some_and(|p| p >= self.head) {
            self.set_aside.push(self.space.monic(&r));
        } else if !r.is_zero() {
            let r = self.space.monic(&r);
            self.insert(r, sugar);
            self.check_limits()?;
        }
        Ok(())
    }

    fn run(&mut self) -> Result<()> {
        let max_degree = self.space.ring.limits().max_degree;
        while let Some(p) = self.next_pair() {
            if p.lcm.degree() > max_degree {
                return Err(Error::ResourceCap(format!("S-pair degree exceeded {max_degree}")));
            }
            self.check_limits()?;
            let s = self.spoly(&p);
            self.add_generator(s, p.sugar)?;
        }
        Ok(())
    }

    fn finish(self) -> Vec<Vector> {
        let space = self.space;
        let mut basis: Vec<Vector> =
            self.polys.into_iter().zip(self.live).filter(|(_, l)| *l).map(|(p, _)| p).collect();
        basis.sort_by(|a, b| {
            let (pa, ma, _) = a.lead().unwrap();
            let (pb, mb, _) = b.lead().unwrap();
            space.compare(*pa, ma, *pb, mb)
        });
        let mut reduced = Vec::with_capacity(basis.len());
        for k in 0..basis.len() {
            let others: Vec<&Vector> = basis.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, v)| v).collect();
            let r = reduce_full(space, &basis[k], &others);
            reduced.push(space.monic(&r));
        }
        reduced
    }
}

/// Full reduction of `v` against `divisors` (any order of leading terms).
pub(crate) fn reduce_full(space: &FreeSpace, v: &Vector, divisors: &[&Vector]) -> Vector {
    let field = space.ring.field();
    let leads: Vec<(usize, &Monomial, u64, &crate::poly::Coeff)> = divisors
        .iter()
        .filter_map(|d| d.lead().map(|(p, m, c)| (*p, m, m.support_mask(), c)))
        .collect();
    let mut v = v.clone();
    let mut k = 0;
    while k < v.terms.len() {
        let (pos, m, c) = &v.terms[k];
        let mask = m.support_mask();
        let hit = leads.iter().position(|(p, lm, lmask, _)| p == pos && lmask & !mask == 0 && lm.divides(m));
        match hit {
            Some(d) => {
                let (_, lm, _, lc) = leads[d];
                let q = lm.quotient_of(m);
                let coef = field.neg(&field.div(c, lc));
                v = space.add_scaled(&v, divisors[d], &q, &coef);
            }
            None => k += 1,
        }
    }
    v
}

impl VectorBasis {
    /// Reduced Gröbner basis of the submodule generated by `gens`.
    pub fn compute(space: &FreeSpace, gens: &[Vector]) -> Result<VectorBasis> {
        let mut engine = Engine::new(space);
        let mut sorted: Vec<&Vector> = gens.iter().filter(|v| !v.is_zero()).collect();
        sorted.sort_by(|a, b| {
            let (pa, ma, _) = a.lead().unwrap();
            let (pb, mb, _) = b.lead().unwrap();
            (space.sugar(a), ma.degree()).cmp(&(space.sugar(b), mb.degree())).then_with(|| space.compare(*pa, ma, *pb, mb))
        });
        for g in sorted {
            engine.add_generator(g.clone(), space.sugar(g))?;
        }
        engine.run()?;
        Ok(VectorBasis { space: space.clone(), elements: engine.finish() })
    }

    /// Gröbner basis of the part of the submodule generated by `gens` that
    /// leads below position `head`, for an order in which those positions
    /// dominate. Also returns the reductions that left the head block; they
    /// generate the intersection of the submodule with the remaining positions.
    pub fn compute_head(space: &FreeSpace, gens: &[Vector], head: usize) -> Result<(VectorBasis, Vec<Vector>)> {
        let mut engine = Engine::new(space);
        engine.head = head;
        let mut sorted: Vec<&Vector> = gens.iter().filter(|v| !v.is_zero()).collect();
        sorted.sort_by(|a, b| {
            let (pa, ma, _) = a.lead().unwrap();
            let (pb, mb, _) = b.lead().unwrap();
            (space.sugar(a), ma.degree()).cmp(&(space.sugar(b), mb.degree())).then_with(|| space.compare(*pa, ma, *pb, mb))
        });
        for g in sorted {
            engine.add_generator(g.clone(), space.sugar(g))?;
        }
        engine.run()?;
        let set_aside = std::mem::take(&mut engine.set_aside);
        Ok((VectorBasis { space: space.clone(), elements: engine.finish() }, set_aside))
    }

    /// Gröbner basis of the submodule generated by this basis and `new`.
    /// Pairs among the existing elements are not revisited.
    pub fn extend(&self, new: &[Vector]) -> Result<VectorBasis> {
        let mut engine = Engine::new(&self.space);
        for e in &self.elements {
            engine.polys.push(e.clone());
            engine.leads.push(lead_of(e));
            engine.sugars.push(self.space.sugar(e));
            engine.live.push(true);
        }
        for v in new {
            engine.add_generator(v.clone(), self.space.sugar(v))?;
        }
        engine.run()?;
        Ok(VectorBasis { space: self.space.clone(), elements: engine.finish() })
    }

    /// Normal form of `v`.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let refs: Vec<&Vector> = self.elements.iter().collect();
        reduce_full(&self.space, v, &refs)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        let field = self.space.ring.field();
        let mut v = v.clone();
        loop {
            let Some((pos, m, c)) = v.lead().cloned() else { return true };
            let hit = self.elements.iter().find(|e| {
                let (p, lm, _) = e.lead().unwrap();
                *p == pos && lm.divides(&m)
            });
            match hit {
                Some(e) => {
                    let q = e.lead().unwrap().1.quotient_of(&m);
                    v = self.space.add_scaled(&v, e, &q, &field.neg(&c));
                }
                None => return false,
            }
        }
    }

    pub fn is_unit_module(&self) -> bool {
        self.elements.iter().any(|e| e.lead().map(|(_, m, _)| m.is_one()).unwrap_or(false))
    }

    /// Compares leading terms of two vectors of this space.
    pub fn cmp_leads(&self, a: &Vector, b: &Vector) -> Ordering {
        match (a.lead(), b.lead()) {
            (Some((pa, ma, _)), Some((pb, mb, _))) => self.space.compare(*pa, ma, *pb, mb),
            (None, None) => Ordering::Equal,
            (None, _) => Ordering::Less,
            (_, None) => Ordering::Greater,
        }
    }
}
