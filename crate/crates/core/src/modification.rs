//! Partial algebra modifications of a module with respect to a parameter
//! sequence, truncated in degree and step count.

use crate::checks::regular::{colon_witness, nakayama_check, quotient_presentation, witness_identity_holds, ColonWitness};
use crate::error::{Error, Result};
use crate::module::{in_image, prune, FPModule, ModuleMap};
use crate::poly::Polynomial;

/// A relation `x_{i+1}·t_{i+1} = Σ_{j≤i} x_j·t_j` in `M` with
/// `t_{i+1} ∉ (x_1..x_i)M`.
pub type BadRelation = ColonWitness;

/// First bad relation, scanning positions in order.
pub fn find_bad_relation(m: &FPModule, params: &[Polynomial]) -> Result<Option<BadRelation>> {
    for i in 0..params.len() {
        if let Some(w) = colon_witness(m, params, i)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Exponent vectors of monomials in `vars` variables of degree `≤ n`,
/// ordered by degree, then lexicographically descending.
pub fn truncated_monomials(vars: usize, n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for d in 0..=n {
        let mut level = Vec::new();
        fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if i == cur.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                go(i + 1, left - e, cur, out);
            }
        }
        go(0, d, &mut vec![0; vars], &mut level);
        out.extend(level);
    }
    out
}

#[derive(Debug, Clone)]
pub struct Modification {
    pub module: FPModule,
    /// Generator `(μ, g)` sits at index `position(μ)·gens(M) + g`.
    pub t_monomials: Vec<Vec<u32>>,
    /// Column `k`: the image of M's generator `k`.
    pub structure_map: ModuleMap,
}

impl Modification {
    pub fn generator(&self, mu: &[u32], g: usize, gens: usize) -> Option<usize> {
        self.t_monomials.iter().position(|t| t == mu).map(|k| k * gens + g)
    }
}

/// `M′ = M[T_1..T_i]_{≤n}` modulo `μ·(t_{i+1} − Σ x_j T_j·e_0)` for every
/// `T`-monomial `μ` of degree `≤ n−1`, where generator `e_0` of `M` plays
/// the role of `1`.
pub fn partial_modification(m: &FPModule, params: &[Polynomial], rel: &BadRelation, n: u32) -> Result<Modification> {
    if n == 0 {
        return Err(Error::InvalidArgument("degree bound must be at least 1".into()));
    }
    if rel.index >= params.len() || !witness_identity_holds(m, params, rel)? {
        return Err(Error::StaleRelation(format!("relation at position {} does not hold in M", rel.index)));
    }
    let base = m.base().clone();
    let ring = base.ring().clone();
    let gens = m.gens();
    let i = rel.index;
    let monos = truncated_monomials(i, n);
    let total = monos.len() * gens;
    let pos = |mu: &[u32]| monos.iter().position(|t| t == mu).expect("monomial within the truncation");
    let zero = || vec![Polynomial::zero(&ring); total];
    let mut cols = Vec::new();
    for k in 0..monos.len() {
        for r in m.relations().columns() {
            let mut c = zero();
            c[k * gens..(k + 1) * gens].clone_from_slice(r);
            cols.push(c);
        }
    }
    let head = rel.head();
    for (k, mu) in monos.iter().enumerate() {
        if mu.iter().sum::<u32>() >= n {
            continue;
        }
        let mut c = zero();
        c[k * gens..(k + 1) * gens].clone_from_slice(head);
        for (j, x) in params[..i].iter().enumerate() {
            let mut up = mu.clone();
            up[j] += 1;
            let at = pos(&up) * gens;
            c[at] = c[at].sub(x);
        }
        cols.push(c);
    }
    let module = FPModule::new(ModuleMap::from_columns(&base, total, cols)?);
    let structure_map = ModuleMap::from_columns(&base, total, (0..gens).map(|g| {
        let mut c = zero();
        c[g] = Polynomial::one(&ring);
        c
    }).collect())?;
    Ok(Modification { module, t_monomials: monos, structure_map })
}

/// Whether `t_{i+1} − Σ x_j T_j·e_0` vanishes in the modified module.
pub fn trivialized(modification: &Modification, m_gens: usize, params: &[Polynomial], rel: &BadRelation) -> Result<bool> {
    let mut v = modification.structure_map.apply(rel.head());
    let i = rel.index;
    for (j, x) in params[..i].iter().enumerate() {
        let mut mu = vec![0; i];
        mu[j] = 1;
        let at = modification.generator(&mu, 0, m_gens).expect("degree-one monomials are present");
        v[at] = v[at].sub(x);
    }
    modification.module.is_zero_element(&v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModificationStatus {
    SequenceRegularAtTruncation,
    StepCapReached,
    /// The module no longer satisfies `M ≠ (x)M`.
    Degenerated,
}

impl ModificationStatus {
    pub fn name(&self) -> &'static str {
        match self {
            ModificationStatus::SequenceRegularAtTruncation => "sequence-regular-at-truncation",
            ModificationStatus::StepCapReached => "step-cap-reached",
            ModificationStatus::Degenerated => "degenerated",
        }
    }
}

#[derive(Debug, Clone)]
pub struct AppliedStep {
    pub relation: BadRelation,
    /// Generators of the modified module before pruning.
    pub unpruned_gens: usize,
    /// Generators of the module the relation was found in.
    pub gens_before: usize,
    /// Image of `t_{i+1}` in the current module.
    pub witness_image: Vec<Polynomial>,
}

#[derive(Debug, Clone)]
pub struct ModificationState {
    pub module: FPModule,
    pub steps: usize,
    pub degree_bound: u32,
    pub history: Vec<AppliedStep>,
    pub nakayama: bool,
    pub status: ModificationStatus,
}

impl ModificationState {
    /// Each recorded witness maps into `(x_1..x_i)` times the current module.
    pub fn replay(&self, params: &[Polynomial]) -> Result<bool> {
        for step in &self.history {
            let below = quotient_presentation(&self.module, &params[..step.relation.index])?;
            if !in_image(&below, &step.witness_image)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn modification_run(m: &FPModule, params: &[Polynomial], n: u32, step_cap: usize) -> Result<ModificationState> {
    for x in params {
        x.ensure_ring(m.base().ring())?;
    }
    let mut current = m.clone();
    let mut history: Vec<AppliedStep> = Vec::new();
    let mut capped = false;
    loop {
        current.base().ring().limits().check_cancel()?;
        let Some(rel) = find_bad_relation(&current, params)? else { break };
        if history.len() == step_cap {
            capped = true;
            break;
        }
        let gens_before = current.gens();
        let modified = partial_modification(&current, params, &rel, n)?;
        if !trivialized(&modified, gens_before, params, &rel)? {
            return Err(Error::CrossCheck("modification did not trivialize its relation".into()));
        }
        let pruned = prune(&modified.module, &[0])?;
        // structure map into the pruned module, composed with the unpruned one
        let forward = |v: &[Polynomial]| -> Vec<Polynomial> {
            let lifted = modified.structure_map.apply(v);
            let mut out = vec![Polynomial::zero(current.base().ring()); pruned.kept.len()];
            for (k, c) in lifted.iter().enumerate() {
                if !c.is_zero() {
                    for (o, w) in out.iter_mut().zip(&pruned.old_in_new[k]) {
                        *o = current.base().reduce(&o.add(&c.mul(w)));
                    }
                }
            }
            out
        };
        for step in history.iter_mut() {
            step.witness_image = forward(&step.witness_image);
        }
        let witness_image = forward(rel.head());
        history.push(AppliedStep { relation: rel, unpruned_gens: modified.module.gens(), gens_before, witness_image });
        current = pruned.module;
    }
    let nakayama = nakayama_check(&current, params)?;
    let status = if !nakayama {
        ModificationStatus::Degenerated
    } else if capped {
        ModificationStatus::StepCapReached
    } else {
        ModificationStatus::SequenceRegularAtTruncation
    };
    Ok(ModificationState { module: current, steps: history.len(), degree_bound: n, history, nakayama, status })
}
