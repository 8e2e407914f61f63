//! Verb table, argument validation and dispatch to the checkers.

use std::collections::BTreeMap;

use serde_json::{json, Value};
use summand_core::checks::{
    as_module, be_acyclicity_check, depth_and_cm_check, regular_sequence_check, replay_split, split_check,
    syzygy_bound_check, trace_splitting, witness_identity_holds, ColonWitness, SplitReport,
};
use summand_core::frobenius::{
    fedder_f_pure, hypersurface_singular_at_origin, kunz_check, twisted_split_check, twisted_split_search,
    FrobeniusContext, FrobeniusWitness, TwistedReport, DEFAULT_MAX_ITERATE,
};
use summand_core::groebner::groebner_basis;
use summand_core::modification::modification_run;
use summand_core::module::{minimal_resolution, BaseRing, ModuleMap, ResolutionStatus};
use summand_core::poly::parse_polynomial;
use summand_core::symbolic::{containment_check, symbolic_power, Separator};
use summand_core::{Ideal, MonomialOrder, Polynomial};

use crate::error::{CliError, CliResult};
use crate::workspace::Workspace;

pub struct VerbSpec {
    pub name: &'static str,
    pub required: &'static [&'static str],
    pub optional: &'static [&'static str],
}

pub const VERBS: &[VerbSpec] = &[
    VerbSpec { name: "gb", required: &["ideal"], optional: &[] },
    VerbSpec { name: "resolve", required: &["module"], optional: &["ring", "cap"] },
    VerbSpec { name: "betti", required: &["module"], optional: &["ring", "cap"] },
    VerbSpec { name: "be-check", required: &["complex"], optional: &["domain"] },
    VerbSpec { name: "syzygy-bounds", required: &["module"], optional: &[] },
    VerbSpec { name: "split", required: &["extension"], optional: &[] },
    VerbSpec { name: "trace-split", required: &["extension"], optional: &[] },
    VerbSpec { name: "cm-check", required: &["module"], optional: &[] },
    VerbSpec { name: "regseq", required: &["module", "sequence"], optional: &[] },
    VerbSpec { name: "sympow", required: &["ideal", "n"], optional: &["separator"] },
    VerbSpec { name: "containment", required: &["ideal", "n"], optional: &["separator"] },
    VerbSpec { name: "fedder", required: &["ideal"], optional: &[] },
    VerbSpec { name: "twisted-split", required: &["ideal", "element"], optional: &["e", "e-max"] },
    VerbSpec { name: "kunz", required: &["ideal"], optional: &[] },
    VerbSpec { name: "modify", required: &["module", "sequence"], optional: &["degree"] },
];

pub const DEFAULT_MODIFY_DEGREE: u32 = 2;
pub const DEFAULT_STEP_CAP: usize = 4;

/// Process-wide settings from the command line.
#[derive(Debug, Clone, Default)]
pub struct Settings {
    /// Step cap for `modify`.
    pub cap_steps: Option<usize>,
    /// Order used by `gb` in place of the ring's own.
    pub order: Option<MonomialOrder>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub verdict: String,
    pub result: Value,
}

pub fn spec(verb: &str) -> Option<&'static VerbSpec> {
    VERBS.iter().find(|v| v.name == verb)
}

fn kind_of_arg(key: &str) -> Option<&'static str> {
    match key {
        "ideal" => Some("ideal"),
        "module" => Some("module"),
        "extension" => Some("extension"),
        "complex" => Some("complex"),
        "sequence" => Some("sequence"),
        "ring" => Some("ring"),
        _ => None,
    }
}

/// Checks the verb, the argument names and that referenced objects exist.
pub fn validate(ws: &Workspace, verb: &str, args: &BTreeMap<String, String>) -> CliResult<()> {
    let s = spec(verb).ok_or_else(|| CliError::Input(format!("unknown verb `{verb}`")))?;
    for key in args.keys() {
        if !s.required.contains(&key.as_str()) && !s.optional.contains(&key.as_str()) {
            return Err(CliError::Input(format!("`{key}` does not apply to `{verb}`")));
        }
    }
    for key in s.required {
        if !args.contains_key(*key) {
            return Err(CliError::Input(format!("`{verb}` needs `{key}`")));
        }
    }
    for (key, value) in args {
        match kind_of_arg(key) {
            Some("ideal") => drop(ws.ideal(value)?),
            Some("module") => drop(ws.module(value)?),
            Some("extension") => drop(ws.extension(value)?),
            Some("complex") => drop(ws.complex(value)?),
            Some("sequence") => drop(ws.sequence(value)?),
            Some("ring") => drop(ws.base(value)?),
            _ => {}
        }
    }
    Ok(())
}

struct Args<'a>(&'a BTreeMap<String, String>);

impl Args<'_> {
    fn get(&self, key: &str) -> &str {
        self.0.get(key).map(String::as_str).unwrap_or_default()
    }

    fn opt(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    fn number<T: std::str::FromStr>(&self, key: &str) -> CliResult<Option<T>> {
        match self.opt(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| CliError::Input(format!("`{key}` must be a nonnegative integer, got `{v}`"))),
        }
    }

    fn boolean(&self, key: &str) -> CliResult<bool> {
        match self.opt(key) {
            None | Some("false") => Ok(false),
            Some("true") => Ok(true),
            Some(v) => Err(CliError::Input(format!("`{key}` must be true or false, got `{v}`"))),
        }
    }
}

fn polys(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

/// Row-major strings, matching the input syntax.
fn matrix(m: &ModuleMap) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| polys(&m.row(i))).collect()
}

fn coefficient(ring: &summand_core::RingRef, c: &summand_core::poly::Coeff) -> String {
    Polynomial::constant(ring, c.clone()).to_string()
}

fn frobenius_witness(w: &FrobeniusWitness) -> Value {
    json!({
        "element": w.element.to_string(),
        "monomial": w.monomial.exponents(),
        "coefficient": coefficient(w.element.ring(), &w.coefficient),
    })
}

fn twisted(r: &TwistedReport) -> Value {
    json!({
        "iterate": r.iterate,
        "splits": r.splits,
        "witness": r.witness.as_ref().map(frobenius_witness),
    })
}

fn colon(w: &ColonWitness) -> Value {
    json!({ "index": w.index + 1, "terms": w.terms.iter().map(|t| polys(t)).collect::<Vec<_>>() })
}

fn split_value(labels: Vec<String>, r: &SplitReport, replayed: bool) -> Value {
    json!({
        "basis": labels,
        "witness": r.witness.as_ref().map(|w| polys(w)),
        "evaluation_ideal": polys(r.evaluation_ideal.gens()),
        "replayed": replayed,
    })
}

fn separator(ideal: &Ideal, a: &Args) -> CliResult<Separator> {
    match a.opt("separator") {
        None | Some("auto") => Ok(Separator::Auto),
        Some(s) => Ok(Separator::Given(parse_polynomial(s, ideal.ring())?)),
    }
}

fn exponent(a: &Args, key: &str) -> CliResult<u32> {
    let n: u32 = a.number(key)?.unwrap_or(0);
    if n == 0 {
        return Err(CliError::Input(format!("`{key}` must be at least 1")));
    }
    Ok(n)
}

/// Runs one verb. Theorem-backed verdicts that come out the wrong way are
/// reported as cross-check failures.
pub fn execute(ws: &Workspace, verb: &str, args: &BTreeMap<String, String>, settings: &Settings) -> CliResult<Outcome> {
    validate(ws, verb, args)?;
    let a = Args(args);
    let (verdict, result) = match verb {
        "gb" => {
            let ideal = ws.ideal(a.get("ideal"))?;
            let ideal = match settings.order {
                Some(o) => ideal.reorder(&ideal.ring().with_order(o))?,
                None => ideal.clone(),
            };
            let gb = groebner_basis(&ideal)?;
            let leads: Vec<Vec<u32>> = gb.leading_monomials().iter().map(|m| m.exponents().to_vec()).collect();
            (
                "computed".to_string(),
                json!({
                    "order": gb.order().name(),
                    "basis": polys(gb.polys()),
                    "leading_exponents": leads,
                }),
            )
        }
        "resolve" | "betti" => {
            let m = ws.module(a.get("module"))?;
            if let Some(r) = a.opt("ring") {
                if !BaseRing::same(ws.base(r)?, m.base()) {
                    return Err(CliError::Input(format!("module `{}` is not over `{r}`", a.get("module"))));
                }
            }
            let res = minimal_resolution(m, a.number("cap")?)?;
            let status = match res.status {
                ResolutionStatus::Complete => "complete",
                ResolutionStatus::Truncated => "truncated",
            };
            let mut result = json!({ "betti": res.betti, "length": res.length(), "minimal": res.minimal });
            if verb == "resolve" {
                result["ranks"] = json!(res.complex.ranks());
                result["maps"] = json!(res.complex.maps().iter().map(matrix).collect::<Vec<_>>());
                result["augmentation"] = json!(matrix(&res.augmentation));
            }
            (status.to_string(), result)
        }
        "be-check" => {
            let c = ws.complex(a.get("complex"))?;
            let r = be_acyclicity_check(c, a.boolean("domain")?)?;
            let spots: Vec<Value> = r
                .spots
                .iter()
                .map(|s| {
                    json!({
                        "index": s.index,
                        "free_rank": s.free_rank,
                        "map_rank": s.map_rank,
                        "fitting_codim": s.fitting_codim,
                        "rank_ok": s.rank_ok,
                        "codim_ok": s.codim_ok,
                    })
                })
                .collect();
            let verdict = if r.homology_acyclic { "acyclic" } else { "not-acyclic" };
            (
                verdict.to_string(),
                json!({
                    "applicable": r.applicable,
                    "criterion_acyclic": r.criterion_acyclic,
                    "homology_acyclic": r.homology_acyclic,
                    "nonzero_homology": r.nonzero_homology,
                    "spots": spots,
                }),
            )
        }
        "syzygy-bounds" => {
            let r = syzygy_bound_check(ws.module(a.get("module"))?)?;
            if let Some(bad) = r.checks.iter().find(|c| !c.holds()) {
                return Err(CliError::CrossCheck(format!(
                    "{} bound violated at index {}: {} < {}",
                    bad.kind.name(),
                    bad.index,
                    bad.value,
                    bad.bound
                )));
            }
            let checks: Vec<Value> = r
                .checks
                .iter()
                .map(|c| json!({ "kind": c.kind.name(), "index": c.index, "value": c.value, "bound": c.bound }))
                .collect();
            (
                "holds".to_string(),
                json!({ "length": r.length, "betti": r.betti, "syzygy_ranks": r.syzygy_ranks, "checks": checks }),
            )
        }
        "split" | "trace-split" => {
            let em = as_module(ws.extension(a.get("extension"))?)?;
            let r = if verb == "split" { split_check(&em)? } else { trace_splitting(&em)? };
            let replayed = replay_split(&em, &r)?;
            if !replayed {
                return Err(CliError::CrossCheck("splitting witness failed its replay".into()));
            }
            (r.verdict.name().to_string(), split_value(em.basis_labels(), &r, replayed))
        }
        "cm-check" => {
            let r = depth_and_cm_check(ws.module(a.get("module"))?)?;
            let verdict = if r.is_cm { "cohen-macaulay" } else { "not-cohen-macaulay" };
            (
                verdict.to_string(),
                json!({
                    "nvars": r.nvars,
                    "projective_dimension": r.projective_dimension,
                    "depth": r.depth,
                    "dimension": r.dimension,
                    "annihilator": polys(r.annihilator.gens()),
                }),
            )
        }
        "regseq" => {
            let m = ws.module(a.get("module"))?;
            let (seq, _) = ws.sequence(a.get("sequence"))?;
            let r = regular_sequence_check(m, seq)?;
            let replayed = match &r.witness {
                Some(w) => witness_identity_holds(m, seq, w)?,
                None => true,
            };
            if !replayed {
                return Err(CliError::CrossCheck("colon witness failed its identity".into()));
            }
            let verdict = if r.is_regular() { "regular" } else { "not-regular" };
            (
                verdict.to_string(),
                json!({
                    "failed_at": r.failed_at,
                    "witness": r.witness.as_ref().map(colon),
                    "nakayama": r.nakayama,
                }),
            )
        }
        "sympow" => {
            let ideal = ws.ideal(a.get("ideal"))?;
            let n = exponent(&a, "n")?;
            let r = symbolic_power(ideal, n, &separator(ideal, &a)?)?;
            let power = ideal.power(n)?;
            let mut outside = Vec::new();
            for g in r.ideal.gens() {
                if !power.contains(g)? {
                    outside.push(g.to_string());
                }
            }
            let verdict = if outside.is_empty() { "equals-ordinary-power" } else { "strictly-contains-ordinary-power" };
            let c = &r.certificate;
            (
                verdict.to_string(),
                json!({
                    "exponent": n,
                    "generators": polys(r.ideal.gens()),
                    "separator": r.separator.to_string(),
                    "outside_ordinary_power": outside,
                    "certificate": {
                        "contains_ordinary_power": c.contains_ordinary_power,
                        "radical_inside_prime": c.radical_inside_prime,
                        "prime_inside_radical": c.prime_inside_radical,
                        "probes": c.probes.iter().map(|(g, ok)| json!({ "element": g.to_string(), "stable": ok })).collect::<Vec<_>>(),
                    },
                }),
            )
        }
        "containment" => {
            let ideal = ws.ideal(a.get("ideal"))?;
            let n = exponent(&a, "n")?;
            let r = containment_check(ideal, n, &separator(ideal, &a)?)?;
            if !r.holds() {
                return Err(CliError::CrossCheck(format!("symbolic power escapes the ordinary power: {}", polys(&r.outside).join(", "))));
            }
            (
                "holds".to_string(),
                json!({
                    "dimension": r.dimension,
                    "exponent": r.exponent,
                    "symbolic_exponent": r.symbolic.exponent,
                    "separator": r.symbolic.separator.to_string(),
                    "symbolic_generators": polys(r.symbolic.ideal.gens()),
                }),
            )
        }
        "fedder" => {
            let r = fedder_f_pure(ws.ideal(a.get("ideal"))?)?;
            let verdict = if r.splits { "f-pure" } else { "not-f-pure" };
            (verdict.to_string(), twisted(&r))
        }
        "twisted-split" => {
            let ideal = ws.ideal(a.get("ideal"))?;
            let s = parse_polynomial(a.get("element"), ideal.ring())?;
            match a.number::<u32>("e")? {
                Some(e) => {
                    let r = twisted_split_check(ideal, &s, e)?;
                    let verdict = if r.splits { "splits" } else { "does-not-split" };
                    (verdict.to_string(), json!({ "attempts": [twisted(&r)] }))
                }
                None => {
                    let e_max = a.number("e-max")?.unwrap_or(DEFAULT_MAX_ITERATE);
                    let r = twisted_split_search(ideal, &s, e_max)?;
                    let verdict = match r.smallest() {
                        Some(_) => "splits",
                        None => "does-not-split",
                    };
                    (
                        verdict.to_string(),
                        json!({
                            "smallest_iterate": r.smallest(),
                            "attempts": r.attempts.iter().map(twisted).collect::<Vec<_>>(),
                        }),
                    )
                }
            }
        }
        "kunz" => {
            let ideal = ws.ideal(a.get("ideal"))?;
            let r = kunz_check(&FrobeniusContext::new(ideal)?)?;
            let jacobian = match ideal.gens() {
                [f] if f.field().is_zero(&f.constant_term()) => Some(hypersurface_singular_at_origin(f)),
                _ => None,
            };
            if jacobian == Some(r.regular) {
                return Err(CliError::CrossCheck("Kunz verdict disagrees with the Jacobian criterion".into()));
            }
            let verdict = if r.regular { "regular" } else { "not-regular" };
            (
                verdict.to_string(),
                json!({
                    "basis": r.basis,
                    "obstruction": r.obstruction.as_ref().map(|v| polys(v)),
                    "minimal_generators": r.minimal_generators,
                    "jacobian_singular": jacobian,
                }),
            )
        }
        "modify" => {
            let m = ws.module(a.get("module"))?;
            let (seq, _) = ws.sequence(a.get("sequence"))?;
            let n = a.number("degree")?.unwrap_or(DEFAULT_MODIFY_DEGREE);
            let cap = settings.cap_steps.unwrap_or(DEFAULT_STEP_CAP);
            let st = modification_run(m, seq, n, cap)?;
            let replayed = st.replay(seq)?;
            if !replayed {
                return Err(CliError::CrossCheck("a modification witness is not trivialized".into()));
            }
            let history: Vec<Value> = st
                .history
                .iter()
                .map(|h| {
                    json!({
                        "relation": colon(&h.relation),
                        "gens_before": h.gens_before,
                        "unpruned_gens": h.unpruned_gens,
                        "witness_image": polys(&h.witness_image),
                    })
                })
                .collect();
            (
                st.status.name().to_string(),
                json!({
                    "steps": st.steps,
                    "degree_bound": st.degree_bound,
                    "generators": st.module.gens(),
                    "relations": matrix(st.module.relations()),
                    "nakayama": st.nakayama,
                    "replayed": replayed,
                    "history": history,
                }),
            )
        }
        _ => unreachable!("validated verb"),
    };
    Ok(Outcome { verdict, result })
}
