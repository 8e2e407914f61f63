//! Acceptance criteria 1 to 9, one pass/fail line each.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use summand_cli::ast::{ComplexBody, Decl};
use summand_cli::commands::Settings;
use summand_cli::corpus::{corpus_files, corpus_run, reports_json, BatchOptions, DEFAULT_DIR};
use summand_cli::{InputFormat, Workspace};
use summand_core::checks::{
    as_module, base_change, be_acyclicity_check, regular_sequence_check, replay_split, split_check,
    syzygy_bound_check, trace_splitting, SplitVerdict,
};
use summand_core::frobenius::{
    fedder_f_pure, hypersurface_singular_at_origin, kunz_check, twisted_split_check, FrobeniusContext,
};
use summand_core::modification::{find_bad_relation, modification_run, partial_modification, trivialized};
use summand_core::module::random::random_graded_module;
use summand_core::module::{complex_homology, minimal_resolution, BaseRing, FPModule};
use summand_core::poly::{parse_polynomial, Limits, Ring};
use summand_core::symbolic::{containment_check, symbolic_power, Separator};
use summand_core::{Error, Field, Ideal, MonomialOrder, Polynomial};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn core<T>(r: summand_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn corpus() -> Vec<(String, Workspace)> {
    corpus_files(Path::new(DEFAULT_DIR))
        .unwrap()
        .into_iter()
        .map(|f| {
            let src = std::fs::read_to_string(&f).unwrap();
            let ws = Workspace::parse(&src, InputFormat::detect(&src), Limits::default())
                .unwrap_or_else(|e| panic!("{}: {e}", f.display()));
            (f.file_name().unwrap().to_string_lossy().into_owned(), ws)
        })
        .collect()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let ring = core(Ring::new(Field::Rational, &["x1", "x2", "x3"], MonomialOrder::GrevLex))?;
    let base = BaseRing::polynomial(&ring);
    let vars: Vec<Polynomial> = (0..3).map(|i| Polynomial::variable(&ring, i)).collect();
    let k = core(FPModule::cyclic(&base, &vars))?;
    let res = core(minimal_resolution(&k, None))?;
    let bounds = core(syzygy_bound_check(&k))?;
    let elapsed = start.elapsed();
    let oracle: Vec<usize> = (0..=3).map(|i| binomial(3, i)).collect();
    ensure(res.betti == oracle, format!("betti {:?}, expected {oracle:?}", res.betti))?;
    ensure(res.betti == vec![1, 3, 3, 1], "betti differ from (1,3,3,1)")?;
    ensure(res.length() == 3, format!("length {}", res.length()))?;
    ensure(bounds.syzygy_ranks == vec![1, 2, 1], format!("syzygy ranks {:?}", bounds.syzygy_ranks))?;
    ensure(bounds.holds(), "a bound fails on k")?;
    for i in 1..=3 {
        ensure(core(complex_homology(&res.complex, i))?.module.is_zero().unwrap(), format!("H_{i} of the resolution is nonzero"))?;
    }
    ensure(elapsed < Duration::from_secs(1), format!("took {elapsed:?}"))?;
    Ok(format!("betti (1,3,3,1), s = 3, ranks (1,2,1) in {} ms", elapsed.as_millis()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let mut checked = 0;
    let mut bound_checks = 0;
    let mut over_q = 0;
    for k in 0..200 {
        let nvars = 2 + k % 3;
        // rational coefficients explode in four variables; those stay modular
        let rational = k % 4 == 3 && nvars <= 3;
        let field = if rational { Field::Rational } else { core(Field::prime(32003))? };
        let names: Vec<String> = (1..=nvars).map(|i| format!("x{i}")).collect();
        let ring = core(Ring::from_names(field, names, MonomialOrder::GrevLex))?;
        let base = BaseRing::polynomial(&ring);
        let gens = rng.gen_range(1..=3);
        let rels = gens + rng.gen_range(0..=3);
        let m = core(random_graded_module(&base, gens, rels, 2, &mut rng))?;
        let r = core(syzygy_bound_check(&m))?;
        if let Some(bad) = r.checks.iter().find(|c| !c.holds()) {
            return Err(format!("module {k}: {} bound at {} gives {} < {} for\n{m}", bad.kind.name(), bad.index, bad.value, bad.bound));
        }
        bound_checks += r.checks.len();
        checked += 1;
        over_q += usize::from(rational);
    }
    Ok(format!("{checked} random modules ({over_q} over Q), {bound_checks} bounds, all hold, {} ms", start.elapsed().as_millis()))
}

fn criterion_3() -> Outcome {
    let docs = corpus();
    let (_, node) = docs.iter().find(|(n, _)| n == "node-normalization.sum").ok_or("node normalization file missing")?;
    let em = core(as_module(node.extension("E").map_err(|e| e.to_string())?))?;
    let r = core(split_check(&em))?;
    ensure(r.verdict == SplitVerdict::DoesNotSplit, format!("node normalization: {}", r.verdict.name()))?;
    let (mut total, mut rational, mut prime, mut non_free, mut trace_compared) = (0, 0, 0, 0, 0);
    for (file, ws) in &docs {
        for name in ws.names_of("extension") {
            let ext = ws.extension(&name).unwrap();
            if !ext.base().is_polynomial() {
                continue;
            }
            let em = core(as_module(ext)).map_err(|e| format!("{file} {name}: {e}"))?;
            let r = core(split_check(&em))?;
            ensure(
                matches!(r.verdict, SplitVerdict::Splits | SplitVerdict::SplitsLocally),
                format!("{file} {name}: {}", r.verdict.name()),
            )?;
            ensure(core(replay_split(&em, &r))?, format!("{file} {name}: witness replay failed"))?;
            total += 1;
            if ext.base().ring().characteristic() == 0 {
                rational += 1;
            } else {
                prime += 1;
            }
            match trace_splitting(&em) {
                Ok(t) => {
                    if ext.base().ring().characteristic() == 0 {
                        ensure(t.verdict == r.verdict, format!("{file} {name}: trace {} vs {}", t.verdict.name(), r.verdict.name()))?;
                        trace_compared += 1;
                    }
                }
                Err(Error::NotFree) => non_free += 1,
                Err(Error::TraceDegenerate(_)) => {}
                Err(e) => return Err(format!("{file} {name}: {e}")),
            }
        }
    }
    ensure(total >= 20, format!("only {total} extensions of polynomial bases"))?;
    ensure(rational > 0 && prime > 0 && non_free > 0, "corpus lacks a Q, F_p or non-free instance")?;
    ensure(trace_compared > 0, "no free char-0 instance compared")?;
    Ok(format!(
        "node normalization does not split; {total} extensions split ({rational} over Q, {prime} over F_p, {non_free} non-free); trace agrees on {trace_compared}"
    ))
}

/// Koszul complexes in the corpus with their sequences.
fn koszul_sequences(ws: &Workspace) -> Vec<(String, Vec<String>)> {
    ws.document
        .declarations
        .iter()
        .filter_map(|d| match d {
            Decl::Complex { name, body: ComplexBody::Koszul(s), .. } => Some((name.clone(), s.clone())),
            _ => None,
        })
        .collect()
}

fn criterion_4() -> Outcome {
    let (mut total, mut acyclic, mut koszul_compared) = (0, 0, 0);
    for (file, ws) in corpus() {
        for name in ws.names_of("complex") {
            let c = ws.complex(&name).unwrap();
            if !c.base().is_polynomial() {
                continue;
            }
            let r = core(be_acyclicity_check(c, false)).map_err(|e| format!("{file} {name}: {e}"))?;
            ensure(r.criterion_acyclic == Some(r.homology_acyclic), format!("{file} {name}: criterion and homology differ"))?;
            if r.homology_acyclic {
                acyclic += 1;
                for s in &r.spots {
                    let codim = s.fitting_codim.unwrap_or(usize::MAX);
                    ensure(codim >= s.index, format!("{file} {name}: codim {codim} < {} on an acyclic complex", s.index))?;
                }
            }
            total += 1;
        }
        // independent oracle: a Koszul complex is acyclic iff its sequence is regular on R
        for (name, seq) in koszul_sequences(&ws) {
            let c = ws.complex(&name).unwrap();
            let base = c.base().clone();
            let seq: Vec<Polynomial> = seq.iter().map(|s| parse_polynomial(s, base.ring()).unwrap()).collect();
            let regular = core(regular_sequence_check(&FPModule::free(&base, 1), &seq))?.failed_at.is_none();
            let r = core(be_acyclicity_check(c, false))?;
            ensure(regular == r.homology_acyclic, format!("{file} {name}: regular {regular} but acyclic {}", r.homology_acyclic))?;
            koszul_compared += 1;
        }
    }
    ensure(total >= 50, format!("only {total} complexes"))?;
    Ok(format!("{total} complexes agree ({acyclic} acyclic, codim bound holds); {koszul_compared} Koszul complexes match regularity"))
}

fn criterion_5() -> Outcome {
    let (mut complexes, mut tensored) = (0, 0);
    for (file, ws) in corpus() {
        for name in ws.names_of("complex") {
            let c = ws.complex(&name).unwrap();
            if !c.base().is_polynomial() {
                continue;
            }
            let r = core(be_acyclicity_check(c, false))?;
            if r.criterion_acyclic != Some(true) {
                continue;
            }
            complexes += 1;
            let ring = c.base().ring();
            let n = ring.nvars();
            let mut names = ring.vars().to_vec();
            names.push("tt".into());
            let target_ring = core(Ring::from_names(ring.field(), names, MonomialOrder::GrevLex))?;
            let var_map: Vec<usize> = (0..n).collect();
            let first = ring.vars()[0].clone();
            let last = ring.vars()[n - 1].clone();
            // CM algebras over S: S[t], and monic hypersurfaces in t, finite free over S
            let algebras: Vec<Option<String>> =
                vec![None, Some(format!("tt^2 - {first}")), Some(format!("tt^3 + {first}*tt + {last}"))];
            for rel in algebras {
                let target = match &rel {
                    None => BaseRing::polynomial(&target_ring),
                    Some(f) => {
                        let f = core(parse_polynomial(f, &target_ring))?;
                        core(BaseRing::quotient(&target_ring, &core(Ideal::new(&target_ring, vec![f]))?, false))?
                    }
                };
                let t = core(base_change(c, &target, &var_map))?;
                for i in 1..=t.length() {
                    ensure(
                        core(core(complex_homology(&t, i))?.module.is_zero())?,
                        format!("{file} {name} over {}: H_{i} is nonzero", rel.as_deref().unwrap_or("S[t]")),
                    )?;
                }
                tensored += 1;
            }
        }
    }
    ensure(complexes > 0, "no complex satisfies the rank conditions")?;
    Ok(format!("{complexes} complexes, {tensored} tensored complexes with vanishing homology"))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let ring = core(Ring::new(Field::Rational, &["x", "y", "z"], MonomialOrder::GrevLex))?;
    let p = |s: &str| parse_polynomial(s, &ring).unwrap();
    // complete intersections
    for gens in [vec!["x", "y"], vec!["x", "y - z^2"], vec!["x*y - z^2 + x", "y - z"]] {
        let prime = core(Ideal::from_strs(&ring, &gens))?;
        for n in 1..=3u32 {
            let sym = core(symbolic_power(&prime, n, &Separator::Auto))?;
            ensure(core(sym.ideal.same_ideal(&core(prime.power(n))?))?, format!("({}) n = {n}: symbolic differs", gens.join(", ")))?;
        }
    }
    // oracle for (x, y): the monomials x^a y^b with a + b = n
    let xy = core(Ideal::from_strs(&ring, &["x", "y"]))?;
    let sym = core(symbolic_power(&xy, 3, &Separator::Auto))?;
    let monomials: Vec<Polynomial> = (0..=3).map(|a| p(&format!("x^{a}*y^{}", 3 - a))).collect();
    ensure(core(sym.ideal.same_ideal(&core(Ideal::new(&ring, monomials))?))?, "(x,y)^(3) is not (x,y)^3")?;

    let curve = core(Ideal::from_strs(&ring, &["y^2 - x*z", "x^3 - y*z", "x^2*y - z^2"]))?;
    let sym2 = core(symbolic_power(&curve, 2, &Separator::Auto))?;
    let square = core(curve.power(2))?;
    let mut outside = Vec::new();
    for g in sym2.ideal.gens() {
        if !core(square.contains(g))? {
            outside.push(g.clone());
        }
    }
    ensure(core(sym2.ideal.contains_ideal(&square))?, "p^2 not inside p^(2)")?;
    ensure(!outside.is_empty(), "p^(2) equals p^2")?;
    // oracle: each generator of p^(2) and its gradient vanish on (t^3, t^4, t^5)
    let t_ring = core(Ring::new(Field::Rational, &["t"], MonomialOrder::GrevLex))?;
    let param = vec![
        parse_polynomial("t^3", &t_ring).unwrap(),
        parse_polynomial("t^4", &t_ring).unwrap(),
        parse_polynomial("t^5", &t_ring).unwrap(),
    ];
    for g in sym2.ideal.gens() {
        ensure(g.substitute(&param).is_zero(), format!("{g} does not vanish on the curve"))?;
        for i in 0..3 {
            ensure(g.derivative(i).substitute(&param).is_zero(), format!("{g} vanishes only to order 1"))?;
        }
    }
    let c = core(containment_check(&curve, 2, &Separator::Auto))?;
    ensure(c.holds() && c.dimension == 3 && c.symbolic.exponent == 6, "containment p^(6) in p^2 fails")?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), format!("took {elapsed:?}"))?;
    Ok(format!(
        "CI symbolic = ordinary; curve p^(2) has {} generators outside p^2; p^(6) in p^2 holds; {} ms",
        outside.len(),
        elapsed.as_millis()
    ))
}

/// Multinomial expansion of `(x^3+y^3+z^3)^(p-1)`: F-pure iff some term
/// `x^{3a} y^{3b} z^{3c}` with all exponents below `p` has a coefficient prime to `p`.
fn fermat_oracle(p: u64) -> bool {
    let n = p - 1;
    let fact = |k: u64| (1..=k).fold(1u128, |a, b| a * b as u128);
    for a in 0..=n {
        for b in 0..=n - a {
            let c = n - a - b;
            if 3 * a < p && 3 * b < p && 3 * c < p {
                let coeff = fact(n) / (fact(a) * fact(b) * fact(c));
                if coeff % p as u128 != 0 {
                    return true;
                }
            }
        }
    }
    false
}

fn criterion_7() -> Outcome {
    let (mut smooth, mut singular, mut fedder_compared) = (0, 0, 0);
    for (file, ws) in corpus() {
        for name in ws.names_of("ideal") {
            let ideal = ws.ideal(&name).unwrap();
            let ring = ideal.ring();
            if ring.characteristic() == 0 || core(ideal.is_unit())? {
                continue;
            }
            let a = core(fedder_f_pure(ideal))?;
            let b = core(twisted_split_check(ideal, &Polynomial::one(ring), 1))?;
            ensure(a.splits == b.splits && a.witness == b.witness, format!("{file} {name}: fedder and twisted differ"))?;
            fedder_compared += 1;
            let through_origin = ideal.gens().iter().all(|g| g.field().is_zero(&g.constant_term()));
            let jacobian_singular = match ideal.gens() {
                [] => Some(false),
                [f] if through_origin => Some(hypersurface_singular_at_origin(f)),
                _ => None,
            };
            let Some(js) = jacobian_singular else { continue };
            if ring.nvars() > 3 || ring.characteristic().pow(ring.nvars() as u32) > 400 {
                continue;
            }
            let k = core(kunz_check(&core(FrobeniusContext::new(ideal))?))?;
            ensure(k.regular == !js, format!("{file} {name}: kunz {} but jacobian singular {js}", k.regular))?;
            if js {
                singular += 1;
            } else {
                smooth += 1;
            }
        }
    }
    ensure(smooth > 0 && singular > 0, "corpus lacks smooth or singular members")?;
    let mut fermat = Vec::new();
    for p in [3u32, 7] {
        let ring = core(Ring::new(core(Field::prime(p))?, &["x", "y", "z"], MonomialOrder::GrevLex))?;
        let ideal = core(Ideal::from_strs(&ring, &["x^3 + y^3 + z^3"]))?;
        let pure = core(fedder_f_pure(&ideal))?.splits;
        ensure(pure == fermat_oracle(p as u64), format!("Fermat p = {p}: engine {pure}, oracle {}", fermat_oracle(p as u64)))?;
        fermat.push((p, pure));
    }
    ensure(fermat == vec![(3, false), (7, true)], format!("Fermat verdicts {fermat:?}"))?;
    Ok(format!(
        "kunz matches Jacobian on {smooth} smooth and {singular} singular members; Fermat p=3 not F-pure, p=7 F-pure; fedder = twisted on {fedder_compared} ideals"
    ))
}

fn criterion_8() -> Outcome {
    let ring = core(Ring::new(Field::Rational, &["x", "y", "z", "w"], MonomialOrder::GrevLex))?;
    let base = BaseRing::polynomial(&ring);
    let p = |s: &str| parse_polynomial(s, &ring).unwrap();
    let planes: Vec<Polynomial> = ["x*z", "x*w", "y*z", "y*w"].iter().map(|s| p(s)).collect();
    let m = core(FPModule::cyclic(&base, &planes))?;
    let params = vec![p("x - z"), p("y - w")];
    let rel = core(find_bad_relation(&m, &params))?.ok_or("no bad relation on the two planes")?;
    ensure(rel.index == 1, format!("bad relation at i = {}", rel.index))?;
    for n in 1..=3u32 {
        let modified = core(partial_modification(&m, &params, &rel, n))?;
        let expected = binomial(n as usize + 1, 1) * m.gens();
        ensure(modified.module.gens() == expected, format!("n = {n}: {} generators, expected {expected}", modified.module.gens()))?;
        ensure(core(trivialized(&modified, m.gens(), &params, &rel))?, format!("n = {n}: relation not trivialized"))?;
    }
    let run = core(modification_run(&m, &params, 2, 3))?;
    ensure(run.steps >= 1 && core(run.replay(&params))?, "replay of the two-planes run failed")?;
    for rank in 1..=2 {
        let free = FPModule::free(&base, rank);
        let vars: Vec<Polynomial> = (0..4).map(|i| Polynomial::variable(&ring, i)).collect();
        let st = core(modification_run(&free, &vars, 2, 3))?;
        ensure(st.steps == 0, format!("free rank {rank}: {} steps", st.steps))?;
    }
    Ok(format!("bad relation at i = 1; generators C(n+1,1)*gens for n = 1..3; replay passes ({} steps); free modules take 0 steps", run.steps))
}

fn criterion_9() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_summand");
    let run = || {
        let out = Command::new(bin).args(["corpus-run", "--format", "json", "--omit-timing", "--jobs", "4"]).output().unwrap();
        ensure(out.status.success(), format!("corpus-run exited with {:?}", out.status.code()))?;
        Ok::<_, String>(out.stdout)
    };
    let first = run()?;
    let second = run()?;
    ensure(first == second, "two corpus runs differ")?;
    let opts = BatchOptions { limits: Limits::default(), settings: Settings::default(), timing: false, jobs: 1 };
    let serial = reports_json(&corpus_run(Path::new(DEFAULT_DIR), &opts).map_err(|e| e.to_string())?);
    ensure(serial.as_bytes() == first.as_slice(), "serial run differs from the parallel one")?;
    Ok(format!("{} bytes identical across two runs and across worker counts", first.len()))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("Koszul/Betti reproduction", criterion_1),
        ("syzygy-bound property suite", criterion_2),
        ("direct-summand instances", criterion_3),
        ("acyclicity cross-validation", criterion_4),
        ("CM-tensor observation", criterion_5),
        ("symbolic powers", criterion_6),
        ("char-p suite", criterion_7),
        ("modification engine", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut failures = Vec::new();
    for (i, (title, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let line = match &outcome {
            Ok(detail) => format!("criterion {}: PASS {title}: {detail}", i + 1),
            Err(why) => format!("criterion {}: FAIL {title}: {why}", i + 1),
        };
        // written past the test harness's capture so the lines always show
        writeln!(std::io::stdout().lock(), "{line}").unwrap();
        if outcome.is_err() {
            failures.push(i + 1);
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
