//! Running every check statement of one document or of a corpus directory.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use summand_core::poly::Limits;

use crate::ast::Decl;
use crate::commands::Settings;
use crate::error::{CliError, CliResult};
use crate::report::{error_info, engine_version, Report, SCHEMA};
use crate::workspace::{InputFormat, Workspace};

/// The corpus shipped with the crate.
pub const DEFAULT_DIR: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus");

/// Options shared by every entry of a batch.
#[derive(Debug, Clone, Default)]
pub struct BatchOptions {
    pub limits: Limits,
    pub settings: Settings,
    pub timing: bool,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
}

/// `.sum` and `.json` documents below `dir`, sorted by relative path.
pub fn corpus_files(dir: &Path) -> CliResult<Vec<PathBuf>> {
    fn walk(dir: &Path, out: &mut Vec<PathBuf>) -> std::io::Result<()> {
        for entry in std::fs::read_dir(dir)? {
            let path = entry?.path();
            if path.is_dir() {
                walk(&path, out)?;
            } else if matches!(path.extension().and_then(|e| e.to_str()), Some("sum" | "json")) {
                out.push(path);
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    walk(dir, &mut out).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    out.sort();
    Ok(out)
}

fn relative(path: &Path, root: &Path) -> String {
    path.strip_prefix(root).unwrap_or(path).to_string_lossy().replace('\\', "/")
}

fn failed_document(name: &str, e: &CliError) -> Report {
    Report {
        schema: SCHEMA,
        engine: engine_version(),
        document: Some(name.to_string()),
        command: "parse".into(),
        inputs: Default::default(),
        orders: Default::default(),
        verdict: None,
        expected: None,
        result: None,
        error: Some(error_info(e)),
        timing_ms: None,
    }
}

/// Reports for the check statements of several documents, in document order
/// then statement order, whatever the number of workers.
pub fn run_documents(docs: &[(String, String)], opts: &BatchOptions) -> CliResult<Vec<Report>> {
    let parsed: Vec<(String, Result<Workspace, CliError>)> = docs
        .iter()
        .map(|(name, src)| (name.clone(), Workspace::parse(src, InputFormat::detect(src), opts.limits.clone())))
        .collect();
    let mut tasks = Vec::new();
    for (d, (_, ws)) in parsed.iter().enumerate() {
        match ws {
            Ok(ws) => {
                for (k, decl) in ws.document.declarations.iter().enumerate() {
                    if matches!(decl, Decl::Check { .. }) {
                        tasks.push((d, Some(k)));
                    }
                }
            }
            Err(_) => tasks.push((d, None)),
        }
    }
    let run = |&(d, k): &(usize, Option<usize>)| -> Report {
        let (name, ws) = &parsed[d];
        match (ws, k) {
            (Ok(ws), Some(k)) => match &ws.document.declarations[k] {
                Decl::Check { verb, args, expect } => {
                    Report::run(ws, Some(name), verb, args, expect.as_deref(), &opts.settings, opts.timing)
                }
                _ => unreachable!(),
            },
            (Err(e), _) => failed_document(name, e),
            (Ok(_), None) => unreachable!(),
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| CliError::Input(format!("cannot start workers: {e}")))?;
    Ok(pool.install(|| tasks.par_iter().map(run).collect()))
}

/// Runs every document below `dir`.
pub fn corpus_run(dir: &Path, opts: &BatchOptions) -> CliResult<Vec<Report>> {
    let files = corpus_files(dir)?;
    let docs = files
        .iter()
        .map(|f| {
            std::fs::read_to_string(f)
                .map(|src| (relative(f, dir), src))
                .map_err(|e| CliError::Input(format!("{}: {e}", f.display())))
        })
        .collect::<CliResult<Vec<_>>>()?;
    run_documents(&docs, opts)
}

/// Reports as one JSON array.
pub fn reports_json(reports: &[Report]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize") + "\n"
}
