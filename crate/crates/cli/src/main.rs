use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use summand_cli::ast::{Decl, Document, ModuleBody};
use summand_cli::corpus::{corpus_run, reports_json, run_documents, BatchOptions, DEFAULT_DIR};
use summand_cli::dsl::print_document;
use summand_cli::report::combined_exit_code;
use summand_cli::{CliError, InputFormat, Report, Settings, Workspace};
use summand_core::module::random::random_graded_module;
use summand_core::module::BaseRing;
use summand_core::poly::{Limits, Ring};
use summand_core::{Field, MonomialOrder};

/// Writes to stdout; a closed pipe is not an error worth reporting.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

#[derive(Parser)]
#[command(name = "summand", version, about = "Exact checks for splitting, acyclicity, syzygies, symbolic powers and Frobenius")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report rendering.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Document syntax; `auto` reads JSON when the text starts with `{`.
    #[arg(long, global = true, value_enum, default_value_t = SyntaxArg::Auto)]
    input_format: SyntaxArg,
    /// Largest degree any Gröbner computation may reach.
    #[arg(long, global = true)]
    cap_degree: Option<u64>,
    /// Largest number of modification steps.
    #[arg(long, global = true)]
    cap_steps: Option<usize>,
    /// Monomial order for `gb`, overriding the ring's.
    #[arg(long, global = true)]
    order: Option<String>,
    /// Seed for `random-modules`.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for `run` and `corpus-run` (0 = all cores).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Leave timing out of reports.
    #[arg(long, global = true)]
    omit_timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SyntaxArg {
    Auto,
    Dsl,
    Json,
}

#[derive(Args)]
struct Target {
    /// Input document, `-` for stdin.
    file: PathBuf,
    #[arg(long)]
    ideal: Option<String>,
    #[arg(long)]
    module: Option<String>,
    #[arg(long)]
    extension: Option<String>,
    #[arg(long)]
    complex: Option<String>,
    #[arg(long)]
    sequence: Option<String>,
    #[arg(long)]
    ring: Option<String>,
    /// Exponent for `sympow` and `containment`.
    #[arg(long)]
    n: Option<u32>,
    /// Separating element; `auto` uses Jacobian minors.
    #[arg(long)]
    separator: Option<String>,
    /// Twisting element for `twisted-split`.
    #[arg(long)]
    element: Option<String>,
    /// A single Frobenius iterate.
    #[arg(long)]
    e: Option<u32>,
    /// Largest Frobenius iterate searched.
    #[arg(long)]
    e_max: Option<u32>,
    /// Truncation degree for `modify`.
    #[arg(long)]
    degree: Option<u32>,
    /// Certify the ambient ring of a complex as a domain.
    #[arg(long)]
    domain: bool,
    /// Resolution length cap.
    #[arg(long)]
    cap: Option<usize>,
}

impl Target {
    fn args(&self) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        let mut put = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                out.insert(k.to_string(), v);
            }
        };
        put("ideal", self.ideal.clone());
        put("module", self.module.clone());
        put("extension", self.extension.clone());
        put("complex", self.complex.clone());
        put("sequence", self.sequence.clone());
        put("ring", self.ring.clone());
        put("n", self.n.map(|v| v.to_string()));
        put("separator", self.separator.clone());
        put("element", self.element.clone());
        put("e", self.e.map(|v| v.to_string()));
        put("e-max", self.e_max.map(|v| v.to_string()));
        put("degree", self.degree.map(|v| v.to_string()));
        put("domain", self.domain.then(|| "true".to_string()));
        put("cap", self.cap.map(|v| v.to_string()));
        out
    }
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Gröbner basis of an ideal.
    Gb(Target),
    /// Minimal free resolution of a module.
    Resolve(Target),
    /// Betti numbers of a module.
    Betti(Target),
    /// Acyclicity by ranks and Fitting ideals, checked against homology.
    BeCheck(Target),
    /// Syzygy rank and Betti number bounds.
    SyzygyBounds(Target),
    /// Whether the base is a direct summand of a finite extension.
    Split(Target),
    /// Splitting by the normalized trace of a free extension.
    TraceSplit(Target),
    /// Depth, dimension and the Cohen-Macaulay property.
    CmCheck(Target),
    /// Whether a sequence is regular on a module.
    Regseq(Target),
    /// Symbolic power of a prime ideal.
    Sympow(Target),
    /// Symbolic power containment with the dimension as multiplier.
    Containment(Target),
    /// F-purity at the origin by the colon criterion.
    Fedder(Target),
    /// Splitting of a twisted Frobenius map at the origin.
    TwistedSplit(Target),
    /// Regularity at the origin as freeness of the Frobenius pushforward.
    Kunz(Target),
    /// Degree-bounded algebra modifications.
    Modify(Target),
    /// Run every check statement of one document.
    Run { file: PathBuf },
    /// Run every document of a corpus directory.
    CorpusRun { dir: Option<PathBuf> },
    /// Print a document in canonical form.
    Print { file: PathBuf },
    /// Emit random graded modules with syzygy-bound checks (needs --seed).
    RandomModules {
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long, default_value_t = 0)]
        characteristic: u32,
    },
}

impl Command {
    fn verb(&self) -> Option<(&'static str, &Target)> {
        Some(match self {
            Command::Gb(t) => ("gb", t),
            Command::Resolve(t) => ("resolve", t),
            Command::Betti(t) => ("betti", t),
            Command::BeCheck(t) => ("be-check", t),
            Command::SyzygyBounds(t) => ("syzygy-bounds", t),
            Command::Split(t) => ("split", t),
            Command::TraceSplit(t) => ("trace-split", t),
            Command::CmCheck(t) => ("cm-check", t),
            Command::Regseq(t) => ("regseq", t),
            Command::Sympow(t) => ("sympow", t),
            Command::Containment(t) => ("containment", t),
            Command::Fedder(t) => ("fedder", t),
            Command::TwistedSplit(t) => ("twisted-split", t),
            Command::Kunz(t) => ("kunz", t),
            Command::Modify(t) => ("modify", t),
            _ => return None,
        })
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }
}

fn display_name(path: &Path) -> String {
    path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_else(|| "-".into())
}

struct App {
    cli: Cli,
}

impl App {
    fn limits(&self) -> Limits {
        let mut l = Limits::default();
        if let Some(d) = self.cli.cap_degree {
            l.max_degree = d;
        }
        l
    }

    fn settings(&self) -> Result<Settings, CliError> {
        let order = match &self.cli.order {
            None => None,
            Some(name) => Some(
                MonomialOrder::parse(name).ok_or_else(|| CliError::Input(format!("unknown monomial order `{name}`")))?,
            ),
        };
        Ok(Settings { cap_steps: self.cli.cap_steps, order })
    }

    fn workspace(&self, src: &str, name: &str) -> Result<Workspace, CliError> {
        let format = match self.cli.input_format {
            SyntaxArg::Auto => InputFormat::detect(src),
            SyntaxArg::Dsl => InputFormat::Dsl,
            SyntaxArg::Json => InputFormat::Json,
        };
        Workspace::parse(src, format, self.limits()).map_err(|e| e.context(name))
    }

    fn batch(&self) -> Result<BatchOptions, CliError> {
        Ok(BatchOptions { limits: self.limits(), settings: self.settings()?, timing: !self.cli.omit_timing, jobs: self.cli.jobs })
    }

    fn emit_batch(&self, reports: &[Report]) -> i32 {
        match self.cli.format {
            OutputFormat::Json => emit(&reports_json(reports)),
            OutputFormat::Text => {
                for (i, r) in reports.iter().enumerate() {
                    if i > 0 {
                        emit("---\n");
                    }
                    emit(&r.to_text());
                }
            }
        }
        for r in reports {
            if let Some(e) = &r.error {
                eprintln!("summand: {} {}: {} error: {}", r.document.as_deref().unwrap_or("-"), r.command, e.kind, e.message);
            }
        }
        combined_exit_code(reports)
    }

    fn run(&self) -> Result<i32, CliError> {
        if let Some((verb, target)) = self.cli.command.verb() {
            let src = read_input(&target.file)?;
            let name = display_name(&target.file);
            let ws = self.workspace(&src, &name)?;
            let report =
                Report::run(&ws, Some(&name), verb, &target.args(), None, &self.settings()?, !self.cli.omit_timing);
            match self.cli.format {
                OutputFormat::Json => emit(&(report.to_json() + "\n")),
                OutputFormat::Text => emit(&report.to_text()),
            }
            if let Some(e) = &report.error {
                eprintln!("summand: {} error: {}", e.kind, e.message);
            }
            return Ok(report.exit_code());
        }
        match &self.cli.command {
            Command::Run { file } => {
                let src = read_input(file)?;
                if self.cli.input_format != SyntaxArg::Auto {
                    self.workspace(&src, &display_name(file))?;
                }
                let reports = run_documents(&[(display_name(file), src)], &self.batch()?)?;
                Ok(self.emit_batch(&reports))
            }
            Command::CorpusRun { dir } => {
                let dir = dir.clone().unwrap_or_else(|| PathBuf::from(DEFAULT_DIR));
                let reports = corpus_run(&dir, &self.batch()?)?;
                Ok(self.emit_batch(&reports))
            }
            Command::Print { file } => {
                let ws = self.workspace(&read_input(file)?, &display_name(file))?;
                match self.cli.format {
                    OutputFormat::Json => emit(&ws.to_json()),
                    OutputFormat::Text => emit(&ws.to_dsl()),
                }
                Ok(0)
            }
            Command::RandomModules { count, vars, characteristic } => {
                let seed = self.cli.seed.ok_or_else(|| CliError::Input("random-modules needs --seed".into()))?;
                emit(&random_document(seed, *count, *vars, *characteristic)?);
                Ok(0)
            }
            _ => unreachable!(),
        }
    }
}

/// Random graded modules over one ring, each followed by a bound check.
fn random_document(seed: u64, count: usize, vars: usize, characteristic: u32) -> Result<String, CliError> {
    if !(1..=8).contains(&vars) {
        return Err(CliError::Input("--vars must be between 1 and 8".into()));
    }
    let names: Vec<String> = (1..=vars).map(|i| format!("x{i}")).collect();
    let field = if characteristic == 0 { Field::Rational } else { Field::prime(characteristic)? };
    let ring = Ring::from_names(field, names.clone(), MonomialOrder::GrevLex)?;
    let base = BaseRing::polynomial(&ring);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut doc = Document::default();
    doc.declarations.push(Decl::Ring { name: "R".into(), characteristic, vars: names, order: "grevlex".into() });
    for k in 0..count {
        let gens = 1 + k % 3;
        let rels = gens + 1 + k % 3;
        let m = random_graded_module(&base, gens, rels, 2, &mut rng)?;
        let rel = m.relations();
        let matrix = (0..rel.rows()).map(|i| rel.row(i).iter().map(|p| p.to_string()).collect()).collect();
        let name = format!("M{}", k + 1);
        doc.declarations.push(Decl::Module { name: name.clone(), over: "R".into(), body: ModuleBody::Coker(matrix) });
        doc.declarations.push(Decl::Check {
            verb: "syzygy-bounds".into(),
            args: [("module".to_string(), name)].into(),
            expect: Some("holds".into()),
        });
    }
    Ok(print_document(&doc))
}

fn main() -> ExitCode {
    let app = App { cli: Cli::parse() };
    match app.run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("summand: {} error: {}", e.kind(), e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
