use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use siltlab::algebra::{AlgebraFile, DEFAULT_LENGTH_CAP};
use siltlab::search::{DEFAULT_BUDGET, DEFAULT_MAX_SUMMAND_SIZE};
use siltlab::sign::{sign_decomposition_report, tilting_bijection_counts};
use siltlab::{catalog, schur, BasedAlgebra, EnumerationResult, SearchOptions};

mod verify;

#[derive(Parser)]
#[command(name = "siltlab", version, about = "Two-term silting complexes of bound quiver algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect the built-in algebras.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Enumerate two-term silting complexes by left mutation.
    Enumerate(EnumerateArgs),
    /// Count two-term silting complexes orthant by orthant.
    SignDecompose(SignArgs),
    /// Schur algebras S(n,r).
    #[command(subcommand)]
    Schur(SchurCommand),
    /// Run the invariant checks on an algebra.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    Show {
        /// NAME or NAME:m.
        name: String,
        #[arg(long, default_value_t = 2)]
        p: u32,
        /// Print the algebra file instead of a summary.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct AlgebraSource {
    /// Catalog algebra, NAME or NAME:m (e.g. D:4).
    #[arg(long, conflicts_with = "algebra_file", required_unless_present = "algebra_file")]
    algebra: Option<String>,
    /// JSON algebra file.
    #[arg(long)]
    algebra_file: Option<PathBuf>,
    /// Prime characteristic; overrides the file's value.
    #[arg(long)]
    p: Option<u32>,
}

impl AlgebraSource {
    fn load(&self) -> Result<(String, BasedAlgebra)> {
        if let Some(spec) = &self.algebra {
            let a = catalog::get_by_spec(spec, self.p.unwrap_or(2))?;
            return Ok((spec.clone(), a));
        }
        let path = self.algebra_file.as_ref().expect("clap enforces one source");
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let mut file = AlgebraFile::parse(&text)?;
        if let Some(p) = self.p {
            file.p = p;
        }
        let name = path.file_stem().map_or("file".into(), |s| s.to_string_lossy().into_owned());
        Ok((name, file.build(DEFAULT_LENGTH_CAP)?))
    }
}

#[derive(Args)]
struct SearchArgs {
    /// Maximum number of objects (default: $SILTLAB_BUDGET or 500000).
    #[arg(long)]
    budget: Option<usize>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Stop, incomplete, before building a summand with more projectives
    /// than this.
    #[arg(long, default_value_t = DEFAULT_MAX_SUMMAND_SIZE)]
    max_summand_size: usize,
}

impl SearchArgs {
    fn options(&self, validate: bool) -> Result<SearchOptions> {
        let budget = match self.budget {
            Some(b) => b,
            None => match std::env::var("SILTLAB_BUDGET") {
                Ok(v) => v.trim().parse().with_context(|| format!("SILTLAB_BUDGET={v:?} is not a number"))?,
                Err(_) => DEFAULT_BUDGET,
            },
        };
        if budget == 0 {
            bail!("budget must be at least 1");
        }
        Ok(SearchOptions { budget, validate, threads: self.threads, max_summand_size: self.max_summand_size })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    out: Format,
    /// Write to a file instead of stdout.
    #[arg(long)]
    output_file: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    source: AlgebraSource,
    #[command(flatten)]
    search: SearchArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Re-check every object while searching.
    #[arg(long)]
    validate: bool,
    /// Include summand complexes in JSON output.
    #[arg(long)]
    complexes: bool,
}

#[derive(Args)]
struct SignArgs {
    #[command(flatten)]
    source: AlgebraSource,
    #[command(flatten)]
    search: SearchArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Catalog algebra obtained by tilting mutation at --j; compares the
    /// objects negative on J with the objects of this algebra positive on J.
    #[arg(long, requires = "j")]
    mutated: Option<String>,
    /// Comma-separated 1-based vertices.
    #[arg(long, value_delimiter = ',')]
    j: Vec<usize>,
}

#[derive(Subcommand)]
enum SchurCommand {
    /// Decide τ-tilting finiteness of S(n,r) and count when known
    Classify {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        json: bool,
    },
    /// The quiver of the basic algebra of S(2,r).
    Quiver {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        dot: bool,
    },
    /// All τ-tilting finite S(n,r) for p = 2 or 3.
    Report {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: AlgebraSource,
    #[command(flatten)]
    search: SearchArgs,
}

/// Writes via a temporary file renamed into place, so failed runs leave
/// nothing behind.
fn emit(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
        Some(path) => {
            let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(text.as_bytes())?;
            tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(())
}

fn enumeration_text(r: &EnumerationResult) -> String {
    format!("{} arrows={} mutations={}\n", r.summary(), r.arrows.len(), r.mutation_count)
}

fn run_enumerate(args: &EnumerateArgs) -> Result<ExitCode> {
    let (name, alg) = args.source.load()?;
    let opts = args.search.options(args.validate)?;
    let r = siltlab::enumerate(&alg, &name, &opts)?;
    let text = match args.output.out {
        Format::Text => enumeration_text(&r),
        Format::Json => r.to_json(args.complexes),
        Format::Dot => r.to_dot(),
    };
    emit(&text, args.output.output_file.as_deref())?;
    if args.output.output_file.is_some() {
        eprint!("{}", enumeration_text(&r));
    }
    Ok(if r.complete { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn run_sign(args: &SignArgs) -> Result<ExitCode> {
    let (name, alg) = args.source.load()?;
    let opts = args.search.options(false)?;
    if let Some(other) = &args.mutated {
        let b = catalog::get_by_spec(other, alg.p())?;
        if let Some(&v) = args.j.iter().find(|&&v| v == 0 || v > alg.n()) {
            bail!("vertex {v} is outside 1..{}", alg.n());
        }
        let j: Vec<usize> = args.j.iter().map(|v| v - 1).collect();
        let c = tilting_bijection_counts(&alg, &b, &j, &opts)?;
        let text = match args.output.out {
            Format::Json => format!("{}\n", serde_json::to_string(&c)?),
            _ => format!(
                "{name} negative on J: {}\n{other} positive on J: {}\nequal={} complete={}\n",
                c.count_a, c.count_b, c.equal, c.complete
            ),
        };
        emit(&text, args.output.output_file.as_deref())?;
        return Ok(if !c.complete {
            ExitCode::from(2)
        } else if c.equal {
            ExitCode::SUCCESS
        } else {
            ExitCode::FAILURE
        });
    }
    let report = sign_decomposition_report(&alg, &name, &opts)?;
    let text = match args.output.out {
        Format::Json => format!("{}\n", serde_json::to_string(&report)?),
        _ => report.to_text(),
    };
    emit(&text, args.output.output_file.as_deref())?;
    Ok(if !report.complete {
        ExitCode::from(2)
    } else if report.consistent {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn run_schur(cmd: &SchurCommand) -> Result<ExitCode> {
    let text = match cmd {
        SchurCommand::Classify { p, n, r, json } => {
            let c = schur::classify(*n, *r, *p)?;
            if *json {
                format!("{}\n", serde_json::to_string(&c)?)
            } else {
                format!("{}\n", c.to_text())
            }
        }
        SchurCommand::Quiver { p, r, dot } => {
            let q = schur::schur2_quiver(*r, *p)?;
            let vs = schur::schur2_vertices(*r);
            let mut s = String::new();
            if *dot {
                s.push_str("digraph schur {\n");
                for v in &vs {
                    s.push_str(&format!("  v{v} [label=\"{v}\"];\n"));
                }
                for a in &q.arrows {
                    s.push_str(&format!("  v{} -> v{};\n", vs[a.from - 1], vs[a.to - 1]));
                }
                s.push_str("}\n");
            } else {
                let labels: Vec<String> = vs.iter().map(u64::to_string).collect();
                s.push_str(&format!("vertices: {}\n", labels.join(" ")));
                for a in &q.arrows {
                    s.push_str(&format!("{} -> {}\n", vs[a.from - 1], vs[a.to - 1]));
                }
            }
            s
        }
        SchurCommand::Report { p, json } => {
            if *json {
                format!("{}\n", serde_json::to_string(&schur::appendix_report(*p)?)?)
            } else {
                schur::appendix_text(*p)?
            }
        }
    };
    emit(&text, None)?;
    Ok(ExitCode::SUCCESS)
}

fn run_catalog(cmd: &CatalogCommand) -> Result<ExitCode> {
    match cmd {
        CatalogCommand::List => {
            let mut s = String::new();
            for e in catalog::list() {
                let name = match e.min_param {
                    Some(m) => format!("{}:m (m ≥ {m})", e.name),
                    None => e.name.to_string(),
                };
                s.push_str(&format!("{name:<22} {}\n", e.description));
            }
            emit(&s, None)?;
        }
        CatalogCommand::Show { name, p, json } => {
            let (base, param) = catalog::parse_spec(name)?;
            let file = catalog::presentation(base, param, *p)?;
            if *json {
                emit(&format!("{}\n", file.to_json()), None)?;
            } else {
                let alg = catalog::get(base, param, *p)?;
                let mut s = format!("{name} over F_{p}: {} vertices, dimension {}\n", alg.n(), alg.dim());
                for a in &file.arrows {
                    s.push_str(&format!("  arrow {}: {} -> {}\n", a.name, a.from, a.to));
                }
                for rel in &file.relations {
                    let terms: Vec<String> = rel.iter().map(|t| format!("{}·{}", t.coeff, t.path.join(""))).collect();
                    s.push_str(&format!("  relation {}\n", terms.join(" + ")));
                }
                s.push_str("  Cartan matrix:\n");
                for row in alg.cartan_matrix() {
                    let r: Vec<String> = row.iter().map(usize::to_string).collect();
                    s.push_str(&format!("    {}\n", r.join(" ")));
                }
                if let Some(c) = catalog::expected_count(base, param) {
                    s.push_str(&format!("  known count: {c}\n"));
                }
                emit(&s, None)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    // Exit code 2 means an incomplete search, so usage errors report 1.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::FAILURE } else { ExitCode::SUCCESS };
        }
    };
    let result = match &cli.command {
        Command::Catalog(c) => run_catalog(c),
        Command::Enumerate(a) => run_enumerate(a),
        Command::SignDecompose(a) => run_sign(a),
        Command::Schur(c) => run_schur(c),
        Command::Verify(a) => verify::run(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
