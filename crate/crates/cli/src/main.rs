mod output;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use conceptnav_core::analytics::{
    load_problems, load_sus, render_problems_table, render_sus_table, sus_summary, AnalyticsError, ProblemsReport,
};
use conceptnav_core::fca::{ConceptLattice, ContextFile, FcaError, FormalContext};
use conceptnav_core::serp::{fetch, load_fixture, parse_serp, write_fixture, ExtractionRules, FetchConfig};
use conceptnav_core::{explore, ExploreError, IngestError, ResultSet, SearchSettings};
use conceptnav_service::ServiceConfig;

const EXIT_HELP: &str = "\
Exit status:
  0  success
  2  input error (unreadable or malformed file, bad flag, failed fetch)
  3  empty or degenerate result (no results, concept limit exceeded)";

#[derive(Parser)]
#[command(name = "conceptnav", version, about = "Browse search results through a concept lattice", after_help = EXIT_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the keyword tree for a result set and print it.
    Search(SearchArgs),
    /// Enumerate the concept lattice of a result set or a raw context.
    Lattice(LatticeArgs),
    /// Run the HTTP API.
    Serve(ServeArgs),
    /// Score SUS questionnaire responses.
    AnalyzeSus(AnalyzeFileArgs),
    /// Cross-tabulate usability problems by severity and principle.
    AnalyzeProblems(AnalyzeFileArgs),
    /// Either analysis, chosen by flag.
    Analyze(AnalyzeArgs),
    /// Save a results page as a fixture.
    ExportFixture(ExportFixtureArgs),
}

#[derive(Args)]
struct TreeFlags {
    #[arg(long)]
    max_depth: Option<usize>,
    #[arg(long)]
    min_extent: Option<usize>,
    #[arg(long)]
    max_children: Option<usize>,
    /// Number of most frequent stems kept as attributes.
    #[arg(long)]
    attribute_cap: Option<usize>,
}

impl TreeFlags {
    fn settings(&self) -> SearchSettings {
        let mut s = SearchSettings::default();
        if let Some(v) = self.max_depth {
            s.tree.max_depth = v;
        }
        if let Some(v) = self.min_extent {
            s.tree.min_extent = v;
        }
        if let Some(v) = self.max_children {
            s.tree.max_children = v;
        }
        if let Some(v) = self.attribute_cap {
            s.attribute_cap = v;
        }
        s
    }
}

#[derive(Args)]
struct SearchArgs {
    /// Query text; defaults to the fixture's query.
    query: Option<String>,
    #[arg(long)]
    fixture: PathBuf,
    #[command(flatten)]
    tree: TreeFlags,
    /// Print the tree as JSON.
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Print an indented outline (the default).
    #[arg(long)]
    text: bool,
}

#[derive(Args)]
struct LatticeArgs {
    #[arg(long, required_unless_present = "context", conflicts_with = "context")]
    fixture: Option<PathBuf>,
    /// JSON file with `objects`, `attributes` and per-object `incidence`.
    #[arg(long)]
    context: Option<PathBuf>,
    /// Write the lattice as JSON to this file.
    #[arg(long)]
    dump: Option<PathBuf>,
    #[command(flatten)]
    tree: TreeFlags,
}

#[derive(Args)]
struct ServeArgs {
    /// TOML config file; CONCEPTNAV_* variables override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    listen: Option<std::net::SocketAddr>,
    #[arg(long)]
    fixture_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Args)]
struct AnalyzeFileArgs {
    file: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct AnalyzeInput {
    #[arg(long)]
    sus: Option<PathBuf>,
    #[arg(long)]
    problems: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: AnalyzeInput,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct ExportFixtureArgs {
    query: String,
    /// Saved results page to parse instead of fetching.
    #[arg(long, conflicts_with = "live")]
    html: Option<PathBuf>,
    /// Fetch the page from the configured search engine.
    #[arg(long)]
    live: bool,
    /// Results page URL with a `{query}` placeholder.
    #[arg(long)]
    url_template: Option<String>,
    /// JSON extraction rules; defaults to the built-in selectors.
    #[arg(long)]
    rules: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<IngestError> for Failure {
    fn from(e: IngestError) -> Self {
        Self::input(e.to_string())
    }
}

impl From<FcaError> for Failure {
    fn from(e: FcaError) -> Self {
        let code = match e {
            FcaError::EmptyContext | FcaError::ResourceLimit { .. } => 3,
            _ => 2,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ExploreError> for Failure {
    fn from(e: ExploreError) -> Self {
        match e {
            ExploreError::Fca(f) => f.into(),
            other => Self::input(other.to_string()),
        }
    }
}

impl From<AnalyticsError> for Failure {
    fn from(e: AnalyticsError) -> Self {
        Self::input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn emit(text: &str) -> Outcome {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())
        .and_then(|()| out.flush())
        .map_err(|e| Failure::input(format!("cannot write output: {e}")))
}

fn load_result_set(path: &Path, query: Option<&str>) -> Result<ResultSet, Failure> {
    let mut rs = load_fixture(path)?;
    if let Some(q) = query {
        let q = q.trim();
        if q.is_empty() {
            return Err(IngestError::EmptyQuery.into());
        }
        rs.query = q.to_string();
    }
    Ok(rs)
}

fn to_json(v: &impl serde::Serialize) -> Result<String, Failure> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Failure::input(e.to_string()))
}

fn cmd_search(args: SearchArgs) -> Outcome {
    let rs = load_result_set(&args.fixture, args.query.as_deref())?;
    let ex = explore(rs, &args.tree.settings())?;
    if args.json {
        emit(&to_json(&ex.tree)?)
    } else {
        emit(&output::tree_text(&ex.result_set, &ex.tree))
    }
}

fn read_context(path: &Path) -> Result<FormalContext, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    let file: ContextFile = serde_json::from_str(&text)
        .map_err(|e| Failure::input(format!("{}: invalid context file: {e}", path.display())))?;
    Ok(FormalContext::try_from(file)?)
}

fn cmd_lattice(args: LatticeArgs) -> Outcome {
    let settings = args.tree.settings();
    let (ctx, lattice) = match (&args.fixture, &args.context) {
        (Some(f), _) => {
            let ex = explore(load_result_set(f, None)?, &settings)?;
            (ex.context, ex.lattice)
        }
        (None, Some(c)) => {
            let ctx = read_context(c)?;
            let l = ConceptLattice::from_context(&ctx, settings.concept_limit)?;
            (ctx, l)
        }
        (None, None) => return Err(Failure::input("one of --fixture or --context is required")),
    };
    if let Some(path) = &args.dump {
        std::fs::write(path, to_json(&lattice.dump(&ctx))?)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))?;
    }
    emit(&output::lattice_text(&ctx, &lattice))
}

fn cmd_serve(args: ServeArgs) -> Outcome {
    let mut cfg = ServiceConfig::load(args.config.as_deref()).map_err(|e| Failure::input(e.to_string()))?;
    if let Some(l) = args.listen {
        cfg.listen = l;
    }
    if let Some(d) = args.fixture_dir {
        cfg.fixture_dir = d;
    }
    tracing_subscriber::fmt()
        .with_env_filter(tracing_subscriber::EnvFilter::try_from_default_env().unwrap_or_else(|_| "info".into()))
        .with_writer(std::io::stderr)
        .init();
    let rt = tokio::runtime::Runtime::new().map_err(|e| Failure::input(e.to_string()))?;
    rt.block_on(conceptnav_service::serve(cfg))
        .map_err(|e| Failure::input(format!("server error: {e}")))
}

fn analyze_sus(path: &Path, format: Format) -> Outcome {
    let summary = sus_summary(&load_sus(path)?)?;
    match format {
        Format::Table => emit(&render_sus_table(&summary)),
        Format::Json => emit(&to_json(&summary)?),
    }
}

fn analyze_problems(path: &Path, format: Format) -> Outcome {
    let report = ProblemsReport::new(&load_problems(path)?)?;
    match format {
        Format::Table => emit(&render_problems_table(&report)),
        Format::Json => emit(&to_json(&report)?),
    }
}

fn cmd_export_fixture(args: ExportFixtureArgs) -> Outcome {
    let rules = match &args.rules {
        Some(p) => {
            let text =
                std::fs::read_to_string(p).map_err(|e| Failure::input(format!("cannot read {}: {e}", p.display())))?;
            ExtractionRules::from_json(&text)?
        }
        None => ExtractionRules::default(),
    };
    let html = match (&args.html, args.live) {
        (Some(p), _) => {
            std::fs::read_to_string(p).map_err(|e| Failure::input(format!("cannot read {}: {e}", p.display())))?
        }
        (None, true) => {
            let mut cfg = FetchConfig {
                live_mode: true,
                ..Default::default()
            };
            if let Some(t) = &args.url_template {
                cfg.url_template = t.clone();
            }
            let rt = tokio::runtime::Runtime::new().map_err(|e| Failure::input(e.to_string()))?;
            rt.block_on(fetch(&args.query, &cfg))?
        }
        (None, false) => return Err(Failure::input("one of --html or --live is required")),
    };
    let parsed = parse_serp(&html, &rules, &args.query)?;
    for w in &parsed.warnings {
        eprintln!("warning: result block {} skipped: {}", w.block, w.reason);
    }
    write_fixture(&parsed.result_set, &args.out)?;
    emit(&format!(
        "wrote {} results to {}\n",
        parsed.result_set.len(),
        args.out.display()
    ))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Search(a) => cmd_search(a),
        Command::Lattice(a) => cmd_lattice(a),
        Command::Serve(a) => cmd_serve(a),
        Command::AnalyzeSus(a) => analyze_sus(&a.file, a.format),
        Command::AnalyzeProblems(a) => analyze_problems(&a.file, a.format),
        Command::Analyze(a) => match (a.input.sus, a.input.problems) {
            (Some(p), _) => analyze_sus(&p, a.format),
            (None, Some(p)) => analyze_problems(&p, a.format),
            (None, None) => Err(Failure::input("one of --sus or --problems is required")),
        },
        Command::ExportFixture(a) => cmd_export_fixture(a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
