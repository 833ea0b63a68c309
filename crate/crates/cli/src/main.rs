//! `fusionring`: build, verify and analyse fusion rings from the command line.
//!
//! Exit codes: 0 success, 10 eliminated by an obstruction, 2 input error,
//! 3 internal invariant breach.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fusionring::classify::{
    classify_elementary2, classify_generic, default_residue_filter, scan_prime_levels, LevelReport, LevelStatus,
    ScanOptions,
};
use fusionring::construct::{
    character_ring, dihedral_character_ring, group_ring, haagerup_izumi, near_group, uniform_two_orbit,
};
use fusionring::dims::{dimension_profile, fpdim_total, fpdims};
use fusionring::numbers::AlgebraicReal;
use fusionring::numbertheory::scan_phi_ratio_bound;
use fusionring::obstruct::{run_all, Outcome};
use fusionring::repr::{codegree_spectrum, uniform_irreps};
use fusionring::serial::{algebraic_json, character_table_from_json, rational_string, ring_from_str, ring_to_json_string};
use fusionring::{AbelianGroupSpec, FiniteGroup, FusionError, FusionRing};

const EXIT_OK: u8 = 0;
const EXIT_ELIMINATED: u8 = 10;
const EXIT_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "fusionring", version, about = "Exact fusion ring invariants and categorifiability obstructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    /// Shorthand for `--format csv`.
    #[arg(long, global = true, conflicts_with = "json")]
    csv: bool,
    /// Worker threads for scans.
    #[arg(long, global = true, env = "FUSIONRING_JOBS")]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a ring and write it in the canonical format.
    Build {
        #[command(subcommand)]
        kind: BuildKind,
        /// Write to this file instead of standard output.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Check the fusion ring axioms.
    Verify { file: PathBuf },
    /// Frobenius–Perron dimensions.
    Fpdim { file: PathBuf },
    /// Formal codegrees from the spectrum of `Σ N_x N_x*`.
    Codegrees { file: PathBuf },
    /// Explicit irreducible representations of a uniform two-orbit ring.
    Irreps { file: PathBuf },
    /// Run every categorifiability obstruction.
    Obstruct { file: PathBuf },
    /// Level classification tables.
    Classify {
        #[command(subcommand)]
        kind: ClassifyKind,
    },
    /// Check `φ(2c)/√c ≥ 2/√3` for all square-free `2 ≤ c ≤ limit`.
    RatioBound {
        #[arg(long, default_value_t = 1_000_000)]
        limit: u64,
    },
}

#[derive(Args)]
struct GroupArg {
    /// Cyclic factors such as `2,2`, or `s3`.
    #[arg(long)]
    group: String,
}

#[derive(Subcommand)]
enum BuildKind {
    /// The group ring ZG.
    Group(GroupArg),
    /// The near-group ring R(G, level).
    Neargroup {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        level: u32,
    },
    /// The Haagerup–Izumi ring of an abelian group.
    HaagerupIzumi(GroupArg),
    /// A uniform two-orbit ring from (G, H, θ, k).
    Uniform {
        #[command(flatten)]
        group: GroupArg,
        /// Stabilizer elements, as group element indices.
        #[arg(long, value_delimiter = ',')]
        stab: Vec<usize>,
        /// θ as a permutation of the cosets of H, ordered by least element.
        #[arg(long, value_delimiter = ',')]
        theta: Vec<usize>,
        #[arg(long)]
        k: u32,
    },
    /// The character ring of a character table file.
    Charring {
        #[arg(long)]
        table: PathBuf,
    },
    /// The character ring of the dihedral group of order 2n.
    Dihedral {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum ClassifyKind {
    /// Near-group levels for G = C2^m.
    Elementary2 {
        #[arg(long)]
        m: u32,
    },
    /// Near-group levels kp for G = C_p, p prime and 3 mod 4.
    Prime {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        kmax: u64,
        /// Drop square-free parts divisible by these primes.
        #[arg(long, value_delimiter = ',', conflicts_with = "no_filter")]
        residue_filter: Option<Vec<u64>>,
        /// Apply no residue filter, not even the default for p.
        #[arg(long)]
        no_filter: bool,
        /// Also drop levels l >= p^2 (conjectural, not proven).
        #[arg(long)]
        conjecture_cutoff: bool,
    },
    /// A single ring: literature, then obstructions.
    Ring { file: PathBuf },
}

/// What a command prints, in each format.
struct Output {
    human: String,
    json: Value,
    /// Header row first.
    csv: Vec<Vec<String>>,
    exit: u8,
}

impl Output {
    fn new(human: String, json: Value, csv: Vec<Vec<String>>) -> Self {
        Output { human, json, csv, exit: EXIT_OK }
    }

    fn with_exit(mut self, code: u8) -> Self {
        self.exit = code;
        self
    }
}

enum CliError {
    Input(String),
    Internal(String),
}

impl From<FusionError> for CliError {
    fn from(e: FusionError) -> Self {
        match e {
            FusionError::CertificationFailed(_) => CliError::Internal(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn parse_group(s: &str) -> CliResult<FiniteGroup> {
    if s.eq_ignore_ascii_case("s3") {
        return Ok(FiniteGroup::symmetric3());
    }
    let factors = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| CliError::Input(format!("bad group factor {t:?}"))))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(AbelianGroupSpec::new(factors)?.to_group())
}

fn read_ring(path: &Path) -> CliResult<FusionRing> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(ring_from_str(&text)?)
}

fn read_verified(path: &Path) -> CliResult<FusionRing> {
    let ring = read_ring(path)?;
    ring.ensure_verified()?;
    Ok(ring)
}

/// `(a, b, D)` for quadratic values, `root of p in (lo, hi]` otherwise.
fn exact_text(v: &AlgebraicReal) -> String {
    match v {
        AlgebraicReal::Quadratic(q) => {
            format!("({}, {}, {})", rational_string(q.a()), rational_string(q.b()), q.radicand())
        }
        AlgebraicReal::Isolated { poly, lo, hi } => {
            format!("root of {poly} in ({}, {}]", rational_string(lo), rational_string(hi))
        }
    }
}

fn build(kind: &BuildKind) -> CliResult<FusionRing> {
    Ok(match kind {
        BuildKind::Group(g) => group_ring(&parse_group(&g.group)?),
        BuildKind::Neargroup { group, level } => near_group(&parse_group(&group.group)?, *level),
        BuildKind::HaagerupIzumi(g) => haagerup_izumi(&parse_group(&g.group)?)?,
        BuildKind::Uniform { group, stab, theta, k } => uniform_two_orbit(&parse_group(&group.group)?, stab, theta, *k)?,
        BuildKind::Charring { table } => {
            let text = fs::read_to_string(table).map_err(|e| CliError::Input(format!("{}: {e}", table.display())))?;
            let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Input(format!("invalid JSON: {e}")))?;
            character_ring(&character_table_from_json(&v)?)?
        }
        BuildKind::Dihedral { n } => dihedral_character_ring(*n)?,
    })
}

fn verify(path: &Path) -> CliResult<Output> {
    let ring = read_ring(path)?;
    let report = ring.verify_axioms();
    let mut human = String::new();
    let mut csv = vec![vec!["violation".to_string()]];
    if report.is_ok() {
        human.push_str(&format!("ok: rank {} fusion ring\n", ring.rank()));
    } else {
        human.push_str(&format!("{} violation(s):\n", report.violations.len()));
        for v in &report.violations {
            human.push_str(&format!("  {v}\n"));
            csv.push(vec![v.to_string()]);
        }
    }
    let json = json!({ "rank": ring.rank(), "ok": report.is_ok(), "violations": report.violations });
    let code = if report.is_ok() { EXIT_OK } else { EXIT_INPUT };
    Ok(Output::new(human, json, csv).with_exit(code))
}

fn fpdim(path: &Path) -> CliResult<Output> {
    let ring = read_verified(path)?;
    let dims = fpdims(&ring)?;
    let total = fpdim_total(&ring)?;
    let mut human = String::new();
    let mut csv = vec![vec!["index".into(), "label".into(), "fpdim".into()]];
    let mut rows = Vec::new();
    for (i, d) in dims.iter().enumerate() {
        let label = &ring.labels()[i];
        human.push_str(&format!("{i:>4}  {label:<12} {d}\n"));
        csv.push(vec![i.to_string(), label.clone(), exact_text(d)]);
        rows.push(json!({ "index": i, "label": label, "fpdim": algebraic_json(d) }));
    }
    human.push_str(&format!("FPdim(R) = {total}\n"));
    let mut json = json!({ "fpdims": rows, "total": algebraic_json(&total) });
    if let Ok(p) = dimension_profile(&ring) {
        if p.is_two_dimension {
            human.push_str(&format!("two-dimension: d^2 = {} d + {}\n", p.r, p.s));
            json["profile"] = serde_json::to_value(&p).expect("serializable");
        }
    }
    Ok(Output::new(human, json, csv))
}

fn codegrees(path: &Path) -> CliResult<Output> {
    let ring = read_verified(path)?;
    let spec = codegree_spectrum(&ring)?;
    let mut human = String::from("eigenvalue  multiplicity  dim  codegree\n");
    let mut csv = vec![vec!["eigenvalue".into(), "multiplicity".into(), "dim".into(), "codegree".into()]];
    let mut rows = Vec::new();
    for c in &spec {
        let value = c.value();
        let dim = c.dim_hint.map_or("?".to_string(), |d| d.to_string());
        let vtext = value.as_ref().map_or("?".to_string(), |v| v.to_string());
        human.push_str(&format!("{}  {}  {dim}  {vtext}\n", c.eigenvalue, c.eigen_multiplicity));
        csv.push(vec![
            exact_text(&c.eigenvalue),
            c.eigen_multiplicity.to_string(),
            c.dim_hint.map_or(String::new(), |d| d.to_string()),
            value.as_ref().map_or(String::new(), exact_text),
        ]);
        let mut row = serde_json::to_value(c).expect("serializable");
        row["codegree"] = value.as_ref().map_or(Value::Null, algebraic_json);
        rows.push(row);
    }
    Ok(Output::new(human, json!({ "codegrees": rows }), csv))
}

fn irreps(path: &Path) -> CliResult<Output> {
    let ring = read_verified(path)?;
    let models = uniform_irreps(&ring)?;
    let mut human = String::new();
    let mut csv = vec![vec!["index".into(), "dim".into(), "source".into(), "codegree".into()]];
    let mut rows = Vec::new();
    for (i, m) in models.iter().enumerate() {
        if !m.is_homomorphism(&ring) {
            return Err(CliError::Internal(format!("model {i} is not a representation")));
        }
        let f = m.codegree(&ring).map_or("?".to_string(), |t| t.to_string());
        human.push_str(&format!("{i:>3}  dim {}  {}  codegree {f}\n", m.dim, m.source));
        csv.push(vec![i.to_string(), m.dim.to_string(), m.source.to_string(), f.clone()]);
        let character: Vec<String> = m.character().iter().map(ToString::to_string).collect();
        rows.push(json!({
            "dim": m.dim,
            "source": m.source,
            "root_order": m.root_order,
            "radicand": m.radicand,
            "codegree": f,
            "character": character,
        }));
    }
    let total: usize = models.iter().map(|m| m.dim * m.dim).sum();
    human.push_str(&format!("sum of dim^2 = {total} (rank {})\n", ring.rank()));
    Ok(Output::new(human, json!({ "irreps": rows, "sum_dim_squared": total }), csv))
}

fn obstruct(path: &Path) -> CliResult<Output> {
    let ring = read_verified(path)?;
    let report = run_all(&ring)?;
    let mut human = String::new();
    let mut csv = vec![vec!["test".into(), "outcome".into(), "reason".into()]];
    for v in &report.verdicts {
        human.push_str(&format!("{:<20} {:<15} {}\n", v.test_name, v.outcome, v.reason));
        csv.push(vec![v.test_name.to_string(), v.outcome.to_string(), v.reason.clone()]);
    }
    human.push_str(match report.eliminated_by {
        Some(t) => format!("eliminated by {t}\n"),
        None => "not eliminated\n".to_string(),
    }
    .as_str());
    let code = if report.eliminated { EXIT_ELIMINATED } else { EXIT_OK };
    Ok(Output::new(human, serde_json::to_value(&report).expect("serializable"), csv).with_exit(code))
}

fn report_output(r: &LevelReport) -> Output {
    let mut human = format!("{}: levels not eliminated {:?}\n", r.group, r.open_levels());
    let mut csv = vec![["level", "k", "status", "eliminated_by", "literature", "x", "flags"].map(String::from).to_vec()];
    let opt = |v: Option<u64>| v.map_or(String::new(), |x| x.to_string());
    for e in r.levels.iter().chain(&r.filtered_out) {
        let filtered = r.filtered_out.iter().any(|f| std::ptr::eq(f, e));
        let status = if filtered { "filtered".to_string() } else { e.status.to_string() };
        let why = e
            .literature
            .map(String::from)
            .or_else(|| e.eliminated_by.map(|t| t.to_string()))
            .unwrap_or_default();
        let x = e.x.map_or(String::new(), |x| format!("  x = {x}"));
        let flags = if e.flags.is_empty() { String::new() } else { format!("  [{}]", e.flags.join("; ")) };
        human.push_str(&format!("  l = {:<8} {status:<21} {why}{x}{flags}\n", e.level));
        csv.push(vec![
            e.level.to_string(),
            opt(e.k),
            status,
            e.eliminated_by.map_or(String::new(), |t| t.to_string()),
            e.literature.unwrap_or_default().to_string(),
            opt(e.x),
            e.flags.join("; "),
        ]);
    }
    for rule in &r.rules {
        human.push_str(&format!("  {}: {} ({})\n", rule.levels, rule.status, rule.reason));
    }
    if !r.filters_applied.is_empty() {
        human.push_str(&format!("  filters: {}\n", r.filters_applied.join(", ")));
    }
    Output::new(human, serde_json::to_value(r).expect("serializable"), csv)
}

fn classify(kind: &ClassifyKind, jobs: Option<usize>) -> CliResult<Output> {
    match kind {
        ClassifyKind::Elementary2 { m } => Ok(report_output(&classify_elementary2(*m)?)),
        ClassifyKind::Prime { p, kmax, residue_filter, no_filter, conjecture_cutoff } => {
            let filter = match (residue_filter, no_filter) {
                (Some(f), _) => Some(f.clone()),
                (None, true) => None,
                (None, false) => default_residue_filter(*p),
            };
            let opts = ScanOptions { jobs, conjecture_cutoff: *conjecture_cutoff };
            Ok(report_output(&scan_prime_levels(*p, *kmax, filter.as_deref(), &opts)?))
        }
        ClassifyKind::Ring { file } => {
            let ring = read_verified(file)?;
            let r = classify_generic(&ring)?;
            let mut human = format!("status: {}\n", r.status);
            if let Some(t) = r.literature {
                human.push_str(&format!("literature: {t}\n"));
            }
            let mut csv = vec![vec!["test".into(), "outcome".into(), "reason".into()]];
            for v in r.obstructions.verdicts.iter().filter(|v| v.outcome != Outcome::NotApplicable) {
                human.push_str(&format!("  {:<20} {:<12} {}\n", v.test_name, v.outcome, v.reason));
                csv.push(vec![v.test_name.to_string(), v.outcome.to_string(), v.reason.clone()]);
            }
            let code = if r.status == LevelStatus::Eliminated { EXIT_ELIMINATED } else { EXIT_OK };
            Ok(Output::new(human, serde_json::to_value(&r).expect("serializable"), csv).with_exit(code))
        }
    }
}

fn ratio_bound(limit: u64) -> Output {
    let s = scan_phi_ratio_bound(limit);
    let human = format!(
        "checked {} square-free c in [2, {}]: {} violation(s), equality at {:?}\n",
        s.squarefree_checked,
        s.limit,
        s.violations.len(),
        s.equality_at
    );
    let csv = vec![
        vec!["limit".into(), "checked".into(), "violations".into(), "equality_at".into()],
        vec![
            s.limit.to_string(),
            s.squarefree_checked.to_string(),
            s.violations.len().to_string(),
            format!("{:?}", s.equality_at),
        ],
    ];
    let code = if s.violations.is_empty() { EXIT_OK } else { EXIT_INTERNAL };
    Output::new(human, serde_json::to_value(&s).expect("serializable"), csv).with_exit(code)
}

fn run(cli: &Cli) -> CliResult<Option<Output>> {
    match &cli.command {
        Command::Build { kind, out } => {
            let ring = build(kind)?;
            let text = ring_to_json_string(&ring);
            match out {
                Some(path) => {
                    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
                }
                None => write_stdout(&text)?,
            }
            Ok(None)
        }
        Command::Verify { file } => verify(file).map(Some),
        Command::Fpdim { file } => fpdim(file).map(Some),
        Command::Codegrees { file } => codegrees(file).map(Some),
        Command::Irreps { file } => irreps(file).map(Some),
        Command::Obstruct { file } => obstruct(file).map(Some),
        Command::Classify { kind } => classify(kind, cli.jobs).map(Some),
        Command::RatioBound { limit } => Ok(Some(ratio_bound(*limit))),
    }
}

fn write_stdout(text: &str) -> CliResult<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Input(format!("stdout: {e}"))),
        _ => Ok(()),
    }
}

fn emit(out: &Output, format: Format) -> CliResult<()> {
    match format {
        Format::Human => write_stdout(&out.human),
        Format::Json => write_stdout(&(serde_json::to_string_pretty(&out.json).expect("serializable") + "\n")),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in &out.csv {
                w.write_record(row).map_err(|e| CliError::Internal(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
            write_stdout(&String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        cli.format
    };
    let result = std::panic::catch_unwind(|| run(&cli).and_then(|o| o.map_or(Ok(EXIT_OK), |o| emit(&o, format).map(|_| o.exit))));
    match result {
        Ok(Ok(code)) => ExitCode::from(code),
        Ok(Err(CliError::Input(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Ok(Err(CliError::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
        Err(_) => ExitCode::from(EXIT_INTERNAL),
    }
}
