//! `fusscat` — counts, listings, lattice structure, statistics, character
//! expansions, and verification runs for slope-parameterized lattice paths
//! and parking words.
//!
//! Output formats: `--format text` (default), `json`, and `csv` (tabular
//! commands only).  JSON schemas are documented in `docs/schemas.md`.
//!
//! Exit codes: 0 success; 1 verification/diff/computation failure; 2 usage
//! error; 3 enumeration cap exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use fusscat_core::dyck::{self, DyckPath};
use fusscat_core::frobenius::{self, ParkingFrobeniusForm, QPairsForm};
use fusscat_core::parking::{self, ParkingFunction};
use fusscat_core::symfunc::{SymBasis, SymFunc};
use fusscat_core::tamari::{self, TamariLattice, TStatistic};
use fusscat_core::verify::{self, VerifyConfig};
use fusscat_core::{series, Error as CoreError};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "fusscat",
    version,
    about = "Exact computations for slope-parameterized paths, lattices, and parking words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format (csv is available for tabular commands only).
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Abort (exit code 3) if an enumeration would produce more objects.
    #[arg(long, global = true, default_value_t = fusscat_core::DEFAULT_ENUMERATION_CAP)]
    cap: u64,

    /// Worker threads for parallel commands (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, ValueEnum, Default)]
enum TStatArg {
    /// Grade t by the longest-chain distance to the lattice top.
    #[default]
    LongestChain,
    /// Grade t by the coarea of the interval's upper endpoint.
    Coarea,
}

impl TStatArg {
    fn to_core(self) -> TStatistic {
        match self {
            TStatArg::LongestChain => TStatistic::LongestChain,
            TStatArg::Coarea => TStatistic::Coarea,
        }
    }

    fn label(self) -> &'static str {
        match self {
            TStatArg::LongestChain => "longest-chain",
            TStatArg::Coarea => "coarea",
        }
    }
}

#[derive(Copy, Clone, ValueEnum, Default)]
enum ParkingFormArg {
    /// Sum of complete homogeneous terms over enumerated words.
    #[default]
    HSum,
    /// Closed form on the power-sum basis.
    PForm,
    /// Closed form on the monomial basis.
    MForm,
    /// Closed form on the Schur basis (specialized principal evaluation).
    SForm,
    /// Closed form on the complete homogeneous basis.
    HClosed,
}

impl ParkingFormArg {
    fn to_core(self) -> ParkingFrobeniusForm {
        match self {
            ParkingFormArg::HSum => ParkingFrobeniusForm::HSum,
            ParkingFormArg::PForm => ParkingFrobeniusForm::PForm,
            ParkingFormArg::MForm => ParkingFrobeniusForm::MForm,
            ParkingFormArg::SForm => ParkingFrobeniusForm::SForm,
            ParkingFormArg::HClosed => ParkingFrobeniusForm::HClosed,
        }
    }
}

#[derive(Copy, Clone, ValueEnum, Default)]
enum QPairsFormArg {
    /// Sum of complete homogeneous terms over enumerated pairs.
    #[default]
    HSum,
    /// Closed form on the monomial basis.
    MForm,
}

impl QPairsFormArg {
    fn to_core(self) -> QPairsForm {
        match self {
            QPairsFormArg::HSum => QPairsForm::HSum,
            QPairsFormArg::MForm => QPairsForm::MForm,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum BasisArg {
    M,
    E,
    H,
    P,
    S,
}

impl BasisArg {
    fn to_core(self) -> SymBasis {
        match self {
            BasisArg::M => SymBasis::Monomial,
            BasisArg::E => SymBasis::Elementary,
            BasisArg::H => SymBasis::Complete,
            BasisArg::P => SymBasis::Power,
            BasisArg::S => SymBasis::Schur,
        }
    }
}

#[derive(Args)]
struct RnArgs {
    /// Slope parameter (at least 1).
    #[arg(long)]
    r: u32,
    /// Size (number of code entries; at least 1).
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct CountArgs {
    /// Slope parameter (at least 1).
    #[arg(long)]
    r: u32,
    /// Size to count at (mutually exclusive with --n-max).
    #[arg(long, conflicts_with = "n_max")]
    n: Option<usize>,
    /// Count every size from 1 through this bound.
    #[arg(long)]
    n_max: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Count slope-r paths of size n (closed product formula).
    CountPaths(CountArgs),
    /// List slope-r paths in lexicographic code order.
    ListPaths(RnArgs),
    /// Area generating polynomial of slope-r paths of size n.
    AreaPoly(RnArgs),
    /// Cover relations of the rotation lattice on slope-r paths.
    TamariHasse(RnArgs),
    /// Count the lattice's order intervals; --list prints them.
    Intervals {
        #[command(flatten)]
        rn: RnArgs,
        /// Print every interval as "lower upper".
        #[arg(long)]
        list: bool,
    },
    /// Two-variable interval polynomial of the rotation lattice.
    QtPoly {
        #[command(flatten)]
        rn: RnArgs,
        /// Statistic grading the t variable.
        #[arg(long, value_enum, default_value_t)]
        t_statistic: TStatArg,
    },
    /// Moebius function of the rotation lattice.
    Mobius {
        #[command(flatten)]
        rn: RnArgs,
        /// Lower endpoint (compact code); requires --upper.
        #[arg(long, requires = "upper")]
        lower: Option<String>,
        /// Upper endpoint (compact code); requires --lower.
        #[arg(long, requires = "lower")]
        upper: Option<String>,
    },
    /// Parking-word commands.
    #[command(subcommand)]
    Parking(ParkingCmd),
    /// Pairs (path, word) with the path below the word's shape.
    QPairs {
        #[command(flatten)]
        count: CountArgs,
        /// Print every pair as "path word" (requires --n).
        #[arg(long)]
        list: bool,
    },
    /// Character expansions on symmetric-function bases.
    #[command(subcommand)]
    Frobenius(FrobeniusCmd),
    /// Check the generating-series identity suite to a truncation order.
    VerifySeries {
        /// Largest slope parameter instantiated.
        #[arg(long, default_value_t = 2)]
        r_max: u32,
        /// Largest branching parameter instantiated.
        #[arg(long, default_value_t = 4)]
        b_max: u64,
        /// Truncation order.
        #[arg(long, default_value_t = fusscat_core::DEFAULT_SERIES_CAP)]
        series_cap: usize,
    },
    /// Run the named verification checks (exit 1 if any fails).
    Verify {
        /// One suite name, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest slope parameter exercised by range checks.
        #[arg(long, default_value_t = 2)]
        r_max: u32,
        /// Largest size exercised by range checks.
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Truncation order for series checks.
        #[arg(long, default_value_t = fusscat_core::DEFAULT_SERIES_CAP)]
        series_cap: usize,
        /// Fixture directory (default: $FUSSCAT_FIXTURES, then ./fixtures).
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Recompute the stored fixtures and diff them (exit 1 on any mismatch).
    CompareFixtures {
        /// Fixture directory (default: $FUSSCAT_FIXTURES, then ./fixtures).
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Compare a single fixture by name.
        #[arg(long)]
        name: Option<String>,
    },
}

#[derive(Subcommand)]
enum ParkingCmd {
    /// Count parking words ((rn+1)^(n-1)).
    Count(CountArgs),
    /// List parking words in lexicographic order.
    List(RnArgs),
    /// Group parking words by their standardizing permutation.
    Blocks(RnArgs),
    /// Statistics of one parking word.
    Stats {
        /// Slope parameter (at least 1).
        #[arg(long)]
        r: u32,
        /// The word, comma-separated (e.g. 6,10,12,12,3,0,3,0).
        #[arg(long, value_delimiter = ',', required = true)]
        word: Vec<u32>,
    },
}

#[derive(Subcommand)]
enum FrobeniusCmd {
    /// Character of the parking-word module.
    Parking {
        #[command(flatten)]
        rn: RnArgs,
        /// Which of the equivalent closed forms to evaluate.
        #[arg(long, value_enum, default_value_t)]
        form: ParkingFormArg,
        /// Convert the result to this basis (default: the form's own).
        #[arg(long, value_enum)]
        basis: Option<BasisArg>,
    },
    /// Graded-ring character numerator (Schur basis, q-polynomial coefficients).
    Ring {
        /// Number of variables.
        #[arg(long)]
        n: u32,
    },
    /// Character of the pair module (path below a word's shape).
    QPairs {
        #[command(flatten)]
        rn: RnArgs,
        /// Which of the equivalent closed forms to evaluate.
        #[arg(long, value_enum, default_value_t)]
        form: QPairsFormArg,
        /// Convert the result to this basis (default: the form's own).
        #[arg(long, value_enum)]
        basis: Option<BasisArg>,
    },
    /// Area-graded elementary sum over paths.
    Bivariate {
        #[command(flatten)]
        rn: RnArgs,
    },
    /// Chain-distance-graded elementary sum over lattice intervals.
    Trivariate {
        #[command(flatten)]
        rn: RnArgs,
    },
    /// Area/dinv-graded sum over parking words (Schur basis).
    Shuffle {
        #[command(flatten)]
        rn: RnArgs,
        /// Grade by chain distance over intervals instead of area.
        #[arg(long)]
        chain_graded: bool,
    },
    /// Report the t=1 / t=0 specialization comparison (observation only).
    CompareSpecializations {
        #[command(flatten)]
        rn: RnArgs,
    },
}

/// A command failure, tagged with the process exit code it maps to.
enum Failure {
    /// Exit 1: a verification failed, a fixture differed, or a computation
    /// could not be completed.
    Failed(String),
    /// Exit 2: arguments outside the command's domain.
    Usage(String),
    /// Exit 3: an enumeration exceeded `--cap`.
    Cap(String),
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::ResourceCap { .. } => Failure::Cap(e.to_string()),
            CoreError::InvalidParameter(_)
            | CoreError::InvalidPath { .. }
            | CoreError::InvalidParking { .. }
            | CoreError::InvalidArray { .. }
            | CoreError::InvalidPartition { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Failed(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    // Die quietly when the read end of a pipe closes (e.g. `fusscat … | head`)
    // instead of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // Best effort: the global pool can only be initialized once.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("resource cap: {msg}");
            ExitCode::from(3)
        }
    }
}

fn require_positive(name: &str, value: u64) -> CmdResult {
    if value == 0 {
        return Err(Failure::Usage(format!("--{name} must be at least 1")));
    }
    Ok(())
}

fn validate_rn(r: u32, n: usize) -> CmdResult {
    require_positive("r", u64::from(r))?;
    require_positive("n", n as u64)
}

fn no_csv(format: Format) -> CmdResult {
    if format == Format::Csv {
        return Err(Failure::Usage(
            "csv output is not available for this command (see docs/schemas.md)".into(),
        ));
    }
    Ok(())
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn fixtures_dir(flag: &Option<PathBuf>) -> PathBuf {
    flag.clone()
        .or_else(|| std::env::var_os("FUSSCAT_FIXTURES").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("fixtures"))
}

fn sym_to_json(f: &SymFunc) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(lambda, coeff)| {
            json!({ "partition": lambda.parts(), "coeff": coeff.to_string() })
        })
        .collect();
    json!({ "basis": f.basis().letter().to_string(), "terms": terms })
}

fn print_symfunc(format: Format, f: &SymFunc) -> CmdResult {
    no_csv(format)?;
    match format {
        Format::Text => println!("{f}"),
        Format::Json => print_json(&sym_to_json(f)),
        Format::Csv => unreachable!(),
    }
    Ok(())
}

fn convert_if_requested(f: SymFunc, basis: Option<BasisArg>) -> Result<SymFunc, Failure> {
    match basis {
        None => Ok(f),
        Some(b) => Ok(f.to_basis(b.to_core())?),
    }
}

/// Print one count or a 1..=n_max table, in any format.
fn print_counts(
    format: Format,
    r: u32,
    rows: &[(usize, num_bigint::BigUint)],
    single: bool,
) -> CmdResult {
    match format {
        Format::Text => {
            for (n, count) in rows {
                if single {
                    println!("{count}");
                } else {
                    println!("n={n}: {count}");
                }
            }
        }
        Format::Json => {
            if single {
                let (n, count) = &rows[0];
                print_json(&json!({ "r": r, "n": n, "count": count.to_string() }));
            } else {
                let counts: Vec<Value> = rows
                    .iter()
                    .map(|(n, c)| json!({ "n": n, "count": c.to_string() }))
                    .collect();
                print_json(&json!({ "r": r, "counts": counts }));
            }
        }
        Format::Csv => {
            println!("r,n,count");
            for (n, count) in rows {
                println!("{r},{n},{count}");
            }
        }
    }
    Ok(())
}

fn count_rows(
    args: &CountArgs,
    count_at: impl Fn(u32, usize) -> num_bigint::BigUint,
) -> Result<(Vec<(usize, num_bigint::BigUint)>, bool), Failure> {
    require_positive("r", u64::from(args.r))?;
    match (args.n, args.n_max) {
        (Some(n), None) => {
            require_positive("n", n as u64)?;
            Ok((vec![(n, count_at(args.r, n))], true))
        }
        (None, Some(n_max)) => {
            require_positive("n-max", n_max as u64)?;
            Ok(((1..=n_max).map(|n| (n, count_at(args.r, n))).collect(), false))
        }
        (None, None) => Err(Failure::Usage("pass exactly one of --n and --n-max".into())),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    }
}

fn parse_path(lattice: &TamariLattice, which: &str, code: &str) -> Result<usize, Failure> {
    let path = DyckPath::parse_compact(lattice.r(), code)
        .map_err(|e| Failure::Usage(format!("--{which}: {e}")))?;
    Ok(lattice.index_of(&path)?)
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::CountPaths(args) => {
            let (rows, single) = count_rows(args, |r, n| dyck::fuss_catalan(r, n as u32))?;
            print_counts(cli.format, args.r, &rows, single)
        }
        Command::ListPaths(rn) => {
            validate_rn(rn.r, rn.n)?;
            let paths = dyck::enumerate(rn.r, rn.n, cli.cap)?;
            let codes: Vec<String> = paths.iter().map(DyckPath::to_compact_string).collect();
            match cli.format {
                Format::Text => codes.iter().for_each(|c| println!("{c}")),
                Format::Json => {
                    print_json(&json!({ "r": rn.r, "n": rn.n, "paths": codes }));
                }
                Format::Csv => {
                    println!("code");
                    codes.iter().for_each(|c| println!("{}", csv_field(c)));
                }
            }
            Ok(())
        }
        Command::AreaPoly(rn) => {
            validate_rn(rn.r, rn.n)?;
            let poly = dyck::area_polynomial(rn.r, rn.n, cli.cap)?;
            no_csv(cli.format)?;
            match cli.format {
                Format::Text => println!("{poly}"),
                Format::Json => print_json(&json!({
                    "r": rn.r, "n": rn.n, "polynomial": poly.to_string(),
                })),
                Format::Csv => unreachable!(),
            }
            Ok(())
        }
        Command::TamariHasse(rn) => {
            validate_rn(rn.r, rn.n)?;
            let lattice = TamariLattice::new(rn.r, rn.n, cli.cap)?;
            let nodes: Vec<String> = (0..lattice.size())
                .map(|i| lattice.path(i).to_compact_string())
                .collect();
            let covers = lattice.hasse_edges();
            match cli.format {
                Format::Text => {
                    for &(lo, hi) in &covers {
                        println!("{} -> {}", nodes[lo], nodes[hi]);
                    }
                }
                Format::Json => print_json(&json!({
                    "r": rn.r, "n": rn.n, "nodes": nodes, "covers": covers,
                })),
                Format::Csv => {
                    println!("lower,upper");
                    for &(lo, hi) in &covers {
                        println!("{},{}", csv_field(&nodes[lo]), csv_field(&nodes[hi]));
                    }
                }
            }
            Ok(())
        }
        Command::Intervals { rn, list } => {
            validate_rn(rn.r, rn.n)?;
            let lattice = TamariLattice::new(rn.r, rn.n, cli.cap)?;
            let intervals = lattice.intervals();
            let formula = tamari::interval_count(u64::from(rn.r), rn.n as u64);
            if num_bigint::BigUint::from(intervals.len() as u64) != formula {
                return Err(Failure::Failed(format!(
                    "enumerated {} intervals but the closed formula gives {formula}",
                    intervals.len()
                )));
            }
            let pairs: Vec<(String, String)> = intervals
                .iter()
                .map(|&(lo, hi)| {
                    (
                        lattice.path(lo).to_compact_string(),
                        lattice.path(hi).to_compact_string(),
                    )
                })
                .collect();
            match cli.format {
                Format::Text => {
                    if *list {
                        for (lo, hi) in &pairs {
                            println!("{lo} {hi}");
                        }
                    } else {
                        println!("{formula}");
                    }
                }
                Format::Json => {
                    let mut obj = json!({
                        "r": rn.r, "n": rn.n, "count": formula.to_string(),
                    });
                    if *list {
                        obj["intervals"] = json!(pairs);
                    }
                    print_json(&obj);
                }
                Format::Csv => {
                    if *list {
                        println!("lower,upper");
                        for (lo, hi) in &pairs {
                            println!("{},{}", csv_field(lo), csv_field(hi));
                        }
                    } else {
                        println!("r,n,count");
                        println!("{},{},{}", rn.r, rn.n, formula);
                    }
                }
            }
            Ok(())
        }
        Command::QtPoly { rn, t_statistic } => {
            validate_rn(rn.r, rn.n)?;
            no_csv(cli.format)?;
            let lattice = TamariLattice::new(rn.r, rn.n, cli.cap)?;
            let poly = lattice.qt_interval_polynomial(t_statistic.to_core());
            match cli.format {
                Format::Text => println!("{poly}"),
                Format::Json => print_json(&json!({
                    "r": rn.r, "n": rn.n,
                    "t_statistic": t_statistic.label(),
                    "polynomial": poly.to_string(),
                })),
                Format::Csv => unreachable!(),
            }
            Ok(())
        }
        Command::Mobius { rn, lower, upper } => {
            validate_rn(rn.r, rn.n)?;
            let lattice = TamariLattice::new(rn.r, rn.n, cli.cap)?;
            if let (Some(lo_code), Some(hi_code)) = (lower, upper) {
                let lo = parse_path(&lattice, "lower", lo_code)?;
                let hi = parse_path(&lattice, "upper", hi_code)?;
                let mu = lattice.mobius(lo, hi);
                match cli.format {
                    Format::Text => println!("{mu}"),
                    Format::Json => print_json(&json!({
                        "r": rn.r, "n": rn.n,
                        "lower": lo_code, "upper": hi_code, "mu": mu,
                    })),
                    Format::Csv => {
                        println!("lower,upper,mu");
                        println!("{},{},{mu}", csv_field(lo_code), csv_field(hi_code));
                    }
                }
                return Ok(());
            }
            // Full table: every nonzero entry.
            let mut entries: Vec<(String, String, i64)> = Vec::new();
            for alpha in 0..lattice.size() {
                for (beta, mu) in lattice.mobius_row(alpha).into_iter().enumerate() {
                    if mu != 0 {
                        entries.push((
                            lattice.path(alpha).to_compact_string(),
                            lattice.path(beta).to_compact_string(),
                            mu,
                        ));
                    }
                }
            }
            match cli.format {
                Format::Text => {
                    for (lo, hi, mu) in &entries {
                        println!("{lo} {hi} {mu}");
                    }
                }
                Format::Json => {
                    let list: Vec<Value> = entries
                        .iter()
                        .map(|(lo, hi, mu)| json!({ "lower": lo, "upper": hi, "mu": mu }))
                        .collect();
                    print_json(&json!({ "r": rn.r, "n": rn.n, "entries": list }));
                }
                Format::Csv => {
                    println!("lower,upper,mu");
                    for (lo, hi, mu) in &entries {
                        println!("{},{},{mu}", csv_field(lo), csv_field(hi));
                    }
                }
            }
            Ok(())
        }
        Command::Parking(cmd) => run_parking(cli, cmd),
        Command::QPairs { count, list } => {
            let (rows, single) = count_rows(count, |r, n| {
                parking::count_q_formula(u64::from(r), n as u64)
            })?;
            if *list {
                let Some(n) = count.n else {
                    return Err(Failure::Usage("--list requires --n".into()));
                };
                let pairs = parking::enumerate_q_pairs(count.r, n, cli.cap)?;
                if num_bigint::BigUint::from(pairs.len() as u64) != rows[0].1 {
                    return Err(Failure::Failed(format!(
                        "enumerated {} pairs but the closed formula gives {}",
                        pairs.len(),
                        rows[0].1
                    )));
                }
                let rendered: Vec<(String, String)> = pairs
                    .iter()
                    .map(|(path, word)| (path.to_compact_string(), word.to_compact_string()))
                    .collect();
                match cli.format {
                    Format::Text => {
                        for (path, word) in &rendered {
                            println!("{path} {word}");
                        }
                    }
                    Format::Json => print_json(&json!({
                        "r": count.r, "n": n,
                        "count": rows[0].1.to_string(),
                        "pairs": rendered,
                    })),
                    Format::Csv => {
                        println!("path,word");
                        for (path, word) in &rendered {
                            println!("{},{}", csv_field(path), csv_field(word));
                        }
                    }
                }
                return Ok(());
            }
            print_counts(cli.format, count.r, &rows, single)
        }
        Command::Frobenius(cmd) => run_frobenius(cli, cmd),
        Command::VerifySeries { r_max, b_max, series_cap } => {
            let suite = series::default_suite(*r_max, *b_max);
            let reports: Vec<_> = suite.iter().map(|id| id.check(*series_cap)).collect();
            let all_hold = reports.iter().all(|r| r.holds);
            match cli.format {
                Format::Text => {
                    for report in &reports {
                        let status = if report.holds { "ok" } else { "FAIL" };
                        let params: Vec<String> =
                            report.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                        let mut line = format!(
                            "{status:4} {} [{}] to order {}",
                            report.identity,
                            params.join(", "),
                            report.cap
                        );
                        if let Some(order) = report.first_failure {
                            line.push_str(&format!(" (first failure at order {order})"));
                        }
                        println!("{line}");
                    }
                }
                Format::Json => {
                    let list: Vec<Value> = reports.iter().map(|r| r.to_json()).collect();
                    print_json(&Value::Array(list));
                }
                Format::Csv => {
                    println!("identity,params,cap,holds,first_failure");
                    for report in &reports {
                        let params: Vec<String> =
                            report.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                        println!(
                            "{},{},{},{},{}",
                            csv_field(&report.identity),
                            csv_field(&params.join("; ")),
                            report.cap,
                            report.holds,
                            report.first_failure.map_or(String::new(), |o| o.to_string()),
                        );
                    }
                }
            }
            if all_hold {
                Ok(())
            } else {
                Err(Failure::Failed("a series identity failed".into()))
            }
        }
        Command::Verify { suite, r_max, n_max, series_cap, fixtures } => {
            require_positive("r-max", u64::from(*r_max))?;
            require_positive("n-max", *n_max as u64)?;
            let config = VerifyConfig {
                fixtures_dir: fixtures_dir(fixtures),
                r_max: *r_max,
                n_max: *n_max,
                series_cap: *series_cap,
                enumeration_cap: cli.cap,
            };
            let outcomes = verify::run_suite(&config, suite)?;
            let all_passed = outcomes.iter().all(|o| o.passed);
            match cli.format {
                Format::Text => {
                    for o in &outcomes {
                        let status = if o.passed { "PASS" } else { "FAIL" };
                        println!("{status} {} (criterion {}) — {}", o.id, o.criterion, o.details);
                    }
                }
                Format::Json => {
                    let list: Vec<Value> = outcomes
                        .iter()
                        .map(|o| json!({
                            "id": o.id, "criterion": o.criterion,
                            "passed": o.passed, "details": o.details,
                        }))
                        .collect();
                    print_json(&json!({
                        "suite": suite, "outcomes": list, "passed": all_passed,
                    }));
                }
                Format::Csv => {
                    println!("id,criterion,passed,details");
                    for o in &outcomes {
                        println!(
                            "{},{},{},{}",
                            csv_field(o.id),
                            o.criterion,
                            o.passed,
                            csv_field(&o.details)
                        );
                    }
                }
            }
            if all_passed {
                Ok(())
            } else {
                Err(Failure::Failed("a verification check failed".into()))
            }
        }
        Command::CompareFixtures { fixtures, name } => {
            let config = VerifyConfig {
                fixtures_dir: fixtures_dir(fixtures),
                ..VerifyConfig::new("")
            };
            let diffs = match name {
                Some(name) => vec![verify::compare_fixture(&config, name)?],
                None => verify::compare_all_fixtures(&config)?,
            };
            let all_match = diffs.iter().all(|d| d.matches());
            match cli.format {
                Format::Text => {
                    for d in &diffs {
                        if d.matches() {
                            println!("match  {} ({})", d.name, d.relative_path);
                        } else {
                            println!("DIFFER {} ({})", d.name, d.relative_path);
                            for m in &d.mismatches {
                                println!("  {m}");
                            }
                        }
                    }
                }
                Format::Json => {
                    let list: Vec<Value> = diffs
                        .iter()
                        .map(|d| json!({
                            "name": d.name, "path": d.relative_path,
                            "matches": d.matches(), "mismatches": d.mismatches,
                        }))
                        .collect();
                    print_json(&json!({ "fixtures": list, "all_match": all_match }));
                }
                Format::Csv => {
                    println!("name,matches,mismatches");
                    for d in &diffs {
                        println!(
                            "{},{},{}",
                            csv_field(d.name),
                            d.matches(),
                            csv_field(&d.mismatches.join("; "))
                        );
                    }
                }
            }
            if all_match {
                Ok(())
            } else {
                Err(Failure::Failed("a fixture differs from its recomputation".into()))
            }
        }
    }
}

fn run_parking(cli: &Cli, cmd: &ParkingCmd) -> CmdResult {
    match cmd {
        ParkingCmd::Count(args) => {
            let (rows, single) = count_rows(args, |r, n| parking::count(r, n as u32))?;
            print_counts(cli.format, args.r, &rows, single)
        }
        ParkingCmd::List(rn) => {
            validate_rn(rn.r, rn.n)?;
            let mut words = parking::enumerate(rn.r, rn.n, cli.cap)?;
            words.sort();
            let rendered: Vec<String> =
                words.iter().map(ParkingFunction::to_compact_string).collect();
            match cli.format {
                Format::Text => rendered.iter().for_each(|w| println!("{w}")),
                Format::Json => print_json(&json!({
                    "r": rn.r, "n": rn.n, "words": rendered,
                })),
                Format::Csv => {
                    println!("word");
                    rendered.iter().for_each(|w| println!("{}", csv_field(w)));
                }
            }
            Ok(())
        }
        ParkingCmd::Blocks(rn) => {
            validate_rn(rn.r, rn.n)?;
            let blocks = parking::blocks(rn.r, rn.n, cli.cap)?;
            let rendered: Vec<(String, Vec<String>)> = blocks
                .into_iter()
                .map(|(sigma, mut members)| {
                    members.sort();
                    let perm: String = sigma.iter().map(|d| d.to_string()).collect();
                    let words =
                        members.iter().map(ParkingFunction::to_compact_string).collect();
                    (perm, words)
                })
                .collect();
            match cli.format {
                Format::Text => {
                    for (perm, words) in &rendered {
                        println!("{perm}: {}", words.join(" "));
                    }
                }
                Format::Json => {
                    let list: Vec<Value> = rendered
                        .iter()
                        .map(|(perm, words)| json!({ "permutation": perm, "words": words }))
                        .collect();
                    print_json(&json!({ "r": rn.r, "n": rn.n, "blocks": list }));
                }
                Format::Csv => {
                    println!("permutation,word");
                    for (perm, words) in &rendered {
                        for word in words {
                            println!("{},{}", csv_field(perm), csv_field(word));
                        }
                    }
                }
            }
            Ok(())
        }
        ParkingCmd::Stats { r, word } => {
            require_positive("r", u64::from(*r))?;
            no_csv(cli.format)?;
            let phi = ParkingFunction::new(*r, word.clone()).map_err(Failure::from)?;
            let array = phi.array_encoding();
            let descents: Vec<u64> = phi.descent_set().into_iter().collect();
            match cli.format {
                Format::Text => {
                    println!("word:                {}", phi.to_compact_string());
                    println!("shape:               {}", phi.shape().to_compact_string());
                    println!("area:                {}", phi.area());
                    println!("dinv:                {}", phi.dinv());
                    println!("reading word:        {:?}", phi.reading_word());
                    println!("descents:            {descents:?}");
                    println!("descent composition: {:?}", phi.theta().parts());
                    println!("standardized:        {:?}", phi.standardize());
                    println!("array top:           {:?}", array.top());
                    println!("array bottom:        {:?}", array.bottom());
                }
                Format::Json => print_json(&json!({
                    "r": r, "word": phi.values(),
                    "area": phi.area().to_string(),
                    "dinv": phi.dinv().to_string(),
                    "reading_word": phi.reading_word(),
                    "descents": descents,
                    "descent_composition": phi.theta().parts(),
                    "standardized": phi.standardize(),
                    "shape": phi.shape().to_compact_string(),
                    "array": { "top": array.top(), "bottom": array.bottom() },
                })),
                Format::Csv => unreachable!(),
            }
            Ok(())
        }
    }
}

fn run_frobenius(cli: &Cli, cmd: &FrobeniusCmd) -> CmdResult {
    match cmd {
        FrobeniusCmd::Parking { rn, form, basis } => {
            validate_rn(rn.r, rn.n)?;
            let f = frobenius::parking_frobenius(rn.r, rn.n as u32, form.to_core(), cli.cap)?;
            print_symfunc(cli.format, &convert_if_requested(f, *basis)?)
        }
        FrobeniusCmd::Ring { n } => {
            require_positive("n", u64::from(*n))?;
            let f = frobenius::graded_ring_frobenius_numerator(*n)?;
            print_symfunc(cli.format, &f)
        }
        FrobeniusCmd::QPairs { rn, form, basis } => {
            validate_rn(rn.r, rn.n)?;
            let f = frobenius::q_pairs_frobenius(rn.r, rn.n, form.to_core(), cli.cap)?;
            print_symfunc(cli.format, &convert_if_requested(f, *basis)?)
        }
        FrobeniusCmd::Bivariate { rn } => {
            validate_rn(rn.r, rn.n)?;
            let f = frobenius::bivariate_q1(rn.r, rn.n, cli.cap)?;
            print_symfunc(cli.format, &f)
        }
        FrobeniusCmd::Trivariate { rn } => {
            validate_rn(rn.r, rn.n)?;
            let f = frobenius::trivariate_q1(rn.r, rn.n, cli.cap)?;
            print_symfunc(cli.format, &f)
        }
        FrobeniusCmd::Shuffle { rn, chain_graded } => {
            validate_rn(rn.r, rn.n)?;
            let f = if *chain_graded {
                frobenius::trivariate_shuffle_sum(rn.r, rn.n, cli.cap)?
            } else {
                frobenius::shuffle_sum(rn.r, rn.n, cli.cap)?
            };
            print_symfunc(cli.format, &f)
        }
        FrobeniusCmd::CompareSpecializations { rn } => {
            validate_rn(rn.r, rn.n)?;
            no_csv(cli.format)?;
            let cmp = frobenius::compare_specializations(rn.r, rn.n, cli.cap)?;
            match cli.format {
                Format::Text => {
                    println!("area/dinv sum at t=1:     {}", cmp.shuffle_at_t1);
                    println!("chain-graded sum at t=0:  {}", cmp.chain_at_t0);
                    println!("agree: {}", cmp.agree);
                }
                Format::Json => print_json(&json!({
                    "r": rn.r, "n": rn.n,
                    "shuffle_at_t1": cmp.shuffle_at_t1.to_string(),
                    "chain_at_t0": cmp.chain_at_t0.to_string(),
                    "agree": cmp.agree,
                })),
                Format::Csv => unreachable!(),
            }
            Ok(())
        }
    }
}
