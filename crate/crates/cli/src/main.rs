use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gradcount::elementary::count_elementary;
use gradcount::full::count_all;
use gradcount::oracle::{count_orbits, OrbitMethod, DEFAULT_ENUM_CAP};
use gradcount::reconstruction::{identify_from_profile, profile_from_sequence, CountSequence};
use gradcount::{AbelianGroupType, BlockShape, CayleyGroup, Error, GradingCount, GroupSpec};

const ENUM_CAP_VAR: &str = "GRADCOUNT_ENUM_CAP";

#[derive(Parser)]
#[command(
    name = "gradcount",
    version,
    about = "Count group gradings on matrix algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print E(G, m) or N(G, m) for one shape.
    Count {
        #[arg(value_enum)]
        kind: CountKind,
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Print counts for m = 1..=max-m.
    Table {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_m: u64,
        #[arg(long, value_enum, default_value_t = TableKind::E)]
        kind: TableKind,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Compare the closed formula with brute-force orbit counts.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_order: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_size: u64,
    },
    /// Recover a group from a CSV sequence of elementary counts.
    Identify {
        #[arg(long)]
        sequence: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        order: Option<u64>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GroupArgs {
    /// Abelian group such as Z2xZ4.
    #[arg(long)]
    group: Option<AbelianGroupType>,
    /// JSON file {"order": n, "table": [[...], ...]}.
    #[arg(long)]
    cayley: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ShapeArgs {
    /// Full matrix algebra M_m.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    m: Option<u64>,
    /// Block sizes of UT(m1, ..., ms).
    #[arg(long)]
    blocks: Option<BlockShape>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountKind {
    E,
    N,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    E,
    N,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_)
            | Error::Json(_)
            | Error::Csv(_)
            | Error::CayleyTable(_)
            | Error::InconsistentSequence(_)
            | Error::InsufficientTerms { .. }
            | Error::AmbiguousOrder(_)
            | Error::SequenceFormat(_) => 4,
            _ => 3,
        };
        Failure::new(code, e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn enum_cap() -> Result<u128, Failure> {
    match std::env::var(ENUM_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::new(
                2,
                format!("{ENUM_CAP_VAR} must be a positive integer, got `{v}`"),
            )
        }),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::new(4, format!("cannot read {}: {e}", path.display())))
}

fn load_group(args: &GroupArgs) -> Result<GroupSpec, Failure> {
    match (&args.group, &args.cayley) {
        (Some(g), _) => Ok(GroupSpec::Abelian(g.clone())),
        (None, Some(path)) => Ok(GroupSpec::Table(CayleyGroup::from_json(&read_file(path)?)?)),
        (None, None) => unreachable!("clap requires one group source"),
    }
}

fn require_abelian(g: &GroupSpec) -> Result<&AbelianGroupType, Failure> {
    g.as_abelian().ok_or_else(|| {
        Failure::new(
            3,
            "full counts need an abelian group given with --group; --cayley input is not accepted",
        )
    })
}

fn load_shape(args: &ShapeArgs) -> Result<BlockShape, Failure> {
    match (args.m, &args.blocks) {
        (Some(m), _) => Ok(BlockShape::matrix(m)?),
        (None, Some(b)) => Ok(b.clone()),
        (None, None) => unreachable!("clap requires one shape"),
    }
}

fn cmd_count(kind: CountKind, group: &GroupArgs, shape: &ShapeArgs) -> CliResult {
    let g = load_group(group)?;
    let shape = load_shape(shape)?;
    let count = match kind {
        CountKind::E => count_elementary(&g, &shape)?,
        CountKind::N => count_all(require_abelian(&g)?, &shape)?,
    };
    println!("{count}");
    Ok(())
}

fn cmd_table(group: &GroupArgs, max_m: u64, kind: TableKind, format: Format) -> CliResult {
    let g = load_group(group)?;
    let abelian = match kind {
        TableKind::E => None,
        _ => Some(require_abelian(&g)?),
    };
    let mut rows: Vec<(u64, Option<GradingCount>, Option<GradingCount>)> = Vec::new();
    for m in 1..=max_m {
        let shape = BlockShape::matrix(m)?;
        let e = (kind != TableKind::N)
            .then(|| count_elementary(&g, &shape))
            .transpose()?;
        let n = abelian.map(|a| count_all(a, &shape)).transpose()?;
        rows.push((m, e, n));
    }
    match format {
        Format::Csv => {
            let header = if kind == TableKind::Both {
                "m,e,n"
            } else {
                "m,count"
            };
            println!("{header}");
            for (m, e, n) in &rows {
                let cells: Vec<String> = [e, n]
                    .iter()
                    .filter_map(|c| c.as_ref().map(|c| c.to_string()))
                    .collect();
                println!("{m},{}", cells.join(","));
            }
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(m, e, n)| {
                    let mut row = serde_json::Map::new();
                    row.insert("m".into(), json!(m));
                    if let Some(e) = e {
                        row.insert("e".into(), json!(e.to_string()));
                    }
                    if let Some(n) = n {
                        row.insert("n".into(), json!(n.to_string()));
                    }
                    serde_json::Value::Object(row)
                })
                .collect();
            let doc = json!({ "group": g.to_string(), "rows": rows });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("json values serialize")
            );
        }
    }
    Ok(())
}

fn cmd_verify(max_order: u64, max_size: u64) -> CliResult {
    let cap = enum_cap()?;
    let shapes: Vec<Vec<BlockShape>> = (1..=max_size).map(BlockShape::compositions).collect();
    let groups = AbelianGroupType::all_up_to(max_order);
    let name_width = groups
        .iter()
        .map(|g| g.to_string().len())
        .max()
        .unwrap_or(5)
        .max(5);

    // One cell per (group, size): the number of failing shapes of that size.
    let results: Vec<Result<Vec<usize>, Error>> = std::thread::scope(|scope| {
        let handles: Vec<_> = groups
            .iter()
            .map(|g| {
                let shapes = &shapes;
                scope.spawn(move || {
                    let spec = GroupSpec::Abelian(g.clone());
                    shapes
                        .iter()
                        .map(|by_size| {
                            let mut failures = 0;
                            for shape in by_size {
                                let formula = count_elementary(&spec, shape)?;
                                let partition =
                                    count_orbits(&spec, shape, OrbitMethod::Partition, cap)?;
                                let burnside =
                                    count_orbits(&spec, shape, OrbitMethod::Burnside, cap)?;
                                if formula != partition || formula != burnside {
                                    failures += 1;
                                }
                            }
                            Ok(failures)
                        })
                        .collect()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verify worker panicked"))
            .collect()
    });

    print!("{:<name_width$}", "group");
    for size in 1..=max_size {
        print!(" {:>4}", size);
    }
    println!();
    let mut failed = 0usize;
    let mut cells = 0usize;
    for (g, row) in groups.iter().zip(results) {
        let row = row?;
        print!("{:<name_width$}", g.to_string());
        for failures in &row {
            cells += 1;
            failed += usize::from(*failures > 0);
            print!(" {:>4}", if *failures == 0 { "pass" } else { "FAIL" });
        }
        println!();
    }
    if failed == 0 {
        println!("all {cells} cells pass");
        Ok(())
    } else {
        Err(Failure::new(1, format!("{failed} of {cells} cells fail")))
    }
}

fn cmd_identify(sequence: &Path, order: Option<u64>) -> CliResult {
    let mut seq = CountSequence::from_csv(&read_file(sequence)?)?;
    if let Some(n) = order {
        seq = seq.with_order(n);
    }
    let profile = profile_from_sequence(&seq)?;
    println!("{}", identify_from_profile(&profile)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Count { kind, group, shape } => cmd_count(*kind, group, shape),
        Command::Table {
            group,
            max_m,
            kind,
            format,
        } => cmd_table(group, *max_m, *kind, *format),
        Command::Verify {
            max_order,
            max_size,
        } => cmd_verify(*max_order, *max_size),
        Command::Identify { sequence, order } => cmd_identify(sequence, *order),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
