use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use wedderga_core::classifier::{
    csp_prime_critical, family_predicate_1, family_predicate_2, family_predicate_3, scan_corpus, CriticalVerdict,
    DEFAULT_BOUND,
};
use wedderga_core::constructions::{GroupSpec, CATALOG};
use wedderga_core::io::{
    decomposition_report, parse_group_file, render_decomposition, render_report, render_scan, render_ssp, Format,
};
use wedderga_core::permgroup::FiniteGroup;
use wedderga_core::Error;

#[derive(Parser)]
#[command(name = "cspcrit", version, about = "Wedderburn components and CSP'-critical groups")]
struct Cli {
    /// Largest group order accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    bound: usize,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
    /// Worker threads for corpus scans.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Exit with status 4 on an Unknown verdict.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Wedderburn decomposition from strong Shoda pairs.
    Decompose { group: String },
    /// Strong Shoda pairs with their checks.
    Ssp { group: String },
    /// CSP'-criticality report.
    Critical { group: String },
    /// Scan every group of a group file.
    Scan {
        #[arg(long)]
        file: String,
    },
    /// List named groups.
    Catalog,
    /// Evaluate a family predicate: `1 q p`, `2 p n k` or `3 p`.
    Family {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        family: u8,
        params: Vec<u64>,
    },
}

enum Failure {
    Usage(String),
    Parse(String),
    Bound(String),
    Strict,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Parse(e.to_string()),
            Error::BoundExceeded { .. } => Failure::Bound(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Resolves `file#label`, a catalog label or a group spec such as `dihedral(8)`.
fn load(target: &str, bound: usize) -> Result<(String, FiniteGroup), Failure> {
    if let Some((path, label)) = target.split_once('#') {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
        let file = parse_group_file(&text)?;
        let entry = file
            .get(label)
            .ok_or_else(|| Failure::Usage(format!("{path}: no group `{label}`")))?;
        return Ok((label.to_string(), entry.build(bound)?));
    }
    let g = GroupSpec::parse(target)?.build()?;
    if g.order() > bound {
        return Err(Error::BoundExceeded { bound }.into());
    }
    Ok((target.to_string(), g))
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format = match cli.format {
        OutFormat::Text => Format::Text,
        OutFormat::Tsv => Format::Tsv,
    };
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let bound = cli.bound;
    match cli.command {
        Command::Decompose { group } => {
            let (label, g) = load(&group, bound)?;
            Ok(render_decomposition(&decomposition_report(&g, &label, bound)?, format))
        }
        Command::Ssp { group } => {
            let (label, g) = load(&group, bound)?;
            Ok(render_ssp(&g, &label, bound, format)?)
        }
        Command::Critical { group } => {
            let (label, g) = load(&group, bound)?;
            let report = csp_prime_critical(&g, &label, bound)?;
            let out = render_report(&report, format);
            if cli.strict && report.verdict == CriticalVerdict::Unknown {
                print!("{out}");
                return Err(Failure::Strict);
            }
            Ok(out)
        }
        Command::Scan { file } => {
            let text = std::fs::read_to_string(&file).map_err(|e| Failure::Usage(format!("{file}: {e}")))?;
            let parsed = parse_group_file(&text)?;
            let groups = parsed
                .entries
                .iter()
                .map(|e| Ok((e.label.clone(), e.build(bound)?)))
                .collect::<Result<Vec<_>, Error>>()?;
            let labels: Vec<String> = groups.iter().map(|(l, _)| l.clone()).collect();
            let result = scan_corpus(&groups, bound)?;
            Ok(render_scan(&result, &labels, format))
        }
        Command::Catalog => {
            let sep = if matches!(format, Format::Tsv) { "\t" } else { " " };
            Ok(CATALOG
                .iter()
                .map(|(label, order, desc)| format!("{label}{sep}{order}{sep}{desc}\n"))
                .collect())
        }
        Command::Family { family, params } => {
            let value = match (family, params.as_slice()) {
                (1, &[q, p]) => family_predicate_1(q, p)?,
                (2, &[p, n, k]) => family_predicate_2(p, n, k)?,
                (3, &[p]) => family_predicate_3(p)?,
                _ => return Err(Failure::Usage(format!("family {family}: wrong number of parameters"))),
            };
            Ok(format!("{value}\n"))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Bound(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Strict) => ExitCode::from(4),
    }
}
