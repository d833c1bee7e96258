//! `monogamy` command-line tool.
//!
//! Exit status: 0 when every evaluated row is satisfied or not applicable,
//! 1 when any row is violated, 2 on malformed input or an unmet
//! precondition.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use monogamy::bounds::{AlphaGrid, BoundStatus, Foci, TheoremId};
use monogamy::figures::{figure, FIG2_NOTE};
use monogamy::gallery::{Family, StateSpec};
use monogamy::report::{self, VerifyRow};
use monogamy::runner::{self, SweepConfig};

#[derive(Parser)]
#[command(name = "monogamy", version, about = "Entanglement measures and tightened monogamy/polygamy checks")]
struct Cli {
    /// Worker threads for sweeps (defaults to the number of cores).
    #[arg(long, global = true, env = "MONOGAMY_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(clap::Args)]
struct Output {
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(clap::Args)]
struct Selection {
    /// Comma-separated theorem ids, or `all`, `baselines`, `cor1`, `cor2`.
    #[arg(long, default_value = "thm1")]
    theorem: String,
    /// α grid as `start:stop:step`, or a single value.
    #[arg(long, default_value = "0.05:2:0.05")]
    alpha: AlphaGrid,
    /// Focus qubits A,B,C1.
    #[arg(long, default_value = "0,1,2", value_parser = parse_foci)]
    foci: Foci,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate inequalities on given states.
    Verify {
        /// State as a JSON file, inline JSON, or a gallery family name.
        /// Repeat for several states.
        #[arg(long, required = true)]
        state: Vec<String>,
        #[command(flatten)]
        select: Selection,
        #[command(flatten)]
        output: Output,
    },
    /// Evaluate inequalities on seeded Haar-random states.
    Sweep {
        #[arg(long, default_value_t = 4)]
        qubits: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        select: Selection,
        #[command(flatten)]
        output: Output,
    },
    /// Emit the data table behind figure 1, 2 or 3.
    Figure {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        id: u8,
        #[command(flatten)]
        output: Output,
    },
    /// List the named state families.
    GalleryList {
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

fn parse_foci(s: &str) -> Result<Foci, String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("`{p}`: {e}")))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [a, b] => Ok(Foci::new(a, b, Foci::default().c1)),
        [a, b, c1] => Ok(Foci::new(a, b, c1)),
        _ => Err("expected A,B or A,B,C1".into()),
    }
}

/// Failures that map to exit status 2.
struct InputError(String);

impl From<monogamy::Error> for InputError {
    fn from(e: monogamy::Error) -> Self {
        InputError(e.to_string())
    }
}

type CliResult<T> = Result<T, InputError>;

fn load_states(arg: &str) -> CliResult<Vec<StateSpec>> {
    let text = if arg.trim_start().starts_with(['{', '[']) {
        arg.to_string()
    } else if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| InputError(format!("reading {arg}: {e}")))?
    } else if let Ok(family) = arg.parse::<Family>() {
        return Ok(vec![StateSpec::named(family)]);
    } else {
        return Err(InputError(format!(
            "`{arg}` is neither a file, inline JSON, nor a gallery family"
        )));
    };
    if text.trim_start().starts_with('[') {
        serde_json::from_str(&text).map_err(|e| InputError(format!("malformed state list: {e}")))
    } else {
        Ok(vec![StateSpec::from_json(&text)?])
    }
}

fn emit(output: &Output, body: &str) -> CliResult<()> {
    match &output.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| InputError(format!("writing {}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn verify(states: &[String], select: &Selection, output: &Output) -> CliResult<bool> {
    let theorems = TheoremId::parse_list(&select.theorem)?;
    let mut rows = Vec::new();
    for arg in states {
        for spec in load_states(arg)? {
            let psi = spec.build()?;
            let label = spec.label();
            for report in runner::verify(&psi, &theorems, &select.alpha, &select.foci)? {
                rows.push(VerifyRow { state: label.clone(), report });
            }
        }
    }
    let body = match output.format {
        Format::Csv => report::verify_csv(&rows),
        Format::Json => report::verify_json(&rows),
    };
    emit(output, &body)?;
    Ok(rows.iter().any(|r| r.report.status == BoundStatus::Violated))
}

fn sweep(qubits: usize, samples: usize, seed: u64, select: &Selection, output: &Output) -> CliResult<bool> {
    let config = SweepConfig {
        qubits,
        samples,
        seed,
        theorems: TheoremId::parse_list(&select.theorem)?,
        grid: select.alpha.clone(),
        foci: select.foci,
    };
    let summary = runner::sweep(&config)?;
    let body = match output.format {
        Format::Csv => report::sweep_csv(&summary),
        Format::Json => report::sweep_json(&summary),
    };
    emit(output, &body)?;
    for v in &summary.violations {
        eprintln!(
            "violation: sample {} (seed {}) {} alpha {} lhs {} rhs {}",
            v.sample, v.seed, v.theorem, v.alpha, v.lhs, v.rhs
        );
    }
    Ok(summary.total_violations() > 0)
}

fn gallery_list(format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("family,description\n");
            for f in Family::ALL {
                out.push_str(&format!("{},\"{}\"\n", f, f.description().replace('"', "\"\"")));
            }
            out
        }
        Format::Json => {
            let list: Vec<_> = Family::ALL
                .iter()
                .map(|f| serde_json::json!({ "family": f.as_str(), "description": f.description() }))
                .collect();
            serde_json::to_string_pretty(&list).expect("list serializes") + "\n"
        }
    }
}

fn run(cli: Cli) -> CliResult<bool> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| InputError(format!("thread pool: {e}")))?;
    }
    match cli.command {
        Command::Verify { state, select, output } => verify(&state, &select, &output),
        Command::Sweep { qubits, samples, seed, select, output } => {
            sweep(qubits, samples, seed, &select, &output)
        }
        Command::Figure { id, output } => {
            let table = figure(id)?;
            if id == 2 {
                eprintln!("note: {FIG2_NOTE}");
            }
            let body = match output.format {
                Format::Csv => report::figure_csv(&table),
                Format::Json => report::figure_json(&table),
            };
            emit(&output, &body)?;
            Ok(false)
        }
        Command::GalleryList { format } => {
            print!("{}", gallery_list(format));
            Ok(false)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
