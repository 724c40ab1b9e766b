//! `primideal`: command-line front end for the dominance, local-system,
//! sequence-code and ideal-order decision procedures.
//!
//! Exit codes: 0 for true/success, 1 for false (or a failed suite), 2 for
//! errors. Results go to stdout as JSON; diagnostics go to stderr.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use primideal_core::cls::{tiap_included, ClsCode};
use primideal_core::dominance::{criterion_4x, dominates_interlace, dominates_oracle};
use primideal_core::hasse::HasseDiagram;
use primideal_core::ideals::{
    containing_ideals, highest_weight, ideal_includes, ideal_to_cls_union, IdealFamily,
    PrimitiveIdeal,
};
use primideal_core::local_systems::{
    forbidden_to_cls, is_cls_on_window, is_pls_on_window, qlambda_contains, qvee_contains,
    LevelWindow, SystemPredicate,
};
use primideal_core::partition::ZPartition;
use primideal_core::verify::{run_verify, GridConfig, Suite};

#[derive(Parser)]
#[command(name = "primideal", version)]
#[command(
    about = "Decision procedures for Z-partition dominance, coherent local systems and primitive ideals of U(sl(∞))"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Does λ dominate μ?
    Dominates {
        /// λ as a JSON array, e.g. [2,1,0]
        lambda: String,
        /// μ as a JSON array
        mu: String,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
    },
    /// Is μ in Q∨(λ)?
    Qvee { lambda: String, mu: String },
    /// Is μ in Q(λ)?
    Qlambda { lambda: String, mu: String },
    /// Is the system precoherent on a window?
    Plscheck {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Is the system coherent on a window (bounded witness search)?
    Clscheck {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        window: WindowArgs,
        /// Extra entry range allowed for extension witnesses
        #[arg(long, default_value_t = 1)]
        slack: u64,
    },
    /// Sequence-code operations
    Cls {
        #[command(subcommand)]
        command: ClsCommand,
    },
    /// Primitive-ideal operations
    Ideal {
        #[command(subcommand)]
        command: IdealCommand,
    },
    /// Run a verification suite and print its report
    Verify {
        /// lgts2, interlace, lemmas, pmain, tiap-order, ideal-order, maximal, acc,
        /// tord-discrepancy or split-consistency
        suite: String,
        /// TOML grid file replacing the bundled defaults
        #[arg(long)]
        grid_file: Option<PathBuf>,
        /// Override the case ceiling
        #[arg(long)]
        max_cases: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Oracle,
    Interlace,
    Criterion4x,
}

#[derive(Clone, Copy, ValueEnum)]
enum SystemKind {
    /// Q∨(λ) for a single partition
    Qvee,
    /// Q(λ) for a single partition
    Qlambda,
    /// Q(λ_1) ∩ … ∩ Q(λ_s) for a JSON array of partitions
    Forbidden,
}

#[derive(Args)]
struct SystemArgs {
    #[arg(value_enum)]
    kind: SystemKind,
    /// Partition (or array of partitions for `forbidden`) as JSON
    data: String,
}

#[derive(Args)]
struct WindowArgs {
    /// Width range a..b
    #[arg(long, default_value = "2..4")]
    widths: String,
    /// Bound on canonical entries
    #[arg(long, default_value_t = 3)]
    bound: u64,
}

#[derive(Subcommand)]
enum ClsCommand {
    /// Is cls(C′) contained in cls(C)?
    Include { lower: String, upper: String },
}

#[derive(Subcommand)]
enum IdealCommand {
    /// Is I contained in J?
    Include { smaller: String, larger: String },
    /// The union of sequence codes of I
    Cls { ideal: String },
    /// A highest weight realizing I
    Weight { ideal: String },
    /// Ideals containing I inside a bounded box
    Upset {
        ideal: String,
        #[arg(long, default_value_t = 2)]
        cap: usize,
    },
    /// Hasse diagram of the inclusion order on a bounded family
    Hasse {
        #[arg(long, default_value_t = 0)]
        max_x: u64,
        #[arg(long, default_value_t = 0)]
        max_y: u64,
        #[arg(long, default_value_t = 1)]
        max_cols: usize,
        #[arg(long, default_value_t = 1)]
        max_len: u64,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

enum Outcome {
    Answer(bool),
    Done,
}

fn parse<T: serde::de::DeserializeOwned>(what: &str, text: &str) -> Result<T> {
    serde_json::from_str(text).with_context(|| format!("invalid {what}: {text}"))
}

fn parse_widths(text: &str) -> Result<(usize, usize)> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| anyhow!("widths must look like a..b, got {text}"))?;
    let a = a.trim().parse().context("lower width")?;
    let b = b
        .trim()
        .strip_prefix('=')
        .unwrap_or(b.trim())
        .parse()
        .context("upper width")?;
    Ok((a, b))
}

fn window(args: &WindowArgs) -> Result<LevelWindow> {
    let (lo, hi) = parse_widths(&args.widths)?;
    Ok(LevelWindow::new(lo, hi, args.bound)?)
}

fn system(args: &SystemArgs) -> Result<SystemPredicate> {
    Ok(match args.kind {
        SystemKind::Qvee => SystemPredicate::qvee(&parse("partition", &args.data)?),
        SystemKind::Qlambda => SystemPredicate::qlambda(&parse("partition", &args.data)?)?,
        SystemKind::Forbidden => {
            let list: Vec<ZPartition> = parse("partition list", &args.data)?;
            forbidden_to_cls(&list)?
        }
    })
}

fn answer(value: bool) -> Outcome {
    println!("{value}");
    Outcome::Answer(value)
}

fn emit(value: serde_json::Value) -> Result<Outcome> {
    println!("{}", serde_json::to_string_pretty(&value)?);
    Ok(Outcome::Done)
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Dominates { lambda, mu, method } => {
            let lambda: ZPartition = parse("λ", &lambda)?;
            let mu: ZPartition = parse("μ", &mu)?;
            let value = match method {
                Method::Oracle => dominates_oracle(&lambda, &mu),
                Method::Interlace => dominates_interlace(&lambda, &mu),
                Method::Criterion4x => criterion_4x(&lambda, &mu)?,
            };
            Ok(answer(value))
        }
        Command::Qvee { lambda, mu } => Ok(answer(qvee_contains(
            &parse("λ", &lambda)?,
            &parse("μ", &mu)?,
        ))),
        Command::Qlambda { lambda, mu } => Ok(answer(qlambda_contains(
            &parse("λ", &lambda)?,
            &parse("μ", &mu)?,
        )?)),
        Command::Plscheck {
            system: s,
            window: w,
        } => Ok(answer(is_pls_on_window(&system(&s)?, &window(&w)?))),
        Command::Clscheck {
            system: s,
            window: w,
            slack,
        } => Ok(answer(is_cls_on_window(&system(&s)?, &window(&w)?, slack))),
        Command::Cls {
            command: ClsCommand::Include { lower, upper },
        } => {
            let lower: ClsCode = parse("code", &lower)?;
            let upper: ClsCode = parse("code", &upper)?;
            Ok(answer(tiap_included(&lower, &upper)))
        }
        Command::Ideal { command } => ideal(command),
        Command::Verify {
            suite,
            grid_file,
            max_cases,
        } => {
            let suite: Suite = suite.parse()?;
            let mut cfg = match grid_file {
                Some(path) => GridConfig::load(&path)?,
                None => GridConfig::default(),
            };
            if let Some(n) = max_cases {
                cfg.max_cases = n;
            }
            eprintln!(
                "{suite}: {} checks planned",
                primideal_core::verify::planned_cases(suite, &cfg)
            );
            let report = run_verify(suite, &cfg)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(Outcome::Answer(report.is_success()))
        }
    }
}

fn integrable(text: &str) -> Result<primideal_core::ideals::IdealParams> {
    match parse::<PrimitiveIdeal>("ideal", text)? {
        PrimitiveIdeal::Integrable(p) => Ok(p),
        PrimitiveIdeal::Zero => bail!("this operation needs a nonzero ideal"),
    }
}

fn ideal(command: IdealCommand) -> Result<Outcome> {
    match command {
        IdealCommand::Include { smaller, larger } => {
            let i: PrimitiveIdeal = parse("ideal", &smaller)?;
            let j: PrimitiveIdeal = parse("ideal", &larger)?;
            Ok(answer(ideal_includes(&i, &j)))
        }
        IdealCommand::Cls { ideal } => {
            let union = ideal_to_cls_union(&parse("ideal", &ideal)?)?;
            emit(serde_json::to_value(union)?)
        }
        IdealCommand::Weight { ideal } => {
            let w = highest_weight(&integrable(&ideal)?);
            emit(json!({ "weight": w, "display": w.to_string() }))
        }
        IdealCommand::Upset { ideal, cap } => {
            let up: Vec<PrimitiveIdeal> = containing_ideals(&integrable(&ideal)?, cap)
                .into_iter()
                .map(PrimitiveIdeal::from)
                .collect();
            emit(serde_json::to_value(up)?)
        }
        IdealCommand::Hasse {
            max_x,
            max_y,
            max_cols,
            max_len,
            format,
        } => {
            let family = IdealFamily {
                max_x,
                max_y,
                max_cols,
                max_len,
            };
            let diagram = HasseDiagram::build(&family)?;
            match format {
                Format::Dot => print!("{}", diagram.to_dot()),
                Format::Json => println!("{}", serde_json::to_string_pretty(&diagram.to_json())?),
            }
            Ok(Outcome::Done)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Answer(true) | Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Answer(false)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
