//! `parastat` — exact computations in parabosonic and parafermionic
//! algebras: normal forms, dimension counts, Hopf/Lie/Casimir check suites,
//! bosonisation and the K± extension.

mod ast;
mod eval;
mod presfile;

use clap::{Args, Parser, Subcommand, ValueEnum};
use parastat::bosonisation;
use parastat::presets;
use parastat::quotient;
use parastat::report::CheckReport;
use parastat::superhopf::{self, SampleConfig};

use presfile::LoadedAlgebra;

#[derive(Parser)]
#[command(
    name = "parastat",
    version,
    about = "Exact symbolic engine for parabosonic and parafermionic algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: GlobalOpts,
}

#[derive(Args, Clone)]
struct GlobalOpts {
    /// Algebra: a preset `{pb|pf|pbg|pbk}:<n>` or a path to a presentation file
    #[arg(long, global = true, default_value = "pb:1")]
    algebra: String,

    /// Truncation degree for normal forms and checks
    #[arg(long, global = true, default_value_t = 4)]
    degree: u32,

    /// Seed for the deterministic random samples
    #[arg(long, global = true, default_value_t = superhopf::DEFAULT_SEED)]
    seed: u64,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Number of random sample elements per axiom family
    #[arg(long, global = true, default_value_t = superhopf::DEFAULT_SAMPLES)]
    samples: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an expression and print its canonical normal form
    Normalize { expr: String },
    /// Print the dimension of the degree-bounded filtration component
    Dim,
    /// Run a verification suite
    Check {
        #[command(subcommand)]
        suite: CheckSuite,
    },
    /// Adjoin the group-like involution g and print the resulting Hopf algebra
    Bosonize,
    /// Adjoin the group-like pair K+, K- and print the resulting Hopf algebra
    ExtendK,
    /// Print the active presentation in the interchange format
    Export,
}

#[derive(Subcommand)]
enum CheckSuite {
    /// The five Hopf-axiom families
    Hopf,
    /// Lie closure, dimension, super-antisymmetry, super-Jacobi
    Lie,
    /// Number operator, u(n) commutators, Casimir power identities
    Casimir {
        /// Largest power m of the number operator to check
        #[arg(long, default_value_t = 4)]
        max_power: u32,
    },
}

fn main() {
    // die quietly when stdout is closed early (e.g. piped into `head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    std::process::exit(run(cli.command, cli.opts).unwrap_or_else(|msg| {
        eprintln!("error: {msg}");
        2
    }));
}

fn emit_report(mut report: CheckReport, opts: &GlobalOpts) -> i32 {
    report.seed = opts.seed;
    match opts.format {
        Format::Text => print!("{}", report.render_text()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
    }
    if report.all_passed() {
        0
    } else {
        1
    }
}

fn run(command: Command, opts: GlobalOpts) -> Result<i32, String> {
    let LoadedAlgebra { presentation: p, maps } = presfile::load_algebra(&opts.algebra)?;
    match command {
        Command::Normalize { expr } => {
            let parsed = ast::parse(&expr).map_err(|e| e.to_string())?;
            let value = eval::evaluate(&parsed, &p, opts.degree).map_err(|e| e.to_string())?;
            match opts.format {
                Format::Text => println!("{}", value.render()),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "algebra": p.name(),
                        "degree": opts.degree,
                        "input": expr,
                        "parsed": ast::print(&parsed),
                        "normal_form": value.render(),
                    }))
                    .unwrap()
                ),
            }
            Ok(0)
        }
        Command::Dim => {
            let dim =
                quotient::filtration_dimension(&p, opts.degree).map_err(|e| e.to_string())?;
            match opts.format {
                Format::Text => println!("{dim}"),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "algebra": p.name(),
                        "degree": opts.degree,
                        "dimension": dim,
                    }))
                    .unwrap()
                ),
            }
            Ok(0)
        }
        Command::Check { suite } => {
            let report = match suite {
                CheckSuite::Hopf => {
                    let m = maps.as_ref().ok_or_else(|| {
                        format!(
                            "`{}` carries no structure maps; `check hopf` needs \
                             coproduct/counit/antipode lines or a preset",
                            opts.algebra
                        )
                    })?;
                    let cfg = SampleConfig {
                        seed: opts.seed,
                        count: opts.samples,
                    };
                    superhopf::check_hopf_axioms(&p, m, opts.degree, cfg)
                        .map_err(|e| e.to_string())?
                }
                CheckSuite::Lie => {
                    let (report, _) =
                        presets::lie_closure_check(&p, opts.degree).map_err(|e| e.to_string())?;
                    report
                }
                CheckSuite::Casimir { max_power } => {
                    let degree = opts.degree.max(2 * max_power + 1);
                    presets::casimir_checks(&p, max_power, degree).map_err(|e| e.to_string())?
                }
            };
            Ok(emit_report(report, &opts))
        }
        Command::Bosonize => {
            let m = maps
                .as_ref()
                .ok_or_else(|| "bosonisation needs braided structure maps".to_string())?;
            let ext = bosonisation::bosonise(&p, m).map_err(|e| e.to_string())?;
            emit_algebra(&ext.presentation, Some(&ext.maps), &opts);
            Ok(0)
        }
        Command::ExtendK => {
            let ext = bosonisation::kpm_extend(&p).map_err(|e| e.to_string())?;
            emit_algebra(&ext.presentation, Some(&ext.maps), &opts);
            Ok(0)
        }
        Command::Export => {
            emit_algebra(&p, maps.as_ref(), &opts);
            Ok(0)
        }
    }
}

fn emit_algebra(
    p: &quotient::Presentation,
    maps: Option<&superhopf::StructureMaps>,
    opts: &GlobalOpts,
) {
    match opts.format {
        Format::Text => print!("{}", presfile::export_text(p, maps)),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&presfile::export_json(p, maps)).unwrap()
        ),
    }
}
