use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use splitcurve::mpoly::{parse_form, plane_vars, space_vars};
use splitcurve::nodefile::parse_nodes;
use splitcurve::report::{self, error_exit_code, VerifyOptions};
use splitcurve::{Error, Form, ProjPoint, Result};

/// Exit codes: 0 all checks pass, 1 a check contradicts the claim,
/// 2 undetermined, 3 input or usage error.
#[derive(Parser)]
#[command(name = "splitcurve", version, about = "Splitting types of nodal plane curves with respect to contact conics")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Height bound for the rational point search on conics.
    #[arg(long, global = true, default_value_t = splitcurve::conic::DEFAULT_HEIGHT)]
    height: u64,
    /// First shear tried by the singular-locus elimination.
    #[arg(long, global = true, default_value_t = 0)]
    seed_shear: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one of the built-in examples against its claimed outcome.
    VerifyExample { id: String },
    /// Contact, singularities and splitting type of a curve (file or expression).
    Analyze {
        #[arg(long)]
        curve: String,
        #[arg(long)]
        conic: String,
        /// JSON node file; without it the singular locus is computed.
        #[arg(long)]
        nodes: Option<String>,
    },
    /// Pullback to P1 x P1 along the cover branched over z^2 - 4xy.
    Pullback {
        #[arg(long)]
        curve: String,
    },
    /// Splitting type with a checked node list.
    SplitType {
        #[arg(long)]
        curve: String,
        #[arg(long)]
        conic: String,
        #[arg(long)]
        nodes: String,
    },
    /// Branch data of the quartic g2 w^2 + 2 g3 w + g4.
    ProjectQuartic {
        #[arg(long)]
        g2: String,
        #[arg(long)]
        g3: String,
        #[arg(long)]
        g4: String,
    },
    /// Syzygetic test for a nodal quartic surface.
    Syzygetic {
        #[arg(long)]
        surface: String,
        #[arg(long)]
        nodes: String,
    },
}

/// A path to an existing file is read; anything else is taken literally.
fn text_arg(arg: &str) -> Result<String> {
    if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| Error::InvalidInput(format!("{arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn plane_form(arg: &str) -> Result<Form> {
    parse_form(text_arg(arg)?.trim(), &plane_vars())
}

fn nodes(arg: &str, dim: usize) -> Result<Vec<ProjPoint>> {
    parse_nodes(&text_arg(arg)?, dim)
}

fn run(cli: &Cli) -> Result<(String, i32)> {
    let opts = VerifyOptions { height: cli.height, seed_shear: cli.seed_shear };
    let r = match &cli.command {
        Command::VerifyExample { id } => {
            let r = report::run_verify_example(id, &opts)?;
            let text = if cli.json { r.to_json() } else { r.to_text() };
            return Ok((text, r.status().exit_code()));
        }
        Command::Analyze { curve, conic, nodes: node_arg } => {
            let pts = node_arg.as_deref().map(|n| nodes(n, 2)).transpose()?;
            report::analyze(&plane_form(curve)?, &plane_form(conic)?, pts.as_deref(), &opts)?
        }
        Command::Pullback { curve } => report::pullback(&plane_form(curve)?)?,
        Command::SplitType { curve, conic, nodes: n } => {
            report::split_type(&plane_form(curve)?, &plane_form(conic)?, &nodes(n, 2)?, &opts)?
        }
        Command::ProjectQuartic { g2, g3, g4 } => {
            report::project(&plane_form(g2)?, &plane_form(g3)?, &plane_form(g4)?, &opts)?
        }
        Command::Syzygetic { surface, nodes: n } => {
            let f = parse_form(text_arg(surface)?.trim(), &space_vars())?;
            report::syzygetic(&f, &nodes(n, 3)?)?
        }
    };
    let text = if cli.json { r.to_json() } else { r.to_text() };
    Ok((text, r.status.exit_code()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            // help and version requests are not errors
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(&cli) {
        Ok((text, code)) => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_exit_code(&e) as u8)
        }
    }
}
