use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use leibniz2_cli::commands::{self, Construction, Direction, Format, Options};
use leibniz2_cli::file::Kind;

#[derive(Parser)]
#[command(name = "leibniz2", version, about = "Exact verification of 2-term sh Leibniz algebras and related structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite for the structure in a file.
    Verify {
        path: PathBuf,
        /// Fail with an input error unless the file has this kind.
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// TOML file with extra `sections` and `forms`.
        #[arg(long)]
        family: Option<PathBuf>,
        /// Append seeded random members to the section and form families.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Convert between crossed modules, dg / skeletal algebras and quadruples.
    Convert {
        path: PathBuf,
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a derived structure and verify it.
    Construct {
        #[arg(value_enum)]
        what: Construction,
        path: PathBuf,
        /// Destination of the built structure (omni) or structured report.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        family: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Re-render a structured report.
    Report {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { path, kind, format, out, family, seed } => {
            commands::verify(&path, &Options { kind, format, out, family, seed })
        }
        Command::Convert { path, direction, out } => commands::convert(&path, direction, out.as_deref()),
        Command::Construct { what, path, out, format, family, seed } => {
            commands::construct(what, &path, &Options { kind: None, format, out, family, seed })
        }
        Command::Report { path, format } => commands::report(&path, format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("leibniz2: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
