mod commands;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "dagscope",
    version,
    about = "Covariate adjustment analysis for causal diagrams"
)]
pub struct Cli {
    /// Output style: readable text or one fact per line for scripts.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Lines,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the document's adjusted set against all adjustment criteria.
    Check {
        /// Diagram file, or `-` for standard input.
        file: String,
        /// Comma-separated set replacing the document's adjusted vertices.
        #[arg(long, value_delimiter = ',')]
        adjust: Option<Vec<String>>,
    },
    /// List minimal adjustment sets.
    Adjustments {
        file: String,
        /// Stop after this many sets.
        #[arg(long, default_value_t = 100)]
        max: usize,
        /// Comma-separated latent vertices, replacing the document's.
        #[arg(long, value_delimiter = ',')]
        latent: Option<Vec<String>>,
        /// Comma-separated set to look up among the listed sets.
        #[arg(long, value_delimiter = ',')]
        adjust: Option<Vec<String>>,
        /// Give up after this many seconds.
        #[arg(long, value_name = "SECONDS")]
        time_limit: Option<f64>,
    },
    /// List the edges that lie on biasing paths given the adjusted set.
    BiasEdges {
        file: String,
        #[arg(long, value_delimiter = ',')]
        adjust: Option<Vec<String>>,
    },
    /// Decide whether exposure and outcome are d-separated.
    Dsep {
        file: String,
        /// Comma-separated conditioning set.
        #[arg(long, value_delimiter = ',', default_value = "")]
        given: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = commands::run(&cli, &mut io::stdin().lock(), &mut stdout.lock(), &mut stderr.lock());
    let _ = io::stdout().flush();
    ExitCode::from(code)
}
