use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hyperscope", version, about = "Telescoping relations for hypergeometric sums")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Term kind for parsed input.
    #[arg(long, global = true, value_enum, default_value_t = KindArg::Ordinary)]
    pub kind: KindArg,
    /// Comma-separated symbols the coefficients must not contain.
    #[arg(long, global = true, value_delimiter = ',')]
    pub freeze: Vec<String>,
    /// Seed for the numeric trials.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads for batch input.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Verify each certificate and attach the report.
    #[arg(long, global = true)]
    pub check: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum KindArg {
    Ordinary,
    Q,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve the telescoping problem for the terms of a file.
    Telescope {
        /// Term files; the first term of each is f_1.
        #[arg(long = "terms-file", required = true)]
        terms_file: Vec<PathBuf>,
    },
    /// Three-term recurrence of catalog families.
    Recurrence(Families),
    /// Structure relation `sigma P'_n = a P_{n+1} + b P_n + c P_{n-1}`.
    Structure {
        #[command(flatten)]
        families: Families,
        /// Left-hand multiplier; defaults to the family's known value.
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
        #[arg(long, value_enum, default_value_t = Variant::Sigma)]
        variant: Variant,
    },
    /// `P_n` at shifted parameters in terms of derivatives.
    ParamShift {
        #[command(flatten)]
        families: Families,
        /// Shifts such as `a=1,b=-1`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        shift: Vec<String>,
    },
    /// Connection coefficients between two catalog families.
    Connection {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Renamings of the source family, e.g. `b=gamma,c=mu`.
        #[arg(long = "from-rename", value_delimiter = ',')]
        from_rename: Vec<String>,
        /// Renamings of the target family; its degree becomes `m`.
        #[arg(long = "to-rename", value_delimiter = ',')]
        to_rename: Vec<String>,
    },
    /// Indefinite summation of single terms.
    Gosper {
        /// A term given inline.
        #[arg(long, allow_hyphen_values = true)]
        term: Vec<String>,
        /// Term files; every term is summed on its own.
        #[arg(long = "terms-file")]
        terms_file: Vec<PathBuf>,
    },
    /// Check a certificate against a problem.
    Verify {
        #[arg(long)]
        problem: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
        /// Numeric trials.
        #[arg(long, default_value_t = hyperscope::verify::DEFAULT_TRIALS)]
        trials: usize,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Families {
    /// Family names, comma-separated; `all` selects the whole catalog.
    #[arg(long, value_delimiter = ',', required = true)]
    pub family: Vec<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `sigma P'_n` in terms of `P_{n+1}, P_n, P_{n-1}`.
    Sigma,
    /// `P_n` in terms of `P'_{n+1}, P'_n, P'_{n-1}`.
    Inverse,
    /// `lambda P'_n` in terms of `P'_{n+1}, P'_n, P'_{n-1}`.
    Derivative,
}
