//! Command-line grammar.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug, Clone)]
#[command(name = "betamorph", version, about = "Exact analysis of the positive and negative beta-transformations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub options: Options,
}

#[derive(clap::Args, Debug, Clone, Default)]
pub struct Options {
    /// β as multinacci:n, rational:p/q or poly:c0,c1,... (ascending degree).
    #[arg(long, global = true)]
    pub beta: Option<String>,

    /// File with one β per line; blank lines and lines starting with # are skipped.
    #[arg(long = "beta-list", global = true)]
    pub beta_list: Option<PathBuf>,

    /// Iterate (spectrum, census) or index (orbit checks). Defaults to the regime index.
    #[arg(long, global = true)]
    pub n: Option<usize>,

    /// Restricts census output to a single iterate m.
    #[arg(long, global = true)]
    pub m: Option<usize>,

    #[arg(long, global = true, value_enum)]
    pub map: Option<MapChoice>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Orbit length (orbit) or search depth (markov).
    #[arg(long, global = true)]
    pub depth: Option<usize>,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Decide whether T and S are measurably isomorphic.
    Certify,
    /// Run one exact verification and report pass/fail per assertion.
    Verify {
        #[arg(value_enum)]
        target: Target,
    },
    /// The preimage-count step function ψₙ of T or S.
    Spectrum,
    /// Search for a Markov partition generated by the orbit of 1.
    Markov,
    /// The orbit of 1.
    Orbit,
}

impl Command {
    pub fn name(&self) -> String {
        match self {
            Command::Certify => "certify".into(),
            Command::Verify { target } => format!("verify {}", target.name()),
            Command::Spectrum => "spectrum".into(),
            Command::Markov => "markov".into(),
            Command::Orbit => "orbit".into(),
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    /// Alternation of the S-orbit of 1 around the fixed points.
    #[value(alias = "lemma31")]
    OrbitParity,
    /// Closed form of Sᵏ1 against iteration.
    #[value(alias = "claim")]
    ClosedForm,
    /// Type census of Tᵐ against the closed form.
    Kappa,
    /// Type census of Sᵐ against the closed form.
    Iota,
    /// Parity profile of ψₙ⁺.
    Parity,
    /// Left-to-right order of the S-orbit of 1.
    OrbitOrder,
    /// Full Markov certificate at a multinacci β.
    Markov,
}

impl Target {
    pub fn name(&self) -> &'static str {
        match self {
            Target::OrbitParity => "orbit-parity",
            Target::ClosedForm => "closed-form",
            Target::Kappa => "kappa",
            Target::Iota => "iota",
            Target::Parity => "parity",
            Target::OrbitOrder => "orbit-order",
            Target::Markov => "markov",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapChoice {
    #[value(name = "T", alias = "t")]
    T,
    #[value(name = "S", alias = "s")]
    S,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}
