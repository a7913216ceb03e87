use clap::{Parser, Subcommand, ValueEnum};
use qprob_core::channel::DEFAULT_TOL;
use qprob_core::kinetics::DEFAULT_DT;

/// Probability representation of qubit states and channels.
///
/// Paths may be `-` for standard input or output.
#[derive(Debug, Parser)]
#[command(name = "qprob", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert between density matrices and probability parameters.
    State {
        direction: Conversion,
        /// Matrix document for to-probs, probability document for from-probs.
        input: String,
        /// Hilbert space dimension.
        #[arg(long, value_parser = parse_dim)]
        dim: usize,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Check a Choi matrix or convert between channel representations.
    Channel {
        action: ChannelAction,
        input: String,
        /// Tolerance for Hermiticity, positivity and trace preservation.
        #[arg(long, default_value_t = DEFAULT_TOL, value_parser = parse_positive)]
        tolerance: f64,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Integrate the kinetic equation for a unitary channel and write a CSV table.
    Evolve {
        /// 2x2 Hermitian matrix document.
        #[arg(long)]
        hamiltonian: String,
        #[arg(long, value_parser = parse_nonnegative)]
        t_max: f64,
        #[arg(long, default_value_t = DEFAULT_DT, value_parser = parse_positive)]
        dt: f64,
        /// `identity`, or a document with 15 channel probabilities.
        #[arg(long, default_value = "identity")]
        initial: String,
        /// Append the exact solution as columns o1..o15 and report the deviation.
        #[arg(long)]
        oracle: bool,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Conversion {
    ToProbs,
    FromProbs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChannelAction {
    /// Report Hermiticity, trace, positivity and the CPTP verdict of a Choi matrix.
    Check,
    /// Build the Choi matrix of a Kraus set `{"kraus": [matrix, ...]}`.
    ChoiFromKraus,
    ToProbs,
    FromProbs,
}

fn parse_dim(s: &str) -> Result<usize, String> {
    match s {
        "2" => Ok(2),
        "4" => Ok(4),
        _ => Err("dimension must be 2 or 4".into()),
    }
}

fn parse_positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && x > 0.0 => Ok(x),
        _ => Err("expected a finite positive number".into()),
    }
}

fn parse_nonnegative(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && x >= 0.0 => Ok(x),
        _ => Err("expected a finite nonnegative number".into()),
    }
}
