use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::parse::{decimal, spectrum_list, Members};

#[derive(Debug, Parser)]
#[command(name = "polite", version, about = "Sums of consecutive positive integers: enumerate, count, classify, scan and draw")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SortBy {
    /// Ascending odd divisor k.
    Divisor,
    /// Ascending length.
    Length,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every decomposition of N, one per odd divisor.
    Decompose {
        #[arg(value_parser = decimal)]
        n: u64,
        /// Drop the trivial one-term decomposition.
        #[arg(long)]
        nontrivial: bool,
        /// Include the full list of terms.
        #[arg(long)]
        expand: bool,
        #[arg(long, value_enum, default_value = "divisor")]
        sort: SortBy,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Length spectrum of N split into odd and even lengths.
    Spectrum {
        #[arg(value_parser = decimal)]
        n: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Number of decompositions of N (its number of odd divisors).
    Count {
        #[arg(value_parser = decimal)]
        n: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// POWER_OF_TWO, UNIQUE_NONTRIVIAL or GENERAL.
    Classify {
        #[arg(value_parser = decimal)]
        n: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Per-n statistics for 1..=N from the range sieve.
    Scan {
        #[arg(long, value_parser = decimal)]
        to: u64,
        /// Defaults to table on a terminal, csv otherwise.
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Records per sieve chunk.
        #[arg(long, value_parser = decimal, default_value = "1048576")]
        chunk: u64,
        /// Print limit, impolite count, mean count and maximum to stderr.
        #[arg(long)]
        summary: bool,
    },
    /// Check the bijection against brute force and the sieve against both.
    Verify {
        #[arg(long, value_parser = decimal)]
        to: u64,
    },
    /// Check necessary conditions on a candidate spectrum and search for a witness.
    Witness {
        /// Ascending, comma separated, e.g. 1,2,3,5
        #[arg(long, value_parser = spectrum_list)]
        spectrum: Members,
        #[arg(long, value_parser = decimal, default_value = "1000000")]
        limit: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Draw the decomposition of N associated with the odd divisor K.
    Diagram {
        #[arg(value_parser = decimal)]
        n: u64,
        #[arg(value_parser = decimal)]
        k: u64,
        /// Show the rectangle-to-trapezoid transformation.
        #[arg(long)]
        transform: bool,
    },
}
