//! Argument parsing.

use clap::{Args, Parser, Subcommand, ValueEnum};

use fueter_core::operators::MultiplicityMode;
use fueter_core::verify::VerifyConfig;
use fueter_core::PairPolicy;

use crate::commands::{self, Operator, Outcome, PolyInput};
use crate::config::{CliConfig, Format};
use crate::error::CliError;

const GRAMMAR: &str = "\
Polynomials are expanded sums of terms with left coefficients, e.g.
  3/2*x0^2*x1*e12 - x2 + 1/3*x0*e1
A term is [rational '*'] (x<i>['^'<int>] '*')* [basis name]; the basis
name, if any, comes last. Use --power m for x^m = (x0 + sum x_i v_i)^m.

Partitions of {1..n} are written {1}|{2,3,4}|{5,6,7}; n is the number of
imaginary basis elements. Blocks are numbered from 1 in --block and in output.

Exit status: 0 success, 1 failed verification, 2 invalid input.";

#[derive(Parser, Debug)]
#[command(name = "fueter", version, about = "Exact Dunkl-regular polynomials over Clifford algebras and octonions")]
#[command(after_help = GRAMMAR)]
pub struct Cli {
    /// `clifford:N` (N <= 8) or `octonion`.
    #[arg(long, global = true, default_value = "clifford:2")]
    pub algebra: String,
    /// Comma-separated basis names starting with 1, e.g. `1,e1,e2,e12`.
    #[arg(long, global = true)]
    pub basis: Option<String>,
    /// Partition of the imaginary units; defaults to a single block.
    #[arg(long, global = true)]
    pub partition: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Multiplicities::Canonical)]
    pub multiplicities: Multiplicities,
    /// Distinguished index per block, e.g. `1,3,5`.
    #[arg(long, global = true)]
    pub alpha: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Multiplicities {
    /// Zero at each block's distinguished index, -1/2 elsewhere.
    Canonical,
    /// -1/2 + 1/(2|A|) on every index of block A.
    Uniform,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Text,
    Dot,
    Jsonl,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Policy {
    Smallest,
    Largest,
    SmallestAndLargest,
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    /// Polynomial text.
    #[arg(allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// Use x^m instead of a polynomial.
    #[arg(long)]
    pub power: Option<u32>,
}

impl PolyArgs {
    fn input(&self) -> PolyInput {
        PolyInput { text: self.poly.clone(), power: self.power }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Apply one operator.
    Ops {
        #[arg(value_enum)]
        operator: Operator,
        #[command(flatten)]
        poly: PolyArgs,
        /// Variable index for t, delta1 and delta2.
        #[arg(long)]
        index: Option<usize>,
        /// Block number for the block operators.
        #[arg(long)]
        block: Option<usize>,
    },
    /// Cauchy-Kovalevskaya extension of a polynomial free of x0.
    Ck {
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// Test P-sliceness, Dunkl-monogenicity and membership in F_P.
    Member {
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// A basis of the homogeneous part of F_P of one degree.
    Basis {
        #[arg(long)]
        degree: u32,
    },
    /// The Fueter tree of the partition.
    Tree {
        #[arg(long, value_enum, default_value_t = Policy::Smallest)]
        pair_policy: Policy,
        /// Draw one leaf per branch instead of merging equal leaves.
        #[arg(long)]
        split_leaves: bool,
    },
    /// The row n | p(n) | q(n) | B_n | q(n)-1.
    Count { n: usize },
    /// Run built-in verification suites: `all` or criterion numbers 1..10.
    Verify {
        suite: Vec<String>,
        /// Random cases per property suite.
        #[arg(long)]
        cases: Option<usize>,
        /// Random members per partition in the Fueter checks.
        #[arg(long)]
        members: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

impl Cli {
    pub fn config(&self) -> CliConfig {
        CliConfig {
            algebra: self.algebra.clone(),
            basis: self.basis.clone(),
            partition: self.partition.clone(),
            multiplicities: match self.multiplicities {
                Multiplicities::Canonical => MultiplicityMode::Canonical,
                Multiplicities::Uniform => MultiplicityMode::Uniform,
            },
            alpha: self.alpha.clone(),
            format: match self.format {
                FormatArg::Text => Format::Text,
                FormatArg::Dot => Format::Dot,
                FormatArg::Jsonl => Format::Jsonl,
            },
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let cfg = cli.config();
    match &cli.command {
        Command::Ops { operator, poly, index, block } => {
            commands::cmd_ops(&cfg, *operator, &poly.input(), *index, *block)
        }
        Command::Ck { poly } => commands::cmd_ck(&cfg, &poly.input()),
        Command::Member { poly } => commands::cmd_member(&cfg, &poly.input()),
        Command::Basis { degree } => commands::cmd_basis(&cfg, *degree),
        Command::Tree { pair_policy, split_leaves } => {
            let policy = match pair_policy {
                Policy::Smallest => PairPolicy::Smallest,
                Policy::Largest => PairPolicy::Largest,
                Policy::SmallestAndLargest => PairPolicy::SmallestAndLargest,
            };
            commands::cmd_tree(&cfg, policy, *split_leaves)
        }
        Command::Count { n } => commands::cmd_count(&cfg, *n),
        Command::Verify { suite, cases, members, seed } => {
            let mut v = VerifyConfig::default();
            if let Some(c) = cases {
                v.property_cases = *c;
            }
            if let Some(m) = members {
                v.fueter_members = *m;
            }
            if let Some(s) = seed {
                v.seed = *s;
            }
            commands::cmd_verify(&cfg, suite, &v)
        }
    }
}
