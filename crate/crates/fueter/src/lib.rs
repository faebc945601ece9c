//! Command-line front end for `fueter-core`.
//!
//! Each `cmd_*` function takes a [`CliConfig`] and returns the text to print
//! together with an optional failure line; the binary maps that to exit
//! status 0 or 1 and maps [`CliError`] to 2.

pub mod cli;
pub mod commands;
pub mod config;
pub mod dot;
pub mod error;

pub use commands::{Operator, Outcome, PolyInput};
pub use config::{CliConfig, Format};
pub use error::CliError;

pub const EXIT_INVALID: u8 = 2;
