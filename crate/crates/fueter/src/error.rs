use std::fmt;

use fueter_core::{AlgebraError, FueterError, OperatorError, PartitionError, PolyError, SpaceError};

/// Anything that stops a command before it can produce a verdict.
#[derive(Debug)]
pub enum CliError {
    Algebra(AlgebraError),
    Partition(PartitionError),
    Poly(PolyError),
    Operator(OperatorError),
    Space(SpaceError),
    Fueter(FueterError),
    /// Missing or inconsistent flags.
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Algebra(e) => write!(f, "algebra: {e}"),
            CliError::Partition(e) => write!(f, "partition: {e}"),
            CliError::Poly(e) => write!(f, "polynomial: {e}"),
            CliError::Operator(e) => write!(f, "operator: {e}"),
            CliError::Space(e) => write!(f, "{e}"),
            CliError::Fueter(e) => write!(f, "{e}"),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

macro_rules! from_error {
    ($($source:ty => $variant:ident),* $(,)?) => {
        $(impl From<$source> for CliError {
            fn from(e: $source) -> Self {
                CliError::$variant(e)
            }
        })*
    };
}

from_error! {
    AlgebraError => Algebra,
    PartitionError => Partition,
    PolyError => Poly,
    OperatorError => Operator,
    SpaceError => Space,
    FueterError => Fueter,
}
