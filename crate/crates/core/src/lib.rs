//! Exact symbolic computation with Dunkl-regular polynomials on hypercomplex
//! subspaces of real alternative *-algebras.
//!
//! The crate works entirely over the rationals. Algebras are given by
//! structure tables ([`algebra`]), functions are sparse polynomials with left
//! algebra coefficients ([`poly`]), and every differential or
//! differential-difference operator acts on those polynomials as a total map
//! ([`operators`]). On top of that sit the partition combinatorics
//! ([`partitions`]), membership tests and Cauchy-Kovalevskaya extension for the
//! spaces `F_P` ([`spaces`]), and the Laplacian decomposition with Fueter trees
//! ([`fueter`]). [`verify`] bundles the reference checks used by the CLI and
//! the acceptance tests.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod algebra;
pub mod fueter;
pub mod linalg;
pub mod operators;
pub mod partitions;
pub mod poly;
pub mod rational;
pub mod spaces;
pub mod verify;

pub use algebra::{AlgebraElement, AlgebraError, AlgebraKind, AlgebraSpec, HypercomplexBasis};
pub use fueter::{FueterError, FueterTree, PairPolicy};
pub use operators::{OperatorContext, OperatorError};
pub use partitions::{MultiplicitySeq, PartitionError, SetPartition};
pub use poly::{Monomial, Point, PolyError, Polynomial};
pub use rational::Rational;
pub use spaces::SpaceError;
