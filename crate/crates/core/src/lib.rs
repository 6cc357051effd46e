//! Exact irreducible characters of the semisimple alternating Hecke algebras.
//!
//! The crate is layered bottom-up:
//!
//! - [`scalars`]: the field `Q(i)(q)` and the square-root tower ring where
//!   character values live.
//! - [`symgroup`]: permutations, conjugacy classes and the conjugation
//!   rewriting used by the character recursions.
//! - [`combinat`]: partitions, standard tableaux, contents and symmetric
//!   coverings.
//! - [`hecke`]: the Hecke algebra in its T-basis with its involutions and the
//!   A- and B-bases of the alternating subalgebra.
//! - [`specht`]: seminormal representations and the trace oracle.
//! - [`chars`]: closed formulas, recursions, class polynomials and tables.
//! - [`verify`]: self-check suites shared by the CLI and the tests.
//! - [`cli`]: the command-line front end.

pub mod chars;
pub mod cli;
pub mod combinat;
pub mod error;
pub mod hecke;
pub mod scalars;
pub mod specht;
pub mod symgroup;
pub mod verify;

pub use error::{Error, Result};
