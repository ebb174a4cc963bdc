//! Hereditarily finite sets extended with inverse powersets.
//!
//! Terms built from finite sets, `N`, `P` and `P^-1` are evaluated into union normal forms
//! ([`term`]), compared by three extended cardinality orders ([`cardinal`]), written in a small
//! expression language ([`syntax`]) and checked against the laws they should satisfy ([`audit`]).

pub mod audit;
pub mod cardinal;
pub mod error;
pub mod hf;
pub mod syntax;
pub mod term;

pub use cardinal::{SymCardinal, Verdict};
pub use error::{Error, Result};
pub use hf::HfSet;
pub use syntax::{parse, print_term};
pub use term::{normalize, NormalForm, SetTerm};
