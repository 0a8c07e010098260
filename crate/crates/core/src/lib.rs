//! Set-colorings of complete graphs and hypergraphs.
//!
//! Every edge of the complete `k`-uniform hypergraph on `N` vertices receives a set of
//! `s` colors out of a palette of `r`. This crate builds such colorings with no
//! monochromatic `K_n` (code products, affine-geometry partitions, stepping-up),
//! verifies them, computes small set-coloring Ramsey numbers `R(n; r, s)` exactly and
//! evaluates the closed-form bounds on them with exact integer arithmetic.
//!
//! Colors are 0-based: the palette is `0..r`.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and threaded
//! verification live in the companion `setramsey` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

/// Crate version, embedded in generated tables.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub mod bitset;
pub mod bounds;
pub mod clique;
pub mod codes;
pub mod coloring;
pub mod combin;
pub mod constructions;
mod error;
pub mod field;
pub mod solver;

pub use clique::{clique_number_of_color, find_mono_clique, Budget, CliqueWitness};
pub use coloring::{ColorSet, SetColoring, ValidationReport, Violation, MAX_COLORS};
pub use error::{Error, Result};
