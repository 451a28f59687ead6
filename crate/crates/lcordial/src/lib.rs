//! IO side of the Legendre cordiality toolkit: table and graph file formats,
//! a parallel survey driver, the self-verification suites and the CLI.
//!
//! The arithmetic lives in [`lcordial_core`], re-exported here as [`core`].

pub use lcordial_core as core;

pub mod cli;
pub mod export;
pub mod parallel;
pub mod svg;
pub mod table_csv;
pub mod verify;
