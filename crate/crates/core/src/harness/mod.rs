//! Canonical text, exhaustive point counts and the command-line interface.

pub mod canon;
pub mod cli;
pub mod enumerate;

pub use canon::Canonical;
pub use cli::{run, CliOutput};
pub use enumerate::{enumerate, gl_order, EnumerationReport};
