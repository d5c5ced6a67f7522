//! Exact computations around the non-commutative Hilbert scheme of points.
//!
//! For an algebra `A = k{x1..xm}/(relations)` over `Q` or a prime field, the
//! crate computes the defining ideal of the representation scheme, tests
//! cyclic vectors and the triple/left-ideal correspondence for points of the
//! Hilbert scheme, evaluates the determinant (norm) map into divided powers
//! realised as symmetric tensors, and counts points over finite fields.
//!
//! Run `cargo run --example <name>` for a tour; see the `examples/` directory.

pub mod error;
pub mod exactalg;
pub mod harness;
pub mod hilbpts;
pub mod normmap;
pub mod repscheme;

pub use error::{Error, Result};
