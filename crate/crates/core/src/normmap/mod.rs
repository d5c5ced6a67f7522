//! Divided powers, symmetric tensors and the determinant map on points.

pub mod cycle;
pub mod divided;
pub mod law;
pub mod point;
pub mod symtensor;

pub use cycle::{cycle_extract, Cycle, CycleOutcome};
pub use divided::{dp_normalize, DividedMonomial, DpCombination, DpExpr};
pub use law::{abelianize, law_coefficients, LawCoefficientTable};
pub use point::{det_point, hc_point, NormPoint};
pub use symtensor::{gamma_n, tau, tau_combination, ts_mul, SymTensor, WordMultiset};
