//! Stability Hopf algebras of E∞ cell complexes over F2.
//!
//! A [`CellSpec`] lists generator and relation cells in order. Each cell
//! changes the stability Hopf algebra by one of three rules, according to
//! how far its class lies from the diagonal: nothing above it, a quotient by
//! the barred class on the line `d = g − 1`, and a new bracket generator on
//! the line `d = g − 2`. [`delta_of_cells`] applies them and returns a
//! [`DeltaPresentation`] whose structure tables come from
//! [`DeltaPresentation::table`].

mod engine;
mod spec;
mod transfer;

pub use engine::{delta_of_cells, CellEffect, DeltaGenerator, DeltaPoly, DeltaPresentation, Exps, Flag};
pub use spec::{Cell, CellKind, CellSpec, CGL_CELLS, Y1_CELLS};
pub use transfer::{slope_transfer, TransferKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StabError {
    #[error("line {line}: {msg}")]
    Spec { line: usize, msg: String },
    #[error(transparent)]
    Expression(#[from] winfty::WError),
    #[error(transparent)]
    Hopf(#[from] gradedhopf::HopfError),
    #[error("cell `{cell}`: {msg}")]
    Hypothesis { cell: String, msg: String },
    #[error("cell `{cell}` lies on the line d = g − 2 but has no decomposition")]
    MissingDecomposition { cell: String },
    #[error("cell `{cell}`: the attaching class has nonzero bar {bar}")]
    NonzeroBar { cell: String, bar: String },
    #[error("cell `{cell}`: the decomposition multiplies to {product}, not {attach}")]
    DecompositionMismatch { cell: String, product: String, attach: String },
    #[error("slope transfer: {0}")]
    Transfer(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
