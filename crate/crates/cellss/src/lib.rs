//! Bookkeeping for the cell-attachment and Bockstein spectral sequences of
//! the two-cell algebra `X1 = E∞(σ)//σQ¹(σ)` modulo `σ`.
//!
//! [`e1_basis_mod_sigma`] lists the `E¹` monomials over `σ` (1,0) and
//! `β` (3,2) that are not divisible by `σ`, each with its multiplicative
//! filtration. [`BocksteinChart`] places the classes `τ^k x` of one
//! tridegree, and [`propagate`] applies a list of declared differentials.
//! Differentials are never inferred.

mod chart;
mod decl;
mod slope;
mod tri;

pub use chart::{propagate, BocksteinChart, ChartEntry, Conflict, Status, SurvivorAnalysis};
pub use decl::{
    parse_declarations, shipped_declarations, supplementary_declarations, DeclaredDifferential, SHIPPED_DECLARATIONS,
    SUPPLEMENTARY_DECLARATIONS,
};
pub use slope::{slope_filter, SlopeInterval};
pub use tri::{
    beta, divisibility_groups, e1_basis_mod_sigma, filtration, filtration_discrepancies, sigma, tabulated_classes,
    Discrepancy, Reading, TabulatedClass, TriMonomial,
};

#[derive(Debug, thiserror::Error)]
pub enum CellssError {
    #[error("declaration line {line}: {msg}")]
    Declaration { line: usize, msg: String },
    #[error(transparent)]
    Expression(#[from] winfty::WError),
    #[error("class {class} is not in the chart at ({g},{d},{f})")]
    NotInChart { class: String, g: u32, d: u32, f: i64 },
    #[error("d{r} on {class}: the source already died on page {page}")]
    SourceAlreadyDead { class: String, r: u32, page: u32 },
    #[error("d{r} hits {class}, which already died on page {page}")]
    TargetAlreadyDead { class: String, r: u32, page: u32 },
}
