//! Reduced cobar complexes of connected graded coalgebras over F2.
//!
//! [`CobarComplex`] computes Cotor of a coalgebra grading by grading with
//! sparse column reduction, and multiplies classes by concatenating
//! representatives. [`ConeComplex`] is the mapping cone of left
//! multiplication by a `(1, 0)` cycle, [`induced_map`] pushes classes along
//! a coalgebra map, and [`minres`] computes the same Ext groups through
//! minimal resolutions over the dual algebra, which reaches much higher
//! gradings.
//!
//! Bidegrees are written `(g, d)` with `g` the internal grading and
//! `d = g − s` for cobar degree `s`.

mod chart;
mod complex;
mod cone;
pub mod homology;
pub mod families;
mod induced;
pub mod minres;
mod words;

pub use families::{families, families_tsv, FamilyKind, FamilyRow};
pub use chart::{a1_class_name, chart_json, chart_tsv, ChartRow};
pub use complex::{Cochain, CobarComplex, CotorClass, CotorElement, Window, DEFAULT_WORD_BUDGET};
pub use cone::{ConeChain, ConeComplex, ConeElement};
pub use induced::{induced_map, InducedMap};
pub use words::WordIndexer;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CobarError {
    #[error("bidegree (g={g}, s={s}) lies outside the window g ≤ {}, s ≤ {}", window.g_max, window.s_max)]
    OutOfWindow { g: usize, s: usize, window: Window },
    #[error("window g_max = {g_max} exceeds the truncation grading {truncation}")]
    BeyondTruncation { g_max: usize, truncation: usize },
    #[error("grading {g} has {words} cobar words, above the budget of {budget}")]
    BudgetExceeded { g: usize, words: usize, budget: usize },
    #[error("cochain at (g={g}, s={s}) is not a cocycle")]
    NotACycle { g: usize, s: usize },
    #[error("Cotor at (g={g}, d={d}) has dimension {dim}, not 1")]
    NotOneDimensional { g: usize, d: usize, dim: usize },
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Hopf(#[from] gradedhopf::HopfError),
}
