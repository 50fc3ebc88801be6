//! Finite-type graded Hopf algebras over F2 stored as explicit tables.
//!
//! An algebra is a [`HopfAlgebraTable`]: a basis per grading, a product
//! table and a coproduct table. Elements are addressed by a global index
//! (grading-major, labels sorted within a grading), and F2-combinations are
//! sorted, duplicate-free index lists.

mod basis;
mod builders;
mod dual;
mod map;
mod table;

pub use basis::GradedBasis;
pub use builders::{build_a1_star, build_delta_cgl, PolynomialHopfBuilder};
pub use dual::{dual_label, dualize};
pub use map::{check_hopf_map, CoalgebraMap, HopfMapReport};
pub use table::{AxiomReport, HopfAlgebraTable, TableJson};

/// An F2-combination of basis elements: sorted, duplicate-free indices.
pub type Comb = Vec<usize>;
/// An F2-combination of pure tensors: sorted, duplicate-free index pairs.
pub type Tensor = Vec<(usize, usize)>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("grading {grading} lies above the truncation grading {truncation}")]
    Truncated { grading: usize, truncation: usize },
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("`{label}` in grading {source_grading} is sent to grading {image_grading}")]
    GradingMismatch { label: String, source_grading: usize, image_grading: usize },
    #[error("no image for `{0}` and it is not a product of lower basis elements")]
    MissingImage(String),
    #[error("malformed table: {0}")]
    Malformed(String),
}

/// Sorts and cancels repeated entries in pairs.
pub fn normalize<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort_unstable();
    let mut out: Vec<T> = Vec::with_capacity(v.len());
    for t in v {
        if out.last() == Some(&t) {
            out.pop();
        } else {
            out.push(t);
        }
    }
    out
}
