//! Exact linear algebra over F2.
//!
//! Dense bit-packed vectors and matrices ([`BitVec`], [`F2Matrix`]) with
//! deterministic leftmost-pivot elimination, reduced-echelon subspaces
//! ([`Subspace`]), and a sparse column reducer ([`sparse::ColumnReducer`])
//! for the large, very sparse differentials of cobar complexes.

mod bitvec;
mod matrix;
pub mod sparse;
mod subspace;

pub use bitvec::BitVec;
pub use matrix::F2Matrix;
pub use subspace::Subspace;

/// Rank of `m` over F2.
pub fn rank(m: &F2Matrix) -> usize {
    m.rank()
}

/// Reduced-echelon basis of `{v : m·v = 0}`.
pub fn kernel_basis(m: &F2Matrix) -> Subspace {
    m.kernel()
}

/// Some `x` with `m·x = b`, free variables set to zero, or `None`.
pub fn solve(m: &F2Matrix, b: &BitVec) -> Option<BitVec> {
    m.solve(b)
}
