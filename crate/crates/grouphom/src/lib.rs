//! Mod-2 homology of small finite groups.
//!
//! A [`PermGroup`] enumerates its elements. [`Resolution`] builds a free
//! resolution of the trivial module over `F2[G]`, choosing new free
//! generators greedily from kernel bases. [`homology_dims`] reads off
//! `H_*(G; F2)` from the tensored-down complex, and [`induced_map`] lifts a
//! homomorphism to a chain map and returns its matrix on homology.

mod abelian;
mod builtin;
mod group;
mod homology;
mod resolution;

pub use abelian::abelianization_rank;
pub use builtin::{
    builtin, gl, permutation_matrices, stabilization, symmetric, unitriangular_inclusion, ut, F2Mat, BUILTIN_NAMES,
};
pub use group::{compose, Homomorphism, Perm, PermGroup, MAX_ORDER};
pub use homology::{homology_dims, induced_map, ChainLift, HomologyBasis};
pub use resolution::{act, Greedy, Resolution, MAX_DEGREE};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("invalid group input: {0}")]
    Input(String),
    #[error("group order exceeds {limit} (reached {order})")]
    TooLarge { order: usize, limit: usize },
    #[error("resolution degree {degree} exceeds the limit {limit}")]
    DegreeTooLarge { degree: usize, limit: usize },
    #[error("the generator images do not define a homomorphism")]
    NotAHomomorphism,
    #[error("no chain lift for generator {generator} in degree {degree}")]
    LiftFailed { degree: usize, generator: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// Tab-separated `group\td\tdim` rows for `d = 0 … d_max`.
pub fn homology_tsv(g: &PermGroup, d_max: usize) -> Result<String, GroupError> {
    let r = Resolution::new(g, d_max + 1)?;
    let mut s = String::from("group\td\tdim\n");
    for (d, dim) in homology_dims(&r).into_iter().enumerate() {
        s.push_str(&format!("{}\t{d}\t{dim}\n", g.name()));
    }
    Ok(s)
}
