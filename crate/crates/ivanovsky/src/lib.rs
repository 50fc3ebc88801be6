//! The spectral sequence of the augmentation-ideal filtration on a cobar
//! complex, computed exactly from the filtered complex.
//!
//! A letter `a` has depth `max k` with `a ∈ (Ā)^k`, and a word has
//! filtration `f = −Σ depth`. Within each grading the words are sorted by
//! filtration and the differential is reduced once; every page, its
//! differentials and its representatives then follow from the persistence
//! pairs of that reduction. A pair `x ↦ y` of length `f(x) − f(y) = r`
//! survives to `E^r` and is the differential `d^r`.

mod depth;
mod filtered;
mod pages;

pub use depth::augmentation_depths;
pub use filtered::{Fate, FilteredGrading};
pub use pages::{einfty_report, page_tsv, EInftyRow, FilteredCobar, FilteredCone, PageEntry, SSPage};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IvanovskyError {
    #[error(transparent)]
    Cobar(#[from] cobar::CobarError),
    #[error("the basis is not adapted to the augmentation filtration at {0}")]
    NonAdaptedBasis(String),
    #[error("the differential raises filtration at (g={g}, s={s})")]
    NotFiltered { g: usize, s: usize },
    #[error("page number must be at least 1")]
    PageZero,
}
