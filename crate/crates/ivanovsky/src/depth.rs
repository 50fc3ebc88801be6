use f2core::{BitVec, Subspace};
use gradedhopf::HopfAlgebraTable;

use crate::IvanovskyError;

/// Depth of every basis element in the powers of the augmentation ideal:
/// `depth[id] = max k` with `id ∈ (Ā)^k` (the unit has depth 0).
///
/// Fails unless each `(Ā)^k` is spanned by the basis elements it contains.
pub fn augmentation_depths(h: &HopfAlgebraTable) -> Result<Vec<usize>, IvanovskyError> {
    let n = h.len();
    let positive: Vec<BitVec> = (1..n).map(|i| BitVec::unit(n, i)).collect();
    let mut depth = vec![0; n];
    let mut power = Subspace::from_vectors(n, positive.iter().cloned());
    let mut k = 1;
    while power.dim() > 0 {
        let members: Vec<usize> = (1..n).filter(|&i| power.contains(&BitVec::unit(n, i))).collect();
        if members.len() != power.dim() {
            let odd = power.pivots().iter().copied().find(|p| !members.contains(p)).unwrap_or(0);
            return Err(IvanovskyError::NonAdaptedBasis(h.label(odd).to_string()));
        }
        for &i in &members {
            depth[i] = k;
        }
        let mut next = Vec::new();
        for v in power.basis_vectors() {
            for a in 1..n {
                if v.iter_ones().any(|x| h.grading(x) + h.grading(a) > h.max_grading()) {
                    continue;
                }
                let mut w = BitVec::zeros(n);
                for x in v.iter_ones() {
                    for y in h.multiply(x, a).map_err(cobar::CobarError::from)? {
                        w.flip(y);
                    }
                }
                next.push(w);
            }
        }
        power = Subspace::from_vectors(n, next);
        k += 1;
    }
    Ok(depth)
}
