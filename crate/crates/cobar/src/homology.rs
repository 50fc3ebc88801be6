//! Cohomology of one internal grading of a cochain complex by sparse column
//! reduction with clearing.

use std::collections::HashMap;

use f2core::sparse::{ColumnReducer, Outcome};
use f2core::BitVec;

/// The reduced differentials `d_s: C^s → C^{s+1}` of one grading together
/// with a basis of cohomology in every degree `s`.
///
/// Basis classes are the columns of `d_s` that reduce to zero without being
/// cleared, ordered by column index; each carries the cocycle `V_j` recorded
/// during reduction.
#[derive(Debug)]
pub struct GradedHomology {
    dims: Vec<usize>,
    reducers: Vec<ColumnReducer>,
    classes: Vec<Vec<(u32, Vec<u32>)>>,
    class_index: Vec<HashMap<u32, usize>>,
}

/// A chain that failed to be a cocycle during reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotACocycle;

impl GradedHomology {
    /// `dims[s]` is `dim C^s`; `column(s, j)` returns `d_s(e_j)` as a sorted
    /// index list into `C^{s+1}`.
    pub fn build(dims: Vec<usize>, mut column: impl FnMut(usize, usize) -> Vec<u32>) -> Self {
        let top = dims.len();
        let mut reducers: Vec<ColumnReducer> = Vec::with_capacity(top);
        let mut classes = Vec::with_capacity(top);
        let mut class_index = Vec::with_capacity(top);
        let mut cleared: Vec<bool> = Vec::new();
        for s in 0..top {
            let n = dims[s];
            let m = dims.get(s + 1).copied().unwrap_or(0);
            if cleared.len() != n {
                cleared = vec![false; n];
            }
            let mut red = ColumnReducer::new(m, true);
            for (j, &c) in cleared.iter().enumerate() {
                if c {
                    red.push_cleared();
                } else {
                    red.push(column(s, j));
                }
            }
            let mut cls = Vec::new();
            let mut idx = HashMap::new();
            for j in 0..n {
                if red.outcome(j) == Outcome::Zero {
                    idx.insert(j as u32, cls.len());
                    cls.push((j as u32, red.cycle(j)));
                }
            }
            cleared = red.pivot_rows();
            reducers.push(red);
            classes.push(cls);
            class_index.push(idx);
        }
        GradedHomology { dims, reducers, classes, class_index }
    }

    pub fn chain_dim(&self, s: usize) -> usize {
        self.dims.get(s).copied().unwrap_or(0)
    }

    pub fn dim(&self, s: usize) -> usize {
        self.classes.get(s).map_or(0, Vec::len)
    }

    pub fn rank(&self, s: usize) -> usize {
        self.reducers.get(s).map_or(0, ColumnReducer::rank)
    }

    /// The column reducer of `d_s`.
    pub fn reducer(&self, s: usize) -> &ColumnReducer {
        &self.reducers[s]
    }

    /// Cocycle representing the `k`-th basis class in degree `s`.
    pub fn representative(&self, s: usize, k: usize) -> &[u32] {
        &self.classes[s][k].1
    }

    /// Coordinates of the class of `cocycle` (a sorted index list in `C^s`).
    pub fn coordinates(&self, s: usize, cocycle: &[u32]) -> Result<BitVec, NotACocycle> {
        let mut coords = BitVec::zeros(self.dim(s));
        let mut r = cocycle.to_vec();
        let prev = s.checked_sub(1).map(|p| &self.reducers[p]);
        while let Some(&m) = r.last() {
            if let Some(k) = prev.and_then(|p| p.pivot_column(m as usize)) {
                r = f2core::sparse::xor_sorted(&r, prev.expect("checked").reduced(k));
            } else if let Some(&c) = self.class_index.get(s).and_then(|i| i.get(&m)) {
                coords.flip(c);
                r = f2core::sparse::xor_sorted(&r, &self.classes[s][c].1);
            } else {
                return Err(NotACocycle);
            }
        }
        Ok(coords)
    }

    /// Whether `chain` lies in the image of `d_{s-1}`.
    pub fn is_coboundary(&self, s: usize, chain: &[u32]) -> bool {
        match s.checked_sub(1) {
            Some(p) => self.reducers[p].reduce_vector(chain).is_empty(),
            None => chain.is_empty(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_like_complex() {
        // C^0 = F2^2 --d--> C^1 = F2^2, d = [[1,1],[1,1]]: H^0 = 1, H^1 = 1.
        let h = GradedHomology::build(vec![2, 2], |s, _| if s == 0 { vec![0, 1] } else { vec![] });
        assert_eq!(h.dim(0), 1);
        assert_eq!(h.dim(1), 1);
        assert_eq!(h.representative(0, 0), &[0, 1]);
        assert_eq!(h.coordinates(1, &[0]).unwrap().to_string(), "1");
        assert_eq!(h.coordinates(1, &[0, 1]).unwrap().to_string(), "0");
        assert!(h.coordinates(0, &[0]).is_err());
    }
}
