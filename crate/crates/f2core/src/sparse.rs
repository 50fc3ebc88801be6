//! Sparse column reduction over F2.
//!
//! Columns are sorted lists of row indices. The pivot ("low") of a nonzero
//! column is its largest row index. Columns are reduced left to right in the
//! order they are pushed, so the result is the standard persistence
//! reduction `R = D·V` with `V` upper unitriangular.

/// Symmetric difference of two sorted index lists.
pub fn xor_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Sorts `col` and cancels repeated indices in pairs.
pub fn normalize(mut col: Vec<u32>) -> Vec<u32> {
    col.sort_unstable();
    let mut out: Vec<u32> = Vec::with_capacity(col.len());
    for t in col {
        if out.last() == Some(&t) {
            out.pop();
        } else {
            out.push(t);
        }
    }
    out
}

/// What happened to a pushed column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Reduced to a nonzero column with this pivot row.
    Pivot(u32),
    /// Reduced to zero.
    Zero,
    /// Skipped because it is known to reduce to zero.
    Cleared,
}

/// Incremental column reducer with optional bookkeeping of column additions.
#[derive(Clone, Debug)]
pub struct ColumnReducer {
    nrows: usize,
    pivot_of_row: Vec<u32>,
    reduced: Vec<Vec<u32>>,
    outcomes: Vec<Outcome>,
    additions: Option<Vec<Vec<u32>>>,
    rank: usize,
}

const NONE: u32 = u32::MAX;

impl ColumnReducer {
    /// A reducer for columns with `nrows` rows. With `track`, the list of
    /// earlier columns added into each column is recorded, which enables
    /// [`ColumnReducer::expand`] and [`ColumnReducer::preimage`].
    pub fn new(nrows: usize, track: bool) -> Self {
        ColumnReducer {
            nrows,
            pivot_of_row: vec![NONE; nrows],
            reduced: Vec::new(),
            outcomes: Vec::new(),
            additions: track.then(Vec::new),
            rank: 0,
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.outcomes.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn outcome(&self, j: usize) -> Outcome {
        self.outcomes[j]
    }

    pub fn outcomes(&self) -> &[Outcome] {
        &self.outcomes
    }

    /// The reduced form of column `j` (empty unless it is a pivot column).
    pub fn reduced(&self, j: usize) -> &[u32] {
        &self.reduced[j]
    }

    /// Column whose pivot is `row`, if any.
    pub fn pivot_column(&self, row: usize) -> Option<usize> {
        let c = self.pivot_of_row[row];
        (c != NONE).then_some(c as usize)
    }

    /// Indicator over rows: `true` where the row is the pivot of some column.
    pub fn pivot_rows(&self) -> Vec<bool> {
        self.pivot_of_row.iter().map(|&c| c != NONE).collect()
    }

    /// Earlier columns added into column `j` during its reduction.
    pub fn additions(&self, j: usize) -> &[u32] {
        &self.additions.as_ref().expect("reducer was built without tracking")[j]
    }

    /// Records a column that is known to reduce to zero without reducing it.
    pub fn push_cleared(&mut self) -> Outcome {
        self.reduced.push(Vec::new());
        self.outcomes.push(Outcome::Cleared);
        if let Some(a) = &mut self.additions {
            a.push(Vec::new());
        }
        Outcome::Cleared
    }

    /// Reduces and records a column given as a sorted, duplicate-free list.
    pub fn push(&mut self, col: Vec<u32>) -> Outcome {
        debug_assert!(col.windows(2).all(|w| w[0] < w[1]), "column must be strictly sorted");
        debug_assert!(col.last().is_none_or(|&r| (r as usize) < self.nrows));
        let j = self.outcomes.len() as u32;
        let mut col = col;
        let mut used = Vec::new();
        let outcome = loop {
            let Some(&low) = col.last() else {
                break Outcome::Zero;
            };
            let p = self.pivot_of_row[low as usize];
            if p == NONE {
                self.pivot_of_row[low as usize] = j;
                self.rank += 1;
                break Outcome::Pivot(low);
            }
            col = xor_sorted(&col, &self.reduced[p as usize]);
            used.push(p);
        };
        if outcome == Outcome::Zero {
            col = Vec::new();
        }
        self.reduced.push(col);
        self.outcomes.push(outcome);
        if let Some(a) = &mut self.additions {
            a.push(used);
        }
        outcome
    }

    /// Reduces an arbitrary vector against the pivot columns. The result is
    /// empty exactly when the vector lies in the column space.
    pub fn reduce_vector(&self, v: &[u32]) -> Vec<u32> {
        self.reduce_vector_tracked(v).0
    }

    /// Like [`ColumnReducer::reduce_vector`], also returning the pivot
    /// columns that were added.
    pub fn reduce_vector_tracked(&self, v: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let mut col = v.to_vec();
        let mut used = Vec::new();
        let mut out = Vec::new();
        while let Some(low) = col.pop() {
            let p = self.pivot_of_row[low as usize];
            if p == NONE {
                out.push(low);
            } else {
                col = xor_sorted(&col, &self.reduced[p as usize][..self.reduced[p as usize].len() - 1]);
                used.push(p);
            }
        }
        out.reverse();
        (out, used)
    }

    /// Expresses the combination `Σ_{k ∈ cols} R_k` of reduced columns as a
    /// combination of original columns, i.e. computes `V·e_cols`.
    pub fn expand(&self, cols: &[u32]) -> Vec<u32> {
        let adds = self.additions.as_ref().expect("reducer was built without tracking");
        let Some(&top) = cols.iter().max() else {
            return Vec::new();
        };
        let mut parity = vec![false; top as usize + 1];
        for &c in cols {
            parity[c as usize] ^= true;
        }
        for k in (0..=top as usize).rev() {
            if parity[k] {
                for &m in &adds[k] {
                    parity[m as usize] ^= true;
                }
            }
        }
        parity.iter().enumerate().filter(|(_, &b)| b).map(|(k, _)| k as u32).collect()
    }

    /// Original columns whose sum is `v`, if `v` lies in the column space.
    pub fn preimage(&self, v: &[u32]) -> Option<Vec<u32>> {
        let (rest, used) = self.reduce_vector_tracked(v);
        rest.is_empty().then(|| self.expand(&normalize(used)))
    }

    /// Original columns summing to zero that witness the zero column `j`.
    pub fn cycle(&self, j: usize) -> Vec<u32> {
        assert_eq!(self.outcomes[j], Outcome::Zero, "column {j} did not reduce to zero");
        self.expand(&[j as u32])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{BitVec, F2Matrix};
    use proptest::prelude::*;

    fn to_sparse(v: &BitVec) -> Vec<u32> {
        v.iter_ones().map(|i| i as u32).collect()
    }

    #[test]
    fn xor_and_normalize() {
        assert_eq!(xor_sorted(&[1, 3, 5], &[3, 4]), vec![1, 4, 5]);
        assert_eq!(normalize(vec![5, 1, 5, 2, 1, 1]), vec![1, 2]);
    }

    #[test]
    fn small_reduction() {
        // Columns 110, 011, 101: the third reduces to zero.
        let mut r = ColumnReducer::new(3, true);
        assert_eq!(r.push(vec![0, 1]), Outcome::Pivot(1));
        assert_eq!(r.push(vec![1, 2]), Outcome::Pivot(2));
        assert_eq!(r.push(vec![0, 2]), Outcome::Zero);
        assert_eq!(r.rank(), 2);
        assert_eq!(r.cycle(2), vec![0, 1, 2]);
        assert!(r.reduce_vector(&[0, 1, 2]).len() == 1);
    }

    fn columns(nr: usize, nc: usize) -> impl Strategy<Value = Vec<Vec<bool>>> {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), nr), nc)
    }

    proptest! {
        #[test]
        fn rank_agrees_with_dense(cols in columns(20, 25)) {
            let bv: Vec<BitVec> = cols.iter().map(|c| BitVec::from_bools(c)).collect();
            let dense = F2Matrix::from_columns(20, &bv);
            let mut r = ColumnReducer::new(20, true);
            for c in &bv {
                r.push(to_sparse(c));
            }
            prop_assert_eq!(r.rank(), dense.rank());
            for j in 0..r.ncols() {
                if r.outcome(j) == Outcome::Zero {
                    let mut sum = BitVec::zeros(20);
                    for k in r.cycle(j) {
                        sum.xor_assign(&bv[k as usize]);
                    }
                    prop_assert!(sum.is_zero());
                }
            }
        }

        #[test]
        fn preimage_is_exact(cols in columns(15, 12), pick in proptest::collection::vec(any::<bool>(), 12)) {
            let bv: Vec<BitVec> = cols.iter().map(|c| BitVec::from_bools(c)).collect();
            let mut r = ColumnReducer::new(15, true);
            for c in &bv {
                r.push(to_sparse(c));
            }
            let mut target = BitVec::zeros(15);
            for (k, &p) in pick.iter().enumerate() {
                if p { target.xor_assign(&bv[k]); }
            }
            let pre = r.preimage(&to_sparse(&target)).expect("target is in the image");
            let mut sum = BitVec::zeros(15);
            for k in pre {
                sum.xor_assign(&bv[k as usize]);
            }
            prop_assert_eq!(sum, target);
        }
    }
}
