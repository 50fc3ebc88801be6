use f2core::sparse::{normalize, ColumnReducer, Outcome};
use f2core::{BitVec, F2Matrix};

use crate::{GroupError, PermGroup};

/// Largest resolution length accepted.
pub const MAX_DEGREE: usize = 7;

/// A free resolution `⋯ → F_1 → F_0 → F2` of the trivial module over
/// `F2[G]`.
///
/// `F_d = F2[G]^{r_d}` has F2-basis `(i, g)` with index `i·|G| + g`, and
/// `G` acts on the left by `h·(i, g) = (i, hg)`. The boundary is determined
/// by the images of the free generators; column `(i, g)` of `∂_d` is
/// `g·∂_d(e_i)`.
#[derive(Clone, Debug)]
pub struct Resolution {
    group: PermGroup,
    /// `images[d][i] = ∂_d(e_i)`, a sparse vector in `F_{d−1}`; for `d = 0`
    /// the target is `F2`, with the single index 0.
    images: Vec<Vec<Vec<u32>>>,
    /// A column reducer for each `∂_d`, tracking additions.
    reducers: Vec<ColumnReducer>,
}

/// Tie-breaking rule for the greedy choice of new free generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Greedy {
    /// Scan kernel basis vectors in increasing column order.
    First,
    /// Scan them in decreasing column order.
    Last,
}

/// `h·v` for a sparse vector in `F2[G]^r`.
pub fn act(group: &PermGroup, h: usize, v: &[u32]) -> Vec<u32> {
    let n = group.order();
    let mut out: Vec<u32> =
        v.iter().map(|&x| ((x as usize / n) * n + group.mul(h, x as usize % n)) as u32).collect();
    out.sort_unstable();
    out
}

impl Resolution {
    /// Resolves the trivial module through degree `d_max`, choosing new
    /// generators greedily from a kernel basis with the `First` rule.
    pub fn new(group: &PermGroup, d_max: usize) -> Result<Self, GroupError> {
        Self::with_rule(group, d_max, Greedy::First)
    }

    pub fn with_rule(group: &PermGroup, d_max: usize, rule: Greedy) -> Result<Self, GroupError> {
        if d_max > MAX_DEGREE {
            return Err(GroupError::DegreeTooLarge { degree: d_max, limit: MAX_DEGREE });
        }
        let n = group.order();
        let mut images = vec![vec![vec![0u32]]];
        let mut reducers = vec![Self::reduce(group, 1, &images[0])];
        for _ in 1..=d_max {
            let prev = reducers.last().expect("degree 0 exists");
            let mut kernel: Vec<Vec<u32>> = (0..prev.ncols())
                .filter(|&j| prev.outcome(j) == Outcome::Zero)
                .map(|j| prev.cycle(j))
                .collect();
            if rule == Greedy::Last {
                kernel.reverse();
            }
            let ambient = prev.ncols();
            let mut span = ColumnReducer::new(ambient, false);
            let mut gens = Vec::new();
            for v in kernel {
                if span.rank() == ambient - prev.rank() {
                    break;
                }
                if span.reduce_vector(&v).is_empty() {
                    continue;
                }
                for h in 0..n {
                    span.push(act(group, h, &v));
                }
                gens.push(v);
            }
            let rows = ambient;
            reducers.push(Self::reduce(group, rows, &gens));
            images.push(gens);
        }
        Ok(Resolution { group: group.clone(), images, reducers })
    }

    fn reduce(group: &PermGroup, nrows: usize, gens: &[Vec<u32>]) -> ColumnReducer {
        let mut r = ColumnReducer::new(nrows, true);
        for v in gens {
            for h in 0..group.order() {
                r.push(if nrows == 1 { v.clone() } else { act(group, h, v) });
            }
        }
        r
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// Highest degree built.
    pub fn top(&self) -> usize {
        self.images.len() - 1
    }

    /// Free ranks `r_0, …, r_top`.
    pub fn ranks(&self) -> Vec<usize> {
        self.images.iter().map(Vec::len).collect()
    }

    pub fn rank(&self, d: usize) -> usize {
        self.images[d].len()
    }

    /// `∂_d(e_i)`.
    pub fn image(&self, d: usize, i: usize) -> &[u32] {
        &self.images[d][i]
    }

    /// `∂_d(v)` for a sparse `v ∈ F_d`, with `d ≥ 1`.
    pub fn boundary(&self, d: usize, v: &[u32]) -> Vec<u32> {
        let n = self.group.order();
        let mut out = Vec::new();
        for &x in v {
            out.extend(act(&self.group, x as usize % n, &self.images[d][x as usize / n]));
        }
        normalize(out)
    }

    /// Some `x ∈ F_d` with `∂_d(x) = v`, if one exists.
    pub fn preimage(&self, d: usize, v: &[u32]) -> Option<Vec<u32>> {
        self.reducers[d].preimage(v)
    }

    /// The dense matrix of `∂_d` for `d ≥ 1`.
    pub fn boundary_matrix(&self, d: usize) -> F2Matrix {
        let n = self.group.order();
        let rows = n * self.rank(d - 1);
        let cols: Vec<BitVec> = (0..n * self.rank(d))
            .map(|c| BitVec::from_ones(rows, self.boundary(d, &[c as u32]).into_iter().map(|x| x as usize)))
            .collect();
        F2Matrix::from_columns(rows, &cols)
    }

    /// Checks `∂∘∂ = 0`, that the augmentation is onto, and exactness
    /// `ker ∂_{d−1} = im ∂_d` at every degree below the top.
    pub fn verify(&self) -> Result<(), GroupError> {
        for d in 2..=self.top() {
            for i in 0..self.rank(d) {
                if !self.boundary(d - 1, self.image(d, i)).is_empty() {
                    return Err(GroupError::Invariant(format!("∂∂ ≠ 0 on generator {i} of degree {d}")));
                }
            }
        }
        if self.reducers[0].rank() != 1 {
            return Err(GroupError::Invariant("augmentation is not onto".into()));
        }
        for d in 1..=self.top() {
            let kernel = self.reducers[d - 1].ncols() - self.reducers[d - 1].rank();
            if self.reducers[d].rank() != kernel {
                return Err(GroupError::Invariant(format!(
                    "degree {}: kernel has dimension {kernel} but the image has {}",
                    d - 1,
                    self.reducers[d].rank()
                )));
            }
        }
        Ok(())
    }

    /// The complex `F2 ⊗_{F2[G]} F`: matrix `D_d` of size `r_{d−1} × r_d`
    /// whose entry `(j, i)` is the parity of block `j` of `∂_d(e_i)`.
    pub fn tensored_down(&self, d: usize) -> F2Matrix {
        let n = self.group.order();
        let mut m = F2Matrix::zeros(self.rank(d - 1), self.rank(d));
        for i in 0..self.rank(d) {
            for &x in self.image(d, i) {
                m.flip(x as usize / n, i);
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    #[test]
    fn cyclic_of_order_two_is_periodic() {
        let r = Resolution::new(&builtin("C2").unwrap(), 5).unwrap();
        assert_eq!(r.ranks(), vec![1; 6]);
        r.verify().unwrap();
    }

    #[test]
    fn trivial_group() {
        let r = Resolution::new(&builtin("1").unwrap(), 4).unwrap();
        assert_eq!(r.ranks(), vec![1, 0, 0, 0, 0]);
        r.verify().unwrap();
    }

    #[test]
    fn boundaries_are_equivariant() {
        let g = builtin("S3").unwrap();
        let r = Resolution::new(&g, 3).unwrap();
        let n = g.order();
        for d in 1..=3 {
            for c in 0..n * r.rank(d) {
                for h in 0..n {
                    let hc = act(&g, h, &[c as u32]);
                    assert_eq!(r.boundary(d, &hc), act(&g, h, &r.boundary(d, &[c as u32])));
                }
            }
        }
        let m = r.boundary_matrix(2);
        assert!(r.boundary_matrix(1).mul(&m).is_zero());
    }

    #[test]
    fn degree_limit() {
        assert!(Resolution::new(&builtin("C2").unwrap(), MAX_DEGREE + 1).is_err());
    }
}
