use f2core::sparse::normalize;
use f2core::{BitVec, F2Matrix, Subspace};

use crate::{act, GroupError, Homomorphism, Resolution};

/// `H_d(G; F2)` for `d = 0 … top − 1`, computed from the tensored-down
/// complex.
pub fn homology_dims(r: &Resolution) -> Vec<usize> {
    (0..r.top()).map(|d| HomologyBasis::new(r, d).dim()).collect()
}

/// Cycle representatives of a basis of `H_d` of the tensored-down complex.
#[derive(Clone, Debug)]
pub struct HomologyBasis {
    pub degree: usize,
    boundaries: Subspace,
    reps: Vec<BitVec>,
}

impl HomologyBasis {
    /// Requires the resolution to reach degree `d + 1`.
    pub fn new(r: &Resolution, d: usize) -> Self {
        assert!(d < r.top(), "homology in degree {d} needs the resolution through degree {}", d + 1);
        let cycles = if d == 0 { Subspace::full(r.rank(0)) } else { r.tensored_down(d).kernel() };
        let boundaries = r.tensored_down(d + 1).image();
        let reps = cycles.complement_basis(&boundaries);
        HomologyBasis { degree: d, boundaries, reps }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[BitVec] {
        &self.reps
    }

    /// Coordinates of the class of cycle `z`.
    pub fn coordinates(&self, z: &BitVec) -> Result<BitVec, GroupError> {
        let cols: Vec<BitVec> = self.reps.iter().chain(self.boundaries.basis()).cloned().collect();
        let m = F2Matrix::from_columns(z.len(), &cols);
        let x = m.solve(z).ok_or_else(|| GroupError::Invariant("vector is not a cycle".into()))?;
        Ok(x.slice(0..self.dim()))
    }
}

/// A chain map between resolutions covering a group homomorphism,
/// determined by the images of free generators.
#[derive(Clone, Debug)]
pub struct ChainLift {
    /// `lifts[d][i] = φ_d(e_i)`, a sparse vector of the target's `F_d`.
    pub lifts: Vec<Vec<Vec<u32>>>,
}

/// `φ_{d}(v)` for sparse `v` in the source's `F_d`.
fn push_forward(f: &Homomorphism, src: &Resolution, tgt: &Resolution, lift: &[Vec<u32>], v: &[u32]) -> Vec<u32> {
    let n = src.group().order();
    let mut out = Vec::new();
    for &x in v {
        let (i, g) = (x as usize / n, x as usize % n);
        out.extend(act(tgt.group(), f.apply(g), &lift[i]));
    }
    normalize(out)
}

impl ChainLift {
    /// Lifts `f` degree by degree through `d_max`, starting from
    /// `e_0 ↦ e_0`, which covers the identity of F2.
    pub fn new(f: &Homomorphism, src: &Resolution, tgt: &Resolution, d_max: usize) -> Result<Self, GroupError> {
        if d_max > src.top().min(tgt.top()) {
            return Err(GroupError::Invariant(format!("lift to degree {d_max} needs both resolutions that far")));
        }
        let mut lifts = vec![vec![vec![0u32]]];
        for d in 1..=d_max {
            let mut level = Vec::with_capacity(src.rank(d));
            for i in 0..src.rank(d) {
                let want = push_forward(f, src, tgt, &lifts[d - 1], src.image(d, i));
                let x = tgt.preimage(d, &want).ok_or(GroupError::LiftFailed { degree: d, generator: i })?;
                level.push(x);
            }
            lifts.push(level);
        }
        Ok(ChainLift { lifts })
    }

    /// Checks `∂φ_d = φ_{d−1}∂` on every generator.
    pub fn verify(&self, f: &Homomorphism, src: &Resolution, tgt: &Resolution) -> Result<(), GroupError> {
        for d in 1..self.lifts.len() {
            for i in 0..src.rank(d) {
                let lhs = tgt.boundary(d, &self.lifts[d][i]);
                let rhs = push_forward(f, src, tgt, &self.lifts[d - 1], src.image(d, i));
                if lhs != rhs {
                    return Err(GroupError::Invariant(format!("chain map square fails at degree {d}, generator {i}")));
                }
            }
        }
        Ok(())
    }

    /// The tensored-down map `r^src_d → r^tgt_d`.
    pub fn tensored_down(&self, src: &Resolution, tgt: &Resolution, d: usize) -> F2Matrix {
        let n = tgt.group().order();
        let mut m = F2Matrix::zeros(tgt.rank(d), src.rank(d));
        for i in 0..src.rank(d) {
            for &x in &self.lifts[d][i] {
                m.flip(x as usize / n, i);
            }
        }
        m
    }
}

/// The matrix of `f_*: H_d(G) → H_d(H)` in the bases of [`HomologyBasis`];
/// column `k` is the image of the `k`-th source class.
pub fn induced_map(f: &Homomorphism, src: &Resolution, tgt: &Resolution, d: usize) -> Result<F2Matrix, GroupError> {
    let lift = ChainLift::new(f, src, tgt, d)?;
    let phi = lift.tensored_down(src, tgt, d);
    let (hs, ht) = (HomologyBasis::new(src, d), HomologyBasis::new(tgt, d));
    let cols: Vec<BitVec> =
        hs.representatives().iter().map(|z| ht.coordinates(&phi.mul_vec(z))).collect::<Result<_, _>>()?;
    Ok(F2Matrix::from_columns(ht.dim(), &cols))
}
