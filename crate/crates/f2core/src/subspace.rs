use crate::{BitVec, F2Matrix};

/// A linear subspace of F2^n stored as a reduced row-echelon basis.
///
/// Rows are sorted by pivot (leftmost set bit), and each pivot column is
/// zero in every other row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: (0..ambient).map(|i| BitVec::unit(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// The span of `vectors`.
    pub fn from_vectors(ambient: usize, vectors: impl IntoIterator<Item = BitVec>) -> Self {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn basis_vectors(&self) -> Vec<BitVec> {
        self.rows.clone()
    }

    /// Reduces `v` against the basis so that every pivot entry is zero.
    /// The result is zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.ambient, "vector length must equal ambient dimension");
        let mut v = v.clone();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(r);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &BitVec) -> Option<BitVec> {
        let mut c = BitVec::zeros(self.dim());
        for (k, &p) in self.pivots.iter().enumerate() {
            if v.get(p) {
                c.set(k, true);
            }
        }
        let mut rebuilt = BitVec::zeros(self.ambient);
        for k in c.iter_ones() {
            rebuilt.xor_assign(&self.rows[k]);
        }
        (rebuilt == *v).then_some(c)
    }

    /// Adds `v` to the spanning set. Returns `true` if the dimension grew.
    pub fn insert(&mut self, v: BitVec) -> bool {
        let v = self.reduce(&v);
        let Some(p) = v.first_one() else {
            return false;
        };
        for r in &mut self.rows {
            if r.get(p) {
                r.xor_assign(&v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimensions differ");
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v.clone());
        }
        s
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimensions differ");
        // Solve a·A = b·B: the kernel of the stacked map (a, b) ↦ aA + bB.
        let stacked: Vec<BitVec> = self.rows.iter().chain(&other.rows).cloned().collect();
        let m = F2Matrix::from_rows(self.ambient, &stacked).transpose();
        let k = m.kernel();
        let vecs = k.rows.iter().map(|c| {
            let mut v = BitVec::zeros(self.ambient);
            for i in c.iter_ones().filter(|&i| i < self.dim()) {
                v.xor_assign(&self.rows[i]);
            }
            v
        });
        Subspace::from_vectors(self.ambient, vecs)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|v| other.contains(v))
    }

    /// Vectors of `self` whose images form a basis of `self / sub`.
    /// Requires `sub ⊆ self`.
    pub fn complement_basis(&self, sub: &Subspace) -> Vec<BitVec> {
        let mut acc = sub.clone();
        let mut out = Vec::new();
        for v in &self.rows {
            if acc.insert(v.clone()) {
                out.push(v.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bv(s: &str) -> BitVec {
        BitVec::parse(s).unwrap()
    }

    #[test]
    fn insert_keeps_echelon_form() {
        let s = Subspace::from_vectors(4, [bv("0110"), bv("1100"), bv("1010")]);
        assert_eq!(s.dim(), 2);
        assert_eq!(s.pivots(), &[0, 1]);
        assert_eq!(s.basis_vectors(), vec![bv("1010"), bv("0110")]);
        assert!(s.contains(&bv("1100")));
        assert!(!s.contains(&bv("0001")));
    }

    #[test]
    fn intersection_example() {
        let a = Subspace::from_vectors(3, [bv("100"), bv("010")]);
        let b = Subspace::from_vectors(3, [bv("110"), bv("001")]);
        let i = a.intersection(&b);
        assert_eq!(i.basis_vectors(), vec![bv("110")]);
    }

    fn vecs(n: usize, k: usize) -> impl Strategy<Value = Vec<BitVec>> {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), n), 0..k)
            .prop_map(|v| v.iter().map(|b| BitVec::from_bools(b)).collect())
    }

    proptest! {
        #[test]
        fn dimension_formula(a in vecs(12, 8), b in vecs(12, 8)) {
            let a = Subspace::from_vectors(12, a);
            let b = Subspace::from_vectors(12, b);
            let s = a.sum(&b);
            let i = a.intersection(&b);
            prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
            prop_assert!(i.is_subspace_of(&a) && i.is_subspace_of(&b));
        }

        #[test]
        fn coordinates_roundtrip(a in vecs(10, 8), pick in proptest::collection::vec(any::<bool>(), 8)) {
            let s = Subspace::from_vectors(10, a);
            let mut v = BitVec::zeros(10);
            for (k, r) in s.basis().iter().enumerate() {
                if pick[k] { v.xor_assign(r); }
            }
            let c = s.coordinates(&v).unwrap();
            for k in 0..s.dim() {
                prop_assert_eq!(c.get(k), pick[k]);
            }
        }
    }
}
