use crate::{GroupError, Homomorphism, Perm, PermGroup};

/// An `n×n` matrix over F2 stored by columns; bit `i` of `cols[j]` is the
/// entry in row `i`, column `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Mat {
    pub cols: Vec<u32>,
}

impl F2Mat {
    pub fn identity(n: usize) -> Self {
        F2Mat { cols: (0..n).map(|j| 1 << j).collect() }
    }

    /// `I + e_{ij}`.
    pub fn elementary(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::identity(n);
        m.cols[j] ^= 1 << i;
        m
    }

    /// The matrix of the coordinate permutation `e_j ↦ e_{p(j)}`.
    pub fn permutation(p: &[u32]) -> Self {
        F2Mat { cols: p.iter().map(|&i| 1 << i).collect() }
    }

    pub fn apply(&self, v: u32) -> u32 {
        self.cols.iter().enumerate().filter(|(j, _)| v >> j & 1 == 1).fold(0, |acc, (_, &c)| acc ^ c)
    }

    /// The induced permutation of the `2^n − 1` nonzero vectors, the vector
    /// with bits `v` being point `v − 1`.
    pub fn on_vectors(&self) -> Perm {
        let n = self.cols.len();
        (1..1u32 << n).map(|v| self.apply(v) - 1).collect()
    }
}

fn elementary_pairs(n: usize, upper_only: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && (!upper_only || i < j) {
                out.push((i, j));
            }
        }
    }
    out
}

fn matrix_group(name: &str, n: usize, pairs: &[(usize, usize)]) -> Result<PermGroup, GroupError> {
    let gens = pairs.iter().map(|&(i, j)| F2Mat::elementary(n, i, j).on_vectors()).collect();
    PermGroup::new(name, (1 << n) - 1, gens)
}

/// `GL_n(F2)` acting on the nonzero vectors of `F2^n`, generated by the
/// elementary matrices `I + e_{ij}` in lexicographic order of `(i, j)`.
pub fn gl(n: usize) -> Result<PermGroup, GroupError> {
    matrix_group(&format!("GL({n},2)"), n, &elementary_pairs(n, false))
}

/// Upper unitriangular matrices in `GL_n(F2)`.
pub fn ut(n: usize) -> Result<PermGroup, GroupError> {
    matrix_group(&format!("UT({n},2)"), n, &elementary_pairs(n, true))
}

/// The stabilization `A ↦ diag(A, 1)` from `GL_n(F2)` to `GL_{n+1}(F2)`.
pub fn stabilization(n: usize) -> Result<(PermGroup, PermGroup, Homomorphism), GroupError> {
    let (src, tgt) = (gl(n)?, gl(n + 1)?);
    let images: Vec<Perm> =
        elementary_pairs(n, false).iter().map(|&(i, j)| F2Mat::elementary(n + 1, i, j).on_vectors()).collect();
    let f = Homomorphism::from_generator_images(&src, &tgt, &images)?;
    Ok((src, tgt, f))
}

/// The inclusion of `UT_n(F2)` into `GL_n(F2)`.
pub fn unitriangular_inclusion(n: usize) -> Result<(PermGroup, PermGroup, Homomorphism), GroupError> {
    let (src, tgt) = (ut(n)?, gl(n)?);
    let images: Vec<Perm> =
        elementary_pairs(n, true).iter().map(|&(i, j)| F2Mat::elementary(n, i, j).on_vectors()).collect();
    let f = Homomorphism::from_generator_images(&src, &tgt, &images)?;
    Ok((src, tgt, f))
}

/// The symmetric group on `n` points generated by a transposition and an
/// `n`-cycle (just the transposition for `n = 2`).
pub fn symmetric(n: usize) -> Result<PermGroup, GroupError> {
    let mut gens = vec![(0..n as u32).map(|x| if x < 2 { 1 - x } else { x }).collect::<Perm>()];
    if n > 2 {
        gens.push((0..n as u32).map(|x| (x + 1) % n as u32).collect());
    }
    PermGroup::new(&format!("S{n}"), n, gens)
}

/// `Σ_n ↪ GL_n(F2)` as permutation matrices.
pub fn permutation_matrices(n: usize) -> Result<(PermGroup, PermGroup, Homomorphism), GroupError> {
    let (src, tgt) = (symmetric(n)?, gl(n)?);
    let images: Vec<Perm> = src.generators().iter().map(|p| F2Mat::permutation(p).on_vectors()).collect();
    let f = Homomorphism::from_generator_images(&src, &tgt, &images)?;
    Ok((src, tgt, f))
}

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: &[&str] =
    &["1", "C2", "C3", "C2xC2", "S2", "S3", "D8", "A4", "S4", "GL(2,2)", "GL(3,2)", "UT(3,2)", "UT(4,2)"];

/// A built-in group by name.
pub fn builtin(name: &str) -> Result<PermGroup, GroupError> {
    let cyc = |text: &str| PermGroup::from_cycles(name, text);
    match name {
        "1" => PermGroup::new("1", 1, Vec::new()),
        "C2" => cyc("(1 2)"),
        "C3" => cyc("(1 2 3)"),
        "C2xC2" => cyc("(1 2)\n(3 4)"),
        "S2" => symmetric(2),
        "S3" => symmetric(3),
        "D8" => cyc("(1 2 3 4)\n(1 3)"),
        "A4" => cyc("(1 2 3)\n(2 3 4)"),
        "S4" => symmetric(4),
        "GL(2,2)" => gl(2),
        "GL(3,2)" => gl(3),
        "UT(3,2)" => ut(3),
        "UT(4,2)" => ut(4),
        _ => Err(GroupError::Input(format!("unknown group `{name}`; built-ins are {}", BUILTIN_NAMES.join(", ")))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let want = [1, 2, 3, 4, 2, 6, 8, 12, 24, 6, 168, 8, 64];
        for (name, &n) in BUILTIN_NAMES.iter().zip(&want) {
            assert_eq!(builtin(name).unwrap().order(), n, "{name}");
        }
        assert!(builtin("GL(4,2)").is_err());
    }

    #[test]
    fn homomorphisms_build() {
        stabilization(2).unwrap();
        unitriangular_inclusion(3).unwrap();
        permutation_matrices(2).unwrap();
        permutation_matrices(3).unwrap();
    }
}
