use std::sync::OnceLock;

use f2core::sparse::normalize;
use f2core::BitVec;

use crate::homology::GradedHomology;
use crate::{Cochain, CobarComplex, CobarError, CotorElement};

/// The mapping cone of left multiplication by a cycle `z` of bidegree
/// `(1, 0)`.
///
/// In grading `g` and degree `s` the chains are `C^s(g) ⊕ C^s(g−1)` with
/// `d(x, y) = (dx + z·y, dy)`; in `(g, d)` terms the second summand sits at
/// `(g−1, d−1)`. Cotor acts from the right by `(x, y)·r = (x·r, y·r)`, which
/// commutes with the differential because `z` multiplies from the left.
#[derive(Debug)]
pub struct ConeComplex<'a> {
    base: &'a CobarComplex,
    z: Cochain,
    gradings: Vec<OnceLock<GradedHomology>>,
}

/// A cone chain `(x, y)` with `x ∈ C^s(g)` and `y ∈ C^s(g−1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeChain {
    pub g: usize,
    pub s: usize,
    pub x: Vec<u32>,
    pub y: Vec<u32>,
}

/// A cone homology element in basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeElement {
    pub g: usize,
    pub s: usize,
    pub coords: BitVec,
}

impl ConeElement {
    pub fn d(&self) -> usize {
        self.g - self.s
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }
}

impl<'a> ConeComplex<'a> {
    /// Builds the cone of `z`, which must be a cocycle in `C^1(1)`.
    pub fn new(base: &'a CobarComplex, z: Cochain) -> Result<Self, CobarError> {
        if (z.g, z.s) != (1, 1) {
            return Err(CobarError::Invariant(format!("cone cycle must sit at (g,s) = (1,1), got ({},{})", z.g, z.s)));
        }
        if !base.differential(&z).is_zero() {
            return Err(CobarError::NotACycle { g: z.g, s: z.s });
        }
        let n = base.window().g_max + 1;
        Ok(ConeComplex { base, z, gradings: (0..n).map(|_| OnceLock::new()).collect() })
    }

    pub fn base(&self) -> &CobarComplex {
        self.base
    }

    /// The cocycle `z` the cone is built from.
    pub fn cycle(&self) -> &Cochain {
        &self.z
    }

    /// `dim C^s(g)`: chains below this index are `x` words, the rest are `y`
    /// words shifted by it.
    pub fn split(&self, g: usize, s: usize) -> usize {
        self.base.words().count(g, s)
    }

    /// Chain dimensions of grading `g` in every degree.
    pub fn dims(&self, g: usize) -> Vec<usize> {
        let w = self.base.words();
        (0..=g).map(|s| w.count(g, s) + if g > 0 { w.count(g - 1, s) } else { 0 }).collect()
    }

    /// The differential of chain basis element `j` of `C^s(g)`.
    pub fn column(&self, g: usize, s: usize, j: usize) -> Vec<u32> {
        let nx = self.split(g, s);
        let off = self.split(g, s + 1) as u32;
        if j < nx {
            self.base.differential_of_word(g, s, j as u32)
        } else {
            let y = Cochain { g: g - 1, s, words: vec![(j - nx) as u32] };
            let zy = self.base.concat(&self.z, &y).expect("within window").words;
            let dy = self.base.differential(&y).words;
            let mut col = zy;
            col.extend(dy.into_iter().map(|r| r + off));
            col
        }
    }

    /// Cone cohomology of grading `g` in every degree.
    pub fn grading(&self, g: usize) -> Result<&GradedHomology, CobarError> {
        self.base.grading(g)?;
        if g > 0 {
            self.base.grading(g - 1)?;
        }
        if let Some(h) = self.gradings[g].get() {
            return Ok(h);
        }
        let h = GradedHomology::build(self.dims(g), |s, j| self.column(g, s, j));
        Ok(self.gradings[g].get_or_init(|| h))
    }

    /// Checks `d∘d = 0` on every chain basis element of grading `g`.
    pub fn verify_d_squared(&self, g: usize) -> Result<(), CobarError> {
        let dims = self.dims(g);
        for s in 0..g.saturating_sub(1) {
            for j in 0..dims[s] {
                let c = self.column(g, s, j);
                let mut dd = Vec::new();
                for r in c {
                    dd.extend(self.column(g, s + 1, r as usize));
                }
                if !normalize(dd).is_empty() {
                    return Err(CobarError::Invariant(format!("cone d² ≠ 0 at ({g},{s}) column {j}")));
                }
            }
        }
        Ok(())
    }

    fn s_of(&self, g: usize, d: usize) -> Result<usize, CobarError> {
        let w = self.base.window();
        if d > g || g > w.g_max || g - d > w.s_max {
            return Err(CobarError::OutOfWindow { g, s: g.saturating_sub(d), window: w });
        }
        Ok(g - d)
    }

    pub fn dim(&self, g: usize, d: usize) -> Result<usize, CobarError> {
        let s = self.s_of(g, d)?;
        Ok(self.grading(g)?.dim(s))
    }

    /// Basis elements of cone homology at `(g, d)`.
    pub fn basis(&self, g: usize, d: usize) -> Result<Vec<ConeElement>, CobarError> {
        let s = self.s_of(g, d)?;
        let n = self.grading(g)?.dim(s);
        Ok((0..n).map(|k| ConeElement { g, s, coords: BitVec::unit(n, k) }).collect())
    }

    /// The unique nonzero class at `(g, d)` when the group is one-dimensional.
    pub fn generator(&self, g: usize, d: usize) -> Result<ConeElement, CobarError> {
        let b = self.basis(g, d)?;
        if b.len() != 1 {
            return Err(CobarError::NotOneDimensional { g, d, dim: b.len() });
        }
        Ok(b[0].clone())
    }

    pub fn representative(&self, e: &ConeElement) -> Result<ConeChain, CobarError> {
        let h = self.grading(e.g)?;
        let mut all = Vec::new();
        for k in e.coords.iter_ones() {
            all.extend_from_slice(h.representative(e.s, k));
        }
        let all = normalize(all);
        let nx = self.split(e.g, e.s) as u32;
        let x = all.iter().copied().filter(|&r| r < nx).collect();
        let y = all.iter().copied().filter(|&r| r >= nx).map(|r| r - nx).collect();
        Ok(ConeChain { g: e.g, s: e.s, x, y })
    }

    /// The class of a cone cocycle.
    pub fn class_of(&self, c: &ConeChain) -> Result<ConeElement, CobarError> {
        let h = self.grading(c.g)?;
        let nx = self.split(c.g, c.s) as u32;
        let mut all = c.x.clone();
        all.extend(c.y.iter().map(|&r| r + nx));
        let coords = h.coordinates(c.s, &all).map_err(|_| CobarError::NotACycle { g: c.g, s: c.s })?;
        Ok(ConeElement { g: c.g, s: c.s, coords })
    }

    /// The right action of a Cotor element on cone homology.
    pub fn module_action(&self, r: &CotorElement, m: &ConeElement) -> Result<ConeElement, CobarError> {
        let rc = self.base.representative(r)?;
        let mc = self.representative(m)?;
        let x = self.base.concat(&Cochain { g: mc.g, s: mc.s, words: mc.x.clone() }, &rc)?;
        let y = if mc.g > 0 {
            self.base.concat(&Cochain { g: mc.g - 1, s: mc.s, words: mc.y.clone() }, &rc)?.words
        } else {
            Vec::new()
        };
        self.class_of(&ConeChain { g: x.g, s: x.s, x: x.words, y })
    }

    /// Acts by a sequence of Cotor elements, left to right.
    pub fn module_action_all(&self, rs: &[&CotorElement], m: &ConeElement) -> Result<ConeElement, CobarError> {
        let mut acc = m.clone();
        for r in rs {
            acc = self.module_action(r, &acc)?;
        }
        Ok(acc)
    }

    /// The map `q`: `x ↦ (x, 0)` from Cotor into cone homology.
    pub fn include(&self, e: &CotorElement) -> Result<ConeElement, CobarError> {
        let c = self.base.representative(e)?;
        self.class_of(&ConeChain { g: c.g, s: c.s, x: c.words, y: Vec::new() })
    }

    /// The boundary `∂`: `(x, y) ↦ y` from cone homology at `(g, d)` to
    /// Cotor at `(g−1, d−1)`.
    pub fn boundary(&self, e: &ConeElement) -> Result<CotorElement, CobarError> {
        let c = self.representative(e)?;
        if e.g == 0 {
            return Ok(CotorElement { g: 0, s: e.s, coords: BitVec::zeros(0) });
        }
        self.base.class_of(&Cochain { g: e.g - 1, s: e.s, words: c.y })
    }

    pub fn format_chain(&self, c: &ConeChain) -> String {
        let x = self.base.format_cochain(&Cochain { g: c.g, s: c.s, words: c.x.clone() });
        let y = if c.g == 0 {
            "0".into()
        } else {
            self.base.format_cochain(&Cochain { g: c.g - 1, s: c.s, words: c.y.clone() })
        };
        format!("({x}, {y})")
    }
}
