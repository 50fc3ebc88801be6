use std::sync::OnceLock;

use f2core::sparse::normalize;
use f2core::BitVec;
use gradedhopf::HopfAlgebraTable;
use serde::Serialize;

use crate::homology::GradedHomology;
use crate::words::WordIndexer;
use crate::CobarError;

/// Default bound on the number of words in one grading that may be
/// materialized.
pub const DEFAULT_WORD_BUDGET: usize = 6_000_000;

/// Bidegree window `g ≤ g_max`, `s ≤ s_max` of a cobar complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    pub g_max: usize,
    pub s_max: usize,
}

impl Default for Window {
    fn default() -> Self {
        Window { g_max: 26, s_max: 26 }
    }
}

/// The reduced cobar complex of a connected graded coalgebra.
///
/// Gradings are materialized on first use and cached; each materialized
/// grading holds every cobar degree `s` at once.
#[derive(Debug)]
pub struct CobarComplex {
    coalgebra: HopfAlgebraTable,
    window: Window,
    words: WordIndexer,
    reduced_coproducts: Vec<Vec<(usize, usize)>>,
    gradings: Vec<OnceLock<GradedHomology>>,
    word_budget: usize,
    full_check_below: usize,
}

/// A basis element of Cotor at `(g, d)`, `s = g − d`, with a cocycle
/// representative given as sorted word ranks in `C^s(g)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CotorClass {
    pub g: usize,
    pub d: usize,
    pub s: usize,
    pub id: usize,
    pub representative: Vec<u32>,
}

/// An element of Cotor at `(g, d)` in coordinates of the basis returned by
/// [`CobarComplex::cotor_basis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CotorElement {
    pub g: usize,
    pub s: usize,
    pub coords: BitVec,
}

impl CotorElement {
    pub fn d(&self) -> usize {
        self.g - self.s
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }
}

/// A cochain in `C^s(g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub g: usize,
    pub s: usize,
    pub words: Vec<u32>,
}

impl Cochain {
    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }
}

impl CobarComplex {
    /// Builds the complex over `h` for the given window. Gradings above the
    /// truncation grading of `h` cannot be requested.
    pub fn new(h: HopfAlgebraTable, window: Window) -> Result<Self, CobarError> {
        if let Some(t) = h.truncation() {
            if window.g_max > t {
                return Err(CobarError::BeyondTruncation { g_max: window.g_max, truncation: t });
            }
        }
        let words = WordIndexer::new(&h, window.g_max);
        let reduced_coproducts =
            (1..h.len()).map(|i| h.reduced_coproduct(i).iter().map(|&(a, b)| (a - 1, b - 1)).collect()).collect();
        let c = CobarComplex {
            coalgebra: h,
            window,
            words,
            reduced_coproducts,
            gradings: (0..=window.g_max).map(|_| OnceLock::new()).collect(),
            word_budget: DEFAULT_WORD_BUDGET,
            full_check_below: 250_000,
        };
        c.check_letter_coassociativity()?;
        Ok(c)
    }

    /// Overrides the per-grading word budget.
    pub fn with_word_budget(mut self, budget: usize) -> Self {
        self.word_budget = budget;
        self
    }

    pub fn coalgebra(&self) -> &HopfAlgebraTable {
        &self.coalgebra
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn words(&self) -> &WordIndexer {
        &self.words
    }

    /// `d² = 0` on single letters, which forces `d² = 0` on every word
    /// because the cobar differential is a derivation for concatenation.
    fn check_letter_coassociativity(&self) -> Result<(), CobarError> {
        for l in 0..self.words.letters() {
            let mut terms = Vec::new();
            for &(a, b) in &self.reduced_coproducts[l] {
                terms.extend(self.reduced_coproducts[a].iter().map(|&(x, y)| (x, y, b)));
                terms.extend(self.reduced_coproducts[b].iter().map(|&(x, y)| (a, x, y)));
            }
            if !normalize_triples(terms).is_empty() {
                return Err(CobarError::Invariant(format!(
                    "d² ≠ 0 on [{}]",
                    self.words.letter_label(l)
                )));
            }
        }
        Ok(())
    }

    /// `d` applied to the word of rank `r` in `C^s(g)`.
    pub fn differential_of_word(&self, g: usize, s: usize, r: u32) -> Vec<u32> {
        let w = self.words.unrank(r, g, s);
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(s + 1);
        for i in 0..s {
            for &(a, b) in &self.reduced_coproducts[w[i]] {
                buf.clear();
                buf.extend_from_slice(&w[..i]);
                buf.push(a);
                buf.push(b);
                buf.extend_from_slice(&w[i + 1..]);
                out.push(self.words.rank(&buf));
            }
        }
        normalize(out)
    }

    /// `d` applied to a cochain.
    pub fn differential(&self, c: &Cochain) -> Cochain {
        let mut out = Vec::new();
        for &r in &c.words {
            out.extend(self.differential_of_word(c.g, c.s, r));
        }
        Cochain { g: c.g, s: c.s + 1, words: normalize(out) }
    }

    fn check_g(&self, g: usize) -> Result<(), CobarError> {
        if g > self.window.g_max {
            return Err(CobarError::OutOfWindow { g, s: 0, window: self.window });
        }
        let total = self.words.total(g);
        if total > self.word_budget {
            return Err(CobarError::BudgetExceeded { g, words: total, budget: self.word_budget });
        }
        Ok(())
    }

    /// The reduced differentials and cohomology of grading `g`.
    pub fn grading(&self, g: usize) -> Result<&GradedHomology, CobarError> {
        self.check_g(g)?;
        if let Some(h) = self.gradings[g].get() {
            return Ok(h);
        }
        let dims: Vec<usize> = (0..=g).map(|s| self.words.count(g, s)).collect();
        let h = GradedHomology::build(dims, |s, j| self.differential_of_word(g, s, j as u32));
        if self.words.total(g) <= self.full_check_below {
            self.verify_d_squared(g)?;
        }
        Ok(self.gradings[g].get_or_init(|| h))
    }

    /// Checks `d∘d = 0` on every word of grading `g`.
    pub fn verify_d_squared(&self, g: usize) -> Result<(), CobarError> {
        for s in 0..g.saturating_sub(1) {
            for r in 0..self.words.count(g, s) as u32 {
                let dd = self.differential(&self.differential(&Cochain { g, s, words: vec![r] }));
                if !dd.is_zero() {
                    return Err(CobarError::Invariant(format!("d² ≠ 0 at word {r} of ({g},{s})")));
                }
            }
        }
        Ok(())
    }

    fn s_of(&self, g: usize, d: usize) -> Result<usize, CobarError> {
        if d > g {
            return Err(CobarError::OutOfWindow { g, s: 0, window: self.window });
        }
        let s = g - d;
        if s > self.window.s_max || g > self.window.g_max {
            return Err(CobarError::OutOfWindow { g, s, window: self.window });
        }
        Ok(s)
    }

    pub fn cotor_dim(&self, g: usize, d: usize) -> Result<usize, CobarError> {
        let s = self.s_of(g, d)?;
        Ok(self.grading(g)?.dim(s))
    }

    pub fn cotor_basis(&self, g: usize, d: usize) -> Result<Vec<CotorClass>, CobarError> {
        let s = self.s_of(g, d)?;
        let h = self.grading(g)?;
        Ok((0..h.dim(s))
            .map(|id| CotorClass { g, d, s, id, representative: h.representative(s, id).to_vec() })
            .collect())
    }

    /// The class of a cocycle in Cotor coordinates.
    pub fn class_of(&self, c: &Cochain) -> Result<CotorElement, CobarError> {
        let h = self.grading(c.g)?;
        let coords = h.coordinates(c.s, &c.words).map_err(|_| CobarError::NotACycle { g: c.g, s: c.s })?;
        Ok(CotorElement { g: c.g, s: c.s, coords })
    }

    /// A cocycle representing `e`.
    pub fn representative(&self, e: &CotorElement) -> Result<Cochain, CobarError> {
        let h = self.grading(e.g)?;
        let mut words = Vec::new();
        for k in e.coords.iter_ones() {
            words.extend_from_slice(h.representative(e.s, k));
        }
        Ok(Cochain { g: e.g, s: e.s, words: normalize(words) })
    }

    pub fn element(&self, class: &CotorClass) -> CotorElement {
        let dim = self.grading(class.g).map(|h| h.dim(class.s)).unwrap_or(0);
        CotorElement { g: class.g, s: class.s, coords: BitVec::unit(dim, class.id) }
    }

    /// The unique nonzero class at `(g, d)`, when Cotor there is one-dimensional.
    pub fn generator(&self, g: usize, d: usize) -> Result<CotorElement, CobarError> {
        let b = self.cotor_basis(g, d)?;
        if b.len() != 1 {
            return Err(CobarError::NotOneDimensional { g, d, dim: b.len() });
        }
        Ok(self.element(&b[0]))
    }

    /// Concatenation product of cochains.
    pub fn concat(&self, x: &Cochain, y: &Cochain) -> Result<Cochain, CobarError> {
        let g = x.g + y.g;
        if g > self.window.g_max {
            return Err(CobarError::OutOfWindow { g, s: x.s + y.s, window: self.window });
        }
        let mut out = Vec::with_capacity(x.words.len() * y.words.len());
        let mut buf = Vec::new();
        let wy: Vec<Vec<usize>> = y.words.iter().map(|&r| self.words.unrank(r, y.g, y.s)).collect();
        for &u in &x.words {
            let wu = self.words.unrank(u, x.g, x.s);
            for v in &wy {
                buf.clear();
                buf.extend_from_slice(&wu);
                buf.extend_from_slice(v);
                out.push(self.words.rank(&buf));
            }
        }
        Ok(Cochain { g, s: x.s + y.s, words: normalize(out) })
    }

    /// The product of two Cotor elements, computed on representatives.
    pub fn cotor_product(&self, x: &CotorElement, y: &CotorElement) -> Result<CotorElement, CobarError> {
        let p = self.concat(&self.representative(x)?, &self.representative(y)?)?;
        self.class_of(&p)
    }

    /// Product of a list of elements, left to right.
    pub fn cotor_product_all(&self, xs: &[&CotorElement]) -> Result<CotorElement, CobarError> {
        let mut acc = self.unit();
        for x in xs {
            acc = self.cotor_product(&acc, x)?;
        }
        Ok(acc)
    }

    /// The class of the empty word at `(0, 0)`.
    pub fn unit(&self) -> CotorElement {
        CotorElement { g: 0, s: 0, coords: BitVec::unit(1, 0) }
    }

    /// A cochain given by word strings such as `"[xi1|xi1^2]"`.
    pub fn parse_cochain(&self, words: &[&str]) -> Result<Cochain, CobarError> {
        let mut g = None;
        let mut s = None;
        let mut out = Vec::new();
        for w in words {
            let letters = self.words.parse(w).ok_or_else(|| CobarError::Parse(w.to_string()))?;
            let wg: usize = letters.iter().map(|&l| self.words.letter_grading(l)).sum();
            if g.is_some_and(|x| x != wg) || s.is_some_and(|x| x != letters.len()) {
                return Err(CobarError::Parse(format!("mixed bidegrees at {w}")));
            }
            g = Some(wg);
            s = Some(letters.len());
            out.push(self.words.rank(&letters));
        }
        let (g, s) = (g.unwrap_or(0), s.unwrap_or(0));
        Ok(Cochain { g, s, words: normalize(out) })
    }

    pub fn format_cochain(&self, c: &Cochain) -> String {
        if c.words.is_empty() {
            return "0".into();
        }
        c.words.iter().map(|&r| self.words.format(&self.words.unrank(r, c.g, c.s))).collect::<Vec<_>>().join(" + ")
    }
}

fn normalize_triples(mut v: Vec<(usize, usize, usize)>) -> Vec<(usize, usize, usize)> {
    v.sort_unstable();
    let mut out: Vec<(usize, usize, usize)> = Vec::new();
    for t in v {
        if out.last() == Some(&t) {
            out.pop();
        } else {
            out.push(t);
        }
    }
    out
}
