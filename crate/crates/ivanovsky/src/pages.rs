use std::collections::BTreeMap;
use std::sync::OnceLock;

use cobar::{Cochain, CobarComplex, ConeComplex, Window};
use f2core::F2Matrix;
use gradedhopf::HopfAlgebraTable;
use serde::Serialize;

use crate::{augmentation_depths, FilteredGrading, IvanovskyError};

/// One spot `(g, d, f)` of a page: its dimension and representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PageEntry {
    pub dim: usize,
    pub representatives: Vec<String>,
}

/// The page `E^r` in a window, with its differentials
/// `d^r: E^r_{g,d,f} → E^r_{g,d−1,f−r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SSPage {
    pub r: usize,
    pub entries: BTreeMap<(usize, usize, i64), PageEntry>,
    /// Nonzero differentials keyed by source spot; columns index the source
    /// entry's basis, rows the target's.
    pub differentials: BTreeMap<(usize, usize, i64), F2Matrix>,
}

impl SSPage {
    pub fn dim(&self, g: usize, d: usize, f: i64) -> usize {
        self.entries.get(&(g, d, f)).map_or(0, |e| e.dim)
    }

    /// Total dimension over all filtrations at `(g, d)`.
    pub fn total_dim(&self, g: usize, d: usize) -> usize {
        self.entries.range((g, d, i64::MIN)..=(g, d, i64::MAX)).map(|(_, e)| e.dim).sum()
    }

    /// `d^r` out of `(g, d, f)`, zero if none was recorded.
    pub fn differential(&self, g: usize, d: usize, f: i64) -> F2Matrix {
        self.differentials.get(&(g, d, f)).cloned().unwrap_or_else(|| {
            let target = if d == 0 { 0 } else { self.dim(g, d - 1, f - self.r as i64) };
            F2Matrix::zeros(target, self.dim(g, d, f))
        })
    }
}

/// A per-grading filtered complex: anything the page machinery can read.
trait Filtered {
    fn filtered(&self, g: usize) -> Result<&FilteredGrading, IvanovskyError>;
    fn format(&self, g: usize, s: usize, chain: &[u32]) -> String;
}

fn page_of(src: &impl Filtered, r: usize, g_max: usize, d_max: usize) -> Result<SSPage, IvanovskyError> {
    if r == 0 {
        return Err(IvanovskyError::PageZero);
    }
    let mut entries = BTreeMap::new();
    let mut differentials = BTreeMap::new();
    for g in 0..=g_max {
        let fg = src.filtered(g)?;
        for s in 0..fg.degrees() {
            let d = g - s;
            if d > d_max {
                continue;
            }
            for f in fg.filtrations(s) {
                let alive = fg.alive(r, s, f);
                if alive.is_empty() {
                    continue;
                }
                let representatives =
                    alive.iter().map(|&p| src.format(g, s, &fg.representative(s, p))).collect();
                entries.insert((g, d, f), PageEntry { dim: alive.len(), representatives });
                if d == 0 {
                    continue;
                }
                let targets = fg.alive(r, s + 1, f - r as i64);
                let mut m = F2Matrix::zeros(targets.len(), alive.len());
                for (c, &p) in alive.iter().enumerate() {
                    if let crate::Fate::Kills { target, length } = fg.fate(s, p) {
                        if length == r {
                            let row = targets.binary_search(&target).expect("target alive on the same page");
                            m.set(row, c, true);
                        }
                    }
                }
                if !m.is_zero() {
                    differentials.insert((g, d, f), m);
                }
            }
        }
    }
    Ok(SSPage { r, entries, differentials })
}

/// The cobar complex with the augmentation filtration on words.
#[derive(Debug)]
pub struct FilteredCobar {
    base: CobarComplex,
    letter_depth: Vec<usize>,
    gradings: Vec<OnceLock<FilteredGrading>>,
}

impl FilteredCobar {
    pub fn new(h: HopfAlgebraTable, window: Window) -> Result<Self, IvanovskyError> {
        let depth = augmentation_depths(&h)?;
        let base = CobarComplex::new(h, window)?;
        let letter_depth = (0..base.words().letters()).map(|l| depth[l + 1]).collect();
        let gradings = (0..=window.g_max).map(|_| OnceLock::new()).collect();
        Ok(FilteredCobar { base, letter_depth, gradings })
    }

    pub fn base(&self) -> &CobarComplex {
        &self.base
    }

    /// `−Σ depth` over the letters of a word.
    pub fn word_filtration(&self, word: &[usize]) -> i64 {
        -(word.iter().map(|&l| self.letter_depth[l] as i64).sum::<i64>())
    }

    /// Filtration of the word with rank `r` in `C^s(g)`.
    pub fn filtration_of(&self, g: usize, s: usize, r: u32) -> i64 {
        self.word_filtration(&self.base.words().unrank(r, g, s))
    }

    /// Filtration of a cochain: the largest filtration of its words.
    pub fn cochain_filtration(&self, c: &Cochain) -> Option<i64> {
        c.words.iter().map(|&r| self.filtration_of(c.g, c.s, r)).max()
    }

    fn filts(&self, g: usize) -> Vec<Vec<i64>> {
        (0..=g).map(|s| (0..self.base.words().count(g, s) as u32).map(|r| self.filtration_of(g, s, r)).collect()).collect()
    }

    pub fn page(&self, r: usize, g_max: usize, d_max: usize) -> Result<SSPage, IvanovskyError> {
        page_of(self, r, g_max, d_max)
    }

    pub fn grading(&self, g: usize) -> Result<&FilteredGrading, IvanovskyError> {
        self.filtered(g)
    }
}

impl Filtered for FilteredCobar {
    fn filtered(&self, g: usize) -> Result<&FilteredGrading, IvanovskyError> {
        self.base.grading(g)?;
        if let Some(fg) = self.gradings[g].get() {
            return Ok(fg);
        }
        let fg = FilteredGrading::build(g, self.filts(g), |s, j| self.base.differential_of_word(g, s, j as u32))?;
        Ok(self.gradings[g].get_or_init(|| fg))
    }

    fn format(&self, g: usize, s: usize, chain: &[u32]) -> String {
        self.base.format_cochain(&Cochain { g, s, words: chain.to_vec() })
    }

}

/// The cone of a filtered cycle `z`: the `y` summand is shifted by the
/// filtration of `z`, so that multiplication by `z` preserves filtration.
#[derive(Debug)]
pub struct FilteredCone<'a> {
    fc: &'a FilteredCobar,
    cone: &'a ConeComplex<'a>,
    shift: i64,
    gradings: Vec<OnceLock<FilteredGrading>>,
}

impl<'a> FilteredCone<'a> {
    pub fn new(fc: &'a FilteredCobar, cone: &'a ConeComplex<'a>) -> Result<Self, IvanovskyError> {
        let shift = fc.cochain_filtration(cone.cycle()).unwrap_or(0);
        let gradings = (0..=fc.base.window().g_max).map(|_| OnceLock::new()).collect();
        Ok(FilteredCone { fc, cone, shift, gradings })
    }

    pub fn page(&self, r: usize, g_max: usize, d_max: usize) -> Result<SSPage, IvanovskyError> {
        page_of(self, r, g_max, d_max)
    }
}

impl Filtered for FilteredCone<'_> {
    fn filtered(&self, g: usize) -> Result<&FilteredGrading, IvanovskyError> {
        self.cone.grading(g)?;
        if let Some(fg) = self.gradings[g].get() {
            return Ok(fg);
        }
        let dims = self.cone.dims(g);
        let filts = (0..dims.len())
            .map(|s| {
                let nx = self.cone.split(g, s);
                (0..dims[s])
                    .map(|j| {
                        if j < nx {
                            self.fc.filtration_of(g, s, j as u32)
                        } else {
                            self.fc.filtration_of(g - 1, s, (j - nx) as u32) + self.shift
                        }
                    })
                    .collect()
            })
            .collect();
        let fg = FilteredGrading::build(g, filts, |s, j| self.cone.column(g, s, j))?;
        Ok(self.gradings[g].get_or_init(|| fg))
    }

    fn format(&self, g: usize, s: usize, chain: &[u32]) -> String {
        let nx = self.cone.split(g, s) as u32;
        let x = chain.iter().copied().filter(|&r| r < nx).collect();
        let y = chain.iter().copied().filter(|&r| r >= nx).map(|r| r - nx).collect();
        self.cone.format_chain(&cobar::ConeChain { g, s, x, y })
    }

}

/// Per `(g, d)`: the `E^∞` dimensions by filtration, the first stable page
/// and the Cotor dimension computed without the filtration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EInftyRow {
    pub g: usize,
    pub d: usize,
    pub by_filtration: Vec<(i64, usize)>,
    pub stable_page: usize,
    pub cotor_dim: usize,
}

impl EInftyRow {
    pub fn total(&self) -> usize {
        self.by_filtration.iter().map(|x| x.1).sum()
    }
}

/// The `E^∞` chart of `fc` in the window `g ≤ g_max`, `d ≤ d_max`.
pub fn einfty_report(fc: &FilteredCobar, g_max: usize, d_max: usize) -> Result<Vec<EInftyRow>, IvanovskyError> {
    let mut rows = Vec::new();
    for g in 0..=g_max {
        let fg = fc.filtered(g)?;
        for d in 0..=g.min(d_max) {
            let s = g - d;
            let mut by_filtration = Vec::new();
            for f in fg.filtrations(s) {
                let n = fg.alive(usize::MAX, s, f).len();
                if n > 0 {
                    by_filtration.push((f, n));
                }
            }
            rows.push(EInftyRow { g, d, by_filtration, stable_page: fg.stable_page(s), cotor_dim: fc.base.cotor_dim(g, d)? });
        }
    }
    Ok(rows)
}

/// Tab-separated page dump with header `r\tg\td\tf\tdim\trepresentative`,
/// one row per basis element.
pub fn page_tsv(page: &SSPage) -> String {
    let mut s = String::from("r\tg\td\tf\tdim\trepresentative\n");
    for ((g, d, f), e) in &page.entries {
        for rep in &e.representatives {
            s.push_str(&format!("{}\t{g}\t{d}\t{f}\t{}\t{rep}\n", page.r, e.dim));
        }
    }
    s
}

