use cobar::homology::GradedHomology;
use f2core::sparse::{normalize, Outcome};

use crate::IvanovskyError;

/// What the filtered reduction says about one basis element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fate {
    /// Survives to `E^∞`.
    Permanent,
    /// Its differential has leading term at this position of degree `s + 1`,
    /// after `length` filtration steps.
    Kills { target: usize, length: usize },
    /// The leading term of the differential of this position of degree `s − 1`.
    KilledBy { source: usize, length: usize },
}

impl Fate {
    /// Whether the element is present on page `E^r`.
    pub fn alive_on(self, r: usize) -> bool {
        match self {
            Fate::Permanent => true,
            Fate::Kills { length, .. } | Fate::KilledBy { length, .. } => length >= r,
        }
    }

    fn length(self) -> Option<usize> {
        match self {
            Fate::Permanent => None,
            Fate::Kills { length, .. } | Fate::KilledBy { length, .. } => Some(length),
        }
    }
}

/// One grading of a filtered cochain complex whose filtration is spanned by
/// basis elements, reduced along a filtration-sorted order.
///
/// Positions in degree `s` list the original basis indices sorted by
/// `(filtration, index)`; all fates and representatives use positions.
#[derive(Debug)]
pub struct FilteredGrading {
    order: Vec<Vec<u32>>,
    filtration: Vec<Vec<i64>>,
    fates: Vec<Vec<Fate>>,
    homology: GradedHomology,
}

impl FilteredGrading {
    /// `filts[s][j]` is the filtration of basis element `j` of `C^s`, and
    /// `column(s, j)` its differential in original indices. The differential
    /// must not raise filtration.
    pub fn build(
        g: usize,
        filts: Vec<Vec<i64>>,
        mut column: impl FnMut(usize, usize) -> Vec<u32>,
    ) -> Result<Self, IvanovskyError> {
        let top = filts.len();
        let mut order = Vec::with_capacity(top);
        let mut position = Vec::with_capacity(top);
        let mut filtration = Vec::with_capacity(top);
        for f in &filts {
            let mut o: Vec<u32> = (0..f.len() as u32).collect();
            o.sort_by_key(|&j| (f[j as usize], j));
            let mut pos = vec![0u32; f.len()];
            for (p, &j) in o.iter().enumerate() {
                pos[j as usize] = p as u32;
            }
            filtration.push(o.iter().map(|&j| f[j as usize]).collect::<Vec<_>>());
            order.push(o);
            position.push(pos);
        }
        let mut bad = None;
        let homology = GradedHomology::build(filts.iter().map(Vec::len).collect(), |s, p| {
            let j = order[s][p] as usize;
            let col: Vec<u32> = column(s, j).into_iter().map(|r| position[s + 1][r as usize]).collect();
            let col = normalize(col);
            if let Some(&top) = col.last() {
                if filtration[s + 1][top as usize] > filtration[s][p] {
                    bad.get_or_insert(s);
                }
            }
            col
        });
        if let Some(s) = bad {
            return Err(IvanovskyError::NotFiltered { g, s });
        }
        let mut fates: Vec<Vec<Fate>> = filtration.iter().map(|f| vec![Fate::Permanent; f.len()]).collect();
        for s in 0..top {
            let red = homology.reducer(s);
            for p in 0..filtration[s].len() {
                if let Outcome::Pivot(t) = red.outcome(p) {
                    let t = t as usize;
                    let length = (filtration[s][p] - filtration[s + 1][t]) as usize;
                    fates[s][p] = Fate::Kills { target: t, length };
                    fates[s + 1][t] = Fate::KilledBy { source: p, length };
                }
            }
        }
        Ok(FilteredGrading { order, filtration, fates, homology })
    }

    pub fn degrees(&self) -> usize {
        self.order.len()
    }

    pub fn len(&self, s: usize) -> usize {
        self.order.get(s).map_or(0, Vec::len)
    }

    pub fn is_empty(&self, s: usize) -> bool {
        self.len(s) == 0
    }

    pub fn filtration(&self, s: usize, p: usize) -> i64 {
        self.filtration[s][p]
    }

    pub fn fate(&self, s: usize, p: usize) -> Fate {
        self.fates[s][p]
    }

    /// Original basis index of position `p`.
    pub fn original(&self, s: usize, p: usize) -> u32 {
        self.order[s][p]
    }

    /// Positions of degree `s` and filtration `f` alive on `E^r`.
    pub fn alive(&self, r: usize, s: usize, f: i64) -> Vec<usize> {
        (0..self.len(s)).filter(|&p| self.filtration[s][p] == f && self.fates[s][p].alive_on(r)).collect()
    }

    /// Filtrations occurring in degree `s`, ascending.
    pub fn filtrations(&self, s: usize) -> Vec<i64> {
        let mut f = self.filtration.get(s).cloned().unwrap_or_default();
        f.dedup();
        f
    }

    /// Smallest `r ≥ 1` with `E^r = E^∞` in degree `s`.
    pub fn stable_page(&self, s: usize) -> usize {
        self.fates.get(s).map_or(1, |f| f.iter().filter_map(|x| x.length()).map(|l| l + 1).max().unwrap_or(1).max(1))
    }

    /// A chain (original indices, sorted) with leading term at position `p`
    /// that represents it on every page where it is alive.
    pub fn representative(&self, s: usize, p: usize) -> Vec<u32> {
        let positions: Vec<u32> = match self.fates[s][p] {
            Fate::KilledBy { source, .. } => self.homology.reducer(s - 1).reduced(source).to_vec(),
            _ => self.homology.reducer(s).expand(&[p as u32]),
        };
        normalize(positions.into_iter().map(|q| self.order[s][q as usize]).collect())
    }

    /// The underlying unfiltered cohomology of the grading.
    pub fn homology(&self) -> &GradedHomology {
        &self.homology
    }
}
