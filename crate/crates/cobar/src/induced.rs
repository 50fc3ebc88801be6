use std::collections::BTreeMap;

use f2core::sparse::normalize;
use f2core::{BitVec, F2Matrix};
use gradedhopf::{check_hopf_map, CoalgebraMap};

use crate::{Cochain, CobarComplex, CobarError, CotorElement, Window};

/// Matrices of the map on Cotor induced by a coalgebra map, one per
/// bidegree `(g, d)`; column `k` is the image of the `k`-th source class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap {
    pub matrices: BTreeMap<(usize, usize), F2Matrix>,
}

/// Applies `[a1|…|as] ↦ [f a1|…|f as]` to a source cochain.
pub fn map_cochain(f: &CoalgebraMap, source: &CobarComplex, target: &CobarComplex, c: &Cochain) -> Cochain {
    let (sw, tw) = (source.words(), target.words());
    let mut out = Vec::new();
    for &r in &c.words {
        let w = sw.unrank(r, c.g, c.s);
        let mut partial: Vec<Vec<usize>> = vec![Vec::new()];
        for &l in &w {
            let img: Vec<usize> = f.image(l + 1).iter().map(|&t| t - 1).collect();
            let mut next = Vec::with_capacity(partial.len() * img.len());
            for p in &partial {
                for &t in &img {
                    let mut q = p.clone();
                    q.push(t);
                    next.push(q);
                }
            }
            partial = next;
        }
        out.extend(partial.iter().map(|p| tw.rank(p)));
    }
    Cochain { g: c.g, s: c.s, words: normalize(out) }
}

/// Pushes a Cotor element along `f`.
pub fn map_element(
    f: &CoalgebraMap,
    source: &CobarComplex,
    target: &CobarComplex,
    e: &CotorElement,
) -> Result<CotorElement, CobarError> {
    let c = map_cochain(f, source, target, &source.representative(e)?);
    target.class_of(&c)
}

/// The induced map on Cotor at every bidegree of `window`.
pub fn induced_map(
    f: &CoalgebraMap,
    source: &CobarComplex,
    target: &CobarComplex,
    window: Window,
) -> Result<InducedMap, CobarError> {
    let report = check_hopf_map(f);
    if !report.comultiplicativity.is_ok() || !report.unit.is_ok() || !report.counit.is_ok() {
        return Err(CobarError::Invariant(format!("not a coalgebra map: {report:?}")));
    }
    let mut matrices = BTreeMap::new();
    for g in 0..=window.g_max {
        for s in 0..=g.min(window.s_max) {
            let d = g - s;
            let src = source.cotor_basis(g, d)?;
            let tdim = target.cotor_dim(g, d)?;
            let cols: Vec<BitVec> = src
                .iter()
                .map(|c| map_element(f, source, target, &source.element(c)).map(|e| e.coords))
                .collect::<Result<_, _>>()?;
            matrices.insert((g, d), F2Matrix::from_columns(tdim, &cols));
        }
    }
    Ok(InducedMap { matrices })
}
