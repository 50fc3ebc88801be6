use std::collections::{BTreeMap, HashMap};

use f2core::sparse::{ColumnReducer, Outcome};

use crate::monomial::{Factor, Generator, WMonomial, WPolynomial};
use crate::ops::{apply_q, is_normal, lower_indices};
use crate::WError;

/// Every factor `Q^I(x)` with `I` normal and bidegree inside the box.
/// Factors grow outwards one lower index at a time, never exceeding the
/// previous outermost index, so only normal sequences are produced.
pub fn normal_atoms(gens: &[Generator], g_max: u32, d_max: u32) -> Vec<Factor> {
    let mut out = Vec::new();
    let mut stack: Vec<Factor> =
        gens.iter().filter(|x| x.g > 0 && x.g <= g_max && x.d <= d_max).map(Factor::generator).collect();
    while let Some(f) = stack.pop() {
        let (g, d) = (f.g(), f.d());
        let cap = lower_indices(&f.seq, &f.gen).first().map_or(u32::MAX, |&t| t as u32);
        if 2 * g <= g_max {
            let mut t = 1;
            while t <= cap && 2 * d + t <= d_max {
                let mut seq = vec![t + d];
                seq.extend_from_slice(&f.seq);
                stack.push(Factor { gen: f.gen.clone(), seq });
                t += 1;
            }
        }
        out.push(f);
    }
    out.sort();
    out
}

fn multisets(atoms: &[Factor], start: usize, g: u32, d: u32, cur: &mut Vec<Factor>, out: &mut Vec<WMonomial>) {
    if g == 0 {
        if d == 0 {
            out.push(WMonomial::from_factors(cur.clone()));
        }
        return;
    }
    for i in start..atoms.len() {
        let a = &atoms[i];
        if a.g() <= g && a.d() <= d {
            cur.push(a.clone());
            multisets(atoms, i, g - a.g(), d - a.d(), cur, out);
            cur.pop();
        }
    }
}

/// The monomial basis of the free `W∞`-algebra on `gens` in bidegree
/// `(g, d)`, in canonical order. Every generator must have positive grading.
pub fn free_basis(gens: &[Generator], g: u32, d: u32) -> Vec<WMonomial> {
    assert!(gens.iter().all(|x| x.g > 0), "generators need positive grading");
    let atoms = normal_atoms(gens, g, d);
    let mut out = Vec::new();
    multisets(&atoms, 0, g, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The same basis by generating every upper sequence with entries at most
/// `d` and keeping the normal ones.
pub fn brute_force_basis(gens: &[Generator], g: u32, d: u32) -> Vec<WMonomial> {
    let mut atoms = Vec::new();
    for x in gens {
        let mut seqs: Vec<Vec<u32>> = vec![Vec::new()];
        let mut r = 0;
        while x.g << r <= g {
            for seq in &seqs {
                if is_normal(seq, x) {
                    let f = Factor::new(x, seq);
                    if f.d() <= d {
                        atoms.push(f);
                    }
                }
            }
            seqs = seqs
                .iter()
                .flat_map(|s| {
                    (0..=d).map(move |t| {
                        let mut n = vec![t];
                        n.extend_from_slice(s);
                        n
                    })
                })
                .collect();
            r += 1;
        }
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; atoms.len()];
    loop {
        let (mut gg, mut dd) = (0, 0);
        for (a, &e) in atoms.iter().zip(&exps) {
            gg += e * a.g();
            dd += e * a.d();
        }
        if (gg, dd) == (g, d) {
            let factors = atoms.iter().zip(&exps).flat_map(|(a, &e)| std::iter::repeat_n(a.clone(), e as usize));
            out.push(WMonomial::from_factors(factors.collect()));
        }
        let mut k = 0;
        loop {
            if k == atoms.len() {
                out.sort();
                return out;
            }
            exps[k] += 1;
            if exps[k] * atoms[k].g() <= g && exps[k] * atoms[k].d() <= d {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

/// Dimensions of the free algebra, the saturated ideal and the quotient in
/// every bidegree of a box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientTable {
    pub g_max: u32,
    pub d_max: u32,
    entries: BTreeMap<(u32, u32), (usize, usize)>,
}

impl QuotientTable {
    pub fn free_dim(&self, g: u32, d: u32) -> usize {
        self.entries.get(&(g, d)).map_or(0, |e| e.0)
    }

    pub fn ideal_dim(&self, g: u32, d: u32) -> usize {
        self.entries.get(&(g, d)).map_or(0, |e| e.1)
    }

    pub fn dim(&self, g: u32, d: u32) -> usize {
        self.free_dim(g, d) - self.ideal_dim(g, d)
    }
}

struct Cell {
    basis: Vec<WMonomial>,
    index: HashMap<WMonomial, u32>,
    span: ColumnReducer,
}

/// Quotient of the free `W∞`-algebra on `gens` by the smallest subspace
/// containing `relations` that is closed under multiplication and
/// Dyer–Lashof operations, computed in the box `g ≤ g_max`, `d ≤ d_max`.
/// Products and operations landing outside the box are discarded.
pub fn ideal_quotient_dims(
    gens: &[Generator],
    relations: &[WPolynomial],
    g_max: u32,
    d_max: u32,
) -> Result<QuotientTable, WError> {
    let mut cells: BTreeMap<(u32, u32), Cell> = BTreeMap::new();
    for g in 1..=g_max {
        for d in 0..=d_max {
            let basis = free_basis(gens, g, d);
            let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i as u32)).collect();
            let span = ColumnReducer::new(basis.len(), false);
            cells.insert((g, d), Cell { basis, index, span });
        }
    }
    let mut work: Vec<((u32, u32), WPolynomial)> = Vec::new();
    let add = |p: WPolynomial, cells: &mut BTreeMap<(u32, u32), Cell>, work: &mut Vec<_>| {
        if p.is_zero() {
            return Ok(());
        }
        let bd = p.bidegree().ok_or(WError::Inhomogeneous)?;
        let Some(cell) = cells.get_mut(&bd) else { return Ok(()) };
        let mut col: Vec<u32> = p.terms().map(|m| cell.index[m]).collect();
        col.sort_unstable();
        if let Outcome::Pivot(_) = cell.span.push(col) {
            work.push((bd, p));
        }
        Ok(())
    };
    for r in relations {
        add(r.clone(), &mut cells, &mut work)?;
    }
    while let Some(((gp, dp), p)) = work.pop() {
        let mut new = Vec::new();
        for g in gp..=g_max {
            for d in dp..=d_max {
                if (g, d) == (gp, dp) {
                    continue;
                }
                if let Some(cell) = cells.get(&(g - gp, d - dp)) {
                    for m in &cell.basis {
                        new.push(WPolynomial::from_monomial(m.clone()).mul(&p));
                    }
                }
            }
        }
        if 2 * gp <= g_max {
            for s in dp..=d_max.saturating_sub(dp) {
                new.push(apply_q(s, &p));
            }
        }
        for q in new {
            add(q, &mut cells, &mut work)?;
        }
    }
    let entries = cells.into_iter().map(|(k, c)| (k, (c.basis.len(), c.span.rank()))).collect();
    Ok(QuotientTable { g_max, d_max, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma() -> Generator {
        Generator::new("s", 1, 0)
    }

    fn names(ms: &[WMonomial]) -> Vec<String> {
        ms.iter().map(WMonomial::to_string).collect()
    }

    #[test]
    fn small_bases() {
        let s = [sigma()];
        assert_eq!(names(&free_basis(&s, 4, 3)), ["Q[1](s)*Q[2](s)", "s^2*Q[3](s)", "Q[2,1](s)"]);
        assert_eq!(names(&free_basis(&s, 1, 0)), ["s"]);
        for d in 1..5 {
            assert!(free_basis(&s, 1, d).is_empty());
        }
        assert_eq!(names(&free_basis(&s, 2, 2)), ["Q[2](s)"]);
    }

    #[test]
    fn empty_relations() {
        let t = ideal_quotient_dims(&[sigma()], &[], 4, 3).unwrap();
        assert_eq!(t.dim(2, 2), 1);
        assert_eq!(t.dim(4, 3), 3);
        assert_eq!(t.ideal_dim(4, 3), 0);
    }
}
