use std::collections::{BTreeMap, BTreeSet, HashMap};

use f2core::sparse::{normalize, ColumnReducer};
use gradedhopf::{GradedBasis, HopfAlgebraTable};
use serde::Serialize;
use winfty::{bar_class, WPolynomial};

use crate::{Cell, CellKind, CellSpec, StabError};

/// Exponent vector over the generators of a presentation; missing trailing
/// entries are zero.
pub type Exps = Vec<u32>;
/// A pair of exponent vectors, one per tensor factor.
type ExpsPair = (Exps, Exps);
/// A polynomial in the generators: a set of exponent vectors.
pub type DeltaPoly = BTreeSet<Exps>;

/// A polynomial generator of the stability Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaGenerator {
    pub name: String,
    pub grading: usize,
    /// `ψ` of the generator as pairs of monomials.
    pub coproduct: Vec<(Exps, Exps)>,
}

/// What a cell did to the presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum CellEffect {
    /// The cell leaves the stability Hopf algebra unchanged.
    Unchanged,
    /// A generator cell on the line `d = g − 1` adds a primitive generator.
    Generator { added: String },
    /// A relation on the line `d = g − 1` divides by the bar of its class.
    Quotient { relation: String },
    /// A relation on the line `d = g − 2` adjoins a bracket generator.
    Bracket { added: String, coproduct: String },
}

/// A cell whose data lies outside the hypotheses of the rule that was
/// applied, although every term affected by the violation vanished.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub cell: String,
    pub message: String,
}

/// A commutative stability Hopf algebra presented by polynomial generators,
/// their coproducts and relations, known through `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaPresentation {
    pub bound: usize,
    pub generators: Vec<DeltaGenerator>,
    pub relations: Vec<DeltaPoly>,
    pub effects: Vec<(String, CellEffect)>,
    pub flags: Vec<Flag>,
}

fn pad(e: &[u32], n: usize) -> Exps {
    let mut v = e.to_vec();
    v.resize(n.max(v.len()), 0);
    v
}

fn trim(mut e: Exps) -> Exps {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn add_exps(a: &[u32], b: &[u32]) -> Exps {
    let n = a.len().max(b.len());
    (0..n).map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)).collect()
}

fn unit_exps(k: usize) -> Exps {
    let mut e = vec![0; k + 1];
    e[k] = 1;
    e
}

impl DeltaPresentation {
    pub fn new(bound: usize) -> Self {
        DeltaPresentation { bound, generators: Vec::new(), relations: Vec::new(), effects: Vec::new(), flags: Vec::new() }
    }

    fn index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    fn grading_of(&self, e: &[u32]) -> usize {
        e.iter().zip(&self.generators).map(|(&k, g)| k as usize * g.grading).sum()
    }

    /// `x` for `e = 0`, otherwise `x1^a*x2^b…` in generator order.
    pub fn format_monomial(&self, e: &[u32]) -> String {
        let parts: Vec<String> = e
            .iter()
            .zip(&self.generators)
            .filter(|(&k, _)| k > 0)
            .map(|(&k, g)| if k == 1 { g.name.clone() } else { format!("{}^{k}", g.name) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn format_poly(&self, p: &DeltaPoly) -> String {
        if p.is_empty() {
            return "0".into();
        }
        p.iter().map(|e| self.format_monomial(e)).collect::<Vec<_>>().join(" + ")
    }

    /// Terms `1⊗x` first and `x⊗1` last.
    pub fn format_tensor(&self, t: &[(Exps, Exps)]) -> String {
        if t.is_empty() {
            return "0".into();
        }
        let unit = |e: &Exps| e.iter().all(|&k| k == 0);
        let mut t = t.to_vec();
        t.sort_by_key(|(a, b)| if unit(a) { 0 } else if unit(b) { 2 } else { 1 });
        t.iter()
            .map(|(a, b)| format!("{}⊗{}", self.format_monomial(a), self.format_monomial(b)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// The image in the presentation of a barred class: monomials off the
    /// diagonal vanish and each diagonal factor must be a barred generator.
    pub fn from_barred(&self, p: &WPolynomial) -> Result<DeltaPoly, StabError> {
        let mut out = DeltaPoly::new();
        for m in p.terms() {
            if m.d() != m.g() {
                continue;
            }
            let mut e = Exps::new();
            for f in m.factors() {
                let k = self
                    .index(&f.gen.name)
                    .filter(|_| f.seq.is_empty())
                    .ok_or_else(|| StabError::Invariant(format!("diagonal barred class `{f}` is not a generator")))?;
                e = add_exps(&e, &unit_exps(k));
            }
            let e = trim(e);
            if !out.remove(&e) {
                out.insert(e);
            }
        }
        Ok(out)
    }

    /// `ψ([q]) = 1⊗[q] + [q]⊗1 + Σ ā⊗b̄` for the bracket generator of the
    /// decomposition `Σ a⊗b`, which would become generator number
    /// `self.generators.len()`. Pairs outside the hypothesis `d + 1 = g > 0`
    /// are reported as flags and must contribute zero.
    pub fn bracket_coproduct(
        &self,
        cell: &str,
        decomposition: &[(WPolynomial, WPolynomial)],
    ) -> Result<(Vec<ExpsPair>, Vec<Flag>), StabError> {
        let q = unit_exps(self.generators.len());
        let mut terms: BTreeMap<(Exps, Exps), bool> = BTreeMap::new();
        let mut toggle = |a: Exps, b: Exps| {
            let e = terms.entry((a, b)).or_insert(false);
            *e = !*e;
        };
        toggle(Exps::new(), q.clone());
        toggle(q, Exps::new());
        let mut flags = Vec::new();
        for (a, b) in decomposition {
            let mut bad = Vec::new();
            for x in [a, b] {
                match x.bidegree() {
                    Some((g, d)) if g > 0 && d + 1 == g => {}
                    Some((g, d)) => bad.push(format!("{x} at ({g},{d})")),
                    None => bad.push(format!("{x} is not homogeneous")),
                }
            }
            let (abar, bbar) = (self.from_barred(&bar_class(a))?, self.from_barred(&bar_class(b))?);
            for ea in &abar {
                for eb in &bbar {
                    toggle(ea.clone(), eb.clone());
                }
            }
            let contributes = !abar.is_empty() && !bbar.is_empty();
            if !bad.is_empty() {
                let what = format!("pair {a}⊗{b}: {} off the line d + 1 = g", bad.join(", "));
                if contributes {
                    return Err(StabError::Hypothesis { cell: cell.to_string(), msg: what });
                }
                flags.push(Flag { cell: cell.to_string(), message: format!("{what}; its term vanishes") });
            }
        }
        Ok((terms.into_iter().filter(|&(_, on)| on).map(|(k, _)| k).collect(), flags))
    }

    fn push_generator(&mut self, name: &str, grading: usize, coproduct: Vec<(Exps, Exps)>) -> Result<(), StabError> {
        if self.index(name).is_some() {
            return Err(StabError::Invariant(format!("generator `{name}` is already present")));
        }
        self.generators.push(DeltaGenerator { name: name.to_string(), grading, coproduct });
        Ok(())
    }

    /// Applies one cell.
    pub fn attach(&mut self, cell: &Cell) -> Result<CellEffect, StabError> {
        let (g, d) = (cell.g, cell.d);
        let hyp = |msg: String| StabError::Hypothesis { cell: cell.name.clone(), msg };
        let effect = match &cell.kind {
            CellKind::Generator => {
                if d >= g {
                    CellEffect::Unchanged
                } else if d + 1 == g {
                    let name = winfty::Generator::new(&cell.name, g, d).bar().name;
                    let k = self.generators.len();
                    let coproduct = vec![(Exps::new(), unit_exps(k)), (unit_exps(k), Exps::new())];
                    self.push_generator(&name, g as usize, coproduct)?;
                    CellEffect::Generator { added: name }
                } else {
                    return Err(hyp(format!("generator at ({g},{d}) lies below the line d = g − 1")));
                }
            }
            CellKind::Relation { attach, decomposition } => {
                match attach.bidegree() {
                    Some(b) if b == (g, d) => {}
                    Some((ag, ad)) => {
                        return Err(hyp(format!("attaching class has bidegree ({ag},{ad}), not ({g},{d})")))
                    }
                    None => return Err(hyp("attaching class is zero or inhomogeneous".into())),
                }
                if g < 3 || d + 2 < g {
                    return Err(hyp(format!("relation at ({g},{d}) violates d ≥ g − 2 > 0")));
                }
                if d + 2 == g {
                    if decomposition.is_empty() {
                        return Err(StabError::MissingDecomposition { cell: cell.name.clone() });
                    }
                    let bar = bar_class(attach);
                    if !bar.is_zero() {
                        return Err(StabError::NonzeroBar { cell: cell.name.clone(), bar: bar.to_string() });
                    }
                    let mut product = WPolynomial::zero();
                    for (a, b) in decomposition {
                        product.add_assign(&a.mul(b));
                    }
                    if &product != attach {
                        return Err(StabError::DecompositionMismatch {
                            cell: cell.name.clone(),
                            product: product.to_string(),
                            attach: attach.to_string(),
                        });
                    }
                    let (coproduct, flags) = self.bracket_coproduct(&cell.name, decomposition)?;
                    self.push_generator(&cell.name, g as usize, coproduct)?;
                    self.flags.extend(flags);
                    let k = self.generators.len() - 1;
                    CellEffect::Bracket {
                        added: cell.name.clone(),
                        coproduct: self.format_tensor(&self.generators[k].coproduct),
                    }
                } else {
                    if !decomposition.is_empty() {
                        return Err(hyp("a decomposition is only used on the line d = g − 2".into()));
                    }
                    if d >= g {
                        CellEffect::Unchanged
                    } else {
                        let rel = self.from_barred(&bar_class(attach))?;
                        if rel.is_empty() {
                            CellEffect::Unchanged
                        } else {
                            let relation = self.format_poly(&rel);
                            self.relations.push(rel);
                            CellEffect::Quotient { relation }
                        }
                    }
                }
            }
        };
        self.effects.push((cell.name.clone(), effect.clone()));
        Ok(effect)
    }

    /// Every monomial of grading at most the bound, grouped by grading and
    /// sorted within each grading.
    fn monomials(&self) -> Vec<Vec<Exps>> {
        let n = self.generators.len();
        let mut by_grading = vec![Vec::new(); self.bound + 1];
        let mut stack = vec![(0usize, vec![0u32; n], 0usize)];
        while let Some((k, e, g)) = stack.pop() {
            if k == n {
                by_grading[g].push(e);
                continue;
            }
            let step = self.generators[k].grading;
            let mut e2 = e.clone();
            let mut g2 = g;
            loop {
                stack.push((k + 1, e2.clone(), g2));
                g2 += step;
                if step == 0 || g2 > self.bound {
                    break;
                }
                e2[k] += 1;
            }
        }
        for v in &mut by_grading {
            v.sort();
        }
        by_grading
    }

    /// The structure tables through the bound.
    pub fn table(&self) -> Result<HopfAlgebraTable, StabError> {
        let n = self.generators.len();
        let mons = self.monomials();
        let index: HashMap<Exps, (usize, u32)> = mons
            .iter()
            .enumerate()
            .flat_map(|(g, v)| v.iter().enumerate().map(move |(i, e)| (e.clone(), (g, i as u32))))
            .collect();
        let mut reducers = Vec::with_capacity(mons.len());
        for (g, v) in mons.iter().enumerate() {
            let mut r = ColumnReducer::new(v.len(), false);
            for rel in &self.relations {
                let rg = self.grading_of(&pad(rel.iter().next().expect("nonzero relation"), n));
                if rg > g {
                    continue;
                }
                for m in &mons[g - rg] {
                    let col: Vec<u32> = rel.iter().map(|e| index[&add_exps(&pad(e, n), m)].1).collect();
                    r.push(normalize(col));
                }
            }
            reducers.push(r);
        }
        let standard: Vec<Vec<bool>> = reducers.iter().map(|r| r.pivot_rows().iter().map(|p| !p).collect()).collect();
        let labels: Vec<Vec<String>> = mons
            .iter()
            .zip(&standard)
            .map(|(v, s)| v.iter().zip(s).filter(|(_, &keep)| keep).map(|(e, _)| self.format_monomial(e)).collect())
            .collect();
        let basis = GradedBasis::new(labels)?;
        let ids: Vec<Vec<usize>> = mons
            .iter()
            .zip(&standard)
            .map(|(v, s)| {
                v.iter()
                    .zip(s)
                    .map(|(e, &keep)| if keep { basis.id(&self.format_monomial(e)).expect("standard monomial") } else { usize::MAX })
                    .collect()
            })
            .collect();
        let id_of = |g: usize, row: u32| ids[g][row as usize];
        let normal_form = |e: &Exps| -> Vec<usize> {
            let (g, row) = index[e];
            reducers[g].reduce_vector(&[row]).into_iter().map(|r| id_of(g, r)).collect()
        };
        let mut exps_of = vec![Exps::new(); basis.len()];
        for (g, v) in mons.iter().enumerate() {
            for (i, e) in v.iter().enumerate() {
                if standard[g][i] {
                    exps_of[id_of(g, i as u32)] = e.clone();
                }
            }
        }
        let gen_coproducts: Vec<Vec<(Exps, Exps)>> = self
            .generators
            .iter()
            .map(|gen| gen.coproduct.iter().map(|(a, b)| (pad(a, n), pad(b, n))).collect())
            .collect();
        let mut comult = Vec::with_capacity(basis.len());
        for e in &exps_of {
            let mut acc: Vec<(Exps, Exps)> = vec![(vec![0; n], vec![0; n])];
            for (k, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    let mut next = Vec::new();
                    for (a, b) in &acc {
                        for (c, d) in &gen_coproducts[k] {
                            next.push((add_exps(a, c), add_exps(b, d)));
                        }
                    }
                    acc = gradedhopf::normalize(next);
                }
            }
            let mut terms = Vec::new();
            for (a, b) in &acc {
                for x in normal_form(a) {
                    for y in normal_form(b) {
                        terms.push((x, y));
                    }
                }
            }
            comult.push(terms);
        }
        let mult = |i: usize, j: usize| normal_form(&add_exps(&exps_of[i], &exps_of[j]));
        Ok(HopfAlgebraTable::new(basis, Some(self.bound), mult, comult)?)
    }

    pub fn to_json(&self) -> Result<String, StabError> {
        #[derive(Serialize)]
        struct Gen {
            name: String,
            grading: usize,
            coproduct: String,
        }
        #[derive(Serialize)]
        struct Doc {
            schema: &'static str,
            bound: usize,
            generators: Vec<Gen>,
            relations: Vec<String>,
            effects: Vec<(String, CellEffect)>,
            flags: Vec<Flag>,
            table: gradedhopf::TableJson,
        }
        let doc = Doc {
            schema: "delta-presentation/1",
            bound: self.bound,
            generators: self
                .generators
                .iter()
                .map(|g| Gen { name: g.name.clone(), grading: g.grading, coproduct: self.format_tensor(&g.coproduct) })
                .collect(),
            relations: self.relations.iter().map(|r| self.format_poly(r)).collect(),
            effects: self.effects.clone(),
            flags: self.flags.clone(),
            table: self.table()?.to_json_struct(),
        };
        Ok(serde_json::to_string_pretty(&doc).expect("presentation serializes"))
    }
}

/// Runs every cell of `spec` in order and checks the Hopf axioms of the
/// result through `bound`.
pub fn delta_of_cells(spec: &CellSpec, bound: usize) -> Result<DeltaPresentation, StabError> {
    let mut p = DeltaPresentation::new(bound);
    for cell in &spec.cells {
        p.attach(cell)?;
    }
    let report = p.table()?.check_axioms();
    if let Some((axiom, msg)) = report.failures().first() {
        return Err(StabError::Invariant(format!("{axiom} fails: {msg}")));
    }
    Ok(p)
}
