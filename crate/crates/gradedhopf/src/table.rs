use serde::{Deserialize, Serialize};

use crate::{normalize, Comb, GradedBasis, HopfError, Tensor};

/// A connected graded Hopf algebra over F2 given by product and coproduct
/// tables.
///
/// With `truncation = Some(t)` the structure is only known through grading
/// `t` and every product landing above `t` is an error. With `None` the
/// algebra is finite and complete: products above the top grading vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraTable {
    basis: GradedBasis,
    mult: Vec<Vec<Option<Comb>>>,
    comult: Vec<Tensor>,
    truncation: Option<usize>,
}

/// Outcome of the structural checks; each entry names the first violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub unit: Result<(), String>,
    pub associativity: Result<(), String>,
    pub counit: Result<(), String>,
    pub coassociativity: Result<(), String>,
    pub compatibility: Result<(), String>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.unit.is_ok()
            && self.associativity.is_ok()
            && self.counit.is_ok()
            && self.coassociativity.is_ok()
            && self.compatibility.is_ok()
    }

    pub fn failures(&self) -> Vec<(&'static str, &str)> {
        [
            ("unit", &self.unit),
            ("associativity", &self.associativity),
            ("counit", &self.counit),
            ("coassociativity", &self.coassociativity),
            ("compatibility", &self.compatibility),
        ]
        .into_iter()
        .filter_map(|(n, r)| r.as_ref().err().map(|e| (n, e.as_str())))
        .collect()
    }
}

/// Serialized form: basis labels plus sparse structure-constant triples.
///
/// `mult` holds `[i, j, k]` when `e_k` occurs in `e_i·e_j`; `comult` holds
/// `[k, i, j]` when `e_i⊗e_j` occurs in `ψ(e_k)`. Indices are global and
/// triples are sorted, so serialization is byte-stable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub max_grading: usize,
    pub truncation_grading: Option<usize>,
    pub basis: Vec<Vec<String>>,
    pub mult: Vec<[usize; 3]>,
    pub comult: Vec<[usize; 3]>,
}

impl HopfAlgebraTable {
    /// Assembles a table. `mult(i, j)` is consulted only for pairs whose
    /// product grading is known; `comult[k]` lists the pairs of `ψ(e_k)`.
    pub fn new(
        basis: GradedBasis,
        truncation: Option<usize>,
        mut mult: impl FnMut(usize, usize) -> Comb,
        comult: Vec<Tensor>,
    ) -> Result<Self, HopfError> {
        let n = basis.len();
        if comult.len() != n {
            return Err(HopfError::Malformed(format!("{} coproducts for {n} basis elements", comult.len())));
        }
        if let Some(t) = truncation {
            if t != basis.max_grading() {
                return Err(HopfError::Malformed("truncation grading must equal the top grading".into()));
            }
        }
        let mut table = vec![vec![None; n]; n];
        for i in 0..n {
            for j in 0..n {
                let g = basis.grading(i) + basis.grading(j);
                if g > basis.max_grading() {
                    if truncation.is_none() {
                        table[i][j] = Some(Vec::new());
                    }
                    continue;
                }
                let p = normalize(mult(i, j));
                if let Some(&bad) = p.iter().find(|&&k| basis.grading(k) != g) {
                    return Err(HopfError::Malformed(format!(
                        "{}·{} has a term {} in the wrong grading",
                        basis.label(i),
                        basis.label(j),
                        basis.label(bad)
                    )));
                }
                table[i][j] = Some(p);
            }
        }
        let comult: Vec<Tensor> = comult.into_iter().map(normalize).collect();
        for (k, t) in comult.iter().enumerate() {
            if let Some(&(a, b)) = t.iter().find(|&&(a, b)| basis.grading(a) + basis.grading(b) != basis.grading(k)) {
                return Err(HopfError::Malformed(format!(
                    "ψ({}) has a term {}⊗{} in the wrong grading",
                    basis.label(k),
                    basis.label(a),
                    basis.label(b)
                )));
            }
        }
        Ok(HopfAlgebraTable { basis, mult: table, comult, truncation })
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    pub fn max_grading(&self) -> usize {
        self.basis.max_grading()
    }

    /// Largest grading in which products are known.
    pub fn known_through(&self) -> usize {
        self.truncation.unwrap_or(usize::MAX)
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn id(&self, label: &str) -> Result<usize, HopfError> {
        self.basis.id(label)
    }

    pub fn label(&self, id: usize) -> &str {
        self.basis.label(id)
    }

    pub fn grading(&self, id: usize) -> usize {
        self.basis.grading(id)
    }

    pub fn multiply(&self, a: usize, b: usize) -> Result<Comb, HopfError> {
        self.mult[a][b].clone().ok_or(HopfError::Truncated {
            grading: self.grading(a) + self.grading(b),
            truncation: self.known_through(),
        })
    }

    pub fn multiply_comb(&self, a: &[usize], b: &[usize]) -> Result<Comb, HopfError> {
        let mut out = Vec::new();
        for &x in a {
            for &y in b {
                out.extend(self.multiply(x, y)?);
            }
        }
        Ok(normalize(out))
    }

    /// Product of a sequence of basis elements, left to right.
    pub fn multiply_all(&self, factors: &[usize]) -> Result<Comb, HopfError> {
        let mut acc = vec![0];
        for &f in factors {
            acc = self.multiply_comb(&acc, &[f])?;
        }
        Ok(acc)
    }

    pub fn coproduct(&self, a: usize) -> &Tensor {
        &self.comult[a]
    }

    /// `ψ(a)` with the terms `1⊗a` and `a⊗1` removed.
    pub fn reduced_coproduct(&self, a: usize) -> Tensor {
        self.comult[a].iter().copied().filter(|&(x, y)| x != 0 && y != 0).collect()
    }

    pub fn coproduct_comb(&self, a: &[usize]) -> Tensor {
        normalize(a.iter().flat_map(|&x| self.comult[x].iter().copied()).collect())
    }

    /// Product in the tensor square: `(a⊗b)(c⊗d) = ac⊗bd`.
    pub fn tensor_multiply(&self, s: &Tensor, t: &Tensor) -> Result<Tensor, HopfError> {
        let mut out = Vec::new();
        for &(a, b) in s {
            for &(c, d) in t {
                let l = self.multiply(a, c)?;
                let r = self.multiply(b, d)?;
                for &x in &l {
                    for &y in &r {
                        out.push((x, y));
                    }
                }
            }
        }
        Ok(normalize(out))
    }

    /// Parses `"a + b"` (or `"0"`) into a combination of basis labels.
    pub fn parse_comb(&self, s: &str) -> Result<Comb, HopfError> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(Vec::new());
        }
        let ids = s.split('+').map(|t| self.id(t.trim())).collect::<Result<Vec<_>, _>>()?;
        Ok(normalize(ids))
    }

    pub fn format_comb(&self, c: &[usize]) -> String {
        if c.is_empty() {
            return "0".into();
        }
        c.iter().map(|&i| self.label(i)).collect::<Vec<_>>().join(" + ")
    }

    pub fn format_tensor(&self, t: &[(usize, usize)]) -> String {
        if t.is_empty() {
            return "0".into();
        }
        t.iter().map(|&(a, b)| format!("{}⊗{}", self.label(a), self.label(b))).collect::<Vec<_>>().join(" + ")
    }

    /// Checks every Hopf algebra axiom on basis elements whose gradings are
    /// known.
    pub fn check_axioms(&self) -> AxiomReport {
        AxiomReport {
            unit: self.check_unit(),
            associativity: self.check_associativity(),
            counit: self.check_counit(),
            coassociativity: self.check_coassociativity(),
            compatibility: self.check_compatibility(),
        }
    }

    fn check_unit(&self) -> Result<(), String> {
        for x in 0..self.len() {
            let want = vec![x];
            if self.mult[0][x].as_ref() != Some(&want) || self.mult[x][0].as_ref() != Some(&want) {
                return Err(format!("1·{0} or {0}·1 differs from {0}", self.label(x)));
            }
        }
        Ok(())
    }

    fn check_associativity(&self) -> Result<(), String> {
        let n = self.len();
        let bound = self.known_through();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.grading(a) + self.grading(b) + self.grading(c) > bound {
                        continue;
                    }
                    let l = self.multiply(a, b).and_then(|ab| self.multiply_comb(&ab, &[c]));
                    let r = self.multiply(b, c).and_then(|bc| self.multiply_comb(&[a], &bc));
                    if l != r {
                        return Err(format!("({0}·{1})·{2} ≠ {0}·({1}·{2})", self.label(a), self.label(b), self.label(c)));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_counit(&self) -> Result<(), String> {
        for x in 0..self.len() {
            let left: Vec<usize> = self.comult[x].iter().filter(|p| p.0 == 0).map(|p| p.1).collect();
            let right: Vec<usize> = self.comult[x].iter().filter(|p| p.1 == 0).map(|p| p.0).collect();
            if left != vec![x] || right != vec![x] {
                return Err(format!("counit fails at {}", self.label(x)));
            }
        }
        Ok(())
    }

    fn check_coassociativity(&self) -> Result<(), String> {
        for x in 0..self.len() {
            let mut l = Vec::new();
            let mut r = Vec::new();
            for &(a, b) in &self.comult[x] {
                l.extend(self.comult[a].iter().map(|&(p, q)| (p, q, b)));
                r.extend(self.comult[b].iter().map(|&(p, q)| (a, p, q)));
            }
            if normalize(l) != normalize(r) {
                return Err(format!("coassociativity fails at {}", self.label(x)));
            }
        }
        Ok(())
    }

    fn check_compatibility(&self) -> Result<(), String> {
        let n = self.len();
        let bound = self.known_through();
        for a in 0..n {
            for b in 0..n {
                if self.grading(a) + self.grading(b) > bound {
                    continue;
                }
                let lhs = self.multiply(a, b).map(|ab| self.coproduct_comb(&ab));
                let rhs = self.tensor_multiply(&self.comult[a], &self.comult[b]);
                if lhs != rhs {
                    return Err(format!("ψ({0}·{1}) ≠ ψ({0})·ψ({1})", self.label(a), self.label(b)));
                }
            }
        }
        Ok(())
    }

    /// The antipode, from `S(x) = x + Σ S(x')x''` over the reduced coproduct.
    pub fn antipode(&self, x: usize) -> Result<Comb, HopfError> {
        let mut memo: Vec<Option<Comb>> = vec![None; self.len()];
        self.antipode_memo(x, &mut memo)
    }

    fn antipode_memo(&self, x: usize, memo: &mut Vec<Option<Comb>>) -> Result<Comb, HopfError> {
        if let Some(c) = &memo[x] {
            return Ok(c.clone());
        }
        let mut out = vec![x];
        if x == 0 {
            memo[0] = Some(out.clone());
            return Ok(out);
        }
        for (a, b) in self.reduced_coproduct(x) {
            let sa = self.antipode_memo(a, memo)?;
            out.extend(self.multiply_comb(&sa, &[b])?);
        }
        let out = normalize(out);
        memo[x] = Some(out.clone());
        Ok(out)
    }

    pub fn to_json_struct(&self) -> TableJson {
        let n = self.len();
        let mut mult = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if let Some(p) = &self.mult[i][j] {
                    mult.extend(p.iter().map(|&k| [i, j, k]));
                }
            }
        }
        let mut comult = Vec::new();
        for (k, t) in self.comult.iter().enumerate() {
            comult.extend(t.iter().map(|&(i, j)| [k, i, j]));
        }
        TableJson {
            max_grading: self.max_grading(),
            truncation_grading: self.truncation,
            basis: self.basis.all_labels().to_vec(),
            mult,
            comult,
        }
    }

    /// Canonical pretty-printed JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_struct()).expect("table serializes")
    }

    pub fn from_json_struct(j: &TableJson) -> Result<Self, HopfError> {
        let basis = GradedBasis::new(j.basis.clone())?;
        if basis.all_labels() != j.basis.as_slice() {
            return Err(HopfError::Malformed("basis labels must be sorted within each grading".into()));
        }
        if basis.max_grading() != j.max_grading {
            return Err(HopfError::Malformed("max_grading disagrees with basis".into()));
        }
        let n = basis.len();
        let in_range = |t: &[usize; 3]| t.iter().all(|&x| x < n);
        if !j.mult.iter().chain(&j.comult).all(in_range) {
            return Err(HopfError::Malformed("index out of range".into()));
        }
        let mut prods = vec![vec![Vec::new(); n]; n];
        for &[i, jj, k] in &j.mult {
            prods[i][jj].push(k);
        }
        let mut comult = vec![Vec::new(); n];
        for &[k, a, b] in &j.comult {
            comult[k].push((a, b));
        }
        Self::new(basis, j.truncation_grading, |a, b| prods[a][b].clone(), comult)
    }

    pub fn from_json(s: &str) -> Result<Self, HopfError> {
        let j: TableJson = serde_json::from_str(s).map_err(|e| HopfError::Malformed(e.to_string()))?;
        Self::from_json_struct(&j)
    }
}
