use std::collections::HashMap;

use crate::{normalize, GradedBasis, HopfAlgebraTable, HopfError};

type Exps = Vec<u32>;

/// Builds a commutative Hopf algebra whose basis is a set of monomials in
/// named generators, with coproducts given on generators and extended
/// multiplicatively.
///
/// The basis is either every monomial up to a truncation grading, or an
/// explicit downward-closed set of monomials; in the latter case every other
/// monomial is zero.
#[derive(Clone, Debug)]
pub struct PolynomialHopfBuilder {
    gens: Vec<(String, usize)>,
    monomials: Vec<Exps>,
    truncation: Option<usize>,
    gen_coproducts: Vec<Vec<(Exps, Exps)>>,
}

impl PolynomialHopfBuilder {
    /// All monomials in `gens` of grading at most `truncation`, with
    /// structure known only through that grading.
    pub fn truncated(gens: &[(&str, usize)], truncation: usize) -> Self {
        let gens: Vec<(String, usize)> = gens.iter().map(|&(n, g)| (n.to_string(), g)).collect();
        let mut monomials = vec![vec![0; gens.len()]];
        for k in 0..gens.len() {
            let mut next = Vec::new();
            for m in &monomials {
                let base = grading_of(&gens, m);
                let mut e = 0;
                while base + e as usize * gens[k].1 <= truncation {
                    let mut m2 = m.clone();
                    m2[k] = e;
                    next.push(m2);
                    e += 1;
                }
            }
            monomials = next;
        }
        Self::with_gen_slots(gens, monomials, Some(truncation))
    }

    /// The algebra with basis `monomials` (exponent vectors); all other
    /// monomials vanish. The set must be closed under dividing monomials.
    pub fn with_basis(gens: &[(&str, usize)], monomials: Vec<Vec<u32>>) -> Self {
        let gens: Vec<(String, usize)> = gens.iter().map(|&(n, g)| (n.to_string(), g)).collect();
        Self::with_gen_slots(gens, monomials, None)
    }

    fn with_gen_slots(gens: Vec<(String, usize)>, monomials: Vec<Exps>, truncation: Option<usize>) -> Self {
        let n = gens.len();
        let mut b = PolynomialHopfBuilder { gens, monomials, truncation, gen_coproducts: vec![Vec::new(); n] };
        for k in 0..n {
            let mut e = vec![0; n];
            e[k] = 1;
            b.gen_coproducts[k] = vec![(vec![0; n], e.clone()), (e, vec![0; n])];
        }
        b
    }

    /// Sets `ψ(gen)` to the listed terms, given as monomial strings such as
    /// `("sbar", "sbar^2")` or `("1", "delta")`. Generators default to
    /// primitive.
    pub fn coproduct(mut self, gen: &str, terms: &[(&str, &str)]) -> Result<Self, HopfError> {
        let k = self.gen_index(gen)?;
        let mut t = Vec::new();
        for &(a, b) in terms {
            t.push((self.parse_monomial(a)?, self.parse_monomial(b)?));
        }
        self.gen_coproducts[k] = t;
        Ok(self)
    }

    fn gen_index(&self, name: &str) -> Result<usize, HopfError> {
        self.gens.iter().position(|(n, _)| n == name).ok_or_else(|| HopfError::UnknownLabel(name.to_string()))
    }

    /// Parses `"1"`, `"x"`, `"x^2*y"`.
    pub fn parse_monomial(&self, s: &str) -> Result<Exps, HopfError> {
        let mut e = vec![0; self.gens.len()];
        let s = s.trim();
        if s == "1" {
            return Ok(e);
        }
        for f in s.split('*') {
            let (name, pow) = match f.split_once('^') {
                Some((n, p)) => (n.trim(), p.trim().parse::<u32>().map_err(|_| HopfError::UnknownLabel(s.to_string()))?),
                None => (f.trim(), 1),
            };
            e[self.gen_index(name)?] += pow;
        }
        Ok(e)
    }

    pub fn label(&self, e: &[u32]) -> String {
        monomial_label(&self.gens, e)
    }

    pub fn build(&self) -> Result<HopfAlgebraTable, HopfError> {
        let max = self.monomials.iter().map(|m| grading_of(&self.gens, m)).max().unwrap_or(0);
        let mut labels = vec![Vec::new(); max + 1];
        for m in &self.monomials {
            labels[grading_of(&self.gens, m)].push(self.label(m));
        }
        let basis = GradedBasis::new(labels)?;
        let mut id_of: HashMap<Exps, usize> = HashMap::new();
        let mut exps_of = vec![Vec::new(); basis.len()];
        for m in &self.monomials {
            let id = basis.id(&self.label(m))?;
            id_of.insert(m.clone(), id);
            exps_of[id] = m.clone();
        }
        let add = |a: &[u32], b: &[u32]| -> Exps { a.iter().zip(b).map(|(x, y)| x + y).collect() };
        let mult = |i: usize, j: usize| -> Vec<usize> {
            id_of.get(&add(&exps_of[i], &exps_of[j])).map(|&k| vec![k]).unwrap_or_default()
        };
        let mut comult = Vec::with_capacity(basis.len());
        for m in &exps_of {
            let mut acc: Vec<(Exps, Exps)> = vec![(vec![0; self.gens.len()], vec![0; self.gens.len()])];
            for (k, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    let mut next = Vec::new();
                    for (a, b) in &acc {
                        for (c, d) in &self.gen_coproducts[k] {
                            next.push((add(a, c), add(b, d)));
                        }
                    }
                    acc = normalize(next);
                }
            }
            let terms: Vec<(usize, usize)> = acc
                .iter()
                .filter_map(|(a, b)| Some((*id_of.get(a)?, *id_of.get(b)?)))
                .collect();
            comult.push(terms);
        }
        HopfAlgebraTable::new(basis, self.truncation, mult, comult)
    }
}

fn grading_of(gens: &[(String, usize)], e: &[u32]) -> usize {
    gens.iter().zip(e).map(|((_, g), &k)| g * k as usize).sum()
}

fn monomial_label(gens: &[(String, usize)], e: &[u32]) -> String {
    let parts: Vec<String> = gens
        .iter()
        .zip(e)
        .filter(|(_, &k)| k > 0)
        .map(|((n, _), &k)| if k == 1 { n.clone() } else { format!("{n}^{k}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// The dual Steenrod quotient `F2[ξ1,ξ2]/(ξ1⁴,ξ2²)` with `ξ1`, `ξ2` written
/// `xi1`, `xi2`.
pub fn build_a1_star() -> HopfAlgebraTable {
    let monomials = (0..2).flat_map(|b| (0..4).map(move |a| vec![a, b])).collect();
    PolynomialHopfBuilder::with_basis(&[("xi1", 1), ("xi2", 3)], monomials)
        .coproduct("xi2", &[("xi2", "1"), ("xi1^2", "xi1"), ("1", "xi2")])
        .and_then(|b| b.build())
        .expect("A(1)_* tables are well formed")
}

/// The truncated stability Hopf algebra of the trivial module through
/// grading 5: polynomial on `sbar` (1), `delta` (3), `rho` (4), with `sbar`
/// and `rho` primitive and `ψ(delta) = 1⊗delta + sbar⊗sbar^2 + delta⊗1`.
pub fn build_delta_cgl() -> HopfAlgebraTable {
    PolynomialHopfBuilder::truncated(&[("sbar", 1), ("delta", 3), ("rho", 4)], 5)
        .coproduct("delta", &[("1", "delta"), ("sbar", "sbar^2"), ("delta", "1")])
        .and_then(|b| b.build())
        .expect("Delta_CGL tables are well formed")
}
