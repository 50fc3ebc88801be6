use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

/// A generator with bidegree `(g, d)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub name: String,
    pub g: u32,
    pub d: u32,
}

impl Generator {
    pub fn new(name: &str, g: u32, d: u32) -> Self {
        Generator { name: name.to_string(), g, d }
    }

    /// The barred generator: same grading, homological degree one higher.
    pub fn bar(&self) -> Self {
        Generator { name: format!("{}bar", self.name), g: self.g, d: self.d + 1 }
    }
}

/// `Q^I(x)` with `I = (s1, …, sr)` in upper indices; `Q^{s1}` is applied
/// last. The empty sequence is `x` itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub gen: Generator,
    pub seq: Vec<u32>,
}

impl Ord for Factor {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gen
            .name
            .cmp(&other.gen.name)
            .then(self.seq.len().cmp(&other.seq.len()))
            .then_with(|| self.seq.cmp(&other.seq))
            .then_with(|| self.gen.cmp(&other.gen))
    }
}

impl PartialOrd for Factor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Factor {
    pub fn generator(gen: &Generator) -> Self {
        Factor { gen: gen.clone(), seq: Vec::new() }
    }

    pub fn new(gen: &Generator, seq: &[u32]) -> Self {
        Factor { gen: gen.clone(), seq: seq.to_vec() }
    }

    pub fn g(&self) -> u32 {
        self.gen.g << self.seq.len()
    }

    pub fn d(&self) -> u32 {
        self.gen.d + self.seq.iter().sum::<u32>()
    }

    /// Lower-index form, e.g. `q[1,1](s)` for `Q[2,1](s)`.
    pub fn format_lower(&self) -> String {
        if self.seq.is_empty() {
            return self.gen.name.clone();
        }
        let l: Vec<String> = crate::ops::lower_indices(&self.seq, &self.gen).iter().map(i64::to_string).collect();
        format!("q[{}]({})", l.join(","), self.gen.name)
    }

    /// The factor with the outermost operation removed.
    pub fn inner(&self) -> Factor {
        Factor { gen: self.gen.clone(), seq: self.seq[1..].to_vec() }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.seq.is_empty() {
            write!(f, "{}", self.gen.name)
        } else {
            let s: Vec<String> = self.seq.iter().map(u32::to_string).collect();
            write!(f, "Q[{}]({})", s.join(","), self.gen.name)
        }
    }
}

/// A monomial: a sorted multiset of factors. The empty monomial is `1`.
///
/// Monomials are ordered by comparing their factors from the largest down,
/// so `Q[1](s)^3` precedes `s^2*Q[2,1](s)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct WMonomial {
    factors: Vec<Factor>,
}

impl Ord for WMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.factors.iter().rev().cmp(other.factors.iter().rev())
    }
}

impl PartialOrd for WMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl WMonomial {
    pub fn one() -> Self {
        WMonomial::default()
    }

    pub fn from_factors(mut factors: Vec<Factor>) -> Self {
        factors.sort();
        WMonomial { factors }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn g(&self) -> u32 {
        self.factors.iter().map(Factor::g).sum()
    }

    pub fn d(&self) -> u32 {
        self.factors.iter().map(Factor::d).sum()
    }

    pub fn bidegree(&self) -> (u32, u32) {
        (self.g(), self.d())
    }

    pub fn mul(&self, other: &WMonomial) -> WMonomial {
        let mut f = self.factors.clone();
        f.extend(other.factors.iter().cloned());
        WMonomial::from_factors(f)
    }

    /// Whether some factor is the bare generator `gen`.
    pub fn divisible_by(&self, gen: &Generator) -> bool {
        self.factors.iter().any(|f| f.seq.is_empty() && f.gen == *gen)
    }

    /// Lower-index form of the monomial, e.g. `q[1](s)^2*q[1,1](s)^2`.
    pub fn format_lower(&self) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .powers()
            .into_iter()
            .map(|(x, n)| if n == 1 { x.format_lower() } else { format!("{}^{n}", x.format_lower()) })
            .collect();
        parts.join("*")
    }

    /// Distinct factors with multiplicities, in order.
    pub fn powers(&self) -> Vec<(&Factor, usize)> {
        let mut out: Vec<(&Factor, usize)> = Vec::new();
        for f in &self.factors {
            match out.last_mut() {
                Some((g, n)) if *g == f => *n += 1,
                _ => out.push((f, 1)),
            }
        }
        out
    }
}

impl fmt::Display for WMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .powers()
            .into_iter()
            .map(|(x, n)| if n == 1 { x.to_string() } else { format!("{x}^{n}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// An F2-linear combination of monomials. Zero is the empty set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct WPolynomial {
    terms: BTreeSet<WMonomial>,
}

impl WPolynomial {
    pub fn zero() -> Self {
        WPolynomial::default()
    }

    pub fn one() -> Self {
        WPolynomial::from_monomial(WMonomial::one())
    }

    pub fn from_monomial(m: WMonomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        WPolynomial { terms }
    }

    pub fn from_factor(f: Factor) -> Self {
        WPolynomial::from_monomial(WMonomial::from_factors(vec![f]))
    }

    pub fn generator(gen: &Generator) -> Self {
        WPolynomial::from_factor(Factor::generator(gen))
    }

    pub fn terms(&self) -> impl Iterator<Item = &WMonomial> {
        self.terms.iter()
    }

    /// The single term of a one-term polynomial.
    pub fn as_monomial(&self) -> Option<&WMonomial> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_monomial(&mut self, m: WMonomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add_assign(&mut self, other: &WPolynomial) {
        for m in &other.terms {
            self.add_monomial(m.clone());
        }
    }

    pub fn add(&self, other: &WPolynomial) -> WPolynomial {
        let mut p = self.clone();
        p.add_assign(other);
        p
    }

    pub fn mul(&self, other: &WPolynomial) -> WPolynomial {
        let mut p = WPolynomial::zero();
        for a in &self.terms {
            for b in &other.terms {
                p.add_monomial(a.mul(b));
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> WPolynomial {
        let mut p = WPolynomial::one();
        for _ in 0..k {
            p = p.mul(self);
        }
        p
    }

    /// The common bidegree of all terms, if the polynomial is nonzero and
    /// homogeneous.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.iter().map(WMonomial::bidegree);
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }
}

impl FromIterator<WMonomial> for WPolynomial {
    fn from_iter<T: IntoIterator<Item = WMonomial>>(iter: T) -> Self {
        let mut p = WPolynomial::zero();
        for m in iter {
            p.add_monomial(m);
        }
        p
    }
}

impl WPolynomial {
    /// Lower-index form of every term.
    pub fn format_lower(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms.iter().map(WMonomial::format_lower).collect::<Vec<_>>().join(" + ")
    }
}

impl fmt::Display for WPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(WMonomial::to_string).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
