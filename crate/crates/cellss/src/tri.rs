use std::collections::BTreeMap;
use std::fmt;

use winfty::{free_basis, parse, Context, Generator, WMonomial};

pub fn sigma() -> Generator {
    Generator::new("s", 1, 0)
}

pub fn beta() -> Generator {
    Generator::new("b", 3, 2)
}

pub(crate) fn context() -> Context {
    Context::new(vec![sigma(), beta()])
}

/// Multiplicative filtration: `f(σ) = f(β) = −1`, `f(Q_I(x)) = 2^{|I|} f(x)`
/// and filtrations add over products.
pub fn filtration(m: &WMonomial) -> i64 {
    m.factors().iter().map(|f| -(1i64 << f.seq.len())).sum()
}

/// A monomial with its multiplicative filtration.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TriMonomial {
    pub m: WMonomial,
    pub f: i64,
}

impl TriMonomial {
    pub fn new(m: WMonomial) -> Self {
        let f = filtration(&m);
        TriMonomial { m, f }
    }

    pub fn g(&self) -> u32 {
        self.m.g()
    }

    pub fn d(&self) -> u32 {
        self.m.d()
    }
}

impl fmt::Display for TriMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.m.format_lower())
    }
}

/// Monomials over `σ, β` of bidegree `(g, d)` not divisible by `σ`.
pub fn e1_basis_mod_sigma(g: u32, d: u32) -> Vec<TriMonomial> {
    if (g, d) == (0, 0) {
        return vec![TriMonomial::new(WMonomial::one())];
    }
    let s = sigma();
    free_basis(&[s.clone(), beta()], g, d).into_iter().filter(|m| !m.divisible_by(&s)).map(TriMonomial::new).collect()
}

/// The exponent of `Q_1(σ)` in `m`.
fn q1_exponent(m: &WMonomial) -> usize {
    let s = sigma();
    m.factors().iter().filter(|f| f.gen == s && f.seq == [1]).count()
}

/// The basis at `(g, d)` grouped by the exact power of `Q_1(σ)` dividing
/// each monomial.
pub fn divisibility_groups(g: u32, d: u32) -> BTreeMap<usize, Vec<TriMonomial>> {
    let mut out: BTreeMap<usize, Vec<TriMonomial>> = BTreeMap::new();
    for t in e1_basis_mod_sigma(g, d) {
        out.entry(q1_exponent(&t.m)).or_default().push(t);
    }
    out
}

/// A named class of the reference tables at `(12,8)` and `(13,8)`, with its
/// listed filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TabulatedClass {
    pub name: &'static str,
    pub expr: &'static str,
    pub listed_f: i64,
}

impl TabulatedClass {
    pub fn monomial(&self) -> WMonomial {
        let p = parse(self.expr, &context()).expect("tabulated class parses");
        p.as_monomial().cloned().expect("tabulated class is a monomial")
    }
}

const TABLE: [TabulatedClass; 10] = [
    TabulatedClass { name: "beta4", expr: "b^4", listed_f: -4 },
    TabulatedClass { name: "chi2", expr: "q[1](s)^2*b^2*q[2](s)", listed_f: -6 },
    TabulatedClass { name: "chi2'", expr: "q[1](s)^2*q[1,1](s)^2", listed_f: -12 },
    TabulatedClass { name: "chi3", expr: "q[1](s)^3*q[1](b)", listed_f: -8 },
    TabulatedClass { name: "chi3'", expr: "q[1](s)^3*q[1,1](s)*q[2](s)", listed_f: -12 },
    TabulatedClass { name: "chi4", expr: "q[2](s)^2*q[1](s)^4", listed_f: -12 },
    TabulatedClass { name: "chi5", expr: "q[1](s)^5*q[3](s)", listed_f: -12 },
    TabulatedClass { name: "varpi2", expr: "Q[1](s)^2*b^3", listed_f: -7 },
    TabulatedClass { name: "varpi3", expr: "q[1](s)^3*q[1,1](s)*b", listed_f: -11 },
    TabulatedClass { name: "varpi4", expr: "q[1](s)^4*q[2](s)*b", listed_f: -11 },
];

/// The named classes with their listed filtrations: seven at `(12,8)`
/// followed by three at `(13,8)`.
pub fn tabulated_classes() -> &'static [TabulatedClass] {
    &TABLE
}

/// A tabulated filtration that disagrees with the computed one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub name: &'static str,
    pub class: String,
    pub listed: i64,
    pub computed: i64,
}

/// Every tabulated class whose listed filtration differs from
/// [`filtration`].
pub fn filtration_discrepancies() -> Vec<Discrepancy> {
    TABLE
        .iter()
        .filter_map(|t| {
            let m = t.monomial();
            let computed = filtration(&m);
            (computed != t.listed_f).then(|| Discrepancy {
                name: t.name,
                class: format!("[{}]", m.format_lower()),
                listed: t.listed_f,
                computed,
            })
        })
        .collect()
}

/// Which filtration to use for the tabulated classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reading {
    /// Every class gets its computed filtration.
    Computed,
    /// Tabulated classes get their listed filtration.
    Listed,
}

impl Reading {
    pub fn filtration(self, m: &WMonomial) -> i64 {
        if self == Reading::Listed {
            if let Some(t) = TABLE.iter().find(|t| t.monomial() == *m) {
                return t.listed_f;
            }
        }
        filtration(m)
    }

    pub fn name_of(m: &WMonomial) -> Option<&'static str> {
        TABLE.iter().find(|t| t.monomial() == *m).map(|t| t.name)
    }
}
