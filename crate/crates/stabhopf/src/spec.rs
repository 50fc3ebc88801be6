use winfty::{parse, Context, Generator, WPolynomial};

use crate::StabError;

/// A cell of an E∞ cell structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub name: String,
    /// Bidegree of the new class for a generator, of the attaching class
    /// for a relation.
    pub g: u32,
    pub d: u32,
    pub kind: CellKind,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellKind {
    Generator,
    Relation {
        attach: WPolynomial,
        /// Pairs `(a, b)` of a decomposition `Σ a⊗b` of the attaching class.
        decomposition: Vec<(WPolynomial, WPolynomial)>,
    },
}

/// An ordered list of cells; every expression only mentions generators
/// declared on earlier lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellSpec {
    pub cells: Vec<Cell>,
}

fn perr(line: usize, msg: impl Into<String>) -> StabError {
    StabError::Spec { line, msg: msg.into() }
}

fn parse_bidegree(s: &str, line: usize) -> Result<(u32, u32), StabError> {
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| perr(line, format!("expected `(g,d)`, got `{s}`")))?;
    let (g, d) = inner.split_once(',').ok_or_else(|| perr(line, format!("expected `(g,d)`, got `{s}`")))?;
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| perr(line, format!("bad number `{t}`")));
    Ok((num(g)?, num(d)?))
}

/// Splits at `sep` outside parentheses and brackets.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

impl CellSpec {
    /// Parses the line format
    /// `gen <name> (g,d)` and
    /// `rel <name> (g,d) attach=<expr> [q=<a>:<b>[+<a>:<b>…]]`,
    /// with `#` comments. Expressions use the `winfty` syntax.
    pub fn parse(text: &str) -> Result<Self, StabError> {
        let mut ctx = Context::new(Vec::new());
        let mut cells: Vec<Cell> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mut words = body.split_whitespace();
            let kind = words.next().unwrap_or_default();
            let name = words.next().ok_or_else(|| perr(line, "missing cell name"))?.to_string();
            let (g, d) = parse_bidegree(words.next().ok_or_else(|| perr(line, "missing bidegree"))?, line)?;
            if cells.iter().any(|c| c.name == name) || ctx.get(&name).is_ok() {
                return Err(perr(line, format!("name `{name}` is already used")));
            }
            let rest: Vec<&str> = words.collect();
            let kind = match kind {
                "gen" => {
                    if !rest.is_empty() {
                        return Err(perr(line, "generator lines take no attributes"));
                    }
                    let mut gens = ctx.generators().to_vec();
                    gens.push(Generator::new(&name, g, d));
                    ctx = Context::new(gens);
                    CellKind::Generator
                }
                "rel" => {
                    let (mut attach, mut decomposition) = (None, Vec::new());
                    for attr in rest {
                        let (key, value) = attr.split_once('=').ok_or_else(|| perr(line, format!("bad attribute `{attr}`")))?;
                        match key {
                            "attach" => attach = Some(parse(value, &ctx)?),
                            "q" => {
                                for pair in split_top(value, '+') {
                                    let parts = split_top(pair, ':');
                                    let [a, b] = parts.as_slice() else {
                                        return Err(perr(line, format!("decomposition term `{pair}` is not `a:b`")));
                                    };
                                    decomposition.push((parse(a, &ctx)?, parse(b, &ctx)?));
                                }
                            }
                            _ => return Err(perr(line, format!("unknown attribute `{key}`"))),
                        }
                    }
                    let attach = attach.ok_or_else(|| perr(line, "relation without `attach=`"))?;
                    CellKind::Relation { attach, decomposition }
                }
                other => return Err(perr(line, format!("unknown cell kind `{other}`"))),
            };
            cells.push(Cell { name, g, d, kind, line });
        }
        Ok(CellSpec { cells })
    }

    /// The built-in cell structure for the general linear groups of F2.
    pub fn cgl() -> Self {
        Self::parse(CGL_CELLS).expect("shipped spec parses")
    }

    /// The two-generator cell structure that collapses onto the first step
    /// of [`CellSpec::cgl`].
    pub fn y1() -> Self {
        Self::parse(Y1_CELLS).expect("shipped spec parses")
    }
}

/// Text of the built-in cell structure for the general linear groups.
pub const CGL_CELLS: &str = include_str!("../data/cgl.cells");
/// Text of the built-in two-generator cell structure.
pub const Y1_CELLS: &str = include_str!("../data/y1.cells");
