use winfty::{parse, WMonomial};

use crate::tri::{context, Reading, TriMonomial};
use crate::CellssError;

/// The declaration file shipped with the crate.
pub const SHIPPED_DECLARATIONS: &str = include_str!("../data/declarations.txt");

/// Differentials extrapolated from the declared pattern, kept apart from
/// the declarations.
pub const SUPPLEMENTARY_DECLARATIONS: &str = include_str!("../data/supplementary.txt");

/// A declared differential `d^r(x) = y` of the cell-attachment spectral
/// sequence; in the Bockstein spectral sequence it reads
/// `d^r(τ^k x) = τ^{k+r} y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeclaredDifferential {
    pub r: u32,
    pub source: WMonomial,
    pub tau: u32,
    pub target: WMonomial,
    pub note: String,
    pub line: usize,
}

impl DeclaredDifferential {
    /// Problems with the bookkeeping under a filtration reading: the target
    /// must sit at `(g, d−1)`, the τ-power must equal `r` and the target
    /// filtration must be the source filtration minus `r`.
    pub fn check(&self, reading: Reading) -> Vec<String> {
        let mut out = Vec::new();
        let (sg, sd) = self.source.bidegree();
        let (tg, td) = self.target.bidegree();
        if (tg, td + 1) != (sg, sd) {
            out.push(format!("target at ({tg},{td}) but source at ({sg},{sd})"));
        }
        if self.tau != self.r {
            out.push(format!("tau power {} differs from page {}", self.tau, self.r));
        }
        let (fs, ft) = (reading.filtration(&self.source), reading.filtration(&self.target));
        if ft != fs - i64::from(self.r) {
            out.push(format!("filtration drops from {fs} to {ft}, not by {}", self.r));
        }
        out
    }

    pub fn describe(&self) -> String {
        format!("d{}({}) = tau^{} {}", self.r, TriMonomial::new(self.source.clone()), self.tau, TriMonomial::new(self.target.clone()))
    }
}

fn monomial(src: &str, line: usize) -> Result<WMonomial, CellssError> {
    let p = parse(src, &context())?;
    p.as_monomial()
        .cloned()
        .ok_or_else(|| CellssError::Declaration { line, msg: format!("`{src}` is not a single monomial") })
}

/// Parses lines `d<r> <source> -> tau^<k> <target>  # note`; blank lines
/// and lines starting with `#` are skipped.
pub fn parse_declarations(text: &str) -> Result<Vec<DeclaredDifferential>, CellssError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let (body, note) = match raw.split_once('#') {
            Some((b, n)) => (b.trim(), n.trim().to_string()),
            None => (raw.trim(), String::new()),
        };
        if body.is_empty() {
            continue;
        }
        let bad = |msg: &str| CellssError::Declaration { line, msg: msg.to_string() };
        let rest = body.strip_prefix('d').ok_or_else(|| bad("expected `d<r>`"))?;
        let (r, rest) = rest.split_once(char::is_whitespace).ok_or_else(|| bad("expected a source"))?;
        let r: u32 = r.parse().map_err(|_| bad("page is not a number"))?;
        let (src, tgt) = rest.split_once("->").ok_or_else(|| bad("expected `->`"))?;
        let tgt = tgt.trim().strip_prefix("tau^").ok_or_else(|| bad("expected `tau^<k>` before the target"))?;
        let (k, tgt) = tgt.split_once(char::is_whitespace).ok_or_else(|| bad("expected a target"))?;
        let tau: u32 = k.parse().map_err(|_| bad("tau power is not a number"))?;
        out.push(DeclaredDifferential {
            r,
            source: monomial(src.trim(), line)?,
            tau,
            target: monomial(tgt.trim(), line)?,
            note,
            line,
        });
    }
    Ok(out)
}

/// The parsed shipped declaration file.
pub fn shipped_declarations() -> Vec<DeclaredDifferential> {
    parse_declarations(SHIPPED_DECLARATIONS).expect("shipped declarations parse")
}

/// The parsed supplementary file.
pub fn supplementary_declarations() -> Vec<DeclaredDifferential> {
    parse_declarations(SUPPLEMENTARY_DECLARATIONS).expect("supplementary declarations parse")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lines() {
        let d = parse_declarations("# c\n\nd4 b^2*q[1](b) -> tau^4 q[1](s)^3*q[1](b)  # note\n").unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!((d[0].r, d[0].tau, d[0].line), (4, 4, 3));
        assert_eq!(d[0].note, "note");
        assert!(d[0].check(Reading::Computed).is_empty());
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["x4 b -> tau^4 b", "d4 b tau^4 b", "d4 b -> b", "dx b -> tau^1 b", "d4 b + q[1](b) -> tau^4 b"] {
            assert!(matches!(parse_declarations(bad), Err(CellssError::Declaration { .. })), "{bad}");
        }
        assert!(matches!(parse_declarations("d4 zz -> tau^4 b"), Err(CellssError::Expression(_))));
    }
}
