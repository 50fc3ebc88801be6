use serde::Serialize;

use crate::{CobarComplex, CobarError};

/// One bidegree of a Cotor chart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartRow {
    pub g: usize,
    pub d: usize,
    pub dim: usize,
    pub class_names: Vec<String>,
    pub representatives: Vec<String>,
}

fn power(name: &str, k: usize) -> Option<String> {
    match k {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{k}")),
    }
}

/// Name of the monomial basis element of
/// `F2[h10, h11, y74, y128]/(h10·h11, h11³, h11·y74, y74² + h10²·y128)` at
/// `(g, d)`, where `h10, h11, y74, y128` sit at `(1,0), (2,1), (7,4),
/// (12,8)`. Each bidegree holds at most one such monomial.
pub fn a1_class_name(g: usize, d: usize) -> Option<String> {
    let mut e = 0;
    while 12 * e <= g && 8 * e <= d {
        let (gg, dd) = (g - 12 * e, d - 8 * e);
        let found = match (gg, dd) {
            (k, 0) => Some((k, 0, 0)),
            (2, 1) => Some((0, 1, 0)),
            (4, 2) => Some((0, 2, 0)),
            (k, 4) if k >= 7 => Some((k - 7, 0, 1)),
            _ => None,
        };
        if let Some((a, b, c)) = found {
            let parts: Vec<String> =
                [power("h10", a), power("h11", b), power("y74", c), power("y128", e)].into_iter().flatten().collect();
            return Some(if parts.is_empty() { "1".into() } else { parts.join("*") });
        }
        e += 1;
    }
    None
}

fn rows(
    c: &CobarComplex,
    g_max: usize,
    d_max: usize,
    names: impl Fn(usize, usize) -> Option<String>,
    with_reps: bool,
) -> Result<Vec<ChartRow>, CobarError> {
    let mut out = Vec::new();
    for g in 0..=g_max {
        for d in 0..=d_max.min(g) {
            let basis = c.cotor_basis(g, d)?;
            let class_names = if basis.len() == 1 { names(g, d).into_iter().collect() } else { Vec::new() };
            let representatives = if with_reps {
                basis.iter().map(|b| c.format_cochain(&c.representative(&c.element(b)).expect("in window"))).collect()
            } else {
                Vec::new()
            };
            out.push(ChartRow { g, d, dim: basis.len(), class_names, representatives });
        }
    }
    Ok(out)
}

/// Tab-separated chart with header `g\td\tdim\tclass_names`, one row per
/// bidegree with `d ≤ min(g, d_max)`.
pub fn chart_tsv(
    c: &CobarComplex,
    g_max: usize,
    d_max: usize,
    names: impl Fn(usize, usize) -> Option<String>,
) -> Result<String, CobarError> {
    let mut s = String::from("g\td\tdim\tclass_names\n");
    for r in rows(c, g_max, d_max, names, false)? {
        s.push_str(&format!("{}\t{}\t{}\t{}\n", r.g, r.d, r.dim, r.class_names.join(",")));
    }
    Ok(s)
}

/// The chart as pretty JSON, including cocycle representatives.
pub fn chart_json(
    c: &CobarComplex,
    g_max: usize,
    d_max: usize,
    names: impl Fn(usize, usize) -> Option<String>,
) -> Result<String, CobarError> {
    #[derive(Serialize)]
    struct Doc {
        schema: &'static str,
        g_max: usize,
        d_max: usize,
        rows: Vec<ChartRow>,
    }
    let doc = Doc { schema: "cotor-chart/1", g_max, d_max, rows: rows(c, g_max, d_max, names, true)? };
    Ok(serde_json::to_string_pretty(&doc).expect("chart serializes"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(a1_class_name(0, 0).as_deref(), Some("1"));
        assert_eq!(a1_class_name(3, 0).as_deref(), Some("h10^3"));
        assert_eq!(a1_class_name(4, 2).as_deref(), Some("h11^2"));
        assert_eq!(a1_class_name(9, 4).as_deref(), Some("h10^2*y74"));
        assert_eq!(a1_class_name(14, 9).as_deref(), Some("h11*y128"));
        assert_eq!(a1_class_name(3, 1), None);
        assert_eq!(a1_class_name(6, 3), None);
    }
}
