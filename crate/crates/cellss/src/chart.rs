use std::fmt::Write;

use crate::decl::DeclaredDifferential;
use crate::tri::{e1_basis_mod_sigma, Reading, TriMonomial};
use crate::CellssError;

/// What has happened to a chart class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Alive,
    /// Supports `d^r` hitting the entry with the given index.
    Supports { r: u32, target: usize },
    /// Hit by `d^r` from the entry with the given index.
    Hit { r: u32, source: usize },
}

/// The class `τ^{−p} x` at `(g, d, f, p)` with `f = f(x) − p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartEntry {
    pub g: u32,
    pub d: u32,
    pub f: i64,
    pub p: i64,
    pub class: TriMonomial,
    pub name: Option<&'static str>,
    pub status: Status,
}

impl ChartEntry {
    pub fn label(&self) -> String {
        match -self.p {
            0 => self.class.to_string(),
            k => format!("tau^{k}{}", self.class),
        }
    }
}

/// Bockstein `E¹` classes of filtration `f` in gradings `g` and degrees
/// `d−1, d, d+1`, so that differentials into and out of `(g, d, f)` are
/// visible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BocksteinChart {
    pub g: u32,
    pub d: u32,
    pub f: i64,
    pub reading: Reading,
    pub entries: Vec<ChartEntry>,
}

impl BocksteinChart {
    pub fn new(g: u32, d: u32, f: i64, reading: Reading) -> Self {
        let mut entries = Vec::new();
        for dd in d.saturating_sub(1)..=d + 1 {
            for t in e1_basis_mod_sigma(g, dd) {
                let fx = reading.filtration(&t.m);
                if fx <= f {
                    let name = Reading::name_of(&t.m);
                    let class = TriMonomial { m: t.m, f: fx };
                    entries.push(ChartEntry { g, d: dd, f, p: fx - f, class, name, status: Status::Alive });
                }
            }
        }
        BocksteinChart { g, d, f, reading, entries }
    }

    /// Classes at `(g, d, f)` itself.
    pub fn at_degree(&self) -> impl Iterator<Item = &ChartEntry> {
        self.entries.iter().filter(|e| e.d == self.d)
    }

    /// Classes at `(g, d, f)` that neither support nor receive a
    /// differential.
    pub fn survivors(&self) -> Vec<&ChartEntry> {
        self.at_degree().filter(|e| e.status == Status::Alive).collect()
    }

    fn find(&self, m: &winfty::WMonomial) -> Option<usize> {
        self.entries.iter().position(|e| e.class.m == *m)
    }

    /// Tab-separated report with header `g\td\tf\tp\tclass\tstatus\tkilled_by`.
    pub fn report_tsv(&self) -> String {
        let mut s = String::from("g\td\tf\tp\tclass\tstatus\tkilled_by\n");
        for e in &self.entries {
            let (status, by) = match e.status {
                Status::Alive => ("survives".to_string(), String::new()),
                Status::Supports { r, target } => (format!("supports d{r} to {}", self.entries[target].label()), String::new()),
                Status::Hit { r, source } => (format!("hit by d{r}"), self.entries[source].label()),
            };
            let _ = writeln!(s, "{}\t{}\t{}\t{}\t{}\t{status}\t{by}", e.g, e.d, e.f, e.p, e.label());
        }
        s
    }
}

/// A declaration applied although its bookkeeping check failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conflict {
    pub line: usize,
    pub declaration: String,
    pub problems: Vec<String>,
}

/// The chart after propagation, with the declarations whose bookkeeping
/// failed under the chart's filtration reading.
#[derive(Clone, Debug)]
pub struct SurvivorAnalysis {
    pub chart: BocksteinChart,
    pub applied: Vec<usize>,
    pub conflicts: Vec<Conflict>,
}

impl SurvivorAnalysis {
    pub fn survivor_labels(&self) -> Vec<String> {
        self.chart.survivors().iter().map(|e| e.label()).collect()
    }
}

/// Applies every declaration whose source sits in grading `g` and degree
/// `d` or `d+1`, page by page. Sources and targets are marked dead; nothing
/// else is inferred. Declarations that fail [`DeclaredDifferential::check`]
/// are still applied and listed as conflicts.
pub fn propagate(chart: BocksteinChart, decls: &[DeclaredDifferential]) -> Result<SurvivorAnalysis, CellssError> {
    let mut chart = chart;
    let mut relevant: Vec<&DeclaredDifferential> = decls
        .iter()
        .filter(|x| x.source.g() == chart.g && (x.source.d() == chart.d || x.source.d() == chart.d + 1))
        .collect();
    relevant.sort_by_key(|x| x.r);
    let mut applied = Vec::new();
    let mut conflicts = Vec::new();
    let missing = |m: &winfty::WMonomial, c: &BocksteinChart| CellssError::NotInChart {
        class: TriMonomial::new(m.clone()).to_string(),
        g: m.g(),
        d: m.d(),
        f: c.f,
    };
    for x in relevant {
        let s = chart.find(&x.source).ok_or_else(|| missing(&x.source, &chart))?;
        let t = chart.find(&x.target).ok_or_else(|| missing(&x.target, &chart))?;
        let page = |st: Status| match st {
            Status::Supports { r, .. } | Status::Hit { r, .. } => r,
            Status::Alive => 0,
        };
        if chart.entries[s].status != Status::Alive {
            return Err(CellssError::SourceAlreadyDead {
                class: chart.entries[s].label(),
                r: x.r,
                page: page(chart.entries[s].status),
            });
        }
        if chart.entries[t].status != Status::Alive {
            return Err(CellssError::TargetAlreadyDead {
                class: chart.entries[t].label(),
                r: x.r,
                page: page(chart.entries[t].status),
            });
        }
        let problems = x.check(chart.reading);
        if !problems.is_empty() {
            conflicts.push(Conflict { line: x.line, declaration: x.describe(), problems });
        }
        chart.entries[s].status = Status::Supports { r: x.r, target: t };
        chart.entries[t].status = Status::Hit { r: x.r, source: s };
        applied.push(x.line);
    }
    Ok(SurvivorAnalysis { chart, applied, conflicts })
}
