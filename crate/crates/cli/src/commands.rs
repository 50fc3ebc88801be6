use std::fmt::Write;
use std::path::Path;

use cellss::{
    e1_basis_mod_sigma, filtration_discrepancies, parse_declarations, propagate, shipped_declarations,
    supplementary_declarations, BocksteinChart, Reading,
};
use cobar::families::required_bounds;
use cobar::minres::A1Ext;
use cobar::{a1_class_name, chart_json, chart_tsv, families, families_tsv, CobarComplex, ConeComplex, Window};
use f2core::F2Matrix;
use gradedhopf::{build_a1_star, build_delta_cgl, HopfAlgebraTable};
use grouphom::{
    builtin, homology_tsv, induced_map, permutation_matrices, stabilization, unitriangular_inclusion, PermGroup,
    Resolution,
};
use ivanovsky::{einfty_report, page_tsv, FilteredCobar};
use serde_json::json;
use stabhopf::{delta_of_cells, CellEffect, CellSpec};
use winfty::{dual_steenrod, free_basis, ideal_quotient_dims, parse, Context, WPolynomial};

use crate::render::Chart;
use crate::{Artifacts, ChartOpts, CliError, Command, Format, COBAR_G_LIMIT, FAMILIES_MAX_I, WBASIS_LIMIT};

pub fn dispatch(command: &Command) -> Result<Artifacts, CliError> {
    match command {
        Command::Cotor { algebra, gmax, dmax, chart } => cotor(algebra, *gmax, *dmax, chart),
        Command::Cone { gmax, dmax, chart } => cone(*gmax, *dmax, chart),
        Command::May { gmax, dmax, page, differentials, einfty, chart } => {
            may(*gmax, *dmax, *page, *differentials, *einfty, chart)
        }
        Command::Adem { expr, table } => adem(expr, table.format),
        Command::Nishida { expr, r, table } => nishida(expr, *r, table.format),
        Command::Wbasis { gens, relations, gmax, dmax, list, table } => {
            wbasis(gens, relations, *gmax, *dmax, *list, table.format)
        }
        Command::Cellss { g, d, f, declarations, supplementary, table } => {
            cellss(*g, *d, *f, declarations.as_deref(), *supplementary, table.format)
        }
        Command::Delta { spec, bound, format } => delta(spec, *bound, *format),
        Command::Grouphom { group, group_file, dmax, map, n, table } => {
            grouphom(group, group_file.as_deref(), *dmax, map.as_deref(), *n, table.format)
        }
        Command::Families { max_i, table } => families_cmd(*max_i, table.format),
    }
}

fn text(text: String) -> Artifacts {
    Artifacts { text, svg: None, notes: Vec::new() }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn no_ascii(format: Format) -> Result<(), CliError> {
    if format == Format::Ascii {
        return Err(CliError::Input("this subcommand writes tables; use --format tsv or json".into()));
    }
    Ok(())
}

fn cobar_window(g_max: usize) -> Result<Window, CliError> {
    if g_max > COBAR_G_LIMIT {
        return Err(CliError::Budget(format!("grading {g_max} exceeds the cobar limit {COBAR_G_LIMIT}")));
    }
    Ok(Window { g_max, s_max: g_max })
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn chart_artifacts(chart: &Chart, opts: &ChartOpts, other: impl FnOnce(Format) -> Result<String, CliError>) -> Result<Artifacts, CliError> {
    let text = match opts.format {
        Format::Ascii => chart.ascii(),
        f => other(f)?,
    };
    Ok(Artifacts { text, svg: opts.svg.as_ref().map(|_| chart.svg()), notes: Vec::new() })
}

fn load_algebra(name: &str) -> Result<(HopfAlgebraTable, bool), CliError> {
    match name {
        "a1" => Ok((build_a1_star(), true)),
        "cgl" => Ok((build_delta_cgl(), false)),
        path => Ok((HopfAlgebraTable::from_json(&read(Path::new(path))?)?, false)),
    }
}

fn cotor(algebra: &str, gmax: usize, dmax: usize, opts: &ChartOpts) -> Result<Artifacts, CliError> {
    let (h, named) = load_algebra(algebra)?;
    let c = CobarComplex::new(h, cobar_window(gmax)?)?;
    let names = |g: usize, d: usize| if named { a1_class_name(g, d) } else { None };
    let mut chart = Chart::new(&format!("Cotor of {algebra}, g <= {gmax}, d <= {dmax}"), gmax, dmax);
    for g in 0..=gmax {
        for d in 0..=dmax.min(g) {
            chart.set(g, d, c.cotor_dim(g, d)?);
        }
    }
    chart_artifacts(&chart, opts, |f| {
        Ok(if f == Format::Json { chart_json(&c, gmax, dmax, names)? + "\n" } else { chart_tsv(&c, gmax, dmax, names)? })
    })
}

fn coords(v: &f2core::BitVec) -> String {
    v.to_string()
}

fn cone(gmax: usize, dmax: usize, opts: &ChartOpts) -> Result<Artifacts, CliError> {
    let actions = opts.format != Format::Ascii;
    let base = CobarComplex::new(build_a1_star(), cobar_window(if actions { gmax + 2 } else { gmax })?)?;
    let z = base.parse_cochain(&["[xi1]"])?;
    let k = ConeComplex::new(&base, z)?;
    let (h10, h11) = (base.generator(1, 0)?, base.generator(2, 1)?);
    let mut chart = Chart::new(&format!("Cotor of A(1)_* / h10, g <= {gmax}, d <= {dmax}"), gmax, dmax);
    let mut rows = Vec::new();
    for g in 0..=gmax {
        for d in 0..=dmax.min(g) {
            let basis = k.basis(g, d)?;
            chart.set(g, d, basis.len());
            let mut reps = Vec::new();
            let (mut a10, mut a11) = (Vec::new(), Vec::new());
            for b in basis.iter().filter(|_| actions) {
                reps.push(k.format_chain(&k.representative(b)?));
                a10.push(coords(&k.module_action(&h10, b)?.coords));
                a11.push(coords(&k.module_action(&h11, b)?.coords));
            }
            rows.push((g, d, basis.len(), reps, a10, a11));
        }
    }
    chart_artifacts(&chart, opts, |f| {
        Ok(if f == Format::Json {
            let rows: Vec<_> = rows
                .iter()
                .map(|(g, d, dim, reps, a10, a11)| {
                    json!({"g": g, "d": d, "dim": dim, "representatives": reps, "h10": a10, "h11": a11})
                })
                .collect();
            pretty(&json!({"schema": "cone-chart/1", "cycle": "[xi1]", "g_max": gmax, "d_max": dmax, "rows": rows}))
        } else {
            let mut s = String::from("g\td\tdim\th10\th11\n");
            for (g, d, dim, _, a10, a11) in &rows {
                let _ = writeln!(s, "{g}\t{d}\t{dim}\t{}\t{}", a10.join(","), a11.join(","));
            }
            s
        })
    })
}

fn matrix_text(m: &F2Matrix) -> String {
    (0..m.rows()).map(|i| m.row(i).to_string()).collect::<Vec<_>>().join(";")
}

fn may(
    gmax: usize,
    dmax: usize,
    r: usize,
    differentials: bool,
    einfty: bool,
    opts: &ChartOpts,
) -> Result<Artifacts, CliError> {
    let fc = FilteredCobar::new(build_a1_star(), cobar_window(gmax)?)?;
    let mut chart = Chart::new("", gmax, dmax);
    if einfty {
        let rows = einfty_report(&fc, gmax, dmax)?;
        chart.title = format!("E-infinity of the augmentation spectral sequence, g <= {gmax}, d <= {dmax}");
        for row in &rows {
            chart.set(row.g, row.d, row.total());
        }
        return chart_artifacts(&chart, opts, |f| {
            Ok(if f == Format::Json {
                pretty(&json!({"schema": "einfty/1", "g_max": gmax, "d_max": dmax, "rows": rows}))
            } else {
                let mut s = String::from("g\td\tfiltrations\tstable_page\tcotor_dim\n");
                for row in &rows {
                    let fs: Vec<String> = row.by_filtration.iter().map(|(f, n)| format!("{f}:{n}")).collect();
                    let _ = writeln!(s, "{}\t{}\t{}\t{}\t{}", row.g, row.d, fs.join(","), row.stable_page, row.cotor_dim);
                }
                s
            })
        });
    }
    let page = fc.page(r, gmax, dmax)?;
    let mut opts = opts.clone();
    if differentials && opts.format == Format::Ascii {
        opts.format = Format::Tsv;
    }
    chart.title = format!("E{r} of the augmentation spectral sequence, g <= {gmax}, d <= {dmax}");
    for g in 0..=gmax {
        for d in 0..=dmax.min(g) {
            chart.set(g, d, page.total_dim(g, d));
        }
    }
    chart_artifacts(&chart, &opts, |f| {
        Ok(match (f, differentials) {
            (Format::Json, _) => {
                let entries: Vec<_> = page
                    .entries
                    .iter()
                    .map(|((g, d, f), e)| json!({"g": g, "d": d, "f": f, "dim": e.dim, "representatives": e.representatives}))
                    .collect();
                let diffs: Vec<_> = page
                    .differentials
                    .iter()
                    .map(|((g, d, f), m)| json!({"g": g, "d": d, "f": f, "target_f": f - r as i64, "matrix": matrix_text(m)}))
                    .collect();
                pretty(&json!({"schema": "ss-page/1", "r": r, "entries": entries, "differentials": diffs}))
            }
            (_, true) => {
                let mut s = String::from("r\tg\td\tf\ttarget_f\tmatrix\n");
                for ((g, d, f), m) in &page.differentials {
                    let _ = writeln!(s, "{r}\t{g}\t{d}\t{f}\t{}\t{}", f - r as i64, matrix_text(m));
                }
                s
            }
            _ => page_tsv(&page),
        })
    })
}

fn parse_expr(expr: &str) -> Result<WPolynomial, CliError> {
    Ok(parse(expr, &Context::standard())?)
}

fn adem(expr: &str, format: Format) -> Result<Artifacts, CliError> {
    no_ascii(format)?;
    let p = parse_expr(expr)?;
    Ok(text(if format == Format::Json {
        pretty(&json!({"input": expr, "normal_form": p.to_string(), "bidegree": p.bidegree()}))
    } else {
        format!("{p}\n")
    }))
}

fn nishida(expr: &str, r: Option<u32>, format: Format) -> Result<Artifacts, CliError> {
    no_ascii(format)?;
    let p = parse_expr(expr)?;
    let rs: Vec<u32> = match (r, p.bidegree()) {
        (Some(r), _) => vec![r],
        (None, Some((_, d))) => (0..=d).collect(),
        (None, None) if p.is_zero() => vec![0],
        (None, None) => return Err(CliError::Input(format!("`{expr}` is not homogeneous; pass --r"))),
    };
    let values: Vec<(u32, String)> = rs.iter().map(|&r| (r, dual_steenrod(r, &p).to_string())).collect();
    Ok(text(match format {
        Format::Json => {
            let rows: Vec<_> = values.iter().map(|(r, v)| json!({"r": r, "value": v})).collect();
            pretty(&json!({"input": expr, "normal_form": p.to_string(), "values": rows}))
        }
        _ if r.is_some() => format!("{}\n", values[0].1),
        _ => {
            let mut s = String::from("r\tvalue\n");
            for (r, v) in &values {
                let _ = writeln!(s, "{r}\t{v}");
            }
            s
        }
    }))
}

fn wbasis(
    gens: &str,
    relations: &[String],
    gmax: u32,
    dmax: u32,
    list: bool,
    format: Format,
) -> Result<Artifacts, CliError> {
    no_ascii(format)?;
    if gmax > WBASIS_LIMIT || dmax > WBASIS_LIMIT {
        return Err(CliError::Budget(format!("box ({gmax},{dmax}) exceeds the limit {WBASIS_LIMIT}")));
    }
    let ctx = Context::standard();
    let gens = gens
        .split(',')
        .map(|n| ctx.get(n.trim()).cloned())
        .collect::<Result<Vec<_>, _>>()?;
    let rels = relations.iter().map(|r| parse(r, &ctx)).collect::<Result<Vec<_>, _>>()?;
    let t = ideal_quotient_dims(&gens, &rels, gmax, dmax)?;
    let mut rows = Vec::new();
    for g in 1..=gmax {
        for d in 0..=dmax {
            let basis: Vec<String> =
                if list { free_basis(&gens, g, d).iter().map(|m| m.to_string()).collect() } else { Vec::new() };
            rows.push((g, d, t.free_dim(g, d), t.ideal_dim(g, d), t.dim(g, d), basis));
        }
    }
    Ok(text(if format == Format::Json {
        let rows: Vec<_> = rows
            .iter()
            .map(|(g, d, free, ideal, q, basis)| {
                let mut v = json!({"g": g, "d": d, "free": free, "ideal": ideal, "quotient": q});
                if list {
                    v["basis"] = json!(basis);
                }
                v
            })
            .collect();
        pretty(&json!({"schema": "wbasis/1", "relations": relations, "rows": rows}))
    } else {
        let mut s = String::from(if list { "g\td\tfree\tideal\tquotient\tbasis\n" } else { "g\td\tfree\tideal\tquotient\n" });
        for (g, d, free, ideal, q, basis) in &rows {
            let _ = write!(s, "{g}\t{d}\t{free}\t{ideal}\t{q}");
            if list {
                let _ = write!(s, "\t{}", basis.join(","));
            }
            s.push('\n');
        }
        s
    }))
}

fn reading_name(r: Reading) -> &'static str {
    match r {
        Reading::Computed => "computed",
        Reading::Listed => "listed",
    }
}

fn cellss(
    g: u32,
    d: u32,
    f: i64,
    declarations: Option<&Path>,
    supplementary: bool,
    format: Format,
) -> Result<Artifacts, CliError> {
    no_ascii(format)?;
    let mut decls = match declarations {
        Some(p) => parse_declarations(&read(p)?)?,
        None => shipped_declarations(),
    };
    if supplementary {
        decls.extend(supplementary_declarations());
    }
    let e1 = e1_basis_mod_sigma(g, d);
    let mut analyses = Vec::new();
    for reading in [Reading::Computed, Reading::Listed] {
        analyses.push((reading, propagate(BocksteinChart::new(g, d, f, reading), &decls)?));
    }
    let discrepancies = filtration_discrepancies();
    let mut notes = Vec::new();
    for x in &discrepancies {
        notes.push(format!("filtration of {} ({}) is listed as {} but computes to {}", x.name, x.class, x.listed, x.computed));
    }
    for (reading, a) in &analyses {
        for c in &a.conflicts {
            notes.push(format!(
                "{} reading: declaration line {} ({}) applied despite: {}",
                reading_name(*reading),
                c.line,
                c.declaration,
                c.problems.join("; ")
            ));
        }
    }
    let out = if format == Format::Json {
        let e1: Vec<_> = e1
            .iter()
            .map(|t| json!({"class": t.to_string(), "f": t.f, "name": Reading::name_of(&t.m)}))
            .collect();
        let readings: Vec<_> = analyses
            .iter()
            .map(|(reading, a)| {
                let conflicts: Vec<_> = a
                    .conflicts
                    .iter()
                    .map(|c| json!({"line": c.line, "declaration": c.declaration, "problems": c.problems}))
                    .collect();
                json!({
                    "reading": reading_name(*reading),
                    "report": a.chart.report_tsv(),
                    "survivors": a.survivor_labels(),
                    "conflicts": conflicts,
                })
            })
            .collect();
        let disc: Vec<_> = discrepancies
            .iter()
            .map(|x| json!({"name": x.name, "class": x.class, "listed": x.listed, "computed": x.computed}))
            .collect();
        pretty(&json!({
            "schema": "cellss/1",
            "g": g, "d": d, "f": f,
            "e1_basis": e1,
            "readings": readings,
            "filtration_discrepancies": disc,
        }))
    } else {
        let mut s = String::from("reading\tg\td\tf\tp\tclass\tstatus\tkilled_by\n");
        for (reading, a) in &analyses {
            for line in a.chart.report_tsv().lines().skip(1) {
                let _ = writeln!(s, "{}\t{line}", reading_name(*reading));
            }
        }
        let _ = writeln!(s, "# E1 basis mod sigma at ({g},{d}): {} classes", e1.len());
        for t in &e1 {
            let _ = writeln!(s, "#   {} f={}{}", t, t.f, Reading::name_of(&t.m).map(|n| format!(" ({n})")).unwrap_or_default());
        }
        for (reading, a) in &analyses {
            let _ = writeln!(s, "# survivors at ({g},{d},{f}), {} reading: {{{}}}", reading_name(*reading), a.survivor_labels().join(", "));
        }
        for n in &notes {
            let _ = writeln!(s, "# {n}");
        }
        s
    };
    Ok(Artifacts { text: out, svg: None, notes })
}

fn delta(spec: &str, bound: usize, format: Format) -> Result<Artifacts, CliError> {
    no_ascii(format)?;
    if bound > 12 {
        return Err(CliError::Budget(format!("bound {bound} exceeds the limit 12")));
    }
    let spec = match spec {
        "cgl" => CellSpec::cgl(),
        "y1" => CellSpec::y1(),
        path => CellSpec::parse(&read(Path::new(path))?)?,
    };
    let p = delta_of_cells(&spec, bound)?;
    let notes: Vec<String> = p.flags.iter().map(|f| format!("cell {}: {}", f.cell, f.message)).collect();
    let out = if format == Format::Json {
        p.to_json()? + "\n"
    } else {
        let mut s = String::from("cell\trule\tdetail\n");
        for (cell, e) in &p.effects {
            let (rule, detail) = match e {
                CellEffect::Unchanged => ("unchanged", String::new()),
                CellEffect::Generator { added } => ("generator", added.clone()),
                CellEffect::Quotient { relation } => ("quotient", relation.clone()),
                CellEffect::Bracket { added, coproduct } => ("bracket", format!("psi({added}) = {coproduct}")),
            };
            let _ = writeln!(s, "{cell}\t{rule}\t{detail}");
        }
        for n in &notes {
            let _ = writeln!(s, "# {n}");
        }
        s
    };
    Ok(Artifacts { text: out, svg: None, notes })
}

fn grouphom(
    group: &str,
    group_file: Option<&Path>,
    dmax: usize,
    map: Option<&str>,
    n: usize,
    format: Format,
) -> Result<Artifacts, CliError> {
    no_ascii(format)?;
    let Some(map) = map else {
        let g = match group_file {
            Some(p) => PermGroup::from_cycles(group, &read(p)?)?,
            None => builtin(group)?,
        };
        let tsv = homology_tsv(&g, dmax)?;
        return Ok(text(if format == Format::Json {
            let dims: Vec<usize> = tsv.lines().skip(1).map(|l| l.rsplit('\t').next().unwrap().parse().unwrap()).collect();
            pretty(&json!({"schema": "group-homology/1", "group": g.name(), "order": g.order(), "dims": dims}))
        } else {
            tsv
        }));
    };
    let (src, tgt, f) = match map {
        "stabilization" => stabilization(n)?,
        "ut-inclusion" => unitriangular_inclusion(n)?,
        "perm-matrices" => permutation_matrices(n)?,
        other => {
            return Err(CliError::Input(format!(
                "unknown map `{other}`; use stabilization, ut-inclusion or perm-matrices"
            )))
        }
    };
    let (rs, rt) = (Resolution::new(&src, dmax + 1)?, Resolution::new(&tgt, dmax + 1)?);
    let name = format!("{}->{}", src.name(), tgt.name());
    let mut rows = Vec::new();
    for d in 0..=dmax {
        let m = induced_map(&f, &rs, &rt, d)?;
        rows.push((d, m.cols(), m.rows(), m.rank(), matrix_text(&m)));
    }
    Ok(text(if format == Format::Json {
        let rows: Vec<_> = rows
            .iter()
            .map(|(d, s, t, r, m)| json!({"d": d, "source_dim": s, "target_dim": t, "rank": r, "matrix": m}))
            .collect();
        pretty(&json!({"schema": "induced-map/1", "map": name, "rows": rows}))
    } else {
        let mut s = String::from("map\td\tsource_dim\ttarget_dim\trank\tmatrix\n");
        for (d, sd, td, r, m) in &rows {
            let _ = writeln!(s, "{name}\t{d}\t{sd}\t{td}\t{r}\t{m}");
        }
        s
    }))
}

fn families_cmd(max_i: usize, format: Format) -> Result<Artifacts, CliError> {
    no_ascii(format)?;
    if max_i > FAMILIES_MAX_I {
        return Err(CliError::Budget(format!("--max-i {max_i} exceeds the limit {FAMILIES_MAX_I}")));
    }
    let (s, t) = required_bounds(max_i);
    let ext = A1Ext::new(s, t)?;
    let rows = families(&ext, max_i)?;
    if let Some(r) = rows.iter().find(|r| !r.verified) {
        return Err(CliError::Invariant(format!("row {} at ({},{}) failed verification", r.name, r.g, r.d)));
    }
    Ok(text(if format == Format::Json {
        pretty(&json!({"schema": "families/1", "max_i": max_i, "rows": rows}))
    } else {
        families_tsv(&rows)
    }))
}
