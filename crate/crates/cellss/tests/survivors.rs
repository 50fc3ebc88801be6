use cellss::{
    propagate, shipped_declarations, supplementary_declarations, BocksteinChart, CellssError, Reading, Status,
};

fn analysis(g: u32, d: u32, f: i64, reading: Reading) -> cellss::SurvivorAnalysis {
    propagate(BocksteinChart::new(g, d, f, reading), &shipped_declarations()).unwrap()
}

const EXTRA: &str = "tau^4[b^2*q[1](s)*q[1,1](s)]";

#[test]
fn chart_positions_at_12_8() {
    let c = BocksteinChart::new(12, 8, -4, Reading::Listed);
    let mut labels: Vec<(i64, String)> = c.at_degree().map(|e| (e.p, e.name.unwrap_or("extra").to_string())).collect();
    labels.sort();
    let want = [
        (-8, "chi2'"),
        (-8, "chi3'"),
        (-8, "chi4"),
        (-8, "chi5"),
        (-4, "chi3"),
        (-4, "extra"),
        (-2, "chi2"),
        (0, "beta4"),
    ];
    assert_eq!(labels, want.map(|(p, n)| (p, n.to_string())));
    let c = BocksteinChart::new(12, 8, -4, Reading::Computed);
    let chi2 = c.at_degree().find(|e| e.name == Some("chi2")).unwrap();
    assert_eq!(chi2.p, -4);
}

#[test]
fn survivors_at_12_8_under_both_readings() {
    for reading in [Reading::Computed, Reading::Listed] {
        let a = analysis(12, 8, -4, reading);
        assert_eq!(a.survivor_labels(), ["[b^4]", EXTRA, "tau^8[q[1](s)^2*q[1,1](s)^2]"], "{reading:?}");
    }
}

#[test]
fn supplementary_differential_removes_the_extra_survivor() {
    let mut decls = shipped_declarations();
    decls.extend(supplementary_declarations());
    for reading in [Reading::Computed, Reading::Listed] {
        let a = propagate(BocksteinChart::new(12, 8, -4, reading), &decls).unwrap();
        assert_eq!(a.survivor_labels(), ["[b^4]", "tau^8[q[1](s)^2*q[1,1](s)^2]"], "{reading:?}");
    }
    assert!(supplementary_declarations().iter().all(|d| d.check(Reading::Computed).is_empty()));
}

#[test]
fn survivors_at_13_8_under_both_readings() {
    for reading in [Reading::Computed, Reading::Listed] {
        let a = analysis(13, 8, -5, reading);
        assert!(a.survivor_labels().is_empty(), "{reading:?}");
        assert_eq!(a.chart.at_degree().count(), 3);
    }
}

#[test]
fn bookkeeping_conflicts_are_reported() {
    assert!(shipped_declarations().iter().all(|d| d.check(Reading::Computed).is_empty()));
    assert!(analysis(12, 8, -4, Reading::Computed).conflicts.is_empty());
    let listed = analysis(12, 8, -4, Reading::Listed);
    assert_eq!(listed.conflicts.len(), 1);
    assert!(listed.conflicts[0].problems[0].contains("from -6 to -12"));
    for reading in [Reading::Computed, Reading::Listed] {
        assert!(analysis(13, 8, -5, reading).conflicts.is_empty());
    }
}

#[test]
fn printed_chi3_source_is_contradictory() {
    let mut decls = shipped_declarations();
    let printed = winfty::parse("q[1](s)*q[2](s)^2*b^2", &winfty::Context::standard()).unwrap();
    decls[1].source = printed.as_monomial().unwrap().clone();
    assert!(!decls[1].check(Reading::Computed).is_empty());
    let err = propagate(BocksteinChart::new(12, 8, -4, Reading::Computed), &decls).unwrap_err();
    assert!(matches!(err, CellssError::SourceAlreadyDead { page: 4, .. }));
}

#[test]
fn empty_declarations_leave_everything_alive() {
    let a = propagate(BocksteinChart::new(12, 8, -4, Reading::Computed), &[]).unwrap();
    assert_eq!(a.survivor_labels().len(), 8);
    assert!(a.chart.entries.iter().all(|e| e.status == Status::Alive));
}

#[test]
fn dead_source_is_rejected() {
    let mut decls = shipped_declarations();
    let mut again = decls[0].clone();
    again.r = 6;
    again.tau = 6;
    decls.push(again);
    let err = propagate(BocksteinChart::new(12, 8, -4, Reading::Computed), &decls).unwrap_err();
    assert!(matches!(err, CellssError::SourceAlreadyDead { page: 4, .. }));
}

#[test]
fn report_lists_every_chart_class() {
    let a = analysis(12, 8, -4, Reading::Computed);
    let tsv = a.chart.report_tsv();
    assert!(tsv.starts_with("g\td\tf\tp\tclass\tstatus\tkilled_by\n"));
    assert_eq!(tsv.lines().count(), a.chart.entries.len() + 1);
    assert!(tsv.contains("tau^4[q[1](b)*q[1](s)^3]\thit by d4\t[b^2*q[1](b)]"));
}
