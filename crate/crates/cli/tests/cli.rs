use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glstab")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn adem_example() {
    assert_eq!(stdout(&["adem", "Q[2](s*Q[1](s))"]), "Q[1](s)^3 + s^2*Q[2,1](s)\n");
    let v: serde_json::Value = serde_json::from_str(&stdout(&["adem", "Q[3,1](s)", "--format", "json"])).unwrap();
    assert_eq!(v["normal_form"], "0");
}

#[test]
fn families_example() {
    let out = stdout(&["families", "--max-i", "1"]);
    assert!(out.lines().any(|l| l.starts_with("u_00\tabsolute\t2\t1\t") && l.ends_with("represented by the matrix (0 1;1 0)")));
    assert!(out.lines().any(|l| l.starts_with("s_1\tabsolute\t11\t7\t")));
    assert!(out.lines().skip(1).all(|l| l.split('\t').nth(6) == Some("true")));
}

#[test]
fn nishida_single_operation() {
    assert_eq!(stdout(&["nishida", "--r", "2", "s^2*Q[4](s)"]), "s^2*Q[2](s)\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["adem", "Q[1](zz)"]).status.code(), Some(2));
    assert_eq!(run(&["adem", "Q[1](s"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["grouphom", "--group", "GL(5,2)"]).status.code(), Some(2));
    assert_eq!(run(&["delta", "/nonexistent/spec"]).status.code(), Some(2));
    assert_eq!(run(&["families", "--max-i", "4"]).status.code(), Some(3));
    assert_eq!(run(&["cotor", "--gmax", "40"]).status.code(), Some(3));
    assert_eq!(run(&["grouphom", "--group", "GL(2,2)", "--dmax", "7"]).status.code(), Some(3));
    assert_eq!(run(&["wbasis", "--gmax", "30"]).status.code(), Some(3));
    assert_eq!(run(&["cotor", "--algebra", "cgl", "--gmax", "6"]).status.code(), Some(2));
    assert_eq!(run(&["adem", "s", "--format", "ascii"]).status.code(), Some(2));
}

#[test]
fn output_and_svg_files() {
    let dir = std::env::temp_dir().join(format!("glstab-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (txt, svg) = (dir.join("chart.txt"), dir.join("chart.svg"));
    let out = run(&["cotor", "--gmax", "8", "--dmax", "4", "--output", txt.to_str().unwrap(), "--svg", svg.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let chart = std::fs::read_to_string(&txt).unwrap();
    assert!(chart.starts_with("Cotor of a1"));
    let svg = std::fs::read_to_string(&svg).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<circle").count(), 9 + 1 + 1 + 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn loaded_algebra_matches_builtin() {
    let dir = std::env::temp_dir().join(format!("glstab-alg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a1.json");
    std::fs::write(&path, gradedhopf::build_a1_star().to_json()).unwrap();
    let loaded = stdout(&["cotor", "--algebra", path.to_str().unwrap(), "--gmax", "9", "--dmax", "5", "--format", "tsv"]);
    let builtin = stdout(&["cotor", "--gmax", "9", "--dmax", "5", "--format", "tsv"]);
    let dims = |s: &str| s.lines().map(|l| l.split('\t').take(3).collect::<Vec<_>>().join("\t")).collect::<Vec<_>>();
    assert_eq!(dims(&loaded), dims(&builtin));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn group_file_input() {
    let dir = std::env::temp_dir().join(format!("glstab-grp-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("q8.txt");
    std::fs::write(&path, "# quaternion group\n(1 2 4 7)(3 6 8 5)\n(1 3 4 8)(2 5 7 6)\n").unwrap();
    let out = stdout(&["grouphom", "--group", "Q8", "--group-file", path.to_str().unwrap(), "--dmax", "4"]);
    let dims: Vec<&str> = out.lines().skip(1).map(|l| l.rsplit('\t').next().unwrap()).collect();
    assert_eq!(dims, ["1", "2", "2", "1", "1"]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_outputs_parse_and_are_versioned() {
    for (args, schema) in [
        (&["cotor", "--gmax", "6", "--dmax", "3", "--format", "json"][..], "cotor-chart/1"),
        (&["cone", "--gmax", "5", "--dmax", "3", "--format", "json"][..], "cone-chart/1"),
        (&["may", "--gmax", "6", "--dmax", "4", "--page", "2", "--format", "json"][..], "ss-page/1"),
        (&["may", "--gmax", "6", "--dmax", "4", "--einfty", "--format", "json"][..], "einfty/1"),
        (&["wbasis", "--format", "json"][..], "wbasis/1"),
        (&["cellss", "--format", "json"][..], "cellss/1"),
        (&["delta"][..], "delta-presentation/1"),
        (&["grouphom", "--format", "json"][..], "group-homology/1"),
        (&["grouphom", "--map", "perm-matrices", "--n", "3", "--dmax", "3", "--format", "json"][..], "induced-map/1"),
        (&["families", "--max-i", "0", "--format", "json"][..], "families/1"),
    ] {
        let v: serde_json::Value = serde_json::from_str(&stdout(args)).unwrap();
        assert_eq!(v["schema"], schema, "{args:?}");
    }
}

#[test]
fn cellss_reports_the_filtration_discrepancy() {
    let out = run(&["cellss"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("# filtration of chi2"));
    assert!(String::from_utf8(out.stderr).unwrap().contains("listed as -6 but computes to -8"));
}

#[test]
fn identical_runs_are_byte_identical() {
    for args in [&["cone", "--gmax", "9", "--dmax", "6", "--format", "json"][..], &["cellss", "--format", "json"][..]] {
        assert_eq!(stdout(args), stdout(args));
    }
}
