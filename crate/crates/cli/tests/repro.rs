//! Every golden file under `repro/` regenerates byte for byte from its
//! config.

use std::path::{Path, PathBuf};
use std::process::Command;

fn repro_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../repro")
}

fn field<'a>(cfg: &'a str, key: &str) -> &'a str {
    cfg.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(" = ")))
        .unwrap_or_else(|| panic!("config lacks `{key}`"))
}

#[test]
fn golden_files_regenerate() {
    let mut configs: Vec<PathBuf> = std::fs::read_dir(repro_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "cfg"))
        .collect();
    configs.sort();
    assert!(configs.len() >= 20);
    let mut covered = Vec::new();
    for cfg_path in &configs {
        let cfg = std::fs::read_to_string(cfg_path).unwrap();
        let (output, args) = (field(&cfg, "output"), field(&cfg, "args"));
        let out = Command::new(env!("CARGO_BIN_EXE_glstab")).args(args.split_whitespace()).output().unwrap();
        assert!(out.status.success(), "{}: {}", cfg_path.display(), String::from_utf8_lossy(&out.stderr));
        let golden = std::fs::read(repro_dir().join(output)).unwrap();
        assert!(out.stdout == golden, "{} no longer matches {output}", cfg_path.display());
        covered.push(output.trim_start_matches("golden/").to_string());
    }
    let mut goldens: Vec<String> = std::fs::read_dir(repro_dir().join("golden"))
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    goldens.sort();
    covered.sort();
    assert_eq!(goldens, covered, "every golden file needs a config");
}
