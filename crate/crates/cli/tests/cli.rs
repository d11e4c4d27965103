use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use homyb_cli::files::{CatalogReportFile, ReportFile, StructureFile};

fn homyb(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homyb"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn export(dir: &Path, id: &str) -> PathBuf {
    let path = dir.join(format!("{id}.json"));
    let o = homyb(dir, &["catalog", "export", id, "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    path
}

#[test]
fn catalog_list_has_every_example() {
    let dir = tempfile::tempdir().unwrap();
    let o = homyb(dir.path(), &["catalog", "list"]);
    assert_eq!(code(&o), 0);
    let ids: Vec<String> = stdout(&o).lines().map(|l| l.split_whitespace().next().unwrap().to_string()).collect();
    for id in ["ex2.3", "ex2.5", "ex2.5-verbatim", "ex3.3", "ex3.5", "ex4.3"] {
        assert!(ids.iter().any(|i| i == id), "{id}");
    }
}

#[test]
fn axioms_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    export(d, "ex2.3");
    export(d, "ex2.5-verbatim");
    assert_eq!(code(&homyb(d, &["axioms", "ex2.3.json"])), 0);

    let o = homyb(d, &["axioms", "ex2.5-verbatim.json", "--json", "r.json"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("witness (g, g, x)"), "{}", stdout(&o));
    let r: ReportFile = serde_json::from_str(&std::fs::read_to_string(d.join("r.json")).unwrap()).unwrap();
    assert!(!r.holds);
    let ha2 = r.parts.iter().find(|p| p.check == "HA2 hom-associativity").unwrap();
    assert_eq!(ha2.witnesses[0].tuple, Some(vec![1, 1, 2]));
}

#[test]
fn malformed_shape_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let path = export(d, "ex2.3");
    let mut f: StructureFile = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    f.mult.as_mut().unwrap().pop();
    std::fs::write(d.join("bad.json"), serde_json::to_string(&f).unwrap()).unwrap();
    let o = homyb(d, &["axioms", "bad.json"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("mult: expected 3×3"), "{}", stderr(&o));

    let mut f2: StructureFile = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    f2.alpha[2][2] = "l +* 2".into();
    std::fs::write(d.join("bad2.json"), serde_json::to_string(&f2).unwrap()).unwrap();
    let o = homyb(d, &["axioms", "bad2.json"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("alpha[2][2]"), "{}", stderr(&o));
}

#[test]
fn export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for e in homyb::catalog() {
        let path = export(d, e.id);
        let f = StructureFile::read(&path).unwrap();
        assert_eq!(f.to_structure().unwrap(), e.structure, "{}", e.id);
        let again = serde_json::to_string_pretty(&StructureFile::from_entry(&e)).unwrap() + "\n";
        assert_eq!(std::fs::read_to_string(&path).unwrap(), again);
    }
    assert_eq!(code(&homyb(d, &["axioms", "ex4.3.json"])), 0);
    assert_eq!(code(&homyb(d, &["catalog", "export", "nope"])), 2);
}

#[test]
fn build_and_reload() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    export(d, "ex2.3");
    export(d, "ex3.3");
    export(d, "ex4.3");
    let o = homyb(d, &["build", "ex2.3.json", "--construction", "thm2.1", "--lambda", "lam", "--nu", "nu", "--out", "b.json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let b: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(d.join("b.json")).unwrap()).unwrap();
    let m = b["matrix"].as_array().unwrap();
    assert_eq!(m.len(), 9);
    assert_eq!(m[8][8], "-l^2*lam");
    let o = homyb(d, &["verify", "ex2.3.json", "--operator", "b.json", "--check", "hybe"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));

    let o = homyb(d, &["build", "ex4.3.json", "--construction", "thm4.1", "--u", "0,0,1", "--out", "l.json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stderr(&o).contains("u not α-invariant"));

    let o = homyb(d, &["build", "ex3.3.json", "--construction", "thm2.1"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("construction thm2.1 requires hom-algebra"), "{}", stderr(&o));

    let o = homyb(d, &["build", "ex2.3.json", "--construction", "thm9.9"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn build_at_concrete_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    export(d, "ex2.3");
    let o = homyb(d, &["build", "ex2.3.json", "--construction", "thm2.1", "--lambda", "2", "--nu", "-1/3"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let b: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(b["matrix"][0][0], "-1/3");
    assert_eq!(b["matrix"][8][8], "-2*l^2");
}

#[test]
fn verify_examples() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    export(d, "ex2.3");
    export(d, "ex4.3");
    assert_eq!(code(&homyb(d, &["verify", "ex2.3.json", "--construction", "thm2.1", "--check", "hybe"])), 0);
    assert_eq!(code(&homyb(d, &["verify", "ex2.3.json", "--construction", "thm2.1", "--check", "alpha"])), 0);

    let o = homyb(d, &["verify", "ex2.3.json", "--construction", "cor2.2", "--check", "inverse", "--json", "inv.json"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("not involutive"));
    let r: ReportFile = serde_json::from_str(&std::fs::read_to_string(d.join("inv.json")).unwrap()).unwrap();
    assert!(r.witnesses.iter().any(|w| w.residual == "-1 + l^2"), "{:?}", r.witnesses);
    assert_eq!(r.metadata.construction.as_deref(), Some("cor2.2"));
    assert_eq!(r.metadata.parameters["lambda"], "lam");

    let o = homyb(d, &["verify", "ex2.3.json", "--construction", "thm5.2", "--check", "system", "--json", "s.json"]);
    assert_eq!(code(&o), 0);
    let r: ReportFile = serde_json::from_str(&std::fs::read_to_string(d.join("s.json")).unwrap()).unwrap();
    assert_eq!(r.parts.len(), 4);
    assert!(r.parts.iter().all(|p| p.holds && p.witnesses.is_empty()));

    let o = homyb(d, &["verify", "ex2.3.json", "--construction", "thm2.1", "--check", "system"]);
    assert_eq!(code(&o), 2);
    let o = homyb(d, &["verify", "ex2.3.json", "--check", "hybe"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_lie_checks() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    export(d, "ex4.3");
    let chybe = |m: &str, n: &str| code(&homyb(d, &["verify", "ex4.3.json", "--check", "chybe", "--u", "0,0,1", "--m", m, "--n", n]));
    assert_eq!(chybe("2", "1"), 0);
    assert_eq!(chybe("-1", "-2"), 0);

    let o = homyb(d, &["verify", "ex4.3.json", "--check", "chybe", "--r", "0,1,0,0,0,0,0,0,0"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("witness e1 ⊗ e1 ⊗ e2: -1"), "{}", stdout(&o));

    let o = homyb(d, &["verify", "ex4.3.json", "--construction", "thm4.1", "--u", "0,0,1", "--check", "hybe"]);
    assert_eq!(code(&o), 1);
    let o = homyb(d, &["verify", "ex4.3.json", "--construction", "thm4.1", "--u", "1,0,0", "--check", "hybe"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("not central"));
}

#[test]
fn verify_all_json_lists_table_mismatches() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = homyb(d, &["catalog", "verify-all", "--json", "out.json"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let r: CatalogReportFile = serde_json::from_str(&std::fs::read_to_string(d.join("out.json")).unwrap()).unwrap();
    assert!(r.holds);
    let ex33 = r.entries.iter().find(|e| e.id == "ex3.3").unwrap();
    assert!(ex33.notes.iter().any(|n| n.contains("table mismatch B(a2⊗a)")), "{:?}", ex33.notes);
    let verbatim = r.entries.iter().find(|e| e.id == "ex2.5-verbatim").unwrap();
    assert_eq!(verbatim.status, "expected-fail");
    assert!(!verbatim.checks[0].report.holds);
}
