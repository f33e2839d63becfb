use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn capbound(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_capbound"))
        .args(args)
        .env("CAPBOUND_FIXTURES", fixtures())
        .output()
        .expect("run capbound");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into(), String::from_utf8_lossy(&out.stderr).into())
}

/// Rows of a TSV table keyed by column name.
fn rows(text: &str) -> Vec<Vec<(String, String)>> {
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split('\t').collect();
    lines.map(|l| header.iter().map(|h| h.to_string()).zip(l.split('\t').map(String::from)).collect()).collect()
}

fn cell<'a>(row: &'a [(String, String)], col: &str) -> &'a str {
    &row.iter().find(|(h, _)| h == col).unwrap().1
}

fn tmp(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("capbound-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p
}

#[test]
fn cycle15_fourth_power() {
    let (code, out, _) = capbound(&["bounds", "--catalog", "cycle:15", "--k", "4"]);
    assert_eq!(code, 0);
    let r = rows(&out);
    assert_eq!(r.len(), 2);
    assert_eq!(cell(&r[0], "method"), "rank");
    assert_eq!(cell(&r[0], "floor"), "7");
    assert_eq!(cell(&r[1], "method"), "ratio");
    assert_eq!(cell(&r[1], "floor"), "3");
}

#[test]
fn srg_from_parameters() {
    let (code, out, _) = capbound(&["bounds", "--srg", "27,10,1,5", "--methods", "rank,H,haemers"]);
    assert_eq!(code, 0);
    let floors: Vec<(String, String)> = rows(&out).iter().map(|r| (cell(r, "method").into(), cell(r, "floor").into())).collect();
    assert_eq!(floors, [("H".into(), "9".into()), ("haemers".into(), "7".into()), ("rank".into(), "7".into())]);
}

#[test]
fn complete_graph_is_trivial() {
    let (code, out, _) = capbound(&["bounds", "--catalog", "complete:5", "--methods", "ratio,rank,H,oracle"]);
    assert_eq!(code, 0);
    for r in rows(&out) {
        assert_eq!(cell(&r, "bound"), "1", "{r:?}");
    }
}

#[test]
fn method_error_is_a_row() {
    let (code, out, _) = capbound(&["bounds", "--catalog", "petersen", "--methods", "haemers", "--k", "2"]);
    assert_eq!(code, 0);
    assert!(cell(&rows(&out)[0], "applicability").starts_with("error:"));
}

#[test]
fn general_polynomial() {
    let (code, out, _) = capbound(&["bounds", "--catalog", "cycle:7", "--methods", "general", "--poly=-1,0,1", "--k", "2"]);
    assert_eq!(code, 0);
    let r = &rows(&out)[0];
    assert_eq!(cell(r, "floor"), "3");
}

#[test]
fn csv_and_timing() {
    let (code, out, _) = capbound(&["bounds", "--catalog", "petersen", "--format", "csv", "--timing", "--witness"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("graph,n,k,method,via,bound,floor,applicability,time_ms,witness"), "{out}");
}

#[test]
fn hypercube_verdict() {
    let (code, out, _) = capbound(&["verdict", "--catalog", "hypercube:3", "--k", "2"]);
    assert_eq!(code, 0);
    let r = &rows(&out)[0];
    assert_eq!(cell(r, "status"), "determined");
    assert_eq!(cell(r, "capacity"), "2");
}

#[test]
fn coxeter_verdicts() {
    let (code, out, _) = capbound(&["verdict", "--fixture", "coxeter", "--k", "1-2"]);
    assert_eq!(code, 0);
    let r = rows(&out);
    assert_eq!(cell(&r[0], "status"), "interval");
    assert_eq!(cell(&r[0], "alpha"), "12");
    assert_eq!(cell(&r[1], "status"), "determined");
    assert_eq!(cell(&r[1], "capacity"), "7");
}

#[test]
fn pentagon_needs_two_levels() {
    let (_, one, _) = capbound(&["verdict", "--catalog", "cycle:5"]);
    assert_eq!(cell(&rows(&one)[0], "status"), "interval");
    let (_, two, _) = capbound(&["verdict", "--catalog", "cycle:5", "--levels", "2"]);
    let r = &rows(&two)[0];
    assert_eq!(cell(r, "status"), "determined");
    assert!((cell(r, "capacity").parse::<f64>().unwrap() - 5f64.sqrt()).abs() < 1e-6);
}

#[test]
fn spectrum_listing() {
    let (code, out, _) = capbound(&["spectrum", "--catalog", "petersen"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# petersen n=10 d=2"));
    assert!(out.contains("3.000000000000000,1\n1.000000000000000,5\n-2.000000000000000,4\n"));
}

#[test]
fn export_matches_fixture() {
    let (code, out, _) = capbound(&["export-theta", "--catalog", "cycle:5"]);
    assert_eq!(code, 0);
    assert_eq!(out, fs::read_to_string(fixtures().join("theta/cycle5-k1.dat-s")).unwrap());
}

#[test]
fn import_with_cage_check() {
    let report = fixtures().join("theta/coxeter-k2.out");
    let (code, out, _) = capbound(&["import-theta", report.to_str().unwrap(), "--fixture", "coxeter", "--k", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("cage\tok"));

    let bogus = tmp("bogus.out", "objValPrimal = 3.0\nobjValDual = 3.0\n");
    let (code, out, _) = capbound(&["import-theta", bogus.to_str().unwrap(), "--catalog", "cycle:5"]);
    assert_eq!(code, 1);
    assert!(out.contains("cage\tviolated"));
}

#[test]
fn import_warns_on_gap() {
    let loose = tmp("loose.out", "objValPrimal = 2.2360\nobjValDual = 2.2362\n");
    let (code, out, _) = capbound(&["import-theta", loose.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("warning\tlow precision"));
}

#[test]
fn malformed_inputs_exit_2() {
    let bad = tmp("bad.out", "garbage\n");
    let (code, _, err) = capbound(&["import-theta", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("objValPrimal"), "{err}");

    let (code, _, err) = capbound(&["bounds", "--catalog", "nope:3"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown catalog graph"));

    let g6 = tmp("bad.g6", "~~~\n");
    let (code, _, _) = capbound(&["bounds", "--g6", g6.to_str().unwrap()]);
    assert_eq!(code, 2);

    let (code, _, _) = capbound(&["bounds"]);
    assert_eq!(code, 2);
}

#[test]
fn srg_table_is_clean() {
    let (code, out, err) = capbound(&["table", "srg", "--max-n", "50"]);
    assert_eq!(code, 0, "{err}");
    assert!(err.contains("0 mismatches"), "{err}");
    assert!(out.lines().count() > 10);
}

#[test]
fn g6_file_with_several_graphs() {
    let p = tmp("two.g6", "Dhc\nIheA@GUAo\n");
    let (code, out, _) = capbound(&["bounds", "--g6", p.to_str().unwrap(), "--methods", "ratio"]);
    assert_eq!(code, 0);
    let r = rows(&out);
    assert_eq!(cell(&r[0], "graph"), "two#1");
    assert_eq!(cell(&r[1], "graph"), "two#2");
    assert_eq!(cell(&r[1], "floor"), "4");
}
