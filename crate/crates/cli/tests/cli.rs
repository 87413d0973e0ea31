use std::path::PathBuf;
use std::process::{Command, Output};

use edfun::rational::{format_rational, parse_rational, ratio};
use edfun::{Crg, Rational};

fn edfun(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edfun"))
        .args(args)
        .env_remove("EDL_MAX_K")
        .output()
        .expect("run edfun")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

/// Runs a command expected to succeed and returns its stdout.
fn ok(args: &[&str]) -> String {
    let out = edfun(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}\n{}",
        String::from_utf8_lossy(&out.stderr),
        stdout(&out)
    );
    stdout(&out)
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    let prefix = format!("{key}: ");
    text.lines()
        .find_map(|l| l.strip_prefix(prefix.as_str()))
        .unwrap_or_else(|| panic!("no `{key}` in\n{text}"))
}

/// Rows of a plain CSV document (header first).
fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines().map(|l| l.split(',').map(str::to_string).collect()).collect()
}

fn column(rows: &[Vec<String>], name: &str) -> usize {
    rows[0].iter().position(|h| h == name).unwrap_or_else(|| panic!("no column {name}"))
}

#[test]
fn gval_examples() {
    let out = ok(&["gval", "WWW;ggg", "--p", "1/2"]);
    assert_eq!(field(&out, "g"), "1/6");
    assert_eq!(field(&out, "x"), "1/3 1/3 1/3");
    assert_eq!(field(&ok(&["gval", "W;", "--p", "1/3"]), "g"), "1/3");
    let k3 = ok(&["gval", "WWWWW;bggggggbgg", "--p", "3/5"]);
    assert_eq!(field(&k3, "g"), "3/17");
    assert!(k3.contains("[components]"));
}

#[test]
fn gval_on_a_preset_name() {
    assert_eq!(field(&ok(&["gval", "K4", "--p", "1/4"]), "g"), "3/8");
}

#[test]
fn fval_is_the_uniform_objective() {
    let out = ok(&["fval", "WWW;ggg", "--p", "1/2"]);
    assert_eq!(field(&out, "f"), "1/6");
    assert_eq!(field(&ok(&["fval", "BB;w", "--p", "1/4"]), "f"), "1/2");
}

#[test]
fn decimal_and_out_of_range_probabilities_are_rejected() {
    for bad in ["0.5", "1/1", "0/3", "3/2", "abc"] {
        let out = edfun(&["gval", "W;", "--p", bad]);
        assert_eq!(out.status.code(), Some(2), "--p {bad} should be rejected");
    }
}

#[test]
fn embed_examples() {
    let yes = ok(&["embed", "H9", "WWB;ggg"]);
    assert_eq!(field(&yes, "result"), "EMBEDS");
    assert!(yes.contains("[classes]"));
    assert_eq!(field(&ok(&["embed", "H9", "WWWWW;bggggggbgg"]), "result"), "NOT EMBEDS");
    assert_eq!(field(&ok(&["embed", "K2", "B;"]), "result"), "EMBEDS");
    assert_eq!(field(&ok(&["embed", "2:0-1", "W;"]), "result"), "NOT EMBEDS");
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn embed_reads_a_graph_file() {
    let path = temp_file("c5.json", r#"{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[0,4]]}"#);
    let out = ok(&["embed", "--input", path.to_str().unwrap(), "WW;g"]);
    assert_eq!(field(&out, "result"), "NOT EMBEDS");
    let out = ok(&["embed", "--input", path.to_str().unwrap(), "WWW;ggg"]);
    assert_eq!(field(&out, "result"), "EMBEDS");
}

#[test]
fn family_check_against_h9() {
    let out = ok(&["family-check", "WWB;ggg", "--forb", "H9"]);
    assert_eq!(field(&out, "result"), "NOT IN FAMILY");
    let out = ok(&["family-check", "K3", "--forb", "H9"]);
    assert_eq!(field(&out, "result"), "IN FAMILY");
}

#[test]
fn family_file_with_one_graph_per_line() {
    // A white vertex admits every independent set and a black one every
    // clique, so no CRG avoids both K3 and its complement.
    let path = temp_file("family.txt", "# triangle and independent triple\nK3\n3:\n");
    for k in ["W;", "B;", "WB;g", "WW;b"] {
        let out = ok(&["family-check", k, "--input", path.to_str().unwrap()]);
        assert_eq!(field(&out, "result"), "NOT IN FAMILY", "{k}");
    }
}

#[test]
fn family_file_as_json_array() {
    let path = temp_file("family.json", r#"[{"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}]"#);
    let out = ok(&["family-check", "WWW;ggg", "--input", path.to_str().unwrap()]);
    assert_eq!(field(&out, "result"), "IN FAMILY");
    let out = ok(&["family-check", "WWWW;gggggg", "--input", path.to_str().unwrap()]);
    assert_eq!(field(&out, "result"), "NOT IN FAMILY");
}

fn assert_envelope(out: &str, expected: impl Fn(&Rational) -> Rational) {
    let rows = csv_rows(out);
    assert_eq!(rows[0], ["p_exact", "p_float", "value_exact", "value_float", "argmin_crg"]);
    for row in &rows[1..] {
        let p = parse_rational(&row[0]).unwrap();
        assert_eq!(row[2], format_rational(&expected(&p)), "at p = {}", row[0]);
        let float: f64 = row[3].parse().unwrap();
        assert!((float - edfun::rational::to_f64(&expected(&p))).abs() < 1e-12);
    }
}

#[test]
fn edf_of_forbidden_triangle_is_p_over_two() {
    let out = ok(&["edf", "--forb", "K3", "--max-k", "3", "--out", "csv"]);
    assert_eq!(csv_rows(&out).len(), 64);
    assert_envelope(&out, |p| p / Rational::from_integer(2.into()));
}

#[test]
fn edf_of_forbidden_empty_triple_is_q_over_two() {
    let out = ok(&["edf", "--forb", "E3", "--max-k", "3", "--grid", "16"]);
    assert_envelope(&out, |p| (ratio(1, 1) - p) / Rational::from_integer(2.into()));
}

#[test]
fn edf_json_mirrors_csv() {
    let json = ok(&["edf", "--forb", "K3", "--max-k", "3", "--grid", "4", "--out", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let rows = v["envelope"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[1]["p_exact"], "1/2");
    assert_eq!(rows[1]["value_exact"], "1/4");
}

#[test]
fn output_is_identical_across_worker_counts() {
    let args = |w: &'static str| ["--workers", w, "edf", "--forb", "H9", "--max-k", "4", "--grid", "32"];
    let one = ok(&args("1"));
    assert_eq!(one, ok(&args("3")));
    assert_eq!(one, ok(&args("8")));
    let enum_args = |w: &'static str| ["--workers", w, "enum", "--max-k", "4"];
    assert_eq!(ok(&enum_args("1")), ok(&enum_args("4")));
}

#[test]
fn printed_crgs_reparse_to_the_same_canonical_form() {
    let out = ok(&["enum", "--max-k", "3"]);
    let rows = csv_rows(&out);
    let crg_col = column(&rows, "crg");
    let listed: Vec<&str> = rows[1..].iter().map(|r| r[crg_col].as_str()).collect();
    assert_eq!(listed.len(), edfun::enumerate::enumerate_crgs(3, None).unwrap().len());
    for text in &listed {
        let k: Crg = text.parse().unwrap();
        assert_eq!(k.to_string(), *text);
        assert_eq!(k.canonical().unwrap().to_string(), *text);
    }
    let env = ok(&["edf", "--forb", "H9", "--max-k", "5", "--grid", "8"]);
    let rows = csv_rows(&env);
    let arg = column(&rows, "argmin_crg");
    for row in &rows[1..] {
        let k: Crg = row[arg].parse().unwrap();
        assert_eq!(k.canonical().unwrap().to_string(), row[arg]);
    }
}

#[test]
fn enum_restricted_to_a_side_and_family() {
    let all = csv_rows(&ok(&["enum", "--max-k", "2"]));
    assert_eq!(all.len() - 1, 11);
    let half = csv_rows(&ok(&["enum", "--max-k", "2", "--p", "1/2"]));
    assert_eq!(half.len() - 1, 5);
    let family = csv_rows(&ok(&["enum", "--max-k", "3", "--forb", "K3"]));
    for row in &family[1..] {
        let k: Crg = row[0].parse().unwrap();
        assert!(edfun::in_family(&k, &edfun::ForbFamily::single(edfun::Graph::complete(3).unwrap())).unwrap());
    }
}

#[test]
fn min_g_for_h9_at_seven_tenths() {
    let out = ok(&["min-g", "--forb", "H9", "--max-k", "5", "--p", "7/10"]);
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1][2], "3/20");
    assert_eq!(rows[1][4], "BB;g");
}

#[test]
fn pcore_reports() {
    let out = ok(&["pcore", "WWWWW;bggggggbgg", "--p", "3/5"]);
    assert_eq!(field(&out, "p_core"), "true");
    assert_eq!(field(&out, "violations"), "0");
    let out = ok(&["pcore", "WW;w", "--p", "1/3"]);
    assert_eq!(field(&out, "p_core"), "false");
}

#[test]
fn maxpoint_reports_exact_surd() {
    let out = ok(&["maxpoint", "h9"]);
    assert_eq!(field(&out, "p_star_exact"), "(1+sqrt(17))/8");
    assert_eq!(field(&out, "d_star_exact"), "(7-sqrt(17))/16");
    assert_eq!(field(&out, "envelope"), "min{p/3, p/(1+4p), (1-p)/2}");
    let out = ok(&["maxpoint", "1,0,0,3"]);
    assert_eq!(field(&out, "p_star_exact"), "1/1");
    assert_eq!(field(&out, "d_star_exact"), "1/3");
    let out = ok(&["maxpoint", "split(4,3)", "--out", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["p_star_exact"], "2/5");
    assert_eq!(v["flat"], false);
}

#[test]
fn maxpoint_rejects_a_convex_envelope() {
    // p/(2-p) is convex on [0, 1].
    let out = edfun(&["maxpoint", "1,0,-1,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_split_examples() {
    let out = ok(&["verify-split", "--alpha", "3", "--omega", "2", "--max-k", "4"]);
    assert_eq!(field(&out, "result"), "PASS");
    assert_eq!(field(&out, "envelope"), "min{p, (1-p)/2}");
    let out = ok(&["verify-split", "--alpha", "2", "--omega", "2", "--max-k", "4"]);
    assert_eq!(field(&out, "envelope"), "min{p, 1-p}");
    let out = ok(&["verify-split", "--alpha", "4", "--omega", "3", "--max-k", "4"]);
    assert_eq!((field(&out, "p_star"), field(&out, "d_star")), ("2/5", "1/5"));
}

#[test]
fn verify_h9_default_run_passes() {
    let out = ok(&["verify-h9"]);
    assert_eq!(field(&out, "result"), "PASS");
    assert_eq!(field(&out, "gap_points"), "0");
    let p: f64 = field(&out, "p_star").parse().unwrap();
    let d: f64 = field(&out, "d_star").parse().unwrap();
    assert!((p - 0.640388).abs() < 1e-6 && (d - 0.179806).abs() < 1e-6);
}

#[test]
fn verify_h9_with_small_enumeration_reports_the_gap() {
    let out = ok(&["verify-h9", "--max-k", "3"]);
    assert_ne!(field(&out, "gap_points"), "0");
    assert!(field(&out, "gap_note").contains("p/(1+4p)"));
    assert!(out.lines().any(|l| l.ends_with(",GAP")));
}

#[test]
fn verify_h9_at_one_half() {
    let out = ok(&["verify-h9", "--grid", "2"]);
    assert!(out.lines().any(|l| l.starts_with("1/2,0.5,1/6,1/6,")));
}

#[test]
fn environment_cap_is_enforced() {
    let out = Command::new(env!("CARGO_BIN_EXE_edfun"))
        .args(["edf", "--forb", "K3", "--max-k", "4", "--grid", "4"])
        .env("EDL_MAX_K", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap of 3"));
}
