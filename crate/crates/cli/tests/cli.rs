use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_difflie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(name: &str) -> String {
    fixture(name).to_str().unwrap().to_string()
}

#[test]
fn validate_passes_on_inversion() {
    let o = run(&["validate", &path("aff1_minusid.toml")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2 checks, 0 failed"));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn validate_reports_identity_residual() {
    let o = run(&["validate", &path("aff1_id.toml")]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("NotDifferenceOp"), "{out}");
    assert!(out.contains("residual 2e2 at (e1,e2)"), "{out}");
}

#[test]
fn zero_denominator_is_an_input_error() {
    let o = run(&["validate", &path("bad_rational.toml")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("zero denominator"));
}

#[test]
fn toml_errors_carry_line_and_column() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("broken.toml");
    std::fs::write(&f, "[algebras.a]\nbasis = [\"e1\"\n").unwrap();
    let o = run(&["validate", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2, column"), "{}", stderr(&o));
}

#[test]
fn unknown_keys_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("extra.toml");
    std::fs::write(&f, "[algebras.a]\nbasis = [\"e1\"]\ncolour = 1\n").unwrap();
    let o = run(&["validate", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown field `colour`"));
}

#[test]
fn missing_file_is_an_input_error() {
    let o = run(&["validate", "/nonexistent/problem.toml"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unknown_operator_name_is_an_input_error() {
    let o = run(&[
        "cohomology",
        &path("aff1_minusid.toml"),
        "--theory",
        "regular",
        "--operator",
        "nope",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no operator named"));
}

#[test]
fn ambiguous_choice_needs_a_flag() {
    let o = run(&["extend", &path("aff1_zero.toml")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--representation"));
}

#[test]
fn regular_cohomology_of_abelian_line() {
    let o = run(&["cohomology", &path("abelian1.toml"), "--theory", "regular"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("H1=1 H2=1"));
}

#[test]
fn reldiff_les_on_inversion_is_exact() {
    let o = run(&[
        "cohomology",
        &path("aff1_minusid.toml"),
        "--theory",
        "reldiff",
        "--les",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("exact at all 6 nodes"), "{out}");
    assert!(!out.contains("NOT EXACT"));
}

#[test]
fn invalid_operator_blocks_cohomology() {
    let o = run(&["cohomology", &path("aff1_id.toml"), "--theory", "operator"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn json_mirror_matches_table() {
    let o = run(&[
        "cohomology",
        &path("sl2.toml"),
        "--theory",
        "operator",
        "--max-degree",
        "3",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let dims: Vec<u64> = v["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["dim"].as_u64().unwrap())
        .collect();
    // D = 0 leaves the adjoint action. The complex starts in degree 1, so H1
    // counts every derivation (all inner, 3 of them); Whitehead kills H2, H3.
    assert_eq!(dims, vec![3, 0, 0]);
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "deform",
        &path("aff1_zero.toml"),
        "--cochain",
        "shift",
        "--against",
        "shift_gauged",
        "--json",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn deform_finds_gauge_witness() {
    let o = run(&[
        "deform",
        &path("aff1_zero.toml"),
        "--cochain",
        "shift",
        "--against",
        "shift_gauged",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("cochain shift: cocycle"));
    assert!(
        out.contains("shift equivalent to shift_gauged: yes (N="),
        "{out}"
    );
}

#[test]
fn deform_separates_distinct_classes() {
    let o = run(&[
        "deform",
        &path("aff1_zero.toml"),
        "--cochain",
        "shift",
        "--against",
        "tilt",
    ]);
    assert!(stdout(&o).contains("shift equivalent to tilt: no"));
}

#[test]
fn deform_flags_non_cocycle() {
    let o = run(&["deform", &path("aff1_zero.toml"), "--cochain", "broken"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("NotCocycle"));
}

#[test]
fn deform_representatives_parse_back() {
    let o = run(&["deform", &path("aff1_minusid.toml"), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["h2_dim"], 2);
    let reps = v["representatives"].as_object().unwrap();
    assert_eq!(reps.len(), 2);

    // Paste the reported classes into the input and ask whether they are cocycles.
    let mut src = std::fs::read_to_string(fixture("aff1_minusid.toml")).unwrap();
    src.push_str(
        &stdout(&run(&["deform", &path("aff1_minusid.toml")]))
            .lines()
            .filter(|l| l.starts_with("  "))
            .map(|l| format!("{}\n", &l[2..]))
            .collect::<String>(),
    );
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("with_classes.toml");
    std::fs::write(&f, src).unwrap();
    for name in reps.keys() {
        let o = run(&["deform", f.to_str().unwrap(), "--cochain", name]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert!(stdout(&o).contains(&format!("cochain {name}: cocycle")));
    }
}

#[test]
fn extend_roundtrip_on_semidirect() {
    let o = run(&["extend", &path("semidirect.toml")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.contains("cocycle (0,0); isomorphic: yes (N=0)"),
        "{out}"
    );
    assert!(out.contains("roundtrip through the canonical section: ok"));
}

#[test]
fn extend_detects_coboundary_and_obstruction() {
    let o = run(&["extend", &path("aff1_zero.toml"), "--cocycle", "exact"]);
    assert!(
        stdout(&o).contains("isomorphic: yes (N=[[0, 1]])"),
        "{}",
        stdout(&o)
    );
    let o = run(&["extend", &path("aff1_zero.toml"), "--cocycle", "twisted"]);
    assert!(stdout(&o).contains("isomorphic: no"));
}

#[test]
fn integrate_heisenberg_inversion() {
    let o = run(&[
        "integrate",
        &path("h3_minusid.toml"),
        "--homomorphism",
        "scale",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.contains("group law verified on 125 sample pairs; \u{1d49f} = inversion"),
        "{out}"
    );
    assert!(out.contains("equals D: yes"));
    assert!(out.contains("functoriality along scale (inv -> inv): passed"));
}

#[test]
fn integrate_uses_named_grid() {
    let o = run(&["integrate", &path("h3_minusid.toml"), "--grid", "coarse"]);
    assert!(stdout(&o).contains("verified on 27 sample pairs"));
}

#[test]
fn integrate_rejects_solvable_non_nilpotent() {
    let o = run(&["integrate", &path("aff1_minusid.toml")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not nilpotent"));
}

#[test]
fn bch_order_override_too_small_is_reported() {
    let o = Command::new(env!("CARGO_BIN_EXE_difflie"))
        .args(["integrate", &path("h3_minusid.toml")])
        .env("DIFFLIE_BCH_ORDER", "1")
        .output()
        .unwrap();
    assert_eq!(
        o.status.code(),
        Some(1),
        "{}",
        String::from_utf8_lossy(&o.stdout)
    );
}
