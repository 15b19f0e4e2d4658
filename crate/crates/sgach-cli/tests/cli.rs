//! End-to-end tests of the `sgach` binary: output records, exit codes, and
//! the witness round-trip guarantee (every `value:` re-verifies through
//! `verify-coloring --complete`).

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sgach"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

/// Parses `key: value` stdout records into a map (last write wins; fine
/// for records that appear once).
fn records(out: &Output) -> HashMap<String, String> {
    stdout(out)
        .lines()
        .filter_map(|l| l.split_once(": ").map(|(k, v)| (k.into(), v.into())))
        .collect()
}

fn tempdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sgach-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("create temp dir");
    dir
}

#[test]
fn compute_reports_the_documented_values() {
    let out = run(&[
        "compute",
        "--param",
        "psi2",
        fixture("c5_pendant.sg").to_str().unwrap(),
    ]);
    assert_eq!(
        code(&out),
        0,
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(stdout(&out), "param: psi2\nvalue: 3\n");

    let out = run(&[
        "compute",
        "--param",
        "psis",
        fixture("c6_chords.sg").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(records(&out)["value"], "4");
}

#[test]
fn clique_answers_with_the_exit_code() {
    let yes = run(&[
        "clique",
        "--mode",
        "signed",
        fixture("uc4.sg").to_str().unwrap(),
    ]);
    assert_eq!(code(&yes), 0);
    assert_eq!(stdout(&yes), "clique: true\n");

    let no = run(&[
        "clique",
        "--mode",
        "signed",
        fixture("up3.sg").to_str().unwrap(),
    ]);
    assert_eq!(code(&no), 1);
    assert_eq!(stdout(&no), "clique: false\n");

    let yes2ec = run(&[
        "clique",
        "--mode",
        "2ec",
        fixture("up3.sg").to_str().unwrap(),
    ]);
    assert_eq!(code(&yes2ec), 0);
}

#[test]
fn equiv_finds_a_switching_or_says_no() {
    let out = run(&[
        "equiv",
        fixture("up3.sg").to_str().unwrap(),
        fixture("p3pos.sg").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let recs = records(&out);
    assert_eq!(recs["equivalent"], "true");
    assert!(recs.contains_key("switch"));

    let no = run(&[
        "equiv",
        fixture("uc4.sg").to_str().unwrap(),
        fixture("c4pos.sg").to_str().unwrap(),
    ]);
    assert_eq!(code(&no), 1);
    assert_eq!(records(&no)["equivalent"], "false");

    let mismatch = run(&[
        "equiv",
        fixture("up3.sg").to_str().unwrap(),
        fixture("c4pos.sg").to_str().unwrap(),
    ]);
    assert_eq!(code(&mismatch), 1);
    assert_eq!(records(&mismatch)["note"], "underlying graphs differ");
}

#[test]
fn identifiable_resolves_names_and_ids() {
    let g = fixture("c4pos.sg");
    let g = g.to_str().unwrap();

    let by_name = run(&["identifiable", "--mode", "2ec", g, "a", "c"]);
    assert_eq!(code(&by_name), 0);
    assert_eq!(records(&by_name)["identifiable"], "true");

    let by_id = run(&["identifiable", "--mode", "2ec", g, "0", "2"]);
    assert_eq!(stdout(&by_id), stdout(&by_name));

    let signed = run(&["identifiable", "--mode", "signed", g, "a", "c"]);
    assert_eq!(code(&signed), 0);
    assert!(records(&signed).contains_key("switch"));

    let antipodal = run(&[
        "identifiable",
        "--mode",
        "signed",
        fixture("uc4.sg").to_str().unwrap(),
        "a",
        "c",
    ]);
    assert_eq!(code(&antipodal), 1);
    assert_eq!(records(&antipodal)["identifiable"], "false");
}

#[test]
fn verify_coloring_distinguishes_the_modes() {
    let g = fixture("up3.sg");
    let col = fixture("up3_identity.col");
    let (g, col) = (g.to_str().unwrap(), col.to_str().unwrap());

    let ok = run(&["verify-coloring", "--mode", "2ec", "--complete", g, col]);
    assert_eq!(code(&ok), 0);
    assert_eq!(records(&ok)["verified"], "true");

    // the identity coloring is complete as a 2ec coloring but the graph is
    // not a signed clique, so the signed check must say no
    let not_signed = run(&["verify-coloring", "--mode", "signed", "--complete", g, col]);
    assert_eq!(code(&not_signed), 1);
    assert_eq!(records(&not_signed)["verified"], "false");
    assert!(records(&not_signed).contains_key("violation"));

    // without --complete the signed check only asks for validity
    let valid = run(&["verify-coloring", "--mode", "signed", g, col]);
    assert_eq!(code(&valid), 0);
}

/// Every `value:` printed by compute re-verifies through
/// `verify-coloring --complete` in the announced mode, using the emitted
/// signature file when one is written and the input graph otherwise.
#[test]
fn every_witness_reverifies_completely() {
    let dir = tempdir("witness");
    for (param, input) in [
        ("psi", "c5_pendant.sg"),
        ("psi2", "c5_pendant.sg"),
        ("chi2", "c5_pendant.sg"),
        ("psis", "c6_chords.sg"),
        ("chis", "c6_chords.sg"),
        ("psi-max-class", "c6_chords.sg"),
        ("psi-min-class", "c6_chords.sg"),
        ("psi-max", "up3.sg"),
        ("psi-min", "up3.sg"),
        ("psi-max-signed", "uc4.sg"),
        ("psi-min-signed", "uc4.sg"),
    ] {
        let witness = dir.join(format!("{param}.col"));
        let out = run(&[
            "compute",
            "--param",
            param,
            "--witness",
            witness.to_str().unwrap(),
            fixture(input).to_str().unwrap(),
        ]);
        assert_eq!(
            code(&out),
            0,
            "{param}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let recs = records(&out);
        let value = &recs["value"];
        let mode = &recs["verify-mode"];
        assert_eq!(recs["witness-file"], witness.to_str().unwrap());
        let graph_for_check = recs
            .get("witness-signature-file")
            .cloned()
            .unwrap_or_else(|| fixture(input).to_str().unwrap().to_string());

        let check = run(&[
            "verify-coloring",
            "--mode",
            mode,
            "--complete",
            &graph_for_check,
            witness.to_str().unwrap(),
        ]);
        assert_eq!(
            code(&check),
            0,
            "{param} witness failed to re-verify: {}{}",
            stdout(&check),
            String::from_utf8_lossy(&check.stderr)
        );
        let check_recs = records(&check);
        assert_eq!(check_recs["verified"], "true", "{param}");
        assert_eq!(
            &check_recs["colors"], value,
            "{param}: color count is the value"
        );
    }
}

#[test]
fn output_is_identical_for_every_thread_count() {
    for args in [
        vec![
            "compute",
            "--param",
            "psis",
            fixture("c6_chords.sg").to_str().unwrap(),
        ],
        vec!["twins", fixture("double_uc4.sg").to_str().unwrap()],
        vec![
            "clique",
            "--mode",
            "2ec",
            fixture("bowtie.sg").to_str().unwrap(),
        ],
    ] {
        let mut one = vec!["--threads", "1"];
        one.extend(&args);
        let mut four = vec!["--threads", "4"];
        four.extend(&args);
        let (a, b) = (run(&one), run(&four));
        assert_eq!(a.stdout, b.stdout, "args: {args:?}");
        assert_eq!(code(&a), code(&b));
    }
}

#[test]
fn twins_lists_pairs_and_classes() {
    let out = run(&["twins", fixture("c4pos.sg").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("twin-pair-2ec: a c"));
    assert!(text.contains("twin-pair-2ec: b d"));
    assert!(text.contains("twin-pair-signed: a c"));
    assert!(text.contains("rc-class: a c"));
    assert!(text.contains("rc-class: b d"));
}

#[test]
fn reduce3p_emits_the_gadget_and_its_numbers() {
    let dir = tempdir("reduce3p");
    let out_path = dir.join("h.sg");
    let out = run(&[
        "reduce3p",
        "--override-params",
        "2,2,3",
        "--out",
        out_path.to_str().unwrap(),
        fixture("inst_444.3p").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let recs = records(&out);
    assert_eq!(recs["vertices"], "64");
    assert_eq!(recs["edges"], "424");
    assert_eq!(recs["k"], "49");
    assert_eq!(recs["k-prime"], "50");

    let text = std::fs::read_to_string(&out_path).expect("gadget file written");
    assert!(text.starts_with("# q=2 r=2 p=3 connected=false\n"));

    // the emitted file must parse back: feed it through another verb
    let reparse = run(&[
        "equiv",
        out_path.to_str().unwrap(),
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&reparse), 0);

    let connected = run(&[
        "reduce3p",
        "--connected",
        "--override-params",
        "2,2,3",
        "--out",
        dir.join("hc.sg").to_str().unwrap(),
        fixture("inst_444.3p").to_str().unwrap(),
    ]);
    assert_eq!(records(&connected)["edges"], "427");
}

#[test]
fn reduce_apex_adds_a_universal_positive_vertex() {
    let dir = tempdir("apex");
    let out_path = dir.join("apex.sg");
    let out = run(&[
        "reduce-apex",
        "--out",
        out_path.to_str().unwrap(),
        fixture("up3.sg").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let recs = records(&out);
    assert_eq!(recs["vertices"], "4");
    assert_eq!(recs["apex"], "z");

    // signs are dropped, so this is the all-positive path plus apex; its
    // signed achromatic number is psi(P3) + 1 = 3
    let psis = run(&["compute", "--param", "psis", out_path.to_str().unwrap()]);
    assert_eq!(records(&psis)["value"], "3");
}

#[test]
fn usage_errors_exit_2() {
    let unknown_param = run(&[
        "compute",
        "--param",
        "bogus",
        fixture("up3.sg").to_str().unwrap(),
    ]);
    assert_eq!(code(&unknown_param), 2);

    let bad_override = run(&[
        "reduce3p",
        "--override-params",
        "2,2",
        "--out",
        "/tmp/never-written.sg",
        fixture("inst_444.3p").to_str().unwrap(),
    ]);
    assert_eq!(code(&bad_override), 2);

    let same_vertex = run(&[
        "identifiable",
        "--mode",
        "2ec",
        fixture("up3.sg").to_str().unwrap(),
        "a",
        "a",
    ]);
    assert_eq!(code(&same_vertex), 2);

    let unknown_verb = run(&["frobnicate"]);
    assert_eq!(code(&unknown_verb), 2);

    let bad_mode = run(&[
        "clique",
        "--mode",
        "weird",
        fixture("up3.sg").to_str().unwrap(),
    ]);
    assert_eq!(code(&bad_mode), 2);
}

#[test]
fn size_guard_exits_3() {
    let out = bin()
        .env("SGACH_MAX_N", "10")
        .args([
            "reduce3p",
            "--override-params",
            "2,2,3",
            "--out",
            "/tmp/never-written-guard.sg",
            fixture("inst_444.3p").to_str().unwrap(),
        ])
        .output()
        .expect("binary runs");
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("size guard exceeded"));

    let solver = bin()
        .env("SGACH_MAX_N", "2")
        .args([
            "compute",
            "--param",
            "psi2",
            fixture("c5_pendant.sg").to_str().unwrap(),
        ])
        .output()
        .expect("binary runs");
    assert_eq!(code(&solver), 3);
}

#[test]
fn malformed_input_exits_4() {
    let missing = run(&[
        "compute",
        "--param",
        "psi2",
        "/tmp/no-such-file-anywhere.sg",
    ]);
    assert_eq!(code(&missing), 4);

    let dir = tempdir("malformed");
    let bad = dir.join("bad.sg");
    std::fs::write(&bad, "signed 2\ne a b *\n").unwrap();
    let parse = run(&["compute", "--param", "psi2", bad.to_str().unwrap()]);
    assert_eq!(code(&parse), 4);

    let unknown_vertex = run(&[
        "identifiable",
        "--mode",
        "2ec",
        fixture("up3.sg").to_str().unwrap(),
        "a",
        "zz",
    ]);
    assert_eq!(code(&unknown_vertex), 4);

    let bad_instance = dir.join("bad.3p");
    std::fs::write(&bad_instance, "3p 1 12\na 4\n").unwrap();
    let inst = run(&[
        "reduce3p",
        "--override-params",
        "2,2,3",
        "--out",
        dir.join("h.sg").to_str().unwrap(),
        bad_instance.to_str().unwrap(),
    ]);
    assert_eq!(code(&inst), 4);
}
