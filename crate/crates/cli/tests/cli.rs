mod common;

use std::fs;

use common::{fixture, manifest, run};
use leibniz2_cli::report::parse_report;

#[test]
fn fixtures_yield_documented_exit_codes() {
    for entry in manifest().fixture {
        let path = fixture(&entry.file);
        let (code, out, err) = run(&["verify", &path]);
        assert_eq!(code, entry.exit, "{}\n{out}{err}", entry.file);
        let shown = if code == 2 { &err } else { &out };
        for needle in &entry.expect {
            assert!(shown.contains(needle.as_str()), "{}: missing {needle:?} in\n{shown}", entry.file);
        }
    }
}

#[test]
fn structured_reports_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for entry in manifest().fixture.iter().filter(|e| e.exit != 2) {
        let out = dir.path().join(format!("{}.json", entry.file));
        let out_s = out.display().to_string();
        let (code, stdout, _) = run(&["verify", &fixture(&entry.file), "--format", "structured", "--out", &out_s]);
        assert_eq!(code, entry.exit);
        assert!(stdout.is_empty());
        let text = fs::read_to_string(&out).unwrap();
        let report = parse_report(&text).unwrap();
        assert_eq!(report.to_json(), text);
        assert_eq!(report.passed, entry.exit == 0);
        let (code, again, _) = run(&["report", &out_s, "--format", "structured"]);
        assert_eq!(code, entry.exit);
        assert_eq!(again, text);
    }
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let path = fixture("bad-crossed.alg");
    let render = || {
        let (_, out, _) = run(&["verify", &path, "--format", "structured"]);
        let mut r = parse_report(&out).unwrap();
        r.elapsed_ms = 0;
        r.to_json()
    };
    assert_eq!(render(), render());
}

#[test]
fn kind_flag_must_match() {
    let (code, _, err) = run(&["verify", &fixture("e4.alg"), "--kind", "sh-leibniz"]);
    assert_eq!(code, 2);
    assert!(err.contains("expected kind sh-leibniz"));
    let (code, _, _) = run(&["verify", &fixture("e4.alg"), "--kind", "crossed-module"]);
    assert_eq!(code, 0);
}

#[test]
fn crossed_dg_crossed_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let dg = dir.path().join("dg.alg").display().to_string();
    let back = dir.path().join("back.alg").display().to_string();
    let (code, _, _) = run(&["convert", &fixture("e4.alg"), "--direction", "crossed-to-dg", "--out", &dg]);
    assert_eq!(code, 0);
    assert_eq!(fs::read_to_string(&dg).unwrap(), fs::read_to_string(fixture("e4-dg.alg")).unwrap());
    let (code, _, _) = run(&["convert", &dg, "--direction", "dg→crossed", "--out", &back]);
    assert_eq!(code, 0);
    assert_eq!(fs::read(&back).unwrap(), fs::read(fixture("e4.alg")).unwrap());
}

#[test]
fn dg_to_crossed_rejects_nonzero_l3() {
    let (code, out, err) = run(&["convert", &fixture("skeletal-l3.alg"), "--direction", "dg-to-crossed"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("l3 nonzero"), "{err}");
}

#[test]
fn zero_quadruple_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let sk = dir.path().join("sk.alg").display().to_string();
    let (code, _, _) = run(&["convert", &fixture("zero-quadruple.alg"), "--direction", "quadruple-to-skeletal", "--out", &sk]);
    assert_eq!(code, 0);
    let (code, out, _) = run(&["verify", &sk, "--kind", "sh-leibniz"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("skeletal: true"));
    let (code, quad, _) = run(&["convert", &sk, "--direction", "skeletal-to-quadruple"]);
    assert_eq!(code, 0);
    assert_eq!(quad, fs::read_to_string(fixture("zero-quadruple.alg")).unwrap());
}

#[test]
fn convert_checks_the_input_kind() {
    let (code, _, err) = run(&["convert", &fixture("e4.alg"), "--direction", "quadruple-to-skeletal"]);
    assert_eq!(code, 2);
    assert!(err.contains("expected a quadruple file"));
}

#[test]
fn construct_omni_writes_a_passing_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("omni.alg").display().to_string();
    let (code, text, _) = run(&["construct", "omni", &fixture("identity-automorphism.alg"), "--out", &out]);
    assert_eq!(code, 0, "{text}");
    let (code, _, _) = run(&["verify", &out, "--kind", "sh-leibniz"]);
    assert_eq!(code, 0);
    let (code, _, err) = run(&["construct", "omni", &fixture("bad-automorphism.alg")]);
    assert_eq!(code, 1);
    assert!(err.contains("chain"), "{err}");
}

#[test]
fn construct_leibniz2_records_l3() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r4.json").display().to_string();
    let (code, text, _) = run(&["construct", "leibniz2", &fixture("tca-r4.alg"), "--out", &out]);
    assert_eq!(code, 0, "{text}");
    let report = parse_report(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(report.passed);
    assert!(report.notes.iter().any(|n| n == "l3(∂1,∂2,∂3) = dx4"));
    assert_eq!(report.command, "construct leibniz2");
}

#[test]
fn construct_lie2_notes_vanishing_l3() {
    for (file, reason) in [("planar-poisson.alg", "dh = 0"), ("planar-poisson-r4.alg", "π has rank at most 2")] {
        let (code, text, _) = run(&["construct", "lie2", &fixture(file)]);
        assert_eq!(code, 0, "{text}");
        assert!(text.contains(&format!("l3 ≡ 0 ({reason})")), "{text}");
        assert!(text.contains("pass l3-kernel"));
    }
    let (code, _, err) = run(&["construct", "lie2", &fixture("not-twisted-poisson.alg")]);
    assert_eq!(code, 1);
    assert!(err.contains("not h-twisted Poisson"), "{err}");
}

#[test]
fn family_and_seed_extend_the_suite() {
    let base = run(&["verify", &fixture("planar-poisson.alg"), "--format", "structured"]).1;
    let extended = run(&[
        "verify",
        &fixture("planar-poisson.alg"),
        "--format",
        "structured",
        "--family",
        &fixture("extra-family.toml"),
        "--seed",
        "11",
    ]);
    assert_eq!(extended.0, 0, "{}", extended.2);
    let (a, b) = (parse_report(&base).unwrap(), parse_report(&extended.1).unwrap());
    assert!(b.checks[1].evaluated > a.checks[1].evaluated);
}

#[test]
fn missing_file_is_an_input_error() {
    let (code, _, err) = run(&["verify", "/nonexistent/file.alg"]);
    assert_eq!(code, 2);
    assert!(err.contains("/nonexistent/file.alg"));
}

#[test]
fn malformed_report_is_positioned() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    fs::write(&path, "{\n  \"format\": 1,\n  oops\n}").unwrap();
    let (code, _, err) = run(&["report", &path.display().to_string()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
}
