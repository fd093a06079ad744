//! End-to-end checks of the command-line interface: output formats, exit
//! statuses, and determinism.

use std::process::{Command, Output};

fn qmaj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmaj"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn enumerate_plain_and_json() {
    let out = qmaj(&["enumerate", "del:1,1,2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "EN\nNE\n");

    let out = qmaj(&["enumerate", "sch:3,6"]);
    assert_eq!(
        stdout(&out),
        "EEENNN\nEENENN\nEENNEN\nENEENN\nENENEN\n"
    );

    let out = qmaj(&["enumerate", "del:1,1,2", "--format", "json"]);
    assert_eq!(stdout(&out).trim(), r#"["EN","NE"]"#);
}

#[test]
fn enumerate_rejects_bad_specs() {
    let out = qmaj(&["enumerate", "del:1,3,1"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("error"));

    let out = qmaj(&["enumerate", "del:1,1"]);
    assert_eq!(exit_code(&out), 2);

    let out = qmaj(&["enumerate", "del:1,1,2", "--format", "csv"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn majdist_modes_and_match() {
    let out = qmaj(&["majdist", "sch:3,6", "--order", "E<D<N"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("brute:  1 + q^2 + q^3 + q^4 + q^6"), "{text}");
    assert!(text.contains("closed: 1 + q^2 + q^3 + q^4 + q^6"), "{text}");
    assert!(text.contains("MATCH"), "{text}");

    let out = qmaj(&["majdist", "sch:1,2", "--order", "N<E<D"]);
    let text = stdout(&out);
    assert!(text.contains("brute:  q"), "{text}");
    assert!(text.contains("MATCH"), "{text}");

    let out = qmaj(&["majdist", "del:2,2,3", "--order", "E<D<N", "--mode", "brute"]);
    assert_eq!(stdout(&out), "1 + 2*q + 2*q^2 + q^3\n");
}

#[test]
fn majdist_json_and_csv() {
    let out = qmaj(&[
        "majdist", "sch:3,6", "--order", "E<D<N", "--format", "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["family"], "sch:3,6");
    assert_eq!(value["order"], "E<D<N");
    assert_eq!(value["match"], true);
    let brute = value["brute"].as_array().unwrap();
    assert!(brute.iter().all(|c| c.is_string()));
    assert_eq!(brute[0], "1");

    let out = qmaj(&[
        "majdist", "sch:3,6", "--order", "E<D<N", "--mode", "brute", "--format", "csv",
    ]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,n,l,order,power,coefficient"));
    assert_eq!(lines.next(), Some("\"sch:3,6\",3,6,E<D<N,0,1"));
    assert_eq!(lines.next(), Some("\"sch:3,6\",3,6,E<D<N,2,1"));

    // CSV holds one distribution; both-mode is rejected.
    let out = qmaj(&[
        "majdist", "sch:3,6", "--order", "E<D<N", "--format", "csv",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn majdist_rejects_bad_order() {
    let out = qmaj(&["majdist", "sch:3,6", "--order", "E<D"]);
    assert_eq!(exit_code(&out), 2);
    let out = qmaj(&["majdist", "sch:3,6", "--order", "E<E<N"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn phi_forward_inverse_and_errors() {
    let out = qmaj(&["phi", "NENNEE", "--order", "E<D<N"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "NENEEE\nk=4 r=0 s=0 case=pivot maj 5 -> 4\n");

    let out = qmaj(&["phi", "NDE", "--order", "E<N<D"]);
    assert_eq!(stdout(&out), "DEE\nk=1 r=0 s=1 case=block maj 2 -> 1\n");

    let out = qmaj(&["phi", "DEE", "--order", "E<N<D", "--direction", "inverse"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).starts_with("NDE\n"));

    let out = qmaj(&["phi", "EEENNN", "--order", "E<D<N"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("not a bad path"), "{}", stderr(&out));

    let out = qmaj(&["phi", "NXE", "--order", "E<D<N"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("position 2"), "{}", stderr(&out));
}

#[test]
fn psi_collisions_output() {
    let out = qmaj(&["psi-collisions", "3", "6"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "EENNEE <= {EENNNE, NENNEE}\n");

    let out = qmaj(&["psi-collisions", "1", "2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "no collisions\n");

    // Frozen by exhaustive search.
    let out = qmaj(&["psi-collisions", "4", "8"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 7);
    assert_eq!(
        text.lines().next(),
        Some("EEENNNEE <= {EEENNNNE, NEENNNEE}")
    );

    let out = qmaj(&["psi-collisions", "1", "4"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_sweep_and_report() {
    let out = qmaj(&["verify", "--n-max", "3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("0 failed"), "{text}");
    assert!(!text.contains("FAIL "), "{text}");

    let out = qmaj(&["verify", "--n-max", "0"]);
    assert_eq!(exit_code(&out), 0);

    let out = qmaj(&["verify", "--n-max", "2", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["summary"]["failed"], 0);
    assert_eq!(report["scope"]["n_max"], 2);
    let first = &report["checks"][0];
    assert!(first["expected"].as_array().unwrap().iter().all(|c| c.is_string()));

    let out = qmaj(&["verify", "--n-max", "2", "--scope", "lemma"]);
    assert_eq!(exit_code(&out), 0);

    let out = qmaj(&["verify", "--scope", "bogus"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn invocations_are_deterministic() {
    for args in [
        vec!["majdist", "bdel:3,5", "--order", "N<D<E", "--format", "json"],
        vec!["verify", "--n-max", "2", "--format", "json"],
        vec!["enumerate", "bdel:3,5"],
        vec!["psi-collisions", "4", "8"],
    ] {
        let first = qmaj(&args);
        let second = qmaj(&args);
        assert_eq!(stdout(&first), stdout(&second), "{args:?}");
        assert_eq!(exit_code(&first), exit_code(&second));
    }
}
