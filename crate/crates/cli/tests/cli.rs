use std::process::{Command, Output};

fn fibcheb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibcheb"))
        .args(args)
        .env_remove("FIBCHEB_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_prints_exact_rational() {
    let o = fibcheb(&["eval", "--a", "-1", "--b", "2", "--c", "3", "--z", "-4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "11/3\n");

    let o = fibcheb(&["eval", "--a", "-2", "--b", "1/2", "--c", "3/2", "--z", "5"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn table_csv() {
    let o = fibcheb(&["table", "--direction", "f-in-u", "--jmax", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("j,m,target,coefficient\n"));
    assert!(out.lines().any(|l| l == "3,1,U_1,5/4"));
    assert!(out.lines().any(|l| l == "3,0,U_3,1/8"));
}

#[test]
fn table_json_carries_degrees() {
    let o = fibcheb(&["table", "--direction", "t-in-f", "--j", "2", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows[0]["target"], "F_3");
    assert_eq!(rows[0]["degree"], 2);
    assert_eq!(rows[1]["coefficient"], "-3");
}

#[test]
fn verify_reports_errata_and_exits_zero() {
    let o = fibcheb(&["verify", "--suite", "all", "--jmax", "20", "--qmax", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["totals"]["Fail"], 0);
    let records = report["records"].as_array().unwrap();
    assert!(records.iter().any(|r| r["id"] == "cor5.1-T" && r["params"]["j"] == 2));
    assert!(records
        .iter()
        .any(|r| r["id"] == "int-FT" && r["params"]["k"] == 0 && r["status"] == "PaperErratum" && r["lhs"] == "3/2 * pi"));
    assert!(records.iter().all(|r| r["status"] != "Pass"));
}

#[test]
fn verify_accepts_identity_ids() {
    let o = fibcheb(&["verify", "--suite", "thm4-F-in-U,lemma-d", "--jmax", "10", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().skip(1).all(|l| l.starts_with("lemma-d,") || l.starts_with("thm4-F-in-U,")));
    assert_eq!(out.lines().filter(|l| l.starts_with("thm4-F-in-U,")).count(), 11);
}

#[test]
fn worker_count_does_not_change_output() {
    let base = ["verify", "--suite", "integrals,quadrature,derivatives", "--jmax", "12"];
    let one = fibcheb(&[&["--workers", "1"][..], &base].concat());
    let many = Command::new(env!("CARGO_BIN_EXE_fibcheb"))
        .args(base)
        .env("FIBCHEB_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn integrate_single_pair() {
    let o = fibcheb(&["integrate", "--kind", "ft", "--j", "2", "--k", "0", "--quadrature"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("ft j=2 k=0: 3/2 * pi [PaperErratum] printed 3/4 * pi quadrature"), "{out}");

    let o = fibcheb(&["integrate", "--kind", "ff1", "--j", "1", "--k", "1", "--interpret-dm", "normalizer", "--format", "csv"]);
    assert!(stdout(&o).contains("ff1,1,1,1/2 * pi,1/2 * pi,Pass"));
}

#[test]
fn invalid_configuration_exits_two() {
    for args in [
        &["verify", "--jmax", "501"][..],
        &["verify", "--suite", "nonsense"],
        &["verify", "--jmax", "-1"],
        &["verify", "--qmax", "0"],
        &["table", "--direction", "f-in-x", "--j", "1"],
        &["table", "--direction", "t-in-f", "--j", "0"],
        &["integrate", "--j", "1", "--k", "2"],
        &["eval", "--a", "1/2", "--b", "1/3", "--c", "1", "--z", "2"],
        &["eval", "--a", "-3", "--b", "1", "--c", "-1", "--z", "2"],
        &["eval", "--a", "x", "--b", "1", "--c", "1", "--z", "2"],
    ] {
        let o = fibcheb(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn jmax_cap_is_configurable() {
    let o = fibcheb(&["--jmax-cap", "600", "table", "--direction", "f-in-t", "--j", "510", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
}
