use std::process::{Command, Output};

use serde_json::Value;

use pellcirc::cli::OutputRecord;

fn pellcirc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pellcirc"))
        .args(args)
        .env_remove("PELLCIRC_N_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn det_plain_and_json() {
    let out = pellcirc(&["det", "--seq", "pell", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "104\n");

    let out = pellcirc(&["det", "--seq", "pell-lucas", "--n", "4", "--format", "json"]);
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["seq"], "pell-lucas");
    assert_eq!(v["n"], 4);
    assert_eq!(v["method"], "closed");
    assert_eq!(v["det"], "-1247232");
}

#[test]
fn det_csv_has_header() {
    let out = pellcirc(&["det", "--seq", "pell", "--n", "4", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("seq,n,method,det,elapsed_ns"));
    assert!(lines.next().unwrap().starts_with("pell,4,closed,-18560,"));
}

#[test]
fn json_round_trips_byte_for_byte() {
    for args in [
        &["det", "--seq", "pell", "--n", "7", "--format", "json"][..],
        &["inv", "--seq", "pell-lucas", "--n", "5", "--format", "json"][..],
    ] {
        let text = stdout(&pellcirc(args));
        let rec: OutputRecord = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(rec.to_json().unwrap(), text.trim());
    }
}

#[test]
fn closed_and_oracle_strings_identical() {
    for seq in ["pell", "pell-lucas"] {
        for n in [3, 4, 9, 17, 25] {
            let ns = n.to_string();
            let closed = stdout(&pellcirc(&["det", "--seq", seq, "--n", &ns]));
            let oracle = stdout(&pellcirc(&[
                "det", "--seq", seq, "--n", &ns, "--method", "oracle",
            ]));
            assert_eq!(closed, oracle, "{seq} n={n}");
        }
        for n in [3, 6, 10] {
            let ns = n.to_string();
            let closed = stdout(&pellcirc(&["inv", "--seq", seq, "--n", &ns]));
            let oracle = stdout(&pellcirc(&[
                "inv", "--seq", seq, "--n", &ns, "--method", "oracle",
            ]));
            assert_eq!(closed, oracle, "{seq} n={n}");
        }
    }
}

#[test]
fn inverse_first_row_formats() {
    let out = pellcirc(&["inv", "--seq", "pell", "--n", "3"]);
    assert_eq!(stdout(&out), "-9/104 23/104 -1/104\n");
    let out = pellcirc(&["inv", "--seq", "pell-lucas", "--n", "3", "--format", "json"]);
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(
        v["inverse_first_row"],
        serde_json::json!(["-5/154", "23/308", "1/308"])
    );
}

#[test]
fn eigen_method_rounds_to_integer() {
    let out = pellcirc(&["det", "--seq", "pell", "--n", "5", "--method", "eigen"]);
    let closed = pellcirc(&["det", "--seq", "pell", "--n", "5"]);
    assert_eq!(stdout(&out), stdout(&closed));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["det", "--seq", "pell", "--n", "2"][..],
        &["inv", "--seq", "pell", "--n", "3", "--method", "eigen"][..],
        &["inv", "--seq", "pell", "--n", "3", "--format", "csv"][..],
        &["det", "--seq", "fibonacci", "--n", "3"][..],
        &["verify", "--n-max", "2"][..],
        &["det", "--seq", "pell", "--n", "20000"][..],
        &["bench", "--n", "8,x"][..],
    ] {
        let out = pellcirc(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_pellcirc"))
        .args(["det", "--seq", "pell", "--n", "6"])
        .env("PELLCIRC_N_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = pellcirc(&["--n-cap", "6", "det", "--seq", "pell", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_passes_through_12() {
    let out = pellcirc(&["verify", "--n-max", "12"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    let (checks, overall) = text.trim_end().rsplit_once('\n').unwrap();
    assert!(checks.lines().all(|l| l.starts_with("PASS ")), "{text}");
    assert_eq!(overall, "overall: pass");

    let out = pellcirc(&["verify", "--n-max", "6", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["overall"], "pass");
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert!(c["name"].is_string() && c["n_range"].is_string() && c["detail"].is_string());
        assert_eq!(c["status"], "pass");
    }
}

#[test]
fn bench_rows_agree() {
    let out = pellcirc(&["bench", "--n", "8,16,32", "--reps", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(out.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    // two sequences x three orders x {closed, oracle}
    assert_eq!(rows.len(), 12);
    for pair in rows.chunks(2) {
        assert_eq!(&pair[0][0], &pair[1][0]);
        assert_eq!(&pair[0][1], &pair[1][1]);
        let methods = [&pair[0][2], &pair[1][2]];
        assert!(methods.contains(&"closed") && methods.contains(&"oracle"));
        assert_eq!(&pair[0][3], &pair[1][3]);
        assert!(pair[0][4].parse::<u128>().is_ok());
    }
}

#[test]
fn bench_skips_oracle_past_cutoff() {
    let out = pellcirc(&["bench", "--n", "512", "--reps", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let recs: Vec<Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(recs.len(), 4);
    for r in &recs {
        if r["method"] == "oracle" {
            assert_eq!(r["skipped"], true);
            assert!(r.get("det").is_none());
        } else {
            assert!(r["det"].is_string());
        }
    }
}

#[test]
fn bench_empty_list() {
    let out = pellcirc(&["bench", "--n", ""]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
}
