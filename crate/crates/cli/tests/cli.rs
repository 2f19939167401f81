use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_scf-secrecy"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).env_remove("THREADS").output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn c(x: f64) -> f64 {
    0.5 * (1.0 + x).log2()
}

fn csv(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines.map(|l| l.split(',').map(|v| v.parse().unwrap()).collect()).collect();
    (header, rows)
}

fn column(header: &[String], name: &str) -> usize {
    header.iter().position(|h| h == name).unwrap()
}

const SYM20: [&str; 8] = ["--pa-db", "20", "--pb-db", "20", "--pr-db", "20", "--sigma2-db", "-inf"];

#[test]
fn rate_report_symmetric() {
    let mut args = vec!["rate"];
    args.extend(SYM20);
    let r = json(&args);
    let lc = r["rates"]["lc"]["raw"].as_f64().unwrap();
    let upper = r["rates"]["upper"]["clamped"].as_f64().unwrap();
    assert!((lc - 2.8256).abs() < 1e-3);
    assert!((upper - 2.8395).abs() < 1e-3);
    assert_eq!(r["optimum"]["a1"], 1);
    assert_eq!(r["optimum"]["a2"], 1);
    assert!(r["sigma_threshold"].as_f64().unwrap() > 1.0);
}

#[test]
fn rate_marks_collocated_only_schemes() {
    let r = json(&["rate", "--pa-db", "20", "--pb-db", "20", "--pr-db", "20", "--sigma2-db", "3"]);
    assert!(r["rates"]["sun"].is_null());
    assert!(r["rates"]["zhang"].is_null());
    assert!(r["rates"]["lc"]["raw"].is_f64());
}

#[test]
fn usage_errors_exit_2_with_one_line() {
    for args in [
        vec!["rate", "--pa-db", "20", "--pb-db", "20"],
        vec!["rate", "--pa-db", "abc", "--pb-db", "20", "--pr-db", "20"],
        vec!["rate", "--pa-db", "20", "--pb-db", "20", "--pr-db", "20", "--h2p", "0"],
        vec!["sweep", "--vary", "pa", "--from-db", "0", "--to-db", "10", "--steps", "3", "--schemes", "bogus"],
        vec!["sweep", "--vary", "pa", "--from-db", "0", "--to-db", "10", "--steps", "1", "--tie", "pb,pr"],
        vec!["sweep", "--vary", "sigma2", "--from-db", "0", "--to-db", "10", "--steps", "3", "--pa-db", "20",
             "--pb-db", "20", "--pr-db", "20", "--schemes", "sun"],
        vec!["figure", "fig8"],
        vec!["optimize", "--pa-db", "20", "--pb-db", "20", "--pr-db", "20", "--objective", "jammer-cap"],
        vec!["bogus"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(err.starts_with("error: "), "{err}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn config_file_matches_flags() {
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("sym20.json");
    std::fs::write(&path, r#"{"pa-db": 20, "pb-db": "20", "pr-db": 20, "sigma2-db": "-inf"}"#).unwrap();
    let mut args = vec!["rate"];
    args.extend(SYM20);
    let from_flags = stdout(&args);
    let from_file = stdout(&["rate", "--config", path.to_str().unwrap()]);
    assert_eq!(from_flags, from_file);

    // flags override the file
    let overridden = stdout(&["rate", "--config", path.to_str().unwrap(), "--pr-db", "10"]);
    let mut args = SYM20.to_vec();
    args[5] = "10";
    let mut direct = vec!["rate"];
    direct.extend(args);
    assert_eq!(overridden, stdout(&direct));

    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"pa_db": 20}"#).unwrap();
    assert_eq!(exit_code(&["rate", "--config", bad.to_str().unwrap()]), 2);
}

#[test]
fn sweep_rows_and_monotone_lc() {
    let text = stdout(&[
        "sweep", "--vary", "pa", "--from-db", "0", "--to-db", "40", "--steps", "81", "--tie", "pb,pr", "--schemes",
        "lc,upper",
    ]);
    let (header, rows) = csv(&text);
    assert_eq!(header, ["x_db", "lc", "upper"]);
    assert_eq!(rows.len(), 81);
    assert_eq!(rows[80][0], 40.0);
    assert!(rows.windows(2).all(|w| w[1][1] >= w[0][1]));
    assert!(text.lines().skip(1).all(|l| l.split(',').all(|v| v.split('.').nth(1).map_or(false, |d| d.len() == 6))));
}

#[test]
fn sweep_agrees_with_rate() {
    let text = stdout(&[
        "sweep", "--vary", "pr", "--from-db", "0", "--to-db", "30", "--steps", "4", "--pa-db", "25", "--pb-db", "15",
        "--schemes", "rb,lc,combined,he",
    ]);
    let (header, rows) = csv(&text);
    for row in rows {
        let pr = format!("{}", row[0]);
        let r = json(&["rate", "--pa-db", "25", "--pb-db", "15", "--pr-db", &pr]);
        for (i, name) in header.iter().enumerate().skip(1) {
            let v = r["rates"][name.as_str()]["clamped"].as_f64().unwrap();
            assert_eq!(format!("{v:.6}"), format!("{:.6}", row[i]), "{name} at {pr} dB");
        }
    }
}

#[test]
fn raw_flag_keeps_negative_rates() {
    let args = ["sweep", "--vary", "pa", "--from-db", "-10", "--to-db", "10", "--steps", "5", "--tie", "pb,pr",
        "--schemes", "sun,zhang,lc"];
    let (_, clamped) = csv(&stdout(&args));
    let mut raw_args = args.to_vec();
    raw_args.push("--raw");
    let (_, raw) = csv(&stdout(&raw_args));
    assert!(raw.iter().flatten().any(|&v| v < 0.0));
    for (c, r) in clamped.iter().zip(&raw) {
        for (a, b) in c.iter().zip(r).skip(1) {
            assert_eq!(*a, b.max(0.0));
        }
    }
}

#[test]
fn h2p_sweep_uses_linear_axis() {
    let text = stdout(&[
        "sweep", "--vary", "h2p", "--from", "1", "--to", "2", "--steps", "3", "--pa-db", "20", "--pb-db", "20", "--pr-db",
        "20", "--schemes", "eve_rb",
    ]);
    let (header, rows) = csv(&text);
    assert_eq!(header[0], "h2p");
    assert_eq!(rows.iter().map(|r| r[0]).collect::<Vec<_>>(), [1.0, 1.5, 2.0]);
}

#[test]
fn fig4_anchor_row() {
    let (header, rows) = csv(&stdout(&["figure", "fig4"]));
    let row = rows.iter().find(|r| r[0] == 20.0).unwrap();
    assert!((row[column(&header, "lc")] - 2.8256).abs() < 1e-3);
    assert!((row[column(&header, "upper")] - 2.8395).abs() < 1e-3);
    assert!((row[column(&header, "he2")] - 2.3256).abs() < 1e-3);
}

#[test]
fn fig5a_lc_meets_relay_capacity() {
    let (header, rows) = csv(&stdout(&["figure", "fig5a"]));
    let (lc, upper) = (column(&header, "lc"), column(&header, "upper"));
    // closed-form optimum at P_A = P_B = 1000
    let p: f64 = 1000.0;
    let s = (1.0 + p) + p;
    let unconstrained = 0.5 * (s * s / (1.0 + 2.0 * p)).log2() - 1.0;
    let mut hits = 0;
    for row in &rows {
        let cr = c(10f64.powf(row[0] / 10.0));
        if cr <= unconstrained - 1e-6 {
            assert!((row[lc] - cr).abs() <= 1e-6, "{row:?}");
            assert_eq!(row[lc], row[upper]);
            hits += 1;
        }
    }
    assert!(hits > 10);
}

#[test]
fn fig9_unit_gain_matches_untrusted_relay() {
    let (header, rows) = csv(&stdout(&["figure", "fig9"]));
    let row = rows.iter().find(|r| r[0] == 1.0).unwrap();
    assert_eq!(row[column(&header, "eve_rb")], row[column(&header, "rb")]);
}

#[test]
fn figure_range_override() {
    let (_, rows) = csv(&stdout(&["figure", "fig6a", "--from", "5", "--to", "6", "--step", "0.25"]));
    assert_eq!(rows.iter().map(|r| r[0]).collect::<Vec<_>>(), [5.0, 5.25, 5.5, 5.75, 6.0]);
}

#[test]
fn every_figure_renders() {
    for fig in ["fig5b", "fig5c", "fig6b", "fig6c", "fig6d", "fig6e", "fig6f", "fig7a", "fig7b"] {
        let (_, rows) = csv(&stdout(&["figure", fig]));
        assert!(rows.len() > 20, "{fig}");
        assert!(rows.iter().all(|r| r[1..].iter().all(|v| v.is_finite() && *v >= 0.0)), "{fig}");
    }
}

#[test]
fn output_independent_of_threads_and_sink() {
    let default = stdout(&["figure", "fig9"]);
    let single = stdout(&["figure", "fig9", "--threads", "1"]);
    assert_eq!(default, single);
    let via_env = bin().args(["figure", "fig9"]).env("THREADS", "3").output().unwrap();
    assert_eq!(String::from_utf8(via_env.stdout).unwrap(), default);

    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("fig9.csv");
    let out = run(&["figure", "fig9", "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), default);
}

#[test]
fn optimize_examples() {
    let mut args = vec!["optimize"];
    args.extend(SYM20);
    let r = json(&args);
    assert_eq!((r["a1"].as_i64(), r["a2"].as_i64()), (Some(1), Some(1)));
    assert!((r["beta_ratio"].as_f64().unwrap() - 1.0).abs() < 1e-6);
    assert!((r["value"].as_f64().unwrap() - 2.8256).abs() < 1e-3);
    assert_eq!(r["constrained"], false);

    let pb50 = format!("{}", 10.0 * 50f64.log10());
    let r = json(&["optimize", "--pa-db", "20", "--pb-db", &pb50, "--pr-db", "20"]);
    let oracle = (50.0 * 101.0 / (100.0 * 51.0f64)).sqrt();
    assert!((oracle - 0.99508).abs() < 1e-5);
    assert!((r["beta_ratio"].as_f64().unwrap() - oracle).abs() < 1e-5);

    let mut one = args.clone();
    one.extend(["--a-max", "1"]);
    let r1 = json(&one);
    let r8 = json(&args);
    for key in ["a1", "a2", "beta_ratio", "value"] {
        assert_eq!(r1[key], r8[key], "{key}");
    }

    let mut capped = args.clone();
    capped.extend(["--objective", "jammer-cap", "--cap", "1"]);
    let r = json(&capped);
    assert_eq!(r["constrained"], true);
    assert!(r["r_cf_b"].as_f64().unwrap() <= 1.0);
}

#[test]
fn simulate_examples() {
    let r = json(&["simulate", "chain", "--ms", "4", "--me", "2", "--mb", "8", "--a1", "1", "--a2", "1", "--trials", "10000",
        "--seed", "7"]);
    assert_eq!(r["failures"], 0);
    assert_eq!(r["trials"], 10000);

    let r = json(&["simulate", "chain", "--ms", "3", "--me", "2", "--mb", "12", "--a1", "2", "--a2", "3", "--beta-a",
        "3/4", "--beta-b", "5/8", "--dims", "3", "--mode", "plain", "--dithered", "--trials", "2000"]);
    assert_eq!(r["failures"], 0);
    assert_eq!(r["chain"]["beta_a"], "3/4");

    let r = json(&["simulate", "leakage", "--ms", "4", "--me", "2", "--mb", "8", "--reduce", "mod-coarse"]);
    assert_eq!(r["leakage_bits"].as_f64(), Some(0.0));
    assert_eq!(r["independent"], true);

    let args = ["simulate", "binning", "--l", "8", "--rt", "2", "--ro", "1", "--seed", "1"];
    let first = stdout(&args);
    assert_eq!(first, stdout(&args));
    let r: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(r["mismatches"], 0);
}

#[test]
fn simulate_errors() {
    assert_eq!(exit_code(&["simulate", "binning", "--l", "12", "--rt", "2", "--ro", "1"]), 3);
    assert_eq!(exit_code(&["simulate", "leakage", "--ms", "1024", "--me", "1024", "--mb", "8"]), 3);
    assert_eq!(exit_code(&["simulate", "chain", "--ms", "4", "--me", "2", "--mb", "3"]), 2);
    assert_eq!(exit_code(&["simulate", "chain", "--ms", "4", "--me", "2", "--mb", "8", "--beta-a", "0"]), 2);
    assert_eq!(exit_code(&["simulate", "chain", "--ms", "4", "--me", "2", "--mb", "8", "--beta-a", "x/2"]), 2);
}

#[test]
fn asymptotics_examples() {
    let (header, rows) = csv(&stdout(&["asymptotics", "--alpha", "1", "--gamma", "1", "--scheme", "lc"]));
    assert_eq!(header, ["P_A_db", "G0", "G_lc", "table1_reference", "residual"]);
    assert_eq!(rows.len(), 3);
    assert!(rows[2][4] < 0.02);

    let (_, rows) = csv(&stdout(&["asymptotics", "--scheme", "rb", "--pr-db", "20"]));
    assert!(rows.iter().all(|r| r[3] == 0.0));

    let (_, rows) = csv(&stdout(&["asymptotics", "--scheme", "sun", "--alpha", "1", "--gamma", "1"]));
    assert_eq!(format!("{:.6}", rows[0][3]), format!("{:.6}", c(1.0) + c(2.0)));

    let text = stdout(&["asymptotics", "--scheme", "he", "--gamma", "2"]);
    let cell = text.lines().nth(1).unwrap().split(',').nth(3).unwrap();
    assert_eq!(cell, format!("{:.6}..{:.6}", c(1.0), c(1.0) + c(0.5)));

    assert_eq!(exit_code(&["asymptotics", "--scheme", "lc", "--gamma", "1", "--pa-db-list", "40,60"]), 2);
    assert_eq!(exit_code(&["asymptotics", "--scheme", "lc", "--gamma", "1", "--pr-db", "20"]), 2);
    assert_eq!(exit_code(&["asymptotics", "--scheme", "lc", "--gamma", "1", "--pa-db-list", "80,60,40"]), 2);
}
