use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use auglab::jobs::{parse_jobs, parse_timeline, write_timeline};
use auglab::network::{parse_network, write_network, FlowRecord, PoaRecord};
use auglab::records::{ClassificationRecord, CurveRecord, PagingRecord, ReportBundle, RoutingLooseRecord};
use auglab::trace::{parse_trace, write_trace};
use auglab::{from_json, to_json};

fn auglab(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_auglab")).current_dir(dir).env_remove("AUGLAB_SEED").args(args).output().unwrap()
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let out = auglab(dir, args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn read(dir: &Path, name: &str) -> String {
    fs::read_to_string(dir.join(name)).unwrap()
}

/// Parses a written artifact and checks that writing it again gives the
/// same bytes.
fn round_trips<T: serde::Serialize + serde::de::DeserializeOwned>(dir: &Path, name: &str) -> T {
    let text = read(dir, name);
    let value: T = from_json(&text).unwrap();
    assert_eq!(to_json(&value), text, "{name}");
    value
}

fn workspace() -> (tempfile::TempDir, PathBuf) {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().to_path_buf();
    ok(&dir, &["gen", "pigou", "--out", "pigou.json"]);
    ok(&dir, &["gen", "example-setf", "--eps", "1/10", "--delta", "1/100", "--out", "ex1.json"]);
    ok(&dir, &["gen", "locality", "--universe", "30", "--length", "2000", "--locality", "0.8", "--out", "loc.txt"]);
    (tmp, dir)
}

#[test]
fn documented_examples() {
    let (_tmp, dir) = workspace();
    let stdout = ok(&dir, &["route", "poa", "--net", "pigou.json", "--out", "poa.json"]);
    assert!(stdout.contains("price of anarchy 1.333333"), "{stdout}");
    let poa: PoaRecord = round_trips(&dir, "poa.json");
    assert!((poa.ratio.unwrap().0 - 4.0 / 3.0).abs() < 1e-4);

    fs::write(dir.join("empty.txt"), "").unwrap();
    let stdout = ok(&dir, &["page", "sim", "--policy", "lru", "--k", "2", "--trace", "empty.txt", "--out", "sim.json"]);
    assert_eq!(stdout.lines().count(), 1);
    assert_eq!(round_trips::<PagingRecord>(&dir, "sim.json").faults, 0);

    let stdout = ok(&dir, &["sched", "verify-kp00", "--jobs", "ex1.json", "--eps", "1/10", "--out", "kp00.json"]);
    assert!(stdout.contains("pass") && stdout.contains("bound 11/1"), "{stdout}");
    let bundle: ReportBundle = round_trips(&dir, "kp00.json");
    let ratio = bundle.reports[0].context["ratio"].as_str().unwrap().to_owned();
    let ratio = auglab_core::rational::parse(&ratio).unwrap();
    assert!(ratio <= auglab_core::rational::int(11));
}

#[test]
fn every_subcommand_round_trips_its_output() {
    let (_tmp, dir) = workspace();
    let commands: &[(&[&str], &str)] = &[
        (&["page", "curve", "--trace", "loc.txt", "--policy", "fifo", "--max-k", "12", "-j", "3"], "curve"),
        (&["page", "loose", "--trace", "loc.txt", "--eps", "1/20", "--delta", "1/4"], "loose"),
        (&["page", "verify-ra", "--trace", "loc.txt", "--max-k", "6"], "bundle"),
        (&["route", "eq", "--net", "pigou.json"], "flow"),
        (&["route", "opt", "--net", "pigou.json"], "flow"),
        (&["route", "verify-rt", "--net", "pigou.json", "--delta", "0.5,1"], "bundle"),
        (&["route", "verify-bicrit", "--net", "pigou.json"], "bundle"),
        (&["route", "loose", "--net", "pigou.json", "--samples", "5"], "rloose"),
        (&["sched", "verify-pointwise", "--jobs", "ex1.json", "--eps", "1/10"], "bundle"),
        (&["sched", "verify-idle", "--jobs", "ex1.json", "--eps", "1/2"], "bundle"),
    ];
    for (i, (args, kind)) in commands.iter().enumerate() {
        let name = format!("out{i}.json");
        let mut full = args.to_vec();
        full.extend(["--out", &name]);
        ok(&dir, &full);
        match *kind {
            "curve" => drop(round_trips::<CurveRecord>(&dir, &name)),
            "loose" => assert!(round_trips::<ClassificationRecord>(&dir, &name).pass),
            "bundle" => assert!(round_trips::<ReportBundle>(&dir, &name).pass),
            "flow" => assert!(round_trips::<FlowRecord>(&dir, &name).converged),
            _ => drop(round_trips::<RoutingLooseRecord>(&dir, &name)),
        }
    }

    ok(&dir, &["sched", "sim", "--jobs", "ex1.json", "--speed", "1.1", "--out", "tl.json"]);
    let text = read(&dir, "tl.json");
    assert_eq!(write_timeline(&parse_timeline(&text).unwrap()), text);

    for (args, name) in [
        (vec!["gen", "random-network", "--two-commodities"], "n.json"),
        (vec!["gen", "parallel-links"], "p.json"),
        (vec!["gen", "staircase"], "s.json"),
        (vec!["gen", "nonlinear-pigou", "--degree", "10"], "d.json"),
    ] {
        let mut full = args.clone();
        full.extend(["--out", name]);
        ok(&dir, &full);
        let text = read(&dir, name);
        assert_eq!(write_network(&parse_network(&text).unwrap()), text);
    }
    for args in [vec!["gen", "cyclic", "--k", "3", "--length", "20"], vec!["gen", "adaptive", "--k", "4", "--length", "30"]] {
        let mut full = args.clone();
        full.extend(["--out", "t.txt"]);
        ok(&dir, &full);
        let text = read(&dir, "t.txt");
        assert_eq!(write_trace(&parse_trace(&text).unwrap()), text);
    }
    ok(&dir, &["gen", "random-jobs", "--out", "rj.json"]);
    ok(&dir, &["gen", "grid-jobs", "--n", "3", "--horizon", "12", "--out", "gj.json"]);
    for name in ["rj.json", "gj.json"] {
        parse_jobs(&read(&dir, name)).unwrap();
    }
}

#[test]
fn curves_switch_to_csv() {
    let (_tmp, dir) = workspace();
    ok(&dir, &["page", "curve", "--trace", "loc.txt", "--max-k", "4", "--csv", "--out", "c.csv"]);
    let text = read(&dir, "c.csv");
    assert!(text.starts_with("resource,value\n1,"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn without_out_the_artifact_goes_to_stdout() {
    let (_tmp, dir) = workspace();
    let out = auglab(&dir, &["gen", "cyclic", "--k", "2", "--length", "4"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "N=3\n0\n1\n2\n0\n");
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("cyclic trace"));
}

#[test]
fn exit_codes() {
    let (_tmp, dir) = workspace();
    // FIF with cache 1 against itself with cache 1 faults on every change of page
    fs::write(dir.join("alt.txt"), "N=2\n0\n1\n0\n1\n0\n1\n").unwrap();
    assert_eq!(auglab(&dir, &["page", "verify-ra", "--trace", "alt.txt", "--k", "1", "--h", "1"]).status.code(), Some(0));

    fs::write(dir.join("bad.json"), r#"[{"id": 1, "release": "0", "processing": "-1"}]"#).unwrap();
    let out = auglab(&dir, &["sched", "verify-kp00", "--jobs", "bad.json", "--eps", "1/2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("job 1 processing"));

    let out = auglab(&dir, &["route", "eq", "--net", "missing.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("missing.json"));

    let out = auglab(&dir, &["page", "sim", "--trace", "loc.txt", "--k", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("invalid k"));

    let out = auglab(&dir, &["route", "eq", "--net", "pigou.json", "--tol", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("invalid tol"));
}

#[test]
fn out_of_range_parameters_are_input_errors() {
    let (_tmp, dir) = workspace();
    let out = auglab(&dir, &["page", "loose", "--trace", "loc.txt", "--eps", "2", "--delta", "1/4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("eps"));
    let out = auglab(&dir, &["page", "verify-ra", "--trace", "loc.txt", "--k", "2", "--h", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("invalid h"));
}

#[test]
fn seeds_come_from_the_environment() {
    let (_tmp, dir) = workspace();
    let run = |seed: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_auglab"));
        cmd.current_dir(&dir).env_remove("AUGLAB_SEED").args(["gen", "random-jobs"]);
        if let Some(s) = seed {
            cmd.env("AUGLAB_SEED", s);
        }
        cmd.output().unwrap().stdout
    };
    assert_eq!(run(None), run(None));
    assert_eq!(run(Some("5")), run(Some("5")));
    assert_ne!(run(None), run(Some("5")));
}
