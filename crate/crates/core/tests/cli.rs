use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rankcp::cli::{load_csv, write_csv, RunReport, EXIT_INPUT, EXIT_OK, EXIT_USAGE};
use rankcp::datagen::{generate, SegmentSpec};
use rankcp::segmentation::{divisive_detect, DetectConfig};

fn rankcp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankcp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn twoseg(dir: &Path) -> PathBuf {
    let path = dir.join("twoseg.csv");
    let series = generate(
        &[
            SegmentSpec::gaussian(100, vec![0.0, 0.0], vec![1.0, 1.0]),
            SegmentSpec::gaussian(100, vec![5.0, 5.0], vec![1.0, 1.0]),
        ],
        7,
    )
    .unwrap();
    write_csv(&series, &path).unwrap();
    path
}

#[test]
fn detects_the_shift_and_writes_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let input = twoseg(dir.path());
    let json = dir.path().join("out.json");
    let svg = dir.path().join("out.svg");
    let out = rankcp(&[
        "--input",
        p(&input),
        "--seed",
        "7",
        "--json",
        p(&json),
        "--plot",
        p(&svg),
    ]);
    assert_eq!(
        out.status.code(),
        Some(EXIT_OK),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let stdout = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<usize> = stdout.lines().map(|l| l.parse().unwrap()).collect();
    assert_eq!(lines.len(), 1);
    assert!((90..=110).contains(&lines[0]));

    let report: RunReport = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report.change_points, lines);
    assert_eq!((report.t, report.d), (200, 2));
    assert_eq!(report.config.seed, 7);
    assert!(report.elapsed_seconds.is_none());
    assert_eq!(report.p_values.len(), report.statistics.len());

    let svg = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(svg.matches(r#"<line class="changepoint""#).count(), 2);
}

#[test]
fn cli_matches_library_call() {
    let dir = tempfile::tempdir().unwrap();
    let input = twoseg(dir.path());
    let out = rankcp(&[
        "--input",
        p(&input),
        "--seed",
        "3",
        "--perms",
        "99",
        "--min-size",
        "5",
    ]);
    assert!(out.status.success());
    let cli: Vec<usize> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| l.parse().unwrap())
        .collect();
    let cfg = DetectConfig {
        seed: 3,
        n_permutations: 99,
        min_size: 5,
        ..Default::default()
    };
    let lib = divisive_detect(&load_csv(&input, false).unwrap(), &cfg).unwrap();
    assert_eq!(cli, lib.change_points);
}

#[test]
fn constant_column_has_no_change_points() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("const.csv");
    std::fs::write(&input, "4.2\n".repeat(40)).unwrap();
    let json = dir.path().join("c.json");
    let out = rankcp(&["--input", p(&input), "--json", p(&json)]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("duplicate"));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["change_points"], serde_json::json!([]));
}

#[test]
fn usage_and_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let input = twoseg(dir.path());
    let out = rankcp(&["--input", p(&input), "--alpha", "3"]);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(!out.stderr.is_empty());

    let out = rankcp(&["--input", p(&input), "--block", "4"]);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));

    let ragged = dir.path().join("ragged.csv");
    std::fs::write(&ragged, "1,2\n3\n").unwrap();
    let out = rankcp(&["--input", p(&ragged)]);
    assert_eq!(out.status.code(), Some(EXIT_INPUT));
    assert!(String::from_utf8_lossy(&out.stderr).contains("row 2"));

    let short = dir.path().join("short.csv");
    std::fs::write(&short, "1\n2\n3\n").unwrap();
    assert_eq!(
        rankcp(&["--input", p(&short)]).status.code(),
        Some(EXIT_INPUT)
    );
}

#[test]
fn agglomerative_with_header() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("step.csv");
    std::fs::write(&input, "value\n0\n0\n0\n0\n10\n10\n10\n10\n").unwrap();
    let json = dir.path().join("a.json");
    let out = rankcp(&[
        "--input",
        p(&input),
        "--header",
        "--method",
        "agglomerative",
        "--block",
        "2",
        "--json",
        p(&json),
    ]);
    assert_eq!(
        out.status.code(),
        Some(EXIT_OK),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "4\n");
    let report: RunReport = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report.config.block, Some(2));
    assert!(report.p_values.is_empty());
}

#[test]
fn generate_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("g.csv");
    let out = rankcp(&[
        "generate",
        "--spec",
        "cauchy:200:0,0;cauchy:200:0.5,0",
        "--out",
        p(&out_path),
        "--seed",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let series = load_csv(&out_path, false).unwrap();
    assert_eq!((series.len(), series.dim()), (400, 2));
    assert_eq!(series, rankcp::datagen::shifted_cauchy_pair(1));

    let out = rankcp(&[
        "generate",
        "--spec",
        "gaussian:10:0:-1",
        "--out",
        p(&out_path),
    ]);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}
