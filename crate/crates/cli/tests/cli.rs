//! End-to-end tests of the `qfi` binary: flags, file formats, plots, exit
//! codes, and stream discipline.

use std::path::Path;
use std::process::{Command, Output};

use qfi_cli::table::parse_csv;

fn qfi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfi")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn sweep_to(path: &Path, extra: &[&str]) -> Output {
    let path = path.to_str().unwrap();
    let mut args = vec!["sweep", "--out", path];
    args.extend_from_slice(extra);
    qfi(&args)
}

#[test]
fn point_reports_the_ghz_value() {
    let out = qfi(&["point", "--alpha", "0", "--p", "0", "--channel", "phase_damping"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("mean_qfi           3\n"), "{text}");
    assert!(text.contains("useful             true"), "{text}");
    assert!(text.contains("cramer_rao_bound   0.333333333333"), "{text}");
}

#[test]
fn point_reports_the_w_value() {
    let out = qfi(&["point", "--alpha", "1", "--p", "0", "--channel", "amplitude_damping"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("mean_qfi           2.33333333333\n"), "{}", stdout(&out));
}

#[test]
fn point_on_fully_mixed_state_prints_sentinels() {
    let out = qfi(&["point", "--alpha", "0.5", "--p", "1", "--channel", "depolarizing"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mean: f64 = text
        .lines()
        .find_map(|line| line.strip_prefix("mean_qfi"))
        .unwrap()
        .trim()
        .parse()
        .unwrap();
    assert!(mean.abs() <= 1e-10, "{text}");
    assert!(text.contains("chi_squared        inf"), "{text}");
    assert!(text.contains("useful             false"), "{text}");
    assert!(text.contains("cramer_rao_bound   inf"), "{text}");
}

#[test]
fn point_rejects_out_of_range_alpha() {
    let out = qfi(&["point", "--alpha", "1.5", "--p", "0", "--channel", "depolarizing"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).is_empty(), "data stream must stay clean");
    let diag = stderr(&out);
    assert!(diag.contains("alpha") && diag.contains("[0, 1]"), "{diag}");
}

#[test]
fn point_rejects_unknown_channel() {
    let out = qfi(&["point", "--alpha", "0.5", "--p", "0", "--channel", "bit_flip"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("amplitude_damping"), "{}", stderr(&out));
}

#[test]
fn sweep_scenario_one_has_303_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig1.csv");
    let out = sweep_to(&path, &["--channels", "all", "--alpha-steps", "101", "--p", "0.1"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 304);
    assert!(text.starts_with("channel,alpha,p,mean_qfi,chi_squared\n"));
    let rows = parse_csv(&text).unwrap();
    assert_eq!(rows.len(), 303);
    assert!(rows.iter().all(|r| r.p == 0.1));
}

#[test]
fn sweep_json_corners() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corners.json");
    let out = sweep_to(
        &path,
        &[
            "--channels",
            "phase_damping",
            "--alpha-steps",
            "2",
            "--p-steps",
            "2",
            "--format",
            "json",
        ],
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let rows = value["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    let cells: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| (r["alpha"].as_f64().unwrap(), r["p"].as_f64().unwrap()))
        .collect();
    assert_eq!(cells, vec![(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0)]);
    // The noiseless GHZ corner carries mean QFI 3.
    assert!((rows[0]["mean_qfi"].as_f64().unwrap() - 3.0).abs() <= 1e-9);
    assert_eq!(value["spec"]["channels"][0], "phase_damping");
}

#[test]
fn sweep_output_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.csv");
    let second = dir.path().join("b.csv");
    let flags = ["--alpha-steps", "7", "--p-steps", "5"];
    assert!(sweep_to(&first, &flags).status.success());
    assert!(sweep_to(&second, &flags).status.success());
    assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());

    // Serial and parallel runners also agree byte for byte.
    let serial = dir.path().join("c.csv");
    let mut serial_flags = flags.to_vec();
    serial_flags.push("--serial");
    assert!(sweep_to(&serial, &serial_flags).status.success());
    assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&serial).unwrap());
}

#[test]
fn csv_file_round_trips_to_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    assert!(sweep_to(&path, &["--alpha", "0,0.33,1", "--p", "0.1,0.9"]).status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let rows = parse_csv(&text).unwrap();
    assert_eq!(qfi_cli::table::to_csv(&rows), text);
}

#[test]
fn sweep_rejects_bad_grids() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.csv");
    let out = sweep_to(&path, &["--alpha", "0.5,0.25"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("ascending"), "{}", stderr(&out));

    let out = sweep_to(&path, &["--p", "1.5"]);
    assert_eq!(out.status.code(), Some(1));

    let out = sweep_to(&path, &["--qubits", "11"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("[2, 10]"), "{}", stderr(&out));
}

#[test]
fn sweep_unwritable_path_is_an_io_error() {
    let out = sweep_to(Path::new("/nonexistent-dir/out.csv"), &["--alpha-steps", "2", "--p-steps", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(!stderr(&out).is_empty());
}

#[test]
fn plot_line_draws_three_polylines() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("fig1.csv");
    assert!(sweep_to(&csv, &["--alpha-steps", "21", "--p", "0.1"]).status.success());
    let svg_path = dir.path().join("fig1.svg");
    let out = qfi(&[
        "plot",
        "--input",
        csv.to_str().unwrap(),
        "--kind",
        "line",
        "--out",
        svg_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert_eq!(svg.matches("<polyline").count(), 3);
    for color in ["red", "blue", "green"] {
        assert!(svg.contains(&format!("stroke=\"{color}\"")));
    }
}

#[test]
fn plot_heatmap_renders_all_panels_and_cells() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("grid.csv");
    assert!(sweep_to(&csv, &["--alpha-steps", "11", "--p-steps", "9"]).status.success());
    let svg_path = dir.path().join("grid.svg");
    let out = qfi(&[
        "plot",
        "--input",
        csv.to_str().unwrap(),
        "--kind",
        "heatmap",
        "--out",
        svg_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.matches("<rect").count() >= 3 * 11 * 9);
    assert!(svg.contains("min =") && svg.contains("max ="));
}

#[test]
fn plot_single_row_line_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("one.csv");
    assert!(sweep_to(&csv, &["--channels", "depolarizing", "--alpha", "0.5", "--p", "0.1"])
        .status
        .success());
    let out = qfi(&[
        "plot",
        "--input",
        csv.to_str().unwrap(),
        "--kind",
        "line",
        "--out",
        dir.path().join("one.svg").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("at least 2"), "{}", stderr(&out));
}

#[test]
fn plot_ragged_heatmap_lists_missing_cells() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("ragged.csv");
    std::fs::write(
        &csv,
        "channel,alpha,p,mean_qfi,chi_squared\n\
         depolarizing,0,0,3,0.333333333333\n\
         depolarizing,1,0,2.33333333333,0.428571428571\n\
         depolarizing,0,1,0,inf\n",
    )
    .unwrap();
    let out = qfi(&[
        "plot",
        "--input",
        csv.to_str().unwrap(),
        "--kind",
        "heatmap",
        "--out",
        dir.path().join("ragged.svg").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let diag = stderr(&out);
    assert!(diag.contains("missing") && diag.contains("alpha=1") && diag.contains("p=1"), "{diag}");
}

#[test]
fn plot_missing_input_is_an_io_error() {
    let out = qfi(&["plot", "--input", "/no/such/table.csv", "--kind", "line", "--out", "/tmp/x.svg"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn help_exits_zero_and_bad_flags_exit_one() {
    assert_eq!(qfi(&["--help"]).status.code(), Some(0));
    assert_eq!(qfi(&["sweep"]).status.code(), Some(1)); // --out is required
    assert_eq!(qfi(&[]).status.code(), Some(1));
}
