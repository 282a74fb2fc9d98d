//! End-to-end checks of the `hermite-zeros` binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hermite-zeros"))
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

fn data_lines(text: &str) -> Vec<&str> {
    text.lines()
        .skip(1)
        .filter(|l| !l.starts_with('#') && !l.is_empty())
        .collect()
}

#[test]
fn solve_at_zero() {
    let out = run(&["solve", "--m", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("theta = 0\n"), "{text}");
    assert!(text.contains("residual = 0\n"));
}

#[test]
fn solve_midrange_reports_residual() {
    let out = run(&["solve", "--m", "1.0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let theta: f64 = text
        .lines()
        .next()
        .unwrap()
        .strip_prefix("theta = ")
        .unwrap()
        .parse()
        .unwrap();
    assert!((theta + theta.sin() - 1.0).abs() <= 1e-14);
}

#[test]
fn solve_rejects_out_of_domain_with_exit_2() {
    let out = run(&["solve", "--m", "4.0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("domain"));
}

#[test]
fn zeros_exact_h2_matches_closed_form() {
    let out = run(&["zeros", "--n", "2", "--method", "exact"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "n,j,x");
    let rows = data_lines(&text);
    assert_eq!(rows.len(), 2);
    let x: f64 = rows[1].split(',').nth(2).unwrap().parse().unwrap();
    assert!(
        (x - std::f64::consts::FRAC_1_SQRT_2).abs() <= 1e-14,
        "{text}"
    );
}

#[test]
fn zeros_asymptotic_csv_schema() {
    let out = run(&["zeros", "--n", "3", "--method", "asymptotic"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "n,j,M,theta,x");
    let rows = data_lines(&text);
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[1], "3,0,0,0,0");
    // Mirrored pair shares j, M and theta with opposite x.
    let first: Vec<&str> = rows[0].split(',').collect();
    let last: Vec<&str> = rows[2].split(',').collect();
    assert_eq!(first[1], last[1]);
    assert_eq!(first[2], last[2]);
    assert_eq!(first[4], format!("-{}", last[4]));
}

#[test]
fn zeros_json_rows() {
    let out = run(&["zeros", "--n", "2", "--method", "exact", "--format", "json"]);
    assert!(out.status.success());
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["n"], 2);
    assert_eq!(rows[0]["j"], 1);
    assert!(rows[0]["x"].as_f64().unwrap() < 0.0);

    let out = run(&[
        "zeros",
        "--n",
        "2",
        "--method",
        "asymptotic",
        "--format",
        "json",
    ]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(rows[0]["M"].as_f64().is_some(), "asymptotic rows carry M");
    assert!(rows[0]["theta"].as_f64().is_some());
}

#[test]
fn zeros_of_degree_zero_is_empty() {
    for method in ["exact", "asymptotic"] {
        let out = run(&["zeros", "--n", "0", "--method", method]);
        assert!(out.status.success());
        assert_eq!(data_lines(&stdout(&out)).len(), 0);
    }
}

#[test]
fn unknown_flag_exits_2() {
    let out = run(&["zeros", "--n", "2", "--method", "exact", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_0_and_documents_flags() {
    let cases: &[(&str, &[&str])] = &[
        ("solve", &["--m"]),
        ("zeros", &["--n", "--method", "--format"]),
        (
            "compare",
            &["--n-min", "--n-max", "--parity", "--out", "--summary"],
        ),
        ("quad", &["--n", "--nodes", "--integrand", "--param"]),
        ("spin", &["--s"]),
    ];
    for (sub, flags) in cases {
        let out = run(&[sub, "--help"]);
        assert!(out.status.success(), "{sub} --help");
        let text = stdout(&out);
        for flag in *flags {
            assert!(text.contains(flag), "{sub} --help missing {flag}");
        }
    }
}

#[test]
fn compare_small_sweep_counts_and_schema() {
    let out = run(&["compare", "--n-min", "1", "--n-max", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(
        text.lines().next().unwrap(),
        "n,j,x_approx,x_exact,abs_err,rel_err"
    );
    // Mirrored rows: 2 + 2 + 4 + 4.
    assert_eq!(data_lines(&text).len(), 12);
}

#[test]
fn compare_parity_filters() {
    let even = run(&[
        "compare", "--n-min", "1", "--n-max", "6", "--parity", "even",
    ]);
    for line in data_lines(&stdout(&even)) {
        let n: u32 = line.split(',').next().unwrap().parse().unwrap();
        assert_eq!(n % 2, 0);
    }
    let odd = run(&["compare", "--n-min", "1", "--n-max", "6", "--parity", "odd"]);
    for line in data_lines(&stdout(&odd)) {
        let n: u32 = line.split(',').next().unwrap().parse().unwrap();
        assert_eq!(n % 2, 1);
    }
}

#[test]
fn compare_summary_footer() {
    let out = run(&["compare", "--n-min", "1", "--n-max", "3", "--summary"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let footer: Vec<&str> = text.lines().filter(|l| l.starts_with('#')).collect();
    assert_eq!(footer.len(), 4); // header + one per degree
    assert!(footer[0].contains("min_abs_err"));
}

#[test]
fn compare_rejects_bad_ranges() {
    assert_eq!(
        run(&["compare", "--n-min", "0", "--n-max", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["compare", "--n-min", "5", "--n-max", "3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn compare_summary_requires_csv() {
    let out = run(&[
        "compare",
        "--n-min",
        "1",
        "--n-max",
        "3",
        "--summary",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compare_json_matches_csv_rows() {
    let out = run(&[
        "compare", "--n-min", "2", "--n-max", "2", "--format", "json",
    ]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["n"], 2);
    assert!(rows[0]["rel_err"].as_f64().is_some());
}

#[test]
fn compare_out_writes_atomically() {
    let dir = std::env::temp_dir().join(format!("hermite-zeros-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let out = run(&[
        "compare",
        "--n-min",
        "1",
        "--n-max",
        "5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty(), "no stdout when --out is given");
    let written = std::fs::read_to_string(&path).unwrap();
    let direct = stdout(&run(&["compare", "--n-min", "1", "--n-max", "5"]));
    assert_eq!(written, direct);
    assert!(
        !dir.join("table.csv.tmp").exists(),
        "temp file renamed away"
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn quad_exact_monomial_is_exact() {
    let out = run(&[
        "quad",
        "--n",
        "5",
        "--nodes",
        "exact",
        "--integrand",
        "monomial",
        "--param",
        "4",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "node,weight");
    assert_eq!(data_lines(&text).len(), 5);
    let abs_error: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("# abs_error "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(abs_error <= 1e-12, "{text}");
    assert!(text.contains("# integrand x^4"));
}

#[test]
fn quad_cos_and_exp_match_references() {
    for (integrand, param) in [("cos", "0.5"), ("exp", "0.25")] {
        let out = run(&[
            "quad",
            "--n",
            "20",
            "--nodes",
            "exact",
            "--integrand",
            integrand,
            "--param",
            param,
        ]);
        assert!(out.status.success());
        let text = stdout(&out);
        let abs_error: f64 = text
            .lines()
            .find_map(|l| l.strip_prefix("# abs_error "))
            .unwrap()
            .parse()
            .unwrap();
        assert!(abs_error <= 1e-10, "{integrand}: {text}");
    }
}

#[test]
fn quad_asymptotic_nodes_show_their_error() {
    let out = run(&[
        "quad",
        "--n",
        "2",
        "--nodes",
        "asymptotic",
        "--integrand",
        "monomial",
        "--param",
        "0",
    ]);
    assert!(out.status.success());
    let abs_error: f64 = stdout(&out)
        .lines()
        .find_map(|l| l.strip_prefix("# abs_error "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(abs_error > 1e-3);
}

#[test]
fn quad_rejects_fractional_monomial_degree() {
    let out = run(&[
        "quad",
        "--n",
        "5",
        "--nodes",
        "exact",
        "--integrand",
        "monomial",
        "--param",
        "2.5",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn quad_rejects_zero_nodes() {
    let out = run(&[
        "quad",
        "--n",
        "0",
        "--nodes",
        "exact",
        "--integrand",
        "monomial",
        "--param",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spin_half_integer_output() {
    let out = run(&["spin", "--s", "0.5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("radius = 1.7320508075688772"), "{text}");
    let boundaries: Vec<&str> = text
        .lines()
        .skip_while(|l| *l != "boundaries:")
        .skip(1)
        .collect();
    assert_eq!(boundaries, vec!["0"]);

    let out = run(&["spin", "--s", "1.5"]);
    let text = stdout(&out);
    assert!(text.contains("radius = 2.6457513110645907"));
    let boundaries: Vec<&str> = text
        .lines()
        .skip_while(|l| *l != "boundaries:")
        .skip(1)
        .collect();
    assert_eq!(boundaries.len(), 3);
    assert_eq!(boundaries[1], "0");
}

#[test]
fn spin_rejects_non_half_integer() {
    let out = run(&["spin", "--s", "0.3"]);
    assert_eq!(out.status.code(), Some(2));
}
