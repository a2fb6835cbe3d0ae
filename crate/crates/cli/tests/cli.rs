use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};
use std::process::{Command, Output};

fn unruh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unruh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Value of a `key: value` line.
fn field(text: &str, key: &str) -> String {
    let prefix = format!("{key}: ");
    text.lines()
        .find_map(|l| l.strip_prefix(&prefix))
        .unwrap_or_else(|| panic!("no '{key}' in output:\n{text}"))
        .to_string()
}

fn num(text: &str, key: &str) -> f64 {
    field(text, key).parse().unwrap()
}

#[test]
fn measure_werner_at_infinite_acceleration() {
    let o = unruh(&[
        "measure", "--family", "werner", "--p", "1", "--accel", "inf",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!((num(&s, "fidelity") - 0.819035593729).abs() < 1e-12);
    assert!((num(&s, "concurrence") - FRAC_1_SQRT_2).abs() < 1e-11);
    assert_eq!(num(&s, "bell_max"), 2.0);
    assert_eq!(field(&s, "bell_boundary"), "true");
    assert_eq!(field(&s, "bell_violating"), "false");
}

#[test]
fn measure_prints_twelve_significant_digits() {
    let s = stdout(&unruh(&[
        "measure", "--family", "werner", "--p", "1", "--accel", "inf",
    ]));
    let digits = field(&s, "fidelity")
        .chars()
        .filter(char::is_ascii_digit)
        .count();
    assert!(digits >= 12, "{s}");
}

#[test]
fn measure_x_state_inertial_is_maximally_entangled() {
    let s = stdout(&unruh(&[
        "measure", "--family", "x", "--p", "0", "--accel", "0",
    ]));
    assert_eq!(num(&s, "fidelity"), 1.0);
    assert_eq!(num(&s, "concurrence"), 1.0);
    assert!((num(&s, "bell_max") - 2.0 * SQRT_2).abs() < 1e-11);
}

#[test]
fn measure_bell_diagonal_half_sits_on_the_fidelity_boundary() {
    let s = stdout(&unruh(&[
        "measure", "--family", "bd", "--p", "0.5", "--accel", "0",
    ]));
    assert!((num(&s, "fidelity") - 2.0 / 3.0).abs() < 1e-12);
    assert_eq!(field(&s, "fidelity_boundary"), "true");
    assert_eq!(field(&s, "teleports_quantumly"), "false");
}

#[test]
fn measure_accepts_r_directly() {
    let s = stdout(&unruh(&[
        "measure", "--family", "werner", "--p", "1", "--r", "0",
    ]));
    assert_eq!(num(&s, "cos_r"), 1.0);
}

#[test]
fn parameter_errors_exit_with_two() {
    let cases: &[&[&str]] = &[
        &[
            "measure", "--family", "werner", "--p", "1.5", "--accel", "0",
        ],
        &[
            "measure", "--family", "werner", "--p", "0.5", "--accel", "-1",
        ],
        &["measure", "--family", "werner", "--p", "0.5"],
        &[
            "measure", "--family", "werner", "--p", "0.5", "--accel", "1", "--r", "0.1",
        ],
        &["measure", "--family", "nope", "--p", "0.5", "--accel", "1"],
        &["measure", "--family", "werner", "--p", "0.5", "--r", "1.0"],
        &["sweep", "--p-steps", "1"],
        &["sweep", "--p-min", "0.8", "--p-max", "0.2"],
        &["sweep", "--omega", "0"],
        &["validate", "--family", "x", "--tol", "-1"],
        &["choi", "--r", "2.0", "--allow-unphysical"],
        &["bogus"],
    ];
    for args in cases {
        let o = unruh(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn unphysical_r_needs_the_override() {
    let o = unruh(&["choi", "--r", "1.2", "--emit", "eigs", "--allow-unphysical"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn unwritable_output_exits_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.csv");
    let o = unruh(&[
        "sweep",
        "--family",
        "werner",
        "--p-steps",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn werner_sweep_rows_and_order() {
    let s = stdout(&unruh(&[
        "sweep",
        "--family",
        "werner",
        "--p-steps",
        "101",
        "--accels",
        "0,2,5,inf",
    ]));
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(
        lines[0],
        "family,p,accel,r,cos_r,n_value,fidelity,concurrence,bell_max,cf_fidelity,cf_concurrence,cf_bell_max,max_abs_diff"
    );
    assert_eq!(lines.len(), 1 + 404);
    let accels: Vec<&str> = lines[1..]
        .iter()
        .map(|l| l.split(',').nth(2).unwrap())
        .collect();
    assert!(accels[..101].iter().all(|&a| a == "0"));
    assert!(accels[303..].iter().all(|&a| a == "inf"));
    let last: Vec<&str> = lines[404].split(',').collect();
    assert_eq!(last[1], "1");
    assert!((last[6].parse::<f64>().unwrap() - 0.819036).abs() < 1e-6);
}

#[test]
fn sweep_values_round_trip() {
    let s = stdout(&unruh(&[
        "sweep",
        "--family",
        "x",
        "--p-steps",
        "5",
        "--accels",
        "0.5,inf",
    ]));
    for line in s.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols.len(), 13);
        assert_eq!(cols[10], "", "x-state has no concurrence closed form");
        let m = stdout(&unruh(&[
            "measure", "--family", "x", "--p", cols[1], "--accel", cols[2],
        ]));
        let f: f64 = cols[6].parse().unwrap();
        assert!((num(&m, "fidelity") - f).abs() < 1e-11);
    }
}

#[test]
fn bell_diagonal_inertial_sweep_never_drops_below_classical() {
    let s = stdout(&unruh(&["sweep", "--family", "bd", "--accels", "0"]));
    for line in s.lines().skip(1) {
        let f: f64 = line.split(',').nth(6).unwrap().parse().unwrap();
        assert!(f >= 2.0 / 3.0 - 1e-12);
    }
}

#[test]
fn sweep_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = unruh(&["sweep", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn validate_reports_findings_and_succeeds() {
    let s = stdout(&unruh(&[
        "validate",
        "--family",
        "werner",
        "--p-steps",
        "11",
        "--r-steps",
        "6",
    ]));
    assert!(s.contains("fidelity: 66 match, 0 mismatch"), "{s}");
    assert!(s.contains("bell_eigs:"), "{s}");
    let x = unruh(&[
        "validate",
        "--family",
        "x",
        "--p-steps",
        "11",
        "--r-steps",
        "6",
    ]);
    assert_eq!(x.status.code(), Some(0));
    assert!(stdout(&x).contains("bell_eigs: 66 match, 0 mismatch"));
}

#[test]
fn validate_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let o = unruh(&[
        "validate",
        "--family",
        "bd",
        "--p-steps",
        "5",
        "--r-steps",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(path)
        .unwrap()
        .starts_with("family: bd"));
}

#[test]
fn choi_emits_matrix_kraus_and_spectrum() {
    let choi = stdout(&unruh(&["choi", "--accel", "inf", "--emit", "choi"]));
    let rows: Vec<&str> = choi.lines().collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[0].contains("0.5") && rows[0].contains("0.707106781187"));
    assert!(rows[3].trim_end_matches(" ]").ends_with('1'));

    let kraus = stdout(&unruh(&["choi", "--r", "0", "--emit", "kraus"]));
    assert!(
        kraus.contains("K1:\n[ 1  0 ]\n[ 0  1 ]\nK2:\n[ 0  0 ]\n[ 0  0 ]"),
        "{kraus}"
    );

    let eigs = stdout(&unruh(&["choi", "--r", "0.5", "--emit", "eigs"]));
    let v: Vec<f64> = eigs
        .trim()
        .split(", ")
        .map(|x| x.parse().unwrap())
        .collect();
    assert_eq!(v.len(), 4);
    assert!((v[0] - (1.0 + 0.5f64.cos().powi(2))).abs() < 1e-11);
    assert!((v[1] - 0.5f64.sin().powi(2)).abs() < 1e-11);
    assert_eq!(&v[2..], &[0.0, 0.0]);
}

#[test]
fn thresholds_for_werner() {
    let s = stdout(&unruh(&[
        "thresholds",
        "--family",
        "werner",
        "--accel",
        "0",
    ]));
    let bell: f64 = field(&s, "bell crossings (B = 2)").parse().unwrap();
    let fid: f64 = field(&s, "fidelity crossings (F = 2/3)").parse().unwrap();
    assert!((bell - FRAC_1_SQRT_2).abs() < 1e-7);
    assert!((fid - 1.0 / 3.0).abs() < 1e-7);
    let inf = stdout(&unruh(&[
        "thresholds",
        "--family",
        "werner",
        "--accel",
        "inf",
    ]));
    assert_eq!(field(&inf, "bell crossings (B = 2)"), "1");
}
