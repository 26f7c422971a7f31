use std::fs;
use std::process::{Command, Output};

fn catsim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catsim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const ONE_POINT: &[&str] = &[
    "sweep",
    "--alpha-min",
    "1",
    "--alpha-max",
    "1",
    "--alpha-steps",
    "1",
    "--eta",
    "1",
    "--theta",
    "0",
    "--w",
    "0.5",
    "--code",
    "1",
];

#[test]
fn single_point_sweep_gives_tanh_two() {
    let o = catsim(ONE_POINT);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(
        lines[0],
        "alpha,eta,theta,w,n,p_e,P_e,p_success,concurrence_general,concurrence_x,concurrence_evolution,max_route_disagreement,flag"
    );
    let fields: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(&fields[..5], &["1", "1", "0", "0.5", "1"]);
    for c in &fields[8..11] {
        assert!((c.parse::<f64>().unwrap() - 2.0f64.tanh()).abs() < 1e-8, "{c}");
    }
    assert!(fields[11].parse::<f64>().unwrap() < 1e-9);
    assert_eq!(fields[12], "");
}

#[test]
fn empty_code_list_is_rejected() {
    let o = catsim(&["sweep", "--code", ""]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("at least one code required"));
}

#[test]
fn validation_errors_exit_one() {
    for args in [
        &["sweep", "--code", "4"][..],
        &["sweep", "--eta", "1.2"],
        &["sweep", "--alpha-min", "2", "--alpha-max", "1"],
        &["sweep", "--alpha-steps", "0"],
        &["sweep", "--route", "sideways"],
        &["figure", "0"],
        &["figure", "6"],
        &["verify", "--tol", "no-such-check=1"],
        &["verify", "--tol", "oracle.lowdin"],
        &["frobnicate"],
    ] {
        let o = catsim(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}: {}", stderr(&o));
    }
    assert_eq!(catsim(&["--help"]).status.code(), Some(0));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("sweep.conf");
    fs::write(
        &conf,
        "# one lossless point\nalpha-min = 0.5\nalpha-max = 0.5\nalpha-steps = 1\neta = 1\ntheta = pi\nw = 1/2\ncode = 3\n",
    )
    .unwrap();
    let out = dir.path().join("rows.csv");
    let o = catsim(&[
        "sweep",
        "--config",
        conf.to_str().unwrap(),
        "--alpha-min",
        "0.25",
        "--alpha-max",
        "0.25",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    let csv = fs::read_to_string(&out).unwrap();
    let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[0], "0.25");
    assert_eq!(row[4], "3");
    assert_eq!(row[8], "1");
}

#[test]
fn config_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("bad.conf");
    fs::write(&conf, "eta = 0.5\n\ntheta = zero\n").unwrap();
    let o = catsim(&["sweep", "--config", conf.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("bad.conf:3:"), "{}", stderr(&o));
}

#[test]
fn unwritable_output_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("missing").join("rows.csv");
    let mut args = ONE_POINT.to_vec();
    args.extend(["--out", out.to_str().unwrap()]);
    let o = catsim(&args);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("cannot write"));
}

#[test]
fn verify_passes_and_fault_injection_fails() {
    let o = catsim(&["verify"]);
    let report = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{report}");
    assert!(report.contains("all checks passed"));
    assert!(report.contains("expected-discrepancy"));
    assert!(report.lines().any(|l| l.starts_with("concurrence.route-evolution-encoded")));

    let o = catsim(&["verify", "--inject-pair-flip-offset", "1e-3"]);
    let report = stdout(&o);
    assert_eq!(o.status.code(), Some(2), "{report}");
    let line = report
        .lines()
        .find(|l| l.starts_with("concurrence.route-evolution-direct"))
        .unwrap();
    assert!(line.ends_with("FAIL"));
}

#[test]
fn tolerance_override_can_fail_a_check() {
    let o = catsim(&["verify", "--tol", "concurrence.no-sudden-death=0.5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_bytes_do_not_depend_on_threads() {
    let run = |threads: &str| {
        let o = catsim(&[
            "sweep",
            "--alpha-min",
            "0.3",
            "--alpha-max",
            "2.1",
            "--alpha-steps",
            "7",
            "--eta",
            "0:1:6",
            "--theta",
            "0,pi/2,pi",
            "--w",
            "0.2,0.5",
            "--code",
            "1,3,11",
            "--threads",
            threads,
        ]);
        assert_eq!(o.status.code(), Some(0));
        o.stdout
    };
    let one = run("1");
    assert_eq!(one, run("3"));
    assert_eq!(String::from_utf8(one).unwrap().lines().count(), 1 + 7 * 6 * 3 * 2 * 3);
}

#[test]
fn figures_have_their_axes() {
    let expect = [
        ("1", "alpha,overlap"),
        ("2", "alpha,p_e_eta_2/3,p_e_eta_0.9"),
        ("3", "alpha,theta,C"),
        ("4", "panel,eta,theta,alpha,C_n1,C_n3,C_n5,C_n11,C_n51,"),
        ("5", "eta,C_n1,C_n3,C_n5,C_n11,C_n51,"),
    ];
    for (id, header) in expect {
        let o = catsim(&["figure", id, "--resolution", "11"]);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        assert!(text.starts_with(header), "figure {id}: {}", text.lines().next().unwrap());
    }
    let fig1 = stdout(&catsim(&["figure", "1"]));
    assert!(fig1.lines().any(|l| l == "1,0.135335283"));
}
