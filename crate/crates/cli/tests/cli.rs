use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_isac-rates"));
    cmd.env_remove("ISAC_RATES_THREADS");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const SMALL_SPEC: &str = r#"
rho2 = [0.01, 0.9]
sn2 = [0.1, 0.5]
ss1 = [0.5]
ss2 = ["ss1 / sn2", 0.05]
seed = 7

[power]
min = 0.1
max = 10.0
points = 3
"#;

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn rate_prints_every_term() {
    let out = run(&[
        "rate",
        "--sn2",
        "0.1",
        "--ss1",
        "1",
        "--ss2",
        "10",
        "--rho2",
        "0.5",
        "--power",
        "1",
        "--skip-part-b",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    for key in ["part_a", "part_b_ub", "r_beta", "achievable_ub"] {
        assert!(text.contains(key), "missing {key} in\n{text}");
    }
    assert!(text.contains("0.4301736911"), "{text}");
}

#[test]
fn rate_json_matches_library() {
    let out = run(&[
        "rate",
        "--sn2",
        "0.5",
        "--ss1",
        "0.1",
        "--ss2",
        "0.2",
        "--rho2",
        "0.01",
        "--power",
        "10",
        "--skip-part-b",
        "--json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let r_beta = v["rates"]["r_beta"].as_f64().unwrap();
    let c = isac_rates::fading::ChannelParams::from_values(1.0, 0.5, 0.1, 0.2, 0.01, 10.0).unwrap();
    let want =
        isac_rates::rates::rate_part_c(&c, isac_rates::rates::RbetaMode::PaperLiteral).unwrap();
    assert_eq!(r_beta, want);
}

#[test]
fn nondegraded_channel_is_a_domain_error() {
    let args = [
        "rate",
        "--sn2",
        "0.5",
        "--ss1",
        "0.1",
        "--ss2",
        "10",
        "--rho2",
        "0.5",
        "--power",
        "1",
        "--skip-part-b",
    ];
    assert_eq!(code(&run(&args)), 2);
    let mut allowed = args.to_vec();
    allowed.push("--allow-nondegraded");
    assert_eq!(code(&run(&allowed)), 0);
}

#[test]
fn invalid_parameters_are_domain_errors() {
    let out = run(&[
        "rate", "--sn2", "0.1", "--ss1", "1", "--ss2", "10", "--rho2", "1", "--power", "1",
    ]);
    assert_eq!(code(&out), 2);
    let out = run(&[
        "rate",
        "--sn2",
        "0.1",
        "--ss1",
        "1",
        "--ss2",
        "10",
        "--rho2",
        "0.5",
        "--power=-1",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn tiny_power_uses_the_bound_fallback() {
    // z far above the closed-form switch; the fallback integral must still succeed
    let out = run(&[
        "rate",
        "--sn2",
        "0.1",
        "--ss1",
        "0.1",
        "--ss2",
        "1",
        "--rho2",
        "0.9",
        "--power",
        "1e-4",
        "--skip-part-b",
        "--json",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rates"]["part_b_ub_closed_form"], false);
    assert!(v["rates"]["part_b_ub"].as_f64().unwrap().is_finite());
}

#[test]
fn usage_errors_exit_64_and_help_exits_0() {
    assert_eq!(code(&run(&["frobnicate"])), 64);
    assert_eq!(code(&run(&["rate", "--sn2", "x"])), 64);
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
}

#[test]
fn sweep_is_deterministic_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "s.toml", SMALL_SPEC);
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let out = run(&[
        "sweep",
        "--spec",
        &spec,
        "--out",
        a.to_str().unwrap(),
        "--threads",
        "1",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let out = run(&[
        "sweep",
        "--spec",
        &spec,
        "--out",
        b.to_str().unwrap(),
        "--threads",
        "4",
    ]);
    assert_eq!(code(&out), 0);
    let ta = std::fs::read(&a).unwrap();
    assert_eq!(ta, std::fs::read(&b).unwrap());
    // 2 rho2 × 2 sn2 × 2 rules × 3 powers, plus header
    assert_eq!(String::from_utf8(ta).unwrap().lines().count(), 25);
}

#[test]
fn sweep_manifest_reproduces_the_csv() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "s.toml", SMALL_SPEC);
    let a = dir.path().join("a.csv");
    assert_eq!(
        code(&run(&[
            "sweep",
            "--spec",
            &spec,
            "--out",
            a.to_str().unwrap()
        ])),
        0
    );
    let manifest = dir.path().join("a.manifest.json");
    let m: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&manifest).unwrap()).unwrap();
    assert_eq!(m["seed"], 7);
    assert_eq!(m["csv_schema_version"], 1);
    assert_eq!(m["grid"]["power"], serde_json::json!([0.1, 1.0, 10.0]));

    let b = dir.path().join("b.csv");
    let out = run(&[
        "sweep",
        "--spec",
        manifest.to_str().unwrap(),
        "--out",
        b.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn sweep_rejects_bad_specs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("o.csv");
    let out = out.to_str().unwrap();
    let empty = write(
        dir.path(),
        "e.toml",
        "rho2 = [0.5]\nsn2 = [0.1]\nss1 = [1.0]\nss2 = [1.0]\n[power]\nvalues = []\n",
    );
    assert_eq!(code(&run(&["sweep", "--spec", &empty, "--out", out])), 64);
    let unknown = write(
        dir.path(),
        "u.toml",
        "rho2 = [0.5]\nsn2 = [0.1]\nss1 = [1.0]\nss2 = [1.0]\nbogus = 1\n",
    );
    assert_eq!(code(&run(&["sweep", "--spec", &unknown, "--out", out])), 64);
    let bad_rule = write(
        dir.path(),
        "r.toml",
        "rho2 = [0.5]\nsn2 = [0.1]\nss1 = [1.0]\nss2 = [\"ss1 / nope\"]\n",
    );
    assert_eq!(
        code(&run(&["sweep", "--spec", &bad_rule, "--out", out])),
        64
    );
    let missing = dir.path().join("missing.toml");
    assert_eq!(
        code(&run(&[
            "sweep",
            "--spec",
            missing.to_str().unwrap(),
            "--out",
            out
        ])),
        1
    );
}

#[test]
fn nondegraded_points_fail_the_sweep_unless_allowed() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "n.toml",
        "rho2 = [0.5]\nsn2 = [0.5]\nss1 = [0.1]\nss2 = [10.0]\n[power]\nvalues = [1.0]\n",
    );
    let out = dir.path().join("o.csv");
    let out = out.to_str().unwrap();
    assert_eq!(code(&run(&["sweep", "--spec", &spec, "--out", out])), 2);
    assert_eq!(
        code(&run(&[
            "sweep",
            "--spec",
            &spec,
            "--out",
            out,
            "--allow-nondegraded"
        ])),
        0
    );
    let text = std::fs::read_to_string(out).unwrap();
    assert!(text.lines().nth(1).unwrap().contains(",ok_nondegraded,"));
}

#[test]
fn plotdata_splits_by_subfigure() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t1.csv");
    let out = run(&["sweep", "--spec", "table1", "--out", csv.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));

    let plots = dir.path().join("plots");
    let out = run(&[
        "plotdata",
        "--input",
        csv.to_str().unwrap(),
        "--out-dir",
        plots.to_str().unwrap(),
        "--rho2",
        "0.01",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let files: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(files.len(), 6);

    // r_beta depends on power alone, so every subfigure carries the same curve
    let mut curves = Vec::new();
    for f in &files {
        let mut rdr = csv::Reader::from_path(f).unwrap();
        assert_eq!(
            rdr.headers().unwrap().iter().collect::<Vec<_>>(),
            ["ss2", "power", "r_alpha", "r_alpha_ub", "r_beta"]
        );
        let mut curve: Vec<(String, String)> = rdr
            .records()
            .map(|r| {
                let r = r.unwrap();
                (r[1].to_string(), r[4].to_string())
            })
            .collect();
        curve.sort();
        curve.dedup();
        assert_eq!(curve.len(), 20);
        curves.push(curve);
    }
    assert!(curves.windows(2).all(|w| w[0] == w[1]));

    let out = run(&[
        "plotdata",
        "--input",
        csv.to_str().unwrap(),
        "--out-dir",
        plots.to_str().unwrap(),
        "--rho2",
        "0.3",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_specfun_passes() {
    let out = run(&["verify", "--scope", "specfun"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn verify_part_c_with_few_samples() {
    let out = run(&[
        "verify",
        "--scope",
        "part_c",
        "--samples",
        "2e5",
        "--threads",
        "2",
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn invalid_thread_cap_is_a_usage_error() {
    let out = bin()
        .args(["verify", "--scope", "specfun"])
        .env("ISAC_RATES_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(code(&out), 64);
    let out = bin()
        .args(["verify", "--scope", "specfun"])
        .env("ISAC_RATES_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}
