use std::path::PathBuf;

use brauer_i2n_cli::{
    execute, parse_args, Command, PictureFormat, ReportFormat, EXIT_FAILED, EXIT_OK, EXIT_USAGE,
};
use serde_json::Value;

fn run(argv: &[&str]) -> (i32, String, String) {
    let cmd = parse_args(argv).expect("arguments parse");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = execute(&cmd, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn run_json(argv: &[&str]) -> Value {
    let (code, out, err) = run(argv);
    assert_eq!(code, EXIT_OK, "{argv:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("brauer-i2n-cli-{}-{name}", std::process::id()))
}

#[test]
fn parses_verbs() {
    assert_eq!(
        parse_args(["verify", "--n", "6"]).unwrap(),
        Command::Verify {
            n: 6,
            format: ReportFormat::Json
        }
    );
    assert_eq!(
        parse_args(["particle", "--m", "5", "--k", "2"]).unwrap(),
        Command::Particle {
            m: 5,
            k: 2,
            trace: false,
            svg: None
        }
    );
    assert_eq!(
        parse_args(["render", "--input", "d.json", "--format", "svg"]).unwrap(),
        Command::Render {
            input: "d.json".into(),
            format: PictureFormat::Svg
        }
    );
    assert_eq!(
        parse_args(["atype-rank", "--t", "3"]).unwrap(),
        Command::AtypeRank { t: 3 }
    );
    assert_eq!(
        parse_args(["normal-forms", "--n", "7"]).unwrap(),
        Command::NormalForms { n: 7 }
    );
}

#[test]
fn rejects_bad_arguments() {
    for argv in [
        vec!["verify"],
        vec!["verify", "--n", "six"],
        vec!["verify", "--n", "4"],
        vec!["verify", "--n", "6", "--colour"],
        vec!["frobnicate"],
        vec!["particle", "--m", "5"],
        vec!["render", "--input", "x", "--format", "png"],
        vec!["atype-rank", "--t", "0"],
    ] {
        let e = parse_args(&argv).unwrap_err();
        assert!(e.use_stderr(), "{argv:?}");
    }
}

#[test]
fn verify_reports() {
    for n in 5..=10 {
        let (code, out, _) = run(&["verify", "--n", &n.to_string()]);
        assert_eq!(code, EXIT_OK, "n = {n}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["image_rank"], v["formula_rank"]);
        assert_eq!(v["injective"], true);
        assert!(v["relations"]
            .as_array()
            .unwrap()
            .iter()
            .all(|r| r["holds"] == true));
    }
    let (_, raw, _) = run(&["verify", "--n", "6"]);
    let v: Value = serde_json::from_str(&raw).unwrap();
    assert_eq!(v["image_rank"], 66);
    let fields = [
        "\"n\"",
        "\"theta\"",
        "\"relations\"",
        "\"image_rank\"",
        "\"formula_rank\"",
        "\"injective\"",
    ];
    let positions: Vec<usize> = fields.iter().map(|f| raw.find(f).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{raw}");

    let (code, out, _) = run(&["verify", "--n", "7", "--format", "text"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("image rank 63 (formula 63)"));
}

#[test]
fn small_reports() {
    assert_eq!(
        run_json(&["atype-rank", "--t", "3"]),
        serde_json::json!({"t": 3, "count": 105, "expected": 105})
    );
    assert_eq!(
        run_json(&["rank", "--n", "8"]),
        serde_json::json!({"n": 8, "image_rank": 112, "formula_rank": 112})
    );
    assert_eq!(run_json(&["theta", "--n", "6"])["theta"]["kappa1"], 3);
    let orbits = run_json(&["orbits", "--n", "10"]);
    assert_eq!(
        orbits["orbit_sizes"],
        serde_json::json!({"Y0": 5, "Y1": 5, "Y2": 5})
    );
    assert_eq!(orbits["disjoint_Y1_Y2"], true);
    let forms = run_json(&["normal-forms", "--n", "5"]);
    assert_eq!(forms["count"], 35);
    assert_eq!(forms["forms"].as_array().unwrap().len(), 35);
}

#[test]
fn particle() {
    let v = run_json(&["particle", "--m", "5", "--k", "2"]);
    assert_eq!(v["stop"], serde_json::json!([1, 0]));
    assert_eq!(v["relation"], "0.1.14");

    let (code, out, _) = run(&["particle", "--m", "5", "--k", "2", "--trace"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().next(), Some("1 3"));
    assert_eq!(out.lines().last(), Some("1 0"));

    let svg = temp_path("particle.svg");
    let (code, _, _) = run(&[
        "particle",
        "--m",
        "4",
        "--k",
        "2",
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(std::fs::read_to_string(&svg).unwrap().contains("<polyline"));
    let _ = std::fs::remove_file(svg);

    let (code, _, err) = run(&["particle", "--m", "3", "--k", "2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.starts_with("error:"));
}

#[test]
fn render() {
    let path = temp_path("diagram.json");
    std::fs::write(&path, r#"{"t":1,"delta":0,"pairs":[[1,2],[3,4]]}"#).unwrap();
    let (code, out, _) = run(&["render", "--input", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "╭─╮\n● ●\n\n● ●\n╰─╯\n");
    let (code, out, _) = run(&[
        "render",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "svg",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("<svg"));

    std::fs::write(&path, r#"{"t":1,"delta":0,"pairs":[[1,2],[2,4]]}"#).unwrap();
    let (code, _, err) = run(&["render", "--input", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(!err.is_empty());
    let _ = std::fs::remove_file(&path);

    let (code, _, _) = run(&["render", "--input", "/nonexistent/diagram.json"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn deterministic_output() {
    for argv in [
        &["verify", "--n", "8"][..],
        &["orbits", "--n", "12"],
        &["normal-forms", "--n", "6"],
    ] {
        assert_eq!(run(argv).1, run(argv).1);
    }
}

#[test]
fn failure_code_is_distinct() {
    assert_ne!(EXIT_FAILED, EXIT_OK);
    assert_ne!(EXIT_FAILED, EXIT_USAGE);
}
