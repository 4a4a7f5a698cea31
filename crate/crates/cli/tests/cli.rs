mod support;

use hgauge::checks::Status;
use hgauge::Q;
use hgauge_cli::{execute, parse_scenario, Command as Cmd, Overrides, Report};
use support::{run, run_json, scenario_path, tests_dir, GOLDEN};

/// Set `HGAUGE_BLESS=1` to rewrite the golden files.
#[test]
fn golden_reports_are_byte_identical() {
    let bless = std::env::var_os("HGAUGE_BLESS").is_some();
    for (scenario, args, golden, code) in GOLDEN {
        let (got_code, out) = run_json(args, &scenario_path(scenario));
        assert_eq!(got_code, *code, "{golden}: exit code");
        let path = tests_dir().join("golden").join(format!("{golden}.json"));
        if bless {
            std::fs::write(&path, &out).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(out, expected, "{golden} differs from its golden report");
    }
}

#[test]
fn structured_reports_round_trip() {
    for (scenario, args, golden, _) in GOLDEN {
        let (_, out) = run_json(args, &scenario_path(scenario));
        let report = Report::from_json(&out).unwrap();
        assert_eq!(report.to_json(), out, "{golden}");
        let s = &report.summary;
        assert_eq!(s.pass + s.fail + s.reported + s.skipped, report.checks.len(), "{golden}");
    }
}

#[test]
fn repeated_runs_are_identical() {
    let path = scenario_path("skeletal-bf");
    let a = run_json(&["check", "--seed", "9"], &path);
    let b = run_json(&["check", "--seed", "9"], &path);
    assert_eq!(a, b);
}

#[test]
fn degree_beyond_chart_is_a_scenario_error() {
    let (code, out, err) = run(&["check"], &scenario_path("degree-error"));
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("degree 5") && err.contains("4-dimensional"), "{err}");
}

#[test]
fn missing_file_and_bad_flags_are_scenario_errors() {
    let (code, _, err) = run(&["check"], &tests_dir().join("scenarios/absent.json"));
    assert_eq!(code, 2);
    assert!(err.contains("absent.json"));
    let (code, _, err) = run(&["check", "--k1", "2"], &scenario_path("adjoint-gl2"));
    assert_eq!(code, 2);
    assert!(err.contains("k1"), "{err}");
}

#[test]
fn coupling_flags_accept_negative_rationals() {
    let (code, out, _) = run(&["check", "--k", "-1/2"], &scenario_path("adjoint-gl2"));
    assert_eq!(code, 0);
    assert!(out.contains("k = -1/2"), "{out}");
}

#[test]
fn text_report_has_one_line_per_check() {
    let (code, out, _) = run(&["check"], &scenario_path("corrupted-lie"));
    assert_eq!(code, 1);
    assert!(out.contains("FAIL     validate_algebra"));
    assert!(out.contains("SKIPPED  bianchi"));
    assert!(out.contains("summary: 0 pass, 1 fail, 0 reported, 2 skipped"));
}

const MINIMAL: &str = r#"{
  "chart": { "dim": 3 },
  "algebra": { "lie": { "name": "u1", "g": { "name": "u1-g", "labels": ["X"], "structure": [] } } },
  "fields": { "connection": { "A": { "degree": 1 } } },
  "checks": ["bianchi"]
}"#;

fn resolve(text: &str) -> Result<hgauge_cli::Resolved, Vec<String>> {
    parse_scenario(text)?.resolve(&Overrides::default())
}

#[test]
fn minimal_scenario_loads_and_passes() {
    let r = resolve(MINIMAL).unwrap();
    assert_eq!(r.env.level(), 1);
    let report = execute(&Cmd::Check, &r).unwrap();
    assert!(report.checks.iter().all(|c| c.status == Status::Pass));
    assert_eq!(report.exit_code(), 0);
}

#[test]
fn rationals_are_normalized_on_load() {
    let text = MINIMAL.replace(
        r#""A": { "degree": 1 }"#,
        r#""A": { "degree": 1, "components": { "X": [{ "indices": [2], "poly": [{ "exps": [1, 0, 0], "coeff": "2/4" }] }] } }"#,
    );
    let r = resolve(&text).unwrap();
    let halved = text.replace("2/4", "1/2");
    let s = resolve(&halved).unwrap();
    assert_eq!(r.env.fields.unwrap().connection_a(), s.env.fields.unwrap().connection_a());
    let r = parse_scenario(&text).unwrap();
    let json = serde_json::to_string(&r).unwrap();
    assert!(json.contains(r#""coeff":"1/2""#), "{json}");
}

#[test]
fn schema_errors_are_collected() {
    let text = MINIMAL
        .replace(r#""dim": 3"#, r#""dim": 12"#)
        .replace(r#"["bianchi"]"#, r#"["bianchi", "holonomy"]"#);
    let errors = resolve(&text).err().unwrap();
    assert_eq!(errors.len(), 2, "{errors:?}");
    assert!(errors[0].contains("chart dim 12"));
    assert!(errors[1].contains("holonomy"));
}

#[test]
fn unresolved_references_are_rejected() {
    let builtin = r#"{ "chart": { "dim": 3 }, "algebra": { "builtin": "so5" } }"#;
    assert!(resolve(builtin).err().unwrap()[0].contains("so5"));
    let label = MINIMAL.replace(r#""A": { "degree": 1 }"#, r#""A": { "degree": 1, "components": { "Y": [] } }"#);
    assert!(resolve(&label).err().unwrap()[0].contains("\"Y\""));
    let slot = MINIMAL.replace(r#""degree": 1"#, r#""degree": 2"#);
    assert!(resolve(&slot).err().unwrap()[0].contains("degree 1"));
    let level = MINIMAL.replace(r#""lie""#, r#""crossed""#);
    assert!(resolve(&level).err().unwrap()[0].contains("level"));
    let typo = MINIMAL.replace("checks", "chekcs");
    assert!(parse_scenario(&typo).err().unwrap()[0].contains("chekcs"));
}

#[test]
fn overrides_take_precedence() {
    let o = Overrides {
        seed: Some(42),
        dim: Some(5),
        k: Some(Q::new(1, 3)),
        ..Default::default()
    };
    let text = r#"{ "chart": { "dim": 3 }, "algebra": { "builtin": "abelian-1" }, "rng": { "seed": 1 } }"#;
    let r = parse_scenario(text).unwrap().resolve(&o).unwrap();
    assert_eq!(r.env.seed, 42);
    assert_eq!(r.env.dim(), 5);
    assert_eq!(r.env.ctx.k, Q::new(1, 3));
}

#[test]
fn empty_report_is_a_valid_document() {
    let r = Report::default();
    let json = r.to_json();
    assert_eq!(Report::from_json(&json).unwrap(), r);
    assert_eq!(r.exit_code(), 0);
    assert!(r.to_text().contains("summary: 0 pass, 0 fail, 0 reported, 0 skipped"));
}

#[test]
fn unequal_couplings_report_the_mc3_residual() {
    let text = std::fs::read_to_string(scenario_path("mc3-unequal")).unwrap();
    let report = execute(&Cmd::Check, &resolve(&text).unwrap()).unwrap();
    let mc3 = report.checks.iter().find(|c| c.name == "mc3").unwrap();
    assert_eq!(mc3.status, Status::Reported);
    assert!(mc3.residuals[0].nonzero > 0);
    assert_eq!(report.exit_code(), 0);
}

#[test]
fn gauge_without_realization_is_rejected() {
    let r = resolve(MINIMAL).unwrap();
    assert!(execute(&Cmd::Gauge, &r).is_err());
}
