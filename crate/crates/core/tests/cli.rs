use std::process::Command;

use rectpoint::arith::parse_rational;
use rectpoint::cli::{run_formulas_with, FigureDoc};
use rectpoint::theorems::{
    check_claim, reference_formulas, ClaimId, Config, Outcome, TheoremReport, Transcribed,
};

fn rectpoint(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_rectpoint"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn verify_symbolic_claim() {
    let (code, out, _) = rectpoint(&["verify", "--claim", "T1E", "--mode", "symbolic"]);
    assert_eq!(code, 0);
    assert!(out.contains("proven"), "{out}");
}

#[test]
fn verify_all_sampled_as_json() {
    let (code, out, err) = rectpoint(&[
        "verify",
        "--claim",
        "all",
        "--mode",
        "sampled",
        "--samples",
        "100",
        "--seed",
        "7",
        "--json",
    ]);
    assert_eq!(code, 0, "{err}");
    let reports: Vec<TheoremReport> = serde_json::from_str(&out).unwrap();
    assert_eq!(reports.len(), 13);
    for r in &reports {
        assert!(r.succeeded(), "{:?}", r.claim);
        assert_eq!(r.elapsed_ms, 0);
    }
}

#[test]
fn unknown_claim() {
    let (code, _, err) = rectpoint(&["verify", "--claim", "T99"]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage"));
}

#[test]
fn formula_catalog() {
    let (code, out, _) = rectpoint(&["formulas"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.ends_with(" MATCH")).count(), 30);
    assert!(!out.contains("MISMATCH"));

    let (code, out, _) = rectpoint(&["formulas", "--json"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["all_match"], true);
    assert_eq!(doc["entries"].as_array().unwrap().len(), 30);
}

#[test]
fn corrupted_transcription_trips_the_catalog() {
    let mut table = reference_formulas();
    if let Transcribed::Line { slope, .. } = &mut table[29].form {
        slope[1] = format!("{} + a^5", slope[1]);
    }
    let mut out = Vec::new();
    assert_eq!(run_formulas_with(&table, false, &mut out), Ok(1));
    let text = String::from_utf8(out).unwrap();
    let bad: Vec<&str> = text.lines().filter(|l| l.ends_with("MISMATCH")).collect();
    assert_eq!(bad.len(), 1);
    assert!(bad[0].starts_with("(30)"), "{}", bad[0]);
}

fn figure_doc(claim: &str, params: &str) -> FigureDoc {
    let (code, out, err) = rectpoint(&[
        "figure", "--claim", claim, "--params", params, "--format", "json",
    ]);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn coords(doc: &FigureDoc, name: &str) -> Vec<f64> {
    let e = doc
        .elements
        .iter()
        .find(|e| e.name == name)
        .unwrap_or_else(|| panic!("{name}"));
    e.coordinates.iter().map(|c| c.parse().unwrap()).collect()
}

#[test]
fn euler_figure() {
    let doc = figure_doc("T1E", "1,2,3,5");
    assert!(doc.holds);
    assert_eq!(coords(&doc, "Q"), vec![28.0, -42.0]);
    let r = coords(&doc, "R");
    assert!((r[0] - 80.0 / 27.0).abs() < 1e-15 && (r[1] - 49.0 / 27.0).abs() < 1e-15);
    assert_eq!(coords(&doc, "I"), vec![2.0, 3.5]);
    assert!(doc
        .elements
        .iter()
        .any(|e| e.name == "QR" && e.kind == "line"));
    let [x0, y0, x1, y1] = doc.bbox();
    for e in doc.elements.iter().filter(|e| e.kind == "point") {
        let c = coords(&doc, &e.name);
        assert!(
            x0 < c[0] && c[0] < x1 && y0 < c[1] && c[1] < y1,
            "{}",
            e.name
        );
    }
    let mut names: Vec<&str> = doc.elements.iter().map(|e| e.name.as_str()).collect();
    names.sort_unstable();
    names.dedup();
    assert_eq!(names.len(), doc.elements.len());
}

#[test]
fn figure_rejects_a_flat_rectangle() {
    let (code, _, err) = rectpoint(&["figure", "--claim", "T1E", "--params", "1,2,1,5"]);
    assert_eq!(code, 3);
    assert!(err.contains("undefined"));
}

#[test]
fn brocard_svg_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t1b.svg");
    let (code, _, _) = rectpoint(&[
        "figure",
        "--claim",
        "T1B",
        "--params",
        "1,2,3,5",
        "--format",
        "svg",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains(r#"version="1.1""#));
    for id in ["M", "N", "P", "brocard_a"] {
        assert!(svg.contains(&format!(r#"id="{id}""#)), "{id}");
    }
    assert_eq!(svg.matches("<svg").count(), 1);
    assert!(svg.trim_end().ends_with("</svg>"));
}

/// Figure coordinates read back as decimals satisfy the claim's checks.
#[test]
fn figures_replay_their_claims() {
    let cases = [
        (
            "1,2,3,5",
            ClaimId::ALL
                .iter()
                .filter(|c| **c != ClaimId::T2)
                .copied()
                .collect::<Vec<_>>(),
        ),
        (
            "-3/2,7,11/3,-4",
            ClaimId::ALL
                .iter()
                .filter(|c| **c != ClaimId::T2)
                .copied()
                .collect(),
        ),
        ("1,2,3,5,-1,4", vec![ClaimId::T2]),
    ];
    for (params, claims) in cases {
        for claim in claims {
            let doc = figure_doc(claim.name(), params);
            let values = params
                .split(',')
                .map(|p| parse_rational(p).unwrap())
                .collect();
            let cfg = Config::from_params(claim.kind(), values).unwrap();
            let eval = check_claim(claim, &cfg, None).unwrap();
            assert_eq!(
                eval.recheck(&doc.to_witness()),
                Outcome::Holds,
                "{claim} at {params}"
            );
        }
    }
}
