use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::arith::{parse_poly, RatFun};
use crate::centers::{centroid, symmedian_point};
use crate::field::Field;
use crate::geometry::{perpendicular_bisector, Line, Point};

use super::claims::{run_checks, Outcome, TRI};
use super::config::RectConfig;
use super::report::{ClaimResult, Mode, Status, TheoremReport};
use super::witness::{join, tag, Check, Halt, Witness};
use super::ClaimId;

/// A displayed formula as written, each rational as `[numerator,
/// denominator]` polynomial text over `a, b, c, d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Transcribed {
    /// `y = slope·x + intercept`.
    Line {
        slope: [String; 2],
        intercept: [String; 2],
    },
    Point {
        x: [String; 2],
        y: [String; 2],
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcription {
    pub index: usize,
    /// Name of the object in the derivation, e.g. `O_a`.
    pub label: String,
    pub form: Transcribed,
}

fn line(index: usize, label: &str, slope: [&str; 2], intercept: [&str; 2]) -> Transcription {
    Transcription {
        index,
        label: label.into(),
        form: Transcribed::Line {
            slope: slope.map(String::from),
            intercept: intercept.map(String::from),
        },
    }
}

fn point(index: usize, label: &str, x: [&str; 2], y: [&str; 2]) -> Transcription {
    Transcription {
        index,
        label: label.into(),
        form: Transcribed::Point {
            x: x.map(String::from),
            y: y.map(String::from),
        },
    }
}

const MX: &str = "-a^3*b*d + a^3*c^2 - a^2*b*c*d + a^2*c^3 - a*b^3*d - a*b^2*d^2 - a*b*c^2*d \
                  - a*b*d^3 - b^3*c*d - b^2*c*d^2 - b*c^3*d - b*c*d^3";
const MY: &str = "a^3*b*c + a^3*c*d + a^2*b*c^2 + a^2*c^2*d + a*b^3*c + a*b^2*c*d + a*b*c^3 \
                  + a*b*c*d^2 + a*c^3*d + a*c*d^3 - b^3*d^2 - b^2*d^3";

/// The thirty displayed formulas of the main proof, in order.
pub fn reference_formulas() -> Vec<Transcription> {
    let sym_den_a = "2*a^2 - 2*a*c + 2*b^2 + 2*c^2";
    let sym_den_b = "2*b^2 - 2*b*d + 2*c^2 + 2*d^2";
    let sym_den_c = "2*a^2 - 2*a*c + 2*c^2 + 2*d^2";
    let sym_den_d = "2*a^2 + 2*b^2 - 2*b*d + 2*d^2";
    let m_den = "2*a^3*c - 2*a^2*c^2 - 4*a*b*c*d + 2*a*c^3 - 2*b^3*d - 2*b^2*d^2 - 2*b*d^3";
    let n_den = "2*a^3*c + 2*a^2*c^2 + 4*a*b*c*d + 2*a*c^3 - 2*b^3*d + 2*b^2*d^2 - 2*b*d^3";
    vec![
        line(1, "d_a", ["-a", "b"], ["a^2 + b^2", "2*b"]),
        line(2, "d_b", ["-c", "b"], ["b^2 + c^2", "2*b"]),
        line(3, "d_c", ["-c", "d"], ["c^2 + d^2", "2*d"]),
        line(4, "d_d", ["-a", "d"], ["a^2 + d^2", "2*d"]),
        point(5, "O_a", ["a + c", "2"], ["-a*c + b^2", "2*b"]),
        point(6, "O_b", ["-b*d + c^2", "2*c"], ["b + d", "2"]),
        point(7, "O_c", ["a + c", "2"], ["-a*c + d^2", "2*d"]),
        point(8, "O_d", ["-b*d + a^2", "2*a"], ["b + d", "2"]),
        point(9, "G_a", ["a + c", "3"], ["2*b", "3"]),
        point(10, "G_b", ["2*c", "3"], ["b + d", "3"]),
        point(11, "G_c", ["a + c", "3"], ["2*d", "3"]),
        point(12, "G_d", ["2*a", "3"], ["b + d", "3"]),
        line(
            13,
            "euler_a",
            ["-(b^2 + 3*a*c)", "a*b + b*c"],
            ["b^2 + a*c", "b"],
        ),
        line(
            14,
            "euler_b",
            ["-(b*c + c*d)", "c^2 + 3*b*d"],
            ["b*c^2 + b*d^2 + b^2*d + c^2*d", "c^2 + 3*b*d"],
        ),
        line(
            15,
            "euler_c",
            ["-(d^2 + 3*a*c)", "a*d + c*d"],
            ["d^2 + a*c", "d"],
        ),
        line(
            16,
            "euler_d",
            ["-(a*b + a*d)", "a^2 + 3*b*d"],
            ["b*d^2 + a^2*b + a^2*d + b^2*d", "a^2 + 3*b*d"],
        ),
        point(
            17,
            "Q",
            ["a^2*c - a*b*d + a*c^2 - b*c*d", "3*a*c - b*d"],
            ["2*a*b*c + 2*a*c*d", "3*a*c - b*d"],
        ),
        point(
            18,
            "R",
            ["-2*a*b*d - 2*b*c*d", "a*c - 3*b*d"],
            ["a*b*c + a*c*d - b^2*d - b*d^2", "a*c - 3*b*d"],
        ),
        line(19, "QR", ["-(b + d)", "a + c"], ["b + d", "1"]),
        point(
            20,
            "S_a",
            ["a^2*c + a*b^2 + a*c^2 + b^2*c", sym_den_a],
            ["a^2*b + 2*b^3 + b*c^2", sym_den_a],
        ),
        point(
            21,
            "S_b",
            ["b^2*c + 2*c^3 + c*d^2", sym_den_b],
            ["b^2*d + b*c^2 + b*d^2 + c^2*d", sym_den_b],
        ),
        point(
            22,
            "S_c",
            ["a^2*c + a*c^2 + a*d^2 + c*d^2", sym_den_c],
            ["a^2*d + c^2*d + 2*d^3", sym_den_c],
        ),
        point(
            23,
            "S_d",
            ["2*a^3 + a*b^2 + a*d^2", sym_den_d],
            ["a^2*b + a^2*d + b^2*d + b*d^2", sym_den_d],
        ),
        line(
            24,
            "brocard_a",
            [
                "-b^4 - a*c^3 + a^2*c^2 - a^3*c - 2*a*b^2*c",
                "b*c^3 + a^3*b - a*b*c^2 - a^2*b*c",
            ],
            [
                "b^4 + a^2*b^2 + a^2*c^2 + b^2*c^2",
                "2*b*c^2 + 2*a^2*b - 4*a*b*c",
            ],
        ),
        line(
            25,
            "brocard_b",
            [
                "-c*d^3 - b^3*c + b*c*d^2 + b^2*c*d",
                "c^4 + b*d^3 - b^2*d^2 + b^3*d + 2*b*c^2*d",
            ],
            [
                "b*c^4 + b^2*d^3 + b^3*c^2 + b^3*d^2 + c^2*d^3 + c^4*d + b*c^2*d^2 + b^2*c^2*d",
                "2*c^4 + 2*b*d^3 - 2*b^2*d^2 + 2*b^3*d + 4*b*c^2*d",
            ],
        ),
        line(
            26,
            "brocard_c",
            [
                "-d^4 - a*c^3 + a^2*c^2 - a^3*c - 2*a*c*d^2",
                "a^3*d + c^3*d - a*c^2*d - a^2*c*d",
            ],
            [
                "d^4 + a^2*c^2 + a^2*d^2 + c^2*d^2",
                "2*a^2*d + 2*c^2*d - 4*a*c*d",
            ],
        ),
        line(
            27,
            "brocard_d",
            [
                "-a*b^3 - a*d^3 + a*b*d^2 + a*b^2*d",
                "a^4 + b*d^3 - b^2*d^2 + b^3*d + 2*a^2*b*d",
            ],
            [
                "a^2*b^3 + a^2*d^3 + a^4*b + a^4*d + b^2*d^3 + b^3*d^2 + a^2*b*d^2 + a^2*b^2*d",
                "2*a^4 + 2*b*d^3 - 2*b^2*d^2 + 2*b^3*d + 4*a^2*b*d",
            ],
        ),
        point(28, "M", [MX, m_den], [MY, m_den]),
        point(29, "N", [MX, n_den], [MY, n_den]),
        line(
            30,
            "MN",
            [
                "b^2*d^3 + b^3*d^2 - a*b*c^3 - a*c*d^3 - a*b^3*c - a*c^3*d - a^2*b*c^2 \
                 - a^2*c^2*d - a^3*b*c - a^3*c*d - a*b*c*d^2 - a*b^2*c*d",
                "-a^2*c^3 - a^3*c^2 + a*b*d^3 + a*b^2*d^2 + a*b^3*d + b*c*d^3 + b*c^3*d \
                 + a^3*b*d + b^2*c*d^2 + b^3*c*d + a*b*c^2*d + a^2*b*c*d",
            ],
            ["0", "1"],
        ),
    ]
}

fn eq_name(index: usize) -> String {
    format!("eq{index}")
}

/// Evaluates `num/den` of a transcription at the configuration.
fn quotient<T: Field>(index: usize, parts: &[String; 2], vars: &[T]) -> Result<T, Halt> {
    let poly = |text: &str| {
        parse_poly(text, 4)
            .map_err(|e| Halt::Degenerate(format!("eq{index} transcription unreadable: {e}")))
    };
    let num = T::eval_poly(&poly(&parts[0])?, vars);
    let den = T::eval_poly(&poly(&parts[1])?, vars);
    num.checked_div(&den)
        .ok_or_else(|| Halt::Degenerate(format!("eq{index} undefined: denominator vanishes")))
}

/// Derives every displayed object of the main proof from first principles,
/// records each transcription as `eqN`, and returns one equality check per
/// equation, in order.
pub(crate) fn construct_eqs<T: Field>(
    r: &RectConfig<T>,
    table: &[Transcription],
    w: &mut Witness<T>,
) -> Result<Vec<Check>, Halt> {
    let p = r.p();
    let corners = r.corners();
    for (k, corner) in TRI.iter().zip(&corners) {
        let name = format!("d_{k}");
        w.line(&name, tag(perpendicular_bisector(&p, corner), &name)?)?;
    }
    for (i, (k, t)) in TRI.iter().zip(r.triangles()).enumerate() {
        let name = format!("O_{k}");
        let (l1, l2) = (format!("d_{k}"), format!("d_{}", TRI[(i + 1) % 4]));
        let o = tag(
            crate::geometry::intersect_lines(w.get_line(&l1), w.get_line(&l2)),
            &name,
        )?;
        w.point(&name, o)?;
        w.point(&format!("G_{k}"), centroid(&t))?;
        let name = format!("S_{k}");
        w.point(&name, tag(symmedian_point(&t), &name)?)?;
    }
    for k in TRI {
        join(
            w,
            &format!("euler_{k}"),
            &format!("G_{k}"),
            &format!("O_{k}"),
        )?;
        join(
            w,
            &format!("brocard_{k}"),
            &format!("O_{k}"),
            &format!("S_{k}"),
        )?;
    }
    for (name, l1, l2) in [
        ("Q", "euler_a", "euler_c"),
        ("R", "euler_b", "euler_d"),
        ("M", "brocard_a", "brocard_c"),
        ("N", "brocard_b", "brocard_d"),
    ] {
        let x = tag(
            crate::geometry::intersect_lines(w.get_line(l1), w.get_line(l2)),
            name,
        )?;
        w.point(name, x)?;
    }
    join(w, "QR", "Q", "R")?;
    join(w, "MN", "M", "N")?;

    let vars: Vec<T> = r.params().into_iter().cloned().collect();
    let mut checks = Vec::with_capacity(table.len());
    for t in table {
        let name = eq_name(t.index);
        match &t.form {
            Transcribed::Line { slope, intercept } => {
                let m = quotient(t.index, slope, &vars)?;
                let c = quotient(t.index, intercept, &vars)?;
                let minus_one = -m.one_like();
                w.line(&name, tag(Line::new(m, minus_one, c), &name)?)?;
                checks.push(Check::same_line(&t.label, &name));
            }
            Transcribed::Point { x, y } => {
                let x = quotient(t.index, x, &vars)?;
                let y = quotient(t.index, y, &vars)?;
                w.point(&name, Point::new(x, y))?;
                checks.push(Check::same_point(&t.label, &name));
            }
        }
    }
    Ok(checks)
}

/// One row of the formula catalog.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub index: usize,
    pub label: String,
    /// Canonical form of the transcription.
    pub transcribed: String,
    /// Canonical form of the object derived from the construction.
    pub derived: String,
    pub matches: bool,
}

fn canonical(w: &Witness<RatFun>, name: &str) -> String {
    match w.get(name) {
        Some(super::Element::Point(p)) => format!("({}, {})", p.x, p.y),
        Some(super::Element::Line(l)) => format!("({})*x + ({})*y + ({}) = 0", l.u, l.v, l.w),
        other => format!("{other:?}"),
    }
}

/// Compares every transcription in `table` with the symbolic derivation.
pub fn formula_catalog(table: &[Transcription]) -> Result<Vec<CatalogEntry>, String> {
    let r = RectConfig::symbolic();
    let mut w = Witness::new(None);
    let checks = construct_eqs(&r, table, &mut w).map_err(|h| format!("{h:?}"))?;
    Ok(table
        .iter()
        .zip(&checks)
        .map(|(t, check)| CatalogEntry {
            index: t.index,
            label: t.label.clone(),
            transcribed: canonical(&w, &eq_name(t.index)),
            derived: canonical(&w, &t.label),
            matches: run_checks(std::slice::from_ref(check), &w) == Outcome::Holds,
        })
        .collect())
}

/// Symbolic check of the built-in transcriptions.
pub fn reproduce_formulas() -> TheoremReport {
    reproduce_formulas_with(&reference_formulas())
}

/// Symbolic check of `table`; refuted with the offending equation indices
/// on any mismatch.
pub fn reproduce_formulas_with(table: &[Transcription]) -> TheoremReport {
    let start = Instant::now();
    let mut report = TheoremReport::new(ClaimId::EQS, Mode::Symbolic, Status::Proven);
    report.samples = 1;
    match formula_catalog(table) {
        Ok(entries) => {
            let bad: Vec<&CatalogEntry> = entries.iter().filter(|e| !e.matches).collect();
            if !bad.is_empty() {
                report.status = Status::Refuted;
                report.failures.push(ClaimResult {
                    claim: ClaimId::EQS,
                    holds: Some(false),
                    witness: Vec::new(),
                    degeneracy: None,
                    failed_checks: bad
                        .iter()
                        .map(|e| {
                            format!(
                                "eq{} ({}): transcribed {} but derived {}",
                                e.index, e.label, e.transcribed, e.derived
                            )
                        })
                        .collect(),
                    sample_index: None,
                    params: crate::arith::var_names(4),
                });
                report.note = Some(format!(
                    "mismatched equations: {}",
                    bad.iter()
                        .map(|e| e.index.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                ));
            }
        }
        Err(halt) => {
            report.status = Status::Inconclusive;
            report.note = Some(halt);
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}
