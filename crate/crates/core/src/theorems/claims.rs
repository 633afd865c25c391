use crate::centers::{
    brocard_axis, centroid, circumcenter, euler_line, isogonal_conjugate_in_triangle,
    nine_point_center, orthocenter, symmedian_point, Triangle,
};
use crate::field::Field;
use crate::geometry::{
    circle_through, circles_second_intersection, intersect_lines, line_through, midpoint,
    perpendicular_bisector, project_onto_line, reflect_in_point, reflect_over_line, Line, Point,
};

use super::config::{Config, RectConfig, TwoRectConfig};
use super::witness::{join, tag, Check, Halt, Witness};
use super::{ClaimId, UsageError};

/// Labels of the four triangles `PAB`, `PBC`, `PCD`, `PDA`.
pub(crate) const TRI: [&str; 4] = ["a", "b", "c", "d"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    /// Descriptions of the checks that failed.
    Fails(Vec<String>),
    Degenerate(String),
    OverBudget {
        step: String,
        terms: usize,
    },
}

/// A claim constructed and checked on one configuration.
#[derive(Clone, Debug)]
pub struct ClaimEvaluation<T> {
    pub claim: ClaimId,
    pub witness: Witness<T>,
    pub checks: Vec<Check>,
    pub outcome: Outcome,
}

impl<T: Field> ClaimEvaluation<T> {
    /// `None` when the construction did not complete.
    pub fn holds(&self) -> Option<bool> {
        match self.outcome {
            Outcome::Holds => Some(true),
            Outcome::Fails(_) => Some(false),
            _ => None,
        }
    }

    pub fn degeneracy(&self) -> Option<&str> {
        match &self.outcome {
            Outcome::Degenerate(t) => Some(t),
            _ => None,
        }
    }

    /// Re-runs the recorded checks against `witness`.
    pub fn recheck<U: Field>(&self, witness: &Witness<U>) -> Outcome {
        run_checks(&self.checks, witness)
    }
}

pub(crate) fn run_checks<T: Field>(checks: &[Check], w: &Witness<T>) -> Outcome {
    let mut failed = Vec::new();
    for c in checks {
        match c.evaluate(w) {
            Ok(true) => {}
            Ok(false) => failed.push(c.describe()),
            Err(Halt::Degenerate(t)) => return Outcome::Degenerate(t),
            Err(Halt::OverBudget { step, terms }) => return Outcome::OverBudget { step, terms },
        }
    }
    if failed.is_empty() {
        Outcome::Holds
    } else {
        Outcome::Fails(failed)
    }
}

/// Builds the construction for `id` on `cfg` and evaluates its predicate
/// exactly (or within tolerance, for `f64`).
///
/// A step that is undefined for `cfg` ends the check with a degeneracy
/// tag; `budget` caps the term count of every recorded object.
pub fn check_claim<T: Field>(
    id: ClaimId,
    cfg: &Config<T>,
    budget: Option<usize>,
) -> Result<ClaimEvaluation<T>, UsageError> {
    if cfg.kind() != id.kind() {
        return Err(UsageError::WrongConfig {
            claim: id,
            expected: id.kind(),
        });
    }
    let mut w = Witness::new(budget);
    let built = match cfg {
        Config::Rect(r) => {
            if !r.is_proper() {
                Err(Halt::Degenerate(
                    "rectangle undefined: a = c or b = d".into(),
                ))
            } else {
                construct_rect(id, r, &mut w)
            }
        }
        Config::TwoRect(t) => {
            if !t.is_proper() {
                Err(Halt::Degenerate(
                    "rectangle undefined: a = c or b = d".into(),
                ))
            } else {
                construct_t2(t, &mut w, false)
            }
        }
    };
    Ok(finish(id, w, built))
}

/// The same check as T2 with the second rectangle's triangles paired the
/// other way (`PA2B2` with `PC2D2`). Exploratory; not part of the suite.
pub fn check_t2_alternate_pairing<T: Field>(cfg: &TwoRectConfig<T>) -> ClaimEvaluation<T> {
    let mut w = Witness::new(None);
    let built = construct_t2(cfg, &mut w, true);
    finish(ClaimId::T2, w, built)
}

fn finish<T: Field>(
    id: ClaimId,
    w: Witness<T>,
    built: Result<Vec<Check>, Halt>,
) -> ClaimEvaluation<T> {
    let (checks, outcome) = match built {
        Ok(checks) => {
            let outcome = run_checks(&checks, &w);
            (checks, outcome)
        }
        Err(Halt::Degenerate(t)) => (Vec::new(), Outcome::Degenerate(t)),
        Err(Halt::OverBudget { step, terms }) => (Vec::new(), Outcome::OverBudget { step, terms }),
    };
    ClaimEvaluation {
        claim: id,
        witness: w,
        checks,
        outcome,
    }
}

fn construct_rect<T: Field>(
    id: ClaimId,
    r: &RectConfig<T>,
    w: &mut Witness<T>,
) -> Result<Vec<Check>, Halt> {
    base(r, w)?;
    match id {
        ClaimId::T1E => t1_euler(r, w),
        ClaimId::T1B => t1_brocard(r, w),
        ClaimId::T3 => t3(r, w),
        ClaimId::T4 => t4(r, w),
        ClaimId::T5 => t5(r, w),
        ClaimId::T6 => t6(r, w),
        ClaimId::T7 => t7(r, w),
        ClaimId::T8 => t8(r, w),
        ClaimId::T9i | ClaimId::T9ii | ClaimId::T9iii => t9(id, r, w),
        ClaimId::EQS => {
            super::formulas::construct_eqs(r, &super::formulas::reference_formulas(), w)
        }
        ClaimId::T2 => unreachable!("T2 uses the two-rectangle configuration"),
    }
}

/// `P`, the corners, `I`, and the rectangle's sides.
pub(crate) fn base<T: Field>(r: &RectConfig<T>, w: &mut Witness<T>) -> Result<(), Halt> {
    w.point("P", r.p())?;
    let corners = r.corners();
    for (name, p) in ["A", "B", "C", "D"].iter().zip(&corners) {
        w.point(name, p.clone())?;
    }
    for (i, name) in ["AB", "BC", "CD", "DA"].iter().enumerate() {
        w.segment(name, &corners[i], &corners[(i + 1) % 4])?;
    }
    w.point("I", r.center())?;
    Ok(())
}

fn triangles<T: Field>(r: &RectConfig<T>) -> impl Iterator<Item = (&'static str, Triangle<T>)> {
    TRI.into_iter().zip(r.triangles())
}

/// `O`, `G` and the Euler line of each triangle; `Q = ε_a ∩ ε_c`,
/// `R = ε_b ∩ ε_d`.
pub(crate) fn euler_intersections<T: Field>(
    r: &RectConfig<T>,
    w: &mut Witness<T>,
) -> Result<(), Halt> {
    for (k, t) in triangles(r) {
        w.point(&format!("O_{k}"), tag(circumcenter(&t), &format!("O_{k}"))?)?;
        w.point(&format!("G_{k}"), centroid(&t))?;
        w.line(
            &format!("euler_{k}"),
            tag(euler_line(&t), &format!("euler_{k}"))?,
        )?;
    }
    meet(w, "Q", "euler_a", "euler_c")?;
    meet(w, "R", "euler_b", "euler_d")?;
    Ok(())
}

/// `K`, `O` and the Brocard axis of each triangle; `M = β_a ∩ β_c`,
/// `N = β_b ∩ β_d`.
pub(crate) fn brocard_intersections<T: Field>(
    r: &RectConfig<T>,
    w: &mut Witness<T>,
) -> Result<(), Halt> {
    for (k, t) in triangles(r) {
        w.point(&format!("O_{k}"), tag(circumcenter(&t), &format!("O_{k}"))?)?;
        w.point(
            &format!("K_{k}"),
            tag(symmedian_point(&t), &format!("K_{k}"))?,
        )?;
        w.line(
            &format!("brocard_{k}"),
            tag(brocard_axis(&t), &format!("brocard_{k}"))?,
        )?;
    }
    meet(w, "M", "brocard_a", "brocard_c")?;
    meet(w, "N", "brocard_b", "brocard_d")?;
    Ok(())
}

fn meet<T: Field>(w: &mut Witness<T>, name: &str, l1: &str, l2: &str) -> Result<Point<T>, Halt> {
    let p = tag(intersect_lines(w.get_line(l1), w.get_line(l2)), name)?;
    w.point(name, p)
}

fn mid<T: Field>(w: &mut Witness<T>, name: &str, p: &str, q: &str) -> Result<Point<T>, Halt> {
    let m = midpoint(w.get_point(p), w.get_point(q));
    w.point(name, m)
}

/// `u·x + v·y + w = 0` through `I` with slope `−(b+d)/(a+c)`.
pub(crate) fn qr_expected<T: Field>(r: &RectConfig<T>) -> Result<Line<T>, Halt> {
    let s = r.a.clone() + &r.c;
    let t = r.b.clone() + &r.d;
    let w = -(s.clone() * &t);
    tag(Line::new(t, s, w), "QR_expected")
}

fn t1_euler<T: Field>(r: &RectConfig<T>, w: &mut Witness<T>) -> Result<Vec<Check>, Halt> {
    euler_intersections(r, w)?;
    join(w, "QR", "Q", "R")?;
    w.line("QR_expected", qr_expected(r)?)?;
    Ok(vec![
        Check::collinear("Q", "R", "I"),
        Check::on_line("I", "QR"),
        Check::same_line("QR", "QR_expected"),
    ])
}

fn t1_brocard<T: Field>(r: &RectConfig<T>, w: &mut Witness<T>) -> Result<Vec<Check>, Halt> {
    brocard_intersections(r, w)?;
    join(w, "MN", "M", "N")?;
    Ok(vec![
        Check::collinear("M", "N", "P"),
        Check::on_line("P", "MN"),
    ])
}

fn construct_t2<T: Field>(
    t: &TwoRectConfig<T>,
    w: &mut Witness<T>,
    alternate: bool,
) -> Result<Vec<Check>, Halt> {
    let (r1, r2) = (t.first(), t.second());
    w.point("P", r1.p())?;
    for (suffix, r) in [("1", &r1), ("2", &r2)] {
        let corners = r.corners();
        for (name, p) in ["A", "B", "C", "D"].iter().zip(&corners) {
            w.point(&format!("{name}{suffix}"), p.clone())?;
        }
        for (i, name) in ["AB", "BC", "CD", "DA"].iter().enumerate() {
            w.segment(
                &format!("{name}{suffix}"),
                &corners[i],
                &corners[(i + 1) % 4],
            )?;
        }
    }
    w.point("I", r1.center())?;
    let p = r1.p();
    let [a1, b1, c1, d1] = r1.corners();
    let [a2, b2, c2, d2] = r2.corners();
    let second = if alternate {
        [("PA2B2", a2, b2), ("PC2D2", c2, d2)]
    } else {
        [("PA2D2", a2, d2), ("PB2C2", b2, c2)]
    };
    let tris = [("PA1B1", a1, b1), ("PC1D1", c1, d1)]
        .into_iter()
        .chain(second);
    let mut names = Vec::new();
    for (name, u, v) in tris {
        let tri = Triangle::new(p.clone(), u, v);
        let line = format!("euler_{name}");
        w.point(
            &format!("O_{name}"),
            tag(circumcenter(&tri), &format!("O_{name}"))?,
        )?;
        w.line(&line, tag(euler_line(&tri), &line)?)?;
        names.push(line);
    }
    meet(w, "Q", &names[0], &names[1])?;
    meet(w, "R", &names[2], &names[3])?;
    Ok(vec![Check::collinear("Q", "R", "I")])
}

fn t3<T: Field>(r: &RectConfig<T>, w: &mut Witness<T>) -> Result<Vec<Check>, Halt> {
    for (k, t) in triangles(r) {
        w.point(&format!("H_{k}"), tag(orthocenter(&t), &format!("H_{k}"))?)?;
    }
    mid(w, "Q", "H_a", "H_c")?;
    mid(w, "R", "H_b", "H_d")?;
    Ok(vec![Check::collinear("Q", "R", "I")])
}

fn t4<T: Field>(r: &RectConfig<T>, w: &mut Witness<T>) -> Result<Vec<Check>, Halt> {
    for (k, t) in triangles(r) {
        w.point(&format!("O_{k}"), tag(circumcenter(&t), &format!("O_{k}"))?)?;
    }
    mid(w, "Q", "O_a", "O_c")?;
    mid(w, "R", "O_b", "O_d")?;
    mid(w, "S", "Q", "R")?;
    let p = w.get_point("P").clone();
    let c1 = tag(
        circle_through(&p, w.get_point("O_a"), w.get_point("O_c")),
        "circle_PO_aO_c",
    )?;
    let c1 = w.circle("circle_PO_aO_c", c1)?;
    let c2 = tag(
        circle_through(&p, w.get_point("O_b"), w.get_point("O_d")),
        "circle_PO_bO_d",
    )?;
    let c2 = w.circle("circle_PO_bO_d", c2)?;
    w.point("T", tag(circles_second_intersection(&c1, &c2, &p), "T")?)?;
    Ok(vec![Check::collinear("S", "T", "I")])
}

fn t5<T: Field>(r: &RectConfig<T>, w: &mut Witness<T>) -> Result<Vec<Check>, Halt> {
    for (k, t) in triangles(r) {
        w.point(
            &format!("N_{k}"),
            tag(nine_point_center(&t), &format!("N_{k}"))?,
        )?;
    }
    let m = mid(w, "M", "N_a", "N_c")?;
    let n = mid(w, "N", "N_b", "N_d")?;
    let bis_ac = tag(
        perpendicular_bisector(w.get_point("N_a"), w.get_point("N_c")),
        "bisector_ac",
    )?;
    w.line("bisector_ac", bis_ac)?;
    let bis_bd = tag(
        perpendicular_bisector(w.get_point("N_b"), w.get_point("N_d")),
        "bisector_bd",
    )?;
    w.line("bisector_bd", bis_bd)?;
    meet(w, "Q", "bisector_ac", "bisector_bd")?;
    w.line("MN", tag(line_through(&m, &n), "MN")?)?;
    join(w, "IQ", "I", "Q")?;
    Ok(vec![Check::parallel("MN", "IQ")])
}

fn t6<T: Field>(r: &RectConfig<T>, w: &mut Witness<T>) -> Result<Vec<Check>, Halt> {
    let i = r.center();
    for (k, t) in triangles(r) {
        let name = format!("P_{k}");
        w.point(&name, tag(isogonal_conjugate_in_triangle(&i, &t), &name)?)?;
    }
    mid(w, "M_ac", "P_a", "P_c")?;
    mid(w, "M_bd", "P_b", "P_d")?;
    for (seg, p, q) in [("P_aP_c", "P_a", "P_c"), ("P_bP_d", "P_b", "P_d")] {
        let (p, q) = (w.get_point(p).clone(), w.get_point(q).clone());
        w.segment(seg, &p, &q)?;
    }
    join(w, "IP", "I", "P")?;
    Ok(vec![
        Check::on_line("M_ac", "IP"),
        Check::on_line("M_bd", "IP"),
    ])
}

/// Records the four triangles `P_k` + side `k`, then `Q`, `R` as the
/// intersections of opposite Euler lines.
fn side_triangle_euler<T: Field>(r: &RectConfig<T>, w: &mut Witness<T>) -> Result<(), Halt> {
    let corners = r.corners();
    for (i, k) in TRI.iter().enumerate() {
        let t = Triangle::new(
            w.get_point(&format!("P_{k}")).clone(),
            corners[i].clone(),
            corners[(i + 1) % 4].clone(),
        );
        let name = format!("euler_{k}");
        w.line(&name, tag(euler_line(&t), &name)?)?;
    }
    meet(w, "Q", "euler_a", "euler_c")?;
    meet(w, "R", "euler_b", "euler_d")?;
    Ok(())
}

/// `P_k`, the reflection of `P` in side `k` (`AB`, `BC`, `CD`, `DA`).
fn side_reflections<T: Field>(r: &RectConfig<T>, w: &mut Witness<T>) -> Result<(), Halt> {
    let corners = r.corners();
    let p = r.p();
    for (i, k) in TRI.iter().enumerate() {
        let side = tag(line_through(&corners[i], &corners[(i + 1) % 4]), "side")?;
        let side = w.line(&format!("side_{k}"), side)?;
        let name = format!("P_{k}");
        w.point(&name, tag(reflect_over_line(&p, &side), &name)?)?;
    }
    Ok(())
}

fn t7<T: Field>(r: &RectConfig<T>, w: &mut Witness<T>) -> Result<Vec<Check>, Halt> {
    side_reflections(r, w)?;
    side_triangle_euler(r, w)?;
    mid(w, "M", "Q", "R")?;
    join(w, "IP", "I", "P")?;
    Ok(vec![Check::on_line("M", "IP")])
}

fn t8<T: Field>(r: &RectConfig<T>, w: &mut Witness<T>) -> Result<Vec<Check>, Halt> {
    let corners = r.corners();
    let p = r.p();
    for (i, k) in TRI.iter().enumerate() {
        let m = w.point(
            &format!("mid_{k}"),
            midpoint(&corners[i], &corners[(i + 1) % 4]),
        )?;
        w.point(&format!("P_{k}"), reflect_in_point(&p, &m))?;
    }
    side_triangle_euler(r, w)?;
    w.point("P'", reflect_in_point(&p, &r.center()))?;
    join(w, "QR", "Q", "R")?;
    Ok(vec![
        Check::collinear("Q", "R", "P'"),
        Check::on_line("P'", "QR"),
    ])
}

/// Shared construction for T9i–T9iii. `P_ac`, `P_bd` are the reflections
/// of `P` in the diagonals; `Q` and `R` are the diagonal intersections of
/// their pedal quadrilaterals in `P_aP_bP_cP_d`.
fn t9<T: Field>(id: ClaimId, r: &RectConfig<T>, w: &mut Witness<T>) -> Result<Vec<Check>, Halt> {
    side_reflections(r, w)?;
    let p = r.p();
    let ac = join(w, "AC", "A", "C")?;
    let bd = join(w, "BD", "B", "D")?;
    w.point("P_ac", tag(reflect_over_line(&p, &ac), "P_ac")?)?;
    w.point("P_bd", tag(reflect_over_line(&p, &bd), "P_bd")?)?;
    let quad = ["P_a", "P_b", "P_c", "P_d"];
    let mut sides = Vec::new();
    for i in 0..4 {
        let name = format!("{}{}", quad[i], quad[(i + 1) % 4]);
        join(w, &name, quad[i], quad[(i + 1) % 4])?;
        sides.push(name);
    }
    for (focus, foot, center) in [("P_ac", "F", "Q"), ("P_bd", "G", "R")] {
        let f = w.get_point(focus).clone();
        for (i, side) in sides.iter().enumerate() {
            let name = format!("{foot}{}", i + 1);
            let p = tag(project_onto_line(&f, w.get_line(side)), &name)?;
            w.point(&name, p)?;
        }
        let d1 = format!("{foot}1{foot}3");
        let d2 = format!("{foot}2{foot}4");
        join(w, &d1, &format!("{foot}1"), &format!("{foot}3"))?;
        join(w, &d2, &format!("{foot}2"), &format!("{foot}4"))?;
        meet(w, center, &d1, &d2)?;
    }
    let mut checks = vec![
        Check::on_line("Q", "F1F3"),
        Check::on_line("Q", "F2F4"),
        Check::on_line("R", "G1G3"),
        Check::on_line("R", "G2G4"),
    ];
    match id {
        ClaimId::T9i => {
            for i in 0..4 {
                checks.push(Check::isogonal(
                    quad[i],
                    quad[(i + 3) % 4],
                    quad[(i + 1) % 4],
                    "P_ac",
                    "P_bd",
                ));
            }
        }
        ClaimId::T9ii => checks.push(Check::collinear("P", "Q", "R")),
        _ => {
            join(w, "QP_ac", "Q", "P_ac")?;
            join(w, "RP_bd", "R", "P_bd")?;
            checks.push(Check::parallel("QP_ac", "RP_bd"));
        }
    }
    Ok(checks)
}
