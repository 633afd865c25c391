use crate::field::Field;
use crate::geometry::{
    are_collinear, are_parallel, is_isogonal_pair, is_on_line, line_through, Circle, GeomError,
    Line, Point,
};

/// A named object recorded during a construction.
#[derive(Clone, Debug)]
pub enum Element<T> {
    Point(Point<T>),
    Line(Line<T>),
    Circle(Circle<T>),
    /// Drawn between two points; kept for figures.
    Segment(Point<T>, Point<T>),
}

impl<T: Field> Element<T> {
    pub fn kind(&self) -> &'static str {
        match self {
            Element::Point(_) => "point",
            Element::Line(_) => "line",
            Element::Circle(_) => "circle",
            Element::Segment(..) => "segment",
        }
    }

    /// Coordinates in a fixed order: `x, y`; `u, v, w`; `d, e, f`;
    /// `x1, y1, x2, y2`.
    pub fn coords(&self) -> Vec<&T> {
        match self {
            Element::Point(p) => vec![&p.x, &p.y],
            Element::Line(l) => vec![&l.u, &l.v, &l.w],
            Element::Circle(c) => vec![&c.d, &c.e, &c.f],
            Element::Segment(p, q) => vec![&p.x, &p.y, &q.x, &q.y],
        }
    }

    fn term_count(&self) -> usize {
        self.coords().iter().map(|c| c.term_count()).sum()
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Element<U> {
        match self {
            Element::Point(p) => Element::Point(p.map(&f)),
            Element::Line(l) => Element::Line(l.map(&f)),
            Element::Circle(c) => Element::Circle(c.map(&f)),
            Element::Segment(p, q) => Element::Segment(p.map(&f), q.map(&f)),
        }
    }
}

/// Why a construction stopped before its checks could run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Halt {
    /// A step was undefined for this configuration; the tag says which.
    Degenerate(String),
    /// An intermediate grew past the term budget.
    OverBudget { step: String, terms: usize },
}

/// Attaches a degeneracy tag naming the failed step.
pub(crate) fn tag<X>(r: Result<X, GeomError>, what: &str) -> Result<X, Halt> {
    r.map_err(|e| Halt::Degenerate(format!("{what} undefined: {e}")))
}

/// Named intermediate objects of one claim check, in construction order.
#[derive(Clone, Debug)]
pub struct Witness<T> {
    entries: Vec<(String, Element<T>)>,
    budget: Option<usize>,
}

impl<T: Field> Witness<T> {
    pub fn new(budget: Option<usize>) -> Self {
        Witness {
            entries: Vec::new(),
            budget,
        }
    }

    pub fn entries(&self) -> &[(String, Element<T>)] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&Element<T>> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, e)| e)
    }

    fn record(&mut self, name: &str, e: Element<T>) -> Result<(), Halt> {
        if let Some(cap) = self.budget {
            let terms = e.term_count();
            if terms > cap {
                return Err(Halt::OverBudget {
                    step: name.to_string(),
                    terms,
                });
            }
        }
        match self.entries.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = e,
            None => self.entries.push((name.to_string(), e)),
        }
        Ok(())
    }

    pub fn point(&mut self, name: &str, p: Point<T>) -> Result<Point<T>, Halt> {
        self.record(name, Element::Point(p.clone()))?;
        Ok(p)
    }

    pub fn line(&mut self, name: &str, l: Line<T>) -> Result<Line<T>, Halt> {
        self.record(name, Element::Line(l.clone()))?;
        Ok(l)
    }

    pub fn circle(&mut self, name: &str, c: Circle<T>) -> Result<Circle<T>, Halt> {
        self.record(name, Element::Circle(c.clone()))?;
        Ok(c)
    }

    pub fn segment(&mut self, name: &str, p: &Point<T>, q: &Point<T>) -> Result<(), Halt> {
        self.record(name, Element::Segment(p.clone(), q.clone()))
    }

    pub fn get_point(&self, name: &str) -> &Point<T> {
        match self.get(name) {
            Some(Element::Point(p)) => p,
            other => panic!("witness has no point {name:?}: {other:?}"),
        }
    }

    pub fn get_line(&self, name: &str) -> &Line<T> {
        match self.get(name) {
            Some(Element::Line(l)) => l,
            other => panic!("witness has no line {name:?}: {other:?}"),
        }
    }

    /// Same names, coordinates mapped into another field. The budget is
    /// dropped.
    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Witness<U> {
        Witness {
            entries: self
                .entries
                .iter()
                .map(|(n, e)| (n.clone(), e.map(&f)))
                .collect(),
            budget: None,
        }
    }

    /// Largest term count of any stored element.
    pub fn max_terms(&self) -> usize {
        self.entries
            .iter()
            .map(|(_, e)| e.term_count())
            .max()
            .unwrap_or(0)
    }
}

/// A predicate over named witness entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Collinear(String, String, String),
    OnLine {
        point: String,
        line: String,
    },
    Parallel(String, String),
    SameLine(String, String),
    SamePoint(String, String),
    /// Vertex, its two sides' far ends, then the candidate pair.
    Isogonal {
        vertex: String,
        sides: (String, String),
        pair: (String, String),
    },
}

impl Check {
    pub fn collinear(p: &str, q: &str, r: &str) -> Self {
        Check::Collinear(p.into(), q.into(), r.into())
    }

    pub fn on_line(point: &str, line: &str) -> Self {
        Check::OnLine {
            point: point.into(),
            line: line.into(),
        }
    }

    pub fn parallel(l1: &str, l2: &str) -> Self {
        Check::Parallel(l1.into(), l2.into())
    }

    pub fn same_line(l1: &str, l2: &str) -> Self {
        Check::SameLine(l1.into(), l2.into())
    }

    pub fn same_point(p1: &str, p2: &str) -> Self {
        Check::SamePoint(p1.into(), p2.into())
    }

    pub fn isogonal(vertex: &str, s1: &str, s2: &str, x: &str, y: &str) -> Self {
        Check::Isogonal {
            vertex: vertex.into(),
            sides: (s1.into(), s2.into()),
            pair: (x.into(), y.into()),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Check::Collinear(p, q, r) => format!("collinear({p}, {q}, {r})"),
            Check::OnLine { point, line } => format!("on_line({point}, {line})"),
            Check::Parallel(a, b) => format!("parallel({a}, {b})"),
            Check::SameLine(a, b) => format!("same_line({a}, {b})"),
            Check::SamePoint(a, b) => format!("same_point({a}, {b})"),
            Check::Isogonal {
                vertex,
                sides,
                pair,
            } => format!(
                "isogonal({}, {} | {}, {}; {})",
                pair.0, pair.1, vertex, sides.0, sides.1
            ),
        }
    }

    /// Evaluates the predicate. An isogonality test at a vertex where a
    /// direction vanishes reports a degeneracy.
    pub fn evaluate<T: Field>(&self, w: &Witness<T>) -> Result<bool, Halt> {
        let pt = |n: &str| w.get_point(n);
        let ln = |n: &str| w.get_line(n);
        Ok(match self {
            Check::Collinear(p, q, r) => are_collinear(pt(p), pt(q), pt(r)),
            Check::OnLine { point, line } => is_on_line(pt(point), ln(line)),
            Check::Parallel(a, b) => are_parallel(ln(a), ln(b)),
            Check::SameLine(a, b) => ln(a).same_as(ln(b)),
            Check::SamePoint(a, b) => pt(a).coincides(pt(b)),
            Check::Isogonal {
                vertex,
                sides,
                pair,
            } => tag(
                is_isogonal_pair(
                    pt(vertex),
                    pt(&sides.0),
                    pt(&sides.1),
                    pt(&pair.0),
                    pt(&pair.1),
                ),
                &format!("isogonality at {vertex}"),
            )?,
        })
    }
}

/// Records the line through two recorded points under `name`.
pub(crate) fn join<T: Field>(
    w: &mut Witness<T>,
    name: &str,
    p: &str,
    q: &str,
) -> Result<Line<T>, Halt> {
    let l = tag(line_through(w.get_point(p), w.get_point(q)), name)?;
    w.line(name, l)
}
