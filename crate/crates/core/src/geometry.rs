//! Points, lines and circles over any [`Field`], with exact predicates.
//!
//! Lines are homogeneous triples `u·x + v·y + w = 0` and circles are
//! `x² + y² + D·x + E·y + F = 0`, so no construction ever needs a square
//! root or a vertical-line special case.

use thiserror::Error;

use crate::field::Field;

/// Why a construction has no (unique) answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("coincident points")]
    CoincidentPoints,
    #[error("collinear points")]
    Collinear,
    #[error("parallel lines")]
    ParallelLines,
    #[error("degenerate line (u = v = 0)")]
    DegenerateLine,
    #[error("identical circles")]
    IdenticalCircles,
    #[error("tangent circles")]
    TangentCircles,
    #[error("point not on both circles")]
    NotOnCircles,
    #[error("zero-length direction")]
    ZeroDirection,
    #[error("point at infinity")]
    PointAtInfinity,
    #[error("point on a side line")]
    OnSideLine,
    #[error("point on the circumcircle")]
    OnCircumcircle,
    #[error("undefined line (defining points coincide)")]
    UndefinedLine,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

/// The locus `u·x + v·y + w = 0`. Equality is projective.
#[derive(Clone, Debug)]
pub struct Line<T> {
    pub u: T,
    pub v: T,
    pub w: T,
}

/// The locus `x² + y² + d·x + e·y + f = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Circle<T> {
    pub d: T,
    pub e: T,
    pub f: T,
}

impl<T: Field> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Point<U> {
        Point {
            x: f(&self.x),
            y: f(&self.y),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Point::new(self.x.clone() + &other.x, self.y.clone() + &other.y)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Point::new(self.x.clone() - &other.x, self.y.clone() - &other.y)
    }

    pub fn scale(&self, k: &T) -> Self {
        Point::new(self.x.clone() * k, self.y.clone() * k)
    }

    pub fn dot(&self, other: &Self) -> T {
        self.x.clone() * &other.x + self.y.clone() * &other.y
    }

    pub fn cross(&self, other: &Self) -> T {
        self.x.clone() * &other.y - self.y.clone() * &other.x
    }

    pub fn norm2(&self) -> T {
        self.dot(self)
    }

    /// Exact coincidence (within tolerance for floats).
    pub fn coincides(&self, other: &Self) -> bool {
        let scale = self
            .x
            .magnitude()
            .max(self.y.magnitude())
            .max(other.x.magnitude())
            .max(other.y.magnitude());
        (self.x.clone() - &other.x).is_negligible(scale)
            && (self.y.clone() - &other.y).is_negligible(scale)
    }
}

impl<T: Field> Line<T> {
    /// Builds a line, rescaling to the field's preferred representative.
    pub fn new(u: T, v: T, w: T) -> Result<Self, GeomError> {
        if u.vanishes() && v.vanishes() {
            return Err(GeomError::DegenerateLine);
        }
        let mut c = [u, v, w];
        T::normalize_projective(&mut c);
        let [u, v, w] = c;
        Ok(Line { u, v, w })
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Line<U> {
        Line {
            u: f(&self.u),
            v: f(&self.v),
            w: f(&self.w),
        }
    }

    /// `u·x + v·y + w` at `p`.
    pub fn eval(&self, p: &Point<T>) -> T {
        self.u.clone() * &p.x + self.v.clone() * &p.y + &self.w
    }

    /// Projective equality: all 2×2 minors of the coefficient matrix vanish.
    pub fn same_as(&self, other: &Self) -> bool {
        let pairs = [
            (&self.u, &self.v, &other.u, &other.v),
            (&self.u, &self.w, &other.u, &other.w),
            (&self.v, &self.w, &other.v, &other.w),
        ];
        pairs.iter().all(|(a1, b1, a2, b2)| {
            let l = (*a1).clone() * *b2;
            let r = (*a2).clone() * *b1;
            let scale = l.magnitude().max(r.magnitude());
            (l - &r).is_negligible(scale)
        })
    }
}

impl<T: Field> PartialEq for Line<T> {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl<T: Field> Circle<T> {
    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Circle<U> {
        Circle {
            d: f(&self.d),
            e: f(&self.e),
            f: f(&self.f),
        }
    }

    /// Power of `p`: `x² + y² + d·x + e·y + f`.
    pub fn power(&self, p: &Point<T>) -> T {
        p.norm2() + self.d.clone() * &p.x + self.e.clone() * &p.y + &self.f
    }

    pub fn contains(&self, p: &Point<T>) -> bool {
        let terms = [
            p.norm2(),
            self.d.clone() * &p.x,
            self.e.clone() * &p.y,
            self.f.clone(),
        ];
        let scale = terms.iter().map(Field::magnitude).fold(0.0, f64::max);
        self.power(p).is_negligible(scale)
    }

    /// `(-d/2, -e/2)`.
    pub fn center(&self) -> Point<T> {
        Point::new(-self.d.half(), -self.e.half())
    }
}

pub fn line_through<T: Field>(p: &Point<T>, q: &Point<T>) -> Result<Line<T>, GeomError> {
    if p.coincides(q) {
        return Err(GeomError::CoincidentPoints);
    }
    Line::new(
        p.y.clone() - &q.y,
        q.x.clone() - &p.x,
        p.x.clone() * &q.y - q.x.clone() * &p.y,
    )
}

/// Points equidistant from `p` and `q`: `2(q−p)·X = |q|² − |p|²`.
pub fn perpendicular_bisector<T: Field>(p: &Point<T>, q: &Point<T>) -> Result<Line<T>, GeomError> {
    if p.coincides(q) {
        return Err(GeomError::CoincidentPoints);
    }
    let two = p.x.from_int_like(2);
    Line::new(
        (q.x.clone() - &p.x) * &two,
        (q.y.clone() - &p.y) * &two,
        p.norm2() - q.norm2(),
    )
}

pub fn intersect_lines<T: Field>(l1: &Line<T>, l2: &Line<T>) -> Result<Point<T>, GeomError> {
    let det = l1.u.clone() * &l2.v - l2.u.clone() * &l1.v;
    let scale = (l1.u.magnitude() * l2.v.magnitude()).max(l2.u.magnitude() * l1.v.magnitude());
    if det.is_negligible(scale) {
        return Err(GeomError::ParallelLines);
    }
    let x = l1.v.clone() * &l2.w - l2.v.clone() * &l1.w;
    let y = l1.w.clone() * &l2.u - l2.w.clone() * &l1.u;
    let x = x.checked_div(&det).ok_or(GeomError::ParallelLines)?;
    let y = y.checked_div(&det).ok_or(GeomError::ParallelLines)?;
    Ok(Point::new(x, y))
}

pub fn midpoint<T: Field>(p: &Point<T>, q: &Point<T>) -> Point<T> {
    Point::new((p.x.clone() + &q.x).half(), (p.y.clone() + &q.y).half())
}

/// `2c − p`.
pub fn reflect_in_point<T: Field>(p: &Point<T>, c: &Point<T>) -> Point<T> {
    let two = c.x.from_int_like(2);
    c.scale(&two).sub(p)
}

pub fn is_on_line<T: Field>(p: &Point<T>, l: &Line<T>) -> bool {
    let terms = [l.u.clone() * &p.x, l.v.clone() * &p.y];
    let scale = terms
        .iter()
        .map(Field::magnitude)
        .fold(l.w.magnitude(), f64::max);
    l.eval(p).is_negligible(scale)
}

/// Zero orientation determinant `(q−p)×(r−p)`.
pub fn are_collinear<T: Field>(p: &Point<T>, q: &Point<T>, r: &Point<T>) -> bool {
    let a = q.sub(p);
    let b = r.sub(p);
    let l = a.x.clone() * &b.y;
    let rr = a.y.clone() * &b.x;
    let scale = l.magnitude().max(rr.magnitude());
    (l - &rr).is_negligible(scale)
}

pub fn are_parallel<T: Field>(l1: &Line<T>, l2: &Line<T>) -> bool {
    let a = l1.u.clone() * &l2.v;
    let b = l2.u.clone() * &l1.v;
    let scale = a.magnitude().max(b.magnitude());
    (a - &b).is_negligible(scale)
}

/// Foot of the perpendicular from `p` to `l`.
pub fn project_onto_line<T: Field>(p: &Point<T>, l: &Line<T>) -> Result<Point<T>, GeomError> {
    let n2 = l.u.square() + l.v.square();
    let k = l
        .eval(p)
        .checked_div(&n2)
        .ok_or(GeomError::DegenerateLine)?;
    Ok(Point::new(
        p.x.clone() - k.clone() * &l.u,
        p.y.clone() - k * &l.v,
    ))
}

pub fn reflect_over_line<T: Field>(p: &Point<T>, l: &Line<T>) -> Result<Point<T>, GeomError> {
    let foot = project_onto_line(p, l)?;
    Ok(reflect_in_point(p, &foot))
}

/// Solves `D·x + E·y + F = −(x² + y²)` for the three points by Cramer's rule.
pub fn circle_through<T: Field>(
    p: &Point<T>,
    q: &Point<T>,
    r: &Point<T>,
) -> Result<Circle<T>, GeomError> {
    if p.coincides(q) || q.coincides(r) || p.coincides(r) {
        return Err(GeomError::CoincidentPoints);
    }
    if are_collinear(p, q, r) {
        return Err(GeomError::Collinear);
    }
    let pts = [p, q, r];
    let rhs: Vec<T> = pts.iter().map(|s| -s.norm2()).collect();
    let one = p.x.one_like();
    let det3 = |m: [[T; 3]; 3]| -> T {
        m[0][0].clone() * &(m[1][1].clone() * &m[2][2] - m[1][2].clone() * &m[2][1])
            - m[0][1].clone() * &(m[1][0].clone() * &m[2][2] - m[1][2].clone() * &m[2][0])
            + m[0][2].clone() * &(m[1][0].clone() * &m[2][1] - m[1][1].clone() * &m[2][0])
    };
    let row = |i: usize, col: Option<usize>| -> [T; 3] {
        let mut v = [pts[i].x.clone(), pts[i].y.clone(), one.clone()];
        if let Some(c) = col {
            v[c] = rhs[i].clone();
        }
        v
    };
    let matrix = |col: Option<usize>| [row(0, col), row(1, col), row(2, col)];
    let det = det3(matrix(None));
    let solve = |col| {
        det3(matrix(Some(col)))
            .checked_div(&det)
            .ok_or(GeomError::Collinear)
    };
    Ok(Circle {
        d: solve(0)?,
        e: solve(1)?,
        f: solve(2)?,
    })
}

/// The common point of `c1` and `c2` other than `p`.
///
/// Walks the radical line from `p`: with direction `t`, the point
/// `p + s·t` lies on `c1` when `s·(|t|²·s + 2p·t + d·tx + e·ty) = 0`, and
/// the nonzero root is the answer.
pub fn circles_second_intersection<T: Field>(
    c1: &Circle<T>,
    c2: &Circle<T>,
    p: &Point<T>,
) -> Result<Point<T>, GeomError> {
    if !c1.contains(p) || !c2.contains(p) {
        return Err(GeomError::NotOnCircles);
    }
    let u = c1.d.clone() - &c2.d;
    let v = c1.e.clone() - &c2.e;
    let scale = [&c1.d, &c2.d, &c1.e, &c2.e]
        .iter()
        .map(|s| s.magnitude())
        .fold(0.0, f64::max);
    if u.is_negligible(scale) && v.is_negligible(scale) {
        // Same center through a common point: the same circle.
        return Err(GeomError::IdenticalCircles);
    }
    let t = Point::new(-v.clone(), u.clone());
    let two = p.x.from_int_like(2);
    let lin = p.dot(&t) * &two + c1.d.clone() * &t.x + c1.e.clone() * &t.y;
    let lin_scale = (p.dot(&t) * &two)
        .magnitude()
        .max((c1.d.clone() * &t.x).magnitude())
        .max((c1.e.clone() * &t.y).magnitude());
    if lin.is_negligible(lin_scale) {
        return Err(GeomError::TangentCircles);
    }
    let s = (-lin)
        .checked_div(&t.norm2())
        .ok_or(GeomError::ZeroDirection)?;
    Ok(p.add(&t.scale(&s)))
}

/// Whether lines `v→x` and `v→y` are symmetric in the bisectors of the
/// angle formed by `v→s1` and `v→s2`.
///
/// With directions read as complex numbers `u, w` (sides) and `p, q`
/// (candidates), the pair is isogonal iff `Im(p·q·conj(u·w)) = 0`. Sign
/// flips of any direction cancel, so the test is about undirected lines.
pub fn is_isogonal_pair<T: Field>(
    v: &Point<T>,
    s1: &Point<T>,
    s2: &Point<T>,
    x: &Point<T>,
    y: &Point<T>,
) -> Result<bool, GeomError> {
    let dirs = [s1.sub(v), s2.sub(v), x.sub(v), y.sub(v)];
    for (d, base) in dirs.iter().zip([s1, s2, x, y]) {
        if base.coincides(v) || d.norm2().vanishes() {
            return Err(GeomError::ZeroDirection);
        }
    }
    let [u, w, p, q] = dirs;
    let cmul = |a: &Point<T>, b: &Point<T>| {
        Point::new(
            a.x.clone() * &b.x - a.y.clone() * &b.y,
            a.x.clone() * &b.y + a.y.clone() * &b.x,
        )
    };
    let pq = cmul(&p, &q);
    let uw = cmul(&u, &w);
    let l = pq.y.clone() * &uw.x;
    let r = pq.x.clone() * &uw.y;
    let scale = l.magnitude().max(r.magnitude());
    Ok((l - &r).is_negligible(scale))
}
