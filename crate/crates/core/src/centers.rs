//! Triangle centers and central lines.
//!
//! Only squared lengths appear anywhere, so every center stays in the field
//! of the vertex coordinates.

use crate::field::Field;
use crate::geometry::{are_collinear, line_through, midpoint, GeomError, Line, Point};

#[derive(Clone, Debug, PartialEq)]
pub struct Triangle<T> {
    pub u: Point<T>,
    pub v: Point<T>,
    pub w: Point<T>,
}

/// Homogeneous barycentric weights relative to a triangle.
#[derive(Clone, Debug)]
pub struct Barycentrics<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Field> Barycentrics<T> {
    /// Equality up to a common nonzero factor.
    pub fn same_as(&self, other: &Self) -> bool {
        let minor = |a1: &T, b1: &T, a2: &T, b2: &T| {
            let l = a1.clone() * b2;
            let r = a2.clone() * b1;
            let scale = l.magnitude().max(r.magnitude());
            (l - &r).is_negligible(scale)
        };
        minor(&self.x, &self.y, &other.x, &other.y)
            && minor(&self.x, &self.z, &other.x, &other.z)
            && minor(&self.y, &self.z, &other.y, &other.z)
    }
}

impl<T: Field> Triangle<T> {
    pub fn new(u: Point<T>, v: Point<T>, w: Point<T>) -> Self {
        Triangle { u, v, w }
    }

    /// Like [`Triangle::new`] but rejects coincident or collinear vertices.
    pub fn checked(u: Point<T>, v: Point<T>, w: Point<T>) -> Result<Self, GeomError> {
        let t = Triangle { u, v, w };
        t.ensure_proper()?;
        Ok(t)
    }

    fn ensure_proper(&self) -> Result<(), GeomError> {
        if self.u.coincides(&self.v) || self.v.coincides(&self.w) || self.u.coincides(&self.w) {
            return Err(GeomError::CoincidentPoints);
        }
        if are_collinear(&self.u, &self.v, &self.w) {
            return Err(GeomError::Collinear);
        }
        Ok(())
    }

    pub fn vertices(&self) -> [&Point<T>; 3] {
        [&self.u, &self.v, &self.w]
    }

    /// Squared lengths of the sides opposite `u`, `v`, `w`.
    pub fn squared_sides(&self) -> [T; 3] {
        [
            self.v.sub(&self.w).norm2(),
            self.u.sub(&self.w).norm2(),
            self.u.sub(&self.v).norm2(),
        ]
    }

    /// Twice the signed area.
    pub fn doubled_area(&self) -> T {
        self.v.sub(&self.u).cross(&self.w.sub(&self.u))
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Triangle<U> {
        Triangle {
            u: self.u.map(&f),
            v: self.v.map(&f),
            w: self.w.map(&f),
        }
    }
}

pub fn centroid<T: Field>(t: &Triangle<T>) -> Point<T> {
    let third =
        t.u.x
            .from_rational_like(&crate::arith::BigRat::new(1.into(), 3.into()));
    t.u.add(&t.v).add(&t.w).scale(&third)
}

/// Intersection of the perpendicular bisectors, solved in coordinates
/// relative to `u`.
pub fn circumcenter<T: Field>(t: &Triangle<T>) -> Result<Point<T>, GeomError> {
    t.ensure_proper()?;
    let b = t.v.sub(&t.u);
    let c = t.w.sub(&t.u);
    let d = b.cross(&c) * &b.x.from_int_like(2);
    let (bn, cn) = (b.norm2(), c.norm2());
    let ox = c.y.clone() * &bn - b.y.clone() * &cn;
    let oy = b.x.clone() * &cn - c.x.clone() * &bn;
    let ox = ox.checked_div(&d).ok_or(GeomError::Collinear)?;
    let oy = oy.checked_div(&d).ok_or(GeomError::Collinear)?;
    Ok(t.u.add(&Point::new(ox, oy)))
}

/// `u + v + w − 2·O`.
pub fn orthocenter<T: Field>(t: &Triangle<T>) -> Result<Point<T>, GeomError> {
    let o = circumcenter(t)?;
    let two = o.x.from_int_like(2);
    Ok(t.u.add(&t.v).add(&t.w).sub(&o.scale(&two)))
}

pub fn nine_point_center<T: Field>(t: &Triangle<T>) -> Result<Point<T>, GeomError> {
    let o = circumcenter(t)?;
    let h = orthocenter(t)?;
    Ok(midpoint(&o, &h))
}

/// Vertex average weighted by the squared length of the opposite side.
pub fn symmedian_point<T: Field>(t: &Triangle<T>) -> Result<Point<T>, GeomError> {
    t.ensure_proper()?;
    let [la, lb, lc] = t.squared_sides();
    let sum = la.clone() + &lb + &lc;
    let weighted = t.u.scale(&la).add(&t.v.scale(&lb)).add(&t.w.scale(&lc));
    let x = weighted.x.checked_div(&sum).ok_or(GeomError::Collinear)?;
    let y = weighted.y.checked_div(&sum).ok_or(GeomError::Collinear)?;
    Ok(Point::new(x, y))
}

/// Line through centroid and circumcenter.
pub fn euler_line<T: Field>(t: &Triangle<T>) -> Result<Line<T>, GeomError> {
    let g = centroid(t);
    let o = circumcenter(t)?;
    line_through(&g, &o).map_err(|_| GeomError::UndefinedLine)
}

/// Line through circumcenter and symmedian point.
pub fn brocard_axis<T: Field>(t: &Triangle<T>) -> Result<Line<T>, GeomError> {
    let o = circumcenter(t)?;
    let k = symmedian_point(t)?;
    line_through(&o, &k).map_err(|_| GeomError::UndefinedLine)
}

/// Signed-area weights `(area(p,v,w) : area(u,p,w) : area(u,v,p))`.
pub fn barycentrics_of<T: Field>(
    p: &Point<T>,
    t: &Triangle<T>,
) -> Result<Barycentrics<T>, GeomError> {
    t.ensure_proper()?;
    let area = |a: &Point<T>, b: &Point<T>, c: &Point<T>| b.sub(a).cross(&c.sub(a));
    Ok(Barycentrics {
        x: area(p, &t.v, &t.w),
        y: area(&t.u, p, &t.w),
        z: area(&t.u, &t.v, p),
    })
}

pub fn point_from_barycentrics<T: Field>(
    b: &Barycentrics<T>,
    t: &Triangle<T>,
) -> Result<Point<T>, GeomError> {
    let sum = b.x.clone() + &b.y + &b.z;
    let scale = b.x.magnitude().max(b.y.magnitude()).max(b.z.magnitude());
    if sum.is_negligible(scale) {
        return Err(GeomError::PointAtInfinity);
    }
    let weighted = t.u.scale(&b.x).add(&t.v.scale(&b.y)).add(&t.w.scale(&b.z));
    let x = weighted
        .x
        .checked_div(&sum)
        .ok_or(GeomError::PointAtInfinity)?;
    let y = weighted
        .y
        .checked_div(&sum)
        .ok_or(GeomError::PointAtInfinity)?;
    Ok(Point::new(x, y))
}

/// Isogonal conjugate: barycentrics `(x:y:z)` map to
/// `(ℓu·y·z : ℓv·x·z : ℓw·x·y)` with `ℓ` the squared opposite sides.
pub fn isogonal_conjugate_in_triangle<T: Field>(
    p: &Point<T>,
    t: &Triangle<T>,
) -> Result<Point<T>, GeomError> {
    let b = barycentrics_of(p, t)?;
    let scale = b.x.magnitude().max(b.y.magnitude()).max(b.z.magnitude());
    if [&b.x, &b.y, &b.z].iter().any(|c| c.is_negligible(scale)) {
        return Err(GeomError::OnSideLine);
    }
    let [la, lb, lc] = t.squared_sides();
    let conj = Barycentrics {
        x: la * &b.y * &b.z,
        y: lb * &b.x * &b.z,
        z: lc * &b.x * &b.y,
    };
    point_from_barycentrics(&conj, t).map_err(|e| match e {
        GeomError::PointAtInfinity => GeomError::OnCircumcircle,
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::BigRat;

    fn q(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    fn pt(x: (i64, i64), y: (i64, i64)) -> Point<BigRat> {
        Point::new(q(x.0, x.1), q(y.0, y.1))
    }

    fn ip(x: i64, y: i64) -> Point<BigRat> {
        pt((x, 1), (y, 1))
    }

    fn tri(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> Triangle<BigRat> {
        Triangle::new(ip(a.0, a.1), ip(b.0, b.1), ip(c.0, c.1))
    }

    fn coeffs(l: &Line<BigRat>) -> [BigRat; 3] {
        [l.u.clone(), l.v.clone(), l.w.clone()]
    }

    #[test]
    fn centroids() {
        assert_eq!(centroid(&tri((0, 0), (1, 2), (3, 2))), pt((4, 3), (4, 3)));
        assert_eq!(centroid(&tri((0, 0), (3, 0), (0, 3))), ip(1, 1));
    }

    #[test]
    fn circumcenters() {
        assert_eq!(
            circumcenter(&tri((0, 0), (0, 2), (3, 2))).unwrap(),
            pt((3, 2), (1, 1))
        );
        assert_eq!(
            circumcenter(&tri((0, 0), (2, 0), (0, 2))).unwrap(),
            ip(1, 1)
        );
        assert_eq!(
            circumcenter(&tri((0, 0), (1, 1), (2, 2))),
            Err(GeomError::Collinear)
        );
    }

    #[test]
    fn orthocenters() {
        assert_eq!(orthocenter(&tri((0, 0), (0, 2), (3, 2))).unwrap(), ip(0, 2));
        assert_eq!(orthocenter(&tri((0, 0), (2, 0), (0, 2))).unwrap(), ip(0, 0));
        assert!(orthocenter(&tri((0, 0), (1, 1), (3, 3))).is_err());
    }

    #[test]
    fn nine_point_centers() {
        assert_eq!(
            nine_point_center(&tri((0, 0), (0, 2), (3, 2))).unwrap(),
            pt((3, 4), (3, 2))
        );
        assert_eq!(
            nine_point_center(&tri((0, 0), (2, 0), (0, 2))).unwrap(),
            pt((1, 2), (1, 2))
        );
    }

    #[test]
    fn symmedian_points() {
        assert_eq!(
            symmedian_point(&tri((0, 0), (0, 2), (3, 2))).unwrap(),
            pt((6, 13), (17, 13))
        );
        assert_eq!(
            symmedian_point(&tri((0, 0), (2, 0), (0, 2))).unwrap(),
            pt((1, 2), (1, 2))
        );
    }

    #[test]
    fn central_lines() {
        let t = tri((0, 0), (0, 2), (3, 2));
        assert_eq!(
            coeffs(&euler_line(&t).unwrap()),
            [q(2, 1), q(3, 1), q(-6, 1)]
        );
        assert_eq!(
            coeffs(&brocard_axis(&t).unwrap()),
            [q(8, 1), q(27, 1), q(-39, 1)]
        );
        let iso = tri((0, 0), (2, 0), (0, 2));
        assert_eq!(
            coeffs(&euler_line(&iso).unwrap()),
            [q(1, 1), q(-1, 1), q(0, 1)]
        );
        assert_eq!(
            coeffs(&brocard_axis(&iso).unwrap()),
            [q(1, 1), q(-1, 1), q(0, 1)]
        );
    }

    #[test]
    fn equilateral_has_no_euler_line() {
        // Exact equilateral triangles need irrational coordinates, so use
        // floats here.
        let h = 3f64.sqrt();
        let t = Triangle::new(
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(1.0, h),
        );
        assert_eq!(euler_line(&t), Err(GeomError::UndefinedLine));
    }

    #[test]
    fn barycentric_round_trip() {
        let t = tri((0, 0), (1, 2), (3, 2));
        let g = centroid(&t);
        let bg = barycentrics_of(&g, &t).unwrap();
        let ones = Barycentrics {
            x: q(1, 1),
            y: q(1, 1),
            z: q(1, 1),
        };
        assert!(bg.same_as(&ones));
        let bu = barycentrics_of(&t.u, &t).unwrap();
        assert!(bu.same_as(&Barycentrics {
            x: q(1, 1),
            y: q(0, 1),
            z: q(0, 1)
        }));
        let i = pt((2, 1), (7, 2));
        let bi = barycentrics_of(&i, &t).unwrap();
        assert_eq!(point_from_barycentrics(&bi, &t).unwrap(), i);
        let at_infinity = Barycentrics {
            x: q(1, 1),
            y: q(-1, 1),
            z: q(0, 1),
        };
        assert_eq!(
            point_from_barycentrics(&at_infinity, &t),
            Err(GeomError::PointAtInfinity)
        );
    }

    #[test]
    fn isogonal_conjugates() {
        // In a right triangle the circumcenter sits on the hypotenuse.
        let t = tri((0, 0), (0, 2), (3, 2));
        let o = circumcenter(&t).unwrap();
        assert_eq!(
            isogonal_conjugate_in_triangle(&o, &t),
            Err(GeomError::OnSideLine)
        );
        let acute = tri((0, 0), (4, 0), (1, 3));
        let (oa, ha) = (circumcenter(&acute).unwrap(), orthocenter(&acute).unwrap());
        assert_eq!((oa.clone(), ha.clone()), (ip(2, 1), ip(1, 1)));
        assert_eq!(isogonal_conjugate_in_triangle(&oa, &acute).unwrap(), ha);
        assert_eq!(isogonal_conjugate_in_triangle(&ha, &acute).unwrap(), oa);
        let g = centroid(&t);
        assert_eq!(
            isogonal_conjugate_in_triangle(&g, &t).unwrap(),
            pt((6, 13), (17, 13))
        );
        let right = tri((0, 0), (3, 0), (0, 4));
        assert_eq!(
            isogonal_conjugate_in_triangle(&ip(1, 1), &right).unwrap(),
            ip(1, 1)
        );
        assert_eq!(
            isogonal_conjugate_in_triangle(&ip(1, 0), &right),
            Err(GeomError::OnSideLine)
        );
        // (3,4) lies on the circumcircle of the right triangle.
        assert_eq!(
            isogonal_conjugate_in_triangle(&ip(3, 4), &right),
            Err(GeomError::OnCircumcircle)
        );
    }
}
