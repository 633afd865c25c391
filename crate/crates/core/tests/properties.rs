use num_bigint::BigInt;
use proptest::prelude::*;

use rectpoint::arith::{parse_poly, ratfun_eq, BigRat, MultiPoly, RatFun};
use rectpoint::centers::{
    centroid, circumcenter, isogonal_conjugate_in_triangle, nine_point_center, orthocenter,
    symmedian_point, Triangle,
};
use rectpoint::geometry::{
    are_collinear, circle_through, intersect_lines, is_on_line, line_through, reflect_over_line,
    Line, Point,
};
use rectpoint::Field;

fn rat() -> impl Strategy<Value = BigRat> {
    (-30i64..=30, 1i64..=9).prop_map(|(n, d)| BigRat::new(BigInt::from(n), BigInt::from(d)))
}

fn point() -> impl Strategy<Value = Point<BigRat>> {
    (rat(), rat()).prop_map(|(x, y)| Point::new(x, y))
}

fn poly(arity: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..4, arity), rat()), 0..6)
        .prop_map(move |terms| MultiPoly::from_terms(arity, terms).unwrap())
}

fn triangle() -> impl Strategy<Value = Triangle<BigRat>> {
    (point(), point(), point())
        .prop_filter("proper triangle", |(u, v, w)| !are_collinear(u, v, w))
        .prop_map(|(u, v, w)| Triangle::new(u, v, w))
}

fn q(n: i64, d: i64) -> BigRat {
    BigRat::new(n.into(), d.into())
}

/// Rotation by the angle with cosine 3/5, sine 4/5, then a shift.
fn motion(p: &Point<BigRat>) -> Point<BigRat> {
    Point::new(
        q(3, 5) * &p.x - q(4, 5) * &p.y + q(7, 2),
        q(4, 5) * &p.x + q(3, 5) * &p.y - q(1, 3),
    )
}

fn moved(t: &Triangle<BigRat>) -> Triangle<BigRat> {
    let [u, v, w] = t.vertices();
    Triangle::new(motion(u), motion(v), motion(w))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn polynomial_ring_axioms(p in poly(3), r in poly(3), s in poly(3)) {
        prop_assert_eq!(&p + &r, &r + &p);
        prop_assert_eq!(&p * &r, &r * &p);
        prop_assert_eq!(&(&p * &r) * &s, &p * &(&r * &s));
        prop_assert_eq!(&p * &(&r + &s), &(&p * &r) + &(&p * &s));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &MultiPoly::one(3), p.clone());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(p in poly(3), r in poly(3), x in prop::collection::vec(rat(), 3)) {
        let (ep, er) = (p.eval(&x).unwrap(), r.eval(&x).unwrap());
        prop_assert_eq!((&p * &r).eval(&x).unwrap(), &ep * &er);
        prop_assert_eq!((&p + &r).eval(&x).unwrap(), &ep + &er);
        prop_assert_eq!((&p - &r).eval(&x).unwrap(), ep - er);
    }

    #[test]
    fn serialization_round_trips(p in poly(4)) {
        let text = p.serialize();
        prop_assert_eq!(parse_poly(&text, 4).unwrap(), p.clone());
        prop_assert_eq!(parse_poly(&text, 4).unwrap().serialize(), text);
    }

    #[test]
    fn rational_function_equality_is_an_equivalence(p in poly(3), r in poly(3), s in poly(3)) {
        prop_assume!(!r.is_zero() && !s.is_zero());
        let f = RatFun::new(p.clone(), r.clone()).unwrap();
        // the same function written with an extra common factor
        let g = RatFun::new(&p * &s, &r * &s).unwrap();
        let h = &(&g * &RatFun::from_poly(s.clone())) / &RatFun::from_poly(s.clone());
        prop_assert!(ratfun_eq(&f, &f));
        prop_assert_eq!(ratfun_eq(&f, &g), ratfun_eq(&g, &f));
        prop_assert!(ratfun_eq(&f, &g) && ratfun_eq(&g, &h) && ratfun_eq(&f, &h));
    }

    #[test]
    fn reflection_is_an_involution(p in point(), a in point(), b in point()) {
        prop_assume!(a != b);
        let l = line_through(&a, &b).unwrap();
        let once = reflect_over_line(&p, &l).unwrap();
        prop_assert_eq!(reflect_over_line(&once, &l).unwrap(), p);
    }

    #[test]
    fn intersection_lies_on_both_lines(u1 in rat(), v1 in rat(), w1 in rat(), u2 in rat(), v2 in rat(), w2 in rat()) {
        let (Ok(l1), Ok(l2)) = (Line::new(u1, v1, w1), Line::new(u2, v2, w2)) else {
            return Ok(());
        };
        if let Ok(x) = intersect_lines(&l1, &l2) {
            prop_assert!(is_on_line(&x, &l1) && is_on_line(&x, &l2));
        }
    }

    #[test]
    fn circle_through_contains_its_points(t in triangle()) {
        let [u, v, w] = t.vertices();
        let c = circle_through(u, v, w).unwrap();
        prop_assert!(c.contains(u) && c.contains(v) && c.contains(w));
        prop_assert_eq!(c.center(), circumcenter(&t).unwrap());
    }

    #[test]
    fn collinearity_is_invariant_under_motion(a in point(), b in point(), k in rat()) {
        let c = a.add(&b.sub(&a).scale(&k));
        prop_assert!(are_collinear(&a, &b, &c));
        prop_assert!(are_collinear(&motion(&a), &motion(&b), &motion(&c)));
    }

    #[test]
    fn float_predicates_agree_with_exact_ones(a in point(), b in point(), c in point()) {
        let f = |p: &Point<BigRat>| p.map(|x| x.approx().unwrap());
        prop_assert_eq!(are_collinear(&a, &b, &c), are_collinear(&f(&a), &f(&b), &f(&c)));
    }

    #[test]
    fn centers_commute_with_rigid_motions(t in triangle()) {
        let m = moved(&t);
        prop_assert_eq!(circumcenter(&m).unwrap(), motion(&circumcenter(&t).unwrap()));
        prop_assert_eq!(orthocenter(&m).unwrap(), motion(&orthocenter(&t).unwrap()));
        prop_assert_eq!(nine_point_center(&m).unwrap(), motion(&nine_point_center(&t).unwrap()));
        prop_assert_eq!(symmedian_point(&m).unwrap(), motion(&symmedian_point(&t).unwrap()));
        prop_assert_eq!(centroid(&m), motion(&centroid(&t)));
    }

    #[test]
    fn isogonal_conjugation_is_an_involution(t in triangle(), p in point()) {
        if let Ok(c) = isogonal_conjugate_in_triangle(&p, &t) {
            if let Ok(back) = isogonal_conjugate_in_triangle(&c, &t) {
                prop_assert_eq!(back, p);
            }
        }
    }

    #[test]
    fn symmedian_is_the_conjugate_of_the_centroid(t in triangle()) {
        let g = centroid(&t);
        prop_assert_eq!(isogonal_conjugate_in_triangle(&g, &t).unwrap(), symmedian_point(&t).unwrap());
    }
}
