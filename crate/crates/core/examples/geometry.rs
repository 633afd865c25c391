//! The geometry kernel over exact rationals and over rational functions.
//!
//! ```text
//! cargo run --example geometry
//! ```

use rectpoint::arith::BigRat;
use rectpoint::geometry::{
    are_collinear, circle_through, circles_second_intersection, intersect_lines, line_through,
    perpendicular_bisector, reflect_over_line, Point,
};
use rectpoint::{Field, RatFun};

fn pt(x: &str, y: &str) -> Point<BigRat> {
    Point::new(x.parse().unwrap(), y.parse().unwrap())
}

fn show<T: Field>(p: &Point<T>) -> String {
    format!("({}, {})", p.x.render(), p.y.render())
}

fn main() {
    let a = pt("0", "0");
    let b = pt("4", "0");
    let c = pt("1", "3");

    let ab = line_through(&a, &b).unwrap();
    let bisector = perpendicular_bisector(&a, &c).unwrap();
    let x = intersect_lines(&ab, &bisector).unwrap();
    println!("perpendicular bisector of AC meets AB at {}", show(&x));

    let mirror = reflect_over_line(&c, &ab).unwrap();
    println!("C reflected in AB: {}", show(&mirror));

    let circle = circle_through(&a, &b, &c).unwrap();
    println!("circumcircle center {}", show(&circle.center()));
    let on = [&a, &b, &c].iter().all(|p| circle.contains(p));
    println!("passes through A, B, C: {on}");

    let other = circle_through(&a, &c, &pt("-2", "5")).unwrap();
    let second = circles_second_intersection(&circle, &other, &a).unwrap();
    println!("circles through A and C meet again at {}", show(&second));

    match line_through(&a, &a) {
        Ok(_) => println!("unexpected line"),
        Err(e) => println!("line through A and A: {e}"),
    }

    // The same constructions with symbolic coordinates.
    let v = RatFun::vars(4);
    let p = Point::new(v[0].clone(), v[1].clone());
    let q = Point::new(v[2].clone(), v[3].clone());
    let mid = Point::new((p.x.clone() + &q.x).half(), (p.y.clone() + &q.y).half());
    println!("midpoint of symbolic P, Q: {}", show(&mid));
    println!(
        "P, Q and midpoint collinear: {}",
        are_collinear(&p, &q, &mid)
    );
}
