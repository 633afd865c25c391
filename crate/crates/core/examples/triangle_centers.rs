//! Classical centers and central lines of a triangle.
//!
//! ```text
//! cargo run --example triangle_centers
//! ```

use rectpoint::arith::BigRat;
use rectpoint::centers::{
    brocard_axis, centroid, circumcenter, euler_line, isogonal_conjugate_in_triangle,
    nine_point_center, orthocenter, symmedian_point, Triangle,
};
use rectpoint::geometry::{are_collinear, Line, Point};
use rectpoint::{Field, RatFun};

fn show<T: Field>(p: &Point<T>) -> String {
    format!("({}, {})", p.x.render(), p.y.render())
}

fn show_line<T: Field>(l: &Line<T>) -> String {
    format!(
        "{}·x + {}·y + {} = 0",
        l.u.render(),
        l.v.render(),
        l.w.render()
    )
}

fn main() {
    let n = |s: &str| s.parse::<BigRat>().unwrap();
    let t = Triangle::new(
        Point::new(n("0"), n("0")),
        Point::new(n("0"), n("2")),
        Point::new(n("3"), n("2")),
    );
    let g = centroid(&t);
    let o = circumcenter(&t).unwrap();
    let h = orthocenter(&t).unwrap();
    let k = symmedian_point(&t).unwrap();
    println!("centroid        {}", show(&g));
    println!("circumcenter    {}", show(&o));
    println!("orthocenter     {}", show(&h));
    println!("nine-point      {}", show(&nine_point_center(&t).unwrap()));
    println!("symmedian point {}", show(&k));
    println!("Euler line      {}", show_line(&euler_line(&t).unwrap()));
    println!("Brocard axis    {}", show_line(&brocard_axis(&t).unwrap()));
    println!("O, G, H collinear: {}", are_collinear(&o, &g, &h));
    let conj = isogonal_conjugate_in_triangle(&g, &t).unwrap();
    println!("isogonal conjugate of G is K: {}", conj == k);

    // Fully symbolic vertices: the Euler line holds as a polynomial identity.
    let v = RatFun::vars(6);
    let p = |i: usize| Point::new(v[i].clone(), v[i + 1].clone());
    let s = Triangle::new(p(0), p(2), p(4));
    let (o, g, h) = (
        circumcenter(&s).unwrap(),
        centroid(&s),
        orthocenter(&s).unwrap(),
    );
    println!("symbolic O, G, H collinear: {}", are_collinear(&o, &g, &h));
}
