//! Polynomials and rational functions with exact rational coefficients.
//!
//! ```text
//! cargo run --example arithmetic
//! ```

use rectpoint::arith::{parse_poly, schwartz_zippel_check, BigRat};
use rectpoint::{MultiPoly, RatFun};

fn main() {
    let p = parse_poly("(a + b)^3 - a^3 - b^3", 4).expect("valid polynomial");
    println!("(a+b)^3 - a^3 - b^3 = {p}");

    let q = parse_poly("3*a*b*(a + b)", 4).expect("valid polynomial");
    let diff = &p - &q;
    println!("difference is zero: {}", diff.is_zero());
    println!(
        "random-point check agrees: {}",
        schwartz_zippel_check(&diff, 8, 1)
    );

    let at: Vec<BigRat> = ["1/2", "-3", "0", "7"]
        .iter()
        .map(|s| s.parse().expect("rational literal"))
        .collect();
    println!("p(1/2, -3, 0, 7) = {}", p.eval(&at).expect("arity 4"));

    // Rational functions compare by cross-multiplication, so no gcd is needed.
    let num = parse_poly("a^2 - b^2", 4).unwrap();
    let den = parse_poly("a - b", 4).unwrap();
    let f = RatFun::new(num, den).expect("nonzero denominator");
    let g = RatFun::from_poly(parse_poly("a + b", 4).unwrap());
    println!("(a^2-b^2)/(a-b) = {f}");
    println!("equal to a + b: {}", f == g);

    let v = RatFun::vars(4);
    let h = (&v[0] / &v[1]) + (&v[1] / &v[0]);
    println!("a/b + b/a = {h} ({} terms)", h.term_count());
    println!("constant 1 has {} term", MultiPoly::one(4).len());
}
