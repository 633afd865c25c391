use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::poly::MultiPoly;
use super::rational::{is_one, BigRat};
use super::ArithError;

/// Quotient of two polynomials of the same arity.
///
/// No polynomial gcd is ever taken. After each operation the denominator
/// is made primitive with a positive leading coefficient, the rational
/// content is folded into the numerator, and any monomial common to both
/// sides is cancelled. Equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct RatFun {
    num: MultiPoly,
    den: MultiPoly,
}

/// Field operation selector for [`ratfun_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies a field operation; division by the zero function is an error.
pub fn ratfun_arith(op: RatOp, f: &RatFun, g: &RatFun) -> Result<RatFun, ArithError> {
    if f.arity() != g.arity() {
        return Err(ArithError::ArityMismatch {
            left: f.arity(),
            right: g.arity(),
        });
    }
    Ok(match op {
        RatOp::Add => f + g,
        RatOp::Sub => f - g,
        RatOp::Mul => f * g,
        RatOp::Div => f.checked_div(g).ok_or(ArithError::DivisionByZero)?,
    })
}

/// `num(f)·den(g) = num(g)·den(f)`.
pub fn ratfun_eq(f: &RatFun, g: &RatFun) -> bool {
    f == g
}

impl RatFun {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, ArithError> {
        if num.arity() != den.arity() {
            return Err(ArithError::ArityMismatch {
                left: num.arity(),
                right: den.arity(),
            });
        }
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        let den = MultiPoly::one(num.arity());
        RatFun { num, den }
    }

    pub fn zero(arity: usize) -> Self {
        Self::from_poly(MultiPoly::zero(arity))
    }

    pub fn one(arity: usize) -> Self {
        Self::from_poly(MultiPoly::one(arity))
    }

    pub fn constant(arity: usize, value: &BigRat) -> Self {
        Self::from_poly(MultiPoly::constant(arity, value))
    }

    pub fn var(arity: usize, var: usize) -> Self {
        Self::from_poly(MultiPoly::var(arity, var))
    }

    pub fn vars(arity: usize) -> Vec<Self> {
        (0..arity).map(|i| Self::var(arity, i)).collect()
    }

    pub fn arity(&self) -> usize {
        self.num.arity()
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Total stored terms, the unit of the symbolic size budget.
    pub fn term_count(&self) -> usize {
        self.num.len() + self.den.len()
    }

    fn normalized(num: MultiPoly, den: MultiPoly) -> Self {
        let arity = num.arity();
        if num.is_zero() {
            return Self::zero(arity);
        }
        if let Some(c) = den.as_constant() {
            return Self::from_poly(num.scale(&c.recip()));
        }
        let m = MultiPoly::monomial_gcd(num.monomial_content(), den.monomial_content(), arity);
        let (num, den) = (num.div_monomial(m), den.div_monomial(m));
        let (scale, den) = den.primitive();
        let num = if is_one(&scale) {
            num
        } else {
            num.scale(&scale.recip())
        };
        if let Some(c) = den.as_constant() {
            // Monomial cancellation can leave a constant denominator.
            return Self::from_poly(num.scale(&c.recip()));
        }
        if num == den {
            return Self::one(arity);
        }
        RatFun { num, den }
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        Some(self * &rhs.recip_unchecked())
    }

    fn recip_unchecked(&self) -> Self {
        Self::normalized(self.den.clone(), self.num.clone())
    }

    /// Evaluates at a rational point; `None` where the denominator vanishes.
    pub fn eval(&self, point: &[BigRat]) -> Result<Option<BigRat>, ArithError> {
        let d = self.den.eval(point)?;
        if d == BigRat::from_integer(0.into()) {
            return Ok(None);
        }
        Ok(Some(self.num.eval(point)? / d))
    }

    pub fn serialize(&self) -> String {
        if self.den.is_one() {
            self.num.serialize()
        } else {
            format!("({})/({})", self.num.serialize(), self.den.serialize())
        }
    }

    fn scale_num(&self, factor: &BigRat) -> Self {
        RatFun {
            num: self.num.scale(factor),
            den: self.den.clone(),
        }
    }
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        if self.num == other.num && self.den == other.den {
            return true;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({})", self.serialize())
    }
}

impl Add<&RatFun> for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return RatFun::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let num = &self.num * &rhs.den + &rhs.num * &self.den;
        RatFun::normalized(num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub<&RatFun> for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul<&RatFun> for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero(self.arity());
        }
        if let Some(c) = self.num.as_constant().filter(|_| self.den.is_one()) {
            return rhs.scale_num(&c);
        }
        if let Some(c) = rhs.num.as_constant().filter(|_| rhs.den.is_one()) {
            return self.scale_num(&c);
        }
        // Cheap structural cancellation before multiplying out.
        let (n1, d2) = if self.num == rhs.den {
            (MultiPoly::one(self.arity()), MultiPoly::one(self.arity()))
        } else {
            (self.num.clone(), rhs.den.clone())
        };
        let (n2, d1) = if rhs.num == self.den {
            (MultiPoly::one(self.arity()), MultiPoly::one(self.arity()))
        } else {
            (rhs.num.clone(), self.den.clone())
        };
        RatFun::normalized(&n1 * &n2, &d1 * &d2)
    }
}

/// Panics on division by the zero function; use [`RatFun::checked_div`].
impl Div<&RatFun> for &RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        self.checked_div(rhs)
            .expect("division by the zero rational function")
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: RatFun) -> RatFun {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: &RatFun) -> RatFun {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -self.num,
            den: self.den,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse::parse_poly;
    use super::super::rational::{rat, rat_int};
    use super::*;

    fn rf(num: &str, den: &str) -> RatFun {
        RatFun::new(parse_poly(num, 4).unwrap(), parse_poly(den, 4).unwrap()).unwrap()
    }

    #[test]
    fn reciprocal_product_is_one() {
        let f = rf("a", "b");
        let g = rf("b", "a");
        assert!(ratfun_eq(&(&f * &g), &RatFun::one(4)));
    }

    #[test]
    fn common_factor_is_invisible_to_equality() {
        let f = rf("a^2 - b^2", "a - b");
        let g = rf("a + b", "1");
        assert!(ratfun_eq(&f, &g));
        assert!(ratfun_eq(&f, &f));
        assert!(!ratfun_eq(&rf("1", "a"), &rf("1", "b")));
    }

    #[test]
    fn division_by_zero() {
        let f = rf("a", "b");
        assert_eq!(
            ratfun_arith(RatOp::Div, &f, &RatFun::zero(4)).unwrap_err(),
            ArithError::DivisionByZero
        );
        assert!(RatFun::new(MultiPoly::one(4), MultiPoly::zero(4)).is_err());
    }

    #[test]
    fn normalization_folds_constants_and_monomials() {
        let f = rf("4*a^2*b", "6*a*b^2");
        assert_eq!(f.numer().serialize(), "2/3*a^1");
        assert_eq!(f.denom().serialize(), "1*b^1");
        let g = rf("a - c", "-2*b*(a - c)");
        // no gcd: the binomial factor stays, but the sign moves up
        assert_eq!(g.denom().serialize(), "1*a^1*b^1 - 1*b^1*c^1");
        assert!(ratfun_eq(&g, &rf("-1", "2*b")));
    }

    #[test]
    fn sum_with_shared_denominator() {
        let f = rf("a", "a + b");
        let g = rf("b", "a + b");
        assert_eq!(&f + &g, RatFun::one(4));
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn evaluation_respects_poles() {
        let f = rf("a*c", "3*a*c - b*d");
        let at = |v: [i64; 4]| v.map(rat_int);
        assert_eq!(f.eval(&at([1, 2, 3, 5])).unwrap(), Some(rat_int(-3)));
        let pole = [rat_int(1), rat_int(2), rat_int(3), rat(9, 2)];
        assert_eq!(f.eval(&pole).unwrap(), None);
    }
}
