//! The scalar abstraction the geometry kernel is generic over.
//!
//! Three fields implement it: exact rationals ([`BigRat`]), rational
//! functions ([`RatFun`], for symbolic proofs) and `f64` (cross-checks and
//! figures only).

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{format_rational, BigRat, MultiPoly, RatFun};

/// Relative tolerance used by every float predicate.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

/// A field of scalars.
///
/// Constants are produced "like" an existing value because a rational
/// function needs to know its arity.
#[allow(clippy::wrong_self_convention)]
pub trait Field:
    Clone
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_rational_like(&self, q: &BigRat) -> Self;

    fn from_int_like(&self, n: i64) -> Self {
        self.from_rational_like(&BigRat::from_integer(n.into()))
    }

    /// `None` when the divisor is zero.
    fn checked_div(&self, rhs: &Self) -> Option<Self>;

    /// Exact zero test. For rational functions this is the polynomial
    /// identity test on the numerator.
    fn vanishes(&self) -> bool;

    /// Zero test for a quantity computed as a combination of terms whose
    /// magnitudes are at most `scale`. Exact fields ignore `scale`.
    fn is_negligible(&self, _scale: f64) -> bool {
        self.vanishes()
    }

    /// Rough magnitude, used only to build float tolerances.
    fn magnitude(&self) -> f64 {
        0.0
    }

    /// Decimal approximation, if the field has one.
    fn approx(&self) -> Option<f64>;

    /// Text form used in witnesses and reports.
    fn render(&self) -> String;

    /// Stored polynomial terms; 1 for numeric fields.
    fn term_count(&self) -> usize {
        1
    }

    /// Denominator polynomial for rational functions, when not constant.
    fn denominator_poly(&self) -> Option<&MultiPoly> {
        None
    }

    /// Rescales a projective tuple (line coefficients, barycentrics) into a
    /// tidy representative. The default leaves it alone.
    fn normalize_projective(_items: &mut [Self]) {}

    fn square(&self) -> Self {
        self.clone() * self
    }

    fn half(&self) -> Self {
        self.clone() * &self.from_rational_like(&BigRat::new(1.into(), 2.into()))
    }

    /// Evaluates `p` with `vars` substituted for its variables.
    fn eval_poly(p: &MultiPoly, vars: &[Self]) -> Self {
        assert_eq!(p.arity(), vars.len(), "polynomial arity mismatch");
        let unit = vars[0].one_like();
        let mut sum = unit.zero_like();
        for (exps, coeff) in p.terms() {
            let mut term = unit.from_rational_like(&coeff);
            for (x, &e) in vars.iter().zip(&exps) {
                for _ in 0..e {
                    term = term * x;
                }
            }
            sum = sum + &term;
        }
        sum
    }
}

impl Field for BigRat {
    fn zero_like(&self) -> Self {
        BigRat::zero()
    }

    fn one_like(&self) -> Self {
        BigRat::one()
    }

    fn from_rational_like(&self, q: &BigRat) -> Self {
        q.clone()
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        (!Zero::is_zero(rhs)).then(|| self / rhs)
    }

    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }

    fn magnitude(&self) -> f64 {
        ToPrimitive::to_f64(self).map_or(f64::INFINITY, f64::abs)
    }

    fn approx(&self) -> Option<f64> {
        ToPrimitive::to_f64(self)
    }

    fn render(&self) -> String {
        format_rational(self)
    }

    fn normalize_projective(items: &mut [Self]) {
        // Scale to coprime integers with the first nonzero entry positive.
        let Some(first) = items.iter().find(|q| !Zero::is_zero(*q)).cloned() else {
            return;
        };
        let mut den = num_bigint::BigInt::one();
        let mut num_gcd = num_bigint::BigInt::zero();
        for q in items.iter() {
            den = num_integer::Integer::lcm(&den, q.denom());
        }
        for q in items.iter() {
            let scaled = q.numer() * (&den / q.denom());
            num_gcd = num_integer::Integer::gcd(&num_gcd, &scaled);
        }
        let mut factor = BigRat::new(den, num_gcd);
        if first.is_negative() {
            factor = -factor;
        }
        for q in items.iter_mut() {
            *q = &*q * &factor;
        }
    }
}

impl Field for RatFun {
    fn zero_like(&self) -> Self {
        RatFun::zero(self.arity())
    }

    fn one_like(&self) -> Self {
        RatFun::one(self.arity())
    }

    fn from_rational_like(&self, q: &BigRat) -> Self {
        RatFun::constant(self.arity(), q)
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        RatFun::checked_div(self, rhs)
    }

    fn vanishes(&self) -> bool {
        RatFun::is_zero(self)
    }

    fn approx(&self) -> Option<f64> {
        None
    }

    fn render(&self) -> String {
        self.serialize()
    }

    fn term_count(&self) -> usize {
        RatFun::term_count(self)
    }

    fn denominator_poly(&self) -> Option<&MultiPoly> {
        let d = self.denom();
        (d.as_constant().is_none()).then_some(d)
    }

    fn normalize_projective(items: &mut [Self]) {
        // Clear denominators: multiply through by the product of the
        // distinct denominators, then strip the numerators' common
        // monomial and rational content.
        let arity = match items.first() {
            Some(f) => f.arity(),
            None => return,
        };
        let mut dens: Vec<&MultiPoly> = Vec::new();
        for f in items.iter() {
            if !f.denom().is_one() && !dens.contains(&f.denom()) {
                dens.push(f.denom());
            }
        }
        let nums: Vec<MultiPoly> = if dens.is_empty() {
            items.iter().map(|f| f.numer().clone()).collect()
        } else {
            items
                .iter()
                .map(|f| {
                    let mut n = f.numer().clone();
                    let mut own_seen = false;
                    for d in &dens {
                        if !own_seen && *d == f.denom() {
                            own_seen = true;
                            continue;
                        }
                        n = &n * *d;
                    }
                    n
                })
                .collect()
        };
        if nums.iter().all(MultiPoly::is_zero) {
            return;
        }
        let nonzero: Vec<&MultiPoly> = nums.iter().filter(|n| !n.is_zero()).collect();
        let mut mono = nonzero[0].monomial_content();
        for n in &nonzero[1..] {
            mono = MultiPoly::monomial_gcd(mono, n.monomial_content(), arity);
        }
        let lead = nonzero[0].primitive().0;
        let mut content_den = num_bigint::BigInt::one();
        let mut content_num = num_bigint::BigInt::zero();
        for n in &nonzero {
            let (s, _) = n.primitive();
            content_den = num_integer::Integer::lcm(&content_den, s.denom());
            content_num = num_integer::Integer::gcd(&content_num, s.numer());
        }
        let mut factor = BigRat::new(content_den, content_num);
        if lead.is_negative() {
            factor = -factor;
        }
        for (slot, n) in items.iter_mut().zip(nums) {
            *slot = RatFun::from_poly(n.div_monomial(mono).scale(&factor));
        }
    }
}

impl Field for f64 {
    fn zero_like(&self) -> Self {
        0.0
    }

    fn one_like(&self) -> Self {
        1.0
    }

    fn from_rational_like(&self, q: &BigRat) -> Self {
        ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        (*rhs != 0.0).then(|| self / rhs)
    }

    fn vanishes(&self) -> bool {
        *self == 0.0
    }

    fn is_negligible(&self, scale: f64) -> bool {
        self.abs() <= FLOAT_TOLERANCE * scale
    }

    fn magnitude(&self) -> f64 {
        self.abs()
    }

    fn approx(&self) -> Option<f64> {
        Some(*self)
    }

    fn render(&self) -> String {
        format!("{self:.16e}")
    }
}
