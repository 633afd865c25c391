use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type BigRat = BigRational;

/// `3`, `-7/2`. Used by the polynomial serializer and witness output.
pub fn format_rational(q: &BigRat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `n` or `n/d` with an optional leading sign.
pub fn parse_rational(text: &str) -> Result<BigRat, ArithError> {
    let text = text.trim();
    let bad = |msg: &str| ArithError::Parse {
        pos: 0,
        msg: format!("{msg}: {text:?}"),
    };
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad("invalid numerator"))?;
    let d: BigInt = d.parse().map_err(|_| bad("invalid denominator"))?;
    if d.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    Ok(BigRat::new(n, d))
}

/// Decimal rendering with 17 significant digits, rounded half away from
/// zero, in `d.dddddddddddddddde<exp>` form. Zero renders as `0`.
pub fn decimal17(q: &BigRat) -> String {
    const DIGITS: u32 = 17;
    if q.is_zero() {
        return "0".to_string();
    }
    let neg = q.is_negative();
    let num = q.numer().abs();
    let den = q.denom().clone();

    // Find exp with 10^exp <= |q| < 10^(exp+1).
    let mut exp = num.to_string().len() as i64 - den.to_string().len() as i64;
    let ten = BigInt::from(10u8);
    let pow10 = |k: i64| ten.pow(k.unsigned_abs() as u32);
    let at_least = |e: i64| {
        // |q| >= 10^e ?
        if e >= 0 {
            num >= &den * pow10(e)
        } else {
            &num * pow10(e) >= den
        }
    };
    while !at_least(exp) {
        exp -= 1;
    }
    while at_least(exp + 1) {
        exp += 1;
    }

    // mantissa = round(|q| * 10^(DIGITS-1-exp))
    let shift = DIGITS as i64 - 1 - exp;
    let (n, d) = if shift >= 0 {
        (&num * pow10(shift), den)
    } else {
        (num, den * pow10(shift))
    };
    let (quot, rem) = n.div_rem(&d);
    let mut mantissa = if &rem * 2u8 >= d { quot + 1u8 } else { quot };
    if mantissa >= ten.pow(DIGITS) {
        mantissa /= 10u8;
        exp += 1;
    }
    let digits = mantissa.to_str_radix(10);
    debug_assert_eq!(digits.len(), DIGITS as usize);
    let sign = if neg { "-" } else { "" };
    format!("{sign}{}.{}e{exp}", &digits[..1], &digits[1..])
}

pub(crate) fn bigint_sign_positive(n: &BigInt) -> bool {
    n.sign() == Sign::Plus
}

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
pub(crate) fn rat_int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub(crate) fn is_one(q: &BigRat) -> bool {
    q.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal17(&rat(28, 1)), "2.8000000000000000e1");
        assert_eq!(decimal17(&rat(-42, 1)), "-4.2000000000000000e1");
        assert_eq!(decimal17(&rat(1, 3)), "3.3333333333333333e-1");
        assert_eq!(decimal17(&rat(2, 3)), "6.6666666666666667e-1");
        assert_eq!(decimal17(&rat(80, 27)), "2.9629629629629630e0");
        assert_eq!(decimal17(&rat(1, 1)), "1.0000000000000000e0");
        assert_eq!(decimal17(&rat(0, 1)), "0");
        // Rounding carries into a new digit.
        let almost = BigRat::new(
            BigInt::from(999_999_999_999_999_999i64),
            BigInt::from(10).pow(18),
        );
        assert_eq!(decimal17(&almost), "1.0000000000000000e0");
    }

    #[test]
    fn decimal_parses_back() {
        for (n, d) in [(7, 2), (-80, 27), (123456789, 1000), (1, 70000)] {
            let q = rat(n, d);
            let f: f64 = decimal17(&q).parse().unwrap();
            assert!((f - n as f64 / d as f64).abs() <= 1e-15 * f.abs().max(1.0));
        }
    }

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("-7/2").unwrap(), rat(-7, 2));
        assert_eq!(parse_rational(" 4 ").unwrap(), rat_int(4));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("1/0"), Err(ArithError::DivisionByZero));
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&rat(-7, 2)), "-7/2");
        assert_eq!(format_rational(&rat_int(5)), "5");
    }
}
