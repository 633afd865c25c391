use num_bigint::BigInt;

use super::poly::{var_names, MultiPoly};
use super::rational::BigRat;
use super::ArithError;

/// Parses a polynomial expression over the variables of [`var_names`]
/// for `arity`.
///
/// Accepts integers, variables, `+ - * ^`, parentheses, and `/` when the
/// divisor is a nonzero constant. This covers both the serializer output
/// (`-1*a^1*c^1 + 1/2*b^2`) and hand-written forms like `2*a^2 - 2*a*c`.
pub fn parse_poly(text: &str, arity: usize) -> Result<MultiPoly, ArithError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        arity,
        names: var_names(arity),
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    arity: usize,
    names: Vec<String>,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ArithError {
        ArithError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, ArithError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ArithError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let divisor = self.unary()?;
                let value = divisor.as_constant().ok_or(ArithError::Parse {
                    pos: at,
                    msg: "divisor must be a constant".into(),
                })?;
                if value == BigRat::from_integer(0.into()) {
                    return Err(ArithError::DivisionByZero);
                }
                acc = acc.scale(&value.recip());
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly, ArithError> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly, ArithError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let n = self.integer()?;
            let exp: u32 = n
                .try_into()
                .map_err(|_| self.error("exponent out of range"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, ArithError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("validated digits"))
    }

    fn atom(&mut self) -> Result<MultiPoly, ArithError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(MultiPoly::constant(self.arity, &BigRat::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.names.iter().position(|n| n == name) {
                    Some(i) => Ok(MultiPoly::var(self.arity, i)),
                    None => Err(ArithError::Parse {
                        pos: start,
                        msg: format!("unknown variable {name:?}"),
                    }),
                }
            }
            _ => Err(self.error("expected number, variable or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::rat;
    use super::*;

    #[test]
    fn reads_serializer_output() {
        let p = parse_poly("-1*a^1*c^1 + 1*b^2", 4).unwrap();
        assert_eq!(p.serialize(), "-1*a^1*c^1 + 1*b^2");
        let q = parse_poly("1/2*a^1 - 3/4", 4).unwrap();
        assert_eq!(q.serialize(), "1/2*a^1 - 3/4");
    }

    #[test]
    fn reads_hand_written_forms() {
        let p = parse_poly("2*a^2 - 2*a*c + 2*b^2 + 2*c^2", 4).unwrap();
        let q = parse_poly("2*(a^2 + b^2 + c^2 - a*c)", 4).unwrap();
        assert_eq!(p, q);
        let r = parse_poly("-(b+d)", 4).unwrap();
        assert_eq!(
            r.eval(&[rat(1, 1), rat(2, 1), rat(3, 1), rat(5, 1)])
                .unwrap(),
            rat(-7, 1)
        );
        let s = parse_poly("a1*b2 - a2", 6).unwrap();
        assert_eq!(s.arity(), 6);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_poly("a + ", 4).is_err());
        assert!(parse_poly("e", 4).is_err());
        assert!(parse_poly("a / b", 4).is_err());
        assert_eq!(parse_poly("a / 0", 4), Err(ArithError::DivisionByZero));
        assert!(parse_poly("(a", 4).is_err());
        assert!(parse_poly("a b", 4).is_err());
    }
}
