//! Side-length expressions: decimal literals, `sqrt(...)`, `*`, `/`,
//! unary minus and parentheses. Values stay exact while they remain in a
//! single quadratic field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};
use quadfold::QuadSurd;

#[derive(Debug, Clone, PartialEq)]
pub struct Value {
    pub exact: Option<QuadSurd>,
    pub approx: f64,
}

impl Value {
    fn exact(q: QuadSurd) -> Self {
        Value {
            approx: q.to_f64(),
            exact: Some(q),
        }
    }

    fn float(approx: f64) -> Self {
        Value {
            exact: None,
            approx,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("unexpected {found} at position {pos} in {input:?}")]
    Unexpected {
        input: String,
        pos: usize,
        found: String,
    },
    #[error("division by zero in {0:?}")]
    DivisionByZero(String),
    #[error("square root of a negative value in {0:?}")]
    NegativeRoot(String),
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn error(&self) -> ExprError {
        let found = match self.src[self.pos..].chars().next() {
            Some(c) => format!("{c:?}"),
            None => "end of input".into(),
        };
        ExprError::Unexpected {
            input: self.src.into(),
            pos: self.pos,
            found,
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ExprError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error())
        }
    }

    fn product(&mut self) -> Result<Value, ExprError> {
        let mut acc = self.factor()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = if op == b'*' {
                mul(acc, rhs)
            } else {
                div(acc, rhs, self.src)?
            };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Value, ExprError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let v = self.factor()?;
                Ok(Value {
                    exact: v.exact.map(|q| -q),
                    approx: -v.approx,
                })
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.product()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(b's') if self.src[self.pos..].starts_with("sqrt") => {
                self.pos += 4;
                self.expect(b'(')?;
                let v = self.product()?;
                self.expect(b')')?;
                sqrt(v, self.src)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            _ => Err(self.error()),
        }
    }

    fn number(&mut self) -> Result<Value, ExprError> {
        let start = self.pos;
        let digits = |p: &mut Self| {
            let s = p.pos;
            while p.pos < p.bytes.len() && p.bytes[p.pos].is_ascii_digit() {
                p.pos += 1;
            }
            &p.src[s..p.pos]
        };
        let int = digits(self);
        let frac = if self.bytes.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            digits(self)
        } else {
            ""
        };
        if int.is_empty() && frac.is_empty() {
            self.pos = start;
            return Err(self.error());
        }
        let mut exp: i64 = 0;
        if matches!(self.bytes.get(self.pos), Some(b'e' | b'E')) {
            self.pos += 1;
            let neg = match self.bytes.get(self.pos) {
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                _ => false,
            };
            let e = digits(self);
            exp = e.parse().map_err(|_| self.error())?;
            if neg {
                exp = -exp;
            }
        }
        let mantissa: BigInt = format!("{int}{frac}").parse().expect("digits");
        let shift = exp - frac.len() as i64;
        let ten = BigInt::from(10);
        let q = if shift >= 0 {
            BigRational::from_integer(mantissa * ten.pow(shift as u64))
        } else {
            BigRational::new(mantissa, ten.pow(shift.unsigned_abs()))
        };
        Ok(Value::exact(QuadSurd::from_rational(q)))
    }
}

fn mul(x: Value, y: Value) -> Value {
    match (x.exact, y.exact) {
        (Some(p), Some(q)) if p.compatible(&q) => Value::exact(p * q),
        _ => Value::float(x.approx * y.approx),
    }
}

fn div(x: Value, y: Value, src: &str) -> Result<Value, ExprError> {
    if y.approx == 0.0 && y.exact.as_ref().is_none_or(|q| q.is_zero()) {
        return Err(ExprError::DivisionByZero(src.into()));
    }
    Ok(match (x.exact, y.exact) {
        (Some(p), Some(q)) if p.compatible(&q) => Value::exact(p / q),
        _ => Value::float(x.approx / y.approx),
    })
}

fn sqrt(v: Value, src: &str) -> Result<Value, ExprError> {
    if v.approx < 0.0 {
        return Err(ExprError::NegativeRoot(src.into()));
    }
    Ok(
        match v
            .exact
            .as_ref()
            .and_then(|q| q.to_rational())
            .and_then(|r| QuadSurd::sqrt_rational(&r))
        {
            Some(q) => Value::exact(q),
            None => Value::float(v.approx.sqrt()),
        },
    )
}

pub fn parse_expr(src: &str) -> Result<Value, ExprError> {
    let mut p = Parser {
        src,
        bytes: src.as_bytes(),
        pos: 0,
    };
    let v = p.product()?;
    if p.peek().is_some() {
        return Err(p.error());
    }
    Ok(v)
}

/// An exact rational from a decimal expression without roots.
pub fn parse_rational(src: &str) -> Result<BigRational, ExprError> {
    let v = parse_expr(src)?;
    v.exact
        .and_then(|q| q.to_rational())
        .ok_or_else(|| ExprError::Unexpected {
            input: src.into(),
            pos: 0,
            found: "an irrational value".into(),
        })
}

/// Whether every value is exact and they share one quadratic field.
pub fn common_field(values: &[Value]) -> Option<Vec<QuadSurd>> {
    let exact: Vec<QuadSurd> = values
        .iter()
        .map(|v| v.exact.clone())
        .collect::<Option<_>>()?;
    let ok = exact.iter().all(|p| exact.iter().all(|q| p.compatible(q)));
    ok.then_some(exact)
}
