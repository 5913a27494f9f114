//! Text input: exact rationals and rational-function expressions.
//!
//! Expressions use `+ - * / ^` and parentheses over integer literals and the
//! variable names of [`Var`]; juxtaposition (`2psi`, `(a)(b)`) multiplies.
//! Exponents are integer literals, optionally negative.  Names outside the
//! variable universe are rejected.

use super::error::ExactError;
use super::ratfunc::RatFunc;
use super::var::Var;
use super::BigRat;
use num_bigint::BigInt;
use num_traits::Zero;

/// Parses `[+-]digits[/digits]` into a canonical rational.
pub fn parse_bigrat(text: &str) -> Result<BigRat, ExactError> {
    let t = text.trim();
    let err = |msg: &str| ExactError::Parse {
        pos: 0,
        msg: format!("{msg}: `{text}`"),
    };
    let (sign, body) = match t.as_bytes().first() {
        Some(b'-') => (-1, &t[1..]),
        Some(b'+') => (1, &t[1..]),
        _ => (1, t),
    };
    let (p, q) = match body.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(p) || !q.is_none_or(digits) {
        return Err(err("malformed rational"));
    }
    let num: BigInt = p.parse().map_err(|_| err("malformed rational"))?;
    let den: BigInt = match q {
        Some(q) => q.parse().map_err(|_| err("malformed rational"))?,
        None => 1.into(),
    };
    if den.is_zero() {
        return Err(ExactError::ZeroDenominator);
    }
    Ok(BigRat::new(num * sign, den))
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ExactError> {
    let mut out = Vec::new();
    let mut it = s.char_indices().peekable();
    while let Some(&(pos, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
        } else if c.is_ascii_digit() {
            let mut lit = String::new();
            while let Some(&(_, d)) = it.peek() {
                if d.is_ascii_digit() {
                    lit.push(d);
                    it.next();
                } else {
                    break;
                }
            }
            out.push((pos, Tok::Int(lit.parse().unwrap())));
        } else if c.is_alphabetic() {
            let mut name = String::new();
            while let Some(&(_, d)) = it.peek() {
                if d.is_alphanumeric() || d == '\'' || d == '_' {
                    name.push(d);
                    it.next();
                } else {
                    break;
                }
            }
            out.push((pos, Tok::Ident(name)));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Op(c)));
            it.next();
        } else {
            return Err(ExactError::Parse {
                pos,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: &str) -> Result<T, ExactError> {
        Err(ExactError::Parse {
            pos: self.pos(),
            msg: msg.to_string(),
        })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc, ExactError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, ExactError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let pos = self.pos();
                let d = self.unary()?;
                acc = acc.checked_div(&d).map_err(|_| ExactError::Parse {
                    pos,
                    msg: "division by zero".into(),
                })?;
            } else if matches!(
                self.peek(),
                Some(Tok::Int(_) | Tok::Ident(_) | Tok::Op('('))
            ) {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc, ExactError> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<RatFunc, ExactError> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let paren = self.eat('(');
        let neg = self.eat('-');
        let pos = self.pos();
        let e = match self.peek() {
            Some(Tok::Int(k)) => {
                let k: i32 = k.try_into().map_err(|_| ExactError::Parse {
                    pos,
                    msg: "exponent too large".into(),
                })?;
                self.i += 1;
                if neg {
                    -k
                } else {
                    k
                }
            }
            _ => return self.err("expected an integer exponent"),
        };
        if paren && !self.eat(')') {
            return self.err("expected `)`");
        }
        base.pow(e).map_err(|_| ExactError::Parse {
            pos,
            msg: "zero raised to a negative power".into(),
        })
    }

    fn primary(&mut self) -> Result<RatFunc, ExactError> {
        match self.peek().cloned() {
            Some(Tok::Int(k)) => {
                self.i += 1;
                Ok(RatFunc::constant(BigRat::from_integer(k)))
            }
            Some(Tok::Ident(name)) => {
                self.i += 1;
                match Var::from_name(&name) {
                    Some(v) => Ok(RatFunc::var(v)),
                    None => Err(ExactError::UnknownVariable(name)),
                }
            }
            Some(Tok::Op('(')) => {
                self.i += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an expression into a canonical rational function.
pub fn parse_ratfunc(text: &str) -> Result<RatFunc, ExactError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        i: 0,
        end: text.len(),
    };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}
