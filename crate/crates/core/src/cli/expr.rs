//! Function-call expressions over symmetric functions and q,t-scalars.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | atom
//! atom   := integer | 'q' | 't' | '(' expr ')' | name '(' args ')'
//! args   := arg (',' arg)*
//! arg    := expr | '[' integer (',' integer)* ']' | '[' ']'
//! ```

use crate::error::{Error, Result};
use crate::exactalg::QTRational;
use crate::symfun::{Lambda, Partition, SymFunc};

/// Value of an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(QTRational),
    Func(SymFunc),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Sym(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let v = src[start..i].parse().map_err(|_| parse_err(start, "integer too large"))?;
            out.push((start, Tok::Int(v)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'\'') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if "+-*(),[]".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(parse_err(i, &format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

fn parse_err(position: usize, message: &str) -> Error {
    Error::Parse { position, message: message.to_string() }
}

enum Arg {
    Value(Value),
    Partition(Partition),
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    lambda: &'a Lambda,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(parse_err(self.offset(), &format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let rhs = self.term()?;
                acc = self.combine(acc, rhs, false)?;
            } else if self.eat('-') {
                let rhs = self.term()?;
                acc = self.combine(acc, negate(rhs), false)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            let rhs = self.unary()?;
            acc = self.combine(acc, rhs, true)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Value> {
        if self.eat('-') {
            return Ok(negate(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Value> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(Value::Scalar(QTRational::from_i64(v as i64)))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if !self.eat('(') {
                    return match name.as_str() {
                        "q" => Ok(Value::Scalar(QTRational::q())),
                        "t" => Ok(Value::Scalar(QTRational::t())),
                        _ => Err(parse_err(at, &format!("unknown name {name:?}"))),
                    };
                }
                let mut args = Vec::new();
                if !self.eat(')') {
                    loop {
                        args.push(self.arg()?);
                        if self.eat(')') {
                            break;
                        }
                        self.expect(',')?;
                    }
                }
                self.call(at, &name, args)
            }
            _ => Err(parse_err(at, "expected an expression")),
        }
    }

    fn arg(&mut self) -> Result<Arg> {
        if !self.eat('[') {
            return Ok(Arg::Value(self.expr()?));
        }
        let at = self.offset();
        let mut parts = Vec::new();
        if !self.eat(']') {
            loop {
                match self.peek().cloned() {
                    Some(Tok::Int(v)) => {
                        self.pos += 1;
                        parts.push(u32::try_from(v).map_err(|_| parse_err(at, "part too large"))?);
                    }
                    _ => return Err(parse_err(self.offset(), "expected a part")),
                }
                if self.eat(']') {
                    break;
                }
                self.expect(',')?;
            }
        }
        Partition::new(parts).map(Arg::Partition).map_err(|_| parse_err(at, "parts must be weakly decreasing and positive"))
    }

    fn combine(&self, a: Value, b: Value, product: bool) -> Result<Value> {
        let l = self.lambda;
        Ok(match (a, b, product) {
            (Value::Scalar(x), Value::Scalar(y), false) => Value::Scalar(&x + &y),
            (Value::Scalar(x), Value::Scalar(y), true) => Value::Scalar(&x * &y),
            (Value::Func(f), Value::Func(g), false) => Value::Func(l.add(&f, &g)?),
            (Value::Func(f), Value::Func(g), true) => Value::Func(l.multiply(&f, &g)?),
            (Value::Scalar(c), Value::Func(f), true) | (Value::Func(f), Value::Scalar(c), true) => Value::Func(f.scale(&c)),
            (Value::Scalar(c), Value::Func(f), false) | (Value::Func(f), Value::Scalar(c), false) => {
                Value::Func(l.add(&f, &l.one().scale(&c))?)
            }
        })
    }

    fn call(&self, at: usize, name: &str, args: Vec<Arg>) -> Result<Value> {
        let l = self.lambda;
        let arity = |n: usize| -> Result<()> {
            if args.len() == n {
                Ok(())
            } else {
                Err(parse_err(at, &format!("{name} takes {n} argument(s), got {}", args.len())))
            }
        };
        let degree = |a: &Arg| -> Result<u32> {
            match a {
                Arg::Value(Value::Scalar(c)) => c
                    .as_constant()
                    .filter(|c| c.is_integer())
                    .and_then(|c| u32::try_from(c.to_integer()).ok())
                    .ok_or_else(|| parse_err(at, "expected a nonnegative integer")),
                _ => Err(parse_err(at, "expected a nonnegative integer")),
            }
        };
        let func = |a: &Arg| -> Result<SymFunc> {
            match a {
                Arg::Value(Value::Func(f)) => Ok(f.clone()),
                Arg::Value(Value::Scalar(c)) => Ok(l.one().scale(c)),
                Arg::Partition(_) => Err(parse_err(at, "expected a symmetric function")),
            }
        };
        let partition = |a: &Arg| -> Result<Partition> {
            match a {
                Arg::Partition(p) => Ok(p.clone()),
                _ => Err(parse_err(at, "expected a partition [a,b,...]")),
            }
        };
        let bounded = |n: u32| -> Result<u32> {
            if n > l.bound() {
                Err(Error::DegreeBound { degree: n as usize, bound: l.bound() as usize })
            } else {
                Ok(n)
            }
        };
        let f = match name {
            "e" | "h" | "p" => {
                arity(1)?;
                let n = bounded(degree(&args[0])?)?;
                match name {
                    "e" => l.e(n),
                    "h" => l.h(n),
                    _ if n == 0 => l.one(),
                    _ => l.p(n),
                }
            }
            "s" | "m" | "H" => {
                arity(1)?;
                let mu = partition(&args[0])?;
                bounded(mu.size())?;
                match name {
                    "s" => l.s(&mu),
                    "m" => l.m(&mu),
                    _ => l.ht(&mu),
                }
            }
            "E" => {
                arity(2)?;
                let n = bounded(degree(&args[0])?)?;
                l.e_nk(n, degree(&args[1])? as i64)?
            }
            "nabla" => {
                arity(1)?;
                l.nabla(&func(&args[0])?)?
            }
            "omega" => {
                arity(1)?;
                l.omega(&func(&args[0])?)?
            }
            "pi" | "piinv" => {
                arity(1)?;
                l.pi_op(&func(&args[0])?, name == "piinv")?
            }
            "delta" => {
                arity(2)?;
                l.delta(&func(&args[0])?, &func(&args[1])?)?
            }
            "deltaprime" | "delta_prime" | "delta'" => {
                arity(2)?;
                l.delta_prime(&func(&args[0])?, &func(&args[1])?)?
            }
            "theta" => {
                arity(2)?;
                l.theta(&func(&args[0])?, &func(&args[1])?)?
            }
            "hperp" => {
                arity(2)?;
                l.h_perp(degree(&args[0])?, &func(&args[1])?)?
            }
            "inner" | "starinner" | "star_inner" => {
                arity(2)?;
                let (f, g) = (func(&args[0])?, func(&args[1])?);
                let v = if name == "inner" { l.hall_inner(&f, &g)? } else { l.star_inner(&f, &g)? };
                return Ok(Value::Scalar(v));
            }
            _ => return Err(parse_err(at, &format!("unknown function {name:?}"))),
        };
        Ok(Value::Func(f))
    }
}

fn negate(v: Value) -> Value {
    match v {
        Value::Scalar(c) => Value::Scalar(-c),
        Value::Func(f) => Value::Func(f.neg()),
    }
}

/// Parses and evaluates `src`.
pub fn evaluate(lambda: &Lambda, src: &str) -> Result<Value> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, end: src.len(), lambda };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(parse_err(p.offset(), "trailing input"));
    }
    Ok(v)
}
