//! Polynomial JSON and a small infix parser.

use serde::{Deserialize, Serialize};

use super::field::{Field, FieldDescriptor};
use super::multipoly::MultiPoly;
use super::prime::PrimeField;
use super::rational::RationalField;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: usize,
    pub field: FieldDescriptor,
    pub terms: Vec<TermJson>,
}

/// A polynomial whose coefficient field is only known at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyPoly {
    Rational(MultiPoly<RationalField>),
    Prime(MultiPoly<PrimeField>),
}

impl<K: Field> MultiPoly<K> {
    /// Terms are listed in decreasing grevlex order.
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.nvars(),
            field: self.field().descriptor(),
            terms: self
                .terms()
                .rev()
                .map(|(m, c)| TermJson { exp: m.0.clone(), coef: self.field().format_elem(c) })
                .collect(),
        }
    }

    pub fn from_json_in(field: K, j: &PolyJson) -> Result<Self> {
        let terms = j
            .terms
            .iter()
            .map(|t| Ok((t.exp.clone(), field.parse_elem(&t.coef)?)))
            .collect::<Result<Vec<_>>>()?;
        MultiPoly::from_terms(field, j.vars, terms)
    }
}

impl AnyPoly {
    pub fn from_json(j: &PolyJson) -> Result<Self> {
        match &j.field {
            FieldDescriptor::Rational => Ok(AnyPoly::Rational(MultiPoly::from_json_in(RationalField, j)?)),
            FieldDescriptor::Prime { p } => Ok(AnyPoly::Prime(MultiPoly::from_json_in(PrimeField::new(*p)?, j)?)),
            other => Err(Error::InvalidField(format!("unsupported polynomial field {other}"))),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&j)
    }

    pub fn to_json(&self) -> PolyJson {
        match self {
            AnyPoly::Rational(p) => p.to_json(),
            AnyPoly::Prime(p) => p.to_json(),
        }
    }

    pub fn nvars(&self) -> usize {
        match self {
            AnyPoly::Rational(p) => p.nvars(),
            AnyPoly::Prime(p) => p.nvars(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Var(usize),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Num(chars[start..i].iter().collect()));
        } else if c == 'x' {
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(Error::Parse("variable name must be x followed by an index".into()));
            }
            let idx: usize = chars[start..i].iter().collect::<String>().parse().map_err(|_| Error::Parse("bad index".into()))?;
            out.push(Tok::Var(idx));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a, K: Field> {
    toks: &'a [Tok],
    pos: usize,
    field: K,
    nvars: usize,
}

impl<K: Field> Parser<'_, K> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> Result<MultiPoly<K>> {
        let mut acc = match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                -&self.term()?
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek() {
            let c = *c;
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly<K>> {
        let mut acc = self.power()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek() {
            let c = *c;
            self.pos += 1;
            let f = self.power()?;
            acc = if c == '*' {
                &acc * &f
            } else {
                if !f.is_constant() || f.is_zero() {
                    return Err(Error::Parse("division only by nonzero constants".into()));
                }
                let inv = self
                    .field
                    .inv(&f.constant_term())
                    .ok_or_else(|| Error::Parse("division by zero".into()))?;
                acc.scale(&inv)
            };
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MultiPoly<K>> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n.parse().map_err(|_| Error::Parse(format!("bad exponent {n}")))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(Error::Parse("exponent must be a nonnegative integer".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly<K>> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(self.field.clone(), self.nvars, self.field.parse_elem(&n)?))
            }
            Some(Tok::Var(i)) => {
                self.pos += 1;
                if i >= self.nvars {
                    return Err(Error::VarIndex { index: i, nvars: self.nvars });
                }
                Ok(MultiPoly::var(self.field.clone(), self.nvars, i))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return Err(Error::Parse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-&self.power()?)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses an expression such as `x0^2*x1 + 3/2*x2 - (x3 + x4)^3` in
/// variables x0, …, x(nvars−1).
pub fn parse_poly<K: Field>(field: K, nvars: usize, s: &str) -> Result<MultiPoly<K>> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks: &toks, pos: 0, field, nvars };
    let e = p.expr()?;
    if p.pos != toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_roundtrip() {
        let f = parse_poly(RationalField, 5, "x0^2*x1 + x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x0").unwrap();
        assert_eq!(f.num_terms(), 5);
        let g = parse_poly(RationalField, 5, &f.to_string()).unwrap();
        assert_eq!(f, g);
        let h = parse_poly(RationalField, 2, "-(x0 - 1/2*x1)^2").unwrap();
        assert_eq!(h.to_string(), "-x0^2 + x0*x1 - 1/4*x1^2");
        assert!(parse_poly(RationalField, 2, "x2").is_err());
        assert!(parse_poly(RationalField, 2, "x0 +").is_err());
    }

    #[test]
    fn json_roundtrip() {
        let f = parse_poly(PrimeField::new(101).unwrap(), 3, "x0^3 - 2*x1*x2^2").unwrap();
        let s = serde_json::to_string(&f.to_json()).unwrap();
        assert!(s.contains("\"type\":\"Fp\""));
        assert!(s.contains("\"coef\":\"99\""));
        let back = AnyPoly::from_json_str(&s).unwrap();
        assert_eq!(back, AnyPoly::Prime(f));
        let q = r#"{"vars":2,"field":{"type":"QQ"},"terms":[{"exp":[1,0],"coef":"3/6"}]}"#;
        let AnyPoly::Rational(p) = AnyPoly::from_json_str(q).unwrap() else { panic!() };
        assert_eq!(p.to_string(), "1/2*x0");
    }
}
