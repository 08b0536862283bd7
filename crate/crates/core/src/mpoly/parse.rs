//! Recursive-descent parser for the polynomial grammar:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor | factor-starting-with-variable)*
//! factor := (number | variable | '(' expr ')') ['^' digits]
//! number := digits ['/' digits]
//! ```
//!
//! `*` may be omitted only before a variable, so `4xy` and `4x^2y` parse.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Form;
use crate::arith::{Rat, UPoly};
use crate::error::{Error, Result};

/// Not-necessarily-homogeneous polynomial: exponent vector -> coefficient.
pub type SparsePoly = BTreeMap<Vec<u32>, Rat>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str, vars: &[String]) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().map(|(_, c)| c).collect();
                out.push((pos, Tok::Num(s.parse().unwrap())));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().map(|(_, c)| c).collect();
                // split the identifier run into declared names, longest first
                let mut rest = word.as_str();
                let mut off = pos;
                while !rest.is_empty() {
                    let best = vars
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| rest.starts_with(v.as_str()))
                        .max_by_key(|(_, v)| v.len());
                    match best {
                        Some((k, v)) => {
                            out.push((off, Tok::Var(k)));
                            off += v.len();
                            rest = &rest[v.len()..];
                        }
                        None => {
                            return Err(Error::Syntax { pos: off, msg: format!("unknown variable in `{rest}`") })
                        }
                    }
                }
            }
            _ => {
                let t = match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    _ => return Err(Error::Syntax { pos, msg: format!("unexpected character `{c}`") }),
                };
                out.push((pos, t));
                i += 1;
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    nvars: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.to_string() })
    }

    fn expr(&mut self) -> Result<SparsePoly> {
        let mut neg = false;
        match self.peek() {
            Some(Tok::Plus) => self.i += 1,
            Some(Tok::Minus) => {
                neg = true;
                self.i += 1
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if neg {
            acc = scale(&acc, &-Rat::one());
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.i += 1;
                    let t = self.term()?;
                    acc = add(&acc, &t);
                }
                Some(Tok::Minus) => {
                    self.i += 1;
                    let t = self.term()?;
                    acc = add(&acc, &scale(&t, &-Rat::one()));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SparsePoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.i += 1;
                    let f = self.factor()?;
                    acc = mul(&acc, &f);
                }
                Some(Tok::Var(_)) => {
                    let f = self.factor()?;
                    acc = mul(&acc, &f);
                }
                Some(Tok::Num(_)) | Some(Tok::LParen) => return self.err("expected `*` between factors"),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<SparsePoly> {
        let base = match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.i += 1;
                let mut r = Rat::from_integer(n);
                if self.peek() == Some(&Tok::Slash) {
                    self.i += 1;
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) if !d.is_zero() => {
                            self.i += 1;
                            r /= Rat::from_integer(d);
                        }
                        Some(Tok::Num(_)) => return self.err("zero denominator"),
                        _ => return self.err("expected denominator literal"),
                    }
                }
                constant(self.nvars, r)
            }
            Some(Tok::Var(k)) => {
                self.i += 1;
                let mut e = vec![0; self.nvars];
                e[k] = 1;
                SparsePoly::from([(e, Rat::one())])
            }
            Some(Tok::LParen) => {
                self.i += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.i += 1;
                inner
            }
            _ => return self.err("expected a number, variable or `(`"),
        };
        if self.peek() == Some(&Tok::Caret) {
            self.i += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.i += 1;
                    let e: u32 = n.try_into().map_err(|_| Error::Syntax { pos: self.pos(), msg: "exponent too large".into() })?;
                    let mut acc = constant(self.nvars, Rat::one());
                    for _ in 0..e {
                        acc = mul(&acc, &base);
                    }
                    return Ok(acc);
                }
                _ => return self.err("expected a nonnegative integer exponent"),
            }
        }
        Ok(base)
    }
}

fn constant(nvars: usize, r: Rat) -> SparsePoly {
    let mut p = SparsePoly::new();
    if !r.is_zero() {
        p.insert(vec![0; nvars], r);
    }
    p
}

fn add(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
    let mut out = a.clone();
    for (e, c) in b {
        let entry = out.entry(e.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            out.remove(e);
        }
    }
    out
}

fn scale(a: &SparsePoly, c: &Rat) -> SparsePoly {
    a.iter().map(|(e, v)| (e.clone(), v * c)).collect()
}

fn mul(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
    let mut out = SparsePoly::new();
    for (e1, c1) in a {
        for (e2, c2) in b {
            let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
            let entry = out.entry(e.clone()).or_insert_with(Rat::zero);
            *entry += c1 * c2;
            if entry.is_zero() {
                out.remove(&e);
            }
        }
    }
    out
}

/// Parses an arbitrary polynomial in the declared variables.
pub fn parse_poly(text: &str, vars: &[String]) -> Result<SparsePoly> {
    let toks = tokenize(text, vars)?;
    let mut p = Parser { toks, i: 0, nvars: vars.len(), end: text.len() };
    if p.toks.is_empty() {
        return p.err("empty expression");
    }
    let poly = p.expr()?;
    if p.i != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(poly)
}

fn mono_string(vars: &[String], e: &[u32]) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(e)
        .filter(|(_, &k)| k > 0)
        .map(|(v, &k)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Parses a homogeneous form.
pub fn parse_form(text: &str, vars: &[String]) -> Result<Form> {
    let poly = parse_poly(text, vars)?;
    let mut degree = None;
    let mut first: Option<&Vec<u32>> = None;
    for e in poly.keys() {
        let d: u32 = e.iter().sum();
        match degree {
            None => {
                degree = Some(d);
                first = Some(e);
            }
            Some(d0) if d0 != d => {
                return Err(Error::NotHomogeneous {
                    first: mono_string(vars, first.unwrap()),
                    second: mono_string(vars, e),
                })
            }
            _ => {}
        }
    }
    Form::from_terms(vars, degree.unwrap_or(0), poly)
}

/// Parses a univariate polynomial in `var`.
pub fn parse_upoly(text: &str, var: &str) -> Result<UPoly<Rat>> {
    let poly = parse_poly(text, &[var.to_string()])?;
    let deg = poly.keys().map(|e| e[0] as usize).max().unwrap_or(0);
    let mut c = vec![Rat::zero(); deg + 1];
    for (e, v) in poly {
        c[e[0] as usize] = v;
    }
    Ok(UPoly::new(c))
}
