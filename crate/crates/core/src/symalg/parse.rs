//! Plain-text presentations.
//!
//! ```text
//! # comment
//! presentation <name>
//! generator <name> weight <int>
//! adjoint <name> = <coef> <name>
//! commute <name> <name>
//! rule <word> -> <polynomial>
//! ```
//!
//! Polynomials are sums of terms `coef*word`, joined by `+` and `-`. Factors
//! inside a term are separated by `*` or whitespace and may be integers,
//! fractions `3/2`, the parameters `q`, `p`, `s`, generator names, or a
//! parenthesised polynomial. Any factor takes an exponent `^k`; negative `k`
//! is allowed for invertible monomials such as `q^-1`. Generator names are
//! matched longest first, so `z*z` reads as `z*` followed by `z`, while
//! `z * z` is `z` times `z`.
//!
//! Generators without an `adjoint` line follow the naming convention
//! `x* = x*`: a name ending in `*` is the adjoint of the name without it.
//! `commute x y` lets rule left sides match across `x`/`y` letters.

use super::coef::{CoefPoly, Param};
use super::ncpoly::NCPoly;
use super::presentation::{Presentation, PresentationBuilder};
use crate::error::{Error, Result};

/// Parses a presentation from text.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut builder = PresentationBuilder::new("custom");
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "presentation" => {
                builder.set_name(rest);
            }
            "generator" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                match parts.as_slice() {
                    [name, "weight", w] => {
                        let weight = w
                            .parse::<i64>()
                            .map_err(|e| err(format!("bad weight `{w}`: {e}")))?;
                        if builder.has_generator(name) {
                            return Err(err(format!("generator `{name}` declared twice")));
                        }
                        builder.generator(name, weight);
                    }
                    [name] => {
                        builder.generator(name, 0);
                    }
                    _ => return Err(err("expected `generator <name> weight <int>`".into())),
                }
            }
            "adjoint" => {
                let (name, value) = rest
                    .split_once('=')
                    .ok_or_else(|| err("expected `adjoint <name> = <coef> <name>`".into()))?;
                let name = name.trim();
                let poly = parse_polynomial_with(value, &builder.generator_names()).map_err(&err)?;
                let mut terms = poly.terms();
                let (w, c) = match (terms.next(), terms.next()) {
                    (Some(t), None) if t.0.len() == 1 => t,
                    _ => return Err(err("adjoint must be a multiple of one generator".into())),
                };
                let target = builder.generator_names()[w.letters()[0].0 as usize].clone();
                builder.adjoint(name, c.clone(), &target);
            }
            "commute" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                match parts.as_slice() {
                    [x, y] => {
                        builder.commute(x, y);
                    }
                    _ => return Err(err("expected `commute <name> <name>`".into())),
                }
            }
            "rule" => {
                let (lhs, rhs) = rest
                    .split_once("->")
                    .ok_or_else(|| err("expected `rule <word> -> <polynomial>`".into()))?;
                let names = builder.generator_names();
                let lhs_poly = parse_polynomial_with(lhs, &names).map_err(&err)?;
                let mut terms = lhs_poly.terms();
                let word = match (terms.next(), terms.next()) {
                    (Some((w, c)), None) if c.is_one() && !w.is_empty() => w.clone(),
                    _ => return Err(err("left side of a rule must be a single word".into())),
                };
                let rhs_poly = parse_polynomial_with(rhs, &names).map_err(&err)?;
                let lhs_names: Vec<&str> = word
                    .letters()
                    .iter()
                    .map(|l| names[l.0 as usize].as_str())
                    .collect();
                builder.rule(&lhs_names, rhs_poly);
            }
            other => return Err(err(format!("unknown keyword `{other}`"))),
        }
    }
    builder.build()
}

/// Parses a polynomial over the generators of `p`.
pub fn parse_polynomial(text: &str, p: &Presentation) -> Result<NCPoly> {
    let names: Vec<String> = p.generators().iter().map(|g| g.name.clone()).collect();
    parse_polynomial_with(text, &names).map_err(|msg| Error::Parse { line: 1, msg })
}

/// Serialises a presentation in the text format; `parse_presentation` reads it back.
pub fn to_text(p: &Presentation) -> String {
    let mut out = format!("presentation {}\n", p.name());
    for g in p.generators() {
        out.push_str(&format!("generator {} weight {}\n", g.name, g.weight));
    }
    for g in p.generators() {
        let (c, l) = &g.adjoint;
        let coef = if c.num_terms() == 1 { c.to_string() } else { format!("({c})") };
        out.push_str(&format!("adjoint {} = {} {}\n", g.name, coef, p.generator_name(*l)));
    }
    let n = p.num_generators();
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (super::ncpoly::Letter(i as u8), super::ncpoly::Letter(j as u8));
            if p.commutes(x, y) {
                out.push_str(&format!("commute {} {}\n", p.generator_name(x), p.generator_name(y)));
            }
        }
    }
    for r in p.rules() {
        out.push_str(&format!("rule {} -> {}\n", p.format_word(&r.lhs), p.format(&r.rhs)));
    }
    out
}

fn parse_polynomial_with(text: &str, names: &[String]) -> std::result::Result<NCPoly, String> {
    let mut parser = Parser { src: text.as_bytes(), text, pos: 0, names };
    let poly = parser.poly()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(format!("unexpected `{}`", &text[parser.pos..]));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn poly(&mut self) -> std::result::Result<NCPoly, String> {
        self.skip_ws();
        let mut negative = match self.peek() {
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
        let mut acc = NCPoly::zero();
        loop {
            let t = self.term()?;
            if negative {
                acc -= &t;
            } else {
                acc += &t;
            }
            self.skip_ws();
            match self.peek() {
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> std::result::Result<NCPoly, String> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(b'+') | Some(b'-') | Some(b')') => return Ok(acc),
                Some(b'*') if self.generator_at(self.pos).is_none() => {
                    self.pos += 1;
                }
                _ => {}
            }
            let f = self.factor()?;
            acc = &acc * &f;
        }
    }

    fn factor(&mut self) -> std::result::Result<NCPoly, String> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let k = self.integer()?;
        if k >= 0 {
            return Ok(base.pow(k as u32));
        }
        let mut terms = base.terms();
        let inv = match (terms.next(), terms.next()) {
            (Some((w, c)), None) if w.is_empty() => c.inverse_monomial(),
            _ => None,
        }
        .ok_or_else(|| "negative exponent on a non-invertible factor".to_string())?;
        Ok(NCPoly::constant(inv).pow((-k) as u32))
    }

    fn integer(&mut self) -> std::result::Result<i64, String> {
        let start = self.pos;
        if matches!(self.peek(), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.text[start..self.pos]
            .parse::<i64>()
            .map_err(|_| format!("expected an integer at `{}`", &self.text[start..]))
    }

    fn generator_at(&self, pos: usize) -> Option<usize> {
        let rest = &self.text[pos..];
        self.names
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_str()))
            .max_by_key(|(_, n)| n.len())
            .map(|(i, _)| i)
    }

    fn atom(&mut self) -> std::result::Result<NCPoly, String> {
        self.skip_ws();
        let Some(c) = self.peek() else {
            return Err("unexpected end of input".into());
        };
        if c == b'(' {
            self.pos += 1;
            let inner = self.poly()?;
            self.skip_ws();
            if self.peek() != Some(b')') {
                return Err("missing `)`".into());
            }
            self.pos += 1;
            return Ok(inner);
        }
        if c.is_ascii_digit() {
            let num = self.integer()?;
            if self.peek() == Some(b'/') {
                self.pos += 1;
                let den = self.integer()?;
                if den == 0 {
                    return Err("zero denominator".into());
                }
                return Ok(NCPoly::constant(CoefPoly::ratio(num, den)));
            }
            return Ok(NCPoly::constant(CoefPoly::integer(num)));
        }
        if let Some(i) = self.generator_at(self.pos) {
            self.pos += self.names[i].len();
            return Ok(NCPoly::letter(super::ncpoly::Letter(i as u8)));
        }
        let param = match c {
            b'q' => Some(Param::Q),
            b'p' => Some(Param::P),
            b's' => Some(Param::S),
            _ => None,
        };
        let boundary = self
            .src
            .get(self.pos + 1)
            .is_none_or(|n| !(n.is_ascii_alphanumeric() || *n == b'_'));
        match param {
            Some(param) if boundary => {
                self.pos += 1;
                Ok(NCPoly::constant(CoefPoly::param_pow(param, 1)))
            }
            _ => Err(format!("unknown symbol at `{}`", &self.text[self.pos..])),
        }
    }
}
