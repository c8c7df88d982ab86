//! Polynomial expressions and group-algebra elements on the command line.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := "-" factor | atom ("^" INT)?
//! atom   := IDENT | INT ("/" INT)? | "(" expr ")"
//! ```
//!
//! Exponents are integers `≥ 1`; the unit is written `1`. Characters of the group
//! algebra are written `chi(1,0)` or `chi(1;0)`, combined with rational
//! coefficients, `*`, `+` and `-`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::abelian_group::AbelianGroup;
use crate::error::{Error, Result};
use crate::graded_ring::{GradedRing, Monomial, Polynomial};
use crate::group_algebra::GroupAlgebraElement;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn syntax(message: impl Into<String>, column: usize) -> Error {
    Error::Syntax {
        message: message.into(),
        line: 1,
        column,
    }
}

impl Lexer {
    fn new(text: &str) -> Result<Lexer> {
        let chars: Vec<char> = text.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                toks.push((Tok::Int(digits.parse().expect("ascii digits")), col));
            } else if "+-*/^(),;".contains(c) {
                toks.push((Tok::Sym(c), col));
                i += 1;
            } else {
                return Err(syntax(format!("unexpected character `{c}`"), col));
            }
        }
        toks.push((Tok::End, chars.len() + 1));
        Ok(Lexer { toks, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn next(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(syntax(format!("expected `{c}`, found {}", describe(self.peek())), self.column()))
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            Tok::End => Ok(()),
            t => Err(syntax(format!("unexpected {}", describe(t)), self.column())),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(n) => format!("`{n}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of input".to_string(),
    }
}

struct ExprParser<'a> {
    ring: &'a GradedRing,
    lex: Lexer,
}

impl ExprParser<'_> {
    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.lex.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.lex.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.lex.eat('*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if self.lex.eat('-') {
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if !self.lex.eat('^') {
            return Ok(base);
        }
        let col = self.lex.column();
        match self.lex.next().0 {
            Tok::Int(n) => {
                if n.is_zero() {
                    return Err(syntax("exponent must be at least 1 (write the unit as `1`)", col));
                }
                let k = n
                    .to_u32()
                    .ok_or_else(|| syntax(format!("exponent {n} is too large"), col))?;
                Ok(base.pow(k))
            }
            t => Err(syntax(format!("expected an exponent, found {}", describe(&t)), col)),
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let n = self.ring.nvars();
        let (tok, col) = self.lex.next();
        match tok {
            Tok::Ident(name) => match self.ring.var_index(&name) {
                Some(i) => Ok(Polynomial::from_monomial(Monomial::var(n, i))),
                None => Err(syntax(format!("unknown variable `{name}`"), col)),
            },
            Tok::Int(num) => {
                let value = if self.lex.eat('/') {
                    let dcol = self.lex.column();
                    match self.lex.next().0 {
                        Tok::Int(d) if !d.is_zero() => BigRational::new(num, d),
                        Tok::Int(_) => return Err(syntax("division by zero", dcol)),
                        t => {
                            return Err(syntax(
                                format!("expected a denominator, found {}", describe(&t)),
                                dcol,
                            ))
                        }
                    }
                } else {
                    BigRational::from_integer(num)
                };
                Ok(Polynomial::constant(n, value))
            }
            Tok::Sym('(') => {
                let inner = self.expr()?;
                self.lex.expect(')')?;
                Ok(inner)
            }
            t => Err(syntax(format!("expected a term, found {}", describe(&t)), col)),
        }
    }
}

pub fn parse_expression(ring: &GradedRing, text: &str) -> Result<Polynomial> {
    let mut p = ExprParser {
        ring,
        lex: Lexer::new(text)?,
    };
    let poly = p.expr()?;
    p.lex.finish()?;
    Ok(poly)
}

/// Parses an expression that must be a single monomial with coefficient 1.
pub fn parse_monomial(ring: &GradedRing, text: &str) -> Result<Monomial> {
    let p = parse_expression(ring, text)?;
    match p.as_monomial() {
        Some(m) => Ok(m.clone()),
        None => Err(Error::InvalidInput(format!(
            "`{text}` is not a monomial (got {})",
            ring.render_polynomial(&p)
        ))),
    }
}

fn signed_int(lex: &mut Lexer) -> Result<BigInt> {
    let negative = lex.eat('-');
    let col = lex.column();
    match lex.next().0 {
        Tok::Int(n) => Ok(if negative { -n } else { n }),
        t => Err(syntax(format!("expected an integer, found {}", describe(&t)), col)),
    }
}

/// Parses `chi(...)` terms with rational coefficients into `Q[D]`.
pub fn parse_group_algebra(group: &AbelianGroup, text: &str) -> Result<GroupAlgebraElement> {
    let mut lex = Lexer::new(text)?;
    let mut terms = Vec::new();
    let mut sign = BigRational::one();
    if lex.eat('-') {
        sign = -sign;
    }
    loop {
        let mut coef = sign.clone();
        if let Tok::Int(_) = lex.peek() {
            let num = signed_int(&mut lex)?;
            let value = if lex.eat('/') {
                let d = signed_int(&mut lex)?;
                if d.is_zero() {
                    return Err(syntax("division by zero", lex.column()));
                }
                BigRational::new(num, d)
            } else {
                BigRational::from_integer(num)
            };
            coef *= value;
            lex.expect('*')?;
        }
        let (tok, col) = lex.next();
        if tok != Tok::Ident("chi".into()) {
            return Err(syntax(format!("expected `chi`, found {}", describe(&tok)), col));
        }
        lex.expect('(')?;
        let start = lex.column();
        let mut coords = Vec::new();
        if !lex.eat(')') {
            loop {
                coords.push(signed_int(&mut lex)?);
                if lex.eat(',') || lex.eat(';') {
                    continue;
                }
                lex.expect(')')?;
                break;
            }
        }
        let d = group
            .element_from_coords(&coords)
            .map_err(|e| syntax(e.to_string(), start))?;
        terms.push((d, coef));
        if lex.eat('+') {
            sign = BigRational::one();
        } else if lex.eat('-') {
            sign = -BigRational::one();
        } else {
            lex.finish()?;
            break;
        }
    }
    GroupAlgebraElement::from_terms(group, terms)
}
