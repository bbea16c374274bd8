//! Text format for ring elements and its strict parser.
//!
//! Grammar (productions are named in diagnostics):
//!
//! ```text
//! element  := ['-'] term (('+' | '-') term)*
//! term     := coeff ['*' factors] | factors
//! factors  := factor ('*' factor)*
//! factor   := var ['^' exponent]
//! var      := ('t' | 'u') index
//! coeff    := integer ['/' integer]
//! ```
//!
//! `^-1` (and any negative exponent) is allowed only on t-variables. The
//! printer emits leading terms first and round-trips through the parser
//! bit-exactly.

use std::fmt;

use num::{One, Signed, Zero};
use thiserror::Error;

use crate::numeric::{format_rat, Int, Rat};

use super::{Monomial, RingElement};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error in `{production}` at position {position}: {message}")]
pub struct ParseError {
    pub production: &'static str,
    pub position: usize,
    pub message: String,
}

fn err(production: &'static str, position: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        production,
        position,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Number(Int),
    Var(char, usize),
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut out = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Token::Caret));
                i += 1;
            }
            '/' => {
                out.push((i, Token::Slash));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: Int = input[start..i].parse().expect("digits parse");
                out.push((start, Token::Number(n)));
            }
            't' | 'u' => {
                let start = i;
                i += 1;
                let idx_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if idx_start == i {
                    return Err(err("var", start, format!("`{c}` must be followed by an index")));
                }
                let idx: usize = input[idx_start..i]
                    .parse()
                    .map_err(|_| err("var", idx_start, "index out of range"))?;
                out.push((start, Token::Var(c, idx)));
            }
            other => return Err(err("element", i, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    pos: usize,
    k: usize,
    l: usize,
    input_len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.input_len)
    }

    fn bump(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t);
        self.pos += 1;
        t
    }

    /// coeff := integer ['/' integer]
    fn coeff(&mut self) -> Result<Rat, ParseError> {
        let pos = self.position();
        let Some(Token::Number(n)) = self.bump().cloned() else {
            return Err(err("coeff", pos, "expected a number"));
        };
        if matches!(self.peek(), Some(Token::Slash)) {
            self.bump();
            let pos = self.position();
            let Some(Token::Number(d)) = self.bump().cloned() else {
                return Err(err("coeff", pos, "expected a denominator after `/`"));
            };
            if d.is_zero() {
                return Err(err("coeff", pos, "zero denominator"));
            }
            Ok(Rat::new(n, d))
        } else {
            Ok(Rat::from_integer(n))
        }
    }

    /// exponent := ['-'] integer
    fn exponent(&mut self) -> Result<i64, ParseError> {
        let negative = if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            true
        } else {
            false
        };
        let pos = self.position();
        let Some(Token::Number(n)) = self.bump().cloned() else {
            return Err(err("exponent", pos, "expected an integer exponent"));
        };
        let n = i64::try_from(&n).map_err(|_| err("exponent", pos, "exponent too large"))?;
        Ok(if negative { -n } else { n })
    }

    /// factor := var ['^' exponent]
    fn factor(&mut self, mono: &mut Monomial) -> Result<(), ParseError> {
        let pos = self.position();
        let Some(Token::Var(kind, idx)) = self.bump().cloned() else {
            return Err(err("factor", pos, "expected a variable"));
        };
        let exp = if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            self.exponent()?
        } else {
            1
        };
        match kind {
            't' => {
                if idx == 0 || idx > self.k {
                    return Err(err(
                        "var",
                        pos,
                        format!("t{idx} is out of range for k={}", self.k),
                    ));
                }
                mono.t_exps[idx - 1] += exp;
            }
            'u' => {
                if idx == 0 || idx > self.l {
                    return Err(err(
                        "var",
                        pos,
                        format!("u{idx} is out of range for l={}", self.l),
                    ));
                }
                if exp < 0 {
                    return Err(err(
                        "factor",
                        pos,
                        "negative exponents are allowed only on t-variables",
                    ));
                }
                mono.u_exps[idx - 1] += exp as u64;
            }
            _ => unreachable!(),
        }
        Ok(())
    }

    /// term := coeff ['*' factors] | factors
    fn term(&mut self) -> Result<(Monomial, Rat), ParseError> {
        let pos = self.position();
        let mut mono = Monomial::unit(self.k, self.l);
        match self.peek() {
            Some(Token::Number(_)) => {
                let c = self.coeff()?;
                if matches!(self.peek(), Some(Token::Star)) {
                    self.bump();
                    self.factors(&mut mono)?;
                }
                Ok((mono, c))
            }
            Some(Token::Var(..)) => {
                self.factors(&mut mono)?;
                Ok((mono, Rat::one()))
            }
            _ => Err(err("term", pos, "expected a coefficient or a variable")),
        }
    }

    /// factors := factor ('*' factor)*
    fn factors(&mut self, mono: &mut Monomial) -> Result<(), ParseError> {
        self.factor(mono)?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.bump();
            self.factor(mono)?;
        }
        Ok(())
    }

    /// element := ['-'] term (('+' | '-') term)*
    fn element(&mut self) -> Result<RingElement, ParseError> {
        let mut out = RingElement::zero(self.k, self.l);
        let mut negate = if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            true
        } else {
            false
        };
        loop {
            let (mono, coeff) = self.term()?;
            let coeff = if negate { -coeff } else { coeff };
            out.add_term(mono, &coeff);
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    negate = false;
                }
                Some(Token::Minus) => {
                    self.bump();
                    negate = true;
                }
                None => return Ok(out),
                Some(_) => {
                    return Err(err(
                        "element",
                        self.position(),
                        "expected `+`, `-` or end of input",
                    ))
                }
            }
        }
    }
}

impl RingElement {
    /// Parses the text format over `R_{k,l}`.
    pub fn parse(k: usize, l: usize, input: &str) -> Result<RingElement, ParseError> {
        let tokens = tokenize(input)?;
        if tokens.is_empty() {
            return Err(err("element", 0, "empty input"));
        }
        let mut parser = Parser {
            tokens: &tokens,
            pos: 0,
            k,
            l,
            input_len: input.len(),
        };
        parser.element()
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Leading (largest) monomials first.
        for (m, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let (sign, magnitude) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            let body = if m.is_unit() {
                format_rat(&magnitude)
            } else if magnitude.is_one() {
                format!("{m}")
            } else {
                format!("{} * {m}", format_rat(&magnitude))
            };
            if first {
                if sign == "-" {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
                first = false;
            } else {
                write!(f, " {sign} {body}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{frac, rat};
    use proptest::prelude::*;

    #[test]
    fn parses_spec_shapes() {
        let x = RingElement::parse(1, 1, "t1*u1").unwrap();
        assert_eq!(x.num_terms(), 1);
        assert_eq!(x.coeff(&Monomial::new(vec![1], vec![1])), rat(1));

        let y = RingElement::parse(2, 1, "3/2 * t1^2*t2^-1*u1^3 - 4").unwrap();
        assert_eq!(y.coeff(&Monomial::new(vec![2, -1], vec![3])), frac(3, 2));
        assert_eq!(y.coeff(&Monomial::unit(2, 1)), rat(-4));

        assert_eq!(RingElement::parse(1, 0, "0").unwrap(), RingElement::zero(1, 0));
    }

    #[test]
    fn rejects_negative_u_exponents() {
        let e = RingElement::parse(1, 1, "u1^-1").unwrap_err();
        assert_eq!(e.production, "factor");
    }

    #[test]
    fn rejects_out_of_range_variables() {
        let e = RingElement::parse(1, 1, "t2").unwrap_err();
        assert_eq!(e.production, "var");
        assert!(RingElement::parse(0, 1, "t1").is_err());
    }

    #[test]
    fn display_leading_terms_first() {
        let x = RingElement::parse(1, 1, "1 - u1 + t1*u1").unwrap();
        assert_eq!(format!("{x}"), "t1*u1 - u1 + 1");
    }

    fn arb_element() -> impl Strategy<Value = RingElement> {
        proptest::collection::vec(
            (
                proptest::collection::vec(-3i64..=3, 2),
                proptest::collection::vec(0u64..=3, 1),
                -6i64..=6,
                1i64..=4,
            ),
            0..5,
        )
        .prop_map(|terms| {
            let mut out = RingElement::zero(2, 1);
            for (t, u, n, d) in terms {
                out.add_term(Monomial::new(t, u), &frac(n, d));
            }
            out
        })
    }

    proptest! {
        #[test]
        fn printer_round_trips(x in arb_element()) {
            let printed = format!("{x}");
            let reparsed = RingElement::parse(2, 1, &printed).unwrap();
            prop_assert_eq!(&reparsed, &x);
            prop_assert_eq!(format!("{reparsed}"), printed);
        }
    }
}
