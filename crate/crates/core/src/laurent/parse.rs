//! Text syntax for Laurent polynomials, e.g. `t1^2*t2^-1 - 3/2*t3 + 1`.
//!
//! Variables are `t<k>` or `x<k>` (1-based). Factors may be juxtaposed or
//! joined by `*`; `/` divides by a monomial; `^` takes a signed integer.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::poly::LaurentPoly;
use crate::error::{Error, Result};
use crate::rational::Q;

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

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((pos, t));
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|x| x.1).collect();
            out.push((pos, Tok::Num(text.parse().expect("digits"))));
        } else if c == 't' || c == 'x' {
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|x| x.1).collect();
            let k: usize = text
                .parse()
                .ok()
                .filter(|&k| k >= 1)
                .ok_or_else(|| Error::Parse { pos, msg: "expected a variable such as t1".into() })?;
            out.push((pos, Tok::Var(k - 1)));
        } else {
            return Err(Error::Parse { pos, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    n: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero(self.n);
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.at += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t)? } else { acc.add(&t)? };
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => return Ok(acc),
            }
            self.at += 1;
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    acc = acc.mul(&self.factor()?)?;
                }
                Some(Tok::Slash) => {
                    self.at += 1;
                    let pos = self.pos();
                    let d = self.factor()?;
                    if d.len() != 1 {
                        return Err(Error::Parse { pos, msg: "can only divide by a nonzero monomial".into() });
                    }
                    acc = acc.mul(&d.pow(-1)?)?;
                }
                Some(Tok::Num(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        let base = match self.peek().cloned() {
            Some(Tok::Num(k)) => {
                self.at += 1;
                LaurentPoly::constant(self.n, Q::from_integer(k))
            }
            Some(Tok::Var(i)) => {
                self.at += 1;
                LaurentPoly::var(self.n, i)
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.at += 1;
                e
            }
            _ => return self.err("expected a number, variable or `(`"),
        };
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.at += 1;
        let neg = match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                true
            }
            Some(Tok::Plus) => {
                self.at += 1;
                false
            }
            _ => false,
        };
        let pos = self.pos();
        let Some(Tok::Num(k)) = self.peek().cloned() else {
            return self.err("expected an integer exponent");
        };
        self.at += 1;
        let k = k.to_i64().filter(|k| *k <= 4096).ok_or(Error::Parse { pos, msg: "exponent too large".into() })?;
        let k = if neg { -k } else { k };
        if k < 0 && base.len() != 1 {
            return Err(Error::Parse { pos, msg: "negative power of a non-monomial".into() });
        }
        base.pow(k)
    }
}

/// Parse a polynomial. `nvars` fixes the ring; otherwise the largest variable
/// index present is used.
pub fn parse_laurent(s: &str, nvars: Option<usize>) -> Result<LaurentPoly> {
    let toks = lex(s)?;
    let used = toks.iter().filter_map(|t| if let Tok::Var(i) = t.1 { Some(i + 1) } else { None }).max().unwrap_or(0);
    let n = match nvars {
        Some(n) if n < used => {
            return Err(Error::InvalidArgument(format!("variable t{used} outside a ring with {n} variables")));
        }
        Some(n) => n,
        None => used,
    };
    if toks.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty polynomial".into() });
    }
    let mut p = Parser { toks, at: 0, end: s.len(), n };
    let out = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(out)
}

impl std::str::FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_laurent(s, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qr};

    #[test]
    fn parses_and_prints() {
        let p = parse_laurent("t1+t2+t3-t1*t2-t1*t3-t2*t3", None).unwrap();
        assert_eq!(p.nvars(), 3);
        assert_eq!(p.len(), 6);
        let f = parse_laurent("1 - t2^2", None).unwrap();
        assert_eq!(f.to_string(), "1 - t2^2");
        let g = parse_laurent("(x1 - 1)(1 + x2)", None).unwrap();
        assert_eq!(g, parse_laurent("t1 + t1 t2 - 1 - t2", None).unwrap());
        let h = parse_laurent("3/2 t1^-1 / t2", Some(3)).unwrap();
        assert_eq!(h.nvars(), 3);
        assert_eq!(h.coeff(&[-1, -1, 0]), qr(3, 2));
        assert_eq!(parse_laurent("-(t1)^2", None).unwrap().coeff(&[2]), q(-1));
        let round: LaurentPoly = f.to_string().parse().unwrap();
        assert_eq!(round, f);
    }

    #[test]
    fn reports_positions() {
        match parse_laurent("t1 + $", None) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
        assert!(parse_laurent("(t1+1)^-1", None).is_err());
        assert!(parse_laurent("t1 +", None).is_err());
        assert!(parse_laurent("t0", None).is_err());
        assert!(parse_laurent("t3", Some(2)).is_err());
    }
}
