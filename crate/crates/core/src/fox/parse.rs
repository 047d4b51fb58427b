//! Presentation grammar:
//!
//! ```text
//! pres     := '<' name (',' name)* ['|' [relation (',' relation)*]] '>'
//! relation := word ('=' word)*
//! word     := factor+            (juxtaposition, optional '*')
//! factor   := primary ('^' exp)*
//! exp      := ['-'] int | primary | '{' (['-'] int | word) '}'
//! primary  := name | '1' | '[' word ',' word ']' | '(' word ')'
//! ```
//!
//! `u^w` is `w^-1 u w`; `w1 = w2 = w3` contributes `w1 w2^-1` and `w2 w3^-1`.

use super::word::{CommutatorConvention, FreeWord};
use crate::error::{Error, Result};

/// A finite presentation with named generators; declaration order fixes the
/// column order of every matrix built from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<FreeWord>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<FreeWord>) -> Result<Self> {
        let q = generators.len();
        for r in &relators {
            if let Some(g) = r.max_generator() {
                if g >= q {
                    return Err(Error::InvalidArgument(format!("relator uses generator {} of {q}", g + 1)));
                }
            }
        }
        Ok(Presentation { generators, relators })
    }

    /// Free group on `q` generators named `x1..xq`.
    pub fn free(q: usize) -> Self {
        Presentation { generators: (1..=q).map(|i| format!("x{i}")).collect(), relators: Vec::new() }
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }
}

impl std::fmt::Display for Presentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<{} |", self.generators.join(","))?;
        for (i, r) in self.relators.iter().enumerate() {
            write!(f, "{}{}", if i == 0 { " " } else { ", " }, r.display_with(&self.generators))?;
        }
        write!(f, ">")
    }
}

struct Parser<'a> {
    src: &'a [u8],
    at: usize,
    names: Vec<String>,
    conv: CommutatorConvention,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.at < self.src.len() && self.src[self.at].is_ascii_whitespace() {
            self.at += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.at).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.at, msg: msg.into() })
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.at += 1;
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.at;
        match self.src.get(self.at) {
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => {}
            _ => return None,
        }
        while self.at < self.src.len() && (self.src[self.at].is_ascii_alphanumeric() || self.src[self.at] == b'_') {
            self.at += 1;
        }
        Some(String::from_utf8_lossy(&self.src[start..self.at]).into_owned())
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.at;
        let neg = match self.src.get(self.at) {
            Some(b'-') => {
                self.at += 1;
                true
            }
            Some(b'+') => {
                self.at += 1;
                false
            }
            _ => false,
        };
        self.skip_ws();
        let ds = self.at;
        while self.at < self.src.len() && self.src[self.at].is_ascii_digit() {
            self.at += 1;
        }
        if ds == self.at {
            self.at = start;
            return self.err("expected an integer exponent");
        }
        let k: i64 = std::str::from_utf8(&self.src[ds..self.at])
            .expect("ascii")
            .parse()
            .map_err(|_| Error::Parse { pos: ds, msg: "exponent out of range".into() })?;
        Ok(if neg { -k } else { k })
    }

    fn starts_primary(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == b'_' || c == b'1' || c == b'[' || c == b'(')
    }

    fn word(&mut self) -> Result<FreeWord> {
        if !self.starts_primary() {
            return self.err("expected a word");
        }
        let mut w = FreeWord::identity();
        loop {
            w = w.mul(&self.factor()?);
            if self.peek() == Some(b'*') {
                self.at += 1;
                if !self.starts_primary() {
                    return self.err("expected a factor after `*`");
                }
            } else if !self.starts_primary() {
                return Ok(w);
            }
        }
    }

    fn factor(&mut self) -> Result<FreeWord> {
        let mut base = self.primary()?;
        while self.peek() == Some(b'^') {
            self.at += 1;
            match self.peek() {
                Some(b'{') => {
                    self.at += 1;
                    base = match self.peek() {
                        Some(c) if c == b'-' || c == b'+' || c.is_ascii_digit() => base.pow(self.int()?),
                        _ => base.conjugate_by(&self.word()?),
                    };
                    self.expect(b'}')?;
                }
                Some(c) if c == b'-' || c == b'+' || c.is_ascii_digit() => base = base.pow(self.int()?),
                _ => {
                    let w = self.primary()?;
                    base = base.conjugate_by(&w);
                }
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<FreeWord> {
        match self.peek() {
            Some(b'1') => {
                self.at += 1;
                if self.src.get(self.at).is_some_and(u8::is_ascii_digit) {
                    return self.err("only `1` may appear as a constant");
                }
                Ok(FreeWord::identity())
            }
            Some(b'[') => {
                self.at += 1;
                let u = self.word()?;
                self.expect(b',')?;
                let v = self.word()?;
                self.expect(b']')?;
                Ok(FreeWord::commutator(&u, &v, self.conv))
            }
            Some(b'(') => {
                self.at += 1;
                let w = self.word()?;
                self.expect(b')')?;
                Ok(w)
            }
            _ => {
                let Some(name) = self.ident() else {
                    return self.err("expected a generator, `1`, `[` or `(`");
                };
                match self.names.iter().position(|n| *n == name) {
                    Some(g) => Ok(FreeWord::generator(g)),
                    None => Err(Error::UnknownGenerator(name)),
                }
            }
        }
    }

    fn relation(&mut self, out: &mut Vec<FreeWord>) -> Result<()> {
        let mut prev = self.word()?;
        let mut had_eq = false;
        while self.peek() == Some(b'=') {
            self.at += 1;
            let next = self.word()?;
            out.push(prev.mul(&next.inverse()));
            prev = next;
            had_eq = true;
        }
        if !had_eq {
            out.push(prev);
        }
        Ok(())
    }

    fn presentation(&mut self) -> Result<Presentation> {
        self.expect(b'<')?;
        loop {
            let Some(name) = self.ident() else {
                return self.err("expected a generator name");
            };
            if self.names.contains(&name) {
                return self.err(format!("generator `{name}` declared twice"));
            }
            self.names.push(name);
            if self.peek() == Some(b',') {
                self.at += 1;
            } else {
                break;
            }
        }
        let mut relators = Vec::new();
        if self.peek() == Some(b'|') {
            self.at += 1;
            if self.peek() != Some(b'>') {
                loop {
                    self.relation(&mut relators)?;
                    if self.peek() == Some(b',') {
                        self.at += 1;
                    } else {
                        break;
                    }
                }
            }
        }
        self.expect(b'>')?;
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        let relators = relators.into_iter().filter(|r| !r.is_identity()).collect();
        Presentation::new(std::mem::take(&mut self.names), relators)
    }
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    parse_presentation_with(text, CommutatorConvention::default())
}

pub fn parse_presentation_with(text: &str, conv: CommutatorConvention) -> Result<Presentation> {
    Parser { src: text.as_bytes(), at: 0, names: Vec::new(), conv }.presentation()
}

impl std::str::FromStr for Presentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_presentation(s)
    }
}
