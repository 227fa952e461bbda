//! Recursive-descent parser for the ASCII formula syntax.
//!
//! Precedence, tightest first: `^`, `!`, `n*`, `&`, `(+)`, `/\`, `\/`, `->`,
//! `<->`. `->` associates to the right, the other binary operators to the left.

use crate::error::{Error, Result};
use crate::formula::Formula;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Var(u32),
    Num(u32),
    Bot,
    Top,
    Imp,
    Iff,
    Vee,
    Wedge,
    Oplus,
    Amp,
    Bang,
    Star,
    Caret,
    LParen,
    RParen,
    Eof,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Var(i) => format!("variable X{i}"),
        Tok::Num(n) => format!("number {n}"),
        Tok::Bot => "`bot`".into(),
        Tok::Top => "`top`".into(),
        Tok::Imp => "`->`".into(),
        Tok::Iff => "`<->`".into(),
        Tok::Vee => "`\\/`".into(),
        Tok::Wedge => "`/\\`".into(),
        Tok::Oplus => "`(+)`".into(),
        Tok::Amp => "`&`".into(),
        Tok::Bang => "`!`".into(),
        Tok::Star => "`*`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Eof => "end of input".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let syntax = |pos: usize, msg: String| Error::Syntax { pos, msg };
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let rest = &text[i..];
        let start = i;
        let fixed: &[(&str, Tok)] = &[
            ("<->", Tok::Iff),
            ("(+)", Tok::Oplus),
            ("->", Tok::Imp),
            ("\\/", Tok::Vee),
            ("/\\", Tok::Wedge),
            ("&", Tok::Amp),
            ("!", Tok::Bang),
            ("*", Tok::Star),
            ("^", Tok::Caret),
            ("(", Tok::LParen),
            (")", Tok::RParen),
        ];
        if let Some((s, t)) = fixed.iter().find(|(s, _)| rest.starts_with(s)) {
            out.push((t.clone(), start));
            i += s.len();
            continue;
        }
        if c.is_ascii_digit() {
            let end = rest.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(rest.len());
            let n: u32 = rest[..end]
                .parse()
                .map_err(|_| syntax(start, "number too large".into()))?;
            out.push((Tok::Num(n), start));
            i += end;
            continue;
        }
        if c == b'X' {
            let digits = &rest[1..];
            let end = digits.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(digits.len());
            if end == 0 {
                return Err(syntax(start, "expected digits after `X`".into()));
            }
            let n: u32 = digits[..end]
                .parse()
                .map_err(|_| syntax(start, "variable index too large".into()))?;
            if n == 0 {
                return Err(Error::ZeroVariable { pos: start });
            }
            out.push((Tok::Var(n), start));
            i += 1 + end;
            continue;
        }
        if c.is_ascii_alphabetic() {
            let end = rest.find(|ch: char| !ch.is_ascii_alphanumeric()).unwrap_or(rest.len());
            match &rest[..end] {
                "bot" => out.push((Tok::Bot, start)),
                "top" => out.push((Tok::Top, start)),
                w => return Err(syntax(start, format!("unknown word `{w}`"))),
            }
            i += end;
            continue;
        }
        let ch = rest.chars().next().unwrap_or('?');
        return Err(syntax(start, format!("unexpected character `{ch}`")));
    }
    out.push((Tok::Eof, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn unexpected(&self, wanted: &str) -> Error {
        Error::Syntax {
            pos: self.pos(),
            msg: format!("expected {wanted}, found {}", describe(self.peek())),
        }
    }

    fn iff(&mut self) -> Result<Formula> {
        let mut lhs = self.imp()?;
        while self.eat(&Tok::Iff) {
            let rhs = self.imp()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Formula> {
        let lhs = self.left_assoc(Tok::Vee, Self::wedge, Formula::vee)?;
        if self.eat(&Tok::Imp) {
            let rhs = self.imp()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn wedge(&mut self) -> Result<Formula> {
        self.left_assoc(Tok::Wedge, Self::oplus, Formula::wedge)
    }

    fn oplus(&mut self) -> Result<Formula> {
        self.left_assoc(Tok::Oplus, Self::conj, Formula::oplus)
    }

    fn conj(&mut self) -> Result<Formula> {
        self.left_assoc(Tok::Amp, Self::mult, Formula::conj)
    }

    fn left_assoc(
        &mut self,
        op: Tok,
        next: fn(&mut Self) -> Result<Formula>,
        build: fn(Formula, Formula) -> Formula,
    ) -> Result<Formula> {
        let mut lhs = next(self)?;
        while self.eat(&op) {
            let rhs = next(self)?;
            lhs = build(lhs, rhs);
        }
        Ok(lhs)
    }

    fn mult(&mut self) -> Result<Formula> {
        if let Tok::Num(n) = *self.peek() {
            let pos = self.pos();
            self.bump();
            if !self.eat(&Tok::Star) {
                return Err(self.unexpected("`*` after a multiple count"));
            }
            if n == 0 {
                return Err(Error::ZeroCount { pos });
            }
            let body = self.mult()?;
            return Ok(Formula::multiple(n, body));
        }
        self.neg()
    }

    fn neg(&mut self) -> Result<Formula> {
        if self.eat(&Tok::Bang) {
            return Ok(Formula::neg(self.neg()?));
        }
        self.pow()
    }

    fn pow(&mut self) -> Result<Formula> {
        let mut base = self.atom()?;
        while self.eat(&Tok::Caret) {
            let pos = self.pos();
            match self.bump() {
                Tok::Num(0) => return Err(Error::ZeroCount { pos }),
                Tok::Num(n) => base = Formula::power(n, base),
                other => {
                    return Err(Error::Syntax {
                        pos,
                        msg: format!("expected a power count, found {}", describe(&other)),
                    })
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Formula> {
        match self.peek().clone() {
            Tok::Var(i) => {
                self.bump();
                Ok(Formula::Var(i))
            }
            Tok::Bot => {
                self.bump();
                Ok(Formula::Bot)
            }
            Tok::Top => {
                self.bump();
                Ok(Formula::top())
            }
            Tok::LParen => {
                self.bump();
                let f = self.iff()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.unexpected("`)`"));
                }
                Ok(f)
            }
            _ => Err(self.unexpected("a formula")),
        }
    }
}

/// Parses and desugars a formula. Errors carry the byte offset of the
/// offending token.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let f = p.iff()?;
    if *p.peek() != Tok::Eof {
        return Err(p.unexpected("end of input"));
    }
    Ok(f)
}
