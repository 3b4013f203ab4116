use crate::error::{Error, Result};
use crate::monoid::ExtRat;

use super::formula::{ClassicalFormula, Formula};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    LParen,
    RParen,
    Or,
    And,
    Not,
    Next,
    Always,
    Eventually,
    Until,
    Weak,
    True,
    False,
    Num(String),
    Ident(String),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '|' | '∨' => Some(Tok::Or),
            '&' | '∧' => Some(Tok::And),
            '!' | '¬' | '~' => Some(Tok::Not),
            '○' => Some(Tok::Next),
            '□' => Some(Tok::Always),
            '◇' => Some(Tok::Eventually),
            'Ũ' => Some(Tok::Weak),
            '∞' => Some(Tok::Num("inf".into())),
            _ => None,
        };
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if let Some(t) = single {
            // `||` and `&&` read as their single-character forms.
            if (c == '|' || c == '&') && chars.get(i + 1) == Some(&c) {
                i += 1;
            }
            out.push((start, t));
            i += 1;
            continue;
        }
        let starts_number = c.is_ascii_digit()
            || (c == '-' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit() || *d == 'i' || *d == '∞'));
        if starts_number {
            let mut s = String::new();
            if c == '-' {
                s.push('-');
                i += 1;
            }
            if chars.get(i) == Some(&'∞') {
                s.push_str("inf");
                i += 1;
            } else if chars[i..].starts_with(&['i', 'n', 'f']) {
                s.push_str("inf");
                i += 3;
            } else {
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                    s.push(chars[i]);
                    i += 1;
                }
            }
            out.push((start, Tok::Num(s)));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                s.push(chars[i]);
                i += 1;
            }
            let t = match s.as_str() {
                "X" => Tok::Next,
                "G" => Tok::Always,
                "F" => Tok::Eventually,
                "U" => Tok::Until,
                "W" => Tok::Weak,
                "true" => Tok::True,
                "false" => Tok::False,
                "inf" => Tok::Num("inf".into()),
                _ => Tok::Ident(s),
            };
            out.push((start, t));
            continue;
        }
        return Err(Error::parse(start, format!("unexpected character `{c}`")));
    }
    Ok(out)
}

/// Untyped parse tree shared by the weighted and classical front ends.
#[derive(Debug)]
enum Raw {
    True,
    False,
    Num(usize, String),
    Atom(String),
    Not(usize, Box<Raw>),
    Un(usize, Tok, Box<Raw>),
    Bin(Tok, Box<Raw>, Box<Raw>),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn or(&mut self) -> Result<Raw> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            lhs = Raw::Bin(Tok::Or, Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Raw> {
        let mut lhs = self.until()?;
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            lhs = Raw::Bin(Tok::And, Box::new(lhs), Box::new(self.until()?));
        }
        Ok(lhs)
    }

    fn until(&mut self) -> Result<Raw> {
        let lhs = self.unary()?;
        match self.peek() {
            Some(Tok::Until) | Some(Tok::Weak) => {
                let op = self.peek().cloned().unwrap();
                self.pos += 1;
                Ok(Raw::Bin(op, Box::new(lhs), Box::new(self.until()?)))
            }
            _ => Ok(lhs),
        }
    }

    fn unary(&mut self) -> Result<Raw> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(Raw::Not(at, Box::new(self.unary()?)))
            }
            Some(t @ (Tok::Next | Tok::Always | Tok::Eventually)) => {
                self.pos += 1;
                Ok(Raw::Un(at, t, Box::new(self.unary()?)))
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Raw> {
        let at = self.here();
        let tok = self.peek().cloned().ok_or_else(|| Error::parse(at, "unexpected end of input"))?;
        self.pos += 1;
        match tok {
            Tok::LParen => {
                let inner = self.or()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(Error::parse(self.here(), "expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::True => Ok(Raw::True),
            Tok::False => Ok(Raw::False),
            Tok::Num(s) => Ok(Raw::Num(at, s)),
            Tok::Ident(s) => Ok(Raw::Atom(s)),
            other => Err(Error::parse(at, format!("unexpected token {other:?}"))),
        }
    }
}

fn parse_raw(text: &str) -> Result<Raw> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.chars().count() };
    let r = p.or()?;
    if p.pos != p.toks.len() {
        return Err(Error::parse(p.here(), "trailing input"));
    }
    Ok(r)
}

fn weighted(r: Raw) -> Result<Formula> {
    let b = |r: Box<Raw>| weighted(*r).map(Box::new);
    Ok(match r {
        Raw::True => Formula::tt(),
        Raw::False => Formula::zero(),
        // A bare `0` is the zero element; write `0/1` for the rational zero.
        Raw::Num(_, s) if s == "0" => Formula::zero(),
        Raw::Num(at, s) => Formula::Const(s.parse::<ExtRat>().map_err(|e| Error::parse(at, e.to_string()))?),
        Raw::Atom(a) => Formula::Atom(a),
        Raw::Not(at, inner) => match *inner {
            Raw::Atom(a) => Formula::NegAtom(a),
            Raw::True => Formula::zero(),
            Raw::False => Formula::tt(),
            Raw::Num(_, s) if s == "0" => Formula::tt(),
            _ => return Err(Error::parse(at, "negation is only allowed on atomic propositions")),
        },
        Raw::Un(_, Tok::Next, a) => Formula::Next(b(a)?),
        Raw::Un(_, Tok::Always, a) => Formula::Always(b(a)?),
        Raw::Un(at, _, _) => return Err(Error::parse(at, "`F` is not part of the weighted grammar")),
        Raw::Bin(Tok::Or, x, y) => Formula::Or(b(x)?, b(y)?),
        Raw::Bin(Tok::And, x, y) => Formula::And(b(x)?, b(y)?),
        Raw::Bin(Tok::Until, x, y) => Formula::Until(b(x)?, b(y)?),
        Raw::Bin(_, x, y) => Formula::WeakUntil(b(x)?, b(y)?),
    })
}

fn classical(r: Raw) -> Result<ClassicalFormula> {
    use ClassicalFormula as C;
    let b = |r: Box<Raw>| classical(*r).map(Box::new);
    Ok(match r {
        Raw::True => C::True,
        Raw::False => C::False,
        Raw::Num(at, _) => return Err(Error::parse(at, "classical formulas have no weights")),
        Raw::Atom(a) => C::Atom(a),
        Raw::Not(_, a) => C::Not(b(a)?),
        Raw::Un(_, Tok::Next, a) => C::Next(b(a)?),
        Raw::Un(_, Tok::Always, a) => C::Always(b(a)?),
        Raw::Un(_, _, a) => C::Eventually(b(a)?),
        Raw::Bin(Tok::Or, x, y) => C::Or(b(x)?, b(y)?),
        Raw::Bin(Tok::And, x, y) => C::And(b(x)?, b(y)?),
        Raw::Bin(Tok::Until, x, y) => C::Until(b(x)?, b(y)?),
        Raw::Bin(_, x, y) => C::WeakUntil(b(x)?, b(y)?),
    })
}

/// Parses a weighted formula. Constants are extended rationals: `true` is
/// the top element, `0` and `false` the bottom element.
pub fn parse_formula(text: &str) -> Result<Formula> {
    weighted(parse_raw(text)?)
}

/// Parses a classical LTL formula (same syntax, plus `F` and negation of
/// arbitrary subformulas, no weights).
pub fn parse_classical(text: &str) -> Result<ClassicalFormula> {
    classical(parse_raw(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_associativity() {
        let f = parse_formula("a | b & c U d U e").unwrap();
        let expect = Formula::or(
            Formula::atom("a"),
            Formula::and(
                Formula::atom("b"),
                Formula::until(Formula::atom("c"), Formula::until(Formula::atom("d"), Formula::atom("e"))),
            ),
        );
        assert_eq!(f, expect);
    }

    #[test]
    fn constants() {
        assert_eq!(parse_formula("true").unwrap(), Formula::Const(ExtRat::PosInf));
        assert_eq!(parse_formula("0").unwrap(), Formula::Const(ExtRat::NegInf));
        assert_eq!(parse_formula("0/1").unwrap(), Formula::Const(ExtRat::int(0)));
        assert_eq!(parse_formula("7/2").unwrap(), Formula::Const(ExtRat::frac(7, 2)));
        assert_eq!(parse_formula("-inf").unwrap(), Formula::Const(ExtRat::NegInf));
        assert_eq!(parse_formula("-3").unwrap(), Formula::Const(ExtRat::int(-3)));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_formula("a & (b | ") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 9),
            other => panic!("{other:?}"),
        }
        match parse_formula("!(a & b)") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 0),
            other => panic!("{other:?}"),
        }
        assert!(parse_formula("a $ b").is_err());
        assert!(parse_formula("1/0").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["G((a & 2) | (b & 3))", "(3 & b) W (3 & a)", "X !a U 0", "0/1 | -7/2", "true U (c & inf)"] {
            let f = parse_formula(s).unwrap();
            assert_eq!(parse_formula(&f.to_string()).unwrap(), f, "{s}");
        }
    }

    #[test]
    fn classical_syntax() {
        let f = parse_classical("!(a U b) & F G c").unwrap();
        assert_eq!(parse_classical(&f.to_string()).unwrap(), f);
        assert!(parse_classical("a & 2").is_err());
    }
}
