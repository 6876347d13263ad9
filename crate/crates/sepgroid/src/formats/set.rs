use sepgroid_core::lattice::{idem_of, CompactOpen, ExpandStep};
use sepgroid_core::SeparatedGraph;

use super::word::{parse_idempotent, write_word};
use super::{ParseError, SCRIPT_GRAMMAR, SET_GRAMMAR};

fn err(msg: impl Into<String>) -> ParseError {
    ParseError::new(SET_GRAMMAR, msg)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Cyl(String),
    Empty,
    And,
    Minus,
    Plus,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<Tok>, ParseError> {
    let mut out = Vec::new();
    let mut rest = text.trim_start();
    while let Some(c) = rest.chars().next() {
        let (tok, len) = match c {
            '&' => (Tok::And, 1),
            '-' => (Tok::Minus, 1),
            '+' => (Tok::Plus, 1),
            '(' => (Tok::Open, 1),
            ')' => (Tok::Close, 1),
            'Z' => {
                let inner = rest[1..].trim_start();
                let body = inner.strip_prefix('(').ok_or_else(|| err("`Z` must be followed by `(`"))?;
                let end = body.find(')').ok_or_else(|| err("unclosed `Z(`"))?;
                let used = rest.len() - body.len() + end + 1;
                (Tok::Cyl(body[..end].to_string()), used)
            }
            _ if rest.starts_with("empty") => (Tok::Empty, 5),
            _ => return Err(err(format!("unexpected `{c}`"))),
        };
        out.push(tok);
        rest = rest[len..].trim_start();
    }
    Ok(out)
}

struct Parser<'a> {
    g: &'a SeparatedGraph,
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn sum(&mut self) -> Result<CompactOpen, ParseError> {
        let mut acc = self.product()?;
        while let Some(op) = self.peek().cloned() {
            match op {
                Tok::Plus => {
                    self.pos += 1;
                    acc = acc.union(self.g, &self.product()?);
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = acc.subtract(self.g, &self.product()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<CompactOpen, ParseError> {
        let mut acc = self.atom()?;
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            acc = acc.intersect(self.g, &self.atom()?);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<CompactOpen, ParseError> {
        let tok = self.peek().cloned().ok_or_else(|| err("unexpected end of expression"))?;
        self.pos += 1;
        match tok {
            Tok::Cyl(word) => {
                let mu = parse_idempotent(self.g, &word).map_err(|e| err(e.message))?;
                Ok(CompactOpen::cylinder(mu))
            }
            Tok::Empty => Ok(CompactOpen::empty()),
            Tok::Open => {
                let inner = self.sum()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(err("missing `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            other => Err(err(format!("unexpected {other:?}"))),
        }
    }
}

/// Evaluates a compact-open expression; `&` binds tighter than `+` and `-`.
pub fn parse_compact_open(g: &SeparatedGraph, text: &str) -> Result<CompactOpen, ParseError> {
    let mut parser = Parser { g, toks: tokenize(text)?, pos: 0 };
    let out = parser.sum()?;
    if parser.pos != parser.toks.len() {
        return Err(err("trailing input"));
    }
    Ok(out)
}

/// `Z(w1) + Z(w2) + …` over the canonical cylinders, or `empty`.
pub fn write_compact_open(g: &SeparatedGraph, set: &CompactOpen) -> String {
    if set.is_empty() {
        return "empty".into();
    }
    let parts: Vec<String> = set.cylinders().iter().map(|c| format!("Z({})", write_word(g, &idem_of(g, c)))).collect();
    parts.join(" + ")
}

/// `0:1, 2, 1:1`: entry positions with an optional loop index.
pub fn parse_script(text: &str) -> Result<Vec<ExpandStep>, ParseError> {
    let serr = |msg: String| ParseError::new(SCRIPT_GRAMMAR, msg);
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (pos, choice) = match item.split_once(':') {
            Some((p, c)) => (p, Some(c.trim().parse::<u32>().map_err(|_| serr(format!("bad choice in `{item}`")))?)),
            None => (item, None),
        };
        let position = pos.trim().parse().map_err(|_| serr(format!("bad position in `{item}`")))?;
        out.push(ExpandStep { position, choice });
    }
    Ok(out)
}

pub fn write_script(script: &[ExpandStep]) -> String {
    let parts: Vec<String> = script
        .iter()
        .map(|s| match s.choice {
            Some(c) => format!("{}:{c}", s.position),
            None => s.position.to_string(),
        })
        .collect();
    parts.join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn difference_examples() {
        let g3 = fixtures::g3();
        let a = parse_compact_open(&g3, "Z(v:p) - Z(a:p.1 a:p.1*)").unwrap();
        assert_eq!(write_compact_open(&g3, &a), "Z(b:p.1.1 b:p.1.1*)");
        let g2 = fixtures::g2();
        let b = parse_compact_open(&g2, "Z(v:w) - Z(e:f1 e:f1*)").unwrap();
        assert_eq!(write_compact_open(&g2, &b), "Z(e:f2 e:f2*)");
        assert!(parse_compact_open(&g2, "Z(e:f1 e:f1*) - Z(e:f1 e:f1*)").unwrap().is_empty());
    }

    #[test]
    fn precedence_and_parentheses() {
        let g2 = fixtures::g2();
        let a = parse_compact_open(&g2, "Z(v:w) - Z(e:f1 e:f1*) & Z(e:f1 e:f1*)").unwrap();
        let b = parse_compact_open(&g2, "Z(e:f2 e:f2*)").unwrap();
        assert!(a.same_set(&g2, &b));
        let c = parse_compact_open(&g2, "(Z(v:w) - Z(e:f1 e:f1*)) & Z(e:f1 e:f1*)").unwrap();
        assert!(c.is_empty());
    }

    #[test]
    fn round_trip_and_errors() {
        let g3 = fixtures::g3();
        let a = parse_compact_open(&g3, "Z(v:p) - Z(a:p.1 a:p.1 a:p.1* a:p.1*) + Z(e:f1 e:f1*)").unwrap();
        assert_eq!(parse_compact_open(&g3, &write_compact_open(&g3, &a)).unwrap(), a);
        assert_eq!(write_compact_open(&g3, &CompactOpen::empty()), "empty");
        for bad in ["Z(a:p.1)", "Z(v:p", "(Z(v:p)", "Z(v:p) Z(v:p)", "Y(v:p)"] {
            assert!(parse_compact_open(&g3, bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn scripts() {
        let s = parse_script("0:1, 2").unwrap();
        assert_eq!(s, vec![ExpandStep { position: 0, choice: Some(1) }, ExpandStep { position: 2, choice: None }]);
        assert_eq!(parse_script(&write_script(&s)).unwrap(), s);
        assert!(parse_script("x").is_err());
    }
}
