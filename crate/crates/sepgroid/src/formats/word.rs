use sepgroid_core::graph::EdgeKind;
use sepgroid_core::lattice::{self, EPath};
use sepgroid_core::semigroup::{self, to_word};
use sepgroid_core::{Element, SeparatedGraph};

use super::{ParseError, LIST_GRAMMAR, WORD_GRAMMAR};

fn err(msg: impl Into<String>) -> ParseError {
    ParseError::new(WORD_GRAMMAR, msg)
}

fn token(g: &SeparatedGraph, tok: &str) -> Result<Element, ParseError> {
    if tok == "0" {
        return Ok(Element::Zero);
    }
    let (kind, body) = tok.split_once(':').ok_or_else(|| err(format!("`{tok}` has no `x:` prefix")))?;
    let (body, starred) = match body.strip_suffix('*') {
        Some(b) => (b, true),
        None => (body, false),
    };
    let lifted = match kind {
        "v" if !starred => {
            let v = g.vertex_by_name(body).ok_or_else(|| err(format!("unknown vertex `{body}`")))?;
            semigroup::vertex(g, v)
        }
        "e" | "a" | "b" => {
            let e = g
                .edge_ids()
                .find(|e| g.edge(*e).name == body)
                .ok_or_else(|| err(format!("unknown edge `{body}`")))?;
            let ok = matches!(
                (kind, g.edge(e).kind),
                ("a", EdgeKind::Loop { .. })
                    | ("b", EdgeKind::FreeConnector { .. })
                    | ("e", EdgeKind::Internal | EdgeKind::RegularConnector)
            );
            if !ok {
                return Err(err(format!("`{body}` is not a `{kind}:` generator")));
            }
            semigroup::edge(g, e)
        }
        "t" if !starred => {
            let (body, exp) = match body.strip_suffix("^-1") {
                Some(b) => (b, -1),
                None => (body, 1),
            };
            let (v, i) = body.rsplit_once('.').ok_or_else(|| err(format!("`{tok}` is not t:V.I")))?;
            let v = g.vertex_by_name(v).ok_or_else(|| err(format!("unknown vertex `{v}`")))?;
            let i: u32 = i.parse().ok().filter(|i| *i >= 1).ok_or_else(|| err(format!("`{i}` is not an index >= 1")))?;
            semigroup::t_power(g, v, i, exp)
        }
        _ => return Err(err(format!("unknown token `{tok}`"))),
    };
    Ok(if starred { lifted.star() } else { lifted })
}

/// Lifts each generator token and multiplies them out to normal form.
pub fn parse_word(g: &SeparatedGraph, text: &str) -> Result<Element, ParseError> {
    let elems = text.split_whitespace().map(|t| token(g, t)).collect::<Result<Vec<_>, _>>()?;
    semigroup::product(g, &elems).ok_or_else(|| err("empty word"))
}

/// A word whose value is a nonzero idempotent, returned as its E-path.
pub fn parse_idempotent(g: &SeparatedGraph, text: &str) -> Result<EPath, ParseError> {
    let e = parse_word(g, text)?;
    lattice::epath_of(&e).map_err(|_| err(format!("`{text}` is not a nonzero idempotent")))
}

/// `[w1, w2, …]` where every word is a nonzero idempotent.
pub fn parse_idempotent_list(g: &SeparatedGraph, text: &str) -> Result<Vec<EPath>, ParseError> {
    let lerr = |m: String| ParseError::new(LIST_GRAMMAR, m);
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| lerr("a family is a bracketed list".into()))?;
    inner
        .split(',')
        .map(str::trim)
        .filter(|w| !w.is_empty())
        .map(|w| parse_idempotent(g, w).map_err(|e| lerr(e.message)))
        .collect()
}

/// A word in normal-form order: c-path, t-part, body, starred c-path.
pub fn write_word(g: &SeparatedGraph, e: &Element) -> String {
    to_word(g, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn examples() {
        let g3 = fixtures::g3();
        let p = g3.vertex_by_name("p").unwrap();
        assert_eq!(parse_word(&g3, "a:p.1* a:p.1").unwrap(), semigroup::vertex(&g3, p));
        assert_eq!(parse_word(&g3, "b:p.1.1* a:p.1").unwrap(), Element::Zero);
        let g2 = fixtures::g2();
        let e = parse_word(&g2, "v:w e:f1 e:f1*").unwrap();
        assert!(e.is_idempotent());
        assert_eq!(write_word(&g2, &e), "e:f1 e:f1*");
    }

    #[test]
    fn rejects_bad_tokens() {
        let g3 = fixtures::g3();
        for bad in ["", "x:p", "a:f1", "e:p.1", "a:p.2", "t:p.0", "t:q.1", "v:p*", "e:f9"] {
            assert!(parse_word(&g3, bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn idempotent_lists() {
        let g3 = fixtures::g3();
        assert_eq!(parse_idempotent_list(&g3, "[a:p.1 a:p.1*, b:p.1.1 b:p.1.1*]").unwrap().len(), 2);
        assert!(parse_idempotent_list(&g3, "[]").unwrap().is_empty());
        assert!(parse_idempotent_list(&g3, "[a:p.1]").is_err());
        assert!(parse_idempotent_list(&g3, "v:p").is_err());
    }

    #[test]
    fn t_inverse_cancels() {
        let g2 = fixtures::g2();
        assert_eq!(write_word(&g2, &parse_word(&g2, "t:w.2 t:w.2^-1").unwrap()), "v:w");
    }
}
