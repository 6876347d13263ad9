use sepgroid_core::filters::{Extent, SemiTail, SemifinitePath};
use sepgroid_core::groupoid::Germ;
use sepgroid_core::semigroup::Monomial;
use sepgroid_core::{CPath, EdgeId, Element, Path, PrimeKind, SeparatedGraph, SparseSeq};

use super::word::{parse_word, write_word};
use super::{ParseError, GERM_GRAMMAR, PATH_GRAMMAR, SEQ_GRAMMAR};

fn err(msg: impl Into<String>) -> ParseError {
    ParseError::new(PATH_GRAMMAR, msg)
}

fn prefix_of_word(g: &SeparatedGraph, word: &str) -> Result<CPath, ParseError> {
    let e = parse_word(g, word).map_err(|e| err(e.message))?;
    match e {
        Element::Triple { left, mid, right } => {
            let r = left.range(g);
            if right.is_trivial() && mid == Monomial::identity(g, r) {
                Ok(left)
            } else {
                Err(err(format!("`{word}` is not a c-path")))
            }
        }
        Element::Zero => Err(err(format!("`{word}` is zero"))),
    }
}

fn edge_list(g: &SeparatedGraph, text: &str) -> Result<Vec<EdgeId>, ParseError> {
    text.split_whitespace()
        .map(|t| {
            let name = t.strip_prefix("e:").unwrap_or(t);
            g.named_edge(name).ok_or_else(|| err(format!("unknown edge `{name}`")))
        })
        .collect()
}

fn edge_names(g: &SeparatedGraph, edges: &[EdgeId]) -> String {
    edges.iter().map(|e| g.edge(*e).name.as_str()).collect::<Vec<_>>().join(" ")
}

/// Splits `[...] ; tail` and returns the bracket contents and the tail text.
fn split_literal(text: &str) -> Result<(&str, &str), ParseError> {
    let text = text.trim();
    let inner = text.strip_prefix('[').ok_or_else(|| err("a path starts with `[`"))?;
    let (word, rest) = inner.split_once(']').ok_or_else(|| err("missing `]`"))?;
    let tail = rest.trim_start().strip_prefix(';').ok_or_else(|| err("missing `;` before the tail"))?;
    Ok((word, tail.trim()))
}

/// Reads a path literal such as `[b:p.1.1] ; reg(f1 ; f2)` or
/// `[v:p] ; free(inf)`.
pub fn parse_path(g: &SeparatedGraph, text: &str) -> Result<SemifinitePath, ParseError> {
    let (word, tail) = split_literal(text)?;
    let prefix = prefix_of_word(g, word)?;
    let r = prefix.range(g);
    let p = g.prime_of(r);
    let out = if let Some(args) = tail.strip_prefix("free(").and_then(|t| t.strip_suffix(')')) {
        if g.kind(p) != PrimeKind::Free {
            return Err(err("`free(...)` tail at a regular vertex"));
        }
        let k = g.loops(p) as usize;
        let args = args.trim();
        let ext: Vec<Extent> = if args == "inf" {
            vec![Extent::Infinite; k]
        } else if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| match a.trim() {
                    "inf" => Ok(Extent::Infinite),
                    n => n.parse().map(Extent::Finite).map_err(|_| err(format!("`{n}` is not an exponent"))),
                })
                .collect::<Result<_, _>>()?
        };
        if ext.len() != k {
            return Err(err(format!("expected {k} exponent(s), found {}", ext.len())));
        }
        SemifinitePath { prefix, tail: SemiTail::Free(ext) }
    } else if let Some(args) = tail.strip_prefix("reg(").and_then(|t| t.strip_suffix(')')) {
        if g.kind(p) != PrimeKind::Regular {
            return Err(err("`reg(...)` tail at a free vertex"));
        }
        let (lead, cycle) = args.split_once(';').unwrap_or((args, ""));
        let lead = Path { start: r, edges: edge_list(g, lead)? };
        if !lead.is_valid(g) {
            return Err(err("the tail is not a path inside the component"));
        }
        let cycle = edge_list(g, cycle)?;
        if cycle.is_empty() {
            SemifinitePath { prefix, tail: SemiTail::Regular(lead) }
        } else {
            SemifinitePath::periodic(g, prefix, lead, cycle).map_err(|_| err("the cycle is not closed at the end of the lead"))?
        }
    } else {
        return Err(err(format!("unknown tail `{tail}`")));
    };
    if !out.is_valid(g) {
        return Err(err("not a valid semifinite path"));
    }
    Ok(out)
}

pub fn write_path(g: &SeparatedGraph, x: &SemifinitePath) -> String {
    let r = x.prefix.range(g);
    let gamma = Element::triple(x.prefix.clone(), Monomial::identity(g, r), CPath::trivial(r));
    let tail = match &x.tail {
        SemiTail::Free(ext) if !ext.is_empty() && ext.iter().all(|e| *e == Extent::Infinite) => "free(inf)".to_string(),
        SemiTail::Free(ext) => {
            let parts: Vec<String> = ext
                .iter()
                .map(|e| match e {
                    Extent::Finite(n) => n.to_string(),
                    Extent::Infinite => "inf".into(),
                })
                .collect();
            format!("free({})", parts.join(","))
        }
        SemiTail::Regular(lam) => format!("reg({} ; )", edge_names(g, &lam.edges)),
        SemiTail::Periodic { lead, cycle } => format!("reg({} ; {})", edge_names(g, &lead.edges), edge_names(g, cycle)),
    };
    format!("[{}] ; {tail}", write_word(g, &gamma))
}

/// `(n_1,...,n_r)`.
pub fn parse_seq(text: &str) -> Result<SparseSeq, ParseError> {
    let serr = |m: String| ParseError::new(SEQ_GRAMMAR, m);
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| serr(format!("`{text}` is not parenthesised")))?;
    let vals = inner
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|_| serr(format!("`{s}` is not an integer"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SparseSeq::from_dense(&vals))
}

/// Splits at top-level `;`, ignoring those inside brackets and parentheses.
fn split_top(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ';' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

/// `(x ; n1 ; n2 ; y)`; each path literal contributes its own top-level `;`.
pub fn parse_germ(g: &SeparatedGraph, text: &str) -> Result<Germ, ParseError> {
    let gerr = |m: String| ParseError::new(GERM_GRAMMAR, m);
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| gerr("a germ is parenthesised".into()))?;
    let parts = split_top(inner);
    let [xa, xb, n1, n2, ya, yb] = parts[..] else {
        return Err(gerr(format!("expected 4 fields, found {} separators", parts.len().saturating_sub(1))));
    };
    let x = parse_path(g, &format!("{xa};{xb}"))?;
    let y = parse_path(g, &format!("{ya};{yb}"))?;
    Germ::new(g, x, parse_seq(n1)?, parse_seq(n2)?, y).map_err(|e| gerr(e.to_string()))
}

pub fn write_germ(g: &SeparatedGraph, germ: &Germ) -> String {
    format!("({} ; {} ; {} ; {})", write_path(g, &germ.x), germ.n1, germ.n2, write_path(g, &germ.y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn literals_round_trip() {
        let g3 = fixtures::g3();
        for text in ["[v:p] ; free(inf)", "[v:p] ; free(2)", "[b:p.1.1] ; reg(f1 ; f2)", "[a:p.1 b:p.1.1] ; reg(f1 f2 ; )", "[v:w] ; reg( ; f1)"] {
            let x = parse_path(&g3, text).unwrap();
            assert_eq!(write_path(&g3, &x), text);
        }
        let g0 = fixtures::g0();
        let x = parse_path(&g0, "[v:p] ; free()").unwrap();
        assert!(x.is_infinite());
        assert_eq!(parse_path(&g0, &write_path(&g0, &x)).unwrap(), x);
    }

    #[test]
    fn periodic_tails_are_canonical() {
        let g2 = fixtures::g2();
        let a = parse_path(&g2, "[v:w] ; reg(f1 ; f1 f1)").unwrap();
        let b = parse_path(&g2, "[v:w] ; reg( ; f1)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_bad_paths() {
        let g3 = fixtures::g3();
        for bad in ["v:p ; free(inf)", "[v:p] free(inf)", "[v:p] ; reg( ; f1)", "[v:w] ; free(1)", "[v:p] ; free(1,2)", "[a:p.1] ; free(inf)", "[v:w] ; reg(f1 ; f9)"] {
            assert!(parse_path(&g3, bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn germs_round_trip() {
        let g3 = fixtures::g3();
        let germ = parse_germ(&g3, "([v:p] ; free(inf) ; () ; (1) ; [v:p] ; free(inf))").unwrap();
        assert_eq!(germ.n2, SparseSeq::unit(1, 1));
        assert_eq!(parse_germ(&g3, &write_germ(&g3, &germ)).unwrap(), germ);
        assert!(parse_germ(&g3, "([v:p] ; free(inf) ; () ; [v:p] ; free(inf))").is_err());
    }
}
