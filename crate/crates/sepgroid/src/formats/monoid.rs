use sepgroid_core::monoid::{EquidecompCertificate, MonElem};
use sepgroid_core::SeparatedGraph;

use super::word::{parse_word, write_word};
use super::{ParseError, CERT_GRAMMAR, MONOID_GRAMMAR};

/// `3*a:v + a:w`, or `0`.
pub fn parse_mon_elem(g: &SeparatedGraph, text: &str) -> Result<MonElem, ParseError> {
    let err = |m: String| ParseError::new(MONOID_GRAMMAR, m);
    let mut out = MonElem::zero(g.vertex_count());
    if text.trim() == "0" {
        return Ok(out);
    }
    for term in text.split('+').map(str::trim) {
        let (n, gen) = match term.split_once('*') {
            Some((n, gen)) => (n.trim().parse::<u32>().map_err(|_| err(format!("`{n}` is not a multiplicity")))?, gen.trim()),
            None => (1, term),
        };
        let name = gen.strip_prefix("a:").ok_or_else(|| err(format!("`{gen}` is not a generator a:V")))?;
        let v = g.vertex_by_name(name).ok_or_else(|| err(format!("unknown vertex `{name}`")))?;
        for _ in 0..n {
            out.add_unit(v);
        }
    }
    Ok(out)
}

pub fn write_mon_elem(g: &SeparatedGraph, x: &MonElem) -> String {
    let terms: Vec<String> = g
        .vertex_ids()
        .filter(|v| x.get(*v) > 0)
        .map(|v| match x.get(v) {
            1 => format!("a:{}", g.vertex(v).name),
            n => format!("{n}*a:{}", g.vertex(v).name),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// `[w1, w2, …]`: the partial bijections as words.
pub fn parse_certificate(g: &SeparatedGraph, text: &str) -> Result<EquidecompCertificate, ParseError> {
    let err = |m: String| ParseError::new(CERT_GRAMMAR, m);
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| err("a certificate is a bracketed list".into()))?;
    let elements = inner
        .split(',')
        .map(str::trim)
        .filter(|w| !w.is_empty())
        .map(|w| parse_word(g, w).map_err(|e| err(e.message)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(EquidecompCertificate { elements })
}

pub fn write_certificate(g: &SeparatedGraph, cert: &EquidecompCertificate) -> String {
    let words: Vec<String> = cert.elements.iter().map(|s| write_word(g, s)).collect();
    format!("[{}]", words.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn mon_elem_literals() {
        let g3 = fixtures::g3();
        let x = parse_mon_elem(&g3, "3*a:w + a:p + a:w").unwrap();
        assert_eq!(write_mon_elem(&g3, &x), "4*a:w + a:p");
        assert_eq!(parse_mon_elem(&g3, &write_mon_elem(&g3, &x)).unwrap(), x);
        assert!(parse_mon_elem(&g3, "0").unwrap().is_zero());
        assert!(parse_mon_elem(&g3, "a:q").is_err());
        assert!(parse_mon_elem(&g3, "x*a:w").is_err());
    }

    #[test]
    fn certificates_round_trip() {
        let g3 = fixtures::g3();
        let cert = parse_certificate(&g3, "[a:p.1, b:p.1.1 e:f1]").unwrap();
        assert_eq!(cert.elements.len(), 2);
        assert_eq!(parse_certificate(&g3, &write_certificate(&g3, &cert)).unwrap(), cert);
        assert!(parse_certificate(&g3, "[]").unwrap().elements.is_empty());
    }
}
