use std::fmt::Write as _;

use sepgroid_core::graph::{EdgeKind, GraphBuilder, GraphError};
use sepgroid_core::{PrimeKind, SeparatedGraph};

use super::{is_name, ParseError, GRAPH_GRAMMAR};

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::new(GRAPH_GRAMMAR, msg).at(line)
}

fn from_graph_error(err: GraphError) -> ParseError {
    let out = ParseError::new(GRAPH_GRAMMAR, err.to_string());
    match err.line() {
        Some(line) => out.at(line),
        None => out,
    }
}

fn name(line: usize, s: &str) -> Result<&str, ParseError> {
    if is_name(s) {
        Ok(s)
    } else {
        Err(syntax(line, format!("`{s}` is not a valid name")))
    }
}

/// `NAME: V -> W`
fn edge_decl(line: usize, rest: &str) -> Result<(&str, &str, &str), ParseError> {
    let (label, ends) = rest.split_once(':').ok_or_else(|| syntax(line, "edge declaration needs `NAME:`"))?;
    let label = name(line, label.trim())?;
    match ends.split_whitespace().collect::<Vec<_>>()[..] {
        [v, "->", w] => Ok((label, name(line, v)?, name(line, w)?)),
        _ => Err(syntax(line, "expected `V -> W` after the edge name")),
    }
}

/// Parses a graph file. The result is structurally complete but not yet
/// checked for adaptability.
pub fn parse_graph(text: &str) -> Result<SeparatedGraph, ParseError> {
    let mut builder: Option<GraphBuilder> = None;
    let mut current: Option<(String, PrimeKind)> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        let Some(b) = builder.as_mut() else {
            if keyword != "graph" {
                return Err(syntax(line, "the file must start with `graph NAME`"));
            }
            builder = Some(GraphBuilder::new(name(line, rest)?));
            continue;
        };
        b.at_line(line);
        match keyword {
            "graph" => return Err(syntax(line, "repeated `graph` line")),
            "free" => {
                let (p, k) = match rest.split_whitespace().collect::<Vec<_>>()[..] {
                    [p, k] => (p, k),
                    _ => return Err(syntax(line, "expected `free P k=K`")),
                };
                let k: u32 = k
                    .strip_prefix("k=")
                    .and_then(|k| k.parse().ok())
                    .ok_or_else(|| syntax(line, format!("`{k}` is not of the form k=K")))?;
                b.free_prime(name(line, p)?, k).map_err(from_graph_error)?;
                current = Some((p.to_string(), PrimeKind::Free));
            }
            "X" => {
                let Some((p, PrimeKind::Free)) = &current else {
                    return Err(syntax(line, "`X` lines must follow a `free` line"));
                };
                let (i, targets) = rest.split_once("->").ok_or_else(|| syntax(line, "expected `X I -> V1 ...`"))?;
                let i: u32 = i.trim().parse().map_err(|_| syntax(line, format!("`{}` is not an index", i.trim())))?;
                let targets: Vec<&str> = targets.split_whitespace().collect();
                if targets.is_empty() {
                    return Err(syntax(line, "a class needs at least one target"));
                }
                for t in &targets {
                    name(line, t)?;
                }
                b.free_class(p, i, &targets).map_err(from_graph_error)?;
            }
            "regular" => {
                let p = name(line, rest)?;
                b.regular_prime(p).map_err(from_graph_error)?;
                current = Some((p.to_string(), PrimeKind::Regular));
            }
            "vertex" | "edge" | "connector" => {
                let Some((p, PrimeKind::Regular)) = &current else {
                    return Err(syntax(line, format!("`{keyword}` lines must follow a `regular` line")));
                };
                let p = p.clone();
                match keyword {
                    "vertex" => {
                        if rest.is_empty() {
                            return Err(syntax(line, "expected at least one vertex name"));
                        }
                        for v in rest.split_whitespace() {
                            b.vertex(&p, name(line, v)?).map_err(from_graph_error)?;
                        }
                    }
                    "edge" => {
                        let (e, v, w) = edge_decl(line, rest)?;
                        b.edge(&p, e, v, w).map_err(from_graph_error)?;
                    }
                    _ => {
                        let (e, v, w) = edge_decl(line, rest)?;
                        b.connector(&p, e, v, w).map_err(from_graph_error)?;
                    }
                }
            }
            other => return Err(syntax(line, format!("unknown keyword `{other}`"))),
        }
    }
    let b = builder.ok_or_else(|| syntax(last_line.max(1), "missing `graph NAME` line"))?;
    b.build().map_err(from_graph_error)
}

/// Writes `g` in the graph file format; [`parse_graph`] reads it back to an
/// equal graph.
pub fn write_graph(g: &SeparatedGraph) -> String {
    let mut out = format!("graph {}\n", g.name());
    for p in g.prime_ids() {
        let prime = g.prime(p);
        match prime.kind {
            PrimeKind::Free => {
                let _ = writeln!(out, "free {} k={}", prime.name, g.loops(p));
                for (i, class) in prime.classes.iter().enumerate() {
                    let targets: Vec<&str> = class.iter().map(|e| g.vertex(g.range(*e)).name.as_str()).collect();
                    let _ = writeln!(out, "X {} -> {}", i + 1, targets.join(" "));
                }
            }
            PrimeKind::Regular => {
                let _ = writeln!(out, "regular {}", prime.name);
                let names: Vec<&str> = prime.vertices.iter().map(|v| g.vertex(*v).name.as_str()).collect();
                let _ = writeln!(out, "vertex {}", names.join(" "));
                for e in g.edge_ids() {
                    let edge = g.edge(e);
                    if g.prime_of(edge.source) != p {
                        continue;
                    }
                    let keyword = if edge.kind == EdgeKind::Internal { "edge" } else { "connector" };
                    let _ = writeln!(
                        out,
                        "{keyword} {}: {} -> {}",
                        edge.name,
                        g.vertex(edge.source).name,
                        g.vertex(edge.range).name
                    );
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixture_sizes() {
        let g2 = fixtures::g2();
        assert_eq!((g2.vertex_count(), g2.edges().len()), (1, 2));
        let g1 = fixtures::g1();
        assert_eq!((g1.vertex_count(), g1.edges().len()), (3, 4));
    }

    #[test]
    fn missing_colon_reports_its_line() {
        let err = parse_graph("graph g\nregular r\nvertex w\nedge f1 w -> w\n").unwrap_err();
        assert_eq!(err.line, Some(4));
    }

    #[test]
    fn dangling_and_duplicate_names() {
        let err = parse_graph("graph g\nfree p k=1\nX 1 -> nowhere\n").unwrap_err();
        assert_eq!(err.line, Some(3));
        let err = parse_graph("graph g\nregular r\nvertex w w\n").unwrap_err();
        assert_eq!(err.line, Some(3));
        assert!(parse_graph("free p k=0\n").is_err());
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# sink\ngraph g0\n\nfree p k=0   # minimal\n").unwrap();
        assert_eq!(g.vertex_count(), 1);
    }

    #[test]
    fn fixtures_round_trip() {
        for (_, g) in fixtures::all() {
            assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        }
    }
}
