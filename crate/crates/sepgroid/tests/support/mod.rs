//! Helpers shared by the integration tests: the extra fixture and an
//! independent word-rewriting oracle for the semigroup.
//!
//! The oracle never touches the normal-form machinery. It rewrites words in
//! the generators using only the defining relations, each oriented towards
//! the shape `c-path, t-letters, body, starred c-path`, and stops when no
//! rule applies.

#![allow(dead_code)]

use sepgroid::formats::parse_graph;
use sepgroid_core::{EdgeId, EdgeKind, PrimeKind, SeparatedGraph, VertexId};

pub fn g4() -> SeparatedGraph {
    parse_graph(include_str!("../data/g4.sg")).expect("test fixture parses")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    V(VertexId),
    E(EdgeId),
    /// A starred edge.
    S(EdgeId),
    /// `t` at a vertex, index from 1, exponent `+1` or `-1`.
    T(VertexId, u32, i8),
}

impl Letter {
    fn source(self, g: &SeparatedGraph) -> VertexId {
        match self {
            Letter::V(v) | Letter::T(v, _, _) => v,
            Letter::E(e) => g.source(e),
            Letter::S(e) => g.range(e),
        }
    }

    fn range(self, g: &SeparatedGraph) -> VertexId {
        match self {
            Letter::V(v) | Letter::T(v, _, _) => v,
            Letter::E(e) => g.range(e),
            Letter::S(e) => g.source(e),
        }
    }
}

/// Reads one generator token (`v:`, `e:`, `a:`, `b:`, `t:`) by name lookup.
pub fn letter(g: &SeparatedGraph, tok: &str) -> Letter {
    let (kind, body) = tok.split_once(':').expect("token has a prefix");
    let (body, starred) = match body.strip_suffix('*') {
        Some(b) => (b, true),
        None => (body, false),
    };
    match kind {
        "v" => Letter::V(g.vertex_by_name(body).expect("vertex")),
        "t" => {
            let (body, d) = match body.strip_suffix("^-1") {
                Some(b) => (b, -1),
                None => (body, 1),
            };
            let (v, i) = body.rsplit_once('.').expect("t:V.I");
            Letter::T(g.vertex_by_name(v).expect("vertex"), i.parse().expect("index"), d)
        }
        _ => {
            let e = g.edge_ids().find(|e| g.edge(*e).name == body).expect("edge");
            if starred {
                Letter::S(e)
            } else {
                Letter::E(e)
            }
        }
    }
}

/// Letters of a printed word; `None` for `0`.
pub fn letters(g: &SeparatedGraph, text: &str) -> Option<Vec<Letter>> {
    if text.trim() == "0" {
        return None;
    }
    Some(text.split_whitespace().map(|t| letter(g, t)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Role {
    /// `α(p, i)`.
    Loop(u32),
    /// `β(p, i, t)`.
    FreeConn(u32),
    Internal,
    RegConn,
}

fn role(g: &SeparatedGraph, e: EdgeId) -> Role {
    match g.edge(e).kind {
        EdgeKind::Loop { index } => Role::Loop(index),
        EdgeKind::FreeConnector { index, .. } => Role::FreeConn(index),
        EdgeKind::Internal => Role::Internal,
        EdgeKind::RegularConnector => Role::RegConn,
    }
}

fn loops_at(g: &SeparatedGraph, v: VertexId) -> u32 {
    g.loops(g.prime_of(v))
}

/// Index shift of a `t` crossing a free connector at `v`.
fn shift(g: &SeparatedGraph, v: VertexId, i: u32) -> u32 {
    i + loops_at(g, v) - 1
}

/// Index of loop `i` after crossing a connector of class `j`.
fn skip(j: u32, i: u32) -> u32 {
    if i < j {
        i
    } else {
        i - 1
    }
}

/// A forward c-path step starting at `k`: its length, its class for free
/// steps, and its end vertex.
fn forward_run(g: &SeparatedGraph, w: &[Letter], k: usize) -> Option<(usize, Option<u32>, VertexId)> {
    let Letter::E(first) = w[k] else { return None };
    match role(g, first) {
        Role::Loop(j) => {
            let mut n = k;
            while n < w.len() && matches!(w[n], Letter::E(e) if role(g, e) == Role::Loop(j)) {
                n += 1;
            }
            match w.get(n) {
                Some(Letter::E(b)) if role(g, *b) == Role::FreeConn(j) => Some((n + 1 - k, Some(j), g.range(*b))),
                _ => None,
            }
        }
        Role::FreeConn(j) => Some((1, Some(j), g.range(first))),
        Role::Internal => {
            let mut n = k;
            while n < w.len() && matches!(w[n], Letter::E(e) if role(g, e) == Role::Internal) {
                n += 1;
            }
            match w.get(n) {
                Some(Letter::E(c)) if role(g, *c) == Role::RegConn => Some((n + 1 - k, None, g.range(*c))),
                _ => None,
            }
        }
        Role::RegConn => Some((1, None, g.range(first))),
    }
}

/// A starred free step ending at `k`: its start and its class.
fn starred_free_run_ending(g: &SeparatedGraph, w: &[Letter], k: usize) -> Option<(usize, u32)> {
    let mut n = k as isize;
    let mut class = None;
    while n >= 0 {
        match w[n as usize] {
            Letter::S(e) => match role(g, e) {
                Role::Loop(j) if class.is_none() || class == Some(j) => {
                    class = Some(j);
                    n -= 1;
                }
                Role::FreeConn(j) if class.is_none() || class == Some(j) => return Some((n as usize, j)),
                _ => return None,
            },
            _ => return None,
        }
    }
    None
}

fn alpha_index(g: &SeparatedGraph, l: Letter) -> Option<u32> {
    match l {
        Letter::E(e) | Letter::S(e) => match role(g, e) {
            Role::Loop(i) => Some(i),
            _ => None,
        },
        _ => None,
    }
}

enum Step {
    Zero,
    Replace(usize, usize, Vec<Letter>),
}

/// Applies the first applicable rule, leftmost first within each rule.
fn step(g: &SeparatedGraph, w: &[Letter]) -> Option<Step> {
    use Letter::*;
    let n = w.len();
    for k in 0..n.saturating_sub(1) {
        if w[k].range(g) != w[k + 1].source(g) {
            return Some(Step::Zero);
        }
    }
    if n > 1 {
        if let Some(k) = w.iter().position(|l| matches!(l, V(_))) {
            return Some(Step::Replace(k, 1, vec![]));
        }
    }
    for k in 0..n.saturating_sub(1) {
        match (w[k], w[k + 1]) {
            (T(v, i, d), T(_, j, e)) if i == j && d == -e => return Some(Step::Replace(k, 2, vec![V(v)])),
            (T(_, i, _), T(_, j, _)) if i > j => return Some(Step::Replace(k, 2, vec![w[k + 1], w[k]])),
            _ => {}
        }
    }
    for k in 0..n.saturating_sub(1) {
        let (S(e), E(f)) = (w[k], w[k + 1]) else { continue };
        if e == f {
            return Some(Step::Replace(k, 2, vec![V(g.range(e))]));
        }
        let v = g.source(e);
        if g.kind_of_vertex(v) == PrimeKind::Regular {
            return Some(Step::Zero);
        }
        return Some(match (role(g, e), role(g, f)) {
            (Role::Loop(i) | Role::FreeConn(i), Role::Loop(j) | Role::FreeConn(j)) if i == j => Step::Zero,
            (Role::Loop(_), Role::Loop(_)) => continue,
            (Role::Loop(i), Role::FreeConn(j)) => Step::Replace(k, 2, vec![E(f), T(g.range(f), skip(j, i), -1)]),
            (Role::FreeConn(i), Role::Loop(j)) => Step::Replace(k, 2, vec![T(g.range(e), skip(i, j), 1), S(e)]),
            _ => Step::Zero,
        });
    }
    for k in 0..n.saturating_sub(1) {
        if let (Some(i), Some(j)) = (alpha_index(g, w[k]), alpha_index(g, w[k + 1])) {
            if i > j {
                return Some(Step::Replace(k, 2, vec![w[k + 1], w[k]]));
            }
        }
    }
    for k in 0..n.saturating_sub(1) {
        let Some((len, class, r)) = forward_run(g, w, k + 1) else { continue };
        let run = w[k + 1..k + 1 + len].to_vec();
        match (w[k], class) {
            (T(v, i, d), Some(_)) => return Some(Step::Replace(k, len + 1, [run, vec![T(r, shift(g, v, i), d)]].concat())),
            (T(_, i, d), None) => return Some(Step::Replace(k, len + 1, [run, vec![T(r, i, d)]].concat())),
            (E(a) | S(a), Some(j)) => {
                if let Role::Loop(i) = role(g, a) {
                    if i != j {
                        let d = if matches!(w[k], E(_)) { 1 } else { -1 };
                        return Some(Step::Replace(k, len + 1, [run, vec![T(r, skip(j, i), d)]].concat()));
                    }
                }
            }
            _ => {}
        }
    }
    for k in 1..n {
        let Some(i) = alpha_index(g, w[k]) else { continue };
        let Some((start, j)) = starred_free_run_ending(g, w, k - 1) else { continue };
        if i != j {
            let S(b) = w[start] else { unreachable!() };
            let d = if matches!(w[k], E(_)) { 1 } else { -1 };
            let run = w[start..k].to_vec();
            return Some(Step::Replace(start, k + 1 - start, [vec![T(g.range(b), skip(j, i), d)], run].concat()));
        }
    }
    for k in 0..n.saturating_sub(1) {
        let T(_, i, d) = w[k + 1] else { continue };
        let moved = match w[k] {
            E(e) => match role(g, e) {
                Role::Loop(_) => Some(T(g.source(e), i, d)),
                Role::Internal => Some(T(g.source(e), i, d)),
                _ => None,
            },
            S(e) => match role(g, e) {
                Role::Loop(_) | Role::Internal | Role::RegConn => Some(T(g.range(e), i, d)),
                Role::FreeConn(_) => Some(T(g.range(e), shift(g, g.source(e), i), d)),
            },
            _ => None,
        };
        if let Some(t) = moved {
            return Some(Step::Replace(k, 2, vec![t, w[k]]));
        }
    }
    None
}

#[derive(Debug, PartialEq, Eq)]
pub enum Outcome {
    Zero,
    Word(Vec<Letter>),
    /// The step cap was reached.
    Diverged,
}

/// Rewrites a nonempty word until no rule applies.
pub fn reduce(g: &SeparatedGraph, word: &[Letter], max_steps: usize) -> Outcome {
    let mut w = word.to_vec();
    for _ in 0..max_steps {
        match step(g, &w) {
            None => return Outcome::Word(w),
            Some(Step::Zero) => return Outcome::Zero,
            Some(Step::Replace(k, len, with)) => {
                w.splice(k..k + len, with);
            }
        }
    }
    Outcome::Diverged
}

/// The oracle's verdict on a printed word, as a printed normal form.
pub fn oracle_text(g: &SeparatedGraph, word: &str, max_steps: usize) -> Option<String> {
    let w = letters(g, word).expect("nonzero input word");
    match reduce(g, &w, max_steps) {
        Outcome::Zero => Some("0".into()),
        Outcome::Word(w) => Some(w.iter().map(|l| show(g, *l)).collect::<Vec<_>>().join(" ")),
        Outcome::Diverged => None,
    }
}

pub fn show(g: &SeparatedGraph, l: Letter) -> String {
    let edge = |e: EdgeId| {
        let prefix = match role(g, e) {
            Role::Loop(_) => "a",
            Role::FreeConn(_) => "b",
            _ => "e",
        };
        format!("{prefix}:{}", g.edge(e).name)
    };
    match l {
        Letter::V(v) => format!("v:{}", g.vertex(v).name),
        Letter::E(e) => edge(e),
        Letter::S(e) => format!("{}*", edge(e)),
        Letter::T(v, i, d) => format!("t:{}.{i}{}", g.vertex(v).name, if d < 0 { "^-1" } else { "" }),
    }
}
