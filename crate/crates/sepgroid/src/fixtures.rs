//! The graphs shipped with the crate.

use sepgroid_core::SeparatedGraph;

use crate::formats::parse_graph;

pub const G0: &str = include_str!("../fixtures/g0.sg");
pub const G1: &str = include_str!("../fixtures/g1.sg");
pub const G2: &str = include_str!("../fixtures/g2.sg");
pub const G3: &str = include_str!("../fixtures/g3.sg");

fn load(text: &str) -> SeparatedGraph {
    parse_graph(text).expect("shipped fixture parses")
}

/// A single minimal free prime.
pub fn g0() -> SeparatedGraph {
    load(G0)
}

/// A free prime with two loops over two sinks.
pub fn g1() -> SeparatedGraph {
    load(G1)
}

/// One regular vertex with two loops.
pub fn g2() -> SeparatedGraph {
    load(G2)
}

/// `g2` with a free prime above it.
pub fn g3() -> SeparatedGraph {
    load(G3)
}

pub fn all() -> Vec<(&'static str, SeparatedGraph)> {
    vec![("g0", g0()), ("g1", g1()), ("g2", g2()), ("g3", g3())]
}

/// Looks up a shipped fixture by name (`g0` … `g3`, with or without `.sg`).
pub fn by_name(name: &str) -> Option<SeparatedGraph> {
    let stem = name.strip_suffix(".sg").unwrap_or(name);
    all().into_iter().find(|(n, _)| *n == stem).map(|(_, g)| g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_adaptable() {
        for (name, g) in all() {
            assert!(g.validate().is_empty(), "{name}: {:?}", g.validate());
        }
        assert!(by_name("g3.sg").is_some());
        assert!(by_name("g9").is_none());
    }
}
