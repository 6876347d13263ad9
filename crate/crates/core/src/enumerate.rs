//! Exhaustive enumeration of bounded families: c-paths, E-paths, semifinite
//! paths and eventually periodic infinite paths.
//!
//! The results are sorted and free of duplicates, so two runs with the same
//! bounds agree exactly.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::filters::{Bounds, Extent, SemiTail, SemifinitePath};
use crate::graph::{EdgeId, EdgeKind, PrimeKind, SeparatedGraph, VertexId};
use crate::lattice::{EPath, Tail};
use crate::semigroup::{CPath, Path, Step};

/// Internal paths from `v` with at most `max_len` edges.
pub fn regular_paths(g: &SeparatedGraph, v: VertexId, max_len: usize) -> Vec<Path> {
    let mut out = vec![Path::trivial(v)];
    let mut layer = vec![Path::trivial(v)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &layer {
            for &e in g.out_edges(p.range(g)) {
                if g.edge(e).kind == EdgeKind::Internal {
                    next.push(p.then(&[e]));
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Closed internal paths at `v` with between 1 and `max_len` edges.
pub fn cycles_at(g: &SeparatedGraph, v: VertexId, max_len: usize) -> Vec<Vec<EdgeId>> {
    regular_paths(g, v, max_len).into_iter().filter(|p| !p.is_empty() && p.range(g) == v).map(|p| p.edges).collect()
}

fn steps_from(g: &SeparatedGraph, v: VertexId, max_power: u32, max_path: usize) -> Vec<Step> {
    let p = g.prime_of(v);
    let mut out = Vec::new();
    match g.kind(p) {
        PrimeKind::Free => {
            for i in 1..=g.loops(p) {
                for m in 0..=max_power {
                    for s in 1..=g.slots(p, i) {
                        out.push(Step::Free { prime: p, index: i, power: m, slot: s });
                    }
                }
            }
        }
        PrimeKind::Regular => {
            for rho in regular_paths(g, v, max_path) {
                for &c in g.out_edges(rho.range(g)) {
                    if g.edge(c).kind == EdgeKind::RegularConnector {
                        out.push(Step::Regular { path: rho.edges.clone(), connector: c });
                    }
                }
            }
        }
    }
    out
}

/// C-paths from `v` with bounded depth, free powers and internal runs.
pub fn cpaths_from(g: &SeparatedGraph, v: VertexId, bounds: Bounds) -> Vec<CPath> {
    let mut out = Vec::new();
    let mut stack = vec![CPath::trivial(v)];
    while let Some(c) = stack.pop() {
        if c.depth() < bounds.max_depth {
            for step in steps_from(g, c.range(g), bounds.max_exp, bounds.max_len) {
                stack.push(c.with_step(step));
            }
        }
        out.push(c);
    }
    out.sort();
    out
}

fn all_cpaths(g: &SeparatedGraph, bounds: Bounds) -> Vec<CPath> {
    g.vertex_ids().flat_map(|v| cpaths_from(g, v, bounds)).collect()
}

fn exponent_vectors(k: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out.into_iter().flat_map(|v| (0..=max).map(move |x| [v.as_slice(), &[x]].concat())).collect();
    }
    out
}

/// E-paths with prefixes from [`cpaths_from`], free exponents up to
/// `max_exp` and regular tails up to `max_len` edges.
pub fn epaths(g: &SeparatedGraph, bounds: Bounds) -> Vec<EPath> {
    let mut out = Vec::new();
    for c in all_cpaths(g, bounds) {
        let r = c.range(g);
        let p = g.prime_of(r);
        match g.kind(p) {
            PrimeKind::Free => {
                for k in exponent_vectors(g.loops(p) as usize, bounds.max_exp) {
                    out.push(EPath { prefix: c.clone(), tail: Tail::Free(k) });
                }
            }
            PrimeKind::Regular => {
                for lam in regular_paths(g, r, bounds.max_len) {
                    out.push(EPath { prefix: c.clone(), tail: Tail::Regular(lam) });
                }
            }
        }
    }
    out.sort();
    out
}

fn periodic_tails(g: &SeparatedGraph, r: VertexId, total: usize) -> BTreeSet<SemiTail> {
    let mut out = BTreeSet::new();
    for lead in regular_paths(g, r, total.saturating_sub(1)) {
        let room = total - lead.len();
        for cycle in cycles_at(g, lead.range(g), room) {
            if let Ok(x) = SemifinitePath::periodic(g, CPath::trivial(r), lead.clone(), cycle) {
                out.insert(x.tail);
            }
        }
    }
    out
}

/// The bounded family of semifinite paths whose traces on [`epaths`] are
/// pairwise distinct: finite free exponents below `max_exp` or `∞`, finite
/// regular tails shorter than `max_len`, periodic tails with lead plus cycle
/// at most `max_len / 2`.
pub fn semifinite_paths(g: &SeparatedGraph, bounds: Bounds) -> Vec<SemifinitePath> {
    let mut out = BTreeSet::new();
    for c in all_cpaths(g, bounds) {
        let r = c.range(g);
        let p = g.prime_of(r);
        match g.kind(p) {
            PrimeKind::Free => {
                let choices: Vec<Extent> =
                    (0..bounds.max_exp).map(Extent::Finite).chain(core::iter::once(Extent::Infinite)).collect();
                let mut tails = vec![Vec::new()];
                for _ in 0..g.loops(p) {
                    tails = tails
                        .into_iter()
                        .flat_map(|t: Vec<Extent>| choices.iter().map(move |x| [t.as_slice(), &[*x]].concat()))
                        .collect();
                }
                for t in tails {
                    out.insert(SemifinitePath { prefix: c.clone(), tail: SemiTail::Free(t) });
                }
            }
            PrimeKind::Regular => {
                for lam in regular_paths(g, r, bounds.max_len.saturating_sub(1)) {
                    out.insert(SemifinitePath { prefix: c.clone(), tail: SemiTail::Regular(lam) });
                }
                for t in periodic_tails(g, r, bounds.max_len / 2) {
                    out.insert(SemifinitePath { prefix: c.clone(), tail: t });
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Eventually periodic infinite paths whose prefix edges plus lead plus
/// cycle number at most `size`; paths staying at a free prime count only
/// their prefix.
pub fn infinite_paths(g: &SeparatedGraph, size: usize) -> Vec<SemifinitePath> {
    let bounds = Bounds { max_depth: g.primes().len(), max_exp: size as u32, max_len: size };
    let mut out = BTreeSet::new();
    for c in all_cpaths(g, bounds) {
        let used = c.len();
        if used > size {
            continue;
        }
        let r = c.range(g);
        match g.kind_of_vertex(r) {
            PrimeKind::Free => {
                out.insert(SemifinitePath::free_infinite(g, c));
            }
            PrimeKind::Regular => {
                for t in periodic_tails(g, r, size - used) {
                    out.insert(SemifinitePath { prefix: c.clone(), tail: t });
                }
            }
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::tests::{g1, g2, g3};

    #[test]
    fn regular_path_counts() {
        let g = g2();
        let w = g.vertex_by_name("w").unwrap();
        assert_eq!(regular_paths(&g, w, 3).len(), 1 + 2 + 4 + 8);
        assert_eq!(cycles_at(&g, w, 2).len(), 6);
    }

    #[test]
    fn epath_family_of_g1() {
        let g = g1();
        let b = Bounds { max_depth: 1, max_exp: 1, max_len: 0 };
        let family = epaths(&g, b);
        assert_eq!(family.len(), 2 + 4 + 4);
        assert!(family.iter().all(|m| m.is_valid(&g)));
    }

    #[test]
    fn infinite_paths_are_infinite_and_distinct() {
        let g = g3();
        let xs = infinite_paths(&g, 3);
        assert!(xs.iter().all(|x| x.is_infinite() && x.is_valid(&g)));
        let set: BTreeSet<_> = xs.iter().collect();
        assert_eq!(set.len(), xs.len());
        assert!(xs.iter().any(|x| matches!(x.tail, SemiTail::Free(_))));
    }

    #[test]
    fn semifinite_family_mixes_kinds() {
        let g = g3();
        let b = Bounds { max_depth: 2, max_exp: 2, max_len: 4 };
        let fam = semifinite_paths(&g, b);
        assert!(fam.iter().any(|x| x.is_infinite()));
        assert!(fam.iter().any(|x| !x.is_infinite()));
        assert!(fam.iter().all(|x| x.is_valid(&g)));
    }
}
