//! Semifinite paths and the filters they determine.
//!
//! A semifinite path is a c-path prefix followed by a tail that may be
//! infinite. Its filter is the set of idempotents `e(μ')` for the initial
//! segments `μ'`, and the ultrafilters are exactly the filters of infinite
//! paths. Infinite regular tails are restricted to eventually periodic ones.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{EdgeId, EdgeKind, PrimeKind, SeparatedGraph, VertexId};
use crate::lattice::{self, CompactOpen, EPath, Tail};
use crate::semigroup::{CPath, Element, Path, Step};

/// A free tail exponent: finite or `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extent {
    Finite(u32),
    Infinite,
}

impl Extent {
    pub fn at_least(self, n: u32) -> bool {
        match self {
            Extent::Finite(k) => k >= n,
            Extent::Infinite => true,
        }
    }
}

/// The tail of a semifinite path.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SemiTail {
    Free(Vec<Extent>),
    /// A finite path in a regular component.
    Regular(Path),
    /// `lead · cycle^∞`, kept with the shortest lead and a primitive cycle.
    Periodic { lead: Path, cycle: Vec<EdgeId> },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemifinitePath {
    pub prefix: CPath,
    pub tail: SemiTail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FilterError {
    NotIdempotent,
    InfinitePath,
    EmptyFamily,
    /// Two members of the family have zero meet.
    NotDirected,
    /// The family's longest path admits no short periodic description.
    OutsideBounds,
    BadCycle,
}

impl fmt::Display for FilterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            FilterError::NotIdempotent => "not a nonzero idempotent",
            FilterError::InfinitePath => "the path is infinite",
            FilterError::EmptyFamily => "empty family",
            FilterError::NotDirected => "the family contains two orthogonal idempotents",
            FilterError::OutsideBounds => "the family is not the trace of a bounded path",
            FilterError::BadCycle => "the cycle is empty or not closed at the end of the lead",
        };
        f.write_str(msg)
    }
}

impl core::error::Error for FilterError {}

/// Shortest lead, then shortest period, for `lead · cycle^∞`.
fn canonical_periodic(mut lead: Path, mut cycle: Vec<EdgeId>) -> SemiTail {
    while let (Some(a), Some(b)) = (lead.edges.last(), cycle.last()) {
        if a != b {
            break;
        }
        lead.edges.pop();
        cycle.rotate_right(1);
    }
    let n = cycle.len();
    let period = (1..=n).find(|d| n % d == 0 && (0..n).all(|i| cycle[i] == cycle[i % d])).unwrap_or(n);
    cycle.truncate(period);
    SemiTail::Periodic { lead, cycle }
}

impl SemifinitePath {
    /// Checked constructor for `prefix · lead · cycle^∞`.
    pub fn periodic(g: &SeparatedGraph, prefix: CPath, lead: Path, cycle: Vec<EdgeId>) -> Result<Self, FilterError> {
        let closed = Path { start: lead.range(g), edges: cycle.clone() };
        if cycle.is_empty() || !closed.is_valid(g) || closed.range(g) != closed.start || lead.start != prefix.range(g) {
            return Err(FilterError::BadCycle);
        }
        Ok(SemifinitePath { prefix, tail: canonical_periodic(lead, cycle) })
    }

    /// The path staying forever at the free prime reached by `prefix`.
    pub fn free_infinite(g: &SeparatedGraph, prefix: CPath) -> Self {
        let k = g.loops(g.prime_of(prefix.range(g))) as usize;
        SemifinitePath { prefix, tail: SemiTail::Free(alloc::vec![Extent::Infinite; k]) }
    }

    pub fn from_epath(mu: &EPath) -> Self {
        let tail = match &mu.tail {
            Tail::Free(k) => SemiTail::Free(k.iter().map(|x| Extent::Finite(*x)).collect()),
            Tail::Regular(p) => SemiTail::Regular(p.clone()),
        };
        SemifinitePath { prefix: mu.prefix.clone(), tail }
    }

    pub fn start(&self) -> VertexId {
        self.prefix.start
    }

    /// All free exponents infinite, or a periodic regular tail.
    pub fn is_infinite(&self) -> bool {
        match &self.tail {
            SemiTail::Free(k) => k.iter().all(|x| *x == Extent::Infinite),
            SemiTail::Regular(_) => false,
            SemiTail::Periodic { .. } => true,
        }
    }

    /// The E-path of a path whose tail is finite.
    pub fn to_epath(&self) -> Option<EPath> {
        let tail = match &self.tail {
            SemiTail::Free(k) => Tail::Free(
                k.iter()
                    .map(|x| match x {
                        Extent::Finite(n) => Some(*n),
                        Extent::Infinite => None,
                    })
                    .collect::<Option<Vec<_>>>()?,
            ),
            SemiTail::Regular(p) => Tail::Regular(p.clone()),
            SemiTail::Periodic { .. } => return None,
        };
        Some(EPath { prefix: self.prefix.clone(), tail })
    }

    /// The `n`-th tail edge of a regular tail, if there is one.
    pub fn tail_edge(&self, n: usize) -> Option<EdgeId> {
        match &self.tail {
            SemiTail::Free(_) => None,
            SemiTail::Regular(p) => p.edges.get(n).copied(),
            SemiTail::Periodic { lead, cycle } => {
                if n < lead.len() {
                    Some(lead.edges[n])
                } else {
                    Some(cycle[(n - lead.len()) % cycle.len()])
                }
            }
        }
    }

    /// The first `n` tail edges, or `None` when a finite tail is shorter.
    pub fn tail_prefix(&self, n: usize) -> Option<Vec<EdgeId>> {
        (0..n).map(|i| self.tail_edge(i)).collect()
    }

    pub fn is_valid(&self, g: &SeparatedGraph) -> bool {
        if !self.prefix.is_valid(g) {
            return false;
        }
        let r = self.prefix.range(g);
        let p = g.prime_of(r);
        match &self.tail {
            SemiTail::Free(k) => g.kind(p) == PrimeKind::Free && k.len() == g.loops(p) as usize,
            SemiTail::Regular(path) => path.start == r && path.is_valid(g),
            SemiTail::Periodic { lead, cycle } => {
                let c = Path { start: lead.range(g), edges: cycle.clone() };
                lead.start == r && lead.is_valid(g) && !cycle.is_empty() && c.is_valid(g) && c.range(g) == c.start
            }
        }
    }
}

/// Tail vertex reached after `n` edges of a regular tail.
pub fn tail_vertex(g: &SeparatedGraph, x: &SemifinitePath, n: usize) -> Option<VertexId> {
    let start = x.prefix.range(g);
    if n == 0 {
        return Some(start);
    }
    x.tail_edge(n - 1).map(|e| g.range(e))
}

/// `x` with its regular tail shortened by `n` edges, with vertices resolved.
pub fn drop_tail(g: &SeparatedGraph, x: &SemifinitePath, n: usize) -> Option<SemiTail> {
    let start = tail_vertex(g, x, n)?;
    match &x.tail {
        SemiTail::Free(_) => (n == 0).then(|| x.tail.clone()),
        SemiTail::Regular(p) => Some(SemiTail::Regular(Path { start, edges: p.edges.get(n..)?.to_vec() })),
        SemiTail::Periodic { lead, cycle } => {
            if n <= lead.len() {
                let lead = Path { start, edges: lead.edges[n..].to_vec() };
                return Some(canonical_periodic(lead, cycle.clone()));
            }
            let mut c = cycle.clone();
            c.rotate_left((n - lead.len()) % cycle.len());
            Some(canonical_periodic(Path::trivial(start), c))
        }
    }
}

/// `λ · tail` for a finite path `λ` ending where a regular tail starts.
pub fn prepend_path(lam: &Path, tail: &SemiTail) -> Option<SemiTail> {
    match tail {
        SemiTail::Regular(p) => Some(SemiTail::Regular(lam.then(&p.edges))),
        SemiTail::Periodic { lead, cycle } => Some(canonical_periodic(lam.then(&lead.edges), cycle.clone())),
        SemiTail::Free(_) => lam.is_empty().then(|| tail.clone()),
    }
}

/// `μ'` is an initial segment of `μ`, i.e. `μ ∈ Z(μ')`.
pub fn is_initial_segment(_g: &SeparatedGraph, seg: &EPath, mu: &SemifinitePath) -> bool {
    if !seg.prefix.is_prefix_of(&mu.prefix) {
        return false;
    }
    let depth = seg.prefix.depth();
    if depth == mu.prefix.depth() {
        return match (&seg.tail, &mu.tail) {
            (Tail::Free(k), SemiTail::Free(ext)) => k.iter().zip(ext).all(|(a, b)| b.at_least(*a)),
            (Tail::Regular(p), _) => mu.tail_prefix(p.len()).is_some_and(|pre| pre == p.edges),
            _ => false,
        };
    }
    match (&seg.tail, &mu.prefix.steps[depth]) {
        (Tail::Free(k), Step::Free { index, power, .. }) => k[*index as usize - 1] <= *power,
        (Tail::Regular(p), Step::Regular { path, .. }) => path.starts_with(&p.edges),
        _ => false,
    }
}

/// `e ∈ φ(μ)`.
pub fn filter_contains(g: &SeparatedGraph, mu: &SemifinitePath, e: &Element) -> Result<bool, FilterError> {
    let seg = lattice::epath_of(e).map_err(|_| FilterError::NotIdempotent)?;
    Ok(is_initial_segment(g, &seg, mu))
}

/// Membership of a point in a compact open set.
pub fn point_in(g: &SeparatedGraph, set: &CompactOpen, x: &SemifinitePath) -> bool {
    set.cylinders().iter().any(|c| is_initial_segment(g, c, x))
}

/// The ultrafilters are the filters of infinite paths.
pub fn is_ultrafilter(mu: &SemifinitePath) -> bool {
    mu.is_infinite()
}

/// Limits of a bounded family: prefix depth, free exponents, path lengths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_depth: usize,
    pub max_exp: u32,
    pub max_len: usize,
}

impl Bounds {
    /// Depth `|I|`, exponents up to 6 and paths up to 8 edges.
    pub fn for_graph(g: &SeparatedGraph) -> Self {
        Bounds { max_depth: g.primes().len(), max_exp: 6, max_len: 8 }
    }
}

/// The shortest `lead · cycle^∞` with `|lead| + |cycle| ≤ len/2` agreeing
/// with `word`; unique by the periodicity lemma when `word` is long enough.
fn periodic_from_prefix(start: VertexId, word: &[EdgeId]) -> Option<SemiTail> {
    let n = word.len();
    for size in 1..=n / 2 {
        for p in 1..=size {
            let a = size - p;
            if (a..n - p).all(|i| word[i] == word[i + p]) {
                let lead = Path { start, edges: word[..a].to_vec() };
                return Some(canonical_periodic(lead, word[a..a + p].to_vec()));
            }
        }
    }
    None
}

/// The minimal semifinite path whose filter contains `family`, read off from
/// its deepest prefix. A free exponent reaching `bounds.max_exp` and a path
/// reaching `bounds.max_len` are read as infinite.
pub fn reconstruct_path(g: &SeparatedGraph, family: &[Element], bounds: Bounds) -> Result<SemifinitePath, FilterError> {
    let paths: Vec<EPath> =
        family.iter().map(lattice::epath_of).collect::<Result<_, _>>().map_err(|_| FilterError::NotIdempotent)?;
    for (i, a) in paths.iter().enumerate() {
        if paths[i + 1..].iter().any(|b| lattice::meet(g, a, b).is_none()) {
            return Err(FilterError::NotDirected);
        }
    }
    let deepest = paths.iter().max_by_key(|p| p.depth()).ok_or(FilterError::EmptyFamily)?;
    let prefix = deepest.prefix.clone();
    let tails = paths.iter().filter(|p| p.prefix == prefix).map(|p| &p.tail);
    let r = prefix.range(g);
    let tail = match g.kind_of_vertex(r) {
        PrimeKind::Free => {
            let mut sup = alloc::vec![0u32; g.loops(g.prime_of(r)) as usize];
            for t in tails {
                if let Tail::Free(k) = t {
                    for (s, x) in sup.iter_mut().zip(k) {
                        *s = (*s).max(*x);
                    }
                }
            }
            let ext = sup.iter().map(|k| if *k >= bounds.max_exp { Extent::Infinite } else { Extent::Finite(*k) });
            SemiTail::Free(ext.collect())
        }
        PrimeKind::Regular => {
            let longest = tails
                .filter_map(|t| match t {
                    Tail::Regular(p) => Some(p),
                    Tail::Free(_) => None,
                })
                .max_by_key(|p| p.len())
                .cloned()
                .unwrap_or_else(|| Path::trivial(r));
            if longest.len() >= bounds.max_len {
                periodic_from_prefix(r, &longest.edges).ok_or(FilterError::OutsideBounds)?
            } else {
                SemiTail::Regular(longest)
            }
        }
    };
    Ok(SemifinitePath { prefix, tail })
}

/// Shortest cycle through `v` using internal edges, as an edge list.
pub fn shortest_cycle(g: &SeparatedGraph, v: VertexId) -> Option<Vec<EdgeId>> {
    let n = g.vertex_count();
    let mut back: Vec<Option<EdgeId>> = alloc::vec![None; n];
    let mut queue = alloc::collections::VecDeque::new();
    let mut seen = alloc::vec![false; n];
    queue.push_back(v);
    while let Some(u) = queue.pop_front() {
        for &e in g.out_edges(u) {
            if g.edge(e).kind != EdgeKind::Internal {
                continue;
            }
            let w = g.range(e);
            if w == v {
                let mut cycle = alloc::vec![e];
                let mut at = u;
                while at != v {
                    let f = back[at.index()].expect("visited vertices have a parent edge");
                    cycle.push(f);
                    at = g.source(f);
                }
                cycle.reverse();
                return Some(cycle);
            }
            if !seen[w.index()] {
                seen[w.index()] = true;
                back[w.index()] = Some(e);
                queue.push_back(w);
            }
        }
    }
    None
}

/// An infinite path whose filter strictly contains that of a non-infinite `μ`.
pub fn infinite_extension(g: &SeparatedGraph, mu: &SemifinitePath) -> Option<SemifinitePath> {
    match &mu.tail {
        SemiTail::Free(k) if k.iter().any(|x| *x != Extent::Infinite) => {
            Some(SemifinitePath::free_infinite(g, mu.prefix.clone()))
        }
        SemiTail::Regular(lam) => {
            let cycle = shortest_cycle(g, lam.range(g))?;
            SemifinitePath::periodic(g, mu.prefix.clone(), lam.clone(), cycle).ok()
        }
        _ => None,
    }
}

/// Finite sets `X ⊆ φ(μ)` and `Y` with `μ ∈ U(X, Y)` and no infinite path in
/// `U(X, Y)`.
pub fn separation_witness(g: &SeparatedGraph, mu: &SemifinitePath) -> Result<(Vec<Element>, Vec<Element>), FilterError> {
    if mu.is_infinite() {
        return Err(FilterError::InfinitePath);
    }
    let (seg, choice) = match &mu.tail {
        SemiTail::Regular(lam) => (EPath { prefix: mu.prefix.clone(), tail: Tail::Regular(lam.clone()) }, None),
        SemiTail::Free(ext) => {
            let i0 = ext.iter().position(|x| *x != Extent::Infinite).expect("a finite exponent exists");
            let Extent::Finite(k) = ext[i0] else { unreachable!() };
            let mut tail = alloc::vec![0; ext.len()];
            tail[i0] = k;
            (EPath { prefix: mu.prefix.clone(), tail: Tail::Free(tail) }, Some(i0 as u32 + 1))
        }
        SemiTail::Periodic { .. } => unreachable!("periodic tails are infinite"),
    };
    let children = lattice::simple_expand(g, &seg, choice).map_err(|_| FilterError::InfinitePath)?;
    let x = alloc::vec![lattice::idem_of(g, &seg)];
    let y = children.iter().map(|c| lattice::idem_of(g, c)).collect();
    Ok((x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::tests::{alpha, beta, g2, g3, named};
    use crate::semigroup::{mul, vertex};

    fn proj(g: &SeparatedGraph, s: &Element) -> Element {
        mul(g, s, &s.star())
    }

    fn at(g: &SeparatedGraph, name: &str) -> CPath {
        CPath::trivial(g.vertex_by_name(name).unwrap())
    }

    fn edge(g: &SeparatedGraph, name: &str) -> EdgeId {
        g.named_edge(name).unwrap()
    }

    #[test]
    fn initial_segments() {
        let g = g3();
        let p = g.prime_by_name("p").unwrap();
        let inf = SemifinitePath::free_infinite(&g, at(&g, "p"));
        let seg = EPath { prefix: at(&g, "p"), tail: Tail::Free(alloc::vec![2]) };
        assert!(is_initial_segment(&g, &seg, &inf));
        let w = g.vertex_by_name("w").unwrap();
        let step = Step::Free { prime: p, index: 1, power: 2, slot: 1 };
        let mu = SemifinitePath {
            prefix: CPath { start: g.free_vertex(p), steps: alloc::vec![step] },
            tail: SemiTail::Regular(Path::trivial(w)),
        };
        let seg3 = EPath { prefix: at(&g, "p"), tail: Tail::Free(alloc::vec![3]) };
        assert!(!is_initial_segment(&g, &seg3, &mu));
        assert!(is_initial_segment(&g, &seg, &mu));
        assert!(is_initial_segment(&g, &EPath::vertex(&g, g.free_vertex(p)), &mu));
    }

    #[test]
    fn periodic_membership() {
        let g = g2();
        let w = g.vertex_by_name("w").unwrap();
        let mu = SemifinitePath::periodic(&g, at(&g, "w"), Path::trivial(w), alloc::vec![edge(&g, "f1")]).unwrap();
        let f1 = named(&g, "f1");
        let e = proj(&g, &mul(&g, &mul(&g, &f1, &f1), &f1));
        assert_eq!(filter_contains(&g, &mu, &e), Ok(true));
        assert_eq!(filter_contains(&g, &mu, &proj(&g, &named(&g, "f2"))), Ok(false));
        assert!(is_ultrafilter(&mu));
    }

    #[test]
    fn periodic_form_is_canonical() {
        let g = g2();
        let w = g.vertex_by_name("w").unwrap();
        let (f1, f2) = (edge(&g, "f1"), edge(&g, "f2"));
        let a = SemifinitePath::periodic(&g, at(&g, "w"), Path { start: w, edges: alloc::vec![f2, f1] }, alloc::vec![f2, f1, f2, f1]).unwrap();
        let b = SemifinitePath::periodic(&g, at(&g, "w"), Path::trivial(w), alloc::vec![f2, f1]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn reconstruction_examples() {
        let g = g3();
        let a = alpha(&g, "p", 1);
        let p = g.vertex_by_name("p").unwrap();
        let fam = [vertex(&g, p), proj(&g, &a), proj(&g, &mul(&g, &a, &a))];
        let b = Bounds { max_depth: 2, max_exp: 4, max_len: 5 };
        let mu = reconstruct_path(&g, &fam, b).unwrap();
        assert_eq!(mu.tail, SemiTail::Free(alloc::vec![Extent::Finite(2)]));

        let g = g2();
        let w = g.vertex_by_name("w").unwrap();
        let mu = reconstruct_path(&g, &[vertex(&g, w), proj(&g, &named(&g, "f1"))], b).unwrap();
        assert_eq!(mu.tail, SemiTail::Regular(Path { start: w, edges: alloc::vec![edge(&g, "f1")] }));
        assert_eq!(reconstruct_path(&g, &[], b), Err(FilterError::EmptyFamily));
    }

    #[test]
    fn witnesses_from_examples() {
        let g = g2();
        let w = g.vertex_by_name("w").unwrap();
        let f1 = edge(&g, "f1");
        let mu = SemifinitePath { prefix: at(&g, "w"), tail: SemiTail::Regular(Path { start: w, edges: alloc::vec![f1] }) };
        let (x, y) = separation_witness(&g, &mu).unwrap();
        assert_eq!(x, alloc::vec![proj(&g, &named(&g, "f1"))]);
        assert_eq!(y.len(), 2);

        let g = g3();
        let mu = SemifinitePath { prefix: at(&g, "p"), tail: SemiTail::Free(alloc::vec![Extent::Finite(2)]) };
        let (x, y) = separation_witness(&g, &mu).unwrap();
        let a = alpha(&g, "p", 1);
        let aa = mul(&g, &a, &a);
        assert_eq!(x, alloc::vec![proj(&g, &aa)]);
        assert_eq!(y, alloc::vec![proj(&g, &mul(&g, &aa, &a)), proj(&g, &mul(&g, &aa, &beta(&g, "p", 1, 1)))]);
        assert_eq!(
            separation_witness(&g, &SemifinitePath::free_infinite(&g, at(&g, "p"))),
            Err(FilterError::InfinitePath)
        );
    }

    #[test]
    fn extensions_are_infinite() {
        let g = g3();
        let w = g.vertex_by_name("w").unwrap();
        let mu = SemifinitePath { prefix: at(&g, "w"), tail: SemiTail::Regular(Path::trivial(w)) };
        let ext = infinite_extension(&g, &mu).unwrap();
        assert!(ext.is_infinite());
        assert!(is_initial_segment(&g, &mu.to_epath().unwrap(), &ext));
    }
}
