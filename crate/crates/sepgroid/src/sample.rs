//! Seeded random words, idempotents, scripts, compact opens and points.
//!
//! Every sampler draws from a caller-owned [`rand_chacha::ChaCha8Rng`], so a
//! seed fixes the whole sequence.

use rand::seq::IndexedRandom;
use rand::Rng;
pub use rand::SeedableRng;
pub use rand_chacha::ChaCha8Rng;

use sepgroid_core::enumerate;
use sepgroid_core::filters::SemifinitePath;
use sepgroid_core::graph::EdgeKind;
use sepgroid_core::lattice::{self, CompactOpen, EPath, ExpandStep, Tail};
use sepgroid_core::semigroup::{self, Step};
use sepgroid_core::{CPath, Element, Path, PrimeKind, SeparatedGraph, VertexId};

use crate::formats::parse_word;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A generator token with its lifted element and endpoints.
#[derive(Clone, Debug)]
pub struct Generator {
    pub token: String,
    pub element: Element,
    pub source: VertexId,
    pub range: VertexId,
}

/// Every generator token of `g`, with `t` indices up to `max_t`.
pub fn alphabet(g: &SeparatedGraph, max_t: u32) -> Vec<Generator> {
    let mut tokens = Vec::new();
    for v in g.vertex_ids() {
        tokens.push(format!("v:{}", g.vertex(v).name));
    }
    for e in g.edge_ids() {
        let edge = g.edge(e);
        let prefix = match edge.kind {
            EdgeKind::Loop { .. } => "a",
            EdgeKind::FreeConnector { .. } => "b",
            _ => "e",
        };
        tokens.push(format!("{prefix}:{}", edge.name));
        tokens.push(format!("{prefix}:{}*", edge.name));
    }
    for v in g.vertex_ids() {
        for i in 1..=max_t {
            tokens.push(format!("t:{}.{i}", g.vertex(v).name));
            tokens.push(format!("t:{}.{i}^-1", g.vertex(v).name));
        }
    }
    tokens.into_iter().map(|t| generator(g, &t)).collect()
}

/// Lifts a single token; panics on tokens outside the word grammar.
pub fn generator(g: &SeparatedGraph, token: &str) -> Generator {
    let element = parse_word(g, token).expect("generator token");
    let (source, range) = element.endpoints().expect("generators are nonzero");
    Generator { token: token.to_string(), element, source, range }
}

/// Indices into `gens` for a word of 1 to `max_len` tokens. Nine steps in
/// ten follow the endpoints, so most words are composable.
pub fn random_word(rng: &mut ChaCha8Rng, gens: &[Generator], max_len: usize) -> Vec<usize> {
    let len = rng.random_range(1..=max_len);
    let mut out = vec![rng.random_range(0..gens.len())];
    while out.len() < len {
        let at = gens[*out.last().expect("nonempty")].range;
        let next: Vec<usize> = (0..gens.len()).filter(|i| gens[*i].source == at).collect();
        let pick = if !next.is_empty() && rng.random_bool(0.9) {
            *next.choose(rng).expect("nonempty")
        } else {
            rng.random_range(0..gens.len())
        };
        out.push(pick);
    }
    out
}

pub fn word_text(gens: &[Generator], word: &[usize]) -> String {
    word.iter().map(|i| gens[*i].token.as_str()).collect::<Vec<_>>().join(" ")
}

pub fn word_value(g: &SeparatedGraph, gens: &[Generator], word: &[usize]) -> Element {
    semigroup::product(g, word.iter().map(|i| &gens[*i].element)).expect("nonempty word")
}

pub fn random_element(rng: &mut ChaCha8Rng, g: &SeparatedGraph, gens: &[Generator], max_len: usize) -> Element {
    word_value(g, gens, &random_word(rng, gens, max_len))
}

/// A random nonzero element, retrying up to 64 times before giving up.
pub fn random_nonzero(rng: &mut ChaCha8Rng, g: &SeparatedGraph, gens: &[Generator], max_len: usize) -> Option<Element> {
    (0..64).map(|_| random_element(rng, g, gens, max_len)).find(|e| !e.is_zero())
}

fn random_step(rng: &mut ChaCha8Rng, g: &SeparatedGraph, at: VertexId, max_exp: u32, max_len: usize) -> Option<Step> {
    let p = g.prime_of(at);
    match g.kind(p) {
        PrimeKind::Free => {
            if g.loops(p) == 0 {
                return None;
            }
            let index = rng.random_range(1..=g.loops(p));
            let slot = rng.random_range(1..=g.slots(p, index));
            Some(Step::Free { prime: p, index, power: rng.random_range(0..=max_exp), slot })
        }
        PrimeKind::Regular => {
            let mut path = random_path(rng, g, at, max_len);
            for _ in 0..=max_len + g.vertex_count() {
                let conns: Vec<_> = g
                    .out_edges(path.range(g))
                    .iter()
                    .copied()
                    .filter(|e| g.edge(*e).kind == EdgeKind::RegularConnector)
                    .collect();
                if let Some(c) = conns.choose(rng) {
                    return Some(Step::Regular { path: path.edges, connector: *c });
                }
                let internal: Vec<_> =
                    g.out_edges(path.range(g)).iter().copied().filter(|e| g.edge(*e).kind == EdgeKind::Internal).collect();
                path = path.then(&[*internal.choose(rng)?]);
            }
            None
        }
    }
}

/// A random internal path of at most `max_len` edges from `v`.
pub fn random_path(rng: &mut ChaCha8Rng, g: &SeparatedGraph, v: VertexId, max_len: usize) -> Path {
    let len = rng.random_range(0..=max_len);
    let mut p = Path::trivial(v);
    for _ in 0..len {
        let internal: Vec<_> =
            g.out_edges(p.range(g)).iter().copied().filter(|e| g.edge(*e).kind == EdgeKind::Internal).collect();
        match internal.choose(rng) {
            Some(e) => p = p.then(&[*e]),
            None => break,
        }
    }
    p
}

fn random_vertex(rng: &mut ChaCha8Rng, g: &SeparatedGraph) -> VertexId {
    VertexId(rng.random_range(0..g.vertex_count() as u32))
}

/// A random c-path of depth at most `max_depth` from `start`.
pub fn random_cpath(
    rng: &mut ChaCha8Rng,
    g: &SeparatedGraph,
    start: VertexId,
    max_depth: usize,
    max_exp: u32,
    max_len: usize,
) -> CPath {
    let depth = rng.random_range(0..=max_depth);
    let mut c = CPath::trivial(start);
    for _ in 0..depth {
        match random_step(rng, g, c.range(g), max_exp, max_len) {
            Some(step) => c = c.with_step(step),
            None => break,
        }
    }
    c
}

/// A random E-path with exponents up to `max_exp` and internal runs up to
/// `max_len` edges.
pub fn random_epath(rng: &mut ChaCha8Rng, g: &SeparatedGraph, max_depth: usize, max_exp: u32, max_len: usize) -> EPath {
    let start = random_vertex(rng, g);
    random_epath_from(rng, g, start, max_depth, max_exp, max_len)
}

pub fn random_epath_from(
    rng: &mut ChaCha8Rng,
    g: &SeparatedGraph,
    start: VertexId,
    max_depth: usize,
    max_exp: u32,
    max_len: usize,
) -> EPath {
    let prefix = random_cpath(rng, g, start, max_depth, max_exp, max_len);
    let r = prefix.range(g);
    let tail = match g.kind_of_vertex(r) {
        PrimeKind::Free => Tail::Free((0..g.loops(g.prime_of(r))).map(|_| rng.random_range(0..=max_exp)).collect()),
        PrimeKind::Regular => Tail::Regular(random_path(rng, g, r, max_len)),
    };
    EPath { prefix, tail }
}

/// A random expansion script of up to `steps` simple expansions starting
/// from `mu`; stops early when nothing is expandable.
pub fn random_script(rng: &mut ChaCha8Rng, g: &SeparatedGraph, mu: &EPath, steps: usize) -> Vec<ExpandStep> {
    let mut list = vec![mu.clone()];
    let mut script = Vec::new();
    for _ in 0..steps {
        let candidates: Vec<usize> = (0..list.len())
            .filter(|i| match &list[*i].tail {
                Tail::Free(k) => !k.is_empty(),
                Tail::Regular(_) => true,
            })
            .collect();
        let Some(&position) = candidates.choose(rng) else { break };
        let choice = match &list[position].tail {
            Tail::Free(k) => Some(rng.random_range(1..=k.len() as u32)),
            Tail::Regular(_) => None,
        };
        let step = ExpandStep { position, choice };
        let children = lattice::simple_expand(g, &list[position], choice).expect("expandable entry");
        list.splice(position..=position, children);
        script.push(step);
    }
    script
}

/// A symbolic compact-open expression over cylinders.
#[derive(Clone, Debug)]
pub enum SetExpr {
    Cyl(EPath),
    And(Box<SetExpr>, Box<SetExpr>),
    Minus(Box<SetExpr>, Box<SetExpr>),
    Or(Box<SetExpr>, Box<SetExpr>),
}

impl SetExpr {
    pub fn eval(&self, g: &SeparatedGraph) -> CompactOpen {
        match self {
            SetExpr::Cyl(mu) => CompactOpen::cylinder(mu.clone()),
            SetExpr::And(a, b) => a.eval(g).intersect(g, &b.eval(g)),
            SetExpr::Minus(a, b) => a.eval(g).subtract(g, &b.eval(g)),
            SetExpr::Or(a, b) => a.eval(g).union(g, &b.eval(g)),
        }
    }

    /// Membership of a point, evaluated connective by connective.
    pub fn contains(&self, g: &SeparatedGraph, x: &SemifinitePath) -> bool {
        match self {
            SetExpr::Cyl(mu) => sepgroid_core::filters::is_initial_segment(g, mu, x),
            SetExpr::And(a, b) => a.contains(g, x) && b.contains(g, x),
            SetExpr::Minus(a, b) => a.contains(g, x) && !b.contains(g, x),
            SetExpr::Or(a, b) => a.contains(g, x) || b.contains(g, x),
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            SetExpr::Cyl(_) => 1,
            SetExpr::And(a, b) | SetExpr::Minus(a, b) | SetExpr::Or(a, b) => a.leaves() + b.leaves(),
        }
    }

    /// The expression in the compact-open grammar.
    pub fn text(&self, g: &SeparatedGraph) -> String {
        match self {
            SetExpr::Cyl(mu) => format!("Z({})", semigroup::to_word(g, &lattice::idem_of(g, mu))),
            SetExpr::And(a, b) => format!("({} & {})", a.text(g), b.text(g)),
            SetExpr::Minus(a, b) => format!("({} - {})", a.text(g), b.text(g)),
            SetExpr::Or(a, b) => format!("({} + {})", a.text(g), b.text(g)),
        }
    }
}

/// A random expression with 1 to `max_leaves` cylinders. Cylinders are
/// drawn near a common start vertex so that the connectives interact.
pub fn random_expr(rng: &mut ChaCha8Rng, g: &SeparatedGraph, max_leaves: usize, max_exp: u32) -> SetExpr {
    let leaves = rng.random_range(1..=max_leaves);
    let start = random_vertex(rng, g);
    build_expr(rng, g, start, leaves, max_exp)
}

fn build_expr(rng: &mut ChaCha8Rng, g: &SeparatedGraph, start: VertexId, leaves: usize, max_exp: u32) -> SetExpr {
    if leaves == 1 {
        let from = if rng.random_bool(0.8) { start } else { random_vertex(rng, g) };
        return SetExpr::Cyl(random_epath_from(rng, g, from, 2, max_exp, 3));
    }
    let left = rng.random_range(1..leaves);
    let a = Box::new(build_expr(rng, g, start, left, max_exp));
    let b = Box::new(build_expr(rng, g, start, leaves - left, max_exp));
    match rng.random_range(0..3) {
        0 => SetExpr::And(a, b),
        1 => SetExpr::Minus(a, b),
        _ => SetExpr::Or(a, b),
    }
}

/// A random compact open made of at most `max_cyl` cylinders.
pub fn random_compact_open(rng: &mut ChaCha8Rng, g: &SeparatedGraph, max_cyl: usize, max_exp: u32) -> CompactOpen {
    let n = rng.random_range(0..=max_cyl);
    let cyls: Vec<EPath> = (0..n).map(|_| random_epath(rng, g, 2, max_exp, 3)).collect();
    CompactOpen::union_of(g, &cyls)
}

/// Eventually periodic points of description size at most `size`.
pub fn points(g: &SeparatedGraph, size: usize) -> Vec<SemifinitePath> {
    enumerate::infinite_paths(g, size)
}

/// A random point of `Z(e*e)` for a nonzero `e`, found among `pool`.
pub fn point_in_domain<'a>(
    rng: &mut ChaCha8Rng,
    g: &SeparatedGraph,
    e: &Element,
    pool: &'a [SemifinitePath],
) -> Option<&'a SemifinitePath> {
    let dom = lattice::epath_of(&semigroup::mul(g, &e.star(), e)).ok()?;
    let inside: Vec<&SemifinitePath> =
        pool.iter().filter(|x| sepgroid_core::filters::is_initial_segment(g, &dom, x)).collect();
    inside.choose(rng).copied()
}
