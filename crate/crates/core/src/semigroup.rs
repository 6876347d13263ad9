//! Normal forms `γ·m(p)·η*` of the inverse semigroup `S(E, C)` and their product.
//!
//! An [`Element`] is either zero or a triple of two c-paths and a monomial at
//! a single prime. Every generator is lifted to a triple and products are
//! computed on triples directly, so a value of this type is always in normal
//! form and structural equality is equality in the semigroup.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{EdgeId, EdgeKind, PrimeId, PrimeKind, SeparatedGraph, VertexId};
use crate::seq::SparseSeq;

/// One step of a c-path: a run inside a component followed by a connector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// `α(p,i)^power · β(p,i,slot)`.
    Free { prime: PrimeId, index: u32, power: u32, slot: u32 },
    /// A finite path inside a regular component followed by a connector.
    Regular { path: Vec<EdgeId>, connector: EdgeId },
}

impl Step {
    pub fn connector(&self, g: &SeparatedGraph) -> EdgeId {
        match self {
            Step::Free { prime, index, slot, .. } => g.beta(*prime, *index, *slot),
            Step::Regular { connector, .. } => *connector,
        }
    }

    pub fn range(&self, g: &SeparatedGraph) -> VertexId {
        g.range(self.connector(g))
    }

    /// Number of edges in the step; never zero.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        match self {
            Step::Free { power, .. } => *power as usize + 1,
            Step::Regular { path, .. } => path.len() + 1,
        }
    }

    /// The step as a sequence of edges.
    pub fn edges(&self, g: &SeparatedGraph) -> Vec<EdgeId> {
        match self {
            Step::Free { prime, index, power, slot } => {
                let mut out = vec![g.alpha(*prime, *index); *power as usize];
                out.push(g.beta(*prime, *index, *slot));
                out
            }
            Step::Regular { path, connector } => {
                let mut out = path.clone();
                out.push(*connector);
                out
            }
        }
    }
}

/// A c-path in standard form: a start vertex and a list of steps descending
/// strictly in the component order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CPath {
    pub start: VertexId,
    pub steps: Vec<Step>,
}

impl CPath {
    pub fn trivial(v: VertexId) -> Self {
        CPath { start: v, steps: Vec::new() }
    }

    pub fn depth(&self) -> usize {
        self.steps.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn range(&self, g: &SeparatedGraph) -> VertexId {
        self.steps.last().map_or(self.start, |s| s.range(g))
    }

    /// Length as a path of edges.
    pub fn len(&self) -> usize {
        self.steps.iter().map(Step::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn then(&self, rest: &CPath) -> CPath {
        let mut steps = self.steps.clone();
        steps.extend(rest.steps.iter().cloned());
        CPath { start: self.start, steps }
    }

    pub fn with_step(&self, step: Step) -> CPath {
        let mut out = self.clone();
        out.steps.push(step);
        out
    }

    /// `Some(rest)` when `self = prefix · rest`.
    pub fn strip_prefix(&self, g: &SeparatedGraph, prefix: &CPath) -> Option<CPath> {
        if self.start != prefix.start || !self.steps.starts_with(&prefix.steps) {
            return None;
        }
        Some(CPath { start: prefix.range(g), steps: self.steps[prefix.steps.len()..].to_vec() })
    }

    /// `self ≺ other` or equal.
    pub fn is_prefix_of(&self, other: &CPath) -> bool {
        self.start == other.start && other.steps.starts_with(&self.steps)
    }

    pub fn edges(&self, g: &SeparatedGraph) -> Vec<EdgeId> {
        self.steps.iter().flat_map(|s| s.edges(g)).collect()
    }

    /// Checks that every step is well formed, starts where the previous one
    /// ended, and descends strictly.
    pub fn is_valid(&self, g: &SeparatedGraph) -> bool {
        let mut at = self.start;
        for step in &self.steps {
            let here = g.prime_of(at);
            match step {
                Step::Free { prime, index, power: _, slot } => {
                    if *prime != here || g.kind(here) != PrimeKind::Free || g.free_vertex(here) != at {
                        return false;
                    }
                    if *index == 0 || *index > g.loops(here) || *slot == 0 || *slot > g.slots(here, *index) {
                        return false;
                    }
                }
                Step::Regular { path, connector } => {
                    if g.kind(here) != PrimeKind::Regular {
                        return false;
                    }
                    let p = Path { start: at, edges: path.clone() };
                    if !p.is_valid(g) {
                        return false;
                    }
                    let e = g.edge(*connector);
                    if e.kind != EdgeKind::RegularConnector || e.source != p.range(g) {
                        return false;
                    }
                }
            }
            let next = step.range(g);
            if !g.lt(g.prime_of(next), here) {
                return false;
            }
            at = next;
        }
        true
    }
}

/// A finite path inside one regular component.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub start: VertexId,
    pub edges: Vec<EdgeId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path { start: v, edges: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn range(&self, g: &SeparatedGraph) -> VertexId {
        self.edges.last().map_or(self.start, |e| g.range(*e))
    }

    pub fn then(&self, rest: &[EdgeId]) -> Path {
        let mut edges = self.edges.clone();
        edges.extend_from_slice(rest);
        Path { start: self.start, edges }
    }

    /// `Some(rest)` when `self = prefix · rest`.
    pub fn strip_prefix(&self, prefix: &Path) -> Option<Vec<EdgeId>> {
        if self.start != prefix.start || !self.edges.starts_with(&prefix.edges) {
            return None;
        }
        Some(self.edges[prefix.edges.len()..].to_vec())
    }

    /// Consecutive internal edges of a single regular component.
    pub fn is_valid(&self, g: &SeparatedGraph) -> bool {
        let p = g.prime_of(self.start);
        let mut at = self.start;
        for e in &self.edges {
            let edge = g.edge(*e);
            if edge.kind != EdgeKind::Internal || edge.source != at || g.prime_of(edge.range) != p {
                return false;
            }
            at = edge.range;
        }
        g.kind(p) == PrimeKind::Regular
    }
}

/// The non-`t` part of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Body {
    /// `∏ α(p,j)^{k_j} (α(p,j)^*)^{l_j}`.
    Free { k: Vec<u32>, l: Vec<u32> },
    /// `left · right^*` with `r(left) = r(right)`.
    Regular { left: Path, right: Path },
}

/// A monomial at one prime. The `t`-part is based at the monomial's source.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub prime: PrimeId,
    pub t: SparseSeq,
    pub body: Body,
}

impl Monomial {
    /// The unit monomial at `v`.
    pub fn identity(g: &SeparatedGraph, v: VertexId) -> Self {
        Monomial::pure_t(g, v, SparseSeq::new())
    }

    /// A monomial made only of `t`-variables based at `v`.
    pub fn pure_t(g: &SeparatedGraph, v: VertexId, t: SparseSeq) -> Self {
        let prime = g.prime_of(v);
        let body = match g.kind(prime) {
            PrimeKind::Free => {
                let k = g.loops(prime) as usize;
                Body::Free { k: vec![0; k], l: vec![0; k] }
            }
            PrimeKind::Regular => Body::Regular { left: Path::trivial(v), right: Path::trivial(v) },
        };
        Monomial { prime, t, body }
    }

    pub fn source(&self, g: &SeparatedGraph) -> VertexId {
        match &self.body {
            Body::Free { .. } => g.free_vertex(self.prime),
            Body::Regular { left, .. } => left.start,
        }
    }

    pub fn range(&self, g: &SeparatedGraph) -> VertexId {
        match &self.body {
            Body::Free { .. } => g.free_vertex(self.prime),
            Body::Regular { right, .. } => right.start,
        }
    }

    pub fn star(&self) -> Monomial {
        let body = match &self.body {
            Body::Free { k, l } => Body::Free { k: l.clone(), l: k.clone() },
            Body::Regular { left, right } => Body::Regular { left: right.clone(), right: left.clone() },
        };
        Monomial { prime: self.prime, t: -&self.t, body }
    }

    /// No `α` or path part.
    pub fn is_pure_t(&self) -> bool {
        match &self.body {
            Body::Free { k, l } => k.iter().chain(l).all(|x| *x == 0),
            Body::Regular { left, right } => left.is_empty() && right.is_empty(),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.t.is_zero()
            && match &self.body {
                Body::Free { k, l } => k == l,
                Body::Regular { left, right } => left == right,
            }
    }
}

/// A monomial consisting only of `t`-variables at one vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TMonomial {
    pub base: VertexId,
    pub exps: SparseSeq,
}

impl TMonomial {
    pub fn compose(&self, other: &TMonomial) -> TMonomial {
        TMonomial { base: self.base, exps: &self.exps + &other.exps }
    }

    pub fn inverse(&self) -> TMonomial {
        TMonomial { base: self.base, exps: -&self.exps }
    }
}

/// An element of `S(E, C)` in normal form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Zero,
    Triple { left: CPath, mid: Monomial, right: CPath },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemigroupError {
    PrimeMismatch,
    EndpointMismatch,
    /// The path does not start with a step the monomial can act on.
    NotApplicable,
    ZeroElement,
    NotIdempotent,
}

impl fmt::Display for SemigroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            SemigroupError::PrimeMismatch => "monomials live at different primes",
            SemigroupError::EndpointMismatch => "endpoints do not match",
            SemigroupError::NotApplicable => "the c-path does not start at the monomial's prime",
            SemigroupError::ZeroElement => "the element is zero",
            SemigroupError::NotIdempotent => "the element is not a nonzero idempotent",
        };
        f.write_str(msg)
    }
}

impl core::error::Error for SemigroupError {}

impl Element {
    pub fn triple(left: CPath, mid: Monomial, right: CPath) -> Element {
        Element::Triple { left, mid, right }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Element::Zero)
    }

    pub fn star(&self) -> Element {
        match self {
            Element::Zero => Element::Zero,
            Element::Triple { left, mid, right } => {
                Element::Triple { left: right.clone(), mid: mid.star(), right: left.clone() }
            }
        }
    }

    /// `γ = η`, no `t`-variables and a symmetric body.
    pub fn is_idempotent(&self) -> bool {
        match self {
            Element::Zero => false,
            Element::Triple { left, mid, right } => left == right && mid.is_idempotent(),
        }
    }

    /// Checks the matching conditions of a triple and the validity of its parts.
    pub fn is_valid(&self, g: &SeparatedGraph) -> bool {
        let Element::Triple { left, mid, right } = self else { return true };
        if !left.is_valid(g) || !right.is_valid(g) {
            return false;
        }
        let body_ok = match &mid.body {
            Body::Free { k, l } => {
                g.kind(mid.prime) == PrimeKind::Free
                    && k.len() == g.loops(mid.prime) as usize
                    && l.len() == k.len()
            }
            Body::Regular { left: a, right: b } => {
                g.kind(mid.prime) == PrimeKind::Regular
                    && g.prime_of(a.start) == mid.prime
                    && a.is_valid(g)
                    && b.is_valid(g)
                    && g.prime_of(b.start) == mid.prime
                    && a.range(g) == b.range(g)
            }
        };
        let ts_ok = mid.t.iter().all(|(i, _)| i >= 1);
        body_ok && ts_ok && left.range(g) == mid.source(g) && right.range(g) == mid.range(g)
    }

    /// `(s(γ), s(η))`, the base vertices of the range and source idempotents.
    pub fn endpoints(&self) -> Result<(VertexId, VertexId), SemigroupError> {
        match self {
            Element::Zero => Err(SemigroupError::ZeroElement),
            Element::Triple { left, right, .. } => Ok((left.start, right.start)),
        }
    }
}

/// `σ^p_j`: the order preserving bijection `{1..k}∖{j} → {1..k-1}`.
pub fn skip_index(j: u32, i: u32) -> u32 {
    if i < j {
        i
    } else {
        i - 1
    }
}

/// `σ^p(i) = i + k(p) - 1`.
pub fn shift_index(g: &SeparatedGraph, p: PrimeId, i: u32) -> u32 {
    i + g.loops(p) - 1
}

/// Pushes `t`-exponents rightwards through a list of steps.
///
/// Indices are unchanged by regular steps and shifted by `σ^q` through the
/// connector of every free step at `q`.
pub fn push_t(g: &SeparatedGraph, exps: &SparseSeq, steps: &[Step]) -> SparseSeq {
    let mut out = exps.clone();
    for step in steps {
        if let Step::Free { prime, .. } = step {
            let p = *prime;
            out = out.reindex(|i| shift_index(g, p, i));
        }
    }
    out
}

/// The product of two monomials at the same prime; `None` is zero.
pub fn mul_monomials(g: &SeparatedGraph, m1: &Monomial, m2: &Monomial) -> Result<Option<Monomial>, SemigroupError> {
    if m1.prime != m2.prime {
        return Err(SemigroupError::PrimeMismatch);
    }
    if m1.range(g) != m2.source(g) {
        return Err(SemigroupError::EndpointMismatch);
    }
    let t = &m1.t + &m2.t;
    let body = match (&m1.body, &m2.body) {
        (Body::Free { k: k1, l: l1 }, Body::Free { k: k2, l: l2 }) => {
            let n = k1.len();
            let mut k = vec![0; n];
            let mut l = vec![0; n];
            for j in 0..n {
                let (a, b, c, d) = (k1[j] as i64, l1[j] as i64, k2[j] as i64, l2[j] as i64);
                k[j] = a.max(a + c - b) as u32;
                l[j] = d.max(d + b - c) as u32;
            }
            Body::Free { k, l }
        }
        (Body::Regular { left: g1, right: n1 }, Body::Regular { left: g2, right: n2 }) => {
            if let Some(rest) = g2.strip_prefix(n1) {
                Body::Regular { left: g1.then(&rest), right: n2.clone() }
            } else if let Some(rest) = n1.strip_prefix(g2) {
                Body::Regular { left: g1.clone(), right: n2.then(&rest) }
            } else {
                return Ok(None);
            }
        }
        _ => return Err(SemigroupError::PrimeMismatch),
    };
    Ok(Some(Monomial { prime: m1.prime, t, body }))
}

/// The translation part `φ_η(m)` without the nonvanishing test.
///
/// `η` must be nontrivial and start at the range of `m`.
pub fn translation_part(g: &SeparatedGraph, m: &Monomial, eta: &CPath) -> Result<TMonomial, SemigroupError> {
    let Some(first) = eta.steps.first() else { return Err(SemigroupError::NotApplicable) };
    if eta.start != m.range(g) {
        return Err(SemigroupError::EndpointMismatch);
    }
    let seed = match (&m.body, first) {
        (Body::Free { k, l }, Step::Free { prime, index, .. }) if *prime == m.prime => {
            let mut s = SparseSeq::new();
            for j in 1..=k.len() as u32 {
                if j != *index {
                    let d = k[j as usize - 1] as i64 - l[j as usize - 1] as i64;
                    s.add_at(skip_index(*index, j), d);
                }
            }
            &s + &m.t.reindex(|i| shift_index(g, m.prime, i))
        }
        (Body::Regular { .. }, Step::Regular { .. }) => m.t.clone(),
        _ => return Err(SemigroupError::NotApplicable),
    };
    Ok(TMonomial { base: eta.range(g), exps: push_t(g, &seed, &eta.steps[1..]) })
}

/// `m·η = η̃·φ_η(m)`; `None` when the product is zero.
///
/// A trivial `η` is accepted only for pure-`t` monomials, which pass through
/// unchanged.
pub fn translate(g: &SeparatedGraph, m: &Monomial, eta: &CPath) -> Result<Option<(CPath, TMonomial)>, SemigroupError> {
    if eta.start != m.range(g) {
        return Err(SemigroupError::EndpointMismatch);
    }
    let Some(first) = eta.steps.first() else {
        if m.is_pure_t() {
            return Ok(Some((eta.clone(), TMonomial { base: eta.start, exps: m.t.clone() })));
        }
        return Err(SemigroupError::NotApplicable);
    };
    let new_first = match (&m.body, first) {
        (Body::Free { k, l }, Step::Free { prime, index, power, slot }) if *prime == m.prime => {
            let i = *index as usize - 1;
            if l[i] > *power {
                return Ok(None);
            }
            Step::Free { prime: *prime, index: *index, power: k[i] + power - l[i], slot: *slot }
        }
        (Body::Regular { left, right }, Step::Regular { path, connector }) => {
            let p = Path { start: eta.start, edges: path.clone() };
            let Some(rest) = p.strip_prefix(right) else { return Ok(None) };
            let mut edges = left.edges.clone();
            edges.extend(rest);
            Step::Regular { path: edges, connector: *connector }
        }
        _ => return Err(SemigroupError::NotApplicable),
    };
    let phi = translation_part(g, m, eta)?;
    let mut steps = Vec::with_capacity(eta.steps.len());
    steps.push(new_first);
    steps.extend(eta.steps[1..].iter().cloned());
    Ok(Some((CPath { start: m.source(g), steps }, phi)))
}

/// The product in `S(E, C)`.
pub fn mul(g: &SeparatedGraph, a: &Element, b: &Element) -> Element {
    let (Element::Triple { left: g1, mid: m, right: e1 }, Element::Triple { left: g2, mid: n, right: e2 }) = (a, b)
    else {
        return Element::Zero;
    };
    if e1 == g2 {
        return match mul_monomials(g, m, n) {
            Ok(Some(mono)) => Element::triple(g1.clone(), mono, e2.clone()),
            _ => Element::Zero,
        };
    }
    if let Some(rest) = e1.strip_prefix(g, g2) {
        let Ok(Some((eta, psi))) = translate(g, &n.star(), &rest) else { return Element::Zero };
        let phi = Monomial::pure_t(g, psi.base, -&psi.exps);
        return match mul_monomials(g, m, &phi) {
            Ok(Some(mono)) => Element::triple(g1.clone(), mono, e2.then(&eta)),
            _ => Element::Zero,
        };
    }
    if let Some(rest) = g2.strip_prefix(g, e1) {
        let Ok(Some((gamma, phi))) = translate(g, m, &rest) else { return Element::Zero };
        let phi = Monomial::pure_t(g, phi.base, phi.exps);
        return match mul_monomials(g, &phi, n) {
            Ok(Some(mono)) => Element::triple(g1.then(&gamma), mono, e2.clone()),
            _ => Element::Zero,
        };
    }
    Element::Zero
}

/// Folds a sequence of elements with [`mul`]; the empty product is `None`.
pub fn product<'a>(g: &SeparatedGraph, items: impl IntoIterator<Item = &'a Element>) -> Option<Element> {
    let mut acc: Option<Element> = None;
    for x in items {
        acc = Some(match acc {
            None => x.clone(),
            Some(a) => mul(g, &a, x),
        });
    }
    acc
}

/// The vertex `v` as an element.
pub fn vertex(g: &SeparatedGraph, v: VertexId) -> Element {
    Element::triple(CPath::trivial(v), Monomial::identity(g, v), CPath::trivial(v))
}

/// The edge `e` as an element.
pub fn edge(g: &SeparatedGraph, e: EdgeId) -> Element {
    let edge = g.edge(e);
    let (s, r) = (edge.source, edge.range);
    let p = g.prime_of(s);
    match edge.kind {
        EdgeKind::Internal => {
            let body = Body::Regular { left: Path { start: s, edges: vec![e] }, right: Path::trivial(r) };
            Element::triple(CPath::trivial(s), Monomial { prime: p, t: SparseSeq::new(), body }, CPath::trivial(r))
        }
        EdgeKind::Loop { index } => {
            let n = g.loops(p) as usize;
            let mut k = vec![0; n];
            k[index as usize - 1] = 1;
            let body = Body::Free { k, l: vec![0; n] };
            Element::triple(CPath::trivial(s), Monomial { prime: p, t: SparseSeq::new(), body }, CPath::trivial(s))
        }
        EdgeKind::FreeConnector { index, slot } => {
            let step = Step::Free { prime: p, index, power: 0, slot };
            Element::triple(CPath { start: s, steps: vec![step] }, Monomial::identity(g, r), CPath::trivial(r))
        }
        EdgeKind::RegularConnector => {
            let step = Step::Regular { path: Vec::new(), connector: e };
            Element::triple(CPath { start: s, steps: vec![step] }, Monomial::identity(g, r), CPath::trivial(r))
        }
    }
}

/// `(t^v_index)^exp` as an element.
pub fn t_power(g: &SeparatedGraph, v: VertexId, index: u32, exp: i64) -> Element {
    Element::triple(
        CPath::trivial(v),
        Monomial::pure_t(g, v, SparseSeq::unit(index, exp)),
        CPath::trivial(v),
    )
}

/// The idempotent `γ·γ*` of a c-path.
pub fn path_idempotent(g: &SeparatedGraph, gamma: &CPath) -> Element {
    let r = gamma.range(g);
    Element::triple(gamma.clone(), Monomial::identity(g, r), gamma.clone())
}

fn edge_token(g: &SeparatedGraph, e: EdgeId, starred: bool) -> String {
    let edge = g.edge(e);
    let star = if starred { "*" } else { "" };
    match edge.kind {
        EdgeKind::Loop { .. } => format!("a:{}{star}", edge.name),
        EdgeKind::FreeConnector { .. } => format!("b:{}{star}", edge.name),
        _ => format!("e:{}{star}", edge.name),
    }
}

fn cpath_tokens(g: &SeparatedGraph, c: &CPath, out: &mut Vec<String>) {
    for e in c.edges(g) {
        out.push(edge_token(g, e, false));
    }
}

fn cpath_star_tokens(g: &SeparatedGraph, c: &CPath, out: &mut Vec<String>) {
    for e in c.edges(g).iter().rev() {
        out.push(edge_token(g, *e, true));
    }
}

fn t_tokens(g: &SeparatedGraph, base: VertexId, t: &SparseSeq, out: &mut Vec<String>) {
    let name = &g.vertex(base).name;
    for (i, d) in t.iter() {
        let tok = if d > 0 { format!("t:{name}.{i}") } else { format!("t:{name}.{i}^-1") };
        for _ in 0..d.unsigned_abs() {
            out.push(tok.clone());
        }
    }
}

fn body_tokens(g: &SeparatedGraph, m: &Monomial, out: &mut Vec<String>) {
    match &m.body {
        Body::Free { k, l } => {
            for j in 0..k.len() {
                let a = g.alpha(m.prime, j as u32 + 1);
                for _ in 0..k[j] {
                    out.push(edge_token(g, a, false));
                }
                for _ in 0..l[j] {
                    out.push(edge_token(g, a, true));
                }
            }
        }
        Body::Regular { left, right } => {
            for e in &left.edges {
                out.push(edge_token(g, *e, false));
            }
            for e in right.edges.iter().rev() {
                out.push(edge_token(g, *e, true));
            }
        }
    }
}

/// A word in the generators whose product is `e`.
pub fn to_word(g: &SeparatedGraph, e: &Element) -> String {
    let Element::Triple { left, mid, right } = e else { return "0".into() };
    let mut toks = Vec::new();
    cpath_tokens(g, left, &mut toks);
    t_tokens(g, mid.source(g), &mid.t, &mut toks);
    body_tokens(g, mid, &mut toks);
    cpath_star_tokens(g, right, &mut toks);
    if toks.is_empty() {
        return format!("v:{}", g.vertex(left.start).name);
    }
    toks.join(" ")
}

/// The four-part text form `γ | t | body | η`; empty parts print as the
/// vertex where they sit.
pub fn canonical_text(g: &SeparatedGraph, e: &Element) -> String {
    let Element::Triple { left, mid, right } = e else { return "0".into() };
    let part = |toks: Vec<String>, v: VertexId| {
        if toks.is_empty() {
            format!("v:{}", g.vertex(v).name)
        } else {
            toks.join(" ")
        }
    };
    let mut a = Vec::new();
    cpath_tokens(g, left, &mut a);
    let mut t = Vec::new();
    t_tokens(g, mid.source(g), &mid.t, &mut t);
    let mut b = Vec::new();
    body_tokens(g, mid, &mut b);
    let mut c = Vec::new();
    cpath_tokens(g, right, &mut c);
    format!(
        "{} | {} | {} | {}",
        part(a, left.start),
        part(t, mid.source(g)),
        part(b, mid.source(g)),
        part(c, right.start)
    )
}
