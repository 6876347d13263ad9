//! Adaptable separated graphs and their component poset.
//!
//! A graph is a finite set of *primes* (components). A free prime `p` has a
//! single vertex, also called `p`, carrying `k(p)` loops `α(p,i)`; each loop
//! comes with `g(p,i) ≥ 1` connectors `β(p,i,t)` into strictly lower
//! components, and `{α(p,i), β(p,i,1), …}` is one class of the separation at
//! `p`. A regular prime is a strongly connected graph in which every vertex
//! emits at least two internal edges; its connectors also point strictly
//! downwards and every vertex carries a single class.
//!
//! The order on primes is never declared: `q ≤ p` iff some vertex of `q` is
//! reachable from `p`. [`SeparatedGraph::validate`] checks the declared
//! components against the strongly connected components of the whole graph.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::monoid::{MonElem, Presentation, Relation, RelationClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl PrimeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PrimeKind {
    Free,
    Regular,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prime {
    pub name: String,
    pub kind: PrimeKind,
    pub vertices: Vec<VertexId>,
    /// Free primes: the loop `α(p,i)` at position `i-1`.
    pub loops: Vec<EdgeId>,
    /// Free primes: the connectors `β(p,i,1..)` at position `i-1`.
    pub classes: Vec<Vec<EdgeId>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub name: String,
    pub prime: PrimeId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    /// An edge of a regular component.
    Internal,
    /// The loop `α(p, index)` of a free prime.
    Loop { index: u32 },
    /// The connector `β(p, index, slot)` of a free prime.
    FreeConnector { index: u32, slot: u32 },
    /// A named connector leaving a regular component.
    RegularConnector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    /// User name for internal edges and regular connectors; `p.i` for loops
    /// and `p.i.t` for free connectors.
    pub name: String,
    pub source: VertexId,
    pub range: VertexId,
    pub kind: EdgeKind,
}

impl Edge {
    pub fn is_connector(&self) -> bool {
        matches!(self.kind, EdgeKind::FreeConnector { .. } | EdgeKind::RegularConnector)
    }
}

/// A finite separated graph with its derived component order.
///
/// Construct with [`GraphBuilder`]; a built graph is structurally complete
/// but only known to be adaptable after [`SeparatedGraph::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatedGraph {
    name: String,
    primes: Vec<Prime>,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    out: Vec<Vec<EdgeId>>,
    /// `reach[p][q]` iff `q` is reachable from `p`, i.e. `q ≤ p`.
    reach: Vec<Vec<bool>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    Duplicate { what: &'static str, name: String, line: Option<usize> },
    UnknownVertex { name: String, line: Option<usize> },
    UnknownPrime { name: String, line: Option<usize> },
    WrongPrimeKind { name: String, expected: PrimeKind, line: Option<usize> },
    EndpointOutsidePrime { edge: String, vertex: String, line: Option<usize> },
    ClassIndex { prime: String, index: u32, loops: u32, line: Option<usize> },
    MissingClass { prime: String, index: u32 },
}

impl GraphError {
    pub fn line(&self) -> Option<usize> {
        match self {
            GraphError::Duplicate { line, .. }
            | GraphError::UnknownVertex { line, .. }
            | GraphError::UnknownPrime { line, .. }
            | GraphError::WrongPrimeKind { line, .. }
            | GraphError::EndpointOutsidePrime { line, .. }
            | GraphError::ClassIndex { line, .. } => *line,
            GraphError::MissingClass { .. } => None,
        }
    }
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Duplicate { what, name, .. } => write!(f, "duplicate {what} name `{name}`"),
            GraphError::UnknownVertex { name, .. } => write!(f, "unknown vertex `{name}`"),
            GraphError::UnknownPrime { name, .. } => write!(f, "unknown prime `{name}`"),
            GraphError::WrongPrimeKind { name, expected, .. } => {
                write!(f, "prime `{name}` is not {}", kind_word(*expected))
            }
            GraphError::EndpointOutsidePrime { edge, vertex, .. } => {
                write!(f, "edge `{edge}` uses vertex `{vertex}` outside its prime")
            }
            GraphError::ClassIndex { prime, index, loops, .. } => {
                write!(f, "class index {index} of `{prime}` is outside 1..={loops} or repeated")
            }
            GraphError::MissingClass { prime, index } => {
                write!(f, "free prime `{prime}` has no line for class {index}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

fn kind_word(kind: PrimeKind) -> &'static str {
    match kind {
        PrimeKind::Free => "free",
        PrimeKind::Regular => "regular",
    }
}

#[derive(Clone, Debug)]
enum Draft {
    Free { name: String, loops: u32, classes: Vec<Option<(Vec<String>, Option<usize>)>> },
    Regular { name: String, vertices: Vec<(String, Option<usize>)>, edges: Vec<EdgeDraft> },
}

#[derive(Clone, Debug)]
struct EdgeDraft {
    name: String,
    source: String,
    range: String,
    connector: bool,
    line: Option<usize>,
}

/// Incremental construction of a [`SeparatedGraph`].
///
/// Names are resolved in [`GraphBuilder::build`], so connectors may refer to
/// vertices declared later. Items remember the line set by
/// [`GraphBuilder::at_line`] for error reporting.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    name: String,
    drafts: Vec<Draft>,
    line: Option<usize>,
}

impl GraphBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        GraphBuilder { name: name.into(), drafts: Vec::new(), line: None }
    }

    /// Tags subsequently added items with a source line.
    pub fn at_line(&mut self, line: usize) -> &mut Self {
        self.line = Some(line);
        self
    }

    fn find(&self, prime: &str) -> Option<usize> {
        self.drafts.iter().position(|d| match d {
            Draft::Free { name, .. } | Draft::Regular { name, .. } => name == prime,
        })
    }

    pub fn free_prime(&mut self, name: &str, loops: u32) -> Result<&mut Self, GraphError> {
        if self.find(name).is_some() {
            return Err(GraphError::Duplicate { what: "prime", name: name.into(), line: self.line });
        }
        self.drafts.push(Draft::Free {
            name: name.into(),
            loops,
            classes: vec![None; loops as usize],
        });
        Ok(self)
    }

    /// Declares the connector targets of class `index` (1-based) of a free
    /// prime. An empty target list is accepted here and reported by
    /// validation.
    pub fn free_class(&mut self, prime: &str, index: u32, targets: &[&str]) -> Result<&mut Self, GraphError> {
        let line = self.line;
        let pos = self.find(prime).ok_or_else(|| GraphError::UnknownPrime { name: prime.into(), line })?;
        match &mut self.drafts[pos] {
            Draft::Free { loops, classes, .. } => {
                let bad = GraphError::ClassIndex { prime: prime.into(), index, loops: *loops, line };
                if index == 0 || index > *loops {
                    return Err(bad);
                }
                let slot = &mut classes[index as usize - 1];
                if slot.is_some() {
                    return Err(bad);
                }
                *slot = Some((targets.iter().map(|t| t.to_string()).collect(), line));
                Ok(self)
            }
            Draft::Regular { .. } => {
                Err(GraphError::WrongPrimeKind { name: prime.into(), expected: PrimeKind::Free, line })
            }
        }
    }

    pub fn regular_prime(&mut self, name: &str) -> Result<&mut Self, GraphError> {
        if self.find(name).is_some() {
            return Err(GraphError::Duplicate { what: "prime", name: name.into(), line: self.line });
        }
        self.drafts.push(Draft::Regular { name: name.into(), vertices: Vec::new(), edges: Vec::new() });
        Ok(self)
    }

    fn regular_mut(&mut self, prime: &str) -> Result<&mut Draft, GraphError> {
        let line = self.line;
        let pos = self.find(prime).ok_or_else(|| GraphError::UnknownPrime { name: prime.into(), line })?;
        match &self.drafts[pos] {
            Draft::Regular { .. } => Ok(&mut self.drafts[pos]),
            Draft::Free { .. } => {
                Err(GraphError::WrongPrimeKind { name: prime.into(), expected: PrimeKind::Regular, line })
            }
        }
    }

    pub fn vertex(&mut self, prime: &str, name: &str) -> Result<&mut Self, GraphError> {
        let line = self.line;
        if let Draft::Regular { vertices, .. } = self.regular_mut(prime)? {
            vertices.push((name.into(), line));
        }
        Ok(self)
    }

    /// Adds an internal edge of a regular prime.
    pub fn edge(&mut self, prime: &str, name: &str, source: &str, range: &str) -> Result<&mut Self, GraphError> {
        self.push_edge(prime, name, source, range, false)
    }

    /// Adds a named connector leaving a regular prime.
    pub fn connector(&mut self, prime: &str, name: &str, source: &str, range: &str) -> Result<&mut Self, GraphError> {
        self.push_edge(prime, name, source, range, true)
    }

    fn push_edge(&mut self, prime: &str, name: &str, source: &str, range: &str, connector: bool) -> Result<&mut Self, GraphError> {
        let line = self.line;
        if let Draft::Regular { edges, .. } = self.regular_mut(prime)? {
            edges.push(EdgeDraft { name: name.into(), source: source.into(), range: range.into(), connector, line });
        }
        Ok(self)
    }

    pub fn build(&self) -> Result<SeparatedGraph, GraphError> {
        let mut primes = Vec::new();
        let mut vertices: Vec<Vertex> = Vec::new();
        let mut by_name: BTreeMap<String, VertexId> = BTreeMap::new();

        for (pi, draft) in self.drafts.iter().enumerate() {
            let pid = PrimeId(pi as u32);
            let mut add_vertex = |name: &str, line: Option<usize>, vertices: &mut Vec<Vertex>| {
                if by_name.contains_key(name) {
                    return Err(GraphError::Duplicate { what: "vertex", name: name.into(), line });
                }
                let id = VertexId(vertices.len() as u32);
                by_name.insert(name.into(), id);
                vertices.push(Vertex { name: name.into(), prime: pid });
                Ok(id)
            };
            match draft {
                Draft::Free { name, .. } => {
                    let v = add_vertex(name, None, &mut vertices)?;
                    primes.push(Prime {
                        name: name.clone(),
                        kind: PrimeKind::Free,
                        vertices: vec![v],
                        loops: Vec::new(),
                        classes: Vec::new(),
                    });
                }
                Draft::Regular { name, vertices: vs, .. } => {
                    let mut ids = Vec::new();
                    for (v, line) in vs {
                        ids.push(add_vertex(v, *line, &mut vertices)?);
                    }
                    primes.push(Prime {
                        name: name.clone(),
                        kind: PrimeKind::Regular,
                        vertices: ids,
                        loops: Vec::new(),
                        classes: Vec::new(),
                    });
                }
            }
        }

        let lookup = |name: &str, line: Option<usize>| {
            by_name.get(name).copied().ok_or_else(|| GraphError::UnknownVertex { name: name.into(), line })
        };

        let mut edges: Vec<Edge> = Vec::new();
        let mut edge_names: BTreeMap<String, ()> = BTreeMap::new();
        for (pi, draft) in self.drafts.iter().enumerate() {
            match draft {
                Draft::Free { name, loops, classes } => {
                    let v = by_name[name.as_str()];
                    for i in 1..=*loops {
                        let (targets, line) = classes[i as usize - 1]
                            .clone()
                            .ok_or_else(|| GraphError::MissingClass { prime: name.clone(), index: i })?;
                        let alpha = EdgeId(edges.len() as u32);
                        edges.push(Edge {
                            name: format!("{name}.{i}"),
                            source: v,
                            range: v,
                            kind: EdgeKind::Loop { index: i },
                        });
                        primes[pi].loops.push(alpha);
                        let mut class = Vec::new();
                        for (t, target) in targets.iter().enumerate() {
                            let r = lookup(target, line)?;
                            let slot = t as u32 + 1;
                            class.push(EdgeId(edges.len() as u32));
                            edges.push(Edge {
                                name: format!("{name}.{i}.{slot}"),
                                source: v,
                                range: r,
                                kind: EdgeKind::FreeConnector { index: i, slot },
                            });
                        }
                        primes[pi].classes.push(class);
                    }
                }
                Draft::Regular { edges: es, .. } => {
                    for e in es {
                        if edge_names.insert(e.name.clone(), ()).is_some() {
                            return Err(GraphError::Duplicate { what: "edge", name: e.name.clone(), line: e.line });
                        }
                        let s = lookup(&e.source, e.line)?;
                        let r = lookup(&e.range, e.line)?;
                        let pid = PrimeId(pi as u32);
                        if vertices[s.index()].prime != pid {
                            return Err(GraphError::EndpointOutsidePrime {
                                edge: e.name.clone(),
                                vertex: e.source.clone(),
                                line: e.line,
                            });
                        }
                        if !e.connector && vertices[r.index()].prime != pid {
                            return Err(GraphError::EndpointOutsidePrime {
                                edge: e.name.clone(),
                                vertex: e.range.clone(),
                                line: e.line,
                            });
                        }
                        let kind = if e.connector { EdgeKind::RegularConnector } else { EdgeKind::Internal };
                        edges.push(Edge { name: e.name.clone(), source: s, range: r, kind });
                    }
                }
            }
        }

        let mut out = vec![Vec::new(); vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            out[e.source.index()].push(EdgeId(i as u32));
        }

        let n = primes.len();
        let mut step = vec![vec![false; n]; n];
        for e in &edges {
            let a = vertices[e.source.index()].prime.index();
            let b = vertices[e.range.index()].prime.index();
            step[a][b] = true;
        }
        let mut reach = vec![vec![false; n]; n];
        for (p, row) in reach.iter_mut().enumerate() {
            let mut stack = vec![p];
            row[p] = true;
            while let Some(a) = stack.pop() {
                for b in 0..n {
                    if step[a][b] && !row[b] {
                        row[b] = true;
                        stack.push(b);
                    }
                }
            }
        }

        Ok(SeparatedGraph { name: self.name.clone(), primes, vertices, edges, out, reach })
    }
}

/// A failed adaptability condition, naming the offending item.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EmptyComponent { prime: String },
    NotStronglyConnected { prime: String },
    LowOutDegree { vertex: String, internal: usize },
    EmptyClass { prime: String, index: u32 },
    NonMinimalSink { prime: String },
    MinimalWithLoops { prime: String },
    ConnectorNotDescending { edge: String },
    ComponentMismatch { vertex: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyComponent { prime } => write!(f, "regular prime `{prime}` has no vertices"),
            Violation::NotStronglyConnected { prime } => {
                write!(f, "regular prime `{prime}`: component graph is not strongly connected")
            }
            Violation::LowOutDegree { vertex, internal } => write!(
                f,
                "regular vertex `{vertex}` emits {internal} internal edge(s); at least 2 are required"
            ),
            Violation::EmptyClass { prime, index } => {
                write!(f, "free prime `{prime}`: class {index} has no connectors (g(p,i) >= 1 is required)")
            }
            Violation::NonMinimalSink { prime } => {
                write!(f, "free prime `{prime}` has k=0 but is not minimal")
            }
            Violation::MinimalWithLoops { prime } => {
                write!(f, "free prime `{prime}` has k>=1 but is minimal (must have k=0)")
            }
            Violation::ConnectorNotDescending { edge } => {
                write!(f, "connector `{edge}` does not point to a strictly lower component")
            }
            Violation::ComponentMismatch { vertex } => write!(
                f,
                "vertex `{vertex}`: strongly connected component differs from its declared prime"
            ),
        }
    }
}

impl SeparatedGraph {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn primes(&self) -> &[Prime] {
        &self.primes
    }

    pub fn prime(&self, p: PrimeId) -> &Prime {
        &self.primes[p.index()]
    }

    pub fn prime_ids(&self) -> impl Iterator<Item = PrimeId> {
        (0..self.primes.len() as u32).map(PrimeId)
    }

    pub fn prime_by_name(&self, name: &str) -> Option<PrimeId> {
        self.primes.iter().position(|p| p.name == name).map(|i| PrimeId(i as u32))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v.index()]
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + Clone {
        (0..self.vertices.len() as u32).map(VertexId)
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v.name == name).map(|i| VertexId(i as u32))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.index()]
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    /// Looks up an internal edge or regular connector by its user name.
    pub fn named_edge(&self, name: &str) -> Option<EdgeId> {
        self.edges
            .iter()
            .position(|e| e.name == name && matches!(e.kind, EdgeKind::Internal | EdgeKind::RegularConnector))
            .map(|i| EdgeId(i as u32))
    }

    pub fn source(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].source
    }

    pub fn range(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].range
    }

    /// All edges leaving `v`, in declaration order.
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out[v.index()]
    }

    pub fn prime_of(&self, v: VertexId) -> PrimeId {
        self.vertices[v.index()].prime
    }

    pub fn kind(&self, p: PrimeId) -> PrimeKind {
        self.primes[p.index()].kind
    }

    pub fn kind_of_vertex(&self, v: VertexId) -> PrimeKind {
        self.kind(self.prime_of(v))
    }

    /// `k(p)`, the number of loops at a free prime (0 for regular primes).
    pub fn loops(&self, p: PrimeId) -> u32 {
        self.primes[p.index()].loops.len() as u32
    }

    /// `g(p,i)`, the number of connectors in class `i` of a free prime.
    pub fn slots(&self, p: PrimeId, index: u32) -> u32 {
        self.primes[p.index()].classes[index as usize - 1].len() as u32
    }

    /// The unique vertex of a free prime.
    pub fn free_vertex(&self, p: PrimeId) -> VertexId {
        self.primes[p.index()].vertices[0]
    }

    pub fn alpha(&self, p: PrimeId, index: u32) -> EdgeId {
        self.primes[p.index()].loops[index as usize - 1]
    }

    pub fn beta(&self, p: PrimeId, index: u32, slot: u32) -> EdgeId {
        self.primes[p.index()].classes[index as usize - 1][slot as usize - 1]
    }

    /// `a ≤ b` in the component order: some vertex of `a` is reachable from `b`.
    pub fn leq(&self, a: PrimeId, b: PrimeId) -> bool {
        self.reach[b.index()][a.index()]
    }

    pub fn lt(&self, a: PrimeId, b: PrimeId) -> bool {
        a != b && self.leq(a, b)
    }

    /// Minimal primes have nothing strictly below them.
    pub fn is_minimal(&self, p: PrimeId) -> bool {
        self.prime_ids().all(|q| q == p || !self.leq(q, p))
    }

    /// Checks every adaptability condition; an empty list means the graph is
    /// adaptable.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (pi, prime) in self.primes.iter().enumerate() {
            let p = PrimeId(pi as u32);
            match prime.kind {
                PrimeKind::Free => {
                    let k = prime.loops.len();
                    for (i, class) in prime.classes.iter().enumerate() {
                        if class.is_empty() {
                            out.push(Violation::EmptyClass { prime: prime.name.clone(), index: i as u32 + 1 });
                        }
                    }
                    let minimal = self.is_minimal(p);
                    if k == 0 && !minimal {
                        out.push(Violation::NonMinimalSink { prime: prime.name.clone() });
                    }
                    if k > 0 && minimal {
                        out.push(Violation::MinimalWithLoops { prime: prime.name.clone() });
                    }
                }
                PrimeKind::Regular => {
                    if prime.vertices.is_empty() {
                        out.push(Violation::EmptyComponent { prime: prime.name.clone() });
                        continue;
                    }
                    for &v in &prime.vertices {
                        let internal = self
                            .out_edges(v)
                            .iter()
                            .filter(|e| self.edge(**e).kind == EdgeKind::Internal)
                            .count();
                        if internal < 2 {
                            out.push(Violation::LowOutDegree { vertex: self.vertex(v).name.clone(), internal });
                        }
                    }
                    if !self.internally_strongly_connected(p) {
                        out.push(Violation::NotStronglyConnected { prime: prime.name.clone() });
                    }
                }
            }
        }
        for e in &self.edges {
            if e.is_connector() {
                let a = self.prime_of(e.source);
                let b = self.prime_of(e.range);
                if !self.lt(b, a) || self.leq(a, b) {
                    out.push(Violation::ConnectorNotDescending { edge: e.name.clone() });
                }
            }
        }
        let scc = self.strong_components();
        for v in self.vertex_ids() {
            let mut same_scc = self.vertex_ids().filter(|w| scc[w.index()] == scc[v.index()]);
            let mismatch = same_scc.any(|w| self.prime_of(w) != self.prime_of(v))
                || self.prime(self.prime_of(v)).vertices.iter().any(|w| scc[w.index()] != scc[v.index()]);
            if mismatch {
                out.push(Violation::ComponentMismatch { vertex: self.vertex(v).name.clone() });
            }
        }
        out
    }

    fn internally_strongly_connected(&self, p: PrimeId) -> bool {
        let vs = &self.primes[p.index()].vertices;
        let Some(&root) = vs.first() else { return true };
        let internal = |v: VertexId, forward: bool| -> Vec<VertexId> {
            self.edges
                .iter()
                .filter(|e| e.kind == EdgeKind::Internal)
                .filter_map(|e| match forward {
                    true if e.source == v => Some(e.range),
                    false if e.range == v => Some(e.source),
                    _ => None,
                })
                .collect()
        };
        for forward in [true, false] {
            let mut seen = vec![false; self.vertices.len()];
            let mut stack = vec![root];
            seen[root.index()] = true;
            while let Some(v) = stack.pop() {
                for w in internal(v, forward) {
                    if !seen[w.index()] {
                        seen[w.index()] = true;
                        stack.push(w);
                    }
                }
            }
            if vs.iter().any(|v| !seen[v.index()]) {
                return false;
            }
        }
        true
    }

    /// Strongly connected components of the whole graph, as a component label
    /// per vertex (Tarjan, iterative).
    pub fn strong_components(&self) -> Vec<usize> {
        let n = self.vertices.len();
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut label = vec![usize::MAX; n];
        let mut next_index = 0;
        let mut next_label = 0;
        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            let mut work: Vec<(usize, usize)> = vec![(root, 0)];
            index[root] = next_index;
            low[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (v, ref mut pos)) = work.last_mut() {
                let outs = &self.out[v];
                if *pos < outs.len() {
                    let w = self.edges[outs[*pos].index()].range.index();
                    *pos += 1;
                    if index[w] == usize::MAX {
                        index[w] = next_index;
                        low[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        work.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    work.pop();
                    if let Some(&(parent, _)) = work.last() {
                        low[parent] = low[parent].min(low[v]);
                    }
                    if low[v] == index[v] {
                        while let Some(w) = stack.pop() {
                            on_stack[w] = false;
                            label[w] = next_label;
                            if w == v {
                                break;
                            }
                        }
                        next_label += 1;
                    }
                }
            }
        }
        label
    }

    /// All hereditary (downward closed) sets of primes, sorted by size and
    /// then lexicographically by prime id.
    pub fn hereditary_subsets(&self) -> Vec<Vec<PrimeId>> {
        // Primes in a linear extension of the order, smallest first.
        let mut order: Vec<PrimeId> = self.prime_ids().collect();
        order.sort_by_key(|p| self.prime_ids().filter(|q| self.leq(*q, *p)).count());
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        self.hereditary_from(&order, 0, &mut chosen, &mut out);
        for set in &mut out {
            set.sort();
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    fn hereditary_from(&self, order: &[PrimeId], at: usize, chosen: &mut Vec<PrimeId>, out: &mut Vec<Vec<PrimeId>>) {
        if at == order.len() {
            out.push(chosen.clone());
            return;
        }
        let p = order[at];
        self.hereditary_from(order, at + 1, chosen, out);
        let below_chosen = self.prime_ids().all(|q| q == p || !self.leq(q, p) || chosen.contains(&q));
        if below_chosen {
            chosen.push(p);
            self.hereditary_from(order, at + 1, chosen, out);
            chosen.pop();
        }
    }

    /// The defining relations of `M(E, C)`: one per vertex and class.
    pub fn monoid_presentation(&self) -> Presentation {
        let n = self.vertices.len();
        let mut relations = Vec::new();
        for v in self.vertex_ids() {
            let p = self.prime_of(v);
            match self.kind(p) {
                PrimeKind::Free => {
                    for (i, class) in self.prime(p).classes.iter().enumerate() {
                        let mut rhs = MonElem::unit(n, v);
                        for e in class {
                            rhs.add_unit(self.range(*e));
                        }
                        relations.push(Relation { vertex: v, class: RelationClass::Free(i as u32 + 1), rhs });
                    }
                }
                PrimeKind::Regular => {
                    let mut rhs = MonElem::zero(n);
                    for e in self.out_edges(v) {
                        rhs.add_unit(self.range(*e));
                    }
                    relations.push(Relation { vertex: v, class: RelationClass::Regular, rhs });
                }
            }
        }
        Presentation { vertex_count: n, relations }
    }
}

impl fmt::Display for PrimeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(kind_word(*self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn g1() -> SeparatedGraph {
        let mut b = GraphBuilder::new("g1");
        b.free_prime("q1", 0).unwrap();
        b.free_prime("q2", 0).unwrap();
        b.free_prime("p", 2).unwrap();
        b.free_class("p", 1, &["q1"]).unwrap();
        b.free_class("p", 2, &["q2"]).unwrap();
        b.build().unwrap()
    }

    fn g3() -> SeparatedGraph {
        let mut b = GraphBuilder::new("g3");
        b.regular_prime("r").unwrap();
        b.vertex("r", "w").unwrap();
        b.edge("r", "f1", "w", "w").unwrap();
        b.edge("r", "f2", "w", "w").unwrap();
        b.free_prime("p", 1).unwrap();
        b.free_class("p", 1, &["w"]).unwrap();
        b.build().unwrap()
    }

    #[test]
    fn counts_match_definition() {
        let g = g1();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges().len(), 4);
        assert!(g.validate().is_empty());
    }

    #[test]
    fn order_is_reachability() {
        let g = g3();
        let p = g.prime_by_name("p").unwrap();
        let r = g.prime_by_name("r").unwrap();
        assert!(g.leq(r, p));
        assert!(!g.leq(p, r));
        assert!(g.leq(p, p));
        let g = g1();
        let q1 = g.prime_by_name("q1").unwrap();
        let q2 = g.prime_by_name("q2").unwrap();
        assert!(!g.leq(q1, q2));
    }

    #[test]
    fn hereditary_sets_of_g1() {
        let g = g1();
        let sets = g.hereditary_subsets();
        assert_eq!(sets.len(), 5);
        assert!(sets[0].is_empty());
        assert_eq!(sets[4].len(), 3);
    }

    #[test]
    fn single_internal_edge_is_reported() {
        let mut b = GraphBuilder::new("bad");
        b.regular_prime("r").unwrap();
        b.vertex("r", "w").unwrap();
        b.edge("r", "f1", "w", "w").unwrap();
        let g = b.build().unwrap();
        assert_eq!(g.validate(), [Violation::LowOutDegree { vertex: "w".into(), internal: 1 }]);
    }

    #[test]
    fn empty_class_makes_free_prime_minimal() {
        let mut b = GraphBuilder::new("bad");
        b.free_prime("p", 1).unwrap();
        b.free_class("p", 1, &[]).unwrap();
        let g = b.build().unwrap();
        let v = g.validate();
        assert!(v.contains(&Violation::EmptyClass { prime: "p".into(), index: 1 }));
        assert!(v.contains(&Violation::MinimalWithLoops { prime: "p".into() }));
    }

    #[test]
    fn upward_connector_merges_components() {
        let mut b = GraphBuilder::new("bad");
        b.regular_prime("r").unwrap();
        b.vertex("r", "w").unwrap();
        b.edge("r", "f1", "w", "w").unwrap();
        b.edge("r", "f2", "w", "w").unwrap();
        b.connector("r", "c", "w", "p").unwrap();
        b.free_prime("p", 1).unwrap();
        b.free_class("p", 1, &["w"]).unwrap();
        let g = b.build().unwrap();
        let v = g.validate();
        assert!(v.iter().any(|x| matches!(x, Violation::ConnectorNotDescending { .. })));
        assert!(v.iter().any(|x| matches!(x, Violation::ComponentMismatch { .. })));
    }

    #[test]
    fn dangling_and_duplicate_names() {
        let mut b = GraphBuilder::new("bad");
        b.free_prime("p", 1).unwrap();
        b.free_class("p", 1, &["nowhere"]).unwrap();
        assert!(matches!(b.build(), Err(GraphError::UnknownVertex { .. })));
        assert!(matches!(b.free_prime("p", 0), Err(GraphError::Duplicate { .. })));
    }

    #[test]
    fn presentation_of_g1() {
        let g = g1();
        let pres = g.monoid_presentation();
        assert_eq!(pres.relations.len(), 2);
        let p = g.vertex_by_name("p").unwrap();
        let q1 = g.vertex_by_name("q1").unwrap();
        let r = &pres.relations[0];
        assert_eq!(r.vertex, p);
        assert_eq!(r.rhs.get(p), 1);
        assert_eq!(r.rhs.get(q1), 1);
    }
}
