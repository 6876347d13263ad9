//! The commutative monoid `M(E, C)`, a bounded word problem and refinement
//! witnesses.
//!
//! Elements are vectors over the vertex set. The congruence is explored by
//! breadth-first search over vectors with a weight cap, so every answer is
//! either proved (`Yes` with a rewrite path, `No` after exhausting a whole
//! class) or `Unknown`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{PrimeKind, SeparatedGraph, VertexId};
use crate::lattice::{self, CompactOpen, EPath, LatticeError, Tail};
use crate::semigroup::{self, Body, Element, Monomial};
use crate::seq::SparseSeq;

/// A vector `Σ n_v a_v` with nonnegative entries.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonElem(pub Vec<u32>);

impl MonElem {
    pub fn zero(n: usize) -> Self {
        MonElem(vec![0; n])
    }

    pub fn unit(n: usize, v: VertexId) -> Self {
        let mut m = MonElem::zero(n);
        m.add_unit(v);
        m
    }

    pub fn add_unit(&mut self, v: VertexId) {
        self.0[v.index()] += 1;
    }

    pub fn get(&self, v: VertexId) -> u32 {
        self.0[v.index()]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| *x == 0)
    }

    pub fn add(&self, other: &MonElem) -> MonElem {
        MonElem(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, n: u32) -> MonElem {
        MonElem(self.0.iter().map(|a| a * n).collect())
    }

    /// Componentwise `self ≥ other`.
    pub fn dominates(&self, other: &MonElem) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// `self - other`, defined when `self` dominates `other`.
    pub fn checked_sub(&self, other: &MonElem) -> Option<MonElem> {
        self.dominates(other).then(|| MonElem(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn min(&self, other: &MonElem) -> MonElem {
        MonElem(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }
}

/// Which family a defining relation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationClass {
    /// `a_v = a_v + Σ_{e∈X_i} a_{r(e)}` at a free vertex.
    Free(u32),
    /// `a_v = Σ_{s(e)=v} a_{r(e)}` at a regular vertex.
    Regular,
}

/// One defining relation `a_vertex = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub vertex: VertexId,
    pub class: RelationClass,
    pub rhs: MonElem,
}

impl Relation {
    pub fn lhs(&self, n: usize) -> MonElem {
        MonElem::unit(n, self.vertex)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub vertex_count: usize,
    pub relations: Vec<Relation>,
}

/// Search limits: explored states per query and maximal vector weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_states: usize,
    pub max_weight: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_states: 100_000, max_weight: 40 }
    }
}

/// A three-valued answer; `Yes` carries its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision<T> {
    Yes(T),
    No,
    Unknown,
}

impl<T> Decision<T> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn yes(self) -> Option<T> {
        match self {
            Decision::Yes(t) => Some(t),
            _ => None,
        }
    }

    pub fn word(&self) -> &'static str {
        match self {
            Decision::Yes(_) => "Yes",
            Decision::No => "No",
            Decision::Unknown => "Unknown",
        }
    }
}

/// One application of a relation: forward replaces `a_v` by the right side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rewrite {
    pub relation: usize,
    pub forward: bool,
}

/// `states[0] → states[1] → …`, where step `i` turns `states[i]` into
/// `states[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewritePath {
    pub states: Vec<MonElem>,
    pub steps: Vec<Rewrite>,
}

impl RewritePath {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl Presentation {
    /// All single rewrites out of `x`, including those above the weight cap.
    pub fn neighbours(&self, x: &MonElem) -> Vec<(Rewrite, MonElem)> {
        let mut out = Vec::new();
        for (idx, rel) in self.relations.iter().enumerate() {
            let lhs = rel.lhs(self.vertex_count);
            if rel.rhs == lhs {
                continue;
            }
            if let Some(rest) = x.checked_sub(&lhs) {
                out.push((Rewrite { relation: idx, forward: true }, rest.add(&rel.rhs)));
            }
            if let Some(rest) = x.checked_sub(&rel.rhs) {
                out.push((Rewrite { relation: idx, forward: false }, rest.add(&lhs)));
            }
        }
        out
    }

    /// Applies one rewrite; `None` when it does not fit.
    pub fn apply(&self, x: &MonElem, step: Rewrite) -> Option<MonElem> {
        let rel = &self.relations[step.relation];
        let lhs = rel.lhs(self.vertex_count);
        let (from, to) = if step.forward { (&lhs, &rel.rhs) } else { (&rel.rhs, &lhs) };
        x.checked_sub(from).map(|rest| rest.add(to))
    }

    /// The congruence class of `x` below the weight cap; the flag is true when
    /// no neighbour was cut off, so the set is the whole class.
    pub fn class_of(&self, x: &MonElem, budget: Budget) -> (BTreeSet<MonElem>, bool) {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        let mut complete = true;
        seen.insert(x.clone());
        queue.push_back(x.clone());
        while let Some(cur) = queue.pop_front() {
            for (_, next) in self.neighbours(&cur) {
                if seen.contains(&next) {
                    continue;
                }
                if next.weight() > budget.max_weight || seen.len() >= budget.max_states {
                    complete = false;
                    continue;
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
        (seen, complete)
    }

    /// Bounded word problem for `x = y` in `M(E, C)`.
    ///
    /// `No` is returned as soon as one side's class is enumerated completely
    /// without meeting the other side.
    pub fn mon_eq(&self, x: &MonElem, y: &MonElem, budget: Budget) -> Decision<RewritePath> {
        if x == y {
            return Decision::Yes(RewritePath { states: vec![x.clone()], steps: Vec::new() });
        }
        let mut sides = [Side::new(x), Side::new(y)];
        loop {
            let turn = match (sides[0].frontier.is_empty(), sides[1].frontier.is_empty()) {
                (true, _) | (_, true) => {
                    let exhausted = (sides[0].frontier.is_empty() && sides[0].complete)
                        || (sides[1].frontier.is_empty() && sides[1].complete);
                    return if exhausted { Decision::No } else { Decision::Unknown };
                }
                _ => usize::from(sides[1].frontier.len() < sides[0].frontier.len()),
            };
            let layer = core::mem::take(&mut sides[turn].frontier);
            for cur in layer {
                for (step, next) in self.neighbours(&cur) {
                    if sides[turn].parent.contains_key(&next) {
                        continue;
                    }
                    if next.weight() > budget.max_weight {
                        sides[turn].complete = false;
                        continue;
                    }
                    if sides[0].parent.len() + sides[1].parent.len() >= budget.max_states {
                        return Decision::Unknown;
                    }
                    sides[turn].parent.insert(next.clone(), Some((cur.clone(), step)));
                    if sides[1 - turn].parent.contains_key(&next) {
                        return Decision::Yes(join_paths(&sides[0], &sides[1], &next));
                    }
                    sides[turn].frontier.push(next);
                }
            }
        }
    }

    /// Searches `z` with `x + z = y`.
    ///
    /// The class of `y` is scanned for a vector dominating `x`; `No` when the
    /// class was enumerated completely and none does.
    pub fn mon_leq(&self, x: &MonElem, y: &MonElem, budget: Budget) -> Decision<MonElem> {
        let (class, complete) = self.class_of(y, budget);
        let mut best: Option<MonElem> = None;
        for w in &class {
            if let Some(z) = w.checked_sub(x) {
                if best.as_ref().is_none_or(|b| (z.weight(), &z) < (b.weight(), b)) {
                    best = Some(z);
                }
            }
        }
        match best {
            Some(z) => Decision::Yes(z),
            None if complete => Decision::No,
            None => Decision::Unknown,
        }
    }

    /// A refinement `(w, x, y, z)` of `a + b = c + d`.
    ///
    /// Looks for representatives `a' + b' = c' + d'` as plain vectors with
    /// growing weight caps, then splits componentwise.
    pub fn refinement_witness(
        &self,
        a: &MonElem,
        b: &MonElem,
        c: &MonElem,
        d: &MonElem,
        budget: Budget,
    ) -> Decision<Refinement> {
        let start = a.add(b).weight().max(c.add(d).weight());
        let mut cap = start;
        loop {
            let local = Budget { max_states: budget.max_states, max_weight: cap };
            let class = |m: &MonElem| self.class_of(m, local);
            let ((ca, fa), (cb, fb), (cc, fc), (cd, fd)) = (class(a), class(b), class(c), class(d));
            let mut sums: BTreeMap<MonElem, (MonElem, MonElem)> = BTreeMap::new();
            for x in &ca {
                for y in &cb {
                    sums.entry(x.add(y)).or_insert_with(|| (x.clone(), y.clone()));
                }
            }
            for c1 in &cc {
                for d1 in &cd {
                    if let Some((a1, _)) = sums.get(&c1.add(d1)) {
                        return Decision::Yes(Refinement::split(a1, c1, d1));
                    }
                }
            }
            if fa && fb && fc && fd {
                return Decision::No;
            }
            if cap >= budget.max_weight {
                return Decision::Unknown;
            }
            cap = (cap + 2).min(budget.max_weight);
        }
    }
}

/// `a = w + x`, `b = y + z`, `c = w + y`, `d = x + z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refinement {
    pub w: MonElem,
    pub x: MonElem,
    pub y: MonElem,
    pub z: MonElem,
}

impl Refinement {
    /// Splits vector representatives with `a + b = c + d`.
    fn split(a: &MonElem, c: &MonElem, d: &MonElem) -> Refinement {
        let w = a.min(c);
        let x = a.checked_sub(&w).expect("min is dominated");
        let y = c.checked_sub(&w).expect("min is dominated");
        let z = d.checked_sub(&x).expect("d dominates a - c");
        Refinement { w, x, y, z }
    }
}

/// The vertex `v` with `[Z(μ)] = [Z(v)]`: the free vertex of the end prime,
/// or the end of the regular tail.
pub fn vertex_of_epath(g: &SeparatedGraph, mu: &EPath) -> VertexId {
    mu.end(g)
}

pub fn vertex_of_idempotent(g: &SeparatedGraph, e: &Element) -> Result<VertexId, LatticeError> {
    Ok(vertex_of_epath(g, &lattice::epath_of(e)?))
}

/// `Σ a_v` over the cylinders of `A`.
pub fn typ_of(g: &SeparatedGraph, set: &CompactOpen) -> MonElem {
    let mut out = MonElem::zero(g.vertex_count());
    for c in set.cylinders() {
        out.add_unit(vertex_of_epath(g, c));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoidError {
    VertexMismatch,
    NotIdempotent,
    /// A rewrite step did not find a cylinder at the vertex it needs.
    Replay,
    /// The assembled certificate failed the partition checks.
    Verification,
}

impl fmt::Display for MonoidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            MonoidError::VertexMismatch => "the idempotents sit over different vertices",
            MonoidError::NotIdempotent => "not a nonzero idempotent",
            MonoidError::Replay => "the rewrite path could not be replayed on cylinders",
            MonoidError::Verification => "the certificate does not partition both sets",
        };
        f.write_str(msg)
    }
}

impl core::error::Error for MonoidError {}

/// An element `s` with `s*s = e(ν)` and `ss* = e(μ)`.
pub fn connect_epaths(g: &SeparatedGraph, mu: &EPath, nu: &EPath) -> Result<Element, MonoidError> {
    if vertex_of_epath(g, mu) != vertex_of_epath(g, nu) {
        return Err(MonoidError::VertexMismatch);
    }
    let body = match (&mu.tail, &nu.tail) {
        (Tail::Free(k1), Tail::Free(k2)) => Body::Free { k: k1.clone(), l: k2.clone() },
        (Tail::Regular(l1), Tail::Regular(l2)) => Body::Regular { left: l1.clone(), right: l2.clone() },
        _ => return Err(MonoidError::VertexMismatch),
    };
    let prime = g.prime_of(vertex_of_epath(g, mu));
    let mid = Monomial { prime, t: SparseSeq::new(), body };
    Ok(Element::triple(mu.prefix.clone(), mid, nu.prefix.clone()))
}

/// `s` with `ss* = e1` and `s*s = e2`.
pub fn connect_idempotents(g: &SeparatedGraph, e1: &Element, e2: &Element) -> Result<Element, MonoidError> {
    let mu = lattice::epath_of(e1).map_err(|_| MonoidError::NotIdempotent)?;
    let nu = lattice::epath_of(e2).map_err(|_| MonoidError::NotIdempotent)?;
    connect_epaths(g, &mu, &nu)
}

/// Elements `s_k` whose sources `Z(s_k*s_k)` partition `A` and whose ranges
/// `Z(s_k s_k*)` partition `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquidecompCertificate {
    pub elements: Vec<Element>,
}

impl EquidecompCertificate {
    pub fn sources(&self, g: &SeparatedGraph) -> Vec<EPath> {
        self.elements.iter().filter_map(|s| lattice::epath_of(&semigroup::mul(g, &s.star(), s)).ok()).collect()
    }

    pub fn ranges(&self, g: &SeparatedGraph) -> Vec<EPath> {
        self.elements.iter().filter_map(|s| lattice::epath_of(&semigroup::mul(g, s, &s.star())).ok()).collect()
    }

    /// Both families are pairwise disjoint with the right unions.
    pub fn verify(&self, g: &SeparatedGraph, a: &CompactOpen, b: &CompactOpen) -> bool {
        let partitions = |cyls: Vec<EPath>, target: &CompactOpen| {
            if cyls.len() != self.elements.len() {
                return false;
            }
            for (i, x) in cyls.iter().enumerate() {
                if cyls[i + 1..].iter().any(|y| lattice::meet(g, x, y).is_some()) {
                    return false;
                }
            }
            CompactOpen::from_disjoint(cyls).same_set(g, target)
        };
        partitions(self.sources(g), a) && partitions(self.ranges(g), b)
    }
}

/// A cylinder together with pieces mapping parts of `A` onto it.
struct Entry {
    cylinder: EPath,
    pieces: Vec<Element>,
}

fn take_entry(g: &SeparatedGraph, entries: &mut Vec<Entry>, v: VertexId, prefer: Option<&EPath>) -> Option<Entry> {
    let pos = prefer
        .and_then(|c| entries.iter().position(|e| e.cylinder == *c))
        .or_else(|| entries.iter().position(|e| vertex_of_epath(g, &e.cylinder) == v))?;
    Some(entries.remove(pos))
}

fn restrict(g: &SeparatedGraph, by: &Element, pieces: &[Element]) -> Vec<Element> {
    pieces.iter().map(|s| semigroup::mul(g, by, s)).filter(|s| !s.is_zero()).collect()
}

/// Realises `typ(A) = typ(B)` by partial bijections between cylinders.
///
/// Each relation on the rewrite path becomes one simple expansion: forward
/// steps expand a current cylinder, backward steps expand a fresh `Z(v)` and
/// map the consumed cylinders onto its children. The final cylinders are
/// matched with those of `B` vertex by vertex.
pub fn equidecompose(
    g: &SeparatedGraph,
    a: &CompactOpen,
    b: &CompactOpen,
    budget: Budget,
) -> Result<Decision<EquidecompCertificate>, MonoidError> {
    let pres = g.monoid_presentation();
    let path = match pres.mon_eq(&typ_of(g, a), &typ_of(g, b), budget) {
        Decision::Yes(p) => p,
        Decision::No => return Ok(Decision::No),
        Decision::Unknown => return Ok(Decision::Unknown),
    };
    let mut entries: Vec<Entry> = a
        .cylinders()
        .iter()
        .map(|c| Entry { cylinder: c.clone(), pieces: alloc::vec![lattice::idem_of(g, c)] })
        .collect();
    for step in &path.steps {
        let rel = &pres.relations[step.relation];
        let choice = match rel.class {
            RelationClass::Free(i) => Some(i),
            RelationClass::Regular => None,
        };
        if step.forward {
            let entry = take_entry(g, &mut entries, rel.vertex, None).ok_or(MonoidError::Replay)?;
            let children = lattice::simple_expand(g, &entry.cylinder, choice).map_err(|_| MonoidError::Replay)?;
            for c in children {
                let pieces = restrict(g, &lattice::idem_of(g, &c), &entry.pieces);
                entries.push(Entry { cylinder: c, pieces });
            }
        } else {
            let top = EPath::vertex(g, rel.vertex);
            let children = lattice::simple_expand(g, &top, choice).map_err(|_| MonoidError::Replay)?;
            let mut pieces = Vec::new();
            for c in &children {
                let used = take_entry(g, &mut entries, vertex_of_epath(g, c), Some(c)).ok_or(MonoidError::Replay)?;
                let t = connect_epaths(g, c, &used.cylinder)?;
                pieces.extend(restrict(g, &t, &used.pieces));
            }
            entries.push(Entry { cylinder: top, pieces });
        }
    }
    let mut elements = Vec::new();
    for target in b.cylinders() {
        let used =
            take_entry(g, &mut entries, vertex_of_epath(g, target), Some(target)).ok_or(MonoidError::Replay)?;
        let t = connect_epaths(g, target, &used.cylinder)?;
        elements.extend(restrict(g, &t, &used.pieces));
    }
    if !entries.is_empty() {
        return Err(MonoidError::Replay);
    }
    let cert = EquidecompCertificate { elements };
    if !cert.verify(g, a, b) {
        return Err(MonoidError::Verification);
    }
    Ok(Decision::Yes(cert))
}

/// Kind of the generator `a_v` with a consistency flag: a regular `a_v`
/// should satisfy `2a_v ≤ a_v`, a free one should not.
pub fn classify_prime_generator(g: &SeparatedGraph, v: VertexId, budget: Budget) -> (PrimeKind, bool) {
    let kind = g.kind_of_vertex(v);
    let unit = MonElem::unit(g.vertex_count(), v);
    let witness = g.monoid_presentation().mon_leq(&unit.scale(2), &unit, budget).is_yes();
    let consistent = match kind {
        PrimeKind::Regular => witness,
        PrimeKind::Free => !witness,
    };
    (kind, consistent)
}

struct Side {
    parent: BTreeMap<MonElem, Option<(MonElem, Rewrite)>>,
    frontier: Vec<MonElem>,
    complete: bool,
}

impl Side {
    fn new(start: &MonElem) -> Self {
        let mut parent = BTreeMap::new();
        parent.insert(start.clone(), None);
        Side { parent, frontier: vec![start.clone()], complete: true }
    }

    /// States from the root to `m` and the rewrites between them.
    fn trace(&self, m: &MonElem) -> (Vec<MonElem>, Vec<Rewrite>) {
        let mut states = vec![m.clone()];
        let mut steps = Vec::new();
        let mut cur = m.clone();
        while let Some(Some((prev, step))) = self.parent.get(&cur) {
            steps.push(*step);
            states.push(prev.clone());
            cur = prev.clone();
        }
        states.reverse();
        steps.reverse();
        (states, steps)
    }
}

fn join_paths(left: &Side, right: &Side, meet: &MonElem) -> RewritePath {
    let (mut states, mut steps) = left.trace(meet);
    let (back_states, back_steps) = right.trace(meet);
    states.extend(back_states.into_iter().rev().skip(1));
    steps.extend(back_steps.into_iter().rev().map(|s| Rewrite { relation: s.relation, forward: !s.forward }));
    RewritePath { states, steps }
}

impl fmt::Display for Rewrite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = if self.forward { "->" } else { "<-" };
        write!(f, "r{}{dir}", self.relation)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::tests::{alpha, beta, g1, g2, g3, named};

    fn v(g: &crate::SeparatedGraph, name: &str) -> VertexId {
        g.vertex_by_name(name).unwrap()
    }

    fn unit(g: &crate::SeparatedGraph, name: &str) -> MonElem {
        MonElem::unit(g.vertex_count(), v(g, name))
    }

    fn check_path(pres: &Presentation, path: &RewritePath) {
        for (i, step) in path.steps.iter().enumerate() {
            assert_eq!(pres.apply(&path.states[i], *step).as_ref(), Some(&path.states[i + 1]));
        }
    }

    #[test]
    fn free_prime_absorbs_its_targets() {
        let g = g1();
        let pres = g.monoid_presentation();
        let p = unit(&g, "p");
        let q1 = unit(&g, "q1");
        let path = pres.mon_eq(&p, &p.add(&q1), Budget::default()).yes().unwrap();
        assert_eq!(path.len(), 1);
        check_path(&pres, &path);
        assert_eq!(pres.mon_eq(&q1, &unit(&g, "q2"), Budget::default()), Decision::No);
    }

    #[test]
    fn regular_vertex_is_properly_infinite() {
        let g = g2();
        let pres = g.monoid_presentation();
        let w = unit(&g, "w");
        let path = pres.mon_eq(&w, &w.scale(3), Budget::default()).yes().unwrap();
        assert_eq!(path.len(), 2);
        check_path(&pres, &path);
        assert_eq!(pres.mon_leq(&w.scale(2), &w, Budget::default()).yes(), Some(MonElem::zero(1)));
    }

    #[test]
    fn leq_finds_absorbed_summand() {
        let g = g3();
        let pres = g.monoid_presentation();
        let z = pres.mon_leq(&unit(&g, "w"), &unit(&g, "p"), Budget::default()).yes().unwrap();
        assert_eq!(z, unit(&g, "p"));
    }

    #[test]
    fn refinement_of_trivial_split() {
        let g = g1();
        let pres = g.monoid_presentation();
        let (p, q1) = (unit(&g, "p"), unit(&g, "q1"));
        let r = pres.refinement_witness(&p, &q1, &p, &q1, Budget::default()).yes().unwrap();
        let b = Budget::default();
        assert!(pres.mon_eq(&r.w.add(&r.x), &p, b).is_yes());
        assert!(pres.mon_eq(&r.y.add(&r.z), &q1, b).is_yes());
        assert!(pres.mon_eq(&r.w.add(&r.y), &p, b).is_yes());
        assert!(pres.mon_eq(&r.x.add(&r.z), &q1, b).is_yes());
    }

    #[test]
    fn single_free_vertex_is_cancellative() {
        let mut b = crate::graph::GraphBuilder::new("g0");
        b.free_prime("p", 0).unwrap();
        let g = b.build().unwrap();
        let pres = g.monoid_presentation();
        let p = unit(&g, "p");
        assert_eq!(pres.mon_eq(&p.scale(2), &p.scale(3), Budget::default()), Decision::No);
    }

    fn proj(g: &crate::SeparatedGraph, s: &Element) -> EPath {
        lattice::epath_of(&semigroup::mul(g, s, &s.star())).unwrap()
    }

    #[test]
    fn vertices_of_idempotents() {
        let g = g3();
        let a = alpha(&g, "p", 1);
        let b = beta(&g, "p", 1, 1);
        assert_eq!(vertex_of_epath(&g, &proj(&g, &a)), v(&g, "p"));
        assert_eq!(vertex_of_epath(&g, &proj(&g, &b)), v(&g, "w"));
        let set = CompactOpen::from_disjoint(alloc::vec![proj(&g, &a), proj(&g, &b)]);
        assert_eq!(typ_of(&g, &set), unit(&g, "p").add(&unit(&g, "w")));
        assert!(typ_of(&g, &CompactOpen::empty()).is_zero());
    }

    #[test]
    fn connecting_elements() {
        let g = g3();
        let a = alpha(&g, "p", 1);
        let p = semigroup::vertex(&g, v(&g, "p"));
        let aa = semigroup::mul(&g, &a, &a.star());
        assert_eq!(connect_idempotents(&g, &aa, &p).unwrap(), a);
        let g = g2();
        let (f1, f2) = (named(&g, "f1"), named(&g, "f2"));
        let s = connect_idempotents(&g, &semigroup::mul(&g, &f1, &f1.star()), &semigroup::mul(&g, &f2, &f2.star())).unwrap();
        assert_eq!(s, semigroup::mul(&g, &f1, &f2.star()));
    }

    #[test]
    fn certificates_from_examples() {
        let g = g3();
        let a = alpha(&g, "p", 1);
        let top = CompactOpen::cylinder(EPath::vertex(&g, v(&g, "p")));
        let low = CompactOpen::cylinder(proj(&g, &a));
        let cert = equidecompose(&g, &top, &low, Budget::default()).unwrap().yes().unwrap();
        assert_eq!(cert.elements, alloc::vec![a]);

        let g = g2();
        let w = CompactOpen::cylinder(EPath::vertex(&g, v(&g, "w")));
        let (f1, f2) = (named(&g, "f1"), named(&g, "f2"));
        let split = CompactOpen::from_disjoint(alloc::vec![proj(&g, &f1), proj(&g, &f2)]);
        let cert = equidecompose(&g, &w, &split, Budget::default()).unwrap().yes().unwrap();
        assert_eq!(cert.elements.len(), 2);
        assert!(cert.verify(&g, &w, &split));
        let back = equidecompose(&g, &split, &w, Budget::default()).unwrap().yes().unwrap();
        assert!(back.verify(&g, &split, &w));
    }

    #[test]
    fn generator_kinds() {
        let g = g2();
        assert_eq!(classify_prime_generator(&g, v(&g, "w"), Budget::default()), (PrimeKind::Regular, true));
        let g = g3();
        assert_eq!(classify_prime_generator(&g, v(&g, "p"), Budget::default()), (PrimeKind::Free, true));
    }
}
