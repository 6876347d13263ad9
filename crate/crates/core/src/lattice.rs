//! The semilattice of idempotents, cylinder sets and expansions.
//!
//! Every nonzero idempotent is `e(μ) = γ·m·γ*` for a unique [`EPath`] `μ`, and
//! `Z(μ)` is the set of tight points lying over it. A [`CompactOpen`] is a
//! finite disjoint union of such cylinders; differences are computed exactly
//! by splitting along the first step where two E-paths part ways.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{EdgeKind, PrimeKind, SeparatedGraph, VertexId};
use crate::semigroup::{self, Body, CPath, Element, Monomial, Path, SemigroupError, Step};
use crate::seq::SparseSeq;

/// The finite part of an E-path inside its last component.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tail {
    /// Exponents `k_1, …, k_{k(p)}` at a free prime.
    Free(Vec<u32>),
    /// A finite path inside a regular component.
    Regular(Path),
}

/// An E-path: a c-path prefix followed by a finite tail.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EPath {
    pub prefix: CPath,
    pub tail: Tail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    NotIdempotent,
    BadPosition(usize),
    BadChoice,
    /// A free prime without loops has no simple expansion.
    NotExpandable,
    NotACover,
    NotOrthogonal,
    NotJoinable,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::NotIdempotent => f.write_str("not a nonzero idempotent"),
            LatticeError::BadPosition(p) => write!(f, "no cylinder at position {p}"),
            LatticeError::BadChoice => f.write_str("invalid expansion choice"),
            LatticeError::NotExpandable => f.write_str("a minimal free vertex has no expansion"),
            LatticeError::NotACover => f.write_str("the family does not cover the idempotent"),
            LatticeError::NotOrthogonal => f.write_str("the family is not orthogonal"),
            LatticeError::NotJoinable => f.write_str("join needs two free tails over the same prefix"),
        }
    }
}

impl core::error::Error for LatticeError {}

impl From<SemigroupError> for LatticeError {
    fn from(_: SemigroupError) -> Self {
        LatticeError::NotIdempotent
    }
}

/// The empty tail at `v`.
pub fn trivial_tail(g: &SeparatedGraph, v: VertexId) -> Tail {
    let p = g.prime_of(v);
    match g.kind(p) {
        PrimeKind::Free => Tail::Free(vec![0; g.loops(p) as usize]),
        PrimeKind::Regular => Tail::Regular(Path::trivial(v)),
    }
}

impl EPath {
    /// The E-path of the vertex idempotent `v`.
    pub fn vertex(g: &SeparatedGraph, v: VertexId) -> EPath {
        EPath { prefix: CPath::trivial(v), tail: trivial_tail(g, v) }
    }

    /// `γ` followed by the empty tail.
    pub fn at_prefix(g: &SeparatedGraph, prefix: CPath) -> EPath {
        let tail = trivial_tail(g, prefix.range(g));
        EPath { prefix, tail }
    }

    pub fn start(&self) -> VertexId {
        self.prefix.start
    }

    pub fn depth(&self) -> usize {
        self.prefix.depth()
    }

    /// The vertex reached by the whole E-path.
    pub fn end(&self, g: &SeparatedGraph) -> VertexId {
        match &self.tail {
            Tail::Free(_) => self.prefix.range(g),
            Tail::Regular(p) => p.range(g),
        }
    }

    pub fn is_valid(&self, g: &SeparatedGraph) -> bool {
        if !self.prefix.is_valid(g) {
            return false;
        }
        let r = self.prefix.range(g);
        let p = g.prime_of(r);
        match &self.tail {
            Tail::Free(k) => g.kind(p) == PrimeKind::Free && k.len() == g.loops(p) as usize,
            Tail::Regular(path) => path.start == r && path.is_valid(g),
        }
    }

    fn canonical_key(&self) -> (usize, &CPath, &Tail) {
        (self.depth(), &self.prefix, &self.tail)
    }
}

/// The idempotent `e(μ)`.
pub fn idem_of(g: &SeparatedGraph, mu: &EPath) -> Element {
    let r = mu.prefix.range(g);
    let body = match &mu.tail {
        Tail::Free(k) => Body::Free { k: k.clone(), l: k.clone() },
        Tail::Regular(p) => Body::Regular { left: p.clone(), right: p.clone() },
    };
    let mid = Monomial { prime: g.prime_of(r), t: SparseSeq::new(), body };
    Element::triple(mu.prefix.clone(), mid, mu.prefix.clone())
}

/// The E-path of a nonzero idempotent.
pub fn epath_of(e: &Element) -> Result<EPath, LatticeError> {
    if !e.is_idempotent() {
        return Err(LatticeError::NotIdempotent);
    }
    let Element::Triple { left, mid, .. } = e else { return Err(LatticeError::NotIdempotent) };
    let tail = match &mid.body {
        Body::Free { k, .. } => Tail::Free(k.clone()),
        Body::Regular { left: p, .. } => Tail::Regular(p.clone()),
    };
    Ok(EPath { prefix: left.clone(), tail })
}

/// `e ≤ f` in the natural order.
pub fn nat_leq(g: &SeparatedGraph, e: &Element, f: &Element) -> bool {
    semigroup::mul(g, e, f) == *e
}

/// `e(μ)·e(ν)` as an E-path; `None` when the product is zero.
pub fn meet(g: &SeparatedGraph, mu: &EPath, nu: &EPath) -> Option<EPath> {
    let prod = semigroup::mul(g, &idem_of(g, mu), &idem_of(g, nu));
    epath_of(&prod).ok()
}

/// `Z(μ) ⊆ Z(ν)`.
pub fn leq(g: &SeparatedGraph, mu: &EPath, nu: &EPath) -> bool {
    meet(g, mu, nu).as_ref() == Some(mu)
}

/// The least upper bound of two free idempotents over the same prefix.
pub fn join_free(mu: &EPath, nu: &EPath) -> Result<EPath, LatticeError> {
    match (&mu.tail, &nu.tail) {
        (Tail::Free(a), Tail::Free(b)) if mu.prefix == nu.prefix => Ok(EPath {
            prefix: mu.prefix.clone(),
            tail: Tail::Free(a.iter().zip(b).map(|(x, y)| *x.min(y)).collect()),
        }),
        _ => Err(LatticeError::NotJoinable),
    }
}

/// Cylinders of paths leaving `γ·λ` through an out edge of `r(λ)` other than
/// `skip`.
fn regular_siblings(g: &SeparatedGraph, prefix: &CPath, lam: &Path, skip: Option<usize>, out: &mut Vec<EPath>) {
    let u = lam.range(g);
    for &z in g.out_edges(u) {
        if Some(z.index()) == skip {
            continue;
        }
        if g.edge(z).kind == EdgeKind::Internal {
            out.push(EPath { prefix: prefix.clone(), tail: Tail::Regular(lam.then(&[z])) });
        } else {
            let step = Step::Regular { path: lam.edges.clone(), connector: z };
            out.push(EPath::at_prefix(g, prefix.with_step(step)));
        }
    }
}

/// `Z(γ, k) ∖ Z(γ, k')` for `k ≤ k'` over one free prime.
fn free_band(g: &SeparatedGraph, prefix: &CPath, lo: &[u32], hi: &[u32], out: &mut Vec<EPath>) {
    let p = g.prime_of(prefix.range(g));
    for j in 0..lo.len() {
        for t in lo[j]..hi[j] {
            for s in 1..=g.slots(p, j as u32 + 1) {
                let step = Step::Free { prime: p, index: j as u32 + 1, power: t, slot: s };
                out.push(EPath::at_prefix(g, prefix.with_step(step)));
            }
        }
    }
}

/// `Z(μ) ∖ Z(ν)` for `ν < μ`, as disjoint cylinders.
fn diff_below(g: &SeparatedGraph, mu: &EPath, nu: &EPath, out: &mut Vec<EPath>) {
    if mu == nu {
        return;
    }
    let gamma = &mu.prefix;
    if nu.prefix == *gamma {
        match (&mu.tail, &nu.tail) {
            (Tail::Free(lo), Tail::Free(hi)) => free_band(g, gamma, lo, hi, out),
            (Tail::Regular(short), Tail::Regular(long)) => {
                for i in short.len()..long.len() {
                    let lam = Path { start: short.start, edges: long.edges[..i].to_vec() };
                    regular_siblings(g, gamma, &lam, Some(long.edges[i].index()), out);
                }
            }
            _ => unreachable!("comparable E-paths share the tail kind"),
        }
        return;
    }
    let next = &nu.prefix.steps[gamma.depth()];
    let cut = EPath::at_prefix(g, gamma.with_step(next.clone()));
    match (&mu.tail, next) {
        (Tail::Free(k), Step::Free { prime, index, power, slot }) => {
            let i = *index as usize - 1;
            let mut at = k.clone();
            at[i] = *power;
            free_band(g, gamma, k, &at, out);
            let mut above = at.clone();
            above[i] = power + 1;
            out.push(EPath { prefix: gamma.clone(), tail: Tail::Free(above) });
            for s in 1..=g.slots(*prime, *index) {
                if s != *slot {
                    let step = Step::Free { prime: *prime, index: *index, power: *power, slot: s };
                    out.push(EPath::at_prefix(g, gamma.with_step(step)));
                }
            }
        }
        (Tail::Regular(lam), Step::Regular { path, connector }) => {
            let rho = Path { start: lam.start, edges: path.clone() };
            diff_below(g, mu, &EPath { prefix: gamma.clone(), tail: Tail::Regular(rho.clone()) }, out);
            regular_siblings(g, gamma, &rho, Some(connector.index()), out);
        }
        _ => unreachable!("a comparable extension starts in the tail's component"),
    }
    diff_below(g, &cut, nu, out);
}

/// `Z(μ) ∖ Z(ν)` as disjoint cylinders.
pub fn difference(g: &SeparatedGraph, mu: &EPath, nu: &EPath) -> Vec<EPath> {
    match meet(g, mu, nu) {
        None => vec![mu.clone()],
        Some(rho) if rho == *mu => Vec::new(),
        Some(rho) => {
            let mut out = Vec::new();
            diff_below(g, mu, &rho, &mut out);
            out
        }
    }
}

/// A finite disjoint union of cylinders, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CompactOpen {
    cylinders: Vec<EPath>,
}

impl CompactOpen {
    pub fn empty() -> Self {
        CompactOpen { cylinders: Vec::new() }
    }

    pub fn cylinder(mu: EPath) -> Self {
        CompactOpen { cylinders: vec![mu] }
    }

    /// Wraps cylinders already known to be pairwise disjoint.
    pub fn from_disjoint(mut cylinders: Vec<EPath>) -> Self {
        cylinders.sort_by(|a, b| a.canonical_key().cmp(&b.canonical_key()));
        cylinders.dedup();
        CompactOpen { cylinders }
    }

    /// The union of arbitrary, possibly overlapping cylinders.
    pub fn union_of(g: &SeparatedGraph, cylinders: &[EPath]) -> Self {
        cylinders.iter().fold(CompactOpen::empty(), |acc, c| acc.union(g, &CompactOpen::cylinder(c.clone())))
    }

    pub fn cylinders(&self) -> &[EPath] {
        &self.cylinders
    }

    /// Every cylinder is nonempty, so this is emptiness of the set.
    pub fn is_empty(&self) -> bool {
        self.cylinders.is_empty()
    }

    pub fn subtract(&self, g: &SeparatedGraph, other: &CompactOpen) -> CompactOpen {
        let mut out = Vec::new();
        for a in &self.cylinders {
            let mut pieces = vec![a.clone()];
            for b in &other.cylinders {
                pieces = pieces.iter().flat_map(|x| difference(g, x, b)).collect();
                if pieces.is_empty() {
                    break;
                }
            }
            out.extend(pieces);
        }
        CompactOpen::from_disjoint(out)
    }

    pub fn intersect(&self, g: &SeparatedGraph, other: &CompactOpen) -> CompactOpen {
        let mut out = Vec::new();
        for a in &self.cylinders {
            for b in &other.cylinders {
                out.extend(meet(g, a, b));
            }
        }
        CompactOpen::from_disjoint(out)
    }

    pub fn union(&self, g: &SeparatedGraph, other: &CompactOpen) -> CompactOpen {
        let mut out = self.cylinders.clone();
        out.extend(other.subtract(g, self).cylinders);
        CompactOpen::from_disjoint(out)
    }

    /// Equality as sets of points.
    pub fn same_set(&self, g: &SeparatedGraph, other: &CompactOpen) -> bool {
        self.subtract(g, other).is_empty() && other.subtract(g, self).is_empty()
    }

    pub fn is_subset(&self, g: &SeparatedGraph, other: &CompactOpen) -> bool {
        self.subtract(g, other).is_empty()
    }

    pub fn is_disjoint(&self, g: &SeparatedGraph, other: &CompactOpen) -> bool {
        self.intersect(g, other).is_empty()
    }
}

/// One simple expansion of the entry at `position`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpandStep {
    pub position: usize,
    /// The loop index at a free prime; `None` at a regular one.
    pub choice: Option<u32>,
}

/// The children of one simple expansion, in a fixed order: at a free prime
/// the incremented exponent first, then one connector per slot; at a regular
/// prime one child per out edge of the tail's end.
pub fn simple_expand(g: &SeparatedGraph, mu: &EPath, choice: Option<u32>) -> Result<Vec<EPath>, LatticeError> {
    let mut out = Vec::new();
    match (&mu.tail, choice) {
        (Tail::Free(k), Some(j)) => {
            let p = g.prime_of(mu.prefix.range(g));
            if k.is_empty() {
                return Err(LatticeError::NotExpandable);
            }
            if j == 0 || j as usize > k.len() {
                return Err(LatticeError::BadChoice);
            }
            let mut up = k.clone();
            up[j as usize - 1] += 1;
            out.push(EPath { prefix: mu.prefix.clone(), tail: Tail::Free(up) });
            for s in 1..=g.slots(p, j) {
                let step = Step::Free { prime: p, index: j, power: k[j as usize - 1], slot: s };
                out.push(EPath::at_prefix(g, mu.prefix.with_step(step)));
            }
        }
        (Tail::Free(k), None) if k.is_empty() => return Err(LatticeError::NotExpandable),
        (Tail::Regular(lam), None) => regular_siblings(g, &mu.prefix, lam, None, &mut out),
        _ => return Err(LatticeError::BadChoice),
    }
    Ok(out)
}

/// Applies a script of simple expansions, splicing children in place.
pub fn expand(g: &SeparatedGraph, mu: &EPath, script: &[ExpandStep]) -> Result<Vec<EPath>, LatticeError> {
    let mut list = vec![mu.clone()];
    for step in script {
        let Some(target) = list.get(step.position) else { return Err(LatticeError::BadPosition(step.position)) };
        let children = simple_expand(g, target, step.choice)?;
        list.splice(step.position..=step.position, children);
    }
    Ok(list)
}

/// Pairwise orthogonal, below `μ`, and covering `Z(μ)`.
pub fn is_orthogonal_cover(g: &SeparatedGraph, mu: &EPath, family: &[EPath]) -> bool {
    for (i, a) in family.iter().enumerate() {
        if !leq(g, a, mu) || family[i + 1..].iter().any(|b| meet(g, a, b).is_some()) {
            return false;
        }
    }
    CompactOpen::cylinder(mu.clone()).subtract(g, &CompactOpen::from_disjoint(family.to_vec())).is_empty()
}

/// `⋃ Z(σ) ⊇ Z(μ)` with every `σ ≤ μ`.
pub fn is_cover(g: &SeparatedGraph, mu: &EPath, family: &[EPath]) -> bool {
    family.iter().all(|a| leq(g, a, mu))
        && CompactOpen::cylinder(mu.clone()).is_subset(g, &CompactOpen::union_of(g, family))
}

/// Turns a finite cover into an orthogonal one with the same union: drops the
/// smaller of a comparable pair and joins an overlapping free pair.
pub fn orthogonalize_cover(g: &SeparatedGraph, mu: &EPath, family: &[EPath]) -> Result<Vec<EPath>, LatticeError> {
    if !is_cover(g, mu, family) {
        return Err(LatticeError::NotACover);
    }
    let mut list = family.to_vec();
    list.sort();
    list.dedup();
    'outer: loop {
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                let Some(m) = meet(g, &list[i], &list[j]) else { continue };
                if m == list[i] {
                    list.remove(i);
                } else if m == list[j] {
                    list.remove(j);
                } else {
                    let joined = join_free(&list[i], &list[j])?;
                    list.remove(j);
                    list[i] = joined;
                }
                continue 'outer;
            }
        }
        return Ok(list);
    }
}

/// Index of the child of `simple_expand(μ, choice)` containing `σ ≤ μ`.
fn child_of(g: &SeparatedGraph, mu: &EPath, choice: Option<u32>, sigma: &EPath) -> Option<usize> {
    let depth = mu.depth();
    match (&mu.tail, choice) {
        (Tail::Free(k), Some(j)) => {
            if sigma.prefix == mu.prefix {
                return Some(0);
            }
            let Step::Free { index, power, slot, .. } = sigma.prefix.steps[depth] else { return None };
            if index != j || power > k[j as usize - 1] {
                Some(0)
            } else {
                Some(slot as usize)
            }
        }
        (Tail::Regular(lam), None) => {
            let next = if sigma.prefix == mu.prefix {
                let Tail::Regular(l) = &sigma.tail else { return None };
                *l.edges.get(lam.len())?
            } else {
                let Step::Regular { path, connector } = &sigma.prefix.steps[depth] else { return None };
                if path.len() == lam.len() {
                    *connector
                } else {
                    path[lam.len()]
                }
            };
            g.out_edges(lam.range(g)).iter().position(|z| *z == next)
        }
        _ => None,
    }
}

fn build_script(
    g: &SeparatedGraph,
    mu: &EPath,
    family: Vec<EPath>,
    position: usize,
    out: &mut Vec<ExpandStep>,
) -> Result<(), LatticeError> {
    if family.len() == 1 && family[0] == *mu {
        return Ok(());
    }
    let choice = match &mu.tail {
        Tail::Regular(_) => None,
        Tail::Free(k) => {
            let own = family.iter().find(|s| s.prefix == mu.prefix).ok_or(LatticeError::NotACover)?;
            let Tail::Free(l) = &own.tail else { return Err(LatticeError::NotACover) };
            let j = (0..k.len()).find(|j| l[*j] > k[*j]).ok_or(LatticeError::NotACover)?;
            Some(j as u32 + 1)
        }
    };
    let children = simple_expand(g, mu, choice)?;
    out.push(ExpandStep { position, choice });
    let mut parts: Vec<Vec<EPath>> = vec![Vec::new(); children.len()];
    for sigma in family {
        let c = child_of(g, mu, choice, &sigma).ok_or(LatticeError::NotACover)?;
        parts[c].push(sigma);
    }
    for (c, part) in parts.into_iter().enumerate().rev() {
        if part.is_empty() {
            return Err(LatticeError::NotACover);
        }
        build_script(g, &children[c], part, position + c, out)?;
    }
    Ok(())
}

/// An expansion script whose result is exactly `family`.
pub fn cover_to_expansion(g: &SeparatedGraph, mu: &EPath, family: &[EPath]) -> Result<Vec<ExpandStep>, LatticeError> {
    if !is_orthogonal_cover(g, mu, family) {
        return Err(LatticeError::NotACover);
    }
    let mut script = Vec::new();
    build_script(g, mu, family.to_vec(), 0, &mut script)?;
    let mut got = expand(g, mu, &script)?;
    let mut want = family.to_vec();
    got.sort();
    want.sort();
    if got != want {
        return Err(LatticeError::NotACover);
    }
    Ok(script)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::tests::{alpha, beta, g1, g2, g3, named};
    use crate::semigroup::mul;

    fn ep(e: &Element) -> EPath {
        epath_of(e).unwrap()
    }

    fn proj(g: &SeparatedGraph, s: &Element) -> EPath {
        ep(&mul(g, s, &s.star()))
    }

    fn vp(g: &SeparatedGraph, name: &str) -> EPath {
        EPath::vertex(g, g.vertex_by_name(name).unwrap())
    }

    #[test]
    fn round_trip_idempotents() {
        let g = g3();
        let a = alpha(&g, "p", 1);
        let e = mul(&g, &mul(&g, &a, &a), &mul(&g, &a, &a).star());
        let mu = ep(&e);
        assert_eq!(mu.tail, Tail::Free(vec![2]));
        assert_eq!(idem_of(&g, &mu), e);
        assert_eq!(epath_of(&a), Err(LatticeError::NotIdempotent));
    }

    #[test]
    fn meet_uses_max_exponent() {
        let g = g3();
        let a = alpha(&g, "p", 1);
        let aa = mul(&g, &a, &a);
        let e = proj(&g, &aa);
        let f = proj(&g, &a);
        assert_eq!(meet(&g, &e, &f), Some(e.clone()));
        assert!(leq(&g, &e, &f));
        let g2 = g2();
        assert_eq!(meet(&g2, &proj(&g2, &named(&g2, "f1")), &proj(&g2, &named(&g2, "f2"))), None);
    }

    #[test]
    fn join_takes_minimum() {
        let g = g1();
        let p = g.vertex_by_name("p").unwrap();
        let mk = |k: &[u32]| EPath { prefix: CPath::trivial(p), tail: Tail::Free(k.to_vec()) };
        assert_eq!(join_free(&mk(&[1, 4]), &mk(&[3, 2])), Ok(mk(&[1, 2])));
        let both = CompactOpen::union_of(&g, &[mk(&[1, 4]), mk(&[3, 2])]);
        assert!(both.same_set(&g, &CompactOpen::cylinder(mk(&[1, 2]))));
    }

    #[test]
    fn differences_from_examples() {
        let g = g3();
        let top = CompactOpen::cylinder(vp(&g, "p"));
        let aa = CompactOpen::cylinder(proj(&g, &alpha(&g, "p", 1)));
        let rest = top.subtract(&g, &aa);
        assert_eq!(rest.cylinders(), &[proj(&g, &beta(&g, "p", 1, 1))]);
        assert!(top.subtract(&g, &top).is_empty());

        let g = g2();
        let w = CompactOpen::cylinder(vp(&g, "w"));
        let f1 = CompactOpen::cylinder(proj(&g, &named(&g, "f1")));
        assert_eq!(w.subtract(&g, &f1).cylinders(), &[proj(&g, &named(&g, "f2"))]);
    }

    #[test]
    fn difference_through_a_deeper_prefix() {
        let g = g3();
        let a = alpha(&g, "p", 1);
        let b = beta(&g, "p", 1, 1);
        let f1 = named(&g, "f1");
        let deep = proj(&g, &mul(&g, &mul(&g, &a, &b), &f1));
        let pieces = difference(&g, &vp(&g, "p"), &deep);
        let all = CompactOpen::from_disjoint(pieces.clone());
        assert!(all.is_disjoint(&g, &CompactOpen::cylinder(deep.clone())));
        let back = all.union(&g, &CompactOpen::cylinder(deep));
        assert!(back.same_set(&g, &CompactOpen::cylinder(vp(&g, "p"))));
        for (i, x) in pieces.iter().enumerate() {
            for y in &pieces[i + 1..] {
                assert_eq!(meet(&g, x, y), None);
            }
        }
    }

    #[test]
    fn simple_expansions() {
        let g = g3();
        let kids = simple_expand(&g, &vp(&g, "p"), Some(1)).unwrap();
        assert_eq!(kids, vec![proj(&g, &alpha(&g, "p", 1)), proj(&g, &beta(&g, "p", 1, 1))]);
        assert_eq!(simple_expand(&g, &vp(&g, "p"), Some(2)), Err(LatticeError::BadChoice));
        let g = g2();
        let kids = simple_expand(&g, &vp(&g, "w"), None).unwrap();
        assert_eq!(kids, vec![proj(&g, &named(&g, "f1")), proj(&g, &named(&g, "f2"))]);
    }

    #[test]
    fn expansion_scripts_round_trip() {
        let g = g2();
        let script = [ExpandStep { position: 0, choice: None }, ExpandStep { position: 0, choice: None }];
        let set = expand(&g, &vp(&g, "w"), &script).unwrap();
        assert_eq!(set.len(), 3);
        assert!(is_orthogonal_cover(&g, &vp(&g, "w"), &set));
        let back = cover_to_expansion(&g, &vp(&g, "w"), &set).unwrap();
        assert_eq!(expand(&g, &vp(&g, "w"), &back).unwrap(), set);

        let g = g3();
        let one = Some(1);
        let script = [ExpandStep { position: 0, choice: one }, ExpandStep { position: 0, choice: one }];
        let set = expand(&g, &vp(&g, "p"), &script).unwrap();
        assert_eq!(set.len(), 3);
        assert_eq!(cover_to_expansion(&g, &vp(&g, "p"), &set).unwrap(), script.to_vec());
    }

    #[test]
    fn covers_are_checked() {
        let g = g3();
        let a = proj(&g, &alpha(&g, "p", 1));
        let b = proj(&g, &beta(&g, "p", 1, 1));
        let p = vp(&g, "p");
        assert!(is_orthogonal_cover(&g, &p, &[a.clone(), b.clone()]));
        assert!(!is_orthogonal_cover(&g, &p, core::slice::from_ref(&a)));
        let aa = proj(&g, &mul(&g, &alpha(&g, "p", 1), &alpha(&g, "p", 1)));
        let fixed = orthogonalize_cover(&g, &p, &[aa, a.clone(), b.clone()]).unwrap();
        assert_eq!(fixed, {
            let mut v = vec![a, b];
            v.sort();
            v
        });
        let g2 = g2();
        let f1 = proj(&g2, &named(&g2, "f1"));
        assert!(!is_orthogonal_cover(&g2, &vp(&g2, "w"), &[f1.clone(), f1]));
    }

    #[test]
    fn overlapping_free_pair_is_joined() {
        let g = g1();
        let p = g.vertex_by_name("p").unwrap();
        let mk = |k: &[u32]| EPath { prefix: CPath::trivial(p), tail: Tail::Free(k.to_vec()) };
        let b1 = proj(&g, &beta(&g, "p", 1, 1));
        let b2 = proj(&g, &beta(&g, "p", 2, 1));
        let fam = [mk(&[1, 0]), mk(&[0, 1]), b1, b2];
        let out = orthogonalize_cover(&g, &vp(&g, "p"), &fam).unwrap();
        assert_eq!(out, vec![mk(&[0, 0])]);
    }
}
