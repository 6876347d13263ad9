//! Germs `(x, n, y)` of the tight groupoid and the compact open bisections
//! `Z(s)`.
//!
//! A germ relates two infinite paths with a common tail. Its weight lives in
//! `ℤ^(∞) × ℤ^(∞)`: the first part counts `t`-variables, the second records
//! the length difference of the two heads before the common tail.

use alloc::vec::Vec;
use core::fmt;

use crate::filters::{self, SemiTail, SemifinitePath};
use crate::graph::{PrimeId, PrimeKind, SeparatedGraph};
use crate::lattice::{self, CompactOpen, EPath, Tail};
use crate::semigroup::{self, Body, Element, Path};
use crate::seq::SparseSeq;

/// The heads of `x = γλ` and `y = νλ` before their common tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub left: EPath,
    pub right: EPath,
}

/// A germ `(x, (n1, n2), y)`; equality ignores the witness.
#[derive(Clone, Debug)]
pub struct Germ {
    pub x: SemifinitePath,
    pub n1: SparseSeq,
    pub n2: SparseSeq,
    pub y: SemifinitePath,
    pub witness: Witness,
}

impl PartialEq for Germ {
    fn eq(&self, other: &Self) -> bool {
        self.x == other.x && self.n1 == other.n1 && self.n2 == other.n2 && self.y == other.y
    }
}

impl Eq for Germ {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupoidError {
    NotInfinite,
    ZeroElement,
    /// `x` does not lie in `Z(s*s)`.
    NotInDomain,
    NotComposable,
    /// No common tail realises the requested length difference.
    NoDecomposition,
}

impl fmt::Display for GroupoidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            GroupoidError::NotInfinite => "germs need infinite paths",
            GroupoidError::ZeroElement => "the element is zero",
            GroupoidError::NotInDomain => "the point is outside the domain of the element",
            GroupoidError::NotComposable => "range of the second germ differs from the source of the first",
            GroupoidError::NoDecomposition => "no common tail matches the weight",
        };
        f.write_str(msg)
    }
}

impl core::error::Error for GroupoidError {}

/// `|μ|_∞`: the length of an initial segment, repeated over the loops of a
/// free end prime.
pub fn norm_length(mu: &EPath) -> SparseSeq {
    let base = mu.prefix.len() as i64;
    match &mu.tail {
        Tail::Regular(p) => SparseSeq::unit(1, base + p.len() as i64),
        Tail::Free(l) => {
            let mut out = SparseSeq::new();
            for (j, lj) in l.iter().enumerate() {
                out.add_at(j as u32 + 1, base + *lj as i64);
            }
            out
        }
    }
}

fn end_prime(g: &SeparatedGraph, x: &SemifinitePath) -> PrimeId {
    g.prime_of(x.prefix.range(g))
}

/// `D` spread over the coordinates of the end prime `q`.
fn spread(g: &SeparatedGraph, q: PrimeId, d: i64) -> SparseSeq {
    match g.kind(q) {
        PrimeKind::Regular => SparseSeq::unit(1, d),
        PrimeKind::Free => {
            let mut out = SparseSeq::new();
            for j in 1..=g.loops(q) {
                out.add_at(j, d);
            }
            out
        }
    }
}

fn tail_len(x: &SemifinitePath) -> (usize, usize) {
    match &x.tail {
        SemiTail::Periodic { lead, cycle } => (lead.len(), cycle.len()),
        _ => (0, 1),
    }
}

/// Heads `γ, ν` with `x = γλ`, `y = νλ` and `|γ|_∞ - |ν|_∞ = n2`.
pub fn decompose(g: &SeparatedGraph, x: &SemifinitePath, y: &SemifinitePath, n2: &SparseSeq) -> Option<Witness> {
    let q = end_prime(g, x);
    if q != end_prime(g, y) || !x.is_infinite() || !y.is_infinite() {
        return None;
    }
    let (cx, cy) = (x.prefix.len() as i64, y.prefix.len() as i64);
    match g.kind(q) {
        PrimeKind::Free => {
            let k = g.loops(q);
            if n2.support_end() > k {
                return None;
            }
            let (mut a, mut b) = (Vec::new(), Vec::new());
            for j in 1..=k {
                let diff = n2.get(j) - cx + cy;
                a.push(diff.max(0) as u32);
                b.push((diff.max(0) - diff) as u32);
            }
            Some(Witness {
                left: EPath { prefix: x.prefix.clone(), tail: Tail::Free(a) },
                right: EPath { prefix: y.prefix.clone(), tail: Tail::Free(b) },
            })
        }
        PrimeKind::Regular => {
            if n2.support_end() > 1 {
                return None;
            }
            let shift = cx - cy - n2.get(1);
            let ((lx, px), (ly, py)) = (tail_len(x), tail_len(y));
            let bound = lx + ly + px * py + shift.unsigned_abs() as usize + 1;
            for i in 0..=bound {
                let j = i as i64 + shift;
                if j < 0 {
                    continue;
                }
                let j = j as usize;
                if filters::drop_tail(g, x, i) == filters::drop_tail(g, y, j) {
                    let head = |p: &SemifinitePath, n: usize| Path {
                        start: p.prefix.range(g),
                        edges: p.tail_prefix(n).expect("infinite tails are long enough"),
                    };
                    return Some(Witness {
                        left: EPath { prefix: x.prefix.clone(), tail: Tail::Regular(head(x, i)) },
                        right: EPath { prefix: y.prefix.clone(), tail: Tail::Regular(head(y, j)) },
                    });
                }
            }
            None
        }
    }
}

impl Germ {
    /// Checks that `(x, (n1, n2), y)` is a germ and finds its witness.
    pub fn new(
        g: &SeparatedGraph,
        x: SemifinitePath,
        n1: SparseSeq,
        n2: SparseSeq,
        y: SemifinitePath,
    ) -> Result<Germ, GroupoidError> {
        if !x.is_infinite() || !y.is_infinite() {
            return Err(GroupoidError::NotInfinite);
        }
        let witness = decompose(g, &x, &y, &n2).ok_or(GroupoidError::NoDecomposition)?;
        Ok(Germ { x, n1, n2, y, witness })
    }

    pub fn unit(g: &SeparatedGraph, x: SemifinitePath) -> Result<Germ, GroupoidError> {
        Germ::new(g, x.clone(), SparseSeq::new(), SparseSeq::new(), x)
    }

    pub fn source(&self) -> &SemifinitePath {
        &self.y
    }

    pub fn range(&self) -> &SemifinitePath {
        &self.x
    }

    pub fn is_unit(&self) -> bool {
        self.x == self.y && self.n1.is_zero() && self.n2.is_zero()
    }

    pub fn inverse(&self) -> Germ {
        Germ {
            x: self.y.clone(),
            n1: -&self.n1,
            n2: -&self.n2,
            y: self.x.clone(),
            witness: Witness { left: self.witness.right.clone(), right: self.witness.left.clone() },
        }
    }

    /// `(x, n, y)(y, m, z) = (x, n + m, z)`.
    pub fn compose(&self, g: &SeparatedGraph, other: &Germ) -> Result<Germ, GroupoidError> {
        if self.y != other.x {
            return Err(GroupoidError::NotComposable);
        }
        Germ::new(g, self.x.clone(), &self.n1 + &other.n1, &self.n2 + &other.n2, other.y.clone())
    }

    /// `n2 = |γ|_∞ - |ν|_∞` for the stored witness.
    pub fn witness_is_coherent(&self, g: &SeparatedGraph) -> bool {
        let w = &self.witness;
        let common = match (&w.left.tail, &w.right.tail) {
            (Tail::Regular(a), Tail::Regular(b)) => filters::drop_tail(g, &self.x, a.len()) == filters::drop_tail(g, &self.y, b.len()),
            _ => true,
        };
        &norm_length(&w.left) - &norm_length(&w.right) == self.n2
            && w.left.prefix == self.x.prefix
            && w.right.prefix == self.y.prefix
            && filters::is_initial_segment(g, &w.left, &self.x)
            && filters::is_initial_segment(g, &w.right, &self.y)
            && common
    }
}

/// The germ of `s` at `x`, read off the representative `s·e(μ')` for an
/// initial segment `μ'` of `x` long enough to absorb the source side of `s`.
pub fn germ_of(g: &SeparatedGraph, s: &Element, x: &SemifinitePath) -> Result<Germ, GroupoidError> {
    let Element::Triple { mid, .. } = s else { return Err(GroupoidError::ZeroElement) };
    if !x.is_infinite() {
        return Err(GroupoidError::NotInfinite);
    }
    let dom = semigroup::mul(g, &s.star(), s);
    if !filters::filter_contains(g, x, &dom).unwrap_or(false) {
        return Err(GroupoidError::NotInDomain);
    }
    let cx = &x.prefix;
    let tail = match &x.tail {
        SemiTail::Free(ext) => {
            let n = match &mid.body {
                Body::Free { k, l } => 1 + k.iter().chain(l).copied().max().unwrap_or(0),
                Body::Regular { .. } => 0,
            };
            Tail::Free(alloc::vec![n; ext.len()])
        }
        _ => {
            let n = match &mid.body {
                Body::Regular { right, .. } => right.len(),
                Body::Free { .. } => 0,
            };
            let edges = x.tail_prefix(n).ok_or(GroupoidError::NotInfinite)?;
            Tail::Regular(Path { start: cx.range(g), edges })
        }
    };
    let seg = EPath { prefix: cx.clone(), tail };
    let rep = semigroup::mul(g, s, &lattice::idem_of(g, &seg));
    let Element::Triple { left: gamma, mid: m, right } = rep else { return Err(GroupoidError::NotInDomain) };
    debug_assert_eq!(&right, cx);
    let (range, witness) = match &m.body {
        Body::Free { k, l } => (
            SemifinitePath::free_infinite(g, gamma.clone()),
            Witness {
                left: EPath { prefix: gamma.clone(), tail: Tail::Free(k.clone()) },
                right: EPath { prefix: cx.clone(), tail: Tail::Free(l.clone()) },
            },
        ),
        Body::Regular { left: la, right: lb } => {
            let rest = filters::drop_tail(g, x, lb.len()).ok_or(GroupoidError::NotInDomain)?;
            let tail = filters::prepend_path(la, &rest).ok_or(GroupoidError::NotInDomain)?;
            (
                SemifinitePath { prefix: gamma.clone(), tail },
                Witness {
                    left: EPath { prefix: gamma.clone(), tail: Tail::Regular(la.clone()) },
                    right: EPath { prefix: cx.clone(), tail: Tail::Regular(lb.clone()) },
                },
            )
        }
    };
    let n2 = &norm_length(&witness.left) - &norm_length(&witness.right);
    Ok(Germ { x: range, n1: m.t.clone(), n2, y: x.clone(), witness })
}

/// Membership of a germ in `Z(s)`, checked against the defining conditions.
pub fn in_bisection(g: &SeparatedGraph, germ: &Germ, s: &Element) -> bool {
    let Element::Triple { left: gamma, mid: m, right: nu } = s else { return false };
    let y = &germ.y;
    if !y.is_infinite() {
        return false;
    }
    let q = end_prime(g, y);
    let (expected, n1, n2) = if y.prefix == *nu {
        match &m.body {
            Body::Regular { left: lam, right: eta } => {
                if y.tail_prefix(eta.len()).as_deref() != Some(&eta.edges[..]) {
                    return false;
                }
                let Some(rest) = filters::drop_tail(g, y, eta.len()) else { return false };
                let Some(tail) = filters::prepend_path(lam, &rest) else { return false };
                let d = gamma.len() as i64 + lam.len() as i64 - nu.len() as i64 - eta.len() as i64;
                (SemifinitePath { prefix: gamma.clone(), tail }, m.t.clone(), spread(g, q, d))
            }
            Body::Free { k, l } => {
                let mut n2 = SparseSeq::new();
                for j in 0..k.len() {
                    n2.add_at(j as u32 + 1, k[j] as i64 + gamma.len() as i64 - l[j] as i64 - nu.len() as i64);
                }
                (SemifinitePath::free_infinite(g, gamma.clone()), m.t.clone(), n2)
            }
        }
    } else {
        let Some(rest) = y.prefix.strip_prefix(g, nu) else { return false };
        let Ok(Some((moved, phi))) = semigroup::translate(g, m, &rest) else { return false };
        let d = gamma.len() as i64 + moved.len() as i64 - y.prefix.len() as i64;
        (SemifinitePath { prefix: gamma.then(&moved), tail: y.tail.clone() }, phi.exps, spread(g, q, d))
    };
    germ.x == expected && germ.n1 == n1 && germ.n2 == n2
}

/// `(Z(s*s), Z(ss*))`.
pub fn bisection_endpoints(g: &SeparatedGraph, s: &Element) -> Result<(CompactOpen, CompactOpen), GroupoidError> {
    if s.is_zero() {
        return Err(GroupoidError::ZeroElement);
    }
    let cyl = |e: Element| CompactOpen::cylinder(lattice::epath_of(&e).expect("s*s and ss* are idempotent"));
    Ok((cyl(semigroup::mul(g, &s.star(), s)), cyl(semigroup::mul(g, s, &s.star()))))
}

/// Pairwise disjoint sources and pairwise disjoint ranges.
pub fn is_bisection_family(g: &SeparatedGraph, family: &[Element]) -> bool {
    let mut ends = Vec::new();
    for s in family {
        match bisection_endpoints(g, s) {
            Ok(e) => ends.push(e),
            Err(_) => return false,
        }
    }
    for (i, (a, b)) in ends.iter().enumerate() {
        for (c, d) in &ends[i + 1..] {
            if !a.is_disjoint(g, c) || !b.is_disjoint(g, d) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::tests::{alpha, beta, g2, g3, named};
    use crate::semigroup::{mul, CPath};

    fn at(g: &SeparatedGraph, name: &str) -> CPath {
        CPath::trivial(g.vertex_by_name(name).unwrap())
    }

    fn periodic(g: &SeparatedGraph, lead: &[&str], cycle: &[&str]) -> SemifinitePath {
        let w = g.vertex_by_name("w").unwrap();
        let e = |n: &&str| g.named_edge(n).unwrap();
        let lead = Path { start: w, edges: lead.iter().map(e).collect() };
        SemifinitePath::periodic(g, at(g, "w"), lead, cycle.iter().map(e).collect()).unwrap()
    }

    #[test]
    fn norm_lengths() {
        let g = g2();
        let w = g.vertex_by_name("w").unwrap();
        let e = |n| g.named_edge(n).unwrap();
        let mu = EPath { prefix: at(&g, "w"), tail: Tail::Regular(Path { start: w, edges: alloc::vec![e("f1"), e("f2")] }) };
        assert_eq!(norm_length(&mu), SparseSeq::unit(1, 2));
        let g = g3();
        let mu = EPath { prefix: at(&g, "p"), tail: Tail::Free(alloc::vec![3]) };
        assert_eq!(norm_length(&mu), SparseSeq::unit(1, 3));
        assert_eq!(norm_length(&EPath::vertex(&g, g.vertex_by_name("w").unwrap())), SparseSeq::new());
    }

    #[test]
    fn alpha_shifts_the_free_point() {
        let g = g3();
        let x = SemifinitePath::free_infinite(&g, at(&g, "p"));
        let a = alpha(&g, "p", 1);
        let germ = germ_of(&g, &a, &x).unwrap();
        assert_eq!(germ.x, x);
        assert_eq!(germ.y, x);
        assert!(germ.n1.is_zero());
        assert_eq!(germ.n2, SparseSeq::unit(1, 1));
        assert!(in_bisection(&g, &germ, &a));
        assert!(!in_bisection(&g, &germ, &a.star()));
        assert!(germ.witness_is_coherent(&g));
    }

    #[test]
    fn regular_germ_from_example() {
        let g = g2();
        let s = mul(&g, &named(&g, "f1"), &named(&g, "f2").star());
        let x = periodic(&g, &["f2"], &["f1"]);
        let germ = germ_of(&g, &s, &x).unwrap();
        assert_eq!(germ.x, periodic(&g, &[], &["f1"]));
        assert!(germ.n2.is_zero());
        assert!(in_bisection(&g, &germ, &s));
    }

    #[test]
    fn idempotents_give_units() {
        let g = g3();
        let b = beta(&g, "p", 1, 1);
        let e = mul(&g, &b, &b.star());
        let x = SemifinitePath::periodic(
            &g,
            CPath { start: g.vertex_by_name("p").unwrap(), steps: alloc::vec![semigroup::Step::Free { prime: g.prime_by_name("p").unwrap(), index: 1, power: 0, slot: 1 }] },
            Path::trivial(g.vertex_by_name("w").unwrap()),
            alloc::vec![g.named_edge("f2").unwrap()],
        )
        .unwrap();
        let germ = germ_of(&g, &e, &x).unwrap();
        assert!(germ.is_unit());
        let gb = germ_of(&g, &b.star(), &x).unwrap();
        assert!(in_bisection(&g, &gb, &b.star()));
        assert_eq!(gb.n2, SparseSeq::unit(1, -1));
        let back = germ_of(&g, &b, &gb.x).unwrap();
        assert!(back.compose(&g, &gb).unwrap().is_unit());
    }

    #[test]
    fn weights_add_under_composition() {
        let g = g3();
        let x = SemifinitePath::free_infinite(&g, at(&g, "p"));
        let a = Germ::new(&g, x.clone(), SparseSeq::new(), SparseSeq::unit(1, 1), x.clone()).unwrap();
        let b = Germ::new(&g, x.clone(), SparseSeq::new(), SparseSeq::unit(1, 2), x.clone()).unwrap();
        assert_eq!(a.compose(&g, &b).unwrap().n2, SparseSeq::unit(1, 3));
        assert!(a.compose(&g, &a.inverse()).unwrap().is_unit());
    }

    #[test]
    fn bisection_families() {
        let g = g3();
        let a = alpha(&g, "p", 1);
        let b = beta(&g, "p", 1, 1);
        assert!(is_bisection_family(&g, &[a.clone(), b.clone()]));
        let p = semigroup::vertex(&g, g.vertex_by_name("p").unwrap());
        assert!(!is_bisection_family(&g, &[p, mul(&g, &a, &a.star())]));
        let (src, rng) = bisection_endpoints(&g, &b).unwrap();
        assert_eq!(src.cylinders()[0], EPath::vertex(&g, g.vertex_by_name("w").unwrap()));
        assert_eq!(rng.cylinders()[0].depth(), 1);
    }
}
