//! Property suites shared by `sepgroid selftest` and the acceptance tests.
//!
//! Each suite samples from a seeded generator and returns a [`Report`] with
//! the number of checked cases and the failures found.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use sepgroid_core::enumerate;
use sepgroid_core::filters::{self, Bounds, SemifinitePath};
use sepgroid_core::groupoid::{self, Germ};
use sepgroid_core::lattice::{self, CompactOpen, EPath};
use sepgroid_core::monoid::{self, Budget, Decision, MonElem};
use sepgroid_core::semigroup::{self, mul};
use sepgroid_core::{Element, SeparatedGraph};

use crate::formats::write_word;
use crate::sample::{self, ChaCha8Rng, Generator};

const KEEP: usize = 5;

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub name: String,
    pub cases: usize,
    pub failed: usize,
    /// The first few failures, described.
    pub examples: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), ..Report::default() }
    }

    /// Records one case; `detail` is only built for failures.
    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.examples.len() < KEEP {
                self.examples.push(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.cases > 0
    }

    pub fn absorb(&mut self, other: Report) {
        self.cases += other.cases;
        self.failed += other.failed;
        for e in other.examples {
            if self.examples.len() < KEEP {
                self.examples.push(format!("{}: {e}", other.name));
            }
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} ({} cases, {} failed)", self.name, self.cases, self.failed)?;
        for e in &self.examples {
            write!(f, "\n    {e}")?;
        }
        Ok(())
    }
}

fn words(g: &SeparatedGraph, items: &[&Element]) -> String {
    items.iter().map(|e| write_word(g, e)).collect::<Vec<_>>().join(" ; ")
}

/// Associativity, `s = s s* s`, `s** = s` and `(ab)* = b* a*` on random
/// word triples.
pub fn semigroup_laws(g: &SeparatedGraph, rng: &mut ChaCha8Rng, triples: usize, max_len: usize) -> Report {
    let gens = sample::alphabet(g, 2);
    let mut r = Report::new(format!("semigroup laws on {}", g.name()));
    for _ in 0..triples {
        let a = sample::random_element(rng, g, &gens, max_len);
        let b = sample::random_element(rng, g, &gens, max_len);
        let c = sample::random_element(rng, g, &gens, max_len);
        let left = mul(g, &mul(g, &a, &b), &c);
        let right = mul(g, &a, &mul(g, &b, &c));
        let regular = mul(g, &mul(g, &a, &a.star()), &a) == a;
        let involution = a.star().star() == a && mul(g, &a, &b).star() == mul(g, &b.star(), &a.star());
        r.check(left == right && regular && involution && left.is_valid(g), || words(g, &[&a, &b, &c]));
    }
    r
}

/// Idempotents commute, round trip through E-paths, and monomials satisfy
/// `m m* m = m`.
pub fn idempotent_laws(g: &SeparatedGraph, rng: &mut ChaCha8Rng, n: usize) -> Report {
    let gens = sample::alphabet(g, 2);
    let mut r = Report::new(format!("idempotent laws on {}", g.name()));
    for _ in 0..n {
        let s = sample::random_element(rng, g, &gens, 6);
        let t = sample::random_element(rng, g, &gens, 6);
        let e = mul(g, &s, &s.star());
        let f = mul(g, &t.star(), &t);
        let commute = mul(g, &e, &f) == mul(g, &f, &e);
        let round = e.is_zero() || lattice::epath_of(&e).is_ok_and(|mu| lattice::idem_of(g, &mu) == e);
        let mono = match &s {
            Element::Triple { mid, .. } => {
                let inner = semigroup::mul_monomials(g, &mid.star(), mid);
                let outer = inner.as_ref().ok().and_then(|m| m.as_ref()).map(|m| semigroup::mul_monomials(g, mid, m));
                matches!(outer, Some(Ok(Some(ref m))) if m == mid)
            }
            Element::Zero => true,
        };
        r.check(commute && round && mono && e.is_idempotent() == !e.is_zero(), || words(g, &[&s, &t]));
    }
    r
}

/// Pairs `(e, s)` with `e` a nonzero idempotent and `e s = e` force `s` to
/// be idempotent. Runs until `pairs` such pairs were seen or the attempt
/// limit is reached; falling short of `pairs` is itself a failure.
pub fn e_star_unitary(g: &SeparatedGraph, rng: &mut ChaCha8Rng, pairs: usize) -> Report {
    let gens = sample::alphabet(g, 2);
    let mut r = Report::new(format!("E*-unitarity on {}", g.name()));
    let mut attempts = 0;
    while r.cases < pairs && attempts < pairs * 200 {
        attempts += 1;
        let s = sample::random_element(rng, g, &gens, 6);
        let u = sample::random_element(rng, g, &gens, 6);
        let f = mul(g, &u, &u.star());
        let candidates = [
            f.clone(),
            mul(g, &f, &mul(g, &s, &s.star())),
            mul(g, &f, &mul(g, &s.star(), &s)),
            mul(g, &s, &s.star()),
            mul(g, &mul(g, &f, &s), &mul(g, &f, &s).star()),
        ];
        for e in candidates {
            if !e.is_zero() && e.is_idempotent() && mul(g, &e, &s) == e {
                r.check(s.is_idempotent(), || words(g, &[&e, &s]));
            }
        }
    }
    if r.cases < pairs {
        let seen = r.cases;
        r.check(false, || format!("only {seen} pairs satisfied e s = e in {attempts} attempts"));
    }
    r
}

fn as_set(list: &[EPath]) -> BTreeSet<EPath> {
    list.iter().cloned().collect()
}

/// Expanded sets are orthogonal covers, `cover_to_expansion` replays to the
/// same set, and orthogonalised covers keep their union.
pub fn cover_duality(g: &SeparatedGraph, rng: &mut ChaCha8Rng, scripts: usize) -> Report {
    let mut r = Report::new(format!("cover/expansion duality on {}", g.name()));
    for _ in 0..scripts {
        let mu = sample::random_epath(rng, g, 1, 2, 2);
        let s1 = sample::random_script(rng, g, &mu, 6);
        let s2 = sample::random_script(rng, g, &mu, 4);
        let Ok(set1) = lattice::expand(g, &mu, &s1) else {
            r.check(false, || format!("script {s1:?} failed on {mu:?}"));
            continue;
        };
        let set2 = lattice::expand(g, &mu, &s2).unwrap_or_default();
        r.check(lattice::is_orthogonal_cover(g, &mu, &set1), || format!("expanded set of {mu:?} by {s1:?}"));
        let replay = lattice::cover_to_expansion(g, &mu, &set1).and_then(|s| lattice::expand(g, &mu, &s));
        r.check(replay.as_ref().is_ok_and(|l| as_set(l) == as_set(&set1)), || format!("replay of {mu:?} by {s1:?}"));

        let mut family: Vec<EPath> = as_set(&set1).union(&as_set(&set2)).cloned().collect();
        family.sort();
        match lattice::orthogonalize_cover(g, &mu, &family) {
            Ok(out) => {
                let union_kept = CompactOpen::from_disjoint(out.clone()).same_set(g, &CompactOpen::union_of(g, &family));
                let back = lattice::cover_to_expansion(g, &mu, &out).and_then(|s| lattice::expand(g, &mu, &s));
                r.check(
                    lattice::is_orthogonal_cover(g, &mu, &out)
                        && union_kept
                        && back.is_ok_and(|l| as_set(&l) == as_set(&out)),
                    || format!("orthogonalised {family:?}"),
                );
            }
            Err(e) => r.check(false, || format!("orthogonalize_cover({family:?}): {e}")),
        }
    }
    r
}

/// Symbolic evaluation of random expressions agrees with pointwise
/// evaluation, and Boolean-ring identities hold symbolically and pointwise.
pub fn point_model(g: &SeparatedGraph, rng: &mut ChaCha8Rng, exprs: usize, size: usize) -> Report {
    let points = sample::points(g, size);
    let mut r = Report::new(format!("cylinder algebra vs {} points on {}", points.len(), g.name()));
    let agrees = |set: &CompactOpen, member: &dyn Fn(&SemifinitePath) -> bool| {
        points.iter().all(|x| filters::point_in(g, set, x) == member(x))
    };
    for _ in 0..exprs {
        let a = sample::random_expr(rng, g, 4, 3);
        let b = sample::random_expr(rng, g, 2, 3);
        let (sa, sb) = (a.eval(g), b.eval(g));
        let disjoint_parts = sa.cylinders().iter().enumerate().all(|(i, x)| {
            sa.cylinders()[i + 1..].iter().all(|y| lattice::meet(g, x, y).is_none())
        });
        r.check(disjoint_parts && agrees(&sa, &|x| a.contains(g, x)), || a.text(g));

        let recombined = sa.subtract(g, &sb).union(g, &sa.intersect(g, &sb));
        let commute = sa.union(g, &sb).same_set(g, &sb.union(g, &sa)) && sa.intersect(g, &sb).same_set(g, &sb.intersect(g, &sa));
        let split = sa.subtract(g, &sb).is_disjoint(g, &sb);
        r.check(
            recombined.same_set(g, &sa) && commute && split && agrees(&recombined, &|x| a.contains(g, x)),
            || format!("{} vs {}", a.text(g), b.text(g)),
        );
        if sa.same_set(g, &sb) {
            r.check(points.iter().all(|x| a.contains(g, x) == b.contains(g, x)), || {
                format!("{} = {} symbolically but not pointwise", a.text(g), b.text(g))
            });
        }
    }
    r
}

/// Exhaustive filter correspondence over a bounded lattice: the filter
/// axioms, injectivity of traces, reconstruction, and maximality.
pub fn filter_correspondence(g: &SeparatedGraph, bounds: Bounds) -> Report {
    let lattice_family = enumerate::epaths(g, bounds);
    let paths = enumerate::semifinite_paths(g, bounds);
    let mut r = Report::new(format!(
        "filter correspondence on {} ({} paths, {} idempotents)",
        g.name(),
        paths.len(),
        lattice_family.len()
    ));
    let n = lattice_family.len();
    let above: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|j| lattice::leq(g, &lattice_family[i], &lattice_family[*j])).collect())
        .collect();
    let traces: Vec<Vec<bool>> = paths
        .iter()
        .map(|mu| lattice_family.iter().map(|e| filters::is_initial_segment(g, e, mu)).collect())
        .collect();
    // Containment between paths is compared one step past the bounds, so an
    // exponent or length at the bound is not mistaken for a longer path.
    let fine = enumerate::epaths(g, Bounds { max_exp: bounds.max_exp + 1, max_len: bounds.max_len + 1, ..bounds });
    let fine_trace_of = |x: &SemifinitePath| -> Vec<bool> { fine.iter().map(|e| filters::is_initial_segment(g, e, x)).collect() };
    let fine_traces: Vec<Vec<bool>> = paths.iter().map(fine_trace_of).collect();
    let mut seen: BTreeMap<&Vec<bool>, usize> = BTreeMap::new();
    for (k, mu) in paths.iter().enumerate() {
        let trace = &traces[k];
        let members: Vec<usize> = (0..n).filter(|i| trace[*i]).collect();
        let upward = members.iter().all(|i| above[*i].iter().all(|j| trace[*j]));
        let mut meets = true;
        for (a, i) in members.iter().enumerate() {
            for j in &members[a + 1..] {
                meets &= lattice::meet(g, &lattice_family[*i], &lattice_family[*j])
                    .is_some_and(|m| filters::is_initial_segment(g, &m, mu));
            }
        }
        r.check(upward && meets && !members.is_empty(), || format!("filter axioms fail for {mu:?}"));

        let prior = seen.insert(trace, k);
        r.check(prior.is_none(), || format!("{mu:?} and {:?} share a trace", paths[prior.unwrap_or(k)]));

        let family: Vec<Element> = members.iter().map(|i| lattice::idem_of(g, &lattice_family[*i])).collect();
        let back = filters::reconstruct_path(g, &family, bounds);
        r.check(back.as_ref() == Ok(mu), || format!("reconstruct {mu:?} gave {back:?}"));

        let fine_trace = &fine_traces[k];
        let strictly_below = |other: &Vec<bool>| other != fine_trace && fine_trace.iter().zip(other).all(|(a, b)| !a || *b);
        if filters::is_ultrafilter(mu) {
            r.check(!fine_traces.iter().any(strictly_below), || format!("infinite {mu:?} has a strict extension"));
        } else {
            let ext = filters::infinite_extension(g, mu);
            let ok = ext.as_ref().is_some_and(|x| x.is_infinite() && strictly_below(&fine_trace_of(x)));
            r.check(ok, || format!("no strict infinite extension of {mu:?}"));
        }
    }
    r
}

/// Random germs from `germ_of`: witness coherence, membership in their
/// bisection, unit and inverse laws, associativity and functoriality.
pub fn groupoid_laws(g: &SeparatedGraph, rng: &mut ChaCha8Rng, germs: usize) -> Report {
    let gens = sample::alphabet(g, 2);
    let pool = sample::points(g, 5);
    let mut r = Report::new(format!("groupoid laws on {}", g.name()));
    let mut built = 0;
    let mut attempts = 0;
    while built < germs && attempts < germs * 50 {
        attempts += 1;
        let Some(t) = sample::random_nonzero(rng, g, &gens, 5) else { continue };
        let Some(x) = sample::point_in_domain(rng, g, &t, &pool) else { continue };
        built += 1;
        let h = match groupoid::germ_of(g, &t, x) {
            Ok(h) => h,
            Err(e) => {
                r.check(false, || format!("germ_of({}, {x:?}): {e}", write_word(g, &t)));
                continue;
            }
        };
        let laws = single_germ_laws(g, &h);
        r.check(laws && groupoid::in_bisection(g, &h, &t), || format!("germ of {} at {x:?}", write_word(g, &t)));

        let Some((s, k)) = germ_at(rng, g, &gens, &h.x) else { continue };
        let st = mul(g, &s, &t);
        let functorial = groupoid::germ_of(g, &st, x).ok() == k.compose(g, &h).ok();
        r.check(functorial, || format!("germ_of({} * {}) at {x:?}", write_word(g, &s), write_word(g, &t)));

        if let Some((_, l)) = germ_at(rng, g, &gens, &k.x) {
            let left = l.compose(g, &k).and_then(|lk| lk.compose(g, &h));
            let right = k.compose(g, &h).and_then(|kh| l.compose(g, &kh));
            r.check(left.is_ok() && left == right, || format!("associativity at {x:?}"));
        }
    }
    if built < germs {
        r.check(false, || format!("only {built} germs built in {attempts} attempts"));
    }
    r
}

fn single_germ_laws(g: &SeparatedGraph, h: &Germ) -> bool {
    let (Ok(ux), Ok(uy)) = (Germ::unit(g, h.x.clone()), Germ::unit(g, h.y.clone())) else { return false };
    let inv = h.inverse();
    h.witness_is_coherent(g)
        && ux.compose(g, h).as_ref() == Ok(h)
        && h.compose(g, &uy).as_ref() == Ok(h)
        && h.compose(g, &inv).is_ok_and(|u| u.is_unit() && u == ux)
        && h.compose(g, &inv).and_then(|u| u.compose(g, h)).as_ref() == Ok(h)
}

/// A random `s` whose domain contains `x`, with its germ there.
fn germ_at(rng: &mut ChaCha8Rng, g: &SeparatedGraph, gens: &[Generator], x: &SemifinitePath) -> Option<(Element, Germ)> {
    for _ in 0..100 {
        let Some(s) = sample::random_nonzero(rng, g, gens, 5) else { continue };
        let dom = mul(g, &s.star(), &s);
        if filters::filter_contains(g, x, &dom).unwrap_or(false) {
            let germ = groupoid::germ_of(g, &s, x).ok()?;
            return Some((s, germ));
        }
    }
    None
}

/// `typ` is invariant under expansion, and `equidecompose` agrees with
/// `mon_eq` on random pairs of compact opens, with verified certificates.
pub fn typ_theorem(g: &SeparatedGraph, rng: &mut ChaCha8Rng, pairs: usize, budget: Budget) -> Report {
    let pres = g.monoid_presentation();
    let mut r = Report::new(format!("type semigroup on {}", g.name()));
    for _ in 0..pairs {
        let mu = sample::random_epath(rng, g, 1, 3, 2);
        let script = sample::random_script(rng, g, &mu, 4);
        let expanded = lattice::expand(g, &mu, &script).unwrap_or_default();
        let before = monoid::typ_of(g, &CompactOpen::cylinder(mu.clone()));
        let after = monoid::typ_of(g, &CompactOpen::from_disjoint(expanded.clone()));
        r.check(pres.mon_eq(&before, &after, budget).is_yes(), || format!("typ changed expanding {mu:?} by {script:?}"));

        let a = sample::random_compact_open(rng, g, 4, 3);
        let b = if rng_bool(rng) {
            sample::random_compact_open(rng, g, 4, 3)
        } else {
            expand_all(rng, g, &a)
        };
        let (ta, tb) = (monoid::typ_of(g, &a), monoid::typ_of(g, &b));
        let eq = pres.mon_eq(&ta, &tb, budget);
        match monoid::equidecompose(g, &a, &b, budget) {
            Ok(Decision::Yes(cert)) => r.check(eq.is_yes() && cert.verify(g, &a, &b), || pair_text(g, &a, &b)),
            Ok(Decision::No) => r.check(eq == Decision::No, || pair_text(g, &a, &b)),
            Ok(Decision::Unknown) => r.check(eq == Decision::Unknown, || pair_text(g, &a, &b)),
            Err(e) => r.check(false, || format!("{}: {e}", pair_text(g, &a, &b))),
        }
    }
    r
}

fn rng_bool(rng: &mut ChaCha8Rng) -> bool {
    use rand::Rng;
    rng.random_bool(0.5)
}

fn pair_text(g: &SeparatedGraph, a: &CompactOpen, b: &CompactOpen) -> String {
    use crate::formats::write_compact_open;
    format!("{} vs {}", write_compact_open(g, a), write_compact_open(g, b))
}

/// Replaces every cylinder of `a` by a random expanded set of it.
fn expand_all(rng: &mut ChaCha8Rng, g: &SeparatedGraph, a: &CompactOpen) -> CompactOpen {
    let mut out = Vec::new();
    for c in a.cylinders() {
        let script = sample::random_script(rng, g, c, 2);
        out.extend(lattice::expand(g, c, &script).unwrap_or_else(|_| vec![c.clone()]));
    }
    CompactOpen::from_disjoint(out)
}

/// All vectors over `n` generators with total weight at most `max`.
pub fn elements_up_to(n: usize, max: u32) -> Vec<MonElem> {
    let mut out = vec![MonElem::zero(n)];
    for v in 0..n {
        out = out
            .into_iter()
            .flat_map(|m| {
                let room = max - m.weight();
                (0..=room).map(move |c| {
                    let mut x = m.clone();
                    x.0[v] = c;
                    x
                })
            })
            .collect();
    }
    out
}

/// Every quadruple of weight-bounded elements with `a + b = c + d` admits a
/// refinement, re-checked with independent `mon_eq` calls.
pub fn refinement(g: &SeparatedGraph, max_weight: u32, budget: Budget) -> Report {
    let pres = g.monoid_presentation();
    let elems = elements_up_to(g.vertex_count(), max_weight);
    let mut class_id: BTreeMap<MonElem, usize> = BTreeMap::new();
    let mut complete = Vec::new();
    let mut class_key = |x: &MonElem| -> usize {
        if let Some(id) = class_id.get(x) {
            return *id;
        }
        let (class, done) = pres.class_of(x, budget);
        let id = complete.len();
        complete.push(done);
        for m in class {
            class_id.entry(m).or_insert(id);
        }
        id
    };
    let mut by_class: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for i in 0..elems.len() {
        for j in 0..elems.len() {
            let id = class_key(&elems[i].add(&elems[j]));
            by_class.entry(id).or_default().push((i, j));
        }
    }
    let mut r = Report::new(format!("refinement on {} (weight <= {max_weight})", g.name()));
    let same = |x: &MonElem, y: &MonElem| pres.mon_eq(x, y, budget).is_yes();
    for pairs in by_class.values() {
        for &(a, b) in pairs {
            for &(c, d) in pairs {
                let (a, b, c, d) = (&elems[a], &elems[b], &elems[c], &elems[d]);
                let ok = match pres.refinement_witness(a, b, c, d, budget) {
                    Decision::Yes(w) => {
                        same(a, &w.w.add(&w.x))
                            && same(b, &w.y.add(&w.z))
                            && same(c, &w.w.add(&w.y))
                            && same(d, &w.x.add(&w.z))
                    }
                    _ => false,
                };
                r.check(ok, || format!("{:?} + {:?} = {:?} + {:?}", a.0, b.0, c.0, d.0));
            }
        }
    }
    r
}

/// The component order is a partial order, hereditary sets form a lattice
/// containing the empty set and `I`, and strong components match primes.
pub fn graph_axioms(g: &SeparatedGraph) -> Report {
    let mut r = Report::new(format!("graph axioms on {}", g.name()));
    r.check(g.validate().is_empty(), || format!("{:?}", g.validate()));
    let primes: Vec<_> = g.prime_ids().collect();
    for &a in &primes {
        r.check(g.leq(a, a), || format!("{a:?} not reflexive"));
        for &b in &primes {
            r.check(!(g.leq(a, b) && g.leq(b, a)) || a == b, || format!("{a:?} {b:?} antisymmetry"));
            for &c in &primes {
                r.check(!(g.leq(a, b) && g.leq(b, c)) || g.leq(a, c), || format!("{a:?} {b:?} {c:?} transitivity"));
            }
        }
    }
    let her: Vec<BTreeSet<_>> = g.hereditary_subsets().into_iter().map(|s| s.into_iter().collect()).collect();
    let all: BTreeSet<_> = primes.iter().copied().collect();
    r.check(her.contains(&BTreeSet::new()) && her.contains(&all), || "missing empty set or I".into());
    for a in &her {
        for b in &her {
            let closed = her.contains(&a.union(b).copied().collect()) && her.contains(&a.intersection(b).copied().collect());
            r.check(closed, || format!("{a:?} and {b:?} not closed"));
        }
    }
    let scc = g.strong_components();
    for u in g.vertex_ids() {
        for v in g.vertex_ids() {
            let same_prime = g.prime_of(u) == g.prime_of(v);
            r.check((scc[u.index()] == scc[v.index()]) == same_prime, || format!("{u:?} {v:?} components"));
        }
    }
    r
}

/// The fixed identities of the shipped fixtures: `p + q1 = p` and
/// `q1 != q2` on g1, `w = n w` on g2, and `m p = n p` iff `m = n` on g0.
pub fn monoid_identities(budget: Budget) -> Report {
    let mut r = Report::new("monoid identities on g0, g1, g2");
    let g1 = crate::fixtures::g1();
    let pres = g1.monoid_presentation();
    let unit = |g: &SeparatedGraph, name: &str| MonElem::unit(g.vertex_count(), g.vertex_by_name(name).expect("fixture vertex"));
    let (p, q1, q2) = (unit(&g1, "p"), unit(&g1, "q1"), unit(&g1, "q2"));
    r.check(pres.mon_eq(&p, &p.add(&q1), budget).is_yes(), || "g1: a_p = a_p + a_q1".into());
    r.check(pres.mon_eq(&p, &p.add(&q2), budget).is_yes(), || "g1: a_p = a_p + a_q2".into());
    r.check(pres.mon_eq(&q1, &q2, budget) == Decision::No, || "g1: a_q1 != a_q2".into());

    let g2 = crate::fixtures::g2();
    let pres = g2.monoid_presentation();
    let w = unit(&g2, "w");
    for n in 1..=6 {
        r.check(pres.mon_eq(&w, &w.scale(n), budget).is_yes(), || format!("g2: a_w = {n} a_w"));
    }

    let g0 = crate::fixtures::g0();
    let pres = g0.monoid_presentation();
    let p = unit(&g0, "p");
    for m in 0..=6 {
        for n in 0..=6 {
            let got = pres.mon_eq(&p.scale(m), &p.scale(n), budget);
            let ok = if m == n { got.is_yes() } else { got == Decision::No };
            r.check(ok, || format!("g0: {m} a_p vs {n} a_p gave {}", got.word()));
        }
    }
    r
}

/// Sizes for [`run_all`].
#[derive(Clone, Copy, Debug)]
pub struct Scale {
    pub samples: usize,
    pub refinement_weight: u32,
    pub lattice: Bounds,
}

impl Default for Scale {
    fn default() -> Self {
        Scale { samples: 200, refinement_weight: 2, lattice: Bounds { max_depth: 2, max_exp: 3, max_len: 3 } }
    }
}

/// Every suite on the shipped fixtures, each with its own generator seeded
/// from `seed`.
pub fn run_all(seed: u64, scale: Scale, budget: Budget) -> Vec<Report> {
    let n = scale.samples;
    let fixtures = crate::fixtures::all();
    let mut out = Vec::new();
    for (k, (name, g)) in fixtures.iter().enumerate() {
        let rng = &mut sample::rng(seed.wrapping_add(k as u64));
        out.push(graph_axioms(g));
        if *name == "g0" {
            continue;
        }
        out.push(semigroup_laws(g, rng, n, 6));
        out.push(idempotent_laws(g, rng, n));
        out.push(e_star_unitary(g, rng, n));
        out.push(cover_duality(g, rng, n / 4));
        if matches!(*name, "g2" | "g3") {
            out.push(point_model(g, rng, n / 4, 4));
        }
        let bounds = Bounds { max_depth: g.primes().len().min(scale.lattice.max_depth), ..scale.lattice };
        out.push(filter_correspondence(g, bounds));
        out.push(groupoid_laws(g, rng, n / 4));
        out.push(typ_theorem(g, rng, n / 4, budget));
        out.push(refinement(g, scale.refinement_weight, budget));
    }
    out.push(monoid_identities(budget));
    out
}
