//! The property suites on the test-only fixture, which has a two-vertex
//! regular component, a regular connector and a free prime with two loops.

mod support;

use sepgroid::checks::{self, Report};
use sepgroid::sample;
use sepgroid_core::filters::Bounds;
use sepgroid_core::monoid::Budget;

fn assert_passes(r: Report) {
    assert!(r.passed(), "{r}");
}

#[test]
fn graph_axioms() {
    assert_passes(checks::graph_axioms(&support::g4()));
}

#[test]
fn semigroup_and_idempotent_laws() {
    let g = support::g4();
    let rng = &mut sample::rng(11);
    assert_passes(checks::semigroup_laws(&g, rng, 3_000, 8));
    assert_passes(checks::idempotent_laws(&g, rng, 2_000));
    assert_passes(checks::e_star_unitary(&g, rng, 2_000));
}

#[test]
fn covers_and_expansions() {
    assert_passes(checks::cover_duality(&support::g4(), &mut sample::rng(12), 500));
}

#[test]
fn cylinder_algebra() {
    assert_passes(checks::point_model(&support::g4(), &mut sample::rng(13), 300, 5));
}

#[test]
fn filters() {
    let g = support::g4();
    assert_passes(checks::filter_correspondence(&g, Bounds { max_depth: 3, max_exp: 2, max_len: 3 }));
}

#[test]
fn groupoid() {
    assert_passes(checks::groupoid_laws(&support::g4(), &mut sample::rng(14), 2_000));
}

#[test]
fn type_semigroup_and_refinement() {
    let g = support::g4();
    assert_passes(checks::typ_theorem(&g, &mut sample::rng(15), 300, Budget::default()));
    assert_passes(checks::refinement(&g, 2, Budget::default()));
}

#[test]
fn selftest_suites_pass_with_default_seed() {
    let reports = checks::run_all(0, checks::Scale::default(), Budget::default());
    for r in reports {
        assert_passes(r);
    }
}
