//! The acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact; the only tolerances are the runtime limits
//! below. Run with `cargo test -p sepgroid --test acceptance`.

mod support;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use sepgroid::checks::{self, Report};
use sepgroid::fixtures;
use sepgroid::formats::{parse_word, write_word};
use sepgroid::sample;
use sepgroid_core::filters::Bounds;
use sepgroid_core::monoid::Budget;
use sepgroid_core::SeparatedGraph;

const SEED: u64 = 0;
const LAW_TRIPLES: usize = 10_000;
const LAW_MAX_TOKENS: usize = 6;
const ORACLE_MAX_TOKENS: usize = 8;
const ORACLE_MIN_WORDS: usize = 100_000;
const ORACLE_STEP_CAP: usize = 10_000;
const UNITARY_PAIRS: usize = 10_000;
const DUALITY_SCRIPTS: usize = 1_000;
const POINT_EXPRS: usize = 1_000;
const POINT_SIZE: usize = 6;
const FILTER_MAX_EXP: u32 = 4;
const FILTER_MAX_LEN: usize = 5;
const GERMS: usize = 10_000;
const TYP_PAIRS: usize = 1_000;
const REFINE_WEIGHT: u32 = 4;

const LAWS_LIMIT: Duration = Duration::from_secs(30);
const ORACLE_LIMIT: Duration = Duration::from_secs(300);
const TYP_LIMIT: Duration = Duration::from_secs(600);

/// Six tokens per fixture: the oracle alphabets.
const ALPHABETS: [(&str, [&str; 6]); 3] = [
    ("g1", ["a:p.1", "a:p.2*", "b:p.1.1", "b:p.2.1", "b:p.1.1*", "t:p.1"]),
    ("g2", ["e:f1", "e:f2", "e:f1*", "e:f2*", "t:w.1", "t:w.1^-1"]),
    ("g3", ["a:p.1", "a:p.1*", "b:p.1.1", "b:p.1.1*", "e:f1", "t:p.1"]),
];

struct Verdict {
    id: u32,
    title: &'static str,
    report: Report,
    elapsed: Duration,
    limit: Option<Duration>,
}

impl Verdict {
    fn passed(&self) -> bool {
        self.report.passed() && self.limit.is_none_or(|l| self.elapsed <= l)
    }
}

fn laws_graphs() -> Vec<SeparatedGraph> {
    vec![fixtures::g1(), fixtures::g2(), fixtures::g3()]
}

fn merged(name: &str, parts: impl IntoIterator<Item = Report>) -> Report {
    let mut r = Report::new(name);
    for p in parts {
        r.absorb(p);
    }
    r
}

fn timed(id: u32, title: &'static str, limit: Option<Duration>, f: impl FnOnce() -> Report) -> Verdict {
    let start = Instant::now();
    let report = f();
    Verdict { id, title, report, elapsed: start.elapsed(), limit }
}

fn semigroup_laws() -> Report {
    merged(
        "laws",
        laws_graphs().iter().map(|g| checks::semigroup_laws(g, &mut sample::rng(SEED), LAW_TRIPLES, LAW_MAX_TOKENS)),
    )
}

/// Every word of up to eight tokens, through `parse_word` and the oracle.
fn oracle_equivalence() -> Report {
    let mut r = Report::new("oracle");
    for (name, alphabet) in ALPHABETS {
        let g = fixtures::by_name(name).expect("fixture");
        let mut words = 0;
        for len in 1..=ORACLE_MAX_TOKENS {
            let mut digits = vec![0usize; len];
            loop {
                let text = digits.iter().map(|d| alphabet[*d]).collect::<Vec<_>>().join(" ");
                let got = parse_word(&g, &text).map(|e| write_word(&g, &e));
                let want = support::oracle_text(&g, &text, ORACLE_STEP_CAP);
                r.check(got.as_ref().ok() == want.as_ref(), || format!("{name}: `{text}`: {got:?} vs oracle {want:?}"));
                words += 1;
                let Some(k) = digits.iter().rposition(|d| *d + 1 < alphabet.len()) else { break };
                digits[k] += 1;
                digits[k + 1..].fill(0);
            }
        }
        r.check(words >= ORACLE_MIN_WORDS, || format!("{name}: only {words} words"));
    }
    r
}

fn e_star_unitary() -> Report {
    merged("unitary", laws_graphs().iter().map(|g| checks::e_star_unitary(g, &mut sample::rng(SEED), UNITARY_PAIRS)))
}

fn cover_duality() -> Report {
    merged("duality", laws_graphs().iter().map(|g| checks::cover_duality(g, &mut sample::rng(SEED), DUALITY_SCRIPTS)))
}

fn point_model() -> Report {
    merged(
        "points",
        [fixtures::g2(), fixtures::g3()].iter().map(|g| checks::point_model(g, &mut sample::rng(SEED), POINT_EXPRS, POINT_SIZE)),
    )
}

fn filter_correspondence() -> Report {
    merged(
        "filters",
        laws_graphs().iter().map(|g| {
            let bounds = Bounds { max_depth: g.primes().len(), max_exp: FILTER_MAX_EXP, max_len: FILTER_MAX_LEN };
            checks::filter_correspondence(g, bounds)
        }),
    )
}

fn groupoid_laws() -> Report {
    merged("groupoid", laws_graphs().iter().map(|g| checks::groupoid_laws(g, &mut sample::rng(SEED), GERMS)))
}

fn typ_theorem() -> Report {
    merged(
        "typ",
        laws_graphs().iter().map(|g| checks::typ_theorem(g, &mut sample::rng(SEED), TYP_PAIRS, Budget::default())),
    )
}

fn refinement() -> Report {
    merged("refinement", laws_graphs().iter().map(|g| checks::refinement(g, REFINE_WEIGHT, Budget::default())))
}

fn main() -> ExitCode {
    let verdicts = [
        timed(1, "semigroup laws on g1-g3", Some(LAWS_LIMIT), semigroup_laws),
        timed(2, "parse_word equals the rewriting oracle", Some(ORACLE_LIMIT), oracle_equivalence),
        timed(3, "E*-unitarity", None, e_star_unitary),
        timed(4, "cover/expansion duality", None, cover_duality),
        timed(5, "cylinder algebra vs point model", None, point_model),
        timed(6, "filter correspondence", None, filter_correspondence),
        timed(7, "groupoid laws", None, groupoid_laws),
        timed(8, "type semigroup theorem", Some(TYP_LIMIT), typ_theorem),
        timed(9, "concrete monoid identities", None, || checks::monoid_identities(Budget::default())),
        timed(10, "refinement", None, refinement),
    ];
    let mut failed = 0;
    for v in &verdicts {
        let verdict = if v.passed() { "PASS" } else { "FAIL" };
        let limit = v.limit.map(|l| format!(", limit {}s", l.as_secs())).unwrap_or_default();
        println!(
            "{verdict} criterion {:>2}: {} ({} cases, {} failed, {:.2}s{limit})",
            v.id,
            v.title,
            v.report.cases,
            v.report.failed,
            v.elapsed.as_secs_f64()
        );
        for e in &v.report.examples {
            println!("    {e}");
        }
        if !v.passed() {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria passed", verdicts.len() - failed, verdicts.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
