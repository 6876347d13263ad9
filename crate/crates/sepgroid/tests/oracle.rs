//! `parse_word` against the rewriting oracle beyond the acceptance
//! alphabets: full generator sets, longer words, and the extra fixture.

mod support;

use sepgroid::fixtures;
use sepgroid::formats::{parse_word, write_word};
use sepgroid::sample;
use sepgroid_core::SeparatedGraph;

const STEP_CAP: usize = 10_000;

fn graphs() -> Vec<(&'static str, SeparatedGraph)> {
    let mut graphs = fixtures::all();
    graphs.push(("g4", support::g4()));
    graphs
}

fn agree(g: &SeparatedGraph, text: &str) -> Result<(), String> {
    let got = write_word(g, &parse_word(g, text).map_err(|e| e.to_string())?);
    match support::oracle_text(g, text, STEP_CAP) {
        Some(want) if want == got => Ok(()),
        want => Err(format!("{}: `{text}` gave {got}, oracle {want:?}", g.name())),
    }
}

#[test]
fn all_short_words_over_full_alphabets() {
    for (_, g) in graphs() {
        let toks: Vec<String> = sample::alphabet(&g, 2).into_iter().map(|x| x.token).collect();
        let mut words: Vec<String> = vec![String::new()];
        for _ in 0..3 {
            words = words.iter().flat_map(|w| toks.iter().map(move |t| format!("{w} {t}"))).collect();
            for w in &words {
                agree(&g, w).unwrap();
            }
        }
    }
}

#[test]
fn random_long_walks() {
    let mut rng = sample::rng(7);
    for (_, g) in graphs() {
        let gens = sample::alphabet(&g, 3);
        for _ in 0..5_000 {
            let w = sample::random_word(&mut rng, &gens, 16);
            agree(&g, &sample::word_text(&gens, &w)).unwrap();
        }
    }
}

#[test]
fn oracle_handles_the_defining_examples() {
    let g3 = fixtures::g3();
    assert_eq!(support::oracle_text(&g3, "a:p.1* a:p.1", STEP_CAP).as_deref(), Some("v:p"));
    assert_eq!(support::oracle_text(&g3, "b:p.1.1* a:p.1", STEP_CAP).as_deref(), Some("0"));
    let g1 = fixtures::g1();
    assert_eq!(support::oracle_text(&g1, "a:p.2 b:p.1.1", STEP_CAP).as_deref(), Some("b:p.1.1 t:q1.1"));
    assert_eq!(support::oracle_text(&g1, "t:p.3 b:p.1.1", STEP_CAP).as_deref(), Some("b:p.1.1 t:q1.4"));
}
