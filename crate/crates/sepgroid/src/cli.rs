//! Command dispatch for the `sepgroid` binary.
//!
//! [`run`] parses a command line, performs the command and returns the exit
//! status together with the text to print. Exit status: 0 for success or
//! Yes, 1 for No or false, 2 for Unknown, 64 for usage errors, 65 for
//! malformed input and 66 for an unreadable graph file.

use std::ffi::OsString;
use std::path::Path as FsPath;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use sepgroid_core::enumerate;
use sepgroid_core::filters::{self, Bounds};
use sepgroid_core::groupoid;
use sepgroid_core::lattice::{self, CompactOpen, EPath};
use sepgroid_core::monoid::{self, Budget, Decision};
use sepgroid_core::semigroup;
use sepgroid_core::{Element, SeparatedGraph};

use crate::checks::{self, Scale};
use crate::fixtures;
use crate::formats::{
    parse_compact_open, parse_germ, parse_graph, parse_idempotent, parse_idempotent_list, parse_mon_elem, parse_path,
    parse_script, parse_word, write_certificate, write_compact_open, write_germ, write_mon_elem, write_path,
    write_script, write_word, ParseError,
};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_PARSE: i32 = 65;
pub const EXIT_NO_INPUT: i32 = 66;

/// Published shape of every `--json` document.
pub const JSON_SCHEMA: &str = include_str!("../schema.json");

#[derive(Parser, Debug)]
#[command(name = "sepgroid", version, about = "Inverse semigroups, groupoids and type monoids of separated graphs")]
struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Rewrite states explored per monoid query.
    #[arg(long, global = true, default_value_t = Budget::default().max_states)]
    max_steps: usize,
    /// Largest vector weight visited by monoid searches.
    #[arg(long, global = true, default_value_t = Budget::default().max_weight)]
    max_weight: u32,
    /// Prefix depth bound for bounded filters (default: number of components).
    #[arg(long, global = true)]
    max_depth: Option<usize>,
    /// Free exponent bound for bounded filters.
    #[arg(long, global = true, default_value_t = 6)]
    max_exp: u32,
    /// Path length bound for bounded filters.
    #[arg(long, global = true, default_value_t = 8)]
    max_len: usize,
    /// Seed for randomised commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the adaptability conditions of a graph.
    Validate { graph: String },
    /// Print the normal form of a word.
    Normalize { graph: String, word: String },
    /// Multiply words left to right.
    Mul {
        graph: String,
        #[arg(required = true, num_args = 1..)]
        words: Vec<String>,
    },
    /// Compare two idempotents: order, meet and free join.
    Idempotents { graph: String, e: String, f: String },
    /// Apply an expansion script to an idempotent.
    Expand { graph: String, e: String, script: String },
    /// Is a family an orthogonal finite cover of an idempotent?
    CoverCheck {
        graph: String,
        e: String,
        family: String,
        /// Orthogonalise the family first and print the result.
        #[arg(long)]
        orthogonalize: bool,
    },
    /// Recover an expansion script from an orthogonal cover.
    CoverToExpansion { graph: String, e: String, family: String },
    /// Boolean operations on compact-open sets.
    Cylinders {
        graph: String,
        #[arg(value_enum)]
        op: SetOp,
        a: String,
        b: Option<String>,
    },
    /// Does the filter of a path contain an idempotent?
    FilterContains { graph: String, path: String, word: String },
    /// Is the filter of a path an ultrafilter?
    Ultrafilter { graph: String, path: String },
    /// The germ of an element at an infinite path.
    Germ { graph: String, word: String, path: String },
    /// Check germ membership in a bisection, or that words give bisections.
    BisectionCheck {
        graph: String,
        #[arg(required = true, num_args = 1..)]
        words: Vec<String>,
        /// Check this germ against the single word instead.
        #[arg(long)]
        germ: Option<String>,
    },
    /// Decide equality in the graph monoid.
    MonoidEq { graph: String, x: String, y: String },
    /// Decide the algebraic order in the graph monoid.
    MonoidLeq { graph: String, x: String, y: String },
    /// Refine a + b = c + d.
    Refine { graph: String, a: String, b: String, c: String, d: String },
    /// The type of a compact-open set.
    Typ { graph: String, set: String },
    /// Decide equidecomposability of two compact-open sets.
    Equidecompose { graph: String, a: String, b: String },
    /// Run the property suites on the shipped fixtures.
    Selftest {
        /// Random cases per suite.
        #[arg(long, default_value_t = Scale::default().samples)]
        samples: usize,
    },
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
enum SetOp {
    And,
    Minus,
    Or,
    Empty,
}

/// The outcome of one command before rendering.
struct Outcome {
    code: i32,
    text: String,
    result: Value,
    certificates: Value,
    exhausted: bool,
}

impl Outcome {
    fn new(code: i32, text: impl Into<String>, result: Value) -> Self {
        Outcome { code, text: text.into(), result, certificates: Value::Null, exhausted: false }
    }

    fn truth(flag: bool, text: impl Into<String>, result: Value) -> Self {
        Outcome::new(if flag { EXIT_YES } else { EXIT_NO }, text, result)
    }

    fn with_certificates(mut self, c: Value) -> Self {
        self.certificates = c;
        self
    }
}

enum Failure {
    Parse(ParseError),
    Input(String),
    Usage(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_YES,
                _ => EXIT_USAGE,
            };
            return (code, e.render().to_string());
        }
    };
    let budget = Budget { max_states: cli.max_steps, max_weight: cli.max_weight };
    let name = command_name(&cli.command);
    let inputs = inputs_of(&cli);
    let outcome = dispatch(&cli, budget);
    let budget_json = json!({
        "max_steps": cli.max_steps,
        "max_weight": cli.max_weight,
        "max_depth": cli.max_depth,
        "max_exp": cli.max_exp,
        "max_len": cli.max_len,
        "seed": cli.seed,
    });
    match outcome {
        Ok(o) if cli.json => {
            let doc = json!({
                "command": name,
                "inputs": inputs,
                "budget": budget_json,
                "status": status_word(o.code),
                "exit_code": o.code,
                "result": o.result,
                "certificates": o.certificates,
                "budget_exhausted": o.exhausted,
                "error": Value::Null,
            });
            (o.code, to_pretty(&doc))
        }
        Ok(o) => (o.code, o.text),
        Err(f) => {
            let (code, message, grammar, line) = match f {
                Failure::Parse(e) => (EXIT_PARSE, e.message.clone(), Some(e.grammar), e.line),
                Failure::Input(m) => (EXIT_NO_INPUT, m, None, None),
                Failure::Usage(m) => (EXIT_USAGE, m, None, None),
            };
            if cli.json {
                let doc = json!({
                    "command": name,
                    "inputs": inputs,
                    "budget": budget_json,
                    "status": "error",
                    "exit_code": code,
                    "result": Value::Null,
                    "certificates": Value::Null,
                    "budget_exhausted": false,
                    "error": { "message": message, "grammar": grammar, "line": line },
                });
                (code, to_pretty(&doc))
            } else {
                let mut text = String::from("error: ");
                if let Some(line) = line {
                    text.push_str(&format!("line {line}: "));
                }
                text.push_str(&message);
                if let Some(grammar) = grammar {
                    text.push_str(&format!("\n  expected: {grammar}"));
                }
                (code, text)
            }
        }
    }
}

fn to_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialise")
}

fn status_word(code: i32) -> &'static str {
    match code {
        EXIT_YES => "yes",
        EXIT_NO => "no",
        EXIT_UNKNOWN => "unknown",
        _ => "error",
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Normalize { .. } => "normalize",
        Command::Mul { .. } => "mul",
        Command::Idempotents { .. } => "idempotents",
        Command::Expand { .. } => "expand",
        Command::CoverCheck { .. } => "cover-check",
        Command::CoverToExpansion { .. } => "cover-to-expansion",
        Command::Cylinders { .. } => "cylinders",
        Command::FilterContains { .. } => "filter-contains",
        Command::Ultrafilter { .. } => "ultrafilter",
        Command::Germ { .. } => "germ",
        Command::BisectionCheck { .. } => "bisection-check",
        Command::MonoidEq { .. } => "monoid-eq",
        Command::MonoidLeq { .. } => "monoid-leq",
        Command::Refine { .. } => "refine",
        Command::Typ { .. } => "typ",
        Command::Equidecompose { .. } => "equidecompose",
        Command::Selftest { .. } => "selftest",
    }
}

fn inputs_of(cli: &Cli) -> Value {
    match &cli.command {
        Command::Validate { graph } => json!({ "graph": graph }),
        Command::Normalize { graph, word } => json!({ "graph": graph, "word": word }),
        Command::Mul { graph, words } => json!({ "graph": graph, "words": words }),
        Command::Idempotents { graph, e, f } => json!({ "graph": graph, "e": e, "f": f }),
        Command::Expand { graph, e, script } => json!({ "graph": graph, "e": e, "script": script }),
        Command::CoverCheck { graph, e, family, orthogonalize } => {
            json!({ "graph": graph, "e": e, "family": family, "orthogonalize": orthogonalize })
        }
        Command::CoverToExpansion { graph, e, family } => json!({ "graph": graph, "e": e, "family": family }),
        Command::Cylinders { graph, op, a, b } => {
            json!({ "graph": graph, "op": format!("{op:?}").to_lowercase(), "a": a, "b": b })
        }
        Command::FilterContains { graph, path, word } => json!({ "graph": graph, "path": path, "word": word }),
        Command::Ultrafilter { graph, path } => json!({ "graph": graph, "path": path }),
        Command::Germ { graph, word, path } => json!({ "graph": graph, "word": word, "path": path }),
        Command::BisectionCheck { graph, words, germ } => json!({ "graph": graph, "words": words, "germ": germ }),
        Command::MonoidEq { graph, x, y } | Command::MonoidLeq { graph, x, y } => {
            json!({ "graph": graph, "x": x, "y": y })
        }
        Command::Refine { graph, a, b, c, d } => json!({ "graph": graph, "a": a, "b": b, "c": c, "d": d }),
        Command::Typ { graph, set } => json!({ "graph": graph, "set": set }),
        Command::Equidecompose { graph, a, b } => json!({ "graph": graph, "a": a, "b": b }),
        Command::Selftest { samples } => json!({ "samples": samples }),
    }
}

/// Reads a graph file, falling back to the shipped fixture of that name.
fn load_graph(arg: &str) -> Result<SeparatedGraph, Failure> {
    let path = FsPath::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {arg}: {e}")))?;
        return Ok(parse_graph(&text)?);
    }
    fixtures::by_name(arg).ok_or_else(|| Failure::Input(format!("no graph file or shipped fixture named `{arg}`")))
}

fn graph_arg(c: &Command) -> Option<&str> {
    match c {
        Command::Validate { graph }
        | Command::Normalize { graph, .. }
        | Command::Mul { graph, .. }
        | Command::Idempotents { graph, .. }
        | Command::Expand { graph, .. }
        | Command::CoverCheck { graph, .. }
        | Command::CoverToExpansion { graph, .. }
        | Command::Cylinders { graph, .. }
        | Command::FilterContains { graph, .. }
        | Command::Ultrafilter { graph, .. }
        | Command::Germ { graph, .. }
        | Command::BisectionCheck { graph, .. }
        | Command::MonoidEq { graph, .. }
        | Command::MonoidLeq { graph, .. }
        | Command::Refine { graph, .. }
        | Command::Typ { graph, .. }
        | Command::Equidecompose { graph, .. } => Some(graph),
        Command::Selftest { .. } => None,
    }
}

fn decision_code<T>(d: &Decision<T>) -> i32 {
    match d {
        Decision::Yes(_) => EXIT_YES,
        Decision::No => EXIT_NO,
        Decision::Unknown => EXIT_UNKNOWN,
    }
}

fn dispatch(cli: &Cli, budget: Budget) -> Result<Outcome, Failure> {
    if let Command::Selftest { samples } = cli.command {
        return Ok(selftest(cli.seed, samples, budget));
    }
    let g = &load_graph(graph_arg(&cli.command).expect("graph commands carry a graph"))?;
    let bounds = Bounds { max_depth: cli.max_depth.unwrap_or(g.primes().len()), max_exp: cli.max_exp, max_len: cli.max_len };
    let out = match &cli.command {
        Command::Validate { .. } => {
            let violations: Vec<String> = g.validate().iter().map(ToString::to_string).collect();
            let text = if violations.is_empty() {
                format!("ok: {} adaptable ({} components, {} vertices)", g.name(), g.primes().len(), g.vertex_count())
            } else {
                violations.join("\n")
            };
            Outcome::truth(violations.is_empty(), text, json!({ "ok": violations.is_empty(), "violations": violations }))
        }
        Command::Normalize { word, .. } => {
            let e = parse_word(g, word)?;
            element_outcome(g, &e)
        }
        Command::Mul { words, .. } => {
            let elems = words.iter().map(|w| parse_word(g, w)).collect::<Result<Vec<_>, _>>()?;
            let e = semigroup::product(g, &elems).expect("at least one word");
            element_outcome(g, &e)
        }
        Command::Idempotents { e, f, .. } => {
            let (mu, nu) = (parse_idempotent(g, e)?, parse_idempotent(g, f)?);
            let text_of = |x: &EPath| write_word(g, &lattice::idem_of(g, x));
            let meet = lattice::meet(g, &mu, &nu).map(|m| text_of(&m));
            let join = lattice::join_free(&mu, &nu).ok().map(|j| text_of(&j));
            let (le, ge) = (lattice::leq(g, &mu, &nu), lattice::leq(g, &nu, &mu));
            let text = format!(
                "e <= f: {le}\nf <= e: {ge}\nmeet: {}\njoin: {}",
                meet.as_deref().unwrap_or("0"),
                join.as_deref().unwrap_or("undefined")
            );
            Outcome::new(EXIT_YES, text, json!({ "e_leq_f": le, "f_leq_e": ge, "meet": meet, "join": join }))
        }
        Command::Expand { e, script, .. } => {
            let mu = parse_idempotent(g, e)?;
            let script = parse_script(script)?;
            let set = lattice::expand(g, &mu, &script).map_err(|e| Failure::Usage(e.to_string()))?;
            let words = epath_words(g, &set);
            Outcome::new(EXIT_YES, format!("[{}]", words.join(", ")), json!({ "expanded": words }))
        }
        Command::CoverCheck { e, family, orthogonalize, .. } => {
            let mu = parse_idempotent(g, e)?;
            let mut fam = parse_idempotent_list(g, family)?;
            let mut result = json!({});
            if *orthogonalize {
                fam = lattice::orthogonalize_cover(g, &mu, &fam).map_err(|e| Failure::Usage(e.to_string()))?;
                result["orthogonalized"] = json!(epath_words(g, &fam));
            }
            let cover = lattice::is_cover(g, &mu, &fam);
            let orth = lattice::is_orthogonal_cover(g, &mu, &fam);
            result["cover"] = json!(cover);
            result["orthogonal_cover"] = json!(orth);
            let mut text = format!("cover: {cover}\northogonal cover: {orth}");
            if *orthogonalize {
                text = format!("[{}]\n{text}", epath_words(g, &fam).join(", "));
            }
            Outcome::truth(orth, text, result)
        }
        Command::CoverToExpansion { e, family, .. } => {
            let mu = parse_idempotent(g, e)?;
            let fam = parse_idempotent_list(g, family)?;
            match lattice::cover_to_expansion(g, &mu, &fam) {
                Ok(script) => {
                    let s = write_script(&script);
                    Outcome::new(EXIT_YES, s.clone(), json!({ "script": s }))
                }
                Err(e) => Outcome::new(EXIT_NO, format!("no script: {e}"), json!({ "script": Value::Null, "reason": e.to_string() })),
            }
        }
        Command::Cylinders { op, a, b, .. } => {
            let sa = parse_compact_open(g, a)?;
            let second = || -> Result<CompactOpen, Failure> {
                let b = b.as_deref().ok_or_else(|| Failure::Usage(format!("`{op:?}` takes two sets").to_lowercase()))?;
                Ok(parse_compact_open(g, b)?)
            };
            let set = match op {
                SetOp::And => sa.intersect(g, &second()?),
                SetOp::Minus => sa.subtract(g, &second()?),
                SetOp::Or => sa.union(g, &second()?),
                SetOp::Empty => {
                    if b.is_some() {
                        return Err(Failure::Usage("`empty` takes one set".into()));
                    }
                    let empty = sa.is_empty();
                    return Ok(Outcome::truth(empty, format!("empty: {empty}"), json!({ "empty": empty })));
                }
            };
            let text = write_compact_open(g, &set);
            Outcome::new(EXIT_YES, text.clone(), json!({ "set": text, "cylinders": set.cylinders().len() }))
        }
        Command::FilterContains { path, word, .. } => {
            let x = parse_path(g, path)?;
            let e = parse_word(g, word)?;
            let member = filters::filter_contains(g, &x, &e).map_err(|e| Failure::Usage(e.to_string()))?;
            Outcome::truth(member, format!("contains: {member}"), json!({ "contains": member }))
        }
        Command::Ultrafilter { path, .. } => {
            let x = parse_path(g, path)?;
            let ultra = filters::is_ultrafilter(&x);
            let members = enumerate::epaths(g, bounds).iter().filter(|m| filters::is_initial_segment(g, m, &x)).count();
            let mut result = json!({ "ultrafilter": ultra, "bounded_members": members });
            let mut text = format!("ultrafilter: {ultra}\nmembers within bounds: {members}");
            if !ultra {
                if let Some(ext) = filters::infinite_extension(g, &x) {
                    let t = write_path(g, &ext);
                    text.push_str(&format!("\nstrictly contained in the filter of {t}"));
                    result["extension"] = json!(t);
                }
                if let Ok((xs, ys)) = filters::separation_witness(g, &x) {
                    let (xs, ys) = (element_words(g, &xs), element_words(g, &ys));
                    text.push_str(&format!("\nseparation: [{}] vs [{}]", xs.join(", "), ys.join(", ")));
                    result["separation"] = json!({ "inside": xs, "outside": ys });
                }
            }
            Outcome::truth(ultra, text, result)
        }
        Command::Germ { word, path, .. } => {
            let s = parse_word(g, word)?;
            let x = parse_path(g, path)?;
            let germ = groupoid::germ_of(g, &s, &x).map_err(|e| Failure::Usage(e.to_string()))?;
            let text = write_germ(g, &germ);
            let inside = groupoid::in_bisection(g, &germ, &s);
            Outcome::new(
                EXIT_YES,
                format!("{text}\nrange: {}", write_path(g, &germ.y)),
                json!({ "germ": text, "range": write_path(g, &germ.y), "in_bisection": inside }),
            )
        }
        Command::BisectionCheck { words, germ, .. } => {
            let elems = words.iter().map(|w| parse_word(g, w)).collect::<Result<Vec<_>, _>>()?;
            if let Some(germ) = germ {
                let [s] = &elems[..] else {
                    return Err(Failure::Usage("--germ takes exactly one word".into()));
                };
                let h = parse_germ(g, germ)?;
                let inside = groupoid::in_bisection(g, &h, s);
                Outcome::truth(inside, format!("in bisection: {inside}"), json!({ "in_bisection": inside }))
            } else {
                let ok = groupoid::is_bisection_family(g, &elems);
                let mut ends = Vec::new();
                for s in &elems {
                    if let Ok((src, rng)) = groupoid::bisection_endpoints(g, s) {
                        ends.push(json!({ "source": write_compact_open(g, &src), "range": write_compact_open(g, &rng) }));
                    } else {
                        ends.push(Value::Null);
                    }
                }
                let lines: Vec<String> = ends
                    .iter()
                    .zip(words)
                    .map(|(e, w)| match e {
                        Value::Null => format!("{w}: zero"),
                        e => format!("{w}: {} -> {}", e["source"].as_str().unwrap_or(""), e["range"].as_str().unwrap_or("")),
                    })
                    .collect();
                Outcome::truth(ok, format!("{}\nbisection family: {ok}", lines.join("\n")), json!({ "family": ok, "endpoints": ends }))
            }
        }
        Command::MonoidEq { x, y, .. } => {
            let (a, b) = (parse_mon_elem(g, x)?, parse_mon_elem(g, y)?);
            let pres = g.monoid_presentation();
            let d = pres.mon_eq(&a, &b, budget);
            let code = decision_code(&d);
            match d {
                Decision::Yes(path) => {
                    let states: Vec<String> = path.states.iter().map(|m| write_mon_elem(g, m)).collect();
                    let steps: Vec<String> = path.steps.iter().map(ToString::to_string).collect();
                    let mut text = format!("Yes ({} step{})", path.len(), if path.len() == 1 { "" } else { "s" });
                    for (i, st) in states.iter().enumerate() {
                        text.push_str(&format!("\n  {st}"));
                        if let Some(step) = steps.get(i) {
                            text.push_str(&format!("\n    {step}"));
                        }
                    }
                    Outcome::new(code, text, json!({ "answer": "Yes", "steps": path.len() }))
                        .with_certificates(json!({ "states": states, "rewrites": steps }))
                }
                d => decided(d.word(), code),
            }
        }
        Command::MonoidLeq { x, y, .. } => {
            let (a, b) = (parse_mon_elem(g, x)?, parse_mon_elem(g, y)?);
            let d = g.monoid_presentation().mon_leq(&a, &b, budget);
            let code = decision_code(&d);
            match d {
                Decision::Yes(z) => {
                    let z = write_mon_elem(g, &z);
                    Outcome::new(code, format!("Yes: x + {z} = y"), json!({ "answer": "Yes" }))
                        .with_certificates(json!({ "difference": z }))
                }
                d => decided(d.word(), code),
            }
        }
        Command::Refine { a, b, c, d, .. } => {
            let [a, b, c, d] = [a, b, c, d].map(|t| parse_mon_elem(g, t));
            let (a, b, c, d) = (a?, b?, c?, d?);
            let res = g.monoid_presentation().refinement_witness(&a, &b, &c, &d, budget);
            let code = decision_code(&res);
            match res {
                Decision::Yes(r) => {
                    let [w, x, y, z] = [&r.w, &r.x, &r.y, &r.z].map(|m| write_mon_elem(g, m));
                    let text = format!("w = {w}\nx = {x}\ny = {y}\nz = {z}");
                    Outcome::new(code, text, json!({ "answer": "Yes" }))
                        .with_certificates(json!({ "w": w, "x": x, "y": y, "z": z }))
                }
                d => decided(d.word(), code),
            }
        }
        Command::Typ { set, .. } => {
            let a = parse_compact_open(g, set)?;
            let t = write_mon_elem(g, &monoid::typ_of(g, &a));
            Outcome::new(EXIT_YES, t.clone(), json!({ "typ": t }))
        }
        Command::Equidecompose { a, b, .. } => {
            let (sa, sb) = (parse_compact_open(g, a)?, parse_compact_open(g, b)?);
            let d = monoid::equidecompose(g, &sa, &sb, budget).map_err(|e| Failure::Usage(e.to_string()))?;
            let code = decision_code(&d);
            match d {
                Decision::Yes(cert) => {
                    let text = write_certificate(g, &cert);
                    let verified = cert.verify(g, &sa, &sb);
                    Outcome::new(code, text.clone(), json!({ "answer": "Yes", "verified": verified }))
                        .with_certificates(json!({ "bijections": element_words(g, &cert.elements), "text": text }))
                }
                d => decided(d.word(), code),
            }
        }
        Command::Selftest { .. } => unreachable!("handled above"),
    };
    Ok(out)
}

fn decided(word: &'static str, code: i32) -> Outcome {
    let mut o = Outcome::new(code, word, json!({ "answer": word }));
    o.exhausted = code == EXIT_UNKNOWN;
    o
}

fn element_words(g: &SeparatedGraph, elems: &[Element]) -> Vec<String> {
    elems.iter().map(|e| write_word(g, e)).collect()
}

fn epath_words(g: &SeparatedGraph, family: &[EPath]) -> Vec<String> {
    family.iter().map(|m| write_word(g, &lattice::idem_of(g, m))).collect()
}

fn element_outcome(g: &SeparatedGraph, e: &Element) -> Outcome {
    let word = write_word(g, e);
    let idem = e.is_idempotent();
    let ends = e.endpoints().ok().map(|(s, r)| json!({ "source": g.vertex(s).name, "range": g.vertex(r).name }));
    let mut text = word.clone();
    if idem {
        text.push_str("  (idempotent)");
    }
    Outcome::new(EXIT_YES, text, json!({ "word": word, "zero": e.is_zero(), "idempotent": idem, "endpoints": ends }))
}

fn selftest(seed: u64, samples: usize, budget: Budget) -> Outcome {
    let scale = Scale { samples, ..Scale::default() };
    let reports = checks::run_all(seed, scale, budget);
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let mut lines: Vec<String> = reports.iter().map(ToString::to_string).collect();
    lines.push(format!("{} suites, {} passed, {failed} failed", reports.len(), reports.len() - failed));
    let result = json!({
        "suites": reports
            .iter()
            .map(|r| json!({ "name": r.name, "cases": r.cases, "failed": r.failed, "passed": r.passed(), "examples": r.examples }))
            .collect::<Vec<_>>(),
        "passed": reports.len() - failed,
        "failed": failed,
    });
    Outcome::truth(failed == 0, lines.join("\n"), result)
}
