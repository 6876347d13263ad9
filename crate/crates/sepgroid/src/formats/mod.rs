//! Text formats: graph files, words, path literals, compact-open
//! expressions, monoid elements, germs and certificates.
//!
//! Every parser reports the grammar rule it expected, so command-line usage
//! errors can quote it back.

use std::fmt;

mod graph;
mod monoid;
mod path;
mod set;
mod word;

pub use graph::{parse_graph, write_graph};
pub use monoid::{parse_certificate, parse_mon_elem, write_certificate, write_mon_elem};
pub use path::{parse_germ, parse_path, parse_seq, write_germ, write_path};
pub use set::{parse_compact_open, parse_script, write_compact_open, write_script};
pub use word::{parse_idempotent, parse_idempotent_list, parse_word, write_word};

pub const GRAPH_GRAMMAR: &str = "graph NAME | free P k=K | X I -> V1 [V2 ...] | regular P | vertex V ... \
                                 | edge NAME: V -> W | connector NAME: V -> U";
pub const WORD_GRAMMAR: &str = "tokens v:NAME e:NAME e:NAME* a:P.J a:P.J* b:P.I.T b:P.I.T* t:V.I t:V.I^-1 0";
pub const SET_GRAMMAR: &str = "Z(<word>) combined with & - + and parentheses, or `empty`";
pub const PATH_GRAMMAR: &str = "[<step word>] ; free(k1,...,kn | inf) or [<step word>] ; reg(<edges> ; <cycle edges>)";
pub const SEQ_GRAMMAR: &str = "(d1,d2,...) with integer entries";
pub const GERM_GRAMMAR: &str = "(<path> ; <seq> ; <seq> ; <path>)";
pub const MONOID_GRAMMAR: &str = "N*a:V + a:W + ... or 0";
pub const CERT_GRAMMAR: &str = "[<word>, <word>, ...]";
pub const LIST_GRAMMAR: &str = "[<idempotent word>, <idempotent word>, ...]";
pub const SCRIPT_GRAMMAR: &str = "comma-separated POS or POS:CHOICE, positions from 0";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: Option<usize>,
    pub message: String,
    pub grammar: &'static str,
}

impl ParseError {
    pub(crate) fn new(grammar: &'static str, message: impl Into<String>) -> Self {
        ParseError { line: None, message: message.into(), grammar }
    }

    pub(crate) fn at(mut self, line: usize) -> Self {
        self.line = Some(line);
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(line) = self.line {
            write!(f, "line {line}: ")?;
        }
        write!(f, "{} (expected: {})", self.message, self.grammar)
    }
}

impl std::error::Error for ParseError {}

/// Valid user-chosen names: letters, digits, `_` and `'`.
pub(crate) fn is_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}
