//! File formats, shipped fixtures, random samplers and property suites for
//! separated graph semigroups, plus the `sepgroid` command-line front end.

pub mod checks;
pub mod cli;
pub mod fixtures;
pub mod formats;
pub mod sample;
