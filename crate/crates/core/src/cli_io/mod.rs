//! Parsing, JSON requests and reports, and the randomized verifier behind
//! the `topann` command-line tool.

pub mod parse;
pub mod random;
pub mod request;
pub mod verify;

pub use parse::{format_ideal, format_monomial, format_prime, parse_ideal, parse_ideal_str, parse_monomial, parse_prime};
pub use request::{run, Command, Limits, Report, Request, SCHEMA_VERSION};
pub use verify::{verify, VerifyConfig, VerifyReport};
