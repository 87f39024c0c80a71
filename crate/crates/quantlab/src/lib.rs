//! Verification front-end: expression parsing, per-pair pipelines over the
//! oscillator family, and report rendering for the `quantlab` CLI.

pub mod parser;
pub mod pipeline;
pub mod report;

pub use parser::{parse, parse_poly, Expr, ParseError};
pub use pipeline::{
    sweep, verify, verify_ladder_pair, verify_pair, PipelineError, SweepTarget, Target, VerificationRecord,
};
pub use report::Format;
