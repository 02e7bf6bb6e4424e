//! Exact ordinal arithmetic below ε₀.
//!
//! * [`ordinal`]: Cantor normal form values, ordered sum, Hessenberg natural
//!   sum, truncation.
//! * [`sequence`]: finitely described ω-sequences and the closed forms of
//!   their infinite natural and ordered sums.
//! * [`mixed`]: mixed-sum certificates, the maximal left-finite mixed sum and
//!   enumeration of piecewise convex values.
//! * [`oracle`]: independent brute-force re-derivations for cross-checking.
//! * [`parse`]: the text formats used by the `ord` command line tool.

pub mod error;
pub mod mixed;
pub mod oracle;
pub mod ordinal;
pub mod parse;
pub mod sequence;

pub use error::{
    CertificateError, MixedSumError, OracleError, OrdinalError, ParseError, SequenceError,
};
pub use mixed::{Block, Certificate, ValueSet};
pub use ordinal::{Ordinal, Term, DEFAULT_DEPTH_LIMIT};
pub use parse::{parse_certificate, parse_ordinal, parse_sequence};
pub use sequence::{OmegaSequence, SumAnalysis, Tail};
