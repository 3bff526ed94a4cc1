//! Certified recomputation of the explicit counting bound for Diophantine
//! quintuples (at most 1.18e27 of them).
//!
//! The crate rebuilds the whole chain of published constants under
//! outward-rounded interval arithmetic: admissible Pell-parameter values
//! (`alpha`), iterated upper bounds on the fourth element from linear forms
//! in logarithms (`logforms`), explicit divisor-sum estimates (`sums`), the
//! per-case quintuple counts with their range-splitting refinement
//! (`counting`), and the prime-swap enumeration that lowers the
//! distinct-prime-factor cap (`primeswap`). Desk-scale claims are
//! cross-checked against the exact brute-force oracles in `oracle`.

pub mod alpha;
pub mod counting;
pub mod error;
pub mod exact;
pub mod interval;
pub mod logforms;
pub mod oracle;
pub mod primeswap;
pub mod report;
pub mod sums;
pub mod table;

pub use error::{Error, Result};
pub use interval::Interval;
