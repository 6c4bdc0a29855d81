//! Exact counting of `n x n` matrices with a fixed determinant over
//! commutative finite chain rings and commutative finite principal ideal
//! rings, together with a brute-force enumeration oracle that verifies every
//! closed form at desk scale.
//!
//! The crate is organized around five layers:
//!
//! * [`rings`] — chain rings `Z_{p^e}` and `F_q[u]/(u^e)`, quotients, and
//!   product rings, with exact element arithmetic and enumeration;
//! * [`matrix`] — exact matrix arithmetic and determinants;
//! * [`counting`] — the closed-form counts in arbitrary precision, their
//!   cross-check identities, and per-valuation-class tables;
//! * [`oracle`] — exhaustive and sampled determinant tallies compared
//!   against the closed forms;
//! * [`cli`] — the `detcount` command-line tool.

pub mod cli;
pub mod counting;
pub mod error;
pub mod matrix;
pub mod oracle;
pub mod rings;

pub use error::{Error, Result};
