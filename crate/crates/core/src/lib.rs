//! Exact verification of `(q,t)`-deformed hook product formulas for reverse
//! (shifted) plane partitions and d-complete posets.
//!
//! Identities between generating functions are checked coefficientwise in
//! exact rational arithmetic, with `q` and `t` specialized to random rational
//! points and every series truncated at a total degree bound.

pub mod dcomplete;
pub mod enumerate;
pub mod error;
pub mod harness;
pub mod macdonald;
pub mod par;
pub mod qtcore;
pub mod tableaux;

pub use error::{Error, Result};
