//! Exact-arithmetic hyperhomology of small Gobelin complexes.
//!
//! Given a zero-dimensional Gorenstein algebra `B` presented as a
//! polynomial quotient and two syzygies between two elements of `B`,
//! this crate builds the associated Koszul and Gobelin total complexes,
//! computes their (co)homology with exact linear algebra over ℚ or 𝔽_p,
//! derives the two flags of colon ideals, and mechanically checks the
//! dimension identities and exact sequences relating all of them.

pub mod error;
pub mod exactlin;

pub use error::{Error, Result};
