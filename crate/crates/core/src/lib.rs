//! Record codes of Cayley trees, the weary-parking bijection between Cayley
//! trees and parking functions, and the statistics it carries across.
//!
//! Trees are rooted at `0` and stored as parent maps; see [`tree::CayleyTree`].
//! The record code ([`codec`]) is a bijection onto `[n]₀^{n−1}`. [`parking::rho`]
//! sends a parking function to its parking tree and [`parking::rho_inv`] reads
//! back the preference sequence of a tree. [`verify`] checks everything
//! exhaustively at small orders.

pub mod cli;
pub mod codec;
pub mod decomposition;
pub mod error;
pub mod families;
pub mod parking;
pub mod permutation;
pub mod stats;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
