//! Permutation groups, graphs and a certificate-producing search for
//! semiregular automorphisms of 8-valent arc-transitive graphs.

pub mod actions;
pub mod alternets;
pub mod arith;
pub mod error;
pub mod finder;
pub mod graphs;
pub mod io;
pub mod oracle;
pub mod permcore;
pub mod unionfind;

pub use error::{Error, Result};
pub use permcore::{Partition, PermGroup, Permutation};
