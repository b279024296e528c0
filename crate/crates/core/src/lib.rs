//! Deciding chain minors of finite posets.
//!
//! P is a chain minor of Q when some partial map from Q's elements to P's
//! sends, for every chain of P, some chain of Q onto it element by element.
//! The crate provides:
//!
//! - [`poset`]: posets, chains, the `.poset` text format, generators and
//!   exhaustive enumeration of small labeled posets;
//! - [`witness`]: a linear-time (per chain of P) witness verifier and core
//!   extraction;
//! - [`random`]: the randomized color-coding solver;
//! - [`splitter`]: splitter families and the deterministic solver;
//! - [`oracle`]: brute force over all mappings with a definition-level checker;
//! - [`solve`]: mode selection; [`report`]: results and their JSON form;
//! - [`bench`]: scaling measurements.

pub mod bench;
pub mod error;
pub mod mapping;
pub mod oracle;
pub mod poset;
pub mod random;
pub mod report;
mod search;
pub mod solve;
pub mod splitter;
pub mod witness;

pub use error::{Error, Result};
pub use mapping::{parse_mapping, serialize_mapping, Mapping};
pub use poset::{parse_poset, serialize_poset, Chain, ChainList, Poset};
pub use report::{Answer, Mode, ReportDocument, SolveReport};
pub use witness::{extract_core, realize_chain, verify_witness, CoreSet};
