//! Joint constituency and dependency decoding over explicit score charts.
//!
//! A [`ScoreChart`] holds every score a parser's scorers would emit for one
//! sentence. Decoders turn charts into trees:
//!
//! | decoder | output | time |
//! |---|---|---|
//! | [`cky_decode`] | constituent tree | O(n³) |
//! | [`eisner_decode`] | projective dependency tree | O(n³) |
//! | [`mst_decode`] | dependency tree | O(n³) |
//! | [`hpsg_decode`] | joint tree, exhaustive head search | O(n⁵) |
//! | [`h3n_decode`] | joint tree, heads from head scores | O(n³) |
//!
//! The `brute_force_*` functions in [`decode`] enumerate whole search
//! spaces and serve as reference implementations for short sentences.

pub mod bench;
pub mod chart;
pub mod cli;
pub mod convert;
pub mod decode;
pub mod error;
pub mod eval;
pub mod head_rules;
pub mod heads;
pub mod io;
pub mod synth;
pub mod tree;

pub use chart::{oracle_chart, random_chart, HeadLevel, ScoreChart, CAP};
pub use decode::{
    cky_decode, eisner_decode, h3n_decode, hpsg_decode, mst_decode, Algorithm, DecodeResult,
};
pub use error::{Error, Result};
pub use tree::{ConstTree, DepTree, JointNode, JointTree, Node, Sentence, EMPTY_LABEL};
