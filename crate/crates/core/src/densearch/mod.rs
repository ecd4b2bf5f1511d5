//! Witness search: given `lambda` and `epsilon`, find a graph whose smallest
//! eigenvalue is certified to lie in `(-lambda - epsilon, -lambda)`.
//!
//! Between `lambda*` and `lambda'` the search runs over binary rowing graphs
//! on one of `F1`, `F2`, `F3` and returns a 3-coloring; from `lambda'` on it
//! runs over caterpillars and returns the bipartition.

mod config;
mod search;
mod witness;

pub use config::SearchConfig;
pub use search::{
    evaluate_node, find_caterpillar, find_three_colorable, select_base, BaseChoice, NodeEval,
    Verdict,
};
pub use witness::{verify_witness, witness_from_json, Witness};
