//! Graphs: rooted and signed graphs, rowing graphs, caterpillars, signed
//! colorings and switching.

mod coloring;
mod encoding;
mod graph;
mod rowing;

pub use coloring::{p_color, Coloring};
pub use encoding::{from_json, to_dot, to_json, Encoding};
pub use graph::{EdgeSign, Graph, RootedGraph, SignedGraph};
pub use rowing::{build_rowing, builtin, caterpillar, RowingString, BUILTIN_NAMES};
