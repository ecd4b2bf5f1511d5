//! Exact spectral toolkit for rowing graphs.
//!
//! The crate is split into a small exact-arithmetic kernel ([`exactnum`]),
//! graph constructions ([`graphkit`]), a certified smallest-eigenvalue engine
//! ([`spectral`]), checkers for the explicit constants and identities that
//! underpin the rowing-graph density argument ([`papercerts`]), and the search
//! that produces 3-colorable and caterpillar witnesses ([`densearch`]).

pub mod densearch;
pub mod error;
pub mod exactnum;
pub mod graphkit;
pub mod papercerts;
pub mod spectral;

pub use densearch::{SearchConfig, Witness};
pub use error::{Error, Result};
pub use exactnum::{AlgReal, BiPoly, QuadExt, Rational, Sign, UPoly};
pub use graphkit::{Coloring, Graph, RowingString};
pub use spectral::{EigBound, SymMatrix};
