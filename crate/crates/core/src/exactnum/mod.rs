//! Exact arithmetic kernel: rationals, polynomials, Sturm root isolation,
//! real algebraic numbers and quadratic-field elements.
//!
//! All values are immutable once built and every operation is a pure
//! function, so everything here is freely shareable across threads.

pub mod algreal;
pub mod bipoly;
pub mod field;
pub mod poly;
pub mod quad;
pub mod rational;
pub mod sturm;

pub use algreal::AlgReal;
pub use bipoly::BiPoly;
pub use field::{bareiss_det, Field, Ring};
pub use poly::UPoly;
pub use quad::{quad_sign, QuadExt, Surd};
pub use rational::{fmt_rational, int, parse_rational, rat, Rational, Sign};
pub use sturm::{isolate_real_roots, sturm_count, sturm_count_open, SturmChain};

/// Isolating subinterval of width at most `tol` (alias of [`AlgReal::refine`]).
pub fn refine(a: &AlgReal, tol: &Rational) -> (Rational, Rational) {
    a.refine(tol)
}
