//! Certified eigenvalue engine: inertia, smallest eigenvalues as exact
//! brackets, characteristic polynomials, Rayleigh quotients and the
//! infinite-tail tests.

mod eig;
mod fraction_free;
mod matrix;
mod tail;

pub use eig::{
    charpoly, charpoly_sign_from_inertia, charpoly_with_limit, default_tol, lambda1,
    lambda1_matrix, multiplicity, rayleigh, rayleigh_matrix, verify_bound, EigBound,
    CHARPOLY_LIMIT,
};
pub use matrix::{adjacency, adjacency_in, Inertia, SymMatrix};
pub use tail::{
    alpha_beta, alpha_beta_in, corner_inertia, decide_tail_pattern, lambda1_tail,
    lambda1_tail_pattern, psd_shifted, psd_shifted_with, tail_y, PsdMode, TailPattern,
};

/// Eigenvalues of `a` strictly below `t`.
pub fn inertia_below(
    a: &SymMatrix<crate::exactnum::Rational>,
    t: &crate::exactnum::Rational,
) -> usize {
    a.inertia_below(t)
}
