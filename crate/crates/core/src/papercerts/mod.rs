//! Checkers for the explicit constants, identities, determinants, quotients
//! and inequalities behind the rowing-graph constructions. Each checker
//! returns a list of [`CertReport`]s.

mod constants;
mod identities;
mod prop46;
mod random;
mod report;

pub use constants::{
    alpha_m, beta_poly, cert_constants, decimal_bracket, lambda_prime, lambda_star, phi,
    phi_inv_sqrt, rho, ConstantsTable,
};
pub use identities::{
    alpha_ge_beta, alpha_minus_beta, c1_symbolic, cert_eq_4_1, cert_lemma_4_1, expected_det_c1,
    expected_det_c1_prime, expected_rational_function, substituted_rational_function, FACTOR_10,
    FACTOR_12, POLY_A, POLY_B, POLY_C,
};
pub use prop46::{
    cert_prop_3_7_3_8, cert_prop_4_6, corner_matrix, m2_displayed, m3_displayed, test_vectors,
    truncation_check, x2, x3, y2_relaxed, y3_relaxed, Z1, Z2, Z3,
};
pub use random::{
    appendix_ell, appendix_m, cert_appendix, cert_lemma_3_6, ell_instance, lemma_3_6_exhaustive,
    lemma_3_6_instance, m_instance, path_charpoly, weyl_instance, Lemma36Outcome,
};
pub use report::{CertReport, Status};

use crate::exactnum::{rat, Rational};
use rayon::prelude::*;

/// Tolerances for the path-splitting recipes in a default run.
pub fn default_epsilons() -> Vec<Rational> {
    vec![rat(1, 1), rat(1, 2), rat(1, 4)]
}

type Group = (&'static str, Box<dyn Fn() -> Vec<CertReport> + Send + Sync>);

fn groups(seed: u64, trials: usize) -> Vec<Group> {
    let mut out: Vec<Group> = vec![
        ("constants", Box::new(cert_constants)),
        ("eq-4.1", Box::new(cert_eq_4_1)),
        ("lemma-4.1", Box::new(cert_lemma_4_1)),
        ("prop-4.", Box::new(cert_prop_4_6)),
        ("prop-3.", Box::new(cert_prop_3_7_3_8)),
        ("lemma-3.6", Box::new(move || cert_lemma_3_6(trials, seed))),
    ];
    for eps in default_epsilons() {
        out.push((
            "appendix",
            Box::new(move || cert_appendix(&eps, trials, seed)),
        ));
    }
    out
}

/// Runs every checker whose claims can match `only` (a claim-id prefix),
/// in parallel, and returns the reports sorted by claim id. Timing is
/// dropped unless asked for.
pub fn run_selected(only: Option<&str>, seed: u64, trials: usize, timing: bool) -> Vec<CertReport> {
    let wanted = |prefix: &str| match only {
        None => true,
        Some(o) => o.starts_with(prefix) || prefix.starts_with(o),
    };
    let mut reports: Vec<CertReport> = groups(seed, trials)
        .into_par_iter()
        .filter(|(prefix, _)| wanted(prefix))
        .flat_map(|(_, f)| f())
        .filter(|r| only.is_none_or(|o| r.claim.starts_with(o)))
        .collect();
    reports.sort_by(|a, b| a.claim.cmp(&b.claim));
    if !timing {
        for r in &mut reports {
            r.elapsed_ms = None;
        }
    }
    reports
}

pub fn run_all(seed: u64, trials: usize, timing: bool) -> Vec<CertReport> {
    run_selected(None, seed, trials, timing)
}
