use crate::error::{Error, Result};
use crate::exactnum::{int, Rational};

/// Knobs for the witness searches.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    /// Longest string (rowing symbols or spine length) the search will try.
    pub max_len: usize,
    /// Node expansions allowed before giving up.
    pub max_nodes: usize,
    /// Bisection tolerance; `epsilon / 8` when unset. Must stay below
    /// `epsilon / 4`.
    pub tol: Option<Rational>,
    /// Threads used to expand frontier nodes ahead of time.
    pub width: usize,
    /// Forces the rooted base instead of choosing it from `lambda`.
    pub base: Option<String>,
    /// Longest run of trailing zeros grown one symbol at a time.
    pub zero_run_cap: usize,
    /// Most legs on one spine vertex.
    pub leg_cap: u32,
}

impl Default for SearchConfig {
    fn default() -> SearchConfig {
        SearchConfig {
            max_len: 64,
            max_nodes: 20_000,
            tol: None,
            width: 1,
            base: None,
            zero_run_cap: 6,
            leg_cap: 8,
        }
    }
}

impl SearchConfig {
    pub fn with_width(mut self, width: usize) -> SearchConfig {
        self.width = width;
        self
    }

    pub(crate) fn tolerance(&self, eps: &Rational) -> Result<Rational> {
        let quarter = eps / int(4);
        match &self.tol {
            None => Ok(eps / int(8)),
            Some(t) if t > &int(0) && t < &quarter => Ok(t.clone()),
            Some(_) => Err(Error::OutOfRange(
                "tolerance must lie in (0, epsilon/4)".into(),
            )),
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if self.max_len == 0 || self.max_nodes == 0 || self.width == 0 || self.leg_cap == 0 {
            return Err(Error::OutOfRange("search limits must be positive".into()));
        }
        Ok(())
    }
}
