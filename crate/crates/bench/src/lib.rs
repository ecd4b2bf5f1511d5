//! Shared inputs for the benchmarks in `benches/`.

use rowing_spectra::graphkit::{build_rowing, builtin, RowingString};
use rowing_spectra::{Graph, Rational};

/// `(F, 0^n)` for one of the built-in bases.
pub fn zero_tail(base: &str, n: usize) -> Graph {
    build_rowing(
        &builtin(base).expect("built-in base"),
        &RowingString::zeros(n),
    )
    .expect("rooted base")
}

/// `(F, a)` for a binary string written as `"0110..."`.
pub fn rowing(base: &str, bits: &str) -> Graph {
    let a = RowingString::new(bits.bytes().map(|b| u32::from(b - b'0')).collect());
    build_rowing(&builtin(base).expect("built-in base"), &a).expect("rooted base")
}

pub fn rat(n: i64, d: i64) -> Rational {
    rowing_spectra::exactnum::rat(n, d)
}
