//! Exact enumeration of block-separated overpartitions.
//!
//! An overpartition may overline the first occurrence of each distinct
//! part. It is *block-separated* when no two consecutive distinct part
//! sizes are both overlined. Writing `b(n)` for the number of such
//! overpartitions of `n`, this crate computes
//!
//! ```text
//! sum_n b(n) q^n = 1 + 2q + 4q^2 + 7q^3 + 12q^4 + 19q^5 + ...
//! ```
//!
//! by four independent routes:
//!
//! * [`transfer::matrix_product_gf`]: a two-state transfer-matrix product,
//! * [`recurrence::euler_factorized_gf`]: the Euler factor `1/(q)_inf`
//!   times a normalized two-term recurrence,
//! * [`symfun::fibonacci_weighted_gf`]: `sum_r F_{r+2} e_r(S_1, S_2, ...)`,
//! * [`enumerate`]: brute-force construction of every object.
//!
//! All arithmetic is exact ([`num_bigint::BigInt`] coefficients).
//!
//! ```
//! use blocksep::transfer::matrix_product_gf;
//! use blocksep::symfun::fibonacci_weighted_gf;
//!
//! let f = matrix_product_gf(10);
//! let b: Vec<String> = f.coeffs().iter().map(|c| c.to_string()).collect();
//! assert_eq!(b.join(","), "1,2,4,7,12,19,31,47,72,107,157");
//! assert_eq!(f, fibonacci_weighted_gf(10));
//! ```

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod fibonacci;
pub mod qseries;
pub mod recurrence;
pub mod symfun;
pub mod transfer;

pub use error::{Error, Result};
pub use qseries::TruncatedSeries;

/// The guide under `book/`, compiled so its snippets run under `cargo test`.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/series.md")]
    pub mod series {}
    #[doc = include_str!("../../../book/src/automaton.md")]
    pub mod automaton {}
    #[doc = include_str!("../../../book/src/euler.md")]
    pub mod euler {}
    #[doc = include_str!("../../../book/src/fibonacci.md")]
    pub mod fibonacci {}
    #[doc = include_str!("../../../book/src/symmetric.md")]
    pub mod symmetric {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    pub mod enumeration {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
