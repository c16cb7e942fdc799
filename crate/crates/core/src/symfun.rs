//! Elementary symmetric functions of the block series and the
//! Fibonacci-weighted expansion.
//!
//! `e_r(S_1, S_2, ...)` generates partitions with exactly `r` distinct part
//! sizes. Each such skeleton has `F_{r+2}` legal decorations, so
//!
//! ```text
//! F(q) = sum_r F_{r+2} e_r(S_1, S_2, ...)
//! ```
//!
//! Other weights give the classical specializations: weight 1 yields the
//! partition numbers and weight `2^r` the overpartition numbers.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::fibonacci::{fib, fib_polynomial};
use crate::qseries::TruncatedSeries;

/// Largest `r` with `r(r+1)/2 <= N`. Every `e_r` with larger `r` starts at
/// `q^{1+2+...+r}` and vanishes at order `N`.
pub fn max_blocks(order: usize) -> usize {
    let mut r = 0;
    while (r + 1) * (r + 2) / 2 <= order {
        r += 1;
    }
    r
}

/// `e_0, ..., e_{r_max}` of `(S_1, ..., S_N)` modulo `q^(N+1)`.
///
/// One pass over `j`, updating `e_r += e_{r-1} * S_j` with `r` descending so
/// each `e_{r-1}` still excludes `S_j`.
pub fn elementary_symmetric_series(r_max: usize, order: usize) -> Vec<TruncatedSeries> {
    let mut e = vec![TruncatedSeries::zero(order); r_max + 1];
    e[0] = TruncatedSeries::one(order);
    for j in 1..=order {
        for r in (1..=r_max).rev() {
            if e[r - 1].is_zero() {
                continue;
            }
            let term = e[r - 1].times_block_series(j).expect("j >= 1");
            e[r].add_assign_series(&term).expect("equal orders");
        }
    }
    e
}

/// `sum_r weight(r) * e_r` modulo `q^(N+1)`.
pub fn weighted_gf<W>(order: usize, weight: W) -> TruncatedSeries
where
    W: Fn(usize) -> BigInt,
{
    let e = elementary_symmetric_series(max_blocks(order), order);
    let mut out = TruncatedSeries::zero(order);
    for (r, er) in e.iter().enumerate() {
        out.add_assign_series(&er.scale(&weight(r)))
            .expect("equal orders");
    }
    out
}

/// `sum_r F_{r+2} e_r`: the generating function of block-separated
/// overpartitions.
pub fn fibonacci_weighted_gf(order: usize) -> TruncatedSeries {
    weighted_gf(order, |r| BigInt::from(fib(r + 2)))
}

/// Counts `b(n, m)` of block-separated overpartitions of `n` with exactly
/// `m` overlined blocks, for `n = 0..=N`. Rows have trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateTriangle {
    rows: Vec<Vec<BigUint>>,
}

impl BivariateTriangle {
    pub fn from_rows(mut rows: Vec<Vec<BigUint>>) -> Self {
        for row in &mut rows {
            trim_row(row);
        }
        BivariateTriangle { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n]
    }

    pub fn get(&self, n: usize, m: usize) -> BigUint {
        self.rows[n].get(m).cloned().unwrap_or_default()
    }

    /// Specialization `y = 1`: `b(0..=N)`.
    pub fn row_sums(&self) -> Vec<BigUint> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    /// Column `m`; `m = 0` is the specialization `y = 0`, i.e. `p(n)`.
    pub fn column(&self, m: usize) -> Vec<BigUint> {
        (0..self.rows.len()).map(|n| self.get(n, m)).collect()
    }
}

pub(crate) fn trim_row(row: &mut Vec<BigUint>) {
    while row.len() > 1 && row.last().is_some_and(|c| c == &BigUint::ZERO) {
        row.pop();
    }
    if row.is_empty() {
        row.push(BigUint::ZERO);
    }
}

/// Bivariate refinement: `b(n, m) = [q^n] sum_r binom(r-m+1, m) e_r`.
pub fn bivariate_gf(order: usize) -> BivariateTriangle {
    let r_max = max_blocks(order);
    let e = elementary_symmetric_series(r_max, order);
    let max_m = r_max.div_ceil(2);
    let mut rows = vec![vec![BigUint::ZERO; max_m + 1]; order + 1];
    for (r, er) in e.iter().enumerate() {
        let poly = fib_polynomial(r);
        for (m, weight) in poly.coeffs().iter().enumerate() {
            for (n, c) in er.coeffs().iter().enumerate() {
                let c = c.to_biguint().expect("e_r has nonnegative coefficients");
                rows[n][m] += weight * c;
            }
        }
    }
    BivariateTriangle::from_rows(rows)
}

/// Overpartition weight `2^r`.
pub fn power_of_two(r: usize) -> BigInt {
    BigInt::one() << r
}
