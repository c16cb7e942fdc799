//! Truncated formal power series in `q` with exact integer coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of
//! `q^0, ..., q^N` and nothing else. Every binary operation requires both
//! operands to carry the same order; mixing orders is reported as
//! [`Error::OrderMismatch`] rather than silently re-truncating.
//!
//! Products are schoolbook convolutions that skip zero coefficients, so
//! multiplying by the sparse series that dominate this crate (`1/(1-q^j)`,
//! `q^j/(1-q^j)`, monomials) costs `O(N * N/j)` instead of `O(N^2)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A power series `c_0 + c_1 q + ... + c_N q^N` modulo `q^(N+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, 1, order)
    }

    /// `coeff * q^exponent`, or zero if the exponent is past the order.
    pub fn monomial(exponent: usize, coeff: impl Into<BigInt>, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = coeff.into();
        }
        s
    }

    /// Builds a series from leading coefficients. Missing coefficients are
    /// zero; coefficients past `order` are dropped.
    pub fn from_coeffs<T: Into<BigInt> + Clone>(order: usize, coeffs: &[T]) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.clone().into();
        }
        s
    }

    /// Takes ownership of a coefficient vector; its length fixes the order.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_vec(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the constant term"
        );
        TruncatedSeries { coeffs }
    }

    /// Highest retained exponent.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^k`; zero past the order.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Same series reduced (or zero-extended) to another order.
    pub fn with_order(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigInt::zero());
        TruncatedSeries { coeffs }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    /// In-place `self += other`.
    pub fn add_assign_series(&mut self, other: &Self) -> Result<()> {
        self.check_order(other)?;
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(())
    }

    /// Truncated Cauchy product. Terms beyond the order are discarded.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = vec![BigInt::zero(); order + 1];

        // The sparser operand drives the inner loop.
        let (dense, sparse) = if nonzero_count(&self.coeffs) >= nonzero_count(&other.coeffs) {
            (&self.coeffs, &other.coeffs)
        } else {
            (&other.coeffs, &self.coeffs)
        };
        let sparse_terms: Vec<(usize, &BigInt)> = sparse
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();

        for (i, a) in dense.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &sparse_terms {
                let k = i + j;
                if k > order {
                    break;
                }
                if b.is_one() {
                    out[k] += a;
                } else if b.is_negative() && b.magnitude().is_one() {
                    out[k] -= a;
                } else {
                    out[k] += a * b;
                }
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Multiplies every coefficient by an integer.
    pub fn scale(&self, factor: &BigInt) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplies by `q^k`, dropping what falls past the order.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, c) in self
            .coeffs
            .iter()
            .enumerate()
            .take((order + 1).saturating_sub(k))
        {
            out.coeffs[i + k] = c.clone();
        }
        out
    }

    /// Multiplies by `S_j = q^j / (1 - q^j)` in `O(N)`: shift by `j`, then
    /// divide by `1 - q^j` with the running sum `h[k] = g[k] + h[k-j]`.
    pub fn times_block_series(&self, j: usize) -> Result<Self> {
        if j == 0 {
            return Err(Error::ZeroPartSize);
        }
        let mut out = self.shift(j);
        for k in j..=out.order() {
            let (lo, hi) = out.coeffs.split_at_mut(k);
            hi[0] += &lo[k - j];
        }
        Ok(out)
    }
}

fn nonzero_count(coeffs: &[BigInt]) -> usize {
    coeffs.iter().filter(|c| !c.is_zero()).count()
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.magnitude();
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            match (k, magnitude.is_one()) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{magnitude}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{magnitude}q^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

// Operator forms panic on mismatched orders; use the `try_*` methods where
// the orders are not known to agree.

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        self.try_add(rhs).expect("series orders must match")
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        self.try_sub(rhs).expect("series orders must match")
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        self.try_mul(rhs).expect("series orders must match")
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Adds two series of equal order.
pub fn series_add(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.try_add(b)
}

/// Multiplies two series of equal order, truncating at that order.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.try_mul(b)
}

/// `1 / (1 - q^j)` truncated at `order`.
pub fn geometric_inverse(j: usize, order: usize) -> Result<TruncatedSeries> {
    if j == 0 {
        return Err(Error::ZeroPartSize);
    }
    let mut s = TruncatedSeries::zero(order);
    for k in (0..=order).step_by(j) {
        s.coeffs[k] = BigInt::one();
    }
    Ok(s)
}

/// `S_j(q) = q^j / (1 - q^j)`: one nonempty block of parts equal to `j`.
pub fn s_block(j: usize, order: usize) -> Result<TruncatedSeries> {
    let mut s = geometric_inverse(j, order)?;
    s.coeffs[0] = BigInt::zero();
    Ok(s)
}

/// `1 - q^j` truncated at `order`.
pub fn euler_factor(j: usize, order: usize) -> Result<TruncatedSeries> {
    if j == 0 {
        return Err(Error::ZeroPartSize);
    }
    let mut s = TruncatedSeries::one(order);
    if j <= order {
        s.coeffs[j] = BigInt::from(-1);
    }
    Ok(s)
}

/// `(q)_N = prod_{j=1..N} (1 - q^j)`, which equals `(q)_inf` modulo `q^(N+1)`.
pub fn euler_product(order: usize) -> TruncatedSeries {
    (1..=order).fold(TruncatedSeries::one(order), |acc, j| {
        &acc * &euler_factor(j, order).expect("j >= 1")
    })
}

/// `1 / (q)_inf` modulo `q^(N+1)`: the partition numbers `p(0..=N)`.
///
/// Computed by the pentagonal-number recurrence; debug builds cross-check
/// it against [`euler_inverse_product`].
pub fn euler_inverse(order: usize) -> TruncatedSeries {
    let p = euler_inverse_pentagonal(order);
    debug_assert_eq!(p, euler_inverse_product(order), "partition routes disagree");
    p
}

/// `1 / (q)_inf` as the product of `1/(1-q^j)` for `j = 1..=N`.
pub fn euler_inverse_product(order: usize) -> TruncatedSeries {
    (1..=order).fold(TruncatedSeries::one(order), |acc, j| {
        &acc * &geometric_inverse(j, order).expect("j >= 1")
    })
}

/// `1 / (q)_inf` by Euler's pentagonal recurrence
/// `p(n) = sum_{k>=1} (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]`.
pub fn euler_inverse_pentagonal(order: usize) -> TruncatedSeries {
    let mut p: Vec<BigInt> = Vec::with_capacity(order + 1);
    p.push(BigInt::one());
    for n in 1..=order {
        let mut total = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let mut term = p[n - g1].clone();
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                term += &p[n - g2];
            }
            if k % 2 == 1 {
                total += term;
            } else {
                total -= term;
            }
        }
        p.push(total);
    }
    TruncatedSeries { coeffs: p }
}

/// `prod_{j>=1} (1 + q^j) / (1 - q^j)`: the overpartition numbers.
pub fn overpartition_product(order: usize) -> TruncatedSeries {
    (1..=order).fold(TruncatedSeries::one(order), |acc, j| {
        let plus = &TruncatedSeries::one(order) + &TruncatedSeries::monomial(j, 1, order);
        let step = &plus * &geometric_inverse(j, order).expect("j >= 1");
        &acc * &step
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn series(order: usize, c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(order, c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(
            &series(1, &[1, 1]) + &series(1, &[1, 1]),
            series(1, &[2, 2])
        );
        let a = series(3, &[4, -1, 0, 7]);
        assert_eq!(series_add(&a, &TruncatedSeries::zero(3)).unwrap(), a);
        assert_eq!(
            series_add(&series(1, &[1, -1]), &series(1, &[0, 1])).unwrap(),
            TruncatedSeries::one(1)
        );
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            series_mul(&series(2, &[1, 1]), &series(2, &[1, 1])).unwrap(),
            series(2, &[1, 2, 1])
        );
        let a = series(4, &[3, 0, -2, 5, 1]);
        assert_eq!(series_mul(&a, &TruncatedSeries::one(4)).unwrap(), a);
        assert_eq!(
            series_mul(&series(2, &[1, 1, 1]), &series(2, &[1, -1])).unwrap(),
            TruncatedSeries::one(2)
        );
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        let a = TruncatedSeries::one(2);
        let b = TruncatedSeries::one(3);
        let err = Error::OrderMismatch { left: 2, right: 3 };
        assert_eq!(series_add(&a, &b).unwrap_err(), err);
        assert_eq!(series_mul(&a, &b).unwrap_err(), err);
        assert_eq!(a.try_sub(&b).unwrap_err(), err);
    }

    #[test]
    fn geometric_inverse_examples() {
        assert_eq!(geometric_inverse(1, 3).unwrap(), series(3, &[1, 1, 1, 1]));
        assert_eq!(
            geometric_inverse(2, 5).unwrap(),
            series(5, &[1, 0, 1, 0, 1, 0])
        );
        assert_eq!(geometric_inverse(0, 5).unwrap_err(), Error::ZeroPartSize);
    }

    #[test]
    fn s_block_examples() {
        assert_eq!(s_block(1, 3).unwrap(), series(3, &[0, 1, 1, 1]));
        assert_eq!(s_block(3, 3).unwrap(), series(3, &[0, 0, 0, 1]));
        assert!(s_block(5, 3).unwrap().is_zero());
        assert_eq!(s_block(0, 3).unwrap_err(), Error::ZeroPartSize);
    }

    #[test]
    fn euler_inverse_examples() {
        let p: Vec<i64> = vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        assert_eq!(euler_inverse(10), series(10, &p));
        assert_eq!(euler_inverse(0), TruncatedSeries::one(0));
        for n in [0, 1, 7, 30] {
            assert_eq!(
                &euler_inverse(n) * &euler_product(n),
                TruncatedSeries::one(n)
            );
        }
    }

    #[test]
    fn euler_inverse_routes_agree_to_500() {
        assert_eq!(euler_inverse_pentagonal(500), euler_inverse_product(500));
    }

    #[test]
    fn geometric_and_block_identities_to_64() {
        for order in 1..=64 {
            let one = TruncatedSeries::one(order);
            for j in 1..=order {
                let g = geometric_inverse(j, order).unwrap();
                assert_eq!(
                    &g * &euler_factor(j, order).unwrap(),
                    one,
                    "j={j} N={order}"
                );
                assert_eq!(&one + &s_block(j, order).unwrap(), g, "j={j} N={order}");
            }
        }
    }

    #[test]
    fn overpartition_prefix() {
        let pbar: Vec<i64> = vec![1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232];
        assert_eq!(overpartition_product(10), series(10, &pbar));
    }

    #[test]
    fn shift_drops_overflow() {
        assert_eq!(series(3, &[1, 2, 3, 4]).shift(2), series(3, &[0, 0, 1, 2]));
        assert!(series(3, &[1, 2, 3, 4]).shift(4).is_zero());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(
            series(3, &[1, 2, 0, -1]).to_string(),
            "1 + 2q - q^3 + O(q^4)"
        );
        assert_eq!(TruncatedSeries::zero(1).to_string(), "0 + O(q^2)");
        assert_eq!(series(2, &[0, -3, 1]).to_string(), "-3q + q^2 + O(q^3)");
    }

    fn arb_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec(-20i64..=20, order + 1)
            .prop_map(move |c| TruncatedSeries::from_coeffs(order, &c))
    }

    fn arb_triple() -> impl Strategy<Value = (TruncatedSeries, TruncatedSeries, TruncatedSeries)> {
        (0usize..=32).prop_flat_map(|n| (arb_series(n), arb_series(n), arb_series(n)))
    }

    proptest! {
        #[test]
        fn ring_laws((a, b, c) in arb_triple()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn block_kernel_matches_convolution(a in (0usize..=40).prop_flat_map(arb_series), j in 1usize..=45) {
            let s = s_block(j, a.order()).unwrap();
            prop_assert_eq!(a.times_block_series(j).unwrap(), &a * &s);
        }
    }
}
