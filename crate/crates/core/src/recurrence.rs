//! Euler-factorized form of the generating function.
//!
//! The upper-left entry of `M_j` is the Euler factor `1/(1-q^j)`. Pulling it
//! out of every matrix leaves `M^_j = (1-q^j) M_j = [[1, q^j], [q^j, 1-q^j]]`
//! and
//!
//! ```text
//! F(q) = 1/(q)_inf * (F^_0 + F^_1),  (F^_0, F^_1) = (1, 0) M^_1 M^_2 ...
//! ```
//!
//! Row-vector multiplication by `M^_n` gives the recurrence
//!
//! ```text
//! F^_0(n) = F^_0(n-1) + q^n F^_1(n-1)
//! F^_1(n) = q^n F^_0(n-1) + (1 - q^n) F^_1(n-1)
//! ```
//!
//! which is evaluated here with shifts only, independently of the matrix
//! kernels in [`crate::transfer`].

use num_bigint::BigInt;

use crate::qseries::{euler_inverse, TruncatedSeries};
use crate::transfer::StatePair;

/// `(F^_0, F^_1)` after `steps` steps of the normalized recurrence, kept
/// modulo `q^(order+1)`.
pub fn normalized_recurrence_steps(steps: usize, order: usize) -> StatePair {
    let mut f0: Vec<BigInt> = TruncatedSeries::one(order).into_coeffs();
    let mut f1: Vec<BigInt> = TruncatedSeries::zero(order).into_coeffs();
    // Only sizes n <= order can touch coefficients up to q^order.
    for n in 1..=steps.min(order) {
        // Descending k so that index k - n still holds the step n-1 values.
        for k in (n..=order).rev() {
            let old_f0 = f0[k - n].clone();
            let old_f1 = f1[k - n].clone();
            f0[k] += &old_f1;
            f1[k] += old_f0 - old_f1;
        }
    }
    StatePair::new(TruncatedSeries::from_vec(f0), TruncatedSeries::from_vec(f1))
        .expect("equal orders")
}

/// `(F^_0, F^_1)` after `N` steps at order `N`.
pub fn normalized_recurrence(order: usize) -> StatePair {
    normalized_recurrence_steps(order, order)
}

/// `1/(q)_inf * (F^_0 + F^_1)` modulo `q^(N+1)`.
pub fn euler_factorized_gf(order: usize) -> TruncatedSeries {
    &euler_inverse(order) * &normalized_recurrence(order).total()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::geometric_inverse;
    use crate::transfer::{
        apply_matrix, fold_transfer, matrix_product_gf, normalized_matrix, State,
    };
    use num_traits::Signed;

    fn series(order: usize, c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(order, c)
    }

    /// Untruncated integer polynomials, for an independent symbolic product.
    fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, x) in a.iter().enumerate() {
            out[i] += x;
        }
        for (i, y) in b.iter().enumerate() {
            out[i] += y;
        }
        out
    }

    fn normalized_poly(j: usize) -> [[Vec<i64>; 2]; 2] {
        let mut qj = vec![0; j + 1];
        qj[j] = 1;
        let mut one_minus = vec![0; j + 1];
        one_minus[0] = 1;
        one_minus[j] = -1;
        [[vec![1], qj.clone()], [qj, one_minus]]
    }

    #[test]
    fn one_step() {
        let v = normalized_recurrence(1);
        assert_eq!(v.f0(), &series(1, &[1]));
        assert_eq!(v.f1(), &series(1, &[0, 1]));
    }

    #[test]
    fn two_steps_match_symbolic_product() {
        // (1, 0) M^_1 M^_2 with exact polynomials, truncated afterwards.
        let m1 = normalized_poly(1);
        let m2 = normalized_poly(2);
        let row = [m1[0][0].clone(), m1[0][1].clone()];
        let f0 = poly_add(&poly_mul(&row[0], &m2[0][0]), &poly_mul(&row[1], &m2[1][0]));
        let f1 = poly_add(&poly_mul(&row[0], &m2[0][1]), &poly_mul(&row[1], &m2[1][1]));
        assert_eq!(f0, vec![1, 0, 0, 1]);
        assert_eq!(f1, vec![0, 1, 1, -1]);

        let v = normalized_recurrence(2);
        assert_eq!(v.f0(), &series(2, &f0));
        assert_eq!(v.f1(), &series(2, &f1));
        assert_eq!(v.f0(), &series(2, &[1]));
        assert_eq!(v.f1(), &series(2, &[0, 1, 1]));
    }

    #[test]
    fn recurrence_matches_normalized_matrix_product() {
        for order in 0..=40 {
            let mut v = StatePair::start(State::Plain, order);
            for j in 1..=order {
                v = apply_matrix(&v, &normalized_matrix(j, order).unwrap()).unwrap();
            }
            assert_eq!(v, normalized_recurrence(order), "order {order}");
        }
    }

    #[test]
    fn euler_factor_extraction() {
        let order = 15;
        for n in 0..=order {
            let plain = fold_transfer(StatePair::start(State::Plain, order), 1..=n).unwrap();
            let partial_euler = (1..=n).fold(TruncatedSeries::one(order), |acc, j| {
                &acc * &geometric_inverse(j, order).unwrap()
            });
            let hat = normalized_recurrence_steps(n, order);
            assert_eq!(plain.f0(), &(&partial_euler * hat.f0()), "n={n}");
            assert_eq!(plain.f1(), &(&partial_euler * hat.f1()), "n={n}");
        }
    }

    #[test]
    fn factorized_examples() {
        assert_eq!(
            euler_factorized_gf(10),
            series(10, &[1, 2, 4, 7, 12, 19, 31, 47, 72, 107, 157])
        );
        assert_eq!(euler_factorized_gf(0), TruncatedSeries::one(0));
        for order in [1, 2, 3, 17, 64] {
            assert_eq!(euler_factorized_gf(order), matrix_product_gf(order));
        }
    }

    #[test]
    fn normalized_sum_stabilizes() {
        // Run at a higher order so later steps really are applied, then
        // compare the first m+1 coefficients.
        let big = 60;
        let totals: Vec<TruncatedSeries> = (0..=big)
            .map(|n| normalized_recurrence_steps(n, big).total())
            .collect();
        for m in 0..=50 {
            let reference = totals[m].with_order(m);
            for (n, total) in totals.iter().enumerate().skip(m) {
                assert_eq!(total.with_order(m), reference, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn intermediate_has_negative_coefficients() {
        // After two steps, F^_1 = q + q^2 - q^3 + ...
        let two = normalized_recurrence_steps(2, 3);
        assert_eq!(two.f1(), &series(3, &[0, 1, 1, -1]));
        for order in 3..=30 {
            let negative_somewhere = (1..=order).any(|n| {
                normalized_recurrence_steps(n, order)
                    .f1()
                    .coeffs()
                    .iter()
                    .any(|c| c.is_negative())
            });
            assert!(negative_somewhere, "order {order}");
        }
    }
}
