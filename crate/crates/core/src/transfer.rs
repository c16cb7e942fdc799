//! The two-state automaton and its transfer-matrix product.
//!
//! Part sizes are scanned in increasing order `j = 1, 2, 3, ...`. State 0
//! means the most recent present block is plain (or no block is present
//! yet); state 1 means it is overlined. At size `j` the block is absent
//! (weight 1, state kept), present and plain (weight `S_j`, go to 0), or
//! present and overlined (weight `S_j`, go to 1, only from state 0):
//!
//! ```text
//!         | to 0          | to 1
//! from 0  | 1 + S_j       | S_j
//! from 1  | S_j           | 1
//! ```
//!
//! The matrices do not commute, so the product is folded left to right as
//! a row vector times each matrix in turn.

use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::qseries::{euler_factor, geometric_inverse, s_block, TruncatedSeries};

/// Automaton state after the last present block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum State {
    Plain = 0,
    Overlined = 1,
}

/// A 2x2 matrix of series indexed by `(from_state, to_state)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferMatrix {
    entries: [[TruncatedSeries; 2]; 2],
}

impl TransferMatrix {
    pub fn new(entries: [[TruncatedSeries; 2]; 2]) -> Result<Self> {
        let order = entries[0][0].order();
        for s in entries.iter().flatten() {
            if s.order() != order {
                return Err(Error::OrderMismatch {
                    left: order,
                    right: s.order(),
                });
            }
        }
        Ok(TransferMatrix { entries })
    }

    pub fn identity(order: usize) -> Self {
        let one = TruncatedSeries::one(order);
        let zero = TruncatedSeries::zero(order);
        TransferMatrix {
            entries: [[one.clone(), zero.clone()], [zero, one]],
        }
    }

    pub fn entry(&self, from: State, to: State) -> &TruncatedSeries {
        &self.entries[from as usize][to as usize]
    }

    pub fn order(&self) -> usize {
        self.entries[0][0].order()
    }

    /// Multiplies every entry by the same series.
    pub fn scale(&self, factor: &TruncatedSeries) -> Result<Self> {
        let e = &self.entries;
        TransferMatrix::new([
            [e[0][0].try_mul(factor)?, e[0][1].try_mul(factor)?],
            [e[1][0].try_mul(factor)?, e[1][1].try_mul(factor)?],
        ])
    }
}

/// Row vector `(f0, f1)` of weights for histories ending in state 0 / 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatePair {
    pub(crate) f0: TruncatedSeries,
    pub(crate) f1: TruncatedSeries,
}

impl StatePair {
    pub fn new(f0: TruncatedSeries, f1: TruncatedSeries) -> Result<Self> {
        if f0.order() != f1.order() {
            return Err(Error::OrderMismatch {
                left: f0.order(),
                right: f1.order(),
            });
        }
        Ok(StatePair { f0, f1 })
    }

    /// All weight concentrated in one state: `(1, 0)` or `(0, 1)`.
    pub fn start(state: State, order: usize) -> Self {
        let one = TruncatedSeries::one(order);
        let zero = TruncatedSeries::zero(order);
        match state {
            State::Plain => StatePair { f0: one, f1: zero },
            State::Overlined => StatePair { f0: zero, f1: one },
        }
    }

    pub fn f0(&self) -> &TruncatedSeries {
        &self.f0
    }

    pub fn f1(&self) -> &TruncatedSeries {
        &self.f1
    }

    pub fn order(&self) -> usize {
        self.f0.order()
    }

    /// `f0 + f1`: sum over both terminal states.
    pub fn total(&self) -> TruncatedSeries {
        &self.f0 + &self.f1
    }

    pub fn apply(&self, m: &TransferMatrix) -> Result<StatePair> {
        apply_matrix(self, m)
    }
}

/// `M_j` truncated at `order`.
pub fn transfer_matrix(j: usize, order: usize) -> Result<TransferMatrix> {
    let s = s_block(j, order)?;
    TransferMatrix::new([
        [geometric_inverse(j, order)?, s.clone()],
        [s, TruncatedSeries::one(order)],
    ])
}

/// `(1 - q^j) M_j = [[1, q^j], [q^j, 1 - q^j]]` truncated at `order`.
pub fn normalized_matrix(j: usize, order: usize) -> Result<TransferMatrix> {
    let qj = TruncatedSeries::monomial(j, 1, order);
    TransferMatrix::new([
        [TruncatedSeries::one(order), qj.clone()],
        [qj, euler_factor(j, order)?],
    ])
}

/// `(f0, f1) * m`.
pub fn apply_matrix(v: &StatePair, m: &TransferMatrix) -> Result<StatePair> {
    if v.order() != m.order() {
        return Err(Error::OrderMismatch {
            left: v.order(),
            right: m.order(),
        });
    }
    let e = &m.entries;
    let f0 = v.f0.try_mul(&e[0][0])?.try_add(&v.f1.try_mul(&e[1][0])?)?;
    let f1 = v.f0.try_mul(&e[0][1])?.try_add(&v.f1.try_mul(&e[1][1])?)?;
    Ok(StatePair { f0, f1 })
}

/// Folds `start * M_j` over `sizes` in increasing `j`.
pub fn fold_transfer(start: StatePair, sizes: RangeInclusive<usize>) -> Result<StatePair> {
    let order = start.order();
    sizes
        .into_iter()
        .try_fold(start, |v, j| apply_matrix(&v, &transfer_matrix(j, order)?))
}

/// Generating function of block-separated overpartitions modulo `q^(N+1)`,
/// as `(1, 0) * M_1 * ... * M_N * (1, 1)^T`.
///
/// Sizes past `N` contribute identity matrices at this order, so the
/// product stops at `j = N`.
pub fn matrix_product_gf(order: usize) -> TruncatedSeries {
    fold_transfer(StatePair::start(State::Plain, order), 1..=order)
        .expect("orders agree by construction")
        .total()
}
