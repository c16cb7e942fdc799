//! Fibonacci structure of decoration patterns.
//!
//! Once the `r` distinct part sizes of a partition are fixed, a legal
//! overlining pattern is a binary word of length `r` with no two adjacent
//! ones. There are `F_{r+2}` of them (with `F_1 = F_2 = 1`), and they are in
//! bijection with independent sets of the path `P_r` and with tilings by a
//! plain cell `[0]` and an overlined pair `[10]`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Default upper bound on `r` for [`enumerate_decorations`] (`F_27` words).
pub const DEFAULT_DECORATION_CAP: usize = 25;

/// Overlining pattern of the blocks of a partition, largest part first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecorationWord {
    bits: Vec<bool>,
}

impl DecorationWord {
    /// Validates the no-adjacent-ones condition.
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if let Some(i) = bits.windows(2).position(|w| w[0] && w[1]) {
            return Err(Error::AdjacentOverlines(i + 1, i + 2));
        }
        Ok(DecorationWord { bits })
    }

    pub fn empty() -> Self {
        DecorationWord { bits: Vec::new() }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Number of overlined blocks.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_overlined(&self, position: usize) -> bool {
        self.bits.get(position).copied().unwrap_or(false)
    }
}

impl fmt::Display for DecorationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for DecorationWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidWordChar(other)),
            })
            .collect::<Result<Vec<_>>>()?;
        DecorationWord::new(bits)
    }
}

/// Fibonacci number with `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fib(k: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..k {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Number of legal decorations of `r` blocks: `F_{r+2}`.
pub fn decoration_count(r: usize) -> BigUint {
    fib(r + 2)
}

/// All legal decoration words of length `r` in lexicographic order (`0 < 1`).
pub fn enumerate_decorations(r: usize, cap: usize) -> Result<Vec<DecorationWord>> {
    if r > cap {
        return Err(Error::CapExceeded {
            what: "decoration length",
            requested: r,
            cap,
        });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(r);
    extend_words(r, &mut prefix, &mut out);
    Ok(out)
}

fn extend_words(r: usize, prefix: &mut Vec<bool>, out: &mut Vec<DecorationWord>) {
    if prefix.len() == r {
        out.push(DecorationWord {
            bits: prefix.clone(),
        });
        return;
    }
    prefix.push(false);
    extend_words(r, prefix, out);
    prefix.pop();
    if prefix.last() != Some(&true) {
        prefix.push(true);
        extend_words(r, prefix, out);
        prefix.pop();
    }
}

/// Rows `0..=n` of Pascal's triangle, by repeated addition.
pub fn pascal_rows(n: usize) -> Vec<Vec<BigUint>> {
    let mut rows = vec![vec![BigUint::one()]];
    for i in 0..n {
        let prev = &rows[i];
        let mut next = Vec::with_capacity(prev.len() + 1);
        next.push(BigUint::one());
        next.extend(prev.windows(2).map(|w| &w[0] + &w[1]));
        next.push(BigUint::one());
        rows.push(next);
    }
    rows
}

/// `binom(n, 0..=n)`.
pub fn binomial_row(n: usize) -> Vec<BigUint> {
    pascal_rows(n).pop().expect("at least row 0")
}

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    binomial_row(n).swap_remove(k)
}

/// `F_{r+2}(y) = sum_m binom(r-m+1, m) y^m`: decorations of `r` blocks
/// counted by number of overlined blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibPolynomial {
    r: usize,
    coeffs: Vec<BigUint>,
}

impl FibPolynomial {
    pub fn r(&self) -> usize {
        self.r
    }

    /// Entry `m` is the number of decorations with exactly `m` overlines.
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> BigUint {
        self.coeffs.get(m).cloned().unwrap_or_default()
    }

    pub fn eval(&self, y: &BigUint) -> BigUint {
        self.coeffs
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| acc * y + c)
    }

    /// Value at `y = 1`, which is `F_{r+2}`.
    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }
}

pub fn fib_polynomial(r: usize) -> FibPolynomial {
    let max_m = r.div_ceil(2);
    let rows = pascal_rows(r + 1);
    let coeffs = (0..=max_m)
        .map(|m| rows[r + 1 - m].get(m).cloned().unwrap_or_default())
        .collect();
    FibPolynomial { r, coeffs }
}

/// Overlined positions, 1-indexed: an independent set of the path `P_r`.
pub fn word_to_independent_set(w: &DecorationWord) -> BTreeSet<usize> {
    w.bits
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| i + 1)
        .collect()
}

/// Inverse of [`word_to_independent_set`] on a path with `r` vertices.
pub fn independent_set_to_word(set: &BTreeSet<usize>, r: usize) -> Result<DecorationWord> {
    let mut bits = vec![false; r];
    for &p in set {
        if p == 0 || p > r {
            return Err(Error::PositionOutOfRange {
                position: p,
                len: r,
            });
        }
        bits[p - 1] = true;
    }
    DecorationWord::new(bits)
}

/// A tile covering one plain block, or an overlined block followed by the
/// plain block it forces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tile {
    Plain,
    OverlinedPair,
}

impl Tile {
    pub fn width(self) -> usize {
        match self {
            Tile::Plain => 1,
            Tile::OverlinedPair => 2,
        }
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tile::Plain => "[0]",
            Tile::OverlinedPair => "[10]",
        })
    }
}

/// Greedy left-to-right tiling of `w` followed by one plain sentinel cell.
///
/// The sentinel gives a final overlined block its plain partner, so the
/// tiles always cover `r + 1` cells and words of length `r` correspond to
/// tilings of a board of length `r + 1` (`F_{r+2}` of them).
pub fn word_to_tiling(w: &DecorationWord) -> Vec<Tile> {
    let mut tiles = Vec::with_capacity(w.len() + 1);
    let mut i = 0;
    while i <= w.len() {
        if w.is_overlined(i) {
            tiles.push(Tile::OverlinedPair);
            i += 2;
        } else {
            tiles.push(Tile::Plain);
            i += 1;
        }
    }
    tiles
}

/// Reads a tiling back as a word, dropping the trailing sentinel cell.
pub fn tiling_to_word(tiles: &[Tile]) -> Result<DecorationWord> {
    if tiles.is_empty() {
        return Err(Error::EmptyTiling);
    }
    let mut bits = Vec::new();
    for t in tiles {
        match t {
            Tile::Plain => bits.push(false),
            Tile::OverlinedPair => bits.extend([true, false]),
        }
    }
    bits.pop();
    DecorationWord::new(bits)
}

pub fn tiling_to_string(tiles: &[Tile]) -> String {
    tiles.iter().map(Tile::to_string).collect()
}
