//! Brute-force enumeration of partitions, overpartitions and
//! block-separated overpartitions.
//!
//! This module is the ground truth for the analytic routes. It builds
//! partitions explicitly in block form and decorates them either by the
//! `F_{r+2}` count or by filtering all `2^r` overlining patterns. The latter
//! never touches Fibonacci numbers.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fibonacci::{decoration_count, DecorationWord};

/// Default bound on `n` for enumerating partitions (`p(60) = 966467`).
pub const DEFAULT_PARTITION_CAP: usize = 60;

/// Default bound on `n` for materializing decorated partitions.
pub const DEFAULT_LISTING_CAP: usize = 20;

/// All copies of one part size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    pub part: usize,
    pub multiplicity: usize,
}

/// A partition `d_1^{m_1} + ... + d_r^{m_r}` with `d_1 > ... > d_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockPartition {
    blocks: Vec<Block>,
}

impl BlockPartition {
    pub fn new(blocks: Vec<Block>) -> Result<Self> {
        if blocks.iter().any(|b| b.part == 0 || b.multiplicity == 0) {
            return Err(Error::InvalidPartition(
                "parts and multiplicities must be positive".into(),
            ));
        }
        if blocks.windows(2).any(|w| w[0].part <= w[1].part) {
            return Err(Error::InvalidPartition(
                "parts must be strictly decreasing".into(),
            ));
        }
        Ok(BlockPartition { blocks })
    }

    pub fn empty() -> Self {
        BlockPartition { blocks: Vec::new() }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number of distinct part sizes.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn weight(&self) -> usize {
        self.blocks.iter().map(|b| b.part * b.multiplicity).sum()
    }
}

impl fmt::Display for BlockPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        DecoratedPartition {
            decoration: DecorationWord::new(vec![false; self.num_blocks()]).expect("all plain"),
            skeleton: self.clone(),
        }
        .fmt(f)
    }
}

/// A block partition together with a legal overlining pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecoratedPartition {
    skeleton: BlockPartition,
    decoration: DecorationWord,
}

impl DecoratedPartition {
    pub fn new(skeleton: BlockPartition, decoration: DecorationWord) -> Result<Self> {
        if skeleton.num_blocks() != decoration.len() {
            return Err(Error::DecorationLength {
                decoration: decoration.len(),
                blocks: skeleton.num_blocks(),
            });
        }
        Ok(DecoratedPartition {
            skeleton,
            decoration,
        })
    }

    pub fn skeleton(&self) -> &BlockPartition {
        &self.skeleton
    }

    pub fn decoration(&self) -> &DecorationWord {
        &self.decoration
    }

    pub fn weight(&self) -> usize {
        self.skeleton.weight()
    }

    /// Number of overlined blocks.
    pub fn overlined(&self) -> usize {
        self.decoration.weight()
    }
}

/// Plain-text form: parts in decreasing order, `~` after an overlined
/// first occurrence, e.g. `2+2+1~`. The empty partition prints as `0`.
impl fmt::Display for DecoratedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.skeleton.blocks.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, b) in self.skeleton.blocks.iter().enumerate() {
            for k in 0..b.multiplicity {
                if !first {
                    f.write_str("+")?;
                }
                first = false;
                write!(f, "{}", b.part)?;
                if k == 0 && self.decoration.is_overlined(i) {
                    f.write_str("~")?;
                }
            }
        }
        Ok(())
    }
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded {
            what,
            requested: n,
            cap,
        })
    } else {
        Ok(())
    }
}

/// Calls `visit` on every partition of `n` in canonical order: the largest
/// part first (descending), then its multiplicity (descending), recursively.
fn for_each_partition<F: FnMut(&[Block])>(n: usize, visit: &mut F) {
    fn go<F: FnMut(&[Block])>(rest: usize, max_part: usize, stack: &mut Vec<Block>, visit: &mut F) {
        if rest == 0 {
            visit(stack);
            return;
        }
        for part in (1..=max_part.min(rest)).rev() {
            for multiplicity in (1..=rest / part).rev() {
                stack.push(Block { part, multiplicity });
                go(rest - part * multiplicity, part - 1, stack, visit);
                stack.pop();
            }
        }
    }
    let mut stack = Vec::new();
    go(n, n, &mut stack, visit);
}

/// All partitions of `n` in block form, canonical order.
pub fn enumerate_block_partitions(n: usize, cap: usize) -> Result<Vec<BlockPartition>> {
    check_cap("partition size", n, cap)?;
    let mut out = Vec::new();
    for_each_partition(n, &mut |blocks| {
        out.push(BlockPartition {
            blocks: blocks.to_vec(),
        })
    });
    Ok(out)
}

/// `p(n)` by enumeration.
pub fn count_partitions(n: usize, cap: usize) -> Result<BigUint> {
    check_cap("partition size", n, cap)?;
    let mut count = BigUint::zero();
    for_each_partition(n, &mut |_| count += 1u32);
    Ok(count)
}

/// `b(n)` as the sum of `F_{r+2}` over skeletons with `r` blocks.
pub fn count_block_separated(n: usize, cap: usize) -> Result<BigUint> {
    check_cap("partition size", n, cap)?;
    let mut count = BigUint::zero();
    for_each_partition(n, &mut |blocks| count += decoration_count(blocks.len()));
    Ok(count)
}

/// `pbar(n)` as the sum of `2^r` over skeletons with `r` blocks.
pub fn count_overpartitions(n: usize, cap: usize) -> Result<BigUint> {
    check_cap("partition size", n, cap)?;
    let mut count = BigUint::zero();
    for_each_partition(n, &mut |blocks| count += BigUint::one() << blocks.len());
    Ok(count)
}

/// Legal patterns for `r` blocks, found by testing all `2^r` words.
/// Lexicographic order with `0 < 1`.
fn filtered_patterns(r: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u64..1 << r)
        .filter(|mask| mask & (mask >> 1) == 0)
        .map(move |mask| (0..r).map(|i| (mask >> (r - 1 - i)) & 1 == 1).collect())
}

/// Every block-separated overpartition of `n`: skeletons in canonical order,
/// decorations lexicographic within each skeleton.
pub fn list_block_separated(n: usize, cap: usize) -> Result<Vec<DecoratedPartition>> {
    check_cap("listing size", n, cap)?;
    let mut out = Vec::new();
    for_each_partition(n, &mut |blocks| {
        for bits in filtered_patterns(blocks.len()) {
            out.push(DecoratedPartition {
                skeleton: BlockPartition {
                    blocks: blocks.to_vec(),
                },
                decoration: DecorationWord::new(bits).expect("filtered"),
            });
        }
    });
    Ok(out)
}

/// Counts of block-separated overpartitions of `n` by number of overlined
/// blocks, from explicit decoration enumeration. Trailing zeros trimmed.
pub fn count_bivariate_oracle(n: usize, cap: usize) -> Result<Vec<BigUint>> {
    check_cap("partition size", n, cap)?;
    let mut row: Vec<u64> = vec![0];
    for_each_partition(n, &mut |blocks| {
        for bits in filtered_patterns(blocks.len()) {
            let m = bits.iter().filter(|&&b| b).count();
            if row.len() <= m {
                row.resize(m + 1, 0);
            }
            row[m] += 1;
        }
    });
    let mut row: Vec<BigUint> = row.into_iter().map(BigUint::from).collect();
    crate::symfun::trim_row(&mut row);
    Ok(row)
}

/// `b(n)` by explicit decoration enumeration.
pub fn count_block_separated_explicit(n: usize, cap: usize) -> Result<BigUint> {
    Ok(count_bivariate_oracle(n, cap)?.into_iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    const P: [u32; 11] = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
    const PBAR: [u32; 11] = [1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232];
    const B: [u32; 11] = [1, 2, 4, 7, 12, 19, 31, 47, 72, 107, 157];

    fn partition(blocks: &[(usize, usize)]) -> BlockPartition {
        BlockPartition::new(
            blocks
                .iter()
                .map(|&(part, multiplicity)| Block { part, multiplicity })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn block_partition_examples() {
        assert_eq!(
            enumerate_block_partitions(0, 60).unwrap(),
            vec![BlockPartition::empty()]
        );
        assert_eq!(enumerate_block_partitions(4, 60).unwrap().len(), 5);
        assert_eq!(enumerate_block_partitions(10, 60).unwrap().len(), 42);
        let four: Vec<String> = enumerate_block_partitions(4, 60)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(four, ["4", "3+1", "2+2", "2+1+1", "1+1+1+1"]);
        assert_eq!(
            enumerate_block_partitions(61, DEFAULT_PARTITION_CAP).unwrap_err(),
            Error::CapExceeded {
                what: "partition size",
                requested: 61,
                cap: 60
            }
        );
    }

    #[test]
    fn partitions_are_distinct_and_valid() {
        for n in 0..=18 {
            let all = enumerate_block_partitions(n, 60).unwrap();
            let unique: HashSet<_> = all.iter().cloned().collect();
            assert_eq!(unique.len(), all.len());
            for bp in &all {
                assert_eq!(bp.weight(), n);
                assert!(BlockPartition::new(bp.blocks().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn invalid_partitions_are_rejected() {
        let bad = vec![
            Block {
                part: 1,
                multiplicity: 1,
            },
            Block {
                part: 2,
                multiplicity: 1,
            },
        ];
        assert!(BlockPartition::new(bad).is_err());
        assert!(BlockPartition::new(vec![Block {
            part: 0,
            multiplicity: 1
        }])
        .is_err());
        assert!(BlockPartition::new(vec![Block {
            part: 3,
            multiplicity: 0
        }])
        .is_err());
        let word: DecorationWord = "0".parse().unwrap();
        assert_eq!(
            DecoratedPartition::new(partition(&[(2, 2), (1, 1)]), word).unwrap_err(),
            Error::DecorationLength {
                decoration: 1,
                blocks: 2
            }
        );
    }

    #[test]
    fn counts_match_small_table() {
        for n in 0..=10 {
            assert_eq!(count_partitions(n, 60).unwrap(), BigUint::from(P[n]));
            assert_eq!(count_overpartitions(n, 60).unwrap(), BigUint::from(PBAR[n]));
            assert_eq!(count_block_separated(n, 60).unwrap(), BigUint::from(B[n]));
        }
        assert_eq!(count_block_separated(5, 60).unwrap(), BigUint::from(19u32));
        assert_eq!(count_overpartitions(3, 60).unwrap(), BigUint::from(8u32));
    }

    #[test]
    fn listing_three() {
        let three: Vec<String> = list_block_separated(3, 20)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(three, ["3", "3~", "2+1", "2+1~", "2~+1", "1+1+1", "1~+1+1"]);
        assert!(!three.contains(&"2~+1~".to_string()));

        let one: Vec<String> = list_block_separated(1, 20)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(one, ["1", "1~"]);
        assert_eq!(list_block_separated(0, 20).unwrap()[0].to_string(), "0");
        assert!(list_block_separated(21, DEFAULT_LISTING_CAP).is_err());
    }

    #[test]
    fn listing_five() {
        let five = list_block_separated(5, 20).unwrap();
        assert_eq!(five.len(), 19);
        let skeleton = partition(&[(2, 2), (1, 1)]);
        let has = |w: &str| {
            five.iter()
                .any(|d| d.skeleton() == &skeleton && d.decoration().to_string() == w)
        };
        assert!(has("01"));
        assert!(!has("11"));
        assert!(five.iter().any(|d| d.to_string() == "2+2+1~"));
    }

    #[test]
    fn bivariate_oracle_examples() {
        let row = |n| -> Vec<u32> {
            count_bivariate_oracle(n, 60)
                .unwrap()
                .iter()
                .map(|x| x.try_into().unwrap())
                .collect()
        };
        assert_eq!(row(0), vec![1]);
        assert_eq!(row(1), vec![1, 1]);
        assert_eq!(row(5).iter().sum::<u32>(), 19);
        assert_eq!(row(5)[0], 7);
    }

    #[test]
    fn explicit_and_weighted_counts_agree() {
        for n in 0..=20 {
            let listed = list_block_separated(n, 20).unwrap();
            let weighted = count_block_separated(n, 60).unwrap();
            assert_eq!(BigUint::from(listed.len()), weighted, "n={n}");
            assert_eq!(
                count_block_separated_explicit(n, 60).unwrap(),
                weighted,
                "n={n}"
            );
            for d in &listed {
                assert_eq!(d.weight(), n);
                assert_eq!(d.decoration().len(), d.skeleton().num_blocks());
                assert!(DecorationWord::new(d.decoration().bits().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn sandwich_strict_above_zero() {
        for n in 0..=30 {
            let p = count_partitions(n, 60).unwrap();
            let b = count_block_separated(n, 60).unwrap();
            let pbar = count_overpartitions(n, 60).unwrap();
            assert!(p <= b && b <= pbar, "n={n}");
            // One block can always be overlined, so b > p once n >= 1; two
            // blocks (needed for b < pbar) first appear at n = 3.
            assert_eq!(p == b, n == 0, "n={n}");
            assert_eq!(b == pbar, n <= 2, "n={n}");
        }
    }
}
