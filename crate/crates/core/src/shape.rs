use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Block sizes (m1, ..., ms) of an upper block-triangular matrix algebra.
/// A single block is the full matrix algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockShape {
    blocks: Vec<u64>,
}

impl BlockShape {
    pub fn new(blocks: Vec<u64>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidShape("at least one block is required".into()));
        }
        if blocks.contains(&0) {
            return Err(Error::InvalidShape("block sizes must be positive".into()));
        }
        blocks
            .iter()
            .try_fold(0u64, |acc, &m| acc.checked_add(m))
            .ok_or(Error::Overflow("matrix size"))?;
        Ok(Self { blocks })
    }

    /// The full matrix algebra M_m.
    pub fn matrix(m: u64) -> Result<Self> {
        Self::new(vec![m])
    }

    /// n ones: the upper triangular algebra UT_n.
    pub fn triangular(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Matrix size n = m1 + ... + ms.
    pub fn size(&self) -> u64 {
        self.blocks.iter().sum()
    }

    pub fn gcd(&self) -> u64 {
        self.blocks
            .iter()
            .fold(0, |acc, &m| num_integer::gcd(acc, m))
    }

    /// Every block divided by `k`, or `None` when `k` misses some block.
    pub fn divide(&self, k: u64) -> Option<Self> {
        if k == 0 || self.blocks.iter().any(|m| m % k != 0) {
            return None;
        }
        Some(Self {
            blocks: self.blocks.iter().map(|m| m / k).collect(),
        })
    }

    /// All shapes (ordered tuples of positive integers) with sum exactly `n`.
    pub fn compositions(n: u64) -> Vec<Self> {
        fn rec(remaining: u64, prefix: &mut Vec<u64>, out: &mut Vec<BlockShape>) {
            if remaining == 0 {
                out.push(BlockShape {
                    blocks: prefix.clone(),
                });
                return;
            }
            for first in 1..=remaining {
                prefix.push(first);
                rec(remaining - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl FromStr for BlockShape {
    type Err = Error;

    /// Comma-separated block sizes, e.g. `2,1,3`.
    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidShape(format!("`{}` is not a block size", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(blocks)
    }
}

impl fmt::Display for BlockShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An exact number of isomorphism classes of gradings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradingCount(pub BigUint);

impl GradingCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }
}

impl From<u64> for GradingCount {
    fn from(v: u64) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<BigUint> for GradingCount {
    fn from(v: BigUint) -> Self {
        Self(v)
    }
}

impl PartialEq<u64> for GradingCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for GradingCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
