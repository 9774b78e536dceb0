//! Partitions, Maya sequences, the bijection between them, and the
//! normalization constants `z_mu` shared by both inner products.

use std::cmp::Ordering;
use std::fmt;

use num::BigUint;

use crate::error::Error;

/// An integer partition: weakly decreasing positive parts, stored canonically
/// (no trailing zeros).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting sequences that are not weakly decreasing
    /// or contain non-positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition);
        }
        Ok(Partition { parts })
    }

    /// Canonicalizes an arbitrary multiset of positive integers into a
    /// partition by sorting descending. Zeros are dropped.
    pub fn from_parts_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(part, multiplicity)` pairs, parts descending.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, k)) if *q == p => *k += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Concatenation of part multisets, i.e. the product `p_mu * p_nu` on
    /// the index level.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_parts_unsorted(parts)
    }
}

/// Ordering: weight first, then reverse-lexicographic on the part vectors,
/// matching the enumeration order of [`partitions_of`]. Iterating a
/// `BTreeMap<Partition, _>` therefore visits one degree at a time in the
/// same order the tables are printed.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in reverse-lexicographic order (largest first
/// part first), each exactly once.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for k in (1..=top).rev() {
            current.push(k);
            rec(remaining - k, k, current, out);
            current.pop();
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out
}

/// The normalization constant `z_mu = prod_j k_j! * j^{k_j}` where `k_j`
/// is the multiplicity of part `j` in `mu`. This is the squared norm of
/// both the z-monomial and the power-sum product indexed by `mu`.
pub fn z_mu(mu: &Partition) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for (part, mult) in mu.multiplicities() {
        for i in 1..=mult {
            acc *= BigUint::from(i);
        }
        acc *= BigUint::from(part).pow(mult);
    }
    acc
}

/// A Maya index: strictly increasing integers `l_1 < l_2 < ...` with
/// `l_j = j` for all large `j` (charge zero). Canonical storage is the
/// partition `lambda` with `l_j = j - lambda_j`; the prefix is derived.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MayaIndex {
    lambda: Partition,
}

impl MayaIndex {
    /// The vacuum: `l_j = j` everywhere (empty partition).
    pub fn vacuum() -> Self {
        MayaIndex {
            lambda: Partition::empty(),
        }
    }

    pub fn from_partition(lambda: Partition) -> Self {
        MayaIndex { lambda }
    }

    pub fn partition(&self) -> &Partition {
        &self.lambda
    }

    pub fn into_partition(self) -> Partition {
        self.lambda
    }

    /// The entries that differ from the tail: `l_j = j - lambda_j` for
    /// `j = 1..=m` with `m` the number of parts.
    pub fn prefix(&self) -> Vec<i64> {
        self.lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| (i as i64 + 1) - p as i64)
            .collect()
    }

    /// `l_j` for any 1-based `j`, including the stabilized tail.
    pub fn entry(&self, j: usize) -> i64 {
        debug_assert!(j >= 1);
        match self.lambda.parts().get(j - 1) {
            Some(&p) => j as i64 - p as i64,
            None => j as i64,
        }
    }

    /// Parses a prefix `l_1..l_m` with the tail `l_j = j` implied for
    /// `j > m`. Rejects non-increasing or non-stabilizing input. Trailing
    /// entries that already equal the tail are canonicalized away.
    pub fn from_prefix(prefix: &[i64]) -> Result<Self, Error> {
        if prefix.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NonIncreasingMaya);
        }
        let m = prefix.len();
        let mut parts = Vec::with_capacity(m);
        for (i, &l) in prefix.iter().enumerate() {
            let j = i as i64 + 1;
            if l > j {
                // lambda_j would be negative; the sequence can never merge
                // back into the tail l_j = j.
                return Err(Error::NonStabilizingMaya {
                    entry: l,
                    position: i + 1,
                });
            }
            parts.push((j - l) as u32);
        }
        // strict increase with l_j <= j forces zeros into a suffix; dropping
        // them leaves a weakly decreasing positive sequence
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let lambda = Partition::new(parts).map_err(|_| Error::NonIncreasingMaya)?;
        Ok(MayaIndex { lambda })
    }
}

/// Renders the prefix, e.g. `[-1,1]`; the vacuum is `[]`.
impl fmt::Display for MayaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.prefix().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

/// `l_j = j - lambda_j` for stored parts, tail `l_j = j`.
pub fn partition_to_maya(lambda: &Partition) -> MayaIndex {
    MayaIndex::from_partition(lambda.clone())
}

/// Exact inverse of [`partition_to_maya`].
pub fn maya_to_partition(l: &MayaIndex) -> Partition {
    l.partition().clone()
}
