//! Integer partitions: normalization, conjugation and disjoint sums.
//!
//! A [`Partition`] is a non-increasing sequence of positive integers. It is
//! used both for the Jordan block sizes of one eigenvalue and (in the role of
//! a multiplicity vector) for eigenvalue multiplicities.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest matrix size accepted at the input boundary.
pub const MAX_SIZE: u64 = 10_000;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u64>,
    size: u64,
}

impl Partition {
    /// Drops zero entries and sorts the rest in non-increasing order.
    ///
    /// Panics if the sum of the entries overflows `u64`; use
    /// [`Partition::try_normalize`] for untrusted input.
    pub fn normalize(raw: &[u64]) -> Self {
        Self::try_normalize(raw).expect("partition size overflows u64")
    }

    pub fn try_normalize(raw: &[u64]) -> Result<Self> {
        let mut parts: Vec<u64> = raw.iter().copied().filter(|&x| x > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let size = checked_sum(&parts)?;
        Ok(Partition { parts, size })
    }

    /// Builds a partition from parts that are already non-increasing and
    /// positive.
    pub fn from_sorted(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(
                "partition parts must be non-increasing".into(),
            ));
        }
        let size = checked_sum(&parts)?;
        Ok(Partition { parts, size })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `(1, …, 1)` with `count` ones.
    pub fn ones(count: u64) -> Self {
        Partition {
            parts: vec![1; count as usize],
            size: count,
        }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn is_all_ones(&self) -> bool {
        self.parts.iter().all(|&x| x == 1)
    }

    /// Conjugate partition: part `k` is the number of parts `>= k`.
    pub fn dual(&self) -> Partition {
        let width = self.first();
        let mut parts = Vec::with_capacity(width as usize);
        for k in 1..=width {
            parts.push(self.parts.iter().take_while(|&&x| x >= k).count() as u64);
        }
        Partition {
            parts,
            size: self.size,
        }
    }

    /// Sum of squares of the parts.
    pub fn square_sum(&self) -> u64 {
        self.parts.iter().map(|&x| x * x).sum()
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }
}

fn checked_sum(parts: &[u64]) -> Result<u64> {
    parts
        .iter()
        .try_fold(0u64, |acc, &x| acc.checked_add(x))
        .ok_or(Error::Overflow("summing partition parts"))
}

/// Multiset union of all parts, normalized.
pub fn disjoint_sum<'a, I>(ps: I) -> Partition
where
    I: IntoIterator<Item = &'a Partition>,
{
    let raw: Vec<u64> = ps.into_iter().flat_map(|p| p.parts.iter().copied()).collect();
    Partition::normalize(&raw)
}

/// All partitions of `n`, in descending lexicographic order.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(remaining: u64, max: u64, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        let size = current.iter().sum();
        out.push(Partition {
            parts: current.clone(),
            size,
        });
        return;
    }
    for part in (1..=remaining.min(max)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"(4,2,2)"`, returning the normalized partition and whether the
/// input needed reordering or zero removal.
pub fn parse_partition(s: &str) -> Result<(Partition, bool)> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix('(')
        .and_then(|rest| rest.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected '(a,b,…)', got {s:?}")))?;
    let raw: Vec<u64> = if inner.is_empty() {
        Vec::new()
    } else {
        inner
            .split(',')
            .map(|tok| {
                tok.parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad integer {tok:?} in {s:?}")))
            })
            .collect::<Result<_>>()?
    };
    let p = Partition::try_normalize(&raw)?;
    let changed = p.parts != raw;
    Ok((p, changed))
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s).map(|(p, _)| p)
    }
}
