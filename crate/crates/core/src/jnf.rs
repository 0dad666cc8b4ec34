//! Jordan normal forms, multiplicity vectors and tuples of them.
//!
//! Eigenvalue slots are abstract: a [`Jnf`] only records, for every distinct
//! eigenvalue, the partition of its Jordan block sizes. Diagonal forms are
//! encoded more compactly by a [`MultiplicityVector`]. Both implement
//! [`ConjugacyShape`], which is all the reduction machinery needs.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{disjoint_sum, parse_partition, Partition, MAX_SIZE};

/// Shape-level data of a conjugacy class: everything that depends only on
/// the Jordan normal form and not on the eigenvalues.
pub trait ConjugacyShape:
    Clone + Eq + Ord + Hash + fmt::Display + fmt::Debug + Send + Sync
{
    /// Matrix size `n`.
    fn size(&self) -> u64;

    /// `min_λ rank(Y − λI)`: `n` minus the largest number of Jordan blocks
    /// sharing one eigenvalue.
    fn r(&self) -> u64;

    /// Dimension of the conjugacy class.
    fn d(&self) -> u64;

    /// Multiplicities of the eigenvalues, one per slot.
    fn multiplicities(&self) -> Vec<u64>;

    /// One step of the size-reducing construction: take an eigenvalue with
    /// the greatest number of blocks and shrink its `by` smallest blocks by
    /// one. Fails when that eigenvalue has fewer than `by` blocks.
    fn reduce(&self, by: u64) -> Result<Self>;

    fn is_scalar(&self) -> bool {
        self.r() == 0
    }
}

/// Eigenvalue multiplicities of a diagonalizable class.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiplicityVector(Partition);

impl MultiplicityVector {
    pub fn new(p: Partition) -> Self {
        MultiplicityVector(p)
    }

    /// Normalizing constructor; zeros are dropped.
    pub fn from_raw(raw: &[u64]) -> Self {
        MultiplicityVector(Partition::normalize(raw))
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn parts(&self) -> &[u64] {
        self.0.parts()
    }

    pub fn is_all_ones(&self) -> bool {
        self.0.is_all_ones()
    }

    /// The diagonal Jordan normal form with these multiplicities.
    pub fn to_jnf(&self) -> Jnf {
        Jnf {
            slots: self.0.parts().iter().map(|&m| Partition::ones(m)).collect(),
            n: self.0.size(),
        }
    }
}

impl ConjugacyShape for MultiplicityVector {
    fn size(&self) -> u64 {
        self.0.size()
    }

    fn r(&self) -> u64 {
        self.0.size() - self.0.first()
    }

    fn d(&self) -> u64 {
        let n = self.0.size();
        n * n - self.0.square_sum()
    }

    fn multiplicities(&self) -> Vec<u64> {
        self.0.parts().to_vec()
    }

    fn reduce(&self, by: u64) -> Result<Self> {
        let first = self.0.first();
        if by > first {
            return Err(Error::PreconditionViolated(format!(
                "cannot remove {by} from the largest multiplicity of {self}"
            )));
        }
        let mut raw = self.0.parts().to_vec();
        raw[0] -= by;
        Ok(MultiplicityVector::from_raw(&raw))
    }
}

impl fmt::Display for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for MultiplicityVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(MultiplicityVector(s.parse()?))
    }
}

/// A Jordan normal form: one block-size partition per distinct eigenvalue.
///
/// Slots are kept sorted in descending lexicographic order, so equality is
/// multiset equality of the slot partitions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Jnf {
    slots: Vec<Partition>,
    n: u64,
}

impl Jnf {
    pub fn new(slots: Vec<Partition>) -> Result<Self> {
        if slots.is_empty() {
            return Err(Error::InvalidInput("a JNF needs at least one eigenvalue".into()));
        }
        if slots.iter().any(Partition::is_empty) {
            return Err(Error::InvalidInput(
                "every eigenvalue needs at least one Jordan block".into(),
            ));
        }
        let n = slots
            .iter()
            .try_fold(0u64, |acc, p| acc.checked_add(p.size()))
            .ok_or(Error::Overflow("summing JNF block sizes"))?;
        Ok(Self::canonical(slots, n))
    }

    fn canonical(mut slots: Vec<Partition>, n: u64) -> Self {
        slots.sort_unstable_by(|a, b| b.cmp(a));
        Jnf { slots, n }
    }

    /// Block-size partition of every eigenvalue slot, in canonical order.
    pub fn slots(&self) -> &[Partition] {
        &self.slots
    }

    pub fn is_diagonal(&self) -> bool {
        self.slots.iter().all(Partition::is_all_ones)
    }

    pub fn as_multiplicity_vector(&self) -> Option<MultiplicityVector> {
        self.is_diagonal()
            .then(|| MultiplicityVector::from_raw(&self.multiplicities()))
    }

    /// The diagonal form whose multiplicities are the disjoint sum of the
    /// conjugates of every slot's block partition.
    pub fn corresponding_diagonal(&self) -> MultiplicityVector {
        let duals: Vec<Partition> = self.slots.iter().map(Partition::dual).collect();
        MultiplicityVector(disjoint_sum(duals.iter()))
    }

    fn max_block_count(&self) -> usize {
        self.slots.iter().map(Partition::len).max().unwrap_or(0)
    }

    /// Indices of the slots that carry the greatest number of blocks.
    pub fn widest_slots(&self) -> Vec<usize> {
        let max = self.max_block_count();
        (0..self.slots.len())
            .filter(|&i| self.slots[i].len() == max)
            .collect()
    }

    /// [`ConjugacyShape::reduce`] applied to a chosen slot, which must be
    /// one of [`Jnf::widest_slots`].
    pub fn reduce_slot(&self, slot: usize, by: u64) -> Result<Self> {
        let max = self.max_block_count();
        let target = self
            .slots
            .get(slot)
            .ok_or_else(|| Error::InvalidInput(format!("slot {slot} out of range")))?;
        if target.len() != max {
            return Err(Error::PreconditionViolated(format!(
                "slot {slot} of {self} does not have the greatest number of blocks"
            )));
        }
        if by as usize > max {
            return Err(Error::PreconditionViolated(format!(
                "cannot shrink {by} blocks of an eigenvalue with {max} blocks in {self}"
            )));
        }
        let mut blocks = target.parts().to_vec();
        let len = blocks.len();
        for b in &mut blocks[len - by as usize..] {
            *b -= 1;
        }
        let shrunk = Partition::normalize(&blocks);
        let mut slots = self.slots.clone();
        if shrunk.is_empty() {
            slots.remove(slot);
        } else {
            slots[slot] = shrunk;
        }
        Ok(Self::canonical(slots, self.n - by))
    }
}

impl ConjugacyShape for Jnf {
    fn size(&self) -> u64 {
        self.n
    }

    fn r(&self) -> u64 {
        self.n - self.max_block_count() as u64
    }

    fn d(&self) -> u64 {
        let centralizer: u64 = self
            .slots
            .iter()
            .map(|p| p.dual().square_sum())
            .sum();
        self.n * self.n - centralizer
    }

    fn multiplicities(&self) -> Vec<u64> {
        self.slots.iter().map(Partition::size).collect()
    }

    fn reduce(&self, by: u64) -> Result<Self> {
        // Ties are broken by the first slot in canonical order.
        let slot = self.widest_slots()[0];
        self.reduce_slot(slot, by)
    }
}

impl fmt::Display for Jnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.slots.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Jnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `n` minus the greatest number of Jordan blocks of one eigenvalue.
pub fn r_of(j: &Jnf) -> u64 {
    j.r()
}

/// Dimension of the conjugacy class, `n² − Σ_l Σ_k (dual part)²`.
pub fn d_of(j: &Jnf) -> u64 {
    j.d()
}

/// An ordered collection of class shapes of a common size `n`.
///
/// Entries are sorted in descending order, so two tuples that differ only by
/// a permutation of their entries compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShapeTuple<S> {
    entries: Vec<S>,
    n: u64,
}

pub type JnfTuple = ShapeTuple<Jnf>;
/// Tuple of multiplicity vectors (the diagonal specialization).
pub type Pmv = ShapeTuple<MultiplicityVector>;

impl<S: ConjugacyShape> ShapeTuple<S> {
    /// Validating constructor used at the input boundary: at least two
    /// entries, all of the same size `1 <= n <= MAX_SIZE`.
    pub fn new(entries: Vec<S>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidInput(format!(
                "a tuple needs at least two entries, got {}",
                entries.len()
            )));
        }
        let n = entries[0].size();
        if n == 0 {
            return Err(Error::InvalidInput("entries must have size at least 1".into()));
        }
        if n > MAX_SIZE {
            return Err(Error::SizeExceeded {
                what: "tuple size",
                size: n,
                limit: MAX_SIZE,
            });
        }
        if let Some(bad) = entries.iter().find(|e| e.size() != n) {
            return Err(Error::InvalidInput(format!(
                "entry {bad} has size {} but the first entry has size {n}",
                bad.size()
            )));
        }
        Ok(Self::from_entries(entries, n))
    }

    /// Canonicalizing constructor without the boundary checks. Used for the
    /// intermediate tuples of a reduction, which may have dropped entries.
    pub(crate) fn from_entries(mut entries: Vec<S>, n: u64) -> Self {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        ShapeTuple { entries, n }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn r_values(&self) -> Vec<u64> {
        self.entries.iter().map(ConjugacyShape::r).collect()
    }

    pub fn d_values(&self) -> Vec<u64> {
        self.entries.iter().map(ConjugacyShape::d).collect()
    }

    pub fn d_sum(&self) -> u64 {
        self.entries.iter().map(ConjugacyShape::d).sum()
    }

    pub fn r_sum(&self) -> u64 {
        self.entries.iter().map(ConjugacyShape::r).sum()
    }

    /// The tuple with scalar entries removed, and the removed indices.
    pub fn without_scalars(&self) -> (Self, Vec<usize>) {
        let mut kept = Vec::with_capacity(self.entries.len());
        let mut dropped = Vec::new();
        for (i, e) in self.entries.iter().enumerate() {
            if e.is_scalar() {
                dropped.push(i);
            } else {
                kept.push(e.clone());
            }
        }
        (ShapeTuple { entries: kept, n: self.n }, dropped)
    }

    /// Equality up to entries that are scalar classes.
    pub fn same_up_to_scalars(&self, other: &Self) -> bool {
        self.n == other.n && self.without_scalars().0 == other.without_scalars().0
    }

    pub fn all_multiplicities(&self) -> Vec<u64> {
        self.entries.iter().flat_map(|e| e.multiplicities()).collect()
    }
}

impl Pmv {
    /// Normalizing shortcut for tuples of multiplicity vectors.
    pub fn from_parts(mvs: &[&[u64]]) -> Result<Self> {
        Self::new(mvs.iter().map(|m| MultiplicityVector::from_raw(m)).collect())
    }

    pub fn to_jnf_tuple(&self) -> JnfTuple {
        ShapeTuple {
            entries: self.entries.iter().map(MultiplicityVector::to_jnf).collect(),
            n: self.n,
        }
    }
}

impl JnfTuple {
    /// `Some` when every entry is diagonal.
    pub fn as_pmv(&self) -> Option<Pmv> {
        let entries = self
            .entries
            .iter()
            .map(Jnf::as_multiplicity_vector)
            .collect::<Option<Vec<_>>>()?;
        Some(ShapeTuple::from_entries(entries, self.n))
    }

    pub fn corresponding_diagonal(&self) -> Pmv {
        ShapeTuple::from_entries(
            self.entries.iter().map(Jnf::corresponding_diagonal).collect(),
            self.n,
        )
    }

    pub fn to_json(&self) -> JnfTupleJson {
        JnfTupleJson {
            n: Some(self.n),
            entries: self
                .entries
                .iter()
                .map(|j| JnfJson {
                    eigenvalues: j.slots.iter().map(|p| p.parts().to_vec()).collect(),
                })
                .collect(),
        }
    }
}

impl<S: fmt::Display> fmt::Display for ShapeTuple<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl<S: fmt::Debug> fmt::Debug for ShapeTuple<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[n={}] ", self.n)?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{e:?}")?;
        }
        Ok(())
    }
}

/// Parses `"(2,2,1);(3,2);(4,1)"`. The flag reports whether any component
/// had to be reordered.
pub fn parse_pmv(s: &str) -> Result<(Pmv, bool)> {
    let mut changed = false;
    let mut mvs = Vec::new();
    for chunk in s.split(';') {
        let (p, c) = parse_partition(chunk)?;
        changed |= c;
        mvs.push(MultiplicityVector::new(p));
    }
    Ok((Pmv::new(mvs)?, changed))
}

impl FromStr for Pmv {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pmv(s).map(|(t, _)| t)
    }
}

/// JSON form of one JNF: block sizes per eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JnfJson {
    pub eigenvalues: Vec<Vec<u64>>,
}

/// JSON form of a JNF tuple, `{"n":14,"entries":[{"eigenvalues":[[4,2,2],[5,1]]}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JnfTupleJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    pub entries: Vec<JnfJson>,
}

impl JnfJson {
    pub fn to_jnf(&self) -> Result<Jnf> {
        let slots = self
            .eigenvalues
            .iter()
            .map(|b| Partition::try_normalize(b))
            .collect::<Result<Vec<_>>>()?;
        Jnf::new(slots)
    }
}

impl JnfTupleJson {
    pub fn to_tuple(&self) -> Result<JnfTuple> {
        let entries = self
            .entries
            .iter()
            .map(JnfJson::to_jnf)
            .collect::<Result<Vec<_>>>()?;
        let t = JnfTuple::new(entries)?;
        if let Some(n) = self.n {
            if n != t.n() {
                return Err(Error::InvalidInput(format!(
                    "declared n = {n} but the entries have size {}",
                    t.n()
                )));
            }
        }
        Ok(t)
    }
}

pub fn parse_jnf_tuple_json(s: &str) -> Result<JnfTuple> {
    let raw: JnfTupleJson =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("JNF tuple JSON: {e}")))?;
    raw.to_tuple()
}

impl FromStr for Jnf {
    type Err = Error;

    /// Parses `"{(4,2,2),(5,1)}"`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('{')
            .and_then(|rest| rest.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("expected '{{(a,…),(b,…)}}', got {s:?}")))?;
        let mut slots = Vec::new();
        for chunk in inner.split_inclusive(')') {
            let chunk = chunk.strip_prefix(',').unwrap_or(chunk);
            slots.push(chunk.parse::<Partition>()?);
        }
        Jnf::new(slots)
    }
}

impl FromStr for JnfTuple {
    type Err = Error;

    /// Parses `"{(2,2)};{(2,2)};{(3,1)}"`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(';')
            .map(str::parse)
            .collect::<Result<Vec<Jnf>>>()?;
        JnfTuple::new(entries)
    }
}

/// Every JNF of size `n`, each once, in canonical form.
pub fn jnfs_of_size(n: u64) -> Vec<Jnf> {
    // Candidate slot partitions of every size up to n, descending.
    let mut pool: Vec<Partition> = (1..=n)
        .flat_map(crate::partition::partitions_of)
        .collect();
    pool.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_jnfs(&pool, 0, n, &mut current, &mut out);
    out
}

fn fill_jnfs(
    pool: &[Partition],
    start: usize,
    remaining: u64,
    current: &mut Vec<Partition>,
    out: &mut Vec<Jnf>,
) {
    if remaining == 0 {
        if !current.is_empty() {
            let n = current.iter().map(Partition::size).sum();
            out.push(Jnf::canonical(current.clone(), n));
        }
        return;
    }
    for i in start..pool.len() {
        if pool[i].size() <= remaining {
            current.push(pool[i].clone());
            fill_jnfs(pool, i, remaining - pool[i].size(), current, out);
            current.pop();
        }
    }
}
