//! Exhaustive search over tuples of multiplicity vectors.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jnf::{ConjugacyShape, MultiplicityVector, Pmv};
use crate::partition::partitions_of;
use crate::reduction::decide;

/// Default largest size accepted by the enumerator.
pub const DEFAULT_MAX_N: u64 = 40;
/// Largest number of entries accepted by the enumerator.
pub const MAX_ENTRIES: usize = 6;
/// Environment variable overriding [`DEFAULT_MAX_N`].
pub const MAX_N_ENV: &str = "DSPKIT_MAX_N";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumConstraints {
    pub n: u64,
    pub num_entries: usize,
    /// Cap `u` on the largest multiplicity of (some) entry.
    pub max_first_part: Option<u64>,
    /// Exclude `(1,…,1)`.
    pub forbid_all_ones: bool,
    /// Exclude the scalar vector `(n)`.
    pub forbid_scalar: bool,
    /// Keep only tuples with `2n² − Σd_j` equal to this.
    pub require_defect: Option<i64>,
}

impl EnumConstraints {
    /// Rigid tuples with a capped entry, no all-ones and no scalar entries.
    pub fn rigid(n: u64, num_entries: usize, u: u64) -> Self {
        EnumConstraints {
            n,
            num_entries,
            max_first_part: Some(u),
            forbid_all_ones: true,
            forbid_scalar: true,
            require_defect: Some(2),
        }
    }
}

/// The size limit in force: [`MAX_N_ENV`] when set and valid, else
/// [`DEFAULT_MAX_N`].
pub fn max_n() -> u64 {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

fn check_guards(c: &EnumConstraints) -> Result<()> {
    if c.n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    if c.num_entries < 2 {
        return Err(Error::InvalidInput("a tuple needs at least two entries".into()));
    }
    let limit = max_n();
    if c.n > limit {
        return Err(Error::ResourceExceeded(format!(
            "n = {} exceeds the enumeration limit {limit} (set {MAX_N_ENV} to raise it)",
            c.n
        )));
    }
    if c.num_entries > MAX_ENTRIES {
        return Err(Error::ResourceExceeded(format!(
            "{} entries exceed the enumeration limit {MAX_ENTRIES}",
            c.num_entries
        )));
    }
    Ok(())
}

struct Pool {
    mvs: Vec<MultiplicityVector>,
    d: Vec<u64>,
    by_d: HashMap<u64, Vec<usize>>,
    /// Indices into `mvs` allowed as the capped entry.
    firsts: Vec<usize>,
}

impl Pool {
    fn new(c: &EnumConstraints) -> Self {
        let mvs: Vec<MultiplicityVector> = partitions_of(c.n)
            .into_iter()
            .map(MultiplicityVector::new)
            .filter(|m| !(c.forbid_scalar && m.is_scalar()))
            .filter(|m| !(c.forbid_all_ones && m.is_all_ones()))
            .collect();
        let d: Vec<u64> = mvs.iter().map(ConjugacyShape::d).collect();
        let mut by_d: HashMap<u64, Vec<usize>> = HashMap::new();
        for (i, &di) in d.iter().enumerate() {
            by_d.entry(di).or_default().push(i);
        }
        let firsts = (0..mvs.len())
            .filter(|&i| c.max_first_part.is_none_or(|u| mvs[i].partition().first() <= u))
            .collect();
        Pool {
            mvs,
            d,
            by_d,
            firsts,
        }
    }
}

/// Calls `visit` on every tuple meeting the shape constraints and the defect
/// filter, without running the reduction. A tuple with several capped
/// entries may be visited more than once.
pub fn for_each_candidate<F>(c: &EnumConstraints, visit: F) -> Result<()>
where
    F: Fn(Pmv) + Sync,
{
    check_guards(c)?;
    let pool = Pool::new(c);
    let n = c.n as i64;
    let target = c.require_defect.map(|defect| 2 * n * n - defect);
    let capped = c.max_first_part.is_some();
    // Shard on the first two entries so that a handful of capped first
    // entries still spreads over all workers.
    let shards: Vec<(usize, usize)> = pool
        .firsts
        .iter()
        .flat_map(|&first| {
            let start = if capped { 0 } else { first };
            (start..pool.mvs.len()).map(move |second| (first, second))
        })
        .collect();
    shards.into_par_iter().for_each(|(first, second)| {
        let mut chosen = vec![first, second];
        let remaining = target.map(|t| t - pool.d[first] as i64 - pool.d[second] as i64);
        extend(&pool, c, second, remaining, &mut chosen, &visit);
    });
    Ok(())
}

fn extend<F: Fn(Pmv)>(
    pool: &Pool,
    c: &EnumConstraints,
    start: usize,
    remaining: Option<i64>,
    chosen: &mut Vec<usize>,
    visit: &F,
) {
    let slots_left = c.num_entries - chosen.len();
    if slots_left == 0 {
        if remaining.is_none_or(|r| r == 0) {
            let entries = chosen.iter().map(|&i| pool.mvs[i].clone()).collect();
            visit(Pmv::new(entries).expect("entries share the size n"));
        }
        return;
    }
    if let Some(r) = remaining {
        let n = c.n as i64;
        if r < 0 || r > slots_left as i64 * (n * n - n) {
            return;
        }
        if slots_left == 1 {
            if let Some(bucket) = pool.by_d.get(&(r as u64)) {
                for &i in bucket.iter().filter(|&&i| i >= start) {
                    chosen.push(i);
                    extend(pool, c, i, Some(0), chosen, visit);
                    chosen.pop();
                }
            }
            return;
        }
    }
    for i in start..pool.mvs.len() {
        chosen.push(i);
        extend(pool, c, i, remaining.map(|r| r - pool.d[i] as i64), chosen, visit);
        chosen.pop();
    }
}

/// Every solvable tuple meeting the constraints, deduplicated up to
/// permutation of entries and sorted by canonical form.
pub fn enumerate_rigid(c: &EnumConstraints) -> Result<Vec<Pmv>> {
    let found = std::sync::Mutex::new(BTreeSet::new());
    for_each_candidate(c, |t| {
        if decide(&t).solvable() {
            found.lock().expect("no panics while holding the lock").insert(t);
        }
    })?;
    Ok(found
        .into_inner()
        .expect("no panics while holding the lock")
        .into_iter()
        .collect())
}

/// [`enumerate_rigid`] on a dedicated pool of `jobs` worker threads.
pub fn enumerate_rigid_with_jobs(c: &EnumConstraints, jobs: usize) -> Result<Vec<Pmv>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::ResourceExceeded(format!("cannot start worker pool: {e}")))?;
    pool.install(|| enumerate_rigid(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::defect;

    fn pmv(s: &str) -> Pmv {
        s.parse().unwrap()
    }

    #[test]
    fn guards() {
        let mut c = EnumConstraints::rigid(41, 3, 2);
        assert!(matches!(enumerate_rigid(&c), Err(Error::ResourceExceeded(_))));
        c.n = 5;
        c.num_entries = 7;
        assert!(matches!(enumerate_rigid(&c), Err(Error::ResourceExceeded(_))));
        c.num_entries = 1;
        assert!(matches!(enumerate_rigid(&c), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn small_quadruples() {
        let found = enumerate_rigid(&EnumConstraints::rigid(6, 4, 2)).unwrap();
        assert!(found.contains(&pmv("(2,2,2);(3,3);(4,1,1);(5,1)")));
        assert!(found.iter().all(|t| defect(t) == 2));
        assert!(found.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn matches_naive_search() {
        // Every triple of size 5 without a defect filter, checked against a
        // plain triple loop.
        let c = EnumConstraints {
            n: 5,
            num_entries: 3,
            max_first_part: Some(3),
            forbid_all_ones: false,
            forbid_scalar: true,
            require_defect: None,
        };
        let got = enumerate_rigid(&c).unwrap();
        let all: Vec<MultiplicityVector> = partitions_of(5)
            .into_iter()
            .map(MultiplicityVector::new)
            .filter(|m| !m.is_scalar())
            .collect();
        let mut want = BTreeSet::new();
        for a in &all {
            for b in &all {
                for x in &all {
                    let t = Pmv::new(vec![a.clone(), b.clone(), x.clone()]).unwrap();
                    if t.entries().iter().any(|m| m.partition().first() <= 3) && decide(&t).solvable() {
                        want.insert(t);
                    }
                }
            }
        }
        assert_eq!(got, want.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn job_count_does_not_change_output() {
        let c = EnumConstraints::rigid(12, 3, 2);
        assert_eq!(
            enumerate_rigid_with_jobs(&c, 1).unwrap(),
            enumerate_rigid_with_jobs(&c, 4).unwrap()
        );
    }
}
