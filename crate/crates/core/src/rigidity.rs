//! Rigidity arithmetic and moves on multiplicity vectors that keep `r`
//! fixed while changing `d`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::jnf::{ConjugacyShape, MultiplicityVector, ShapeTuple};
use crate::partition::partitions_of;
pub use crate::reduction::defect;

pub fn is_rigid<S: ConjugacyShape>(t: &ShapeTuple<S>) -> bool {
    defect(t) == 2
}

/// Number of leading components equal to the largest one.
fn leading_run(parts: &[u64]) -> usize {
    let first = parts.first().copied().unwrap_or(0);
    parts.iter().take_while(|&&m| m == first).count()
}

/// Moves one unit from the last component to the first component below the
/// leading run. Keeps `n` and `r`, strictly lowers `d`.
pub fn passage(mv: &MultiplicityVector) -> Result<MultiplicityVector> {
    let parts = mv.parts();
    let mu = leading_run(parts);
    if mu + 1 >= parts.len() {
        return Err(Error::UndefinedMove(format!(
            "passage needs a component below the leading run that is not the last one, got {mv}"
        )));
    }
    let mut raw = parts.to_vec();
    raw[mu] += 1;
    *raw.last_mut().expect("non-empty") -= 1;
    Ok(MultiplicityVector::from_raw(&raw))
}

/// Amount by which [`passage`] lowers `d`, or `None` when it is undefined.
pub fn passage_d_drop(mv: &MultiplicityVector) -> Option<u64> {
    let parts = mv.parts();
    let mu = leading_run(parts);
    (mu + 1 < parts.len()).then(|| 2 * (parts[mu] - parts[parts.len() - 1] + 1))
}

/// Every multiplicity vector `x` with `passage(x) == mv`.
pub fn antipassage_targets(mv: &MultiplicityVector) -> BTreeSet<MultiplicityVector> {
    // A passage moves one unit between two components, possibly deleting
    // the last one. Undo every such move and keep the genuine preimages.
    let parts = mv.parts();
    let mut out = BTreeSet::new();
    for take in 0..parts.len() {
        if parts[take] < 2 {
            continue;
        }
        for give in 0..=parts.len() {
            if give == take {
                continue;
            }
            let mut raw = parts.to_vec();
            raw[take] -= 1;
            if give == parts.len() {
                raw.push(1);
            } else {
                raw[give] += 1;
            }
            let x = MultiplicityVector::from_raw(&raw);
            if passage(&x).as_ref() == Ok(mv) {
                out.insert(x);
            }
        }
    }
    out
}

/// The multiplicity vector of size `n` with `r_j = r` and the least `d_j`.
pub fn min_d_mv(n: u64, r: u64) -> Result<MultiplicityVector> {
    if n == 0 || r >= n {
        return Err(Error::InvalidInput(format!(
            "need 0 <= r < n, got n = {n}, r = {r}"
        )));
    }
    if 2 * r <= n {
        return Ok(MultiplicityVector::from_raw(&[n - r, r]));
    }
    let m = n - r;
    let copies = (n - 1) / m;
    let rest = n - copies * m;
    let mut raw = vec![m; copies as usize];
    raw.push(rest);
    Ok(MultiplicityVector::from_raw(&raw))
}

/// Brute-force counterpart of [`min_d_mv`]: every multiplicity vector of
/// size `n` and rank `r` whose `d` is least.
pub fn min_d_brute_force(n: u64, r: u64) -> Vec<MultiplicityVector> {
    let candidates: Vec<MultiplicityVector> = partitions_of(n)
        .into_iter()
        .map(MultiplicityVector::new)
        .filter(|m| m.r() == r)
        .collect();
    let Some(best) = candidates.iter().map(ConjugacyShape::d).min() else {
        return Vec::new();
    };
    candidates.into_iter().filter(|m| m.d() == best).collect()
}

/// Rebalances two-component vectors `(a, b)` and `(v, w)` into
/// `(a − 1, b + 1)` and `(v + 1, w − 1)`. The sum of `r` is kept and the sum
/// of `d` drops.
pub fn rebalance_two(
    first: &MultiplicityVector,
    second: &MultiplicityVector,
) -> Result<(MultiplicityVector, MultiplicityVector)> {
    let (&[a, b], &[v, w]) = (first.parts(), second.parts()) else {
        return Err(Error::PreconditionViolated(format!(
            "rebalancing needs two-component vectors, got {first} and {second}"
        )));
    };
    let n = first.size();
    if second.size() != n {
        return Err(Error::PreconditionViolated(format!(
            "{first} and {second} have different sizes"
        )));
    }
    if !(a > b && b >= w && 2 * (b + 1) <= n) {
        return Err(Error::PreconditionViolated(format!(
            "rebalancing {first}, {second} needs a > b >= w and b + 1 <= n/2"
        )));
    }
    Ok((
        MultiplicityVector::from_raw(&[a - 1, b + 1]),
        MultiplicityVector::from_raw(&[v + 1, w - 1]),
    ))
}

/// Smallest leading multiplicity over the entries of a tuple, i.e. the least
/// `u` for which some entry can play the role of the capped first entry.
pub fn first_part_cap(t: &ShapeTuple<MultiplicityVector>) -> u64 {
    t.entries().iter().map(|m| m.partition().first()).min().unwrap_or(0)
}

/// Sum of `r` over all entries except one with the smallest leading
/// multiplicity. For rigid solvable tuples with that multiplicity equal to 2
/// this is `n` or `n + 1`.
pub fn r_sum_excluding_capped(t: &ShapeTuple<MultiplicityVector>) -> u64 {
    let cap = first_part_cap(t);
    let capped = t
        .entries()
        .iter()
        .position(|m| m.partition().first() == cap)
        .expect("tuples are non-empty");
    t.r_sum() - t.entries()[capped].r()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jnf::Pmv;

    fn mv(parts: &[u64]) -> MultiplicityVector {
        MultiplicityVector::from_raw(parts)
    }

    #[test]
    fn passage_examples() {
        assert_eq!(passage(&mv(&[3, 3, 1, 1])).unwrap(), mv(&[3, 3, 2]));
        assert!(matches!(passage(&mv(&[2, 2, 2])), Err(Error::UndefinedMove(_))));
        assert!(passage(&mv(&[4, 1])).is_err());
        for m in 2..8 {
            assert_eq!(passage(&mv(&[m, m, 1, 1])).unwrap(), mv(&[m, m, 2]));
        }
    }

    #[test]
    fn passage_keeps_r_and_drops_d() {
        for n in 1..=14 {
            for p in partitions_of(n) {
                let x = MultiplicityVector::new(p);
                match (passage(&x), passage_d_drop(&x)) {
                    (Ok(y), Some(drop)) => {
                        assert_eq!(y.size(), n);
                        assert_eq!(y.r(), x.r());
                        assert!(drop > 0);
                        assert_eq!(x.d() - y.d(), drop, "{x} -> {y}");
                        assert!(antipassage_targets(&y).contains(&x));
                    }
                    (Err(_), None) => {}
                    other => panic!("inconsistent for {x}: {other:?}"),
                }
            }
        }
    }

    #[test]
    fn antipassage_examples() {
        let got: Vec<_> = antipassage_targets(&mv(&[3, 3, 1])).into_iter().collect();
        assert_eq!(got, vec![mv(&[3, 2, 1, 1]), mv(&[3, 2, 2])]);
        assert!(antipassage_targets(&mv(&[3, 3, 2])).contains(&mv(&[3, 3, 1, 1])));
        assert!(antipassage_targets(&mv(&[1, 1])).is_empty());
    }

    #[test]
    fn antipassage_matches_brute_force() {
        for n in 1..=12 {
            let all: Vec<MultiplicityVector> =
                partitions_of(n).into_iter().map(MultiplicityVector::new).collect();
            for target in &all {
                let brute: BTreeSet<_> = all
                    .iter()
                    .filter(|x| passage(x).as_ref() == Ok(target))
                    .cloned()
                    .collect();
                assert_eq!(antipassage_targets(target), brute, "{target}");
            }
        }
    }

    #[test]
    fn min_d_examples() {
        assert_eq!(min_d_mv(7, 3).unwrap(), mv(&[4, 3]));
        assert_eq!(min_d_mv(7, 5).unwrap(), mv(&[2, 2, 2, 1]));
        assert_eq!(min_d_mv(6, 0).unwrap(), mv(&[6]));
        assert_eq!(min_d_mv(6, 4).unwrap(), mv(&[2, 2, 2]));
        assert!(min_d_mv(6, 6).is_err());
    }

    #[test]
    fn min_d_is_the_unique_minimum() {
        for n in 1..=18 {
            for r in 0..n {
                assert_eq!(min_d_brute_force(n, r), vec![min_d_mv(n, r).unwrap()], "n={n} r={r}");
            }
        }
    }

    #[test]
    fn rebalance_examples() {
        let (x, y) = rebalance_two(&mv(&[6, 2]), &mv(&[7, 1])).unwrap();
        assert_eq!((x.clone(), y.clone()), (mv(&[5, 3]), mv(&[8])));
        assert_eq!(x.r() + y.r(), 3);
        assert!(x.d() + y.d() < 24 + 14);
        assert!(rebalance_two(&mv(&[4, 4]), &mv(&[7, 1])).is_err());
        assert!(rebalance_two(&mv(&[5, 3]), &mv(&[4, 4])).is_err());
    }

    #[test]
    fn rigidity_flags() {
        for n in 2..12 {
            let hg = Pmv::from_parts(&[&[n - 1, 1], &vec![1; n as usize], &vec![1; n as usize]]).unwrap();
            assert!(is_rigid(&hg));
        }
        let omega: Pmv = "(2,2,2,2);(4,4);(5,3);(7,1)".parse().unwrap();
        assert_eq!(defect(&omega), 4);
        assert_eq!(first_part_cap(&omega), 2);
        assert_eq!(r_sum_excluding_capped(&omega), 4 + 3 + 1);
    }
}
