//! Independent check of the class-dimension formula on explicit matrices.

use num::{BigRational, Zero};

use crate::error::{Error, Result};
use crate::jnf::{ConjugacyShape, Jnf};

/// Largest size the explicit-matrix oracle accepts.
pub const ORACLE_MAX_N: u64 = 8;

/// Rank of a dense rational matrix by Gaussian elimination.
pub fn exact_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let height = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..height).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        for x in rows[rank][col..].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// An explicit matrix in the given normal form: eigenvalue slot `l` gets the
/// eigenvalue `l`, each block is an upper Jordan block.
pub fn jordan_matrix(j: &Jnf) -> Vec<Vec<i64>> {
    let n = j.size() as usize;
    let mut y = vec![vec![0i64; n]; n];
    let mut at = 0usize;
    for (l, slot) in j.slots().iter().enumerate() {
        for &block in slot.parts() {
            let b = block as usize;
            for i in at..at + b {
                y[i][i] = l as i64;
                if i + 1 < at + b {
                    y[i][i + 1] = 1;
                }
            }
            at += b;
        }
    }
    y
}

/// Dimension of the centralizer of an explicit matrix with this JNF, i.e.
/// the kernel dimension of `X ↦ XY − YX`.
pub fn centralizer_dim_oracle(j: &Jnf) -> Result<u64> {
    let n = j.size();
    if n > ORACLE_MAX_N {
        return Err(Error::SizeExceeded {
            what: "centralizer oracle",
            size: n,
            limit: ORACLE_MAX_N,
        });
    }
    let n = n as usize;
    let y = jordan_matrix(j);
    // Row (i, j) of the operator applied to the basis matrix E_(a, b).
    let mut op = vec![vec![BigRational::zero(); n * n]; n * n];
    for a in 0..n {
        for b in 0..n {
            let col = a * n + b;
            // (E_ab Y)_(a, k) = Y[b][k]
            for k in 0..n {
                if y[b][k] != 0 {
                    op[a * n + k][col] += BigRational::from_integer(y[b][k].into());
                }
            }
            // (Y E_ab)_(k, b) = Y[k][a]
            for k in 0..n {
                if y[k][a] != 0 {
                    op[k * n + b][col] -= BigRational::from_integer(y[k][a].into());
                }
            }
        }
    }
    Ok((n * n - exact_rank(op)) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn jnf(slots: &[&[u64]]) -> Jnf {
        Jnf::new(slots.iter().map(|s| Partition::normalize(s)).collect()).unwrap()
    }

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(exact_rank(vec![vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
        assert_eq!(exact_rank(vec![vec![q(0), q(1)], vec![q(1), q(0)]]), 2);
        assert_eq!(exact_rank(vec![vec![q(0); 3]; 2]), 0);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(centralizer_dim_oracle(&jnf(&[&[3]])).unwrap(), 3);
        assert_eq!(centralizer_dim_oracle(&jnf(&[&[1], &[1], &[1]])).unwrap(), 3);
        assert_eq!(centralizer_dim_oracle(&jnf(&[&[2, 1]])).unwrap(), 5);
        assert_eq!(centralizer_dim_oracle(&jnf(&[&[4, 2, 2]])).unwrap(), 20);
        assert!(centralizer_dim_oracle(&jnf(&[&[9]])).is_err());
    }
}
