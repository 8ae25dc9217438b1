//! Integer lattices in Hermite normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// A sublattice of `Z^dim`, kept as its row Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharLattice {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Membership {
    Member,
    /// Back-substitution needed a non-integral coefficient at this coordinate.
    NonIntegral {
        column: usize,
    },
    /// A nonzero coordinate with no pivot.
    OutsideSpan {
        column: usize,
    },
}

impl CharLattice {
    pub fn zero(dim: usize) -> CharLattice {
        CharLattice {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_generators(dim: usize, gens: &[Vec<BigInt>]) -> Result<CharLattice> {
        for g in gens {
            if g.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.len(),
                });
            }
        }
        Ok(hnf(dim, gens.to_vec()))
    }

    pub fn from_i64(dim: usize, gens: &[Vec<i64>]) -> Result<CharLattice> {
        let g: Vec<Vec<BigInt>> = gens
            .iter()
            .map(|r| r.iter().map(|&a| BigInt::from(a)).collect())
            .collect();
        CharLattice::from_generators(dim, &g)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// The lattice spanned by both.
    pub fn join(&self, other: &CharLattice) -> Result<CharLattice> {
        let mut g = self.rows.clone();
        g.extend(other.rows.iter().cloned());
        CharLattice::from_generators(self.dim, &g)
    }

    pub fn membership(&self, v: &[BigInt]) -> Result<Membership> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            // coordinates left of the pivot are already zero
            if let Some(col) = (0..c).find(|&j| !v[j].is_zero()) {
                return Ok(Membership::OutsideSpan { column: col });
            }
            let (q, r) = v[c].div_rem(&row[c]);
            if !r.is_zero() {
                return Ok(Membership::NonIntegral { column: c });
            }
            if !q.is_zero() {
                for j in c..self.dim {
                    v[j] -= &q * &row[j];
                }
            }
        }
        Ok(match v.iter().position(|a| !a.is_zero()) {
            None => Membership::Member,
            Some(col) => Membership::OutsideSpan { column: col },
        })
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        Ok(self.membership(v)? == Membership::Member)
    }

    pub fn contains_i64(&self, v: &[i64]) -> Result<bool> {
        self.contains(&v.iter().map(|&a| BigInt::from(a)).collect::<Vec<_>>())
    }
}

fn hnf(dim: usize, mut m: Vec<Vec<BigInt>>) -> CharLattice {
    m.retain(|r| r.iter().any(|a| !a.is_zero()));
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..dim {
        loop {
            // smallest nonzero entry in column c among rows r..
            let best = (r..m.len())
                .filter(|&i| !m[i][c].is_zero())
                .min_by(|&a, &b| m[a][c].abs().cmp(&m[b][c].abs()));
            let Some(b) = best else { break };
            m.swap(r, b);
            let mut done = true;
            for i in r + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let q = m[i][c].div_floor(&m[r][c]);
                let pivot_row = m[r].clone();
                for j in c..dim {
                    m[i][j] -= &q * &pivot_row[j];
                }
                if !m[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < m.len() && !m[r][c].is_zero() {
            if m[r][c].is_negative() {
                for j in c..dim {
                    m[r][j] = -m[r][j].clone();
                }
            }
            let pivot_row = m[r].clone();
            for i in 0..r {
                let q = m[i][c].div_floor(&pivot_row[c]);
                if !q.is_zero() {
                    for j in c..dim {
                        m[i][j] -= &q * &pivot_row[j];
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
    }
    m.truncate(r);
    CharLattice {
        dim,
        rows: m,
        pivots,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn small_examples() {
        let l = CharLattice::from_i64(3, &[vec![2, 0, 0], vec![0, 3, 3], vec![2, 3, 3]]).unwrap();
        assert_eq!(l.rank(), 2);
        assert!(l.contains_i64(&[0, 0, 0]).unwrap());
        assert!(l.contains_i64(&[4, -3, -3]).unwrap());
        assert_eq!(
            l.membership(&big(&[1, 0, 0])).unwrap(),
            Membership::NonIntegral { column: 0 }
        );
        assert_eq!(
            l.membership(&big(&[0, 3, 2])).unwrap(),
            Membership::OutsideSpan { column: 2 }
        );
        assert!(l.membership(&big(&[1, 0])).is_err());
        assert!(CharLattice::zero(2).contains_i64(&[0, 0]).unwrap());
    }

    proptest! {
        #[test]
        fn generators_and_combinations_are_members(
            gens in proptest::collection::vec(proptest::collection::vec(-6i64..7, 4), 1..5),
            coeffs in proptest::collection::vec(-3i64..4, 5),
            seed in 0u64..1000,
        ) {
            let l = CharLattice::from_i64(4, &gens).unwrap();
            for g in &gens {
                prop_assert!(l.contains_i64(g).unwrap());
            }
            let mut v = vec![0i64; 4];
            for (g, c) in gens.iter().zip(&coeffs) {
                for j in 0..4 { v[j] += c * g[j]; }
            }
            prop_assert!(l.contains_i64(&v).unwrap());
            // adding a lattice vector does not change membership of an arbitrary vector
            let w = vec![1i64, 0, 0, 1];
            let sum: Vec<i64> = w.iter().zip(&v).map(|(a, b)| a + b).collect();
            prop_assert_eq!(l.contains_i64(&w).unwrap(), l.contains_i64(&sum).unwrap());
            // recomputation from shuffled generators gives the same normal form
            let mut shuffled = gens.clone();
            shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(CharLattice::from_i64(4, &shuffled).unwrap(), l);
        }
    }
}
