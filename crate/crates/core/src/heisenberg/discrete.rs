use std::fmt;

use serde::{Deserialize, Serialize};

use crate::numeric::{int, SqrtRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiscreteOp {
    AMinus,
    APlus,
    Identity,
}

/// Truncated `N×N` matrix of a ladder operator in the number basis, indexed
/// `(n', n)` from 0.
#[derive(Clone, PartialEq, Eq)]
pub struct DiscreteMatrix {
    dim: usize,
    entries: Vec<Vec<SqrtRational>>,
}

impl DiscreteMatrix {
    pub fn zero(dim: usize) -> Self {
        DiscreteMatrix {
            dim,
            entries: vec![vec![SqrtRational::zero(); dim]; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &SqrtRational {
        &self.entries[row][col]
    }

    /// Entrywise combination; `None` if some entry would need two distinct
    /// radicands.
    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&SqrtRational, &SqrtRational) -> Option<SqrtRational>,
    ) -> Option<Self> {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = Self::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.entries[i][j] = f(&self.entries[i][j], &other.entries[i][j])?;
            }
        }
        Some(out)
    }

    pub fn add(&self, other: &Self) -> Option<Self> {
        self.zip_with(other, SqrtRational::checked_add)
    }

    pub fn sub(&self, other: &Self) -> Option<Self> {
        self.zip_with(other, SqrtRational::checked_sub)
    }

    pub fn mul(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = Self::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut acc = SqrtRational::zero();
                for k in 0..self.dim {
                    let (a, b) = (&self.entries[i][k], &other.entries[k][j]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.checked_add(&a.mul(b))?;
                    }
                }
                out.entries[i][j] = acc;
            }
        }
        Some(out)
    }

    pub fn commutator(&self, other: &Self) -> Option<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn anticommutator(&self, other: &Self) -> Option<Self> {
        self.mul(other)?.add(&other.mul(self)?)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.entries[i][j].is_zero()))
    }
}

/// `a₋` has `√n` at `(n-1, n)`, `a₊` has `√(n+1)` at `(n+1, n)`.
pub fn discrete_matrix(op: DiscreteOp, dim: usize) -> DiscreteMatrix {
    assert!(dim >= 2, "discrete matrices need dimension at least 2");
    let mut m = DiscreteMatrix::zero(dim);
    for n in 0..dim {
        match op {
            DiscreteOp::AMinus if n >= 1 => {
                m.entries[n - 1][n] = SqrtRational::sqrt_int(n as u64);
            }
            DiscreteOp::APlus if n + 1 < dim => {
                m.entries[n + 1][n] = SqrtRational::sqrt_int(n as u64 + 1);
            }
            DiscreteOp::Identity => m.entries[n][n] = SqrtRational::from_rational(int(1)),
            _ => {}
        }
    }
    m
}

impl fmt::Debug for DiscreteMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowering_entries() {
        let a = discrete_matrix(DiscreteOp::AMinus, 3);
        assert_eq!(a.get(0, 1).to_rational(), Some(int(1)));
        assert_eq!(a.get(1, 2), &SqrtRational::sqrt_int(2));
        assert!(a.get(1, 0).is_zero());
    }

    #[test]
    fn identity_is_diagonal_ones() {
        let i = discrete_matrix(DiscreteOp::Identity, 3);
        assert!(i.is_diagonal());
        assert!((0..3).all(|n| i.get(n, n).to_rational() == Some(int(1))));
    }

    #[test]
    fn commutator_truncation_edge() {
        let am = discrete_matrix(DiscreteOp::AMinus, 8);
        let ap = discrete_matrix(DiscreteOp::APlus, 8);
        let c = am.commutator(&ap).unwrap();
        assert!(c.is_diagonal());
        for n in 0..7 {
            assert_eq!(c.get(n, n).to_rational(), Some(int(1)));
        }
        assert_eq!(c.get(7, 7).to_rational(), Some(int(-7)));
    }

    #[test]
    fn anticommutator_spectrum() {
        let am = discrete_matrix(DiscreteOp::AMinus, 40);
        let ap = discrete_matrix(DiscreteOp::APlus, 40);
        let c = am.anticommutator(&ap).unwrap();
        assert!(c.is_diagonal());
        for n in 0..=38 {
            assert_eq!(c.get(n, n).to_rational(), Some(int(2 * n as i64 + 1)));
        }
    }
}
