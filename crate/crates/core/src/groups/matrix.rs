use std::fmt;

use num_traits::{Num, Signed};

/// 3×3 matrix over a single scalar type, so an exact instance can never pick
/// up float entries.
#[derive(Clone, PartialEq)]
pub struct Matrix3<T> {
    m: [[T; 3]; 3],
}

impl<T: Clone + Num> Matrix3<T> {
    pub fn from_rows(m: [[T; 3]; 3]) -> Self {
        Matrix3 { m }
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| T::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { T::one() } else { T::zero() })
    }

    /// Matrix with a single `1` at 0-based `(i, j)`.
    pub fn unit(i: usize, j: usize) -> Self {
        let mut a = Self::zero();
        a.m[i][j] = T::one();
        a
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> T) -> Self {
        Matrix3 {
            m: [
                [f(0, 0), f(0, 1), f(0, 2)],
                [f(1, 0), f(1, 1), f(1, 2)],
                [f(2, 0), f(2, 1), f(2, 2)],
            ],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.m[i][j]
    }

    pub fn rows(&self) -> &[[T; 3]; 3] {
        &self.m
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(|i, j| self.m[i][j].clone() + other.m[i][j].clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(|i, j| self.m[i][j].clone() - other.m[i][j].clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_fn(|i, j| self.m[i][j].clone() * c.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_fn(|i, j| {
            (0..3).fold(T::zero(), |acc, k| {
                acc + self.m[i][k].clone() * other.m[k][j].clone()
            })
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(), |acc, _| acc.mul(self))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(T::is_zero)
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix3<U> {
        Matrix3 {
            m: [0, 1, 2].map(|i| [0, 1, 2].map(|j| f(&self.m[i][j]))),
        }
    }
}

impl<T: Clone + Num + Signed + PartialOrd> Matrix3<T> {
    /// Largest absolute entry of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.sub(other)
            .m
            .iter()
            .flatten()
            .map(|x| x.abs())
            .fold(T::zero(), |a, b| if b > a { b } else { a })
    }
}

impl<T: fmt::Display> fmt::Display for Matrix3<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.m.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix3<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
