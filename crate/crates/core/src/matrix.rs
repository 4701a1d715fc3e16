//! Dense square matrices of arbitrary-precision integers.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn zeros(dim: usize) -> Self {
        ExactMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = ExactMatrix::zeros(dim);
        for i in 0..dim {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let entries = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        ExactMatrix { dim, entries }
    }

    /// Builds from row vectors; every row must have `rows.len()` entries.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: bad.len(),
            });
        }
        Ok(ExactMatrix::from_fn(dim, |i, j| BigInt::from(rows[i][j])))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn entry_sum(&self) -> BigInt {
        self.entries.iter().sum()
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, factor: &BigInt) -> ExactMatrix {
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        (0..self.dim).all(|i| {
            self.get(i, i).is_one() && (0..i).all(|j| self.get(i, j).is_zero())
        })
    }

    pub fn checked_mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut out = ExactMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> ExactMatrix {
        (0..k).fold(ExactMatrix::identity(self.dim), |acc, _| &acc * self)
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.dim];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                let m = self.get(i, j);
                if !m.is_zero() {
                    *slot += vi * m;
                }
            }
        }
        out
    }

    /// Exact inverse of an upper unitriangular matrix by back-substitution.
    pub fn invert_unitriangular(&self) -> Result<ExactMatrix> {
        if !self.is_upper_unitriangular() {
            return Err(Error::NotUnitriangular);
        }
        let n = self.dim;
        let mut inv = ExactMatrix::identity(n);
        // column by column: inv[i][j] = -sum_{i<k<=j} m[i][k] inv[k][j]
        for j in 0..n {
            for i in (0..j).rev() {
                let mut acc = BigInt::zero();
                for k in i + 1..=j {
                    let a = self.get(i, k);
                    let b = inv.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                inv.set(i, j, -acc);
            }
        }
        Ok(inv)
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    fn check_dim(&self, other: &ExactMatrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &ExactMatrix, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> ExactMatrix {
        self.check_dim(other).expect("matrix dimensions differ");
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl<'a> Add<&'a ExactMatrix> for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &'a ExactMatrix) -> ExactMatrix {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<'a> Sub<&'a ExactMatrix> for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &'a ExactMatrix) -> ExactMatrix {
        self.zip_with(rhs, |a, b| a - b)
    }
}

/// Panics on dimension mismatch; use [`ExactMatrix::checked_mul`] otherwise.
impl<'a> Mul<&'a ExactMatrix> for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &'a ExactMatrix) -> ExactMatrix {
        self.checked_mul(rhs).expect("matrix dimensions differ")
    }
}

impl Serialize for ExactMatrix {
    /// Rows of decimal strings.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.dim)
            .map(|i| self.row(i).iter().map(|e| e.to_string()).collect())
            .collect();
        rows.serialize(serializer)
    }
}
