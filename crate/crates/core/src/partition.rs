//! Integer partitions drawn as Young diagrams in English notation (row 1 on
//! top), and the bijection with Dyck paths via the cells above a path.

use serde::Serialize;

use crate::path::DyckPath;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Arm, leg, coarm and coleg of one cell (`row`, `col` are 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CellStats {
    pub row: usize,
    pub col: usize,
    pub arm: usize,
    pub leg: usize,
    pub coarm: usize,
    pub coleg: usize,
}

impl CellStats {
    pub fn hook(&self) -> usize {
        self.arm + self.leg + 1
    }
}

impl Partition {
    /// Trailing zeros are dropped; the rest must be weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(n-1, n-2, ..., 1)`.
    pub fn staircase(n: usize) -> Self {
        Partition {
            parts: (1..n).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn area(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Vec<usize> {
        let width = self.parts.first().copied().unwrap_or(0);
        (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect()
    }

    /// `(row, col)` of every cell, 1-based, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    pub fn cell_stats(&self) -> Vec<CellStats> {
        let conj = self.conjugate();
        self.cells()
            .map(|(row, col)| CellStats {
                row,
                col,
                arm: self.parts[row - 1] - col,
                leg: conj[col - 1] - row,
                coarm: col - 1,
                coleg: row - 1,
            })
            .collect()
    }

    /// All partitions of `n`, parts in decreasing lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        partitions_into(n, n, &mut current, &mut out);
        out
    }
}

fn partitions_into(rest: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=rest.min(max_part)).rev() {
        current.push(part);
        partitions_into(rest - part, part, current, out);
        current.pop();
    }
}

/// The Young diagram formed by the grid cells above `path`.
///
/// Row `i` from the top holds the cells left of the north step entering the
/// `i`-th row from the top, so its length is that step's column.
pub fn path_to_partition(path: &DyckPath) -> Partition {
    let parts = path.columns().into_iter().rev().collect();
    Partition::new(parts).expect("columns of a Dyck path are weakly increasing")
}

/// Inverse of [`path_to_partition`] for paths of order `n`.
pub fn partition_to_path(partition: &Partition, n: usize) -> Result<DyckPath> {
    if partition.len() > n.saturating_sub(1) {
        return Err(Error::InvalidPartition(format!(
            "{:?} has more than {} rows",
            partition.parts,
            n.saturating_sub(1)
        )));
    }
    for (i, &part) in partition.parts.iter().enumerate() {
        let row = i + 1;
        if part > n - row {
            return Err(Error::InvalidPartition(format!(
                "row {row} of {:?} exceeds {}",
                partition.parts,
                n - row
            )));
        }
    }
    let mut columns: Vec<usize> = (0..n)
        .map(|i| partition.parts.get(i).copied().unwrap_or(0))
        .collect();
    columns.reverse();
    DyckPath::from_columns(&columns)
}
