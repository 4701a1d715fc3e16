//! Dyck paths as north/east step words.
//!
//! A path of order `n` is a word of `n` north and `n` east steps in which no
//! prefix has more east than north steps. Rows are numbered `1..=n` from the
//! bottom; the `k`-th north step climbs from row `k-1` to row `k`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::config::Limits;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Step {
    North,
    East,
}

impl Step {
    fn as_char(self) -> char {
        match self {
            Step::North => 'N',
            Step::East => 'E',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

/// The five per-path statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathStats {
    pub area: usize,
    pub inv: usize,
    pub maj: usize,
    pub bounce: usize,
    pub area_vector: Vec<usize>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: isize = 0;
        for (i, step) in steps.iter().enumerate() {
            height += match step {
                Step::North => 1,
                Step::East => -1,
            };
            if height < 0 {
                return Err(Error::InvalidPath(format!(
                    "prefix of length {} has more east than north steps",
                    i + 1
                )));
            }
        }
        if height != 0 {
            return Err(Error::InvalidPath(
                "north and east step counts differ".to_string(),
            ));
        }
        Ok(DyckPath { steps })
    }

    /// The empty path of order 0.
    pub fn empty() -> Self {
        DyckPath { steps: Vec::new() }
    }

    /// `N^n E^n`, the maximum of `D_n`.
    pub fn full(n: usize) -> Self {
        let mut steps = vec![Step::North; n];
        steps.extend(std::iter::repeat_n(Step::East, n));
        DyckPath { steps }
    }

    /// `(NE)^n`, the minimum of `D_n`.
    pub fn staircase(n: usize) -> Self {
        let steps = (0..n).flat_map(|_| [Step::North, Step::East]).collect();
        DyckPath { steps }
    }

    /// Builds a path from the column (number of preceding east steps) of each
    /// north step, bottom to top.
    pub fn from_columns(columns: &[usize]) -> Result<Self> {
        let n = columns.len();
        let mut steps = Vec::with_capacity(2 * n);
        let mut east = 0;
        for &c in columns {
            if c < east || c > n {
                return Err(Error::InvalidPath(format!(
                    "column sequence {columns:?} is not weakly increasing within 0..{n}"
                )));
            }
            steps.extend(std::iter::repeat_n(Step::East, c - east));
            east = c;
            steps.push(Step::North);
        }
        steps.extend(std::iter::repeat_n(Step::East, n - east));
        DyckPath::new(steps)
    }

    pub fn order(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of east steps taken before each north step.
    pub fn columns(&self) -> Vec<usize> {
        let mut east = 0;
        let mut columns = Vec::with_capacity(self.order());
        for step in &self.steps {
            match step {
                Step::North => columns.push(east),
                Step::East => east += 1,
            }
        }
        columns
    }

    /// Height of the path after `x` east steps, i.e. the number of north
    /// steps preceding the `(x+1)`-th east step (`x < n`).
    pub fn heights(&self) -> Vec<usize> {
        let mut north = 0;
        let mut heights = Vec::with_capacity(self.order());
        for step in &self.steps {
            match step {
                Step::North => north += 1,
                Step::East => heights.push(north),
            }
        }
        heights
    }

    /// Complete cells between the path and the diagonal, row by row.
    pub fn area_vector(&self) -> Vec<usize> {
        self.columns()
            .iter()
            .enumerate()
            .map(|(row, &c)| row - c)
            .collect()
    }

    pub fn area(&self) -> usize {
        self.area_vector().iter().sum()
    }

    /// Cells above the path inside the grid's upper triangle.
    pub fn inv(&self) -> usize {
        let n = self.order();
        n * n.saturating_sub(1) / 2 - self.area()
    }

    /// Sum of the 1-based positions of east steps immediately followed by a
    /// north step.
    pub fn maj(&self) -> usize {
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::East && w[1] == Step::North)
            .map(|(i, _)| i + 1)
            .sum()
    }

    /// Bounce statistic of the path traced from `(n, n)` back to the origin:
    /// west to the top of a north step, south to the diagonal, repeated. The
    /// diagonal contacts `(k, k)` after the start contribute `k`.
    pub fn bounce(&self) -> usize {
        let columns = self.columns();
        let mut k = self.order();
        let mut total = 0;
        while k > 0 {
            // the north step ending at height k sits in column columns[k-1] < k
            k = columns[k - 1];
            total += k;
        }
        total
    }

    pub fn stats(&self) -> PathStats {
        PathStats {
            area: self.area(),
            inv: self.inv(),
            maj: self.maj(),
            bounce: self.bounce(),
            area_vector: self.area_vector(),
        }
    }

    /// True iff `self` lies weakly below `other`.
    pub fn is_below(&self, other: &DyckPath) -> Result<bool> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(self
            .heights()
            .iter()
            .zip(other.heights())
            .all(|(&mine, theirs)| mine <= theirs))
    }

    /// Ascending area, then lexicographic with `N < E`.
    pub fn canonical_cmp(&self, other: &DyckPath) -> Ordering {
        self.area()
            .cmp(&other.area())
            .then_with(|| self.steps.cmp(&other.steps))
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "{}", step.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c.to_ascii_uppercase() {
                'N' | '(' => Ok(Step::North),
                'E' | ')' => Ok(Step::East),
                other => Err(Error::InvalidPath(format!("unexpected step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

impl Serialize for DyckPath {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// All Dyck paths of order `n` in canonical order.
pub fn enumerate_paths(n: usize, limits: &Limits) -> Result<Vec<DyckPath>> {
    limits.check_order(n)?;
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(2 * n);
    extend(n, 0, 0, &mut steps, &mut out);
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

fn extend(n: usize, north: usize, east: usize, steps: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
    if north == n && east == n {
        out.push(DyckPath { steps: steps.clone() });
        return;
    }
    if north < n {
        steps.push(Step::North);
        extend(n, north + 1, east, steps, out);
        steps.pop();
    }
    if east < north {
        steps.push(Step::East);
        extend(n, north, east + 1, steps, out);
        steps.pop();
    }
}
