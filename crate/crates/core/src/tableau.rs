//! Hook lengths, standard Young tableau counts and the correspondence between
//! maximal chains of `D_n` and tableaux of staircase shape.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::config::Limits;
use crate::partition::{path_to_partition, Partition};
use crate::poset::Poset;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HookDiagram {
    pub partition: Partition,
    /// Hook lengths row by row, matching `partition.cells()`.
    pub hooks: Vec<usize>,
}

pub fn hook_lengths(lambda: &Partition) -> HookDiagram {
    HookDiagram {
        partition: lambda.clone(),
        hooks: lambda.cell_stats().iter().map(|c| c.hook()).collect(),
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// `|lambda|! / prod(hooks)`.
pub fn syt_count(lambda: &Partition) -> BigUint {
    let denom = hook_lengths(lambda)
        .hooks
        .iter()
        .fold(BigUint::one(), |acc, &h| acc * h as u64);
    let num = factorial(lambda.area());
    debug_assert!((&num % &denom) == BigUint::from(0u32));
    num / denom
}

/// `binom(n,2)! / prod_{i=1}^{n-1} (2i-1)^{n-i}`.
pub fn staircase_maxchain(n: usize) -> BigUint {
    let cells = n * n.saturating_sub(1) / 2;
    let denom = (1..n).fold(BigUint::one(), |acc, i| {
        acc * BigUint::from(2 * i as u64 - 1).pow((n - i) as u32)
    });
    factorial(cells) / denom
}

/// A filling of a shape, one row per vector.
pub type Filling = Vec<Vec<usize>>;

pub fn is_standard(filling: &Filling, lambda: &Partition) -> bool {
    let shape_ok = filling.len() == lambda.len()
        && filling.iter().zip(lambda.parts()).all(|(row, &len)| row.len() == len);
    if !shape_ok {
        return false;
    }
    let mut seen: Vec<usize> = filling.iter().flatten().copied().collect();
    seen.sort_unstable();
    if seen != (1..=lambda.area()).collect::<Vec<_>>() {
        return false;
    }
    let rows_ok = filling.iter().all(|row| row.windows(2).all(|w| w[0] < w[1]));
    let cols_ok = filling
        .windows(2)
        .all(|pair| pair[1].iter().zip(&pair[0]).all(|(below, above)| above < below));
    rows_ok && cols_ok
}

/// Reads a maximal chain as the order in which cells are added to the
/// diagram above the path, starting from the full path (empty diagram).
///
/// Walking up `D_n` adds area and removes a cell from the diagram above the
/// path, so the chain is read from the top down.
pub fn chain_to_filling(poset: &Poset, chain: &[usize]) -> Option<Filling> {
    let shapes: Vec<Partition> = chain
        .iter()
        .rev()
        .map(|&i| path_to_partition(&poset.elements()[i]))
        .collect();
    let last = shapes.last()?;
    let mut filling: Filling = last.parts().iter().map(|&len| vec![0; len]).collect();
    for (step, pair) in shapes.windows(2).enumerate() {
        let (before, after) = (&pair[0], &pair[1]);
        if after.area() != before.area() + 1 {
            return None;
        }
        let row = (0..after.len()).find(|&r| before.parts().get(r).copied().unwrap_or(0) != after.parts()[r])?;
        let col = after.parts()[row] - 1;
        filling[row][col] = step + 1;
    }
    Some(filling)
}

/// Converts every maximal chain of `D_n` into a filling of the staircase and
/// checks each is standard and all are distinct, with as many chains as the
/// hook-length count.
pub fn maxchain_tableau_bijection_check(n: usize, limits: &Limits) -> Result<bool> {
    let poset = Poset::build(n, limits)?;
    let shape = Partition::staircase(n);
    let chains = poset.maximal_chains(limits)?;
    let mut fillings = HashSet::new();
    for chain in &chains {
        match chain_to_filling(&poset, chain) {
            Some(f) if is_standard(&f, &shape) => {
                fillings.insert(f);
            }
            _ => return Ok(false),
        }
    }
    Ok(fillings.len() == chains.len() && BigUint::from(chains.len()) == syt_count(&shape))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn staircase_hooks() {
        let mut hooks = hook_lengths(&Partition::staircase(5)).hooks;
        hooks.sort_unstable();
        assert_eq!(hooks, vec![1, 1, 1, 1, 3, 3, 3, 5, 5, 7]);
    }

    #[test]
    fn known_counts() {
        assert_eq!(syt_count(&Partition::staircase(5)), BigUint::from(768u32));
        assert_eq!(syt_count(&Partition::new(vec![2, 1]).unwrap()), BigUint::from(2u32));
        assert_eq!(syt_count(&Partition::new(vec![6]).unwrap()), BigUint::one());
        assert_eq!(staircase_maxchain(2), BigUint::one());
        assert_eq!(staircase_maxchain(6), BigUint::from(292_864u32));
        assert_eq!(staircase_maxchain(0), BigUint::one());
    }

    #[test]
    fn standardness() {
        let shape = Partition::new(vec![2, 1]).unwrap();
        assert!(is_standard(&vec![vec![1, 2], vec![3]], &shape));
        assert!(!is_standard(&vec![vec![1, 3], vec![2]], &Partition::new(vec![2, 2]).unwrap()));
        assert!(!is_standard(&vec![vec![2, 3], vec![1]], &shape));
    }

    #[test]
    fn bijection_small() {
        for n in 1..=4 {
            assert!(maxchain_tableau_bijection_check(n, &Limits::default()).unwrap());
        }
    }
}
