use std::collections::HashSet;

use num_bigint::BigUint;
use serde::Serialize;

use super::{BitSet, OrderRelation};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CensusMode {
    /// Every antichain, the empty one included.
    All,
    /// Antichains that admit no single-element extension.
    Maximal,
    /// Antichains of the largest size only.
    Maximum,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AntichainCensus {
    pub mode: CensusMode,
    /// `by_size[k]` counts the antichains with `k` elements.
    pub by_size: Vec<u64>,
    #[serde(serialize_with = "decimal")]
    pub total: BigUint,
    /// Size of the largest antichain counted.
    pub largest: usize,
}

fn decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Depth-first walk over antichains in index order. `blocked` holds every
/// element comparable to something already chosen (the chosen ones too).
struct Walk<'a, F> {
    relation: &'a OrderRelation,
    budget: u64,
    visited: u64,
    visit: F,
}

impl<F: FnMut(&[usize], &BitSet)> Walk<'_, F> {
    fn run(&mut self, start: usize, chosen: &mut Vec<usize>, blocked: &BitSet) -> Result<()> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        (self.visit)(chosen, blocked);
        for i in start..self.relation.dim() {
            if blocked.contains(i) {
                continue;
            }
            let mut next = blocked.union(self.relation.up_set(i));
            next.union_with(self.relation.down_set(i));
            chosen.push(i);
            self.run(i + 1, chosen, &next)?;
            chosen.pop();
        }
        Ok(())
    }
}

fn walk(relation: &OrderRelation, budget: u64, visit: impl FnMut(&[usize], &BitSet)) -> Result<()> {
    let mut w = Walk {
        relation,
        budget,
        visited: 0,
        visit,
    };
    w.run(0, &mut Vec::new(), &BitSet::new(relation.dim()))
}

pub(super) fn census(relation: &OrderRelation, mode: CensusMode, budget: u64) -> Result<AntichainCensus> {
    let dim = relation.dim();
    let mut by_size = vec![0u64; dim + 1];
    walk(relation, budget, |chosen, blocked| {
        // an antichain is maximal when every element is blocked by it
        if mode != CensusMode::Maximal || blocked.count() == dim {
            by_size[chosen.len()] += 1;
        }
    })?;
    let largest = by_size.iter().rposition(|&c| c > 0).unwrap_or(0);
    by_size.truncate(largest + 1);
    if mode == CensusMode::Maximum {
        for slot in &mut by_size[..largest] {
            *slot = 0;
        }
    }
    let total = by_size.iter().map(|&c| BigUint::from(c)).sum();
    Ok(AntichainCensus {
        mode,
        by_size,
        total,
        largest,
    })
}

pub(super) fn all_antichains(relation: &OrderRelation, budget: u64) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    walk(relation, budget, |chosen, _| out.push(chosen.to_vec()))?;
    Ok(out)
}

pub(super) fn ideal_bijection(relation: &OrderRelation, budget: u64) -> Result<bool> {
    let antichains = all_antichains(relation, budget)?;
    let ideals: HashSet<BitSet> = relation.order_ideals(budget)?.into_iter().collect();
    let mut images = HashSet::with_capacity(antichains.len());
    for a in &antichains {
        let closure = relation.closure(a);
        if !relation.is_downset(&closure) || !ideals.contains(&closure) {
            return Ok(false);
        }
        images.insert(closure);
    }
    // injective and onto
    Ok(images.len() == antichains.len() && images.len() == ideals.len())
}
