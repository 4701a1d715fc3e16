//! The poset `D_n` of Dyck paths ordered by "lies weakly below", together with
//! order ideals, antichain censuses, chain covers and the point poset `P_n`.

mod antichain;
mod bitset;
mod cover;
mod points;

pub use antichain::{AntichainCensus, CensusMode};
pub use bitset::BitSet;
pub use points::{ideal_to_path, path_to_ideal, MobiusEntry, Point, PointPoset};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::config::Limits;
use crate::path::{enumerate_paths, DyckPath};
use crate::poly::UniPoly;
use crate::{Error, Result};

/// A finite partial order on `0..dim` stored as up-sets and down-sets.
///
/// Indices must form a linear extension: `i <= j` in the order implies
/// `i <= j` as integers.
#[derive(Debug, Clone)]
pub struct OrderRelation {
    up: Vec<BitSet>,
    down: Vec<BitSet>,
}

impl OrderRelation {
    /// Builds the relation from a `leq` predicate; panics if the index order
    /// is not a linear extension.
    #[allow(clippy::needless_range_loop)]
    pub fn from_leq(dim: usize, leq: impl Fn(usize, usize) -> bool) -> Self {
        let mut up = vec![BitSet::new(dim); dim];
        let mut down = vec![BitSet::new(dim); dim];
        for i in 0..dim {
            for j in 0..dim {
                if leq(i, j) {
                    assert!(i <= j, "element order is not a linear extension");
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        OrderRelation { up, down }
    }

    pub fn dim(&self) -> usize {
        self.up.len()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// Elements `>= i`, including `i`.
    pub fn up_set(&self, i: usize) -> &BitSet {
        &self.up[i]
    }

    /// Elements `<= i`, including `i`.
    pub fn down_set(&self, i: usize) -> &BitSet {
        &self.down[i]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// Number of pairs `i < j`.
    pub fn strict_pair_count(&self) -> usize {
        self.up.iter().map(|s| s.count() - 1).sum()
    }

    /// `covers[i]` holds every `j` covering `i`.
    pub fn upper_covers(&self) -> Vec<BitSet> {
        let dim = self.dim();
        (0..dim)
            .map(|i| {
                let mut covers = BitSet::new(dim);
                for j in self.up[i].iter().filter(|&j| j != i) {
                    // j covers i iff the interval [i, j] is just {i, j}
                    if self.up[i].intersection_count(&self.down[j]) == 2 {
                        covers.insert(j);
                    }
                }
                covers
            })
            .collect()
    }

    pub fn is_downset(&self, set: &BitSet) -> bool {
        set.iter().all(|i| self.down[i].is_subset(set))
    }

    pub fn is_antichain(&self, elements: &[usize]) -> bool {
        elements.iter().enumerate().all(|(k, &a)| {
            elements[k + 1..].iter().all(|&b| a != b && !self.comparable(a, b))
        })
    }

    /// Every downward-closed subset, built by deciding elements in index
    /// order. Fails once more than `budget` ideals are produced.
    pub fn order_ideals(&self, budget: u64) -> Result<Vec<BitSet>> {
        let dim = self.dim();
        let mut out = Vec::new();
        let mut current = BitSet::new(dim);
        self.ideals_from(0, &mut current, &mut out, budget)?;
        Ok(out)
    }

    fn ideals_from(&self, i: usize, current: &mut BitSet, out: &mut Vec<BitSet>, budget: u64) -> Result<()> {
        if i == self.dim() {
            if out.len() as u64 >= budget {
                return Err(Error::BudgetExceeded { budget });
            }
            out.push(current.clone());
            return Ok(());
        }
        self.ideals_from(i + 1, current, out, budget)?;
        let mut below = self.down[i].clone();
        below.remove(i);
        if below.is_subset(current) {
            current.insert(i);
            self.ideals_from(i + 1, current, out, budget)?;
            current.remove(i);
        }
        Ok(())
    }

    /// Downward closure of a set of elements.
    pub fn closure(&self, elements: &[usize]) -> BitSet {
        let mut set = BitSet::new(self.dim());
        for &e in elements {
            set.union_with(&self.down[e]);
        }
        set
    }
}

#[derive(Debug, Clone)]
pub struct Poset {
    n: usize,
    elements: Vec<DyckPath>,
    relation: OrderRelation,
    covers: Vec<BitSet>,
    rank: Vec<usize>,
}

impl Poset {
    pub fn build(n: usize, limits: &Limits) -> Result<Poset> {
        let elements = enumerate_paths(n, limits)?;
        let heights: Vec<Vec<usize>> = elements.iter().map(DyckPath::heights).collect();
        let relation = OrderRelation::from_leq(elements.len(), |i, j| {
            heights[i].iter().zip(&heights[j]).all(|(a, b)| a <= b)
        });
        let covers = relation.upper_covers();
        let rank = elements.iter().map(DyckPath::area).collect();
        Ok(Poset {
            n,
            elements,
            relation,
            covers,
            rank,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[DyckPath] {
        &self.elements
    }

    pub fn relation(&self) -> &OrderRelation {
        &self.relation
    }

    pub fn index_of(&self, path: &DyckPath) -> Option<usize> {
        self.elements.iter().position(|p| p == path)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.relation.leq(i, j)
    }

    pub fn covers(&self, i: usize, j: usize) -> bool {
        self.covers[i].contains(j)
    }

    pub fn upper_covers(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers[i].iter()
    }

    /// Hasse diagram edges `(lower, upper)` in lexicographic order.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| self.covers[i].iter().map(move |j| (i, j)))
            .collect()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    /// Rank of the maximum, `n(n-1)/2`.
    pub fn height(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    pub fn minimum(&self) -> usize {
        0
    }

    pub fn maximum(&self) -> usize {
        self.len() - 1
    }

    pub fn strict_pair_count(&self) -> usize {
        self.relation.strict_pair_count()
    }

    pub fn order_ideals(&self, limits: &Limits) -> Result<Vec<Vec<usize>>> {
        Ok(self
            .relation
            .order_ideals(limits.enumeration_budget)?
            .iter()
            .map(|s| s.iter().collect())
            .collect())
    }

    pub fn antichain_census(&self, mode: CensusMode, limits: &Limits) -> Result<AntichainCensus> {
        antichain::census(&self.relation, mode, limits.enumeration_budget)
    }

    pub fn antichains(&self, limits: &Limits) -> Result<Vec<Vec<usize>>> {
        antichain::all_antichains(&self.relation, limits.enumeration_budget)
    }

    /// Maps every antichain to its downward closure and checks the result is
    /// a bijection onto the independently enumerated order ideals.
    pub fn antichain_ideal_bijection_check(&self, limits: &Limits) -> Result<bool> {
        antichain::ideal_bijection(&self.relation, limits.enumeration_budget)
    }

    pub fn width(&self, limits: &Limits) -> Result<usize> {
        Ok(self.antichain_census(CensusMode::Maximum, limits)?.largest)
    }

    /// Minimum number of disjoint chains covering the poset, from a maximum
    /// matching on the strict order.
    pub fn min_chain_cover(&self) -> usize {
        cover::min_chain_cover(&self.relation)
    }

    /// Minimum number of antichains covering the poset: one more than the
    /// longest chain's length.
    pub fn min_antichain_cover(&self) -> usize {
        cover::longest_chain_len(&self.relation, &self.covers) + 1
    }

    /// The elements of each rank, lowest rank first.
    pub fn rank_levels(&self) -> Vec<Vec<usize>> {
        let mut levels = vec![Vec::new(); self.height() + 1];
        for i in 0..self.len() {
            levels[self.rank[i]].push(i);
        }
        levels
    }

    /// True iff no element outside `set` is incomparable to all of it.
    pub fn is_maximal_antichain(&self, set: &[usize]) -> bool {
        self.relation.is_antichain(set)
            && (0..self.len()).all(|x| set.contains(&x) || set.iter().any(|&a| self.relation.comparable(a, x)))
    }

    /// Every maximal chain, each as a list of elements from minimum to
    /// maximum through cover steps.
    pub fn maximal_chains(&self, limits: &Limits) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut chain = vec![self.minimum()];
        self.extend_chain(&mut chain, &mut out, limits.enumeration_budget)?;
        Ok(out)
    }

    fn extend_chain(&self, chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, budget: u64) -> Result<()> {
        let last = *chain.last().expect("chain is never empty");
        if self.covers[last].count() == 0 {
            if out.len() as u64 >= budget {
                return Err(Error::BudgetExceeded { budget });
            }
            out.push(chain.clone());
            return Ok(());
        }
        for next in self.covers[last].iter() {
            chain.push(next);
            self.extend_chain(chain, out, budget)?;
            chain.pop();
        }
        Ok(())
    }

    /// Möbius value from the ideal difference in `P_n`.
    pub fn mobius_direct(&self, x: usize, y: usize) -> MobiusEntry {
        points::mobius_direct(self, x, y)
    }
}

/// Number of elements of each rank of `D_n`, highest rank first, from the
/// product recursion on inversion generating functions.
pub fn rank_sizes(n: usize) -> Vec<BigUint> {
    let poly = inv_recurrence(n);
    let top = (n * n.saturating_sub(1) / 2) as u32;
    (0..=top)
        .map(|e| {
            poly.coeff(e)
                .to_biguint()
                .expect("rank counts are non-negative")
        })
        .collect()
}

/// `C_0 = 1`, `C_{m+1}(q) = sum_k q^{(k+1)(m-k)} C_k(q) C_{m-k}(q)`.
pub fn inv_recurrence(n: usize) -> UniPoly {
    let mut table = vec![UniPoly::one()];
    for m in 0..n {
        let mut next = UniPoly::zero();
        for k in 0..=m {
            let term = (&table[k] * &table[m - k]).shift(((k + 1) * (m - k)) as u32);
            next = &next + &term;
        }
        table.push(next);
    }
    table.swap_remove(n)
}

/// Sum of the rank sizes; equals the Catalan number.
pub fn rank_total(n: usize) -> BigUint {
    rank_sizes(n).into_iter().fold(BigUint::zero(), |a, b| a + b)
}
