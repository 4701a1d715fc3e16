use std::collections::VecDeque;

use super::{BitSet, OrderRelation};

const FREE: usize = usize::MAX;

/// `dim - |maximum matching|` on the bipartite graph with an edge `i -> j`
/// for every strict pair `i < j` (Hopcroft-Karp).
pub(super) fn min_chain_cover(relation: &OrderRelation) -> usize {
    let dim = relation.dim();
    let adj: Vec<Vec<usize>> = (0..dim)
        .map(|i| relation.up_set(i).iter().filter(|&j| j != i).collect())
        .collect();
    let mut match_left = vec![FREE; dim];
    let mut match_right = vec![FREE; dim];
    let mut dist = vec![0usize; dim];
    let mut matching = 0;
    while bfs(&adj, &match_left, &match_right, &mut dist) {
        for u in 0..dim {
            if match_left[u] == FREE && dfs(u, &adj, &mut match_left, &mut match_right, &mut dist) {
                matching += 1;
            }
        }
    }
    dim - matching
}

fn bfs(adj: &[Vec<usize>], match_left: &[usize], match_right: &[usize], dist: &mut [usize]) -> bool {
    let mut queue = VecDeque::new();
    for u in 0..adj.len() {
        if match_left[u] == FREE {
            dist[u] = 0;
            queue.push_back(u);
        } else {
            dist[u] = usize::MAX;
        }
    }
    let mut found = false;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            match match_right[v] {
                FREE => found = true,
                w if dist[w] == usize::MAX => {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
                _ => {}
            }
        }
    }
    found
}

fn dfs(u: usize, adj: &[Vec<usize>], ml: &mut [usize], mr: &mut [usize], dist: &mut [usize]) -> bool {
    for k in 0..adj[u].len() {
        let v = adj[u][k];
        let w = mr[v];
        if w == FREE || (dist[w] == dist[u] + 1 && dfs(w, adj, ml, mr, dist)) {
            ml[u] = v;
            mr[v] = u;
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

/// Number of cover steps in the longest chain.
pub(super) fn longest_chain_len(relation: &OrderRelation, covers: &[BitSet]) -> usize {
    let dim = relation.dim();
    // indices are a linear extension, so walk them downwards
    let mut longest = vec![0usize; dim];
    for i in (0..dim).rev() {
        longest[i] = covers[i].iter().map(|j| longest[j] + 1).max().unwrap_or(0);
    }
    longest.into_iter().max().unwrap_or(0)
}
