//! Brute-force reference solvers, deliberately simple: enumerate vertex
//! subsets by descending size and filter raw edge subsets for spanning trees
//! or spanning cycles. No pruning, no search heuristics. These exist to
//! cross-check the optimized solver and to derive golden values; keep them
//! independent of `solver`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A labeled tree as (vertex mask, edge set).
pub type LabeledTree = (u64, BTreeSet<(usize, usize)>);

/// Order of a largest k-ended tree (circumference convention at k = 1),
/// computed by exhaustive filtering.
pub fn t_k_naive(g: &Graph, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    if g.n() == 0 {
        return Err(Error::InvalidParameter("graph must be nonempty".into()));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    for size in (1..=g.n()).rev() {
        let mut masks: Vec<u64> = (0..=g.vertex_mask())
            .filter(|m| m.count_ones() as usize == size)
            .collect();
        masks.sort_unstable();
        for mask in masks {
            let ok = if k == 1 {
                has_spanning_cycle_naive(g, mask)
            } else {
                !spanning_trees_within(g, mask, Some(k), true).is_empty()
            };
            if ok {
                return Ok(size);
            }
        }
    }
    unreachable!("single vertices are always 1-ended trees and 1-cycles")
}

/// All maximum k-ended trees (k >= 2) as (vertex mask, edge set) pairs,
/// by exhaustive edge-subset filtering.
pub fn max_k_ended_trees_naive(g: &Graph, k: usize) -> Result<Vec<LabeledTree>> {
    if k < 2 {
        return Err(Error::InvalidParameter(
            "tree enumeration requires k >= 2".into(),
        ));
    }
    let best = t_k_naive(g, k)?;
    let mut out = Vec::new();
    for mask in 0..=g.vertex_mask() {
        if mask.count_ones() as usize != best {
            continue;
        }
        for edges in spanning_trees_within(g, mask, Some(k), false) {
            out.push((mask, edges));
        }
    }
    Ok(out)
}

/// Degenerate spanning-cycle test: one vertex is a 1-cycle, an edge a
/// 2-cycle, and larger sets need a genuine Hamilton cycle, found here by
/// filtering all edge subsets of size |S|.
pub fn has_spanning_cycle_naive(g: &Graph, mask: u64) -> bool {
    let verts = mask_vertices(mask);
    match verts.len() {
        0 => false,
        1 => true,
        2 => g.has_edge(verts[0], verts[1]),
        s => {
            let pool = edges_within(g, mask);
            combinations(pool.len(), s, |pick| {
                let chosen: Vec<(usize, usize)> = pick.iter().map(|&i| pool[i]).collect();
                is_cycle_cover(&verts, &chosen)
            })
        }
    }
}

/// Spanning trees of G[mask] with at most `max_leaves` leaves (when given).
/// With `first_only`, stops at the first hit.
fn spanning_trees_within(
    g: &Graph,
    mask: u64,
    max_leaves: Option<usize>,
    first_only: bool,
) -> Vec<BTreeSet<(usize, usize)>> {
    let verts = mask_vertices(mask);
    let s = verts.len();
    let mut found = Vec::new();
    if s == 0 {
        return found;
    }
    if s == 1 {
        // single vertex: the empty edge set, one leaf by convention
        if max_leaves.is_none_or(|k| k >= 1) {
            found.push(BTreeSet::new());
        }
        return found;
    }
    let pool = edges_within(g, mask);
    if pool.len() < s - 1 {
        return found;
    }
    combinations(pool.len(), s - 1, |pick| {
        let chosen: Vec<(usize, usize)> = pick.iter().map(|&i| pool[i]).collect();
        if is_tree_cover(&verts, &chosen)
            && max_leaves.is_none_or(|k| leaf_count(&verts, &chosen) <= k)
        {
            found.push(chosen.into_iter().collect());
            return first_only;
        }
        false
    });
    found
}

fn mask_vertices(mask: u64) -> Vec<usize> {
    let mut v = Vec::new();
    let mut m = mask;
    while m != 0 {
        v.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    v
}

fn edges_within(g: &Graph, mask: u64) -> Vec<(usize, usize)> {
    g.edges()
        .filter(|&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
        .collect()
}

fn leaf_count(verts: &[usize], edges: &[(usize, usize)]) -> usize {
    verts
        .iter()
        .filter(|&&v| edges.iter().filter(|&&(a, b)| a == v || b == v).count() == 1)
        .count()
}

fn is_tree_cover(verts: &[usize], edges: &[(usize, usize)]) -> bool {
    edges.len() == verts.len() - 1 && covers_connected(verts, edges)
}

fn is_cycle_cover(verts: &[usize], edges: &[(usize, usize)]) -> bool {
    edges.len() == verts.len()
        && verts
            .iter()
            .all(|&v| edges.iter().filter(|&&(a, b)| a == v || b == v).count() == 2)
        && covers_connected(verts, edges)
}

fn covers_connected(verts: &[usize], edges: &[(usize, usize)]) -> bool {
    let mut seen = 1u64 << verts[0];
    loop {
        let mut grew = false;
        for &(u, v) in edges {
            let su = seen >> u & 1 == 1;
            let sv = seen >> v & 1 == 1;
            if su != sv {
                seen |= 1 << u | 1 << v;
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    verts.iter().all(|&v| seen >> v & 1 == 1)
}

/// Calls `visit` on every size-`r` index combination of `0..n` in
/// lexicographic order; stops early when `visit` returns true.
fn combinations(n: usize, r: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    if r > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        if visit(&idx) {
            return true;
        }
        // advance the rightmost index that can still move
        let mut i = r;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] != i + n - r {
                break;
            }
            if i == 0 {
                return false;
            }
        }
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
