//! Exact computation of t_k: the order of a largest k-ended tree, where the
//! k = 1 case is the circumference under the degenerate convention that a
//! vertex is a 1-cycle and an edge a 2-cycle.
//!
//! Search strategy: iterate candidate vertex-set sizes from n downward; for
//! each connected subset (in lexicographic vertex-tuple order) test whether
//! the induced subgraph has a spanning tree with at most k leaves. The tree
//! test grows rooted trees vertex-by-vertex in BFS order, choosing each
//! expanded vertex's child set, which visits every spanning tree of the
//! subset exactly once and supports sharp leaf-count pruning.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::transforms::{self, ExchangeResult};
use crate::tree::{edge, tailings, SubTree};

/// Default order guard for exhaustive witness enumeration.
pub const TREE_ENUM_GUARD: usize = 10;

/// A computed t_k value with a witness.
#[derive(Debug, Clone)]
pub struct TkResult {
    pub k: usize,
    pub order: usize,
    pub witness: Witness,
}

/// A largest k-ended tree, or the cycle vertex sequence when k = 1.
#[derive(Debug, Clone)]
pub enum Witness {
    Tree(SubTree),
    Cycle(Vec<usize>),
}

impl Witness {
    pub fn order(&self) -> usize {
        match self {
            Witness::Tree(t) => t.order(),
            Witness::Cycle(c) => c.len(),
        }
    }
}

fn check_solver_input(g: &Graph, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    if g.n() == 0 {
        return Err(Error::InvalidParameter("graph must be nonempty".into()));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(())
}

/// Order of a largest k-ended tree in a connected graph, with witness.
/// Ties among witnesses go to the lexicographically first vertex set.
pub fn t_k_exact(g: &Graph, k: usize) -> Result<TkResult> {
    check_solver_input(g, k)?;
    if k == 1 {
        let (order, cycle) = longest_cycle(g);
        return Ok(TkResult {
            k,
            order,
            witness: Witness::Cycle(cycle),
        });
    }
    for size in (1..=g.n()).rev() {
        for mask in lex_subsets(g.n(), size) {
            if !g.is_connected_within(mask) {
                continue;
            }
            if let Some(tree) = bounded_leaf_tree(g, mask, k) {
                return Ok(TkResult {
                    k,
                    order: size,
                    witness: Witness::Tree(tree),
                });
            }
        }
    }
    unreachable!("a single vertex is a k-ended tree for every k >= 1")
}

/// t_1..t_k_max in one call.
pub fn t_profile(g: &Graph, k_max: usize) -> Result<Vec<TkResult>> {
    (1..=k_max).map(|k| t_k_exact(g, k)).collect()
}

/// Minimum leaf count over all spanning trees, with witness. The value is 2
/// exactly when the graph has a Hamilton path.
pub fn min_leaf_count_spanning(g: &Graph) -> Result<(usize, SubTree)> {
    if g.n() < 2 {
        return Err(Error::InvalidParameter(
            "spanning leaf minimization requires n >= 2".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let full = g.vertex_mask();
    // a tree on n vertices has at most max(2, n - 1) leaves
    for bound in 2..=(g.n() - 1).max(2) {
        if let Some(t) = bounded_leaf_tree(g, full, bound) {
            debug_assert_eq!(t.leaf_count(), bound);
            return Ok((bound, t));
        }
    }
    unreachable!("every connected graph on n >= 2 vertices has a spanning tree")
}

/// Every k-ended subtree of maximum order (k >= 2), each exactly once.
/// Guarded by [`TREE_ENUM_GUARD`]; see [`enumerate_max_trees_with_limit`].
pub fn enumerate_max_trees(g: &Graph, k: usize) -> Result<Vec<SubTree>> {
    enumerate_max_trees_with_limit(g, k, TREE_ENUM_GUARD)
}

/// Witness enumeration with an explicit order guard. k = 1 is rejected:
/// maximum "1-ended trees" are cycles under the degenerate convention and
/// are not subtrees; use [`max_cycle_vertex_sets`] for their vertex sets.
pub fn enumerate_max_trees_with_limit(g: &Graph, k: usize, limit: usize) -> Result<Vec<SubTree>> {
    check_solver_input(g, k)?;
    if k < 2 {
        return Err(Error::InvalidParameter(
            "tree witness enumeration requires k >= 2".into(),
        ));
    }
    if g.n() > limit {
        return Err(Error::SizeGuard { n: g.n(), limit });
    }
    let best = t_k_exact(g, k)?.order;
    Ok(max_trees_of_order(g, k, best))
}

/// All k-ended trees (k >= 2) of exactly the given order. Internal fast path
/// for callers that already know t_k.
pub(crate) fn max_trees_of_order(g: &Graph, k: usize, order: usize) -> Vec<SubTree> {
    let mut out = Vec::new();
    for mask in lex_subsets(g.n(), order) {
        if !g.is_connected_within(mask) {
            continue;
        }
        visit_bounded_leaf_trees(g, mask, k, &mut |t| {
            out.push(t);
            false
        });
    }
    out
}

/// Vertex sets of all maximum cycles under the degenerate convention,
/// together with t_1: the k = 1 counterpart of [`enumerate_max_trees`],
/// sufficient for domination checks (which only see vertex sets).
pub fn max_cycle_vertex_sets(g: &Graph) -> (usize, Vec<u64>) {
    let (t1, _) = longest_cycle(g);
    let mut out = Vec::new();
    for mask in lex_subsets(g.n(), t1) {
        match t1 {
            1 => out.push(mask),
            2 => {
                let v = mask_vertices(mask);
                if g.has_edge(v[0], v[1]) {
                    out.push(mask);
                }
            }
            _ => {
                if g.is_connected_within(mask) && hamilton_cycle(g, mask).is_some() {
                    out.push(mask);
                }
            }
        }
    }
    (t1, out)
}

/// Greedy BFS tree improved by the proof-style moves: leaf-to-leaf chord
/// reduction, tailing swaps onto a foreign tailing end, and pruning the
/// shortest tailing when the leaf count is still too high. Three restarts
/// per seed; deterministic for a fixed seed. The result is always a valid
/// k-ended tree, so its order never exceeds t_k.
pub fn heuristic_k_ended(g: &Graph, k: usize, seed: u64) -> Result<SubTree> {
    check_solver_input(g, k)?;
    if k == 1 {
        // trees with one leaf are single vertices
        return Ok(SubTree::single(0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<SubTree> = None;
    for _ in 0..3 {
        let start = rng.random_range(0..g.n());
        let tree = improve_tree(g, k, bfs_spanning_tree(g, start));
        if best.as_ref().is_none_or(|b| tree.order() > b.order()) {
            best = Some(tree);
        }
    }
    Ok(best.expect("at least one restart"))
}

fn bfs_spanning_tree(g: &Graph, start: usize) -> SubTree {
    let mut in_tree = 1u64 << start;
    let mut queue = vec![start];
    let mut edges = Vec::new();
    let mut qpos = 0;
    while qpos < queue.len() {
        let u = queue[qpos];
        qpos += 1;
        let mut fresh = g.neighbors(u) & !in_tree;
        while fresh != 0 {
            let v = fresh.trailing_zeros() as usize;
            fresh &= fresh - 1;
            in_tree |= 1 << v;
            edges.push(edge(u, v));
            queue.push(v);
        }
    }
    SubTree::new(g, in_tree, edges).expect("BFS tree is a tree")
}

fn improve_tree(g: &Graph, k: usize, mut tree: SubTree) -> SubTree {
    loop {
        if tree.leaf_count() <= k {
            return tree;
        }
        if let Some(next) = leaf_chord_move(g, &tree) {
            tree = next;
            continue;
        }
        if let Some(next) = tailing_end_swap_move(g, &tree) {
            tree = next;
            continue;
        }
        tree = transforms::prune_shortest_tailing(&tree)
            .expect("leaf count > k >= 2 implies a branch vertex");
    }
}

/// First applicable leaf-to-leaf chord reduction, if any.
fn leaf_chord_move(g: &Graph, tree: &SubTree) -> Option<SubTree> {
    let leaves = tree.leaves();
    for (i, &a) in leaves.iter().enumerate() {
        for &b in &leaves[i + 1..] {
            if !g.has_edge(a, b) || tree.edges().contains(&edge(a, b)) {
                continue;
            }
            match transforms::leaf_edge_reduction(g, tree, (a, b)) {
                Ok(ExchangeResult::Tree { tree: t, .. }) => return Some(t),
                Ok(ExchangeResult::Cycle { vertices }) => {
                    // Hamilton cycle on the tree's vertex set: drop the
                    // closing edge and keep the 2-ended path (k >= 2 here).
                    let es: Vec<(usize, usize)> =
                        vertices.windows(2).map(|w| edge(w[0], w[1])).collect();
                    let path = SubTree::new(g, tree.vertices(), es)
                        .expect("cycle minus an edge is a path");
                    return Some(path);
                }
                Err(_) => {}
            }
        }
    }
    None
}

/// First tailing swap that lands on a foreign tailing's end vertex, which
/// strictly reduces the leaf count at the same order.
fn tailing_end_swap_move(g: &Graph, tree: &SubTree) -> Option<SubTree> {
    let td = tailings(tree).ok()?;
    for (j, &leaf_j) in td.leaves.iter().enumerate() {
        for (i, &(w_i, _)) in td.anchors.iter().enumerate() {
            if i == j || td.tailings[i].len() < 2 {
                continue;
            }
            if !g.has_edge(leaf_j, w_i) || tree.edges().contains(&edge(leaf_j, w_i)) {
                continue;
            }
            if let Ok(ExchangeResult::Tree { tree: t, .. }) =
                transforms::tailing_swap(g, tree, leaf_j, w_i)
            {
                return Some(t);
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Spanning tree search engine
// ---------------------------------------------------------------------------

/// First spanning tree of G[mask] with at most `max_leaves` leaves, or None.
/// Deterministic search order.
pub(crate) fn bounded_leaf_tree(g: &Graph, mask: u64, max_leaves: usize) -> Option<SubTree> {
    let mut found = None;
    visit_bounded_leaf_trees(g, mask, max_leaves, &mut |t| {
        found = Some(t);
        true
    });
    found
}

/// Visits every spanning tree of G[mask] with at most `max_leaves` leaves,
/// each exactly once. The visitor returns true to stop the search.
///
/// Trees are rooted at the lowest vertex of the mask and generated by
/// choosing, for each tree vertex in BFS insertion order, the set of its
/// children among untouched vertices; this is a bijection onto spanning
/// trees. Pruning: committed/forced leaf counts and the branch-vertex
/// surplus identity #leaves = 2 + sum(max(0, deg - 2)).
pub(crate) fn visit_bounded_leaf_trees(
    g: &Graph,
    mask: u64,
    max_leaves: usize,
    visit: &mut impl FnMut(SubTree) -> bool,
) -> bool {
    debug_assert!(mask != 0 && g.is_connected_within(mask));
    let order = mask.count_ones() as usize;
    if order == 1 {
        // a single vertex has one leaf by convention
        return max_leaves >= 1 && visit(SubTree::single(mask.trailing_zeros() as usize));
    }
    let root = mask.trailing_zeros() as usize;
    let mut st = TreeSearch {
        g,
        mask,
        bound: max_leaves,
        in_tree: 1 << root,
        open: 1 << root,
        queue: vec![root],
        qpos: 0,
        deg: [0; 64],
        edges: Vec::with_capacity(order - 1),
        committed_leaves: 0,
        surplus: 0,
    };
    st.run(visit)
}

struct TreeSearch<'a> {
    g: &'a Graph,
    mask: u64,
    bound: usize,
    in_tree: u64,
    /// tree vertices not yet expanded
    open: u64,
    queue: Vec<usize>,
    qpos: usize,
    deg: [u8; 64],
    edges: Vec<(usize, usize)>,
    committed_leaves: usize,
    surplus: usize,
}

impl TreeSearch<'_> {
    fn run(&mut self, visit: &mut impl FnMut(SubTree) -> bool) -> bool {
        if self.in_tree == self.mask {
            // open vertices take no children; degrees are final
            let leaves = self.queue.iter().filter(|&&v| self.deg[v] == 1).count();
            if leaves <= self.bound {
                let tree = SubTree::new(self.g, self.mask, self.edges.iter().copied())
                    .expect("search state is a spanning tree");
                return visit(tree);
            }
            return false;
        }
        if self.qpos == self.queue.len() {
            return false; // tree closed off before covering the mask
        }

        let u = self.queue[self.qpos];
        let avail = self.mask & !self.in_tree;
        let cand = self.g.neighbors(u) & avail;

        // submasks of cand in ascending order, including the empty set
        let mut children: u64 = 0;
        loop {
            if self.try_children(u, children, visit) {
                return true;
            }
            if children == cand {
                break;
            }
            children = children.wrapping_sub(cand) & cand;
        }
        false
    }

    fn try_children(
        &mut self,
        u: usize,
        children: u64,
        visit: &mut impl FnMut(SubTree) -> bool,
    ) -> bool {
        let child_count = children.count_ones() as usize;
        let final_deg = self.deg[u] as usize + child_count;
        let avail_after = self.mask & !self.in_tree & !children;
        let open_after = (self.open & !(1 << u)) | children;

        if final_deg == 0 {
            // root kept childless while other vertices remain: dead branch
            return false;
        }

        // lower bounds on the final leaf count
        let committed = self.committed_leaves + usize::from(final_deg == 1);
        let surplus = self.surplus + final_deg.saturating_sub(2);
        if 2 + surplus > self.bound {
            return false;
        }
        let mut forced = committed;
        let mut open_scan = open_after;
        while open_scan != 0 {
            let v = open_scan.trailing_zeros() as usize;
            open_scan &= open_scan - 1;
            let d = if v == u {
                final_deg
            } else if children >> v & 1 == 1 {
                1 // not yet written to deg[]
            } else {
                self.deg[v] as usize
            };
            if d == 1 && self.g.neighbors(v) & avail_after == 0 {
                forced += 1;
            }
        }
        let mut avail_scan = avail_after;
        while avail_scan != 0 {
            let v = avail_scan.trailing_zeros() as usize;
            avail_scan &= avail_scan - 1;
            let nbrs = self.g.neighbors(v) & self.mask;
            if nbrs.count_ones() == 1 {
                forced += 1; // induced degree 1: a leaf in every spanning tree
            }
            // reachability: v must eventually attach to an open vertex
            if nbrs & (open_after | (avail_after & !(1 << v))) == 0 {
                return false;
            }
        }
        if forced > self.bound {
            return false;
        }

        // apply
        self.deg[u] += child_count as u8;
        self.in_tree |= children;
        self.open = open_after;
        self.qpos += 1;
        let qlen = self.queue.len();
        let mut c = children;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            self.deg[v] = 1;
            self.queue.push(v);
            self.edges.push(edge(u, v));
        }
        self.committed_leaves = committed;
        self.surplus = surplus;

        let stop = self.run(visit);

        // undo
        self.surplus -= final_deg.saturating_sub(2);
        self.committed_leaves -= usize::from(final_deg == 1);
        while self.queue.len() > qlen {
            let v = self.queue.pop().unwrap();
            self.deg[v] = 0;
            self.edges.pop();
        }
        self.qpos -= 1;
        self.open = (self.open & !children) | (1 << u);
        self.in_tree &= !children;
        self.deg[u] -= child_count as u8;

        stop
    }
}

// ---------------------------------------------------------------------------
// Cycle search
// ---------------------------------------------------------------------------

/// Circumference under the degenerate convention, with a witness sequence.
fn longest_cycle(g: &Graph) -> (usize, Vec<usize>) {
    for size in (3..=g.n()).rev() {
        for mask in lex_subsets(g.n(), size) {
            if !g.is_connected_within(mask) {
                continue;
            }
            if let Some(cycle) = hamilton_cycle(g, mask) {
                return (size, cycle);
            }
        }
    }
    for (u, v) in crate::graph::upper_triangle_pairs(g.n()) {
        if g.has_edge(u, v) {
            return (2, vec![u, v]);
        }
    }
    (1, vec![0])
}

/// A Hamilton cycle of G[mask] as a vertex sequence, if one exists.
/// |mask| >= 3 expected.
pub(crate) fn hamilton_cycle(g: &Graph, mask: u64) -> Option<Vec<usize>> {
    let size = mask.count_ones() as usize;
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if (g.neighbors(v) & mask).count_ones() < 2 {
            return None;
        }
    }
    let start = mask.trailing_zeros() as usize;
    let mut path = vec![start];
    let mut visited = 1u64 << start;
    fn extend(
        g: &Graph,
        mask: u64,
        size: usize,
        start: usize,
        path: &mut Vec<usize>,
        visited: &mut u64,
    ) -> bool {
        if path.len() == size {
            return g.has_edge(*path.last().unwrap(), start);
        }
        let mut cand = g.neighbors(*path.last().unwrap()) & mask & !*visited;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            path.push(v);
            *visited |= 1 << v;
            if extend(g, mask, size, start, path, visited) {
                return true;
            }
            path.pop();
            *visited &= !(1 << v);
        }
        false
    }
    if extend(g, mask, size, start, &mut path, &mut visited) {
        Some(path)
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// Subset iteration
// ---------------------------------------------------------------------------

fn mask_vertices(mask: u64) -> Vec<usize> {
    let mut v = Vec::new();
    let mut m = mask;
    while m != 0 {
        v.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    v
}

/// Masks of all `size`-subsets of `0..n` in lexicographic order of the
/// ascending vertex tuples: {0,1,2}, {0,1,3}, ..., {n-3,n-2,n-1}.
pub(crate) fn lex_subsets(n: usize, size: usize) -> LexSubsets {
    LexSubsets {
        n,
        size,
        idx: (0..size).collect(),
        done: size > n,
        fresh: true,
    }
}

pub(crate) struct LexSubsets {
    n: usize,
    size: usize,
    idx: Vec<usize>,
    done: bool,
    fresh: bool,
}

impl Iterator for LexSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
        } else {
            // advance the rightmost index that can still move
            let r = self.size;
            let mut i = r;
            loop {
                if i == 0 {
                    self.done = true;
                    return None;
                }
                i -= 1;
                if self.idx[i] != i + self.n - r {
                    break;
                }
                if i == 0 {
                    self.done = true;
                    return None;
                }
            }
            self.idx[i] += 1;
            for j in i + 1..r {
                self.idx[j] = self.idx[j - 1] + 1;
            }
        }
        Some(self.idx.iter().fold(0u64, |m, &v| m | 1 << v))
    }
}
