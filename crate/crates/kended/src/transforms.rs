//! Constructive tree exchanges: edit a tree's edge set (add a host chord,
//! remove a tree edge) and classify what happened to the leaf count. These
//! are the moves behind the structural facts that the replay checker
//! verifies on maximum trees: a maximum (k+1)-ended tree found while
//! t_k <= t_{k+1} - lambda has exactly k+1 leaves (claim 1), an independent
//! leaf set (claim 2), and no tailing shorter than lambda (claim 3).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver;
use crate::tree::{edge, is_independence_tree, tailings, SubTree};

/// How an exchange changed the leaf count, at unchanged vertex set and order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExchangeClass {
    FewerLeavesSameOrder,
    SameLeavesRetailed,
    /// Possible for arbitrary exchanges, never for a correctly applied claim.
    LeafCountIncreased,
}

/// Outcome of a tree exchange. `Cycle` arises only in
/// [`leaf_edge_reduction`], when the added chord closes a Hamilton cycle of
/// the tree's vertex set; it is reported, not converted.
#[derive(Debug, Clone)]
pub enum ExchangeResult {
    Tree {
        tree: SubTree,
        class: ExchangeClass,
        /// Tailings of the result that were not tailings of the input
        /// (leaf-first sequences); empty when the result has < 3 leaves.
        new_tailings: Vec<Vec<usize>>,
    },
    Cycle {
        /// Cycle vertex sequence; consecutive entries and the wrap-around
        /// pair are host edges.
        vertices: Vec<usize>,
    },
}

impl ExchangeResult {
    pub fn tree(&self) -> Option<&SubTree> {
        match self {
            ExchangeResult::Tree { tree, .. } => Some(tree),
            ExchangeResult::Cycle { .. } => None,
        }
    }
}

fn classify(before: &SubTree, after: SubTree, precomputed_before: Option<usize>) -> ExchangeResult {
    let was = precomputed_before.unwrap_or_else(|| before.leaf_count());
    let now = after.leaf_count();
    let class = match now.cmp(&was) {
        std::cmp::Ordering::Less => ExchangeClass::FewerLeavesSameOrder,
        std::cmp::Ordering::Equal => ExchangeClass::SameLeavesRetailed,
        std::cmp::Ordering::Greater => ExchangeClass::LeafCountIncreased,
    };
    let old_tails: Vec<Vec<usize>> = tailings(before).map(|t| t.tailings).unwrap_or_default();
    let new_tailings = tailings(&after)
        .map(|t| {
            t.tailings
                .into_iter()
                .filter(|q| !old_tails.contains(q))
                .collect()
        })
        .unwrap_or_default();
    ExchangeResult::Tree {
        tree: after,
        class,
        new_tailings,
    }
}

/// Applies `tree + add - remove` and validates that the edit is again a tree
/// on the same vertex set. `|add| = |remove|` and both sizes are 1 or 2.
pub fn exchange(
    g: &Graph,
    t: &SubTree,
    add: &[(usize, usize)],
    remove: &[(usize, usize)],
) -> Result<ExchangeResult> {
    let fail = |msg: String| Err(Error::InvalidExchange(msg));
    if add.len() != remove.len() || !(1..=2).contains(&add.len()) {
        return fail(format!(
            "expected |add| = |remove| in {{1, 2}}, got {} and {}",
            add.len(),
            remove.len()
        ));
    }
    let add: Vec<(usize, usize)> = add.iter().map(|&(u, v)| edge(u, v)).collect();
    let remove: Vec<(usize, usize)> = remove.iter().map(|&(u, v)| edge(u, v)).collect();
    for &(u, v) in &add {
        if !g.has_edge(u, v) {
            return fail(format!("added edge ({u},{v}) is not a host edge"));
        }
        if t.edges().contains(&(u, v)) {
            return fail(format!("added edge ({u},{v}) is already a tree edge"));
        }
        if !t.contains(u) || !t.contains(v) {
            return fail(format!("added edge ({u},{v}) leaves the tree's vertex set"));
        }
    }
    for &(u, v) in &remove {
        if !t.edges().contains(&(u, v)) {
            return fail(format!("removed edge ({u},{v}) is not a tree edge"));
        }
    }
    let mut edges = t.edges().clone();
    for e in &remove {
        edges.remove(e);
    }
    for &e in &add {
        edges.insert(e);
    }
    let after = SubTree::new(g, t.vertices(), edges)
        .map_err(|_| Error::InvalidExchange("edited edge set is disconnected or cyclic".into()))?;
    Ok(classify(t, after, None))
}

/// Claim-2 move: add a host chord between two leaves. If the unique cycle it
/// closes covers the whole tree the result is reported as a cycle; otherwise
/// one cycle edge at a degree->=3 vertex is deleted, giving a tree of the
/// same order with strictly fewer leaves.
pub fn leaf_edge_reduction(g: &Graph, t: &SubTree, e: (usize, usize)) -> Result<ExchangeResult> {
    let fail = |msg: String| Err(Error::InvalidExchange(msg));
    let (u, v) = edge(e.0, e.1);
    let leaves = t.leaves();
    if !leaves.contains(&u) || !leaves.contains(&v) {
        return fail(format!("({u},{v}) does not join two leaves"));
    }
    if t.edges().contains(&(u, v)) {
        return fail(format!("({u},{v}) is already a tree edge"));
    }
    if !g.has_edge(u, v) {
        return fail(format!("({u},{v}) is not a host edge"));
    }

    // the unique cycle of t + e is the tree path from u to v
    let cycle = tree_path(t, u, v);
    if cycle.len() == t.order() {
        return Ok(ExchangeResult::Cycle { vertices: cycle });
    }

    let deg_te = |x: usize| t.tree_degree(x) + usize::from(x == u || x == v);
    let pos = cycle
        .iter()
        .position(|&x| deg_te(x) >= 3)
        .expect("a non-spanning cycle meets a branch vertex of t + e");
    let pick = cycle[pos];
    // the two cycle edges at pick; wrap-around edges close through e
    let m = cycle.len();
    let before = cycle[(pos + m - 1) % m];
    let after = cycle[(pos + 1) % m];
    // delete the edge toward the higher-degree endpoint, ties to lower index
    let better =
        |a: usize, b: usize| (deg_te(a), std::cmp::Reverse(a)) > (deg_te(b), std::cmp::Reverse(b));
    let other = if better(before, after) { before } else { after };

    let mut edges = t.edges().clone();
    edges.insert((u, v));
    let removed = edge(pick, other);
    edges.remove(&removed);
    let out = SubTree::new(g, t.vertices(), edges).expect("cycle edge removal keeps a tree");
    debug_assert!(out.leaf_count() < leaves.len());
    Ok(classify(t, out, Some(leaves.len())))
}

/// Removes a minimum-order tailing outright: order drops by that tailing's
/// order and the leaf count drops by exactly one.
pub fn prune_shortest_tailing(t: &SubTree) -> Result<SubTree> {
    let td = tailings(t)?;
    let shortest = (0..td.tailings.len())
        .min_by_key(|&i| td.tailings[i].len())
        .expect(">= 3 tailings");
    let gone = &td.tailings[shortest];
    let mut vertices = t.vertices();
    for &v in gone {
        vertices &= !(1 << v);
    }
    let keep: Vec<(usize, usize)> = t
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| vertices >> a & 1 == 1 && vertices >> b & 1 == 1)
        .collect();
    // host re-checks are unnecessary: the edge set shrank
    let out =
        SubTree::new_structural(vertices, keep).expect("removing a whole tailing keeps a tree");
    debug_assert_eq!(out.order(), t.order() - gone.len());
    debug_assert_eq!(out.leaf_count(), td.leaves.len() - 1);
    Ok(out)
}

/// Claim-6 move: reroute a leaf onto a vertex `mu` of a foreign tailing,
/// cutting that tailing loose from its branch vertex:
/// `t + (leaf_j, mu) - (w_i, w_i*)`. Landing on the tailing's end `w_i`
/// loses a leaf at the same order; landing mid-tailing re-tails.
pub fn tailing_swap(g: &Graph, t: &SubTree, leaf_j: usize, mu: usize) -> Result<ExchangeResult> {
    let fail = |msg: String| Err(Error::InvalidExchange(msg));
    let td = tailings(t)?;
    let Some(j) = td.index_of_leaf(leaf_j) else {
        return fail(format!("{leaf_j} is not a leaf"));
    };
    let Some(i) = td.tailing_containing(mu) else {
        return fail(format!("{mu} lies on no tailing"));
    };
    if i == j {
        return fail(format!("{mu} lies on the tailing of {leaf_j} itself"));
    }
    if mu == td.leaves[i] {
        return fail(format!(
            "{mu} is the end-vertex of its tailing; a leaf-leaf chord reduces instead"
        ));
    }
    if !g.has_edge(leaf_j, mu) {
        return fail(format!("({leaf_j},{mu}) is not a host edge"));
    }
    if t.edges().contains(&edge(leaf_j, mu)) {
        return fail(format!("({leaf_j},{mu}) is already a tree edge"));
    }
    let (w_i, w_star) = td.anchors[i];
    let mut edges = t.edges().clone();
    edges.insert(edge(leaf_j, mu));
    edges.remove(&edge(w_i, w_star));
    let out = SubTree::new(g, t.vertices(), edges)
        .expect("rerouting a tailing keeps a tree on the same vertices");
    debug_assert_eq!(out.order(), t.order());
    Ok(classify(t, out, Some(td.leaves.len())))
}

/// Replay verdict for one (graph, k, lambda) binding.
#[derive(Debug, Clone)]
pub struct ReplayReport {
    pub k: usize,
    pub lambda: usize,
    pub t_k: usize,
    pub t_k1: usize,
    /// Whether t_k <= t_{k+1} - lambda; claims are only meaningful then.
    pub precondition_held: bool,
    pub trees_checked: usize,
    pub claim1_ok: bool,
    pub claim2_ok: bool,
    pub claim3_ok: bool,
    pub failures: Vec<ClaimFailure>,
}

#[derive(Debug, Clone)]
pub struct ClaimFailure {
    pub claim: u8,
    pub tree: SubTree,
    pub detail: String,
}

/// Checks, over every maximum (k+1)-ended tree, that the tree has exactly
/// k+1 leaves, that its leaf set is independent, and (with >= 3 leaves) that
/// every tailing has order >= lambda. Skipped entirely when
/// t_k > t_{k+1} - lambda.
pub fn proof_replay(g: &Graph, k: usize, lambda: usize) -> Result<ReplayReport> {
    proof_replay_with_limit(g, k, lambda, solver::TREE_ENUM_GUARD)
}

pub fn proof_replay_with_limit(
    g: &Graph,
    k: usize,
    lambda: usize,
    limit: usize,
) -> Result<ReplayReport> {
    if lambda == 0 {
        return Err(Error::InvalidParameter("lambda must be positive".into()));
    }
    let t_k = solver::t_k_exact(g, k)?.order;
    let t_k1 = solver::t_k_exact(g, k + 1)?.order;
    if t_k + lambda > t_k1 {
        return Ok(ReplayReport {
            k,
            lambda,
            t_k,
            t_k1,
            precondition_held: false,
            trees_checked: 0,
            claim1_ok: true,
            claim2_ok: true,
            claim3_ok: true,
            failures: Vec::new(),
        });
    }
    if g.n() > limit {
        return Err(Error::SizeGuard { n: g.n(), limit });
    }
    let trees = solver::max_trees_of_order(g, k + 1, t_k1);
    let mut report = ReplayReport {
        k,
        lambda,
        t_k,
        t_k1,
        precondition_held: true,
        trees_checked: trees.len(),
        claim1_ok: true,
        claim2_ok: true,
        claim3_ok: true,
        failures: Vec::new(),
    };
    for tree in trees {
        let leaves = tree.leaf_count();
        if leaves != k + 1 {
            report.claim1_ok = false;
            report.failures.push(ClaimFailure {
                claim: 1,
                tree: tree.clone(),
                detail: format!("expected exactly {} leaves, found {leaves}", k + 1),
            });
        }
        if !is_independence_tree(g, &tree) {
            report.claim2_ok = false;
            report.failures.push(ClaimFailure {
                claim: 2,
                tree: tree.clone(),
                detail: "leaf set is not independent in the host".into(),
            });
        }
        if leaves >= 3 {
            let td = tailings(&tree).expect(">= 3 leaves");
            for q in &td.tailings {
                if q.len() < lambda {
                    report.claim3_ok = false;
                    report.failures.push(ClaimFailure {
                        claim: 3,
                        tree: tree.clone(),
                        detail: format!("tailing {q:?} has order {} < lambda = {lambda}", q.len()),
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Tree path from `a` to `b` as a vertex sequence (inclusive).
fn tree_path(t: &SubTree, a: usize, b: usize) -> Vec<usize> {
    fn dfs(t: &SubTree, cur: usize, prev: usize, b: usize, path: &mut Vec<usize>) -> bool {
        path.push(cur);
        if cur == b {
            return true;
        }
        for nxt in t.tree_neighbors(cur) {
            if nxt != prev && dfs(t, nxt, cur, b, path) {
                return true;
            }
        }
        path.pop();
        false
    }
    let mut path = Vec::new();
    let found = dfs(t, a, usize::MAX, b, &mut path);
    debug_assert!(found, "tree path must exist");
    path
}
