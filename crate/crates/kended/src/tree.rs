//! Subtrees of a host graph and the structural notions attached to them:
//! leaves, branch vertices, tailings, domination, leaf independence.
//!
//! A `SubTree` owns its vertex set (as a mask) and its edge set; the host is
//! passed to whichever operation needs host adjacency. Construction validates
//! the tree invariants once, and every transform builds a fresh validated
//! value, so a `SubTree` in hand is always an actual tree.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Normalizes an edge to `(min, max)` order.
pub fn edge(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A tree subgraph: nonempty vertex set, `|edges| = |vertices| - 1`, acyclic
/// and connected, every edge present in the host.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubTree {
    vertices: u64,
    edges: BTreeSet<(usize, usize)>,
}

impl std::fmt::Debug for SubTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubTree(v={:?}, e={:?})", self.vertex_list(), self.edges)
    }
}

impl SubTree {
    pub fn new(
        host: &Graph,
        vertices: u64,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if vertices & !host.vertex_mask() != 0 {
            return Err(Error::InvalidSubTree(
                "vertex set not contained in host".into(),
            ));
        }
        let t = Self::new_structural(vertices, edges)?;
        for &(u, v) in &t.edges {
            if !host.has_edge(u, v) {
                return Err(Error::InvalidSubTree(format!("edge ({u},{v}) not in host")));
            }
        }
        Ok(t)
    }

    /// Tree-shape validation only, for edge sets already known to lie in a
    /// host (e.g. shrinking a validated tree).
    pub(crate) fn new_structural(
        vertices: u64,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let invalid = |msg: String| Error::InvalidSubTree(msg);
        if vertices == 0 {
            return Err(invalid("vertex set is empty".into()));
        }
        let edges: BTreeSet<(usize, usize)> = edges.into_iter().map(|(u, v)| edge(u, v)).collect();
        for &(u, v) in &edges {
            if u == v {
                return Err(invalid(format!("loop at {u}")));
            }
            if v >= 64 || vertices >> u & 1 == 0 || vertices >> v & 1 == 0 {
                return Err(invalid(format!("edge ({u},{v}) leaves the vertex set")));
            }
        }
        let order = vertices.count_ones() as usize;
        if edges.len() != order - 1 {
            return Err(invalid(format!(
                "{} edges on {order} vertices is not a tree",
                edges.len()
            )));
        }
        let t = SubTree { vertices, edges };
        if !t.spans_connected() {
            return Err(invalid("edge set does not connect the vertex set".into()));
        }
        Ok(t)
    }

    /// The one-vertex tree.
    pub fn single(v: usize) -> Self {
        SubTree {
            vertices: 1 << v,
            edges: BTreeSet::new(),
        }
    }

    fn spans_connected(&self) -> bool {
        // |E| = |V| - 1 already checked, so connected implies acyclic.
        let start = self.vertices.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        loop {
            let mut grew = false;
            for &(u, v) in &self.edges {
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
        seen == self.vertices
    }

    #[inline]
    pub fn vertices(&self) -> u64 {
        self.vertices
    }

    pub fn vertex_list(&self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.order());
        let mut m = self.vertices;
        while m != 0 {
            v.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        v
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.vertices.count_ones() as usize
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.vertices >> v & 1 == 1
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn tree_degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn tree_neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Vertices of tree-degree 1, ascending. The one-vertex tree counts its
    /// only vertex as a leaf, so every tree has at least one.
    pub fn leaves(&self) -> Vec<usize> {
        if self.order() == 1 {
            return self.vertex_list();
        }
        let deg = self.degree_table();
        self.vertex_list()
            .into_iter()
            .filter(|&v| deg[v] == 1)
            .collect()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves().len()
    }

    /// Vertices of tree-degree at least 3, ascending.
    pub fn branch_vertices(&self) -> Vec<usize> {
        let deg = self.degree_table();
        self.vertex_list()
            .into_iter()
            .filter(|&v| deg[v] >= 3)
            .collect()
    }

    pub fn is_spanning(&self, host: &Graph) -> bool {
        self.vertices == host.vertex_mask() && host.n() > 0
    }

    fn degree_table(&self) -> [u8; 64] {
        let mut deg = [0u8; 64];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }
}

/// The tailing structure of a tree with at least 3 leaves: one path per leaf
/// running from the leaf up to (but excluding) the nearest branch vertex.
///
/// Entry `i` describes leaf `leaves[i]`: `tailings[i]` is the leaf-first
/// vertex sequence, and `anchors[i] = (w, w_star)` gives the last tailing
/// vertex and the adjacent branch vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailingDecomposition {
    pub leaves: Vec<usize>,
    pub tailings: Vec<Vec<usize>>,
    pub anchors: Vec<(usize, usize)>,
}

impl TailingDecomposition {
    /// Index into `leaves` for a given leaf vertex.
    pub fn index_of_leaf(&self, leaf: usize) -> Option<usize> {
        self.leaves.iter().position(|&l| l == leaf)
    }

    /// The tailing (if any) whose vertex sequence contains `v`.
    pub fn tailing_containing(&self, v: usize) -> Option<usize> {
        self.tailings.iter().position(|t| t.contains(&v))
    }
}

/// Computes the tailing decomposition. Errors when the tree has fewer than
/// 3 leaves (equivalently, no branch vertex).
pub fn tailings(t: &SubTree) -> Result<TailingDecomposition> {
    let leaves = t.leaves();
    if leaves.len() < 3 {
        return Err(Error::NoBranchVertex);
    }
    let branch: BTreeSet<usize> = t.branch_vertices().into_iter().collect();
    debug_assert!(!branch.is_empty());
    let mut tails = Vec::with_capacity(leaves.len());
    let mut anchors = Vec::with_capacity(leaves.len());
    for &leaf in &leaves {
        let mut seq = vec![leaf];
        let mut prev = usize::MAX;
        let mut cur = leaf;
        loop {
            let next = *t
                .tree_neighbors(cur)
                .iter()
                .find(|&&x| x != prev)
                .expect("interior of a >=3-leaf tree continues to a branch vertex");
            if branch.contains(&next) {
                anchors.push((cur, next));
                break;
            }
            seq.push(next);
            prev = cur;
            cur = next;
        }
        tails.push(seq);
    }
    Ok(TailingDecomposition {
        leaves,
        tailings: tails,
        anchors,
    })
}

/// True iff the vertices of `g` outside `t` induce no edge.
pub fn is_dominating(g: &Graph, t: &SubTree) -> bool {
    let outside = g.vertex_mask() & !t.vertices();
    g.is_independent_set(outside)
}

/// True iff the leaves of `t` form an independent set in the host.
pub fn is_independence_tree(g: &Graph, t: &SubTree) -> bool {
    let mut mask = 0u64;
    for leaf in t.leaves() {
        mask |= 1 << leaf;
    }
    g.is_independent_set(mask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, Family};

    fn path_tree(g: &Graph, n: usize) -> SubTree {
        SubTree::new(g, (1 << n) - 1, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    /// Spider: center 0, `legs` paths hanging off it, `len` vertices each.
    fn spider(legs: usize, len: usize) -> (Graph, SubTree) {
        let n = 1 + legs * len;
        let mut g = Graph::empty(n).unwrap();
        let mut edges = Vec::new();
        for l in 0..legs {
            let base = 1 + l * len;
            g.add_edge(0, base).unwrap();
            edges.push((0, base));
            for i in 1..len {
                g.add_edge(base + i - 1, base + i).unwrap();
                edges.push((base + i - 1, base + i));
            }
        }
        let t = SubTree::new(&g, (1 << n) - 1, edges).unwrap();
        (g, t)
    }

    #[test]
    fn invariants_enforced() {
        let g = build_family(&Family::Path(4)).unwrap();
        // cycle-ish edge set
        assert!(SubTree::new(&g, 0b1111, [(0, 1), (1, 2), (2, 3), (0, 3)]).is_err());
        // host edge missing
        assert!(SubTree::new(&g, 0b0111, [(0, 2), (1, 2)]).is_err());
        // disconnected
        assert!(SubTree::new(&g, 0b1111, [(0, 1), (2, 3), (1, 3)]).is_err());
        assert!(SubTree::new(&g, 0, []).is_err());
    }

    #[test]
    fn leaves_of_paths_stars_singletons() {
        let p5 = build_family(&Family::Path(5)).unwrap();
        assert_eq!(path_tree(&p5, 5).leaves(), vec![0, 4]);

        let star = build_family(&Family::Star(4)).unwrap();
        let t = SubTree::new(&star, 0b1111, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(t.leaves(), vec![1, 2, 3]);
        assert_eq!(t.branch_vertices(), vec![0]);

        assert_eq!(SubTree::single(2).leaves(), vec![2]);
    }

    #[test]
    fn branch_vertices_of_path_and_spider() {
        let p5 = build_family(&Family::Path(5)).unwrap();
        assert!(path_tree(&p5, 5).branch_vertices().is_empty());
        let (_, t) = spider(3, 2);
        assert_eq!(t.branch_vertices(), vec![0]);
    }

    #[test]
    fn tailings_of_spiders() {
        let (_, t) = spider(3, 2);
        let td = tailings(&t).unwrap();
        assert_eq!(td.leaves.len(), 3);
        assert!(td.tailings.iter().all(|q| q.len() == 2));
        // every anchor is the center
        assert!(td.anchors.iter().all(|&(_, s)| s == 0));
        // leaf-first orientation, last vertex adjacent to the branch vertex
        for (i, q) in td.tailings.iter().enumerate() {
            assert_eq!(q[0], td.leaves[i]);
            assert_eq!(*q.last().unwrap(), td.anchors[i].0);
            assert!(t.tree_neighbors(td.anchors[i].0).contains(&td.anchors[i].1));
        }

        let (_, star) = spider(3, 1);
        let td = tailings(&star).unwrap();
        assert!(td.tailings.iter().all(|q| q.len() == 1));
    }

    #[test]
    fn tailings_require_branch_vertex() {
        let p5 = build_family(&Family::Path(5)).unwrap();
        assert_eq!(
            tailings(&path_tree(&p5, 5)).unwrap_err(),
            Error::NoBranchVertex
        );
    }

    #[test]
    fn tailings_partition_non_branch_vertices() {
        let (_, t) = spider(4, 3);
        let td = tailings(&t).unwrap();
        let mut seen = BTreeSet::new();
        for q in &td.tailings {
            for &v in q {
                assert!(seen.insert(v), "tailings overlap at {v}");
            }
        }
        let branch: BTreeSet<usize> = t.branch_vertices().into_iter().collect();
        assert!(seen.is_disjoint(&branch));
        assert_eq!(seen.len() + branch.len(), t.order());
    }

    #[test]
    fn dominating_examples() {
        let p5 = build_family(&Family::Path(5)).unwrap();
        let mid = SubTree::new(&p5, 0b01110, [(1, 2), (2, 3)]).unwrap();
        assert!(is_dominating(&p5, &mid));
        let front = SubTree::new(&p5, 0b00011, [(0, 1)]).unwrap();
        assert!(!is_dominating(&p5, &front));
        assert!(is_dominating(&p5, &path_tree(&p5, 5)));
    }

    #[test]
    fn independence_tree_examples() {
        // spanning path of C_5: its ends are adjacent in the host
        let c5 = build_family(&Family::Cycle(5)).unwrap();
        let ham = SubTree::new(&c5, 0b11111, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!is_independence_tree(&c5, &ham));

        let star = build_family(&Family::Star(4)).unwrap();
        let t = SubTree::new(&star, 0b1111, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(is_independence_tree(&star, &t));

        let k3 = build_family(&Family::Complete(3)).unwrap();
        let p = SubTree::new(&k3, 0b111, [(0, 1), (1, 2)]).unwrap();
        assert!(!is_independence_tree(&k3, &p));
    }

    #[test]
    fn degree_sum_identity() {
        let (_, t) = spider(3, 3);
        let sum: usize = t.vertex_list().iter().map(|&v| t.tree_degree(v)).sum();
        assert_eq!(sum, 2 * (t.order() - 1));
    }
}
