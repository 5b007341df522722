//! Undirected simple graphs on at most 64 vertices, stored as one adjacency
//! bitset per vertex. Everything downstream (subset enumeration, spanning
//! tree search, independent set scans) works on `u64` vertex masks.

use crate::error::{Error, Result};

/// Hard cap so vertex subsets always fit in a machine word.
pub const MAX_VERTICES: usize = 64;

/// An undirected simple graph with vertices `0..n`.
///
/// No loops, no multi-edges; adjacency is kept symmetric by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::SizeGuard {
                n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an explicit edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Decodes the `bit`-indexed upper triangle: bit `i` of `mask` is the
    /// i-th pair in column-major order (0,1),(0,2),(1,2),(0,3),...
    /// Requires n(n-1)/2 <= 64, i.e. n <= 11.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self> {
        if n * n.saturating_sub(1) / 2 > 64 {
            return Err(Error::SizeGuard { n, limit: 11 });
        }
        let mut g = Graph::empty(n)?;
        for (idx, (u, v)) in upper_triangle_pairs(n).enumerate() {
            if mask >> idx & 1 == 1 {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidParameter(format!(
                "edge ({u},{v}) out of range for n={}",
                self.n
            )));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbor bitset of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Mask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(u, v)` with `u < v`, in column-major upper-triangle order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        upper_triangle_pairs(self.n).filter(|&(u, v)| self.has_edge(u, v))
    }

    /// Minimum degree; `None` for the empty graph.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// True when every pair of vertices is joined by a path. Graphs with at
    /// most one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_mask())
    }

    /// Connectivity of the subgraph induced by `mask`. The empty mask counts
    /// as connected only vacuously; callers pass nonempty masks.
    pub fn is_connected_within(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v] & mask;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & mask == mask
    }

    /// True when `mask` induces no edge.
    pub fn is_independent_set(&self, mask: u64) -> bool {
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.adj[v] & mask != 0 {
                return false;
            }
        }
        true
    }

    /// Size of a maximum independent set (0 for the empty graph).
    pub fn independence_number(&self) -> usize {
        fn rec(g: &Graph, remaining: u64, chosen: usize, best: &mut usize) {
            if chosen + remaining.count_ones() as usize <= *best {
                return;
            }
            if remaining == 0 {
                *best = (*best).max(chosen);
                return;
            }
            let v = remaining.trailing_zeros() as usize;
            // include v
            rec(g, remaining & !(1 << v) & !g.adj[v], chosen + 1, best);
            // exclude v
            rec(g, remaining & !(1 << v), chosen, best);
        }
        let mut best = 0;
        rec(self, self.vertex_mask(), 0, &mut best);
        best
    }

    /// Minimum degree sum over independent sets of exactly `m` vertices,
    /// or [`ExtendedCount::Infinity`] when the independence number is below `m`.
    pub fn sigma(&self, m: usize) -> Result<ExtendedCount> {
        if m == 0 {
            return Err(Error::InvalidParameter("sigma requires m >= 1".into()));
        }
        let mut best: Option<u64> = None;
        // Enumerate independent m-subsets by ascending vertex index, pruning
        // on the partial sum (degrees are nonnegative).
        fn rec(g: &Graph, allowed: u64, left: usize, sum: u64, best: &mut Option<u64>) {
            if left == 0 {
                *best = Some(best.map_or(sum, |b| b.min(sum)));
                return;
            }
            if (allowed.count_ones() as usize) < left {
                return;
            }
            let mut cand = allowed;
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                let s = sum + g.degree(v) as u64;
                if best.is_some_and(|b| s >= b) {
                    continue;
                }
                // only vertices above v, and none adjacent to v
                rec(g, cand & !g.adj[v], left - 1, s, best);
            }
        }
        rec(self, self.vertex_mask(), m, 0, &mut best);
        Ok(best.map_or(ExtendedCount::Infinity, ExtendedCount::Finite))
    }
}

/// A count that is either a finite nonnegative integer or +infinity.
/// `Infinity` compares greater than every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedCount {
    Finite(u64),
    Infinity,
}

impl ExtendedCount {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedCount::Finite(_))
    }

    /// `self >= bound`, where infinity dominates every bound.
    pub fn at_least(self, bound: i64) -> bool {
        match self {
            ExtendedCount::Infinity => true,
            ExtendedCount::Finite(v) => i64::try_from(v).map_or(true, |v| v >= bound),
        }
    }
}

impl std::fmt::Display for ExtendedCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtendedCount::Finite(v) => write!(f, "{v}"),
            ExtendedCount::Infinity => write!(f, "infinity"),
        }
    }
}

impl serde::Serialize for ExtendedCount {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtendedCount::Finite(v) => s.serialize_u64(*v),
            ExtendedCount::Infinity => s.serialize_str("infinity"),
        }
    }
}

/// Upper-triangle vertex pairs in column-major order:
/// (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...: the graph6 bit order.
pub fn upper_triangle_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}
