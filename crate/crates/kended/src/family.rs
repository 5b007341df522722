//! Constructors for named graph families. `Join` adds every edge between the
//! two operands; `Union` places them side by side on disjoint vertex ranges.
//! The sharpness families are g1 = (k+1)K_lambda + K_1,
//! g2 = (k+1)K_{lambda-1} + K_1, g3 = (k+2)K_{k-1} + K_2, and krr = K_{r,r}.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Path(usize),
    Cycle(usize),
    /// Star on `q` vertices total: a center joined to `q - 1` leaves.
    Star(usize),
    Join(Box<Family>, Box<Family>),
    Union(Box<Family>, Box<Family>),
    G1 {
        k: usize,
        lambda: usize,
    },
    G2 {
        k: usize,
        lambda: usize,
    },
    G3 {
        k: usize,
    },
    Krr(usize),
}

pub fn build_family(spec: &Family) -> Result<Graph> {
    match *spec {
        Family::Complete(q) => {
            require(q >= 1, "complete(q) requires q >= 1")?;
            let mut g = Graph::empty(q)?;
            for j in 1..q {
                for i in 0..j {
                    g.add_edge(i, j)?;
                }
            }
            Ok(g)
        }
        Family::CompleteBipartite(r, s) => {
            require(
                r >= 1 && s >= 1,
                "complete-bipartite(r,s) requires r,s >= 1",
            )?;
            let mut g = Graph::empty(r + s)?;
            for i in 0..r {
                for j in 0..s {
                    g.add_edge(i, r + j)?;
                }
            }
            Ok(g)
        }
        Family::Path(q) => {
            require(q >= 1, "path(q) requires q >= 1")?;
            let mut g = Graph::empty(q)?;
            for v in 1..q {
                g.add_edge(v - 1, v)?;
            }
            Ok(g)
        }
        Family::Cycle(q) => {
            require(q >= 3, "cycle(q) requires q >= 3")?;
            let mut g = Graph::empty(q)?;
            for v in 1..q {
                g.add_edge(v - 1, v)?;
            }
            g.add_edge(q - 1, 0)?;
            Ok(g)
        }
        Family::Star(q) => {
            require(q >= 1, "star(q) requires q >= 1")?;
            let mut g = Graph::empty(q)?;
            for v in 1..q {
                g.add_edge(0, v)?;
            }
            Ok(g)
        }
        Family::Join(ref a, ref b) => {
            let ga = build_family(a)?;
            let gb = build_family(b)?;
            let mut g = disjoint_union(&ga, &gb)?;
            for u in 0..ga.n() {
                for v in 0..gb.n() {
                    g.add_edge(u, ga.n() + v)?;
                }
            }
            Ok(g)
        }
        Family::Union(ref a, ref b) => {
            let ga = build_family(a)?;
            let gb = build_family(b)?;
            disjoint_union(&ga, &gb)
        }
        Family::G1 { k, lambda } => {
            require(
                k >= 1 && lambda >= 1,
                "g1(k,lambda) requires k >= 1 and lambda >= 1",
            )?;
            cliques_join_core(k + 1, lambda, 1)
        }
        Family::G2 { k, lambda } => {
            require(
                k >= 1 && lambda >= 2,
                "g2(k,lambda) requires k >= 1 and lambda >= 2 (lambda = 1 yields empty cliques)",
            )?;
            cliques_join_core(k + 1, lambda - 1, 1)
        }
        Family::G3 { k } => {
            require(k >= 2, "g3(k) requires k >= 2 (so K_{k-1} is nonempty)")?;
            cliques_join_core(k + 2, k - 1, 2)
        }
        Family::Krr(r) => build_family(&Family::CompleteBipartite(r, r)),
    }
}

/// `copies` disjoint cliques of size `clique`, joined to a complete core of
/// size `core`. Clique vertices come first, core vertices last.
fn cliques_join_core(copies: usize, clique: usize, core: usize) -> Result<Graph> {
    let n = copies * clique + core;
    let mut g = Graph::empty(n)?;
    for c in 0..copies {
        let base = c * clique;
        for j in 1..clique {
            for i in 0..j {
                g.add_edge(base + i, base + j)?;
            }
        }
    }
    let core_base = copies * clique;
    for j in 1..core {
        for i in 0..j {
            g.add_edge(core_base + i, core_base + j)?;
        }
    }
    for v in 0..core_base {
        for c in 0..core {
            g.add_edge(v, core_base + c)?;
        }
    }
    Ok(g)
}

fn disjoint_union(a: &Graph, b: &Graph) -> Result<Graph> {
    let mut g = Graph::empty(a.n() + b.n())?;
    for (u, v) in a.edges() {
        g.add_edge(u, v)?;
    }
    for (u, v) in b.edges() {
        g.add_edge(a.n() + u, a.n() + v)?;
    }
    Ok(g)
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}
