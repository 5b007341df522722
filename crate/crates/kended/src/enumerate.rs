//! Corpus generation: exhaustive labeled connected graphs and seeded G(n,p)
//! samples conditioned on connectivity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{upper_triangle_pairs, Graph};

/// Default cap on exhaustive enumeration; 2^21 masks at n = 7 is the most
/// a desk run should attempt.
pub const ENUMERATION_LIMIT: usize = 7;

const SAMPLING_BUDGET: usize = 10_000;

/// Every labeled simple connected graph on `n` vertices, each exactly once,
/// in increasing edge-mask order.
pub fn enumerate_labeled_connected(n: usize) -> Result<ConnectedGraphIter> {
    enumerate_labeled_connected_with_limit(n, ENUMERATION_LIMIT)
}

/// Same as [`enumerate_labeled_connected`] with an explicit guard.
pub fn enumerate_labeled_connected_with_limit(
    n: usize,
    limit: usize,
) -> Result<ConnectedGraphIter> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "enumeration requires n >= 1".into(),
        ));
    }
    if n > limit || n > 10 {
        return Err(Error::SizeGuard {
            n,
            limit: limit.min(10),
        });
    }
    Ok(ConnectedGraphIter {
        n,
        next_mask: 0,
        end: 1u64 << (n * (n - 1) / 2),
    })
}

pub struct ConnectedGraphIter {
    n: usize,
    next_mask: u64,
    end: u64,
}

impl Iterator for ConnectedGraphIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let g = Graph::from_edge_mask(self.n, self.next_mask).expect("mask in range");
            self.next_mask += 1;
            if g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

/// Erdos-Renyi G(n,p) conditioned on connectivity by rejection; deterministic
/// for a fixed seed. Edge coins are drawn in column-major pair order.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "random graph requires n >= 1".into(),
        ));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidParameter(format!("p = {p} not in (0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLING_BUDGET {
        let mut g = Graph::empty(n)?;
        for (u, v) in upper_triangle_pairs(n) {
            if rng.random_bool(p) {
                g.add_edge(u, v)?;
            }
        }
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::SamplingExhausted(SAMPLING_BUDGET))
}
