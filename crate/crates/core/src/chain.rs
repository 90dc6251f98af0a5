//! Chains: alternating sequences of large blocks and small cliques.
//!
//! An (s,t)-chain of length `k` is a sequence
//! `A_1 < B_{1,1} < ... < B_{1,p_1} < A_2 < ... < A_k < B_{k,1} < ... < B_{k,p_k}`
//! of pairwise disjoint vertex sets where every `B` is a `t`-clique, each `A_i`
//! is complete to `B_{i,1}`, consecutive `B`-blocks within a link are complete
//! to each other, the last `B`-block of a link is complete to the next `A`,
//! every `A_i` has at least `a_min` vertices, and `p_i >= 1` for `i < k` while
//! `p_k` may be 0. No edges are required inside the `A`-blocks.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::OrderedGraph;

/// Size thresholds for chain validity.
///
/// The reference threshold for `a_min` is `binom(s+t, s)^10`, which is
/// astronomically large; `a_min` is therefore an explicit parameter, and
/// [`paper_a_min`] computes the reference value as a big integer.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ChainParams {
    /// Minimum size of each `A`-block.
    pub a_min: usize,
    /// Exact size of each `B`-block (each must be a clique).
    pub t: usize,
    /// Independence parameter; enters thresholds, not the validity bullets.
    pub s: usize,
}

impl ChainParams {
    pub fn new(a_min: usize, t: usize, s: usize) -> Result<Self> {
        if a_min < 1 || t < 1 || s < 2 {
            return Err(Error::Precondition(format!(
                "chain params need a_min >= 1, t >= 1, s >= 2; got a_min={a_min}, t={t}, s={s}"
            )));
        }
        Ok(ChainParams { a_min, t, s })
    }
}

/// Reference A-block threshold `binom(s+t, s)^10`.
pub fn paper_a_min(s: usize, t: usize) -> BigUint {
    crate::bounds::binomial((s + t) as u64, s as u64).pow(10)
}

/// One link of a chain: the `A`-block followed by its `B`-blocks.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ChainLink {
    pub a: Vec<usize>,
    pub bs: Vec<Vec<usize>>,
}

/// A candidate chain. Block contents are kept as sorted vertex lists so the
/// serialized form is deterministic.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize, Default)]
pub struct ChainWitness {
    pub links: Vec<ChainLink>,
}

impl ChainWitness {
    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    /// All blocks in chain order.
    pub fn blocks(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.links
            .iter()
            .flat_map(|l| std::iter::once(&l.a).chain(l.bs.iter()))
    }

    /// Every vertex of the chain in chain order.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks().flatten().copied()
    }
}

/// Checks every bullet of the chain definition against `g` with thresholds
/// from `p`. Malformed input (out-of-range vertices) is an error; any honest
/// violation returns `Ok(false)`.
pub fn validate_chain(g: &OrderedGraph, c: &ChainWitness, p: &ChainParams) -> Result<bool> {
    let n = g.n_vertices();
    for &v in c.vertices().collect::<Vec<_>>().iter() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if c.links.is_empty() {
        return Ok(false);
    }
    let k = c.links.len();

    // p_i >= 1 for i < k; blocks internally sorted; global block order.
    for (i, link) in c.links.iter().enumerate() {
        if i + 1 < k && link.bs.is_empty() {
            return Ok(false);
        }
        if link.a.len() < p.a_min {
            return Ok(false);
        }
        for b in &link.bs {
            if b.len() != p.t {
                return Ok(false);
            }
        }
    }
    let blocks: Vec<&Vec<usize>> = c.blocks().collect();
    for b in &blocks {
        if b.is_empty() || b.windows(2).any(|w| w[0] >= w[1]) {
            return Ok(false);
        }
    }
    for w in blocks.windows(2) {
        if w[0].last().unwrap() >= w[1].first().unwrap() {
            return Ok(false);
        }
    }

    // Edge bullets.
    for (i, link) in c.links.iter().enumerate() {
        for b in &link.bs {
            if !g.is_clique(b) {
                return Ok(false);
            }
        }
        if let Some(first_b) = link.bs.first() {
            if !g.is_complete_between(&link.a, first_b) {
                return Ok(false);
            }
        }
        for pair in link.bs.windows(2) {
            if !g.is_complete_between(&pair[0], &pair[1]) {
                return Ok(false);
            }
        }
        if i + 1 < k {
            let last_b = link.bs.last().expect("p_i >= 1 checked above");
            if !g.is_complete_between(last_b, &c.links[i + 1].a) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simple_chain() -> ChainWitness {
        ChainWitness {
            links: vec![
                ChainLink {
                    a: vec![0, 1],
                    bs: vec![vec![2, 3]],
                },
                ChainLink {
                    a: vec![4, 5],
                    bs: vec![],
                },
            ],
        }
    }

    #[test]
    fn complete_graph_accepts_correctly_sized_blocks() {
        let g = OrderedGraph::complete(6);
        let p = ChainParams::new(2, 2, 2).unwrap();
        assert!(validate_chain(&g, &simple_chain(), &p).unwrap());
    }

    #[test]
    fn missing_a_to_b_edge_rejected() {
        let mut g = OrderedGraph::complete(6);
        let g = {
            // Rebuild without the 1-2 edge: A_1 = {0,1} is then not complete
            // to B_{1,1} = {2,3}.
            let edges: Vec<_> = g.edges().filter(|&e| e != (1, 2)).collect();
            g = OrderedGraph::from_edges(6, &edges).unwrap();
            g
        };
        let p = ChainParams::new(2, 2, 2).unwrap();
        assert!(!validate_chain(&g, &simple_chain(), &p).unwrap());
    }

    #[test]
    fn single_link_chain_needs_no_edges() {
        // k = 1 with p_1 = 0 imposes no adjacency at all.
        let g = OrderedGraph::new(5);
        let p = ChainParams::new(3, 2, 2).unwrap();
        let c = ChainWitness {
            links: vec![ChainLink {
                a: vec![0, 2, 4],
                bs: vec![],
            }],
        };
        assert!(validate_chain(&g, &c, &p).unwrap());
    }

    #[test]
    fn middle_link_needs_a_b_block() {
        let g = OrderedGraph::complete(6);
        let p = ChainParams::new(2, 2, 2).unwrap();
        let c = ChainWitness {
            links: vec![
                ChainLink {
                    a: vec![0, 1],
                    bs: vec![],
                },
                ChainLink {
                    a: vec![4, 5],
                    bs: vec![],
                },
            ],
        };
        assert!(!validate_chain(&g, &c, &p).unwrap());
    }

    #[test]
    fn interleaved_blocks_rejected() {
        let g = OrderedGraph::complete(6);
        let p = ChainParams::new(2, 2, 2).unwrap();
        let mut c = simple_chain();
        c.links[1].a = vec![3, 5]; // overlaps B_{1,1}
        assert!(!validate_chain(&g, &c, &p).unwrap());
    }

    #[test]
    fn paper_threshold_value() {
        // binom(4,2)^10 = 6^10.
        assert_eq!(paper_a_min(2, 2), BigUint::from(6u32).pow(10));
    }
}
