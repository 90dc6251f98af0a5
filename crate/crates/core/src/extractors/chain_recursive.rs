//! Recursive chain extraction: base lengths up to 3 by direct
//! clique-extension search, longer lengths by splitting the vertex range,
//! recursing for two chains of length `ceil(2l/3)`, and joining them
//! through a clique pair between the facing A-blocks.

use std::ops::ControlFlow;

use serde::Serialize;
use thiserror::Error;

use crate::bits::Bits;
use crate::chain::{validate_chain, ChainLink, ChainParams, ChainWitness};
use crate::finders::{find_clique_pair_bipartite, for_each_clique, SearchBudget, Ticker};
use crate::graph::OrderedGraph;

/// Desk-scale thresholds: the A-block size and the node budget for the
/// base-case clique-extension searches.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ChainThresholds {
    pub a_min: usize,
    pub budget: SearchBudget,
}

impl Default for ChainThresholds {
    fn default() -> Self {
        ChainThresholds {
            a_min: 2,
            budget: SearchBudget::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum ChainExtractFailure {
    #[error("graph too small at the {stage} step ({n} vertices)")]
    TooSmall { n: usize, stage: &'static str },

    #[error("base case found no length-{l} chain in {n} vertices")]
    BaseAbsent { l: usize, n: usize },

    #[error("base-case budget ran out at length {l}")]
    BaseIndeterminate { l: usize },

    #[error("recursion on the {branch} branch failed: {inner}")]
    RecurseFailed {
        branch: &'static str,
        inner: Box<ChainExtractFailure>,
    },

    #[error("no clique pair between the facing A-blocks (certified)")]
    JoinAbsent,
}

type ChainResult = std::result::Result<ChainWitness, ChainExtractFailure>;

/// Extracts an (s,t)-chain of length at least `l`, following the recursion.
/// On success the chain validates under `ChainParams { a_min, t, s }`.
pub fn chain_extract_recursive(
    g: &OrderedGraph,
    s: usize,
    t: usize,
    l: usize,
    thresholds: &ChainThresholds,
) -> ChainResult {
    assert!(s >= 2 && t >= 1 && l >= 1, "need s >= 2, t >= 1, l >= 1");
    let chain = solve(g, s, t, l, thresholds)?;
    let params = ChainParams::new(thresholds.a_min, t, s).expect("validated");
    debug_assert!(validate_chain(g, &chain, &params).unwrap_or(false));
    debug_assert!(chain.len() >= l);
    Ok(chain)
}

fn solve(g: &OrderedGraph, s: usize, t: usize, l: usize, th: &ChainThresholds) -> ChainResult {
    if l <= 3 {
        return base_chain(g, t, l, th);
    }
    let n = g.n_vertices();
    let a_size = t * n / (s + t);
    if a_size < 1 || n - a_size < 1 {
        return Err(ChainExtractFailure::TooSmall { n, stage: "split" });
    }
    let half_a: Vec<usize> = (0..a_size).collect();
    let half_b: Vec<usize> = (a_size..n).collect();

    // Sparse branch: a front vertex whose non-neighborhood in the back part
    // is at least an (s/(s+t))^2 fraction; recurse inside it.
    for &v in &half_a {
        let x: Vec<usize> = half_b
            .iter()
            .copied()
            .filter(|&u| !g.has_edge(u, v))
            .collect();
        if x.len() * (s + t) * (s + t) >= s * s * n {
            let sub = g.induced(&x).expect("sorted");
            return match solve(&sub, s, t, l, th) {
                Ok(chain) => Ok(remap_chain(&chain, &x)),
                Err(inner) => Err(ChainExtractFailure::RecurseFailed {
                    branch: "non-neighborhood",
                    inner: Box::new(inner),
                }),
            };
        }
    }

    // Dense case: two chains of length ceil(2l/3), in the front part and in
    // the back vertices dense to the front chain's last A-block.
    let m = (2 * l).div_ceil(3);
    let sub_a = g.induced(&half_a).expect("sorted");
    let chain_a = solve(&sub_a, s, t, m, th).map_err(|inner| {
        ChainExtractFailure::RecurseFailed {
            branch: "front",
            inner: Box::new(inner),
        }
    })?;
    let chain_a = remap_chain(&chain_a, &half_a);
    let x_last = chain_a.links.last().expect("nonempty chain").a.clone();

    let z: Vec<usize> = half_b
        .iter()
        .copied()
        .filter(|&v| {
            let deg = x_last.iter().filter(|&&u| g.has_edge(u, v)).count();
            deg * (s + t) * (s + t) >= t * t * x_last.len()
        })
        .collect();
    if z.is_empty() {
        return Err(ChainExtractFailure::TooSmall { n: 0, stage: "dense set" });
    }
    let sub_z = g.induced(&z).expect("sorted");
    let chain_z = solve(&sub_z, s, t, m, th).map_err(|inner| {
        ChainExtractFailure::RecurseFailed {
            branch: "dense set",
            inner: Box::new(inner),
        }
    })?;
    let chain_z = remap_chain(&chain_z, &z);

    // Join through a clique pair between the facing A-blocks.
    let x_first = &chain_z.links[0].a;
    let Some((join_a, join_z)) = find_clique_pair_bipartite(g, &x_last, x_first, t) else {
        return Err(ChainExtractFailure::JoinAbsent);
    };

    // Links 1..m-1 of the front chain, with the pair and the back chain's
    // first B-blocks appended to link m-1, then the back chain from its
    // second link on. Length 2(m-1) >= l.
    let keep = chain_a.links.len() - 1;
    let mut links: Vec<ChainLink> = chain_a.links[..keep].to_vec();
    {
        let tail = links.last_mut().expect("m >= 3 so keep >= 2");
        tail.bs.push(join_a);
        tail.bs.push(join_z);
        tail.bs.extend(chain_z.links[0].bs.iter().cloned());
    }
    links.extend(chain_z.links[1..].iter().cloned());
    let chain = ChainWitness { links };
    debug_assert!(chain.len() >= 2 * (m - 1) && chain.len() >= l);
    Ok(chain)
}

/// Base cases: length 1 is a bare A-block, length 2 a t-clique with large
/// complete fore/aft extension sets, length 3 a 2t-clique split into two
/// t-cliques with large extension sets before, between and after.
fn base_chain(g: &OrderedGraph, t: usize, l: usize, th: &ChainThresholds) -> ChainResult {
    let n = g.n_vertices();
    let a_min = th.a_min;
    if l == 1 {
        if n < a_min {
            return Err(ChainExtractFailure::TooSmall { n, stage: "base-1" });
        }
        return Ok(ChainWitness {
            links: vec![ChainLink {
                a: (0..a_min).collect(),
                bs: vec![],
            }],
        });
    }
    enum Stop {
        Found(ChainWitness),
        Budget,
    }
    let mut ticker = Ticker::new(&th.budget);
    let all = Bits::full(n);
    let clique_size = if l == 2 { t } else { 2 * t };
    let flow = for_each_clique(g, &all, clique_size, &mut |cl: &[usize]| {
        if !ticker.tick() {
            return ControlFlow::Break(Stop::Budget);
        }
        let candidate = if l == 2 {
            extend_two(g, cl, a_min)
        } else {
            extend_three(g, cl, t, a_min)
        };
        match candidate {
            Some(chain) => ControlFlow::Break(Stop::Found(chain)),
            None => ControlFlow::Continue(()),
        }
    });
    match flow {
        ControlFlow::Break(Stop::Found(chain)) => Ok(chain),
        ControlFlow::Break(Stop::Budget) => Err(ChainExtractFailure::BaseIndeterminate { l }),
        ControlFlow::Continue(()) => Err(ChainExtractFailure::BaseAbsent { l, n }),
    }
}

/// A_1 < B < A_2 around a t-clique, with both extension sets complete to it.
fn extend_two(g: &OrderedGraph, b: &[usize], a_min: usize) -> Option<ChainWitness> {
    let lo = *b.first().unwrap();
    let hi = *b.last().unwrap();
    let before = complete_to(g, b, 0, lo);
    if before.len() < a_min {
        return None;
    }
    let after = complete_to(g, b, hi + 1, g.n_vertices());
    if after.len() < a_min {
        return None;
    }
    Some(ChainWitness {
        links: vec![
            ChainLink {
                a: before[..a_min].to_vec(),
                bs: vec![b.to_vec()],
            },
            ChainLink {
                a: after[..a_min].to_vec(),
                bs: vec![],
            },
        ],
    })
}

/// X < S_1 < Y < S_2 < Z around a 2t-clique S split into its t smallest and
/// t largest vertices; X is complete to S_1, Y to both, Z to S_2.
fn extend_three(g: &OrderedGraph, s_full: &[usize], t: usize, a_min: usize) -> Option<ChainWitness> {
    let s1 = &s_full[..t];
    let s2 = &s_full[t..];
    let before = complete_to(g, s1, 0, s1[0]);
    if before.len() < a_min {
        return None;
    }
    let mid_lo = s1[t - 1] + 1;
    let mid_hi = s2[0];
    let mut middle = complete_to(g, s1, mid_lo, mid_hi);
    middle.retain(|&v| s2.iter().all(|&u| g.has_edge(u, v)));
    if middle.len() < a_min {
        return None;
    }
    let after = complete_to(g, s2, s2[t - 1] + 1, g.n_vertices());
    if after.len() < a_min {
        return None;
    }
    Some(ChainWitness {
        links: vec![
            ChainLink {
                a: before[..a_min].to_vec(),
                bs: vec![s1.to_vec()],
            },
            ChainLink {
                a: middle[..a_min].to_vec(),
                bs: vec![s2.to_vec()],
            },
            ChainLink {
                a: after[..a_min].to_vec(),
                bs: vec![],
            },
        ],
    })
}

/// Vertices in `[lo, hi)` adjacent to every vertex of `block`.
fn complete_to(g: &OrderedGraph, block: &[usize], lo: usize, hi: usize) -> Vec<usize> {
    (lo..hi)
        .filter(|&v| block.iter().all(|&u| g.has_edge(u, v)))
        .collect()
}

fn remap_chain(chain: &ChainWitness, verts: &[usize]) -> ChainWitness {
    let map = |block: &Vec<usize>| block.iter().map(|&i| verts[i]).collect();
    ChainWitness {
        links: chain
            .links
            .iter()
            .map(|l| ChainLink {
                a: map(&l.a),
                bs: l.bs.iter().map(|b| map(b)).collect(),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn thresholds(a_min: usize) -> ChainThresholds {
        ChainThresholds {
            a_min,
            budget: SearchBudget::default(),
        }
    }

    #[test]
    fn complete_graph_all_lengths() {
        let g = OrderedGraph::complete(40);
        for l in 1..=5 {
            let chain = chain_extract_recursive(&g, 2, 2, l, &thresholds(2))
                .unwrap_or_else(|e| panic!("l = {l}: {e}"));
            assert!(chain.len() >= l);
            let p = ChainParams::new(2, 2, 2).unwrap();
            assert!(validate_chain(&g, &chain, &p).unwrap());
        }
    }

    #[test]
    fn near_complete_graph_small_lengths() {
        // Complete minus one edge still supports short chains.
        let full = OrderedGraph::complete(15);
        let edges: Vec<_> = full.edges().filter(|&e| e != (4, 9)).collect();
        let g = OrderedGraph::from_edges(15, &edges).unwrap();
        let chain = chain_extract_recursive(&g, 3, 2, 3, &thresholds(2)).unwrap();
        assert_eq!(chain.len(), 3);
        let p = ChainParams::new(2, 2, 3).unwrap();
        assert!(validate_chain(&g, &chain, &p).unwrap());
    }

    #[test]
    fn edgeless_graph_fails_with_structure() {
        let g = OrderedGraph::new(10);
        let err = chain_extract_recursive(&g, 2, 2, 2, &thresholds(2)).unwrap_err();
        assert!(matches!(err, ChainExtractFailure::BaseAbsent { .. }));
    }

    #[test]
    fn length_one_needs_only_size() {
        let g = OrderedGraph::new(4);
        let chain = chain_extract_recursive(&g, 2, 2, 1, &thresholds(3)).unwrap();
        assert_eq!(chain.links[0].a, vec![0, 1, 2]);
    }
}
