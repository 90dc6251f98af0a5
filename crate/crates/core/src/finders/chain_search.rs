//! Backtracking search for chains and for clique pairs across a bipartition.

use std::ops::ControlFlow;

use crate::bits::Bits;
use crate::chain::{ChainLink, ChainParams, ChainWitness};
use crate::graph::OrderedGraph;

use super::{for_each_clique, SearchBudget, SearchOutcome, SearchRun, Ticker};

/// How `A`-blocks are enumerated.
///
/// `IntervalA` restricts `A`-blocks to intervals of the vertex order, which
/// matches how the chains are consumed downstream and keeps the search
/// small; it is a completeness restriction, so `Absent` then means "no chain
/// with interval A-blocks". `ExhaustiveA` enumerates arbitrary `A`-blocks
/// and is the definitional searcher used for oracle comparisons.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChainSearchMode {
    IntervalA,
    ExhaustiveA,
}

/// Searches for an (s,t)-chain of length `k` under `p`.
///
/// `A`-blocks are taken of size exactly `p.a_min` (supersets only add
/// constraints, so this loses no existence) and the final link is closed
/// with `p_k = 0`. Blocks are enumerated lexicographically, so the first
/// chain found is deterministic.
pub fn find_chain(
    g: &OrderedGraph,
    p: &ChainParams,
    k: usize,
    mode: ChainSearchMode,
    budget: &SearchBudget,
) -> SearchRun<ChainWitness> {
    assert!(k >= 1, "chain length must be at least 1");
    let mut ticker = Ticker::new(budget);
    let mut links: Vec<ChainLink> = Vec::with_capacity(k);
    let outcome = match place_a(g, p, k, mode, 0, &mut links, &mut ticker) {
        Flow::Found => SearchOutcome::Found(ChainWitness { links }),
        Flow::Exhausted => SearchOutcome::Absent,
        Flow::OutOfBudget => SearchOutcome::Indeterminate,
    };
    SearchRun {
        outcome,
        stats: ticker.stats(),
    }
}

enum Flow {
    Found,
    Exhausted,
    OutOfBudget,
}

/// Vertices at or above `floor` that are complete to `block`.
fn complete_above(g: &OrderedGraph, floor: usize, block: &[usize]) -> Bits {
    let n = g.n_vertices();
    let mut cands = Bits::new(n);
    for v in floor..n {
        cands.insert(v);
    }
    for &u in block {
        cands.and_with(g.neighbors(u));
    }
    cands
}

fn place_a(
    g: &OrderedGraph,
    p: &ChainParams,
    k: usize,
    mode: ChainSearchMode,
    floor: usize,
    links: &mut Vec<ChainLink>,
    ticker: &mut Ticker,
) -> Flow {
    let n = g.n_vertices();
    let i = links.len();
    // An A-block vertex must be complete to the previous B-block.
    let cands = match links.last() {
        None => {
            let mut all = Bits::new(n);
            for v in floor..n {
                all.insert(v);
            }
            all
        }
        Some(prev) => complete_above(g, floor, prev.bs.last().expect("p_i >= 1 before a new link")),
    };
    match mode {
        ChainSearchMode::IntervalA => {
            if n < p.a_min {
                return Flow::Exhausted;
            }
            for x in floor..=(n - p.a_min) {
                if !ticker.tick() {
                    return Flow::OutOfBudget;
                }
                let a: Vec<usize> = (x..x + p.a_min).collect();
                if !a.iter().all(|&v| cands.contains(v)) {
                    ticker.prunes += 1;
                    continue;
                }
                match close_or_extend(g, p, k, mode, a, i, links, ticker) {
                    Flow::Exhausted => {}
                    other => return other,
                }
            }
            Flow::Exhausted
        }
        ChainSearchMode::ExhaustiveA => {
            let pool = cands.to_vec();
            subsets_dfs(&pool, p.a_min, &mut Vec::new(), &mut |a| {
                if !ticker.tick() {
                    return ControlFlow::Break(Flow::OutOfBudget);
                }
                match close_or_extend(g, p, k, mode, a.to_vec(), i, links, ticker) {
                    Flow::Exhausted => ControlFlow::Continue(()),
                    other => ControlFlow::Break(other),
                }
            })
            .map_or(Flow::Exhausted, |flow| flow)
        }
    }
}

fn close_or_extend(
    g: &OrderedGraph,
    p: &ChainParams,
    k: usize,
    mode: ChainSearchMode,
    a: Vec<usize>,
    i: usize,
    links: &mut Vec<ChainLink>,
    ticker: &mut Ticker,
) -> Flow {
    let top = *a.last().expect("a_min >= 1");
    links.push(ChainLink { a, bs: Vec::new() });
    let flow = if i + 1 == k {
        Flow::Found
    } else {
        place_b(g, p, k, mode, top + 1, links, ticker)
    };
    if !matches!(flow, Flow::Found) {
        links.pop();
    }
    flow
}

fn place_b(
    g: &OrderedGraph,
    p: &ChainParams,
    k: usize,
    mode: ChainSearchMode,
    floor: usize,
    links: &mut Vec<ChainLink>,
    ticker: &mut Ticker,
) -> Flow {
    let link = links.last().expect("open link");
    let prev_block: &[usize] = match link.bs.last() {
        Some(b) => b,
        None => &link.a,
    };
    let cands = complete_above(g, floor, prev_block);
    let mut result = Flow::Exhausted;
    let flow = for_each_clique(g, &cands, p.t, &mut |b: &[usize]| {
        if !ticker.tick() {
            return ControlFlow::Break(Flow::OutOfBudget);
        }
        let top = *b.last().unwrap();
        links.last_mut().unwrap().bs.push(b.to_vec());
        // Close this link by starting the next A-block, then try extending
        // with a further B-block.
        match place_a(g, p, k, mode, top + 1, links, ticker) {
            Flow::Found => return ControlFlow::Break(Flow::Found),
            Flow::OutOfBudget => return ControlFlow::Break(Flow::OutOfBudget),
            Flow::Exhausted => {}
        }
        match place_b(g, p, k, mode, top + 1, links, ticker) {
            Flow::Found => return ControlFlow::Break(Flow::Found),
            Flow::OutOfBudget => return ControlFlow::Break(Flow::OutOfBudget),
            Flow::Exhausted => {}
        }
        links.last_mut().unwrap().bs.pop();
        ControlFlow::Continue(())
    });
    if let ControlFlow::Break(broken) = flow {
        result = broken;
    }
    result
}

/// All `size`-subsets of `pool` in lexicographic order.
fn subsets_dfs<B>(
    pool: &[usize],
    size: usize,
    current: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    if current.len() == size {
        return match f(current) {
            ControlFlow::Break(b) => Some(b),
            ControlFlow::Continue(()) => None,
        };
    }
    let need = size - current.len();
    if pool.len() < need {
        return None;
    }
    for (idx, &v) in pool.iter().enumerate() {
        if pool.len() - idx < need {
            break;
        }
        current.push(v);
        if let Some(b) = subsets_dfs(&pool[idx + 1..], size, current, f) {
            return Some(b);
        }
        current.pop();
    }
    None
}

/// Exhaustively searches for `t`-subsets `T_1` of `v1` and `T_2` of `v2`
/// whose union is a clique. This is the deterministic oracle behind the
/// randomized sampler; it has no budget.
pub fn find_clique_pair_bipartite(
    g: &OrderedGraph,
    v1: &[usize],
    v2: &[usize],
    t: usize,
) -> Option<(Vec<usize>, Vec<usize>)> {
    assert!(t >= 1, "clique pair needs t >= 1");
    debug_assert!(
        v1.iter().all(|u| !v2.contains(u)),
        "v1 and v2 must be disjoint"
    );
    let n = g.n_vertices();
    let b1 = Bits::from_slice(n, v1);
    let b2 = Bits::from_slice(n, v2);
    let mut found: Option<(Vec<usize>, Vec<usize>)> = None;
    let _ = for_each_clique(g, &b1, t, &mut |t1: &[usize]| {
        let mut common = b2.clone();
        for &u in t1 {
            common.and_with(g.neighbors(u));
        }
        let mut inner: Option<Vec<usize>> = None;
        let _ = for_each_clique(g, &common, t, &mut |t2: &[usize]| {
            inner = Some(t2.to_vec());
            ControlFlow::Break(())
        });
        if let Some(t2) = inner {
            found = Some((t1.to_vec(), t2));
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::validate_chain;

    #[test]
    fn complete_graph_has_minimal_chain() {
        let p = ChainParams::new(2, 2, 2).unwrap();
        let k = 3;
        let g = OrderedGraph::complete(k * (p.a_min + p.t));
        let run = find_chain(&g, &p, k, ChainSearchMode::IntervalA, &SearchBudget::default());
        let chain = run.outcome.expect_found("chain in complete graph");
        assert_eq!(chain.len(), k);
        assert!(chain.links[..k - 1].iter().all(|l| l.bs.len() == 1));
        assert!(chain.links[k - 1].bs.is_empty());
        assert!(validate_chain(&g, &chain, &p).unwrap());
    }

    #[test]
    fn edgeless_graph_has_length_one_chain() {
        let p = ChainParams::new(3, 2, 2).unwrap();
        let g = OrderedGraph::new(5);
        let run = find_chain(&g, &p, 1, ChainSearchMode::IntervalA, &SearchBudget::default());
        let chain = run.outcome.expect_found("length-1 chain");
        assert_eq!(chain.len(), 1);
        assert_eq!(chain.links[0].a, vec![0, 1, 2]);
        assert!(validate_chain(&g, &chain, &p).unwrap());
    }

    #[test]
    fn edgeless_graph_has_no_length_two_chain() {
        let p = ChainParams::new(1, 1, 2).unwrap();
        let g = OrderedGraph::new(6);
        let run = find_chain(&g, &p, 2, ChainSearchMode::ExhaustiveA, &SearchBudget::default());
        assert!(run.outcome.is_absent());
    }

    #[test]
    fn exhaustive_mode_finds_non_interval_a_blocks() {
        // Vertices 0 and 2 are complete to the B-block {3,4} but vertex 1 is
        // isolated, so no interval A_1 of size 2 exists; {0,2} works.
        let mut g = OrderedGraph::new(7);
        for u in [0, 2] {
            g.add_edge(u, 3).unwrap();
            g.add_edge(u, 4).unwrap();
        }
        g.add_edge(3, 4).unwrap();
        for v in [5, 6] {
            g.add_edge(3, v).unwrap();
            g.add_edge(4, v).unwrap();
        }
        let p = ChainParams::new(2, 2, 2).unwrap();
        let budget = SearchBudget::default();
        let interval = find_chain(&g, &p, 2, ChainSearchMode::IntervalA, &budget);
        assert!(interval.outcome.is_absent());
        let exhaustive = find_chain(&g, &p, 2, ChainSearchMode::ExhaustiveA, &budget);
        let chain = exhaustive.outcome.expect_found("non-interval chain");
        assert_eq!(chain.links[0].a, vec![0, 2]);
        assert!(validate_chain(&g, &chain, &p).unwrap());
    }

    #[test]
    fn clique_pair_on_joined_cliques() {
        // v1 = {0,1}, v2 = {2,3}, everything adjacent.
        let g = OrderedGraph::complete(4);
        let pair = find_clique_pair_bipartite(&g, &[0, 1], &[2, 3], 2).unwrap();
        assert_eq!(pair, (vec![0, 1], vec![2, 3]));
    }

    #[test]
    fn clique_pair_absent_without_cross_edges() {
        let mut g = OrderedGraph::new(4);
        g.add_edge(0, 1).unwrap();
        g.add_edge(2, 3).unwrap();
        assert!(find_clique_pair_bipartite(&g, &[0, 1], &[2, 3], 1).is_none());
    }
}
