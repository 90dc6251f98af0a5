//! Fixed-size clique feasibility and exact clique counting.

use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bits::Bits;
use crate::graph::OrderedGraph;
use crate::pattern::Pattern;
use crate::witness::Witness;

use super::{SearchBudget, SearchOutcome, SearchRun, Ticker};

/// Searches for a clique of size exactly `k`.
///
/// With `budget.deterministic` the witness is the lexicographically-first
/// `k`-clique; otherwise candidates are explored in descending-degree order,
/// which usually hits a witness sooner on dense graphs.
pub fn find_clique(g: &OrderedGraph, k: usize, budget: &SearchBudget) -> SearchRun<Witness> {
    assert!(k >= 1, "clique size must be at least 1");
    let n = g.n_vertices();
    let mut ticker = Ticker::new(budget);
    let order: Option<Vec<usize>> = if budget.deterministic {
        None
    } else {
        let mut by_degree: Vec<usize> = (0..n).collect();
        by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        Some(by_degree)
    };
    let mut current = Vec::with_capacity(k);
    let outcome = match dfs(g, k, &Bits::full(n), &mut current, order.as_deref(), &mut ticker) {
        Flow::Found(verts) => {
            SearchOutcome::Found(Witness::new(Pattern::Clique { s: k }, verts, None))
        }
        Flow::Exhausted => SearchOutcome::Absent,
        Flow::OutOfBudget => SearchOutcome::Indeterminate,
    };
    SearchRun {
        outcome,
        stats: ticker.stats(),
    }
}

enum Flow {
    Found(Vec<usize>),
    Exhausted,
    OutOfBudget,
}

fn dfs(
    g: &OrderedGraph,
    k: usize,
    cands: &Bits,
    current: &mut Vec<usize>,
    order: Option<&[usize]>,
    ticker: &mut Ticker,
) -> Flow {
    if current.len() == k {
        return Flow::Found(current.clone());
    }
    if current.len() + cands.count() < k {
        ticker.prunes += 1;
        return Flow::Exhausted;
    }
    let mut remaining = cands.clone();
    let picks: Vec<usize> = match order {
        None => cands.iter().collect(),
        Some(by_degree) => by_degree.iter().copied().filter(|&v| cands.contains(v)).collect(),
    };
    for v in picks {
        if !ticker.tick() {
            return Flow::OutOfBudget;
        }
        remaining.remove(v);
        let next = remaining.and(g.neighbors(v));
        current.push(v);
        match dfs(g, k, &next, current, order, ticker) {
            Flow::Found(w) => return Flow::Found(w),
            Flow::OutOfBudget => return Flow::OutOfBudget,
            Flow::Exhausted => {}
        }
        current.pop();
    }
    Flow::Exhausted
}

/// Calls `f` for every clique of size `size` whose vertices lie in `within`,
/// in lexicographic order, until `f` breaks.
pub fn for_each_clique<B>(
    g: &OrderedGraph,
    within: &Bits,
    size: usize,
    f: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let mut current = Vec::with_capacity(size);
    enumerate(g, within, size, &mut current, f)
}

fn enumerate<B>(
    g: &OrderedGraph,
    cands: &Bits,
    size: usize,
    current: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if current.len() == size {
        return f(current);
    }
    if current.len() + cands.count() < size {
        return ControlFlow::Continue(());
    }
    let floor = current.last().map_or(0, |&v| v + 1);
    let mut v = cands.next_at_or_after(floor);
    while let Some(u) = v {
        let next = cands.and(g.neighbors(u));
        current.push(u);
        enumerate(g, &next, size, current, f)?;
        current.pop();
        v = cands.next_at_or_after(u + 1);
    }
    ControlFlow::Continue(())
}

/// Exact number of cliques of size `l`.
///
/// Recursive candidate-set enumeration with one shortcut: a candidate set
/// that is itself a clique contributes `binom(|cands|, remaining)` at once,
/// which keeps dense graphs from exploding the recursion.
pub fn count_cliques(g: &OrderedGraph, l: usize) -> BigUint {
    assert!(l >= 1, "clique size must be at least 1");
    count_rec(g, &Bits::full(g.n_vertices()), l)
}

fn count_rec(g: &OrderedGraph, cands: &Bits, need: usize) -> BigUint {
    if need == 0 {
        return BigUint::one();
    }
    let available = cands.count();
    if available < need {
        return BigUint::zero();
    }
    if need == 1 {
        return BigUint::from(available);
    }
    let verts = cands.to_vec();
    if g.is_clique(&verts) {
        return crate::bounds::binomial(available as u64, need as u64);
    }
    let mut total = BigUint::zero();
    let mut remaining = cands.clone();
    for v in verts {
        remaining.remove(v);
        let next = remaining.and(g.neighbors(v));
        total += count_rec(g, &next, need - 1);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::{validate_witness, Host};

    #[test]
    fn k4_triangle_is_lexicographically_first() {
        let g = OrderedGraph::complete(4);
        let run = find_clique(&g, 3, &SearchBudget::default());
        let w = run.outcome.expect_found("triangle in K4");
        assert_eq!(w.vertices, vec![0, 1, 2]);
        assert!(validate_witness(Host::Graph(&g), &w).unwrap());
    }

    #[test]
    fn five_cycle_has_no_triangle() {
        let g =
            OrderedGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert!(find_clique(&g, 3, &SearchBudget::default()).outcome.is_absent());
    }

    #[test]
    fn budget_exhaustion_is_indeterminate() {
        let g = OrderedGraph::complete(12);
        let run = find_clique(&g, 12, &SearchBudget { max_nodes: 3, deterministic: true });
        assert!(run.outcome.is_indeterminate());
        assert_eq!(run.stats.nodes, 3);
    }

    #[test]
    fn count_cliques_on_k4() {
        let g = OrderedGraph::complete(4);
        assert_eq!(count_cliques(&g, 2), BigUint::from(6u32));
        assert_eq!(count_cliques(&g, 3), BigUint::from(4u32));
        assert_eq!(count_cliques(&g, 4), BigUint::from(1u32));
    }

    #[test]
    fn count_singletons_is_n() {
        let g = OrderedGraph::from_edges(9, &[(0, 1)]).unwrap();
        assert_eq!(count_cliques(&g, 1), BigUint::from(9u32));
    }

    #[test]
    fn nondeterministic_mode_still_finds() {
        let g = OrderedGraph::complete(6);
        let budget = SearchBudget {
            max_nodes: 1_000,
            deterministic: false,
        };
        assert!(find_clique(&g, 4, &budget).outcome.is_found());
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let g = OrderedGraph::complete(4);
        let mut seen = Vec::new();
        let _ = for_each_clique::<()>(&g, &Bits::full(4), 2, &mut |c| {
            seen.push(c.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 1]);
        assert_eq!(seen[5], vec![2, 3]);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
    }
}
