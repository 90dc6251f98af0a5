//! Backtracking search for order-preserving pattern embeddings.

use crate::error::{Error, Result};
use crate::graph::OrderedGraph;
use crate::pattern::Pattern;
use crate::witness::{Host, Witness};

use super::{SearchBudget, SearchOutcome, SearchRun, Ticker};

/// Finds an order-preserving embedding of `pattern` into the host, with all
/// pattern edges in the stated color class when the host is a coloring.
///
/// Backtracks over pattern positions in increasing vertex order; at each
/// position only vertices adjacent to all previously placed pattern
/// neighbors are tried. The first embedding found is lexicographically
/// smallest in the vertex sequence.
pub fn find_ordered_embedding(
    host: Host<'_>,
    color: Option<usize>,
    pattern: &Pattern,
    budget: &SearchBudget,
) -> Result<SearchRun<Witness>> {
    pattern.validate()?;
    let class_storage;
    let (g, witness_color) = match (host, color) {
        (Host::Graph(g), None) => (g, None),
        (Host::Graph(_), Some(_)) => return Err(Error::UnexpectedColor),
        (Host::Coloring(_), None) => return Err(Error::WitnessColorMissing),
        (Host::Coloring(c), Some(col)) => {
            class_storage = c.color_class(col)?;
            (&class_storage, Some(col))
        }
    };
    let run = embed_in_graph(g, pattern, budget);
    Ok(SearchRun {
        outcome: run.outcome.map(|vertices| {
            Witness::new(pattern.clone(), vertices, witness_color)
        }),
        stats: run.stats,
    })
}

fn embed_in_graph(
    g: &OrderedGraph,
    pattern: &Pattern,
    budget: &SearchBudget,
) -> SearchRun<Vec<usize>> {
    let k = pattern.vertex_count();
    let n = g.n_vertices();
    let mut ticker = Ticker::new(budget);
    if k > n {
        return SearchRun {
            outcome: SearchOutcome::Absent,
            stats: ticker.stats(),
        };
    }
    // Pattern neighbors at smaller positions, per position.
    let mut earlier: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (i, j) in pattern.edges() {
        earlier[j].push(i);
    }
    let mut map: Vec<usize> = Vec::with_capacity(k);
    match place(g, k, n, &earlier, &mut map, &mut ticker) {
        Some(true) => SearchRun {
            outcome: SearchOutcome::Found(map),
            stats: ticker.stats(),
        },
        Some(false) => SearchRun {
            outcome: SearchOutcome::Absent,
            stats: ticker.stats(),
        },
        None => SearchRun {
            outcome: SearchOutcome::Indeterminate,
            stats: ticker.stats(),
        },
    }
}

/// `Some(true)` found (map filled), `Some(false)` exhausted, `None` budget.
fn place(
    g: &OrderedGraph,
    k: usize,
    n: usize,
    earlier: &[Vec<usize>],
    map: &mut Vec<usize>,
    ticker: &mut Ticker,
) -> Option<bool> {
    let j = map.len();
    if j == k {
        return Some(true);
    }
    let lo = map.last().map_or(0, |&v| v + 1);
    // Enough room must remain for the positions after j.
    let hi = n - (k - j - 1);
    for v in lo..hi {
        if !ticker.tick() {
            return None;
        }
        if earlier[j].iter().any(|&i| !g.has_edge(map[i], v)) {
            ticker.prunes += 1;
            continue;
        }
        map.push(v);
        match place(g, k, n, earlier, map, ticker) {
            Some(true) => return Some(true),
            Some(false) => {
                map.pop();
            }
            None => return None,
        }
    }
    Some(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::EdgeColoring;
    use crate::graph::build_q_graph;
    use crate::witness::validate_witness;

    #[test]
    fn all_red_k6_hosts_q_graph_on_first_vertices() {
        let c = EdgeColoring::uniform(6, 2, 0).unwrap();
        let p = Pattern::QGraph { m: 2, t: 1, s: 2 };
        let run =
            find_ordered_embedding(Host::Coloring(&c), Some(0), &p, &SearchBudget::default())
                .unwrap();
        let w = run.outcome.expect_found("red q-graph");
        assert_eq!(w.vertices, vec![0, 1, 2, 3]);
        assert_eq!(w.color, Some(0));
        assert!(validate_witness(Host::Coloring(&c), &w).unwrap());
    }

    #[test]
    fn empty_color_class_has_nothing() {
        let c = EdgeColoring::uniform(6, 2, 0).unwrap();
        let p = Pattern::Clique { s: 2 };
        let run =
            find_ordered_embedding(Host::Coloring(&c), Some(1), &p, &SearchBudget::default())
                .unwrap();
        assert!(run.outcome.is_absent());
    }

    #[test]
    fn q_graph_contains_long_path_power() {
        // Q_4^{2,2} contains P_8^2: take every vertex of every block.
        let g = build_q_graph(4, 2, 2).unwrap();
        let p = Pattern::PathPower { n: 8, t: 2 };
        let run =
            find_ordered_embedding(Host::Graph(&g), None, &p, &SearchBudget::default()).unwrap();
        let w = run.outcome.expect_found("path power in q-graph");
        assert!(validate_witness(Host::Graph(&g), &w).unwrap());
    }

    #[test]
    fn coloring_host_without_color_is_an_error() {
        let c = EdgeColoring::uniform(4, 2, 0).unwrap();
        let p = Pattern::Clique { s: 2 };
        assert!(
            find_ordered_embedding(Host::Coloring(&c), None, &p, &SearchBudget::default())
                .is_err()
        );
    }

    #[test]
    fn graph_host_with_color_is_an_error() {
        let g = OrderedGraph::complete(4);
        let p = Pattern::Clique { s: 2 };
        assert!(
            find_ordered_embedding(Host::Graph(&g), Some(0), &p, &SearchBudget::default())
                .is_err()
        );
    }

    #[test]
    fn tiny_budget_is_indeterminate() {
        let g = OrderedGraph::complete(30);
        let p = Pattern::PathPower { n: 10, t: 2 };
        let run = find_ordered_embedding(
            Host::Graph(&g),
            None,
            &p,
            &SearchBudget {
                max_nodes: 2,
                deterministic: true,
            },
        )
        .unwrap();
        assert!(run.outcome.is_indeterminate());
    }
}
