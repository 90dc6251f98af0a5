//! Dynamic program for the longest monotone path power in an ordered graph.

use std::collections::HashMap;

use crate::bits::Bits;
use crate::graph::OrderedGraph;
use crate::pattern::Pattern;
use crate::witness::Witness;

const NO_PARENT: u32 = u32::MAX;

struct Entry {
    /// The last `min(len, t)` vertices of the best path ending here.
    state: Box<[u32]>,
    len: u32,
    parent: u32,
}

/// The full DP table over states (ordered cliques of size at most `t`).
///
/// A state is the tuple of the last `min(len, t)` vertices of a path power;
/// appending a vertex adjacent to the whole state extends the path by one.
/// Building the table once allows many `ending_in` queries against the same
/// graph, which is what the pipeline's f-tables need.
pub struct PathPowerDp {
    t: usize,
    entries: Vec<Entry>,
}

impl PathPowerDp {
    pub fn build(g: &OrderedGraph, t: usize) -> Self {
        assert!(t >= 1, "path power needs t >= 1");
        let n = g.n_vertices();
        let mut entries: Vec<Entry> = Vec::new();
        let mut index: HashMap<Box<[u32]>, u32> = HashMap::new();
        let mut by_last: Vec<Vec<u32>> = vec![Vec::new(); n];

        for v in 0..n {
            // Transitions into v from every state whose last vertex is a
            // smaller neighbor of v and that v fully dominates.
            let mut pending: Vec<(Box<[u32]>, u32, u32)> = Vec::new();
            for u in g.neighbors(v).iter() {
                if u >= v {
                    break;
                }
                for &eidx in &by_last[u] {
                    let e = &entries[eidx as usize];
                    if !e.state.iter().all(|&w| g.has_edge(w as usize, v)) {
                        continue;
                    }
                    let mut state: Vec<u32> = if e.state.len() == t {
                        e.state[1..].to_vec()
                    } else {
                        e.state.to_vec()
                    };
                    state.push(v as u32);
                    pending.push((state.into_boxed_slice(), e.len + 1, eidx));
                }
            }
            let singleton: Box<[u32]> = vec![v as u32].into_boxed_slice();
            pending.push((singleton, 1, NO_PARENT));

            for (state, len, parent) in pending {
                match index.get(&state) {
                    Some(&eidx) if entries[eidx as usize].len >= len => {}
                    Some(&eidx) => {
                        entries[eidx as usize].len = len;
                        entries[eidx as usize].parent = parent;
                    }
                    None => {
                        let eidx = entries.len() as u32;
                        index.insert(state.clone(), eidx);
                        by_last[v].push(eidx);
                        entries.push(Entry { state, len, parent });
                    }
                }
            }
        }
        PathPowerDp { t, entries }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Length of the longest path power whose final state lies inside
    /// `ending_in` (or anywhere, when `None`), plus the path itself.
    pub fn query(&self, ending_in: Option<&Bits>) -> (usize, Option<Vec<usize>>) {
        let mut best: Option<u32> = None;
        for (idx, e) in self.entries.iter().enumerate() {
            if let Some(filter) = ending_in {
                if !e.state.iter().all(|&w| filter.contains(w as usize)) {
                    continue;
                }
            }
            match best {
                Some(b) if self.entries[b as usize].len >= e.len => {}
                _ => best = Some(idx as u32),
            }
        }
        match best {
            None => (0, None),
            Some(idx) => {
                let mut vertices = Vec::new();
                let mut cur = idx;
                loop {
                    let e = &self.entries[cur as usize];
                    vertices.push(*e.state.last().unwrap() as usize);
                    if e.parent == NO_PARENT {
                        break;
                    }
                    cur = e.parent;
                }
                vertices.reverse();
                (vertices.len(), Some(vertices))
            }
        }
    }
}

/// Exact longest `t`-th power of a monotone path in `g`.
///
/// When `ending_in` is given, the last `min(length, t)` vertices of the
/// witness must lie inside it; an empty `ending_in` yields length 0 with no
/// witness by convention.
pub fn longest_path_power(
    g: &OrderedGraph,
    t: usize,
    ending_in: Option<&[usize]>,
) -> (usize, Option<Witness>) {
    let dp = PathPowerDp::build(g, t);
    let filter = ending_in.map(|verts| Bits::from_slice(g.n_vertices(), verts));
    let (len, path) = dp.query(filter.as_ref());
    let witness = path.map(|vertices| Witness::new(Pattern::PathPower { n: len, t }, vertices, None));
    (len, witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::{validate_witness, Host};

    #[test]
    fn complete_graph_gives_full_length() {
        let g = OrderedGraph::complete(5);
        let (len, w) = longest_path_power(&g, 2, None);
        assert_eq!(len, 5);
        let w = w.unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
        assert!(validate_witness(Host::Graph(&g), &w).unwrap());
    }

    #[test]
    fn monotone_path_graph() {
        let g = OrderedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (len, w) = longest_path_power(&g, 1, None);
        assert_eq!(len, 4);
        assert!(validate_witness(Host::Graph(&g), &w.unwrap()).unwrap());
    }

    #[test]
    fn edgeless_graph_has_singletons() {
        let g = OrderedGraph::new(7);
        let (len, w) = longest_path_power(&g, 3, None);
        assert_eq!(len, 1);
        assert_eq!(w.unwrap().vertices.len(), 1);
    }

    #[test]
    fn empty_ending_set_is_length_zero() {
        let g = OrderedGraph::complete(4);
        let (len, w) = longest_path_power(&g, 2, Some(&[]));
        assert_eq!(len, 0);
        assert!(w.is_none());
    }

    #[test]
    fn ending_filter_restricts_final_state() {
        // Path 0-1-2-3 with t=1; requiring the end in {1} caps the length.
        let g = OrderedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (len, w) = longest_path_power(&g, 1, Some(&[1]));
        assert_eq!(len, 2);
        assert_eq!(w.unwrap().vertices, vec![0, 1]);
    }

    #[test]
    fn universal_final_vertex_adds_exactly_one() {
        let base = OrderedGraph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (4, 5)])
            .unwrap();
        let (len, _) = longest_path_power(&base, 2, None);
        let mut bigger = OrderedGraph::new(7);
        for (u, v) in base.edges() {
            bigger.add_edge(u, v).unwrap();
        }
        for v in 0..6 {
            bigger.add_edge(v, 6).unwrap();
        }
        let (len2, _) = longest_path_power(&bigger, 2, None);
        assert_eq!(len2, len + 1);
    }
}
