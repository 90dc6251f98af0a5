//! Machine-checkable embeddings of patterns into hosts.

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::OrderedGraph;
use crate::pattern::Pattern;

/// An order-preserving embedding of a pattern into a host, possibly confined
/// to one color class.
///
/// Containment is non-induced: every pattern edge must land on a host edge
/// (of the stated color when the host is a coloring); pattern non-edges are
/// unconstrained.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Witness {
    pub pattern: Pattern,
    pub vertices: Vec<usize>,
    pub color: Option<usize>,
}

impl Witness {
    pub fn new(pattern: Pattern, vertices: Vec<usize>, color: Option<usize>) -> Self {
        Witness {
            pattern,
            vertices,
            color,
        }
    }
}

/// Either kind of host a witness can be checked against.
#[derive(Clone, Copy)]
pub enum Host<'a> {
    Graph(&'a OrderedGraph),
    Coloring(&'a EdgeColoring),
}

impl<'a> Host<'a> {
    pub fn n_vertices(&self) -> usize {
        match self {
            Host::Graph(g) => g.n_vertices(),
            Host::Coloring(c) => c.n_vertices(),
        }
    }
}

/// Checks a witness against its host.
///
/// Returns `Ok(false)` for an honest non-embedding (missing edge, wrong
/// color, not strictly increasing). Malformed witnesses — out-of-range
/// vertices, arity mismatch, missing color against a coloring host — are
/// errors, kept distinct from `false`.
pub fn validate_witness(host: Host<'_>, w: &Witness) -> Result<bool> {
    w.pattern.validate()?;
    let expected = w.pattern.vertex_count();
    if w.vertices.len() != expected {
        return Err(Error::WitnessArity {
            expected,
            got: w.vertices.len(),
        });
    }
    let n = host.n_vertices();
    for &v in &w.vertices {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if w.vertices.windows(2).any(|p| p[0] >= p[1]) {
        return Ok(false);
    }
    match host {
        Host::Graph(g) => {
            for (i, j) in w.pattern.edges() {
                if !g.has_edge(w.vertices[i], w.vertices[j]) {
                    return Ok(false);
                }
            }
        }
        Host::Coloring(c) => {
            let color = w.color.ok_or(Error::WitnessColorMissing)?;
            if color >= c.n_colors() {
                return Err(Error::BadColor {
                    color,
                    n_colors: c.n_colors(),
                });
            }
            for (i, j) in w.pattern.edges() {
                if c.color(w.vertices[i], w.vertices[j]) != color {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_q_graph;

    #[test]
    fn complete_host_accepts_path_power() {
        let g = OrderedGraph::complete(5);
        let w = Witness::new(Pattern::PathPower { n: 5, t: 2 }, vec![0, 1, 2, 3, 4], None);
        assert!(validate_witness(Host::Graph(&g), &w).unwrap());
    }

    #[test]
    fn edgeless_host_rejects_clique() {
        let g = OrderedGraph::new(3);
        let w = Witness::new(Pattern::Clique { s: 2 }, vec![0, 1], None);
        assert!(!validate_witness(Host::Graph(&g), &w).unwrap());
    }

    #[test]
    fn out_of_range_is_an_error_not_false() {
        let g = OrderedGraph::complete(3);
        let w = Witness::new(Pattern::Clique { s: 2 }, vec![0, 7], None);
        assert!(validate_witness(Host::Graph(&g), &w).is_err());
    }

    #[test]
    fn coloring_host_needs_color_and_matches_it() {
        let c = EdgeColoring::uniform(4, 2, 0).unwrap();
        let mut w = Witness::new(Pattern::Clique { s: 3 }, vec![0, 1, 2], None);
        assert!(validate_witness(Host::Coloring(&c), &w).is_err());
        w.color = Some(0);
        assert!(validate_witness(Host::Coloring(&c), &w).unwrap());
        w.color = Some(1);
        assert!(!validate_witness(Host::Coloring(&c), &w).unwrap());
    }

    #[test]
    fn non_increasing_sequence_is_false() {
        let g = OrderedGraph::complete(4);
        let w = Witness::new(Pattern::Clique { s: 2 }, vec![2, 1], None);
        assert!(!validate_witness(Host::Graph(&g), &w).unwrap());
    }

    #[test]
    fn q_graph_hosts_its_own_path_power() {
        // Q_4^{2,3} contains P_4^2; one valid selection takes two vertices
        // per block boundary region. Constructed by hand here.
        let g = build_q_graph(4, 2, 3).unwrap();
        // Blocks: {0,1,2}, {3,4}, {5,6}, {7,8,9}.
        let w = Witness::new(Pattern::PathPower { n: 4, t: 2 }, vec![2, 3, 4, 5], None);
        assert!(validate_witness(Host::Graph(&g), &w).unwrap());
    }
}
