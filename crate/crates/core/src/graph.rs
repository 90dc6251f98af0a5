//! Ordered graphs: vertices `0..n` under the integer order, symmetric adjacency.

use crate::bits::Bits;
use crate::error::{Error, Result};

/// A graph whose vertex set is `0..n_vertices` with the natural total order.
///
/// The order is part of the object: containment of one ordered graph in
/// another must map smaller vertices to smaller vertices. Adjacency is
/// symmetric and loop-free, stored as one bit row per vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderedGraph {
    n: usize,
    rows: Vec<Bits>,
}

impl OrderedGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        OrderedGraph {
            n,
            rows: vec![Bits::new(n); n],
        }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = OrderedGraph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = OrderedGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.set_edge(u, v);
        Ok(())
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &Bits {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(Bits::count).sum::<usize>() / 2
    }

    /// Edges in lexicographic `(u, v)` order with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.rows[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Graph with an edge exactly where `self` has none.
    pub fn complement(&self) -> Self {
        let mut g = OrderedGraph::new(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// Induced subgraph on `verts` (must be strictly increasing). Vertex `i`
    /// of the result corresponds to `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Result<OrderedGraph> {
        check_increasing(verts, self.n)?;
        let mut g = OrderedGraph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// True iff every pair in `verts` is adjacent.
    pub fn is_clique(&self, verts: &[usize]) -> bool {
        verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// True iff every vertex of `a` is adjacent to every vertex of `b`.
    pub fn is_complete_between(&self, a: &[usize], b: &[usize]) -> bool {
        a.iter().all(|&u| b.iter().all(|&v| self.has_edge(u, v)))
    }

    /// Serializes to the `.og` text format: `og <N>` then one `u v` line per
    /// edge in lexicographic order. Canonical, so parse/serialize round-trips
    /// are byte-identical.
    pub fn to_og_string(&self) -> String {
        let mut out = format!("og {}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn parse_og(text: &str) -> Result<OrderedGraph> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "empty file".into(),
        })?;
        let n = parse_header(header, "og", 1)?[0];
        let mut g = OrderedGraph::new(n);
        for (idx, line) in lines {
            let lineno = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let fields = parse_fields(line, 2, lineno)?;
            let (u, v) = (fields[0], fields[1]);
            if u >= v {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("edge must have u < v, got {u} {v}"),
                });
            }
            g.add_edge(u, v).map_err(|e| Error::Parse {
                line: lineno,
                msg: e.to_string(),
            })?;
        }
        Ok(g)
    }
}

pub(crate) fn check_increasing(verts: &[usize], n: usize) -> Result<()> {
    for (i, &v) in verts.iter().enumerate() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if i > 0 && verts[i - 1] >= v {
            return Err(Error::Precondition(format!(
                "vertex list must be strictly increasing at position {i}"
            )));
        }
    }
    Ok(())
}

pub(crate) fn parse_header(line: &str, keyword: &str, lineno: usize) -> Result<Vec<usize>> {
    let mut it = line.split_whitespace();
    match it.next() {
        Some(k) if k == keyword => {}
        other => {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected header keyword `{keyword}`, got {other:?}"),
            })
        }
    }
    let values: Vec<usize> = it
        .map(|f| {
            f.parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("bad integer `{f}` in header"),
            })
        })
        .collect::<Result<_>>()?;
    if values.is_empty() {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("header `{keyword}` needs at least one integer"),
        });
    }
    Ok(values)
}

pub(crate) fn parse_fields(line: &str, count: usize, lineno: usize) -> Result<Vec<usize>> {
    let fields: Vec<usize> = line
        .split_whitespace()
        .map(|f| {
            f.parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("bad integer `{f}`"),
            })
        })
        .collect::<Result<_>>()?;
    if fields.len() != count {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("expected {count} fields, got {}", fields.len()),
        });
    }
    Ok(fields)
}

/// Builds the block blow-up of a monotone path: `m` consecutive interval
/// blocks of sizes `s, t, ..., t, s`, each block a clique, consecutive blocks
/// completely joined, nothing else.
pub fn build_q_graph(m: usize, t: usize, s: usize) -> Result<OrderedGraph> {
    if m < 2 {
        return Err(Error::Precondition(format!(
            "q-graph needs at least 2 blocks, got {m}"
        )));
    }
    if t < 1 || s < 1 {
        return Err(Error::Precondition(
            "q-graph block sizes must be at least 1".into(),
        ));
    }
    let blocks = q_graph_blocks(m, t, s);
    let n = 2 * s + (m - 2) * t;
    let mut g = OrderedGraph::new(n);
    for b in 0..m {
        let cur = &blocks[b];
        for (i, &u) in cur.iter().enumerate() {
            for &v in &cur[i + 1..] {
                g.set_edge(u, v);
            }
        }
        if b + 1 < m {
            for &u in cur {
                for &v in &blocks[b + 1] {
                    g.set_edge(u, v);
                }
            }
        }
    }
    Ok(g)
}

/// Vertex intervals of the `m` blocks of a q-graph, in order.
pub fn q_graph_blocks(m: usize, t: usize, s: usize) -> Vec<Vec<usize>> {
    let mut blocks = Vec::with_capacity(m);
    let mut next = 0;
    for b in 0..m {
        let size = if b == 0 || b == m - 1 { s } else { t };
        blocks.push((next..next + size).collect());
        next += size;
    }
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_is_involution() {
        let g = OrderedGraph::from_edges(5, &[(0, 1), (1, 3), (2, 4)]).unwrap();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.edge_count() + g.complement().edge_count(), 5 * 4 / 2);
    }

    #[test]
    fn complement_of_complete_is_edgeless() {
        assert_eq!(OrderedGraph::complete(6).complement().edge_count(), 0);
    }

    #[test]
    fn q_graph_3_1_2() {
        // Blocks {0,1}, {2}, {3,4}: two end cliques, one middle vertex,
        // complete joins between consecutive blocks. Six edges in total.
        let g = build_q_graph(3, 1, 2).unwrap();
        assert_eq!(g.n_vertices(), 5);
        assert_eq!(g.edge_count(), 6);
        let expected = [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)];
        assert_eq!(g.edges().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn q_graph_2_1_1_is_single_edge() {
        let g = build_q_graph(2, 1, 1).unwrap();
        assert_eq!(g.n_vertices(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn q_graph_rejects_one_block() {
        assert!(build_q_graph(1, 1, 1).is_err());
    }

    #[test]
    fn og_roundtrip_is_byte_identical() {
        let g = OrderedGraph::from_edges(6, &[(0, 5), (1, 2), (0, 1)]).unwrap();
        let text = g.to_og_string();
        let parsed = OrderedGraph::parse_og(&text).unwrap();
        assert_eq!(parsed, g);
        assert_eq!(parsed.to_og_string(), text);
    }

    #[test]
    fn og_parse_reports_line_numbers() {
        let err = OrderedGraph::parse_og("og 3\n0 1\n2 1\n").unwrap_err();
        assert!(err.to_string().starts_with("line 3:"), "{err}");
    }

    #[test]
    fn induced_relabels() {
        let g = OrderedGraph::from_edges(6, &[(1, 4), (4, 5)]).unwrap();
        let h = g.induced(&[1, 4, 5]).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}
