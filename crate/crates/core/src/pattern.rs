//! Target patterns: path powers, cliques, monotone paths and q-graphs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_q_graph, OrderedGraph};

/// A description of the ordered graph being searched for.
///
/// `MonotonePath { n }` is the same graph as `PathPower { n, t: 1 }`; it is
/// kept as its own variant because the two appear as distinct targets in the
/// CLI and in result reports.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Pattern {
    PathPower { n: usize, t: usize },
    Clique { s: usize },
    MonotonePath { n: usize },
    QGraph { m: usize, t: usize, s: usize },
}

impl Pattern {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            Pattern::PathPower { n, t } => n >= 1 && t >= 1,
            Pattern::Clique { s } => s >= 1,
            Pattern::MonotonePath { n } => n >= 1,
            Pattern::QGraph { m, t, s } => m >= 2 && t >= 1 && s >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadPattern(format!("{self}")))
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            Pattern::PathPower { n, .. } => n,
            Pattern::Clique { s } => s,
            Pattern::MonotonePath { n } => n,
            Pattern::QGraph { m, t, s } => 2 * s + (m - 2) * t,
        }
    }

    /// Pattern edges over `0..vertex_count()`, lexicographically ordered.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        match *self {
            Pattern::PathPower { n, t } => path_power_edges(n, t),
            Pattern::MonotonePath { n } => path_power_edges(n, 1),
            Pattern::Clique { s } => crate::coloring::all_pairs(s),
            Pattern::QGraph { m, t, s } => build_q_graph(m, t, s)
                .expect("validated q-graph")
                .edges()
                .collect(),
        }
    }

    /// The pattern as a concrete ordered graph.
    pub fn to_graph(&self) -> Result<OrderedGraph> {
        self.validate()?;
        OrderedGraph::from_edges(self.vertex_count(), &self.edges())
    }

    /// Parses the CLI mini-language:
    /// `clique:s | mpath:n | ppow:n:t | q:m:t:s`.
    pub fn parse(text: &str) -> Result<Pattern> {
        let parts: Vec<&str> = text.split(':').collect();
        let bad = |msg: &str| Error::BadPattern(format!("`{text}`: {msg}"));
        let num = |field: &str| -> Result<usize> {
            field
                .parse()
                .map_err(|_| bad(&format!("bad integer `{field}`")))
        };
        let p = match parts.as_slice() {
            ["clique", s] => Pattern::Clique { s: num(s)? },
            ["mpath", n] => Pattern::MonotonePath { n: num(n)? },
            ["ppow", n, t] => Pattern::PathPower { n: num(n)?, t: num(t)? },
            ["q", m, t, s] => Pattern::QGraph {
                m: num(m)?,
                t: num(t)?,
                s: num(s)?,
            },
            _ => return Err(bad("expected clique:s | mpath:n | ppow:n:t | q:m:t:s")),
        };
        p.validate()?;
        Ok(p)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Pattern::PathPower { n, t } => write!(f, "ppow:{n}:{t}"),
            Pattern::Clique { s } => write!(f, "clique:{s}"),
            Pattern::MonotonePath { n } => write!(f, "mpath:{n}"),
            Pattern::QGraph { m, t, s } => write!(f, "q:{m}:{t}:{s}"),
        }
    }
}

fn path_power_edges(n: usize, t: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n.min(i + t + 1) {
            out.push((i, j));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_power_edge_rule() {
        // P_5^2: i ~ j iff 0 < |i-j| <= 2.
        let p = Pattern::PathPower { n: 5, t: 2 };
        assert_eq!(
            p.edges(),
            vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]
        );
    }

    #[test]
    fn monotone_path_equals_power_one() {
        let a = Pattern::MonotonePath { n: 6 }.edges();
        let b = Pattern::PathPower { n: 6, t: 1 }.edges();
        assert_eq!(a, b);
    }

    #[test]
    fn clique_within_small_path_power() {
        // P_n^t restricted to its first t+1 vertices is complete.
        let g = Pattern::PathPower { n: 9, t: 3 }.to_graph().unwrap();
        assert!(g.is_clique(&[0, 1, 2, 3]));
        assert!(!g.has_edge(0, 4));
    }

    #[test]
    fn parse_mini_language() {
        assert_eq!(Pattern::parse("clique:4").unwrap(), Pattern::Clique { s: 4 });
        assert_eq!(
            Pattern::parse("ppow:7:2").unwrap(),
            Pattern::PathPower { n: 7, t: 2 }
        );
        assert_eq!(
            Pattern::parse("q:3:1:2").unwrap(),
            Pattern::QGraph { m: 3, t: 1, s: 2 }
        );
        assert!(Pattern::parse("q:1:1:1").is_err());
        assert!(Pattern::parse("ppow:5").is_err());
    }

    #[test]
    fn display_roundtrip() {
        for text in ["clique:3", "mpath:5", "ppow:8:2", "q:4:2:3"] {
            assert_eq!(Pattern::parse(text).unwrap().to_string(), text);
        }
    }

    #[test]
    fn witness_json_shape() {
        let p = Pattern::PathPower { n: 3, t: 1 };
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"kind":"path_power","n":3,"t":1}"#);
        assert_eq!(serde_json::from_str::<Pattern>(&json).unwrap(), p);
    }
}
