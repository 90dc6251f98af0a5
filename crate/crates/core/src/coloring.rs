//! Total edge colorings of ordered complete graphs.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{parse_fields, parse_header, OrderedGraph};

/// Index of the unordered pair `{u, v}` (with `u < v`) in lexicographic
/// `(u, v)` order over all pairs of `0..n`.
#[inline]
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    // Pairs (0,1)..(0,n-1), (1,2)..(1,n-1), ...
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// All pairs of `0..n` in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            out.push((u, v));
        }
    }
    out
}

/// An assignment of one of `n_colors` colors to every pair of distinct
/// vertices of the ordered complete graph on `n_vertices` vertices.
///
/// Convention: color 0 is red and color 1 is blue in two-colorings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeColoring {
    n: usize,
    n_colors: usize,
    colors: Vec<u16>,
}

pub const RED: usize = 0;
pub const BLUE: usize = 1;

impl EdgeColoring {
    /// All pairs get color 0.
    pub fn new(n: usize, n_colors: usize) -> Result<Self> {
        Self::uniform(n, n_colors, 0)
    }

    pub fn uniform(n: usize, n_colors: usize, color: usize) -> Result<Self> {
        if n_colors < 1 {
            return Err(Error::Precondition("need at least one color".into()));
        }
        if color >= n_colors {
            return Err(Error::BadColor { color, n_colors });
        }
        Ok(EdgeColoring {
            n,
            n_colors,
            colors: vec![color as u16; n * n.saturating_sub(1) / 2],
        })
    }

    /// Uniformly random coloring, for harnesses and the CLI.
    pub fn random<R: Rng>(n: usize, n_colors: usize, rng: &mut R) -> Result<Self> {
        let mut c = EdgeColoring::new(n, n_colors)?;
        for slot in c.colors.iter_mut() {
            *slot = rng.gen_range(0..n_colors) as u16;
        }
        Ok(c)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_colors(&self) -> usize {
        self.n_colors
    }

    pub fn set_color(&mut self, u: usize, v: usize, color: usize) -> Result<()> {
        let (u, v) = self.check_pair(u, v)?;
        if color >= self.n_colors {
            return Err(Error::BadColor {
                color,
                n_colors: self.n_colors,
            });
        }
        let idx = pair_index(self.n, u, v);
        self.colors[idx] = color as u16;
        Ok(())
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(usize, usize)> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok((u.min(v), u.max(v)))
    }

    /// Color of the pair `{u, v}`. Panics on out-of-range or equal vertices.
    pub fn color(&self, u: usize, v: usize) -> usize {
        let (u, v) = self.check_pair(u, v).expect("valid pair");
        self.colors[pair_index(self.n, u, v)] as usize
    }

    /// The graph whose edges are exactly the pairs of the given color.
    pub fn color_class(&self, color: usize) -> Result<OrderedGraph> {
        if color >= self.n_colors {
            return Err(Error::BadColor {
                color,
                n_colors: self.n_colors,
            });
        }
        let mut g = OrderedGraph::new(self.n);
        for (u, v) in all_pairs(self.n) {
            if self.colors[pair_index(self.n, u, v)] as usize == color {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Induced sub-coloring on `verts` (strictly increasing), relabeled to
    /// `0..verts.len()`.
    pub fn induced(&self, verts: &[usize]) -> Result<EdgeColoring> {
        crate::graph::check_increasing(verts, self.n)?;
        let mut c = EdgeColoring::new(verts.len(), self.n_colors)?;
        for i in 0..verts.len() {
            for j in (i + 1)..verts.len() {
                c.set_color(i, j, self.color(verts[i], verts[j]))?;
            }
        }
        Ok(c)
    }

    /// Serializes to the `.ocg` format: `ocg <N> <r>` then exactly
    /// `N(N-1)/2` lines `u v c` in lexicographic pair order.
    pub fn to_ocg_string(&self) -> String {
        let mut out = format!("ocg {} {}\n", self.n, self.n_colors);
        for (u, v) in all_pairs(self.n) {
            out.push_str(&format!("{u} {v} {}\n", self.colors[pair_index(self.n, u, v)]));
        }
        out
    }

    pub fn parse_ocg(text: &str) -> Result<EdgeColoring> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "empty file".into(),
        })?;
        let h = parse_header(header, "ocg", 1)?;
        if h.len() != 2 {
            return Err(Error::Parse {
                line: 1,
                msg: "header must be `ocg <N> <r>`".into(),
            });
        }
        let (n, r) = (h[0], h[1]);
        let mut c = EdgeColoring::new(n, r.max(1))?;
        if r < 1 {
            return Err(Error::Parse {
                line: 1,
                msg: "need at least one color".into(),
            });
        }
        let mut seen = vec![false; n * n.saturating_sub(1) / 2];
        for (idx, line) in lines {
            let lineno = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let fields = parse_fields(line, 3, lineno)?;
            let (u, v, col) = (fields[0], fields[1], fields[2]);
            if u >= v {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("pair must have u < v, got {u} {v}"),
                });
            }
            if v >= n {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("vertex {v} out of range for N = {n}"),
                });
            }
            let pi = pair_index(n, u, v);
            if seen[pi] {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("pair {u} {v} listed twice"),
                });
            }
            seen[pi] = true;
            c.set_color(u, v, col).map_err(|e| Error::Parse {
                line: lineno,
                msg: e.to_string(),
            })?;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            let (u, v) = all_pairs(n)[missing];
            return Err(Error::Parse {
                line: 0,
                msg: format!("pair {u} {v} missing: a coloring must be total"),
            });
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn pair_index_is_lexicographic() {
        let pairs = all_pairs(5);
        for (k, &(u, v)) in pairs.iter().enumerate() {
            assert_eq!(pair_index(5, u, v), k);
        }
    }

    #[test]
    fn color_classes_partition_pairs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let c = EdgeColoring::random(9, 3, &mut rng).unwrap();
        let total: usize = (0..3)
            .map(|k| c.color_class(k).unwrap().edge_count())
            .sum();
        assert_eq!(total, 9 * 8 / 2);
    }

    #[test]
    fn all_red_classes() {
        let c = EdgeColoring::uniform(5, 2, RED).unwrap();
        assert_eq!(c.color_class(0).unwrap(), OrderedGraph::complete(5));
        assert_eq!(c.color_class(1).unwrap().edge_count(), 0);
        assert!(c.color_class(2).is_err());
    }

    #[test]
    fn ocg_roundtrip_byte_identical() {
        let mut c = EdgeColoring::new(4, 2).unwrap();
        c.set_color(0, 3, 1).unwrap();
        c.set_color(1, 2, 1).unwrap();
        let text = c.to_ocg_string();
        let parsed = EdgeColoring::parse_ocg(&text).unwrap();
        assert_eq!(parsed, c);
        assert_eq!(parsed.to_ocg_string(), text);
    }

    #[test]
    fn ocg_rejects_partial_colorings() {
        let err = EdgeColoring::parse_ocg("ocg 3 2\n0 1 0\n0 2 1\n").unwrap_err();
        assert!(err.to_string().contains("missing"), "{err}");
    }
}
