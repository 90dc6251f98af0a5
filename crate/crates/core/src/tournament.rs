//! Reduction from r-edge-colored tournaments to 2r-colored ordered complete
//! graphs, and recovery of monochromatic directed path powers.
//!
//! A pair `x < y` of color `c` maps to ordered color `2c` when `x` beats
//! `y` and `2c + 1` otherwise. An ordered witness in an even class is read
//! forward; in an odd class it is read reversed, which turns the backward
//! arcs into a forward directed path power.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{all_pairs, pair_index, EdgeColoring};
use crate::error::{Error, Result};
use crate::finders::longest_path_power;
use crate::graph::{parse_fields, parse_header};

/// A complete graph on `0..n` with every pair oriented.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tournament {
    n: usize,
    /// Per pair in lexicographic order: true means the smaller vertex wins.
    forward: Vec<bool>,
}

impl Tournament {
    /// All arcs point from smaller to larger.
    pub fn transitive(n: usize) -> Self {
        Tournament {
            n,
            forward: vec![true; n * n.saturating_sub(1) / 2],
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    /// Orients the pair `{u, v}`: `forward` means `min -> max`.
    pub fn orient(&mut self, u: usize, v: usize, forward: bool) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let idx = pair_index(self.n, u.min(v), u.max(v));
        self.forward[idx] = forward;
        Ok(())
    }

    /// True iff the arc goes `x -> y`.
    pub fn beats(&self, x: usize, y: usize) -> bool {
        let (u, v) = (x.min(y), x.max(y));
        let fwd = self.forward[pair_index(self.n, u, v)];
        if x < y {
            fwd
        } else {
            !fwd
        }
    }

    /// The tournament with every arc flipped.
    pub fn reversed(&self) -> Self {
        Tournament {
            n: self.n,
            forward: self.forward.iter().map(|f| !f).collect(),
        }
    }
}

/// Parses the `.trn` format: `trn <N>` then `u v d c` lines for every pair
/// (u < v, d = 1 means u -> v, c the color). Returns the tournament and its
/// edge coloring (with `r` = largest color + 1, at least 1).
pub fn parse_trn(text: &str) -> Result<(Tournament, EdgeColoring)> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty file".into(),
    })?;
    let n = parse_header(header, "trn", 1)?[0];
    let n_pairs = n * n.saturating_sub(1) / 2;
    let mut forward: Vec<Option<bool>> = vec![None; n_pairs];
    let mut colors: Vec<usize> = vec![0; n_pairs];
    let mut max_color = 0;
    for (idx, line) in lines {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let f = parse_fields(line, 4, lineno)?;
        let (u, v, d, c) = (f[0], f[1], f[2], f[3]);
        if u >= v || v >= n {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("bad pair {u} {v} for N = {n}"),
            });
        }
        if d > 1 {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("direction must be 0 or 1, got {d}"),
            });
        }
        let pi = pair_index(n, u, v);
        if forward[pi].is_some() {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("pair {u} {v} listed twice"),
            });
        }
        forward[pi] = Some(d == 1);
        colors[pi] = c;
        max_color = max_color.max(c);
    }
    if let Some(missing) = forward.iter().position(Option::is_none) {
        let (u, v) = all_pairs(n)[missing];
        return Err(Error::Parse {
            line: 0,
            msg: format!("pair {u} {v} missing: a tournament orients every pair"),
        });
    }
    let t = Tournament {
        n,
        forward: forward.into_iter().map(|f| f.unwrap()).collect(),
    };
    let mut chi = EdgeColoring::new(n, max_color + 1)?;
    for (pi, &(u, v)) in all_pairs(n).iter().enumerate() {
        chi.set_color(u, v, colors[pi])?;
    }
    Ok((t, chi))
}

/// Canonical `.trn` text for a tournament and its coloring.
pub fn to_trn_string(t: &Tournament, chi: &EdgeColoring) -> Result<String> {
    if chi.n_vertices() != t.n {
        return Err(Error::Precondition(
            "tournament and coloring sizes differ".into(),
        ));
    }
    let mut out = format!("trn {}\n", t.n);
    for (u, v) in all_pairs(t.n) {
        let d = if t.beats(u, v) { 1 } else { 0 };
        out.push_str(&format!("{u} {v} {d} {}\n", chi.color(u, v)));
    }
    Ok(out)
}

/// Encodes an r-colored tournament as a 2r-colored ordered complete graph:
/// pair `x < y` of color `c` gets `2c` if `x -> y`, else `2c + 1`.
pub fn reduce_tournament(t: &Tournament, chi: &EdgeColoring) -> Result<EdgeColoring> {
    if chi.n_vertices() != t.n {
        return Err(Error::Precondition(
            "tournament and coloring sizes differ".into(),
        ));
    }
    let mut out = EdgeColoring::new(t.n, 2 * chi.n_colors())?;
    for (u, v) in all_pairs(t.n) {
        let bit = if t.beats(u, v) { 0 } else { 1 };
        out.set_color(u, v, 2 * chi.color(u, v) + bit)?;
    }
    Ok(out)
}

/// A directed path power: `v_i -> v_j` for all `i < j <= i + t`, every such
/// arc of one color. The vertex sequence is not necessarily increasing.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DirectedWitness {
    pub vertices: Vec<usize>,
    pub power: usize,
    pub color: usize,
}

/// Checks a directed witness against the tournament and coloring.
pub fn validate_directed_witness(
    t: &Tournament,
    chi: &EdgeColoring,
    w: &DirectedWitness,
) -> Result<bool> {
    for &v in &w.vertices {
        if v >= t.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: t.n });
        }
    }
    if w.color >= chi.n_colors() {
        return Err(Error::BadColor {
            color: w.color,
            n_colors: chi.n_colors(),
        });
    }
    let k = w.vertices.len();
    for i in 0..k {
        for j in (i + 1)..k.min(i + w.power + 1) {
            let (x, y) = (w.vertices[i], w.vertices[j]);
            if x == y || !t.beats(x, y) || chi.color(x, y) != w.color {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of the directed search: the best witness over all `2r` ordered
/// color classes, each class's achieved length, and the class that won.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DirectedSearch {
    pub witness: Option<DirectedWitness>,
    pub achieved: usize,
    pub class: Option<usize>,
    pub class_lengths: Vec<usize>,
}

/// Reduces the tournament and runs the longest-path-power dynamic program
/// on every ordered color class. A witness in class `2c` is read forward,
/// in class `2c + 1` reversed. Returns the first class reaching `n_target`
/// if any, else the best class (smallest id on ties).
pub fn find_directed_path_power(
    t: &Tournament,
    chi: &EdgeColoring,
    power: usize,
    n_target: usize,
) -> Result<DirectedSearch> {
    let reduced = reduce_tournament(t, chi)?;
    let classes = 2 * chi.n_colors();
    let per_class: Vec<(usize, Option<Vec<usize>>)> = (0..classes)
        .into_par_iter()
        .map(|class| {
            let g = reduced.color_class(class).expect("class id in range");
            longest_path_power(&g, power, None)
        })
        .map(|(len, w)| (len, w.map(|w| w.vertices)))
        .collect();

    let class_lengths: Vec<usize> = per_class.iter().map(|&(len, _)| len).collect();
    let winner = (0..classes)
        .find(|&c| class_lengths[c] >= n_target)
        .or_else(|| {
            (0..classes).max_by_key(|&c| (class_lengths[c], std::cmp::Reverse(c)))
        });
    let Some(class) = winner else {
        return Ok(DirectedSearch {
            witness: None,
            achieved: 0,
            class: None,
            class_lengths,
        });
    };
    let witness = per_class[class].1.as_ref().map(|verts| {
        let mut vertices = verts.clone();
        if class % 2 == 1 {
            vertices.reverse();
        }
        DirectedWitness {
            vertices,
            power,
            color: class / 2,
        }
    });
    if let Some(w) = &witness {
        debug_assert!(validate_directed_witness(t, chi, w).unwrap_or(false));
    }
    Ok(DirectedSearch {
        witness,
        achieved: class_lengths[class],
        class: Some(class),
        class_lengths,
    })
}
