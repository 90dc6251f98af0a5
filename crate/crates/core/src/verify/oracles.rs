//! Independent brute-force oracles used to cross-check the search kernels.
//!
//! Everything here recomputes answers from definitions — subset masks and
//! plain loops — and deliberately shares no code with the finders or
//! extractors it is used to check.

use crate::coloring::EdgeColoring;
use crate::graph::OrderedGraph;
use crate::pattern::Pattern;

/// Does an order-preserving copy of `pattern` exist in `g`? Checks every
/// increasing vertex subset directly.
pub fn embedding_exists_brute(g: &OrderedGraph, pattern: &Pattern) -> bool {
    let k = pattern.vertex_count();
    let n = g.n_vertices();
    if k > n {
        return false;
    }
    let edges = pattern.edges();
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        if edges.iter().all(|&(p, q)| g.has_edge(subset[p], subset[q])) {
            return true;
        }
        if !advance(&mut subset, n) {
            return false;
        }
    }
}

/// Monochromatic variant against a coloring.
pub fn embedding_exists_brute_colored(c: &EdgeColoring, color: usize, pattern: &Pattern) -> bool {
    let k = pattern.vertex_count();
    let n = c.n_vertices();
    if k > n {
        return false;
    }
    let edges = pattern.edges();
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        if edges
            .iter()
            .all(|&(p, q)| c.color(subset[p], subset[q]) == color)
        {
            return true;
        }
        if !advance(&mut subset, n) {
            return false;
        }
    }
}

/// Is there a clique of size `k`? Direct subset check.
pub fn clique_exists_brute(g: &OrderedGraph, k: usize) -> bool {
    embedding_exists_brute(g, &Pattern::Clique { s: k })
}

fn advance(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - (k - i) {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Definitional chain existence for graphs on at most 30 vertices, by mask
/// enumeration over arbitrary A-blocks of every size at least `a_min`.
pub fn chain_exists_definitional(g: &OrderedGraph, a_min: usize, t: usize, k: usize) -> bool {
    assert!(g.n_vertices() <= 30, "mask oracle is for tiny graphs");
    rec_a(g, a_min, t, k, 1, 0, None)
}

fn range_mask(n: usize, floor: usize) -> u32 {
    if floor >= n {
        return 0;
    }
    (((1u64 << n) - 1) as u32) & !(((1u64 << floor) - 1) as u32)
}

fn mask_members(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&b| mask >> b & 1 == 1)
}

fn complete_between_masks(g: &OrderedGraph, a: u32, b: u32) -> bool {
    mask_members(a).all(|u| mask_members(b).all(|v| g.has_edge(u, v)))
}

fn clique_mask(g: &OrderedGraph, m: u32) -> bool {
    let members: Vec<usize> = mask_members(m).collect();
    members
        .iter()
        .enumerate()
        .all(|(i, &u)| members[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

fn rec_a(
    g: &OrderedGraph,
    a_min: usize,
    t: usize,
    k: usize,
    link: usize,
    floor: usize,
    prev_b: Option<u32>,
) -> bool {
    let range = range_mask(g.n_vertices(), floor);
    let mut sub = range;
    loop {
        if sub.count_ones() as usize >= a_min
            && prev_b.is_none_or(|pb| complete_between_masks(g, pb, sub))
        {
            if link == k {
                return true;
            }
            let top = 31 - sub.leading_zeros() as usize;
            if rec_b(g, a_min, t, k, link, top + 1, sub) {
                return true;
            }
        }
        if sub == 0 {
            return false;
        }
        sub = (sub - 1) & range;
    }
}

fn rec_b(
    g: &OrderedGraph,
    a_min: usize,
    t: usize,
    k: usize,
    link: usize,
    floor: usize,
    prev: u32,
) -> bool {
    let range = range_mask(g.n_vertices(), floor);
    let mut sub = range;
    loop {
        if sub.count_ones() as usize == t
            && clique_mask(g, sub)
            && complete_between_masks(g, prev, sub)
        {
            let top = 31 - sub.leading_zeros() as usize;
            if rec_a(g, a_min, t, k, link + 1, top + 1, Some(sub)) {
                return true;
            }
            if rec_b(g, a_min, t, k, link, top + 1, sub) {
                return true;
            }
        }
        if sub == 0 {
            return false;
        }
        sub = (sub - 1) & range;
    }
}

/// Decides satisfiability of a DIMACS CNF text by enumerating every
/// assignment; usable up to roughly 20 variables.
pub fn cnf_sat_by_enumeration(dimacs: &str) -> bool {
    let mut n_vars = 0usize;
    let mut clauses: Vec<(u64, u64)> = Vec::new(); // (positive mask, negative mask)
    for line in dimacs.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("p cnf") {
            let fields: Vec<usize> = rest
                .split_whitespace()
                .map(|f| f.parse().expect("header int"))
                .collect();
            n_vars = fields[0];
            continue;
        }
        let mut pos = 0u64;
        let mut neg = 0u64;
        for tok in line.split_whitespace() {
            let lit: i64 = tok.parse().expect("literal");
            if lit == 0 {
                break;
            }
            let var = lit.unsigned_abs() as usize - 1;
            if lit > 0 {
                pos |= 1 << var;
            } else {
                neg |= 1 << var;
            }
        }
        clauses.push((pos, neg));
    }
    assert!(n_vars <= 20, "assignment enumeration is for tiny instances");
    (0u64..(1 << n_vars)).any(|assignment| {
        clauses
            .iter()
            .all(|&(pos, neg)| assignment & pos != 0 || !assignment & neg != 0)
    })
}

/// Maximum edge count of a K_{2,2}-free bipartite graph with parts of size
/// `m`, by exhaustive search over column sets (two columns may share at
/// most one row).
pub fn zarankiewicz_max_edges_22(m: usize) -> usize {
    assert!(m <= 6, "exhaustive Zarankiewicz check is for m <= 6");
    let full: u32 = (1 << m) - 1;
    let mut best = 0;
    let mut columns: Vec<u32> = Vec::with_capacity(m);
    zk_dfs(m, full, 0, 0, &mut columns, &mut best);
    best
}

fn zk_dfs(m: usize, full: u32, edges: usize, min_mask: u32, columns: &mut Vec<u32>, best: &mut usize) {
    if columns.len() == m {
        *best = (*best).max(edges);
        return;
    }
    // Canonical form: nondecreasing column masks; prune when even filling
    // the remaining columns with m rows each cannot win.
    if edges + (m - columns.len()) * m <= *best {
        return;
    }
    for mask in min_mask..=full {
        if columns
            .iter()
            .any(|&c| (c & mask).count_ones() >= 2)
        {
            continue;
        }
        columns.push(mask);
        zk_dfs(m, full, edges + mask.count_ones() as usize, mask, columns, best);
        columns.pop();
    }
}

/// Brute-force feasibility for the decreasing-position selection: the
/// lexicographically-first increasing tuple satisfying every inequality.
pub fn positions_feasible_brute(fns: &[Vec<usize>], n_positions: usize) -> Option<Vec<usize>> {
    let s = fns.len() + 1;
    let mut tuple: Vec<usize> = (0..s).collect();
    if s > n_positions {
        return None;
    }
    loop {
        if (0..fns.len()).all(|i| fns[i][tuple[i]] >= fns[i][tuple[i + 1]]) {
            return Some(tuple);
        }
        if !advance(&mut tuple, n_positions) {
            return None;
        }
    }
}

/// Longest monochromatic monotone path in a coloring by the classical
/// per-vertex label recurrence; the independent check for t = 1.
pub fn longest_monotone_path_label(c: &EdgeColoring, color: usize) -> usize {
    let n = c.n_vertices();
    let mut labels = vec![0usize; n];
    let mut best = 0;
    for v in 0..n {
        let mut label = 1;
        for u in 0..v {
            if c.color(u, v) == color {
                label = label.max(labels[u] + 1);
            }
        }
        labels[v] = label;
        best = best.max(label);
    }
    best
}
