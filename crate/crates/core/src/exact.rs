//! Exhaustive computation of small ordered Ramsey numbers and DIMACS export.
//!
//! The avoidance engine colors pairs in lexicographic order, checking after
//! each assignment only for forbidden copies whose lexicographically last
//! pair is the one just colored; since assignments form a lexicographic
//! prefix, every completed monochromatic copy is caught exactly once.

use crate::coloring::{all_pairs, pair_index, EdgeColoring, BLUE, RED};
use crate::error::{Error, Result};
use crate::finders::{SearchBudget, SearchOutcome, SearchRun, Ticker};
use crate::pattern::Pattern;

/// Cap on the number of pattern embeddings enumerated during CNF export.
pub const EMBEDDING_CAP: u64 = 1_000_000;

/// A 2-color avoidance instance: color the ordered complete graph with no
/// red copy of `red` and no blue copy of `blue`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AvoidanceInstance {
    pub n_vertices: usize,
    pub red: Pattern,
    pub blue: Pattern,
}

impl AvoidanceInstance {
    pub fn new(n_vertices: usize, red: Pattern, blue: Pattern) -> Result<Self> {
        red.validate()?;
        blue.validate()?;
        if red.vertex_count() < 2 || blue.vertex_count() < 2 {
            return Err(Error::Precondition(
                "both avoidance patterns need at least 2 vertices".into(),
            ));
        }
        Ok(AvoidanceInstance {
            n_vertices,
            red,
            blue,
        })
    }
}

struct AvoidSearch<'a> {
    inst: &'a AvoidanceInstance,
    pairs: Vec<(usize, usize)>,
    /// Color per pair index; u8::MAX = unassigned.
    colors: Vec<u8>,
    red_edges: Vec<(usize, usize)>,
    blue_edges: Vec<(usize, usize)>,
    ticker: Ticker,
}

impl AvoidSearch<'_> {
    fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        let (u, v) = (u.min(v), u.max(v));
        match self.colors[pair_index(self.inst.n_vertices, u, v)] {
            u8::MAX => None,
            c => Some(c as usize),
        }
    }

    /// Does some full copy of the pattern, entirely within assigned pairs
    /// of `color`, use the pair `(u, v)`?
    fn completes_copy(&self, edges: &[(usize, usize)], k: usize, color: usize, u: usize, v: usize) -> bool {
        if k > self.inst.n_vertices {
            return false;
        }
        for &(p, q) in edges {
            let mut map = vec![usize::MAX; k];
            map[p] = u;
            map[q] = v;
            if self.extend(edges, color, &mut map, 0) {
                return true;
            }
        }
        false
    }

    fn extend(&self, edges: &[(usize, usize)], color: usize, map: &mut Vec<usize>, pos: usize) -> bool {
        let k = map.len();
        if pos == k {
            return true;
        }
        if map[pos] != usize::MAX {
            if pos > 0 && map[pos - 1] >= map[pos] {
                return false;
            }
            return self.edges_ok(edges, color, map, pos) && self.extend(edges, color, map, pos + 1);
        }
        let lo = if pos == 0 { 0 } else { map[pos - 1] + 1 };
        let hi = self.upper_limit(map, pos);
        for v in lo..hi {
            if map.contains(&v) {
                continue;
            }
            map[pos] = v;
            if self.edges_ok(edges, color, map, pos) && self.extend(edges, color, map, pos + 1) {
                map[pos] = usize::MAX;
                return true;
            }
            map[pos] = usize::MAX;
        }
        false
    }

    /// Exclusive upper bound for candidates at `pos`: stay below the next
    /// pinned position, and leave room for the unpinned slots in between.
    fn upper_limit(&self, map: &[usize], pos: usize) -> usize {
        for (later, &m) in map.iter().enumerate().skip(pos + 1) {
            if m != usize::MAX {
                // m - (later - pos) + 1, clamped at zero.
                return (m + 1 + pos).saturating_sub(later);
            }
        }
        self.inst.n_vertices - (map.len() - pos - 1)
    }

    fn edges_ok(&self, edges: &[(usize, usize)], color: usize, map: &[usize], pos: usize) -> bool {
        for &(p, q) in edges {
            let other = if q == pos {
                p
            } else if p == pos {
                q
            } else {
                continue;
            };
            if map[other] != usize::MAX && self.color_of(map[other], map[pos]) != Some(color) {
                return false;
            }
        }
        true
    }

    /// `Some(true)` found, `Some(false)` exhausted, `None` out of budget.
    fn dfs(&mut self, idx: usize, symmetric: bool) -> Option<bool> {
        if idx == self.pairs.len() {
            return Some(true);
        }
        let (u, v) = self.pairs[idx];
        // When the patterns are equal, the global color swap is free
        // symmetry; fixing the first pair red halves the search.
        let choices: &[usize] = if idx == 0 && symmetric {
            &[RED]
        } else {
            &[RED, BLUE]
        };
        for &color in choices {
            if !self.ticker.tick() {
                return None;
            }
            let pidx = pair_index(self.inst.n_vertices, u, v);
            self.colors[pidx] = color as u8;
            let (edges, k) = if color == RED {
                (&self.red_edges, self.inst.red.vertex_count())
            } else {
                (&self.blue_edges, self.inst.blue.vertex_count())
            };
            if self.completes_copy(edges, k, color, u, v) {
                self.ticker.prunes += 1;
            } else {
                match self.dfs(idx + 1, symmetric) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
            }
            self.colors[pidx] = u8::MAX;
        }
        Some(false)
    }
}

/// Searches for a 2-coloring with no red `inst.red` and no blue
/// `inst.blue`. Exhaustive within budget; budget exhaustion is reported as
/// indeterminate, never as absence.
pub fn find_avoiding_coloring(
    inst: &AvoidanceInstance,
    budget: &SearchBudget,
) -> SearchRun<EdgeColoring> {
    let pairs = all_pairs(inst.n_vertices);
    let mut search = AvoidSearch {
        inst,
        colors: vec![u8::MAX; pairs.len()],
        pairs,
        red_edges: inst.red.edges(),
        blue_edges: inst.blue.edges(),
        ticker: Ticker::new(budget),
    };
    let symmetric = inst.red == inst.blue;
    let outcome = match search.dfs(0, symmetric) {
        Some(true) => {
            let mut c = EdgeColoring::new(inst.n_vertices, 2).expect("two colors");
            for (idx, &(u, v)) in search.pairs.iter().enumerate() {
                c.set_color(u, v, search.colors[idx] as usize).expect("valid");
            }
            SearchOutcome::Found(c)
        }
        Some(false) => SearchOutcome::Absent,
        None => SearchOutcome::Indeterminate,
    };
    SearchRun {
        outcome,
        stats: search.ticker.stats(),
    }
}

/// Result of the incremental Ramsey-number computation.
#[derive(Clone, PartialEq, Debug)]
pub enum RamseyNumber {
    /// The exact value, with an avoiding coloring on `value - 1` vertices
    /// as certificate.
    Exact {
        value: usize,
        certificate: EdgeColoring,
    },
    /// Avoiding colorings exist up to `n_max`: the value is at least
    /// `bound = n_max + 1`. Carries the coloring at `n_max`.
    AtLeast { bound: usize, witness: EdgeColoring },
    /// The budget ran out while deciding `at`.
    Indeterminate { at: usize },
}

/// Smallest `N` such that every 2-coloring of the ordered `K_N` has a red
/// `red` or a blue `blue`, scanned upward to `n_max`. Restrictions of
/// avoiding colorings avoid, so the first `N` with no avoiding coloring is
/// the value.
pub fn ordered_ramsey_number(
    red: &Pattern,
    blue: &Pattern,
    n_max: usize,
    budget: &SearchBudget,
) -> Result<RamseyNumber> {
    let mut last: Option<EdgeColoring> = None;
    for n in 1..=n_max {
        let inst = AvoidanceInstance::new(n, red.clone(), blue.clone())?;
        match find_avoiding_coloring(&inst, budget).outcome {
            SearchOutcome::Found(c) => last = Some(c),
            SearchOutcome::Absent => {
                let certificate = last.expect("K_1 always avoids");
                return Ok(RamseyNumber::Exact {
                    value: n,
                    certificate,
                });
            }
            SearchOutcome::Indeterminate => return Ok(RamseyNumber::Indeterminate { at: n }),
        }
    }
    Ok(RamseyNumber::AtLeast {
        bound: n_max + 1,
        witness: last.expect("n_max >= 1"),
    })
}

/// CNF rendering of an avoidance instance: one variable per pair (true =
/// red); every red embedding demands a blue edge, every blue embedding a
/// red one. Satisfiable exactly when an avoiding coloring exists.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CnfDocument {
    pub n_vars: usize,
    pub clauses: Vec<Vec<i64>>,
    pub pair_of_var: Vec<(usize, usize)>,
}

impl CnfDocument {
    /// DIMACS text: `c edge u v var k` comments, the `p cnf` line, then
    /// space-separated clauses terminated by 0.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        for (k, &(u, v)) in self.pair_of_var.iter().enumerate() {
            out.push_str(&format!("c edge {u} {v} var {}\n", k + 1));
        }
        out.push_str(&format!("p cnf {} {}\n", self.n_vars, self.clauses.len()));
        for clause in &self.clauses {
            for lit in clause {
                out.push_str(&format!("{lit} "));
            }
            out.push_str("0\n");
        }
        out
    }
}

pub fn export_cnf(inst: &AvoidanceInstance) -> Result<CnfDocument> {
    let pairs = all_pairs(inst.n_vertices);
    let var_of = |u: usize, v: usize| (pair_index(inst.n_vertices, u, v) + 1) as i64;
    let mut clauses: Vec<Vec<i64>> = Vec::new();
    let mut enumerated: u64 = 0;
    for (pattern, negate) in [(&inst.red, true), (&inst.blue, false)] {
        let k = pattern.vertex_count();
        if k > inst.n_vertices {
            continue;
        }
        let edges = pattern.edges();
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            enumerated += 1;
            if enumerated > EMBEDDING_CAP {
                return Err(Error::EmbeddingCap { cap: EMBEDDING_CAP });
            }
            let clause: Vec<i64> = edges
                .iter()
                .map(|&(p, q)| {
                    let var = var_of(subset[p], subset[q]);
                    if negate {
                        -var
                    } else {
                        var
                    }
                })
                .collect();
            clauses.push(clause);
            if !next_subset(&mut subset, inst.n_vertices) {
                break;
            }
        }
    }
    Ok(CnfDocument {
        n_vars: pairs.len(),
        clauses,
        pair_of_var: pairs,
    })
}

/// Advances an increasing index subset in lexicographic order.
fn next_subset(subset: &mut [usize], n: usize) -> bool {
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finders::find_ordered_embedding;
    use crate::witness::Host;

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn k4_avoids_triangle_vs_short_path() {
        let inst =
            AvoidanceInstance::new(4, Pattern::Clique { s: 3 }, Pattern::MonotonePath { n: 3 })
                .unwrap();
        assert!(find_avoiding_coloring(&inst, &budget()).outcome.is_found());
    }

    #[test]
    fn k5_forces_triangle_or_short_path() {
        let inst =
            AvoidanceInstance::new(5, Pattern::Clique { s: 3 }, Pattern::MonotonePath { n: 3 })
                .unwrap();
        assert!(find_avoiding_coloring(&inst, &budget()).outcome.is_absent());
    }

    #[test]
    fn single_vertex_avoids_trivially() {
        let inst =
            AvoidanceInstance::new(1, Pattern::Clique { s: 3 }, Pattern::Clique { s: 3 }).unwrap();
        assert!(find_avoiding_coloring(&inst, &budget()).outcome.is_found());
    }

    #[test]
    fn found_coloring_really_avoids() {
        let red = Pattern::Clique { s: 3 };
        let blue = Pattern::MonotonePath { n: 4 };
        let inst = AvoidanceInstance::new(6, red.clone(), blue.clone()).unwrap();
        let c = find_avoiding_coloring(&inst, &budget())
            .outcome
            .expect_found("R = 7 so K_6 avoids");
        for (color, pat) in [(RED, &red), (BLUE, &blue)] {
            let run =
                find_ordered_embedding(Host::Coloring(&c), Some(color), pat, &budget()).unwrap();
            assert!(run.outcome.is_absent());
        }
    }

    #[test]
    fn edge_vs_edge_is_two() {
        let r = ordered_ramsey_number(
            &Pattern::Clique { s: 2 },
            &Pattern::Clique { s: 2 },
            5,
            &budget(),
        )
        .unwrap();
        match r {
            RamseyNumber::Exact { value, certificate } => {
                assert_eq!(value, 2);
                assert_eq!(certificate.n_vertices(), 1);
            }
            other => panic!("expected exact, got {other:?}"),
        }
    }

    #[test]
    fn paths_three_vs_three_is_five() {
        let p = Pattern::MonotonePath { n: 3 };
        let r = ordered_ramsey_number(&p, &p, 8, &budget()).unwrap();
        assert!(matches!(r, RamseyNumber::Exact { value: 5, .. }));
    }

    #[test]
    fn clique3_vs_path4_is_seven() {
        let r = ordered_ramsey_number(
            &Pattern::Clique { s: 3 },
            &Pattern::MonotonePath { n: 4 },
            8,
            &budget(),
        )
        .unwrap();
        assert!(matches!(r, RamseyNumber::Exact { value: 7, .. }));
    }

    #[test]
    fn n_max_reached_reports_lower_bound() {
        let r = ordered_ramsey_number(
            &Pattern::Clique { s: 4 },
            &Pattern::Clique { s: 4 },
            6,
            &budget(),
        )
        .unwrap();
        assert!(matches!(r, RamseyNumber::AtLeast { bound: 7, .. }));
    }

    #[test]
    fn cnf_for_triangle_pair_on_k3() {
        let inst =
            AvoidanceInstance::new(3, Pattern::Clique { s: 3 }, Pattern::Clique { s: 3 }).unwrap();
        let cnf = export_cnf(&inst).unwrap();
        assert_eq!(cnf.n_vars, 3);
        assert_eq!(cnf.clauses, vec![vec![-1, -2, -3], vec![1, 2, 3]]);
        let text = cnf.to_dimacs();
        assert!(text.contains("p cnf 3 2"));
        assert!(text.contains("c edge 0 1 var 1"));
    }

    #[test]
    fn cnf_for_edge_pair_on_k2_is_unsat_shape() {
        let inst =
            AvoidanceInstance::new(2, Pattern::Clique { s: 2 }, Pattern::Clique { s: 2 }).unwrap();
        let cnf = export_cnf(&inst).unwrap();
        assert_eq!(cnf.n_vars, 1);
        assert_eq!(cnf.clauses, vec![vec![-1], vec![1]]);
    }
}
