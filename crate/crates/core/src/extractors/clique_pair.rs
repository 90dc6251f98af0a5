//! Clique pairs across a bipartition, by random sampling with a
//! deterministic exhaustive fallback, and across many parts by induction.

use std::ops::ControlFlow;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::bits::Bits;
use crate::finders::{find_clique_pair_bipartite, for_each_clique};
use crate::graph::OrderedGraph;

/// Cap on the number of t-subsets examined during bad-set removal before a
/// sampling attempt is written off.
pub const BAD_SET_ENUM_CAP: u64 = 1_000_000;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum PairSource {
    /// Produced by the randomized procedure on the given 1-based attempt.
    Sampler { attempt: u32 },
    /// The sampler gave up and the exhaustive search found the pair.
    OracleFallback { sampler_attempts: u32 },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CliquePair {
    pub t1: Vec<usize>,
    pub t2: Vec<usize>,
    pub source: PairSource,
}

/// Outcome of [`sample_clique_pair`]: either a pair, or a certificate of
/// nonexistence from the exhaustive fallback. Sampler exhaustion alone is
/// never reported as absence.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum CliquePairOutcome {
    Found(CliquePair),
    AbsentCertified { sampler_attempts: u32 },
}

impl CliquePairOutcome {
    pub fn found(self) -> Option<CliquePair> {
        match self {
            CliquePairOutcome::Found(p) => Some(p),
            CliquePairOutcome::AbsentCertified { .. } => None,
        }
    }
}

/// Randomized search for `t`-subsets `T_1` of `v1`, `T_2` of `v2` with
/// `T_1 ∪ T_2` a clique.
///
/// Each attempt follows the probabilistic argument: sample `2t` vertices of
/// the larger side with replacement, take their common neighborhood `R` in
/// the smaller side, delete one vertex from every bad `t`-subset of `R`
/// (common neighborhood back in the larger side of size at most
/// `sqrt(|small|)`), find a `t`-clique in the remainder, then a `t`-clique
/// in its common neighborhood. After `retries` attempts the deterministic
/// exhaustive search settles existence. `s` only scales the reference
/// thresholds; it does not steer the search.
pub fn sample_clique_pair(
    g: &OrderedGraph,
    v1: &[usize],
    v2: &[usize],
    t: usize,
    s: usize,
    rng_seed: u64,
    retries: u32,
) -> CliquePairOutcome {
    assert!(t >= 1 && s >= 2, "need t >= 1 and s >= 2");
    debug_assert!(v1.iter().all(|u| !v2.contains(u)), "sides must be disjoint");
    if v1.len() < t || v2.len() < t {
        return CliquePairOutcome::AbsentCertified { sampler_attempts: 0 };
    }
    let swapped = v1.len() > v2.len();
    let (small, large) = if swapped { (v2, v1) } else { (v1, v2) };
    let n = g.n_vertices();
    let small_n = small.len();
    let large_bits = Bits::from_slice(n, large);
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);

    for attempt in 1..=retries {
        // 2t samples of the larger side, with replacement.
        let sampled: Vec<usize> = (0..2 * t).map(|_| large[rng.gen_range(0..large.len())]).collect();
        let hood: Vec<usize> = small
            .iter()
            .copied()
            .filter(|&x| sampled.iter().all(|&y| g.has_edge(x, y)))
            .collect();
        if hood.len() < t {
            continue;
        }
        // Deletion pass over bad t-subsets of the common neighborhood.
        let Some(kept) = remove_bad_subsets(g, &hood, &large_bits, t, small_n) else {
            continue; // enumeration cap hit; treat the attempt as spent
        };
        if kept.len() < t {
            continue;
        }
        let kept_bits = Bits::from_slice(n, &kept);
        let Some(t1) = first_clique(g, &kept_bits, t) else {
            continue;
        };
        let mut common = large_bits.clone();
        for &u in &t1 {
            common.and_with(g.neighbors(u));
        }
        let Some(t2) = first_clique(g, &common, t) else {
            continue;
        };
        let source = PairSource::Sampler { attempt };
        let (t1, t2) = if swapped { (t2, t1) } else { (t1, t2) };
        debug_assert!(g.is_clique(&[t1.clone(), t2.clone()].concat()));
        return CliquePairOutcome::Found(CliquePair { t1, t2, source });
    }

    match find_clique_pair_bipartite(g, v1, v2, t) {
        Some((t1, t2)) => CliquePairOutcome::Found(CliquePair {
            t1,
            t2,
            source: PairSource::OracleFallback {
                sampler_attempts: retries,
            },
        }),
        None => CliquePairOutcome::AbsentCertified {
            sampler_attempts: retries,
        },
    }
}

/// Deletes one vertex from every bad t-subset: a subset whose common
/// neighborhood in the larger side has at most `sqrt(small_n)` vertices.
/// Returns `None` if the enumeration cap is reached.
fn remove_bad_subsets(
    g: &OrderedGraph,
    hood: &[usize],
    large_bits: &Bits,
    t: usize,
    small_n: usize,
) -> Option<Vec<usize>> {
    let mut removed = vec![false; hood.len()];
    let mut examined: u64 = 0;
    let mut idxs: Vec<usize> = Vec::with_capacity(t);
    if !subsets(hood.len(), t, 0, &mut idxs, &mut |chosen: &[usize]| {
        examined += 1;
        if examined > BAD_SET_ENUM_CAP {
            return ControlFlow::Break(());
        }
        if chosen.iter().any(|&i| removed[i]) {
            return ControlFlow::Continue(());
        }
        let mut common = large_bits.clone();
        for &i in chosen {
            common.and_with(g.neighbors(hood[i]));
        }
        let cnt = common.count();
        // Bad iff |common| <= sqrt(small_n), exactly: cnt^2 <= small_n.
        if cnt * cnt <= small_n {
            removed[*chosen.last().unwrap()] = true;
        }
        ControlFlow::Continue(())
    }) {
        return None;
    }
    Some(
        hood.iter()
            .enumerate()
            .filter(|&(i, _)| !removed[i])
            .map(|(_, &v)| v)
            .collect(),
    )
}

/// All size-`k` index subsets of `0..n` in lexicographic order; returns
/// false if the visitor broke.
fn subsets(
    n: usize,
    k: usize,
    from: usize,
    current: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
) -> bool {
    if current.len() == k {
        return f(current).is_continue();
    }
    let need = k - current.len();
    for i in from..n {
        if n - i < need {
            break;
        }
        current.push(i);
        let ok = subsets(n, k, i + 1, current, f);
        current.pop();
        if !ok {
            return false;
        }
    }
    true
}

fn first_clique(g: &OrderedGraph, within: &Bits, t: usize) -> Option<Vec<usize>> {
    let mut found = None;
    let _ = for_each_clique(g, within, t, &mut |c: &[usize]| {
        found = Some(c.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// Failure of the across-parts induction, naming the step that broke.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum PartsFailure {
    #[error("bad parts: {0}")]
    BadParts(String),

    #[error("no clique pair between parts {i} and {j} at the {stage} step (certified)")]
    PairAbsent {
        i: usize,
        j: usize,
        stage: &'static str,
    },
}

/// A `2t`-clique split `t`/`t` across parts `i < j` (original indices).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PartsPair {
    pub i: usize,
    pub j: usize,
    pub t_i: Vec<usize>,
    pub t_j: Vec<usize>,
    pub source: PairSource,
}

/// Finds a clique pair across some two of `s` pairwise disjoint parts,
/// following the induction on `s`.
///
/// If some vertex of the last part is sparse to every earlier part (at most
/// a `t/(s+t)` fraction of its edges), the procedure recurses on the
/// non-neighborhoods; otherwise it collects the largest bucket of last-part
/// vertices dense to one fixed earlier part and runs the sampler there.
pub fn clique_pair_across_parts(
    g: &OrderedGraph,
    parts: &[Vec<usize>],
    t: usize,
    rng_seed: u64,
    retries: u32,
) -> Result<PartsPair, PartsFailure> {
    if parts.len() < 2 {
        return Err(PartsFailure::BadParts("need at least two parts".into()));
    }
    for (i, p) in parts.iter().enumerate() {
        if p.is_empty() {
            return Err(PartsFailure::BadParts(format!("part {i} is empty")));
        }
        if p.windows(2).any(|w| w[0] >= w[1]) {
            return Err(PartsFailure::BadParts(format!("part {i} is not sorted")));
        }
        for (j, q) in parts.iter().enumerate().skip(i + 1) {
            if p.iter().any(|v| q.binary_search(v).is_ok()) {
                return Err(PartsFailure::BadParts(format!(
                    "parts {i} and {j} intersect"
                )));
            }
        }
    }
    let indexed: Vec<(usize, Vec<usize>)> =
        parts.iter().cloned().enumerate().collect();
    solve(g, &indexed, t, rng_seed, retries)
}

fn solve(
    g: &OrderedGraph,
    parts: &[(usize, Vec<usize>)],
    t: usize,
    rng_seed: u64,
    retries: u32,
) -> Result<PartsPair, PartsFailure> {
    let s = parts.len();
    if s == 2 {
        let (oi, ref vi) = parts[0];
        let (oj, ref vj) = parts[1];
        return match sample_clique_pair(g, vi, vj, t, 2, rng_seed, retries) {
            CliquePairOutcome::Found(p) => Ok(PartsPair {
                i: oi,
                j: oj,
                t_i: p.t1,
                t_j: p.t2,
                source: p.source,
            }),
            CliquePairOutcome::AbsentCertified { .. } => Err(PartsFailure::PairAbsent {
                i: oi,
                j: oj,
                stage: "base",
            }),
        };
    }

    let last = &parts[s - 1];
    // Sparse branch: a last-part vertex sending at most t/(s+t) of each
    // earlier part's size in edges. Exact comparison: deg*(s+t) <= t*|V_i|.
    for &v in &last.1 {
        let sparse_everywhere = parts[..s - 1].iter().all(|(_, vi)| {
            let deg = vi.iter().filter(|&&u| g.has_edge(u, v)).count();
            deg * (s + t) <= t * vi.len()
        });
        if sparse_everywhere {
            let shrunk: Vec<(usize, Vec<usize>)> = parts[..s - 1]
                .iter()
                .map(|(oi, vi)| {
                    (
                        *oi,
                        vi.iter().copied().filter(|&u| !g.has_edge(u, v)).collect(),
                    )
                })
                .collect();
            return solve(g, &shrunk, t, rng_seed, retries);
        }
    }

    // Dense branch: every last-part vertex exceeds the threshold somewhere;
    // bucket by the first such part and keep the largest bucket.
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); s - 1];
    for &v in &last.1 {
        let hit = parts[..s - 1]
            .iter()
            .position(|(_, vi)| {
                let deg = vi.iter().filter(|&&u| g.has_edge(u, v)).count();
                deg * (s + t) > t * vi.len()
            })
            .expect("sparse branch would have fired");
        buckets[hit].push(v);
    }
    let target = (0..s - 1)
        .max_by_key(|&i| buckets[i].len())
        .expect("at least one bucket");
    let (oi, ref vi) = parts[target];
    let oj = last.0;
    match sample_clique_pair(g, vi, &buckets[target], t, s, rng_seed, retries) {
        CliquePairOutcome::Found(p) => Ok(PartsPair {
            i: oi,
            j: oj,
            t_i: p.t1,
            t_j: p.t2,
            source: p.source,
        }),
        CliquePairOutcome::AbsentCertified { .. } => Err(PartsFailure::PairAbsent {
            i: oi,
            j: oj,
            stage: "dense",
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn joined_cliques_succeed_first_sample() {
        // v1 and v2 are cliques, completely joined.
        let g = OrderedGraph::complete(8);
        let out = sample_clique_pair(&g, &[0, 1, 2, 3], &[4, 5, 6, 7], 2, 2, 1, 5);
        let pair = out.found().expect("pair in complete graph");
        assert!(matches!(pair.source, PairSource::Sampler { attempt: 1 }));
        assert!(g.is_clique(&[pair.t1.clone(), pair.t2.clone()].concat()));
    }

    #[test]
    fn no_cross_edges_is_certified_absent() {
        let mut g = OrderedGraph::new(6);
        for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
            g.add_edge(u, v).unwrap();
        }
        let out = sample_clique_pair(&g, &[0, 1, 2], &[3, 4, 5], 1, 2, 9, 3);
        assert_eq!(out, CliquePairOutcome::AbsentCertified { sampler_attempts: 3 });
    }

    #[test]
    fn fixed_seed_is_reproducible() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut g = OrderedGraph::new(24);
        for u in 0..24 {
            for v in (u + 1)..24 {
                if rng.gen_bool(0.7) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        let v1: Vec<usize> = (0..12).collect();
        let v2: Vec<usize> = (12..24).collect();
        let a = sample_clique_pair(&g, &v1, &v2, 2, 3, 42, 10);
        let b = sample_clique_pair(&g, &v1, &v2, 2, 3, 42, 10);
        assert_eq!(a, b);
    }

    #[test]
    fn planted_pair_is_recovered() {
        // Sparse noise plus a planted joined clique pair.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let mut g = OrderedGraph::new(60);
        for u in 0..60 {
            for v in (u + 1)..60 {
                if rng.gen_bool(0.10) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        for &u in &[3, 7] {
            for &v in &[40, 50] {
                g.add_edge(u, v).unwrap();
            }
        }
        g.add_edge(3, 7).unwrap();
        g.add_edge(40, 50).unwrap();
        let v1: Vec<usize> = (0..30).collect();
        let v2: Vec<usize> = (30..60).collect();
        let out = sample_clique_pair(&g, &v1, &v2, 2, 2, 5, 40);
        let pair = out.found().expect("planted pair exists");
        assert!(g.is_clique(&[pair.t1.clone(), pair.t2.clone()].concat()));
        assert!(pair.t1.iter().all(|v| v1.contains(v)));
        assert!(pair.t2.iter().all(|v| v2.contains(v)));
    }

    #[test]
    fn across_parts_complete_case() {
        let g = OrderedGraph::complete(9);
        let parts = vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]];
        let pp = clique_pair_across_parts(&g, &parts, 2, 1, 5).unwrap();
        assert!(pp.i < pp.j && pp.j <= 2);
        assert!(g.is_clique(&[pp.t_i.clone(), pp.t_j.clone()].concat()));
        assert!(parts[pp.i].iter().any(|v| pp.t_i.contains(v)));
    }

    #[test]
    fn across_two_parts_is_the_sampler() {
        let g = OrderedGraph::complete(4);
        let parts = vec![vec![0, 1], vec![2, 3]];
        let pp = clique_pair_across_parts(&g, &parts, 1, 1, 5).unwrap();
        assert_eq!((pp.i, pp.j), (0, 1));
    }

    #[test]
    fn overlapping_parts_rejected() {
        let g = OrderedGraph::complete(4);
        let parts = vec![vec![0, 1], vec![1, 2]];
        assert!(matches!(
            clique_pair_across_parts(&g, &parts, 1, 1, 5),
            Err(PartsFailure::BadParts(_))
        ));
    }
}
