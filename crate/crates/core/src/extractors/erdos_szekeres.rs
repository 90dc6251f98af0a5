//! The Erdős–Szekeres extraction: label every vertex with the longest blue
//! monotone path ending there; a high label yields the blue path, otherwise
//! the pigeonhole gives a label class whose vertices are pairwise red.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{EdgeColoring, BLUE, RED};
use crate::pattern::Pattern;
use crate::witness::Witness;

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum EsFailure {
    #[error("extractor needs a 2-coloring, got {n_colors} colors")]
    NotTwoColors { n_colors: usize },

    /// Extraction was attempted and failed; only possible below the
    /// `(s-1)(n-1)+1` threshold.
    #[error(
        "no red clique of size {s} and no blue monotone path of length {n} \
         extracted from {n_vertices} vertices (threshold is {threshold})"
    )]
    NoWitness {
        s: usize,
        n: usize,
        n_vertices: usize,
        threshold: usize,
    },
}

/// Extracts a red `Clique{s}` or a blue `MonotonePath{n}` from a
/// 2-coloring. Never fails when the host has at least `(s-1)(n-1)+1`
/// vertices; below the threshold the attempt is still made and may fail.
pub fn erdos_szekeres_extract(
    c: &EdgeColoring,
    s: usize,
    n: usize,
) -> Result<Witness, EsFailure> {
    assert!(s >= 1 && n >= 1, "pattern sizes must be positive");
    if c.n_colors() != 2 {
        return Err(EsFailure::NotTwoColors {
            n_colors: c.n_colors(),
        });
    }
    let count = c.n_vertices();
    let mut labels: Vec<usize> = Vec::with_capacity(count);
    let mut pred: Vec<Option<usize>> = Vec::with_capacity(count);
    for v in 0..count {
        let mut best = 1;
        let mut from = None;
        for u in 0..v {
            if c.color(u, v) == BLUE && labels[u] + 1 > best {
                best = labels[u] + 1;
                from = Some(u);
            }
        }
        labels.push(best);
        pred.push(from);
        if best >= n {
            // Walk the predecessor links; `best` grows by one per vertex, so
            // the first vertex reaching the threshold has label exactly n.
            let mut path = Vec::with_capacity(n);
            let mut cur = Some(v);
            while let Some(x) = cur {
                path.push(x);
                cur = pred[x];
            }
            path.reverse();
            debug_assert_eq!(path.len(), n);
            return Ok(Witness::new(
                Pattern::MonotonePath { n },
                path,
                Some(BLUE),
            ));
        }
    }

    // All labels lie in 1..n; look for a class of size s. Equal labels force
    // red edges: a blue edge u < v with equal labels would have raised
    // label(v).
    for level in 1..n.max(2) {
        let class: Vec<usize> = (0..count).filter(|&v| labels[v] == level).collect();
        if class.len() >= s {
            let clique = &class[..s];
            for (idx, &u) in clique.iter().enumerate() {
                for &v in &clique[idx + 1..] {
                    assert_eq!(
                        c.color(u, v),
                        RED,
                        "equal-label vertices {u},{v} must be red-adjacent"
                    );
                }
            }
            return Ok(Witness::new(
                Pattern::Clique { s },
                clique.to_vec(),
                Some(RED),
            ));
        }
    }

    Err(EsFailure::NoWitness {
        s,
        n,
        n_vertices: count,
        threshold: (s - 1) * (n - 1) + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::{validate_witness, Host};
    use rand::SeedableRng;

    #[test]
    fn all_red_gives_red_clique() {
        let c = EdgeColoring::uniform(5, 2, RED).unwrap();
        let w = erdos_szekeres_extract(&c, 3, 3).unwrap();
        assert_eq!(w.pattern, Pattern::Clique { s: 3 });
        assert_eq!(w.vertices, vec![0, 1, 2]);
        assert!(validate_witness(Host::Coloring(&c), &w).unwrap());
    }

    #[test]
    fn all_blue_gives_blue_path() {
        let c = EdgeColoring::uniform(5, 2, BLUE).unwrap();
        let w = erdos_szekeres_extract(&c, 3, 3).unwrap();
        assert_eq!(w.pattern, Pattern::MonotonePath { n: 3 });
        assert_eq!(w.vertices, vec![0, 1, 2]);
        assert!(validate_witness(Host::Coloring(&c), &w).unwrap());
    }

    #[test]
    fn below_threshold_can_fail() {
        // On K_2 with one red edge, asking for a red triangle or a blue
        // 2-path must fail: threshold is (3-1)(2-1)+1 = 3 > 2.
        let c = EdgeColoring::uniform(2, 2, RED).unwrap();
        let err = erdos_szekeres_extract(&c, 3, 2).unwrap_err();
        assert!(matches!(err, EsFailure::NoWitness { threshold: 3, .. }));
    }

    #[test]
    fn random_colorings_at_threshold_always_extract() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let c = EdgeColoring::random(9, 2, &mut rng).unwrap();
            let w = erdos_szekeres_extract(&c, 3, 5).expect("threshold met");
            assert!(validate_witness(Host::Coloring(&c), &w).unwrap());
        }
    }
}
