//! Drives the pipeline into its contradiction-certificate branch on a
//! hand-built host.
//!
//! Every pipeline block carries the same gadget: a chain skeleton
//! A1 < B1 < A2 < B2 < A3 with exactly the completeness edges the chain
//! definition demands, plus edges inside A1 and A3 (so clique pairs can
//! live there) while A2 stays internally empty (so paths ending there have
//! length 1). Complete bipartite bridges run from every block's A3 to every
//! later block's A1. Paths entering a block at A1 stall before B2, so the
//! bridges raise the A1-ending lengths to 7 without unbounded growth, and
//! the f-table ends up non-monotone across functions: exactly the desk
//! situation whose impossibility at reference scale the certificate
//! renders.

use oramsey_core::extractors::{pipeline_path_vs_clique, PipelineOutcome, PipelineParams};
use oramsey_core::finders::SearchBudget;
use oramsey_core::witness::{validate_witness, Host};
use oramsey_core::{OrderedGraph, Pattern};

const BLOCK: usize = 10;

fn block_gadget_edges() -> Vec<(usize, usize)> {
    let mut edges = vec![(0, 1), (2, 3), (6, 7), (8, 9)];
    // A1 = {0,1} complete to B1 = {2,3}; B1 to A2 = {4,5}; A2 to
    // B2 = {6,7}; B2 to A3 = {8,9}. A2 has no internal edge.
    for (xs, ys) in [([0, 1], [2, 3]), ([2, 3], [4, 5]), ([4, 5], [6, 7]), ([6, 7], [8, 9])] {
        for x in xs {
            for y in ys {
                edges.push((x, y));
            }
        }
    }
    edges
}

fn build_host(blocks: usize) -> OrderedGraph {
    let mut g = OrderedGraph::new(blocks * BLOCK);
    for b in 0..blocks {
        for (u, v) in block_gadget_edges() {
            g.add_edge(b * BLOCK + u, b * BLOCK + v).unwrap();
        }
    }
    // Bridges: A3 of block a complete to A1 of block b for every a < b.
    for a in 0..blocks {
        for b in (a + 1)..blocks {
            for x in [8, 9] {
                for y in [0, 1] {
                    g.add_edge(a * BLOCK + x, b * BLOCK + y).unwrap();
                }
            }
        }
    }
    g
}

#[test]
fn crafted_host_produces_a_validating_certificate() {
    let s = 3;
    let t = 2;
    let n = 8; // above every f value (the bridged A1 endings reach 7)
    let blocks = s * n;
    let g = build_host(blocks);
    let params = PipelineParams {
        s,
        t,
        n,
        block_size: BLOCK,
        a_min: 2,
        budget: SearchBudget::default(),
        seed: 99,
        retries: 8,
    };
    match pipeline_path_vs_clique(&g, &params).expect("pipeline completes") {
        PipelineOutcome::Contradiction(cert) => {
            assert!(validate_witness(Host::Graph(&g), &cert.witness).unwrap());
            assert!(cert.witness.vertices.len() > cert.f_i_at_ai);
            assert!(cert.i < cert.j);
            assert!(cert.a_i < cert.a_j);
            // The recorded pair shows the inequality the selection forbids:
            // the table value at (j-1, a_j) exceeds the one at (i, a_i).
            assert!(cert.f_jm1_at_aj > cert.f_i_at_ai);
            assert_eq!(
                cert.witness.pattern,
                Pattern::PathPower {
                    n: cert.witness.vertices.len(),
                    t
                }
            );
        }
        other => panic!("expected a contradiction certificate, got {other:?}"),
    }
}

#[test]
fn raising_the_target_returns_the_path_power_instead() {
    // With n at most the best bridged ending length, the f-table reaches n
    // and the pipeline short-circuits to the path power.
    let s = 3;
    let t = 2;
    let n = 6;
    let g = build_host(s * n);
    let params = PipelineParams {
        s,
        t,
        n,
        block_size: BLOCK,
        a_min: 2,
        budget: SearchBudget::default(),
        seed: 99,
        retries: 8,
    };
    match pipeline_path_vs_clique(&g, &params).expect("pipeline completes") {
        PipelineOutcome::PathPower(w) => {
            assert_eq!(w.pattern, Pattern::PathPower { n, t });
            assert!(validate_witness(Host::Graph(&g), &w).unwrap());
        }
        other => panic!("expected a path power, got {other:?}"),
    }
}
