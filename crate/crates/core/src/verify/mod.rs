//! The acceptance suite: eleven numbered criteria, each runnable on its own
//! and all exposed to the CLI `selftest` subcommand. The `oracles` module
//! holds the independent brute-force checkers the criteria compare against.

pub mod oracles;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{
    blowup_construction, check_chain_inequality, eval_bound, kst_edge_bound_exceeded,
    kst_min_part_size, pentagon_base, BoundFormula, RamseyTable,
};
use crate::coloring::{all_pairs, EdgeColoring, BLUE, RED};
use crate::exact::{export_cnf, find_avoiding_coloring, ordered_ramsey_number, AvoidanceInstance, RamseyNumber};
use crate::extractors::{
    erdos_szekeres_extract, pipeline_path_vs_clique, select_decreasing_positions,
    PipelineOutcome, PipelineParams,
};
use crate::finders::{find_chain, find_ordered_embedding, ChainSearchMode, SearchBudget};
use crate::graph::OrderedGraph;
use crate::pattern::Pattern;
use crate::tournament::{
    find_directed_path_power, validate_directed_witness, Tournament,
};
use crate::witness::{validate_witness, Host};
use crate::ChainParams;

/// One pass/fail line of the acceptance suite.
#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "{} criterion {:2} ({}): {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail
        )
    }
}

pub const CRITERIA: [(usize, &str, fn() -> CriterionOutcome); 11] = [
    (1, "erdos-szekeres exactness", criterion_1),
    (2, "es extractor totality", criterion_2),
    (3, "position selection suite", criterion_3),
    (4, "chain oracle equivalence", criterion_4),
    (5, "kst soundness", criterion_5),
    (6, "chain inequality sweep", criterion_6),
    (7, "cnf cross-validation", criterion_7),
    (8, "bound evaluator", criterion_8),
    (9, "blow-up certification", criterion_9),
    (10, "pipeline validity", criterion_10),
    (11, "tournament suite", criterion_11),
];

pub fn run_all() -> Vec<CriterionOutcome> {
    CRITERIA.iter().map(|&(_, _, f)| f()).collect()
}

pub fn run(id: usize) -> Option<CriterionOutcome> {
    CRITERIA
        .iter()
        .find(|&&(cid, _, _)| cid == id)
        .map(|&(_, _, f)| f())
}

fn outcome(id: usize, name: &'static str, pass: bool, detail: String) -> CriterionOutcome {
    CriterionOutcome {
        id,
        name,
        pass,
        detail,
    }
}

fn budget() -> SearchBudget {
    SearchBudget::default()
}

/// Exact ordered Ramsey numbers match `(s-1)(n-1)+1` for small clique/path
/// instances, with certificate colorings verified by the finders.
pub fn criterion_1() -> CriterionOutcome {
    let cases = [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4)];
    let mut lines = Vec::new();
    for (s, n) in cases {
        let expected = (s - 1) * (n - 1) + 1;
        let red = Pattern::Clique { s };
        let blue = Pattern::MonotonePath { n };
        let got = match ordered_ramsey_number(&red, &blue, expected + 1, &budget()) {
            Ok(RamseyNumber::Exact { value, certificate }) => {
                for (color, pat) in [(RED, &red), (BLUE, &blue)] {
                    let run =
                        find_ordered_embedding(Host::Coloring(&certificate), Some(color), pat, &budget())
                            .expect("valid query");
                    if !run.outcome.is_absent() {
                        return outcome(
                            1,
                            "erdos-szekeres exactness",
                            false,
                            format!("certificate for (s={s}, n={n}) contains a forbidden copy"),
                        );
                    }
                }
                value
            }
            other => {
                return outcome(
                    1,
                    "erdos-szekeres exactness",
                    false,
                    format!("(s={s}, n={n}): unexpected result {other:?}"),
                )
            }
        };
        if got != expected {
            return outcome(
                1,
                "erdos-szekeres exactness",
                false,
                format!("(s={s}, n={n}): got {got}, expected {expected}"),
            );
        }
        lines.push(format!("R<(K{s},P{n})={got}"));
    }
    outcome(1, "erdos-szekeres exactness", true, lines.join(" "))
}

/// The ES extractor never fails at the threshold: exhaustive over all
/// 2-colorings of K_5 for (3,3), and 10^4 random colorings of K_9 for
/// (3,5), all witnesses validated.
pub fn criterion_2() -> CriterionOutcome {
    // Exhaustive: 2^10 colorings of K_5.
    let pairs = all_pairs(5);
    for mask in 0u32..(1 << 10) {
        let mut c = EdgeColoring::new(5, 2).expect("valid");
        for (i, &(u, v)) in pairs.iter().enumerate() {
            c.set_color(u, v, (mask >> i & 1) as usize).expect("valid");
        }
        match erdos_szekeres_extract(&c, 3, 3) {
            Ok(w) => {
                if !validate_witness(Host::Coloring(&c), &w).unwrap_or(false) {
                    return outcome(2, "es extractor totality", false, format!("invalid witness at mask {mask}"));
                }
            }
            Err(e) => {
                return outcome(2, "es extractor totality", false, format!("failed at mask {mask}: {e}"));
            }
        }
    }
    // Random: 10^4 colorings of K_9 for (3,5); threshold is (3-1)(5-1)+1 = 9.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for trial in 0..10_000 {
        let c = EdgeColoring::random(9, 2, &mut rng).expect("valid");
        match erdos_szekeres_extract(&c, 3, 5) {
            Ok(w) => {
                if !validate_witness(Host::Coloring(&c), &w).unwrap_or(false) {
                    return outcome(2, "es extractor totality", false, format!("invalid witness at trial {trial}"));
                }
            }
            Err(e) => {
                return outcome(2, "es extractor totality", false, format!("failed at trial {trial}: {e}"));
            }
        }
    }
    outcome(
        2,
        "es extractor totality",
        true,
        "1024 exhaustive K5 colorings + 10000 random K9 colorings, zero failures".into(),
    )
}

/// Position selection: 10^4 random instances satisfy every inequality;
/// 10^3 instances with at most 12 positions agree with brute force.
pub fn criterion_3() -> CriterionOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for trial in 0..10_000 {
        let s = rng.gen_range(2..=6usize);
        let n = rng.gen_range(1..=8usize);
        let total = s * n;
        let fns: Vec<Vec<usize>> = (0..s - 1)
            .map(|_| (0..total).map(|_| rng.gen_range(1..=n)).collect())
            .collect();
        match select_decreasing_positions(&fns, total, n) {
            Ok(picks) => {
                let ok = picks.windows(2).all(|w| w[0] < w[1])
                    && (0..s - 1).all(|i| fns[i][picks[i]] >= fns[i][picks[i + 1]]);
                if !ok {
                    return outcome(3, "position selection suite", false, format!("inequality violated at trial {trial}"));
                }
            }
            Err(e) => {
                return outcome(3, "position selection suite", false, format!("selection failed at trial {trial}: {e}"));
            }
        }
    }
    let mut agree = 0;
    for trial in 0..1_000 {
        let s = rng.gen_range(2..=4usize);
        let n = rng.gen_range(1..=(12 / s).max(1));
        let total = s * n; // <= 12
        let fns: Vec<Vec<usize>> = (0..s - 1)
            .map(|_| (0..total).map(|_| rng.gen_range(1..=n)).collect())
            .collect();
        let brute = oracles::positions_feasible_brute(&fns, total);
        let constructive = select_decreasing_positions(&fns, total, n);
        match (brute, constructive) {
            (Some(_), Ok(_)) => agree += 1,
            (b, c) => {
                return outcome(
                    3,
                    "position selection suite",
                    false,
                    format!("disagreement at trial {trial}: brute {b:?} vs constructive {c:?}"),
                )
            }
        }
    }
    outcome(
        3,
        "position selection suite",
        true,
        format!("10000 random instances valid; brute-force agreement on {agree}/1000"),
    )
}

/// Oracle-mode chain search agrees with definitional enumeration on
/// existence: exhaustively for all graphs on up to 6 vertices, sampled for
/// 10^3 graphs on up to 9 vertices (t = 2, a_min = 2, k <= 2).
pub fn criterion_4() -> CriterionOutcome {
    let params = ChainParams::new(2, 2, 2).expect("valid");
    let mut checked = 0u64;
    for n in 1..=6usize {
        let n_pairs = n * (n - 1) / 2;
        let pairs = all_pairs(n);
        for mask in 0u32..(1u32 << n_pairs) {
            let mut g = OrderedGraph::new(n);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(u, v).expect("valid");
                }
            }
            for k in 1..=2usize {
                let brute = oracles::chain_exists_definitional(&g, 2, 2, k);
                let search = find_chain(&g, &params, k, ChainSearchMode::ExhaustiveA, &budget());
                let found = match search.outcome {
                    crate::finders::SearchOutcome::Found(_) => true,
                    crate::finders::SearchOutcome::Absent => false,
                    crate::finders::SearchOutcome::Indeterminate => {
                        return outcome(4, "chain oracle equivalence", false, format!("budget ran out on n={n} mask={mask}"));
                    }
                };
                if brute != found {
                    return outcome(
                        4,
                        "chain oracle equivalence",
                        false,
                        format!("n={n} mask={mask} k={k}: oracle {brute} vs search {found}"),
                    );
                }
                checked += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    for trial in 0..1_000 {
        let n = rng.gen_range(7..=9usize);
        let p = [0.3, 0.5, 0.8][rng.gen_range(0..3)];
        let mut g = OrderedGraph::new(n);
        for (u, v) in all_pairs(n) {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("valid");
            }
        }
        let k = rng.gen_range(1..=2usize);
        let brute = oracles::chain_exists_definitional(&g, 2, 2, k);
        let found = find_chain(&g, &params, k, ChainSearchMode::ExhaustiveA, &budget())
            .outcome
            .is_found();
        if brute != found {
            return outcome(
                4,
                "chain oracle equivalence",
                false,
                format!("trial {trial} (n={n}, k={k}): oracle {brute} vs search {found}"),
            );
        }
        checked += 1;
    }
    outcome(
        4,
        "chain oracle equivalence",
        true,
        format!("{checked} instances agree (exhaustive n<=6 plus 1000 sampled n<=9)"),
    )
}

/// KST soundness: for t = 2 and every m <= 6, the exhaustive Zarankiewicz
/// maximum stays within the bound (so exceeding the bound forces K_{2,2}),
/// and the derived minimal part size at lambda = 1/2 is 7.
pub fn criterion_5() -> CriterionOutcome {
    for m in 2..=6usize {
        let z = oracles::zarankiewicz_max_edges_22(m);
        if kst_edge_bound_exceeded(2, m, z) {
            return outcome(
                5,
                "kst soundness",
                false,
                format!("K22-free maximum {z} at m={m} exceeds the bound"),
            );
        }
    }
    let m = kst_min_part_size(2, 0.5);
    if m != 7 {
        return outcome(5, "kst soundness", false, format!("kst_min_part_size(2, 1/2) = {m}, expected 7"));
    }
    outcome(
        5,
        "kst soundness",
        true,
        "z(m,m;2,2) within bound for m=2..6; kst_min_part_size(2,1/2)=7".into(),
    )
}

/// The chain-shrinking inequality holds on the whole admissible sweep
/// (4 <= l <= s <= t^2, t <= 6) and fails at s = t = l = 2 as measured.
pub fn criterion_6() -> CriterionOutcome {
    let mut holds = 0;
    for t in 2..=6u64 {
        for s in 4..=t * t {
            for l in 4..=s {
                let r = check_chain_inequality(s, t, l).expect("in range");
                if !r.holds {
                    return outcome(
                        6,
                        "chain inequality sweep",
                        false,
                        format!("fails at (s={s}, t={t}, l={l})"),
                    );
                }
                holds += 1;
            }
        }
    }
    let small = check_chain_inequality(2, 2, 2).expect("in range");
    if small.holds {
        return outcome(
            6,
            "chain inequality sweep",
            false,
            "(2,2,2) unexpectedly holds; the measured failure case is gone".into(),
        );
    }
    outcome(
        6,
        "chain inequality sweep",
        true,
        format!("{holds} admissible triples hold; (2,2,2) fails as documented"),
    )
}

/// CNF export matches the avoidance engine: for all pattern pairs from
/// {clique:3, mpath:3, mpath:4} and N <= 6, satisfiability decided by full
/// assignment enumeration equals the DFS result.
pub fn criterion_7() -> CriterionOutcome {
    let patterns = [
        Pattern::Clique { s: 3 },
        Pattern::MonotonePath { n: 3 },
        Pattern::MonotonePath { n: 4 },
    ];
    let mut checked = 0;
    for red in &patterns {
        for blue in &patterns {
            for n in 1..=6usize {
                let inst = AvoidanceInstance::new(n, red.clone(), blue.clone()).expect("valid");
                let cnf = export_cnf(&inst).expect("within cap");
                let sat = oracles::cnf_sat_by_enumeration(&cnf.to_dimacs());
                let dfs = find_avoiding_coloring(&inst, &budget());
                let found = match dfs.outcome {
                    crate::finders::SearchOutcome::Found(_) => true,
                    crate::finders::SearchOutcome::Absent => false,
                    crate::finders::SearchOutcome::Indeterminate => {
                        return outcome(7, "cnf cross-validation", false, format!("budget ran out at ({red}, {blue}, {n})"));
                    }
                };
                if sat != found {
                    return outcome(
                        7,
                        "cnf cross-validation",
                        false,
                        format!("({red}, {blue}, N={n}): CNF sat {sat} vs DFS {found}"),
                    );
                }
                checked += 1;
            }
        }
    }
    outcome(
        7,
        "cnf cross-validation",
        true,
        format!("{checked} instances agree across 9 pattern pairs, N <= 6"),
    )
}

/// Bound evaluation is exact: the 234-digit spot value, exact doubling of
/// the n-linear formulas, the precise scaling laws of the exponent
/// formulas, and agreement with an independent rational evaluation.
pub fn criterion_8() -> CriterionOutcome {
    use num_bigint::BigUint;
    let spot = eval_bound(&BoundFormula::Thm13Internal { s: 2, t: 2, n: 1 }).expect("valid");
    let digits = spot.value.to_string().len();
    if digits != 234 {
        return outcome(8, "bound evaluator", false, format!("thm13(2,2,1) has {digits} digits, expected 234"));
    }
    for m in [1u64, 2, 5, 9] {
        for (tag, make) in [
            ("thm13", (|n| BoundFormula::Thm13Internal { s: 3, t: 2, n }) as fn(u64) -> BoundFormula),
            ("gjs", |n| BoundFormula::GjsPrior { s: 2, t: 2, n }),
            ("remark", |n| BoundFormula::Remark { s: 2, t: 1, n }),
        ] {
            let once = eval_bound(&make(m)).expect("valid").value;
            let twice = eval_bound(&make(2 * m)).expect("valid").value;
            if twice != &once * 2u32 {
                return outcome(8, "bound evaluator", false, format!("{tag} does not double at n={m}"));
            }
        }
        // Exponent formulas scale by exact powers of two instead.
        let t11 = |n| eval_bound(&BoundFormula::Thm11 { c: 3, eps_num: 1, eps_den: 1, n }).unwrap().value;
        if t11(2 * m) != t11(m) * BigUint::from(32u32) {
            return outcome(8, "bound evaluator", false, format!("thm11 scaling wrong at n={m}"));
        }
        let t12 = |n| eval_bound(&BoundFormula::Thm12 { c: 2, t: 2, n }).unwrap().value;
        if t12(2 * m) != t12(m) * BigUint::from(16u32) {
            return outcome(8, "bound evaluator", false, format!("thm12 scaling wrong at n={m}"));
        }
    }
    // Independent rational route for the spot value: 6^300 * 2 via i128-free
    // repeated multiplication over a num-rational value.
    use num_rational::BigRational;
    use num_traits::One;
    let mut rational = BigRational::one();
    for _ in 0..300 {
        rational *= BigRational::from_integer(6.into());
    }
    rational *= BigRational::from_integer(2.into());
    if rational.to_integer().magnitude() != &spot.value {
        return outcome(8, "bound evaluator", false, "rational re-evaluation disagrees".into());
    }
    outcome(
        8,
        "bound evaluator",
        true,
        "234-digit spot value; linear formulas double; exponent formulas scale exactly".into(),
    )
}

/// Blow-up lower-bound constructions on exact Ramsey-table bases are
/// certified by exhaustive finders: no red path power, no blue clique.
///
/// Intra-red blow-ups of bases with red edges can still host long red path
/// powers drifting along red-adjacent blocks (the finders demonstrate this
/// on a pentagon base), so the certified sets below use edge-free or
/// intra-blue red classes.
pub fn criterion_9() -> CriterionOutcome {
    let certify = |tag: &str, coloring: &EdgeColoring, n: usize, t: usize, s: usize| -> Option<String> {
        let checks = [
            (RED, Pattern::PathPower { n, t }),
            (BLUE, Pattern::Clique { s }),
        ];
        for (color, pat) in &checks {
            let run = find_ordered_embedding(Host::Coloring(coloring), Some(*color), pat, &budget())
                .expect("valid");
            if !run.outcome.is_absent() {
                return Some(format!("{tag}: blow-up contains {pat} in color {color}"));
            }
        }
        None
    };

    // Set 1 (t=1, s=3, n=4): all-blue base on R(2,3)-1 = 2 vertices with
    // red blocks of size n-1 = 3: red monotone paths stay inside a block,
    // blue cliques take one vertex per block. Certifies R<(P4,K3) > 6,
    // matching the (s-1)(n-1) lower side of the exact value 7.
    let r23 = RamseyTable::get(2, 3);
    if !r23.exact || r23.value != 3u32.into() {
        return outcome(9, "blow-up certification", false, "R(2,3) missing from table".into());
    }
    let base1 = EdgeColoring::uniform(2, 2, BLUE).expect("valid");
    let blow1 = blowup_construction(&base1, 3, RED).expect("valid");
    if let Some(err) = certify("t=1 all-blue base", &blow1, 4, 1, 3) {
        return outcome(9, "blow-up certification", false, err);
    }

    // Set 2 (t=2): intra-blue blow-up of the red-pentagon coloring of
    // R(3,3)-1 = 5 vertices. A red P_3^2 is a red triangle, which would
    // project to a red triangle of C_5; a blue K_5 would need a blue
    // triangle of blocks. Certifies R<(P3^2,K5) > 10.
    let r33 = RamseyTable::get(3, 3);
    if !r33.exact || r33.value != 6u32.into() {
        return outcome(9, "blow-up certification", false, "R(3,3) missing from table".into());
    }
    let base2 = pentagon_base();
    for color in [RED, BLUE] {
        if oracles::embedding_exists_brute_colored(&base2, color, &Pattern::Clique { s: 3 }) {
            return outcome(9, "blow-up certification", false, "pentagon base has a monochromatic triangle".into());
        }
    }
    let blow2 = blowup_construction(&base2, 2, BLUE).expect("valid");
    if let Some(err) = certify("t=2 pentagon base", &blow2, 3, 2, 5) {
        return outcome(9, "blow-up certification", false, err);
    }

    // Set 3 (t=2, s=3): all-blue base again, red blocks of size 4: the red
    // class is two disjoint K_4's, so red path powers stop at 4 vertices.
    // Certifies R<(P5^2,K3) > 8.
    let base3 = EdgeColoring::uniform(2, 2, BLUE).expect("valid");
    let blow3 = blowup_construction(&base3, 4, RED).expect("valid");
    if let Some(err) = certify("t=2 all-blue base", &blow3, 5, 2, 3) {
        return outcome(9, "blow-up certification", false, err);
    }

    outcome(
        9,
        "blow-up certification",
        true,
        "certified: R<(P4,K3) > 6, R<(P3^2,K5) > 10, R<(P5^2,K3) > 8".into(),
    )
}

/// Every pipeline output on random dense hosts validates; contradiction
/// certificates embed strictly longer path powers than the recorded value.
pub fn criterion_10() -> CriterionOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
    let configs = [
        // (s, t, n, block_size, a_min, edge probability)
        (2usize, 2usize, 6usize, 10usize, 2usize, 0.5f64),
        (2, 2, 6, 10, 2, 0.7),
        (2, 2, 6, 10, 2, 0.9),
        (3, 2, 3, 12, 2, 0.6),
        (3, 2, 3, 12, 2, 0.8),
        (4, 2, 2, 15, 1, 0.85),
    ];
    let mut counts = [0usize; 4]; // path power, independent set, certificate, failure
    for trial in 0..100 {
        let (s, t, n, block, a_min, p) = configs[trial % configs.len()];
        let nv = s * n * block;
        let mut g = OrderedGraph::new(nv);
        for (u, v) in all_pairs(nv) {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("valid");
            }
        }
        let params = PipelineParams {
            s,
            t,
            n,
            block_size: block,
            a_min,
            budget: budget(),
            seed: 1000 + trial as u64,
            retries: 10,
        };
        match pipeline_path_vs_clique(&g, &params) {
            Ok(PipelineOutcome::PathPower(w)) => {
                let ok = w.pattern == Pattern::PathPower { n, t }
                    && validate_witness(Host::Graph(&g), &w).unwrap_or(false);
                if !ok {
                    return outcome(10, "pipeline validity", false, format!("trial {trial}: invalid path power"));
                }
                counts[0] += 1;
            }
            Ok(PipelineOutcome::IndependentSet(w)) => {
                let ok = w.vertices.len() == s
                    && validate_witness(Host::Graph(&g.complement()), &w).unwrap_or(false);
                if !ok {
                    return outcome(10, "pipeline validity", false, format!("trial {trial}: invalid independent set"));
                }
                counts[1] += 1;
            }
            Ok(PipelineOutcome::Contradiction(cert)) => {
                let ok = validate_witness(Host::Graph(&g), &cert.witness).unwrap_or(false)
                    && cert.witness.vertices.len() > cert.f_i_at_ai;
                if !ok {
                    return outcome(10, "pipeline validity", false, format!("trial {trial}: invalid certificate"));
                }
                counts[2] += 1;
            }
            Err(_) => counts[3] += 1,
        }
    }
    let produced = counts[0] + counts[1] + counts[2];
    if produced < 80 {
        return outcome(
            10,
            "pipeline validity",
            false,
            format!("only {produced}/100 runs produced an output (the suite would be vacuous)"),
        );
    }
    outcome(
        10,
        "pipeline validity",
        true,
        format!(
            "100 runs: {} path powers, {} independent sets, {} certificates, {} structured failures; all outputs validated",
            counts[0], counts[1], counts[2], counts[3]
        ),
    )
}

/// Tournament reduction: transitive hosts recover full-length directed
/// path powers; 10^3 random 2-colored tournaments on 30 vertices produce
/// only validating witnesses and satisfy reversal duality.
pub fn criterion_11() -> CriterionOutcome {
    for t in 1..=3usize {
        for n in (t + 1)..=20 {
            let host = Tournament::transitive(n);
            let chi = EdgeColoring::new(n, 1).expect("valid");
            let r = find_directed_path_power(&host, &chi, t, n).expect("valid");
            if r.achieved != n {
                return outcome(
                    11,
                    "tournament suite",
                    false,
                    format!("transitive n={n}, t={t}: achieved {}", r.achieved),
                );
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0011);
    for trial in 0..1_000 {
        let n = 30;
        let mut host = Tournament::transitive(n);
        let mut chi = EdgeColoring::new(n, 2).expect("valid");
        for (u, v) in all_pairs(n) {
            host.orient(u, v, rng.gen_bool(0.5)).expect("valid");
            chi.set_color(u, v, rng.gen_range(0..2)).expect("valid");
        }
        let fwd = find_directed_path_power(&host, &chi, 2, n).expect("valid");
        let Some(w) = &fwd.witness else {
            return outcome(11, "tournament suite", false, format!("trial {trial}: no witness at all"));
        };
        if !validate_directed_witness(&host, &chi, w).unwrap_or(false) {
            return outcome(11, "tournament suite", false, format!("trial {trial}: witness does not validate"));
        }
        let bwd = find_directed_path_power(&host.reversed(), &chi, 2, n).expect("valid");
        for c in 0..chi.n_colors() {
            if fwd.class_lengths[2 * c] != bwd.class_lengths[2 * c + 1]
                || fwd.class_lengths[2 * c + 1] != bwd.class_lengths[2 * c]
            {
                return outcome(11, "tournament suite", false, format!("trial {trial}: reversal duality broken"));
            }
        }
    }
    outcome(
        11,
        "tournament suite",
        true,
        "transitive full recovery for t=1..3, n<=20; 1000 random tournaments validate with duality".into(),
    )
}
