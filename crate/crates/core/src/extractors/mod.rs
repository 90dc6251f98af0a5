//! Constructive procedures that follow the proofs step by step.
//!
//! Each extractor either returns a witness that has already passed its
//! validator, or a structured failure naming the hypothesis that could not
//! be met at the given (desk) scale. Extractors never certify anything by a
//! truncated search: budget exhaustion surfaces as its own failure kind.

mod chain_recursive;
mod clique_pair;
mod erdos_szekeres;
mod pipeline;
mod positions;
mod qgraph_ramsey;

pub use chain_recursive::{chain_extract_recursive, ChainExtractFailure, ChainThresholds};
pub use clique_pair::{
    clique_pair_across_parts, sample_clique_pair, CliquePair, CliquePairOutcome, PairSource,
    PartsFailure, PartsPair,
};
pub use erdos_szekeres::{erdos_szekeres_extract, EsFailure};
pub use pipeline::{
    build_f_table, pipeline_path_vs_clique, remark_pipeline, ContradictionCertificate, FTable,
    PipelineFailure, PipelineOutcome, PipelineParams, RemarkParams,
};
pub use positions::select_decreasing_positions;
pub use qgraph_ramsey::{lambda_from_epsilon, q_ramsey_extract, QExtractFailure, QExtractParams};
