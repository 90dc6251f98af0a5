//! Exact searches for ordered patterns, cliques, chains and clique pairs.
//!
//! Every finder is exhaustive within its budget, and budget exhaustion is a
//! third result state: a truncated search must never masquerade as a proof
//! of absence.

mod chain_search;
mod clique;
mod embed;
mod path_power;

pub use chain_search::{find_chain, find_clique_pair_bipartite, ChainSearchMode};
pub use clique::{count_cliques, find_clique, for_each_clique};
pub use embed::find_ordered_embedding;
pub use path_power::{longest_path_power, PathPowerDp};

use serde::{Deserialize, Serialize};

/// Node cap and witness-order policy for a search.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Maximum number of search-tree nodes to expand.
    pub max_nodes: u64,
    /// When set, the finder returns the lexicographically-first witness.
    pub deterministic: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 20_000_000,
            deterministic: true,
        }
    }
}

impl SearchBudget {
    pub fn with_max_nodes(max_nodes: u64) -> Self {
        SearchBudget {
            max_nodes,
            ..Default::default()
        }
    }
}

/// Work counters reported alongside every budgeted search.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
}

/// Three-valued search result.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum SearchOutcome<T> {
    /// A witness was found.
    Found(T),
    /// The search space was exhausted: no witness exists.
    Absent,
    /// The node budget ran out before the search space was exhausted.
    Indeterminate,
}

impl<T> SearchOutcome<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, SearchOutcome::Absent)
    }

    pub fn is_indeterminate(&self) -> bool {
        matches!(self, SearchOutcome::Indeterminate)
    }

    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn expect_found(self, msg: &str) -> T {
        match self {
            SearchOutcome::Found(t) => t,
            SearchOutcome::Absent => panic!("{msg}: outcome was Absent"),
            SearchOutcome::Indeterminate => panic!("{msg}: outcome was Indeterminate"),
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(t) => SearchOutcome::Found(f(t)),
            SearchOutcome::Absent => SearchOutcome::Absent,
            SearchOutcome::Indeterminate => SearchOutcome::Indeterminate,
        }
    }
}

/// Outcome plus the work it took.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SearchRun<T> {
    pub outcome: SearchOutcome<T>,
    pub stats: SearchStats,
}

/// Internal budget accounting shared by the DFS kernels.
pub(crate) struct Ticker {
    remaining: u64,
    pub nodes: u64,
    pub prunes: u64,
}

impl Ticker {
    pub(crate) fn new(budget: &SearchBudget) -> Self {
        Ticker {
            remaining: budget.max_nodes,
            nodes: 0,
            prunes: 0,
        }
    }

    /// Consumes one node; false means the budget is spent.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.remaining == 0 {
            return false;
        }
        self.remaining -= 1;
        self.nodes += 1;
        true
    }

    pub(crate) fn stats(&self) -> SearchStats {
        SearchStats {
            nodes: self.nodes,
            prunes: self.prunes,
        }
    }
}
