//! Optimal adapter-chain search.
//!
//! Chains are grown backwards from the target interface, cheapest first.
//! Prepending an adapter can never make more target methods available, so
//! the first chain popped whose first adapter starts at a wanted source is
//! optimal among node-simple chains. Ties are broken by fewer adapters, then
//! by the lexicographically smaller adapter-name sequence.

mod chain;
mod greedy;
mod oracle;

pub use chain::{loss, weight, Chain, WeightAssignment};
pub use greedy::{
    decide_chain, greedy_chain, greedy_chain_observed, greedy_chain_weighted,
    greedy_chain_weighted_observed,
};
pub use oracle::{
    enumerate_chains, oracle_best_chain, oracle_best_weighted, MAX_ORACLE_ADAPTERS,
    MAX_ORACLE_INTERFACES,
};

use num_rational::BigRational;
use thiserror::Error;

use crate::algebra::AvailabilityVector;
use crate::graph::{AdapterGraph, InterfaceId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("unknown interface {0:?}")]
    UnknownInterface(String),
    #[error("unknown adapter {0:?}")]
    UnknownAdapter(String),
    #[error("no source interfaces given")]
    EmptySources,
    #[error("a chain needs at least one adapter")]
    EmptyChain,
    #[error("adapter {next:?} starts at {next_source:?} but {prev:?} ends at {prev_target:?}")]
    BrokenLink {
        position: usize,
        prev: String,
        prev_target: String,
        next: String,
        next_source: String,
    },
    #[error("chain visits interface {0:?} twice")]
    Cyclic(String),
    #[error("weight for method {method:?} is negative")]
    NegativeWeight { method: String },
    #[error("interface {interface:?} has no method {method:?}")]
    UnknownMethod { interface: String, method: String },
    #[error("weights are defined over {expected:?} but the chain ends at {found:?}")]
    WeightInterfaceMismatch { expected: String, found: String },
    #[error("graph too large for exhaustive search: {what} {found} exceeds {limit}")]
    GuardExceeded {
        what: &'static str,
        found: usize,
        limit: usize,
    },
}

/// How good a chain is: loss (lower is better, dummy counted) or
/// summed weight of available target methods (higher is better).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Score {
    Loss(usize),
    Weight(BigRational),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoundChain {
    pub source: InterfaceId,
    pub chain: Chain,
    pub availability: AvailabilityVector,
    pub score: Score,
}

impl FoundChain {
    /// Unavailable real target methods (the dummy is not counted).
    pub fn methods_lost(&self) -> usize {
        self.availability.dim() - 1 - self.availability.norm()
    }

    /// Names of the available target methods, in interface order.
    pub fn available_methods<'g>(&self, graph: &'g AdapterGraph) -> Vec<&'g str> {
        let target = graph.interface(self.chain.target());
        self.availability
            .available()
            .filter_map(|slot| target.method_at(slot))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(FoundChain),
    NoChain,
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&FoundChain> {
        match self {
            SearchOutcome::Found(found) => Some(found),
            SearchOutcome::NoChain => None,
        }
    }

    pub fn into_found(self) -> Option<FoundChain> {
        match self {
            SearchOutcome::Found(found) => Some(found),
            SearchOutcome::NoChain => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

pub(crate) fn resolve_interface(
    graph: &AdapterGraph,
    name: &str,
) -> Result<InterfaceId, SearchError> {
    graph
        .interface_id(name)
        .ok_or_else(|| SearchError::UnknownInterface(name.to_string()))
}
