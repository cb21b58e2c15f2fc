use std::collections::HashMap;

use super::{reduce_to_chain, CnfFormula, ReductionError};
use crate::search::{greedy_chain, SearchOutcome};

/// `brute_force_sat` refuses formulas with more variables than this.
pub const MAX_BRUTE_FORCE_VARS: usize = 20;

/// `solve_sat_via_chain` refuses formulas whose gadget graph has more than
/// this many complete `S -> T` chains (`2^v * 3^c`).
pub const MAX_CHAIN_SEARCH_SPACE: u128 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatOutcome {
    pub satisfiable: bool,
    /// Variable values indexed by variable - 1, present when satisfiable.
    pub assignment: Option<Vec<bool>>,
}

/// Tries all `2^v` assignments.
pub fn brute_force_sat(formula: &CnfFormula) -> Result<bool, ReductionError> {
    let v = formula.num_vars();
    if v > MAX_BRUTE_FORCE_VARS {
        return Err(ReductionError::GuardExceeded {
            what: "variables",
            found: v as u128,
            limit: MAX_BRUTE_FORCE_VARS as u128,
        });
    }
    let mut assignment = vec![false; v];
    for mask in 0u32..(1u32 << v) {
        for (bit, value) in assignment.iter_mut().enumerate() {
            *value = mask >> bit & 1 == 1;
        }
        if formula.evaluate(&assignment) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Decides satisfiability by searching the reduced graph for a chain that
/// delivers every clause method to `T`. A satisfying assignment is read off
/// the chosen literal adapters and checked against the formula.
pub fn solve_sat_via_chain(formula: &CnfFormula) -> Result<SatOutcome, ReductionError> {
    let space = 1u128
        .checked_shl(formula.num_vars() as u32)
        .and_then(|x| x.checked_mul(3u128.checked_pow(formula.clauses().len() as u32)?))
        .unwrap_or(u128::MAX);
    if space > MAX_CHAIN_SEARCH_SPACE {
        return Err(ReductionError::GuardExceeded {
            what: "chain search space",
            found: space,
            limit: MAX_CHAIN_SEARCH_SPACE,
        });
    }

    let reduced = reduce_to_chain(formula);
    let found = match greedy_chain(&reduced.graph, &reduced.source, &reduced.target)? {
        SearchOutcome::Found(found) => found,
        SearchOutcome::NoChain => unreachable!("gadget graphs always connect S to T"),
    };
    if found.availability.norm() < reduced.threshold {
        return Ok(SatOutcome {
            satisfiable: false,
            assignment: None,
        });
    }

    let mut literal_of: HashMap<&str, (usize, bool)> = HashMap::new();
    for (idx, (pos, neg)) in reduced.literal_adapters.iter().enumerate() {
        literal_of.insert(pos, (idx, true));
        literal_of.insert(neg, (idx, false));
    }
    let mut assignment = vec![false; formula.num_vars()];
    for name in found.chain.names(&reduced.graph) {
        if let Some(&(var, value)) = literal_of.get(name) {
            assignment[var] = value;
        }
    }
    if let Some(clause) = formula.first_unsatisfied(&assignment) {
        return Err(ReductionError::ExtractionMismatch { clause });
    }
    Ok(SatOutcome {
        satisfiable: true,
        assignment: Some(assignment),
    })
}
