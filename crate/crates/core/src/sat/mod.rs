//! 3-SAT to chain-selection reduction.
//!
//! [`reduce_to_chain`] turns a 3-CNF formula into an adapter graph in which
//! the best chain from `S` to `T` makes all clause methods available iff the
//! formula is satisfiable. [`solve_sat_via_chain`] runs the greedy search on
//! that graph and reads the assignment back off the chosen adapters;
//! [`brute_force_sat`] is the independent check.

mod dimacs;
mod reduction;
mod solve;

pub use dimacs::parse_dimacs;
pub use reduction::{reduce_to_chain, ReductionOutput, Sidecar};
pub use solve::{
    brute_force_sat, solve_sat_via_chain, SatOutcome, MAX_BRUTE_FORCE_VARS, MAX_CHAIN_SEARCH_SPACE,
};

use std::fmt;

use thiserror::Error;

use crate::search::SearchError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("formula needs at least one variable")]
    NoVariables,
    #[error("formula needs at least one clause")]
    NoClauses,
    #[error("clause {clause}: literal {literal} out of range for {num_vars} variables")]
    LiteralOutOfRange {
        clause: usize,
        literal: i64,
        num_vars: usize,
    },
    #[error("line {line}: missing or malformed \"p cnf <vars> <clauses>\" header")]
    MalformedHeader { line: usize },
    #[error("line {line}: unexpected token {token:?}")]
    BadToken { line: usize, token: String },
    #[error("clause {clause} has {len} literals; at most 3 are accepted")]
    ClauseTooLong { clause: usize, len: usize },
    #[error("clause {clause} is empty")]
    EmptyClause { clause: usize },
    #[error("last clause is not terminated by 0")]
    UnterminatedClause,
    #[error("header declares {declared} clauses but {found} were read")]
    ClauseCountMismatch { declared: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("instance too large: {what} {found} exceeds {limit}")]
    GuardExceeded {
        what: &'static str,
        found: u128,
        limit: u128,
    },
    #[error("assignment read from the chain does not satisfy clause {clause}")]
    ExtractionMismatch { clause: usize },
}

/// A signed, 1-based variable reference: `3` is `x3`, `-3` is `!x3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal(i32);

impl Literal {
    pub fn new(value: i32) -> Option<Literal> {
        (value != 0 && value != i32::MIN).then_some(Literal(value))
    }

    /// 1-based variable index.
    pub fn var(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn value(self) -> i32 {
        self.0
    }

    /// Truth value under `assignment`, indexed by `var() - 1`.
    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var() - 1] == self.is_positive()
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "x{}", self.var())
        } else {
            write!(f, "!x{}", self.var())
        }
    }
}

/// A 3-CNF formula: every clause has exactly three literals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[i32; 3]>) -> Result<CnfFormula, CnfError> {
        if num_vars == 0 {
            return Err(CnfError::NoVariables);
        }
        if clauses.is_empty() {
            return Err(CnfError::NoClauses);
        }
        let clauses = clauses
            .into_iter()
            .enumerate()
            .map(|(idx, clause)| {
                let mut out = [Literal(1); 3];
                for (slot, raw) in clause.into_iter().enumerate() {
                    out[slot] = Literal::new(raw).filter(|l| l.var() <= num_vars).ok_or(
                        CnfError::LiteralOutOfRange {
                            clause: idx + 1,
                            literal: raw.into(),
                            num_vars,
                        },
                    )?;
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    /// Index (1-based) of the first clause `assignment` falsifies, if any.
    pub fn first_unsatisfied(&self, assignment: &[bool]) -> Option<usize> {
        assert_eq!(assignment.len(), self.num_vars, "assignment length");
        self.clauses
            .iter()
            .position(|clause| !clause.iter().any(|l| l.eval(assignment)))
            .map(|i| i + 1)
    }

    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.first_unsatisfied(assignment).is_none()
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, clause) in self.clauses.iter().enumerate() {
            if i > 0 {
                f.write_str(" & ")?;
            }
            write!(f, "({} | {} | {})", clause[0], clause[1], clause[2])?;
        }
        Ok(())
    }
}
