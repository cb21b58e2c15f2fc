//! Matrix calculus for chaining lossy interface adapters.
//!
//! * [`algebra`]: dependency matrices, availability vectors and the
//!   apply/compose operators.
//! * [`graph`]: interface-adapter graphs, their JSON file format and a seeded
//!   random generator.
//! * [`search`]: optimal chain search (loss-ordered and weighted best-first
//!   expansion) plus an exhaustive oracle.
//! * [`sat`]: the 3-SAT to chain-selection reduction, DIMACS input and a
//!   brute-force SAT checker.

pub mod algebra;
pub mod fixtures;
pub mod graph;
pub mod sat;
pub mod search;
