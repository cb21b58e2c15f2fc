// Shared instance generators for the integration suites. Not every test
// binary uses every helper.
#![allow(dead_code)]

use adapter_chain::algebra::{AvailabilityVector, DependencyMatrix};
use adapter_chain::graph::{gen_random_graph, random_matrix, AdapterGraph, RandomGraphParams};
use adapter_chain::sat::CnfFormula;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small graph with up to 6 interfaces, 5 methods each and 10 adapters.
/// Shape and probabilities are drawn from `seed` too.
pub fn small_graph(seed: u64) -> AdapterGraph {
    let mut r = rng(seed ^ 0x5eed_9a9e);
    let lo = r.gen_range(0..=5);
    let hi = r.gen_range(lo..=5);
    let params = RandomGraphParams {
        interfaces: r.gen_range(1..=6),
        methods: lo..=hi,
        adapters: r.gen_range(0..=10),
        density: r.gen_range(0.1..0.8),
        never_rate: r.gen_range(0.0..0.3),
        seed,
    };
    gen_random_graph(&params).expect("parameters are in range")
}

pub fn matrix(r: &mut ChaCha8Rng, rows: usize, cols: usize) -> DependencyMatrix {
    let density = r.gen_range(0.0..0.6);
    let never = r.gen_range(0.0..0.3);
    random_matrix(r, cols, rows, density, never)
}

pub fn vector(r: &mut ChaCha8Rng, dim: usize) -> AvailabilityVector {
    let mut bits = vec![false; dim];
    for b in bits.iter_mut().skip(1) {
        *b = r.gen_bool(0.6);
    }
    AvailabilityVector::from_bools(&bits).expect("dummy is false")
}

pub fn formula(r: &mut ChaCha8Rng, max_vars: usize, max_clauses: usize) -> CnfFormula {
    padded_formula(r, max_vars, max_clauses, 3)
}

/// Clauses of 1 to `max_width` random literals, padded to three by repeating
/// the last one. Narrow clauses make unsatisfiable formulas common.
pub fn padded_formula(
    r: &mut ChaCha8Rng,
    max_vars: usize,
    max_clauses: usize,
    max_width: usize,
) -> CnfFormula {
    let v = r.gen_range(1..=max_vars);
    let c = r.gen_range(1..=max_clauses);
    let clauses = (0..c)
        .map(|_| {
            let width = r.gen_range(1..=max_width);
            let mut clause = [0i32; 3];
            for k in 0..3 {
                clause[k] = if k < width {
                    let var = r.gen_range(1..=v as i32);
                    if r.gen_bool(0.5) {
                        var
                    } else {
                        -var
                    }
                } else {
                    clause[k - 1]
                };
            }
            clause
        })
        .collect();
    CnfFormula::new(v, clauses).expect("literals are in range")
}

pub fn interface_names(g: &AdapterGraph) -> Vec<String> {
    g.interfaces()
        .iter()
        .map(|i| i.name().to_string())
        .collect()
}
