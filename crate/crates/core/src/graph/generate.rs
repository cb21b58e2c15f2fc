//! Seeded random graph generation.

use std::ops::RangeInclusive;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{AdapterGraph, AdapterSpec, GraphError, Interface};
use crate::algebra::{DependencyMatrix, Requirement};

#[derive(Debug, Clone, PartialEq)]
pub struct RandomGraphParams {
    pub interfaces: usize,
    /// Real methods per interface, drawn uniformly from this range.
    pub methods: RangeInclusive<usize>,
    pub adapters: usize,
    /// Probability that a real row includes a given source method.
    pub density: f64,
    /// Probability that a real row is never implementable.
    pub never_rate: f64,
    pub seed: u64,
}

impl RandomGraphParams {
    fn validate(&self) -> Result<(), GraphError> {
        let invalid = |msg: String| Err(GraphError::InvalidParameter(msg));
        if self.interfaces == 0 {
            return invalid("at least one interface is required".into());
        }
        if self.methods.is_empty() {
            return invalid(format!(
                "empty method range {}..={}",
                self.methods.start(),
                self.methods.end()
            ));
        }
        if *self.methods.end() >= crate::algebra::MAX_DIM {
            return invalid(format!("method count {} too large", self.methods.end()));
        }
        for (name, value) in [("density", self.density), ("never_rate", self.never_rate)] {
            if !(0.0..=1.0).contains(&value) {
                return invalid(format!("{name} must lie in [0, 1], got {value}"));
            }
        }
        Ok(())
    }
}

/// Draws a canonical dependency matrix. Each real row is never implementable
/// with probability `never_rate`; otherwise each real source method is
/// required independently with probability `density` (possibly none, which
/// makes the row always implementable).
pub fn random_matrix<R: Rng + ?Sized>(
    rng: &mut R,
    source_dim: usize,
    target_dim: usize,
    density: f64,
    never_rate: f64,
) -> DependencyMatrix {
    let requirements: Vec<Requirement> = (1..target_dim)
        .map(|_| {
            if rng.gen_bool(never_rate) {
                return Requirement::Never;
            }
            let slots: Vec<usize> = (1..source_dim).filter(|_| rng.gen_bool(density)).collect();
            if slots.is_empty() {
                Requirement::Always
            } else {
                Requirement::Requires(slots)
            }
        })
        .collect();
    DependencyMatrix::from_requirements(source_dim, &requirements)
        .expect("generated requirements are canonical")
}

fn padded(prefix: &str, index: usize, count: usize) -> String {
    let width = count.saturating_sub(1).to_string().len();
    format!("{prefix}{index:0width$}")
}

/// Deterministic random graph. Interfaces are `I0, I1, ...` with methods
/// `m0, m1, ...`; adapters `A0, A1, ...` join uniformly drawn ordered pairs
/// of distinct interfaces (self-loops only when there is a single interface).
pub fn gen_random_graph(params: &RandomGraphParams) -> Result<AdapterGraph, GraphError> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let n = params.interfaces;

    let interfaces: Vec<Interface> = (0..n)
        .map(|i| {
            let count = rng.gen_range(params.methods.clone());
            Interface::new(
                padded("I", i, n),
                (0..count).map(|k| format!("m{k}")).collect(),
            )
        })
        .collect();

    let adapters = (0..params.adapters)
        .map(|a| {
            let (source, target) = if n == 1 {
                (0, 0)
            } else {
                let source = rng.gen_range(0..n);
                let mut target = rng.gen_range(0..n - 1);
                if target >= source {
                    target += 1;
                }
                (source, target)
            };
            let matrix = random_matrix(
                &mut rng,
                interfaces[source].dim(),
                interfaces[target].dim(),
                params.density,
                params.never_rate,
            );
            AdapterSpec {
                name: padded("A", a, params.adapters),
                source: interfaces[source].name().to_string(),
                target: interfaces[target].name().to_string(),
                matrix,
            }
        })
        .collect();

    AdapterGraph::new(interfaces, adapters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::serialize_graph;

    fn params(seed: u64) -> RandomGraphParams {
        RandomGraphParams {
            interfaces: 5,
            methods: 0..=4,
            adapters: 9,
            density: 0.4,
            never_rate: 0.2,
            seed,
        }
    }

    #[test]
    fn same_seed_same_graph() {
        let a = gen_random_graph(&params(42)).unwrap();
        let b = gen_random_graph(&params(42)).unwrap();
        assert_eq!(a, b);
        assert_eq!(serialize_graph(&a), serialize_graph(&b));
        assert_ne!(
            serialize_graph(&a),
            serialize_graph(&gen_random_graph(&params(43)).unwrap())
        );
    }

    #[test]
    fn degenerate_parameters() {
        let always = gen_random_graph(&RandomGraphParams {
            density: 0.0,
            never_rate: 0.0,
            ..params(1)
        })
        .unwrap();
        for a in always.adapters() {
            for row in 1..a.matrix().rows() {
                assert_eq!(a.matrix().requirement(row), Requirement::Always);
            }
        }
        let never = gen_random_graph(&RandomGraphParams {
            density: 1.0,
            never_rate: 1.0,
            ..params(1)
        })
        .unwrap();
        for a in never.adapters() {
            for row in 1..a.matrix().rows() {
                assert_eq!(a.matrix().requirement(row), Requirement::Never);
            }
        }
    }

    #[test]
    fn endpoints_are_distinct_unless_single_interface() {
        let g = gen_random_graph(&RandomGraphParams {
            adapters: 50,
            ..params(7)
        })
        .unwrap();
        assert!(g.adapters().iter().all(|a| a.source() != a.target()));
        let single = gen_random_graph(&RandomGraphParams {
            interfaces: 1,
            ..params(7)
        })
        .unwrap();
        assert!(single.adapters().iter().all(|a| a.source() == a.target()));
    }

    #[test]
    fn invalid_parameters_rejected() {
        for bad in [
            RandomGraphParams {
                interfaces: 0,
                ..params(0)
            },
            RandomGraphParams {
                density: 1.5,
                ..params(0)
            },
            RandomGraphParams {
                never_rate: -0.1,
                ..params(0)
            },
            RandomGraphParams {
                methods: std::ops::RangeInclusive::new(3, 2),
                ..params(0)
            },
        ] {
            assert!(matches!(
                gen_random_graph(&bad),
                Err(GraphError::InvalidParameter(_))
            ));
        }
    }
}
