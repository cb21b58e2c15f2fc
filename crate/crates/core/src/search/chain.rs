use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::SearchError;
use crate::algebra::{AvailabilityVector, DependencyMatrix};
use crate::graph::{AdapterGraph, AdapterId, InterfaceId};

/// A node-simple sequence of consecutive-compatible adapters together with
/// the composed dependency matrix of the whole sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chain {
    source: InterfaceId,
    target: InterfaceId,
    edges: Vec<AdapterId>,
    composed: DependencyMatrix,
}

impl Chain {
    /// The empty chain at `at`: the identity adaptation.
    pub fn empty(graph: &AdapterGraph, at: InterfaceId) -> Chain {
        Chain {
            source: at,
            target: at,
            edges: Vec::new(),
            composed: DependencyMatrix::identity(graph.interface(at).dim())
                .expect("interface dims are validated"),
        }
    }

    /// Validates links and node-simplicity, then composes the matrices.
    pub fn from_adapters(graph: &AdapterGraph, edges: &[AdapterId]) -> Result<Chain, SearchError> {
        let (&first, rest) = edges.split_first().ok_or(SearchError::EmptyChain)?;
        let first_adapter = graph.adapter(first);
        let mut visited = vec![first_adapter.source()];
        let mut composed = first_adapter.matrix().clone();
        let mut prev = first;
        for (offset, &next) in std::iter::once(&first).chain(rest).enumerate() {
            let adapter = graph.adapter(next);
            if offset > 0 {
                let prev_adapter = graph.adapter(prev);
                if prev_adapter.target() != adapter.source() {
                    return Err(SearchError::BrokenLink {
                        position: offset,
                        prev: prev_adapter.name().to_string(),
                        prev_target: graph.interface(prev_adapter.target()).name().to_string(),
                        next: adapter.name().to_string(),
                        next_source: graph.interface(adapter.source()).name().to_string(),
                    });
                }
                composed = adapter
                    .matrix()
                    .compose(&composed)
                    .expect("linked adapters have matching dims");
            }
            if visited.contains(&adapter.target()) {
                return Err(SearchError::Cyclic(
                    graph.interface(adapter.target()).name().to_string(),
                ));
            }
            visited.push(adapter.target());
            prev = next;
        }
        Ok(Chain {
            source: first_adapter.source(),
            target: graph.adapter(prev).target(),
            edges: edges.to_vec(),
            composed,
        })
    }

    pub fn from_names<S: AsRef<str>>(
        graph: &AdapterGraph,
        names: &[S],
    ) -> Result<Chain, SearchError> {
        let ids = names
            .iter()
            .map(|n| {
                graph
                    .adapter_id(n.as_ref())
                    .ok_or_else(|| SearchError::UnknownAdapter(n.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Chain::from_adapters(graph, &ids)
    }

    /// `adapter : self`, composed incrementally as `D[self] . dep(adapter)`.
    /// The caller guarantees linkage and acyclicity.
    pub(crate) fn prepend(&self, graph: &AdapterGraph, adapter: AdapterId) -> Chain {
        let a = graph.adapter(adapter);
        debug_assert_eq!(a.target(), self.source);
        let mut edges = Vec::with_capacity(self.edges.len() + 1);
        edges.push(adapter);
        edges.extend_from_slice(&self.edges);
        Chain {
            source: a.source(),
            target: self.target,
            edges,
            composed: self
                .composed
                .compose(a.matrix())
                .expect("linked adapters have matching dims"),
        }
    }

    pub fn source(&self) -> InterfaceId {
        self.source
    }

    pub fn target(&self) -> InterfaceId {
        self.target
    }

    /// Adapters in traversal order, source side first.
    pub fn edges(&self) -> &[AdapterId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn composed(&self) -> &DependencyMatrix {
        &self.composed
    }

    pub fn names<'g>(&self, graph: &'g AdapterGraph) -> Vec<&'g str> {
        self.edges
            .iter()
            .map(|&e| graph.adapter(e).name())
            .collect()
    }

    /// Target availability for a fully functional source service.
    pub fn availability(&self) -> AvailabilityVector {
        let full = AvailabilityVector::full(self.composed.cols()).expect("dims are validated");
        self.composed
            .apply(&full)
            .expect("composed matrix matches its source")
    }
}

/// Target slot count minus available target methods. The dummy is always
/// unavailable, so the smallest possible loss is 1.
pub fn loss(chain: &Chain) -> usize {
    chain.composed.rows() - chain.availability().norm()
}

/// Non-negative rational weights over one interface's methods; the dummy
/// weight is fixed at zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightAssignment {
    interface: InterfaceId,
    weights: Vec<BigRational>,
}

impl WeightAssignment {
    /// Every real method of `interface` gets `value`.
    pub fn uniform(
        graph: &AdapterGraph,
        interface: &str,
        value: BigRational,
    ) -> Result<Self, SearchError> {
        Self::from_named(
            graph,
            interface,
            std::iter::empty::<(&str, BigRational)>(),
            value,
        )
    }

    /// Named weights; methods not mentioned get `default`.
    pub fn from_named<I, S>(
        graph: &AdapterGraph,
        interface: &str,
        named: I,
        default: BigRational,
    ) -> Result<Self, SearchError>
    where
        I: IntoIterator<Item = (S, BigRational)>,
        S: AsRef<str>,
    {
        let id = super::resolve_interface(graph, interface)?;
        let iface = graph.interface(id);
        if default.is_negative() {
            return Err(SearchError::NegativeWeight {
                method: "<default>".into(),
            });
        }
        let slots: HashMap<&str, usize> = iface
            .methods()
            .iter()
            .enumerate()
            .map(|(k, m)| (m.as_str(), k + 1))
            .collect();
        let mut weights = vec![default; iface.dim()];
        weights[0] = BigRational::zero();
        for (method, w) in named {
            let method = method.as_ref();
            let slot = *slots
                .get(method)
                .ok_or_else(|| SearchError::UnknownMethod {
                    interface: iface.name().to_string(),
                    method: method.to_string(),
                })?;
            if w.is_negative() {
                return Err(SearchError::NegativeWeight {
                    method: method.to_string(),
                });
            }
            weights[slot] = w;
        }
        Ok(WeightAssignment {
            interface: id,
            weights,
        })
    }

    pub fn interface(&self) -> InterfaceId {
        self.interface
    }

    pub fn get(&self, slot: usize) -> &BigRational {
        &self.weights[slot]
    }

    /// Sum over every real method.
    pub fn total(&self) -> BigRational {
        self.weights.iter().sum()
    }

    /// Sum over the available slots of `p`.
    pub fn sum_available(&self, p: &AvailabilityVector) -> BigRational {
        p.available().map(|slot| &self.weights[slot]).sum()
    }
}

/// Summed weight of the target methods the chain makes available.
pub fn weight(
    graph: &AdapterGraph,
    chain: &Chain,
    weights: &WeightAssignment,
) -> Result<BigRational, SearchError> {
    if chain.target != weights.interface {
        return Err(SearchError::WeightInterfaceMismatch {
            expected: graph.interface(weights.interface).name().to_string(),
            found: graph.interface(chain.target).name().to_string(),
        });
    }
    Ok(weights.sum_available(&chain.availability()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::media_players;
    use num_bigint::BigInt;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn loss_of_fixture_chains() {
        let g = media_players();
        let good = Chain::from_names(&g, &["Video1toVideo2", "Video2toVideo3"]).unwrap();
        assert_eq!(
            good.availability().to_bools(),
            vec![false, true, false, false, false]
        );
        assert_eq!(loss(&good), 4);
        let bad = Chain::from_names(&g, &["Video1toAudio", "AudiotoVideo3"]).unwrap();
        assert_eq!(bad.availability().norm(), 0);
        assert_eq!(loss(&bad), 5);
        let at = g.interface_id("Video3").unwrap();
        assert_eq!(loss(&Chain::empty(&g, at)), 1);
    }

    #[test]
    fn chain_validation() {
        let g = media_players();
        assert_eq!(
            Chain::from_names::<&str>(&g, &[]),
            Err(SearchError::EmptyChain)
        );
        assert!(matches!(
            Chain::from_names(&g, &["Video1toVideo2", "AudiotoVideo3"]),
            Err(SearchError::BrokenLink { position: 1, .. })
        ));
        assert_eq!(
            Chain::from_names(&g, &["Video3toVideo1", "Video1toVideo2", "Video2toVideo3"]),
            Err(SearchError::Cyclic("Video3".into()))
        );
        assert!(matches!(
            Chain::from_names(&g, &["nope"]),
            Err(SearchError::UnknownAdapter(_))
        ));
    }

    #[test]
    fn weight_examples() {
        let g = media_players();
        let chain = Chain::from_names(&g, &["Video1toVideo2", "Video2toVideo3"]).unwrap();
        let ones = WeightAssignment::uniform(&g, "Video3", int(1)).unwrap();
        assert_eq!(weight(&g, &chain, &ones).unwrap(), int(1));
        let zeros = WeightAssignment::uniform(&g, "Video3", int(0)).unwrap();
        assert_eq!(weight(&g, &chain, &zeros).unwrap(), int(0));
        let play_heavy = WeightAssignment::from_named(
            &g,
            "Video3",
            [
                ("play", int(10)),
                ("getVolume", int(1)),
                ("setVolume", int(1)),
                ("setEqualizer", int(1)),
            ],
            int(0),
        )
        .unwrap();
        assert_eq!(weight(&g, &chain, &play_heavy).unwrap(), int(10));
        let elsewhere = WeightAssignment::uniform(&g, "Audio", int(1)).unwrap();
        assert!(matches!(
            weight(&g, &chain, &elsewhere),
            Err(SearchError::WeightInterfaceMismatch { .. })
        ));
    }

    #[test]
    fn weight_assignment_validation() {
        let g = media_players();
        assert!(matches!(
            WeightAssignment::from_named(&g, "Video3", [("play", int(-1))], int(1)),
            Err(SearchError::NegativeWeight { .. })
        ));
        assert!(matches!(
            WeightAssignment::from_named(&g, "Video3", [("stop", int(1))], int(1)),
            Err(SearchError::UnknownMethod { .. })
        ));
        let w = WeightAssignment::uniform(&g, "Video3", int(2)).unwrap();
        assert_eq!(w.total(), int(8));
        assert_eq!(w.get(0), &int(0));
    }
}
