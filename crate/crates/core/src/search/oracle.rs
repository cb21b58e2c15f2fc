//! Exhaustive reference search.
//!
//! Enumerates every node-simple chain by forward depth-first traversal and
//! scores each one by pushing the source availability vector through the
//! adapters one at a time, never forming a composed matrix. This keeps it
//! independent of the composed-matrix bookkeeping used by the greedy search.

use num_rational::BigRational;

use super::chain::{Chain, WeightAssignment};
use super::{resolve_interface, FoundChain, Score, SearchError, SearchOutcome};
use crate::algebra::AvailabilityVector;
use crate::graph::{AdapterGraph, AdapterId, InterfaceId};

/// Oracle refuses graphs with more interfaces than this.
pub const MAX_ORACLE_INTERFACES: usize = 12;
/// Oracle refuses graphs with more adapters than this.
pub const MAX_ORACLE_ADAPTERS: usize = 64;

fn guard(graph: &AdapterGraph) -> Result<(), SearchError> {
    let checks = [
        (
            "interfaces",
            graph.interfaces().len(),
            MAX_ORACLE_INTERFACES,
        ),
        ("adapters", graph.adapters().len(), MAX_ORACLE_ADAPTERS),
    ];
    for (what, found, limit) in checks {
        if found > limit {
            return Err(SearchError::GuardExceeded { what, found, limit });
        }
    }
    Ok(())
}

/// Every node-simple chain from `source` to `target` with at least one
/// adapter, as adapter-id sequences.
pub fn enumerate_chains(
    graph: &AdapterGraph,
    source: &str,
    target: &str,
) -> Result<Vec<Vec<AdapterId>>, SearchError> {
    guard(graph)?;
    let s = resolve_interface(graph, source)?;
    let t = resolve_interface(graph, target)?;
    let mut outgoing: Vec<Vec<AdapterId>> = vec![Vec::new(); graph.interfaces().len()];
    for (idx, a) in graph.adapters().iter().enumerate() {
        outgoing[a.source().0].push(AdapterId(idx));
    }

    fn dfs(
        graph: &AdapterGraph,
        outgoing: &[Vec<AdapterId>],
        at: InterfaceId,
        target: InterfaceId,
        on_path: &mut Vec<bool>,
        path: &mut Vec<AdapterId>,
        out: &mut Vec<Vec<AdapterId>>,
    ) {
        if at == target && !path.is_empty() {
            out.push(path.clone());
            return;
        }
        for &edge in &outgoing[at.0] {
            let next = graph.adapter(edge).target();
            if on_path[next.0] {
                continue;
            }
            on_path[next.0] = true;
            path.push(edge);
            dfs(graph, outgoing, next, target, on_path, path, out);
            path.pop();
            on_path[next.0] = false;
        }
    }

    let mut out = Vec::new();
    let mut on_path = vec![false; graph.interfaces().len()];
    on_path[s.0] = true;
    dfs(
        graph,
        &outgoing,
        s,
        t,
        &mut on_path,
        &mut Vec::new(),
        &mut out,
    );
    Ok(out)
}

/// Target availability computed edge by edge from a full source service.
fn step_through(
    graph: &AdapterGraph,
    source: InterfaceId,
    edges: &[AdapterId],
) -> AvailabilityVector {
    let mut p = AvailabilityVector::full(graph.interface(source).dim()).expect("valid dim");
    for &e in edges {
        p = graph
            .adapter(e)
            .matrix()
            .apply(&p)
            .expect("linked adapters match");
    }
    p
}

fn outcome(
    graph: &AdapterGraph,
    source: InterfaceId,
    edges: &[AdapterId],
    availability: AvailabilityVector,
    score: Score,
) -> SearchOutcome {
    let chain = if edges.is_empty() {
        Chain::empty(graph, source)
    } else {
        Chain::from_adapters(graph, edges).expect("enumerated chains are valid")
    };
    SearchOutcome::Found(FoundChain {
        source,
        chain,
        availability,
        score,
    })
}

/// Minimum-loss chain by exhaustive enumeration, with the same tie-break as
/// [`greedy_chain`](super::greedy_chain).
pub fn oracle_best_chain(
    graph: &AdapterGraph,
    source: &str,
    target: &str,
) -> Result<SearchOutcome, SearchError> {
    guard(graph)?;
    let s = resolve_interface(graph, source)?;
    let t = resolve_interface(graph, target)?;
    let target_dim = graph.interface(t).dim();
    if s == t {
        let p = step_through(graph, s, &[]);
        let loss = target_dim - p.norm();
        return Ok(outcome(graph, s, &[], p, Score::Loss(loss)));
    }

    // (loss, length, edges): the same order the greedy search pops in.
    type Key = (usize, usize, Vec<AdapterId>);
    let mut best: Option<(Key, AvailabilityVector)> = None;
    for edges in enumerate_chains(graph, source, target)? {
        let p = step_through(graph, s, &edges);
        let key = (target_dim - p.norm(), edges.len(), edges);
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            best = Some((key, p));
        }
    }
    Ok(match best {
        Some(((loss, _, edges), p)) => outcome(graph, s, &edges, p, Score::Loss(loss)),
        None => SearchOutcome::NoChain,
    })
}

/// Maximum-weight chain from any of `sources` by exhaustive enumeration,
/// with the same tie-break as
/// [`greedy_chain_weighted`](super::greedy_chain_weighted).
pub fn oracle_best_weighted<S: AsRef<str>>(
    graph: &AdapterGraph,
    sources: &[S],
    target: &str,
    weights: &WeightAssignment,
) -> Result<SearchOutcome, SearchError> {
    guard(graph)?;
    if sources.is_empty() {
        return Err(SearchError::EmptySources);
    }
    let t = resolve_interface(graph, target)?;
    let mut ids = sources
        .iter()
        .map(|s| resolve_interface(graph, s.as_ref()))
        .collect::<Result<Vec<_>, _>>()?;
    ids.sort();
    ids.dedup();

    type Key = (std::cmp::Reverse<BigRational>, usize, Vec<AdapterId>);
    let mut best: Option<(Key, InterfaceId, AvailabilityVector)> = None;
    let mut consider = |s: InterfaceId, edges: Vec<AdapterId>| {
        let p = step_through(graph, s, &edges);
        let key = (
            std::cmp::Reverse(weights.sum_available(&p)),
            edges.len(),
            edges,
        );
        if best.as_ref().is_none_or(|(b, _, _)| key < *b) {
            best = Some((key, s, p));
        }
    };
    for &s in &ids {
        if s == t {
            consider(s, Vec::new());
        } else {
            for edges in enumerate_chains(graph, graph.interface(s).name(), target)? {
                consider(s, edges);
            }
        }
    }
    Ok(match best {
        Some(((std::cmp::Reverse(w), _, edges), s, p)) => {
            outcome(graph, s, &edges, p, Score::Weight(w))
        }
        None => SearchOutcome::NoChain,
    })
}
