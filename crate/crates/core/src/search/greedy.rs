use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use super::chain::{loss, Chain, WeightAssignment};
use super::{resolve_interface, FoundChain, Score, SearchError, SearchOutcome};
use crate::algebra::bits::FixedBitSet;
use crate::graph::{AdapterGraph, AdapterId, InterfaceId};

/// Frontier entry; `BinaryHeap` is a max-heap, so `Ord` is reversed on the
/// `(score, length, adapter ids)` key. Adapter ids follow name order, so
/// comparing id sequences compares name sequences.
struct Entry<K> {
    score: K,
    chain: Chain,
    visited: FixedBitSet,
}

impl<K: Ord> Entry<K> {
    fn key(&self) -> (&K, usize, &[AdapterId]) {
        (&self.score, self.chain.len(), self.chain.edges())
    }
}

impl<K: Ord> PartialEq for Entry<K> {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl<K: Ord> Eq for Entry<K> {}

impl<K: Ord> PartialOrd for Entry<K> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<K: Ord> Ord for Entry<K> {
    fn cmp(&self, other: &Self) -> Ordering {
        other.key().cmp(&self.key())
    }
}

/// Best-first expansion of backward chains ending at `target`. `score`
/// orders chains (smaller is better) and must never improve when an adapter
/// is prepended. Returns the first non-empty chain whose source satisfies
/// `is_goal`.
fn best_first<K, F, G>(
    graph: &AdapterGraph,
    target: InterfaceId,
    is_goal: G,
    score: F,
    observer: &mut dyn FnMut(&Chain, &Chain),
) -> Option<(Chain, K)>
where
    K: Ord,
    F: Fn(&Chain) -> K,
    G: Fn(InterfaceId) -> bool,
{
    let mut visited = FixedBitSet::new(graph.interfaces().len());
    visited.insert(target.0);
    let root = Chain::empty(graph, target);
    let mut frontier = BinaryHeap::new();
    frontier.push(Entry {
        score: score(&root),
        chain: root,
        visited,
    });

    while let Some(entry) = frontier.pop() {
        if !entry.chain.is_empty() && is_goal(entry.chain.source()) {
            return Some((entry.chain, entry.score));
        }
        // Every extension is a new chain: each chain has exactly one parent
        // (itself minus its first adapter), so nothing is enqueued twice.
        for &edge in graph.incoming(entry.chain.source()) {
            let from = graph.adapter(edge).source();
            if entry.visited.contains(from.0) {
                continue;
            }
            let child = entry.chain.prepend(graph, edge);
            observer(&entry.chain, &child);
            let mut visited = entry.visited.clone();
            visited.insert(from.0);
            frontier.push(Entry {
                score: score(&child),
                chain: child,
                visited,
            });
        }
    }
    None
}

fn found(source: InterfaceId, chain: Chain, score: Score) -> SearchOutcome {
    let availability = chain.availability();
    SearchOutcome::Found(FoundChain {
        source,
        chain,
        availability,
        score,
    })
}

/// Minimum-loss node-simple chain from `source` to `target`. When the two
/// coincide the empty chain (loss 1) is returned.
pub fn greedy_chain(
    graph: &AdapterGraph,
    source: &str,
    target: &str,
) -> Result<SearchOutcome, SearchError> {
    greedy_chain_observed(graph, source, target, |_, _| {})
}

/// [`greedy_chain`], calling `observer(parent, child)` for every frontier
/// extension.
pub fn greedy_chain_observed(
    graph: &AdapterGraph,
    source: &str,
    target: &str,
    mut observer: impl FnMut(&Chain, &Chain),
) -> Result<SearchOutcome, SearchError> {
    let s = resolve_interface(graph, source)?;
    let t = resolve_interface(graph, target)?;
    if s == t {
        let chain = Chain::empty(graph, t);
        let l = loss(&chain);
        return Ok(found(s, chain, Score::Loss(l)));
    }
    Ok(
        match best_first(graph, t, |i| i == s, loss, &mut observer) {
            Some((chain, l)) => found(s, chain, Score::Loss(l)),
            None => SearchOutcome::NoChain,
        },
    )
}

/// Maximum-weight node-simple chain from any of `sources` to `target`.
/// If `target` itself is a source, the empty chain wins with the full
/// weight.
pub fn greedy_chain_weighted<S: AsRef<str>>(
    graph: &AdapterGraph,
    sources: &[S],
    target: &str,
    weights: &WeightAssignment,
) -> Result<SearchOutcome, SearchError> {
    greedy_chain_weighted_observed(graph, sources, target, weights, |_, _| {})
}

pub fn greedy_chain_weighted_observed<S: AsRef<str>>(
    graph: &AdapterGraph,
    sources: &[S],
    target: &str,
    weights: &WeightAssignment,
    mut observer: impl FnMut(&Chain, &Chain),
) -> Result<SearchOutcome, SearchError> {
    if sources.is_empty() {
        return Err(SearchError::EmptySources);
    }
    let t = resolve_interface(graph, target)?;
    let mut wanted = FixedBitSet::new(graph.interfaces().len());
    for s in sources {
        wanted.insert(resolve_interface(graph, s.as_ref())?.0);
    }
    if weights.interface() != t {
        return Err(SearchError::WeightInterfaceMismatch {
            expected: graph.interface(weights.interface()).name().to_string(),
            found: target.to_string(),
        });
    }
    let score = |c: &Chain| Reverse(weights.sum_available(&c.availability()));

    if wanted.contains(t.0) {
        let chain = Chain::empty(graph, t);
        let Reverse(w) = score(&chain);
        return Ok(found(t, chain, Score::Weight(w)));
    }
    Ok(
        match best_first(graph, t, |i| wanted.contains(i.0), score, &mut observer) {
            Some((chain, Reverse(w))) => found(chain.source(), chain, Score::Weight(w)),
            None => SearchOutcome::NoChain,
        },
    )
}

/// Whether some node-simple chain makes at least `threshold` target methods
/// available.
pub fn decide_chain(
    graph: &AdapterGraph,
    source: &str,
    target: &str,
    threshold: i64,
) -> Result<bool, SearchError> {
    Ok(match greedy_chain(graph, source, target)? {
        SearchOutcome::Found(f) => {
            i64::try_from(f.availability.norm()).unwrap_or(i64::MAX) >= threshold
        }
        SearchOutcome::NoChain => false,
    })
}
