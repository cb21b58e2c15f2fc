//! Bundled example graphs.

use crate::graph::{parse_graph, AdapterGraph};

/// Four media-player interfaces (`Video1`, `Video2`, `Video3`, `Audio`) and
/// six adapters between them, in canonical form.
pub const MEDIA_PLAYERS_JSON: &str = include_str!("../fixtures/media-players.json");

pub fn media_players() -> AdapterGraph {
    parse_graph(MEDIA_PLAYERS_JSON.as_bytes()).expect("bundled fixture is valid")
}
