mod common;

use adapter_chain::algebra::AvailabilityVector;
use adapter_chain::fixtures::{media_players, MEDIA_PLAYERS_JSON};
use adapter_chain::graph::{parse_graph, serialize_graph, GraphError};
use adapter_chain::search::{greedy_chain, Chain};

const COMPACT: &str = include_str!("../fixtures/media-players.compact.json");

fn run(chain: &[&str], from: &str) -> Vec<bool> {
    let g = media_players();
    let c = Chain::from_names(&g, chain).unwrap();
    assert_eq!(g.interface(c.source()).name(), from);
    let mut p = AvailabilityVector::full(g.interface(c.source()).dim()).unwrap();
    for &e in c.edges() {
        p = g.adapter(e).matrix().apply(&p).unwrap();
    }
    assert_eq!(p, c.availability());
    p.to_bools()
}

#[test]
fn media_player_golden_vectors() {
    let (f, t) = (false, true);
    assert_eq!(
        run(&["Video1toVideo2", "Video2toVideo3"], "Video1"),
        [f, t, f, f, f]
    );
    assert_eq!(
        run(
            &["Video1toVideo2", "Video2toVideo3", "Video3toAudio"],
            "Video1"
        ),
        [f, f, f]
    );
    assert_eq!(run(&["Video3toAudio"], "Video3"), [f, f, t]);
}

#[test]
fn media_player_best_chains() {
    let g = media_players();
    let found = greedy_chain(&g, "Video1", "Video3")
        .unwrap()
        .into_found()
        .unwrap();
    assert_eq!(found.chain.names(&g), ["Video1toVideo2", "Video2toVideo3"]);
    assert_eq!(found.available_methods(&g), ["play"]);
    assert_eq!(found.methods_lost(), 3);

    // Video2 only reaches Audio through Video3.
    let found = greedy_chain(&g, "Video2", "Audio")
        .unwrap()
        .into_found()
        .unwrap();
    assert_eq!(found.chain.names(&g), ["Video2toVideo3", "Video3toAudio"]);
    assert_eq!(found.available_methods(&g), Vec::<&str>::new());
    let found = greedy_chain(&g, "Audio", "Video2")
        .unwrap()
        .into_found()
        .unwrap();
    assert_eq!(
        found.chain.names(&g),
        ["AudiotoVideo3", "Video3toVideo1", "Video1toVideo2"]
    );
}

#[test]
fn canonical_fixture_is_a_fixed_point() {
    let g = media_players();
    assert_eq!(serialize_graph(&g), MEDIA_PLAYERS_JSON);
}

#[test]
fn compact_fixture_parses_to_the_same_graph() {
    assert_ne!(COMPACT, MEDIA_PLAYERS_JSON);
    let g = parse_graph(COMPACT.as_bytes()).unwrap();
    assert_eq!(g, media_players());
    assert_eq!(serialize_graph(&g), MEDIA_PLAYERS_JSON);
}

#[test]
fn generated_graphs_round_trip() {
    for seed in 0..100 {
        let g = common::small_graph(seed);
        let text = serialize_graph(&g);
        let back = parse_graph(text.as_bytes()).unwrap();
        assert_eq!(back, g, "seed {seed}");
        assert_eq!(serialize_graph(&back), text, "seed {seed}");
    }
}

#[test]
fn errors_point_at_the_offending_element() {
    let bad = MEDIA_PLAYERS_JSON.replacen("\"setVolume\",", "\"setVolumeX\",", 1);
    let err = parse_graph(bad.as_bytes()).unwrap_err();
    assert!(matches!(err, GraphError::UnknownMethod { .. }), "{err}");
    assert!(err.path().unwrap().starts_with("$.adapters["), "{err}");

    let err = parse_graph(b"{\"interfaces\": [], \"extra\": 1}").unwrap_err();
    assert!(matches!(err, GraphError::Json { .. }), "{err}");

    let err = parse_graph(b"{\"interfaces\": [{\"name\": \"A\", \"methods\": [\"m\", \"m\"]}]}")
        .unwrap_err();
    assert!(err.path().unwrap().starts_with("$.interfaces[0]"), "{err}");
}
