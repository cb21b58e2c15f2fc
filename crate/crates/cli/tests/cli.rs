use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use adapter_chain::fixtures::MEDIA_PLAYERS_JSON;
use adapter_chain::graph::{gen_random_graph, parse_graph, serialize_graph, RandomGraphParams};
use adapter_chain::sat::{brute_force_sat, parse_dimacs, Sidecar};
use adapter_chain::search::{greedy_chain, Chain};
use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adapter-chain"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    })
}

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn file(&self, name: &str, contents: &str) -> String {
        let path = self.dir.path().join(name);
        std::fs::write(&path, contents).unwrap();
        path.to_str().unwrap().to_string()
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn fixture(&self) -> String {
        self.file("media.json", MEDIA_PLAYERS_JSON)
    }
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn chain_on_the_fixture() {
    let w = Workspace::new();
    let g = w.fixture();
    let out = run(&[
        "--json", "chain", &g, "--source", "Video1", "--target", "Video3",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        json(&out),
        serde_json::json!({"chain": ["Video1toVideo2", "Video2toVideo3"], "available": ["play"], "lost": 3})
    );
    let out = run(&["chain", &g, "--source", "Video1", "--target", "Video3"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn chain_exit_codes() {
    let w = Workspace::new();
    let lonely = w.file(
        "lonely.json",
        r#"{"interfaces": [{"name": "A", "methods": ["m"]}, {"name": "B", "methods": ["m"]}]}"#,
    );
    let out = run(&["chain", &lonely, "--source", "A", "--target", "B"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("no adapter chain"));
    assert_eq!(
        code(&run(&["chain", &lonely, "--source", "A", "--target", "Z"])),
        2
    );
    assert_eq!(
        code(&run(&[
            "chain",
            &w.file("junk.json", "{"),
            "--source",
            "A",
            "--target",
            "B"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "chain",
            s(&w.path("missing.json")),
            "--source",
            "A",
            "--target",
            "B"
        ])),
        2
    );
    assert_eq!(code(&run(&["chain", &lonely, "--source", "A"])), 2);
}

#[test]
fn discover_picks_the_heavier_source() {
    let w = Workspace::new();
    let g = w.fixture();
    let out = run(&[
        "--json",
        "discover",
        &g,
        "--sources",
        "Video1,Audio",
        "--target",
        "Video3",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["source"], "Audio");
    assert_eq!(v["chain"], serde_json::json!(["AudiotoVideo3"]));
    assert_eq!(v["weight_exact"], "2");

    let heavy_play = w.file("w.json", r#"{"play": 100}"#);
    let out = run(&[
        "--json",
        "discover",
        &g,
        "--sources",
        "Video1,Audio",
        "--target",
        "Video3",
        "--weights",
        &heavy_play,
    ]);
    let v = json(&out);
    assert_eq!(v["source"], "Video1");
    assert_eq!(v["weight"], 100.0);

    let third = w.file("third.json", r#"{"setVolume": 0.1, "setEqualizer": 0.2}"#);
    let out = run(&[
        "--json",
        "discover",
        &g,
        "--sources",
        "Audio",
        "--target",
        "Video3",
        "--weights",
        &third,
    ]);
    assert_eq!(json(&out)["weight_exact"], "3/10");
}

#[test]
fn discover_rejects_bad_input() {
    let w = Workspace::new();
    let g = w.fixture();
    let negative = w.file("neg.json", r#"{"play": -1}"#);
    let unknown = w.file("unk.json", r#"{"rewind": 1}"#);
    let text = w.file("txt.json", r#"{"play": "lots"}"#);
    for weights in [&negative, &unknown, &text] {
        let out = run(&[
            "discover",
            &g,
            "--sources",
            "Video1",
            "--target",
            "Video3",
            "--weights",
            weights,
        ]);
        assert_eq!(code(&out), 2, "{weights}");
    }
    assert_eq!(
        code(&run(&[
            "discover",
            &g,
            "--sources",
            "",
            "--target",
            "Video3"
        ])),
        2
    );
}

#[test]
fn apply_reports_each_method() {
    let w = Workspace::new();
    let g = w.fixture();
    let out = run(&[
        "--json",
        "apply",
        &g,
        "--chain",
        "Video1toVideo2,Video2toVideo3",
    ]);
    assert_eq!(
        json(&out),
        serde_json::json!({
            "interface": "Video3",
            "available": ["play"],
            "unavailable": ["getVolume", "setVolume", "setEqualizer"],
        })
    );
    let out = run(&[
        "--json",
        "apply",
        &g,
        "--chain",
        "Video1toAudio,AudiotoVideo3",
    ]);
    assert_eq!(json(&out)["available"], serde_json::json!([]));
    let out = run(&["--json", "apply", &g, "--chain", "Video3toAudio"]);
    assert_eq!(json(&out)["available"], serde_json::json!(["adjustAudio"]));

    let out = run(&["apply", &g, "--chain", "Video3toAudio,Video1toVideo2"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("Video3toAudio") && err.contains("Video1toVideo2"),
        "{err}"
    );
}

#[test]
fn oracle_matches_chain_and_refuses_large_graphs() {
    let w = Workspace::new();
    let g = w.fixture();
    let a = run(&[
        "--json", "chain", &g, "--source", "Video1", "--target", "Video3",
    ]);
    let b = run(&[
        "--json", "oracle", &g, "--source", "Video1", "--target", "Video3",
    ]);
    assert_eq!(json(&a), json(&b));

    let big = w.path("big.json");
    assert_eq!(
        code(&run(&[
            "generate",
            "--interfaces",
            "13",
            "--seed",
            "1",
            "-o",
            s(&big)
        ])),
        0
    );
    assert_eq!(
        code(&run(&[
            "oracle",
            s(&big),
            "--source",
            "I00",
            "--target",
            "I01"
        ])),
        4
    );
}

#[test]
fn reduce_writes_graph_and_sidecar() {
    let w = Workspace::new();
    let cnf = w.file("f.cnf", "p cnf 3 2\n1 2 3 0\n-1 -2 3 0\n");
    let out_path = w.path("reduced.json");
    let out = run(&["reduce", &cnf, "-o", s(&out_path)]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "13 nodes, 19 edges"
    );

    let text = std::fs::read_to_string(&out_path).unwrap();
    let graph = parse_graph(text.as_bytes()).unwrap();
    assert_eq!(serialize_graph(&graph), text);
    let sidecar: Sidecar =
        serde_json::from_str(&std::fs::read_to_string(w.path("reduced.sidecar.json")).unwrap())
            .unwrap();
    assert_eq!(
        sidecar,
        Sidecar {
            source: "S".into(),
            target: "T".into(),
            threshold: 2
        }
    );

    let cnf = w.file("one.cnf", "p cnf 1 1\n1 0\n");
    let out = run(&["reduce", &cnf, "-o", s(&w.path("one.json"))]);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "7 nodes, 9 edges"
    );
}

#[test]
fn unsatisfiable_reduction_falls_short_through_chain() {
    let w = Workspace::new();
    let cnf = w.file("u.cnf", "p cnf 1 2\n1 0\n-1 0\n");
    let graph = w.path("u.json");
    assert_eq!(code(&run(&["reduce", &cnf, "-o", s(&graph)])), 0);
    let out = run(&[
        "--json",
        "chain",
        s(&graph),
        "--source",
        "S",
        "--target",
        "T",
    ]);
    assert_eq!(code(&out), 0);
    let available = json(&out)["available"].as_array().unwrap().len();
    assert!(available < 2);
}

#[test]
fn solve_sat_verdicts() {
    let w = Workspace::new();
    let sat = w.file("s.cnf", "p cnf 3 2\n1 2 3 0\n-1 -2 3 0\n");
    let out = run(&["--json", "solve-sat", &sat]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["satisfiable"], true);
    let assignment: Vec<bool> = serde_json::from_value(v["assignment"].clone()).unwrap();
    let formula = parse_dimacs("p cnf 3 2\n1 2 3 0\n-1 -2 3 0\n").unwrap();
    assert!(formula.evaluate(&assignment));

    let unsat = w.file("u.cnf", "p cnf 1 2\n1 0\n-1 0\n");
    let out = run(&["--json", "solve-sat", &unsat]);
    assert_eq!(code(&out), 3);
    assert_eq!(json(&out)["satisfiable"], false);
    assert!(!brute_force_sat(&parse_dimacs("p cnf 1 2\n1 0\n-1 0\n").unwrap()).unwrap());

    assert_eq!(
        code(&run(&[
            "solve-sat",
            &w.file("bad.cnf", "p cnf 2 1\n1 2 3 4 0\n")
        ])),
        2
    );
    let mut wide = String::from("p cnf 3 20\n");
    for _ in 0..20 {
        wide.push_str("1 2 3 0\n");
    }
    assert_eq!(code(&run(&["solve-sat", &w.file("wide.cnf", &wide)])), 4);
}

#[test]
fn generate_is_deterministic_and_matches_the_library() {
    let w = Workspace::new();
    let (a, b) = (w.path("a.json"), w.path("b.json"));
    let args = |p: &Path| {
        let p = s(p).to_string();
        vec![
            "generate".to_string(),
            "--interfaces".into(),
            "5".into(),
            "--methods".into(),
            "1..3".into(),
            "--adapters".into(),
            "8".into(),
            "--density".into(),
            "0.4".into(),
            "--never-rate".into(),
            "0.2".into(),
            "--seed".into(),
            "99".into(),
            "-o".into(),
            p,
        ]
    };
    let run_owned = |v: Vec<String>| run(&v.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(code(&run_owned(args(&a))), 0);
    assert_eq!(code(&run_owned(args(&b))), 0);
    let (ta, tb) = (
        std::fs::read_to_string(&a).unwrap(),
        std::fs::read_to_string(&b).unwrap(),
    );
    assert_eq!(ta, tb);
    let lib = gen_random_graph(&RandomGraphParams {
        interfaces: 5,
        methods: 1..=3,
        adapters: 8,
        density: 0.4,
        never_rate: 0.2,
        seed: 99,
    })
    .unwrap();
    assert_eq!(ta, serialize_graph(&lib));

    assert_eq!(
        code(&run(&[
            "generate",
            "--density",
            "1.5",
            "-o",
            s(&w.path("c.json"))
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "generate",
            "--methods",
            "4..1",
            "-o",
            s(&w.path("c.json"))
        ])),
        2
    );
}

#[test]
fn chain_results_equal_library_results() {
    let w = Workspace::new();
    for seed in 0..8 {
        let path = w.path(&format!("g{seed}.json"));
        let out = run(&[
            "generate",
            "--interfaces",
            "4",
            "--adapters",
            "8",
            "--seed",
            &seed.to_string(),
            "-o",
            s(&path),
        ]);
        assert_eq!(code(&out), 0);
        let g = parse_graph(&std::fs::read(&path).unwrap()).unwrap();
        for src in g.interfaces() {
            for dst in g.interfaces() {
                let out = run(&[
                    "--json",
                    "chain",
                    s(&path),
                    "--source",
                    src.name(),
                    "--target",
                    dst.name(),
                ]);
                match greedy_chain(&g, src.name(), dst.name())
                    .unwrap()
                    .into_found()
                {
                    None => assert_eq!(code(&out), 3),
                    Some(found) => {
                        let v = json(&out);
                        assert_eq!(v["chain"], serde_json::json!(found.chain.names(&g)));
                        assert_eq!(
                            v["available"],
                            serde_json::json!(found.available_methods(&g))
                        );
                        assert_eq!(v["lost"], found.methods_lost());
                        if !found.chain.is_empty() {
                            let again = Chain::from_names(&g, &found.chain.names(&g)).unwrap();
                            assert_eq!(again.availability(), found.availability);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn validate_reports_paths() {
    let w = Workspace::new();
    assert_eq!(
        String::from_utf8_lossy(&run(&["validate", &w.fixture()]).stdout).trim(),
        "OK"
    );
    let compact = include_str!("../../core/fixtures/media-players.compact.json");
    assert_eq!(
        code(&run(&["validate", &w.file("compact.json", compact)])),
        0
    );

    let corrupted = MEDIA_PLAYERS_JSON.replacen(
        "\"requires\": [\n            \"play\"",
        "\"requires\": [\n            \"pause\"",
        1,
    );
    assert_ne!(corrupted, MEDIA_PLAYERS_JSON);
    let out = run(&["--json", "validate", &w.file("bad.json", &corrupted)]);
    assert_eq!(code(&out), 2);
    let v = json(&out);
    assert_eq!(v["ok"], false);
    assert!(
        v["path"].as_str().unwrap().starts_with("$.adapters["),
        "{v}"
    );
}
