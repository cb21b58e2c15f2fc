//! JSON graph files.
//!
//! ```json
//! {
//!   "adapters": [
//!     {
//!       "name": "Video1toVideo2",
//!       "provides": { "play": { "requires": ["playVideo"] } },
//!       "source": "Video1",
//!       "target": "Video2"
//!     }
//!   ],
//!   "interfaces": [ { "methods": ["playVideo", "playAudio"], "name": "Video1" } ]
//! }
//! ```
//!
//! A target method missing from `provides` can never be implemented; one
//! present with an empty `requires` list is always implementable. Method
//! order inside an interface fixes the matrix row/column order. The
//! canonical form sorts object keys, interfaces and adapters by name, uses
//! two-space indentation and ends with a newline.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{index_interfaces, AdapterGraph, AdapterSpec, GraphError, Interface};
use crate::algebra::{DependencyMatrix, Requirement};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    #[serde(default)]
    adapters: Vec<AdapterDoc>,
    interfaces: Vec<InterfaceDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InterfaceDoc {
    methods: Vec<String>,
    name: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AdapterDoc {
    name: String,
    #[serde(default)]
    provides: Provides,
    source: String,
    target: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProvisionDoc {
    requires: Vec<String>,
}

/// `provides` map kept as an ordered list so duplicate keys can be reported.
#[derive(Default)]
struct Provides(Vec<(String, ProvisionDoc)>);

impl Serialize for Provides {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Provides {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ProvidesVisitor;

        impl<'de> Visitor<'de> for ProvidesVisitor {
            type Value = Provides;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from target method to {\"requires\": [...]}")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Provides, A::Error> {
                let mut entries = Vec::with_capacity(access.size_hint().unwrap_or(0));
                while let Some(entry) = access.next_entry()? {
                    entries.push(entry);
                }
                Ok(Provides(entries))
            }
        }

        deserializer.deserialize_map(ProvidesVisitor)
    }
}

/// Parses and validates a graph file.
pub fn parse_graph(bytes: &[u8]) -> Result<AdapterGraph, GraphError> {
    let mut de = serde_json::Deserializer::from_slice(bytes);
    let doc: GraphDoc = serde_path_to_error::deserialize(&mut de).map_err(|err| {
        let path = err.path().to_string();
        GraphError::Json {
            path: if path == "." {
                "$".to_string()
            } else {
                format!("$.{path}")
            },
            message: err.into_inner().to_string(),
        }
    })?;
    de.end().map_err(|err| GraphError::Json {
        path: "$".into(),
        message: err.to_string(),
    })?;

    let interfaces: Vec<Interface> = doc
        .interfaces
        .into_iter()
        .map(|i| Interface::new(i.name, i.methods))
        .collect();
    let by_name = index_interfaces(&interfaces)?;

    let mut specs = Vec::with_capacity(doc.adapters.len());
    for (idx, adapter) in doc.adapters.into_iter().enumerate() {
        let path = format!("$.adapters[{idx}]");
        let endpoint = |name: &str, field: &str| {
            by_name
                .get(name)
                .map(|&i| &interfaces[i])
                .ok_or_else(|| GraphError::UnknownInterface {
                    path: format!("{path}.{field}"),
                    name: name.to_string(),
                })
        };
        let source = endpoint(&adapter.source, "source")?;
        let target = endpoint(&adapter.target, "target")?;
        let matrix = build_matrix(&path, source, target, &adapter.provides)?;
        specs.push(AdapterSpec {
            name: adapter.name,
            source: adapter.source,
            target: adapter.target,
            matrix,
        });
    }
    AdapterGraph::new(interfaces, specs)
}

fn build_matrix(
    path: &str,
    source: &Interface,
    target: &Interface,
    provides: &Provides,
) -> Result<DependencyMatrix, GraphError> {
    let source_slots: HashMap<&str, usize> = source
        .methods()
        .iter()
        .enumerate()
        .map(|(k, m)| (m.as_str(), k + 1))
        .collect();
    let target_slots: HashMap<&str, usize> = target
        .methods()
        .iter()
        .enumerate()
        .map(|(k, m)| (m.as_str(), k + 1))
        .collect();

    let mut requirements = vec![Requirement::Never; target.methods().len()];
    let mut provided = HashSet::with_capacity(provides.0.len());
    for (method, provision) in &provides.0 {
        let mpath = format!("{path}.provides.{method}");
        if !provided.insert(method.as_str()) {
            return Err(GraphError::DuplicateName {
                path: mpath,
                name: method.clone(),
            });
        }
        let row = *target_slots
            .get(method.as_str())
            .ok_or_else(|| GraphError::UnknownMethod {
                path: mpath.clone(),
                interface: target.name().to_string(),
                method: method.clone(),
            })?;
        let mut slots = Vec::with_capacity(provision.requires.len());
        let mut seen = HashSet::with_capacity(provision.requires.len());
        for (k, needed) in provision.requires.iter().enumerate() {
            let rpath = format!("{mpath}.requires[{k}]");
            let slot =
                *source_slots
                    .get(needed.as_str())
                    .ok_or_else(|| GraphError::UnknownMethod {
                        path: rpath.clone(),
                        interface: source.name().to_string(),
                        method: needed.clone(),
                    })?;
            if !seen.insert(slot) {
                return Err(GraphError::DuplicateName {
                    path: rpath,
                    name: needed.clone(),
                });
            }
            slots.push(slot);
        }
        requirements[row - 1] = if slots.is_empty() {
            Requirement::Always
        } else {
            Requirement::Requires(slots)
        };
    }

    DependencyMatrix::from_requirements(source.dim(), &requirements).map_err(|source| {
        GraphError::Matrix {
            path: format!("{path}.provides"),
            source,
        }
    })
}

/// Canonical JSON text for a graph.
pub fn serialize_graph(graph: &AdapterGraph) -> String {
    let doc = GraphDoc {
        adapters: graph
            .adapters()
            .iter()
            .map(|a| {
                let source = graph.interface(a.source());
                let target = graph.interface(a.target());
                let mut entries: Vec<(String, ProvisionDoc)> = (1..target.dim())
                    .filter_map(|row| {
                        let requires = match a.matrix().requirement(row) {
                            Requirement::Never => return None,
                            Requirement::Always => Vec::new(),
                            Requirement::Requires(slots) => slots
                                .into_iter()
                                .map(|s| source.method_at(s).expect("slot in range").to_string())
                                .collect(),
                        };
                        let method = target.method_at(row).expect("row in range").to_string();
                        Some((method, ProvisionDoc { requires }))
                    })
                    .collect();
                entries.sort_by(|x, y| x.0.cmp(&y.0));
                AdapterDoc {
                    name: a.name().to_string(),
                    provides: Provides(entries),
                    source: source.name().to_string(),
                    target: target.name().to_string(),
                }
            })
            .collect(),
        interfaces: graph
            .interfaces()
            .iter()
            .map(|i| InterfaceDoc {
                methods: i.methods().to_vec(),
                name: i.name().to_string(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("graph documents always serialize");
    text.push('\n');
    text
}
