//! Interface-adapter graphs: interfaces are nodes, adapters are directed
//! edges carrying a [`DependencyMatrix`]. Parallel edges and self-loops are
//! allowed; the graph may be disconnected.
//!
//! Interfaces and adapters are kept sorted by name, so ids are stable for a
//! given set of names and id order coincides with name order.

mod format;
mod generate;

pub use format::{parse_graph, serialize_graph};
pub use generate::{gen_random_graph, random_matrix, RandomGraphParams};

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraError, DependencyMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InterfaceId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdapterId(pub usize);

impl fmt::Display for InterfaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for AdapterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{path}: {message}")]
    Json { path: String, message: String },
    #[error("{path}: name must not be empty")]
    EmptyName { path: String },
    #[error("{path}: duplicate name {name:?}")]
    DuplicateName { path: String, name: String },
    #[error("{path}: unknown interface {name:?}")]
    UnknownInterface { path: String, name: String },
    #[error("{path}: interface {interface:?} has no method {method:?}")]
    UnknownMethod {
        path: String,
        interface: String,
        method: String,
    },
    #[error("{path}: {source}")]
    Matrix {
        path: String,
        #[source]
        source: AlgebraError,
    },
    #[error("unknown adapter {0:?}")]
    UnknownAdapter(String),
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
}

impl GraphError {
    /// JSON-path-like location of the offending item, when there is one.
    pub fn path(&self) -> Option<&str> {
        match self {
            GraphError::Json { path, .. }
            | GraphError::EmptyName { path }
            | GraphError::DuplicateName { path, .. }
            | GraphError::UnknownInterface { path, .. }
            | GraphError::UnknownMethod { path, .. }
            | GraphError::Matrix { path, .. } => Some(path),
            GraphError::UnknownAdapter(_) | GraphError::InvalidParameter(_) => None,
        }
    }
}

/// A named interface. The dummy method is implicit at slot 0, so real method
/// `k` (0-based in `methods`) lives at slot `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interface {
    name: String,
    methods: Vec<String>,
}

impl Interface {
    pub fn new(name: impl Into<String>, methods: Vec<String>) -> Self {
        Interface {
            name: name.into(),
            methods,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Real methods in slot order.
    pub fn methods(&self) -> &[String] {
        &self.methods
    }

    /// Slot count, dummy included.
    pub fn dim(&self) -> usize {
        self.methods.len() + 1
    }

    pub fn slot_of(&self, method: &str) -> Option<usize> {
        self.methods.iter().position(|m| m == method).map(|k| k + 1)
    }

    /// Name of a real method slot; `None` for the dummy or out of range.
    pub fn method_at(&self, slot: usize) -> Option<&str> {
        slot.checked_sub(1)
            .and_then(|k| self.methods.get(k))
            .map(String::as_str)
    }
}

/// Adapter as supplied to [`AdapterGraph::new`], endpoints by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdapterSpec {
    pub name: String,
    pub source: String,
    pub target: String,
    pub matrix: DependencyMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Adapter {
    name: String,
    source: InterfaceId,
    target: InterfaceId,
    matrix: DependencyMatrix,
}

impl Adapter {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> InterfaceId {
        self.source
    }

    pub fn target(&self) -> InterfaceId {
        self.target
    }

    pub fn matrix(&self) -> &DependencyMatrix {
        &self.matrix
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdapterGraph {
    interfaces: Vec<Interface>,
    adapters: Vec<Adapter>,
    incoming: Vec<Vec<AdapterId>>,
}

impl AdapterGraph {
    /// Validates and builds a graph. Error paths index into the given
    /// vectors (`$.interfaces[i]`, `$.adapters[i]`).
    pub fn new(interfaces: Vec<Interface>, adapters: Vec<AdapterSpec>) -> Result<Self, GraphError> {
        let by_name = index_interfaces(&interfaces)?;

        let mut adapter_names = HashMap::with_capacity(adapters.len());
        let mut resolved = Vec::with_capacity(adapters.len());
        for (idx, spec) in adapters.into_iter().enumerate() {
            let path = format!("$.adapters[{idx}]");
            check_name(&spec.name, &format!("{path}.name"))?;
            if adapter_names.insert(spec.name.clone(), idx).is_some() {
                return Err(GraphError::DuplicateName {
                    path: format!("{path}.name"),
                    name: spec.name,
                });
            }
            let source = lookup(&by_name, &spec.source, &format!("{path}.source"))?;
            let target = lookup(&by_name, &spec.target, &format!("{path}.target"))?;
            let expected = (interfaces[target].dim(), interfaces[source].dim());
            let found = (spec.matrix.rows(), spec.matrix.cols());
            if expected != found {
                let (e, f) = if expected.0 != found.0 {
                    (expected.0, found.0)
                } else {
                    (expected.1, found.1)
                };
                return Err(GraphError::Matrix {
                    path: format!("{path}.matrix"),
                    source: AlgebraError::DimensionMismatch {
                        expected: e,
                        found: f,
                    },
                });
            }
            resolved.push((spec, source, target));
        }

        // Sort both tables by name and remap endpoint indices.
        let mut order: Vec<usize> = (0..interfaces.len()).collect();
        order.sort_by(|&a, &b| interfaces[a].name.cmp(&interfaces[b].name));
        let mut new_index = vec![0; interfaces.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let mut slots: Vec<Option<Interface>> = interfaces.into_iter().map(Some).collect();
        let interfaces: Vec<Interface> = order
            .iter()
            .map(|&old| slots[old].take().expect("each interface moved once"))
            .collect();

        resolved.sort_by(|a, b| a.0.name.cmp(&b.0.name));
        let adapters: Vec<Adapter> = resolved
            .into_iter()
            .map(|(spec, source, target)| Adapter {
                name: spec.name,
                source: InterfaceId(new_index[source]),
                target: InterfaceId(new_index[target]),
                matrix: spec.matrix,
            })
            .collect();

        let mut incoming = vec![Vec::new(); interfaces.len()];
        for (idx, adapter) in adapters.iter().enumerate() {
            incoming[adapter.target.0].push(AdapterId(idx));
        }

        Ok(AdapterGraph {
            interfaces,
            adapters,
            incoming,
        })
    }

    pub fn interfaces(&self) -> &[Interface] {
        &self.interfaces
    }

    pub fn adapters(&self) -> &[Adapter] {
        &self.adapters
    }

    pub fn interface(&self, id: InterfaceId) -> &Interface {
        &self.interfaces[id.0]
    }

    pub fn adapter(&self, id: AdapterId) -> &Adapter {
        &self.adapters[id.0]
    }

    pub fn interface_id(&self, name: &str) -> Option<InterfaceId> {
        self.interfaces
            .binary_search_by(|i| i.name.as_str().cmp(name))
            .ok()
            .map(InterfaceId)
    }

    pub fn adapter_id(&self, name: &str) -> Option<AdapterId> {
        self.adapters
            .binary_search_by(|a| a.name.as_str().cmp(name))
            .ok()
            .map(AdapterId)
    }

    /// Adapters whose target is `id`, in id (name) order.
    pub fn incoming(&self, id: InterfaceId) -> &[AdapterId] {
        &self.incoming[id.0]
    }

    /// The dependency matrix of the named adapter.
    pub fn dependency_matrix_of(&self, adapter: &str) -> Result<&DependencyMatrix, GraphError> {
        self.adapter_id(adapter)
            .map(|id| &self.adapters[id.0].matrix)
            .ok_or_else(|| GraphError::UnknownAdapter(adapter.to_string()))
    }
}

fn check_name(name: &str, path: &str) -> Result<(), GraphError> {
    if name.is_empty() {
        Err(GraphError::EmptyName {
            path: path.to_string(),
        })
    } else {
        Ok(())
    }
}

fn lookup(by_name: &HashMap<&str, usize>, name: &str, path: &str) -> Result<usize, GraphError> {
    by_name
        .get(name)
        .copied()
        .ok_or_else(|| GraphError::UnknownInterface {
            path: path.to_string(),
            name: name.to_string(),
        })
}

/// Checks interface and method names, returning a name -> index map.
fn index_interfaces(interfaces: &[Interface]) -> Result<HashMap<&str, usize>, GraphError> {
    let mut by_name = HashMap::with_capacity(interfaces.len());
    for (idx, iface) in interfaces.iter().enumerate() {
        let path = format!("$.interfaces[{idx}]");
        check_name(&iface.name, &format!("{path}.name"))?;
        if by_name.insert(iface.name.as_str(), idx).is_some() {
            return Err(GraphError::DuplicateName {
                path: format!("{path}.name"),
                name: iface.name.clone(),
            });
        }
        if let Err(source) = crate::algebra::AvailabilityVector::none(iface.dim()) {
            return Err(GraphError::Matrix {
                path: format!("{path}.methods"),
                source,
            });
        }
        let mut seen = std::collections::HashSet::with_capacity(iface.methods.len());
        for (k, method) in iface.methods.iter().enumerate() {
            let mpath = format!("{path}.methods[{k}]");
            check_name(method, &mpath)?;
            if !seen.insert(method.as_str()) {
                return Err(GraphError::DuplicateName {
                    path: mpath,
                    name: method.clone(),
                });
            }
        }
    }
    Ok(by_name)
}
