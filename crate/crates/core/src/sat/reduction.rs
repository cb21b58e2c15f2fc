//! Gadget construction.
//!
//! Every node except `T` carries the methods `c1..cC` (one per clause)
//! followed by `v1+, v1-, ..., vV+, vV-` (one per literal). Matrices are the
//! identity except where noted:
//!
//! * `S = V0 -> V1 -> ... -> VV`: between consecutive nodes, `lit{i}+` makes
//!   `vi+` always available and `vi-` never, `lit{i}-` the reverse.
//! * `VV = C0`, then for clause `i` and literal position `j`,
//!   `C{i-1} -> C{i}_{j}` (adapter `clause{i}_{j}`) makes method `ci` require
//!   exactly that literal's method, and `C{i}_{j} -> C{i}` (adapter
//!   `join{i}_{j}`) is the identity.
//! * `CC -> T` (adapter `filter`) keeps the clause methods and drops every
//!   literal method; `T` has only `c1..cC`.

use serde::{Deserialize, Serialize};

use super::CnfFormula;
use crate::algebra::{DependencyMatrix, Requirement};
use crate::graph::{AdapterGraph, AdapterSpec, Interface};

/// The `{"source", "target", "threshold"}` sidecar written next to a reduced
/// graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sidecar {
    pub source: String,
    pub target: String,
    pub threshold: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub graph: AdapterGraph,
    pub source: String,
    pub target: String,
    /// Number of clause methods that must reach `target`.
    pub threshold: usize,
    /// `(positive, negative)` literal adapter names, indexed by variable - 1.
    pub literal_adapters: Vec<(String, String)>,
}

impl ReductionOutput {
    pub fn sidecar(&self) -> Sidecar {
        Sidecar {
            source: self.source.clone(),
            target: self.target.clone(),
            threshold: self.threshold,
        }
    }

    /// Canonical sidecar JSON (two-space indent, trailing newline).
    pub fn sidecar_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.sidecar()).expect("sidecar serializes");
        text.push('\n');
        text
    }
}

fn clause_slot(i: usize) -> usize {
    i
}

fn literal_slot(num_clauses: usize, var: usize, positive: bool) -> usize {
    num_clauses + 2 * var - usize::from(positive)
}

fn var_node(i: usize) -> String {
    if i == 0 {
        "S".to_string()
    } else {
        format!("V{i}")
    }
}

/// Builds the gadget graph for `formula`: `v + 4c + 2` interfaces and
/// `2v + 6c + 1` adapters.
pub fn reduce_to_chain(formula: &CnfFormula) -> ReductionOutput {
    let v = formula.num_vars();
    let c = formula.clauses().len();
    let dim = 1 + c + 2 * v;

    let mut methods: Vec<String> = (1..=c).map(|i| format!("c{i}")).collect();
    for k in 1..=v {
        methods.push(format!("v{k}+"));
        methods.push(format!("v{k}-"));
    }
    let clause_methods: Vec<String> = methods[..c].to_vec();

    let mut interfaces: Vec<Interface> = (0..=v)
        .map(|i| Interface::new(var_node(i), methods.clone()))
        .collect();
    for i in 1..=c {
        for j in 1..=3 {
            interfaces.push(Interface::new(format!("C{i}_{j}"), methods.clone()));
        }
        interfaces.push(Interface::new(format!("C{i}"), methods.clone()));
    }
    interfaces.push(Interface::new("T", clause_methods));

    // Identity as requirement rows, so single rows can be swapped out.
    let identity_rows: Vec<Requirement> = (1..dim)
        .map(|slot| Requirement::Requires(vec![slot]))
        .collect();
    let with_rows = |changes: &[(usize, Requirement)]| {
        let mut rows = identity_rows.clone();
        for (slot, req) in changes {
            rows[slot - 1] = req.clone();
        }
        DependencyMatrix::from_requirements(dim, &rows).expect("gadget rows are canonical")
    };

    let mut adapters = Vec::with_capacity(2 * v + 6 * c + 1);
    let mut literal_adapters = Vec::with_capacity(v);
    for k in 1..=v {
        let pos = literal_slot(c, k, true);
        let neg = literal_slot(c, k, false);
        let names = (format!("lit{k}+"), format!("lit{k}-"));
        for (name, granted, denied) in [(&names.0, pos, neg), (&names.1, neg, pos)] {
            adapters.push(AdapterSpec {
                name: name.clone(),
                source: var_node(k - 1),
                target: var_node(k),
                matrix: with_rows(&[(granted, Requirement::Always), (denied, Requirement::Never)]),
            });
        }
        literal_adapters.push(names);
    }

    let identity = DependencyMatrix::identity(dim).expect("gadget dim is small");
    for (idx, clause) in formula.clauses().iter().enumerate() {
        let i = idx + 1;
        let prev = if i == 1 {
            var_node(v)
        } else {
            format!("C{}", i - 1)
        };
        for (pos, lit) in clause.iter().enumerate() {
            let j = pos + 1;
            let sub = format!("C{i}_{j}");
            let needed = literal_slot(c, lit.var(), lit.is_positive());
            adapters.push(AdapterSpec {
                name: format!("clause{i}_{j}"),
                source: prev.clone(),
                target: sub.clone(),
                matrix: with_rows(&[(clause_slot(i), Requirement::Requires(vec![needed]))]),
            });
            adapters.push(AdapterSpec {
                name: format!("join{i}_{j}"),
                source: sub,
                target: format!("C{i}"),
                matrix: identity.clone(),
            });
        }
    }

    let filter_rows: Vec<Requirement> = (1..=c)
        .map(|i| Requirement::Requires(vec![clause_slot(i)]))
        .collect();
    adapters.push(AdapterSpec {
        name: "filter".into(),
        source: format!("C{c}"),
        target: "T".into(),
        matrix: DependencyMatrix::from_requirements(dim, &filter_rows)
            .expect("filter rows are canonical"),
    });

    let graph = AdapterGraph::new(interfaces, adapters).expect("gadget graph is valid");
    ReductionOutput {
        graph,
        source: "S".into(),
        target: "T".into(),
        threshold: c,
        literal_adapters,
    }
}
