use std::path::Path;

use adapter_chain::graph::{
    gen_random_graph, parse_graph, serialize_graph, AdapterGraph, GraphError, RandomGraphParams,
};
use adapter_chain::sat::{
    parse_dimacs, reduce_to_chain, solve_sat_via_chain, CnfError, CnfFormula, ReductionError,
};
use adapter_chain::search::{
    greedy_chain, greedy_chain_weighted, oracle_best_chain, Chain, FoundChain, Score, SearchError,
    WeightAssignment,
};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Value};

use crate::files;

/// Why a command did not succeed, and the exit code that goes with it.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Negative(String),
    Guard(String),
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Negative(_) => 3,
            Failure::Guard(_) => 4,
            Failure::Internal(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Negative(m) | Failure::Guard(m) | Failure::Internal(m) => {
                m
            }
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<CnfError> for Failure {
    fn from(e: CnfError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::GuardExceeded { .. } => Failure::Guard(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<ReductionError> for Failure {
    fn from(e: ReductionError) -> Self {
        match e {
            ReductionError::Search(e) => e.into(),
            ReductionError::GuardExceeded { .. } => Failure::Guard(e.to_string()),
            ReductionError::ExtractionMismatch { .. } => Failure::Internal(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn load_graph(path: &Path) -> Result<AdapterGraph, Failure> {
    let bytes = files::read(path)?;
    parse_graph(&bytes).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_cnf(path: &Path) -> Result<CnfFormula, Failure> {
    let bytes = files::read(path)?;
    let text = String::from_utf8(bytes)
        .map_err(|_| Failure::Input(format!("{}: not UTF-8", path.display())))?;
    parse_dimacs(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("values serialize")
    );
}

fn list(items: &[&str]) -> String {
    if items.is_empty() {
        "(none)".into()
    } else {
        items.join(",")
    }
}

/// `chain` and `oracle`: same report, different search.
pub fn chain(path: &Path, source: &str, target: &str, json: bool, exhaustive: bool) -> Outcome {
    let g = load_graph(path)?;
    let outcome = if exhaustive {
        oracle_best_chain(&g, source, target)?
    } else {
        greedy_chain(&g, source, target)?
    };
    let found = outcome
        .into_found()
        .ok_or_else(|| Failure::Negative(format!("no adapter chain from {source} to {target}")))?;
    let names = found.chain.names(&g);
    let available = found.available_methods(&g);
    if json {
        print_json(
            &json!({ "chain": names, "available": available, "lost": found.methods_lost() }),
        );
    } else {
        println!("chain: {}", list(&names));
        println!("available: {}", list(&available));
        println!("lost: {}", found.methods_lost());
    }
    Ok(())
}

fn load_weights(
    g: &AdapterGraph,
    target: &str,
    path: Option<&Path>,
) -> Result<WeightAssignment, Failure> {
    let mut named = Vec::new();
    if let Some(path) = path {
        let bytes = files::read(path)?;
        let doc: Value = serde_json::from_slice(&bytes)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        let Value::Object(map) = doc else {
            return Err(Failure::Input(format!(
                "{}: expected a JSON object",
                path.display()
            )));
        };
        for (method, value) in map {
            let weight = match &value {
                Value::Number(n) => files::decimal(&n.to_string()),
                _ => None,
            }
            .ok_or_else(|| {
                Failure::Input(format!(
                    "{}: weight of {method:?} is not a number",
                    path.display()
                ))
            })?;
            named.push((method, weight));
        }
    }
    Ok(WeightAssignment::from_named(
        g,
        target,
        named,
        BigRational::one(),
    )?)
}

pub fn discover(
    path: &Path,
    sources: &[String],
    target: &str,
    weights: Option<&Path>,
    json: bool,
) -> Outcome {
    let g = load_graph(path)?;
    let sources: Vec<&str> = sources
        .iter()
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .collect();
    if sources.is_empty() {
        return Err(SearchError::EmptySources.into());
    }
    let w = load_weights(&g, target, weights)?;
    let found = greedy_chain_weighted(&g, &sources, target, &w)?
        .into_found()
        .ok_or_else(|| {
            Failure::Negative(format!(
                "no adapter chain from {} to {target}",
                sources.join(",")
            ))
        })?;
    report_weighted(&g, &found, json);
    Ok(())
}

fn report_weighted(g: &AdapterGraph, found: &FoundChain, json: bool) {
    let Score::Weight(weight) = &found.score else {
        unreachable!("weighted search scores by weight");
    };
    let source = g.interface(found.source).name();
    let names = found.chain.names(g);
    if json {
        print_json(&json!({
            "source": source,
            "chain": names,
            "available": found.available_methods(g),
            "weight": weight.to_f64(),
            "weight_exact": files::show_rational(weight),
        }));
    } else {
        println!("source: {source}");
        println!("chain: {}", list(&names));
        println!("weight: {}", files::show_rational(weight));
    }
}

pub fn apply(path: &Path, adapters: &[String], json: bool) -> Outcome {
    let g = load_graph(path)?;
    let chain = Chain::from_names(&g, adapters)?;
    let p = chain.availability();
    let target = g.interface(chain.target());
    let (mut on, mut off) = (Vec::new(), Vec::new());
    for (k, m) in target.methods().iter().enumerate() {
        if p.get(k + 1) {
            on.push(m.as_str());
        } else {
            off.push(m.as_str());
        }
    }
    if json {
        print_json(&json!({ "interface": target.name(), "available": on, "unavailable": off }));
    } else {
        println!("{}", target.name());
        for (k, m) in target.methods().iter().enumerate() {
            let state = if p.get(k + 1) {
                "available"
            } else {
                "unavailable"
            };
            println!("  {m}: {state}");
        }
    }
    Ok(())
}

pub fn reduce(cnf: &Path, output: &Path, json: bool) -> Outcome {
    let formula = load_cnf(cnf)?;
    let reduced = reduce_to_chain(&formula);
    let sidecar = files::sidecar_path(output);
    files::write_atomic(output, &serialize_graph(&reduced.graph))?;
    files::write_atomic(&sidecar, &reduced.sidecar_json())?;
    let (nodes, edges) = (
        reduced.graph.interfaces().len(),
        reduced.graph.adapters().len(),
    );
    if json {
        print_json(&json!({
            "nodes": nodes,
            "edges": edges,
            "graph": output.display().to_string(),
            "sidecar": sidecar.display().to_string(),
            "source": reduced.source,
            "target": reduced.target,
            "threshold": reduced.threshold,
        }));
    } else {
        println!("{nodes} nodes, {edges} edges");
    }
    Ok(())
}

pub fn solve_sat(cnf: &Path, json: bool) -> Outcome {
    let formula = load_cnf(cnf)?;
    let out = solve_sat_via_chain(&formula)?;
    if json {
        print_json(&json!({ "satisfiable": out.satisfiable, "assignment": out.assignment }));
    } else if let Some(a) = &out.assignment {
        println!("SAT");
        let values: Vec<String> = a
            .iter()
            .enumerate()
            .map(|(k, v)| format!("x{}={v}", k + 1))
            .collect();
        println!("{}", values.join(" "));
    } else {
        println!("UNSAT");
    }
    if out.satisfiable {
        Ok(())
    } else {
        Err(Failure::Negative("formula is unsatisfiable".into()))
    }
}

pub fn generate(params: &RandomGraphParams, output: &Path, json: bool) -> Outcome {
    let g = gen_random_graph(params)?;
    files::write_atomic(output, &serialize_graph(&g))?;
    let (n, m) = (g.interfaces().len(), g.adapters().len());
    if json {
        print_json(
            &json!({ "path": output.display().to_string(), "interfaces": n, "adapters": m }),
        );
    } else {
        println!("wrote {} ({n} interfaces, {m} adapters)", output.display());
    }
    Ok(())
}

pub fn validate(path: &Path, json: bool) -> Outcome {
    let bytes = files::read(path)?;
    match parse_graph(&bytes) {
        Ok(_) => {
            if json {
                print_json(&json!({ "ok": true }));
            } else {
                println!("OK");
            }
            Ok(())
        }
        Err(e) => {
            if json {
                print_json(&json!({ "ok": false, "path": e.path(), "error": e.to_string() }));
            }
            Err(Failure::Input(format!("{}: {e}", path.display())))
        }
    }
}
