//! File formats: groups, certificates and search reports as JSON, graphs and
//! digraphs as edge lists.
//!
//! JSON documents carry `"format": 1`. Permutations are written in 1-indexed
//! cycle notation; graph files are 0-indexed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finder::{Certificate, Step};
use crate::graphs::{Digraph, Graph};
use crate::oracle::SearchReport;
use crate::permcore::{PermGroup, Permutation};

pub const FORMAT_VERSION: u32 = 1;

fn check_format(format: Option<u32>) -> Result<()> {
    match format {
        None | Some(FORMAT_VERSION) => Ok(()),
        Some(f) => Err(Error::Parse(format!("unsupported format version {f}"))),
    }
}

#[derive(Serialize)]
struct GroupOut {
    format: u32,
    degree: usize,
    generators: Vec<String>,
}

#[derive(Deserialize)]
struct GroupIn {
    format: Option<u32>,
    degree: usize,
    generators: Vec<String>,
}

pub fn group_to_json(group: &PermGroup) -> String {
    let doc = GroupOut {
        format: FORMAT_VERSION,
        degree: group.degree(),
        generators: group
            .generators()
            .iter()
            .map(Permutation::to_cycle_string)
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serialisable")
}

pub fn group_from_json(text: &str) -> Result<PermGroup> {
    let doc: GroupIn = serde_json::from_str(text)?;
    check_format(doc.format)?;
    let gens = doc
        .generators
        .iter()
        .map(|s| Permutation::parse_cycles(doc.degree, s))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(doc.degree, gens)
}

#[derive(Serialize, Deserialize)]
struct CertificateDoc {
    #[serde(default)]
    format: Option<u32>,
    #[serde(default)]
    degree: Option<usize>,
    element: String,
    order: u64,
    cycle_length: usize,
    branch_trace: Vec<String>,
    verified: bool,
}

pub fn certificate_to_json(cert: &Certificate) -> String {
    let doc = CertificateDoc {
        format: Some(FORMAT_VERSION),
        degree: Some(cert.element.degree()),
        element: cert.element.to_cycle_string(),
        order: cert.order,
        cycle_length: cert.cycle_length,
        branch_trace: cert.branch_trace.iter().map(Step::to_string).collect(),
        verified: cert.verified,
    };
    serde_json::to_string_pretty(&doc).expect("serialisable")
}

/// Parses a certificate. Without a `degree` field the degree is the largest
/// point mentioned, or `default_degree` when given.
pub fn certificate_from_json(text: &str, default_degree: Option<usize>) -> Result<Certificate> {
    let doc: CertificateDoc = serde_json::from_str(text)?;
    check_format(doc.format)?;
    let degree = match (doc.degree, default_degree) {
        (Some(d), _) | (None, Some(d)) => d,
        (None, None) => Permutation::max_point_in(&doc.element)?,
    };
    let element = Permutation::parse_cycles(degree, &doc.element)?;
    let branch_trace = doc
        .branch_trace
        .iter()
        .map(|s| s.parse())
        .collect::<Result<Vec<Step>>>()?;
    Ok(Certificate {
        element,
        order: doc.order,
        cycle_length: doc.cycle_length,
        branch_trace,
        verified: doc.verified,
    })
}

#[derive(Serialize)]
struct ReportDoc {
    format: u32,
    found: Option<String>,
    elements_scanned: u64,
    budget: u64,
    exhausted: bool,
    budget_exceeded: bool,
}

pub fn report_to_json(report: &SearchReport) -> String {
    let doc = ReportDoc {
        format: FORMAT_VERSION,
        found: report.found.as_ref().map(Permutation::to_cycle_string),
        elements_scanned: report.elements_scanned,
        budget: report.budget,
        exhausted: report.exhausted,
        budget_exceeded: report.budget_exceeded(),
    };
    serde_json::to_string_pretty(&doc).expect("serialisable")
}

/// Either kind of edge-list file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFile {
    Graph(Graph),
    Digraph(Digraph),
}

pub fn parse_graph_file(text: &str) -> Result<GraphFile> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [kind, n, m] = fields[..] else {
        return Err(Error::Parse(format!("bad header `{header}`")));
    };
    let number = |s: &str, line: usize| {
        s.parse::<usize>()
            .map_err(|_| Error::Parse(format!("line {}: `{s}` is not a number", line + 1)))
    };
    let n = number(n, 0)?;
    let m = number(m, 0)?;
    let mut pairs = Vec::with_capacity(m);
    for (i, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(Error::Parse(format!("line {}: expected `u v`", i + 1)));
        };
        pairs.push((number(u, i)?, number(v, i)?));
    }
    if pairs.len() != m {
        return Err(Error::Parse(format!(
            "header promises {m} edges, found {}",
            pairs.len()
        )));
    }
    match kind {
        "graph" => Ok(GraphFile::Graph(Graph::from_edges(n, &pairs)?)),
        "digraph" => Ok(GraphFile::Digraph(Digraph::from_arcs(n, &pairs)?)),
        other => Err(Error::Parse(format!("unknown graph kind `{other}`"))),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    match parse_graph_file(text)? {
        GraphFile::Graph(g) => Ok(g),
        GraphFile::Digraph(_) => Err(Error::Parse("expected `graph`, found `digraph`".into())),
    }
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    match parse_graph_file(text)? {
        GraphFile::Digraph(d) => Ok(d),
        GraphFile::Graph(_) => Err(Error::Parse("expected `digraph`, found `graph`".into())),
    }
}

fn write_pairs(kind: &str, n: usize, pairs: &[(usize, usize)]) -> String {
    let mut out = format!("{kind} {n} {}\n", pairs.len());
    for (u, v) in pairs {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn graph_to_string(graph: &Graph) -> String {
    write_pairs("graph", graph.n(), &graph.edges())
}

pub fn digraph_to_string(digraph: &Digraph) -> String {
    write_pairs("digraph", digraph.n(), &digraph.arcs())
}
