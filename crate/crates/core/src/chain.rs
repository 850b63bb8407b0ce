//! The five isomorphic graphs attached to `ₙw` and the explicit maps between
//! them: words → tableaux → row readings → partitions → lattice points.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::family::{family_graph, family_permutation, FamilyBudget};
use crate::graph::{brute_isomorphic, verify_isomorphism, LabeledGraph};
use crate::simplex::{build_lattice_graph, point_from_partition, young_lattice_rectangle};
use crate::tableaux::{
    build_reading_hasse, build_tableau_hasse, lehmer_partition, row_reading, word_to_tableau,
};
use crate::words;

/// Graph names in chain order.
pub const GRAPH_NAMES: [&str; 5] = ["words", "tableaux", "readings", "young", "simplex"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub name: String,
    pub order: usize,
    pub size: usize,
    pub degree_histogram: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Link {
    pub from: String,
    pub to: String,
    pub map: BTreeMap<String, String>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub n: usize,
    pub k: usize,
    pub graphs: Vec<GraphSummary>,
    pub links: Vec<Link>,
    pub pass: bool,
}

/// The built graphs alongside the report, for callers that emit them.
#[derive(Debug, Clone)]
pub struct Chain {
    pub graphs: Vec<(String, LabeledGraph)>,
    pub report: ChainReport,
}

pub fn isomorphism_chain(n: usize, budget: FamilyBudget) -> Result<Chain> {
    let k = n.saturating_sub(2);
    let g_words = family_graph(n, budget)?;
    let graphs = vec![
        g_words,
        build_tableau_hasse(n)?,
        build_reading_hasse(n)?,
        young_lattice_rectangle(k)?,
        build_lattice_graph(k)?,
    ];

    let w = family_permutation(n)?;
    let mut maps: Vec<BTreeMap<String, String>> = vec![BTreeMap::new(); 4];
    for word in words::enumerate_reduced_words(&w) {
        let tab = word_to_tableau(&word, n)?;
        let reading = row_reading(&tab);
        let lambda = lehmer_partition(&reading);
        let point = point_from_partition(&lambda, k)?;
        let keys = [
            words::word_key(&word, n),
            tab.to_string(),
            reading.to_string(),
            lambda.to_string(),
            point.to_string(),
        ];
        for (i, map) in maps.iter_mut().enumerate() {
            map.insert(keys[i].clone(), keys[i + 1].clone());
        }
    }

    let mut links = Vec::with_capacity(4);
    for (i, map) in maps.into_iter().enumerate() {
        let holds = verify_isomorphism(&graphs[i], &graphs[i + 1], &map)?;
        links.push(Link {
            from: GRAPH_NAMES[i].to_string(),
            to: GRAPH_NAMES[i + 1].to_string(),
            map,
            holds,
        });
    }

    let summaries = graphs
        .iter()
        .zip(GRAPH_NAMES)
        .map(|(g, name)| GraphSummary {
            name: name.to_string(),
            order: g.vertex_count(),
            size: g.edge_count(),
            degree_histogram: g.degree_histogram().display("d"),
        })
        .collect();
    let pass = links.iter().all(|l| l.holds);
    Ok(Chain {
        graphs: GRAPH_NAMES
            .iter()
            .map(|s| s.to_string())
            .zip(graphs)
            .collect(),
        report: ChainReport {
            n,
            k,
            graphs: summaries,
            links,
            pass,
        },
    })
}

/// Independent check that the word graph and the lattice graph are isomorphic,
/// by backtracking search with no use of the explicit maps.
pub fn brute_confirm(n: usize, bound: usize) -> Result<bool> {
    let g = family_graph(n, FamilyBudget { max_n: n })?;
    let h = build_lattice_graph(n - 2)?;
    Ok(match brute_isomorphic(&g, &h, bound)? {
        Some(map) => verify_isomorphism(&g, &h, &map)?,
        None => false,
    })
}

impl fmt::Display for ChainReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "isomorphism chain n = {}, k = {}", self.n, self.k)?;
        writeln!(
            f,
            "{:<10} {:>6} {:>6}  degree histogram",
            "graph", "order", "size"
        )?;
        for g in &self.graphs {
            writeln!(
                f,
                "{:<10} {:>6} {:>6}  {}",
                g.name, g.order, g.size, g.degree_histogram
            )?;
        }
        for l in &self.links {
            let status = if l.holds { "verified" } else { "FAILED" };
            writeln!(f, "{:<10} -> {:<10} {status}", l.from, l.to)?;
        }
        writeln!(f, "result: {}", if self.pass { "PASS" } else { "FAIL" })
    }
}
