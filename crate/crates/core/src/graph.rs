//! Undirected simple graphs with string-keyed vertices and labeled edges.
//!
//! Everything is stored in ordered maps, so iteration, statistics and both
//! serializations are deterministic.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Default vertex bound for [`brute_isomorphic`].
pub const DEFAULT_ISO_BOUND: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Braid,
    Commutation,
    Cover,
}

impl EdgeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeKind::Braid => "braid",
            EdgeKind::Commutation => "commutation",
            EdgeKind::Cover => "cover",
        }
    }
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabeledGraph {
    vertices: BTreeMap<String, Option<String>>,
    // Keys are normalized so that `.0 < .1`.
    edges: BTreeMap<(String, String), EdgeKind>,
}

fn edge_key(a: &str, b: &str) -> (String, String) {
    if a < b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

impl LabeledGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts a vertex; an existing vertex keeps its key and takes the new payload
    /// only if it had none.
    pub fn add_vertex(&mut self, key: impl Into<String>, payload: Option<String>) {
        let slot = self.vertices.entry(key.into()).or_insert(None);
        if slot.is_none() {
            *slot = payload;
        }
    }

    /// Returns `Ok(false)` when the edge already exists.
    pub fn add_edge(&mut self, a: &str, b: &str, kind: EdgeKind) -> Result<bool> {
        if a == b {
            return Err(Error::MalformedGraph(format!("self-loop at {a}")));
        }
        for v in [a, b] {
            if !self.vertices.contains_key(v) {
                return Err(Error::MalformedGraph(format!(
                    "edge endpoint {v} is not a vertex"
                )));
            }
        }
        let key = edge_key(a, b);
        if self.edges.contains_key(&key) {
            return Ok(false);
        }
        self.edges.insert(key, kind);
        Ok(true)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, key: &str) -> bool {
        self.vertices.contains_key(key)
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.vertices.keys().map(String::as_str)
    }

    pub fn payload(&self, key: &str) -> Option<&str> {
        self.vertices.get(key).and_then(|p| p.as_deref())
    }

    /// Edges as `(smaller key, larger key, kind)` in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, EdgeKind)> {
        self.edges
            .iter()
            .map(|((a, b), k)| (a.as_str(), b.as_str(), *k))
    }

    pub fn edge_kind(&self, a: &str, b: &str) -> Option<EdgeKind> {
        self.edges.get(&edge_key(a, b)).copied()
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        self.edge_kind(a, b).is_some()
    }

    /// The underlying simple graph as sorted key pairs, ignoring kinds.
    pub fn edge_set(&self) -> BTreeSet<(String, String)> {
        self.edges.keys().cloned().collect()
    }

    pub fn neighbors(&self, key: &str) -> BTreeSet<&str> {
        self.edges
            .keys()
            .filter_map(|(a, b)| {
                if a == key {
                    Some(b.as_str())
                } else if b == key {
                    Some(a.as_str())
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, key: &str) -> usize {
        self.edges
            .keys()
            .filter(|(a, b)| a == key || b == key)
            .count()
    }

    fn indexed(&self) -> Indexed {
        Indexed::new(self)
    }

    /// Coefficient of `d^j` counts the vertices of degree `j`.
    pub fn degree_histogram(&self) -> IntPolynomial {
        let idx = self.indexed();
        let mut hist = Vec::new();
        for adj in &idx.adj {
            let d = adj.len();
            if hist.len() <= d {
                hist.resize(d + 1, 0i64);
            }
            hist[d] += 1;
        }
        IntPolynomial::new(hist)
    }

    pub fn degree_sum(&self) -> usize {
        self.indexed().adj.iter().map(Vec::len).sum()
    }

    /// Number of 4-cycle subgraphs.
    ///
    /// Each 4-cycle has two diagonals; counting pairs of common neighbours over
    /// every unordered vertex pair visits each cycle once per diagonal.
    pub fn count_4cycles(&self) -> usize {
        let idx = self.indexed();
        let n = idx.adj.len();
        let sets: Vec<BTreeSet<usize>> = idx
            .adj
            .iter()
            .map(|a| a.iter().copied().collect())
            .collect();
        let mut twice = 0;
        for u in 0..n {
            for v in u + 1..n {
                let common = sets[u].intersection(&sets[v]).count();
                twice += common * common.saturating_sub(1) / 2;
            }
        }
        twice / 2
    }

    /// The empty graph counts as disconnected; a single vertex is connected.
    pub fn is_connected(&self) -> bool {
        let idx = self.indexed();
        if idx.adj.is_empty() {
            return false;
        }
        let mut seen = vec![false; idx.adj.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &idx.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == idx.adj.len()
    }

    pub fn is_bipartite(&self) -> bool {
        let idx = self.indexed();
        let mut color: Vec<Option<bool>> = vec![None; idx.adj.len()];
        for start in 0..idx.adj.len() {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &idx.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Graphviz rendering: one node statement per vertex, then one `--`
    /// statement per edge labeled with its kind.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "graph {} {{", quote(name)).unwrap();
        for (key, payload) in &self.vertices {
            match payload {
                Some(p) => writeln!(out, "  {} [tooltip={}];", quote(key), quote(p)).unwrap(),
                None => writeln!(out, "  {};", quote(key)).unwrap(),
            }
        }
        for ((a, b), kind) in &self.edges {
            writeln!(
                out,
                "  {} -- {} [label={}];",
                quote(a),
                quote(b),
                quote(kind.as_str())
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json_value(&self) -> GraphJson {
        GraphJson {
            vertices: self
                .vertices
                .iter()
                .map(|(id, payload)| VertexJson {
                    id: id.clone(),
                    payload: payload.clone(),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|((a, b), kind)| EdgeJson {
                    source: a.clone(),
                    target: b.clone(),
                    kind: *kind,
                })
                .collect(),
        }
    }

    /// Pretty-printed, newline-terminated JSON document.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value()).expect("graph serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph JSON: {e}")))?;
        let mut g = LabeledGraph::new();
        for v in doc.vertices {
            if g.contains_vertex(&v.id) {
                return Err(Error::MalformedGraph(format!("duplicate vertex {}", v.id)));
            }
            g.add_vertex(v.id, v.payload);
        }
        for e in doc.edges {
            if !g.add_edge(&e.source, &e.target, e.kind)? {
                return Err(Error::MalformedGraph(format!(
                    "parallel edge {} -- {}",
                    e.source, e.target
                )));
            }
        }
        Ok(g)
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub payload: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub source: String,
    pub target: String,
    pub kind: EdgeKind,
}

/// Dense index view used by the traversal and search routines.
struct Indexed {
    keys: Vec<String>,
    adj: Vec<Vec<usize>>,
}

impl Indexed {
    fn new(g: &LabeledGraph) -> Self {
        let keys: Vec<String> = g.vertices.keys().cloned().collect();
        let pos: BTreeMap<&str, usize> = keys
            .iter()
            .enumerate()
            .map(|(i, k)| (k.as_str(), i))
            .collect();
        let mut adj = vec![Vec::new(); keys.len()];
        for (a, b) in g.edges.keys() {
            let (i, j) = (pos[a.as_str()], pos[b.as_str()]);
            adj[i].push(j);
            adj[j].push(i);
        }
        Indexed { keys, adj }
    }
}

/// Checks that `map` is a bijection `V(g) -> V(h)` carrying the edge set of
/// `g` exactly onto the edge set of `h`. Edge kinds are not compared.
pub fn verify_isomorphism(
    g: &LabeledGraph,
    h: &LabeledGraph,
    map: &BTreeMap<String, String>,
) -> Result<bool> {
    if map.len() != g.vertex_count() {
        return Err(Error::NonBijectiveMap(format!(
            "map has {} entries for {} vertices",
            map.len(),
            g.vertex_count()
        )));
    }
    let mut image = BTreeSet::new();
    for (src, dst) in map {
        if !g.contains_vertex(src) {
            return Err(Error::NonBijectiveMap(format!(
                "{src} is not a source vertex"
            )));
        }
        if !h.contains_vertex(dst) {
            return Err(Error::NonBijectiveMap(format!(
                "{dst} is not a target vertex"
            )));
        }
        if !image.insert(dst.as_str()) {
            return Err(Error::NonBijectiveMap(format!("{dst} is hit twice")));
        }
    }
    if image.len() != h.vertex_count() {
        return Err(Error::NonBijectiveMap("map is not onto".into()));
    }
    if g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(g.edges().all(|(a, b, _)| h.has_edge(&map[a], &map[b])))
}

/// Backtracking isomorphism search with degree pruning.
///
/// Returns some isomorphism `V(g) -> V(h)` or `None`. Fails when either graph
/// has more than `bound` vertices.
pub fn brute_isomorphic(
    g: &LabeledGraph,
    h: &LabeledGraph,
    bound: usize,
) -> Result<Option<BTreeMap<String, String>>> {
    for graph in [g, h] {
        if graph.vertex_count() > bound {
            return Err(Error::IsoBoundExceeded {
                vertices: graph.vertex_count(),
                bound,
            });
        }
    }
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let gi = g.indexed();
    let hi = h.indexed();
    let gdeg: Vec<usize> = gi.adj.iter().map(Vec::len).collect();
    let hdeg: Vec<usize> = hi.adj.iter().map(Vec::len).collect();
    {
        let (mut a, mut b) = (gdeg.clone(), hdeg.clone());
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Ok(None);
        }
    }
    let n = gi.adj.len();
    let gset: Vec<Vec<bool>> = adjacency_matrix(&gi);
    let hset: Vec<Vec<bool>> = adjacency_matrix(&hi);

    // Visit source vertices in BFS order from a max-degree vertex so that each
    // new vertex is usually adjacent to an already-mapped one.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| gdeg[v])
            .unwrap();
        placed[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            let mut next: Vec<usize> = gi.adj[u].iter().copied().filter(|&v| !placed[v]).collect();
            next.sort_by_key(|&v| std::cmp::Reverse(gdeg[v]));
            for v in next {
                placed[v] = true;
                queue.push_back(v);
            }
        }
    }

    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let found = search(
        0,
        &order,
        &gset,
        &hset,
        &gdeg,
        &hdeg,
        &mut assign,
        &mut used,
    );
    if !found {
        return Ok(None);
    }
    Ok(Some(
        (0..n)
            .map(|i| (gi.keys[i].clone(), hi.keys[assign[i]].clone()))
            .collect(),
    ))
}

fn adjacency_matrix(idx: &Indexed) -> Vec<Vec<bool>> {
    let n = idx.adj.len();
    let mut m = vec![vec![false; n]; n];
    for (u, nbrs) in idx.adj.iter().enumerate() {
        for &v in nbrs {
            m[u][v] = true;
        }
    }
    m
}

#[allow(clippy::too_many_arguments)]
fn search(
    depth: usize,
    order: &[usize],
    g: &[Vec<bool>],
    h: &[Vec<bool>],
    gdeg: &[usize],
    hdeg: &[usize],
    assign: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for cand in 0..h.len() {
        if used[cand] || hdeg[cand] != gdeg[u] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&prev| g[u][prev] == h[cand][assign[prev]]);
        if !consistent {
            continue;
        }
        assign[u] = cand;
        used[cand] = true;
        if search(depth + 1, order, g, h, gdeg, hdeg, assign, used) {
            return true;
        }
        used[cand] = false;
        assign[u] = usize::MAX;
    }
    false
}
