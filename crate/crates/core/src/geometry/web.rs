//! The projection graph between families `F^(n,m)`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write;

use crate::recognition::{Analysis, SearchRow};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WebNode {
    pub codim: usize,
    pub families: Option<u32>,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct WebEdge {
    pub from: (u32, u32),
    pub to: (u32, u32),
    pub label: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WebGraph {
    pub nodes: BTreeMap<(u32, u32), WebNode>,
    pub edges: Vec<WebEdge>,
}

/// Nodes for realised rows (codimension at most 4) with projection edges
/// `(n,m) -> (n-1,m)` from a `1/3` point and `(n,m) -> (n+1,m-1)` from a `1/5` point.
pub fn build_web(rows: &[SearchRow], families: &BTreeMap<(u32, u32), u32>) -> WebGraph {
    let mut nodes = BTreeMap::new();
    for row in rows {
        if let Analysis::Embedded(c) = &row.analysis {
            nodes.insert(
                (row.n, row.m),
                WebNode { codim: c.codim, families: families.get(&(row.n, row.m)).copied(), label: c.describe() },
            );
        }
    }
    let mut edges = Vec::new();
    for &(n, m) in nodes.keys() {
        if n >= 1 && nodes.contains_key(&(n - 1, m)) {
            edges.push(WebEdge { from: (n, m), to: (n - 1, m), label: "project 1/3" });
        }
        if m >= 1 && nodes.contains_key(&(n + 1, m - 1)) {
            edges.push(WebEdge { from: (n, m), to: (n + 1, m - 1), label: "project 1/5" });
        }
    }
    edges.sort();
    WebGraph { nodes, edges }
}

impl WebGraph {
    /// Connectivity of the underlying undirected graph; the empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.nodes.keys().next() else { return true };
        let mut adj: BTreeMap<(u32, u32), Vec<(u32, u32)>> = BTreeMap::new();
        for e in &self.edges {
            adj.entry(e.from).or_default().push(e.to);
            adj.entry(e.to).or_default().push(e.from);
        }
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in adj.get(&v).into_iter().flatten() {
                if seen.insert(*w) {
                    queue.push_back(*w);
                }
            }
        }
        seen.len() == self.nodes.len()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph web {\n  node [shape=box];\n");
        for ((n, m), node) in &self.nodes {
            let fam = node.families.map(|f| format!("\\nfamilies: {f}")).unwrap_or_default();
            let _ =
                writeln!(out, "  \"{n},{m}\" [label=\"({n},{m})\\n{}\\ncodim {}{}\"];", node.label, node.codim, fam);
        }
        for e in &self.edges {
            let _ =
                writeln!(out, "  \"{},{}\" -> \"{},{}\" [label=\"{}\"];", e.from.0, e.from.1, e.to.0, e.to.1, e.label);
        }
        out.push_str("}\n");
        out
    }
}

/// Family counts of the codimension 4 entries with `P1 = 3, P2 = 6`.
pub fn known_family_counts() -> BTreeMap<(u32, u32), u32> {
    BTreeMap::from([((6, 0), 2), ((4, 1), 2), ((2, 2), 3), ((0, 3), 2)])
}
