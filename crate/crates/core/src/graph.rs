//! Simple undirected graphs on nodes `1..=n`, the sparsity patterns of the cones.
//!
//! Nodes carry 1-based labels everywhere in the public API. Matrices indexed by
//! a graph use row/column `v - 1` for node `v`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: node {node} out of range 1..={n}")]
    NodeOutOfRange { line: usize, node: usize, n: usize },
    #[error("node {node} out of range 1..={n}")]
    InvalidNode { node: usize, n: usize },
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("empty graph document")]
    Empty,
}

/// A simple undirected graph with nodes labeled `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    // adj[v - 1] holds the sorted neighbor labels of v
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = GraphError;

    fn try_from(repr: GraphRepr) -> Result<Self, Self::Error> {
        Graph::from_edges(repr.n, repr.edges.iter().map(|&[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    /// Edgeless graph on `n` nodes.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints. Edge orientation is ignored.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph on `n` nodes.
    pub fn complete(n: usize) -> Self {
        let adj = (1..=n)
            .map(|v| (1..=n).filter(|&u| u != v).collect())
            .collect();
        Graph { n, adj }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_node(u)?;
        self.check_node(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let (a, b) = (u.min(v), u.max(v));
        match self.adj[a - 1].binary_search(&b) {
            Ok(_) => Err(GraphError::DuplicateEdge(a, b)),
            Err(pos) => {
                self.adj[a - 1].insert(pos, b);
                let pos = self.adj[b - 1].binary_search(&a).unwrap_err();
                self.adj[b - 1].insert(pos, a);
                Ok(())
            }
        }
    }

    fn check_node(&self, v: usize) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::InvalidNode { node: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn nodes(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    pub fn contains_node(&self, v: usize) -> bool {
        v >= 1 && v <= self.n
    }

    /// Sorted neighbor labels of `v`.
    ///
    /// Panics if `v` is not a node of the graph.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.contains_node(u) && self.contains_node(v) && self.adj[u - 1].binary_search(&v).is_ok()
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, nbrs)| {
            let u = i + 1;
            nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v))
        })
    }

    /// True when every pair of distinct nodes in `nodes` is adjacent.
    pub fn is_clique(&self, nodes: &[usize]) -> bool {
        nodes
            .iter()
            .enumerate()
            .all(|(k, &u)| nodes[k + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Connected components as sorted node lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in self.nodes() {
            if seen[start - 1] {
                continue;
            }
            seen[start - 1] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u) {
                    if !seen[w - 1] {
                        seen[w - 1] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Disjoint union; the nodes of `other` are relabeled `n + 1..`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nbrs| nbrs.iter().map(|&v| v + shift).collect()),
        );
        Graph {
            n: self.n + other.n,
            adj,
        }
    }

    /// Serializes to the edge-list text format accepted by [`parse_graph`].
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph(s)
    }
}

/// Parses the edge-list document format.
///
/// The first significant line holds `n`; each following one holds an edge
/// `i j`. A `#` starts a comment running to the end of the line, and blank
/// lines are skipped. Edges are written with `i < j`; the reversed form is
/// accepted and then counts as a duplicate of the forward one.
///
/// ```
/// let g = chordcone::parse_graph("# star\n3\n1 2\n1 3\n").unwrap();
/// assert_eq!(g.node_count(), 3);
/// assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (1, 3)]);
/// ```
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    });

    let (line, header) = lines.next().ok_or(GraphError::Empty)?;
    let n: usize = header.parse().map_err(|_| GraphError::Malformed {
        line,
        message: format!("expected node count, found {header:?}"),
    })?;
    let mut g = Graph::new(n);

    for (line, body) in lines {
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(GraphError::Malformed {
                line,
                message: format!("expected two node indices, found {body:?}"),
            });
        }
        let mut ends = [0usize; 2];
        for (slot, field) in ends.iter_mut().zip(&fields) {
            *slot = field.parse().map_err(|_| GraphError::Malformed {
                line,
                message: format!("invalid node index {field:?}"),
            })?;
            if *slot == 0 || *slot > n {
                return Err(GraphError::NodeOutOfRange {
                    line,
                    node: *slot,
                    n,
                });
            }
        }
        match g.add_edge(ends[0], ends[1]) {
            Ok(()) => {}
            Err(GraphError::SelfLoop(_)) => {
                return Err(GraphError::Malformed {
                    line,
                    message: format!("self-loop on node {}", ends[0]),
                })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(g)
}
