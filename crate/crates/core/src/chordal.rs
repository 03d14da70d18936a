//! Chordality via maximum cardinality search, maximal cliques from a perfect
//! elimination order, and recognition of homogeneous chordal graphs
//! (chordal graphs without an induced 4-node path).

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChordalError {
    #[error("graph is not chordal; chordless cycle {0:?}")]
    NotChordal(Vec<usize>),
    #[error("elimination order is not a permutation of 1..={0}")]
    NotPermutation(usize),
    #[error("later neighbors of node {0} do not form a clique")]
    NotPerfectEliminationOrder(usize),
    #[error("certificate cliques do not match the graph's maximal cliques")]
    CliqueMismatch,
}

/// A perfect elimination order together with the maximal cliques it yields.
///
/// `peo[k]` is the k-th node eliminated; the neighbors of `peo[k]` that come
/// later in the order form a clique. Cliques are sorted ascending and the list
/// is sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordalCertificate {
    pub peo: Vec<usize>,
    pub maximal_cliques: Vec<Vec<usize>>,
}

impl ChordalCertificate {
    /// Position of each node in the elimination order, indexed by `node - 1`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.peo.len()];
        for (k, &v) in self.peo.iter().enumerate() {
            pos[v - 1] = k;
        }
        pos
    }

    /// Maximal cliques that contain `v`.
    pub fn cliques_containing(&self, v: usize) -> impl Iterator<Item = &Vec<usize>> + '_ {
        self.maximal_cliques
            .iter()
            .filter(move |c| c.binary_search(&v).is_ok())
    }
}

/// Outcome of a chordality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    Chordal(ChordalCertificate),
    /// An induced cycle of length at least 4, starting at its smallest node.
    NotChordal {
        cycle: Vec<usize>,
    },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }

    pub fn certificate(&self) -> Option<&ChordalCertificate> {
        match self {
            Chordality::Chordal(c) => Some(c),
            Chordality::NotChordal { .. } => None,
        }
    }

    pub fn into_result(self) -> Result<ChordalCertificate, ChordalError> {
        match self {
            Chordality::Chordal(c) => Ok(c),
            Chordality::NotChordal { cycle } => Err(ChordalError::NotChordal(cycle)),
        }
    }
}

/// Maximum cardinality search; returns nodes in visit order. Ties go to the
/// smallest label.
fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (1..=n)
            .filter(|&v| !visited[v - 1])
            .max_by(|&a, &b| weight[a - 1].cmp(&weight[b - 1]).then(b.cmp(&a)))
            .expect("unvisited node remains");
        visited[next - 1] = true;
        order.push(next);
        for &w in g.neighbors(next) {
            if !visited[w - 1] {
                weight[w - 1] += 1;
            }
        }
    }
    order
}

/// Later neighbors of each node under `order`, sorted by label.
fn later_neighbors(g: &Graph, pos: &[usize]) -> Vec<Vec<usize>> {
    g.nodes()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| pos[w - 1] > pos[v - 1])
                .collect()
        })
        .collect()
}

/// First node (in elimination order) whose later neighbors contain a
/// non-adjacent pair, with that pair.
fn first_violation(
    g: &Graph,
    order: &[usize],
    later: &[Vec<usize>],
) -> Option<(usize, usize, usize)> {
    for &v in order {
        let lv = &later[v - 1];
        for (i, &u) in lv.iter().enumerate() {
            for &w in &lv[i + 1..] {
                if !g.has_edge(u, w) {
                    return Some((v, u, w));
                }
            }
        }
    }
    None
}

/// Shortest path from `u` to `w` avoiding `v` and every other neighbor of
/// `v`. Closing it through `v` gives a chordless cycle.
fn chordless_cycle_through(g: &Graph, v: usize, u: usize, w: usize) -> Option<Vec<usize>> {
    let n = g.node_count();
    let mut blocked = vec![false; n];
    blocked[v - 1] = true;
    for &x in g.neighbors(v) {
        if x != u && x != w {
            blocked[x - 1] = true;
        }
    }
    let mut prev = vec![0usize; n];
    let mut seen = vec![false; n];
    seen[u - 1] = true;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == w {
            let mut path = vec![w];
            let mut cur = w;
            while cur != u {
                cur = prev[cur - 1];
                path.push(cur);
            }
            path.reverse();
            path.push(v);
            return Some(path);
        }
        for &y in g.neighbors(x) {
            if !seen[y - 1] && !blocked[y - 1] {
                seen[y - 1] = true;
                prev[y - 1] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Rotates a cycle to start at its smallest node and picks the direction
/// whose second node is the smaller of the two neighbors.
fn normalize_cycle(mut cycle: Vec<usize>) -> Vec<usize> {
    let start = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .map(|(i, _)| i)
        .unwrap_or(0);
    cycle.rotate_left(start);
    if cycle.len() > 2 && cycle[cycle.len() - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    cycle
}

fn find_chordless_cycle(g: &Graph, hint: Option<(usize, usize, usize)>) -> Vec<usize> {
    if let Some((v, u, w)) = hint {
        if let Some(c) = chordless_cycle_through(g, v, u, w) {
            return normalize_cycle(c);
        }
    }
    // Every chordless cycle passes through some node whose two cycle
    // neighbors are non-adjacent, so this scan is complete.
    for v in g.nodes() {
        let nb = g.neighbors(v);
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                if let Some(c) = chordless_cycle_through(g, v, u, w) {
                    return normalize_cycle(c);
                }
            }
        }
    }
    unreachable!("elimination order check failed but no chordless cycle exists")
}

fn cliques_from_order(order: &[usize], later: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut candidates: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| {
            let mut c = later[v - 1].clone();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    candidates.sort();
    candidates.dedup();
    let is_subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
    let maximal: Vec<Vec<usize>> = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|d| d.len() > c.len() && is_subset(c, d))
        })
        .cloned()
        .collect();
    maximal
}

/// Tests chordality with maximum cardinality search.
///
/// The reverse of the search's visit order is a perfect elimination order
/// exactly when the graph is chordal. On failure an induced cycle of length
/// at least 4 is returned.
///
/// ```
/// use chordcone::{is_chordal, Chordality, Graph};
///
/// let c4 = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
/// assert_eq!(is_chordal(&c4), Chordality::NotChordal { cycle: vec![1, 2, 3, 4] });
/// ```
pub fn is_chordal(g: &Graph) -> Chordality {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    let mut pos = vec![0; g.node_count()];
    for (k, &v) in order.iter().enumerate() {
        pos[v - 1] = k;
    }
    let later = later_neighbors(g, &pos);
    if let Some(violation) = first_violation(g, &order, &later) {
        return Chordality::NotChordal {
            cycle: find_chordless_cycle(g, Some(violation)),
        };
    }
    let maximal_cliques = cliques_from_order(&order, &later);
    Chordality::Chordal(ChordalCertificate {
        peo: order,
        maximal_cliques,
    })
}

/// Maximal cliques of a chordal graph, recomputed from the certificate's
/// elimination order and checked against its clique list.
pub fn maximal_cliques(
    g: &Graph,
    cert: &ChordalCertificate,
) -> Result<Vec<Vec<usize>>, ChordalError> {
    let n = g.node_count();
    if cert.peo.len() != n {
        return Err(ChordalError::NotPermutation(n));
    }
    let mut pos = vec![usize::MAX; n];
    for (k, &v) in cert.peo.iter().enumerate() {
        if v == 0 || v > n || pos[v - 1] != usize::MAX {
            return Err(ChordalError::NotPermutation(n));
        }
        pos[v - 1] = k;
    }
    let later = later_neighbors(g, &pos);
    if let Some((v, _, _)) = first_violation(g, &cert.peo, &later) {
        return Err(ChordalError::NotPerfectEliminationOrder(v));
    }
    let cliques = cliques_from_order(&cert.peo, &later);
    if cliques != cert.maximal_cliques {
        return Err(ChordalError::CliqueMismatch);
    }
    Ok(cliques)
}

/// Outcome of the homogeneous chordal test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "nodes", rename_all = "snake_case")]
pub enum Homogeneity {
    Homogeneous,
    /// Induced path `a - b - c - d`.
    InducedPath([usize; 4]),
    ChordlessCycle(Vec<usize>),
}

impl Homogeneity {
    pub fn is_homogeneous(&self) -> bool {
        matches!(self, Homogeneity::Homogeneous)
    }
}

/// First induced 4-node path `a - b - c - d`, scanning middle edges `b < c`
/// lexicographically.
pub fn find_induced_p4(g: &Graph) -> Option<[usize; 4]> {
    for (b, c) in g.edges() {
        for (b, c) in [(b, c), (c, b)] {
            for &a in g.neighbors(b) {
                if a == c || g.has_edge(a, c) {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d == b || d == a || g.has_edge(b, d) || g.has_edge(a, d) {
                        continue;
                    }
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// Homogeneous chordal recognition: chordal and free of induced `P4`.
///
/// ```
/// use chordcone::{is_homogeneous_chordal, Graph, Homogeneity};
///
/// let star = Graph::from_edges(3, [(1, 2), (1, 3)]).unwrap();
/// assert!(is_homogeneous_chordal(&star).is_homogeneous());
/// let p4 = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
/// assert_eq!(is_homogeneous_chordal(&p4), Homogeneity::InducedPath([1, 2, 3, 4]));
/// ```
pub fn is_homogeneous_chordal(g: &Graph) -> Homogeneity {
    if let Chordality::NotChordal { cycle } = is_chordal(g) {
        return Homogeneity::ChordlessCycle(cycle);
    }
    match find_induced_p4(g) {
        Some(p) => Homogeneity::InducedPath(p),
        None => Homogeneity::Homogeneous,
    }
}
