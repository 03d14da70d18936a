//! Rooted forests and their comparability graphs.
//!
//! A graph is homogeneous chordal exactly when it is the comparability graph
//! of a rooted forest: two nodes are adjacent iff one is an ancestor of the
//! other. Maximal cliques then correspond to root-to-leaf paths.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chordal::{is_homogeneous_chordal, Homogeneity};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForestError {
    #[error("parent {parent} of node {node} out of range")]
    InvalidParent { node: usize, parent: usize },
    #[error("parent relation has a cycle through node {0}")]
    Cycle(usize),
    #[error("graph is not homogeneous chordal: {0:?}")]
    NotHomogeneous(Homogeneity),
}

/// Forest on nodes `1..=n` given by parent pointers; `None` marks a root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedForest {
    parent: Vec<Option<usize>>,
}

impl RootedForest {
    /// Validates that every parent is a node and that following parents
    /// always reaches a root.
    pub fn new(parent: Vec<Option<usize>>) -> Result<Self, ForestError> {
        let n = parent.len();
        for (i, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p == 0 || p > n {
                    return Err(ForestError::InvalidParent {
                        node: i + 1,
                        parent: p,
                    });
                }
            }
        }
        // 0 = unvisited, 1 = on current walk, 2 = known to reach a root
        let mut state = vec![0u8; n];
        for start in 1..=n {
            let mut walk = Vec::new();
            let mut cur = Some(start);
            while let Some(v) = cur {
                match state[v - 1] {
                    2 => break,
                    1 => return Err(ForestError::Cycle(v)),
                    _ => {
                        state[v - 1] = 1;
                        walk.push(v);
                        cur = parent[v - 1];
                    }
                }
            }
            for v in walk {
                state[v - 1] = 2;
            }
        }
        Ok(RootedForest { parent })
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v - 1]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.parent.len()).filter(|&v| self.parent[v - 1].is_none())
    }

    pub fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (1..=self.parent.len()).filter(move |&u| self.parent[u - 1] == Some(v))
    }

    /// Nodes with no children.
    pub fn leaves(&self) -> Vec<usize> {
        let mut has_child = vec![false; self.parent.len()];
        for p in self.parent.iter().flatten() {
            has_child[p - 1] = true;
        }
        (1..=self.parent.len())
            .filter(|&v| !has_child[v - 1])
            .collect()
    }

    /// Path from the root down to `v`, inclusive.
    pub fn root_path(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur - 1] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    /// Number of nodes on the root path of `v`.
    pub fn depth(&self, v: usize) -> usize {
        self.root_path(v).len()
    }
}

/// Graph with an edge between every node and each of its proper ancestors.
pub fn comparability_graph(f: &RootedForest) -> Graph {
    let mut g = Graph::new(f.node_count());
    for v in 1..=f.node_count() {
        let mut cur = f.parent(v);
        while let Some(a) = cur {
            g.add_edge(a, v).expect("ancestors are distinct");
            cur = f.parent(a);
        }
    }
    g
}

/// Universal node of the subgraph induced by `comp` with the smallest label.
fn universal_node(g: &Graph, comp: &[usize], member: &[bool]) -> Option<usize> {
    comp.iter()
        .copied()
        .find(|&v| g.neighbors(v).iter().filter(|&&w| member[w - 1]).count() + 1 == comp.len())
}

/// Connected components of the subgraph induced by `nodes`.
fn induced_components(g: &Graph, nodes: &[usize], member: &mut [bool]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for &start in nodes {
        if !member[start - 1] {
            continue;
        }
        member[start - 1] = false;
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in g.neighbors(u) {
                if member[w - 1] {
                    member[w - 1] = false;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Rooted forest whose comparability graph is `g`.
///
/// Each connected component repeatedly gives up a universal node, smallest
/// label first; that node becomes the next one on the path from the root,
/// and the components of the remainder hang below it.
///
/// ```
/// use chordcone::{comparability_graph, to_rooted_forest, Graph};
///
/// let star = Graph::from_edges(3, [(1, 2), (1, 3)]).unwrap();
/// let forest = to_rooted_forest(&star).unwrap();
/// assert_eq!(forest.parents(), &[None, Some(1), Some(1)]);
/// assert_eq!(comparability_graph(&forest), star);
/// ```
pub fn to_rooted_forest(g: &Graph) -> Result<RootedForest, ForestError> {
    let verdict = is_homogeneous_chordal(g);
    if !verdict.is_homogeneous() {
        return Err(ForestError::NotHomogeneous(verdict));
    }
    let n = g.node_count();
    let mut parent = vec![None; n];
    let mut member = vec![true; n];
    let all: Vec<usize> = g.nodes().collect();
    let mut work: Vec<(Vec<usize>, Option<usize>)> = induced_components(g, &all, &mut member)
        .into_iter()
        .map(|c| (c, None))
        .collect();

    while let Some((comp, above)) = work.pop() {
        for &v in &comp {
            member[v - 1] = true;
        }
        let top = universal_node(g, &comp, &member)
            .expect("connected homogeneous chordal graphs have a universal node");
        parent[top - 1] = above;
        member[top - 1] = false;
        let rest: Vec<usize> = comp.into_iter().filter(|&v| v != top).collect();
        for sub in induced_components(g, &rest, &mut member) {
            work.push((sub, Some(top)));
        }
    }
    RootedForest::new(parent)
}
