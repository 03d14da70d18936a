//! Graph families used as fixtures and by the `gen` command.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::forest::{comparability_graph, RootedForest};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("family needs n >= {min}, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("clique sizes must be positive")]
    EmptyClique,
    #[error("density {0} outside [0, 1]")]
    BadDensity(f64),
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Graph of maximal minimal-polynomial degree among homogeneous chordal
/// graphs on `n` nodes.
///
/// Nodes `1..=k` with `k = (n - 1) / 2` form a clique; each of the remaining
/// `n - k` nodes is joined to all of them and to nothing else.
///
/// ```
/// let g = chordcone::gen_max_degree_family(3).unwrap();
/// assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (1, 3)]);
/// ```
pub fn gen_max_degree_family(n: usize) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(GenerateError::TooSmall { n, min: 3 });
    }
    let k = (n - 1) / 2;
    let mut g = Graph::new(n);
    for u in 1..=k {
        for v in u + 1..=n {
            g.add_edge(u, v).expect("fresh edge");
        }
    }
    Ok(g)
}

/// Disjoint union of cliques of the given sizes, labeled consecutively.
pub fn gen_disjoint_cliques(sizes: &[usize]) -> Result<Graph, GenerateError> {
    if sizes.contains(&0) {
        return Err(GenerateError::EmptyClique);
    }
    Ok(sizes
        .iter()
        .fold(Graph::new(0), |g, &s| g.disjoint_union(&Graph::complete(s))))
}

/// Path `1 - 2 - ... - n`.
pub fn gen_path(n: usize) -> Result<Graph, GenerateError> {
    if n < 1 {
        return Err(GenerateError::TooSmall { n, min: 1 });
    }
    Ok(Graph::from_edges(n, (1..n).map(|i| (i, i + 1))).expect("path edges are valid"))
}

/// Random chordal graph: a `G(n, density)` sample completed by the fill of a
/// random elimination order, which is then a perfect elimination order.
pub fn gen_random_chordal(n: usize, density: f64, seed: u64) -> Result<Graph, GenerateError> {
    if n < 1 {
        return Err(GenerateError::TooSmall { n, min: 1 });
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(GenerateError::BadDensity(density));
    }
    let mut rng = rng(seed);
    let mut adj = vec![vec![false; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(density) {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut eliminated = vec![false; n];
    for &v in &order {
        eliminated[v] = true;
        let later: Vec<usize> = (0..n).filter(|&w| adj[v][w] && !eliminated[w]).collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                adj[a][b] = true;
                adj[b][a] = true;
            }
        }
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<(usize, usize)> = edges
        .filter(|&(u, v)| adj[u][v])
        .map(|(u, v)| (u + 1, v + 1))
        .collect();
    Ok(Graph::from_edges(n, edges).expect("generated edges are valid"))
}

/// Random rooted forest on `n` nodes with randomly permuted labels. Each node
/// after the first in a random order becomes a root with probability
/// `root_prob`, otherwise a child of a uniformly chosen earlier node.
pub fn gen_random_forest(
    n: usize,
    root_prob: f64,
    seed: u64,
) -> Result<RootedForest, GenerateError> {
    if !(0.0..=1.0).contains(&root_prob) {
        return Err(GenerateError::BadDensity(root_prob));
    }
    let mut rng = rng(seed);
    let mut labels: Vec<usize> = (1..=n).collect();
    labels.shuffle(&mut rng);
    let mut parent = vec![None; n];
    for i in 1..n {
        if !rng.random_bool(root_prob) {
            let j = rng.random_range(0..i);
            parent[labels[i] - 1] = Some(labels[j]);
        }
    }
    Ok(RootedForest::new(parent).expect("parents point to earlier nodes"))
}

/// Random homogeneous chordal graph, the comparability graph of
/// [`gen_random_forest`].
pub fn gen_random_homogeneous(n: usize, root_prob: f64, seed: u64) -> Result<Graph, GenerateError> {
    if n < 1 {
        return Err(GenerateError::TooSmall { n, min: 1 });
    }
    Ok(comparability_graph(&gen_random_forest(n, root_prob, seed)?))
}

/// Random composition of `n` into positive parts.
pub fn random_clique_sizes(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = rng(seed);
    let mut sizes = Vec::new();
    let mut left = n;
    while left > 0 {
        let s = rng.random_range(1..=left.min(5));
        sizes.push(s);
        left -= s;
    }
    sizes
}
