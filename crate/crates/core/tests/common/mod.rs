//! Independent oracles and samplers shared by the integration tests.
//!
//! Nothing here calls the algorithms under test: graph oracles work on
//! bitmasks by exhaustive search, eigenvalue oracles go through the
//! characteristic polynomial, and root isolation only evaluates a black-box
//! function.

#![allow(dead_code)]

use chordcone::{Graph, PatternMatrix, SymMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Adjacency bitmasks, bit `j - 1` of entry `i - 1` set when `{i, j}` is an edge.
pub fn masks(g: &Graph) -> Vec<u32> {
    let mut adj = vec![0u32; g.node_count()];
    for (u, v) in g.edges() {
        adj[u - 1] |= 1 << (v - 1);
        adj[v - 1] |= 1 << (u - 1);
    }
    adj
}

/// Every labeled graph on `n` nodes, indexed by a bitmask over the pairs.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 1..=n {
        for v in u + 1..=n {
            if code >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn pair_count(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

fn induced_is_cycle(adj: &[u32], set: u32) -> bool {
    let mut start = None;
    for (i, a) in adj.iter().enumerate() {
        if set >> i & 1 == 1 {
            if (a & set).count_ones() != 2 {
                return false;
            }
            start.get_or_insert(i);
        }
    }
    let Some(start) = start else { return false };
    // 2-regular: a cycle iff connected
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for i in 0..adj.len() {
            if frontier >> i & 1 == 1 {
                next |= adj[i] & set;
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == set
}

/// Brute force: some induced subgraph on at least 4 nodes is a cycle.
pub fn has_chordless_cycle(g: &Graph) -> bool {
    let adj = masks(g);
    let n = g.node_count();
    (0u32..1 << n).any(|s| s.count_ones() >= 4 && induced_is_cycle(&adj, s))
}

/// Checks a claimed induced cycle given as a node sequence.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return false;
    }
    (0..k).all(|i| {
        (0..k).all(|j| {
            if i == j {
                return true;
            }
            let consecutive = (i + 1) % k == j || (j + 1) % k == i;
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}

pub fn is_induced_p4(g: &Graph, p: &[usize; 4]) -> bool {
    let [a, b, c, d] = *p;
    g.has_edge(a, b)
        && g.has_edge(b, c)
        && g.has_edge(c, d)
        && !g.has_edge(a, c)
        && !g.has_edge(b, d)
        && !g.has_edge(a, d)
}

/// Brute force over all ordered 4-tuples.
pub fn has_induced_p4(g: &Graph) -> bool {
    let n = g.node_count();
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                for d in 1..=n {
                    let q = [a, b, c, d];
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| q[i] != q[j]));
                    if distinct && is_induced_p4(g, &q) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Brute force: all inclusion-maximal cliques, lexicographically sorted.
pub fn brute_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let adj = masks(g);
    let n = g.node_count();
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let is_clique = |s: u32| (0..n).all(|i| s >> i & 1 == 0 || (adj[i] | 1 << i) & s == s);
    let mut out: Vec<Vec<usize>> = (1u32..=full)
        .filter(|&s| is_clique(s))
        .filter(|&s| (0..n).all(|i| s >> i & 1 == 1 || !is_clique(s | 1 << i)))
        .map(|s| (0..n).filter(|i| s >> i & 1 == 1).map(|i| i + 1).collect())
        .collect();
    out.sort();
    out
}

/// Brute force: ancestors by repeated parent lookup.
pub fn brute_comparability(parents: &[Option<usize>]) -> Graph {
    let n = parents.len();
    let mut g = Graph::new(n);
    for v in 1..=n {
        let mut cur = parents[v - 1];
        while let Some(a) = cur {
            g.add_edge(a, v).unwrap();
            cur = parents[a - 1];
        }
    }
    g
}

/// Coefficients of `det(tI - A)`, lowest degree first, by Faddeev–LeVerrier.
pub fn char_poly(a: &SymMatrix) -> Vec<f64> {
    let n = a.dim();
    let mut coeffs = vec![0.0; n + 1];
    coeffs[n] = 1.0;
    let mut m = vec![vec![0.0; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|l| a.get(i, l) * m[l][j]).sum::<f64>();
            }
            next[i][i] += coeffs[n - k + 1];
        }
        let tr: f64 = (0..n)
            .map(|i| (0..n).map(|l| a.get(i, l) * next[l][i]).sum::<f64>())
            .sum();
        coeffs[n - k] = -tr / k as f64;
        m = next;
    }
    coeffs
}

pub fn horner(coeffs: &[f64], t: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c)
}

fn bisect(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Minimizes `s * f` on `[lo, hi]` by golden-section search.
fn golden_min(f: &dyn Fn(f64) -> f64, s: f64, mut lo: f64, mut hi: f64) -> f64 {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - r * (hi - lo);
    let mut x2 = lo + r * (hi - lo);
    let (mut f1, mut f2) = (s * f(x1), s * f(x2));
    for _ in 0..200 {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - r * (hi - lo);
            f1 = s * f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + r * (hi - lo);
            f2 = s * f(x2);
        }
    }
    0.5 * (lo + hi)
}

/// Real roots of a real-rooted function on `[lo, hi]` by sign changes on a
/// dense grid, refined by bisection. Grid points where `|f|` dips without a
/// sign change are searched for a hidden close pair of roots.
pub fn isolate_roots(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64, grid: usize) -> Vec<f64> {
    let ts: Vec<f64> = (0..=grid)
        .map(|i| lo + (hi - lo) * i as f64 / grid as f64)
        .collect();
    let vs: Vec<f64> = ts.iter().map(|&t| f(t)).collect();
    let scale = vs.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut roots = Vec::new();
    for i in 0..grid {
        if vs[i] == 0.0 {
            roots.push(ts[i]);
            // a grid point landing on a touching root counts it twice
            if i > 0 && vs[i - 1] * vs[i + 1] > 0.0 {
                roots.push(ts[i]);
            }
        } else if vs[i + 1] != 0.0 && (vs[i] < 0.0) != (vs[i + 1] < 0.0) {
            roots.push(bisect(f, ts[i], ts[i + 1]));
        }
    }
    if vs[grid] == 0.0 {
        roots.push(ts[grid]);
    }
    for i in 1..grid {
        let (a, b, c) = (vs[i - 1], vs[i], vs[i + 1]);
        let same =
            a != 0.0 && b != 0.0 && c != 0.0 && (a < 0.0) == (b < 0.0) && (b < 0.0) == (c < 0.0);
        if !same || !(b.abs() < a.abs() && b.abs() <= c.abs()) {
            continue;
        }
        let s = b.signum();
        let t_star = golden_min(f, s, ts[i - 1], ts[i + 1]);
        let v = f(t_star);
        if (v < 0.0) != (b < 0.0) {
            roots.push(bisect(f, ts[i - 1], t_star));
            roots.push(bisect(f, t_star, ts[i + 1]));
        } else if v.abs() <= 1e-14 * scale {
            roots.push(t_star);
            roots.push(t_star);
        }
    }
    roots.sort_by(f64::total_cmp);
    roots
}

/// Gershgorin radius of the full matrix; bounds every eigenvalue of every
/// principal block.
pub fn gershgorin(m: &SymMatrix) -> f64 {
    (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| m.get(i, j).abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Pattern matrix with independent standard-uniform entries in `[-1, 1]`.
pub fn random_pattern_matrix(g: &Graph, rng: &mut impl Rng) -> PatternMatrix {
    let k = g.node_count() + g.edge_count();
    let coords: Vec<f64> = (0..k).map(|_| rng.random_range(-1.0..1.0)).collect();
    PatternMatrix::from_coords(g, &coords).unwrap()
}

/// `Σ_C B_C B_Cᵀ` with a random Gram factor of random rank on every clique,
/// a point of `S₊(G)` by construction.
pub fn random_clique_gram(g: &Graph, cliques: &[Vec<usize>], rng: &mut impl Rng) -> SymMatrix {
    let n = g.node_count();
    let mut m = SymMatrix::zeros(n);
    for c in cliques {
        let rank = rng.random_range(1..=c.len());
        for _ in 0..rank {
            let mut v = vec![0.0; n];
            for &u in c {
                v[u - 1] = rng.random_range(-1.0..1.0);
            }
            m.add_outer(&v);
        }
    }
    m
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}
