//! Structural facts about `S*(G)`: realizability as a rank-one generated
//! hyperbolicity cone, hyperbolic ranks of extreme rays, and bounds on the
//! degree of the minimal polynomial in terms of the homogeneous cone rank.

use serde::Serialize;
use thiserror::Error;

use crate::chordal::{is_chordal, is_homogeneous_chordal, ChordalCertificate, Chordality};
use crate::cones::PatternMatrix;
use crate::forest::{to_rooted_forest, RootedForest};
use crate::graph::Graph;
use crate::minpoly::{char_roots, minimal_polynomial, MinimalPolynomial, MinpolyError};
use crate::numerics::Tolerance;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StructureError {
    #[error("graph is not chordal; chordless cycle {0:?}")]
    NotChordal(Vec<usize>),
    #[error("node {node} out of range 1..={n}")]
    InvalidNode { node: usize, n: usize },
    #[error("degree bounds need n >= 1")]
    EmptyGraph,
    #[error("clique count {count} and root count {rank} disagree for node {node}")]
    RankMismatch {
        node: usize,
        count: usize,
        rank: usize,
    },
    #[error(transparent)]
    Minpoly(#[from] MinpolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RogVerdict {
    pub realizable: bool,
    /// Smallest node lying in two maximal cliques, when not realizable.
    pub witness: Option<usize>,
}

/// `S*(G)` is a rank-one generated hyperbolicity cone exactly when the
/// maximal cliques are pairwise disjoint, i.e. `G` is a disjoint union of
/// cliques. Otherwise the unit diagonal matrix at a node shared by two
/// maximal cliques spans an extreme ray of hyperbolic rank at least two.
pub fn is_rog_realizable(cert: &ChordalCertificate) -> RogVerdict {
    let n = cert.peo.len();
    let mut count = vec![0usize; n];
    for c in &cert.maximal_cliques {
        for &v in c {
            count[v - 1] += 1;
        }
    }
    let witness = count.iter().position(|&k| k >= 2).map(|i| i + 1);
    RogVerdict {
        realizable: witness.is_none(),
        witness,
    }
}

/// Hyperbolic rank of the unit diagonal matrix `E_v` with respect to `p_G`:
/// one nonzero root per maximal clique containing `v`. The count is checked
/// against the roots of `t ↦ p_G(tI - E_v)`.
pub fn extreme_ray_rank(p: &MinimalPolynomial, v: usize) -> Result<usize, StructureError> {
    let g = p.graph();
    if !g.contains_node(v) {
        return Err(StructureError::InvalidNode {
            node: v,
            n: g.node_count(),
        });
    }
    let count = p
        .cliques()
        .iter()
        .filter(|c| c.binary_search(&v).is_ok())
        .count();
    let report = char_roots(
        p,
        &PatternMatrix::unit_diagonal(g, v),
        &Tolerance::default(),
    )?;
    if report.rank != count {
        return Err(StructureError::RankMismatch {
            node: v,
            count,
            rank: report.rank,
        });
    }
    Ok(count)
}

/// `⌈(n+1)/2⌉ · ⌊(n+1)/2⌋`, the largest minimal-polynomial degree over
/// homogeneous chordal graphs on `n` nodes.
pub fn degree_bound_quadratic(n: usize) -> Result<u64, StructureError> {
    if n < 1 {
        return Err(StructureError::EmptyGraph);
    }
    let m = n as u64 + 1;
    Ok(m.div_ceil(2) * (m / 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExponentialBound {
    pub value: u64,
    /// Set when `2^(n-1)` exceeds `2^62` and `value` was capped there.
    pub saturated: bool,
}

pub const EXPONENTIAL_BOUND_CAP_LOG2: u32 = 62;

/// `2^(n-1)`, the degree bound for a homogeneous cone of rank `n`,
/// saturating at `2^62`. `n = 0` is treated as `n = 1`.
pub fn degree_bound_exponential(n: usize) -> ExponentialBound {
    let e = n.saturating_sub(1);
    if e > EXPONENTIAL_BOUND_CAP_LOG2 as usize {
        ExponentialBound {
            value: 1 << EXPONENTIAL_BOUND_CAP_LOG2,
            saturated: true,
        }
    } else {
        ExponentialBound {
            value: 1 << e,
            saturated: false,
        }
    }
}

/// `dim S*(G) = n + |E|`.
pub fn degree_bound_dimension(g: &Graph) -> usize {
    g.node_count() + g.edge_count()
}

/// Sum of node counts over maximal root-to-leaf paths. An isolated root is a
/// path of one node.
///
/// ```
/// use chordcone::{forest_degree, RootedForest};
///
/// let star = RootedForest::new(vec![None, Some(1), Some(1)]).unwrap();
/// assert_eq!(forest_degree(&star), 4);
/// ```
pub fn forest_degree(f: &RootedForest) -> usize {
    f.leaves().into_iter().map(|leaf| f.depth(leaf)).sum()
}

pub const OPEN_QUESTION_NOTE: &str = "for homogeneous cones in general no bound on the minimal \
polynomial degree that is polynomial in the rank is known; beyond homogeneous chordal patterns \
only the 2^(n-1) bound applies";

/// Everything the crate can say about `S*(G)` for chordal `G`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructureReport {
    pub n: usize,
    pub edges: usize,
    pub maximal_cliques: usize,
    pub homogeneous_chordal: bool,
    pub rog_realizable: bool,
    pub rog_witness: Option<usize>,
    /// Homogeneous cone rank; present only for homogeneous chordal graphs.
    pub hom_rank: Option<usize>,
    pub min_degree: usize,
    pub bound_quadratic: u64,
    pub bound_exponential: u64,
    pub bound_exponential_saturated: bool,
    pub bound_dimension: usize,
    /// `min_degree - hom_rank`: how far the hyperbolic barrier parameter
    /// exceeds the optimal barrier parameter of the homogeneous cone.
    pub barrier_gap: Option<usize>,
    pub notes: Vec<String>,
}

/// Builds the [`StructureReport`] for a chordal graph.
///
/// ```
/// use chordcone::{structure_report, Graph};
///
/// let star = Graph::from_edges(3, [(1, 2), (1, 3)]).unwrap();
/// let r = structure_report(&star).unwrap();
/// assert_eq!((r.min_degree, r.hom_rank, r.barrier_gap), (4, Some(3), Some(1)));
/// assert!(!r.rog_realizable);
/// ```
pub fn structure_report(g: &Graph) -> Result<StructureReport, StructureError> {
    let cert = match is_chordal(g) {
        Chordality::Chordal(c) => c,
        Chordality::NotChordal { cycle } => return Err(StructureError::NotChordal(cycle)),
    };
    report_with_certificate(g, &cert)
}

pub fn report_with_certificate(
    g: &Graph,
    cert: &ChordalCertificate,
) -> Result<StructureReport, StructureError> {
    let n = g.node_count();
    let p = minimal_polynomial(g, cert)?;
    let rog = is_rog_realizable(cert);
    let homogeneous = is_homogeneous_chordal(g).is_homogeneous();
    let hom_rank = homogeneous.then_some(n);
    let exp = degree_bound_exponential(n);
    let mut notes = Vec::new();
    if homogeneous {
        let forest = to_rooted_forest(g).expect("homogeneous chordal graphs have a forest");
        debug_assert_eq!(forest_degree(&forest), p.degree());
    } else {
        notes.push(
            "not homogeneous chordal: no homogeneous cone rank, the quadratic bound does not apply"
                .to_string(),
        );
    }
    notes.push(OPEN_QUESTION_NOTE.to_string());
    Ok(StructureReport {
        n,
        edges: g.edge_count(),
        maximal_cliques: p.cliques().len(),
        homogeneous_chordal: homogeneous,
        rog_realizable: rog.realizable,
        rog_witness: rog.witness,
        hom_rank,
        min_degree: p.degree(),
        bound_quadratic: degree_bound_quadratic(n.max(1))?,
        bound_exponential: exp.value,
        bound_exponential_saturated: exp.saturated,
        bound_dimension: degree_bound_dimension(g),
        barrier_gap: hom_rank.map(|r| p.degree() - r),
        notes,
    })
}
