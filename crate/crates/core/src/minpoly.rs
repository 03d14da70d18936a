//! The minimal hyperbolic polynomial of `S*(G)` for chordal `G`,
//! `p_G(X) = Π_C det(X_C)` over the maximal cliques `C`, hyperbolic along
//! the identity.
//!
//! The polynomial is kept in factored form. Since
//! `p_G(tI - X) = Π_C det(tI - X_C)`, its roots along the identity are the
//! eigenvalues of the clique blocks, and its degree is the sum of the clique
//! sizes.

use indexmap::IndexMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::chordal::{is_chordal, maximal_cliques, ChordalCertificate, ChordalError};
use crate::cones::{CliqueCheck, PatternMatrix};
use crate::graph::Graph;
use crate::numerics::{spectrum_check, sym_eigenvalues, Definiteness, SpectrumCheck, Tolerance};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MinpolyError {
    #[error(transparent)]
    Chordal(#[from] ChordalError),
    #[error("matrix lives on a different graph than the polynomial")]
    GraphMismatch,
    #[error("{0:?} is not a maximal clique")]
    NotMaximalClique(Vec<usize>),
    #[error("witness for clique {0:?} failed verification")]
    WitnessFailed(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinimalPolynomial {
    graph: Graph,
    cliques: Vec<Vec<usize>>,
    degree: usize,
}

/// `p_G` for a chordal graph, after checking the certificate against `g`.
///
/// ```
/// use chordcone::{is_chordal, minimal_polynomial, Graph};
///
/// let star = Graph::from_edges(3, [(1, 2), (1, 3)]).unwrap();
/// let cert = is_chordal(&star).into_result().unwrap();
/// let p = minimal_polynomial(&star, &cert).unwrap();
/// assert_eq!(p.degree(), 4);
/// ```
pub fn minimal_polynomial(
    g: &Graph,
    cert: &ChordalCertificate,
) -> Result<MinimalPolynomial, MinpolyError> {
    let cliques = maximal_cliques(g, cert)?;
    let degree = cliques.iter().map(Vec::len).sum();
    Ok(MinimalPolynomial {
        graph: g.clone(),
        cliques,
        degree,
    })
}

impl MinimalPolynomial {
    /// Runs the chordality test and builds `p_G`.
    pub fn for_graph(g: &Graph) -> Result<Self, MinpolyError> {
        let cert = is_chordal(g).into_result()?;
        minimal_polynomial(g, &cert)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn check_graph(&self, x: &PatternMatrix) -> Result<(), MinpolyError> {
        if x.graph() == &self.graph {
            Ok(())
        } else {
            Err(MinpolyError::GraphMismatch)
        }
    }

    /// `det(x_C)` for each maximal clique, in clique order.
    pub fn factors(&self, x: &PatternMatrix) -> Result<Vec<f64>, MinpolyError> {
        self.check_graph(x)?;
        Ok(self
            .cliques
            .iter()
            .map(|c| x.block(c).determinant())
            .collect())
    }

    /// Product of the Hadamard bounds of the clique blocks, an upper bound
    /// on `|p_G(x)|` used to judge when a value is numerically zero.
    pub fn evaluation_scale(&self, x: &PatternMatrix) -> Result<f64, MinpolyError> {
        self.check_graph(x)?;
        Ok(self
            .cliques
            .iter()
            .map(|c| x.block(c).hadamard_bound())
            .product())
    }
}

/// `p_G(x)`.
pub fn evaluate(p: &MinimalPolynomial, x: &PatternMatrix) -> Result<f64, MinpolyError> {
    Ok(p.factors(x)?.into_iter().product())
}

/// Roots of `t ↦ p_G(tI - x)` with the rank they induce.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankReport {
    /// All roots with multiplicity, ascending.
    pub roots: Vec<f64>,
    /// Roots with magnitude above `threshold`.
    pub rank: usize,
    /// Eigenvalues of each maximal-clique block, keyed `"i,j,..."`.
    pub per_clique: IndexMap<String, Vec<f64>>,
    pub all_nonnegative: bool,
    pub all_positive: bool,
    pub threshold: f64,
    pub tol: Tolerance,
}

pub(crate) fn clique_key(c: &[usize]) -> String {
    c.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

/// Roots of `t ↦ p_G(tI - x)` as the union of the clique-block spectra.
///
/// The zero threshold is `tol` applied to the largest root magnitude; it
/// decides the rank and the sign flags.
pub fn char_roots(
    p: &MinimalPolynomial,
    x: &PatternMatrix,
    tol: &Tolerance,
) -> Result<RankReport, MinpolyError> {
    p.check_graph(x)?;
    let mut per_clique = IndexMap::new();
    let mut roots = Vec::with_capacity(p.degree);
    for c in &p.cliques {
        let eig = sym_eigenvalues(&x.block(c));
        roots.extend_from_slice(&eig);
        per_clique.insert(clique_key(c), eig);
    }
    roots.sort_by(f64::total_cmp);
    let scale = roots.iter().fold(0.0f64, |m, r| m.max(r.abs()));
    let threshold = tol.threshold(scale);
    let rank = roots.iter().filter(|r| r.abs() > threshold).count();
    let min = roots.first().copied().unwrap_or(0.0);
    Ok(RankReport {
        all_nonnegative: min >= -threshold,
        all_positive: roots.is_empty() || min > threshold,
        roots,
        rank,
        per_clique,
        threshold,
        tol: *tol,
    })
}

/// A point of `S*(G)` on the boundary of exactly one clique cone.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessMatrix {
    pub target_clique: Vec<usize>,
    pub matrix: PatternMatrix,
}

impl Serialize for WitnessMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            target_clique: &'a [usize],
            graph: &'a Graph,
            coords: Vec<f64>,
            n: usize,
            entries: Vec<Vec<f64>>,
        }
        Repr {
            target_clique: &self.target_clique,
            graph: self.matrix.graph(),
            coords: self.matrix.coords(),
            n: self.matrix.graph().node_count(),
            entries: self.matrix.matrix().rows(),
        }
        .serialize(s)
    }
}

/// Matrix whose block on `c` is singular while every other maximal-clique
/// block is positive definite.
///
/// The block on `c` has `|c| - 1` on the diagonal and `-1` elsewhere, so it is
/// positive semidefinite with one-dimensional kernel and all proper principal
/// submatrices positive definite. Every other diagonal entry is 1. Another
/// maximal clique `D` meets `c` in a proper subset, so its block splits into
/// a proper principal block of the first kind and an identity.
///
/// ```
/// use chordcone::{boundary_witness, is_chordal, Graph};
///
/// let star = Graph::from_edges(3, [(1, 2), (1, 3)]).unwrap();
/// let cert = is_chordal(&star).into_result().unwrap();
/// let w = boundary_witness(&star, &cert, &[1, 2]).unwrap();
/// assert_eq!(w.matrix.coords(), vec![1.0, -1.0, 0.0, 1.0, 1.0]);
/// ```
pub fn boundary_witness(
    g: &Graph,
    cert: &ChordalCertificate,
    c: &[usize],
) -> Result<WitnessMatrix, MinpolyError> {
    let mut clique = c.to_vec();
    clique.sort_unstable();
    if cert.peo.len() != g.node_count()
        || !cert.maximal_cliques.contains(&clique)
        || !g.is_clique(&clique)
    {
        return Err(MinpolyError::NotMaximalClique(clique));
    }
    let k = clique.len() as f64;
    let mut coords = Vec::new();
    for (i, j) in crate::cones::pattern_positions(g) {
        let in_i = clique.binary_search(&i).is_ok();
        let in_j = clique.binary_search(&j).is_ok();
        coords.push(match (i == j, in_i && in_j) {
            (true, true) => k - 1.0,
            (true, false) => 1.0,
            (false, true) => -1.0,
            (false, false) => 0.0,
        });
    }
    let matrix = PatternMatrix::from_coords(g, &coords).expect("one coordinate per position");
    Ok(WitnessMatrix {
        target_clique: clique,
        matrix,
    })
}

/// Numerical checks on one boundary witness.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessReport {
    pub clique: Vec<usize>,
    pub witness: WitnessMatrix,
    pub target: SpectrumCheck,
    pub others: Vec<CliqueCheck>,
    /// `det` of every maximal-clique block, in clique order.
    pub factors: Vec<f64>,
    /// Indices into `factors` judged zero against each block's Hadamard bound.
    pub vanishing: Vec<usize>,
    pub value: f64,
    pub verified: bool,
}

/// Evidence that no factor of `p_G` can be dropped: one verified witness per
/// maximal clique.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinimalityCertificate {
    pub degree: usize,
    pub witnesses: Vec<WitnessReport>,
    pub minimal: bool,
}

fn check_witness(
    p: &MinimalPolynomial,
    target: usize,
    w: WitnessMatrix,
    tol: &Tolerance,
) -> WitnessReport {
    let x = &w.matrix;
    let mut others = Vec::new();
    let mut target_check = None;
    let mut factors = Vec::new();
    let mut vanishing = Vec::new();
    for (idx, c) in p.cliques.iter().enumerate() {
        let block = x.block(c);
        let check = spectrum_check(&block, tol);
        let det = block.determinant();
        if det.abs() <= tol.threshold(block.hadamard_bound()) {
            vanishing.push(idx);
        }
        factors.push(det);
        if idx == target {
            target_check = Some(check);
        } else {
            others.push(CliqueCheck {
                clique: c.clone(),
                check,
            });
        }
    }
    let target_check = target_check.expect("target index is a clique");
    let verified = target_check.definiteness == Definiteness::PsdSingular
        && others
            .iter()
            .all(|o| o.check.definiteness == Definiteness::PositiveDefinite)
        && vanishing == [target];
    WitnessReport {
        clique: p.cliques[target].clone(),
        value: factors.iter().product(),
        witness: w,
        target: target_check,
        others,
        factors,
        vanishing,
        verified,
    }
}

/// Builds and verifies a boundary witness for every maximal clique. Each one
/// is a point of the cone where exactly the factor of its clique vanishes,
/// so every factor of `p_G` is needed.
pub fn minimality_certificate(
    g: &Graph,
    cert: &ChordalCertificate,
    tol: &Tolerance,
) -> Result<MinimalityCertificate, MinpolyError> {
    let p = minimal_polynomial(g, cert)?;
    let mut witnesses = Vec::with_capacity(p.cliques.len());
    for (idx, c) in p.cliques.iter().enumerate() {
        let w = boundary_witness(g, cert, c)?;
        let report = check_witness(&p, idx, w, tol);
        if !report.verified {
            return Err(MinpolyError::WitnessFailed(c.clone()));
        }
        witnesses.push(report);
    }
    Ok(MinimalityCertificate {
        degree: p.degree,
        witnesses,
        minimal: true,
    })
}
