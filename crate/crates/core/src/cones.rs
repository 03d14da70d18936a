//! The cone `S₊(G)` of positive semidefinite matrices with sparsity pattern
//! `G` and the cone `S*(G)` of pattern matrices whose clique blocks are all
//! positive semidefinite. For chordal `G` each is the dual of the other under
//! the trace inner product.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chordal::ChordalCertificate;
use crate::graph::Graph;
use crate::numerics::{
    cholesky_no_fill, spectrum_check, CholeskyError, Definiteness, SpectrumCheck, SymMatrix,
    Tolerance,
};

/// Off-pattern entries up to this magnitude are rounded to zero by [`embed`].
pub const PATTERN_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConeError {
    #[error("matrix has dimension {matrix}, graph has {graph} nodes")]
    Dimension { matrix: usize, graph: usize },
    #[error("nonzero entries outside the pattern at {0:?}")]
    PatternViolation(Vec<(usize, usize)>),
    #[error("expected {expected} coordinates, got {got}")]
    CoordinateCount { expected: usize, got: usize },
    #[error("coordinate {0} is not finite")]
    NonFinite(usize),
    #[error("operands live on different graphs")]
    GraphMismatch,
    #[error("matrix is not in S+(G)")]
    NotMember,
    #[error("chordal certificate does not match the matrix pattern")]
    CertificateMismatch,
    #[error(transparent)]
    Cholesky(#[from] CholeskyError),
}

/// Symmetric matrix whose off-diagonal support lies on the edges of a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct PatternMatrix {
    graph: Graph,
    matrix: SymMatrix,
}

/// Positions `(i, j)`, `i <= j`, that a pattern matrix may occupy, in
/// row-major order over the upper triangle. These index the coordinates of
/// `S(G)`; there are `n + |E|` of them.
///
/// ```
/// use chordcone::{pattern_positions, Graph};
///
/// let star = Graph::from_edges(3, [(1, 2), (1, 3)]).unwrap();
/// assert_eq!(pattern_positions(&star), vec![(1, 1), (1, 2), (1, 3), (2, 2), (3, 3)]);
/// ```
pub fn pattern_positions(g: &Graph) -> Vec<(usize, usize)> {
    g.nodes()
        .flat_map(|i| {
            std::iter::once((i, i)).chain(
                g.neighbors(i)
                    .iter()
                    .filter(move |&&j| j > i)
                    .map(move |&j| (i, j)),
            )
        })
        .collect()
}

/// Checks that `m` lives on the pattern of `g`.
///
/// Off-pattern entries of magnitude up to [`PATTERN_TOLERANCE`] are set to
/// exactly zero; larger ones are reported as 1-based pairs `(i, j)`, `i < j`.
pub fn embed(g: &Graph, m: &SymMatrix) -> Result<PatternMatrix, ConeError> {
    let n = g.node_count();
    if m.dim() != n {
        return Err(ConeError::Dimension {
            matrix: m.dim(),
            graph: n,
        });
    }
    let mut matrix = m.clone();
    let mut bad = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if g.has_edge(i, j) {
                continue;
            }
            let x = m.get(i - 1, j - 1);
            if x.abs() > PATTERN_TOLERANCE {
                bad.push((i, j));
            } else if x != 0.0 {
                matrix.set(i - 1, j - 1, 0.0);
            }
        }
    }
    if bad.is_empty() {
        Ok(PatternMatrix {
            graph: g.clone(),
            matrix,
        })
    } else {
        Err(ConeError::PatternViolation(bad))
    }
}

impl PatternMatrix {
    /// Builds from coordinates ordered as in [`pattern_positions`].
    pub fn from_coords(g: &Graph, coords: &[f64]) -> Result<Self, ConeError> {
        let positions = pattern_positions(g);
        if coords.len() != positions.len() {
            return Err(ConeError::CoordinateCount {
                expected: positions.len(),
                got: coords.len(),
            });
        }
        if let Some(k) = coords.iter().position(|x| !x.is_finite()) {
            return Err(ConeError::NonFinite(k));
        }
        let mut matrix = SymMatrix::zeros(g.node_count());
        for (&(i, j), &x) in positions.iter().zip(coords) {
            matrix.set(i - 1, j - 1, x);
        }
        Ok(PatternMatrix {
            graph: g.clone(),
            matrix,
        })
    }

    pub fn identity(g: &Graph) -> Self {
        PatternMatrix {
            graph: g.clone(),
            matrix: SymMatrix::identity(g.node_count()),
        }
    }

    /// The matrix with a single 1 at diagonal position `v`.
    pub fn unit_diagonal(g: &Graph, v: usize) -> Self {
        let mut matrix = SymMatrix::zeros(g.node_count());
        matrix.set(v - 1, v - 1, 1.0);
        PatternMatrix {
            graph: g.clone(),
            matrix,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> SymMatrix {
        self.matrix
    }

    /// Entry at 1-based node positions.
    pub fn entry(&self, u: usize, v: usize) -> f64 {
        self.matrix.get(u - 1, v - 1)
    }

    pub fn coords(&self) -> Vec<f64> {
        pattern_positions(&self.graph)
            .into_iter()
            .map(|(i, j)| self.entry(i, j))
            .collect()
    }

    /// Principal block on the 1-based node set `nodes`.
    pub fn block(&self, nodes: &[usize]) -> SymMatrix {
        let idx: Vec<usize> = nodes.iter().map(|v| v - 1).collect();
        self.matrix.principal_submatrix(&idx)
    }

    /// `self + t I`, staying on the same pattern.
    pub fn shifted(&self, t: f64) -> PatternMatrix {
        PatternMatrix {
            graph: self.graph.clone(),
            matrix: self.matrix.shifted(t),
        }
    }

    /// `t I - self`.
    pub fn reflected_shift(&self, t: f64) -> PatternMatrix {
        let n = self.graph.node_count();
        PatternMatrix {
            graph: self.graph.clone(),
            matrix: SymMatrix::from_lower_fn(n, |i, j| {
                let x = -self.matrix.get(i, j);
                if i == j {
                    x + t
                } else {
                    x
                }
            }),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PatternRepr {
    graph: Graph,
    coords: Vec<f64>,
}

impl Serialize for PatternMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PatternRepr {
            graph: self.graph.clone(),
            coords: self.coords(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PatternMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = PatternRepr::deserialize(d)?;
        PatternMatrix::from_coords(&r.graph, &r.coords).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MembershipStatus {
    Interior,
    Boundary,
    Exterior,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CliqueCheck {
    pub clique: Vec<usize>,
    #[serde(flatten)]
    pub check: SpectrumCheck,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MembershipCertificate {
    /// Spectrum of the whole matrix (primal side).
    Full(SpectrumCheck),
    /// Spectrum of each maximal-clique block (dual side).
    Cliques(Vec<CliqueCheck>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MembershipVerdict {
    pub status: MembershipStatus,
    pub certificate: MembershipCertificate,
    pub tol: Tolerance,
}

impl MembershipVerdict {
    pub fn is_member(&self) -> bool {
        self.status != MembershipStatus::Exterior
    }
}

/// Membership in `S₊(G)`.
///
/// The span `S(G)` contains the identity, so the relative interior of
/// `S₊(G)` consists of the positive definite pattern matrices. A pattern
/// matrix is therefore `Interior` when positive definite, `Boundary` when
/// positive semidefinite and singular, and `Exterior` otherwise.
pub fn membership_primal(x: &PatternMatrix, tol: &Tolerance) -> MembershipVerdict {
    let check = spectrum_check(&x.matrix, tol);
    let status = match check.definiteness {
        Definiteness::PositiveDefinite => MembershipStatus::Interior,
        Definiteness::PsdSingular => MembershipStatus::Boundary,
        Definiteness::Indefinite => MembershipStatus::Exterior,
    };
    MembershipVerdict {
        status,
        certificate: MembershipCertificate::Full(check),
        tol: *tol,
    }
}

/// Membership in `S*(G)` from the definiteness of every maximal-clique
/// block: all positive definite is `Interior`, all positive semidefinite
/// with some singular is `Boundary`, any indefinite block is `Exterior`.
///
/// ```
/// use chordcone::{is_chordal, membership_dual, Graph, MembershipStatus, PatternMatrix, Tolerance};
///
/// let star = Graph::from_edges(3, [(1, 2), (1, 3)]).unwrap();
/// let cert = is_chordal(&star).into_result().unwrap();
/// let e = PatternMatrix::unit_diagonal(&star, 1);
/// let verdict = membership_dual(&e, &cert, &Tolerance::default());
/// assert_eq!(verdict.status, MembershipStatus::Boundary);
/// ```
pub fn membership_dual(
    y: &PatternMatrix,
    cert: &ChordalCertificate,
    tol: &Tolerance,
) -> MembershipVerdict {
    let checks: Vec<CliqueCheck> = cert
        .maximal_cliques
        .iter()
        .map(|c| CliqueCheck {
            clique: c.clone(),
            check: spectrum_check(&y.block(c), tol),
        })
        .collect();
    let status = if checks
        .iter()
        .any(|c| c.check.definiteness == Definiteness::Indefinite)
    {
        MembershipStatus::Exterior
    } else if checks
        .iter()
        .any(|c| c.check.definiteness == Definiteness::PsdSingular)
    {
        MembershipStatus::Boundary
    } else {
        MembershipStatus::Interior
    };
    MembershipVerdict {
        status,
        certificate: MembershipCertificate::Cliques(checks),
        tol: *tol,
    }
}

/// Trace inner product `⟨x, y⟩ = tr(x y)`.
pub fn dual_pairing(x: &PatternMatrix, y: &PatternMatrix) -> Result<f64, ConeError> {
    if x.graph != y.graph {
        return Err(ConeError::GraphMismatch);
    }
    Ok(x.matrix.frobenius_dot(&y.matrix))
}

/// One term `v vᵀ` of a clique-supported decomposition; `vector` is indexed
/// by `node - 1` and vanishes outside `clique`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankOneTerm {
    pub clique: Vec<usize>,
    pub vector: Vec<f64>,
}

/// Writes `x ∈ S₊(G)` as a sum of rank-one matrices each supported on a
/// maximal clique.
///
/// Eliminating along the perfect elimination order creates no fill, and
/// each factor column is supported on its pivot and the pivot's later
/// neighbors, which form a clique. Skipped zero pivots contribute no term.
pub fn clique_rank_one_decomposition(
    x: &PatternMatrix,
    cert: &ChordalCertificate,
    tol: &Tolerance,
) -> Result<Vec<RankOneTerm>, ConeError> {
    if cert.peo.len() != x.graph.node_count() {
        return Err(ConeError::CertificateMismatch);
    }
    if !membership_primal(x, tol).is_member() {
        return Err(ConeError::NotMember);
    }
    let factor = cholesky_no_fill(&x.matrix, &cert.peo, &x.graph, tol)?;
    let mut terms = Vec::new();
    for (k, column) in factor.columns.into_iter().enumerate() {
        let support: Vec<usize> = column
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0.0)
            .map(|(i, _)| i + 1)
            .collect();
        if support.is_empty() {
            continue;
        }
        let clique = cert
            .maximal_cliques
            .iter()
            .find(|c| support.iter().all(|v| c.binary_search(v).is_ok()))
            .ok_or(ConeError::CertificateMismatch)?;
        debug_assert!(support.contains(&factor.order[k]));
        terms.push(RankOneTerm {
            clique: clique.clone(),
            vector: column,
        });
    }
    Ok(terms)
}

/// `Σ v vᵀ` over the terms.
pub fn reconstruct(n: usize, terms: &[RankOneTerm]) -> SymMatrix {
    let mut m = SymMatrix::zeros(n);
    for t in terms {
        m.add_outer(&t.vector);
    }
    m
}
