//! Minimal hyperbolic polynomials of cones of chordal sparse matrices.
//!
//! For a chordal graph `G`, the cone `S*(G)` of pattern matrices whose
//! maximal-clique blocks are positive semidefinite is a hyperbolicity cone
//! with minimal polynomial `p_G(X) = Π_C det(X_C)`. This crate builds `p_G`,
//! certifies that no factor can be dropped, tests membership in `S*(G)` and
//! its dual `S₊(G)`, computes hyperbolic ranks, and reports the structural
//! consequences: when `S*(G)` is rank-one generated and how the degree of
//! `p_G` compares with the homogeneous cone rank.
//!
//! ```
//! use chordcone::{is_chordal, minimal_polynomial, Graph};
//!
//! // The 3-node star gives the Vinberg cone: rank 3, minimal degree 4.
//! let star = Graph::from_edges(3, [(1, 2), (1, 3)]).unwrap();
//! let cert = is_chordal(&star).into_result().unwrap();
//! assert_eq!(cert.maximal_cliques, vec![vec![1, 2], vec![1, 3]]);
//! assert_eq!(minimal_polynomial(&star, &cert).unwrap().degree(), 4);
//! ```
//!
//! Nodes are labeled `1..=n`; matrix rows and columns use `node - 1`.

pub mod chordal;
pub mod cones;
pub mod forest;
pub mod generate;
pub mod graph;
pub mod io;
pub mod minpoly;
pub mod numerics;
pub mod structure;

pub use chordal::{
    find_induced_p4, is_chordal, is_homogeneous_chordal, maximal_cliques, ChordalCertificate,
    ChordalError, Chordality, Homogeneity,
};
pub use cones::{
    clique_rank_one_decomposition, dual_pairing, embed, membership_dual, membership_primal,
    pattern_positions, reconstruct, CliqueCheck, ConeError, MembershipCertificate,
    MembershipStatus, MembershipVerdict, PatternMatrix, RankOneTerm,
};
pub use forest::{comparability_graph, to_rooted_forest, ForestError, RootedForest};
pub use generate::{
    gen_disjoint_cliques, gen_max_degree_family, gen_path, gen_random_chordal, gen_random_forest,
    gen_random_homogeneous, random_clique_sizes, GenerateError,
};
pub use graph::{parse_graph, Graph, GraphError};
pub use io::{read_pattern_matrix, read_self_contained, DocumentError};
pub use minpoly::{
    boundary_witness, char_roots, evaluate, minimal_polynomial, minimality_certificate,
    MinimalPolynomial, MinimalityCertificate, MinpolyError, RankReport, WitnessMatrix,
    WitnessReport,
};
pub use numerics::{
    cholesky_no_fill, definiteness, spectrum_check, sym_eigenvalues, CholeskyError, CholeskyFactor,
    Definiteness, MatrixError, ScaleMode, SpectrumCheck, SymMatrix, Tolerance, ToleranceError,
};
pub use structure::{
    degree_bound_dimension, degree_bound_exponential, degree_bound_quadratic, extreme_ray_rank,
    forest_degree, is_rog_realizable, report_with_certificate, structure_report, ExponentialBound,
    RogVerdict, StructureError, StructureReport,
};

// Code blocks in the guide under book/ run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/chordal-graphs.md")]
    mod chordal_graphs {}
    #[doc = include_str!("../../../book/src/cones.md")]
    mod cones {}
    #[doc = include_str!("../../../book/src/minimal-polynomial.md")]
    mod minimal_polynomial {}
    #[doc = include_str!("../../../book/src/rank-and-rog.md")]
    mod rank_and_rog {}
    #[doc = include_str!("../../../book/src/degree-bounds.md")]
    mod degree_bounds {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
