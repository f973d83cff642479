//! Exact-arithmetic toolkit for 3-dimensional cubic regular algebras on
//! `P1 x P1`.
//!
//! The crate builds geometric pairs `(E, sigma)` of types P, S and T,
//! extracts their defining relations by exact kernel computation, checks
//! regularity through the standardness + empty-common-zero-set criterion,
//! and decides graded isomorphism and graded Morita equivalence both by
//! table conditions and by explicit geometric witness searches.
//!
//! All arithmetic is over the Gaussian rationals `Q(i)`; there is no
//! floating point anywhere.

pub mod classify;
pub mod geopair;
pub mod linalg;
pub mod proj;
pub mod scalar;
pub mod superpot;
pub mod tensor;

pub use classify::{
    distinguish_types, iso_geometric, iso_table, morita_geometric, morita_table,
    AlgebraDescriptor, EquivalenceVerdict, Method, Relatedness, Witness,
};
pub use geopair::{
    g2_relations, make_pair, sample_triples, sigma_apply, table_relations, twist_relations,
    GeometricPair, Kind, PointTriple,
};
pub use proj::{
    act, equiv_e, intersection_points, intersection_type, pair_similar, proj_similar, swap_nu,
    EquivMode, GraphDivisor, IntersectionType, PairSimilarity, PairedMaps, ProjMap, ProjPoint,
};
pub use scalar::Scalar;
pub use superpot::{
    check_as_regular, common_zero_empty, derivation_quotient, in_aut_w, is_standard,
    is_superpotential, m_matrix, ms_twist, solve_twist_witness, AsRegularCertificate,
    CubicPresentation, MMatrix,
};
pub use tensor::{
    cyclic_phi, evaluate, kernel_of_evaluations, partial, span_equal, Generator, NcTensor,
    RelationSpace, Word,
};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("singular matrix")]
    SingularMatrix,
    #[error("side condition violated: {0}")]
    SideCondition(String),
    #[error("kernel dimension {dim} (rank {rank}), expected dimension 2")]
    KernelDimension { dim: usize, rank: usize },
    #[error("relation rank failed to stabilize at 6 within the sampling cap")]
    RankNotStabilized,
    #[error("left partial derivatives are linearly dependent")]
    DependentPartials,
    #[error("point not on E")]
    PointNotOnCurve,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
