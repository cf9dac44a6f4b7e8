use thiserror::Error;

use crate::constructions::Guard;

/// Every failure the kernel can report.
///
/// Degeneracies of the input are distinguished from internal consistency
/// failures (`NotConcurrent`, `Inconsistent`): the latter mean an identity
/// that should hold exactly did not.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("homogeneous triple is the zero vector")]
    ZeroVector,
    #[error("points coincide")]
    EqualPoints,
    #[error("lines coincide")]
    EqualLines,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("cross-ratio is 0/0")]
    DegenerateQuadruple,
    #[error("argument coincides with a base point")]
    CoincidentArgument,
    #[error("argument lies on the line at infinity")]
    InfiniteArgument,
    #[error("input points are collinear")]
    CollinearInput,
    #[error("input point lies on the line at infinity")]
    InfiniteInput,
    #[error("quadruple is not in general position")]
    DegeneratePosition,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("reflection direction lies on the axis")]
    DirectionOnAxis,
    #[error("reflection direction is not a point at infinity")]
    NotADirection,
    #[error("affine map is a translation and has no ordinary fixed point")]
    TranslationNoFixedPoint,
    #[error("affine map has no isolated fixed point")]
    NonIsolatedFixedPoints,
    #[error("map is not affine")]
    NotAffine,
    #[error("point lies on a side line of the reference triangle")]
    OnSideLine,
    #[error("conic conditions leave more than one solution")]
    UnderDetermined,
    #[error("four of the points are collinear")]
    FourCollinear,
    #[error("conic conditions have rank below five")]
    RankDeficient,
    #[error("conic conditions admit no solution")]
    Overconstrained,
    #[error("conic is degenerate")]
    DegenerateConic,
    #[error("known point is not on both the conic and the line")]
    KnownNotIncident,
    #[error("line is tangent to the conic")]
    TangentLine,
    #[error("involutions live on different lines")]
    DifferentBaseLines,
    #[error("quadrangle has three collinear vertices")]
    DegenerateQuadrangle,
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("triangle is degenerate")]
    DegenerateTriangle,
    #[error("input is a vertex of the reference triangle")]
    VertexInput,
    #[error("point lies on the line at infinity")]
    InfinitePoint,
    #[error("input is a fixed point of the generalized isogonal map")]
    FixedPointInput,
    #[error("generalized isogonal conjugate lies at infinity")]
    InfiniteConjugate,
    #[error("triangles are not perspective")]
    NotPerspective,
    #[error("point is not on the circumconic (or is a vertex)")]
    NotOnCircumconic,
    #[error("hypothesis guard violated: {0}")]
    GuardViolation(Guard),
    #[error("constructed lines are not concurrent: {0}")]
    NotConcurrent(&'static str),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("sampler gave up after {0} rejections")]
    RetryExhausted(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, GeometryError>;
