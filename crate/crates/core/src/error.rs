use thiserror::Error;

/// Domain errors raised across the library.
///
/// The display strings are part of the CLI contract: they are printed verbatim
/// on standard error when a command fails with exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartanMatrix(String),
    #[error("not finite type")]
    NotFiniteType,
    #[error("Weyl group too large for desk scale")]
    WeylGroupTooLarge,
    #[error("aperiodic exponential for given period")]
    AperiodicExponential,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cannot parse rational {0:?}")]
    BadRational(String),

    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("grading must cover exactly the imaginary roots")]
    GradingDomain,
    #[error("Cayley transform undefined")]
    CayleyUndefined,
    #[error("unsupported grading propagation")]
    UnsupportedGradingPropagation,
    #[error("not a fundamental Cartan: no simple system with tau(Pi) = -Pi")]
    NotFundamental,
    #[error("no restricted roots for compact Cartan")]
    NoRestrictedRoots,
    #[error("no compatible positive system")]
    NoCompatiblePositiveSystem,
    #[error("vector is not in the {0} eigenspace of the involution")]
    NotInEigenspace(&'static str),

    #[error("open-orbit count implemented only for equal-rank Cartan")]
    OpenCountNotEqualRank,
    #[error("isotropy not compact modulo center")]
    IsotropyNotCompact,
    #[error("orbit is not a realization configuration: {0}")]
    NotRealizationConfig(String),
    #[error("subset index {0} is not a simple root")]
    BadSimpleIndex(usize),

    #[error("q(lambda) undefined on singular parameter")]
    SingularQ,
    #[error("no discrete series at singular parameter")]
    SingularDiscrete,
    #[error("discrete series requires compact Cartan")]
    DiscreteNeedsCompactCartan,
    #[error("torus point too close to singular set")]
    SingularTorusPoint,
    #[error("not a highest weight for the isotropy algebra")]
    NotHighestWeight,
    #[error("not an H-series parameter")]
    NotHSeriesParameter,
    #[error("parameter is not in the lattice (coordinates must be half-integers)")]
    NotInLattice,
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("unknown Cartan class {0:?}")]
    UnknownCartan(String),
    #[error("malformed group spec: {0}")]
    GroupSpec(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
