//! Error type shared by all kernel modules.

/// Errors reported by the geometry and algebra kernels.
///
/// Dimension mismatches between operands are programmer errors and panic
/// instead of returning a variant; everything reachable from user input
/// (speeds, tolerances, vector data) comes through here.
#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum Error {
    /// A spatial velocity at or above the speed of light (or above the
    /// ultra-relativistic guard, where gamma factors exhaust double headroom).
    #[error("superluminal: speed {speed} exceeds the maximum {max}")]
    Superluminal { speed: f64, max: f64 },

    /// An operation required a non-null, non-zero vector.
    #[error("{context}: vector is null or zero within tolerance (eta(x,x) = {norm_sq:.3e})")]
    NullOrZero { norm_sq: f64, context: &'static str },

    /// An operation required a unit timelike vector.
    #[error("expected a unit timelike vector, found eta(u,u) = {norm_sq}")]
    NotUnitTimelike { norm_sq: f64 },

    /// Two timelike vectors pointed into opposite light cones.
    #[error("vectors are not consistently time oriented (eta(u,v) = {inner} >= 0)")]
    NotTimeOriented { inner: f64 },

    /// A gamma factor below 1 beyond tolerance.
    #[error("gamma factor {gamma} < 1 beyond tolerance")]
    GammaBelowOne { gamma: f64 },

    /// arccosh of an argument below 1 beyond tolerance.
    #[error("arccosh argument {arg} < 1 beyond tolerance")]
    ArccoshDomain { arg: f64 },

    /// The plane spanned by two vectors collapsed (linear dependence) or is
    /// not spacelike, so no rotation angle can be extracted from it.
    #[error("degenerate rotation plane: {detail}")]
    DegeneratePlane { detail: String },

    /// A rotation versor with a vanishing bivector coefficient.
    #[error("beta = 0: element is scalar, rotation plane undefined")]
    ZeroBeta,

    /// The element does not behave like a versor (r * reverse(r) is not a
    /// nonzero scalar, or conjugation left a residue outside grade 1).
    #[error("not a versor: {detail}")]
    NotVersor { detail: String },

    /// An internal cross-check failed; this is a bug trap, not a user error.
    #[error("internal consistency failure: {detail}")]
    Internal { detail: String },

    /// Unsupported vector-space dimension.
    #[error("unsupported dimension {dim}: expected 3 or 4")]
    BadDimension { dim: usize },

    /// Non-finite component in input data.
    #[error("component {index} is not finite")]
    NonFinite { index: usize },
}

impl Error {
    /// True for the bug-trap variant; front ends map this to a different
    /// exit status than ordinary input errors.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
