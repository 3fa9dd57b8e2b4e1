//! Lorentzian vector space in the mostly-plus signature (-,+,...,+).
//!
//! Frame components are dimensionless with c = 1; the time component sits at
//! index 0. Supported dimensions are 3 and 4.

use crate::error::{Error, Result};

/// Default tolerance for causal classification and preconditions.
///
/// Double precision leaves roughly five digits of headroom after the
/// worst-case cancellations in the triple-boost expansion, so 1e-10 separates
/// genuine degeneracy from round-off with margin on both sides.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Ultra-relativistic guard: speeds above this make the gamma factors large
/// enough to exhaust double headroom in the versor-norm identity.
pub const MAX_SPEED: f64 = 1.0 - 1e-9;

/// Round-off clamp: arguments within this distance below an exact domain
/// boundary (arccosh at 1, |cos| at 1, gamma at 1) snap to the boundary.
pub const CLAMP_TOL: f64 = 1e-12;

/// Metric signature with the single minus sign on axis 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    dim: usize,
}

impl Signature {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 3 || dim == 4 {
            Ok(Self { dim })
        } else {
            Err(Error::BadDimension { dim })
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sign of the diagonal metric entry for axis `mu`: -1 for time, +1 for space.
    pub fn sign(&self, mu: usize) -> f64 {
        assert!(
            mu < self.dim,
            "axis {mu} out of range for dimension {}",
            self.dim
        );
        if mu == 0 {
            -1.0
        } else {
            1.0
        }
    }

    pub fn diag(&self) -> Vec<f64> {
        (0..self.dim).map(|mu| self.sign(mu)).collect()
    }
}

/// Causal character of a vector relative to a classification tolerance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CausalClass {
    Timelike,
    Null,
    Spacelike,
    Zero,
}

impl CausalClass {
    /// The inclusive convention that counts the zero vector as spacelike.
    /// Preconditions in this crate distinguish `Zero`, so both views exist.
    pub fn is_spacelike_or_zero(self) -> bool {
        matches!(self, CausalClass::Spacelike | CausalClass::Zero)
    }
}

/// Grade-1 element: frame components `u^mu` in an orthonormal basis.
///
/// Stored in a fixed `[f64; 4]` with the trailing entries zero when `dim == 3`,
/// so values are `Copy` and operations never allocate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpacetimeVector {
    dim: usize,
    c: [f64; 4],
}

impl SpacetimeVector {
    /// Builds a vector from a component slice, validating dimension and finiteness.
    pub fn new(components: &[f64]) -> Result<Self> {
        let dim = components.len();
        if dim != 3 && dim != 4 {
            return Err(Error::BadDimension { dim });
        }
        for (index, &x) in components.iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::NonFinite { index });
            }
        }
        let mut c = [0.0; 4];
        c[..dim].copy_from_slice(components);
        Ok(Self { dim, c })
    }

    pub fn zero(dim: usize) -> Self {
        assert!(dim == 3 || dim == 4, "unsupported dimension {dim}");
        Self { dim, c: [0.0; 4] }
    }

    /// Basis vector `e_mu`.
    pub fn basis(dim: usize, mu: usize) -> Self {
        assert!(mu < dim, "axis {mu} out of range for dimension {dim}");
        let mut v = Self::zero(dim);
        v.c[mu] = 1.0;
        v
    }

    /// The rest-frame four-velocity (1, 0, ..., 0).
    pub fn rest(dim: usize) -> Self {
        Self::basis(dim, 0)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[f64] {
        &self.c[..self.dim]
    }

    /// Spatial part (components 1..dim).
    pub fn spatial(&self) -> &[f64] {
        &self.c[1..self.dim]
    }

    /// Minkowski scalar product `-u0 v0 + sum_i ui vi`.
    ///
    /// The summation order is fixed, so `inner` is exactly symmetric in its
    /// arguments (IEEE multiplication commutes and the additions occur in the
    /// same order either way).
    pub fn inner(&self, other: &SpacetimeVector) -> f64 {
        assert_eq!(
            self.dim, other.dim,
            "dimension mismatch: {} vs {}",
            self.dim, other.dim
        );
        let mut acc = -(self.c[0] * other.c[0]);
        for mu in 1..self.dim {
            acc += self.c[mu] * other.c[mu];
        }
        acc
    }

    /// `eta(u, u)`.
    pub fn norm_sq(&self) -> f64 {
        self.inner(self)
    }

    /// Euclidean length of the component tuple, used only to separate the
    /// zero vector from genuinely null ones.
    pub fn euclid_norm(&self) -> f64 {
        self.components().iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Causal classification relative to `tol` (> 0).
    pub fn causal_class(&self, tol: f64) -> CausalClass {
        assert!(tol > 0.0, "classification tolerance must be positive");
        if self.euclid_norm() <= tol {
            return CausalClass::Zero;
        }
        let q = self.norm_sq();
        if q.abs() <= tol {
            CausalClass::Null
        } else if q < 0.0 {
            CausalClass::Timelike
        } else {
            CausalClass::Spacelike
        }
    }

    /// Splits `self` into components parallel and orthogonal to `axis`.
    ///
    /// Fails when `axis` is null or zero, since the projection divides by
    /// `eta(axis, axis)`.
    pub fn decompose(&self, axis: &SpacetimeVector) -> Result<OrthogonalSplit> {
        let q = axis.norm_sq();
        match axis.causal_class(DEFAULT_TOL) {
            CausalClass::Null | CausalClass::Zero => Err(Error::NullOrZero {
                norm_sq: q,
                context: "decompose",
            }),
            _ => {
                let parallel = *axis * (self.inner(axis) / q);
                let perpendicular = *self - parallel;
                Ok(OrthogonalSplit {
                    parallel,
                    perpendicular,
                })
            }
        }
    }

    /// True when `|eta(u,u) + 1|` is small on the scale of the components,
    /// i.e. the vector is unit timelike up to the rounding inherent in
    /// evaluating the metric at that magnitude.
    pub(crate) fn is_unit_timelike(&self) -> bool {
        let e2 = self.components().iter().map(|x| x * x).sum::<f64>();
        (self.norm_sq() + 1.0).abs() <= DEFAULT_TOL * (1.0 + e2)
    }
}

impl std::ops::Index<usize> for SpacetimeVector {
    type Output = f64;
    fn index(&self, mu: usize) -> &f64 {
        &self.components()[mu]
    }
}

impl std::ops::Add for SpacetimeVector {
    type Output = SpacetimeVector;
    fn add(self, rhs: SpacetimeVector) -> SpacetimeVector {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut c = [0.0; 4];
        for mu in 0..self.dim {
            c[mu] = self.c[mu] + rhs.c[mu];
        }
        SpacetimeVector { dim: self.dim, c }
    }
}

impl std::ops::Sub for SpacetimeVector {
    type Output = SpacetimeVector;
    fn sub(self, rhs: SpacetimeVector) -> SpacetimeVector {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut c = [0.0; 4];
        for mu in 0..self.dim {
            c[mu] = self.c[mu] - rhs.c[mu];
        }
        SpacetimeVector { dim: self.dim, c }
    }
}

impl std::ops::Mul<f64> for SpacetimeVector {
    type Output = SpacetimeVector;
    fn mul(self, s: f64) -> SpacetimeVector {
        let mut c = [0.0; 4];
        for mu in 0..self.dim {
            c[mu] = self.c[mu] * s;
        }
        SpacetimeVector { dim: self.dim, c }
    }
}

impl std::ops::Neg for SpacetimeVector {
    type Output = SpacetimeVector;
    fn neg(self) -> SpacetimeVector {
        self * -1.0
    }
}

impl From<[f64; 3]> for SpacetimeVector {
    fn from(c: [f64; 3]) -> Self {
        SpacetimeVector::new(&c).expect("finite components")
    }
}

impl From<[f64; 4]> for SpacetimeVector {
    fn from(c: [f64; 4]) -> Self {
        SpacetimeVector::new(&c).expect("finite components")
    }
}

/// Result of the parallel/orthogonal split of a vector along an axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrthogonalSplit {
    pub parallel: SpacetimeVector,
    pub perpendicular: SpacetimeVector,
}

/// Gamma factor `-eta(u, v)` of two unit timelike, consistently
/// time-oriented vectors. Equals the special-relativistic Lorentz factor
/// when one argument is the rest-frame velocity.
pub fn gamma_factor(u: &SpacetimeVector, v: &SpacetimeVector) -> Result<f64> {
    for x in [u, v] {
        if !x.is_unit_timelike() {
            return Err(Error::NotUnitTimelike {
                norm_sq: x.norm_sq(),
            });
        }
    }
    let inner = u.inner(v);
    if inner >= 0.0 {
        return Err(Error::NotTimeOriented { inner });
    }
    Ok(-inner)
}

/// Four-velocity `gamma * (1, v)` of a spatial velocity (2 or 3 components,
/// units of c). Unit timelike and future directed by construction.
pub fn four_velocity(speed: &[f64]) -> Result<SpacetimeVector> {
    let dim = speed.len() + 1;
    if dim != 3 && dim != 4 {
        return Err(Error::BadDimension { dim });
    }
    for (index, &x) in speed.iter().enumerate() {
        if !x.is_finite() {
            return Err(Error::NonFinite { index });
        }
    }
    let v2: f64 = speed.iter().map(|x| x * x).sum();
    let v = v2.sqrt();
    if v > MAX_SPEED {
        return Err(Error::Superluminal {
            speed: v,
            max: MAX_SPEED,
        });
    }
    let gamma = 1.0 / (1.0 - v2).sqrt();
    let mut c = [0.0; 4];
    c[0] = gamma;
    for (i, &x) in speed.iter().enumerate() {
        c[i + 1] = gamma * x;
    }
    Ok(SpacetimeVector { dim, c })
}

/// Hyperbolic angle `arccosh(-eta(u,v) / sqrt(eta(u,u) eta(v,v)))` between
/// timelike vectors; the rapidity of the boost taking one to the other.
pub fn hyperbolic_angle(u: &SpacetimeVector, v: &SpacetimeVector) -> Result<f64> {
    for x in [u, v] {
        let q = x.norm_sq();
        if q >= -DEFAULT_TOL {
            return Err(Error::NotUnitTimelike { norm_sq: q });
        }
    }
    let inner = u.inner(v);
    if inner >= 0.0 {
        return Err(Error::NotTimeOriented { inner });
    }
    let arg = -inner / (u.norm_sq() * v.norm_sq()).sqrt();
    if arg < 1.0 - CLAMP_TOL {
        return Err(Error::ArccoshDomain { arg });
    }
    Ok(arg.max(1.0).acosh())
}

/// Gram determinant `eta(p,p) eta(q,q) - eta(p,q)^2`.
///
/// Nonnegative when both vectors lie in a spacelike plane; zero exactly on
/// linear dependence.
pub fn gram_det(p: &SpacetimeVector, q: &SpacetimeVector) -> f64 {
    p.norm_sq() * q.norm_sq() - p.inner(q).powi(2)
}
