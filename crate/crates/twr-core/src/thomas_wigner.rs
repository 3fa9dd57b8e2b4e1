//! The rotation left over after a closed cycle of three boosts.
//!
//! A boost from rest to `v`, then to `w`, then back to rest composes to a
//! pure spatial rotation. Two independent routes to its angle live here:
//!
//! * the closed-form cosine in terms of the three pairwise gamma factors
//!   ([`macfarlane_cos_psi`]), reached through the Clifford algebra by
//!   reducing the composed versor to `alpha + beta [v_perp, w_perp]`;
//! * straight composition of the three boost matrices ([`tw_oracle`]),
//!   which never touches the algebra and serves as the cross-check oracle.
//!
//! [`tw_angle`] runs both and refuses to return silently inconsistent
//! results.

use crate::clifford::{commutator, embed, Multivector};
use crate::error::{Error, Result};
use crate::lorentz::{boost_matrix, orthonormal_plane, LorentzMatrix};
use crate::minkowski::{four_velocity, gram_det, SpacetimeVector, CLAMP_TOL, DEFAULT_TOL};

/// The three pairwise gamma factors of a boost triple.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GammaTriple {
    pub uv: f64,
    pub uw: f64,
    pub vw: f64,
}

/// Full output of the rotation-angle computation.
#[derive(Clone, Debug, PartialEq)]
pub struct TwResult {
    /// Cosine of the rotation angle, in [-1, 1].
    pub cos_psi: f64,
    /// Signed angle in (-pi, pi], measured in the plane oriented by
    /// (v_perp, w_perp); `cos(psi_signed)` equals `cos_psi` exactly.
    pub psi_signed: f64,
    /// The oriented rotation plane, spanned by the parts of the two
    /// four-velocities orthogonal to the rest frame (not normalized).
    pub plane: (SpacetimeVector, SpacetimeVector),
    pub gammas: GammaTriple,
    /// Squared norm of the composed versor,
    /// `8 (1 + gamma_uv)(1 + gamma_vw)(1 + gamma_wu)`.
    pub sigma_sq: f64,
    /// Set when the boost plane is degenerate (coplanar velocities), in
    /// which case the composition is a pure boost and psi is exactly 0.
    pub degenerate: bool,
}

/// The composed versor reduced to the two-parameter rotation form
/// `alpha + beta [p, q]` with `p = v_perp`, `q = w_perp`, `beta = -1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwVersorParts {
    pub alpha: f64,
    pub p: SpacetimeVector,
    pub q: SpacetimeVector,
    pub beta: f64,
}

impl TwVersorParts {
    /// Expands the form back into a dense multivector.
    pub fn to_multivector(&self) -> Multivector {
        Multivector::scalar(self.p.dim(), self.alpha)
            + commutator(&embed(&self.p), &embed(&self.q)) * self.beta
    }

    /// True when `p` and `q` do not span a plane at tolerance `tol`
    /// (collinear velocities: the rotation collapses to the identity).
    pub fn is_degenerate(&self, tol: f64) -> bool {
        plane_is_degenerate(&self.p, &self.q, tol)
    }
}

fn plane_is_degenerate(p: &SpacetimeVector, q: &SpacetimeVector, tol: f64) -> bool {
    gram_det(p, q) <= tol * p.norm_sq() * q.norm_sq() + f64::MIN_POSITIVE
}

fn lorentz_gamma(speed: &[f64]) -> Result<f64> {
    // route through the four-velocity constructor so the speed guard and
    // finiteness checks live in exactly one place
    Ok(four_velocity(speed)?[0])
}

/// Gamma factor between two moving frames given in a common rest frame:
/// `gamma_uv gamma_uw (1 - v.w)`. Equals `-eta` of the two four-velocities.
pub fn gamma_vw(v_speed: &[f64], w_speed: &[f64]) -> Result<f64> {
    assert_eq!(
        v_speed.len(),
        w_speed.len(),
        "velocity dimension mismatch: {} vs {}",
        v_speed.len(),
        w_speed.len()
    );
    let g_uv = lorentz_gamma(v_speed)?;
    let g_uw = lorentz_gamma(w_speed)?;
    let dot: f64 = v_speed.iter().zip(w_speed).map(|(a, b)| a * b).sum();
    Ok(g_uv * g_uw * (1.0 - dot))
}

/// Closed-form cosine of the rotation angle in terms of the three pairwise
/// gamma factors:
/// `(1 + g_uv + g_uw + g_vw)^2 / ((1+g_uv)(1+g_uw)(1+g_vw)) - 1`.
///
/// Inputs a few ulp below 1 clamp to 1 (they arise from round-off in
/// otherwise exact degenerate configurations); anything lower is a domain
/// error. The result is clamped into [-1, 1] when within round-off of the
/// boundary; a value far outside means the triple was not realizable and is
/// returned as-is for the caller's consistency check to catch.
pub fn macfarlane_cos_psi(g_uv: f64, g_uw: f64, g_vw: f64) -> Result<f64> {
    for g in [g_uv, g_uw, g_vw] {
        if g < 1.0 - CLAMP_TOL || g.is_nan() {
            return Err(Error::GammaBelowOne { gamma: g });
        }
    }
    let (a, b, c) = (g_uv.max(1.0), g_uw.max(1.0), g_vw.max(1.0));
    let s = 1.0 + a + b + c;
    let raw = s * s / ((1.0 + a) * (1.0 + b) * (1.0 + c)) - 1.0;
    if raw.abs() <= 1.0 + CLAMP_TOL {
        Ok(raw.clamp(-1.0, 1.0))
    } else {
        Ok(raw)
    }
}

fn check_triple(u: &SpacetimeVector, v: &SpacetimeVector, w: &SpacetimeVector) -> Result<()> {
    for x in [u, v, w] {
        if !x.is_unit_timelike() {
            return Err(Error::NotUnitTimelike {
                norm_sq: x.norm_sq(),
            });
        }
    }
    for (a, b) in [(u, v), (u, w), (v, w)] {
        let inner = a.inner(b);
        if inner >= 0.0 {
            return Err(Error::NotTimeOriented { inner });
        }
        // automatic for consistently oriented timelike pairs, flagged anyway
        let s = *a + *b;
        if s.norm_sq().abs() <= DEFAULT_TOL {
            return Err(Error::NullOrZero {
                norm_sq: s.norm_sq(),
                context: "pairwise sum of boost triple",
            });
        }
    }
    Ok(())
}

/// The composed versor `(-1 + u w)(-1 + w v)(-1 + v u)` whose conjugation is
/// the loop of three boosts. Fixes `u`; grades 0 and 2 only.
pub fn tw_versor(
    u: &SpacetimeVector,
    v: &SpacetimeVector,
    w: &SpacetimeVector,
) -> Result<Multivector> {
    check_triple(u, v, w)?;
    let factor = |a: &SpacetimeVector, b: &SpacetimeVector| {
        embed(a).gp(&embed(b)) - Multivector::one(a.dim())
    };
    Ok(factor(u, w).gp(&factor(w, v)).gp(&factor(v, u)))
}

/// Reduces the composed versor to `alpha + beta [v_perp, w_perp]` with
/// `beta = -1` and `alpha = -2 (1 - eta(v,u) - eta(w,u) - eta(w,v))`.
///
/// The reduction is exact, so the expansion is checked against the raw
/// triple product and a mismatch is a bug trap, not a user error.
pub fn tw_versor_parts(
    u: &SpacetimeVector,
    v: &SpacetimeVector,
    w: &SpacetimeVector,
) -> Result<TwVersorParts> {
    let r = tw_versor(u, v, w)?;
    let alpha = -2.0 * (1.0 - v.inner(u) - w.inner(u) - w.inner(v));
    let parts = TwVersorParts {
        alpha,
        p: v.decompose(u)?.perpendicular,
        q: w.decompose(u)?.perpendicular,
        beta: -1.0,
    };
    let residue = parts.to_multivector().max_abs_diff(&r);
    if residue > DEFAULT_TOL * r.max_abs().max(1.0) {
        return Err(Error::Internal {
            detail: format!("versor reduction residue {residue:.3e}"),
        });
    }
    Ok(parts)
}

/// Scalar norm `r reverse(r)` of the composed versor. Equals
/// `8 (1 + gamma_uv)(1 + gamma_vw)(1 + gamma_wu)`; any residue outside the
/// scalar grade beyond round-off is reported.
pub fn sigma_squared(u: &SpacetimeVector, v: &SpacetimeVector, w: &SpacetimeVector) -> Result<f64> {
    let r = tw_versor(u, v, w)?;
    let norm = r.gp(&r.reverse());
    let residue = norm.max_abs_outside_grade(0);
    if residue > DEFAULT_TOL * norm.scalar_part().abs().max(1.0) {
        return Err(Error::Internal {
            detail: format!("versor norm has non-scalar residue {residue:.3e}"),
        });
    }
    Ok(norm.scalar_part())
}

/// Composition of the three explicit boost matrices, rightmost acting
/// first: boost rest to `v`, then `v` to `w`, then `w` back to rest.
///
/// Built entirely from reflections; this path is independent of the
/// Clifford module and serves as the oracle for everything else.
pub fn tw_oracle(v_speed: &[f64], w_speed: &[f64]) -> Result<LorentzMatrix> {
    assert_eq!(
        v_speed.len(),
        w_speed.len(),
        "velocity dimension mismatch: {} vs {}",
        v_speed.len(),
        w_speed.len()
    );
    let u = SpacetimeVector::rest(v_speed.len() + 1);
    let v = four_velocity(v_speed)?;
    let w = four_velocity(w_speed)?;
    let to_v = boost_matrix(&u, &v)?;
    let v_to_w = boost_matrix(&v, &w)?;
    let back = boost_matrix(&w, &u)?;
    Ok(back.compose(&v_to_w).compose(&to_v))
}

/// Computes the rotation angle of the boost loop for two velocities given
/// in the rest frame, by formula and by oracle, and cross-checks the two.
///
/// `tol` controls the coplanarity cut (relative, on the Gram determinant of
/// the rotation plane); degenerate inputs report psi = 0 with the flag set,
/// since the composition is then a pure boost.
pub fn tw_angle(v_speed: &[f64], w_speed: &[f64], tol: f64) -> Result<TwResult> {
    assert_eq!(
        v_speed.len(),
        w_speed.len(),
        "velocity dimension mismatch: {} vs {}",
        v_speed.len(),
        w_speed.len()
    );
    let dim = v_speed.len() + 1;
    if dim != 3 && dim != 4 {
        return Err(Error::BadDimension { dim });
    }
    let u = SpacetimeVector::rest(dim);
    let v = four_velocity(v_speed)?;
    let w = four_velocity(w_speed)?;

    let gammas = GammaTriple {
        uv: v[0],
        uw: w[0],
        vw: gamma_vw(v_speed, w_speed)?,
    };
    let raw = macfarlane_cos_psi(gammas.uv, gammas.uw, gammas.vw)?;
    if raw.abs() > 1.0 + CLAMP_TOL {
        return Err(Error::Internal {
            detail: format!("formula value {raw} outside [-1, 1]"),
        });
    }
    let sigma_sq = 8.0 * (1.0 + gammas.uv) * (1.0 + gammas.vw) * (1.0 + gammas.uw);

    let v_perp = v.decompose(&u)?.perpendicular;
    let w_perp = w.decompose(&u)?.perpendicular;

    if plane_is_degenerate(&v_perp, &w_perp, tol) {
        // coplanar boosts compose to a pure boost; the exact limit is psi = 0
        return Ok(TwResult {
            cos_psi: 1.0,
            psi_signed: 0.0,
            plane: (v_perp, w_perp),
            gammas,
            sigma_sq,
            degenerate: true,
        });
    }

    let cos_psi = raw.clamp(-1.0, 1.0);
    let oracle = tw_oracle(v_speed, w_speed)?;
    let (f1, f2) = orthonormal_plane(&v_perp, &w_perp)?;
    let image = oracle.apply(&f1);
    let oracle_cos = image.inner(&f1);
    let oracle_sin = image.inner(&f2);
    if (cos_psi - oracle_cos).abs() > 1e-9 {
        return Err(Error::Internal {
            detail: format!(
                "formula cos {cos_psi} and oracle cos {oracle_cos} disagree beyond 1e-9"
            ),
        });
    }
    // magnitude from the formula, sign from the oracle projection, so that
    // cos(psi_signed) reproduces cos_psi exactly
    let psi_signed = if oracle_sin < 0.0 {
        -cos_psi.acos()
    } else {
        cos_psi.acos()
    };
    Ok(TwResult {
        cos_psi,
        psi_signed,
        plane: (v_perp, w_perp),
        gammas,
        sigma_sq,
        degenerate: false,
    })
}
