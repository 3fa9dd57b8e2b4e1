//! Reflections, boosts, and rotation-angle extraction.
//!
//! Two independent representations of the same transformations live here:
//! versors acting by conjugation (through [`crate::clifford`]) and explicit
//! matrices built from reflections alone. The matrix path never touches the
//! algebra, which is what makes it usable as a cross-check oracle.

use crate::clifford::{sandwich_vector, Multivector, VersorForm};
use crate::error::{Error, Result};
use crate::minkowski::{gram_det, CausalClass, SpacetimeVector, CLAMP_TOL, DEFAULT_TOL};

/// Plain 2x2 real matrix, row major.
pub type Mat2 = [[f64; 2]; 2];

/// n x n matrix of frame components `L^mu_nu`, acting by `(L x)^i = L^i_j x^j`.
///
/// `dim` 2 is allowed for the rapidity block form; vectors themselves only
/// exist in dimensions 3 and 4.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzMatrix {
    dim: usize,
    m: [[f64; 4]; 4],
}

impl LorentzMatrix {
    pub fn identity(dim: usize) -> Self {
        assert!((2..=4).contains(&dim), "unsupported dimension {dim}");
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate().take(dim) {
            row[i] = 1.0;
        }
        Self { dim, m }
    }

    /// Builds a matrix from its columns (the images of the basis vectors).
    pub fn from_columns(columns: &[SpacetimeVector]) -> Self {
        let dim = columns.len();
        assert!(dim == 3 || dim == 4, "unsupported dimension {dim}");
        let mut m = [[0.0; 4]; 4];
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.dim(), dim, "dimension mismatch");
            for i in 0..dim {
                m[i][j] = col[i];
            }
        }
        Self { dim, m }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        assert!(i < self.dim && j < self.dim, "index out of range");
        self.m[i][j]
    }

    pub fn column(&self, j: usize) -> SpacetimeVector {
        assert!(self.dim >= 3, "no vector type for dimension {}", self.dim);
        let mut c = [0.0; 4];
        for i in 0..self.dim {
            c[i] = self.m[i][j];
        }
        SpacetimeVector::new(&c[..self.dim]).expect("finite entries")
    }

    pub fn apply(&self, x: &SpacetimeVector) -> SpacetimeVector {
        assert_eq!(self.dim, x.dim(), "dimension mismatch");
        let mut c = [0.0; 4];
        for i in 0..self.dim {
            for j in 0..self.dim {
                c[i] += self.m[i][j] * x[j];
            }
        }
        SpacetimeVector::new(&c[..self.dim]).expect("finite entries")
    }

    /// Matrix product `self * rhs` (rhs acts first).
    pub fn compose(&self, rhs: &LorentzMatrix) -> LorentzMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut m = [[0.0; 4]; 4];
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut acc = 0.0;
                for k in 0..self.dim {
                    acc += self.m[i][k] * rhs.m[k][j];
                }
                m[i][j] = acc;
            }
        }
        LorentzMatrix { dim: self.dim, m }
    }

    pub fn transpose(&self) -> LorentzMatrix {
        let mut m = [[0.0; 4]; 4];
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[i][j] = self.m[j][i];
            }
        }
        LorentzMatrix { dim: self.dim, m }
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.m[i][i]).sum()
    }

    pub fn det(&self) -> f64 {
        let m = &self.m;
        match self.dim {
            2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
            3 => {
                m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                    - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
            }
            4 => {
                let minor = |r: [usize; 3], c: [usize; 3]| {
                    m[r[0]][c[0]] * (m[r[1]][c[1]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[1]])
                        - m[r[0]][c[1]]
                            * (m[r[1]][c[0]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[0]])
                        + m[r[0]][c[2]]
                            * (m[r[1]][c[0]] * m[r[2]][c[1]] - m[r[1]][c[1]] * m[r[2]][c[0]])
                };
                m[0][0] * minor([1, 2, 3], [1, 2, 3]) - m[0][1] * minor([1, 2, 3], [0, 2, 3])
                    + m[0][2] * minor([1, 2, 3], [0, 1, 3])
                    - m[0][3] * minor([1, 2, 3], [0, 1, 2])
            }
            _ => unreachable!(),
        }
    }

    /// Largest entry of `L^T eta L - eta`; zero for an exact isometry.
    pub fn metric_residual(&self) -> f64 {
        let sign = |mu: usize| if mu == 0 { -1.0 } else { 1.0 };
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut acc = 0.0;
                for k in 0..self.dim {
                    acc += self.m[k][i] * sign(k) * self.m[k][j];
                }
                let eta = if i == j { sign(i) } else { 0.0 };
                worst = worst.max((acc - eta).abs());
            }
        }
        worst
    }

    pub fn is_lorentz(&self, tol: f64) -> bool {
        self.metric_residual() <= tol
    }

    pub fn is_proper(&self, tol: f64) -> bool {
        (self.det() - 1.0).abs() <= tol
    }

    pub fn is_orthochronous(&self) -> bool {
        self.m[0][0] >= 1.0 - CLAMP_TOL
    }

    /// Largest entrywise difference against `other`.
    pub fn max_abs_diff(&self, other: &LorentzMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in 0..self.dim {
                worst = worst.max((self.m[i][j] - other.m[i][j]).abs());
            }
        }
        worst
    }
}

/// Orthogonal reflection of `y` through the hyperplane orthogonal to `x`:
/// `y - 2 (eta(x,y) / eta(x,x)) x`. Fixes `x`-orthogonal vectors, negates `x`,
/// preserves the metric, squares to the identity.
pub fn reflect(x: &SpacetimeVector, y: &SpacetimeVector) -> Result<SpacetimeVector> {
    match x.causal_class(DEFAULT_TOL) {
        CausalClass::Null | CausalClass::Zero => Err(Error::NullOrZero {
            norm_sq: x.norm_sq(),
            context: "reflect",
        }),
        _ => Ok(*y - *x * (2.0 * x.inner(y) / x.norm_sq())),
    }
}

fn check_boost_pair(u: &SpacetimeVector, v: &SpacetimeVector) -> Result<()> {
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
    // automatic for consistently oriented unit timelike vectors, flagged anyway
    let s = *u + *v;
    if s.norm_sq().abs() <= DEFAULT_TOL {
        return Err(Error::NullOrZero {
            norm_sq: s.norm_sq(),
            context: "boost (u + v)",
        });
    }
    Ok(())
}

/// Versor `(u + v) u` whose conjugation is the boost mapping `u` to `v` and
/// fixing the orthogonal complement of their plane.
pub fn boost_versor(u: &SpacetimeVector, v: &SpacetimeVector) -> Result<Multivector> {
    check_boost_pair(u, v)?;
    Ok(Multivector::from_vector(&(*u + *v)).gp(&Multivector::from_vector(u)))
}

/// The same boost as an explicit matrix, built column by column from the
/// two-reflection factorization (mirror through `u`, then through `u + v`).
/// Never touches the Clifford algebra.
pub fn boost_matrix(u: &SpacetimeVector, v: &SpacetimeVector) -> Result<LorentzMatrix> {
    check_boost_pair(u, v)?;
    let s = *u + *v;
    let dim = u.dim();
    let mut columns = Vec::with_capacity(dim);
    for nu in 0..dim {
        let basis = SpacetimeVector::basis(dim, nu);
        columns.push(reflect(&s, &reflect(u, &basis)?)?);
    }
    Ok(LorentzMatrix::from_columns(&columns))
}

/// Rapidity-form boost block `[[cosh a, sinh a], [sinh a, cosh a]]`.
pub fn boost_matrix_2d(alpha: f64) -> LorentzMatrix {
    let (ch, sh) = (alpha.cosh(), alpha.sinh());
    let mut m = [[0.0; 4]; 4];
    m[0][0] = ch;
    m[0][1] = sh;
    m[1][0] = sh;
    m[1][1] = ch;
    LorentzMatrix { dim: 2, m }
}

/// Rotation block `[[cos t, -sin t], [sin t, cos t]]` of an oriented
/// Euclidean plane.
pub fn rotation_matrix_2d(theta: f64) -> Mat2 {
    let (s, c) = theta.sin_cos();
    [[c, -s], [s, c]]
}

/// Rotation data recovered from a versor in the form `alpha + beta [p, q]`.
#[derive(Clone, Debug, PartialEq)]
pub struct RotationReport {
    /// Half-angle parameter in (0, pi); the induced conjugation rotates the
    /// oriented plane by `-2 theta`.
    pub theta: f64,
    /// Positively oriented orthonormal basis of Span{p, q}.
    pub plane_basis: (SpacetimeVector, SpacetimeVector),
    /// Overall scale: the versor equals `sigma (cos theta + sin theta e1' e2')`.
    pub sigma: f64,
}

/// Orthonormalizes a spanning pair of a spacelike plane, preserving
/// orientation: the transition matrix from the result to `(p, q)` has
/// positive determinant.
pub fn orthonormal_plane(
    p: &SpacetimeVector,
    q: &SpacetimeVector,
) -> Result<(SpacetimeVector, SpacetimeVector)> {
    let pp = p.norm_sq();
    let gram = gram_det(p, q);
    if pp <= 0.0 || gram <= 1e-14 * pp.abs() * q.norm_sq().abs() {
        return Err(Error::DegeneratePlane {
            detail: format!("gram determinant {gram:.3e} (eta(p,p) = {pp:.3e})"),
        });
    }
    let e1 = *p * (1.0 / pp.sqrt());
    let w = *q - e1 * q.inner(&e1);
    let e2 = w * (1.0 / w.norm_sq().sqrt());
    Ok((e1, e2))
}

/// Extracts the rotation angle and plane from `alpha + beta [p, q]`.
///
/// The branch is fixed by `theta` in (0, pi): `cot theta` comes out of the
/// coefficients and the Gram determinant of the plane, and the sign of
/// `sigma` is chosen so the scalar part satisfies `alpha = sigma cos theta`.
pub fn angle_from_versor(vf: &VersorForm) -> Result<RotationReport> {
    if vf.beta == 0.0 {
        return Err(Error::ZeroBeta);
    }
    let plane_basis = orthonormal_plane(&vf.p, &vf.q)?;
    let gram = gram_det(&vf.p, &vf.q);
    let root = gram.sqrt();
    let cot = vf.alpha / (2.0 * vf.beta * root);
    let theta = 1.0f64.atan2(cot);
    let sigma = (vf.alpha.powi(2) + 4.0 * vf.beta.powi(2) * gram).sqrt() * vf.beta.signum();
    Ok(RotationReport {
        theta,
        plane_basis,
        sigma,
    })
}

/// Matrix of the conjugation induced by a versor: column `nu` is the
/// conjugate of the basis vector `e_nu`.
pub fn versor_to_matrix(r: &Multivector) -> Result<LorentzMatrix> {
    let dim = r.dim();
    let mut columns = Vec::with_capacity(dim);
    for nu in 0..dim {
        columns.push(sandwich_vector(r, &SpacetimeVector::basis(dim, nu))?);
    }
    Ok(LorentzMatrix::from_columns(&columns))
}

/// Orthonormal bases of the span of `seed` and of its orthogonal complement,
/// via Gram-Schmidt over the frame basis. Near-dependent seed vectors are
/// dropped. Basis vectors are unit (`|eta(f,f)| = 1`).
pub fn orthonormal_span_and_complement(
    dim: usize,
    seed: &[SpacetimeVector],
) -> (Vec<SpacetimeVector>, Vec<SpacetimeVector>) {
    let mut span: Vec<SpacetimeVector> = Vec::new();
    let mut complement: Vec<SpacetimeVector> = Vec::new();
    let mut accepted: Vec<SpacetimeVector> = Vec::new();

    let absorb =
        |x: &SpacetimeVector, accepted: &mut Vec<SpacetimeVector>| -> Option<SpacetimeVector> {
            let mut w = *x;
            for f in accepted.iter() {
                // f is unit: eta(f,f) = +-1, so dividing by it is a sign flip
                w = w - *f * (w.inner(f) / f.norm_sq());
            }
            if w.euclid_norm() <= 1e-8 * x.euclid_norm().max(1.0) {
                return None;
            }
            let unit = w * (1.0 / w.norm_sq().abs().sqrt());
            accepted.push(unit);
            Some(unit)
        };

    for x in seed {
        assert_eq!(x.dim(), dim, "dimension mismatch");
        if let Some(f) = absorb(x, &mut accepted) {
            span.push(f);
        }
    }
    for mu in 0..dim {
        if let Some(f) = absorb(&SpacetimeVector::basis(dim, mu), &mut accepted) {
            complement.push(f);
        }
    }
    (span, complement)
}

/// Cosine of the rotation angle of a matrix known to fix the unit timelike
/// vector `u`, read off the trace of the restriction to the spacelike
/// complement of `u`.
pub fn rotation_cos_about(m: &LorentzMatrix, u: &SpacetimeVector) -> Result<f64> {
    let moved = m.apply(u) - *u;
    if moved.euclid_norm() > 1e-8 * u.euclid_norm() {
        return Err(Error::Internal {
            detail: format!(
                "matrix moves its supposed rotation axis by {:.3e}",
                moved.euclid_norm()
            ),
        });
    }
    let (_, spatial) = orthonormal_span_and_complement(u.dim(), &[*u]);
    let trace: f64 = spatial.iter().map(|f| m.apply(f).inner(f)).sum();
    // n - 1 spacelike directions carry eigenvalues {1, ..., 1, exp(+-i psi)}
    let cos = (trace - (u.dim() as f64 - 3.0)) / 2.0;
    if cos.abs() > 1.0 + CLAMP_TOL {
        return Err(Error::Internal {
            detail: format!("trace extraction produced cos = {cos}"),
        });
    }
    Ok(cos.clamp(-1.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::four_velocity;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn e(mu: usize) -> SpacetimeVector {
        SpacetimeVector::basis(4, mu)
    }

    #[test]
    fn reflect_fixed_points_and_mirror() {
        assert_eq!(reflect(&e(1), &e(1)).unwrap(), -e(1));
        assert_eq!(reflect(&e(1), &e(0)).unwrap(), e(0));

        let x = SpacetimeVector::from([0.0, 1.0, 1.0, 0.0]);
        let y = SpacetimeVector::from([0.0, 1.0, 0.0, 0.0]);
        assert_eq!(
            reflect(&x, &y).unwrap(),
            SpacetimeVector::from([0.0, 0.0, -1.0, 0.0])
        );

        let null = SpacetimeVector::from([1.0, 1.0, 0.0, 0.0]);
        assert!(reflect(&null, &y).is_err());
    }

    #[test]
    fn boost_versor_trivial_and_mapping() {
        let u = SpacetimeVector::rest(4);
        let r = boost_versor(&u, &u).unwrap();
        assert_eq!(r, Multivector::scalar(4, -2.0));
        assert_eq!(sandwich_vector(&r, &e(2)).unwrap(), e(2));

        let v = four_velocity(&[0.6, 0.0, 0.0]).unwrap();
        let b = boost_versor(&u, &v).unwrap();
        let mapped = sandwich_vector(&b, &u).unwrap();
        assert!((mapped - v).euclid_norm() <= 1e-14);
        // orthogonal complement of the boost plane is fixed
        assert!((sandwich_vector(&b, &e(2)).unwrap() - e(2)).euclid_norm() <= 1e-14);
    }

    #[test]
    fn boost_matrix_block_values() {
        let u = SpacetimeVector::rest(4);
        assert_eq!(boost_matrix(&u, &u).unwrap(), LorentzMatrix::identity(4));

        let v = four_velocity(&[0.6, 0.0, 0.0]).unwrap();
        let b = boost_matrix(&u, &v).unwrap();
        assert_abs_diff_eq!(b.entry(0, 0), 1.25, epsilon = 1e-14);
        assert_abs_diff_eq!(b.entry(0, 1), 0.75, epsilon = 1e-14);
        assert_abs_diff_eq!(b.entry(1, 0), 0.75, epsilon = 1e-14);
        assert_abs_diff_eq!(b.entry(1, 1), 1.25, epsilon = 1e-14);
        assert_abs_diff_eq!(b.entry(2, 2), 1.0, epsilon = 0.0);
        assert_abs_diff_eq!(b.entry(3, 3), 1.0, epsilon = 0.0);

        // column 0 is the image of u
        assert!((b.column(0) - v).euclid_norm() <= 1e-14);

        assert!(b.is_lorentz(1e-10));
        assert!(b.is_proper(1e-9));
        assert!(b.is_orthochronous());

        let past = -u;
        assert!(boost_matrix(&u, &past).is_err());
    }

    #[test]
    fn rapidity_block() {
        assert_eq!(boost_matrix_2d(0.0), LorentzMatrix::identity(2));

        let b = boost_matrix_2d(2.0f64.ln());
        assert_abs_diff_eq!(b.entry(0, 0), 1.25, epsilon = 1e-15);
        assert_abs_diff_eq!(b.entry(0, 1), 0.75, epsilon = 1e-15);

        let alpha = 0.83;
        assert_abs_diff_eq!(
            boost_matrix_2d(alpha).trace(),
            2.0 * alpha.cosh(),
            epsilon = 1e-14
        );
    }

    #[test]
    fn rotation_block() {
        let id = rotation_matrix_2d(0.0);
        assert_eq!(id, [[1.0, 0.0], [0.0, 1.0]]);

        let q = rotation_matrix_2d(FRAC_PI_2);
        assert_abs_diff_eq!(q[0][0], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(q[0][1], -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(q[1][0], 1.0, epsilon = 1e-15);

        // conjugating by the orientation flip diag(-1, 1) reverses the angle
        let theta = 0.735;
        let r = rotation_matrix_2d(theta);
        let flipped = [[r[0][0], -r[0][1]], [-r[1][0], r[1][1]]];
        let reversed = rotation_matrix_2d(-theta);
        for i in 0..2 {
            for j in 0..2 {
                assert_abs_diff_eq!(flipped[i][j], reversed[i][j], epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn angle_extraction_branches() {
        let report = angle_from_versor(&VersorForm {
            alpha: 0.0,
            beta: 0.7,
            p: e(1),
            q: e(2),
        })
        .unwrap();
        assert_abs_diff_eq!(report.theta, FRAC_PI_2, epsilon = 1e-15);

        let report = angle_from_versor(&VersorForm {
            alpha: 1.0,
            beta: 0.5,
            p: e(1),
            q: e(2),
        })
        .unwrap();
        assert_abs_diff_eq!(report.theta, FRAC_PI_4, epsilon = 1e-15);
        assert_abs_diff_eq!(report.sigma, 2.0f64.sqrt(), epsilon = 1e-15);

        let report = angle_from_versor(&VersorForm {
            alpha: -1.0,
            beta: 0.5,
            p: e(1),
            q: e(2),
        })
        .unwrap();
        assert_abs_diff_eq!(report.theta, 3.0 * FRAC_PI_4, epsilon = 1e-15);
        // alpha = sigma cos(theta) fixes the sign of sigma
        assert_abs_diff_eq!(report.sigma * report.theta.cos(), -1.0, epsilon = 1e-15);

        assert!(matches!(
            angle_from_versor(&VersorForm {
                alpha: 1.0,
                beta: 0.0,
                p: e(1),
                q: e(2)
            }),
            Err(Error::ZeroBeta)
        ));
        assert!(matches!(
            angle_from_versor(&VersorForm {
                alpha: 1.0,
                beta: 1.0,
                p: e(1),
                q: e(1)
            }),
            Err(Error::DegeneratePlane { .. })
        ));
    }

    #[test]
    fn versor_to_matrix_values() {
        let id = versor_to_matrix(&Multivector::one(4)).unwrap();
        assert_eq!(id, LorentzMatrix::identity(4));

        // e1 e2 conjugates to a half-turn of the e1 e2 plane
        let r = Multivector::from_vector(&e(1)).gp(&Multivector::from_vector(&e(2)));
        let m = versor_to_matrix(&r).unwrap();
        let mut expect = LorentzMatrix::identity(4);
        let flip = LorentzMatrix::from_columns(&[e(0), -e(1), -e(2), e(3)]);
        expect = expect.compose(&flip);
        assert!(m.max_abs_diff(&expect) <= 1e-15);

        let u = SpacetimeVector::rest(4);
        let v = four_velocity(&[0.6, 0.0, 0.0]).unwrap();
        let from_versor = versor_to_matrix(&boost_versor(&u, &v).unwrap()).unwrap();
        let from_reflections = boost_matrix(&u, &v).unwrap();
        assert!(from_versor.max_abs_diff(&from_reflections) <= 1e-12);
    }

    #[test]
    fn trace_angle_extraction() {
        let u = SpacetimeVector::rest(4);
        let theta = 0.42f64;
        // rotation by theta in the e1 e2 plane, written directly
        let cols = [
            e(0),
            e(1) * theta.cos() + e(2) * theta.sin(),
            e(1) * -theta.sin() + e(2) * theta.cos(),
            e(3),
        ];
        let m = LorentzMatrix::from_columns(&cols);
        assert_abs_diff_eq!(
            rotation_cos_about(&m, &u).unwrap(),
            theta.cos(),
            epsilon = 1e-14
        );

        // a boost does not fix u and is rejected
        let v = four_velocity(&[0.3, 0.0, 0.0]).unwrap();
        let b = boost_matrix(&u, &v).unwrap();
        assert!(rotation_cos_about(&b, &u).is_err());
    }

    #[test]
    fn span_complement_split() {
        let u = SpacetimeVector::rest(4);
        let (span, complement) = orthonormal_span_and_complement(4, &[u]);
        assert_eq!(span.len(), 1);
        assert_eq!(complement.len(), 3);
        for f in &complement {
            assert_abs_diff_eq!(f.norm_sq(), 1.0, epsilon = 1e-14);
            assert_abs_diff_eq!(f.inner(&u), 0.0, epsilon = 1e-14);
        }

        // dependent seeds collapse
        let (span, complement) = orthonormal_span_and_complement(4, &[e(1), e(1) * 2.0, e(2)]);
        assert_eq!(span.len(), 2);
        assert_eq!(complement.len(), 2);
    }

    #[test]
    fn half_turn_versor_angle() {
        // theta = pi/2 in the report corresponds to a rotation by -pi
        let vf = VersorForm {
            alpha: 0.0,
            beta: 0.5,
            p: e(1),
            q: e(2),
        };
        let report = angle_from_versor(&vf).unwrap();
        let m = versor_to_matrix(&vf.to_multivector()).unwrap();
        let cos = rotation_cos_about(&m, &SpacetimeVector::rest(4)).unwrap();
        assert_abs_diff_eq!(cos, (2.0 * report.theta).cos(), epsilon = 1e-12);
        assert_abs_diff_eq!(cos, (PI).cos(), epsilon = 1e-12);
    }
}
