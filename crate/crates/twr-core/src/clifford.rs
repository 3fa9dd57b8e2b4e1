//! Dense Clifford algebra over the Lorentzian space.
//!
//! A multivector holds one coefficient per basis blade, indexed by bitmask:
//! bit `mu` set means the basis vector `e_mu` is a factor, with factors in
//! ascending index order. For the supported dimensions the whole element fits
//! in 8 or 16 doubles, so everything is `Copy` and allocation-free.
//!
//! The product sign is computed per blade pair: a transposition count brings
//! the factors into canonical order, and each repeated index contracts with
//! its metric sign (-1 on the time axis, +1 on space). The resulting table
//! is verified exactly against an explicit matrix representation in
//! [`crate::gamma_rep`].

use crate::error::{Error, Result};
use crate::minkowski::{CausalClass, SpacetimeVector, DEFAULT_TOL};

/// Sign of the geometric product of basis blades `a * b` in the mostly-plus
/// metric; the product blade itself is `a ^ b`.
fn blade_sign(a: usize, b: usize) -> f64 {
    let mut transpositions = 0u32;
    let mut rem = b;
    while rem != 0 {
        let low = rem & rem.wrapping_neg();
        let pos = low.trailing_zeros();
        // factors of `a` that the incoming basis vector has to move past
        transpositions += (a >> (pos + 1)).count_ones();
        rem &= !low;
    }
    let mut sign = if transpositions % 2 == 0 { 1.0 } else { -1.0 };
    // repeated indices contract with the metric; only the time axis flips sign
    if a & b & 1 != 0 {
        sign = -sign;
    }
    sign
}

/// Dense element of Cl(eta) with `2^dim` blade coefficients.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Multivector {
    dim: usize,
    c: [f64; 16],
}

impl Multivector {
    pub fn zero(dim: usize) -> Self {
        assert!(dim == 3 || dim == 4, "unsupported dimension {dim}");
        Self { dim, c: [0.0; 16] }
    }

    /// The scalar `value * 1`.
    pub fn scalar(dim: usize, value: f64) -> Self {
        let mut m = Self::zero(dim);
        m.c[0] = value;
        m
    }

    /// The algebra unit.
    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, 1.0)
    }

    /// Grade-1 element with the vector's frame components.
    pub fn from_vector(u: &SpacetimeVector) -> Self {
        let mut m = Self::zero(u.dim());
        for mu in 0..u.dim() {
            m.c[1 << mu] = u[mu];
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of blade coefficients, `2^dim`.
    pub fn blades(&self) -> usize {
        1 << self.dim
    }

    pub fn coeff(&self, mask: usize) -> f64 {
        assert!(mask < self.blades(), "blade mask {mask:#b} out of range");
        self.c[mask]
    }

    pub fn set_coeff(&mut self, mask: usize, value: f64) {
        assert!(mask < self.blades(), "blade mask {mask:#b} out of range");
        self.c[mask] = value;
    }

    pub fn scalar_part(&self) -> f64 {
        self.c[0]
    }

    /// Projection onto grade `k` (coefficients whose mask popcount is `k`).
    pub fn grade(&self, k: u32) -> Multivector {
        let mut out = Self::zero(self.dim);
        for mask in 0..self.blades() {
            if mask.count_ones() == k {
                out.c[mask] = self.c[mask];
            }
        }
        out
    }

    /// The grade-1 coefficients as a vector; higher grades are ignored.
    pub fn vector_part(&self) -> SpacetimeVector {
        let mut c = [0.0; 4];
        for (mu, slot) in c.iter_mut().enumerate().take(self.dim) {
            *slot = self.c[1 << mu];
        }
        SpacetimeVector::new(&c[..self.dim]).expect("finite coefficients")
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> f64 {
        self.c[..self.blades()]
            .iter()
            .fold(0.0f64, |m, x| m.max(x.abs()))
    }

    /// Largest absolute coefficient outside grade `k`.
    pub fn max_abs_outside_grade(&self, k: u32) -> f64 {
        (0..self.blades())
            .filter(|mask| mask.count_ones() != k)
            .fold(0.0f64, |m, mask| m.max(self.c[mask].abs()))
    }

    /// Largest absolute coefficient difference against `other`.
    pub fn max_abs_diff(&self, other: &Multivector) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        (0..self.blades()).fold(0.0f64, |m, mask| {
            m.max((self.c[mask] - other.c[mask]).abs())
        })
    }

    /// Geometric product. Associative, bilinear; on embedded vectors it
    /// satisfies `u v + v u = 2 eta(u, v)`.
    pub fn gp(&self, other: &Multivector) -> Multivector {
        assert_eq!(
            self.dim, other.dim,
            "dimension mismatch: {} vs {}",
            self.dim, other.dim
        );
        let n = self.blades();
        let mut out = Self::zero(self.dim);
        for a in 0..n {
            let ca = self.c[a];
            if ca == 0.0 {
                continue;
            }
            for b in 0..n {
                let cb = other.c[b];
                if cb == 0.0 {
                    continue;
                }
                out.c[a ^ b] += blade_sign(a, b) * ca * cb;
            }
        }
        out
    }

    /// Reversal: each grade-k blade picks up the sign `(-1)^(k(k-1)/2)` of
    /// writing its factors in the opposite order. Anti-homomorphism of the
    /// geometric product.
    pub fn reverse(&self) -> Multivector {
        let mut out = *self;
        for mask in 0..self.blades() {
            let k = mask.count_ones();
            if (k * k.wrapping_sub(1) / 2) % 2 == 1 {
                out.c[mask] = -out.c[mask];
            }
        }
        out
    }
}

impl std::ops::Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = self;
        for mask in 0..self.blades() {
            out.c[mask] += rhs.c[mask];
        }
        out
    }
}

impl std::ops::Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = self;
        for mask in 0..self.blades() {
            out.c[mask] -= rhs.c[mask];
        }
        out
    }
}

impl std::ops::Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, s: f64) -> Multivector {
        let mut out = self;
        for mask in 0..self.blades() {
            out.c[mask] *= s;
        }
        out
    }
}

impl std::ops::Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self * -1.0
    }
}

/// Embedding of the vector space into the algebra.
pub fn embed(u: &SpacetimeVector) -> Multivector {
    Multivector::from_vector(u)
}

/// `a b - b a`.
pub fn commutator(a: &Multivector, b: &Multivector) -> Multivector {
    a.gp(b) - b.gp(a)
}

/// `a b + b a`.
pub fn anticommutator(a: &Multivector, b: &Multivector) -> Multivector {
    a.gp(b) + b.gp(a)
}

/// Inverse of an embedded vector, `u / eta(u, u)`.
pub fn vector_inverse(u: &SpacetimeVector) -> Result<Multivector> {
    match u.causal_class(DEFAULT_TOL) {
        CausalClass::Null | CausalClass::Zero => Err(Error::NullOrZero {
            norm_sq: u.norm_sq(),
            context: "vector_inverse",
        }),
        _ => Ok(embed(u) * (1.0 / u.norm_sq())),
    }
}

/// Inverse of a versor via `reverse(r) / scalar(r * reverse(r))`.
///
/// Fails when `r * reverse(r)` is not a nonzero scalar on the scale of `r`,
/// which is the operational test for "r is a versor" here.
pub fn versor_inverse(r: &Multivector) -> Result<Multivector> {
    let norm = r.gp(&r.reverse());
    let s = norm.scalar_part();
    let residue = norm.max_abs_outside_grade(0);
    if residue > DEFAULT_TOL * s.abs().max(1.0) {
        return Err(Error::NotVersor {
            detail: format!("r * reverse(r) has non-scalar residue {residue:.3e}"),
        });
    }
    let scale = r.max_abs();
    if s.abs() <= DEFAULT_TOL * scale * scale {
        return Err(Error::NotVersor {
            detail: format!("r * reverse(r) = {s:.3e} is zero within tolerance"),
        });
    }
    Ok(r.reverse() * (1.0 / s))
}

/// Conjugation `r x r^{-1}` of a vector by a versor, truncated to grade 1.
///
/// The conjugation of a vector by a versor is again a vector; coefficients
/// left outside grade 1 beyond round-off mean `r` was not a versor, and are
/// reported instead of silently dropped.
pub fn sandwich_vector(r: &Multivector, x: &SpacetimeVector) -> Result<SpacetimeVector> {
    let inv = versor_inverse(r)?;
    let full = r.gp(&embed(x)).gp(&inv);
    let residue = full.max_abs_outside_grade(1);
    if residue > DEFAULT_TOL * full.max_abs().max(1.0) {
        return Err(Error::Internal {
            detail: format!("conjugation left grade residue {residue:.3e} outside grade 1"),
        });
    }
    Ok(full.vector_part())
}

/// Rotation versor in the two-parameter form `alpha + beta [p, q]`.
///
/// `p` and `q` must span a spacelike plane and `beta` must be nonzero for the
/// form to describe a rotation; both are validated where the angle is
/// extracted, not here.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VersorForm {
    pub alpha: f64,
    pub beta: f64,
    pub p: SpacetimeVector,
    pub q: SpacetimeVector,
}

impl VersorForm {
    /// Expands the form into a dense multivector.
    pub fn to_multivector(&self) -> Multivector {
        Multivector::scalar(self.p.dim(), self.alpha)
            + commutator(&embed(&self.p), &embed(&self.q)) * self.beta
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_3;

    fn e(mu: usize) -> SpacetimeVector {
        SpacetimeVector::basis(4, mu)
    }

    #[test]
    fn embed_places_coefficients_by_bitmask() {
        let m = embed(&e(0));
        assert_eq!(m.coeff(0b0001), 1.0);
        assert_eq!(m.max_abs_outside_grade(1), 0.0);

        assert_eq!(embed(&SpacetimeVector::zero(4)), Multivector::zero(4));

        let m = embed(&SpacetimeVector::from([0.0, 2.0, 3.0, 0.0]));
        assert_eq!(m.coeff(0b0010), 2.0);
        assert_eq!(m.coeff(0b0100), 3.0);
    }

    #[test]
    fn gp_satisfies_metric_relations() {
        let t = embed(&e(0));
        assert_eq!(t.gp(&t), Multivector::scalar(4, -1.0));

        let a = embed(&e(1));
        let b = embed(&e(2));
        assert_eq!(a.gp(&b) + b.gp(&a), Multivector::zero(4));

        // a null vector squares to zero
        let n = embed(&(e(0) + e(1)));
        assert_eq!(n.gp(&n), Multivector::zero(4));
    }

    #[test]
    fn reverse_flips_blades() {
        let s = Multivector::scalar(4, 2.5);
        assert_eq!(s.reverse(), s);

        let v = embed(&SpacetimeVector::from([1.0, -2.0, 0.5, 0.0]));
        assert_eq!(v.reverse(), v);

        let b = embed(&e(1)).gp(&embed(&e(2)));
        assert_eq!(b.reverse(), -b);
    }

    #[test]
    fn vector_inverse_values() {
        assert_eq!(vector_inverse(&e(1)).unwrap(), embed(&e(1)));
        assert_eq!(vector_inverse(&e(0)).unwrap(), -embed(&e(0)));

        let u = SpacetimeVector::from([0.0, 2.0, 0.0, 0.0]);
        assert_eq!(
            vector_inverse(&u).unwrap(),
            embed(&SpacetimeVector::from([0.0, 0.5, 0.0, 0.0]))
        );
        // inverse actually inverts
        let inv = vector_inverse(&u).unwrap();
        assert_eq!(embed(&u).gp(&inv), Multivector::one(4));

        let null = SpacetimeVector::from([1.0, 1.0, 0.0, 0.0]);
        assert!(vector_inverse(&null).is_err());
        assert!(vector_inverse(&SpacetimeVector::zero(4)).is_err());
    }

    #[test]
    fn commutators_detect_alignment() {
        let u = embed(&e(1));
        let v = embed(&(e(1) * 2.0));
        assert_eq!(commutator(&u, &v), Multivector::zero(4));

        let t = embed(&e(0));
        assert_eq!(anticommutator(&t, &u), Multivector::zero(4));

        let a = SpacetimeVector::from([0.3, 1.0, -0.4, 0.2]);
        let b = SpacetimeVector::from([-0.6, 0.1, 0.8, 0.5]);
        let expect = Multivector::scalar(4, 2.0 * a.inner(&b));
        assert!(anticommutator(&embed(&a), &embed(&b)).max_abs_diff(&expect) <= 1e-15);
    }

    #[test]
    fn sandwich_by_vectors() {
        let x = SpacetimeVector::from([0.7, -0.1, 0.3, 0.9]);
        assert_eq!(sandwich_vector(&Multivector::one(4), &x).unwrap(), x);

        let r = embed(&e(1));
        // raw conjugation: e1 e1 e1^{-1} = e1
        assert_eq!(sandwich_vector(&r, &e(1)).unwrap(), e(1));
        // orthogonal vectors anticommute past the mirror factor
        assert_eq!(sandwich_vector(&r, &e(2)).unwrap(), -e(2));
    }

    #[test]
    fn versor_inverse_values() {
        let two = Multivector::scalar(4, 2.0);
        assert_eq!(versor_inverse(&two).unwrap(), Multivector::scalar(4, 0.5));

        assert_eq!(versor_inverse(&embed(&e(1))).unwrap(), embed(&e(1)));

        let theta = FRAC_PI_3;
        let plane = embed(&e(1)).gp(&embed(&e(2)));
        let r = Multivector::scalar(4, theta.cos()) + plane * theta.sin();
        let expect = Multivector::scalar(4, theta.cos()) - plane * theta.sin();
        assert!(versor_inverse(&r).unwrap().max_abs_diff(&expect) <= 1e-15);

        // a vector plus a scalar is not a versor
        let bad = Multivector::one(4) + embed(&e(1));
        assert!(matches!(versor_inverse(&bad), Err(Error::NotVersor { .. })));
        assert!(versor_inverse(&Multivector::zero(4)).is_err());
    }

    #[test]
    fn versor_form_expansion() {
        let vf = VersorForm {
            alpha: 1.0,
            beta: 0.5,
            p: e(1),
            q: e(2),
        };
        // [e1, e2] = 2 e1 e2, so 1 + 0.5 [e1, e2] = 1 + e1 e2
        let mut expect = Multivector::one(4);
        expect.set_coeff(0b0110, 1.0);
        assert_eq!(vf.to_multivector(), expect);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn comp() -> impl Strategy<Value = f64> {
            -1.0..1.0f64
        }

        fn vec4() -> impl Strategy<Value = SpacetimeVector> {
            [comp(), comp(), comp(), comp()].prop_map(SpacetimeVector::from)
        }

        fn multivector() -> impl Strategy<Value = Multivector> {
            proptest::collection::vec(comp(), 16).prop_map(|cs| {
                let mut m = Multivector::zero(4);
                for (mask, &x) in cs.iter().enumerate() {
                    m.set_coeff(mask, x);
                }
                m
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]

            #[test]
            fn gp_associative(a in multivector(), b in multivector(), c in multivector()) {
                let lhs = a.gp(&b).gp(&c);
                let rhs = a.gp(&b.gp(&c));
                let scale = lhs.max_abs().max(rhs.max_abs()).max(1.0);
                prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-10 * scale);
            }

            #[test]
            fn clifford_relation(u in vec4(), v in vec4()) {
                let lhs = anticommutator(&embed(&u), &embed(&v));
                let rhs = Multivector::scalar(4, 2.0 * u.inner(&v));
                prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
            }

            #[test]
            fn reversal_antihomomorphism(a in multivector(), b in multivector()) {
                let lhs = a.gp(&b).reverse();
                let rhs = b.reverse().gp(&a.reverse());
                prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
            }

            #[test]
            fn unit_is_identity(a in multivector()) {
                prop_assert_eq!(a.gp(&Multivector::one(4)), a);
                prop_assert_eq!(Multivector::one(4).gp(&a), a);
            }
        }
    }
}
