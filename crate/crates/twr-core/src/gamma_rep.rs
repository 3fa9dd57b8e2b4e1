//! Explicit 4x4 real matrix representation of the three-dimensional
//! mostly-plus Clifford algebra, for exact verification of the abstract
//! product: the anticommutation relations hold in integer arithmetic with no
//! tolerance at all.
//!
//! Only dimension 3 has a representation here; the abstract algebra in
//! [`crate::clifford`] is the source of truth for dimension 4.

use crate::clifford::Multivector;
use crate::error::{Error, Result};

/// 4x4 integer matrix; every generator entry is -1, 0, or 1.
pub type GammaMatrix = [[i64; 4]; 4];

pub const IDENTITY: GammaMatrix = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];

/// Generator `gamma_mu` for `mu` in 0..=2, as Pauli-block matrices:
/// an off-diagonal identity block for the time axis, and `sigma_1`,
/// `sigma_3` diagonal blocks (with flipped sign in the lower block) for the
/// two space axes.
pub fn gamma(mu: usize) -> Result<GammaMatrix> {
    match mu {
        0 => Ok([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]),
        1 => Ok([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]]),
        2 => Ok([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]]),
        _ => Err(Error::BadDimension { dim: mu }),
    }
}

pub fn mat_mul(a: &GammaMatrix, b: &GammaMatrix) -> GammaMatrix {
    let mut out = [[0i64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = 0;
            for k in 0..4 {
                acc += a[i][k] * b[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

fn mat_add(a: &GammaMatrix, b: &GammaMatrix) -> GammaMatrix {
    let mut out = [[0i64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[i][j] + b[i][j];
        }
    }
    out
}

fn mat_scale(a: &GammaMatrix, s: i64) -> GammaMatrix {
    let mut out = [[0i64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = s * a[i][j];
        }
    }
    out
}

/// Outcome of checking one anticommutator pair against `2 eta_{mu nu} I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub mu: usize,
    pub nu: usize,
    /// Expected coefficient of the identity: -2, 0, or 2.
    pub expected: i64,
    pub ok: bool,
}

/// Verifies all nine anticommutation relations in exact integer arithmetic.
pub fn check_relations() -> Vec<RelationCheck> {
    let eta = |mu: usize| if mu == 0 { -1i64 } else { 1i64 };
    let mut out = Vec::with_capacity(9);
    for mu in 0..3 {
        for nu in 0..3 {
            let gm = gamma(mu).expect("index in range");
            let gn = gamma(nu).expect("index in range");
            let anticomm = mat_add(&mat_mul(&gm, &gn), &mat_mul(&gn, &gm));
            let expected = if mu == nu { 2 * eta(mu) } else { 0 };
            let ok = anticomm == mat_scale(&IDENTITY, expected);
            out.push(RelationCheck {
                mu,
                nu,
                expected,
                ok,
            });
        }
    }
    out
}

/// Image of a basis blade: the ordered product of the generators named by
/// the mask bits, identity for the scalar blade.
pub fn blade_matrix(mask: usize) -> GammaMatrix {
    assert!(
        mask < 8,
        "blade mask {mask:#b} out of range for dimension 3"
    );
    let mut acc = IDENTITY;
    for mu in 0..3 {
        if mask & (1 << mu) != 0 {
            acc = mat_mul(&acc, &gamma(mu).expect("index in range"));
        }
    }
    acc
}

/// Linear extension of the blade images to the whole algebra; an algebra
/// homomorphism from dimension-3 multivectors to 4x4 real matrices.
pub fn represent(m: &Multivector) -> Result<[[f64; 4]; 4]> {
    if m.dim() != 3 {
        return Err(Error::BadDimension { dim: m.dim() });
    }
    let mut out = [[0.0f64; 4]; 4];
    for mask in 0..8 {
        let c = m.coeff(mask);
        if c == 0.0 {
            continue;
        }
        let blade = blade_matrix(mask);
        for i in 0..4 {
            for j in 0..4 {
                out[i][j] += c * blade[i][j] as f64;
            }
        }
    }
    Ok(out)
}

/// Rank of the eight blade images viewed as integer 16-vectors, by
/// fraction-free elimination. Equals 8 exactly: the representation is
/// faithful.
pub fn blade_image_rank() -> usize {
    let mut rows: Vec<[i64; 16]> = (0..8)
        .map(|mask| {
            let m = blade_matrix(mask);
            let mut flat = [0i64; 16];
            for i in 0..4 {
                for j in 0..4 {
                    flat[4 * i + j] = m[i][j];
                }
            }
            flat
        })
        .collect();

    let mut rank = 0;
    for col in 0..16 {
        if rank == rows.len() {
            break;
        }
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][col];
        for r in rank + 1..rows.len() {
            let q = rows[r][col];
            if q != 0 {
                for c in 0..16 {
                    rows[r][c] = rows[r][c] * p - rows[rank][c] * q;
                }
            }
        }
        rank += 1;
    }
    rank
}
