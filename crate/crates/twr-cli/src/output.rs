//! Serializable report shapes. Field order is the JSON key order, which is
//! part of the output contract: callers diff bytes across runs.

use serde::Serialize;

#[derive(Serialize)]
pub struct AngleOutput {
    pub cos_psi: f64,
    pub psi_rad: f64,
    pub psi_deg: f64,
    pub gamma_uv: f64,
    pub gamma_uw: f64,
    pub gamma_vw: f64,
    pub sigma_sq: f64,
    pub plane: PlaneOutput,
    pub degenerate: bool,
}

#[derive(Serialize)]
pub struct PlaneOutput {
    pub v_perp: Vec<f64>,
    pub w_perp: Vec<f64>,
}

#[derive(Serialize)]
pub struct VerifyOutput {
    pub seed: u64,
    pub cases: u64,
    pub all_pass: bool,
    pub suites: Vec<SuiteOutput>,
}

#[derive(Serialize)]
pub struct SuiteOutput {
    pub name: String,
    pub cases: u64,
    pub max_err: f64,
    pub tol: f64,
    pub pass: bool,
    pub first_failure: Option<String>,
}

#[derive(Serialize)]
pub struct GammaOutput {
    pub relations: Vec<RelationOutput>,
    pub rank: usize,
    pub rank_ok: bool,
    pub all_ok: bool,
}

#[derive(Serialize)]
pub struct RelationOutput {
    pub mu: usize,
    pub nu: usize,
    pub expected: i64,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct BoostOutput {
    pub dim: usize,
    pub speed: f64,
    pub gamma: f64,
    pub rapidity: f64,
    pub matrix: Vec<Vec<f64>>,
}
