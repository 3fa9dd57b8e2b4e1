//! Acceptance suite: one test per release criterion, each printing a
//! pass/fail line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Every tolerance is pinned here; the randomized criteria run on fixed
//! seeds through the sweep module, so a failure line carries the exact
//! inputs needed to reproduce it.

use std::hint::black_box;
use std::time::{Duration, Instant};

use twr_core::gamma_rep;
use twr_core::lorentz::rotation_cos_about;
use twr_core::minkowski::{four_velocity, SpacetimeVector, DEFAULT_TOL};
use twr_core::sweep::{self, SuiteReport};
use twr_core::thomas_wigner::{macfarlane_cos_psi, tw_angle, tw_oracle};

const SEED: u64 = 0xACCE;

fn report_suite(criterion: &str, r: &SuiteReport, elapsed: Option<Duration>) {
    let status = if r.pass { "PASS" } else { "FAIL" };
    let time = elapsed.map(|d| format!(", {:.2?}", d)).unwrap_or_default();
    println!(
        "[{status}] {criterion}: {} cases, max err {:.3e} vs tol {:.1e}{time}",
        r.cases, r.max_err, r.tol
    );
    assert!(
        r.pass,
        "{criterion} failed ({}): {:?}",
        r.name, r.first_failure
    );
}

fn report_check(criterion: &str, pass: bool, detail: String) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("[{status}] {criterion}: {detail}");
    assert!(pass, "{criterion} failed: {detail}");
}

#[test]
fn criterion_01_formula_vs_matrix_oracle() {
    let t0 = Instant::now();
    let r = sweep::oracle_equivalence(SEED, 10_000);
    let elapsed = t0.elapsed();
    report_suite(
        "criterion 1 (closed form vs composed boost matrices)",
        &r,
        Some(elapsed),
    );
    assert!(elapsed < Duration::from_secs(5), "sweep took {elapsed:.2?}");
}

#[test]
fn criterion_02_versor_path_vs_matrix_path() {
    let t0 = Instant::now();
    let r = sweep::versor_matrix_agreement(SEED, 1_000);
    let elapsed = t0.elapsed();
    report_suite(
        "criterion 2 (versor conjugation vs matrix composition)",
        &r,
        Some(elapsed),
    );
    assert!(elapsed < Duration::from_secs(5), "sweep took {elapsed:.2?}");
}

#[test]
fn criterion_03_versor_norm_identity() {
    let r = sweep::sigma_sq_identity(SEED, 1_000);
    report_suite(
        "criterion 3 (scalar norm = 8 product of (1 + gamma))",
        &r,
        None,
    );
}

#[test]
fn criterion_04_reflection_laws() {
    let r = sweep::reflection_suite(SEED, 1_000);
    report_suite(
        "criterion 4 (reflection involution/isometry/equivariance/scale)",
        &r,
        None,
    );
}

#[test]
fn criterion_05_reflection_factorizations() {
    let r = sweep::versor_identities(SEED, 1_000);
    report_suite(
        "criterion 5 (mirror swap and squared half-turn laws)",
        &r,
        None,
    );
}

#[test]
fn criterion_06_doubling_laws() {
    let r = sweep::doubling_laws(SEED, 1_000);
    report_suite("criterion 6a (hyperbolic and circular doubling)", &r, None);
    let r = sweep::rapidity_additivity(SEED, 100);
    report_suite("criterion 6b (rapidity additivity)", &r, None);
}

#[test]
fn criterion_07_degenerate_limits() {
    let r = sweep::degenerate_limits(SEED, 1_000);
    report_suite("criterion 7 (coplanar boosts give no rotation)", &r, None);

    // spot checks on top of the sweep
    let same = tw_angle(&[0.7, -0.2, 0.1], &[0.7, -0.2, 0.1], DEFAULT_TOL).unwrap();
    report_check(
        "criterion 7 (identical velocities, exact)",
        same.cos_psi == 1.0 && same.psi_signed == 0.0 && same.degenerate,
        format!("cos = {}, psi = {}", same.cos_psi, same.psi_signed),
    );
    let collinear = tw_angle(&[0.3, 0.0, 0.0], &[0.6, 0.0, 0.0], DEFAULT_TOL).unwrap();
    report_check(
        "criterion 7 (collinear velocities)",
        (collinear.cos_psi - 1.0).abs() <= 1e-10 && collinear.degenerate,
        format!("cos = {}", collinear.cos_psi),
    );
}

#[test]
fn criterion_08_matrix_representation() {
    let checks = gamma_rep::check_relations();
    let exact = checks.len() == 9 && checks.iter().all(|c| c.ok);
    report_check(
        "criterion 8 (nine anticommutation relations, integer exact)",
        exact,
        format!("{}/9 exact", checks.iter().filter(|c| c.ok).count()),
    );

    let rank = gamma_rep::blade_image_rank();
    report_check(
        "criterion 8 (blade image rank)",
        rank == 8,
        format!("rank = {rank}"),
    );

    let r = sweep::gamma_relations(SEED, 1_000);
    report_suite("criterion 8 (representation homomorphism)", &r, None);
}

#[test]
fn criterion_09_desk_scale_spot_value() {
    // v = 0.5 x, w = 0.5 y; both routes give cos psi = 4 sqrt(3) / 7
    const EXPECTED_COS: f64 = 0.989_743_318_610_787;
    let v = [0.5, 0.0, 0.0];
    let w = [0.0, 0.5, 0.0];

    let g = 2.0 / 3.0f64.sqrt();
    let formula = macfarlane_cos_psi(g, g, 4.0 / 3.0).unwrap();
    let oracle =
        rotation_cos_about(&tw_oracle(&v, &w).unwrap(), &SpacetimeVector::rest(4)).unwrap();
    let result = tw_angle(&v, &w, DEFAULT_TOL).unwrap();

    let pass = (formula - EXPECTED_COS).abs() <= 1e-9
        && (oracle - EXPECTED_COS).abs() <= 1e-9
        && (result.cos_psi - EXPECTED_COS).abs() <= 1e-9;
    report_check(
        "criterion 9 (pinned spot value, formula and oracle)",
        pass,
        format!(
            "formula = {formula:.15}, oracle = {oracle:.15}, expected = {EXPECTED_COS:.15}, |psi| = {:.6} deg",
            result.psi_signed.abs().to_degrees()
        ),
    );
}

#[test]
fn criterion_10_scalar_formula_throughput() {
    // warm up and sanity-check one value
    assert!(macfarlane_cos_psi(1.25, 1.25, 1.0).unwrap() <= 1.0);

    let n = 1_000_000u64;
    let t0 = Instant::now();
    let mut acc = 0.0f64;
    for i in 0..n {
        let a = 1.0 + (i % 97) as f64 * 0.01;
        let b = 1.0 + (i % 31) as f64 * 0.02;
        let c = a * b; // perpendicular-velocity triple, always realizable
        acc += macfarlane_cos_psi(black_box(a), black_box(b), black_box(c)).unwrap();
    }
    let elapsed = t0.elapsed();
    black_box(acc);
    report_check(
        "criterion 10 (1e6 closed-form evaluations under 1 s)",
        elapsed < Duration::from_secs(1) && acc.is_finite(),
        format!("{n} evaluations in {elapsed:.2?}"),
    );
}

#[test]
fn full_cross_check_of_example_triples() {
    // the four-velocity / gamma bookkeeping used across the criteria
    let v = four_velocity(&[0.6, 0.0, 0.0]).unwrap();
    assert_eq!(v.components(), &[1.25, 0.75, 0.0, 0.0][..]);
    let rest = SpacetimeVector::rest(4);
    assert_eq!(-v.inner(&rest), 1.25);
}
