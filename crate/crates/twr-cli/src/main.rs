//! `twr`: rotation angles of boost loops, boost matrices, verification
//! sweeps, and the integer matrix-representation check, with optional
//! machine-readable JSON output.
//!
//! Exit codes: 0 success, 1 internal or verification failure, 2 usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod json;
mod output;

use output::{
    AngleOutput, BoostOutput, GammaOutput, PlaneOutput, RelationOutput, SuiteOutput, VerifyOutput,
};

const DEFAULT_TOL: f64 = twr_core::minkowski::DEFAULT_TOL;

#[derive(Parser)]
#[command(
    name = "twr",
    version,
    about = "Lorentz boosts and the rotation they leave behind"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rotation angle of the boost loop rest -> v -> w -> rest
    Angle {
        /// Spatial velocity of the first boost (comma separated, units of c)
        #[arg(long, value_name = "CSV", allow_hyphen_values = true)]
        v: String,
        /// Spatial velocity of the second boost (comma separated, units of c)
        #[arg(long, value_name = "CSV", allow_hyphen_values = true)]
        w: String,
        /// Spacetime dimension (velocities carry dim - 1 components)
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(3..=4))]
        dim: u64,
        /// Emit one JSON object instead of text
        #[arg(long)]
        json: bool,
        /// Degeneracy tolerance; overrides TWR_TOL and the built-in default
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Seeded random verification sweeps over all kernel identities
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cases per suite
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        cases: u64,
        #[arg(long)]
        json: bool,
    },
    /// Exact checks of the 4x4 integer matrix representation
    GammaCheck {
        #[arg(long)]
        json: bool,
    },
    /// Boost matrix and rapidity for one velocity
    Boost {
        /// Spatial velocity (comma separated, units of c; 2 or 3 components)
        #[arg(long, value_name = "CSV", allow_hyphen_values = true)]
        v: String,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<twr_core::Error> for Failure {
    fn from(e: twr_core::Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn parse_csv(text: &str, what: &str) -> Result<Vec<f64>, Failure> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| Failure::Usage(format!("{what}: cannot parse component {part:?}")))
        })
        .collect()
}

/// Tolerance resolution order: --tol flag, then TWR_TOL, then the default.
fn resolve_tol(flag: Option<f64>) -> Result<f64, Failure> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var("TWR_TOL") {
            Ok(text) => text
                .parse::<f64>()
                .map_err(|_| Failure::Usage(format!("TWR_TOL: cannot parse {text:?}")))?,
            Err(_) => DEFAULT_TOL,
        },
    };
    if tol > 0.0 && tol.is_finite() {
        Ok(tol)
    } else {
        Err(Failure::Usage(format!(
            "tolerance must be positive, got {tol}"
        )))
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Angle {
            v,
            w,
            dim,
            json,
            tol,
        } => cmd_angle(&v, &w, dim as usize, json, tol),
        Command::Verify { seed, cases, json } => cmd_verify(seed, cases, json),
        Command::GammaCheck { json } => cmd_gamma_check(json),
        Command::Boost { v, json } => cmd_boost(&v, json),
    }
}

fn cmd_angle(
    v_text: &str,
    w_text: &str,
    dim: usize,
    json: bool,
    tol_flag: Option<f64>,
) -> Result<ExitCode, Failure> {
    let tol = resolve_tol(tol_flag)?;
    let v = parse_csv(v_text, "--v")?;
    let w = parse_csv(w_text, "--w")?;
    for (name, speed) in [("--v", &v), ("--w", &w)] {
        if speed.len() != dim - 1 {
            return Err(Failure::Usage(format!(
                "{name}: expected {} components for dimension {dim}, got {}",
                dim - 1,
                speed.len()
            )));
        }
    }

    let result = twr_core::thomas_wigner::tw_angle(&v, &w, tol)?;
    let out = AngleOutput {
        cos_psi: result.cos_psi,
        psi_rad: result.psi_signed,
        psi_deg: result.psi_signed.to_degrees(),
        gamma_uv: result.gammas.uv,
        gamma_uw: result.gammas.uw,
        gamma_vw: result.gammas.vw,
        sigma_sq: result.sigma_sq,
        plane: PlaneOutput {
            v_perp: result.plane.0.components().to_vec(),
            w_perp: result.plane.1.components().to_vec(),
        },
        degenerate: result.degenerate,
    };

    if json {
        println!("{}", json::to_string(&out));
    } else {
        println!("cos psi    = {}", out.cos_psi);
        println!("psi        = {} rad ({} deg)", out.psi_rad, out.psi_deg);
        println!("gamma_uv   = {}", out.gamma_uv);
        println!("gamma_uw   = {}", out.gamma_uw);
        println!("gamma_vw   = {}", out.gamma_vw);
        println!("sigma^2    = {}", out.sigma_sq);
        println!("v_perp     = {:?}", out.plane.v_perp);
        println!("w_perp     = {:?}", out.plane.w_perp);
        println!("degenerate = {}", out.degenerate);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(seed: u64, cases: u64, json: bool) -> Result<ExitCode, Failure> {
    let reports = twr_core::sweep::run_all(seed, cases);
    let all_pass = reports.iter().all(|r| r.pass);
    let out = VerifyOutput {
        seed,
        cases,
        all_pass,
        suites: reports
            .iter()
            .map(|r| SuiteOutput {
                name: r.name.to_string(),
                cases: r.cases,
                max_err: r.max_err,
                tol: r.tol,
                pass: r.pass,
                first_failure: r.first_failure.clone(),
            })
            .collect(),
    };

    if json {
        println!("{}", json::to_string(&out));
    } else {
        println!("seed {seed}, {cases} cases per suite");
        for s in &out.suites {
            println!(
                "{:<26} max err {:.3e}  tol {:.1e}  {}",
                s.name,
                s.max_err,
                s.tol,
                if s.pass { "PASS" } else { "FAIL" }
            );
            if let Some(failure) = &s.first_failure {
                println!("  first failure: {failure}");
            }
        }
        println!(
            "{}",
            if all_pass {
                "all suites passed"
            } else {
                "FAILURES present"
            }
        );
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_gamma_check(json: bool) -> Result<ExitCode, Failure> {
    let relations: Vec<RelationOutput> = twr_core::gamma_rep::check_relations()
        .into_iter()
        .map(|c| RelationOutput {
            mu: c.mu,
            nu: c.nu,
            expected: c.expected,
            ok: c.ok,
        })
        .collect();
    let rank = twr_core::gamma_rep::blade_image_rank();
    let all_ok = relations.iter().all(|c| c.ok) && rank == 8;
    let out = GammaOutput {
        relations,
        rank,
        rank_ok: rank == 8,
        all_ok,
    };

    if json {
        println!("{}", json::to_string(&out));
    } else {
        println!("anticommutator checks (expected coefficient of the identity):");
        for c in &out.relations {
            println!(
                "  ({}, {})  expected {:>2}  {}",
                c.mu,
                c.nu,
                c.expected,
                if c.ok { "exact" } else { "MISMATCH" }
            );
        }
        println!("blade image rank = {} (want 8)", out.rank);
        println!(
            "{}",
            if out.all_ok {
                "all checks exact"
            } else {
                "FAILURES present"
            }
        );
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_boost(v_text: &str, json: bool) -> Result<ExitCode, Failure> {
    let speed = parse_csv(v_text, "--v")?;
    let dim = speed.len() + 1;
    if dim != 3 && dim != 4 {
        return Err(Failure::Usage(format!(
            "--v: expected 2 or 3 components, got {}",
            speed.len()
        )));
    }
    let rest = twr_core::minkowski::SpacetimeVector::rest(dim);
    let v = twr_core::minkowski::four_velocity(&speed)?;
    let matrix = twr_core::lorentz::boost_matrix(&rest, &v)?;
    let rapidity = twr_core::minkowski::hyperbolic_angle(&rest, &v)?;

    let out = BoostOutput {
        dim,
        speed: speed.iter().map(|x| x * x).sum::<f64>().sqrt(),
        gamma: v.components()[0],
        rapidity,
        matrix: (0..dim)
            .map(|i| (0..dim).map(|j| matrix.entry(i, j)).collect())
            .collect(),
    };

    if json {
        println!("{}", json::to_string(&out));
    } else {
        println!("speed    = {}", out.speed);
        println!("gamma    = {}", out.gamma);
        println!("rapidity = {}", out.rapidity);
        println!("matrix:");
        for row in &out.matrix {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>20}")).collect();
            println!("  [{}]", cells.join(", "));
        }
    }
    Ok(ExitCode::SUCCESS)
}
