//! The batch verification suite: a fixed registry of named checks, each
//! deterministic in (p, seed), with canonical JSON reporting.  Checks
//! run in parallel by default; output order is the registry order either
//! way, and canonical serialization zeroes wall times so reports are
//! byte-identical across runs and thread counts.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{check_prime, CycNum};
use crate::cycpoly::CycPoly;
use crate::error::{Error, Result};
use crate::filtration::{orbit_jacobian_rank, stabilizer_identity_checks, OrbitSpec};
use crate::lifting::{
    charpoly_collapse_check, lift_unit_pair, phi_adjust_matrix, r1_matrix, LiftProblem,
};
use crate::linalg::{DualMat, Mat};
use crate::pairs::{
    act_r, act_s_on_pair_conj, act_sigma, act_t_on_pair_conj, is_monomial_matrix,
    lie_closure_dimension, normalizes_diagonal, phi, phi_inverse, r_matrix, r_prime_matrix,
    s_image_avoids_coordinate_subspaces, s_matrix, slot_s_on_pair, slot_t_on_pair, t_matrix,
    w_basis, w_columns_avoid_coordinate_subspaces, Basis,
};
use crate::sample::{
    child_seed, random_basis, random_cyc, random_invertible_poly, random_mat,
    random_nonzero_cyc, random_poly, rng_from,
};
use crate::symbol::{eval_poly_sym, slot_move_t, slot_power_scalar, SymElem, SymPair, SymParams};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub statement: String,
    pub status: String,
    pub detail: String,
    pub wall_time_ms: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub p: usize,
    pub seed: u64,
    pub suite: String,
    pub trials: usize,
    pub checks: Vec<CheckRecord>,
    pub overall: String,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.overall == "pass"
    }

    /// Deterministic serialization: wall times are measurement noise,
    /// so they are zeroed here (and only here).
    pub fn canonical_json(&self) -> String {
        let mut clone = self.clone();
        for c in &mut clone.checks {
            c.wall_time_ms = 0;
        }
        serde_json::to_string_pretty(&clone).expect("report serializes")
    }

    pub fn text_summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<22} {:<4} {}\n",
                c.name, c.status, c.detail
            ));
        }
        out.push_str(&format!(
            "suite {} p={} seed={}: {}\n",
            self.suite, self.p, self.seed, self.overall
        ));
        out
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { pass: true, detail: detail.into() })
}

fn fail(detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { pass: false, detail: detail.into() })
}

struct CheckDef {
    name: &'static str,
    statement: &'static str,
    /// Registry category; `all` selects every applicable check.
    suite: &'static str,
    run: fn(usize, u64, usize) -> Result<Outcome>,
    applies: fn(usize, &str) -> bool,
}

pub const SUITE_NAMES: [&str; 6] = ["all", "toral", "pairs", "filtration", "lifting", "symbol"];

fn registry() -> Vec<CheckDef> {
    vec![
        CheckDef {
            name: "rr-prime-product",
            statement: "R R' = pI for R = (rho^-ij), R' = (rho^ij)",
            suite: "toral",
            applies: |_, _| true,
            run: check_rr_product,
        },
        CheckDef {
            name: "torus-bridge",
            statement: "R T_g R^-1 equals the circulant S_g",
            suite: "toral",
            applies: |p, _| p <= 7,
            run: check_torus_bridge,
        },
        CheckDef {
            name: "phi-round-trip",
            statement: "phi/phi-inverse round-trip, sigma/r equivariance, w-basis action",
            suite: "pairs",
            applies: |p, _| p <= 7,
            run: check_phi_round_trip,
        },
        CheckDef {
            name: "dim-certificates",
            statement: "orbit Jacobian rank i(p-1) for depths 2..=p+1, topping out at p^2-1",
            suite: "filtration",
            applies: |p, suite| if suite == "filtration" { p <= 7 } else { p <= 5 },
            run: check_dim_certificates,
        },
        CheckDef {
            name: "stabilizer-identities",
            statement: "r, sigma torus membership, tau normalization, scalar T-fibers",
            suite: "filtration",
            applies: |p, _| p <= 7,
            run: |p, seed, _| {
                if stabilizer_identity_checks(p, seed)? {
                    ok("all identities hold")
                } else {
                    fail("an identity failed")
                }
            },
        },
        CheckDef {
            name: "lie-closure",
            statement: "brackets of diag and R diag R^-1 span all p^2 dimensions",
            suite: "pairs",
            applies: |p, _| p <= 7,
            run: |p, _, _| {
                let dim = lie_closure_dimension(p)?;
                if dim == p * p {
                    ok(format!("closure dimension {dim}"))
                } else {
                    fail(format!("closure dimension {dim}, expected {}", p * p))
                }
            },
        },
        CheckDef {
            name: "normalizer",
            statement: "monomial S_z normalize the diagonal torus, non-monomial fail; no invariant coordinate subspaces",
            suite: "pairs",
            applies: |_, _| true,
            run: check_normalizer,
        },
        CheckDef {
            name: "adjust-map-rank",
            statement: "the pair-adjustment map has rank p^2-1 with trace-zero image",
            suite: "lifting",
            applies: |p, _| p <= 5,
            run: check_adjust_rank,
        },
        CheckDef {
            name: "lifting-trials",
            statement: "seeded square-zero perturbations lift to exact unit pairs",
            suite: "lifting",
            applies: |p, _| p <= 5,
            run: check_lifting_trials,
        },
        CheckDef {
            name: "charpoly-collapse",
            statement: "charpoly(alpha) = t^p - alpha^p with zero middle coefficients; det R_1 != 0",
            suite: "lifting",
            applies: |_, _| true,
            run: check_charpoly_collapse,
        },
        CheckDef {
            name: "slot-laws",
            statement: "(f(gamma) delta)^p = (prod_i f(rho^i gamma)) y, two routes agreeing",
            suite: "symbol",
            applies: |p, _| p <= 5,
            run: check_slot_laws,
        },
        CheckDef {
            name: "psi-contracts",
            statement: "n(Psi(g)) = 1, Psi(c x^i g) = rho^i Psi(g), and toral/slot projections agree",
            suite: "pairs",
            applies: |p, _| p <= 7,
            run: check_psi_contracts,
        },
    ]
}

fn check_rr_product(p: usize, _seed: u64, _trials: usize) -> Result<Outcome> {
    let prod = r_matrix(p).mul(&r_prime_matrix(p));
    let expect = Mat::identity(p, p).scale(&CycNum::from_int(p, p as i64));
    if prod == expect {
        ok(format!("R R' = {p} I"))
    } else {
        fail("R R' differs from pI")
    }
}

fn check_torus_bridge(p: usize, seed: u64, _trials: usize) -> Result<Outcome> {
    let mut rng = rng_from(seed);
    let r = r_matrix(p);
    let r_inv = r.inv()?;
    for t in 0..20 {
        let g = random_invertible_poly(p, &mut rng);
        if r.mul(&t_matrix(&g)).mul(&r_inv) != s_matrix(&g) {
            return fail(format!("bridge identity failed at trial {t}"));
        }
    }
    ok("20 random g")
}

fn check_phi_round_trip(p: usize, seed: u64, _trials: usize) -> Result<Outcome> {
    let mut rng = rng_from(seed);
    for t in 0..20 {
        let b = random_basis(p, &mut rng)?;
        let q = phi(&b)?;
        if phi_inverse(&q)? != b || phi(&phi_inverse(&q)?)? != q {
            return fail(format!("round-trip failed at trial {t}"));
        }
        if phi(&act_sigma(&b))? != q.deck_sigma() || phi(&act_r(&b))? != q.deck_r() {
            return fail(format!("deck equivariance failed at trial {t}"));
        }
        let aw = w_basis(&b);
        for j in 0..p {
            let wj = aw.column(j);
            let rho_j = CycNum::rho_pow(p, j as i64);
            let scaled: Vec<CycNum> = wj.iter().map(|c| c.mul(&rho_j)).collect();
            if q.beta().mul_vec(&wj) != scaled {
                return fail(format!("beta w-action failed at trial {t}"));
            }
            if q.alpha().mul_vec(&wj) != aw.column((j + p - 1) % p) {
                return fail(format!("alpha w-action failed at trial {t}"));
            }
        }
    }
    ok("20 random bases")
}

fn check_dim_certificates(p: usize, seed: u64, _trials: usize) -> Result<Outcome> {
    let base = Basis::identity(p);
    let mut summary = Vec::new();
    for depth in 2..=p + 1 {
        let spec = OrbitSpec::new(base.clone(), depth)?;
        let cert = orbit_jacobian_rank(&spec, child_seed(seed, &format!("depth{depth}")))?;
        summary.push(format!("i={depth}:{}", cert.rank));
        if !cert.is_valid() {
            return fail(format!(
                "depth {depth}: rank {} != {}",
                cert.rank, cert.expected
            ));
        }
    }
    // stationary past the top
    let spec = OrbitSpec::new(base, p + 2)?;
    let cert = orbit_jacobian_rank(&spec, child_seed(seed, "top"))?;
    if cert.rank != p * p - 1 {
        return fail(format!("depth {}: rank {} != {}", p + 2, cert.rank, p * p - 1));
    }
    ok(summary.join(" "))
}

fn check_normalizer(p: usize, seed: u64, _trials: usize) -> Result<Outcome> {
    let mut rng = rng_from(seed);
    if !w_columns_avoid_coordinate_subspaces(p)? {
        return fail("a w-column lies in a coordinate subspace");
    }
    for k in 0..p {
        let z = CycPoly::monomial(p, k, random_nonzero_cyc(p, &mut rng));
        let s = s_matrix(&z);
        let d: Vec<CycNum> = (0..p).map(|_| random_cyc(p, &mut rng)).collect();
        if !is_monomial_matrix(&s) || !normalizes_diagonal(&s, &d)? {
            return fail(format!("monomial S_z failed at shift {k}"));
        }
    }
    // exhaustive subset checks are exponential in p; sample them only
    // at desk scale
    let subset_checks = p <= 5;
    for t in 0..10 {
        let z = loop {
            let z = random_poly(p, &mut rng);
            if !z.is_monomial() && z.is_invertible() {
                break z;
            }
        };
        let s = s_matrix(&z);
        let d: Vec<CycNum> = (0..p).map(|_| random_nonzero_cyc(p, &mut rng)).collect();
        if normalizes_diagonal(&s, &d)? {
            return fail(format!("non-monomial S_z normalized at trial {t}"));
        }
        if subset_checks && !s_image_avoids_coordinate_subspaces(&z) {
            return fail(format!("S_z maps a coordinate subspace onto one at trial {t}"));
        }
    }
    ok("monomial split and subspace checks")
}

fn check_adjust_rank(p: usize, seed: u64, _trials: usize) -> Result<Outcome> {
    let mut rng = rng_from(seed);
    for t in 0..20 {
        let q = phi(&random_basis(p, &mut rng)?)?;
        let m = phi_adjust_matrix(q.as_skew())?;
        if m.rank() != p * p - 1 {
            return fail(format!("rank {} at trial {t}", m.rank()));
        }
        for col in 0..2 * p * p {
            let tr = (0..p).fold(CycNum::zero(p), |acc, i| {
                acc.add(m.get(i * p + i, col))
            });
            if !tr.is_zero() {
                return fail(format!("image leaves trace zero at trial {t}"));
            }
        }
    }
    ok("20 random pairs")
}

fn check_lifting_trials(p: usize, seed: u64, trials: usize) -> Result<Outcome> {
    let mut rng = rng_from(seed);
    for t in 0..trials {
        let q = phi(&random_basis(p, &mut rng)?)?;
        let prob = LiftProblem::new(
            DualMat::new(q.alpha().clone(), random_mat(p, p, &mut rng))?,
            DualMat::new(q.beta().clone(), random_mat(p, p, &mut rng))?,
        )?;
        let (a, b) = lift_unit_pair(&prob)?;
        let rho = CycNum::rho(p);
        let residual = a.mul(&b).sub(&b.mul(&a).scale(&rho));
        if !residual.is_zero()
            || a.pow(p) != DualMat::identity(p, p)
            || b.pow(p) != DualMat::identity(p, p)
        {
            return fail(format!("lift failed at trial {t}"));
        }
        if a.body != *q.alpha() || b.body != *q.beta() {
            return fail(format!("lift moved the body at trial {t}"));
        }
    }
    // zero-defect fixed point
    let q = phi(&random_basis(p, &mut rng)?)?;
    let clean = LiftProblem::new(
        DualMat::from_body(q.alpha().clone()),
        DualMat::from_body(q.beta().clone()),
    )?;
    let (a, b) = lift_unit_pair(&clean)?;
    if a != *clean.alpha0() || b != *clean.beta0() {
        return fail("zero defect was not a fixed point");
    }
    ok(format!("{trials} perturbations lifted"))
}

fn check_charpoly_collapse(p: usize, seed: u64, _trials: usize) -> Result<Outcome> {
    let det = r1_matrix(p)?.det()?;
    if det.is_zero() {
        return fail("det R_1 = 0");
    }
    if p <= 7 {
        let mut rng = rng_from(seed);
        for t in 0..20 {
            let q = phi(&random_basis(p, &mut rng)?)?;
            if !charpoly_collapse_check(q.as_skew())? {
                return fail(format!("collapse failed at trial {t}"));
            }
        }
        ok("20 random pairs; det R_1 nonzero")
    } else {
        ok("det R_1 nonzero")
    }
}

fn check_slot_laws(p: usize, seed: u64, _trials: usize) -> Result<Outcome> {
    let mut rng = rng_from(seed);
    let params = SymParams::new(
        p,
        random_nonzero_cyc(p, &mut rng),
        random_nonzero_cyc(p, &mut rng),
    )?;
    let gamma = SymElem::gamma(&params);
    let delta = SymElem::delta(&params);
    let mut done = 0;
    while done < 20 {
        let f = random_poly(p, &mut rng);
        let n = match slot_power_scalar(&gamma, &f) {
            Ok(n) => n,
            Err(_) => continue, // f(gamma) not invertible; resample
        };
        let direct = eval_poly_sym(&f, &gamma)?
            .mul(&delta)?
            .pow(p)?
            .as_scalar()?;
        if direct != n.mul(params.y()) {
            return fail(format!("product law failed at trial {done}"));
        }
        done += 1;
    }
    // norm-1 moves preserve p-th powers: f(gamma) = g(gamma)/g(rho^-1 gamma)
    let q = SymPair::standard(&params);
    for t in 0..5 {
        let (g, tg) = loop {
            let g = random_poly(p, &mut rng);
            let tg = eval_poly_sym(&g.tau(), &gamma)?;
            if tg.is_invertible() {
                break (g, tg);
            }
        };
        let u = eval_poly_sym(&g, &gamma)?.mul(&tg.inv()?)?;
        let coeffs: Vec<CycNum> = (0..p).map(|i| u.coeff(i, 0).clone()).collect();
        let f = CycPoly::new(p, coeffs)?;
        if slot_power_scalar(&gamma, &f)? != CycNum::one(p) {
            return fail(format!("norm-1 scalar differs at trial {t}"));
        }
        let moved = slot_move_t(&q, &f)?;
        if moved.b.pow(p)?.as_scalar()? != q.b.pow(p)?.as_scalar()? {
            return fail(format!("norm-1 move changed the power at trial {t}"));
        }
    }
    ok("20 product-law trials, 5 norm-1 moves")
}

fn check_psi_contracts(p: usize, seed: u64, _trials: usize) -> Result<Outcome> {
    let mut rng = rng_from(seed);
    for t in 0..50 {
        let g = random_invertible_poly(p, &mut rng);
        let psi = g.psi()?;
        if !psi.ring_norm()?.is_one() {
            return fail(format!("n(Psi(g)) != 1 at trial {t}"));
        }
        let c = random_nonzero_cyc(p, &mut rng);
        let i = (t % p as usize) as usize;
        let shifted = CycPoly::monomial(p, i, c).mul(&g);
        if shifted.psi()? != psi.scale(&CycNum::rho_pow(p, i as i64)) {
            return fail(format!("Psi scaling law failed at trial {t}"));
        }
    }
    if p <= 5 {
        for t in 0..20 {
            let q = phi(&random_basis(p, &mut rng)?)?;
            let g = random_invertible_poly(p, &mut rng);
            let hat = act_t_on_pair_conj(&q, &g)?;
            let slot = slot_t_on_pair(q.as_skew(), &g.psi()?)?;
            if !hat.as_skew().eq_bihomogeneous(&slot) {
                return fail(format!("T projection disagreed at trial {t}"));
            }
            let hat = act_s_on_pair_conj(&q, &g)?;
            let slot = slot_s_on_pair(q.as_skew(), &g.psi_prime()?)?;
            if !hat.as_skew().eq_bihomogeneous(&slot) {
                return fail(format!("S projection disagreed at trial {t}"));
            }
        }
    }
    ok("50 Psi trials")
}

/// Default number of lifting perturbation trials.
pub const DEFAULT_TRIALS: usize = 100;

pub fn run_suite(
    p: usize,
    seed: u64,
    suite: &str,
    trials: usize,
    sequential: bool,
) -> Result<SuiteReport> {
    check_prime(p)?;
    if !SUITE_NAMES.contains(&suite) {
        return Err(Error::Parse(format!(
            "unknown suite '{suite}' (expected one of {})",
            SUITE_NAMES.join(", ")
        )));
    }
    let defs: Vec<CheckDef> = registry()
        .into_iter()
        .filter(|d| (suite == "all" || d.suite == suite) && (d.applies)(p, suite))
        .collect();
    let run_one = |d: &CheckDef| -> CheckRecord {
        let start = Instant::now();
        let outcome = (d.run)(p, child_seed(seed, d.name), trials);
        let wall_time_ms = start.elapsed().as_millis() as u64;
        let (status, detail) = match outcome {
            Ok(Outcome { pass: true, detail }) => ("pass", detail),
            Ok(Outcome { pass: false, detail }) => ("fail", detail),
            Err(e) => ("fail", format!("error: {e}")),
        };
        CheckRecord {
            name: d.name.to_string(),
            statement: d.statement.to_string(),
            status: status.to_string(),
            detail,
            wall_time_ms,
        }
    };
    let checks: Vec<CheckRecord> = if sequential {
        defs.iter().map(run_one).collect()
    } else {
        defs.par_iter().map(run_one).collect()
    };
    let overall = if checks.iter().all(|c| c.status == "pass") {
        "pass"
    } else {
        "fail"
    };
    Ok(SuiteReport {
        p,
        seed,
        suite: suite.to_string(),
        trials,
        checks,
        overall: overall.to_string(),
    })
}
