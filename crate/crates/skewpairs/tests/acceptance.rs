//! The acceptance gate: one test per criterion, every comparison exact
//! (zero tolerance).  Each test prints a single PASS line on success;
//! a failure panics with the offending detail.

use skewpairs::cyclotomic::{CycNum, SUPPORTED_PRIMES};
use skewpairs::cycpoly::CycPoly;
use skewpairs::filtration::{orbit_jacobian_rank, OrbitSpec};
use skewpairs::lifting::{
    charpoly_collapse_check, lift_skew_pair, lift_unit_pair, phi_adjust_matrix, r1_matrix,
    LiftProblem,
};
use skewpairs::linalg::{DualMat, Mat};
use skewpairs::pairs::{
    act_r, act_s_on_pair_conj, act_sigma, act_t_on_pair_conj, is_monomial_matrix,
    lie_closure_dimension, normalizes_diagonal, phi, phi_inverse, r_matrix, r_prime_matrix,
    s_image_avoids_coordinate_subspaces, s_matrix, slot_s_on_pair, slot_t_on_pair, t_matrix,
    w_basis, w_columns_avoid_coordinate_subspaces, Basis,
};
use skewpairs::sample::{
    random_basis, random_cyc, random_invertible_poly, random_mat, random_nonzero_cyc,
    random_poly, rng_from,
};
use skewpairs::suite::run_suite;
use skewpairs::symbol::{eval_poly_sym, slot_move_t, slot_power_scalar, SymElem, SymPair, SymParams};

#[test]
fn criterion_01_rr_prime_product() {
    for p in SUPPORTED_PRIMES {
        let prod = r_matrix(p).mul(&r_prime_matrix(p));
        let expect = Mat::identity(p, p).scale(&CycNum::from_int(p, p as i64));
        assert_eq!(prod, expect, "R R' != {p} I");
    }
    println!("PASS criterion 01: R R' = pI exactly for p in {{3,5,7,11,13}}");
}

#[test]
fn criterion_02_torus_bridge() {
    let mut rng = rng_from(201);
    for p in [3, 5, 7] {
        let r = r_matrix(p);
        let r_inv = r.inv().unwrap();
        for t in 0..20 {
            let g = random_invertible_poly(p, &mut rng);
            assert_eq!(
                r.mul(&t_matrix(&g)).mul(&r_inv),
                s_matrix(&g),
                "bridge failed at p={p} trial {t}"
            );
        }
    }
    println!("PASS criterion 02: R T_g R^-1 = S_g, 20 random g per p in {{3,5,7}}");
}

#[test]
fn criterion_03_phi_roundtrip_and_equivariance() {
    let mut rng = rng_from(203);
    for p in [3, 5, 7] {
        for t in 0..20 {
            let b = random_basis(p, &mut rng).unwrap();
            let q = phi(&b).unwrap();
            assert_eq!(phi_inverse(&q).unwrap(), b, "p={p} trial {t}");
            assert_eq!(phi(&phi_inverse(&q).unwrap()).unwrap(), q, "p={p} trial {t}");
            assert_eq!(phi(&act_sigma(&b)).unwrap(), q.deck_sigma(), "p={p} trial {t}");
            assert_eq!(phi(&act_r(&b)).unwrap(), q.deck_r(), "p={p} trial {t}");
            let aw = w_basis(&b);
            for j in 0..p {
                let wj = aw.column(j);
                let rho_j = CycNum::rho_pow(p, j as i64);
                let scaled: Vec<CycNum> = wj.iter().map(|c| c.mul(&rho_j)).collect();
                assert_eq!(q.beta().mul_vec(&wj), scaled, "beta w-action p={p} j={j}");
                assert_eq!(
                    q.alpha().mul_vec(&wj),
                    aw.column((j + p - 1) % p),
                    "alpha w-action p={p} j={j}"
                );
            }
        }
    }
    println!("PASS criterion 03: phi round-trips, deck equivariance, w-basis action");
}

#[test]
fn criterion_04_dimension_certificates() {
    for p in [3usize, 5] {
        for depth in 2..=p + 1 {
            let spec = OrbitSpec::new(Basis::identity(p), depth).unwrap();
            let cert = orbit_jacobian_rank(&spec, 204).unwrap();
            assert!(
                cert.is_valid(),
                "p={p} depth={depth}: rank {} != {}",
                cert.rank,
                cert.expected
            );
            if depth == p + 1 {
                assert_eq!(cert.rank, p * p - 1, "top of tower at p={p}");
            }
        }
    }
    println!("PASS criterion 04: Jacobian rank i(p-1) for 2 <= i <= p+1 at p = 3, 5");
}

#[test]
fn criterion_05_lie_closure() {
    for p in [3, 5, 7] {
        let dim = lie_closure_dimension(p).unwrap();
        assert_eq!(dim, p * p, "closure dimension at p={p}");
    }
    println!("PASS criterion 05: bracket closure spans p^2 dimensions for p in {{3,5,7}}");
}

#[test]
fn criterion_06_normalizer_and_invariant_subspaces() {
    let mut rng = rng_from(206);
    for p in [3usize, 5] {
        for k in 0..p {
            let z = CycPoly::monomial(p, k, random_nonzero_cyc(p, &mut rng));
            let s = s_matrix(&z);
            let d: Vec<CycNum> = (0..p).map(|_| random_cyc(p, &mut rng)).collect();
            assert!(is_monomial_matrix(&s) && normalizes_diagonal(&s, &d).unwrap());
        }
        for t in 0..10 {
            let z = loop {
                let z = random_poly(p, &mut rng);
                if !z.is_monomial() && z.is_invertible() {
                    break z;
                }
            };
            let s = s_matrix(&z);
            let d: Vec<CycNum> = (0..p).map(|_| random_nonzero_cyc(p, &mut rng)).collect();
            assert!(
                !normalizes_diagonal(&s, &d).unwrap(),
                "non-monomial normalized at p={p} trial {t}"
            );
            assert!(s_image_avoids_coordinate_subspaces(&z), "p={p} trial {t}");
        }
    }
    for p in SUPPORTED_PRIMES {
        assert!(
            w_columns_avoid_coordinate_subspaces(p).unwrap(),
            "w-column in coordinate subspace at p={p}"
        );
    }
    println!("PASS criterion 06: normalizer split and invariant-subspace checks");
}

#[test]
fn criterion_07_adjust_map_rank() {
    let mut rng = rng_from(207);
    for p in [3, 5] {
        for t in 0..20 {
            let q = phi(&random_basis(p, &mut rng).unwrap()).unwrap();
            let m = phi_adjust_matrix(q.as_skew()).unwrap();
            assert_eq!(m.rank(), p * p - 1, "rank at p={p} trial {t}");
            for col in 0..2 * p * p {
                let tr = (0..p).fold(CycNum::zero(p), |acc, i| acc.add(m.get(i * p + i, col)));
                assert!(tr.is_zero(), "image outside trace zero at p={p} trial {t}");
            }
        }
    }
    println!("PASS criterion 07: adjustment map rank p^2-1 with trace-zero image, p in {{3,5}}");
}

#[test]
fn criterion_08_lifting_trials() {
    let mut rng = rng_from(208);
    for p in [3, 5] {
        let ident = DualMat::identity(p, p);
        for t in 0..100 {
            let q = phi(&random_basis(p, &mut rng).unwrap()).unwrap();
            let prob = LiftProblem::new(
                DualMat::new(q.alpha().clone(), random_mat(p, p, &mut rng)).unwrap(),
                DualMat::new(q.beta().clone(), random_mat(p, p, &mut rng)).unwrap(),
            )
            .unwrap();
            let (a, b) = lift_unit_pair(&prob).unwrap();
            let rho = CycNum::rho(p);
            assert!(
                a.mul(&b).sub(&b.mul(&a).scale(&rho)).is_zero(),
                "residual at p={p} trial {t}"
            );
            assert_eq!(a.pow(p), ident, "alpha'^p at p={p} trial {t}");
            assert_eq!(b.pow(p), ident, "beta'^p at p={p} trial {t}");
        }
        // zero defect is a fixed point
        let q = phi(&random_basis(p, &mut rng).unwrap()).unwrap();
        let clean = LiftProblem::new(
            DualMat::from_body(q.alpha().clone()),
            DualMat::from_body(q.beta().clone()),
        )
        .unwrap();
        let (a, b) = lift_skew_pair(&clean).unwrap();
        assert_eq!(a, *clean.alpha0());
        assert_eq!(b, *clean.beta0());
    }
    println!("PASS criterion 08: 100 square-zero perturbations lift exactly per p in {{3,5}}");
}

#[test]
fn criterion_09_charpoly_collapse() {
    let mut rng = rng_from(209);
    for p in [3, 5, 7] {
        for t in 0..20 {
            let q = phi(&random_basis(p, &mut rng).unwrap()).unwrap();
            assert!(
                charpoly_collapse_check(q.as_skew()).unwrap(),
                "collapse failed at p={p} trial {t}"
            );
        }
    }
    for p in SUPPORTED_PRIMES {
        assert!(
            !r1_matrix(p).unwrap().det().unwrap().is_zero(),
            "det R_1 = 0 at p={p}"
        );
    }
    println!("PASS criterion 09: charpoly(alpha) = t^p - alpha^p; det R_1 != 0 for p <= 13");
}

#[test]
fn criterion_10_slot_laws() {
    let mut rng = rng_from(210);
    for p in [3, 5] {
        let params = SymParams::new(
            p,
            random_nonzero_cyc(p, &mut rng),
            random_nonzero_cyc(p, &mut rng),
        )
        .unwrap();
        let gamma = SymElem::gamma(&params);
        let delta = SymElem::delta(&params);
        let mut done = 0;
        while done < 20 {
            let f = random_poly(p, &mut rng);
            let n = match slot_power_scalar(&gamma, &f) {
                Ok(n) => n,
                Err(_) => continue,
            };
            let direct = eval_poly_sym(&f, &gamma)
                .unwrap()
                .mul(&delta)
                .unwrap()
                .pow(p)
                .unwrap()
                .as_scalar()
                .unwrap();
            assert_eq!(direct, n.mul(params.y()), "routes differ at p={p} trial {done}");
            done += 1;
        }
        // norm-1 moves preserve p-th powers
        let q = SymPair::standard(&params);
        for t in 0..5 {
            let (g, tg) = loop {
                let g = random_poly(p, &mut rng);
                let tg = eval_poly_sym(&g.tau(), &gamma).unwrap();
                if tg.is_invertible() {
                    break (g, tg);
                }
            };
            let u = eval_poly_sym(&g, &gamma)
                .unwrap()
                .mul(&tg.inv().unwrap())
                .unwrap();
            let coeffs: Vec<CycNum> = (0..p).map(|i| u.coeff(i, 0).clone()).collect();
            let f = CycPoly::new(p, coeffs).unwrap();
            assert!(slot_power_scalar(&gamma, &f).unwrap().is_one(), "p={p} trial {t}");
            let moved = slot_move_t(&q, &f).unwrap();
            assert_eq!(
                moved.b.pow(p).unwrap().as_scalar().unwrap(),
                q.b.pow(p).unwrap().as_scalar().unwrap(),
                "power changed at p={p} trial {t}"
            );
        }
    }
    println!("PASS criterion 10: slot power law by two routes; norm-1 moves preserve powers");
}

#[test]
fn criterion_11_psi_contracts() {
    let mut rng = rng_from(211);
    for p in [3, 5, 7] {
        for t in 0..50 {
            let g = random_invertible_poly(p, &mut rng);
            let psi = g.psi().unwrap();
            assert!(psi.ring_norm().unwrap().is_one(), "n(Psi) at p={p} trial {t}");
            let c = random_nonzero_cyc(p, &mut rng);
            let i = t % p;
            let shifted = CycPoly::monomial(p, i, c).mul(&g);
            assert_eq!(
                shifted.psi().unwrap(),
                psi.scale(&CycNum::rho_pow(p, i as i64)),
                "Psi scaling at p={p} trial {t}"
            );
        }
    }
    for p in [3, 5] {
        for t in 0..20 {
            let q = phi(&random_basis(p, &mut rng).unwrap()).unwrap();
            let g = random_invertible_poly(p, &mut rng);
            let hat = act_t_on_pair_conj(&q, &g).unwrap();
            let slot = slot_t_on_pair(q.as_skew(), &g.psi().unwrap()).unwrap();
            assert!(hat.as_skew().eq_bihomogeneous(&slot), "T at p={p} trial {t}");
            let hat = act_s_on_pair_conj(&q, &g).unwrap();
            let slot = slot_s_on_pair(q.as_skew(), &g.psi_prime().unwrap()).unwrap();
            assert!(hat.as_skew().eq_bihomogeneous(&slot), "S at p={p} trial {t}");
        }
    }
    println!("PASS criterion 11: Psi contracts (50 per p) and toral/slot projection agreement");
}

#[test]
fn criterion_12_determinism() {
    let a = run_suite(3, 42, "all", 10, false).unwrap();
    let b = run_suite(3, 42, "all", 10, false).unwrap();
    assert_eq!(a.canonical_json(), b.canonical_json(), "parallel reruns differ");
    let c = run_suite(3, 42, "all", 10, true).unwrap();
    assert_eq!(a.canonical_json(), c.canonical_json(), "sequential run differs");
    let pool = rayon::ThreadPoolBuilder::new().num_threads(2).build().unwrap();
    let d = pool.install(|| run_suite(3, 42, "all", 10, false).unwrap());
    assert_eq!(a.canonical_json(), d.canonical_json(), "2-thread run differs");
    assert!(a.all_pass());
    println!("PASS criterion 12: reports byte-identical across runs and thread counts");
}
